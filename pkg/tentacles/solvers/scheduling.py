"""
Precedence-constrained unit-task scheduling solver
"""

from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes


def _exhaustive(inst: SchedulingInstance, budget: Budget) -> Optional[List[int]]:
    order = inst.topological_order
    slots = [0] * inst.tasks
    load = [0] * (inst.deadline + 2)

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        task = order[idx]
        earliest = max((slots[p] for p in inst.predecessors[task]), default=0) + 1
        for s in range(earliest, inst.deadline + 1):
            budget.spend()
            if load[s] < inst.machines:
                slots[task] = s
                load[s] += 1
                if place(idx + 1):
                    return True
                load[s] -= 1
        return False

    return list(slots) if place(0) else None


def maximal_elements(inst: SchedulingInstance, done: FrozenSet[int]) -> FrozenSet[int]:
    """Antichain of done tasks with no done successor; it determines the down-set"""
    has_done_successor = {a for a, b in inst.prec if a in done and b in done}
    return frozenset(done - has_done_successor)


def _antichain_bfs(inst: SchedulingInstance, budget: Budget) -> Optional[List[int]]:
    """
    Breadth-first search over time steps; the state after step i is the set of tasks
    scheduled in [1, i], keyed by its maximal elements. Each step runs min(K, available)
    available tasks.
    """
    everything = frozenset(range(inst.tasks))
    start: FrozenSet[int] = frozenset()
    parents: Dict[FrozenSet[int], Tuple[Optional[FrozenSet[int]], Tuple[int, ...]]] = {
        maximal_elements(inst, start): (None, ())
    }
    done_of: Dict[FrozenSet[int], FrozenSet[int]] = {maximal_elements(inst, start): start}
    frontier = [start]
    for _ in range(inst.deadline):
        if everything in frontier:
            break
        nxt = []
        for done in frontier:
            available = [t for t in range(inst.tasks) if t not in done and inst.predecessors[t] <= done]
            for run in combinations(available, min(inst.machines, len(available))):
                budget.spend()
                after = done | frozenset(run)
                key = maximal_elements(inst, after)
                if key in parents:
                    continue
                parents[key] = (maximal_elements(inst, done), run)
                done_of[key] = after
                nxt.append(after)
        frontier = nxt
        if not frontier:
            break
    if everything not in done_of.values():
        return None
    key = maximal_elements(inst, everything)
    runs: List[Tuple[int, ...]] = []
    while parents[key][0] is not None:
        previous, run = parents[key]
        runs.append(run)
        key = previous
    slots = [0] * inst.tasks
    for step, run in enumerate(reversed(runs), start=1):
        for task in run:
            slots[task] = step
    return slots


def solve_scheduling(inst: SchedulingInstance, mode=SolveMode.STRUCTURED,
                     budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget('scheduling', budget)
    found = _exhaustive(inst, steps) if mode is SolveMode.EXHAUSTIVE else _antichain_bfs(inst, steps)
    return yes(found, mode) if found is not None else no(mode)
