"""
Dominating set, independent set and clique over a given path decomposition
"""

from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from tentacles.instances.graphs import VertexProblemInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

IN, DOMINATED, OPEN = 1, 2, 0


def _exhaustive(inst: VertexProblemInstance, budget: Budget) -> Optional[FrozenSet[int]]:
    n, K = inst.graph.n, inst.K
    sizes = range(0, min(K, n) + 1) if inst.problem == 'dominating-set' else ([K] if K <= n else [])
    for size in sizes:
        for chosen in combinations(range(n), size):
            budget.spend()
            if inst.satisfied_by(chosen):
                return frozenset(chosen)
    return None


def _clique_per_bag(inst: VertexProblemInstance, budget: Budget) -> Optional[FrozenSet[int]]:
    """Every clique lies inside a single bag"""
    if inst.K == 0:
        return frozenset()
    for bag in inst.pd.bags:
        for chosen in combinations(sorted(bag), inst.K):
            budget.spend()
            if inst.graph.is_clique(chosen):
                return frozenset(chosen)
    return None


def _independent_dp(inst: VertexProblemInstance, budget: Budget) -> Optional[FrozenSet[int]]:
    g = inst.graph
    table: Dict[FrozenSet[int], FrozenSet[int]] = {frozenset(): frozenset()}
    previous_bag: FrozenSet[int] = frozenset()
    for bag in inst.pd.bags:
        fresh = sorted(bag - previous_bag)
        nxt: Dict[FrozenSet[int], FrozenSet[int]] = {}
        for state, chosen in table.items():
            kept = state & bag
            for size in range(len(fresh) + 1):
                for extra in combinations(fresh, size):
                    budget.spend()
                    if any(g.has_edge(u, v) for u in extra for v in kept | set(extra) if u != v):
                        continue
                    key = kept | frozenset(extra)
                    total = chosen | frozenset(extra)
                    if key not in nxt or len(total) > len(nxt[key]):
                        nxt[key] = total
        table, previous_bag = nxt, bag
    best = max(table.values(), key=len, default=frozenset())
    return best if len(best) >= inst.K else None


def _dominating_dp(inst: VertexProblemInstance, budget: Budget) -> Optional[FrozenSet[int]]:
    """
    Three-state table over bag vertices: in the set, already dominated, or still open.
    Vertices are introduced one at a time; a vertex may only leave the bags once it is
    in the set or dominated.
    """
    g = inst.graph
    State = Tuple[Tuple[int, int], ...]
    table: Dict[State, FrozenSet[int]] = {(): frozenset()}
    previous_bag: FrozenSet[int] = frozenset()

    def keep_better(store, key, chosen):
        if key not in store or len(chosen) < len(store[key]):
            store[key] = chosen

    for bag in inst.pd.bags:
        forgotten = previous_bag - bag
        survived: Dict[State, FrozenSet[int]] = {}
        for state, chosen in table.items():
            budget.spend()
            if any(s == OPEN for v, s in state if v in forgotten):
                continue
            keep_better(survived, tuple((v, s) for v, s in state if v not in forgotten), chosen)
        table = survived
        for v in sorted(bag - previous_bag):
            nxt: Dict[State, FrozenSet[int]] = {}
            for state, chosen in table.items():
                budget.spend(2)
                labels = dict(state)
                near = [u for u in labels if g.has_edge(u, v)]
                # v joins the set
                taken = dict(labels)
                for u in near:
                    if taken[u] == OPEN:
                        taken[u] = DOMINATED
                taken[v] = IN
                keep_better(nxt, tuple(sorted(taken.items())), chosen | {v})
                # v stays out
                skipped = dict(labels)
                skipped[v] = DOMINATED if any(labels[u] == IN for u in near) else OPEN
                keep_better(nxt, tuple(sorted(skipped.items())), chosen)
            table = nxt
        previous_bag = bag
    finals = [chosen for state, chosen in table.items() if all(s != OPEN for _, s in state)]
    best = min(finals, key=len, default=None)
    return best if best is not None and len(best) <= inst.K else None


def solve_pathwidth_vertex_problem(inst: VertexProblemInstance, mode=SolveMode.STRUCTURED,
                                   budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget(inst.problem, budget)
    if mode is SolveMode.EXHAUSTIVE:
        found = _exhaustive(inst, steps)
    elif inst.problem == 'clique':
        found = _clique_per_bag(inst, steps)
    elif inst.problem == 'independent-set':
        found = _independent_dp(inst, steps)
    else:
        found = _dominating_dp(inst, steps)
    return yes(sorted(found), mode) if found is not None else no(mode)
