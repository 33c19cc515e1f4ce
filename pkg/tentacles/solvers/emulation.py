"""
Uniform emulation of weighted paths solver

Exhaustive mode walks the path vertex by vertex. Structured mode sweeps positions
left to right keeping the last two fibers (vertex sets mapped to one position);
for factors above FIBER_SWEEP_LIMIT it walks vertices instead, pruned by room
counting and with the trailing weight-1 run placed in closed form.
"""

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from core.config import FIBER_SWEEP_LIMIT
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

logger = logging.getLogger(__name__)

Fiber = FrozenSet[int]
Frontier = Tuple[Fiber, Fiber]


def _exhaustive(inst: WeightedPathEmulationInstance, budget: Budget) -> Optional[List[int]]:
    f: List[int] = []
    load = [0] * (inst.m + 2)
    stack: List[Iterator[int]] = [iter(range(1, inst.m + 1))]
    while stack:
        i = len(f)
        if i == inst.n:
            if all(load[j] == inst.c for j in range(1, inst.m + 1)):
                return f
            stack.pop()
            load[f.pop()] -= inst.weights[i - 1]
            continue
        pos = next(stack[-1], None)
        if pos is None:
            stack.pop()
            if f:
                load[f.pop()] -= inst.weights[i - 1]
            continue
        budget.spend()
        if not 1 <= pos <= inst.m or load[pos] + inst.weights[i] > inst.c:
            continue
        load[pos] += inst.weights[i]
        f.append(pos)
        stack.append(iter((pos - 1, pos, pos + 1)))
    return None


# ==================== FIBER SWEEP ====================

def _next_fibers(inst: WeightedPathEmulationInstance, previous: Fiber, current: Fiber,
                 budget: Budget) -> Iterator[Fiber]:
    """
    Fibers of weight c that may follow: every neighbor of the current fiber not yet
    placed is forced in, and nothing adjacent to the previous fiber may enter.
    """
    placed = previous | current

    def touches(v: int, group: Fiber) -> bool:
        return v - 1 in group or v + 1 in group

    forced = {u for v in current for u in (v - 1, v + 1) if 0 <= u < inst.n and u not in placed}
    if any(touches(u, previous) for u in forced):
        return
    base = sum(inst.weights[u] for u in forced)
    if base > inst.c:
        return
    free = [v for v in range(inst.n) if v not in placed and v not in forced and not touches(v, previous)]

    def grow(start: int, chosen: List[int], weight: int) -> Iterator[Fiber]:
        budget.spend()
        if weight == inst.c:
            yield frozenset(forced) | frozenset(chosen)
            return
        for idx in range(start, len(free)):
            v = free[idx]
            if weight + inst.weights[v] <= inst.c:
                chosen.append(v)
                yield from grow(idx + 1, chosen, weight + inst.weights[v])
                chosen.pop()

    yield from grow(0, [], base)


def _fiber_sweep(inst: WeightedPathEmulationInstance, budget: Budget) -> Optional[List[int]]:
    """
    Position p keeps (fiber p-1, fiber p). Every placed vertex has its neighbors
    within one position, so the placed set is the whole path once the last fiber
    closes; the weight total c*m then rules out a vertex sitting in two fibers.
    """
    empty: Fiber = frozenset()
    layers: List[Dict[Frontier, Optional[Frontier]]] = [{(empty, empty): None}]
    for _ in range(inst.m):
        layer: Dict[Frontier, Optional[Frontier]] = {}
        for previous, current in layers[-1]:
            for fiber in _next_fibers(inst, previous, current, budget):
                layer.setdefault((current, fiber), (previous, current))
        if not layer:
            return None
        layers.append(layer)

    closed = [
        state for state in layers[-1]
        if all(u in state[0] or u in state[1]
               for v in state[1] for u in (v - 1, v + 1) if 0 <= u < inst.n)
    ]
    if not closed:
        return None
    f = [0] * inst.n
    state: Optional[Frontier] = closed[0]
    for pos in range(inst.m, 0, -1):
        for v in state[1]:
            f[v] = pos
        state = layers[pos][state]
    return f


# ==================== VERTEX WALK ====================

class _WalkPlan:
    """Precomputed suffix counts for the room tests of the pruned walk"""

    def __init__(self, inst: WeightedPathEmulationInstance):
        self.inst = inst
        w = inst.weights
        tail = inst.n
        while tail > 0 and w[tail - 1] == 1:
            tail -= 1
        self.tail = tail
        self.classes = sorted({x for x in w if x > 1})
        # heavier[i][k]: vertices from i on weighing at least classes[k]
        self.heavier: List[List[int]] = [[0] * len(self.classes) for _ in range(tail + 1)]
        self.next_of: List[Dict[int, int]] = [{} for _ in range(tail + 1)]
        for i in range(tail - 1, -1, -1):
            self.heavier[i] = [
                count + (w[i] >= cls) for count, cls in zip(self.heavier[i + 1], self.classes)
            ]
            self.next_of[i] = {**self.next_of[i + 1], w[i]: i}

    def viable(self, load: List[int], pos: int, i: int) -> bool:
        """Vertex i just went to pos; can the remaining vertices still fit?"""
        inst = self.inst
        room = [inst.c - load[p] for p in range(inst.m + 1)]
        short = [p for p in range(1, inst.m + 1) if room[p] > 0]
        remaining = inst.n - i - 1
        if not short:
            return remaining == 0
        lo, hi = short[0], short[-1]
        if hi - lo + 1 != len(short) or not lo - 1 <= pos <= hi + 1 or remaining < len(short):
            return False
        if i + 1 >= self.tail:
            return True

        need = self.heavier[i + 1]
        cap = [sum(room[p] // cls for p in short) for cls in self.classes]
        if any(n > c for n, c in zip(need, cap)):
            return False

        def admissible(p: int, weight: int) -> bool:
            if room[p] < weight:
                return False
            for k, cls in enumerate(self.classes):
                left = cap[k] - room[p] // cls + (room[p] - weight) // cls
                if need[k] - (weight >= cls) > left:
                    return False
            return True

        for weight, j in self.next_of[i + 1].items():
            if weight == 1:
                continue
            reach = j - i
            candidates = sorted(short, key=lambda p: abs(p - pos))
            if not any(abs(p - pos) <= reach and admissible(p, weight) for p in candidates):
                return False
        return True


def _tail_walk(inst: WeightedPathEmulationInstance, load: List[int], last: Optional[int],
               length: int) -> Optional[List[int]]:
    """
    Places a run of weight-1 vertices so that position p takes exactly c - load[p]
    of them. The short positions must be one interval; the run starts next to
    `last`, sweeps to one end and then to the other, staying put where extra
    vertices are needed.
    """
    deficit = {p: inst.c - load[p] for p in range(1, inst.m + 1) if load[p] < inst.c}
    if length == 0:
        return [] if not deficit else None
    if sum(deficit.values()) != length:
        return None
    lo, hi = min(deficit), max(deficit)
    if hi - lo + 1 != len(deficit):
        return None
    starts = range(lo, hi + 1) if last is None else [s for s in (last - 1, last, last + 1) if lo <= s <= hi]
    for s in starts:
        down_first = list(range(s, lo - 1, -1)) + (list(range(lo + 1, hi + 1)) if s < hi else [])
        up_first = list(range(s, hi + 1)) + (list(range(hi - 1, lo - 1, -1)) if s > lo else [])
        for route in (down_first, up_first):
            visits: Dict[int, int] = {}
            for p in route:
                visits[p] = visits.get(p, 0) + 1
            if all(deficit[p] >= visits[p] for p in deficit):
                walk: List[int] = []
                seen: Set[int] = set()
                for p in route:
                    walk += [p] * (1 if p in seen else deficit[p] - visits[p] + 1)
                    seen.add(p)
                return walk
    return None


def _pruned_walk(inst: WeightedPathEmulationInstance, budget: Budget) -> Optional[List[int]]:
    """Depth-first vertex walk with memoized dead states (vertex, position, fiber loads)"""
    plan = _WalkPlan(inst)
    load = [0] * (inst.m + 2)
    if plan.tail == 0:
        return _tail_walk(inst, load, None, inst.n)

    f: List[int] = []
    dead: Set[Tuple[int, int, Tuple[int, ...]]] = set()
    stack: List[Iterator[int]] = [iter(range(1, inst.m + 1))]
    while stack:
        i = len(f)
        pos = next(stack[-1], None)
        if pos is None:
            stack.pop()
            if f:
                dead.add((i - 1, f[-1], tuple(load)))
                load[f.pop()] -= inst.weights[i - 1]
            continue
        budget.spend()
        if not 1 <= pos <= inst.m or load[pos] + inst.weights[i] > inst.c:
            continue
        load[pos] += inst.weights[i]
        key = (i, pos, tuple(load))
        if key in dead or not plan.viable(load, pos, i):
            load[pos] -= inst.weights[i]
            continue
        f.append(pos)
        if i + 1 == plan.tail:
            rest = _tail_walk(inst, load, pos, inst.n - plan.tail)
            if rest is not None:
                return f + rest
            dead.add(key)
            f.pop()
            load[pos] -= inst.weights[i]
            continue
        stack.append(iter((pos - 1, pos, pos + 1)))
    return None


def solve_uniform_emulation(inst: WeightedPathEmulationInstance, mode=SolveMode.STRUCTURED,
                            budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    if inst.total_weight != inst.c * inst.m:
        return no(mode)
    steps = Budget('uniform-emulation', budget)
    if mode is SolveMode.EXHAUSTIVE:
        found = _exhaustive(inst, steps)
    elif inst.c <= FIBER_SWEEP_LIMIT:
        found = _fiber_sweep(inst, steps)
    else:
        logger.debug(f"factor {inst.c} above the sweep limit, walking {inst.n} vertices")
        found = _pruned_walk(inst, steps)
    return yes(found, mode) if found is not None else no(mode)
