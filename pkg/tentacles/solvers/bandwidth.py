"""
Bandwidth solver

The structured search places vertices left to right, one connected component at a
time. A state is the placed set together with the last k placed vertices in order:
a new vertex may only see placed neighbours inside that window, and a vertex
leaving the window must have all of its neighbours placed already.
"""

import logging
from itertools import chain
from typing import FrozenSet, List, Optional, Set, Tuple

from tentacles.instances.graphs import BandwidthInstance, Graph
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

logger = logging.getLogger(__name__)


def _exhaustive(g: Graph, k: int, budget: Budget) -> Optional[List[int]]:
    order: List[int] = []
    position = [0] * g.n

    def place(idx: int) -> bool:
        if idx == g.n:
            return True
        for v in range(g.n):
            if position[v]:
                continue
            budget.spend()
            if any(position[u] and idx + 1 - position[u] > k for u in g.adjacency[v]):
                continue
            position[v] = idx + 1
            order.append(v)
            if place(idx + 1):
                return True
            order.pop()
            position[v] = 0
        return False

    return list(position) if place(0) else None


def _component_order(g: Graph, component: List[int], k: int, budget: Budget) -> Optional[List[int]]:
    if len(component) == 1:
        return list(component)
    if k == 0:
        return None
    members = frozenset(component)
    dead: Set[Tuple[Tuple[int, ...], FrozenSet[int]]] = set()
    order: List[int] = []

    def extend(placed: FrozenSet[int], window: Tuple[int, ...]) -> bool:
        if len(placed) == len(members):
            return True
        if (window, placed) in dead:
            return False
        for v in sorted(members - placed):
            budget.spend()
            if any(u in placed and u not in window for u in g.adjacency[v]):
                continue
            shifted = window + (v,)
            if len(shifted) > k:
                leaving = shifted[0]
                if any(u not in placed and u != v for u in g.adjacency[leaving]):
                    continue
                shifted = shifted[1:]
            order.append(v)
            if extend(placed | {v}, shifted):
                return True
            order.pop()
        dead.add((window, placed))
        return False

    return list(order) if extend(frozenset(), ()) else None


def _windowed(g: Graph, k: int, budget: Budget) -> Optional[List[int]]:
    orders = []
    for component in g.components():
        found = _component_order(g, sorted(component), k, budget)
        if found is None:
            return None
        orders.append(found)
    layout = [0] * g.n
    for pos, v in enumerate(chain.from_iterable(orders), start=1):
        layout[v] = pos
    return layout


def solve_bandwidth(inst: BandwidthInstance, mode=SolveMode.STRUCTURED,
                    budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget('bandwidth', budget)
    if mode is SolveMode.EXHAUSTIVE:
        found = _exhaustive(inst.graph, inst.k, steps)
    else:
        found = _windowed(inst.graph, inst.k, steps)
    return yes(found, mode) if found is not None else no(mode)


def minimum_bandwidth(g: Graph, mode=SolveMode.STRUCTURED,
                      budget: Optional[int] = None) -> Tuple[int, List[int]]:
    """Smallest k admitting a layout, by binary search over solve_bandwidth"""
    if g.n <= 1:
        return 0, [1] * g.n
    lo, hi = 0, g.n - 1
    best = solve_bandwidth(BandwidthInstance(g, hi), mode, budget).certificate
    while lo < hi:
        mid = (lo + hi) // 2
        answer = solve_bandwidth(BandwidthInstance(g, mid), mode, budget)
        if answer.decision:
            hi, best = mid, answer.certificate
        else:
            lo = mid + 1
    logger.debug("minimum bandwidth %d on %d vertices", lo, g.n)
    return lo, best
