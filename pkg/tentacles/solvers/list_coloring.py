"""
List coloring / precoloring extension solver over a path decomposition
"""

from itertools import product
from typing import Dict, FrozenSet, List, Optional, Tuple

from tentacles.instances.graphs import ListColoringInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

Partial = Tuple[Tuple[int, int], ...]


def _exhaustive(inst: ListColoringInstance, budget: Budget) -> Optional[List[int]]:
    lists = [sorted(lst) for lst in inst.effective_lists()]
    colors = [0] * inst.graph.n

    def assign(v: int) -> bool:
        if v == inst.graph.n:
            return True
        for c in lists[v]:
            budget.spend()
            if all(colors[u] != c for u in inst.graph.adjacency[v] if u < v):
                colors[v] = c
                if assign(v + 1):
                    return True
        return False

    return list(colors) if assign(0) else None


def _bag_dp(inst: ListColoringInstance, budget: Budget) -> Optional[List[int]]:
    """
    Table per bag of proper colorings of the bag's vertices. Consecutive tables
    agree on the shared vertices; each entry keeps one parent entry.
    """
    lists = inst.effective_lists()
    g = inst.graph
    tables: List[Dict[Partial, Optional[Partial]]] = []
    previous: Dict[Partial, Optional[Partial]] = {(): None}
    previous_bag: FrozenSet[int] = frozenset()
    for bag in inst.pd.bags:
        shared = sorted(bag & previous_bag)
        fresh = sorted(bag - previous_bag)
        projections: Dict[Partial, Partial] = {}
        for entry in previous:
            colors = dict(entry)
            projections.setdefault(tuple((v, colors[v]) for v in shared), entry)
        table: Dict[Partial, Optional[Partial]] = {}
        for projection, parent in projections.items():
            for choice in product(*[sorted(lists[v]) for v in fresh]):
                budget.spend()
                colors = dict(projection)
                colors.update(zip(fresh, choice))
                if any(colors[u] == colors[w] for u in bag for w in g.adjacency[u] if w in colors and u < w):
                    continue
                table[tuple(sorted(colors.items()))] = parent
        if not table:
            return None
        tables.append(table)
        previous, previous_bag = table, bag
    coloring = [0] * g.n
    entry = next(iter(previous), None)
    for table in reversed(tables):
        for v, c in entry:
            coloring[v] = c
        entry = table[entry]
    return coloring


def solve_list_coloring(inst: ListColoringInstance, mode=SolveMode.STRUCTURED,
                        budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget('list-coloring', budget)
    if inst.graph.n == 0:
        return yes([], mode)
    found = _exhaustive(inst, steps) if mode is SolveMode.EXHAUSTIVE else _bag_dp(inst, steps)
    return yes(found, mode) if found is not None else no(mode)
