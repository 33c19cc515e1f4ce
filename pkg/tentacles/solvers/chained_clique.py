"""
Chained multicolored clique / independent set solver
"""

from itertools import product
from math import prod
from typing import Dict, List, Optional, Tuple

from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

Selection = Tuple[int, ...]


def layer_selections(g: LayeredColoredGraph, layer: int, budget: Budget) -> List[Selection]:
    """k-colorful selections of one layer that are compatible inside the layer"""
    out = []
    for choice in product(*[g.vertices_of(layer, j) for j in range(1, g.k + 1)]):
        budget.spend()
        if g.compatible(choice):
            out.append(choice)
    return out


def _exhaustive(g: LayeredColoredGraph, budget: Budget) -> Optional[List[int]]:
    per_layer = [
        list(product(*[g.vertices_of(i, j) for j in range(1, g.k + 1)]))
        for i in range(1, g.r + 1)
    ]
    budget.require(prod(len(options) for options in per_layer))
    for choice in product(*per_layer):
        budget.spend()
        chosen = [v for sel in choice for v in sel]
        if g.is_solution(chosen):
            return chosen
    return None


def _layer_dp(g: LayeredColoredGraph, budget: Budget) -> Optional[List[int]]:
    layer: Dict[Selection, Optional[Selection]] = {s: None for s in layer_selections(g, 1, budget)}
    history = [layer]
    for i in range(2, g.r + 1):
        nxt: Dict[Selection, Optional[Selection]] = {}
        for right in layer_selections(g, i, budget):
            for left in layer:
                budget.spend()
                if g.compatible(left + right):
                    nxt[right] = left
                    break
        layer = nxt
        history.append(layer)
        if not layer:
            return None
    if not layer:
        return None
    chain = [next(iter(layer))]
    for step in reversed(history[1:]):
        chain.append(step[chain[-1]])
    return sorted(v for sel in chain for v in sel)


def solve_chained_clique(g: LayeredColoredGraph, variant: Optional[str] = None,
                         mode=SolveMode.STRUCTURED, budget: Optional[int] = None) -> Answer:
    require_valid(g)
    if variant is not None and variant != g.variant:
        g = g.with_variant(variant)
        require_valid(g)
    mode = as_mode(mode)
    steps = Budget('chained-clique', budget)
    found = _exhaustive(g, steps) if mode is SolveMode.EXHAUSTIVE else _layer_dp(g, steps)
    return yes(sorted(found), mode) if found is not None else no(mode)
