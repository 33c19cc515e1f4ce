"""
Timed token reconfiguration solver (dominating set, independent set, clique)
"""

from typing import Dict, FrozenSet, Iterator, List, Optional

from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

TokenSet = FrozenSet[int]


def moves(inst: ReconfigurationInstance, current: TokenSet, budget: Budget) -> Iterator[TokenSet]:
    """Feasible sets one legal token move away"""
    g = inst.graph
    for u in sorted(current):
        targets = g.adjacency[u] if inst.rule == 'TS' else range(g.n)
        for v in sorted(targets):
            if v in current:
                continue
            budget.spend()
            after = (current - {u}) | {v}
            if inst.feasible(after):
                yield after


def _exhaustive(inst: ReconfigurationInstance, budget: Budget) -> Optional[List[TokenSet]]:
    sequence = [inst.start]

    def done() -> bool:
        return sequence[-1] == inst.target and (not inst.exact or len(sequence) == inst.T)

    def walk() -> bool:
        if done():
            return True
        if len(sequence) == inst.T:
            return False
        for after in moves(inst, sequence[-1], budget):
            sequence.append(after)
            if walk():
                return True
            sequence.pop()
        return False

    return list(sequence) if walk() else None


def _frontier(inst: ReconfigurationInstance, budget: Budget) -> Optional[List[TokenSet]]:
    """
    Exact length: layer i holds every set reachable with exactly i moves, revisits allowed.
    At most T: plain breadth-first search with a visited set.
    """
    layers: List[Dict[TokenSet, Optional[TokenSet]]] = [{inst.start: None}]
    seen = {inst.start}
    while len(layers) < inst.T:
        if not inst.exact and inst.target in layers[-1]:
            break
        nxt: Dict[TokenSet, Optional[TokenSet]] = {}
        for current in layers[-1]:
            for after in moves(inst, current, budget):
                if after in nxt or (not inst.exact and after in seen):
                    continue
                nxt[after] = current
        if not nxt:
            break
        seen.update(nxt)
        layers.append(nxt)
    end = len(layers) - 1 if inst.exact else next((i for i, layer in enumerate(layers) if inst.target in layer), None)
    if end is None or inst.target not in layers[end] or (inst.exact and len(layers) != inst.T):
        return None
    sequence = [inst.target]
    for layer in reversed(layers[1:end + 1]):
        sequence.append(layer[sequence[-1]])
    return sequence[::-1]


def solve_reconfiguration(inst: ReconfigurationInstance, mode=SolveMode.STRUCTURED,
                          budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget('reconfiguration', budget)
    found = _exhaustive(inst, steps) if mode is SolveMode.EXHAUSTIVE else _frontier(inst, steps)
    return yes([sorted(s) for s in found], mode) if found is not None else no(mode)
