"""
Chained weighted CNF-satisfiability solver
"""

from itertools import product
from typing import Dict, FrozenSet, List, Optional

from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes


def _exhaustive(c: ChainedCnf, budget: Budget) -> Optional[List[FrozenSet[int]]]:
    blocks = list(c.block_assignments())
    budget.require(len(blocks) ** c.r)
    for choice in product(blocks, repeat=c.r):
        budget.spend()
        if c.satisfied_by(choice):
            return list(choice)
    return None


def _frontier(c: ChainedCnf, budget: Budget) -> Optional[List[FrozenSet[int]]]:
    """Left-to-right DP keeping the feasible assignments of the current block"""
    blocks = list(c.block_assignments())
    layer: Dict[FrozenSet[int], Optional[FrozenSet[int]]] = {
        b: None for b in blocks if c.first_satisfied(b)
    }
    history = [layer]
    for i in range(c.r - 1):
        nxt: Dict[FrozenSet[int], Optional[FrozenSet[int]]] = {}
        for right in blocks:
            for left in layer:
                budget.spend()
                if c.junction_satisfied(i, left, right):
                    nxt[right] = left
                    break
        layer = nxt
        history.append(layer)
        if not layer:
            return None
    final = next((b for b in layer if c.last_satisfied(b)), None)
    if final is None:
        return None
    chain = [final]
    for step in reversed(history[1:]):
        chain.append(step[chain[-1]])
    return chain[::-1]


def solve_chained_cnf(c: ChainedCnf, mode=SolveMode.STRUCTURED, budget: Optional[int] = None) -> Answer:
    require_valid(c)
    mode = as_mode(mode)
    steps = Budget('chained-cnf', budget)
    found = _exhaustive(c, steps) if mode is SolveMode.EXHAUSTIVE else _frontier(c, steps)
    if found is None:
        return no(mode)
    return yes([sorted(b) for b in found], mode)
