"""
NNCCM acceptance solver
"""

from itertools import product
from typing import List, Optional, Set, Tuple

from tentacles.instances.counters import Nnccm
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

Vector = Tuple[int, ...]


def _exhaustive(m: Nnccm, budget: Budget) -> Optional[List[Vector]]:
    trace: List[Vector] = []

    def run(i: int, current: Vector) -> bool:
        if i == len(m.checks):
            return True
        for vector in product(*[range(v, m.n + 1) for v in current]):
            budget.spend()
            if m.passes(m.checks[i], vector):
                trace.append(vector)
                if run(i + 1, vector):
                    return True
                trace.pop()
        return False

    return list(trace) if run(0, (0,) * m.k) else None


def minimal_elements(vectors: Set[Vector], budget: Budget) -> List[Vector]:
    ordered = sorted(vectors, key=sum)
    kept: List[Vector] = []
    for v in ordered:
        budget.spend(len(kept) + 1)
        if not any(all(a <= b for a, b in zip(u, v)) for u in kept):
            kept.append(v)
    return kept


def _reachability(m: Nnccm, budget: Budget) -> Optional[List[Vector]]:
    """
    Reachable counter vectors before each check form an up-set; it is kept as its
    antichain of minimal vectors. A check removes the slab c1=r1, c2=r2 and every
    minimal vector inside the slab is replaced by its one-step raises out of it.
    """
    generators: List[List[Vector]] = []
    current: List[Vector] = [(0,) * m.k]
    for c1, c2, r1, r2 in m.checks:
        survivors: Set[Vector] = set()
        for v in current:
            budget.spend()
            if v[c1 - 1] == r1 and v[c2 - 1] == r2:
                for c in {c1, c2}:
                    if v[c - 1] < m.n:
                        raised = list(v)
                        raised[c - 1] += 1
                        survivors.add(tuple(raised))
            else:
                survivors.add(v)
        current = minimal_elements(survivors, budget)
        if not current:
            return None
        generators.append(current)
    if not generators:
        return []
    trace = [generators[-1][0]]
    for options in reversed(generators[:-1]):
        later = trace[-1]
        trace.append(next(v for v in options if all(a <= b for a, b in zip(v, later))))
    return trace[::-1]


def solve_nnccm(m: Nnccm, mode=SolveMode.STRUCTURED, budget: Optional[int] = None) -> Answer:
    require_valid(m)
    mode = as_mode(mode)
    steps = Budget('nnccm', budget)
    trace = _exhaustive(m, steps) if mode is SolveMode.EXHAUSTIVE else _reachability(m, steps)
    return yes([list(v) for v in trace], mode) if trace is not None else no(mode)
