"""
Chained CNF to chained CNF: positivization and folding boundary formulas into a regular template
"""

from typing import Iterable, List, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.cnf import ChainedCnf, Clause, ClauseList
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import ReductionOutput


def _positive_clause(c: ChainedCnf, clause: Clause) -> Clause:
    """¬x becomes the other members of x's group, on the same side of the junction"""
    out: List[int] = []
    for lit in clause:
        if lit > 0:
            replacement = [lit]
        else:
            var = -lit - 1
            side, base = divmod(var, c.q)
            group = c.partition[c.group_of[base]]
            replacement = [side * c.q + u + 1 for u in group if u != base]
        out += [x for x in replacement if x not in out]
    return tuple(out)


def _rewrite(c: ChainedCnf, clauses: ClauseList) -> ClauseList:
    return tuple(_positive_clause(c, clause) for clause in clauses)


def cnf_positivize(c: ChainedCnf) -> ReductionOutput:
    require_valid(c)
    if c.partition is None:
        raise ReductionError("positivization requires exactly-one groups")
    target = ChainedCnf(
        r=c.r, q=c.q, k=c.k,
        junctions=tuple(_rewrite(c, clauses) for clauses in c.junctions),
        first=_rewrite(c, c.first) if c.first is not None else None,
        last=_rewrite(c, c.last) if c.last is not None else None,
        partition=c.partition, positive=True, regular=c.regular
    )
    negatives = sum(1 for clauses in c.all_clause_lists() for clause in clauses for lit in clause if lit < 0)
    return ReductionOutput(target, c.k, {'rewritten_literals': negatives})


def transfer_identity(source, out: ReductionOutput, certificate):
    return certificate


def _shift_right(clause: Clause, q: int, extra: int) -> Clause:
    return tuple(lit if abs(lit) <= q else (lit + extra if lit > 0 else lit - extra) for lit in clause)


def cnf_regularize_ii(c: ChainedCnf) -> ReductionOutput:
    """
    Each block gains r tracker variables; block i sets exactly tracker i, which
    guards the boundary formulas so they become ordinary template clauses.
    """
    require_valid(c)
    if not c.regular:
        raise ReductionError("boundary folding expects a regular instance")
    if c.r < 2:
        raise ReductionError("boundary folding needs at least two blocks")

    Q, r = c.q, c.r
    wide = Q + r

    def tl(j: int, positive: bool = True) -> int:
        return (Q + j) if positive else -(Q + j)

    def tr(j: int, positive: bool = True) -> int:
        return (wide + Q + j) if positive else -(wide + Q + j)

    template: List[Tuple[int, ...]] = [_shift_right(clause, Q, r) for clause in c.template]
    template.append(tuple(tl(j) for j in range(1, r + 1)))
    template.append(tuple(tr(j) for j in range(1, r + 1)))
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            template.append((tl(a, False), tl(b, False)))
            template.append((tr(a, False), tr(b, False)))
    for j in range(1, r):
        template.append((tl(j, False), tr(j + 1)))
        template.append((tl(j), tr(j + 1, False)))
    template.append((tr(1, False),))
    template.append((tl(r, False),))
    for clause in c.first or ():
        template.append((tl(1, False),) + tuple(clause))
    for clause in c.last or ():
        template.append((tr(r, False),) + tuple(lit + wide if lit > 0 else lit - wide for lit in clause))

    partition = None
    if c.partition is not None:
        partition = list(c.partition) + [tuple(range(Q, Q + r))]
    target = ChainedCnf.regular_instance(r=r, q=wide, k=c.k + 1, template=template, partition=partition)
    return ReductionOutput(target, c.k + 1, {'trackers': r, 'q': wide, 'k': c.k + 1})


def transfer_regularize_ii(c: ChainedCnf, out: ReductionOutput, blocks: Sequence[Iterable[int]]) -> List[List[int]]:
    return [sorted(set(block) | {c.q + i}) for i, block in enumerate(blocks)]
