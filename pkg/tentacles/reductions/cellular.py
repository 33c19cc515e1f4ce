"""
Cellular automaton reductions: time annotation (all-accepting -> non-halting)
and the chained weighted CNF encoding of runs
"""

import logging
from typing import Dict, List, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.automata import CellularAutomaton
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import ReductionOutput

logger = logging.getLogger(__name__)


def ca_annotate_time(ca: CellularAutomaton) -> ReductionOutput:
    """
    Interior states become (state, time) pairs so every transition advances the clock.
    One extra step moves each accepting time-t state into the sink s_a; a run of t+1
    steps therefore exists iff all cells accept at time t in the source.
    """
    require_valid(ca)
    if ca.acceptance != 'all':
        raise ReductionError("time annotation expects an all-accepting automaton")
    if ca.q < 3:
        raise ReductionError("time annotation needs at least one interior cell")

    interior = ca.interior_states()
    slot = {s: i for i, s in enumerate(interior)}
    width = len(interior)

    def annotated(s: int, time: int) -> int:
        return 2 + time * width + slot[s]

    def neighbour(s: int, time: int) -> int:
        if s == ca.left:
            return 0
        if s == ca.right:
            return 1
        return annotated(s, time)

    sink = 2 + (ca.t + 1) * width
    transitions = set()
    for time in range(ca.t):
        for s1, s2, s3, s4 in ca.transitions:
            transitions.add((neighbour(s1, time), annotated(s2, time), neighbour(s3, time), annotated(s4, time + 1)))
    if ca.left in ca.accepting and ca.right in ca.accepting:
        sides = [annotated(u, ca.t) for u in interior]
        for s in interior:
            if s not in ca.accepting:
                continue
            for x in [0] + sides:
                for y in [1] + sides:
                    transitions.add((x, annotated(s, ca.t), y, sink))

    target = CellularAutomaton(
        states=sink + 1, left=0, right=1,
        transitions=tuple(sorted(transitions)),
        accepting=frozenset({sink}),
        initial=(0,) + tuple(annotated(s, 0) for s in ca.initial[1:-1]) + (1,),
        t=ca.t + 1,
        acceptance='non-halting'
    )
    logger.debug(f"annotated {width} interior states over {ca.t + 1} time steps")
    return ReductionOutput(
        target, ca.q,
        {'annotated_states': width * (ca.t + 1), 'states': sink + 1, 't': ca.t + 1},
        {'annotated': {(s, time): annotated(s, time) for s in interior for time in range(ca.t + 1)},
         'sink': sink}
    )


def transfer_annotate_time(ca: CellularAutomaton, out: ReductionOutput, run: Sequence[Sequence[int]]) -> List[List[int]]:
    annotated, sink = out.legend['annotated'], out.legend['sink']
    moved = [[0] + [annotated[(s, time)] for s in config[1:-1]] + [1] for time, config in enumerate(run)]
    moved.append([0] + [sink] * (ca.q - 2) + [1])
    return moved


def _transition_index(ca: CellularAutomaton) -> List[Tuple[int, int, int, int]]:
    return sorted(set(ca.transitions))


def ca_to_chained_sat(ca: CellularAutomaton) -> ReductionOutput:
    """
    Block t' holds x[c, s] (cell c in state s at time t') for every cell and state,
    then y[c, z] (interior cell c fires transition z from time t') for every interior
    cell and transition. Exactly one state per cell and one transition per interior
    cell are true, 2q-2 variables per block.
    """
    require_valid(ca)
    if ca.acceptance != 'at-least-one':
        raise ReductionError("chained CNF encoding expects an at-least-one accepting automaton")

    q, S = ca.q, ca.states
    table = _transition_index(ca)
    T = len(table)
    Q = q * S + (q - 2) * T

    def x(c: int, s: int) -> int:
        return c * S + s

    def y(c: int, z: int) -> int:
        return q * S + (c - 1) * T + z

    def left(idx: int, positive: bool = True) -> int:
        return idx + 1 if positive else -(idx + 1)

    def right(idx: int, positive: bool = True) -> int:
        return Q + idx + 1 if positive else -(Q + idx + 1)

    template: List[Tuple[int, ...]] = []
    for side in (left, right):
        for c in range(q):
            template.append(tuple(side(x(c, s)) for s in range(S)))
        for c, pinned in ((0, ca.left), (q - 1, ca.right)):
            template.append((side(x(c, pinned)),))
            template += [(side(x(c, s), False),) for s in range(S) if s != pinned]
    for c in range(1, q - 1):
        template.append(tuple(left(y(c, z)) for z in range(T)))
        for z, (s1, s2, s3, _) in enumerate(table):
            for cell, state in ((c - 1, s1), (c, s2), (c + 1, s3)):
                template.append((left(y(c, z), False), left(x(cell, state))))
        for s in range(S):
            causes = [left(y(c, z)) for z, tr in enumerate(table) if tr[3] == s]
            template.append((right(x(c, s), False),) + tuple(causes))

    first = [(x(c, s) + 1,) for c, s in enumerate(ca.initial)]
    last = [tuple(x(c, s) + 1 for c in range(q) for s in sorted(ca.accepting))]

    partition = None
    if T > 0 or q == 2:
        partition = [[x(c, s) for s in range(S)] for c in range(q)]
        partition += [[y(c, z) for z in range(T)] for c in range(1, q - 1)]

    target = ChainedCnf.regular_instance(
        r=ca.t + 1, q=Q, k=2 * q - 2, template=template, first=first, last=last, partition=partition
    )
    return ReductionOutput(
        target, 2 * q - 2,
        {'Q': Q, 'state_variables': q * S, 'transition_variables': (q - 2) * T,
         'blocks': ca.t + 1, 'k': 2 * q - 2, 'partitioned': partition is not None},
        {'transitions': table}
    )


def transfer_ca_to_chained_sat(ca: CellularAutomaton, out: ReductionOutput, run: Sequence[Sequence[int]]) -> List[List[int]]:
    q, S = ca.q, ca.states
    table: List[Tuple[int, int, int, int]] = out.legend['transitions']
    T = len(table)
    position: Dict[Tuple[int, int, int, int], int] = {tr: z for z, tr in enumerate(table)}
    blocks = []
    for time, config in enumerate(run):
        block = [c * S + s for c, s in enumerate(config)]
        for c in range(1, q - 1):
            if time + 1 < len(run):
                z = position[(config[c - 1], config[c], config[c + 1], run[time + 1][c])]
            else:
                z = 0
            block.append(q * S + (c - 1) * T + z)
        blocks.append(sorted(block))
    return blocks
