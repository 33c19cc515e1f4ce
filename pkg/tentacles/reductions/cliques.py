"""
Chained multicolored clique reductions: partial complement and the counter machine encoding
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.counters import Check, Nnccm
from tentacles.instances.graphs import Graph
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import ReductionOutput

logger = logging.getLogger(__name__)


def partial_complement(g: LayeredColoredGraph) -> ReductionOutput:
    """Complement restricted to pairs in the same or in adjacent layers; the variant flips"""
    require_valid(g)
    edges = [
        (u, v)
        for u in range(g.graph.n) for v in range(u + 1, g.graph.n)
        if abs(g.layer[u] - g.layer[v]) <= 1 and not g.graph.has_edge(u, v)
    ]
    variant = 'independent-set' if g.variant == 'clique' else 'clique'
    target = LayeredColoredGraph(Graph.from_edges(g.graph.n, edges), g.layer, g.color, g.r, g.k, variant)
    return ReductionOutput(target, g.k, {'edges': len(edges)})


class _SelectionLayout:
    """
    Counter values for the padded layered graph: every (layer, color) class holds m
    slots, layer j owns values B_j+1..B_j+m with B_j = (j-1)m. A chosen slot l sets
    the + counter to B_j+l and the - counter to B_j+m+1-l.
    """

    def __init__(self, g: LayeredColoredGraph):
        self.g = g
        self.k = g.k
        self.m = max([len(vs) for vs in g.classes.values()] + [1])
        self.dummy = g.r % 2 == 1
        self.layers = g.r + (1 if self.dummy else 0)
        self.n = self.m * self.layers

    def base(self, j: int) -> int:
        return (j - 1) * self.m

    @staticmethod
    def counter(i: int, parity: int, sign: int) -> int:
        return ((i - 1) * 2 + parity) * 2 + sign + 1

    def slot(self, j: int, i: int, l: int) -> Tuple[str, Optional[int]]:
        if j > self.g.r:
            return 'dummy', None
        vs = self.g.vertices_of(j, i)
        return ('real', vs[l - 1]) if l <= len(vs) else ('pad', None)

    def adjacent(self, a: Tuple[int, int, int], b: Tuple[int, int, int]) -> bool:
        (ka, va), (kb, vb) = self.slot(*a), self.slot(*b)
        if 'pad' in (ka, kb):
            return False
        if ka == 'real' and kb == 'real':
            return self.g.graph.has_edge(va, vb)
        return True

    def selection(self, j: int) -> List[Check]:
        checks: List[Check] = []
        B, m, n = self.base(j), self.m, self.n
        parity = j % 2
        for i in range(1, self.k + 1):
            c1, c2 = self.counter(i, parity, 0), self.counter(i, parity, 1)
            checks += [(c1, c2, a, b) for a in range(0, B + 1) for b in range(0, n + 1)]
            checks += [(c1, c2, a, b) for a in range(0, n + 1) for b in range(0, B + 1)]
            for l in range(1, m + 1):
                checks += [(c1, c2, B + l, x) for x in range(B + 1, B + m + 1) if x != B + m + 1 - l]
            checks += [(c1, c2, a, b) for a in range(B + m + 1, n + 1) for b in range(0, n + 1)]
            checks += [(c1, c2, a, b) for a in range(0, n + 1) for b in range(B + m + 1, n + 1)]
        return checks

    def intra(self, j: int) -> List[Check]:
        checks: List[Check] = []
        B, parity = self.base(j), j % 2
        for i in range(1, self.k + 1):
            for i2 in range(i + 1, self.k + 1):
                for l in range(1, self.m + 1):
                    for l2 in range(1, self.m + 1):
                        if not self.adjacent((j, i, l), (j, i2, l2)):
                            checks.append((self.counter(i, parity, 0), self.counter(i2, parity, 0), B + l, B + l2))
        return checks

    def cross(self, j: int) -> List[Check]:
        checks: List[Check] = []
        B, before, parity = self.base(j), self.base(j - 1), j % 2
        for i in range(1, self.k + 1):
            for i2 in range(1, self.k + 1):
                for l in range(1, self.m + 1):
                    for l2 in range(1, self.m + 1):
                        if not self.adjacent((j, i, l), (j - 1, i2, l2)):
                            checks.append((self.counter(i, parity, 0), self.counter(i2, 1 - parity, 0),
                                           B + l, before + l2))
        return checks


def cmc_to_nnccm(g: LayeredColoredGraph) -> ReductionOutput:
    """
    Four counters per color (sign times layer parity). Iteration j selects one slot per
    color of layer j, rejects selected non-edges inside layer j and towards layer j-1,
    then repeats the selection checks of layers j and j-1 so no counter moved meanwhile.
    """
    require_valid(g)
    if g.variant != 'clique':
        raise ReductionError("counter encoding expects the clique variant; apply partial-complement first")
    if g.k < 1:
        raise ReductionError("counter encoding needs at least one color")

    layout = _SelectionLayout(g)
    checks: List[Check] = []
    sizes: List[int] = []
    for j in range(1, layout.layers + 1):
        start = len(checks)
        checks += layout.selection(j)
        checks += layout.intra(j)
        if j > 1:
            checks += layout.cross(j)
        checks += layout.selection(j)
        if j > 1:
            checks += layout.selection(j - 1)
        sizes.append(len(checks) - start)

    target = Nnccm(4 * g.k, layout.n, tuple(checks))
    logger.debug(f"counter machine with {len(checks)} checks over {layout.layers} layers")
    return ReductionOutput(
        target, 4 * g.k,
        {'counters': 4 * g.k, 'n': layout.n, 'm': layout.m, 'layers': layout.layers,
         'dummy_layer': layout.dummy, 'checks': len(checks)},
        {'layout': layout, 'sizes': sizes}
    )


def transfer_cmc_to_nnccm(g: LayeredColoredGraph, out: ReductionOutput, chosen: Sequence[int]) -> List[List[int]]:
    layout: _SelectionLayout = out.legend['layout']
    picked = set(chosen)
    slot: Dict[Tuple[int, int], int] = {}
    for j in range(1, layout.layers + 1):
        for i in range(1, g.k + 1):
            vs = g.vertices_of(j, i) if j <= g.r else ()
            slot[(j, i)] = next((l for l, v in enumerate(vs, start=1) if v in picked), 1)

    vector = [0] * (4 * g.k)
    trace: List[List[int]] = []
    for j, size in enumerate(out.legend['sizes'], start=1):
        B = layout.base(j)
        for i in range(1, g.k + 1):
            vector[layout.counter(i, j % 2, 0) - 1] = B + slot[(j, i)]
            vector[layout.counter(i, j % 2, 1) - 1] = B + layout.m + 1 - slot[(j, i)]
        trace += [list(vector) for _ in range(size)]
    return trace
