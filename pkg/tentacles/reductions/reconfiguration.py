"""
Timed reconfiguration reductions

Dominating set: chained CNF to token sliding with a timer path, and the second timer that
makes token jumping behave like sliding. Clique: chained multicolored clique to TJ/TS clique
reconfiguration with sentinel layers, plus the complement to independent set reconfiguration.
"""

import logging
from typing import Dict, FrozenSet, Hashable, List, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.graphs import Graph
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import EdgeBuilder, ReductionOutput
from tentacles.reductions.cnf import cnf_positivize

logger = logging.getLogger(__name__)

ODD, EVEN = 1, 0


def _parity(block: int) -> int:
    return block % 2


def chained_sat_to_ts_ds_reconfig(c: ChainedCnf) -> ReductionOutput:
    """
    Dominating set reconfiguration under token sliding.

    Tokens: one on the timer path t_0..t_L, one on the dominator d (pinned by its pendant)
    and one per (parity, group) class of variable vertices, kept there by two class
    guardians. Clause vertex w[phi, i] is watched by every timer vertex except t_{2i-1};
    move vertex m[i, l] by every timer vertex except the one at which block i must hold
    a token. The odd and even class tokens walk block i -> i+2 along their parity and the
    step budget leaves no spare move, so every block keeps one value per group.
    Odd block counts get a trailing block without clauses.

    The emitted sequence length T is the forced move count L + k(r+2) plus one, which
    grows with k. The closed form 5r/2 - 2 is only reported as the T_formula constant
    and is not what the target uses.
    """
    require_valid(c)
    if c.partition is None or not c.regular:
        raise ReductionError("dominating set reconfiguration needs a partitioned regular instance")
    if c.first or c.last:
        raise ReductionError("dominating set reconfiguration cannot carry boundary formulas")
    source_r = c.r
    if not c.positive:
        c = cnf_positivize(c).target
    r = source_r + source_r % 2
    L = 2 * r - 2
    k, q = c.k, c.q
    groups = [tuple(g) for g in c.partition]

    b = EdgeBuilder()
    for j in range(L + 1):
        b.add(('t', j))
        if j > 0:
            b.join(('t', j - 1), ('t', j))
        for a in (1, 2):
            b.join(('guard-t', a), ('t', j))
        b.join('d', ('t', j))
    b.join('d', 'pendant')

    for i in range(1, r + 1):
        for g, group in enumerate(groups):
            for x in group:
                b.join('d', ('v', i, x))
                for a in (1, 2):
                    b.join(('guard', _parity(i), g, a), ('v', i, x))
                if i + 2 <= r:
                    for y in group:
                        b.join(('v', i, x), ('v', i + 2, y))

    ends = {('start', ODD): 1, ('start', EVEN): 2, ('end', ODD): r - 1, ('end', EVEN): r}
    for (side, parity), block in ends.items():
        for g, group in enumerate(groups):
            vertex = (side, parity, g)
            b.join('d', vertex)
            for a in (1, 2):
                b.join(vertex, ('guard', parity, g, a))
            for x in group:
                b.join(vertex, ('v', block, x))

    for i in range(1, r + 1):
        due = 1 if i <= 2 else 2 * i - 3
        for g, group in enumerate(groups):
            for x in group:
                b.join(('m', i, g), ('v', i, x))
            for j in range(L + 1):
                if j != due:
                    b.join(('m', i, g), ('t', j))

    for i in range(1, source_r):
        for ci, clause in enumerate(c.template):
            w = ('w', ci, i)
            b.add(w)
            for lit in clause:
                side, x = divmod(lit - 1, q)
                b.join(w, ('v', i + side, x))
            for j in range(L + 1):
                if j != 2 * i - 1:
                    b.join(w, ('t', j))

    ids = b.vertex
    start = frozenset([ids[('t', 0)], ids['d']] + [ids[('start', p, g)] for p in (ODD, EVEN) for g in range(k)])
    target_set = frozenset([ids[('t', L)], ids['d']] + [ids[('end', p, g)] for p in (ODD, EVEN) for g in range(k)])
    moves = L + k * (r + 2)
    target = ReconfigurationInstance(
        Graph.from_edges(len(ids), b.edge_list()), 'dominating-set', 'TS',
        start, target_set, 2 * k + 2, moves + 1, exact=True
    )
    logger.debug(f"sliding dominating set gadget: {target.graph.n} vertices, {moves} moves over {r} blocks")
    return ReductionOutput(
        target, 2 * k + 2,
        {'tokens': 2 * k + 2, 'timer_length': L, 'moves': moves, 'T': moves + 1,
         'T_formula': 5 * r // 2 - 2, 'blocks': r, 'padded': r != source_r},
        {'builder': b, 'r': r, 'L': L, 'groups': groups, 'tj': False}
    )


def ts_to_tj_timer(out: ReductionOutput) -> ReductionOutput:
    """
    Token jumping version of a sliding dominating set gadget: a second timer path t'
    with its own guardians and one token, and guardians g[i] watching every t_j (j != i)
    plus t'_{i-1}, t'_i. The two timer tokens can only advance alternately one step at a time.
    """
    legend = out.legend
    if 'builder' not in legend or legend.get('tj'):
        raise ReductionError("second timer applies to sliding dominating set gadgets only")
    source: ReconfigurationInstance = out.target
    L = legend['L']

    old: EdgeBuilder = legend['builder']
    b = EdgeBuilder()
    for label in old.vertex.labels:
        b.add(label)
    b.edges = set(old.edges)
    for j in range(L + 1):
        b.add(('t2', j))
        if j > 0:
            b.join(('t2', j - 1), ('t2', j))
        for a in (1, 2):
            b.join(('guard-t2', a), ('t2', j))
        b.join('d', ('t2', j))
    for i in range(L + 1):
        for j in range(L + 1):
            if j != i:
                b.join(('guard-step', i), ('t', j))
        for j in (i - 1, i):
            if j >= 0:
                b.join(('guard-step', i), ('t2', j))

    ids = b.vertex
    moves = out.constants['moves'] + L
    tokens = source.k + 1
    target = ReconfigurationInstance(
        Graph.from_edges(len(ids), b.edge_list()), 'dominating-set', 'TJ',
        source.start | {ids[('t2', 0)]}, source.target | {ids[('t2', L)]},
        tokens, moves + 1, exact=True
    )
    return ReductionOutput(
        target, tokens,
        {**out.constants, 'tokens': tokens, 'moves': moves, 'T': moves + 1,
         'delta_T': L, 'delta_T_formula': 2 * legend['r'] - 3},
        {**legend, 'builder': b, 'tj': True}
    )


def _dominating_schedule(legend: Dict, blocks: Sequence[Sequence[int]]) -> List[List[int]]:
    """Forward schedule: fill blocks 1 and 2, run the timer, shift block i at t_{2i}, empty at t_L"""
    ids = legend['builder'].vertex
    r, L, groups, tj = legend['r'], legend['L'], legend['groups'], legend['tj']
    value: Dict[Tuple[int, int], int] = {}
    for i in range(1, r + 1):
        chosen = set(blocks[i - 1]) if i <= len(blocks) else set()
        for g, group in enumerate(groups):
            value[(i, g)] = next((x for x in group if x in chosen), group[0])

    current = set(ids[label] for label in
                  [('t', 0), 'd'] + [('start', p, g) for p in (ODD, EVEN) for g in range(len(groups))])
    if tj:
        current.add(ids[('t2', 0)])
    sequence = [sorted(current)]

    def move(a: Hashable, z: Hashable):
        current.discard(ids[a])
        current.add(ids[z])
        sequence.append(sorted(current))

    for parity, block in ((ODD, 1), (EVEN, 2)):
        for g in range(len(groups)):
            move(('start', parity, g), ('v', block, value[(block, g)]))
    for j in range(1, L + 1):
        move(('t', j - 1), ('t', j))
        if tj:
            move(('t2', j - 1), ('t2', j))
        if j % 2 == 0 and j // 2 + 2 <= r:
            i = j // 2
            for g in range(len(groups)):
                move(('v', i, value[(i, g)]), ('v', i + 2, value[(i + 2, g)]))
    for parity, block in ((ODD, r - 1), (EVEN, r)):
        for g in range(len(groups)):
            move(('v', block, value[(block, g)]), ('end', parity, g))
    return sequence


def transfer_sat_to_ts_ds_reconfig(c: ChainedCnf, out: ReductionOutput,
                                   blocks: Sequence[Sequence[int]]) -> List[List[int]]:
    return _dominating_schedule(out.legend, blocks)


def _sentinel_graph(g: LayeredColoredGraph, two_apart) -> Tuple[Graph, List[int], Dict[Tuple[int, int], int]]:
    """
    Source graph cleaned of edges that never join a chained multicolored clique, plus four
    sentinel layers of k vertices each. Returns the graph, the level of every vertex and
    the sentinel ids by (level, color).
    """
    n, r, k = g.graph.n, g.r, g.k
    levels = list(g.layer)
    colors = list(g.color)
    sentinel: Dict[Tuple[int, int], int] = {}
    for level in (-1, 0, r + 1, r + 2):
        for j in range(1, k + 1):
            sentinel[(level, j)] = len(levels)
            levels.append(level)
            colors.append(j)

    edges = [
        (u, v) for u, v in g.graph.edges
        if abs(g.layer[u] - g.layer[v]) == 1 or (g.layer[u] == g.layer[v] and g.color[u] != g.color[v])
    ]
    total = len(levels)
    for u in range(total):
        for v in range(u + 1, total):
            lu, lv = levels[u], levels[v]
            low, high = (u, v) if lu <= lv else (v, u)
            if u < n and v < n:
                if abs(lu - lv) == 2 and two_apart(colors[low], colors[high]):
                    edges.append((u, v))
                continue
            pair = {lu, lv}
            if pair <= {-1, 0} or pair <= {r + 1, r + 2} or pair == {0, 1} or pair == {r, r + 1}:
                edges.append((u, v))
            elif abs(lu - lv) == 2 and two_apart(colors[low], colors[high]):
                edges.append((u, v))
    return Graph.from_edges(total, edges), levels, sentinel


def _clique_reconfig(g: LayeredColoredGraph, rule: str, two_apart) -> ReductionOutput:
    require_valid(g)
    if g.variant != 'clique':
        raise ReductionError("clique reconfiguration expects the clique variant; apply partial-complement first")
    r, k = g.r, g.k
    graph, levels, sentinel = _sentinel_graph(g, two_apart)
    start = frozenset(sentinel[(level, j)] for level in (-1, 0) for j in range(1, k + 1))
    target_set = frozenset(sentinel[(level, j)] for level in (r + 1, r + 2) for j in range(1, k + 1))
    moves = k * (r + 2)
    target = ReconfigurationInstance(graph, 'clique', rule, start, target_set, 2 * k, moves + 1, exact=True)
    logger.debug(f"{rule} clique gadget: {graph.n} vertices, {moves} moves")
    return ReductionOutput(
        target, 2 * k,
        {'tokens': 2 * k, 'moves': moves, 'T': moves + 1,
         'potential_start': -k, 'potential_end': k * (2 * r + 3)},
        {'levels': levels, 'sentinel': sentinel}
    )


def cmc_to_tj_clique_reconfig(g: LayeredColoredGraph) -> ReductionOutput:
    """
    Jumping clique reconfiguration from V_{-1} + V_0 to V_{r+1} + V_{r+2}. Vertices two
    levels apart are adjacent when their colors differ; each of the k(r+2) moves must
    raise the level sum by exactly two.
    """
    return _clique_reconfig(g, 'TJ', lambda low, high: low != high)


def cmc_to_ts_clique_reconfig(g: LayeredColoredGraph) -> ReductionOutput:
    """Sliding variant: v two levels below w is adjacent to w iff color(v) >= color(w)"""
    return _clique_reconfig(g, 'TS', lambda low, high: low >= high)


def transfer_cmc_to_clique_reconfig(g: LayeredColoredGraph, out: ReductionOutput,
                                    chosen: Sequence[int]) -> List[List[int]]:
    """Move color 1 up first, then color 2, and so on, two levels at a time"""
    sentinel = out.legend['sentinel']
    picked = set(chosen)
    at: Dict[Tuple[int, int], int] = dict(sentinel)
    for i in range(1, g.r + 1):
        for j in range(1, g.k + 1):
            at[(i, j)] = next(v for v in g.vertices_of(i, j) if v in picked)

    current = set(out.target.start)
    sequence = [sorted(current)]
    for i in range(-1, g.r + 1):
        for j in range(1, g.k + 1):
            current.discard(at[(i, j)])
            current.add(at[(i + 2, j)])
            sequence.append(sorted(current))
    return sequence


def potential(sequence: Sequence[Sequence[int]], levels: Sequence[int]) -> List[int]:
    """Level sum of every set along a reconfiguration sequence"""
    return [sum(levels[v] for v in s) for s in sequence]


def _complemented(inst: ReconfigurationInstance, rule: str) -> ReductionOutput:
    require_valid(inst)
    flip = {'clique': 'independent-set', 'independent-set': 'clique'}
    if inst.kind not in flip:
        raise ReductionError(f"complement does not map {inst.kind} reconfiguration")
    target = ReconfigurationInstance(inst.graph.complement(), flip[inst.kind], rule,
                                     inst.start, inst.target, inst.k, inst.T, inst.exact)
    return ReductionOutput(target, inst.k, {'edges': len(target.graph.edges)})


def reconfig_complement(inst: ReconfigurationInstance) -> ReductionOutput:
    """Clique and independent set reconfiguration swap under graph complement, same move rule"""
    return _complemented(inst, inst.rule)


def reconfig_complement_ts(inst: ReconfigurationInstance) -> ReductionOutput:
    """
    Complement with sliding moves. Sound for jumping clique gadgets, whose forward
    schedule only jumps between non-adjacent vertices.
    """
    if inst.kind != 'clique' or inst.rule != 'TJ':
        raise ReductionError("sliding complement expects a jumping clique reconfiguration instance")
    return _complemented(inst, 'TS')
