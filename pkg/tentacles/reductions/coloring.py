"""
List coloring gadgets: chained CNF to list coloring, list coloring to precoloring
extension, and list coloring to chained multicolored clique
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.graphs import Graph, ListColoringInstance, PathDecomposition
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import EdgeBuilder, ReductionOutput

logger = logging.getLogger(__name__)


def require_plain_template(c: ChainedCnf, what: str):
    """Positive, partitioned, regular and without boundary formulas"""
    require_valid(c)
    if c.partition is None:
        raise ReductionError(f"{what} needs a partitioned instance")
    if not c.regular:
        raise ReductionError(f"{what} needs a regular instance")
    if any(lit < 0 for clauses in c.all_clause_lists() for clause in clauses for lit in clause):
        raise ReductionError(f"{what} needs positive literals only")
    if c.first or c.last:
        raise ReductionError(f"{what} cannot carry boundary formulas; fold them in with regularize-ii first")


def chained_sat_to_list_coloring(c: ChainedCnf) -> ReductionOutput:
    require_plain_template(c, "list coloring gadget")
    r, Q, k = c.r, c.q, c.k

    def var_color(block: int, a: int) -> int:
        return block * Q + a + 1

    def group_color(block: int, g: int) -> int:
        return r * Q + block * k + g + 1

    b = EdgeBuilder()
    lists: Dict[int, FrozenSet[int]] = {}
    for i in range(r):
        for g, group in enumerate(c.partition):
            lists[b.add(('v', i, g))] = frozenset(var_color(i, a) for a in group)

    bags: List[FrozenSet[int]] = []
    for i, clauses in enumerate(c.junctions):
        scope = frozenset(b.vertex[('v', blk, g)] for blk in (i, i + 1) for g in range(k))
        bags.append(scope)
        for ci, clause in enumerate(clauses):
            z = b.add(('z', i, ci))
            lists[z] = frozenset(group_color(blk, g) for blk in (i, i + 1) for g in range(k))
            bags.append(scope | {z})
            present = {(i + (lit - 1) // Q, (lit - 1) % Q) for lit in clause}
            for blk in (i, i + 1):
                for a in range(Q):
                    if (blk, a) in present:
                        continue
                    g = c.group_of[a]
                    w = b.add(('w', i, ci, blk, a))
                    lists[w] = frozenset({var_color(blk, a), group_color(blk, g)})
                    b.join(('w', i, ci, blk, a), ('v', blk, g))
                    b.join(('w', i, ci, blk, a), ('z', i, ci))
                    bags.append(scope | {z, w})
    if r == 1:
        bags.append(frozenset(b.vertex[('v', 0, g)] for g in range(k)))

    graph = Graph.from_edges(len(b.vertex), b.edge_list())
    pd = PathDecomposition(tuple(bags))
    target = ListColoringInstance(graph, pd, tuple(lists[v] for v in range(graph.n)))
    logger.debug(f"list coloring gadget: {graph.n} vertices, width {pd.width}")
    return ReductionOutput(
        target, pd.width,
        {'colors': r * Q + r * k, 'width': pd.width, 'width_bound': 2 * k + 1},
        {'labels': list(b.vertex.labels)}
    )


def transfer_sat_to_list_coloring(c: ChainedCnf, out: ReductionOutput, blocks: Sequence[Sequence[int]]) -> List[int]:
    r, Q, k = c.r, c.q, c.k
    chosen = [{c.group_of[a]: a for a in block} for block in blocks]
    colors = []
    for label in out.legend['labels']:
        if label[0] == 'v':
            _, i, g = label
            colors.append(i * Q + chosen[i][g] + 1)
        elif label[0] == 'z':
            _, i, ci = label
            lit = next(lit for lit in c.junctions[i][ci]
                       if chosen[i + (lit - 1) // Q].get(c.group_of[(lit - 1) % Q]) == (lit - 1) % Q)
            blk, a = i + (lit - 1) // Q, (lit - 1) % Q
            colors.append(r * Q + blk * k + c.group_of[a] + 1)
        else:
            _, i, ci, blk, a = label
            g = c.group_of[a]
            colors.append(r * Q + blk * k + g + 1 if chosen[blk][g] == a else blk * Q + a + 1)
    return colors


def list_coloring_to_precoloring(inst: ListColoringInstance) -> ReductionOutput:
    """Every missing color of a vertex becomes a pendant neighbour precolored with it"""
    require_valid(inst)
    palette = inst.palette
    lists = inst.effective_lists()
    n = inst.graph.n
    pendants: Dict[int, List[Tuple[int, int]]] = {}
    precolors: List[Optional[int]] = [None] * n
    edges = list(inst.graph.edges)
    for v in range(n):
        for colour in sorted(palette - lists[v]):
            p = len(precolors)
            precolors.append(colour)
            pendants.setdefault(v, []).append((p, colour))
            edges.append((v, p))

    bags: List[FrozenSet[int]] = []
    placed = set()
    for bag in inst.pd.bags:
        bags.append(bag)
        for v in sorted(bag - placed):
            for p, _ in pendants.get(v, ()):
                bags.append(bag | {p})
        placed |= bag

    graph = Graph.from_edges(len(precolors), edges)
    target = ListColoringInstance(
        graph, PathDecomposition(tuple(bags)),
        tuple(palette for _ in range(graph.n)),
        tuple(precolors)
    )
    count = graph.n - n
    return ReductionOutput(target, target.pd.width, {'pendants': count, 'palette': len(palette)})


def transfer_precoloring(inst: ListColoringInstance, out: ReductionOutput, colors: Sequence[int]) -> List[int]:
    return list(colors) + list(out.target.precolored[inst.graph.n:])


def list_coloring_to_cmc(inst: ListColoringInstance) -> ReductionOutput:
    """
    Bag i becomes layer i. Every bag is padded to k+1 vertices with fresh isolated
    vertices whose list is {1}; w[i, v, c] picks color c for v and carries class
    f_i(v), the rank of v in its padded bag.
    """
    require_valid(inst)
    lists = list(inst.effective_lists())
    source_bags = list(inst.pd.bags) or [frozenset()]
    size = max(1, max(len(bag) for bag in source_bags))
    g = inst.graph
    fresh = g.n
    bags: List[Tuple[int, ...]] = []
    for bag in source_bags:
        padding = list(range(fresh, fresh + size - len(bag)))
        fresh += len(padding)
        lists += [frozenset({1})] * len(padding)
        bags.append(tuple(sorted(bag)) + tuple(padding))

    def conflict(v: int, a: int, w: int, b: int) -> bool:
        return a == b and v < g.n and w < g.n and g.has_edge(v, w)

    b = EdgeBuilder()
    layer: List[int] = []
    color: List[int] = []
    for i, bag in enumerate(bags, start=1):
        for rank, v in enumerate(bag, start=1):
            for col in sorted(lists[v]):
                b.add(('w', i, v, col))
                layer.append(i)
                color.append(rank)

    for i, bag in enumerate(bags, start=1):
        members = [(v, col) for v in bag for col in sorted(lists[v])]
        for x, (v, a) in enumerate(members):
            for w, c2 in members[x + 1:]:
                if v != w and not conflict(v, a, w, c2):
                    b.join(('w', i, v, a), ('w', i, w, c2))
        if i == len(bags):
            continue
        after = [(v, col) for v in bags[i] for col in sorted(lists[v])]
        for v, a in members:
            for w, c2 in after:
                if (v == w and a == c2) or (v != w and not conflict(v, a, w, c2)):
                    b.join(('w', i, v, a), ('w', i + 1, w, c2))

    graph = Graph.from_edges(len(b.vertex), b.edge_list())
    target = LayeredColoredGraph(graph, tuple(layer), tuple(color), len(bags), size)
    return ReductionOutput(
        target, size,
        {'layers': len(bags), 'k': size, 'padding': fresh - g.n},
        {'bags': bags, 'ids': dict(b.vertex.ids)}
    )


def transfer_list_coloring_to_cmc(inst: ListColoringInstance, out: ReductionOutput, colors: Sequence[int]) -> List[int]:
    ids = out.legend['ids']
    chosen = []
    for i, bag in enumerate(out.legend['bags'], start=1):
        for v in bag:
            chosen.append(ids[('w', i, v, colors[v] if v < inst.graph.n else 1)])
    return sorted(chosen)
