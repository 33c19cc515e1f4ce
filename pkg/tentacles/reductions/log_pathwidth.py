"""
Logarithmic pathwidth gadgets: chained CNF to dominating set and independent set with a
path decomposition of width O(k log n), and the weighted CNF encoding of bag-restricted cliques
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.graphs import Graph, PathDecomposition, VertexProblemInstance
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import (EdgeBuilder, Namer, ReductionOutput, ceil_log2,
                                       log_pathwidth_parameter)
from tentacles.reductions.cnf import cnf_positivize

logger = logging.getLogger(__name__)


class _BitEncodedCnf:
    """
    Partitioned regular instance with every group padded to 2^t variables and all literals
    positive. Variable (g, p) sits at index g*2^t + p and is encoded by the t bits of p.
    Padded groups get one clause per side demanding a real variable.
    """

    def __init__(self, c: ChainedCnf, what: str):
        require_valid(c)
        if c.partition is None or not c.regular:
            raise ReductionError(f"{what} needs a partitioned regular instance")
        if c.first or c.last:
            raise ReductionError(f"{what} cannot carry boundary formulas; fold them in with regularize-ii first")
        self.r, self.k = c.r, c.k
        self.t = ceil_log2(max(len(g) for g in c.partition)) if c.partition else 0
        self.size = 1 << self.t
        self.place = place = {a: (g, p) for g, group in enumerate(c.partition) for p, a in enumerate(group)}
        wide = self.k * self.size

        def moved(lit: int) -> int:
            side, a = divmod(abs(lit) - 1, c.q)
            g, p = place[a]
            idx = side * wide + g * self.size + p + 1
            return idx if lit > 0 else -idx

        template = [tuple(moved(lit) for lit in clause) for clause in c.template]
        for g, group in enumerate(c.partition):
            if len(group) < self.size:
                for side in (0, 1):
                    template.append(tuple(side * wide + g * self.size + p + 1 for p in range(len(group))))
        padded = ChainedCnf.regular_instance(
            r=c.r, q=wide, k=c.k, template=template,
            partition=[range(g * self.size, (g + 1) * self.size) for g in range(self.k)]
        )
        self.cnf = cnf_positivize(padded).target
        self.clauses = self.cnf.template

    def literal(self, i: int, lit: int) -> Tuple[int, int, int]:
        """(block, group, position) of a positive junction literal at junction i"""
        side, idx = divmod(lit - 1, self.cnf.q)
        g, p = divmod(idx, self.size)
        return i + side, g, p

    def bit(self, p: int, b: int) -> int:
        return (p >> b) & 1


def chained_sat_to_log_pw_domset(c: ChainedCnf) -> ReductionOutput:
    """
    Triangles encode one bit each; in every clause gadget, the variable vertex left
    undominated by the chosen bits must itself be taken to cover its group's z pair,
    and the clause vertex needs one taken variable vertex that satisfies it.
    """
    enc = _BitEncodedCnf(c, "dominating set gadget")
    r, k, t, size = enc.r, enc.k, enc.t, enc.size
    b = EdgeBuilder()
    for i in range(r):
        for g in range(k):
            for bit in range(t):
                for mark in (0, 1, 'free'):
                    b.add(('bit', i, g, bit, mark))
                b.join(('bit', i, g, bit, 0), ('bit', i, g, bit, 1))
                b.join(('bit', i, g, bit, 0), ('bit', i, g, bit, 'free'))
                b.join(('bit', i, g, bit, 1), ('bit', i, g, bit, 'free'))

    def choice_vertices(blocks) -> FrozenSet[int]:
        return frozenset(b.vertex[('bit', i, g, bit, mark)]
                         for i in blocks for g in range(k) for bit in range(t) for mark in (0, 1, 'free'))

    bags: List[FrozenSet[int]] = []
    for i in range(r - 1):
        scope = choice_vertices((i, i + 1))
        bags.append(scope)
        for ci, clause in enumerate(enc.clauses):
            satisfying = {enc.literal(i, lit) for lit in clause}
            fixed = {b.add(('clause', i, ci))}
            for blk in (i, i + 1):
                for g in range(k):
                    for z in (1, 2):
                        fixed.add(b.add(('z', i, ci, blk, g, z)))
            bags.append(scope | fixed)
            for blk in (i, i + 1):
                for g in range(k):
                    for p in range(size):
                        v = ('v', i, ci, blk, g, p)
                        b.add(v)
                        for bit in range(t):
                            b.join(v, ('bit', blk, g, bit, 1 - enc.bit(p, bit)))
                        b.join(v, ('z', i, ci, blk, g, 1))
                        b.join(v, ('z', i, ci, blk, g, 2))
                        if (blk, g, p) in satisfying:
                            b.join(v, ('clause', i, ci))
                        bags.append(scope | fixed | {b.vertex[v]})
    if r == 1:
        bags.append(choice_vertices((0,)))

    graph = Graph.from_edges(len(b.vertex), b.edge_list())
    pd = PathDecomposition(tuple(bags))
    clauses = len(enc.clauses)
    K = r * k * t + 2 * k * clauses * (r - 1)
    target = VertexProblemInstance(graph, pd, 'dominating-set', K)
    logger.debug(f"dominating set gadget: {graph.n} vertices, K={K}, width {pd.width}")
    return ReductionOutput(
        target, log_pathwidth_parameter(graph, pd),
        {'t': t, 'clauses': clauses, 'K': K, 'per_clause': 2 * k * (size + 2) + 1,
         'width_bound': 6 * k * t + 4 * k + 2, 'width': pd.width},
        {'ids': dict(b.vertex.ids), 'encoding': enc}
    )


def chained_sat_to_log_pw_indset(c: ChainedCnf) -> ReductionOutput:
    """
    Edges encode one bit each. A clause on l variables (l even, a literal repeated
    when odd) gets the ladder p_0..p_{l+1}, p'_1..p'_l with variable vertices v_j on
    the rungs; the gadget holds l+2 independent vertices iff some v_j is taken.
    """
    enc = _BitEncodedCnf(c, "independent set gadget")
    r, k, t = enc.r, enc.k, enc.t
    clauses = [clause + clause[:1] if len(clause) % 2 else clause for clause in enc.clauses]
    b = EdgeBuilder()
    for i in range(r):
        for g in range(k):
            for bit in range(t):
                b.join(('bit', i, g, bit, 0), ('bit', i, g, bit, 1))

    def choice_vertices(blocks) -> FrozenSet[int]:
        return frozenset(b.vertex[('bit', i, g, bit, mark)]
                         for i in blocks for g in range(k) for bit in range(t) for mark in (0, 1))

    bags: List[FrozenSet[int]] = []
    for i in range(r - 1):
        scope = choice_vertices((i, i + 1))
        bags.append(scope)
        for ci, clause in enumerate(clauses):
            l = len(clause)

            def p(j):
                return ('p', i, ci, j)

            def pp(j):
                return ('pp', i, ci, j)

            def v(j):
                return ('v', i, ci, j)

            for j in range(l + 2):
                b.add(p(j))
                if j > 0:
                    b.join(p(j - 1), p(j))
            for j in range(1, l + 1):
                b.join(p(j), pp(j))
                if j > 1:
                    b.join(pp(j - 1), pp(j))
                b.join(v(j), p(j))
                b.join(v(j), pp(j))
                blk, g, pos = enc.literal(i, clause[j - 1])
                for bit in range(t):
                    b.join(v(j), ('bit', blk, g, bit, 1 - enc.bit(pos, bit)))

            ids = b.vertex
            if l == 0:
                bags.append(scope | {ids[p(0)], ids[p(1)]})
                continue
            bags.append(scope | {ids[p(0)], ids[p(1)], ids[pp(1)], ids[v(1)]})
            for s in range(2, l + 1):
                bags.append(scope | {ids[x(j)] for x in (p, pp, v) for j in (s - 1, s)})
            bags.append(scope | {ids[p(l)], ids[pp(l)], ids[v(l)], ids[p(l + 1)]})
    if r == 1:
        bags.append(choice_vertices((0,)))

    graph = Graph.from_edges(len(b.vertex), b.edge_list())
    pd = PathDecomposition(tuple(bags))
    K = r * k * t + (r - 1) * sum(len(clause) + 2 for clause in clauses)
    target = VertexProblemInstance(graph, pd, 'independent-set', K)
    logger.debug(f"independent set gadget: {graph.n} vertices, K={K}, width {pd.width}")
    return ReductionOutput(
        target, log_pathwidth_parameter(graph, pd),
        {'t': t, 'clause_sizes': [len(clause) for clause in clauses], 'K': K,
         'width_bound': 4 * k * t + 6, 'width': pd.width},
        {'ids': dict(b.vertex.ids), 'encoding': enc, 'clauses': clauses}
    )


def _selected_positions(enc: _BitEncodedCnf, blocks: Sequence[Sequence[int]]) -> List[Dict[int, int]]:
    chosen = []
    for block in blocks:
        positions = {}
        for a in block:
            g, p = enc.place[a]
            positions[g] = p
        chosen.append(positions)
    return chosen


def _holds(positions: List[Dict[int, int]], where: Tuple[int, int, int]) -> bool:
    blk, g, p = where
    return positions[blk].get(g) == p


def _bit_choice(enc: _BitEncodedCnf, ids: Dict, positions: List[Dict[int, int]]) -> List[int]:
    return [ids[('bit', i, g, bit, enc.bit(p, bit))]
            for i, block in enumerate(positions) for g, p in block.items() for bit in range(enc.t)]


def transfer_sat_to_log_pw_domset(c: ChainedCnf, out: ReductionOutput, blocks: Sequence[Sequence[int]]) -> List[int]:
    enc: _BitEncodedCnf = out.legend['encoding']
    ids = out.legend['ids']
    positions = _selected_positions(enc, blocks)
    chosen = _bit_choice(enc, ids, positions)
    for i in range(enc.r - 1):
        for ci in range(len(enc.clauses)):
            for blk in (i, i + 1):
                for g, p in positions[blk].items():
                    chosen.append(ids[('v', i, ci, blk, g, p)])
    return sorted(chosen)


def transfer_sat_to_log_pw_indset(c: ChainedCnf, out: ReductionOutput, blocks: Sequence[Sequence[int]]) -> List[int]:
    enc: _BitEncodedCnf = out.legend['encoding']
    ids = out.legend['ids']
    positions = _selected_positions(enc, blocks)
    chosen = _bit_choice(enc, ids, positions)
    for i in range(enc.r - 1):
        for ci, clause in enumerate(out.legend['clauses']):
            l = len(clause)
            hit = next(j for j in range(1, l + 1) if _holds(positions, enc.literal(i, clause[j - 1])))
            picked = [('p', i, ci, 0), ('v', i, ci, hit), ('p', i, ci, l + 1)]
            picked += [('pp' if s % 2 else 'p', i, ci, s) for s in range(1, hit)]
            picked += [('pp' if (l + 1 - s) % 2 else 'p', i, ci, s) for s in range(hit + 1, l + 1)]
            chosen += [ids[label] for label in picked]
    return sorted(chosen)


def _chunks(bag: FrozenSet[int], s: int) -> List[Tuple[int, ...]]:
    vs = sorted(bag)
    return [tuple(vs[x:x + s]) for x in range(0, len(vs), s)]


def log_pw_clique_to_weighted_cnf(inst: VertexProblemInstance) -> ReductionOutput:
    """
    Single-block weighted CNF: b_i selects a bag, c[i, g, S'] a clique S' inside group g
    of that bag (groups of ceil(log2 n) vertices), t[j, q] counts q chosen vertices among
    the first j groups. Exactly 2k+2 variables are true in a model.
    """
    require_valid(inst)
    if inst.problem != 'clique':
        raise ReductionError("weighted CNF encoding applies to clique instances")
    g, K = inst.graph, inst.K
    s = max(1, ceil_log2(g.n))
    bags = list(inst.pd.bags) or [frozenset()]
    chunked = [_chunks(bag, s) for bag in bags]
    k = max(len(ch) for ch in chunked)

    var = Namer()
    for i in range(len(bags)):
        var(('b', i))
    groups: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for i, chunks in enumerate(chunked):
        for j in range(k):
            members = chunks[j] if j < len(chunks) else ()
            cliques = [sub for size in range(len(members) + 1) for sub in combinations(members, size)
                       if g.is_clique(sub)]
            groups[(i, j)] = cliques
            for sub in cliques:
                var(('c', i, j, sub))
    var(('t', 0, 0))
    for j in range(1, k + 1):
        for q in range(K + 1):
            var(('t', j, q))

    def pos(label) -> int:
        return var[label] + 1

    clauses: List[Tuple[int, ...]] = [tuple(pos(('b', i)) for i in range(len(bags)))]
    for (i, j), cliques in groups.items():
        for sub in cliques:
            clauses.append((pos(('b', i)), -pos(('c', i, j, sub))))
        clauses.append((-pos(('b', i)),) + tuple(pos(('c', i, j, sub)) for sub in cliques))
    for i in range(len(bags)):
        for j1 in range(k):
            for j2 in range(j1 + 1, k):
                for s1 in groups[(i, j1)]:
                    for s2 in groups[(i, j2)]:
                        if not g.is_clique(s1 + s2):
                            clauses.append((-pos(('c', i, j1, s1)), -pos(('c', i, j2, s2))))
    for j in range(1, k + 1):
        clauses.append(tuple(pos(('t', j, q)) for q in range(K + 1)))
        before = range(K + 1) if j > 1 else [0]
        for i in range(len(bags)):
            for sub in groups[(i, j - 1)]:
                for q in before:
                    for q2 in range(K + 1):
                        if q + len(sub) != q2:
                            clauses.append((-pos(('t', j - 1, q)), -pos(('c', i, j - 1, sub)), -pos(('t', j, q2))))
    clauses.append((pos(('t', 0, 0)),))
    if k == 0:
        clauses.append((pos(('t', 0, 0)),) if K == 0 else ())
    else:
        clauses.append((pos(('t', k, K)),))

    budget = 2 * k + 2
    target = ChainedCnf(r=1, q=len(var), k=budget, first=tuple(clauses))
    return ReductionOutput(
        target, budget,
        {'s': s, 'groups': k, 'true_budget': budget, 'variables': len(var)},
        {'chunked': chunked, 'ids': dict(var.ids)}
    )


def transfer_clique_to_weighted_cnf(inst: VertexProblemInstance, out: ReductionOutput,
                                    clique: Sequence[int]) -> List[List[int]]:
    ids, chunked = out.legend['ids'], out.legend['chunked']
    chosen = set(sorted(clique)[:inst.K])
    bags = list(inst.pd.bags) or [frozenset()]
    i = next(x for x, bag in enumerate(bags) if chosen <= bag)
    k = out.constants['groups']
    picked = [ids[('b', i)], ids[('t', 0, 0)]]
    running = 0
    for j in range(k):
        members = chunked[i][j] if j < len(chunked[i]) else ()
        sub = tuple(v for v in members if v in chosen)
        running += len(sub)
        picked += [ids[('c', i, j, sub)], ids[('t', j + 1, running)]]
    return [sorted(picked)]
