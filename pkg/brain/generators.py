"""
INSTANCE GENERATORS
Exhaustive enumeration of tiny instances and seeded random instances for every kind

Enumerations are deterministic and duplicate-free; every emitted instance passes
validation. A stream that would hold more than `limit` instances raises ResourceError
before anything is returned.
"""

import logging
from itertools import combinations, product
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from core.config import BASE_SEED, DEFAULT_BUDGET
from core.errors import ResourceError, UnknownIdError
from tentacles.instances.automata import CellularAutomaton, Dfa, DfaCollection
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.counters import Nnccm
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.graphs import (BandwidthInstance, Graph, ListColoringInstance,
                                        VertexProblemInstance, trivial_decomposition)
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import validate

logger = logging.getLogger(__name__)


# ============================================================================
# ENUMERATION
# ============================================================================

def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def _subsets(items: List[Any], max_size: Optional[int] = None) -> Iterator[Tuple[Any, ...]]:
    top = len(items) if max_size is None else min(max_size, len(items))
    for size in range(top + 1):
        yield from combinations(items, size)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) graphs on vertices 0..n-1"""
    for edges in _subsets(_pairs(n)):
        yield Graph.from_edges(n, edges)


def split_groups(q: int, k: int) -> List[Tuple[int, ...]]:
    """Contiguous split of 0..q-1 into k groups, sizes differing by at most one"""
    base, extra = divmod(q, k)
    groups, start = [], 0
    for g in range(k):
        size = base + (1 if g < extra else 0)
        groups.append(tuple(range(start, start + size)))
        start += size
    return groups


def clause_pool(q: int, literals: int, positive: bool) -> List[Tuple[int, ...]]:
    """Every clause of 1..literals distinct variables over 2q junction variables"""
    pool = []
    for size in range(1, literals + 1):
        for variables in combinations(range(1, 2 * q + 1), size):
            for signs in product(*[(1,) if positive else (1, -1) for _ in variables]):
                pool.append(tuple(s * v for s, v in zip(signs, variables)))
    return pool


def _enumerate_chained_cnf(r: int = 2, q: int = 2, k: int = 1, clauses: int = 1, literals: int = 2,
                           positive: bool = False, partitioned: bool = True,
                           boundary: bool = False) -> Iterator[ChainedCnf]:
    partition = split_groups(q, k) if partitioned else None
    boundaries = [None] + [((lit,),) for v in range(1, q + 1) for lit in ((v,) if positive else (v, -v))]
    for template in _subsets(clause_pool(q, literals, positive), clauses):
        for first, last in product(boundaries if boundary else [None], repeat=2):
            yield ChainedCnf.regular_instance(r, q, k, template, first=first, last=last, partition=partition)


def _enumerate_cellular_automaton(states: int = 3, q: int = 3, t: int = 1, acceptance: str = 'at-least-one',
                                  max_transitions: Optional[int] = None) -> Iterator[CellularAutomaton]:
    """Boundary states 0 (left) and 1 (right); only transitions a run can read are enumerated"""
    interior = list(range(2, states))
    relevant = [
        (x, s, y, z)
        for x in [0] + interior for s in interior for y in [1] + interior for z in interior
    ]
    for initial in product(interior, repeat=q - 2):
        for transitions in _subsets(relevant, max_transitions):
            for accepting in _subsets(list(range(states))):
                yield CellularAutomaton(states, 0, 1, transitions, frozenset(accepting),
                                        (0,) + initial + (1,), t, acceptance)


def _enumerate_layered_graph(r: int = 2, k: int = 1, m: int = 1, variant: str = 'clique') -> Iterator[LayeredColoredGraph]:
    layer, color = [], []
    for i in range(1, r + 1):
        for j in range(1, k + 1):
            for _ in range(m):
                layer.append(i)
                color.append(j)
    n = len(layer)
    candidates = [
        (u, v) for u, v in _pairs(n)
        if abs(layer[u] - layer[v]) == 1 or (layer[u] == layer[v] and color[u] != color[v])
    ]
    for edges in _subsets(candidates):
        yield LayeredColoredGraph(Graph.from_edges(n, edges), tuple(layer), tuple(color), r, k, variant)


def _enumerate_nnccm(k: int = 1, n: int = 1, r: int = 1) -> Iterator[Nnccm]:
    checks = list(product(range(1, k + 1), range(1, k + 1), range(n + 1), range(n + 1)))
    for length in range(r + 1):
        for sequence in product(checks, repeat=length):
            yield Nnccm(k, n, tuple(sequence))


def _enumerate_list_coloring(n: int = 2, palette: int = 2, precolor: bool = False) -> Iterator[ListColoringInstance]:
    choices = [frozenset(s) for s in _subsets(list(range(1, palette + 1))) if s]
    for g in enumerate_graphs(n):
        pd = trivial_decomposition(g)
        for lists in product(choices, repeat=n):
            if not precolor:
                yield ListColoringInstance(g, pd, tuple(lists))
                continue
            for pins in product(*[[None] + sorted(lst) for lst in lists]):
                yield ListColoringInstance(g, pd, tuple(lists), tuple(pins))


def _enumerate_vertex_problem(n: int = 3, problem: str = 'clique') -> Iterator[VertexProblemInstance]:
    for g in enumerate_graphs(n):
        pd = trivial_decomposition(g)
        for K in range(n + 1):
            yield VertexProblemInstance(g, pd, problem, K)


def _enumerate_lcs(strings: int = 2, alphabet: int = 2, length: int = 2) -> Iterator[LcsInstance]:
    symbols = 'abcdefghijklmnopqrstuvwxyz'[:alphabet]
    words = [''.join(w) for size in range(length + 1) for w in product(symbols, repeat=size)]
    for chosen in product(words, repeat=strings):
        for m in range(length + 2):
            yield LcsInstance(tuple(chosen), m)


def _enumerate_dfa_collection(automata: int = 1, states: int = 2, alphabet: int = 2,
                              acyclic: bool = False) -> Iterator[DfaCollection]:
    symbols = tuple('abcdefghijklmnopqrstuvwxyz'[:alphabet])
    singles = []
    for table in product(range(states), repeat=states * alphabet):
        delta = tuple(tuple(table[s * alphabet:(s + 1) * alphabet]) for s in range(states))
        for accepting in _subsets(list(range(states))):
            singles.append(Dfa(states, delta, 0, frozenset(accepting)))
    for count in range(1, automata + 1):
        for chosen in combinations(singles, count):
            d = DfaCollection(symbols, chosen, acyclic)
            if not acyclic or not validate(d):
                yield d


def _enumerate_reconfiguration(n: int = 3, kind: str = 'independent-set', rule: str = 'TJ', k: int = 1,
                               max_T: int = 3, exact: bool = False) -> Iterator[ReconfigurationInstance]:
    for g in enumerate_graphs(n):
        template = ReconfigurationInstance(g, kind, rule, frozenset(), frozenset(), k, 1)
        feasible = [frozenset(s) for s in combinations(range(n), k) if template.feasible(s)]
        for start, target in product(feasible, repeat=2):
            for T in range(1, max_T + 1):
                yield ReconfigurationInstance(g, kind, rule, start, target, k, T, exact)


def _enumerate_scheduling(tasks: int = 3, machines: int = 2, deadline: int = 3) -> Iterator[SchedulingInstance]:
    for prec in _subsets(_pairs(tasks)):
        for K in range(1, machines + 1):
            for D in range(1, deadline + 1):
                yield SchedulingInstance(tasks, prec, K, D)


def _enumerate_emulation(n: int = 3, c: int = 2) -> Iterator[WeightedPathEmulationInstance]:
    for weights in product(range(1, c + 1), repeat=n):
        for m in range(1, n + 1):
            yield WeightedPathEmulationInstance(n, m, c, weights)


def _enumerate_bandwidth(n: int = 3) -> Iterator[BandwidthInstance]:
    for g in enumerate_graphs(n):
        for k in range(max(n, 1)):
            yield BandwidthInstance(g, k)


ENUMERATORS: Dict[str, Callable[..., Iterator[Any]]] = {
    'graph': lambda n=3: enumerate_graphs(n),
    'chained-cnf': _enumerate_chained_cnf,
    'cellular-automaton': _enumerate_cellular_automaton,
    'layered-graph': _enumerate_layered_graph,
    'nnccm': _enumerate_nnccm,
    'list-coloring': _enumerate_list_coloring,
    'pathwidth-vertex-problem': _enumerate_vertex_problem,
    'lcs': _enumerate_lcs,
    'dfa-collection': _enumerate_dfa_collection,
    'reconfiguration': _enumerate_reconfiguration,
    'scheduling': _enumerate_scheduling,
    'uniform-emulation': _enumerate_emulation,
    'bandwidth': _enumerate_bandwidth,
}


def enumerate_instances(kind: str, bounds: Optional[Dict[str, Any]] = None,
                        limit: Optional[int] = None) -> List[Any]:
    """Every instance of `kind` within `bounds`, in a fixed order"""
    if kind not in ENUMERATORS:
        raise UnknownIdError('instance kind', kind, sorted(ENUMERATORS))
    limit = DEFAULT_BUDGET if limit is None else limit
    out = []
    for instance in ENUMERATORS[kind](**(bounds or {})):
        out.append(instance)
        if len(out) > limit:
            raise ResourceError(f'enumerate {kind}', limit)
    logger.debug(f"enumerated {len(out)} {kind} instances within {bounds}")
    return out


# ============================================================================
# RANDOM INSTANCES
# ============================================================================

def _random_graph(rng: np.random.Generator, n: int = 6, density: float = 0.4) -> Graph:
    return Graph.from_edges(n, [p for p in _pairs(n) if rng.random() < density])


def _random_layered_graph(rng, r: int = 3, k: int = 2, m: int = 2, density: float = 0.5,
                          variant: str = 'clique') -> LayeredColoredGraph:
    sizes = rng.integers(1, m + 1, size=(r, k))
    layer, color = [], []
    for i in range(r):
        for j in range(k):
            layer += [i + 1] * int(sizes[i, j])
            color += [j + 1] * int(sizes[i, j])
    edges = [
        (u, v) for u, v in _pairs(len(layer))
        if (abs(layer[u] - layer[v]) == 1 or (layer[u] == layer[v] and color[u] != color[v]))
        and rng.random() < density
    ]
    return LayeredColoredGraph(Graph.from_edges(len(layer), edges), tuple(layer), tuple(color), r, k, variant)


def _random_chained_cnf(rng, r: int = 3, q: int = 4, k: int = 2, clauses: int = 3, literals: int = 3,
                        positive: bool = False, partitioned: bool = True) -> ChainedCnf:
    template = []
    for _ in range(clauses):
        size = int(rng.integers(1, literals + 1))
        variables = rng.choice(np.arange(1, 2 * q + 1), size=min(size, 2 * q), replace=False)
        signs = np.ones(len(variables), dtype=int) if positive else rng.choice([-1, 1], size=len(variables))
        template.append(tuple(int(s * v) for s, v in sorted(zip(signs, variables), key=lambda p: p[1])))
    return ChainedCnf.regular_instance(r, q, k, template, partition=split_groups(q, k) if partitioned else None)


def _random_nnccm(rng, k: int = 2, n: int = 2, r: int = 3) -> Nnccm:
    checks = tuple(
        (int(rng.integers(1, k + 1)), int(rng.integers(1, k + 1)),
         int(rng.integers(0, n + 1)), int(rng.integers(0, n + 1)))
        for _ in range(r)
    )
    return Nnccm(k, n, checks)


def _random_lcs(rng, strings: int = 3, length: int = 5, alphabet: int = 2, m: int = 2) -> LcsInstance:
    symbols = list('abcdefghijklmnopqrstuvwxyz'[:alphabet])
    return LcsInstance(tuple(''.join(rng.choice(symbols, size=length)) for _ in range(strings)), m)


def _random_cellular_automaton(rng, states: int = 4, q: int = 4, t: int = 2, density: float = 0.5,
                               acceptance: str = 'at-least-one') -> CellularAutomaton:
    interior = list(range(2, states))
    transitions = tuple(
        (x, s, y, z)
        for x in [0] + interior for s in interior for y in [1] + interior for z in interior
        if rng.random() < density
    )
    initial = (0,) + tuple(int(s) for s in rng.choice(interior, size=q - 2)) + (1,)
    accepting = frozenset(int(s) for s in range(states) if rng.random() < 0.5)
    return CellularAutomaton(states, 0, 1, transitions, accepting, initial, t, acceptance)


def _random_list_coloring(rng, n: int = 5, palette: int = 3, density: float = 0.4) -> ListColoringInstance:
    g = _random_graph(rng, n, density)
    lists = []
    for _ in range(n):
        lst = frozenset(int(c) for c in range(1, palette + 1) if rng.random() < 0.6)
        lists.append(lst or frozenset({int(rng.integers(1, palette + 1))}))
    return ListColoringInstance(g, trivial_decomposition(g), tuple(lists))


def _random_bandwidth(rng, n: int = 6, density: float = 0.4, k: int = 2) -> BandwidthInstance:
    return BandwidthInstance(_random_graph(rng, n, density), k)


def _random_dfa_collection(rng, automata: int = 2, states: int = 3, alphabet: int = 2) -> DfaCollection:
    symbols = tuple('abcdefghijklmnopqrstuvwxyz'[:alphabet])
    dfas = []
    for _ in range(automata):
        delta = tuple(tuple(int(x) for x in rng.integers(0, states, size=alphabet)) for _ in range(states))
        accepting = frozenset(int(s) for s in range(states) if rng.random() < 0.5)
        dfas.append(Dfa(states, delta, 0, accepting))
    return DfaCollection(symbols, tuple(dfas))


RANDOMIZERS: Dict[str, Callable[..., Any]] = {
    'graph': _random_graph,
    'layered-graph': _random_layered_graph,
    'chained-cnf': _random_chained_cnf,
    'nnccm': _random_nnccm,
    'lcs': _random_lcs,
    'cellular-automaton': _random_cellular_automaton,
    'list-coloring': _random_list_coloring,
    'bandwidth': _random_bandwidth,
    'dfa-collection': _random_dfa_collection,
}


def random_instance(kind: str, seed: Optional[int] = None, params: Optional[Dict[str, Any]] = None) -> Any:
    """Deterministic per (seed, params)"""
    if kind not in RANDOMIZERS:
        raise UnknownIdError('instance kind', kind, sorted(RANDOMIZERS))
    rng = np.random.default_rng(BASE_SEED if seed is None else seed)
    return RANDOMIZERS[kind](rng, **(params or {}))


def caterpillars(max_vertices: int, max_hair: int) -> Iterator[Graph]:
    """
    Caterpillars: a spine path with up to `max_hair` pendant hairs per spine vertex,
    at most `max_vertices` vertices in total. Spine vertices come first.
    """
    for spine in range(1, max_vertices + 1):
        for hairs in product(range(max_hair + 1), repeat=spine):
            n = spine + sum(hairs)
            if n > max_vertices:
                continue
            edges = [(i, i + 1) for i in range(spine - 1)]
            nxt = spine
            for i, count in enumerate(hairs):
                for _ in range(count):
                    edges.append((i, nxt))
                    nxt += 1
            yield Graph.from_edges(n, edges)
