"""
Graph-shaped instances: simple graphs, path decompositions and the problems posed on them
(list coloring, pathwidth-bounded vertex problems, bandwidth)
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from core.config import VERTEX_PROBLEM_KINDS


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1"""
    n: int
    edges: Tuple[Edge, ...] = ()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> 'Graph':
        normalized = set()
        for u, v in edges:
            if u != v:
                normalized.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(normalized)))

    def diagnostics(self) -> List[str]:
        issues = []
        if self.n < 0:
            issues.append(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                issues.append(f"self-loop at {u}")
                continue
            if not (0 <= u < self.n and 0 <= v < self.n):
                issues.append(f"edge ({u},{v}) has an endpoint out of range [0,{self.n})")
                continue
            key = (min(u, v), max(u, v))
            if key in seen:
                issues.append(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
        return issues

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges if u != v)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbours = [set() for _ in range(self.n)]
        for u, v in self.edge_set:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v] | {v}

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return not any(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def is_dominating(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)
        return all(v in chosen or self.adjacency[v] & chosen for v in range(self.n))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edge_set)
        return g

    def complement(self) -> 'Graph':
        return Graph.from_edges(self.n, nx.complement(self.to_networkx()).edges())

    def components(self) -> List[List[int]]:
        return [sorted(c) for c in sorted(nx.connected_components(self.to_networkx()), key=min)]


@dataclass(frozen=True)
class PathDecomposition:
    bags: Tuple[FrozenSet[int], ...]

    @classmethod
    def from_bags(cls, bags: Iterable[Iterable[int]]) -> 'PathDecomposition':
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        if not self.bags:
            return -1
        return max(len(b) for b in self.bags) - 1

    def diagnostics(self, graph: Graph) -> List[str]:
        issues = []
        first_seen: Dict[int, int] = {}
        last_seen: Dict[int, int] = {}
        for idx, bag in enumerate(self.bags):
            for v in bag:
                if not 0 <= v < graph.n:
                    issues.append(f"bag {idx} holds vertex {v} out of range [0,{graph.n})")
                    continue
                first_seen.setdefault(v, idx)
                last_seen[v] = idx
        for v in range(graph.n):
            if v not in first_seen:
                issues.append(f"vertex {v} is in no bag")
        for v in sorted(first_seen):
            if any(v not in self.bags[i] for i in range(first_seen[v], last_seen[v] + 1)):
                issues.append(f"interval property violated for vertex {v}")
        for u, v in graph.edge_set:
            if not any(u in bag and v in bag for bag in self.bags):
                issues.append(f"edge ({u},{v}) is in no bag")
        return issues

    def bags_of(self, v: int) -> List[int]:
        return [i for i, bag in enumerate(self.bags) if v in bag]


def pd_width(pd: PathDecomposition, graph: Optional[Graph] = None) -> int:
    """Width of a path decomposition: largest bag size minus one"""
    if graph is not None:
        from core.errors import ValidationError
        issues = graph.diagnostics() + pd.diagnostics(graph)
        if issues:
            raise ValidationError(issues)
    return pd.width


def trivial_decomposition(graph: Graph) -> PathDecomposition:
    """Vertex-order decomposition: bag i is i plus every earlier vertex with a neighbour at or after i"""
    reach = [max([u for u in graph.adjacency[v] if u > v], default=v) for v in range(graph.n)]
    return PathDecomposition(tuple(
        frozenset(v for v in range(i + 1) if reach[v] >= i)
        for i in range(graph.n)
    ))


@dataclass(frozen=True)
class ListColoringInstance:
    KIND = 'list-coloring'

    graph: Graph
    pd: PathDecomposition
    lists: Tuple[FrozenSet[int], ...]
    precolored: Optional[Tuple[Optional[int], ...]] = None

    @property
    def parameter(self) -> int:
        return self.pd.width

    @property
    def palette(self) -> FrozenSet[int]:
        return frozenset().union(*self.lists) if self.lists else frozenset()

    def effective_lists(self) -> Tuple[FrozenSet[int], ...]:
        """Precolored vertices are pinned to their color"""
        if self.precolored is None:
            return self.lists
        return tuple(
            frozenset({p}) if p is not None else lst
            for lst, p in zip(self.lists, self.precolored)
        )

    def diagnostics(self) -> List[str]:
        issues = self.graph.diagnostics()
        if issues:
            return issues
        issues += self.pd.diagnostics(self.graph)
        if len(self.lists) != self.graph.n:
            issues.append(f"expected {self.graph.n} color lists, got {len(self.lists)}")
        for v, lst in enumerate(self.lists):
            if any(c < 1 for c in lst):
                issues.append(f"list of vertex {v} holds a color below 1")
        if self.precolored is not None:
            if len(self.precolored) != len(self.lists):
                issues.append("precoloring length differs from the vertex count")
            else:
                for v, (lst, p) in enumerate(zip(self.lists, self.precolored)):
                    if p is not None and p not in lst:
                        issues.append(f"precolor {p} of vertex {v} is not in its list")
        return issues


@dataclass(frozen=True)
class VertexProblemInstance:
    """Dominating set (at most K), independent set or clique (at least K) with a given path decomposition"""
    KIND = 'pathwidth-vertex-problem'

    graph: Graph
    pd: PathDecomposition
    problem: str
    K: int

    @property
    def parameter(self) -> int:
        return self.pd.width

    def diagnostics(self) -> List[str]:
        issues = self.graph.diagnostics()
        if issues:
            return issues
        issues += self.pd.diagnostics(self.graph)
        if self.problem not in VERTEX_PROBLEM_KINDS:
            issues.append(f"unknown vertex problem '{self.problem}'")
        if self.K < 0:
            issues.append(f"negative size bound {self.K}")
        return issues

    def satisfied_by(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)
        if self.problem == 'dominating-set':
            return len(chosen) <= self.K and self.graph.is_dominating(chosen)
        if self.problem == 'independent-set':
            return len(chosen) >= self.K and self.graph.is_independent(chosen)
        return len(chosen) >= self.K and self.graph.is_clique(chosen)


@dataclass(frozen=True)
class BandwidthInstance:
    KIND = 'bandwidth'

    graph: Graph
    k: int

    @property
    def parameter(self) -> int:
        return self.k

    def diagnostics(self) -> List[str]:
        issues = self.graph.diagnostics()
        if self.k < 0:
            issues.append(f"negative bandwidth bound {self.k}")
        return issues
