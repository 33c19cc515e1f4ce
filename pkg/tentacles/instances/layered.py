"""
Layered, colored graphs: home of chained multicolored clique / independent set instances
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

from tentacles.instances.graphs import Graph


@dataclass(frozen=True)
class LayeredColoredGraph:
    KIND = 'layered-graph'

    graph: Graph
    layer: Tuple[int, ...]
    color: Tuple[int, ...]
    r: int
    k: int
    variant: str = 'clique'

    @property
    def parameter(self) -> int:
        return self.k

    def diagnostics(self) -> List[str]:
        issues = self.graph.diagnostics()
        if issues:
            return issues
        if self.variant not in ('clique', 'independent-set'):
            issues.append(f"unknown variant '{self.variant}'")
        if self.r < 1 or self.k < 1:
            issues.append(f"need at least one layer and one color, got r={self.r}, k={self.k}")
        if len(self.layer) != self.graph.n or len(self.color) != self.graph.n:
            issues.append("layer and color maps must cover every vertex")
            return issues
        for v in range(self.graph.n):
            if not 1 <= self.layer[v] <= self.r:
                issues.append(f"layer {self.layer[v]} of vertex {v} outside [1,{self.r}]")
            if not 1 <= self.color[v] <= self.k:
                issues.append(f"color {self.color[v]} of vertex {v} outside [1,{self.k}]")
        for u, v in self.graph.edge_set:
            if abs(self.layer[u] - self.layer[v]) > 1:
                issues.append(f"edge ({u},{v}) joins layers {self.layer[u]} and {self.layer[v]}")
        return issues

    @cached_property
    def classes(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        """(layer, color) -> vertices, in vertex order"""
        out: Dict[Tuple[int, int], List[int]] = {}
        for v in range(self.graph.n):
            out.setdefault((self.layer[v], self.color[v]), []).append(v)
        return {key: tuple(vs) for key, vs in out.items()}

    def vertices_of(self, layer: int, color: int) -> Tuple[int, ...]:
        return self.classes.get((layer, color), ())

    def layer_vertices(self, layer: int) -> List[int]:
        return [v for v in range(self.graph.n) if self.layer[v] == layer]

    def compatible(self, vertices: Iterable[int]) -> bool:
        """Clique (or independent set, per variant) on the given vertices"""
        if self.variant == 'clique':
            return self.graph.is_clique(vertices)
        return self.graph.is_independent(vertices)

    def is_solution(self, chosen: Iterable[int]) -> bool:
        chosen = set(chosen)
        for i in range(1, self.r + 1):
            for j in range(1, self.k + 1):
                if len(chosen & set(self.vertices_of(i, j))) != 1:
                    return False
        if any(not 0 <= v < self.graph.n for v in chosen):
            return False
        if self.r == 1:
            return self.compatible(chosen)
        for i in range(1, self.r):
            if not self.compatible(v for v in chosen if self.layer[v] in (i, i + 1)):
                return False
        return True

    def with_variant(self, variant: str) -> 'LayeredColoredGraph':
        return LayeredColoredGraph(self.graph, self.layer, self.color, self.r, self.k, variant)
