"""
Reduction outputs and the small helpers shared by the constructions
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Tuple

from tentacles.instances.codec import jsonable, to_document
from tentacles.instances.graphs import Graph, PathDecomposition


@dataclass(frozen=True)
class ReductionOutput:
    """
    Target instance, its parameter and the construction constants.

    `legend` maps gadget labels to target ids; certificate transfer reads it and
    it is not part of the serialized document.
    """
    target: Any
    new_parameter: int
    constants: Dict[str, Any] = field(default_factory=dict)
    legend: Dict[Hashable, Any] = field(default_factory=dict, compare=False, repr=False)

    def to_document(self) -> Dict[str, Any]:
        return {
            'target': to_document(self.target),
            'parameter': self.new_parameter,
            'constants': jsonable(self.constants),
        }


class Namer:
    """Hands out dense 0-based ids for gadget labels, in creation order"""

    def __init__(self):
        self.ids: Dict[Hashable, int] = {}
        self.labels: List[Hashable] = []

    def __call__(self, label: Hashable) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.labels)
            self.labels.append(label)
        return self.ids[label]

    def __getitem__(self, label: Hashable) -> int:
        return self.ids[label]

    def __contains__(self, label: Hashable) -> bool:
        return label in self.ids

    def __len__(self) -> int:
        return len(self.labels)


class EdgeBuilder:
    """Vertex namer plus an edge accumulator for graph gadgets"""

    def __init__(self):
        self.vertex = Namer()
        self.edges: set = set()

    def add(self, label: Hashable) -> int:
        return self.vertex(label)

    def join(self, a: Hashable, b: Hashable):
        u, v = self.vertex(a), self.vertex(b)
        if u != v:
            self.edges.add((min(u, v), max(u, v)))

    def edge_list(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.edges))


def ceil_log2(n: int) -> int:
    """Smallest t with 2^t >= n"""
    return max(n - 1, 0).bit_length()


def log_pathwidth_parameter(graph: Graph, pd: PathDecomposition) -> int:
    """Largest bag size in units of ceil(log2 n), rounded up"""
    unit = max(1, ceil_log2(graph.n))
    return -(-max((len(b) for b in pd.bags), default=0) // unit)
