"""
Unit-task scheduling with precedence constraints, plus partial order width
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from core.config import EXHAUSTIVE_WIDTH_LIMIT
from core.errors import ValidationError


def _precedence_graph(tasks: int, prec: Iterable[Tuple[int, int]]) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(tasks))
    g.add_edges_from(prec)
    return g


def _max_antichain_exhaustive(tasks: int, comparable: List[FrozenSet[int]]) -> int:
    best = 0

    def grow(candidates: List[int], size: int):
        nonlocal best
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = size
            return
        v, rest = candidates[0], candidates[1:]
        grow([u for u in rest if u not in comparable[v]], size + 1)
        grow(rest, size)

    grow(list(range(tasks)), 0)
    return best


def poset_width(tasks: int, prec: Iterable[Tuple[int, int]]) -> int:
    """
    Size of a maximum antichain of the transitive closure of prec.

    Small posets are searched exhaustively; larger ones use Dilworth's theorem:
    width = tasks - maximum matching of the split comparability graph.
    """
    g = _precedence_graph(tasks, prec)
    if not nx.is_directed_acyclic_graph(g):
        raise ValidationError(["not a partial order"])
    closure = nx.transitive_closure_dag(g)
    if tasks <= EXHAUSTIVE_WIDTH_LIMIT:
        comparable = [frozenset(closure.successors(v)) | frozenset(closure.predecessors(v))
                      for v in range(tasks)]
        return _max_antichain_exhaustive(tasks, comparable)
    split = nx.Graph()
    left = [('L', v) for v in range(tasks)]
    split.add_nodes_from(left)
    split.add_nodes_from(('R', v) for v in range(tasks))
    split.add_edges_from((('L', u), ('R', v)) for u, v in closure.edges())
    matching = nx.bipartite.hopcroft_karp_matching(split, top_nodes=left)
    return tasks - len(matching) // 2


@dataclass(frozen=True)
class SchedulingInstance:
    KIND = 'scheduling'

    tasks: int
    prec: Tuple[Tuple[int, int], ...]
    machines: int
    deadline: int

    def diagnostics(self) -> List[str]:
        issues = []
        if self.tasks < 0:
            issues.append(f"negative task count {self.tasks}")
        if self.machines < 1:
            issues.append(f"machine count K={self.machines} must be at least 1")
        if self.deadline < 0:
            issues.append(f"negative deadline {self.deadline}")
        for a, b in self.prec:
            if not (0 <= a < self.tasks and 0 <= b < self.tasks):
                issues.append(f"precedence ({a},{b}) names a task out of range")
            elif a == b:
                issues.append(f"precedence ({a},{a}) is reflexive")
        if not issues and not nx.is_directed_acyclic_graph(_precedence_graph(self.tasks, self.prec)):
            issues.append("not a partial order: precedence list has a cycle")
        return issues

    @cached_property
    def width(self) -> int:
        return poset_width(self.tasks, self.prec)

    @property
    def parameter(self) -> int:
        return self.machines + self.width

    @cached_property
    def predecessors(self) -> Tuple[FrozenSet[int], ...]:
        """Direct predecessors of each task"""
        preds = [set() for _ in range(self.tasks)]
        for a, b in self.prec:
            preds[b].add(a)
        return tuple(frozenset(p) for p in preds)

    @cached_property
    def topological_order(self) -> Tuple[int, ...]:
        return tuple(nx.lexicographical_topological_sort(_precedence_graph(self.tasks, self.prec)))

    def is_schedule(self, slots: Sequence[int]) -> bool:
        if len(slots) != self.tasks:
            return False
        if any(not 1 <= s <= self.deadline for s in slots):
            return False
        load = {}
        for s in slots:
            load[s] = load.get(s, 0) + 1
        if any(v > self.machines for v in load.values()):
            return False
        return all(slots[a] < slots[b] for a, b in self.prec)
