"""
Timed reconfiguration of dominating sets, independent sets and cliques
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence

from core.config import RECONFIGURATION_KINDS, RECONFIGURATION_RULES
from tentacles.instances.graphs import Graph


@dataclass(frozen=True)
class ReconfigurationInstance:
    """
    Sequences S = S_1, ..., S_T = S' of feasible k-sets where consecutive sets differ by one
    token move. TS moves slide a token along an edge, TJ moves jump anywhere. With `exact`
    the sequence holds exactly T sets, otherwise at most T.
    """
    KIND = 'reconfiguration'

    graph: Graph
    kind: str
    rule: str
    start: FrozenSet[int]
    target: FrozenSet[int]
    k: int
    T: int
    exact: bool = False

    @property
    def parameter(self) -> int:
        return self.k

    def feasible(self, vertices: Iterable[int]) -> bool:
        chosen = frozenset(vertices)
        if len(chosen) != self.k or any(not 0 <= v < self.graph.n for v in chosen):
            return False
        if self.kind == 'dominating-set':
            return self.graph.is_dominating(chosen)
        if self.kind == 'independent-set':
            return self.graph.is_independent(chosen)
        return self.graph.is_clique(chosen)

    def diagnostics(self) -> List[str]:
        issues = self.graph.diagnostics()
        if issues:
            return issues
        if self.kind not in RECONFIGURATION_KINDS:
            issues.append(f"unknown reconfiguration kind '{self.kind}'")
            return issues
        if self.rule not in RECONFIGURATION_RULES:
            issues.append(f"unknown move rule '{self.rule}'")
        if self.T < 1:
            issues.append(f"sequence length T={self.T} must be at least 1")
        for name, vs in (('start', self.start), ('target', self.target)):
            if len(vs) != self.k:
                issues.append(f"{name} set has {len(vs)} vertices, expected k={self.k}")
            elif not self.feasible(vs):
                issues.append(f"{name} set is not a {self.kind}")
        return issues

    def legal_move(self, before: FrozenSet[int], after: FrozenSet[int]) -> bool:
        removed, added = before - after, after - before
        if len(removed) != 1 or len(added) != 1:
            return False
        if self.rule == 'TJ':
            return True
        (u,), (v,) = removed, added
        return self.graph.has_edge(u, v)

    def is_sequence(self, sequence: Sequence[Iterable[int]]) -> bool:
        sets = [frozenset(s) for s in sequence]
        if not sets or sets[0] != self.start or sets[-1] != self.target:
            return False
        if len(sets) > self.T or (self.exact and len(sets) != self.T):
            return False
        if not all(self.feasible(s) for s in sets):
            return False
        return all(self.legal_move(a, b) for a, b in zip(sets, sets[1:]))
