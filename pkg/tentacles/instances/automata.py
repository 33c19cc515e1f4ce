"""
Automata instances: timed nondeterministic cellular automata and collections of DFAs
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from core.config import CA_ACCEPTANCE

Transition = Tuple[int, int, int, int]
Configuration = Tuple[int, ...]


@dataclass(frozen=True)
class CellularAutomaton:
    """
    Linear cellular automaton on q cells with fixed boundary states.

    Cells 2..q-1 read (left, own, right) and move to any s4 with (s1,s2,s3,s4) in the
    transition set; a cell without such a tuple halts the machine (reject).
    """
    KIND = 'cellular-automaton'

    states: int
    left: int
    right: int
    transitions: Tuple[Transition, ...]
    accepting: FrozenSet[int]
    initial: Configuration
    t: int
    acceptance: str = 'at-least-one'

    @property
    def q(self) -> int:
        return len(self.initial)

    @property
    def parameter(self) -> int:
        return self.q

    @property
    def boundary(self) -> FrozenSet[int]:
        return frozenset({self.left, self.right})

    def interior_states(self) -> List[int]:
        return [s for s in range(self.states) if s not in self.boundary]

    def diagnostics(self) -> List[str]:
        issues = []
        in_range = lambda s: 0 <= s < self.states
        if not in_range(self.left) or not in_range(self.right):
            issues.append("boundary states out of range")
        if self.left == self.right:
            issues.append("left and right boundary states coincide")
        if self.acceptance not in CA_ACCEPTANCE:
            issues.append(f"unknown acceptance flavor '{self.acceptance}'")
        if self.t < 1:
            issues.append(f"time bound t={self.t} must be at least 1")
        if self.q < 2:
            issues.append(f"configuration needs at least 2 cells, got {self.q}")
        else:
            if self.initial[0] != self.left:
                issues.append("cell 1 must hold the left boundary state")
            if self.initial[-1] != self.right:
                issues.append(f"cell {self.q} must hold the right boundary state")
            for i, s in enumerate(self.initial[1:-1], start=2):
                if not in_range(s):
                    issues.append(f"cell {i} state {s} out of range")
                elif s in self.boundary:
                    issues.append(f"interior cell {i} holds a boundary state")
        for tr in self.transitions:
            if len(tr) != 4 or not all(in_range(s) for s in tr):
                issues.append(f"transition {tr} malformed or out of range")
            elif tr[1] in self.boundary or tr[3] in self.boundary:
                issues.append(f"transition {tr} reads or writes a boundary state in the cell itself")
        for s in self.accepting:
            if not in_range(s):
                issues.append(f"accepting state {s} out of range")
        return issues

    @cached_property
    def successors(self) -> Dict[Tuple[int, int, int], Tuple[int, ...]]:
        table: Dict[Tuple[int, int, int], List[int]] = {}
        for s1, s2, s3, s4 in sorted(set(self.transitions)):
            table.setdefault((s1, s2, s3), []).append(s4)
        return {key: tuple(vals) for key, vals in table.items()}

    def cell_options(self, config: Configuration) -> Optional[List[Tuple[int, ...]]]:
        """Choices of next state for every interior cell, or None when the machine halts"""
        options = []
        for i in range(1, len(config) - 1):
            nxt = self.successors.get((config[i - 1], config[i], config[i + 1]))
            if not nxt:
                return None
            options.append(nxt)
        return options

    def final_accepts(self, config: Configuration) -> bool:
        if self.acceptance == 'non-halting':
            return True
        if self.acceptance == 'all':
            return all(s in self.accepting for s in config)
        return any(s in self.accepting for s in config)

    def is_run(self, run: Sequence[Sequence[int]]) -> bool:
        if len(run) != self.t + 1 or tuple(run[0]) != self.initial:
            return False
        for before, after in zip(run, run[1:]):
            if len(after) != self.q or after[0] != self.left or after[-1] != self.right:
                return False
            options = self.cell_options(tuple(before))
            if options is None:
                return False
            if any(after[i + 1] not in opts for i, opts in enumerate(options)):
                return False
        return self.final_accepts(tuple(run[-1]))


@dataclass(frozen=True)
class Dfa:
    states: int
    delta: Tuple[Tuple[int, ...], ...]
    start: int
    accepting: FrozenSet[int]

    def run(self, word: Sequence[int]) -> int:
        state = self.start
        for a in word:
            state = self.delta[state][a]
        return state

    def accepts(self, word: Sequence[int]) -> bool:
        return self.run(word) in self.accepting

    def is_sink(self, state: int) -> bool:
        return all(nxt == state for nxt in self.delta[state])

    def longest_path(self) -> int:
        """Longest path through non-loop transitions (acyclic automata only)"""
        g = nx.DiGraph()
        g.add_nodes_from(range(self.states))
        g.add_edges_from((u, v) for u in range(self.states) for v in self.delta[u] if u != v)
        return nx.dag_longest_path_length(g)


@dataclass(frozen=True)
class DfaCollection:
    KIND = 'dfa-collection'

    alphabet: Tuple[str, ...]
    automata: Tuple[Dfa, ...]
    acyclic: bool = False

    @property
    def parameter(self) -> int:
        return len(self.automata)

    def diagnostics(self) -> List[str]:
        issues = []
        if len(set(self.alphabet)) != len(self.alphabet):
            issues.append("alphabet symbols are not distinct")
        sigma = len(self.alphabet)
        for idx, dfa in enumerate(self.automata):
            if not 0 <= dfa.start < dfa.states:
                issues.append(f"automaton {idx}: start state out of range")
            if len(dfa.delta) != dfa.states:
                issues.append(f"automaton {idx}: transition table has {len(dfa.delta)} rows for {dfa.states} states")
                continue
            for s, row in enumerate(dfa.delta):
                if len(row) != sigma:
                    issues.append(f"automaton {idx}: transition function not total at state {s}")
                elif any(not 0 <= nxt < dfa.states for nxt in row):
                    issues.append(f"automaton {idx}: transition target out of range at state {s}")
            for s in dfa.accepting:
                if not 0 <= s < dfa.states:
                    issues.append(f"automaton {idx}: accepting state {s} out of range")
            if self.acyclic and not issues:
                issues += self._acyclic_issues(idx, dfa)
        return issues

    @staticmethod
    def _acyclic_issues(idx: int, dfa: Dfa) -> List[str]:
        issues = []
        g = nx.DiGraph()
        g.add_nodes_from(range(dfa.states))
        for u in range(dfa.states):
            for v in dfa.delta[u]:
                if u != v:
                    g.add_edge(u, v)
                elif not dfa.is_sink(u):
                    issues.append(f"automaton {idx}: self-loop on non-sink state {u}")
                    break
        if not nx.is_directed_acyclic_graph(g):
            issues.append(f"automaton {idx}: acyclic flag set but the transition graph has a cycle")
        return issues

    def encode(self, symbols: Sequence[str]) -> List[int]:
        index = {a: i for i, a in enumerate(self.alphabet)}
        return [index[a] for a in symbols]

    def accepts_all(self, word: Sequence[int]) -> bool:
        return all(d.accepts(word) for d in self.automata)
