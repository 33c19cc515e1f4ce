"""
DFA intersection non-emptiness solver
"""

from collections import deque
from itertools import product
from math import prod
from typing import Dict, List, Optional, Tuple

from tentacles.instances.automata import DfaCollection
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes

Joint = Tuple[int, ...]


def length_bound(d: DfaCollection) -> int:
    """
    Some common word, if any, is no longer than this. In acyclic collections every
    automaton sits in a sink after its longest path; otherwise a shortest word never
    repeats a joint state.
    """
    if not d.automata:
        return 0
    if d.acyclic:
        return max(dfa.longest_path() for dfa in d.automata)
    return prod(dfa.states for dfa in d.automata) - 1


def _exhaustive(d: DfaCollection, budget: Budget) -> Optional[List[int]]:
    sigma = range(len(d.alphabet))
    for length in range(length_bound(d) + 1):
        for word in product(sigma, repeat=length):
            budget.spend()
            if d.accepts_all(word):
                return list(word)
    return None


def _product_search(d: DfaCollection, budget: Budget) -> Optional[List[int]]:
    """Breadth-first reachability in the product automaton"""
    start: Joint = tuple(dfa.start for dfa in d.automata)
    parents: Dict[Joint, Optional[Tuple[Joint, int]]] = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        joint = queue.popleft()
        if all(s in dfa.accepting for s, dfa in zip(joint, d.automata)):
            goal = joint
            break
        for a in range(len(d.alphabet)):
            budget.spend()
            nxt = tuple(dfa.delta[s][a] for s, dfa in zip(joint, d.automata))
            if nxt not in parents:
                parents[nxt] = (joint, a)
                queue.append(nxt)
    if goal is None:
        return None
    word: List[int] = []
    while parents[goal] is not None:
        goal, a = parents[goal]
        word.append(a)
    return word[::-1]


def solve_fsa_intersection(d: DfaCollection, mode=SolveMode.STRUCTURED,
                           budget: Optional[int] = None) -> Answer:
    require_valid(d)
    mode = as_mode(mode)
    steps = Budget('dfa-collection', budget)
    word = _exhaustive(d, steps) if mode is SolveMode.EXHAUSTIVE else _product_search(d, steps)
    return yes([d.alphabet[a] for a in word], mode) if word is not None else no(mode)
