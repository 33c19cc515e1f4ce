"""
Finite automata reductions: longest common subsequence to acyclic DFA intersection, and binary alphabets
"""

import logging
from typing import Dict, List, Sequence, Tuple

from tentacles.instances.automata import Dfa, DfaCollection
from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import Namer, ReductionOutput, ceil_log2

logger = logging.getLogger(__name__)


def length_automaton(sigma: int, m: int) -> Dfa:
    """States 0..m, every symbol advances one state, m loops and accepts"""
    delta = tuple(tuple(min(s + 1, m) for _ in range(sigma)) for s in range(m + 1))
    return Dfa(m + 1, delta, 0, frozenset([m]))


def subsequence_automaton(s: str, alphabet: Sequence[str]) -> Dfa:
    """
    State j means the word read so far is a subsequence of s[:j] and of no shorter prefix.
    A symbol moves to just past its next occurrence; state len(s)+1 rejects.
    """
    n = len(s)
    reject = n + 1
    delta = []
    for j in range(n + 1):
        row = []
        for a in alphabet:
            nxt = s.find(a, j)
            row.append(nxt + 1 if nxt >= 0 else reject)
        delta.append(tuple(row))
    delta.append(tuple(reject for _ in alphabet))
    return Dfa(n + 2, tuple(delta), 0, frozenset(range(n + 1)))


def lcs_to_acyclic_fsa(inst: LcsInstance) -> ReductionOutput:
    require_valid(inst)
    alphabet = inst.alphabet
    automata = [length_automaton(len(alphabet), inst.m)]
    automata += [subsequence_automaton(s, alphabet) for s in inst.strings]
    target = DfaCollection(alphabet, tuple(automata), acyclic=True)
    return ReductionOutput(
        target, len(automata),
        {'automata': len(automata), 'length_states': inst.m + 1,
         'subsequence_states': [len(s) + 2 for s in inst.strings]}
    )


def transfer_lcs_to_acyclic_fsa(inst: LcsInstance, out: ReductionOutput, s: str) -> List[str]:
    return list(s)


def symbol_codes(alphabet: Sequence[str]) -> Tuple[int, Dict[str, str]]:
    """Fixed-width binary codes, most significant bit first; width is at least one"""
    width = max(1, ceil_log2(len(alphabet)))
    return width, {a: format(i, f'0{width}b') for i, a in enumerate(alphabet)}


def _binarized(dfa: Dfa, sigma: int, width: int) -> Dfa:
    """
    Every non-sink state becomes the root of a complete binary decoding tree of the given
    depth; leaves jump to the root of the original successor, codes past the alphabet to a
    fresh rejecting sink. Sinks stay sinks.
    """
    nodes = Namer()
    for s in range(dfa.states):
        nodes(('root', s))
    for s in range(dfa.states):
        if dfa.is_sink(s):
            continue
        for depth in range(1, width):
            for prefix in range(1 << depth):
                nodes(('node', s, depth, prefix))
    reject = nodes('reject')

    delta: List[Tuple[int, int]] = [(0, 0)] * len(nodes)
    for label in nodes.labels:
        here = nodes[label]
        if label == 'reject':
            delta[here] = (reject, reject)
            continue
        s = label[1]
        depth, prefix = (0, 0) if label[0] == 'root' else label[2:]
        if dfa.is_sink(s):
            delta[here] = (here, here)
            continue
        row = []
        for bit in (0, 1):
            code = prefix * 2 + bit
            if depth + 1 < width:
                row.append(nodes[('node', s, depth + 1, code)])
            elif code < sigma:
                row.append(nodes[('root', dfa.delta[s][code])])
            else:
                row.append(reject)
        delta[here] = tuple(row)
    accepting = frozenset(nodes[('root', s)] for s in dfa.accepting)
    return Dfa(len(nodes), tuple(delta), nodes[('root', dfa.start)], accepting)


def fsa_binarize(d: DfaCollection) -> ReductionOutput:
    require_valid(d)
    width, _ = symbol_codes(d.alphabet)
    automata = tuple(_binarized(dfa, len(d.alphabet), width) for dfa in d.automata)
    target = DfaCollection(('0', '1'), automata, acyclic=d.acyclic)
    logger.debug(f"binarized {len(automata)} automata with code width {width}")
    return ReductionOutput(
        target, len(automata),
        {'code_width': width, 'padded_alphabet': 1 << width, 'alphabet': len(d.alphabet),
         'states': [dfa.states for dfa in automata]}
    )


def transfer_fsa_binarize(d: DfaCollection, out: ReductionOutput, word: Sequence[str]) -> List[str]:
    _, codes = symbol_codes(d.alphabet)
    return [bit for a in word for bit in codes[a]]
