"""
Longest common subsequence solver
"""

from itertools import combinations
from math import prod
from typing import Optional, Tuple

import numpy as np

from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes


def _exhaustive(inst: LcsInstance, budget: Budget) -> Optional[str]:
    shortest = min(inst.strings, key=len)
    if inst.m > len(shortest):
        return None
    for picks in combinations(range(len(shortest)), inst.m):
        budget.spend()
        candidate = ''.join(shortest[i] for i in picks)
        if inst.is_common_subsequence(candidate):
            return candidate
    return None


def lcs_table(strings: Tuple[str, ...], budget: Budget) -> np.ndarray:
    """k-dimensional table; entry at (i_1, ..., i_k) is the LCS length of the prefixes"""
    shape = tuple(len(s) + 1 for s in strings)
    budget.require(prod(shape))
    table = np.zeros(shape, dtype=np.int64)
    for idx in np.ndindex(*shape):
        if 0 in idx:
            continue
        budget.spend()
        chars = {s[i - 1] for s, i in zip(strings, idx)}
        if len(chars) == 1:
            table[idx] = table[tuple(i - 1 for i in idx)] + 1
        else:
            table[idx] = max(table[idx[:d] + (idx[d] - 1,) + idx[d + 1:]] for d in range(len(idx)))
    return table


def _dynamic(inst: LcsInstance, budget: Budget) -> Optional[str]:
    table = lcs_table(inst.strings, budget)
    idx = tuple(len(s) for s in inst.strings)
    if table[idx] < inst.m:
        return None
    picked = []
    while 0 not in idx:
        chars = {s[i - 1] for s, i in zip(inst.strings, idx)}
        if len(chars) == 1:
            picked.append(chars.pop())
            idx = tuple(i - 1 for i in idx)
            continue
        idx = next(step for step in (idx[:d] + (idx[d] - 1,) + idx[d + 1:] for d in range(len(idx)))
                   if table[step] == table[idx])
    return ''.join(reversed(picked))


def solve_lcs(inst: LcsInstance, mode=SolveMode.STRUCTURED, budget: Optional[int] = None) -> Answer:
    require_valid(inst)
    mode = as_mode(mode)
    steps = Budget('lcs', budget)
    found = _exhaustive(inst, steps) if mode is SolveMode.EXHAUSTIVE else _dynamic(inst, steps)
    return yes(found, mode) if found is not None else no(mode)
