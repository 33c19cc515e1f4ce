"""
Longest common subsequence instances
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple


def is_subsequence(s: Sequence[str], of: Sequence[str]) -> bool:
    it = iter(of)
    return all(ch in it for ch in s)


@dataclass(frozen=True)
class LcsInstance:
    KIND = 'lcs'

    strings: Tuple[str, ...]
    m: int

    @property
    def parameter(self) -> int:
        return len(self.strings)

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(sorted(set(''.join(self.strings))))

    def diagnostics(self) -> List[str]:
        issues = []
        if not self.strings:
            issues.append("at least one string is required")
        if self.m < 0:
            issues.append(f"target length m={self.m} must be non-negative")
        return issues

    def is_common_subsequence(self, s: Sequence[str]) -> bool:
        return len(s) >= self.m and all(is_subsequence(s, x) for x in self.strings)
