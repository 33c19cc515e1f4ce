"""
Non-deterministic non-decreasing checking counter machines (NNCCM)
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

Check = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Nnccm:
    """
    k counters start at 0 and may only increase, never beyond n. Before check
    (c1, c2, r1, r2) the counters move freely upwards; the check rejects when
    counter c1 equals r1 and counter c2 equals r2 at the same time.
    """
    KIND = 'nnccm'

    k: int
    n: int
    checks: Tuple[Check, ...] = ()

    @property
    def parameter(self) -> int:
        return self.k

    def diagnostics(self) -> List[str]:
        issues = []
        if self.k < 1:
            issues.append(f"counter count k={self.k} must be at least 1")
        if self.n < 0:
            issues.append(f"counter ceiling n={self.n} must be non-negative")
        for idx, check in enumerate(self.checks):
            if len(check) != 4:
                issues.append(f"check {idx} is not a 4-tuple")
                continue
            c1, c2, r1, r2 = check
            if not (1 <= c1 <= self.k and 1 <= c2 <= self.k):
                issues.append(f"check {idx} names a counter outside [1,{self.k}]")
            if not (0 <= r1 <= self.n and 0 <= r2 <= self.n):
                issues.append(f"check {idx} tests a value outside [0,{self.n}]")
        return issues

    @staticmethod
    def passes(check: Check, vector: Sequence[int]) -> bool:
        c1, c2, r1, r2 = check
        return not (vector[c1 - 1] == r1 and vector[c2 - 1] == r2)

    def accepts_trace(self, trace: Sequence[Sequence[int]]) -> bool:
        """trace[i] holds the counter values right before check i"""
        if len(trace) != len(self.checks):
            return False
        previous = [0] * self.k
        for check, vector in zip(self.checks, trace):
            if len(vector) != self.k:
                return False
            if any(v < p or v > self.n for v, p in zip(vector, previous)):
                return False
            if not self.passes(check, vector):
                return False
            previous = list(vector)
        return True
