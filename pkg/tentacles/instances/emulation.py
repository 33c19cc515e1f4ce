"""
Uniform emulation of weighted paths
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class WeightedPathEmulationInstance:
    KIND = 'uniform-emulation'

    n: int
    m: int
    c: int
    weights: Tuple[int, ...]

    @property
    def parameter(self) -> int:
        return self.c

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def diagnostics(self) -> List[str]:
        issues = []
        if self.n < 1 or self.m < 1 or self.c < 1:
            issues.append("n, m and c must be positive")
        if len(self.weights) != self.n:
            issues.append(f"expected {self.n} weights, got {len(self.weights)}")
        for i, w in enumerate(self.weights, start=1):
            if not 1 <= w <= self.c:
                issues.append(f"weight {w} of vertex {i} outside [1,{self.c}]")
        return issues

    def is_emulation(self, f: Sequence[int]) -> bool:
        """f maps source vertex i (1-based, f[i-1]) onto target vertex f(i) in [1,m]"""
        if len(f) != self.n or any(not 1 <= x <= self.m for x in f):
            return False
        if any(abs(a - b) > 1 for a, b in zip(f, f[1:])):
            return False
        load = [0] * (self.m + 1)
        for x, w in zip(f, self.weights):
            load[x] += w
        return all(load[j] == self.c for j in range(1, self.m + 1))
