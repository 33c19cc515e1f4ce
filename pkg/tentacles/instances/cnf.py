"""
Chained weighted CNF instances

Junction clauses use DIMACS literals over 2q variables: 1..q address the left block X_i,
q+1..2q the right block X_{i+1}. The optional first/last formulas (F0 on X_1, F2 on X_r)
use 1..q. A partition splits every block into k groups shared by all blocks; with a
partition exactly one variable per group is true, otherwise exactly k per block.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb, prod
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

Clause = Tuple[int, ...]
ClauseList = Tuple[Clause, ...]


def canonical_clauses(clauses: Iterable[Iterable[int]]) -> ClauseList:
    return tuple(tuple(c) for c in clauses)


@dataclass(frozen=True)
class ChainedCnf:
    KIND = 'chained-cnf'

    r: int
    q: int
    k: int
    junctions: Tuple[ClauseList, ...] = ()
    first: Optional[ClauseList] = None
    last: Optional[ClauseList] = None
    partition: Optional[Tuple[Tuple[int, ...], ...]] = None
    positive: bool = False
    regular: bool = False

    @classmethod
    def regular_instance(cls, r: int, q: int, k: int, template: Iterable[Iterable[int]],
                         first: Optional[Iterable[Iterable[int]]] = None,
                         last: Optional[Iterable[Iterable[int]]] = None,
                         partition: Optional[Iterable[Iterable[int]]] = None,
                         positive: Optional[bool] = None) -> 'ChainedCnf':
        template = canonical_clauses(template)
        first = canonical_clauses(first) if first is not None else None
        last = canonical_clauses(last) if last is not None else None
        if positive is None:
            everything = list(template) + list(first or ()) + list(last or ())
            positive = all(lit > 0 for clause in everything for lit in clause)
        return cls(
            r=r, q=q, k=k,
            junctions=tuple(template for _ in range(max(r - 1, 0))),
            first=first, last=last,
            partition=tuple(tuple(g) for g in partition) if partition is not None else None,
            positive=positive, regular=True
        )

    @property
    def parameter(self) -> int:
        return self.k

    @property
    def template(self) -> ClauseList:
        return self.junctions[0] if self.junctions else ()

    def all_clause_lists(self) -> List[ClauseList]:
        return list(self.junctions) + [c for c in (self.first, self.last) if c is not None]

    def diagnostics(self) -> List[str]:
        issues = []
        if self.r < 1:
            issues.append(f"block count r={self.r} must be at least 1")
        if self.q < 0 or self.k < 0:
            issues.append("block size and true-count must be non-negative")
        if self.k > self.q:
            issues.append(f"true-count k={self.k} exceeds block size q={self.q}")
        if len(self.junctions) != max(self.r - 1, 0):
            issues.append(f"expected {max(self.r - 1, 0)} junction clause sets, got {len(self.junctions)}")
        for idx, clauses in enumerate(self.junctions):
            for clause in clauses:
                for lit in clause:
                    if lit == 0 or abs(lit) > 2 * self.q:
                        issues.append(f"junction {idx + 1} literal {lit} out of range [1,{2 * self.q}]")
        for name, clauses in (('first', self.first), ('last', self.last)):
            for clause in clauses or ():
                for lit in clause:
                    if lit == 0 or abs(lit) > self.q:
                        issues.append(f"{name} formula literal {lit} out of range [1,{self.q}]")
        if self.positive:
            for clauses in self.all_clause_lists():
                if any(lit < 0 for clause in clauses for lit in clause):
                    issues.append("positive-only flag set but a negated literal occurs")
                    break
        if self.regular and len(set(self.junctions)) > 1:
            issues.append("regular flag set but junction clause sets differ")
        if self.partition is not None:
            if len(self.partition) != self.k:
                issues.append(f"partition has {len(self.partition)} groups, expected k={self.k}")
            seen: Dict[int, int] = {}
            for gi, group in enumerate(self.partition):
                if not group:
                    issues.append(f"partition group {gi} is empty")
                for x in group:
                    if not 0 <= x < self.q:
                        issues.append(f"partition group {gi} holds index {x} out of range [0,{self.q})")
                    elif x in seen:
                        issues.append(f"variable {x} in partition groups {seen[x]} and {gi}")
                    else:
                        seen[x] = gi
            missing = [x for x in range(self.q) if x not in seen]
            if missing:
                issues.append(f"partition misses variables {missing}")
        return issues

    @cached_property
    def group_of(self) -> Dict[int, int]:
        if self.partition is None:
            return {}
        return {x: gi for gi, group in enumerate(self.partition) for x in group}

    def block_assignments(self) -> Iterator[FrozenSet[int]]:
        """Every admissible set of true variables of one block, deterministic order"""
        if self.partition is not None:
            for choice in product(*[sorted(g) for g in self.partition]):
                yield frozenset(choice)
        else:
            for choice in combinations(range(self.q), self.k):
                yield frozenset(choice)

    def block_assignment_count(self) -> int:
        if self.partition is not None:
            return prod(len(g) for g in self.partition)
        return comb(self.q, self.k)

    def block_admissible(self, block: FrozenSet[int]) -> bool:
        if any(not 0 <= x < self.q for x in block):
            return False
        if self.partition is not None:
            return all(len(block & set(g)) == 1 for g in self.partition)
        return len(block) == self.k

    @staticmethod
    def clause_satisfied(clause: Clause, left: FrozenSet[int], right: FrozenSet[int], q: int) -> bool:
        for lit in clause:
            var = abs(lit) - 1
            value = (var in left) if var < q else ((var - q) in right)
            if value == (lit > 0):
                return True
        return False

    def junction_satisfied(self, i: int, left: FrozenSet[int], right: FrozenSet[int]) -> bool:
        """Junction i (0-based) between block i and block i+1"""
        return all(self.clause_satisfied(c, left, right, self.q) for c in self.junctions[i])

    def first_satisfied(self, block: FrozenSet[int]) -> bool:
        return all(self.clause_satisfied(c, block, frozenset(), self.q) for c in self.first or ())

    def last_satisfied(self, block: FrozenSet[int]) -> bool:
        return all(self.clause_satisfied(c, block, frozenset(), self.q) for c in self.last or ())

    def satisfied_by(self, blocks: Sequence[FrozenSet[int]]) -> bool:
        if len(blocks) != self.r or not all(self.block_admissible(b) for b in blocks):
            return False
        if not self.first_satisfied(blocks[0]) or not self.last_satisfied(blocks[-1]):
            return False
        return all(self.junction_satisfied(i, blocks[i], blocks[i + 1]) for i in range(self.r - 1))
