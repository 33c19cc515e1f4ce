"""
Shared solver plumbing: solve modes, answers and step budgets
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from core.config import DEFAULT_BUDGET
from core.errors import ResourceError
from tentacles.instances.codec import jsonable


class SolveMode(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    STRUCTURED = 'structured'


def as_mode(mode) -> SolveMode:
    return mode if isinstance(mode, SolveMode) else SolveMode(str(mode))


@dataclass(frozen=True)
class Answer:
    decision: bool
    certificate: Any = None
    mode: str = ''

    def to_document(self) -> Dict[str, Any]:
        return {'decision': self.decision, 'certificate': jsonable(self.certificate)}


def yes(certificate: Any, mode) -> Answer:
    return Answer(True, certificate, as_mode(mode).value)


def no(mode) -> Answer:
    return Answer(False, None, as_mode(mode).value)


class Budget:
    """Counts elementary search steps and fails loudly once the limit is passed"""

    def __init__(self, solver: str, limit: Optional[int] = None):
        self.solver = solver
        self.limit = DEFAULT_BUDGET if limit is None else limit
        self.used = 0

    def spend(self, steps: int = 1):
        self.used += steps
        if self.used > self.limit:
            raise ResourceError(self.solver, self.limit)

    def require(self, estimate: int):
        """Refuse up front when a search space is known to exceed the limit"""
        if estimate > self.limit:
            raise ResourceError(self.solver, self.limit)
