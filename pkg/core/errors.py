"""
Exception hierarchy shared by instances, solvers, reductions and the harness
"""

from typing import List, Optional


class XnlpError(Exception):
    pass


class ValidationError(XnlpError):

    def __init__(self, diagnostics: List[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics) or "invalid instance")


class ResourceError(XnlpError):

    def __init__(self, solver: str, budget: int):
        self.solver = solver
        self.budget = budget
        super().__init__(f"{solver}: budget of {budget} steps exhausted")


class ReductionError(XnlpError):
    pass


class CertificateShapeError(XnlpError):
    pass


class UnknownIdError(XnlpError):

    def __init__(self, what: str, name: str, known: Optional[List[str]] = None):
        self.name = name
        message = f"unknown {what} '{name}'"
        if known:
            message += f" (known: {', '.join(sorted(known))})"
        super().__init__(message)


class ParseError(XnlpError):
    pass
