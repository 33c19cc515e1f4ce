"""
Instance validation shared by solvers, reductions, the harness and the CLI
"""

from typing import Any, List, Optional

from core.errors import ValidationError
from tentacles.instances.graphs import Graph, PathDecomposition


def validate(instance: Any, graph: Optional[Graph] = None) -> List[str]:
    """Diagnostics naming every violated invariant; empty when the instance is well formed"""
    if isinstance(instance, PathDecomposition):
        if graph is None:
            covered = max((max(b) for b in instance.bags if b), default=-1) + 1
            graph = Graph(covered)
        return instance.diagnostics(graph)
    diagnostics = getattr(instance, 'diagnostics', None)
    if diagnostics is None:
        return [f"no validator for {type(instance).__name__}"]
    return diagnostics()


def require_valid(instance: Any, graph: Optional[Graph] = None):
    issues = validate(instance, graph)
    if issues:
        raise ValidationError(issues)
    return instance
