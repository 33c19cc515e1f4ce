"""
Solver lookup by instance kind or problem name
"""

from typing import Any, Callable, Dict, Optional, Tuple

from core.errors import UnknownIdError
from tentacles.solvers.bandwidth import solve_bandwidth
from tentacles.solvers.base import Answer, SolveMode
from tentacles.solvers.cellular import solve_cellular_automaton
from tentacles.solvers.chained_clique import solve_chained_clique
from tentacles.solvers.chained_cnf import solve_chained_cnf
from tentacles.solvers.counters import solve_nnccm
from tentacles.solvers.emulation import solve_uniform_emulation
from tentacles.solvers.fsa import solve_fsa_intersection
from tentacles.solvers.lcs import solve_lcs
from tentacles.solvers.list_coloring import solve_list_coloring
from tentacles.solvers.pathwidth import solve_pathwidth_vertex_problem
from tentacles.solvers.reconfiguration import solve_reconfiguration
from tentacles.solvers.scheduling import solve_scheduling

# instance kind -> solver
SOLVERS: Dict[str, Callable[..., Answer]] = {
    'cellular-automaton': solve_cellular_automaton,
    'chained-cnf': solve_chained_cnf,
    'layered-graph': solve_chained_clique,
    'nnccm': solve_nnccm,
    'list-coloring': solve_list_coloring,
    'pathwidth-vertex-problem': solve_pathwidth_vertex_problem,
    'scheduling': solve_scheduling,
    'uniform-emulation': solve_uniform_emulation,
    'bandwidth': solve_bandwidth,
    'reconfiguration': solve_reconfiguration,
    'dfa-collection': solve_fsa_intersection,
    'lcs': solve_lcs,
}

# problem names accepted on the command line -> (instance kind, solver options)
PROBLEMS: Dict[str, Tuple[str, Dict[str, Any]]] = {
    'chained-clique': ('layered-graph', {'variant': 'clique'}),
    'chained-independent-set': ('layered-graph', {'variant': 'independent-set'}),
    'precoloring-extension': ('list-coloring', {}),
    'ca-at-least-one': ('cellular-automaton', {'acceptance': 'at-least-one'}),
    'ca-all': ('cellular-automaton', {'acceptance': 'all'}),
    'ca-non-halting': ('cellular-automaton', {'acceptance': 'non-halting'}),
    'fsa-intersection': ('dfa-collection', {}),
}


def solver_for(name: str) -> Tuple[str, Callable[..., Answer], Dict[str, Any]]:
    if name in SOLVERS:
        return name, SOLVERS[name], {}
    if name in PROBLEMS:
        kind, options = PROBLEMS[name]
        return kind, SOLVERS[kind], dict(options)
    raise UnknownIdError('problem', name, sorted(SOLVERS) + sorted(PROBLEMS))


def solve(instance: Any, mode=SolveMode.STRUCTURED, budget: Optional[int] = None,
          problem: Optional[str] = None) -> Answer:
    """Dispatch on the instance kind, or on an explicit problem name that must match it"""
    kind, solver, options = solver_for(problem or instance.KIND)
    if kind != instance.KIND:
        raise UnknownIdError('problem for instance kind ' + instance.KIND, problem,
                             [p for p, (k, _) in PROBLEMS.items() if k == instance.KIND] + [instance.KIND])
    return solver(instance, mode=mode, budget=budget, **options)
