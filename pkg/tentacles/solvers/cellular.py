"""
Timed nondeterministic cellular automaton solver
"""

from itertools import product
from typing import Dict, List, Optional

from tentacles.instances.automata import CellularAutomaton, Configuration
from tentacles.instances.validation import require_valid
from tentacles.solvers.base import Answer, Budget, SolveMode, as_mode, no, yes


def _exhaustive(ca: CellularAutomaton, budget: Budget) -> Optional[List[Configuration]]:
    run = [ca.initial]

    def extend() -> bool:
        budget.spend()
        if len(run) == ca.t + 1:
            return ca.final_accepts(run[-1])
        options = ca.cell_options(run[-1])
        if options is None:
            return False
        for choice in product(*options):
            run.append((ca.left,) + choice + (ca.right,))
            if extend():
                return True
            run.pop()
        return False

    return list(run) if extend() else None


def _layered(ca: CellularAutomaton, budget: Budget) -> Optional[List[Configuration]]:
    layers: List[Dict[Configuration, Optional[Configuration]]] = [{ca.initial: None}]
    for _ in range(ca.t):
        nxt: Dict[Configuration, Optional[Configuration]] = {}
        for config in layers[-1]:
            options = ca.cell_options(config)
            if options is None:
                continue
            for choice in product(*options):
                budget.spend()
                nxt.setdefault((ca.left,) + choice + (ca.right,), config)
        if not nxt:
            return None
        layers.append(nxt)
    final = next((c for c in layers[-1] if ca.final_accepts(c)), None)
    if final is None:
        return None
    run = [final]
    for layer in reversed(layers[1:]):
        run.append(layer[run[-1]])
    return run[::-1]


def solve_cellular_automaton(ca: CellularAutomaton, mode=SolveMode.STRUCTURED,
                             budget: Optional[int] = None, acceptance: Optional[str] = None) -> Answer:
    """
    Decide whether some length-t run meets the acceptance flavor.

    Structured mode keeps the set of reachable configurations per time step,
    exhaustive mode enumerates runs depth first.
    """
    require_valid(ca)
    if acceptance is not None and acceptance != ca.acceptance:
        ca = CellularAutomaton(ca.states, ca.left, ca.right, ca.transitions, ca.accepting,
                               ca.initial, ca.t, acceptance)
        require_valid(ca)
    mode = as_mode(mode)
    steps = Budget('cellular-automaton', budget)
    run = _exhaustive(ca, steps) if mode is SolveMode.EXHAUSTIVE else _layered(ca, steps)
    return yes([list(c) for c in run], mode) if run is not None else no(mode)
