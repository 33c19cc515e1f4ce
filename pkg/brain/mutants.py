"""
MUTANT REDUCTIONS
One deliberate single-rule corruption per registered reduction

A mutant must be caught by verify_reduction on its reduction's default stream, either
through a decision mismatch, an invalid emitted instance or a construction constant that
no longer matches its formula. A clean report on a mutant means the stream is vacuous.
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List

from core.errors import ReductionError, UnknownIdError
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.graphs import Graph
from tentacles.reductions.automata import length_automaton
from tentacles.reductions.base import ReductionOutput
from tentacles.reductions.registry import Reduction, reduction_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mutant:
    id: str
    base: str
    description: str
    corrupt: Callable[[Any, ReductionOutput], ReductionOutput]

    def reduction(self) -> Reduction:
        """The corrupted reduction; it carries no certificate transfer"""
        base = reduction_for(self.base)

        def apply(instance: Any) -> ReductionOutput:
            return self.corrupt(instance, base.apply(instance))

        return Reduction(self.id, apply, base.source, base.target, base.bound,
                         base.bound_formula, self.description)


def _target(out: ReductionOutput, **changes) -> ReductionOutput:
    return replace(out, target=replace(out.target, **changes))


def _no_transitions(ca, out):
    return _target(out, transitions=())


def _no_acceptance(ca, out):
    return _target(out, last=None)


def _whole_group_negation(c: ChainedCnf, out):
    """Rewrites not-x as every member of x's group, x included"""
    if c.partition is None or not c.regular or c.first or c.last:
        raise ReductionError("mutant covers partitioned regular instances only")
    template = []
    for clause in c.template:
        lits = []
        for lit in clause:
            if lit > 0:
                lits.append(lit)
                continue
            side, a = divmod(-lit - 1, c.q)
            lits += [side * c.q + b + 1 for b in c.partition[c.group_of[a]]]
        template.append(tuple(sorted(set(lits))))
    return replace(out, target=ChainedCnf.regular_instance(c.r, c.q, c.k, template, partition=c.partition))


def _no_boundary_guards(c: ChainedCnf, out):
    """Regularizes the instance as if it had no boundary formulas"""
    if c.first is None and c.last is None:
        return out
    return reduction_for('cnf-regularize-ii').apply(replace(c, first=None, last=None))


def _no_edges(source, out):
    return _target(out, graph=Graph(out.target.graph.n))


def _all_layer_edges(source, out):
    g = out.target
    edges = [
        (u, v) for u in range(g.graph.n) for v in range(u + 1, g.graph.n)
        if abs(g.layer[u] - g.layer[v]) == 1 or (g.layer[u] == g.layer[v] and g.color[u] != g.color[v])
    ]
    return _target(out, graph=Graph.from_edges(g.graph.n, edges))


def _no_complement(g, out):
    return replace(out, target=g.with_variant('independent-set' if g.variant == 'clique' else 'clique'))


def _no_checks(g, out):
    return _target(out, checks=())


def _late_deadline(m, out):
    return _target(out, deadline=out.target.deadline + 1)


def _short_filler(m, out):
    weights = out.target.weights[:-1]
    return _target(out, n=len(weights), weights=weights)


def _budget_short(c, out):
    return _target(out, K=out.target.K - 1)


def _budget_long(c, out):
    return _target(out, K=out.target.K + 1)


def _no_exclusions(inst, out):
    """Drops the clauses forbidding two subcliques that are not adjacent"""
    kept = tuple(clause for clause in out.target.first if not (len(clause) == 2 and all(lit < 0 for lit in clause)))
    return _target(out, first=kept)


def _one_move_short(source, out):
    return _target(out, T=out.target.T - 1)


def _same_graph_complement(inst, out):
    return _target(out, graph=inst.graph)


def _short_length_automaton(inst, out):
    automata = list(out.target.automata)
    automata[0] = length_automaton(len(out.target.alphabet), max(inst.m - 1, 0))
    return _target(out, automata=tuple(automata))


def _no_accepting_states(d, out):
    automata = tuple(replace(dfa, accepting=frozenset()) for dfa in out.target.automata)
    return _target(out, automata=automata)


_MUTANTS = [
    Mutant('ca-annotate-time~no-transitions', 'ca-annotate-time',
           "annotated automaton keeps no transitions", _no_transitions),
    Mutant('ca-to-chained-sat~no-acceptance', 'ca-to-chained-sat',
           "accepting disjunction on the last block dropped", _no_acceptance),
    Mutant('cnf-positivize~whole-group', 'cnf-positivize',
           "negation rewritten as the whole group instead of the rest of it", _whole_group_negation),
    Mutant('cnf-regularize-ii~no-guards', 'cnf-regularize-ii',
           "boundary formulas dropped instead of guarded", _no_boundary_guards),
    Mutant('chained-sat-to-list-coloring~no-edges', 'chained-sat-to-list-coloring',
           "conflict edges dropped", _no_edges),
    Mutant('list-coloring-to-precoloring~no-edges', 'list-coloring-to-precoloring',
           "pendant and conflict edges dropped", _no_edges),
    Mutant('list-coloring-to-cmc~all-edges', 'list-coloring-to-cmc',
           "every admissible layer edge added", _all_layer_edges),
    Mutant('partial-complement~identity', 'partial-complement',
           "variant swapped without complementing", _no_complement),
    Mutant('cmc-to-nnccm~no-checks', 'cmc-to-nnccm',
           "check sequence dropped", _no_checks),
    Mutant('nnccm-to-scheduling~late-deadline', 'nnccm-to-scheduling',
           "deadline one step past cr+n+1", _late_deadline),
    Mutant('nnccm-to-uniform-emulation~short-filler', 'nnccm-to-uniform-emulation',
           "filler path one vertex short", _short_filler),
    Mutant('chained-sat-to-log-pw-domset~budget-short', 'chained-sat-to-log-pw-domset',
           "dominating set budget one below rkt+2kc(r-1)", _budget_short),
    Mutant('chained-sat-to-log-pw-indset~budget-long', 'chained-sat-to-log-pw-indset',
           "independent set target one above its formula", _budget_long),
    Mutant('log-pw-clique-to-weighted-cnf~no-exclusions', 'log-pw-clique-to-weighted-cnf',
           "non-adjacent subclique exclusions dropped", _no_exclusions),
    Mutant('chained-sat-to-ts-ds-reconfig~one-move-short', 'chained-sat-to-ts-ds-reconfig',
           "sequence length one below the forced move count", _one_move_short),
    Mutant('chained-sat-to-tj-ds-reconfig~one-move-short', 'chained-sat-to-tj-ds-reconfig',
           "sequence length one below the forced move count", _one_move_short),
    Mutant('cmc-to-tj-clique-reconfig~one-move-short', 'cmc-to-tj-clique-reconfig',
           "sequence length one below k(r+2) moves", _one_move_short),
    Mutant('cmc-to-ts-clique-reconfig~one-move-short', 'cmc-to-ts-clique-reconfig',
           "sequence length one below k(r+2) moves", _one_move_short),
    Mutant('reconfig-complement~no-complement', 'reconfig-complement',
           "kind swapped on the original graph", _same_graph_complement),
    Mutant('reconfig-complement-ts~no-complement', 'reconfig-complement-ts',
           "kind swapped on the original graph", _same_graph_complement),
    Mutant('lcs-to-acyclic-fsa~short-length', 'lcs-to-acyclic-fsa',
           "length automaton built for m-1", _short_length_automaton),
    Mutant('fsa-binarize~no-accepting', 'fsa-binarize',
           "accepting roots dropped", _no_accepting_states),
]

MUTANTS: Dict[str, Mutant] = {m.id: m for m in _MUTANTS}


def mutant_for(mutant_id: str) -> Mutant:
    if mutant_id not in MUTANTS:
        raise UnknownIdError('mutant', mutant_id, sorted(MUTANTS))
    return MUTANTS[mutant_id]


def mutants_of(reduction_id: str) -> List[Mutant]:
    return [m for m in _MUTANTS if m.base == reduction_id]
