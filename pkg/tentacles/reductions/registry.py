"""
Reduction lookup: stable ids, source/target kinds, declared parameter bounds,
certificate transfer and composition into pipelines
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import networkx as nx

from core.errors import ReductionError, UnknownIdError
from tentacles.reductions.automata import (fsa_binarize, lcs_to_acyclic_fsa, transfer_fsa_binarize,
                                           transfer_lcs_to_acyclic_fsa)
from tentacles.reductions.base import ReductionOutput, log_pathwidth_parameter
from tentacles.reductions.cellular import (ca_annotate_time, ca_to_chained_sat, transfer_annotate_time,
                                           transfer_ca_to_chained_sat)
from tentacles.reductions.cliques import cmc_to_nnccm, partial_complement, transfer_cmc_to_nnccm
from tentacles.reductions.cnf import (cnf_positivize, cnf_regularize_ii, transfer_identity,
                                      transfer_regularize_ii)
from tentacles.reductions.coloring import (chained_sat_to_list_coloring, list_coloring_to_cmc,
                                           list_coloring_to_precoloring, transfer_list_coloring_to_cmc,
                                           transfer_precoloring, transfer_sat_to_list_coloring)
from tentacles.reductions.counters import (emulation_factor, nnccm_to_scheduling,
                                           nnccm_to_uniform_emulation, transfer_nnccm_to_scheduling,
                                           transfer_nnccm_to_uniform_emulation)
from tentacles.reductions.log_pathwidth import (chained_sat_to_log_pw_domset, chained_sat_to_log_pw_indset,
                                                log_pw_clique_to_weighted_cnf, transfer_clique_to_weighted_cnf,
                                                transfer_sat_to_log_pw_domset, transfer_sat_to_log_pw_indset)
from tentacles.reductions.reconfiguration import (chained_sat_to_ts_ds_reconfig, cmc_to_tj_clique_reconfig,
                                                  cmc_to_ts_clique_reconfig, reconfig_complement,
                                                  reconfig_complement_ts, transfer_cmc_to_clique_reconfig,
                                                  transfer_sat_to_ts_ds_reconfig, ts_to_tj_timer)

logger = logging.getLogger(__name__)

Transfer = Callable[[Any, ReductionOutput, Any], Any]


@dataclass(frozen=True)
class Reduction:
    id: str
    apply: Callable[[Any], ReductionOutput]
    source: str
    target: str
    bound: Callable[[Any], int]
    bound_formula: str
    description: str
    transfer: Optional[Transfer] = None

    def __call__(self, instance: Any) -> ReductionOutput:
        if getattr(instance, 'KIND', None) != self.source:
            raise ReductionError(f"{self.id} expects a {self.source} instance, got {getattr(instance, 'KIND', type(instance).__name__)}")
        out = self.apply(instance)
        logger.debug(f"{self.id}: parameter {instance.parameter} -> {out.new_parameter}")
        return out


def _tj_dominating_set(c) -> ReductionOutput:
    return ts_to_tj_timer(chained_sat_to_ts_ds_reconfig(c))


_ENTRIES = [
    Reduction('ca-annotate-time', ca_annotate_time, 'cellular-automaton', 'cellular-automaton',
              lambda ca: ca.q, 'q', "all-accepting automaton to a non-halting one with time-annotated states",
              transfer_annotate_time),
    Reduction('ca-to-chained-sat', ca_to_chained_sat, 'cellular-automaton', 'chained-cnf',
              lambda ca: 2 * ca.q - 2, '2q-2', "automaton run to a regular chained CNF with boundary formulas",
              transfer_ca_to_chained_sat),
    Reduction('cnf-positivize', cnf_positivize, 'chained-cnf', 'chained-cnf',
              lambda c: c.k, 'k', "negated literals rewritten as the rest of their group", transfer_identity),
    Reduction('cnf-regularize-ii', cnf_regularize_ii, 'chained-cnf', 'chained-cnf',
              lambda c: c.k + 1, 'k+1', "boundary formulas folded into the template with block trackers",
              transfer_regularize_ii),
    Reduction('chained-sat-to-list-coloring', chained_sat_to_list_coloring, 'chained-cnf', 'list-coloring',
              lambda c: 2 * c.k + 1, '2k+1', "list coloring with one vertex per group and block",
              transfer_sat_to_list_coloring),
    Reduction('list-coloring-to-precoloring', list_coloring_to_precoloring, 'list-coloring', 'list-coloring',
              lambda inst: max(inst.pd.width, 1), 'max(k,1)', "lists replaced by precolored pendants",
              transfer_precoloring),
    Reduction('list-coloring-to-cmc', list_coloring_to_cmc, 'list-coloring', 'layered-graph',
              lambda inst: max(inst.pd.width + 1, 1), 'k+1', "one layer per bag, one color per bag slot",
              transfer_list_coloring_to_cmc),
    Reduction('partial-complement', partial_complement, 'layered-graph', 'layered-graph',
              lambda g: g.k, 'k', "complement on same and adjacent layers; clique and independent set swap",
              transfer_identity),
    Reduction('cmc-to-nnccm', cmc_to_nnccm, 'layered-graph', 'nnccm',
              lambda g: 4 * g.k, '4k', "four counters per color, selection and non-edge checks",
              transfer_cmc_to_nnccm),
    Reduction('nnccm-to-scheduling', nnccm_to_scheduling, 'nnccm', 'scheduling',
              lambda m: 2 * m.k + 1 + 3 * (m.k + 1), '5k+4', "time line, counter chains and check tasks",
              transfer_nnccm_to_scheduling),
    Reduction('nnccm-to-uniform-emulation', nnccm_to_uniform_emulation, 'nnccm', 'uniform-emulation',
              emulation_factor, '2k*d3+1',
              "floor, counter components and filler path", transfer_nnccm_to_uniform_emulation),
    Reduction('chained-sat-to-log-pw-domset', chained_sat_to_log_pw_domset, 'chained-cnf', 'pathwidth-vertex-problem',
              lambda c: 10 * c.k + 3, '10k+3', "bit triangles and clause gadgets, width O(k log n)",
              transfer_sat_to_log_pw_domset),
    Reduction('chained-sat-to-log-pw-indset', chained_sat_to_log_pw_indset, 'chained-cnf', 'pathwidth-vertex-problem',
              lambda c: 4 * c.k + 6, '4k+6', "bit edges and ladder clause gadgets, width O(k log n)",
              transfer_sat_to_log_pw_indset),
    Reduction('log-pw-clique-to-weighted-cnf', log_pw_clique_to_weighted_cnf, 'pathwidth-vertex-problem', 'chained-cnf',
              lambda inst: 2 * log_pathwidth_parameter(inst.graph, inst.pd) + 2, '2k+2',
              "bag selector, clique-per-group and counting variables", transfer_clique_to_weighted_cnf),
    Reduction('chained-sat-to-ts-ds-reconfig', chained_sat_to_ts_ds_reconfig, 'chained-cnf', 'reconfiguration',
              lambda c: 2 * c.k + 2, '2k+2', "timer path, dominator and variable class tokens under sliding",
              transfer_sat_to_ts_ds_reconfig),
    Reduction('chained-sat-to-tj-ds-reconfig', _tj_dominating_set, 'chained-cnf', 'reconfiguration',
              lambda c: 2 * c.k + 3, '2k+3', "sliding gadget plus a second timer forcing unit jumps",
              transfer_sat_to_ts_ds_reconfig),
    Reduction('cmc-to-tj-clique-reconfig', cmc_to_tj_clique_reconfig, 'layered-graph', 'reconfiguration',
              lambda g: 2 * g.k, '2k', "sentinel layers, color-distinct edges two levels apart",
              transfer_cmc_to_clique_reconfig),
    Reduction('cmc-to-ts-clique-reconfig', cmc_to_ts_clique_reconfig, 'layered-graph', 'reconfiguration',
              lambda g: 2 * g.k, '2k', "sentinel layers, color-descending edges two levels apart",
              transfer_cmc_to_clique_reconfig),
    Reduction('reconfig-complement', reconfig_complement, 'reconfiguration', 'reconfiguration',
              lambda inst: inst.k, 'k', "graph complement; clique and independent set swap", transfer_identity),
    Reduction('reconfig-complement-ts', reconfig_complement_ts, 'reconfiguration', 'reconfiguration',
              lambda inst: inst.k, 'k', "complement of a jumping clique gadget under sliding", transfer_identity),
    Reduction('lcs-to-acyclic-fsa', lcs_to_acyclic_fsa, 'lcs', 'dfa-collection',
              lambda inst: len(inst.strings) + 1, 'k+1', "length automaton plus one subsequence automaton per string",
              transfer_lcs_to_acyclic_fsa),
    Reduction('fsa-binarize', fsa_binarize, 'dfa-collection', 'dfa-collection',
              lambda d: len(d.automata), 'k', "binary decoding trees over a power-of-two alphabet",
              transfer_fsa_binarize),
]

REDUCTIONS: Dict[str, Reduction] = {r.id: r for r in _ENTRIES}


def reduction_for(reduction_id: str) -> Reduction:
    if reduction_id not in REDUCTIONS:
        raise UnknownIdError('reduction', reduction_id, sorted(REDUCTIONS))
    return REDUCTIONS[reduction_id]


def reduce(reduction_id: str, instance: Any) -> ReductionOutput:
    return reduction_for(reduction_id)(instance)


def transfer_certificate(reduction_id: str, source: Any, out: ReductionOutput, certificate: Any) -> Any:
    """Map a source witness to a target witness along the constructive direction of a reduction"""
    reduction = reduction_for(reduction_id)
    if reduction.transfer is None:
        raise ReductionError(f"{reduction_id} has no certificate transfer")
    return reduction.transfer(source, out, certificate)


def reduction_graph() -> nx.MultiDiGraph:
    """Instance kinds as nodes, one edge per registered reduction keyed by its id"""
    g = nx.MultiDiGraph()
    for r in REDUCTIONS.values():
        g.add_edge(r.source, r.target, key=r.id, bound=r.bound_formula, description=r.description)
    return g


def chain_between(source_kind: str, target_kind: str) -> List[str]:
    """Reduction ids along a shortest path of kinds"""
    g = reduction_graph()
    try:
        kinds = nx.shortest_path(g, source_kind, target_kind)
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        raise ReductionError(f"no reduction chain from {source_kind} to {target_kind}")
    return [next(iter(g.get_edge_data(a, b))) for a, b in zip(kinds, kinds[1:])]


@dataclass(frozen=True)
class Pipeline:
    """Reductions applied in order; every output is kept for transfer and reporting"""
    steps: Sequence[Reduction]

    @property
    def id(self) -> str:
        return ','.join(r.id for r in self.steps)

    def __call__(self, instance: Any) -> List[ReductionOutput]:
        outputs = []
        current = instance
        for reduction in self.steps:
            out = reduction(current)
            outputs.append(out)
            current = out.target
        return outputs

    def transfer(self, instance: Any, outputs: Sequence[ReductionOutput], certificate: Any) -> Any:
        current = instance
        for reduction, out in zip(self.steps, outputs):
            if reduction.transfer is None:
                raise ReductionError(f"{reduction.id} has no certificate transfer")
            certificate = reduction.transfer(current, out, certificate)
            current = out.target
        return certificate


def compose(ids: Sequence[str]) -> Pipeline:
    steps = [reduction_for(i) for i in ids]
    if not steps:
        raise ReductionError("empty reduction chain")
    for a, b in zip(steps, steps[1:]):
        if a.target != b.source:
            raise ReductionError(f"{a.id} emits {a.target} but {b.id} reads {b.source}")
    return Pipeline(tuple(steps))
