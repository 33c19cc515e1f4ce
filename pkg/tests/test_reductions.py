import pytest

from core.errors import ReductionError, UnknownIdError
from brain.manifest import reduction_stream
from brain.verifier import (check_parameter_bound, constant_issues, potential_issues, verify_reduction)
from tentacles.instances.certificates import check_certificate
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.counters import Nnccm
from tentacles.instances.graphs import Graph
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import validate
from tentacles.reductions.base import ceil_log2
from tentacles.reductions.registry import (REDUCTIONS, chain_between, compose, reduce, reduction_for,
                                           reduction_graph, transfer_certificate)
from tentacles.solvers.registry import solve

STAY_ZERO = ChainedCnf.regular_instance(3, 2, 1, [(-1,), (-3,)], partition=[(0, 1)])
JOINED = LayeredColoredGraph(Graph.from_edges(2, [(0, 1)]), (1, 2), (1, 1), 2, 1)


def test_registry_lists_every_reduction():
    assert len(REDUCTIONS) == 22
    g = reduction_graph()
    assert g.number_of_edges() == len(REDUCTIONS)
    assert 'chained-cnf' in g.nodes


def test_unknown_reduction():
    with pytest.raises(UnknownIdError):
        reduction_for('sat-to-everything')


def test_reduction_checks_source_kind():
    with pytest.raises(ReductionError):
        reduce('cnf-positivize', LcsInstance(("ab",), 1))


def test_ceil_log2():
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


# ==================== CONSTANTS ====================

def test_cnf_positivize_rewrites_negations():
    out = reduce('cnf-positivize', STAY_ZERO)
    assert out.target.positive
    assert out.target.template == ((2,), (4,))
    assert out.constants['rewritten_literals'] == 4


def test_positivize_needs_partition():
    with pytest.raises(ReductionError):
        reduce('cnf-positivize', ChainedCnf.regular_instance(2, 2, 1, [(-1,)]))


def test_cmc_to_nnccm_uses_four_counters_per_color():
    g = LayeredColoredGraph(Graph.from_edges(4, [(0, 2), (1, 3), (0, 3), (1, 2), (0, 1), (2, 3)]),
                            (1, 1, 2, 2), (1, 2, 1, 2), 2, 2)
    out = reduce('cmc-to-nnccm', g)
    assert out.new_parameter == 8
    assert out.target.k == 8


def test_cmc_to_nnccm_wants_clique_variant():
    with pytest.raises(ReductionError):
        reduce('cmc-to-nnccm', JOINED.with_variant('independent-set'))


def test_nnccm_to_scheduling_constants():
    m = Nnccm(1, 1, ((1, 1, 0, 0),))
    out = reduce('nnccm-to-scheduling', m)
    assert out.target.machines == 3
    assert out.constants['c'] == 4
    assert out.target.deadline == 6
    assert out.target.width <= 6
    assert constant_issues('nnccm-to-scheduling', m, out) == []


def test_nnccm_to_emulation_pads_to_three_counters():
    m = Nnccm(1, 1, ((1, 1, 0, 0),))
    out = reduce('nnccm-to-uniform-emulation', m)
    assert out.constants['k_effective'] == 3
    assert out.constants['c'] == 15
    assert out.target.c == 619
    assert out.target.m == 9
    assert out.target.total_weight == 619 * 9
    assert constant_issues('nnccm-to-uniform-emulation', m, out) == []


def test_emulation_turning_points_overflow_ordinary_positions():
    out = reduce('nnccm-to-uniform-emulation', Nnccm(2, 1, ((1, 2, 0, 0),)))
    c, floor = out.target.c, out.target.weights[:out.target.m]
    room = max(c - w for w in floor[1:-1])
    d2 = out.target.weights[out.target.m + out.target.m - 2]
    assert d2 == 34
    assert d2 > room


@pytest.mark.parametrize("machine", [Nnccm(2, 0, ((1, 2, 0, 0),)), Nnccm(1, 0, ((1, 1, 0, 0),)), Nnccm(1, 0)])
def test_nnccm_to_emulation_accepts_zero_ceiling(machine):
    out = reduce('nnccm-to-uniform-emulation', machine)
    assert out.constants['n_effective'] == 1
    assert out.constants['r_effective'] == len(machine.checks) + machine.k
    assert constant_issues('nnccm-to-uniform-emulation', machine, out) == []
    assert solve(out.target).decision == solve(machine).decision


COUNTER_MACHINES = [
    (Nnccm(1, 1, ((1, 1, 0, 0),)), True),
    (Nnccm(1, 1, ((1, 1, 0, 0), (1, 1, 1, 1))), False),
    (Nnccm(2, 1, ((1, 1, 0, 0), (1, 1, 1, 1))), False),
    (Nnccm(2, 1, ((1, 2, 0, 0),)), True),
    (Nnccm(2, 0, ((1, 2, 0, 0),)), False),
    (Nnccm(1, 0), True),
]


@pytest.mark.parametrize("reduction_id", ['nnccm-to-scheduling', 'nnccm-to-uniform-emulation'])
@pytest.mark.parametrize("machine,accepts", COUNTER_MACHINES)
def test_counter_reductions_decide_toy_machines(reduction_id, machine, accepts):
    source = solve(machine)
    assert source.decision == accepts
    out = reduce(reduction_id, machine)
    assert solve(out.target).decision == accepts
    if accepts:
        witness = transfer_certificate(reduction_id, machine, out, source.certificate)
        assert check_certificate(out.target.KIND, out.target, witness)


def test_emulation_rejects_when_two_counters_block_each_other():
    # counter 1 must stay 0 for check 2, counter 2 for check 3, so check 1 sees (0, 0)
    machine = Nnccm(2, 1, ((1, 2, 0, 0), (1, 1, 1, 1), (2, 2, 1, 1)))
    assert not solve(machine).decision
    assert not solve(reduce('nnccm-to-uniform-emulation', machine).target).decision


def test_lcs_to_fsa_builds_one_automaton_per_string_plus_length():
    inst = LcsInstance(("abc", "acb"), 2)
    out = reduce('lcs-to-acyclic-fsa', inst)
    assert len(out.target.automata) == 3
    assert out.target.automata[0].states == 3
    assert out.target.acyclic
    assert validate(out.target) == []


def test_fsa_binarize_uses_two_symbols():
    lcs = reduce('lcs-to-acyclic-fsa', LcsInstance(("abc", "acb"), 2)).target
    out = reduce('fsa-binarize', lcs)
    assert out.target.alphabet == ('0', '1')
    assert out.constants['code_width'] == 2
    assert solve(out.target).decision == solve(lcs).decision


def test_clique_reconfig_constants():
    out = reduce('cmc-to-tj-clique-reconfig', JOINED)
    assert out.target.k == 2
    assert out.target.T == 5
    assert out.target.exact
    assert constant_issues('cmc-to-tj-clique-reconfig', JOINED, out) == []


def test_clique_reconfig_potential_climbs_by_two():
    out = reduce('cmc-to-tj-clique-reconfig', JOINED)
    sequence = transfer_certificate('cmc-to-tj-clique-reconfig', JOINED, out, [0, 1])
    assert check_certificate('reconfiguration', out.target, sequence)
    assert potential_issues(out, sequence) == []
    assert potential_issues(out, [sequence[0], sequence[2], sequence[1], sequence[3], sequence[4]])


def test_dominating_reconfig_constants():
    c = ChainedCnf.regular_instance(2, 2, 1, [(1,)], partition=[(0, 1)])
    ts = reduce('chained-sat-to-ts-ds-reconfig', c)
    tj = reduce('chained-sat-to-tj-ds-reconfig', c)
    assert ts.target.k == 4 and ts.target.rule == 'TS'
    assert tj.target.k == 5 and tj.target.rule == 'TJ'
    assert constant_issues('chained-sat-to-ts-ds-reconfig', c, ts) == []
    assert constant_issues('chained-sat-to-tj-ds-reconfig', c, tj) == []


@pytest.mark.parametrize("k,partition,moves", [(1, [(0, 1, 2, 3)], 6), (2, [(0, 1), (2, 3)], 10)])
def test_dominating_reconfig_length_is_forced_moves_plus_one(k, partition, moves):
    c = ChainedCnf.regular_instance(2, 4, k, [(1,)], partition=partition)
    out = reduce('chained-sat-to-ts-ds-reconfig', c)
    assert out.constants['moves'] == moves
    assert out.target.T == moves + 1
    assert out.constants['T_formula'] == 3


def test_log_pathwidth_constants():
    c = ChainedCnf.regular_instance(2, 4, 1, [(1, 6), (-2, 7)], partition=[(0, 1, 2, 3)])
    for rid in ('chained-sat-to-log-pw-domset', 'chained-sat-to-log-pw-indset'):
        out = reduce(rid, c)
        assert out.constants['t'] == 2
        assert constant_issues(rid, c, out) == []
        assert check_parameter_bound(rid, c, out=out)


# ==================== PARAMETER BOUNDS ====================

def test_parameter_bound_holds():
    assert check_parameter_bound('cmc-to-nnccm', JOINED)
    assert check_parameter_bound('cnf-positivize', STAY_ZERO)


def test_parameter_bound_detects_a_tight_table():
    assert not check_parameter_bound('cmc-to-nnccm', JOINED, {'cmc-to-nnccm': lambda g: 4 * g.k - 1})


def test_parameter_bound_needs_a_table_entry():
    with pytest.raises(ReductionError):
        check_parameter_bound('cmc-to-nnccm', JOINED, {})


# ==================== COMPOSITION ====================

def test_pipeline_transfers_certificates():
    pipeline = compose(['cnf-positivize', 'chained-sat-to-list-coloring'])
    outputs = pipeline(STAY_ZERO)
    target = outputs[-1].target
    source_answer = solve(STAY_ZERO)
    assert source_answer.decision
    assert solve(target).decision
    colors = pipeline.transfer(STAY_ZERO, outputs, source_answer.certificate)
    assert check_certificate('list-coloring', target, colors)
    assert pipeline.id == 'cnf-positivize,chained-sat-to-list-coloring'


def test_compose_rejects_mismatched_kinds():
    with pytest.raises(ReductionError):
        compose(['lcs-to-acyclic-fsa', 'cnf-positivize'])
    with pytest.raises(ReductionError):
        compose([])


def test_chain_between_kinds():
    assert chain_between('lcs', 'dfa-collection') == ['lcs-to-acyclic-fsa']
    with pytest.raises(ReductionError):
        chain_between('dfa-collection', 'lcs')


# ==================== VERIFICATION STREAMS ====================

@pytest.mark.parametrize("reduction_id", sorted(REDUCTIONS))
def test_reduction_agrees_on_stream_prefix(reduction_id):
    report = verify_reduction(reduction_id, reduction_stream(reduction_id)[:12], workers=1)
    assert report.ok, report.counterexample
    assert report.tried + report.skipped > 0


@pytest.mark.slow
@pytest.mark.parametrize("reduction_id", sorted(REDUCTIONS))
def test_reduction_agrees_on_full_stream(reduction_id):
    report = verify_reduction(reduction_id, reduction_stream(reduction_id), workers=1)
    assert report.ok, report.counterexample
    assert report.tried > 0


@pytest.mark.slow
@pytest.mark.parametrize("reduction_id", ['nnccm-to-scheduling', 'nnccm-to-uniform-emulation'])
def test_counter_reductions_cover_two_counters(reduction_id):
    stream = reduction_stream(reduction_id)
    assert any(m.k == 2 for m in stream)
    report = verify_reduction(reduction_id, stream, workers=1)
    assert report.ok, report.counterexample
    assert report.tried >= 200
