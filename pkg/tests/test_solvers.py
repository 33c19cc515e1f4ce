from itertools import permutations, product

import pytest

from core.errors import ResourceError, UnknownIdError, ValidationError
from brain.generators import caterpillars, enumerate_instances
from brain.verifier import mode_agreement
from tentacles.instances.automata import CellularAutomaton
from tentacles.instances.certificates import check_certificate
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.counters import Nnccm
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.graphs import (BandwidthInstance, Graph, ListColoringInstance, VertexProblemInstance,
                                        trivial_decomposition)
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.strings import LcsInstance
from tentacles.solvers.bandwidth import minimum_bandwidth
from tentacles.solvers.base import SolveMode
from tentacles.solvers.registry import solve

MODES = [SolveMode.EXHAUSTIVE, SolveMode.STRUCTURED]


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def decide(instance, mode, **kwargs):
    answer = solve(instance, mode=mode, **kwargs)
    if answer.decision:
        assert check_certificate(instance.KIND, instance, answer.certificate)
    return answer.decision


# ==================== KNOWN ANSWERS ====================

@pytest.mark.parametrize("mode", MODES)
def test_bandwidth_known_answers(mode):
    assert decide(BandwidthInstance(path(3), 1), mode)
    assert not decide(BandwidthInstance(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 1), mode)
    assert not decide(BandwidthInstance(star(3), 1), mode)
    assert decide(BandwidthInstance(star(3), 2), mode)
    assert decide(BandwidthInstance(Graph(4), 0), mode)


def test_minimum_bandwidth_of_star():
    k, layout = minimum_bandwidth(star(4))
    assert k == 2
    assert check_certificate('bandwidth', BandwidthInstance(star(4), 2), layout)


def _brute_bandwidth(g):
    if g.n <= 1:
        return 0
    best = g.n
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        best = min(best, max(abs(pos[u] - pos[v]) for u, v in g.edge_set))
    return best


def test_bandwidth_matches_brute_force_on_caterpillars():
    for g in caterpillars(7, 2):
        assert minimum_bandwidth(g)[0] == _brute_bandwidth(g), g


@pytest.mark.parametrize("mode", MODES)
def test_chained_cnf_known_answers(mode):
    flip = [(1,), (-3,)]
    assert decide(ChainedCnf.regular_instance(2, 2, 1, flip, partition=[(0, 1)]), mode)
    assert not decide(ChainedCnf.regular_instance(3, 2, 1, flip, partition=[(0, 1)]), mode)
    assert decide(ChainedCnf.regular_instance(3, 2, 1, [(-1,), (-3,)], partition=[(0, 1)]), mode)


@pytest.mark.parametrize("mode", MODES)
def test_boundary_formulas(mode):
    c = ChainedCnf.regular_instance(2, 2, 1, [(1, 2)], first=[(1,)], last=[(-1,)], partition=[(0, 1)])
    assert decide(c, mode)
    c = ChainedCnf.regular_instance(2, 2, 1, [(-1, 3)], first=[(1,)], last=[(-1,)], partition=[(0, 1)])
    assert not decide(c, mode)


@pytest.mark.parametrize("mode", MODES)
def test_chained_clique_and_independent_set(mode):
    joined = LayeredColoredGraph(Graph.from_edges(2, [(0, 1)]), (1, 2), (1, 1), 2, 1)
    apart = LayeredColoredGraph(Graph(2), (1, 2), (1, 1), 2, 1)
    assert decide(joined, mode)
    assert not decide(apart, mode)
    assert decide(apart.with_variant('independent-set'), mode)
    assert not decide(joined.with_variant('independent-set'), mode)


def test_problem_name_must_match_instance():
    apart = LayeredColoredGraph(Graph(2), (1, 2), (1, 1), 2, 1)
    assert solve(apart, problem='chained-independent-set').decision
    with pytest.raises(UnknownIdError):
        solve(apart, problem='lcs')


@pytest.mark.parametrize("mode", MODES)
def test_nnccm_known_answers(mode):
    checks = ((1, 1, 0, 0), (1, 1, 1, 1))
    assert not decide(Nnccm(1, 1, checks), mode)
    assert decide(Nnccm(1, 2, checks), mode)
    assert decide(Nnccm(2, 0), mode)


@pytest.mark.parametrize("mode", MODES)
def test_cellular_automaton_known_answers(mode):
    ca = CellularAutomaton(4, 0, 1, ((0, 2, 1, 3),), frozenset({3}), (0, 2, 1), 1)
    assert decide(ca, mode)
    assert not decide(CellularAutomaton(4, 0, 1, ((0, 2, 1, 3),), frozenset({2}), (0, 2, 1), 1), mode)
    halting = CellularAutomaton(4, 0, 1, (), frozenset({2, 3}), (0, 2, 1), 1)
    assert not decide(halting, mode)
    assert decide(CellularAutomaton(4, 0, 1, ((0, 2, 1, 3),), frozenset(), (0, 2, 1), 1, 'non-halting'), mode)


@pytest.mark.parametrize("mode", MODES)
def test_list_coloring_known_answers(mode):
    g = path(2)
    pd = trivial_decomposition(g)
    assert not decide(ListColoringInstance(g, pd, (frozenset({1}), frozenset({1}))), mode)
    assert decide(ListColoringInstance(g, pd, (frozenset({1}), frozenset({1, 2}))), mode)
    assert decide(ListColoringInstance(g, pd, (frozenset({1, 2}), frozenset({1, 2})), (None, 1)), mode)
    assert not decide(ListColoringInstance(g, pd, (frozenset({1, 2}), frozenset({1, 2})), (1, 1)), mode)


@pytest.mark.parametrize("mode", MODES)
@pytest.mark.parametrize("problem,n,K,expected", [
    ('dominating-set', 3, 1, True),
    ('dominating-set', 4, 1, False),
    ('independent-set', 3, 2, True),
    ('independent-set', 3, 3, False),
    ('clique', 3, 2, True),
    ('clique', 3, 3, False),
])
def test_pathwidth_vertex_problems(mode, problem, n, K, expected):
    g = path(n)
    assert decide(VertexProblemInstance(g, trivial_decomposition(g), problem, K), mode) is expected


@pytest.mark.parametrize("mode", MODES)
def test_scheduling_known_answers(mode):
    chain = ((0, 1), (1, 2))
    assert decide(SchedulingInstance(3, chain, 1, 3), mode)
    assert not decide(SchedulingInstance(3, chain, 1, 2), mode)
    assert decide(SchedulingInstance(4, (), 2, 2), mode)
    assert not decide(SchedulingInstance(5, (), 2, 2), mode)


@pytest.mark.parametrize("mode", MODES)
def test_emulation_needs_conserved_weight(mode):
    assert not decide(WeightedPathEmulationInstance(3, 2, 2, (1, 1, 1)), mode)
    assert decide(WeightedPathEmulationInstance(3, 2, 2, (1, 1, 2)), mode)
    # total weight fits, but the last vertex cannot reach the one short position
    assert not decide(WeightedPathEmulationInstance(4, 3, 2, (1, 2, 2, 1)), mode)


@pytest.mark.parametrize("mode", MODES)
def test_layered_graph_without_layers_is_rejected_in_both_modes(mode):
    with pytest.raises(ValidationError):
        solve(LayeredColoredGraph(Graph(0), (), (), 0, 1), mode=mode)


@pytest.mark.parametrize("mode", MODES)
def test_emulation_may_return_to_an_earlier_fiber(mode):
    # f = (1, 2, 2, 1): fiber 1 is only completed by the last vertex
    assert decide(WeightedPathEmulationInstance(4, 2, 2, (1, 1, 1, 1)), mode)


@pytest.mark.parametrize("prefix", [p for p in product((1, 3, 5), repeat=3) if sum(p) <= 14])
def test_emulation_vertex_walk_agrees_with_exhaustive(prefix):
    # factor 7 is above the sweep limit, so structured mode walks vertices
    weights = prefix + (1,) * (14 - sum(prefix))
    inst = WeightedPathEmulationInstance(len(weights), 2, 7, weights)
    assert decide(inst, SolveMode.STRUCTURED) == decide(inst, SolveMode.EXHAUSTIVE)


def test_emulation_weight_one_tail_is_placed_in_one_pass():
    weights = (20,) + (1,) * 40
    answer = solve(WeightedPathEmulationInstance(len(weights), 3, 20, weights), budget=50)
    assert answer.decision
    assert answer.certificate[1:] == [2] * 20 + [3] * 20 or answer.certificate[1:] == [2] * 20 + [1] * 20


@pytest.mark.parametrize("mode", MODES)
def test_reconfiguration_known_answers(mode):
    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert decide(ReconfigurationInstance(triangle, 'dominating-set', 'TS', frozenset({0}), frozenset({1}), 1, 2), mode)
    assert not decide(ReconfigurationInstance(triangle, 'dominating-set', 'TS', frozenset({0}), frozenset({1}), 1, 1), mode)
    g = path(3)
    jump = ReconfigurationInstance(Graph(3), 'independent-set', 'TJ', frozenset({0}), frozenset({2}), 1, 2)
    slide = ReconfigurationInstance(g, 'independent-set', 'TS', frozenset({0}), frozenset({2}), 1, 2)
    assert decide(jump, mode)
    # sliding from 0 to 2 has to pass through 1
    assert not decide(slide, mode)
    assert decide(ReconfigurationInstance(g, 'independent-set', 'TS', frozenset({0}), frozenset({2}), 1, 3), mode)


@pytest.mark.parametrize("mode", MODES)
def test_lcs_known_answers(mode):
    assert decide(LcsInstance(("abc", "acb"), 2), mode)
    assert not decide(LcsInstance(("abc", "acb"), 3), mode)
    assert decide(LcsInstance(("ab", "ba"), 0), mode)


def test_budget_exhaustion_raises():
    with pytest.raises(ResourceError):
        solve(BandwidthInstance(path(6), 1), mode=SolveMode.EXHAUSTIVE, budget=2)


# ==================== MODE AGREEMENT ====================

@pytest.mark.parametrize("kind,bounds", [
    ('bandwidth', {'n': 4}),
    ('chained-cnf', {}),
    ('chained-cnf', {'r': 3, 'q': 2, 'k': 1, 'clauses': 2, 'literals': 1, 'boundary': True}),
    ('cellular-automaton', {'states': 3, 'q': 3, 't': 1}),
    ('layered-graph', {'r': 2, 'k': 1, 'm': 2}),
    ('layered-graph', {'r': 2, 'k': 1, 'm': 2, 'variant': 'independent-set'}),
    ('nnccm', {'k': 1, 'n': 1, 'r': 2}),
    ('list-coloring', {'n': 3, 'palette': 2}),
    ('pathwidth-vertex-problem', {'n': 3, 'problem': 'dominating-set'}),
    ('pathwidth-vertex-problem', {'n': 3, 'problem': 'independent-set'}),
    ('pathwidth-vertex-problem', {'n': 3, 'problem': 'clique'}),
    ('scheduling', {'tasks': 3, 'machines': 2, 'deadline': 3}),
    ('uniform-emulation', {'n': 4, 'c': 2}),
    ('reconfiguration', {'n': 3, 'kind': 'independent-set', 'rule': 'TS', 'k': 1}),
    ('reconfiguration', {'n': 3, 'kind': 'dominating-set', 'rule': 'TJ', 'k': 1}),
    ('dfa-collection', {'automata': 1, 'states': 2, 'alphabet': 2}),
    ('lcs', {'strings': 2, 'alphabet': 2, 'length': 2}),
])
def test_modes_agree(kind, bounds):
    report = mode_agreement(kind, enumerate_instances(kind, bounds))
    assert report.tried > 0
    assert report.disagreements == 0, report.counterexample
