import json

import pytest

from core.errors import CertificateShapeError, ParseError, UnknownIdError, ValidationError
from tentacles.instances.certificates import check_certificate
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.counters import Nnccm
from tentacles.instances.codec import from_document, parse_instance, serialize, to_document
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.graphs import (BandwidthInstance, Graph, ListColoringInstance, PathDecomposition,
                                        VertexProblemInstance, trivial_decomposition)
from tentacles.instances.layered import LayeredColoredGraph
from tentacles.instances.reconfiguration import ReconfigurationInstance
from tentacles.instances.strings import LcsInstance
from tentacles.instances.validation import validate


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_from_edges_normalizes_and_drops_loops():
    g = Graph.from_edges(3, [(1, 0), (2, 1), (0, 1), (2, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.diagnostics() == []


def test_graph_reports_self_loop():
    assert "self-loop at 1" in Graph(3, ((1, 1),)).diagnostics()


def test_decomposition_width():
    assert PathDecomposition.from_bags([[0, 1], [1, 2]]).width == 1
    assert PathDecomposition.from_bags([]).width == -1
    assert trivial_decomposition(path(4)).diagnostics(path(4)) == []


def test_decomposition_must_cover_edges():
    pd = PathDecomposition.from_bags([[0], [1], [2]])
    assert pd.diagnostics(path(3))


def test_parse_bandwidth_document():
    inst = parse_instance('{"kind":"bandwidth","parameter":1,"n":3,"edges":[[0,1],[1,2]]}')
    assert inst == BandwidthInstance(Graph(3, ((0, 1), (1, 2))), 1)


def test_parse_accepts_bytes():
    inst = parse_instance(b'{"kind":"lcs","strings":["ab","ba"],"m":1}')
    assert inst == LcsInstance(("ab", "ba"), 1)


def test_self_loop_document_rejected():
    with pytest.raises(ValidationError, match="self-loop"):
        parse_instance('{"kind":"bandwidth","parameter":1,"n":2,"edges":[[0,0]]}')


def test_malformed_json():
    with pytest.raises(ParseError):
        parse_instance('{"kind": "bandwidth", ')


def test_missing_kind():
    with pytest.raises(ParseError):
        from_document({'n': 3})


def test_unknown_kind():
    with pytest.raises(UnknownIdError):
        parse_instance('{"kind":"hypergraph"}')


def test_missing_field_is_parse_error():
    with pytest.raises(ParseError):
        parse_instance('{"kind":"lcs","m":1}')


def test_document_carries_kind_and_parameter():
    doc = to_document(BandwidthInstance(path(3), 2))
    assert doc['kind'] == 'bandwidth'
    assert doc['parameter'] == 2
    assert doc['edges'] == [[0, 1], [1, 2]]


@pytest.mark.parametrize("instance", [
    BandwidthInstance(path(4), 1),
    LayeredColoredGraph(Graph.from_edges(4, [(0, 2), (1, 3)]), (1, 1, 2, 2), (1, 2, 1, 2), 2, 2),
    ChainedCnf.regular_instance(3, 2, 1, [(1, -3)], partition=[(0, 1)]),
    Nnccm(2, 3, ((1, 2, 0, 0), (2, 2, 1, 3))),
    WeightedPathEmulationInstance(3, 2, 2, (1, 1, 2)),
    LcsInstance(("abc", "acb"), 2),
    VertexProblemInstance(path(3), trivial_decomposition(path(3)), 'dominating-set', 1),
])
def test_serialize_round_trip(instance):
    assert parse_instance(serialize(instance)) == instance
    assert json.loads(serialize(instance))['kind'] == instance.KIND


def test_cnf_diagnostics():
    assert validate(ChainedCnf.regular_instance(2, 2, 1, [(1, 5)])) != []
    assert validate(ChainedCnf.regular_instance(2, 2, 1, [(1, 3)], partition=[(0,)])) != []
    assert validate(ChainedCnf.regular_instance(2, 2, 1, [(1, 3)], partition=[(0, 1)])) == []


def test_regular_instance_detects_positive():
    assert ChainedCnf.regular_instance(2, 2, 1, [(1, 3)]).positive
    assert not ChainedCnf.regular_instance(2, 2, 1, [(1, -3)]).positive


def test_layered_graph_rejects_long_edges():
    g = LayeredColoredGraph(Graph.from_edges(2, [(0, 1)]), (1, 3), (1, 1), 3, 1)
    assert any("joins layers" in issue for issue in validate(g))


def test_layered_graph_needs_a_layer():
    empty = LayeredColoredGraph(Graph(0), (), (), 0, 1)
    assert any("at least one layer" in issue for issue in validate(empty))
    assert validate(LayeredColoredGraph(Graph(0), (), (), 1, 1)) == []


def test_reconfiguration_requires_feasible_endpoints():
    inst = ReconfigurationInstance(path(3), 'independent-set', 'TS', frozenset({0, 1}), frozenset({0, 2}), 2, 3)
    assert any("start set" in issue for issue in validate(inst))


# ==================== CERTIFICATES ====================

def test_bandwidth_certificate():
    inst = BandwidthInstance(path(3), 1)
    assert check_certificate('bandwidth', inst, [1, 2, 3])
    assert not check_certificate('bandwidth', inst, [1, 3, 2])
    assert not check_certificate('bandwidth', inst, [1, 1, 2])


def test_certificate_shape_errors():
    inst = BandwidthInstance(path(3), 1)
    with pytest.raises(CertificateShapeError):
        check_certificate('bandwidth', inst, None)
    with pytest.raises(CertificateShapeError):
        check_certificate('bandwidth', inst, [1, 2])
    with pytest.raises(CertificateShapeError):
        check_certificate('bandwidth', inst, "123")


def test_unknown_certificate_kind():
    with pytest.raises(UnknownIdError):
        check_certificate('hamiltonicity', path(3), [0, 1, 2])


def test_vertex_problem_certificate_uses_instance_problem():
    g = path(3)
    inst = VertexProblemInstance(g, trivial_decomposition(g), 'dominating-set', 1)
    assert check_certificate('pathwidth-vertex-problem', inst, [1])
    assert not check_certificate('pathwidth-vertex-problem', inst, [0])


def test_chained_cnf_certificate():
    c = ChainedCnf.regular_instance(2, 2, 1, [(1, 3)], partition=[(0, 1)])
    assert check_certificate('chained-cnf', c, [[0], [0]])
    assert not check_certificate('chained-cnf', c, [[1], [1]])
    assert not check_certificate('chained-cnf', c, [[0, 1], [0]])


def test_list_coloring_certificate_respects_precoloring():
    g = path(2)
    inst = ListColoringInstance(g, trivial_decomposition(g), (frozenset({1, 2}), frozenset({1, 2})), (1, None))
    assert check_certificate('list-coloring', inst, [1, 2])
    assert not check_certificate('list-coloring', inst, [2, 1])


def test_nnccm_certificate():
    m = Nnccm(1, 2, ((1, 1, 0, 0), (1, 1, 1, 1)))
    assert check_certificate('nnccm', m, [[2], [2]])
    assert not check_certificate('nnccm', m, [[0], [2]])
    assert not check_certificate('nnccm', m, [[2], [1]])


def test_emulation_certificate():
    inst = WeightedPathEmulationInstance(3, 2, 2, (1, 1, 2))
    assert check_certificate('uniform-emulation', inst, [1, 1, 2])
    assert not check_certificate('uniform-emulation', inst, [1, 2, 2])


def test_lcs_certificate():
    inst = LcsInstance(("abc", "acb"), 2)
    assert check_certificate('lcs', inst, "ab")
    assert not check_certificate('lcs', inst, "ba")
    assert not check_certificate('lcs', inst, "a")
    with pytest.raises(CertificateShapeError):
        check_certificate('lcs', inst, ["a", "b"])


def test_reconfiguration_certificate():
    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    inst = ReconfigurationInstance(triangle, 'dominating-set', 'TS', frozenset({0}), frozenset({1}), 1, 2)
    assert check_certificate('reconfiguration', inst, [[0], [1]])
    assert not check_certificate('reconfiguration', inst, [[0], [2], [1]])
    assert not check_certificate('reconfiguration', inst, [[1], [0]])
