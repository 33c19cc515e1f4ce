import json

import networkx as nx
import pytest

from core.errors import ParseError, ResourceError, UnknownIdError
from brain.generators import RANDOMIZERS, caterpillars, enumerate_instances, random_instance
from brain.manifest import DEFAULT_MANIFEST, load_manifest, mode_stream, reduction_stream, unlisted_reductions
from brain.mutants import MUTANTS, mutant_for, mutants_of
from brain.reports import reports_document, reports_frame, reports_table
from brain.verifier import ReductionReport, mode_agreement, verify_reduction
from core.system_health_check import run_health_check
from tentacles.instances.validation import validate
from tentacles.reductions.registry import REDUCTIONS


# ==================== GENERATORS ====================

@pytest.mark.parametrize("kind,bounds,count", [
    ('graph', {'n': 3}, 8),
    ('nnccm', {'k': 1, 'n': 1, 'r': 1}, 5),
    ('chained-cnf', {}, 33),
    ('bandwidth', {'n': 3}, 24),
    ('uniform-emulation', {'n': 2, 'c': 2}, 8),
])
def test_enumeration_counts(kind, bounds, count):
    assert len(enumerate_instances(kind, bounds)) == count


def test_enumerated_instances_are_valid_and_distinct():
    stream = enumerate_instances('layered-graph', {'r': 2, 'k': 1, 'm': 2})
    assert all(validate(x) == [] for x in stream)
    assert len(set(stream)) == len(stream)


def test_enumeration_limit():
    with pytest.raises(ResourceError):
        enumerate_instances('graph', {'n': 4}, limit=10)


def test_unknown_kind():
    with pytest.raises(UnknownIdError):
        enumerate_instances('hypergraph')
    with pytest.raises(UnknownIdError):
        random_instance('hypergraph')


@pytest.mark.parametrize("kind", sorted(RANDOMIZERS))
def test_random_instances_are_deterministic_and_valid(kind):
    assert random_instance(kind, 7) == random_instance(kind, 7)
    samples = [random_instance(kind, seed) for seed in range(100)]
    assert all(validate(x) == [] for x in samples[:20])
    assert len(set(samples)) >= 2


def test_random_params_are_passed_through():
    g = random_instance('graph', 1, {'n': 9})
    assert g.n == 9


def test_caterpillars_are_trees():
    seen = 0
    for g in caterpillars(6, 2):
        assert nx.is_tree(g.to_networkx())
        assert g.n <= 6
        seen += 1
    assert seen > 10


# ==================== VERIFIER ====================

def test_empty_stream_reports_nothing():
    report = verify_reduction('cnf-positivize', [])
    assert report.tried == 0
    assert report.ok


def test_rejected_sources_are_skipped():
    unpartitioned = enumerate_instances('chained-cnf', {'partitioned': False})[:5]
    report = verify_reduction('cnf-positivize', unpartitioned)
    assert report.skipped == 5
    assert report.tried == 0


def test_report_merge():
    a = ReductionReport('x', tried=2, agreements=2, modes={'solved': 2})
    b = ReductionReport('x', tried=1, agreements=1, skipped=3, modes={'solved': 1})
    merged = a.merge(b)
    assert (merged.tried, merged.agreements, merged.skipped) == (3, 3, 3)
    assert merged.modes == {'solved': 3}


def test_report_document_drops_timing():
    doc = ReductionReport('x', seconds=1.5).to_document(timing=False)
    assert 'seconds' not in doc
    assert doc['reduction'] == 'x'


def test_mode_agreement_on_manifest_stream():
    report = mode_agreement('lcs', mode_stream('lcs'))
    assert report.ok
    assert report.tried > 0


def test_parallel_verification_matches_serial():
    stream = reduction_stream('partial-complement')[:40]
    serial = verify_reduction('partial-complement', stream, workers=1)
    parallel = verify_reduction('partial-complement', stream, workers=2)
    assert (parallel.tried, parallel.agreements, parallel.skipped) == \
        (serial.tried, serial.agreements, serial.skipped)


# ==================== MUTANTS ====================

def test_every_reduction_has_a_mutant():
    assert {m.base for m in MUTANTS.values()} == set(REDUCTIONS)
    assert mutants_of('partial-complement')[0].id == 'partial-complement~identity'
    with pytest.raises(UnknownIdError):
        mutant_for('partial-complement~nothing')


@pytest.mark.parametrize("mutant_id,prefix", [
    ('partial-complement~identity', 8),
    ('nnccm-to-scheduling~late-deadline', 4),
    ('nnccm-to-uniform-emulation~short-filler', 4),
    ('cmc-to-tj-clique-reconfig~one-move-short', 4),
    ('lcs-to-acyclic-fsa~short-length', 20),
])
def test_mutant_is_caught(mutant_id, prefix):
    mutant = mutant_for(mutant_id)
    report = verify_reduction(mutant.reduction(), reduction_stream(mutant.base)[:prefix], workers=1)
    assert not report.ok
    assert report.counterexample['reason']


# ==================== MANIFEST AND REPORTS ====================

def test_manifest_covers_every_reduction():
    assert unlisted_reductions() == []
    assert set(DEFAULT_MANIFEST['reductions']) == set(REDUCTIONS)


def test_manifest_override(tmp_path):
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps({'reductions': {'cnf-positivize': {'bounds': {'clauses': 1}}}}))
    manifest = load_manifest(str(path))
    assert manifest['reductions']['cnf-positivize']['bounds']['clauses'] == 1
    assert manifest['reductions']['cnf-positivize']['bounds']['literals'] == 2
    assert len(reduction_stream('cnf-positivize', manifest)) == 33
    assert DEFAULT_MANIFEST['reductions']['cnf-positivize']['bounds']['clauses'] == 2


def test_manifest_bad_json(tmp_path):
    path = tmp_path / "manifest.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_manifest(str(path))


def test_manifest_seeded_stream(tmp_path):
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps({'modes': {'lcs': {'seeds': 5, 'params': {'strings': 2, 'length': 3}}}}))
    stream = mode_stream('lcs', load_manifest(str(path)))
    assert len(stream) == 5
    assert all(len(x.strings) == 2 for x in stream)


def test_unknown_manifest_entry():
    with pytest.raises(UnknownIdError):
        reduction_stream('sat-to-everything')


def test_reports_render():
    reports = [ReductionReport('a', tried=2, agreements=2), ReductionReport('b', tried=1, disagreements=1)]
    doc = reports_document(reports, timing=False)
    assert doc['ok'] is False
    assert [r['reduction'] for r in doc['reports']] == ['a', 'b']
    frame = reports_frame(reports)
    assert list(frame['status']) == ['✅', '❌']
    assert "TOTAL: 2/3 agree" in reports_table(reports)
    assert reports_table([]) == "(no reports)"


@pytest.mark.slow
def test_health_check_passes():
    status = run_health_check()
    assert status['healthy'], [r.to_document() for r in status['reductions'] if not r.ok]
