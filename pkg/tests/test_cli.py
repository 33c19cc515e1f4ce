import io
import json

import pytest

from core.app import main
from tentacles.instances.cnf import ChainedCnf
from tentacles.instances.codec import serialize

BANDWIDTH = '{"kind":"bandwidth","parameter":1,"n":3,"edges":[[0,1],[1,2]]}'


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def bandwidth_file(tmp_path):
    path = tmp_path / "bandwidth.json"
    path.write_text(BANDWIDTH)
    return str(path)


@pytest.fixture
def cnf_file(tmp_path):
    path = tmp_path / "cnf.json"
    path.write_text(serialize(ChainedCnf.regular_instance(3, 2, 1, [(-1,), (-3,)], partition=[(0, 1)])))
    return str(path)


@pytest.mark.parametrize("mode", ["exhaustive", "structured"])
def test_solve(capsys, bandwidth_file, mode):
    code, doc = run(capsys, ['solve', 'bandwidth', bandwidth_file, '--mode', mode])
    assert code == 0
    assert doc['decision'] is True
    assert sorted(doc['certificate']) == [1, 2, 3]


def test_no_answer_is_not_failure(capsys, tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text('{"kind":"bandwidth","k":1,"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    code, doc = run(capsys, ['solve', 'bandwidth', str(path)])
    assert code == 0
    assert doc == {'decision': False, 'certificate': None}


def test_solve_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO(BANDWIDTH))
    code, doc = run(capsys, ['solve', 'bandwidth'])
    assert code == 0
    assert doc['decision'] is True


def test_malformed_input_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": ')
    assert main(['solve', 'bandwidth', str(path)]) == 2
    path.write_text('{"kind":"bandwidth","k":1,"n":2,"edges":[[1,1]]}')
    assert main(['solve', 'bandwidth', str(path)]) == 2
    assert "self-loop" in capsys.readouterr().err


def test_missing_file_is_usage_error(tmp_path):
    assert main(['solve', 'bandwidth', str(tmp_path / "absent.json")]) == 2


def test_budget_exhaustion_exit_code(tmp_path):
    path = tmp_path / "path.json"
    path.write_text(json.dumps({'kind': 'bandwidth', 'k': 1, 'n': 6, 'edges': [[i, i + 1] for i in range(5)]}))
    assert main(['--budget', '2', 'solve', 'bandwidth', str(path), '--mode', 'exhaustive']) == 3


def test_bad_arguments():
    assert main([]) == 2
    assert main(['frobnicate']) == 2
    assert main(['solve', 'bandwidth', '-', '--mode', 'guess']) == 2


def test_reduce_single(capsys, cnf_file):
    code, doc = run(capsys, ['reduce', 'cnf-positivize', cnf_file])
    assert code == 0
    assert doc['parameter'] == 1
    assert doc['target']['kind'] == 'chained-cnf'
    assert doc['target']['positive'] is True


def test_reduce_chain_then_solve(capsys, cnf_file, tmp_path):
    code, doc = run(capsys, ['reduce', 'cnf-positivize,chained-sat-to-list-coloring', cnf_file])
    assert code == 0
    assert doc['chain'] == ['cnf-positivize', 'chained-sat-to-list-coloring']
    assert doc['target']['kind'] == 'list-coloring'
    assert len(doc['steps']) == 2

    piped = tmp_path / "reduced.json"
    piped.write_text(json.dumps(doc))
    code, answer = run(capsys, ['solve', 'list-coloring', str(piped)])
    assert code == 0
    assert answer['decision'] is True


def test_reduce_wrong_source(capsys, bandwidth_file):
    assert main(['reduce', 'cnf-positivize', bandwidth_file]) == 2


def test_unknown_reduction(bandwidth_file):
    assert main(['reduce', 'no-such-reduction', bandwidth_file]) == 2


def test_gen_is_deterministic(capsys):
    _, first = run(capsys, ['gen', 'lcs', '--seed', '3'])
    _, second = run(capsys, ['gen', 'lcs', '--seed', '3'])
    assert first == second
    assert first['kind'] == 'lcs'


def test_gen_enumerate(capsys):
    code, docs = run(capsys, ['gen', 'graph', '--enumerate', '--param', 'n=3'])
    assert code == 0
    assert len(docs) == 8
    assert main(['gen', 'graph', '--enumerate', '--param', 'n=4', '--limit', '5']) == 3


def test_gen_bad_param():
    assert main(['gen', 'graph', '--param', 'n']) == 2


def test_info(capsys):
    code, doc = run(capsys, ['info'])
    assert code == 0
    assert len(doc['reductions']) == 22
    assert 'chained-clique' in doc['problems']
    code, doc = run(capsys, ['info', 'cnf-positivize'])
    assert doc['bound'] == 'k'
    assert doc['source'] == doc['target'] == 'chained-cnf'
    assert doc['transfer'] is True


def test_verify_single(capsys, tmp_path):
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps({'reductions': {'lcs-to-acyclic-fsa': {'bounds': {'length': 1}}}}))
    code, doc = run(capsys, ['--no-timing', 'verify', 'lcs-to-acyclic-fsa', '--manifest', str(manifest)])
    assert code == 0
    assert doc['ok'] is True
    report = doc['reports'][0]
    assert report['reduction'] == 'lcs-to-acyclic-fsa'
    assert report['tried'] > 0
    assert 'seconds' not in report


def test_verify_unknown_reduction():
    assert main(['verify', 'no-such-reduction']) == 2
