"""
Test Command Line and Orchestration
Subcommands end to end: JSON on stdout, error objects and exit codes
"""

import json

import pytest

from algebra.poly import Polynomial
from main import main
from models.ring import RingSpec
from suites import SuiteParams
from workflows import SuiteOrchestrator


CURVE2 = {'flavor': 'curve', 'n': 2}


def run_cli(capsys, *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def merge_request(**extra) -> dict:
    request = {
        'kind': 'schur',
        'word': [{'kind': 'merge', 'lambda': [1, 1]}],
        'poly': {'ring': CURVE2, 'terms': [{'c': [1, 0], 'coeff': '1'}]},
    }
    request.update(extra)
    return request


# ============================================================================
# eval
# ============================================================================

def test_eval_merge_from_file(tmp_path, capsys):
    src = tmp_path / "request.json"
    src.write_text(json.dumps(merge_request()))
    out_file = tmp_path / "result.json"
    code, result = run_cli(capsys, "eval", str(src), "--out", str(out_file))
    assert code == 0
    spec = RingSpec(flavor='curve', n=2)
    assert Polynomial.from_json(result) == Polynomial.gen(spec, 'c', 1) + Polynomial.gen(spec, 'c', 2)
    assert json.loads(out_file.read_text()) == result


def test_eval_zigzag(tmp_path, capsys):
    request = {
        'kind': 'zigzag',
        'word': [{'kind': 'tau', 'index': 1}],
        'poly': {'ring': CURVE2, 'terms': [{'x': [1, 0], 'coeff': '1'}]},
    }
    src = tmp_path / "zigzag.json"
    src.write_text(json.dumps(request))
    code, result = run_cli(capsys, "eval", str(src))
    assert code == 0
    spec = RingSpec(flavor='curve', n=2)
    expected = Polynomial.gen(spec, 'x', 2) - Polynomial.gen(spec, 'c', 1) - Polynomial.gen(spec, 'c', 2)
    assert Polynomial.from_json(result) == expected


def test_eval_empty_word_echoes_input(capsys, tmp_path):
    src = tmp_path / "echo.json"
    src.write_text(json.dumps(merge_request(word=[])))
    code, result = run_cli(capsys, "eval", str(src))
    assert code == 0
    assert Polynomial.from_json(result) == Polynomial.gen(RingSpec(flavor='curve', n=2), 'c', 1)


def test_eval_bad_json_exits_2(tmp_path, capsys):
    src = tmp_path / "broken.json"
    src.write_text("{not json")
    code, error = run_cli(capsys, "eval", str(src))
    assert code == 2
    assert error['error'] == "InputError"


def test_eval_missing_file_exits_2(tmp_path, capsys):
    code, error = run_cli(capsys, "eval", str(tmp_path / "absent.json"))
    assert code == 2
    assert error['exit_code'] == 2


@pytest.mark.parametrize("request_body,error", [
    (merge_request(word=[{'kind': 'merge', 'lambda': [1, 1]}, {'kind': 'merge', 'lambda': [1, 1]}]),
     "SlotMismatchError"),
    (merge_request(word=[], source=[2]), "InvarianceError"),
    (merge_request(poly={'ring': {'flavor': 'plain', 'n': 2}, 'terms': [{'y': [0, 0], 'coeff': '1'}]}),
     "RingMismatchError"),
])
def test_eval_operand_errors_exit_3(tmp_path, capsys, request_body, error):
    src = tmp_path / "request.json"
    src.write_text(json.dumps(request_body))
    code, payload = run_cli(capsys, "eval", str(src))
    assert code == 3
    assert payload['error'] == error


# ============================================================================
# verify / report-all
# ============================================================================

def test_verify_lattice_passes(capsys):
    code, report = run_cli(capsys, "verify", "lattice", "--n", "2", "--deg", "4")
    assert code == 0
    assert report['suite'] == "lattice"
    assert report['status'] == "pass"
    assert all('timing_ms' not in check for check in report['checks'])


def test_verify_with_flag_and_timings(capsys):
    code, report = run_cli(capsys, "verify", "--suite", "divided", "--n", "2", "--deg", "2", "--timings")
    assert code == 0
    assert all('timing_ms' in check for check in report['checks'])


@pytest.mark.parametrize("argv", [
    ("verify", "nonsense"),
    ("verify",),
    ("verify", "schur", "--n", "9"),
    ("verify", "klr", "--alpha", "two"),
    ("verify", "lattice", "--prime", "4"),
    ("report-all", "--prime", "6"),
])
def test_verify_input_errors_exit_2(capsys, argv):
    code, error = run_cli(capsys, *argv)
    assert code == 2
    assert error['error'] == "InputError"


# ============================================================================
# rank / lattice
# ============================================================================

def test_rank_command(capsys):
    code, result = run_cli(capsys, "rank", "--mu", "1,1", "--lambda", "2", "--deg", "0")
    assert code == 0
    assert result['words'] == result['rank'] == 1
    assert result['full_rank'] is True


def test_lattice_command(capsys):
    code, result = run_cli(capsys, "lattice", "--n", "2", "--deg", "4", "--prime", "2")
    assert code == 0
    assert [d['im_phi']['degree'] for d in result['degrees']] == [0, 2, 4]
    top = result['degrees'][-1]
    assert top['im_phi']['rows'] == top['tautological']['rows']
    assert top['rank_mod_p'] < top['im_phi']['rank']


# ============================================================================
# Orchestrator
# ============================================================================

def test_parallel_runs_keep_canonical_order():
    params = SuiteParams(n=2, deg=2)
    serial = SuiteOrchestrator(threads=1).run_suite("lattice", params)
    orchestrator = SuiteOrchestrator(threads=3)
    parallel = orchestrator.run_suite("lattice", params)
    assert [c.id for c in serial.checks] == [c.id for c in parallel.checks]
    assert orchestrator.get_status()['steps_completed'] == ["lattice"]
    assert all(c.timing_ms is not None for c in parallel.checks)


def test_suite_without_checks_is_inconclusive(capsys):
    code, report = run_cli(capsys, "verify", "thick", "--n", "1", "--deg", "2")
    assert code == 4
    assert report['status'] == "inconclusive"
    assert [c['id'] for c in report['checks']] == ["no_checks_in_range"]
