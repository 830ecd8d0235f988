"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests the command-line application. Requires "pytest" to run.
"""

import os
import json
import pytest
from sqreflex import cli

FILE_NAME = 'testing'


def run_json(capsys, argv):
    code = cli.run(argv + ['--json'])
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def test_certify(capsys):
    code, data = run_json(capsys, ['certify-sqref', '--field', 'gf(3)', '--poly', 'X^3+2*X'])
    assert code == cli.EXIT_OK
    assert data['type'] == 'certificate'
    assert data['f'] == "X^3 + 2*X"


def test_certify_exhaustive(capsys):
    code, data = run_json(capsys, ['certify-sqref', '--field', 'gf(5)', '--poly', 'X^2+2', '--exhaustive'])
    assert code == cli.EXIT_OK
    assert all(e['path'] == 'exhaustive' for e in data['classes'])


def test_certify_out(capsys):
    fname = FILE_NAME + ".json"
    code = cli.run(['certify-sqref', '--poly', 'X^2+1', '--out', fname])
    capsys.readouterr()
    assert code == cli.EXIT_OK
    assert os.path.isfile(fname)

    # Clean up temporary file if exists
    if os.path.isfile(fname):
        os.remove(fname)


def test_certify_text(capsys):
    assert cli.run(['certify-sqref', '--poly', 'X^2+1']) == cli.EXIT_OK
    out, _ = capsys.readouterr()
    assert out.startswith("SqRefCertificate(")


def test_certify_not_squarefree(capsys):
    assert cli.run(['certify-sqref', '--poly', 'X^2']) == cli.EXIT_COMPUTATION
    _, err = capsys.readouterr()
    assert "NotSquareFree" in err


def test_isotropy(capsys):
    code, data = run_json(capsys, ['isotropy', '--form', '1; 1; 2*X; 2*X'])
    assert code == cli.EXIT_OK
    assert not data['isotropic']
    assert data['place'] == "X"


def test_isotropy_witness(capsys):
    code, data = run_json(capsys, ['isotropy', '--field', 'gf(3)', '--form', '1; 1; 1', '--witness-cap', '2'])
    assert code == cli.EXIT_OK
    assert data['isotropic']
    assert len(data['witness']) == 3


def test_isotropy_witness_default_cap(capsys):
    code, data = run_json(capsys, ['isotropy', '--form', '1; 1; 1', '--witness-cap'])
    assert code == cli.EXIT_OK
    assert data['isotropic']
    assert data['witness'] == ["1", "1", "1"]


def test_isotropy_without_witness(capsys):
    code, data = run_json(capsys, ['isotropy', '--form', '1; 1; 1'])
    assert code == cli.EXIT_OK
    assert data['isotropic']
    assert data.get('witness') is None


def test_ramify(capsys):
    code, data = run_json(capsys, ['ramify', '--f', 'X', '--g', '2'])
    assert code == cli.EXIT_OK
    assert data['ramification'] == [dict(place="X", class_witness="2"), dict(place="inf", class_witness="2")]
    assert data['ramification'] == [dict(place="X", class_witness="2"), dict(place="inf", class_witness="2")]


def test_kornblum(capsys):
    code, data = run_json(capsys, ['kornblum', '--f', 'X', '--g0', '2', '--cap', '6'])
    assert code == cli.EXIT_OK
    assert data['q'] == "X + 2"
    assert data['degree'] == 1


def test_kornblum_cap_exceeded(capsys):
    code = cli.run(['kornblum', '--f', 'X^2', '--g0', '2', '--parity', 'odd', '--cap', '1'])
    _, err = capsys.readouterr()
    assert code == cli.EXIT_COMPUTATION
    assert "CapExceeded" in err


def test_hyperell(capsys):
    code, data = run_json(capsys, ['hyperell', '--poly', 'X^3+2*X'])
    assert code == cli.EXIT_OK
    assert data['found']
    assert data['degree'] == 1


def test_transfer_curve(capsys):
    code, data = run_json(capsys, ['transfer-curve', '--f', 'X^2+1'])
    assert code == cli.EXIT_OK
    assert data['type'] == 'transfer'
    assert data['pencil_ok']
    assert data['equivalence']['lhs']


def test_lgp_scan(capsys):
    code, data = run_json(capsys, ['lgp-scan', '--degree', '1', '--samples', '5'])
    assert code == cli.EXIT_OK
    assert data['kind'] == 'lgp4'
    assert data['counters']['refuted'] == 0


def test_corpus(capsys):
    code, data = run_json(capsys, ['corpus', '--kind', 'sqref', '--degree', '2'])
    assert code == cli.EXIT_OK
    assert data['counters']['errors'] == 0


@pytest.mark.parametrize("argv", [
    [],
    ['isotropy', '--form', '1;;2'],
    ['certify-sqref', '--poly', 'X^2+1', '--unknown'],
    ['certify-sqref', '--field', 'gf(4)', '--poly', 'X'],
    ['certify-sqref', '--field', 'gf(6)', '--poly', 'X'],
    ['corpus', '--kind', 'cubic', '--degree', '2'],
])
def test_usage_errors(capsys, argv):
    assert cli.run(argv) == cli.EXIT_USAGE
    _, err = capsys.readouterr()
    assert "error" in err
