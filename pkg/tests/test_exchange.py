"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests JSON import and export. Requires "pytest" to run.
"""

import os
import json
import pytest
from sqreflex import gf
from sqreflex import polyring
from sqreflex import places
from sqreflex import sqref
from sqreflex import qforms
from sqreflex import hyperell
from sqreflex import transfer
from sqreflex import exchange
from sqreflex import _exchange
from sqreflex.exceptions import ParseError, ConsistencyError

FILE_NAME = 'testing'


@pytest.fixture
def f3():
    return gf.make_field(3)


@pytest.fixture
def cert(f3):
    return sqref.certify(polyring.parse_poly(f3, "X^3 + 2*X"))


def P(field, text):
    return polyring.parse_poly(field, text)


def test_export_certificate(cert):
    data = json.loads(exchange.export_json_str(cert))
    assert data['schema'] == 1
    assert data['type'] == 'certificate'
    assert data['field'] == 'gf(3)'
    assert data['f'] == "X^3 + 2*X"
    assert data['lc'] == "1"
    assert len(data['classes']) == len(cert)
    for entry in data['classes']:
        assert set(entry.keys()) == {'alpha', 'witness_g', 'path', 'checks'}
        assert all(entry['checks'].values())


def test_export_is_reproducible(f3, cert):
    again = sqref.certify(P(f3, "X^3 + 2*X"))
    assert exchange.export_json_str(cert) == exchange.export_json_str(again)


def test_certificate_file(cert):
    fname = FILE_NAME + ".json"
    exchange.export_json(cert, fname)
    assert os.path.isfile(fname)
    loaded = exchange.import_certificate(fname)
    assert loaded.f == cert.f
    assert len(loaded) == len(cert)
    assert [e.witness for e in loaded] == [e.witness for e in cert]

    # Clean up temporary file if exists
    if os.path.isfile(fname):
        os.remove(fname)


def test_certificate_file_tampered(f3, cert):
    fname = FILE_NAME + ".json"
    data = _exchange.export_dict_cert(cert)
    data['classes'] = data['classes'][1:]
    with open(fname, 'w') as fp:
        json.dump(data, fp)
    with pytest.raises(ConsistencyError):
        exchange.import_certificate(fname)

    # Clean up temporary file if exists
    if os.path.isfile(fname):
        os.remove(fname)


def test_import_dict_cert_errors(cert):
    data = _exchange.export_dict_cert(cert)
    data['schema'] = 99
    with pytest.raises(ParseError):
        _exchange.import_dict_cert(data)
    data = _exchange.export_dict_cert(cert)
    data['type'] = 'isotropy'
    with pytest.raises(ParseError):
        _exchange.import_dict_cert(data)


def test_import_file_missing():
    with pytest.raises(IOError):
        exchange.import_json(FILE_NAME + "_missing.json")


def test_export_ramseq(f3):
    rho = places.ramify(P(f3, "X"), P(f3, "2"))
    data = json.loads(exchange.export_json_str(rho))
    assert data['type'] == 'ramification'
    assert data['support'] == ["X", "inf"]
    assert [r['place'] for r in data['ramification']] == ["X", "inf"]
    assert all(r['class_witness'] == "2" for r in data['ramification'])


def test_export_ramseq_residue_extension(f3):
    # 1 + i is not a square in F_9
    rho = places.ramify(P(f3, "X^2 + 1"), P(f3, "X + 1"))
    data = json.loads(exchange.export_json_str(rho))
    table = {r['place']: r['class_witness'] for r in data['ramification']}
    assert set(table) == {"X + 1", "X^2 + 1"}
    assert table["X + 1"] == "2"
    assert table["X^2 + 1"] not in ("0", "1", "2")


def test_export_verdict(f3):
    phi = qforms.parse_form(f3, "1; 1; 2*X; 2*X")
    verdict = qforms.is_isotropic(phi)
    data = json.loads(exchange.export_json_str(verdict, form=phi))
    assert data['type'] == 'isotropy'
    assert not data['isotropic']
    assert data['place'] == "X"
    assert data['form'] == ["1", "1", "2*X", "2*X"]
    assert data['local_table']
    assert not all(r['isotropic'] for r in data['local_table'])


def test_export_point(f3):
    f = P(f3, "X^3 + 2*X")
    data = json.loads(exchange.export_json_str(hyperell.odd_point_search(f, 1)))
    assert data['found']
    assert data['degree'] == 1
    data = exchange.point_report(None, P(f3, "2*X^3 + X + 2"), cap=1, complete=False)
    assert not data['found']
    assert data['cap'] == 1


def test_transfer_report(f3):
    f = P(f3, "X^2 + 1")
    g = P(f3, "1")
    system = transfer.build_system(f, g)
    points = transfer.point_enum(system, 1)
    eq = transfer.equivalence_check(f, g, 1)
    data = exchange.transfer_report(system, transfer.pencil_rank_check(system), points, eq)
    assert data['system_dims'] == [1, 3]
    assert data['pencil_ok']
    assert data['equivalence']['agree']
    assert data['equivalence']['parameter'] == "0"
    assert len(data['points_c']) == len(points.c_points)
    json.loads(exchange.export_json_str(data))


def test_export_plain_dict():
    data = json.loads(exchange.export_json_str(dict(type='kornblum', q="X + 2")))
    assert data['schema'] == 1


def test_export_unknown_type():
    with pytest.raises(TypeError):
        exchange.export_json_str(object())
