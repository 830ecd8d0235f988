"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.qforms module. Requires "pytest" to run.
"""

import random
import itertools
import pytest
from sqreflex import gf
from sqreflex import polyring
from sqreflex import places
from sqreflex import qforms
from sqreflex.qforms import DiagForm
from sqreflex.places import Place
from sqreflex.exceptions import ZeroEntry, ParseError, NotSquareFree, PreconditionViolated


@pytest.fixture
def f3():
    return gf.make_field(3)


def P(field, text):
    return polyring.parse_poly(field, text)


def form(field, text):
    return qforms.parse_form(field, text)


def test_normalization(f3):
    phi = DiagForm([P(f3, "X^3"), P(f3, "2*X^2")])
    assert phi.values == [P(f3, "X"), P(f3, "2")]
    assert phi.entries == [(f3(1), P(f3, "X")), (f3(2), P(f3, "1"))]
    assert phi == DiagForm([P(f3, "X"), 2], f3)


def test_parse_form(f3):
    phi = form(f3, "1; X; (X)/(X + 1)")
    assert phi.dim == 3
    assert phi.values[2] == P(f3, "X^2 + X")
    assert str(phi) == "<1, X, X^2 + X>"


def test_parse_form_errors(f3):
    with pytest.raises(ParseError):
        form(f3, "1;;2")
    with pytest.raises(ZeroEntry):
        form(f3, "1; 0")


def test_form_operations(f3):
    phi = form(f3, "X; X + 1")
    assert phi.determinant == P(f3, "X^2 + X")
    assert phi.scale(P(f3, "X")).values == [P(f3, "1"), P(f3, "X^2 + X")]
    assert (phi + form(f3, "2")).dim == 3
    assert phi.evaluate([P(f3, "1"), P(f3, "X")]) == P(f3, "X^3 + X^2 + X")
    assert phi.places() == [Place(P(f3, "X")), Place(P(f3, "X + 1")), Place.infinity(f3)]


def test_pfister_form(f3):
    assert qforms.pfister_form(2, P(f3, "X"), field=f3) == form(f3, "1; 1; 2*X; 2*X")


def test_local_isotropy(f3):
    inf = Place.infinity(f3)
    assert not qforms.local_isotropy(form(f3, "1; 1"), inf)
    assert qforms.local_isotropy(form(f3, "1; 2"), inf)
    assert qforms.local_isotropy(form(f3, "1; 1; 1"), inf)
    phi = form(f3, "1; 1; 2*X; 2*X")
    assert not qforms.local_isotropy(phi, Place(P(f3, "X")))


def test_local_table(f3):
    table = qforms.local_table(form(f3, "1; 1; 2*X; 2*X"))
    assert [str(p) for p, _ in table] == ["X", "inf"]
    assert not table[0][1]


def test_reduce_four(f3):
    f, g, h = qforms.reduce_four(form(f3, "1; 1; 1; 1"))
    assert f == 1
    assert g == 2
    assert h == 2
    with pytest.raises(ValueError):
        qforms.reduce_four(form(f3, "1; 1; 1"))


def test_find_slot_partner(f3):
    assert qforms.find_slot_partner(P(f3, "X"), P(f3, "X"), P(f3, "2")) == P(f3, "2")
    assert qforms.find_slot_partner(P(f3, "X"), P(f3, "1"), P(f3, "1")) == P(f3, "1")


def test_find_slot_partner_reproduces_symbol(f3):
    f = P(f3, "X^2 + 2")
    g = P(f3, "X + 2")
    h = P(f3, "2*X")
    q = qforms.find_slot_partner(f, g, h)
    assert q is not None
    assert places.ramify(f, q) == places.ramify(g, h)


def test_find_slot_partner_obstruction(f3):
    # f = X^2 + 1 is a square at X, where {2, X} ramifies
    assert qforms.find_slot_partner(P(f3, "X^2 + 1"), P(f3, "2"), P(f3, "X")) is None


def test_find_slot_partner_not_squarefree(f3):
    with pytest.raises(NotSquareFree):
        qforms.find_slot_partner(P(f3, "X^2"), P(f3, "1"), P(f3, "X"))


def test_common_slot(f3):
    f, partners = qforms.common_slot([(P(f3, "X"), P(f3, "2"))])
    assert f == P(f3, "2*X")
    assert places.ramify(f, partners[0]) == places.ramify(P(f3, "X"), P(f3, "2"))


def test_common_slot_several(f3):
    symbols = [(P(f3, "X"), P(f3, "X + 1")), (P(f3, "X^2 + 1"), P(f3, "2")), (P(f3, "2"), P(f3, "2"))]
    f, partners = qforms.common_slot(symbols)
    assert len(partners) == 3
    for (a, b), g in zip(symbols, partners):
        assert places.ramify(f, g) == places.ramify(a, b)


def test_common_slot_empty(f3):
    f, partners = qforms.common_slot([], field=f3)
    assert f == P(f3, "2*X")
    assert partners == []


def test_isotropy_dim1(f3):
    verdict = qforms.is_isotropic(form(f3, "X"))
    assert not verdict
    assert verdict.justification == qforms.ANISOTROPIC_1DIM


def test_isotropy_dim2(f3):
    verdict = qforms.is_isotropic(form(f3, "1; 2"))
    assert verdict.isotropic
    assert verdict.justification == qforms.TWO_DIM_SQUARE
    assert verdict.witness == [P(f3, "1"), P(f3, "1")]
    assert not qforms.is_isotropic(form(f3, "1; 1"))
    assert not qforms.is_isotropic(form(f3, "1; X"))
    assert qforms.is_isotropic(form(f3, "X; 2*X"))


def test_isotropy_dim2_f5():
    F5 = gf.make_field(5)
    verdict = qforms.is_isotropic(form(F5, "1; 1"))
    assert verdict.isotropic
    phi = form(F5, "1; 1")
    assert phi.evaluate(verdict.witness).is_zero()


def test_isotropy_dim3(f3):
    verdict = qforms.is_isotropic(form(f3, "1; 1; 1"))
    assert verdict.isotropic
    assert verdict.justification == qforms.SYMBOL_VANISHES
    verdict = qforms.is_isotropic(form(f3, "1; 1; X"))
    assert not verdict.isotropic
    assert verdict.justification == qforms.SYMBOL_NONZERO
    assert verdict.place == Place(P(f3, "X"))


def test_isotropy_dim4(f3):
    verdict = qforms.is_isotropic(form(f3, "1; 1; 1; 1"))
    assert verdict.isotropic
    assert verdict.justification == qforms.SLOT_PARTNER
    assert verdict.partner == 1
    verdict = qforms.is_isotropic(form(f3, "1; 1; 2*X; 2*X"))
    assert not verdict.isotropic
    assert verdict.justification == qforms.LOCAL_GLOBAL
    assert verdict.place == Place(P(f3, "X"))


def test_isotropy_dim5(f3):
    verdict = qforms.is_isotropic(form(f3, "1; 1; 2*X; 2*X; X + 1"))
    assert verdict.isotropic
    assert verdict.justification == qforms.DIM5_PLUS


def test_isotropy_witness(f3):
    phi = form(f3, "1; 1; 1")
    verdict = qforms.is_isotropic(phi, witness_cap=2)
    assert verdict.witness is not None
    assert phi.evaluate(verdict.witness).is_zero()
    assert any(not x.is_zero() for x in verdict.witness)


def test_lgp_cross_check(f3):
    report = qforms.lgp_cross_check(form(f3, "1; 1; 2*X; 2*X"))
    assert report['agree']
    assert not report['local']
    assert not report['slot']
    assert report['refinement_place'] == Place(P(f3, "X"))


def test_lgp_random_forms(f3):
    rng = random.Random(11)
    polys = list(polyring.polys_up_to_degree(f3, 2))
    for _ in range(40):
        phi = DiagForm([rng.choice(polys) for _ in range(4)], f3)
        report = qforms.lgp_cross_check(phi)
        assert report['agree']
        if not report['local']:
            assert report['refinement_place'] is not None


def test_vector_search(f3):
    vec = qforms.vector_search(form(f3, "1; 2"))
    assert vec == [P(f3, "1"), P(f3, "1")]
    phi = form(f3, "1; X; 2*X + 2")
    vec = qforms.vector_search(phi, 2)
    assert vec is not None
    assert phi.evaluate(vec).is_zero()
    assert next(x for x in vec if not x.is_zero()).lc == 1


def test_vector_search_nothing(f3):
    with pytest.warns(UserWarning):
        assert qforms.vector_search(form(f3, "1; 1"), 1) is None
    with pytest.raises(ValueError):
        qforms.vector_search(form(f3, "1"))


def test_hyper_example_form(f3):
    f = P(f3, "X^2 + 2")
    phi = qforms.hyper_example_form(f, P(f3, "X + 2"))
    assert phi.dim == 4
    assert all(flag for _, flag in qforms.local_table(phi))
    assert qforms.is_isotropic(phi).isotropic


def test_hyper_example_form_errors(f3):
    f = P(f3, "X^2 + 2")
    with pytest.raises(PreconditionViolated):
        qforms.hyper_example_form(f, P(f3, "X + 1"))
    with pytest.raises(PreconditionViolated):
        qforms.hyper_example_form(f, P(f3, "X"))
    with pytest.raises(PreconditionViolated):
        qforms.hyper_example_form(f, P(f3, "X^2 + 2"))


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_isotropy_matches_vector_search(f3, dim):
    entries = [P(f3, t) for t in ("1", "2", "X", "2*X", "X + 1", "2*X + 2", "X^2 + X")]
    for values in itertools.combinations_with_replacement(entries, dim):
        phi = DiagForm(list(values), f3)
        verdict = qforms.is_isotropic(phi)
        if dim == 1:
            assert not verdict.isotropic
        elif verdict.isotropic:
            vec = qforms.vector_search(phi, 6)
            assert vec is not None
            assert phi.evaluate(vec).is_zero()
        else:
            with pytest.warns(UserWarning):
                assert qforms.vector_search(phi, 1) is None


def test_vector_search_random_dim5(f3):
    rng = random.Random(8)
    polys = list(polyring.polys_up_to_degree(f3, 2))
    for _ in range(100):
        phi = DiagForm([rng.choice(polys) for _ in range(5)], f3)
        vec = qforms.vector_search(phi, 8)
        assert vec is not None
        assert phi.evaluate(vec).is_zero()


def hyper_example_instances(field, count):
    found = []
    for f in polyring.polys_up_to_degree(field, 3):
        if f.is_constant() or not polyring.is_squarefree(f):
            continue
        for p in polyring.support(f):
            try:
                found.append(qforms.hyper_example_form(f, p))
            except PreconditionViolated:
                continue
            if len(found) == count:
                return found
    return found


@pytest.mark.parametrize("p", [3, 5])
def test_hyper_example_forms_locally_isotropic(p):
    F = gf.make_field(p)
    forms = hyper_example_instances(F, 10)
    assert len(forms) == 10
    for phi in forms:
        assert all(flag for _, flag in qforms.local_table(phi))
        assert qforms.is_isotropic(phi).isotropic


@pytest.mark.parametrize("p, f, factor", [(3, "X^3 + X^2 + X + 1", "X + 1"), (5, "X^2 + 4", "X + 1")])
def test_hyper_example_form_instances(p, f, factor):
    F = gf.make_field(p)
    phi = qforms.hyper_example_form(P(F, f), P(F, factor))
    assert phi.values[1] == -P(F, factor)
    assert all(flag for _, flag in qforms.local_table(phi))
