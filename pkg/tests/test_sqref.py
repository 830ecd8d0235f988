"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.sqref module. Requires "pytest" to run.
"""

import random
import pytest
from sqreflex import gf
from sqreflex import polyring
from sqreflex import quotalg
from sqreflex import places
from sqreflex import sqref
from sqreflex.places import Place, RamSeq
from sqreflex.exceptions import NotSquareFree, ZeroPolynomial, NotCoprime, CapExceeded, UnsupportedSupport, \
    BadInfinityClass, PreconditionViolated, DegreeTooSmall, InvalidRamification


@pytest.fixture
def f3():
    return gf.make_field(3)


def P(field, text):
    return polyring.parse_poly(field, text)


def test_is_square_mod(f3):
    assert not sqref.is_square_mod(P(f3, "2"), P(f3, "X"))
    assert sqref.is_square_mod(P(f3, "X + 1"), P(f3, "X"))
    # every element is a square modulo a constant
    assert sqref.is_square_mod(P(f3, "2"), P(f3, "2"))
    with pytest.raises(NotCoprime):
        sqref.is_square_mod(P(f3, "X"), P(f3, "X^2 + X"))


def test_is_square_mod_prime_power(f3):
    # units modulo X^2 are squares iff their constant term is
    assert sqref.is_square_mod(P(f3, "X + 1"), P(f3, "X^2"))
    assert not sqref.is_square_mod(P(f3, "X + 2"), P(f3, "X^2"))


def test_witness_bound(f3):
    assert sqref.witness_bound(P(f3, "X^3 + 2*X")) == 4
    assert sqref.witness_bound(P(f3, "X")) == 1


def test_kornblum_find(f3):
    assert sqref.kornblum_find(P(f3, "X"), P(f3, "2"), 1, 6) == P(f3, "X + 2")
    assert sqref.kornblum_find(P(f3, "X^2"), P(f3, "1"), 0, 6) == P(f3, "X^2 + 1")
    assert sqref.kornblum_find(P(f3, "X"), P(f3, "1"), 0, 6) == P(f3, "X^2 + 1")


def test_kornblum_find_congruence():
    F = gf.make_field(5)
    f = P(F, "X^2 + 2")
    g0 = P(F, "3*X + 1")
    q = sqref.kornblum_find(f, g0, 1, 9)
    assert q.degree % 2 == 1
    assert polyring.is_irreducible(q)
    assert (q - g0) % f == 0


def test_kornblum_find_errors(f3):
    with pytest.raises(NotCoprime):
        sqref.kornblum_find(P(f3, "X"), P(f3, "X"), 1, 3)
    with pytest.raises(CapExceeded):
        sqref.kornblum_find(P(f3, "X^2"), P(f3, "2"), 1, 1)


def test_check_pair(f3):
    f = P(f3, "X^2 + X")
    alg = quotalg.QuotAlg(f)
    entry = sqref.check_pair(f, alg(2))
    assert entry.witness == P(f3, "2")
    assert entry.path == sqref.PATH_EXHAUSTIVE
    entry = sqref.check_pair(P(f3, "X"), quotalg.QuotAlg(P(f3, "X"))(1))
    assert entry.witness == 1


def test_verify_witness(f3):
    f = P(f3, "X^2 + X")
    alg = quotalg.QuotAlg(f)
    assert all(sqref.verify_witness(f, alg(2), P(f3, "2")).values())
    checks = sqref.verify_witness(f, alg(2), P(f3, "X + 1"))
    assert not checks['coprime']
    checks = sqref.verify_witness(f, alg(2), P(f3, "1"))
    assert checks['coprime']
    assert not checks['square_class']


def test_certify_split_cubic(f3):
    f = P(f3, "X^3 + 2*X")
    cert = sqref.certify(f)
    assert cert.is_certificate
    assert len(cert) == 4
    assert sqref.verify_certificate(cert)


@pytest.mark.parametrize("text", ["X", "2*X + 1", "X^2 + 1", "2*X^2 + X", "X^3 + 2*X + 1", "X^4 + X + 2",
                                  "2*X^4 + 1", "X^5 + 2*X + 1"])
def test_certify_f3(f3, text):
    f = P(f3, text)
    cert = sqref.certify(f)
    assert cert.is_certificate
    assert sqref.verify_certificate(cert)
    for entry in cert:
        assert all(entry.checks.values())


@pytest.mark.parametrize("p, text", [(5, "X^3 + X + 1"), (7, "3*X^2 + 1"), (9, "X^3 + (t+1)*X + t")])
def test_certify_other_fields(p, text):
    F = gf.parse_field("gf(" + str(p) + ")")
    cert = sqref.certify(P(F, text))
    assert sqref.verify_certificate(cert)


def test_certify_exhaustive(f3):
    f = P(f3, "X^2 + X")
    cert = sqref.certify(f, exhaustive=True)
    assert sqref.verify_certificate(cert)
    assert all(e.path == sqref.PATH_EXHAUSTIVE for e in cert)


def test_certify_reproducible(f3):
    f = P(f3, "X^4 + X + 2")
    c1 = sqref.certify(f, seed=3)
    c2 = sqref.certify(f, seed=3)
    assert [e.witness for e in c1] == [e.witness for e in c2]


def test_certify_constant(f3):
    cert = sqref.certify(P(f3, "2"))
    assert cert.is_certificate
    assert len(cert) == 0
    assert sqref.verify_certificate(cert)


def test_certify_errors(f3):
    with pytest.raises(NotSquareFree):
        sqref.certify(P(f3, "X^2"))
    with pytest.raises(ZeroPolynomial):
        sqref.certify(polyring.Poly(f3))


def test_verify_certificate_rejects_tampering(f3):
    f = P(f3, "X^3 + 2*X")
    cert = sqref.certify(f)
    entries = cert.entries
    bad = sqref.CertificateEntry(entries[0].alpha, P(f3, "X"), entries[0].path)
    tampered = sqref.SqRefCertificate(f, [bad] + entries[1:])
    assert not sqref.verify_certificate(tampered)
    assert not sqref.verify_certificate(sqref.SqRefCertificate(f, entries[1:]))


def test_refutation_result(f3):
    f = P(f3, "X")
    res = sqref.SqRefRefutation(f, quotalg.QuotAlg(f)(2))
    assert not res.is_certificate
    assert res.f == f


def test_minimal_realization(f3):
    rho = places.ramify(P(f3, "X"), P(f3, "2"))
    assert sqref.minimal_realization(rho, P(f3, "X")) == P(f3, "2")


def test_minimal_realization_degree_bound(f3):
    rng = random.Random(5)
    polys = [f for f in polyring.polys_up_to_degree(f3, 4) if f.degree >= 1 and polyring.is_squarefree(f)]
    inf = Place.infinity(f3)
    checked = 0
    while checked < 50:
        f = rng.choice(polys)
        supp = [Place(p) for p in polyring.support(f)]
        chosen = [p for p in supp if rng.random() < 0.5]
        if len(chosen) % 2:
            if f.degree % 2 == 0 and gf.is_square(f.lc):
                continue
            chosen.append(inf)
        rho = RamSeq(chosen, f3)
        g = sqref.minimal_realization(rho, f)
        assert g is not None
        assert g.degree <= f.degree // 2
        assert places.ramify(f, g) == rho
        checked += 1


def test_realize_ramification(f3):
    rho = places.ramify(P(f3, "X"), P(f3, "2"))
    g = sqref.realize_ramification(rho, P(f3, "X"))
    assert g == P(f3, "X + 2")
    assert places.ramify(P(f3, "X"), g) == rho


def test_realize_ramification_empty(f3):
    assert sqref.realize_ramification(RamSeq([], f3), P(f3, "X^2 + 1")).is_one()


@pytest.mark.parametrize("text", ["X^3 + 2*X", "X^2 + 1", "2*X^3 + X^2 + 1", "X^4 + X^2 + 2"])
def test_realize_all_sequences(f3, text):
    f = P(f3, text)
    supp = [Place(p) for p in polyring.support(f)]
    inf = Place.infinity(f3)
    lc_square = gf.is_square(f.lc)
    for mask in range(1, 2 ** len(supp)):
        chosen = [p for i, p in enumerate(supp) if mask >> i & 1]
        if len(chosen) % 2 and f.degree % 2 == 0 and lc_square:
            continue
        rho = RamSeq(chosen + ([inf] if len(chosen) % 2 else []), f3)
        g = sqref.realize_ramification(rho, f)
        assert places.ramify(f, g) == rho


@pytest.mark.parametrize("text, support", [
    ("X", ["X"]),
    ("X^3 + 2*X", ["X"]),
    ("X^3 + 2*X", ["X + 2"]),
    ("2*X^2 + 2", ["X^2 + 1"]),
])
def test_realize_infinity_class(f3, text, support):
    # odd degree with square lc, or even degree with non-square lc
    f = P(f3, text)
    rho = RamSeq([Place(P(f3, s)) for s in support] + [Place.infinity(f3)], f3)
    assert rho.at_infinity
    g = sqref.realize_ramification(rho, f)
    assert places.ramify(f, g) == rho


def test_realize_exhaustive(f3):
    f = P(f3, "X^3 + 2*X")
    rho = RamSeq([Place(P(f3, "X")), Place(P(f3, "X + 1"))], f3)
    g = sqref.realize_ramification(rho, f, exhaustive=True)
    assert places.ramify(f, g) == rho
    assert g.degree <= 1


def test_realize_ramification_errors(f3):
    with pytest.raises(UnsupportedSupport):
        sqref.realize_ramification(places.ramify(P(f3, "X + 1"), P(f3, "2")), P(f3, "X"))
    rho = RamSeq([Place(P(f3, "X^2 + 1")), Place.infinity(f3)], f3)
    with pytest.raises(BadInfinityClass):
        sqref.realize_ramification(rho, P(f3, "X^2 + 1"))
    with pytest.raises(InvalidRamification):
        sqref.realize_ramification(RamSeq([Place(P(f3, "X"))]), P(f3, "X^2 + X"))
    with pytest.raises(NotSquareFree):
        sqref.realize_ramification(RamSeq([], f3), P(f3, "X^2"))


def test_ram_reduce(f3):
    f = P(f3, "X^2 + X")
    rho = RamSeq([Place(P(f3, "X"))])
    g = sqref.ram_reduce(rho, f)
    assert g == P(f3, "X + 2")
    rest = rho + places.ramify(f, g)
    assert rest.support == [Place(P(f3, "X + 2"))]


def test_ram_reduce_unsupported(f3):
    with pytest.raises(UnsupportedSupport):
        sqref.ram_reduce(RamSeq([Place(P(f3, "X + 1"))]), P(f3, "X"))


def test_bezout_reduce(f3):
    assert sqref.bezout_reduce(P(f3, "X^3 + 2*X"), P(f3, "X^2 + 1")) == P(f3, "X^2 + 1")
    assert sqref.bezout_reduce(P(f3, "X^2 + X"), P(f3, "1")) == P(f3, "X + 1")


def test_bezout_reduce_parity(f3):
    f = P(f3, "X^3 + 2*X + 1")
    for g in polyring.polys_up_to_degree(f3, 2):
        g_star = sqref.bezout_reduce(f, g)
        assert g_star.degree % 2 == (f.degree - 1) % 2
        assert quotalg.is_square_class(quotalg.QuotAlg(f)(g * g_star)) == [True]


def test_bezout_reduce_errors(f3):
    with pytest.raises(DegreeTooSmall):
        sqref.bezout_reduce(P(f3, "X"), P(f3, "1"))
    with pytest.raises(NotCoprime):
        sqref.bezout_reduce(P(f3, "X^2 + X"), P(f3, "X"))


def test_counterexample_form_guard(f3):
    with pytest.raises(PreconditionViolated):
        sqref.counterexample_form(P(f3, "X"), places.ramify(P(f3, "X"), P(f3, "2")))
    rho = RamSeq([Place(P(f3, "X")), Place(P(f3, "X + 1"))], f3)
    with pytest.raises(PreconditionViolated):
        sqref.counterexample_form(P(f3, "X^3 + 2*X"), rho)
