"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.quotalg module. Requires "pytest" to run.
"""

import pytest
from sqreflex import gf
from sqreflex import polyring
from sqreflex import quotalg
from sqreflex.quotalg import QuotAlg
from sqreflex.exceptions import ZeroPolynomial, ZeroInput, NonInvertible, NotSquareFree, NotASquare


@pytest.fixture
def f3():
    return gf.make_field(3)


@pytest.fixture
def split_alg(f3):
    """ E[X]/(X^2 + X) over F_3, a product of two copies of F_3 """
    return QuotAlg(polyring.parse_poly(f3, "X^2 + X"))


def P(field, text):
    return polyring.parse_poly(field, text)


def test_zero_modulus(f3):
    with pytest.raises(ZeroPolynomial):
        QuotAlg(polyring.Poly(f3))


def test_reduction(f3, split_alg):
    a = split_alg(P(f3, "X^3"))
    assert a.rep == P(f3, "X")
    assert split_alg(5).rep == 2
    assert split_alg.theta * split_alg.theta == split_alg(P(f3, "2*X"))


def test_elements(split_alg):
    elems = list(split_alg.elements())
    assert len(elems) == 9
    assert elems[0].is_zero()
    assert len(list(split_alg.units())) == 4


def test_inverse(f3):
    alg = QuotAlg(P(f3, "X^2 + 1"))
    assert alg.theta.inverse() == alg(P(f3, "2*X"))
    assert (alg(P(f3, "X + 1")) / alg(P(f3, "X + 1"))).is_one()


def test_inverse_zero_divisor(f3, split_alg):
    with pytest.raises(NonInvertible):
        split_alg(P(f3, "X")).inverse()
    assert not split_alg(P(f3, "X + 1")).is_invertible()


def test_support(f3, split_alg):
    assert split_alg.support == [P(f3, "X"), P(f3, "X + 1")]
    assert split_alg.degree == 2


def test_residue_field(f3):
    res = quotalg.residue_field(P(f3, "X^2 + 1"))
    assert res.order == 9
    assert res.is_square(res.theta)
    assert res.canonical_nonsquare().rep == P(f3, "X + 1")
    assert res.sqrt(2).rep == P(f3, "X")
    assert res.norm(P(f3, "X + 1")) == 2
    assert quotalg.residue_field(P(f3, "X^2 + 1")) is res


def test_residue_field_errors(f3):
    with pytest.raises(ValueError):
        quotalg.ResidueField(P(f3, "X^2 + 2"))
    res = quotalg.residue_field(P(f3, "X^2 + 1"))
    with pytest.raises(ZeroInput):
        res.is_square(0)
    with pytest.raises(NotASquare):
        res.sqrt(P(f3, "X + 1"))


def test_residue_field_to_base(f3):
    res = quotalg.residue_field(P(f3, "X + 1"))
    assert res.to_base(P(f3, "X")) == 2


def test_is_square_mod_prime(f3):
    assert not quotalg.is_square_mod_prime(P(f3, "2"), P(f3, "X"))
    assert quotalg.is_square_mod_prime(P(f3, "X + 1"), P(f3, "X"))
    with pytest.raises(ZeroInput):
        quotalg.is_square_mod_prime(P(f3, "X"), P(f3, "X"))


def test_norm(f3, split_alg):
    assert quotalg.norm(split_alg(P(f3, "X + 2"))) == 2
    assert quotalg.norm(split_alg(2)) == 1
    with pytest.raises(NonInvertible):
        quotalg.norm(split_alg(P(f3, "X")))


def test_is_square_class(f3, split_alg):
    assert quotalg.is_square_class(split_alg(P(f3, "2*X + 1"))) == [True, False]
    assert quotalg.is_square_class(split_alg(2)) == [False, False]


def test_is_square_class_not_squarefree(f3):
    alg = QuotAlg(P(f3, "X^2"))
    with pytest.raises(NotSquareFree):
        quotalg.is_square_class(alg(1))


def test_square_class_reps(f3, split_alg):
    reps = quotalg.square_class_reps(split_alg)
    assert [a.rep for a in reps] == [P(f3, "1"), P(f3, "2*X + 1"), P(f3, "X + 2"), P(f3, "2")]


def test_square_class_reps_distinct(f3):
    alg = QuotAlg(P(f3, "X^3 + 2*X"))
    reps = quotalg.square_class_reps(alg)
    assert len(reps) == 8
    assert len(set(tuple(quotalg.is_square_class(a)) for a in reps)) == 8


def test_norm_condition_filter(f3, split_alg):
    reps = quotalg.square_class_reps(split_alg)
    kept = quotalg.norm_condition_filter(split_alg, reps)
    assert [a.rep for a in kept] == [P(f3, "1"), P(f3, "2")]


def test_norm_condition_filter_nonsquare_lc(f3):
    alg = QuotAlg(P(f3, "2*X^2 + 2*X"))
    reps = quotalg.square_class_reps(alg)
    assert quotalg.norm_condition_filter(alg, reps) == reps
