"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.hyperell module. Requires "pytest" to run.
"""

import pytest
from sqreflex import gf
from sqreflex import polyring
from sqreflex import hyperell
from sqreflex.exceptions import ConstantPolynomial, NotSquareFree


@pytest.fixture
def f3():
    return gf.make_field(3)


def P(field, text):
    return polyring.parse_poly(field, text)


def test_rational_root(f3):
    pt = hyperell.odd_point_search(P(f3, "X^3 + 2*X"), 1)
    assert pt.degree == 1
    assert pt.p == P(f3, "X")
    assert pt.y.is_zero()
    assert pt.verify()


def test_rational_point(f3):
    pt = hyperell.odd_point_search(P(f3, "2*X^4 + 1"), 1)
    assert pt.p == P(f3, "X")
    assert pt.y.rep == P(f3, "1")
    assert pt.verify()


def test_no_point_below_cap(f3):
    # takes the non-square value 2 at every element of F_3
    f = P(f3, "2*X^3 + X + 2")
    assert hyperell.odd_point_search(f, 1) is None
    assert hyperell.odd_point_search(f, 0) is None


def test_search_errors(f3):
    with pytest.raises(ConstantPolynomial):
        hyperell.odd_point_search(P(f3, "2"), 3)
    with pytest.raises(NotSquareFree):
        hyperell.odd_point_search(P(f3, "2*X^4 + X^2 + 2"), 3)


@pytest.mark.parametrize("text, res", [
    ("2*X^4 + 1", (2, True)),
    ("X^3 + 2*X", (3, False)),
    ("X^4 + 1", (4, False)),
])
def test_odd_degree_cap(f3, text, res):
    assert hyperell.odd_degree_cap(P(f3, text)) == res


def test_min_odd_degree(f3):
    assert hyperell.min_odd_degree(P(f3, "X^2 + 1")) == 1
    assert hyperell.min_odd_degree(P(f3, "2*X^4 + 1")) == 1


def test_every_curve_has_odd_point(f3):
    for d in range(1, 4):
        for f in polyring.polys_of_degree(f3, d):
            if polyring.is_squarefree(f):
                pt = hyperell.check_odd_point(f)
                assert pt.degree % 2 == 1
                assert pt.verify()


def test_half_degree_bound(f3):
    # with a non-square leading coefficient and even degree, a point of odd degree exists below deg(f) / 2
    for f in polyring.polys_of_degree(f3, 4):
        if f.lc != 2 or not polyring.is_squarefree(f):
            continue
        assert hyperell.odd_point_search(f, 3) is not None
        assert hyperell.odd_point_search(f, 2) is not None


def test_extension_field():
    F9 = gf.make_field(3, 2)
    f = P(F9, "X^3 + t*X + 1")
    pt = hyperell.check_odd_point(f)
    assert pt.verify()
