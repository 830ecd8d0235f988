"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.linalg module. Requires "pytest" to run.
"""

import pytest
from sqreflex import gf
from sqreflex import linalg


@pytest.fixture
def f5():
    return gf.make_field(5)


def mat(field, rows):
    return [[field(a) for a in row] for row in rows]


def test_matrix_transpose():
    m = [[1, 2, 3], [4, 5, 6]]
    assert linalg.matrix_transpose(m) == [[1, 4], [2, 5], [3, 6]]


def test_matrix_multiply():
    m1 = [[1, 2], [3, 4]]
    m2 = [[0, 1], [1, 0]]
    assert linalg.matrix_multiply(m1, m2) == [[2, 1], [4, 3]]


def test_matrix_multiply_dims():
    with pytest.raises(ValueError):
        linalg.matrix_multiply([[1, 2]], [[1, 2]])


def test_matrix_add_scale(f5):
    m = mat(f5, [[1, 2], [3, 4]])
    assert linalg.matrix_add(m, m) == mat(f5, [[2, 4], [1, 3]])
    assert linalg.matrix_scale(m, f5(3)) == mat(f5, [[3, 1], [4, 2]])
    with pytest.raises(ValueError):
        linalg.matrix_add(m, mat(f5, [[1, 2]]))


@pytest.mark.parametrize("rows, res", [
    ([[1, 2], [2, 4]], 1),
    ([[1, 2], [3, 4]], 2),
    ([[0, 0], [0, 0]], 0),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 4]], 3),
    ([[0, 1, 2], [0, 2, 4], [1, 0, 0]], 2),
])
def test_matrix_rank(f5, rows, res):
    assert linalg.matrix_rank(mat(f5, rows)) == res


def test_matrix_rank_keeps_input(f5):
    m = mat(f5, [[2, 1], [1, 3]])
    linalg.matrix_rank(m)
    assert m == mat(f5, [[2, 1], [1, 3]])


def test_quadratic_value(f5):
    # x^2 + 2xy + 3y^2
    m = mat(f5, [[1, 1], [1, 3]])
    assert linalg.quadratic_value(m, [f5(1), f5(1)]) == 1
    assert linalg.quadratic_value(m, [f5(0), f5(2)]) == 2
    m = mat(f5, [[1, 0], [0, 1]])
    assert linalg.quadratic_value(m, [f5(1), f5(2)]) == 0
    with pytest.raises(ValueError):
        linalg.quadratic_value(m, [f5(1)])
