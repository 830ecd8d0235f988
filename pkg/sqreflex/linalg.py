"""
.. module:: linalg
    :platform: Unix, Windows
    :synopsis: Provides linear algebra utility functions over finite fields

.. moduleauthor:: sqreflex developers

"""

from typing import Sequence, List, Any
from . import _linalg
from ._utilities import export

__all__ = []


@export
def matrix_transpose(m):
    # type: (Sequence[Sequence[Any]]) -> List[List[Any]]
    """ Transposes the input matrix.

    The input matrix :math:`m` is a 2-dimensional array.

    :param m: input matrix with dimensions :math:`(n \\times m)`
    :type m: list, tuple
    :return: transpose matrix with dimensions :math:`(m \\times n)`
    :rtype: list
    """
    num_cols = len(m)
    num_rows = len(m[0])
    m_t = []
    for i in range(num_rows):
        temp = []
        for j in range(num_cols):
            temp.append(m[j][i])
        m_t.append(temp)
    return m_t


@export
def matrix_multiply(m1, m2):
    # type: (Sequence[Sequence[Any]], Sequence[Sequence[Any]]) -> List[List[Any]]
    """ Matrix multiplication (iterative algorithm).

    :param m1: 1st matrix with dimensions :math:`(n \\times p)`
    :type m1: list, tuple
    :param m2: 2nd matrix with dimensions :math:`(p \\times m)`
    :type m2: list, tuple
    :return: resultant matrix with dimensions :math:`(n \\times m)`
    :rtype: list
    """
    if len(m1[0]) != len(m2):
        raise ValueError("Matrix dimensions do not match")
    mm = []
    for i in range(len(m1)):
        row = []
        for j in range(len(m2[0])):
            acc = m1[i][0] * m2[0][j]
            for k in range(1, len(m2)):
                acc = acc + m1[i][k] * m2[k][j]
            row.append(acc)
        mm.append(row)
    return mm


@export
def matrix_add(m1, m2):
    # type: (Sequence[Sequence[Any]], Sequence[Sequence[Any]]) -> List[List[Any]]
    """ Entrywise sum of two matrices of the same shape. """
    if len(m1) != len(m2) or any(len(r1) != len(r2) for r1, r2 in zip(m1, m2)):
        raise ValueError("Matrix dimensions do not match")
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(m1, m2)]


@export
def matrix_scale(m, c):
    # type: (Sequence[Sequence[Any]], Any) -> List[List[Any]]
    """ Multiplies every entry by a scalar. """
    return [[c * a for a in row] for row in m]


@export
def matrix_rank(m):
    # type: (Sequence[Sequence[Any]]) -> int
    """ Rank of a matrix over a field, by row reduction.

    :param m: input matrix
    :type m: list, tuple
    :return: rank
    :rtype: int
    """
    _, pivots = _linalg.row_echelon(m)
    return len(pivots)


@export
def quadratic_value(m, vector):
    # type: (Sequence[Sequence[Any]], Sequence[Any]) -> Any
    """ Evaluates the quadratic form :math:`v^T M v` of a Gram matrix.

    :param m: square matrix
    :type m: list, tuple
    :param vector: coordinate vector
    :type vector: list, tuple
    :return: value of the form
    """
    if len(vector) != len(m):
        raise ValueError("Vector length does not match the matrix size")
    acc = None
    for i, row in enumerate(m):
        for j, a in enumerate(row):
            term = a * vector[i] * vector[j]
            acc = term if acc is None else acc + term
    return acc
