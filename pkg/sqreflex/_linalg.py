"""
.. module:: _linalg
    :platform: Unix, Windows
    :synopsis: Helper functions for linear algebra over finite fields

.. moduleauthor:: sqreflex developers

"""

# Initialize an empty __all__ for controlling imports
__all__ = []


def row_echelon(matrix_a):
    """ Gauss-Jordan elimination over a field.

    Entries must support ``+``, ``-``, ``*``, truth testing and ``inverse()``. The input is not modified.

    :param matrix_a: input matrix
    :type matrix_a: list, tuple
    :return: a tuple containing the reduced row echelon form and the list of pivot columns
    :rtype: tuple
    """
    rows = [list(r) for r in matrix_a]
    if not rows:
        return rows, []
    num_rows = len(rows)
    num_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(num_cols):
        if r == num_rows:
            break
        # Find a nonzero entry in column c
        pivot = None
        for i in range(r, num_rows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(num_rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots
