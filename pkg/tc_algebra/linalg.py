"""Square matrices of exact rationals, stored as tuples of row tuples."""
from fractions import Fraction

from tc_algebra.errors import DimensionMismatchError, IndexOutOfRangeError


def from_rows(rows):
    matrix = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if any(len(row) != len(matrix) for row in matrix):
        raise DimensionMismatchError(f"matrix is not square: {len(matrix)} rows")
    return matrix


def zeros(size):
    return tuple((Fraction(0),) * size for _ in range(size))


def identity(size):
    return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))


def scalar(c, size):
    return tuple(tuple(Fraction(c) if i == j else Fraction(0) for j in range(size))
                 for i in range(size))


def matrix_unit(i, j, size):
    """E_ij with 1-based indices."""
    if not (1 <= i <= size and 1 <= j <= size):
        raise IndexOutOfRangeError(f"matrix unit E_{i}{j} outside size {size}")
    return tuple(tuple(Fraction(int(r == i - 1 and c == j - 1)) for c in range(size))
                 for r in range(size))


def all_units(size):
    return [(i, j, matrix_unit(i, j, size)) for i in range(1, size + 1) for j in range(1, size + 1)]


def size_of(matrix):
    return len(matrix)


def _check(left, right):
    if len(left) != len(right):
        raise DimensionMismatchError(f"matrix sizes differ: {len(left)} and {len(right)}")


def add(left, right):
    _check(left, right)
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(left, right))


def neg(matrix):
    return tuple(tuple(-a for a in row) for row in matrix)


def scale(matrix, c):
    c = Fraction(c)
    return tuple(tuple(c * a for a in row) for row in matrix)


def mul(left, right):
    _check(left, right)
    size = len(left)
    return tuple(tuple(sum((left[i][k] * right[k][j] for k in range(size)), Fraction(0))
                       for j in range(size))
                 for i in range(size))


def transpose(matrix):
    return tuple(zip(*matrix)) if matrix else ()


def is_zero(matrix):
    return all(a == 0 for row in matrix for a in row)


def entries(matrix):
    """(i, j, value) for every nonzero entry, 0-based."""
    return [(i, j, a) for i, row in enumerate(matrix) for j, a in enumerate(row) if a != 0]
