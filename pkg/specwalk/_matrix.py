# encoding: utf-8

from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np

from ._const import MODULAR_RANK_PRIME
from ._logger import logger
from .error import AlgebraError, DimensionMismatchError


def _lcm(a, b):
    return a * b // gcd(a, b)


def _integer_row(row):
    """
    Scale a row of fractions to integers; returns ``(integer_row, scale)``.
    """

    scale = reduce(_lcm, (value.denominator for value in row), 1)

    return ([int(value * scale) for value in row], scale)


def _bareiss(rows):
    """
    Fraction-free row echelon form of an integer matrix.

    :return: ``(echelon_rows, pivot_columns, swap_count)``
    """

    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    previous = 1
    r = 0
    pivots = []
    swaps = 0

    for c in range(ncols):
        if r == nrows:
            break

        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            swaps += 1

        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                quotient, remainder = divmod(m[r][c] * m[i][j] - m[i][c] * m[r][j], previous)
                if remainder:
                    raise AlgebraError("inexact fraction-free elimination step")
                m[i][j] = quotient
            m[i][c] = 0

        previous = m[r][c]
        pivots.append(c)
        r += 1

    return (m, pivots, swaps)


def modular_rank(rows, prime=MODULAR_RANK_PRIME):
    """
    Rank of an integer matrix over ``GF(prime)``, never above its rank over the rationals.
    """

    m = [[value % prime for value in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue

        m[rank], m[pivot] = m[pivot], m[rank]
        inverse = pow(m[rank][c], prime - 2, prime)
        pivot_row = [value * inverse % prime for value in m[rank]]
        m[rank] = pivot_row
        for i in range(rank + 1, len(m)):
            factor = m[i][c]
            if factor:
                m[i] = [(x - factor * y) % prime for x, y in zip(m[i], pivot_row)]
        rank += 1

    return rank


class BigRationalMatrix(object):
    """
    Dense matrix of :py:class:`fractions.Fraction` entries.
    """

    @property
    def rows(self):
        return self.__rows

    @property
    def shape(self):
        return (len(self.__rows), self.__ncols)

    def __init__(self, rows, ncols=None):
        rows = [[Fraction(value) for value in row] for row in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise DimensionMismatchError("ragged matrix rows")

        self.__rows = rows
        self.__ncols = ncols

    def __eq__(self, other):
        if not isinstance(other, BigRationalMatrix):
            return NotImplemented

        return self.shape == other.shape and self.__rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __repr__(self):
        return "BigRationalMatrix(shape={})".format(self.shape)

    def __getitem__(self, index):
        i, j = index

        return self.__rows[i][j]

    def __add__(self, other):
        self.__check_same_shape(other)

        return BigRationalMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.__rows, other.rows)], self.__ncols
        )

    def __sub__(self, other):
        self.__check_same_shape(other)

        return BigRationalMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.__rows, other.rows)], self.__ncols
        )

    def __mul__(self, scalar):
        return BigRationalMatrix([[x * scalar for x in row] for row in self.__rows], self.__ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.__ncols != other.shape[0]:
            raise DimensionMismatchError(
                "cannot multiply {} by {}".format(self.shape, other.shape)
            )

        columns = list(zip(*other.rows))

        return BigRationalMatrix(
            [[sum(x * y for x, y in zip(row, col)) for col in columns] for row in self.__rows],
            other.shape[1],
        )

    def dot(self, other):
        return self.__matmul__(other)

    @classmethod
    def identity(cls, size):
        return cls([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_numpy_int(cls, array):
        array = np.asarray(array)
        if array.ndim != 2:
            raise DimensionMismatchError("expected a 2-d array: ndim={:d}".format(array.ndim))

        return cls([[int(value) for value in row] for row in array.tolist()], array.shape[1])

    @classmethod
    def from_columns(cls, columns, nrows):
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    def transpose(self):
        return BigRationalMatrix(
            [list(col) for col in zip(*self.__rows)] if self.__rows else [], len(self.__rows)
        )

    def column(self, j):
        return [row[j] for row in self.__rows]

    def submatrix(self, row_indices, col_indices):
        return BigRationalMatrix(
            [[self.__rows[i][j] for j in col_indices] for i in row_indices], len(col_indices)
        )

    def apply(self, vector):
        if len(vector) != self.__ncols:
            raise DimensionMismatchError(
                "vector length {:d} != {:d}".format(len(vector), self.__ncols)
            )

        return [sum(x * y for x, y in zip(row, vector)) for row in self.__rows]

    def is_identity(self):
        return self == BigRationalMatrix.identity(len(self.__rows))

    def is_symmetric(self):
        return self == self.transpose()

    def rank(self):
        if not self.__rows or not self.__ncols:
            return 0

        _echelon, pivots, _swaps = _bareiss([_integer_row(row)[0] for row in self.__rows])

        return len(pivots)

    def det(self):
        size, ncols = self.shape
        if size != ncols:
            raise DimensionMismatchError("determinant of a non-square {} matrix".format(self.shape))
        if size == 0:
            return Fraction(1)

        scaled = [_integer_row(row) for row in self.__rows]
        echelon, pivots, swaps = _bareiss([row for row, _scale in scaled])
        if len(pivots) < size:
            return Fraction(0)

        scale = reduce(lambda x, y: x * y, (s for _row, s in scaled), 1)
        sign = -1 if swaps % 2 else 1

        return Fraction(sign * echelon[size - 1][size - 1], scale)

    def solve(self, vector):
        """
        Exact solution of ``M x = vector`` by fraction-free elimination, or |None|
        when the system is inconsistent. Free variables are set to zero.
        """

        nrows, ncols = self.shape
        if len(vector) != nrows:
            raise DimensionMismatchError(
                "right-hand side has {:d} entries, matrix has {:d} rows".format(len(vector), nrows)
            )

        augmented = [
            _integer_row(list(row) + [Fraction(value)])[0]
            for row, value in zip(self.__rows, vector)
        ]
        echelon, pivots, _swaps = _bareiss(augmented)

        if ncols in pivots:
            return None

        solution = [Fraction(0)] * ncols
        for r in reversed(range(len(pivots))):
            c = pivots[r]
            row = echelon[r]
            acc = Fraction(row[ncols]) - sum(row[j] * solution[j] for j in range(c + 1, ncols))
            solution[c] = acc / row[c]

        if self.apply(solution) != [Fraction(value) for value in vector]:
            raise AlgebraError("exact solution failed verification")

        return solution

    def inverse(self):
        size, ncols = self.shape
        if size != ncols:
            raise DimensionMismatchError("inverse of a non-square {} matrix".format(self.shape))

        columns = []
        for j in range(size):
            column = self.solve([int(i == j) for i in range(size)])
            if column is None:
                raise ZeroDivisionError("singular matrix")
            columns.append(column)

        logger.debug("inverted a {:d}x{:d} rational matrix".format(size, size))

        return BigRationalMatrix.from_columns(columns, size)

    def __check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError("shape mismatch: {} != {}".format(self.shape, other.shape))


def solve_rational_system(matrix, vector):
    """
    :return: a vector ``x`` with ``matrix x = vector`` verified exactly, or |None|
        if the system is inconsistent.
    :raises specwalk.DimensionMismatchError: incompatible sizes.
    """

    if not isinstance(matrix, BigRationalMatrix):
        matrix = BigRationalMatrix(matrix)

    return matrix.solve(vector)


def to_rational_string(value):
    """
    ``"p/q"`` decimal string of a rational number (``q`` is always present).
    """

    value = Fraction(value)

    return "{:d}/{:d}".format(value.numerator, value.denominator)
