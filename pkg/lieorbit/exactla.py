#!/usr/bin/env python

# Copyright (c) 2026, The lie-orbit-python Authors
#
# Permission to use, copy, modify, and/or distribute this software for any
# purpose with or without fee is hereby granted, provided that the above
# copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR
# ANY SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES
# WHATSOEVER RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN
# ACTION OF CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF
# OR IN CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.


"""Exact linear algebra

Matrices and subspaces over the rationals (:class:`fractions.Fraction`), over
the Gaussian rationals (:class:`Gaussian`, used for complexifications), and,
when a tolerance is given, over floats.

Row reduction in exact mode uses the first nonzero entry of each column,
scanning rows in the order given, so every result is deterministic and two
row-equivalent bases always reduce to the same canonical basis. In float
mode the largest entry of the column is used as pivot instead (partial
pivoting), and entries within the tolerance of zero count as zero.

"""

import numbers
from fractions import Fraction

import numpy as np

from lieorbit import getlogger
from lieorbit.errors import (
    AmbientMismatch,
    DimensionMismatch,
    InconsistentSystem,
    NotASubspace,
    SingularMatrix,
)

logger = getlogger(__name__)

DEFAULT_TOLERANCE = 1e-9


def _rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Gaussian):
        if value.imag != 0:
            raise TypeError("{0} is not real".format(value))
        return value.real
    return Fraction(value)


class Gaussian(object):
    """A complex number whose real and imaginary parts are exact rationals

    Args:
        real: Real part (int, Fraction or rational string)
        imag: Imaginary part (int, Fraction or rational string)

    """

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        self.real = _rational(real)
        self.imag = _rational(imag)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, numbers.Rational):
            return Gaussian(other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.real * other.real + other.imag * other.imag
        if norm == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        numerator = self * other.conjugate()
        return Gaussian(numerator.real / norm, numerator.imag / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Gaussian(-self.real, -self.imag)

    def __pos__(self):
        return self

    def __abs__(self):
        return abs(complex(self))

    def __eq__(self, other):
        if isinstance(other, complex):
            return complex(self) == other
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def conjugate(self):
        return Gaussian(self.real, -self.imag)

    @property
    def is_real(self):
        return self.imag == 0

    def __repr__(self):
        return "Gaussian({0!r}, {1!r})".format(str(self.real), str(self.imag))

    def __str__(self):
        if self.imag == 0:
            return str(self.real)
        if self.real == 0:
            return "{0}i".format(self.imag)
        sign = "+" if self.imag > 0 else "-"
        return "{0}{1}{2}i".format(self.real, sign, abs(self.imag))


def to_scalar(value):
    """Convert a number into the scalar type used by this module.

    Integers, rationals and rational strings become :class:`Fraction`,
    :class:`Gaussian` values pass through, and floats stay floats.

    Raises:
        TypeError: The value is not a supported number.

    """
    if isinstance(value, (Fraction, Gaussian)):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError("Unsupported scalar: {0!r}".format(value))


def to_gaussian(value):
    value = to_scalar(value)
    if isinstance(value, Gaussian):
        return value
    if isinstance(value, float):
        raise TypeError(
            "Float {0!r} cannot enter exact complex arithmetic".format(value)
        )
    return Gaussian(value, 0)


def is_zero(value, tol=None):
    if tol is None:
        return value == 0
    return abs(value) <= tol


def vector(values, dim=None):
    """Convert an iterable of numbers into a tuple of scalars.

    Raises:
        DimensionMismatch: ``dim`` is given and the length differs.

    """
    result = tuple(to_scalar(x) for x in values)
    if dim is not None and len(result) != dim:
        raise DimensionMismatch(
            "Expected a vector of length {0}, got {1}".format(dim, len(result))
        )
    return result


def dot(left, right):
    """Bilinear pairing sum(l * r), no conjugation."""
    if len(left) != len(right):
        raise DimensionMismatch(
            "Cannot pair vectors of length {0} and {1}".format(len(left), len(right))
        )
    total = 0
    for a, b in zip(left, right):
        total += a * b
    return total


def combine(coefficients, vectors, dim):
    """Linear combination sum(c_i * v_i) as a tuple of length dim."""
    result = [0] * dim
    for coefficient, vec in zip(coefficients, vectors):
        if coefficient == 0:
            continue
        for i, x in enumerate(vec):
            result[i] += coefficient * x
    return tuple(to_scalar(x) for x in result)


def is_zero_vector(values, tol=None):
    return all(is_zero(x, tol) for x in values)


def _row_reduce(rows, ncols, tol=None):
    """Reduced row echelon form.

    Returns:
        tuple: (list of reduced rows, list of pivot columns)

    """
    m = [list(row) for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        if tol is None:
            pivot = None
            for i in range(r, len(m)):
                if m[i][c] != 0:
                    pivot = i
                    break
        else:
            best = max(range(r, len(m)), key=lambda i: abs(m[i][c]))
            pivot = best if abs(m[best][c]) > tol else None
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i == r:
                continue
            factor = m[i][c]
            if is_zero(factor, tol):
                continue
            m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        if tol is not None:
            m = [[0.0 if abs(x) <= tol else x for x in row] for row in m]
        pivots.append(c)
        r += 1
    return m, pivots


def _has_gaussian(rows):
    return any(isinstance(x, Gaussian) for row in rows for x in row)


class Matrix(object):
    """An immutable rectangular matrix

    Args:
        rows: Iterable of rows, each an iterable of numbers
        ncols (int): Number of columns, required when ``rows`` is empty
        tol (float): None for exact arithmetic, otherwise the tolerance
            used for every zero test

    Attributes:
        tol (float): The tolerance, or None in exact mode

    """

    def __init__(self, rows, ncols=None, tol=None):
        self.tol = tol
        convert = float if tol is not None else to_scalar
        rows = tuple(tuple(convert(x) for x in row) for row in rows)
        if rows:
            widths = set(len(row) for row in rows)
            if len(widths) != 1:
                raise DimensionMismatch("Matrix rows have different lengths")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise DimensionMismatch(
                    "Expected {0} columns, got {1}".format(ncols, width)
                )
            ncols = width
        elif ncols is None:
            ncols = 0
        self._rows = rows
        self._ncols = int(ncols)

    @classmethod
    def zeros(cls, nrows, ncols, tol=None):
        zero = 0.0 if tol is not None else Fraction(0)
        return cls([[zero] * ncols for _ in range(nrows)], ncols=ncols, tol=tol)

    @classmethod
    def identity(cls, n, tol=None):
        return cls(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n, tol=tol
        )

    @classmethod
    def from_columns(cls, columns, nrows=None, tol=None):
        columns = [tuple(col) for col in columns]
        if not columns:
            return cls([[] for _ in range(nrows or 0)], ncols=0, tol=tol)
        return cls(list(zip(*columns)), ncols=len(columns), tol=tol)

    @classmethod
    def from_numpy(cls, array, tol=DEFAULT_TOLERANCE):
        array = np.asarray(array)
        return cls(array.tolist(), ncols=array.shape[1], tol=tol)

    @property
    def rows(self):
        return self._rows

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return self._ncols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def transpose(self):
        return Matrix.from_columns(self._rows, nrows=self.ncols, tol=self.tol)

    @property
    def T(self):  # noqa: N802
        return self.transpose()

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(
                "Shapes {0} and {1} differ".format(self.shape, other.shape)
            )

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other.rows)],
            ncols=self.ncols,
            tol=self.tol,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other.rows)],
            ncols=self.ncols,
            tol=self.tol,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        return Matrix(
            [[factor * x for x in row] for row in self._rows],
            ncols=self.ncols,
            tol=self.tol,
        )

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                "Cannot multiply {0} by {1}".format(self.shape, other.shape)
            )
        columns = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            [[dot(row, col) for col in columns] for row in self._rows],
            ncols=other.ncols,
            tol=self.tol,
        )

    def apply(self, values):
        """Multiply this matrix by a column vector.

        Raises:
            DimensionMismatch: The vector length is not ``ncols``.

        """
        values = tuple(values)
        if len(values) != self.ncols:
            raise DimensionMismatch(
                "Matrix with {0} columns applied to vector of length {1}".format(
                    self.ncols, len(values)
                )
            )
        return tuple(to_scalar(dot(row, values)) for row in self._rows)

    def conjugate(self):
        return Matrix(
            [
                [x.conjugate() if isinstance(x, Gaussian) else x for x in row]
                for row in self._rows
            ],
            ncols=self.ncols,
            tol=self.tol,
        )

    def is_zero(self):
        return all(is_zero(x, self.tol) for row in self._rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other.rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return "Matrix({0}x{1}, {2})".format(
            self.nrows, self.ncols, [[str(x) for x in row] for row in self._rows]
        )

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise DimensionMismatch("Cannot stack matrices with different row counts")
        return Matrix(
            [r + s for r, s in zip(self._rows, other.rows)],
            ncols=self.ncols + other.ncols,
            tol=self.tol,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise DimensionMismatch(
                "Cannot stack matrices with different column counts"
            )
        return Matrix(self._rows + other.rows, ncols=self.ncols, tol=self.tol)

    def rref(self):
        """Reduced row echelon form.

        Returns:
            tuple: (:class:`Matrix`, tuple of pivot column indices)

        """
        reduced, pivots = _row_reduce(self._rows, self.ncols, self.tol)
        return Matrix(reduced, ncols=self.ncols, tol=self.tol), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def _subspace_class(self):
        return ComplexSubspace if _has_gaussian(self._rows) else Subspace

    def kernel(self):
        """The subspace {x : self x = 0} of the column space dimension."""
        reduced, pivots = _row_reduce(self._rows, self.ncols, self.tol)
        zero = 0.0 if self.tol is not None else Fraction(0)
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fcol in free:
            vec = [zero] * self.ncols
            vec[fcol] = zero + 1
            for i, pcol in enumerate(pivots):
                vec[pcol] = -reduced[i][fcol]
            basis.append(vec)
        logger.debug4(
            "kernel of %dx%d matrix has dimension %d",
            self.nrows,
            self.ncols,
            len(basis),
        )
        return self._subspace_class()(self.ncols, basis, tol=self.tol)

    def image(self):
        """The column space, as a subspace of dimension ``nrows``."""
        return self._subspace_class()(
            self.nrows, [self.column(j) for j in range(self.ncols)], tol=self.tol
        )

    def row_space(self):
        return self._subspace_class()(self.ncols, self._rows, tol=self.tol)

    def solve(self, rhs):
        """One solution x of self x = rhs, free variables set to zero.

        Raises:
            InconsistentSystem: No solution exists.

        """
        rhs = tuple(to_scalar(x) for x in rhs)
        if len(rhs) != self.nrows:
            raise DimensionMismatch(
                "Right hand side has length {0}, expected {1}".format(
                    len(rhs), self.nrows
                )
            )
        augmented = [row + (b,) for row, b in zip(self._rows, rhs)]
        reduced, pivots = _row_reduce(augmented, self.ncols + 1, self.tol)
        if pivots and pivots[-1] == self.ncols:
            raise InconsistentSystem("Linear system has no solution", context=self)
        zero = 0.0 if self.tol is not None else Fraction(0)
        solution = [zero] * self.ncols
        for i, pcol in enumerate(pivots):
            solution[pcol] = reduced[i][-1]
        return tuple(solution)

    def inverse(self):
        """Raises SingularMatrix if the matrix is not square and invertible."""
        n = self.nrows
        if n != self.ncols:
            raise SingularMatrix("Only square matrices can be inverted", context=self)
        augmented = self.hstack(Matrix.identity(n, tol=self.tol))
        reduced, pivots = _row_reduce(augmented.rows, 2 * n, self.tol)
        if tuple(pivots[:n]) != tuple(range(n)):
            raise SingularMatrix("Matrix is singular", context=self)
        return Matrix([row[n:] for row in reduced], ncols=n, tol=self.tol)

    def to_numpy(self):
        if _has_gaussian(self._rows):
            return np.array(
                [[complex(x) for x in row] for row in self._rows], dtype=complex
            ).reshape(self.shape)
        return np.array(
            [[float(x) for x in row] for row in self._rows], dtype=float
        ).reshape(self.shape)


class Subspace(object):
    """A linear subspace stored by its canonical reduced row echelon basis

    Args:
        ambient_dim (int): Dimension of the surrounding space
        vectors: Spanning vectors, need not be independent
        tol (float): None for exact arithmetic, otherwise the float tolerance

    Attributes:
        ambient_dim (int): Dimension of the surrounding space
        tol (float): The tolerance, or None in exact mode

    """

    def __init__(self, ambient_dim, vectors=(), tol=None):
        self.ambient_dim = int(ambient_dim)
        self.tol = tol
        rows = []
        for vec in vectors:
            row = tuple(self._convert(x) for x in vec)
            if len(row) != self.ambient_dim:
                raise AmbientMismatch(
                    "Vector of length {0} in a space of dimension {1}".format(
                        len(row), self.ambient_dim
                    )
                )
            rows.append(row)
        if rows:
            reduced, pivots = _row_reduce(rows, self.ambient_dim, tol)
            self._basis = tuple(tuple(row) for row in reduced[: len(pivots)])
            self._pivots = tuple(pivots)
        else:
            self._basis = ()
            self._pivots = ()

    def _convert(self, value):
        if self.tol is not None:
            return float(value)
        return to_scalar(value)

    @classmethod
    def zero(cls, ambient_dim, tol=None):
        return cls(ambient_dim, (), tol=tol)

    @classmethod
    def full(cls, ambient_dim, tol=None):
        return cls(ambient_dim, Matrix.identity(ambient_dim).rows, tol=tol)

    @classmethod
    def span(cls, vectors, ambient_dim=None, tol=None):
        vectors = [tuple(v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise DimensionMismatch(
                    "Cannot infer the ambient dimension of an empty span"
                )
            ambient_dim = len(vectors[0])
        return cls(ambient_dim, vectors, tol=tol)

    @property
    def dim(self):
        return len(self._basis)

    @property
    def basis(self):
        return self._basis

    @property
    def pivots(self):
        return self._pivots

    @property
    def basis_matrix(self):
        return Matrix(self._basis, ncols=self.ambient_dim, tol=self.tol)

    def _residual(self, values):
        values = tuple(self._convert(x) for x in values)
        if len(values) != self.ambient_dim:
            raise AmbientMismatch(
                "Vector of length {0} tested against a space of dimension {1}".format(
                    len(values), self.ambient_dim
                )
            )
        coefficients = tuple(values[p] for p in self._pivots)
        residual = list(values)
        for coefficient, row in zip(coefficients, self._basis):
            if is_zero(coefficient, None):
                continue
            for i, x in enumerate(row):
                residual[i] = residual[i] - coefficient * x
        return coefficients, residual

    def contains(self, values):
        """True if the vector lies in this subspace."""
        return is_zero_vector(self._residual(values)[1], self.tol)

    __contains__ = contains

    def coordinates(self, values):
        """Coefficients of the vector in the canonical basis.

        Raises:
            NotASubspace: The vector is not in this subspace.

        """
        coefficients, residual = self._residual(values)
        if not is_zero_vector(residual, self.tol):
            raise NotASubspace("Vector is not contained in the subspace", context=self)
        return coefficients

    def is_subspace_of(self, other):
        _check_ambient(self, other)
        return all(other.contains(row) for row in self._basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        if self.tol is None and other.tol is None:
            return self._basis == other.basis
        return self.is_subspace_of(other) and other.is_subspace_of(self)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ambient_dim, self._basis))

    def __iter__(self):
        return iter(self._basis)

    def __repr__(self):
        return "<{0} dim={1} in {2}>".format(
            self.__class__.__name__, self.dim, self.ambient_dim
        )


class ComplexSubspace(Subspace):
    """A subspace of the complexification, entries are :class:`Gaussian`"""

    def __init__(self, ambient_dim, vectors=(), tol=None):
        if tol is not None:
            raise ValueError("Complex subspaces are exact only")
        super(ComplexSubspace, self).__init__(ambient_dim, vectors, tol=None)

    def _convert(self, value):
        return to_gaussian(value)

    @classmethod
    def from_real(cls, subspace):
        """Complexification of a real subspace."""
        return cls(subspace.ambient_dim, subspace.basis)

    def conjugate(self):
        return ComplexSubspace(
            self.ambient_dim, [[x.conjugate() for x in row] for row in self._basis]
        )

    def is_real(self):
        return self == self.conjugate()

    def real_part(self):
        """The real points, as a real :class:`Subspace`.

        The canonical basis of a conjugation invariant subspace has real
        entries, so the real points are read off the canonical basis of the
        intersection with the conjugate.

        """
        stable = intersect(self, self.conjugate())
        rows = []
        for row in stable.basis:
            if not all(x.is_real for x in row):
                raise ArithmeticError("Canonical basis of a real subspace is not real")
            rows.append([x.real for x in row])
        return Subspace(self.ambient_dim, rows)

    def realification(self):
        """(h + conj(h)) intersected with the real space."""
        return span_sum(self, self.conjugate()).real_part()


def _check_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(
            "Subspaces live in spaces of dimension {0} and {1}".format(
                a.ambient_dim, b.ambient_dim
            )
        )


def _common_class(a, b):
    if isinstance(a, ComplexSubspace) or isinstance(b, ComplexSubspace):
        return ComplexSubspace
    return Subspace


def _common_tol(a, b):
    if a.tol is None:
        return b.tol
    if b.tol is None:
        return a.tol
    return max(a.tol, b.tol)


def kernel(m):
    """Kernel of a :class:`Matrix`, see :meth:`Matrix.kernel`."""
    return m.kernel()


def image(m):
    """Column space of a :class:`Matrix`, see :meth:`Matrix.image`."""
    return m.image()


def rank(m):
    return m.rank()


def annihilator(s):
    """The covectors vanishing on ``s``, coordinates in the dual basis."""
    if s.dim == 0:
        return s.__class__.full(s.ambient_dim, tol=s.tol)
    return Matrix(s.basis, ncols=s.ambient_dim, tol=s.tol).kernel()


def span_sum(a, b):
    _check_ambient(a, b)
    cls = _common_class(a, b)
    tol = _common_tol(a, b)
    if cls is ComplexSubspace:
        return cls(a.ambient_dim, a.basis + b.basis)
    return cls(a.ambient_dim, a.basis + b.basis, tol=tol)


def intersect(a, b):
    _check_ambient(a, b)
    return annihilator(span_sum(annihilator(a), annihilator(b)))


def quotient_basis(a, b):
    """Representatives in ``a`` completing the basis of ``b`` to one of ``a``.

    Rows of the canonical basis of ``a`` are added greedily, in order.

    Raises:
        NotASubspace: ``b`` is not contained in ``a``.

    """
    _check_ambient(a, b)
    if not b.is_subspace_of(a):
        raise NotASubspace("Quotient requires b to be a subspace of a", context=b)
    current = b
    representatives = []
    for row in a.basis:
        if current.contains(row):
            continue
        representatives.append(row)
        current = span_sum(current, _same_kind(current, [row]))
    return representatives


def _same_kind(template, vectors):
    if isinstance(template, ComplexSubspace):
        return ComplexSubspace(template.ambient_dim, vectors)
    return Subspace(template.ambient_dim, vectors, tol=template.tol)


def embed(subspace, ambient_dim, offset):
    """Place a subspace into a larger space, starting at coordinate ``offset``.

    Raises:
        AmbientMismatch: The subspace does not fit.

    """
    if offset + subspace.ambient_dim > ambient_dim:
        raise AmbientMismatch("Subspace does not fit into the target space")
    rows = []
    for row in subspace.basis:
        padded = [0] * ambient_dim
        padded[offset : offset + subspace.ambient_dim] = row
        rows.append(padded)
    if isinstance(subspace, ComplexSubspace):
        return ComplexSubspace(ambient_dim, rows)
    return Subspace(ambient_dim, rows, tol=subspace.tol)
