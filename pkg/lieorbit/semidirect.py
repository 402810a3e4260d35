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


"""Semidirect products K x V and their adjoint and coadjoint actions

Coordinates on the assembled algebra put the basis of the Lie algebra of K
first and the basis of V after it; covectors use the dual basis in the same
order. A covector point is written ``n = (f, p)`` and a group element
``g = (k, v)`` with the product ``(k, v)(l, u) = (kl, v + k.u)``.

Group elements are never abstract: an element of K is carried by its
adjoint matrix on the Lie algebra of K together with its matrix on V. Exact
elements (rational entries) come from explicit matrices, numeric ones from
exponentials.

"""

from fractions import Fraction

import numpy as np

from lieorbit import getlogger
from lieorbit.errors import DimensionMismatch
from lieorbit.exactla import (
    Matrix,
    Subspace,
    embed,
    span_sum,
    to_scalar,
    vector,
)
from lieorbit.lie_core import (
    Covector,
    LieAlgebra,
    coderivative,
    contragredient,
)

logger = getlogger(__name__)


def expm(matrix):
    """Matrix exponential by scaling and squaring of a truncated Taylor series.

    Args:
        matrix: Square array, real or complex

    Returns:
        numpy.ndarray: The exponential

    """
    a = np.asarray(matrix)
    a = a.astype(np.result_type(a.dtype, float))
    n = a.shape[0]
    norm = np.linalg.norm(a, ord=1) if n else 0.0
    squarings = int(max(0, np.ceil(np.log2(norm)) + 1)) if norm > 0.5 else 0
    scaled = a / (2.0 ** squarings)
    result = np.eye(n, dtype=a.dtype)
    term = np.eye(n, dtype=a.dtype)
    for k in range(1, 30):
        term = term @ scaled / k
        result = result + term
        if np.linalg.norm(term, ord=1) < 1e-18:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def _exact_array(values):
    return np.array(
        [[to_scalar(x) for x in row] for row in values], dtype=object
    ).reshape(len(values), len(values[0]) if len(values) else 0)


def _is_exact(array):
    return np.asarray(array).dtype == object


def _coerce_array(values):
    """Object array of Fractions for rational input, float array otherwise."""
    array = np.asarray(values)
    if array.dtype == object and all(
        isinstance(x, (Fraction, int)) for x in array.flat
    ):
        shape = array.shape
        return np.array([to_scalar(x) for x in array.flat], dtype=object).reshape(shape)
    return array.astype(float)


def _inverse(array):
    if _is_exact(array):
        inverse = Matrix(array.tolist()).inverse()
        return _exact_array(inverse.rows)
    return np.linalg.inv(array)


def _as_tuple(array):
    return tuple(to_scalar(x) for x in np.asarray(array).flat)


class CovectorPoint(object):
    """A point ``n = (f, p)`` of the dual of a semidirect product

    Args:
        f: Covector on the Lie algebra of K
        p: Covector on V

    """

    def __init__(self, f, p):
        self.f = f if isinstance(f, Covector) else Covector(f)
        self.p = p if isinstance(p, Covector) else Covector(p)

    @classmethod
    def from_coords(cls, sd, coords):
        coords = vector(coords, sd.dim)
        return cls(coords[: sd.nk], coords[sd.nk :])

    @property
    def coords(self):
        return self.f.coords + self.p.coords

    @property
    def dim(self):
        return self.f.dim + self.p.dim

    @property
    def is_numeric(self):
        return any(isinstance(x, float) for x in self.coords)

    def as_covector(self):
        return Covector(self.coords)

    def __call__(self, xi):
        """The duality pairing ``n(A, a) = f(A) + p(a)``."""
        xi = tuple(xi)
        if len(xi) != self.dim:
            raise DimensionMismatch(
                "Covector point of dimension {0} paired with {1} coordinates".format(
                    self.dim, len(xi)
                )
            )
        return self.f(xi[: self.f.dim]) + self.p(xi[self.f.dim :])

    def __add__(self, other):
        return CovectorPoint(self.f + other.f, self.p + other.p)

    def __sub__(self, other):
        return CovectorPoint(self.f - other.f, self.p - other.p)

    def __mul__(self, factor):
        return CovectorPoint(self.f * factor, self.p * factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CovectorPoint):
            return NotImplemented
        return self.f == other.f and self.p == other.p

    def __hash__(self):
        return hash((self.f, self.p))

    def to_numpy(self):
        return np.array([float(x) for x in self.coords], dtype=float)

    def distance(self, other):
        return float(np.max(np.abs(self.to_numpy() - other.to_numpy()), initial=0.0))

    def __repr__(self):
        return "CovectorPoint(f={0}, p={1})".format(
            [str(x) for x in self.f.coords], [str(x) for x in self.p.coords]
        )


class TauData(object):
    """The map ``tau_p(A) = -A.p`` from the Lie algebra of K to the dual of V

    Attributes:
        matrix (Matrix): ``tau_p``, one column per basis element of K
        star_matrix (Matrix): The dual map ``tau_p*(v) = p (.) v``
        kernel (Subspace): The little algebra of ``p``
        star_image (Subspace): Image of ``tau_p*``, the annihilator of the
            little algebra
        star_kernel (Subspace): Kernel of ``tau_p*`` in V

    """

    def __init__(self, sd, p, tol=None):
        p = p if isinstance(p, Covector) else Covector(p)
        if p.dim != sd.nv:
            raise DimensionMismatch(
                "Covector of dimension {0} on V of dimension {1}".format(p.dim, sd.nv)
            )
        columns = [
            m.transpose().apply(p.coords) for m in sd.rho.matrices
        ]
        self.p = p
        self.matrix = Matrix.from_columns(columns, nrows=sd.nv, tol=tol)
        self.star_matrix = self.matrix.transpose()
        self.kernel = self.matrix.kernel()
        self.star_image = self.star_matrix.image()
        self.star_kernel = self.star_matrix.kernel()

    @property
    def rank(self):
        return self.star_image.dim

    def __call__(self, A):  # noqa: N803
        return Covector(self.matrix.apply(A))

    def star(self, v):
        return Covector(self.star_matrix.apply(v))


class SemidirectProduct(object):
    """The Lie algebra of K x V assembled from a representation

    Args:
        k (LieAlgebra): Lie algebra of K
        rho (Representation): Derived representation of ``k`` on V
        name (str): Label used in reports

    Raises:
        DimensionMismatch: ``rho`` does not represent ``k``.

    Attributes:
        g (LieAlgebra): The assembled algebra with bracket
            ``[(A, a), (B, b)] = ([A, B], A.b - B.a)``

    """

    def __init__(self, k, rho, name=None):
        if rho.algebra.dim != k.dim or rho.algebra != k:
            raise DimensionMismatch(
                "Representation is not a representation of {0}".format(k)
            )
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        self.k = k
        self.rho = rho
        self.name = name
        self.nk = k.dim
        self.nv = rho.space_dim
        self.dim = self.nk + self.nv
        self.g = self._assemble()
        self._rho_exact = np.array(
            [[[x for x in row] for row in m.rows] for m in rho.matrices], dtype=object
        ).reshape(self.nk, self.nv, self.nv)
        self._rho_float = self._rho_exact.astype(float)
        self._logger.debug1(
            "assembled %s: dim k = %d, dim V = %d", name or "product", self.nk, self.nv
        )

    def _assemble(self):
        nk, nv, dim = self.nk, self.nv, self.dim
        zero = [0] * dim
        structure = [[list(zero) for _ in range(dim)] for _ in range(dim)]
        for i in range(nk):
            for j in range(nk):
                structure[i][j] = list(self.k.structure[i][j]) + [0] * nv
            for a in range(nv):
                column = self.rho.matrices[i].column(a)
                structure[i][nk + a] = [0] * nk + list(column)
                structure[nk + a][i] = [0] * nk + [-x for x in column]
        names = tuple(self.k.basis_names) + tuple(self.rho.space_names)
        return LieAlgebra(structure, basis_names=names, name=self.name)

    def split(self, xi):
        xi = vector(xi, self.dim)
        return xi[: self.nk], xi[self.nk :]

    def join(self, A, a):  # noqa: N803
        return vector(A, self.nk) + vector(a, self.nv)

    def k_vector(self, A):  # noqa: N803
        return self.join(A, [0] * self.nv)

    def v_vector(self, a):
        return self.join([0] * self.nk, a)

    def bracket(self, xi, eta):
        return self.g.bracket(xi, eta)

    def odot(self, p, v):
        """``p (.) v`` on the Lie algebra of K, ``(p (.) v)(A) = p(A.v)``.

        Raises:
            DimensionMismatch: ``p`` or ``v`` do not live on V.

        """
        p = p if isinstance(p, Covector) else Covector(p)
        v = tuple(v)
        if p.dim != self.nv or len(v) != self.nv:
            raise DimensionMismatch("odot takes a covector and a vector of V")
        return Covector([p(m.apply(v)) for m in self.rho.matrices])

    def tau(self, p, tol=None):
        return TauData(self, p, tol=tol)

    def point(self, f, p):
        point = CovectorPoint(f, p)
        if point.f.dim != self.nk or point.p.dim != self.nv:
            raise DimensionMismatch(
                "Point with components of dimension {0} and {1}".format(
                    point.f.dim, point.p.dim
                )
            )
        return point

    def embed_k(self, subspace):
        """A subspace of the Lie algebra of K as a subspace of the product."""
        return embed(subspace, self.dim, 0)

    def embed_v(self, subspace):
        return embed(subspace, self.dim, self.nk)

    @property
    def v_subspace(self):
        return self.embed_v(Subspace.full(self.nv))

    @property
    def k_subspace(self):
        return self.embed_k(Subspace.full(self.nk))

    def with_v(self, subspace):
        """``a + V`` for a subspace ``a`` of the Lie algebra of K."""
        return span_sum(self.embed_k(subspace), self.v_subspace)

    def rho_array(self, A):  # noqa: N803
        """Matrix of ``rho'(A)`` as an array, exact for exact input."""
        A = np.asarray(A)  # noqa: N806
        if _is_exact(A):
            return np.tensordot(A, self._rho_exact, axes=1)
        return np.tensordot(A.astype(float), self._rho_float, axes=1)

    def odot_array(self, q, v):
        q = np.asarray(q)
        v = np.asarray(v)
        if _is_exact(q) and _is_exact(v):
            return (self._rho_exact @ v) @ q
        return (self._rho_float @ v.astype(float)) @ q.astype(float)

    def ad_k_array(self, A):  # noqa: N803
        return self.k.ad(A).to_numpy()

    def __eq__(self, other):
        if not isinstance(other, SemidirectProduct):
            return NotImplemented
        return self.k == other.k and self.rho == other.rho

    def __hash__(self):
        return hash((self.k, self.rho))

    def __repr__(self):
        return "<SemidirectProduct {0} dim={1}>".format(self.name or "", self.dim)


class GroupElement(object):
    """An element ``g = (k, v)`` of K x V

    Args:
        sd (SemidirectProduct): The product
        k_ad: Matrix of ``Ad(k)`` on the Lie algebra of K
        k_rep: Matrix of ``k`` acting on V
        v: Translation part

    Rational input gives an exact element whose actions stay rational.

    """

    def __init__(self, sd, k_ad, k_rep, v):
        self.sd = sd
        self.k_ad = _coerce_array(k_ad)
        self.k_rep = _coerce_array(k_rep)
        self.v = _coerce_array(v).reshape(sd.nv)
        if self.k_ad.shape != (sd.nk, sd.nk) or self.k_rep.shape != (sd.nv, sd.nv):
            raise DimensionMismatch(
                "Group element matrices of shapes {0} and {1}".format(
                    self.k_ad.shape, self.k_rep.shape
                )
            )
        self._exact = (
            _is_exact(self.k_ad) and _is_exact(self.k_rep) and _is_exact(self.v)
        )
        self._k_ad_inv = None
        self._k_rep_inv = None

    def convert(self, values):
        """Coordinates in the arithmetic of this element."""
        if self._exact:
            return _coerce_array(values)
        return np.asarray([float(x) for x in values], dtype=float)

    @classmethod
    def identity(cls, sd):
        return cls(
            sd,
            Matrix.identity(sd.nk).rows,
            Matrix.identity(sd.nv).rows,
            [Fraction(0)] * sd.nv,
        )

    @classmethod
    def exp(cls, sd, xi):
        """Exponential of ``xi = (A, a)``.

        The V part comes from the exponential of the affine matrix
        ``[[rho'(A), a], [0, 0]]``.

        """
        A, a = sd.split(xi)  # noqa: N806
        k_ad = expm(sd.ad_k_array(A))
        affine = np.zeros((sd.nv + 1, sd.nv + 1))
        affine[: sd.nv, : sd.nv] = sd.rho_array(np.array(A, dtype=float))
        affine[: sd.nv, sd.nv] = np.array(a, dtype=float)
        big = expm(affine)
        return cls(sd, k_ad, big[: sd.nv, : sd.nv], big[: sd.nv, sd.nv])

    @property
    def is_exact(self):
        return self._exact

    @property
    def k_ad_inverse(self):
        if self._k_ad_inv is None:
            self._k_ad_inv = _inverse(self.k_ad)
        return self._k_ad_inv

    @property
    def k_rep_inverse(self):
        if self._k_rep_inv is None:
            self._k_rep_inv = _inverse(self.k_rep)
        return self._k_rep_inv

    def __mul__(self, other):
        return GroupElement(
            self.sd,
            self.k_ad @ other.k_ad,
            self.k_rep @ other.k_rep,
            self.v + self.k_rep @ other.v,
        )

    def inverse(self):
        return GroupElement(
            self.sd,
            self.k_ad_inverse,
            self.k_rep_inverse,
            -(self.k_rep_inverse @ self.v),
        )

    def k_part(self):
        """The element ``(k, 0)``."""
        zero = np.zeros(self.sd.nv, dtype=self.v.dtype)
        if self.v.dtype == object:
            zero = np.array([Fraction(0)] * self.sd.nv, dtype=object)
        return GroupElement(self.sd, self.k_ad, self.k_rep, zero)

    def act_v(self, u):
        return self.k_rep @ self.convert(u)

    def dual_v(self, p):
        """``k.p``, the contragredient action on the dual of V."""
        return self.k_rep_inverse.T @ self.convert(p)

    def dual_k(self, f):
        """``k.f``, the coadjoint action of K."""
        return self.k_ad_inverse.T @ self.convert(f)

    def __repr__(self):
        return "<GroupElement exact={0}>".format(self.is_exact)


def adjoint(sd, g, xi):
    """``Ad(k, v)(A, a) = (Ad(k)A, k.a - rho'(Ad(k)A)v)``.

    Returns:
        tuple: Coordinates of the image
    """
    A, a = sd.split(xi)  # noqa: N806
    A = g.convert(A)  # noqa: N806
    a = g.convert(a)
    moved = g.k_ad @ A
    translated = g.k_rep @ a - sd.rho_array(moved) @ g.v
    return _as_tuple(np.concatenate([moved, translated]))


def coadjoint(sd, g, n):
    """``Coad(k, v)(f, p) = (k.f + (k.p) (.) v, k.p)``.

    Raises:
        SingularMatrix: An exact group element has a singular matrix.

    """
    q = g.dual_v(n.p.coords)
    h = g.dual_k(n.f.coords) + sd.odot_array(q, g.v)
    return CovectorPoint(_as_tuple(h), _as_tuple(q))


def adjoint_matrix(sd, g):
    columns = [adjoint(sd, g, sd.g.basis_vector(i)) for i in range(sd.dim)]
    return np.array(columns, dtype=object if g.is_exact else float).T


def coadjoint_matrix(sd, g):
    """Matrix of ``Coad(g)`` on coordinates of the dual."""
    columns = []
    for i in range(sd.dim):
        unit = CovectorPoint.from_coords(sd, sd.g.basis_vector(i))
        columns.append(coadjoint(sd, g, unit).coords)
    return np.array(columns, dtype=object if g.is_exact else float).T


def fundamental_field(sd, xi, m):
    """``xi.m = (A.h + q (.) a, A.q)`` for ``xi = (A, a)`` and ``m = (h, q)``."""
    A, a = sd.split(xi)  # noqa: N806
    h = coderivative(sd.k, A, m.f) + sd.odot(m.p, a)
    q = contragredient(sd.rho, A, m.p)
    return CovectorPoint(h, q)


def random_vector(rng, subspace, scale=1.0):
    """A float vector of ``subspace`` with normal coefficients."""
    if subspace.dim == 0:
        return np.zeros(subspace.ambient_dim)
    basis = np.array([[float(x) for x in row] for row in subspace.basis])
    coefficients = rng.normal(scale=scale, size=subspace.dim)
    return coefficients @ basis


def sample_elements(sd, rng, count, subspace=None, scale=0.5, factors=2):
    """Seeded group elements, products of exponentials of ``subspace``.

    Args:
        sd (SemidirectProduct): The product
        rng (numpy.random.Generator): Source of randomness
        count (int): Number of elements
        subspace (Subspace): Subalgebra to exponentiate, all of the product
            by default
        scale (float): Standard deviation of the coefficients
        factors (int): Number of exponentials multiplied per element

    """
    if subspace is None:
        subspace = Subspace.full(sd.dim)
    elements = []
    for _ in range(count):
        element = GroupElement.exp(sd, random_vector(rng, subspace, scale))
        for _ in range(factors - 1):
            element = element * GroupElement.exp(
                sd, random_vector(rng, subspace, scale)
            )
        elements.append(element)
    logger.debug2(
        "sampled %d group elements in a subspace of dim %d", count, subspace.dim
    )
    return elements
