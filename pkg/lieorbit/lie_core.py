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


"""Lie algebras, derived representations and their dual actions

A :class:`LieAlgebra` is stored by its dense structure constants
``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``. Coadjoint actions
follow the sign convention of the Kirillov-Kostant-Souriau form used
throughout the package: ``(A.f)(B) = -f([A, B])`` on the dual of the algebra
and ``(A.p)(v) = -p(A.v)`` on the dual of a representation space.

"""

import itertools

from lieorbit import getlogger
from lieorbit.errors import (
    DimensionMismatch,
    InconsistentSystem,
    NotASubalgebra,
    NotASubspace,
    ValidationFailed,
)
from lieorbit.exactla import (
    ComplexSubspace,
    Matrix,
    Subspace,
    dot,
    is_zero_vector,
    to_scalar,
    vector,
)

logger = getlogger(__name__)


def _default_names(prefix, count):
    return tuple("{0}{1}".format(prefix, i + 1) for i in range(count))


class Covector(object):
    """An element of a dual space, by coordinates in the dual basis

    Args:
        coords: Iterable of numbers

    """

    def __init__(self, coords):
        self.coords = vector(coords)

    @classmethod
    def zero(cls, dim):
        return cls([0] * dim)

    @classmethod
    def basis(cls, dim, index):
        return cls([1 if i == index else 0 for i in range(dim)])

    @property
    def dim(self):
        return len(self.coords)

    def __call__(self, values):
        values = tuple(values)
        if len(values) != self.dim:
            raise DimensionMismatch(
                "Covector of dimension {0} evaluated on vector of length {1}".format(
                    self.dim, len(values)
                )
            )
        return to_scalar(dot(self.coords, values))

    def _check(self, other):
        if not isinstance(other, Covector) or other.dim != self.dim:
            raise DimensionMismatch("Covectors of different dimensions")

    def __add__(self, other):
        self._check(other)
        return Covector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Covector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Covector([-a for a in self.coords])

    def __mul__(self, factor):
        return Covector([factor * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Covector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def is_zero(self, tol=None):
        return is_zero_vector(self.coords, tol)

    def restrict(self, subspace):
        """Restriction to a subspace, in the canonical basis of the subspace."""
        return Covector([self(row) for row in subspace.basis])

    def __repr__(self):
        return "Covector({0})".format([str(x) for x in self.coords])


class LieAlgebra(object):
    """A finite dimensional real Lie algebra given by structure constants

    Args:
        structure: Nested ``dim x dim x dim`` sequence of numbers
        basis_names (list): Labels for the basis, used in diagnostics only
        name (str): Label for the algebra

    Raises:
        DimensionMismatch: The structure tensor is not cubic or the number
            of names is wrong.

    """

    def __init__(self, structure, basis_names=None, name=None):
        dim = len(structure)
        rows = []
        for i in range(dim):
            if len(structure[i]) != dim:
                raise DimensionMismatch(
                    "Structure tensor slice {0} has {1} rows, expected {2}".format(
                        i, len(structure[i]), dim
                    )
                )
            rows.append(tuple(vector(structure[i][j], dim) for j in range(dim)))
        self._structure = tuple(rows)
        names = tuple(basis_names) if basis_names else _default_names("e", dim)
        if len(names) != dim:
            raise DimensionMismatch(
                "{0} basis names given for an algebra of dimension {1}".format(
                    len(names), dim
                )
            )
        self.basis_names = names
        self.name = name
        self._ad_cache = None

    @classmethod
    def from_brackets(cls, basis_names, brackets, name=None):
        """Build an algebra from the brackets of basis pairs.

        Args:
            basis_names (list): Labels of the basis
            brackets (dict): Maps ``(i, j)`` index or name pairs to the
                bracket, either a coordinate sequence or a dict of
                ``{name: coefficient}``. Antisymmetry is filled in; pairs
                not mentioned bracket to zero.

        """
        names = tuple(basis_names)
        dim = len(names)
        lookup = dict((n, i) for i, n in enumerate(names))
        structure = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (left, right), value in brackets.items():
            i = lookup[left] if left in lookup else int(left)
            j = lookup[right] if right in lookup else int(right)
            if isinstance(value, dict):
                coords = [0] * dim
                for key, coefficient in value.items():
                    coords[lookup[key] if key in lookup else int(key)] = coefficient
            else:
                coords = list(value)
            structure[i][j] = coords
            structure[j][i] = [-to_scalar(x) for x in coords]
        return cls(structure, basis_names=names, name=name)

    @classmethod
    def abelian(cls, dim, basis_names=None, name=None):
        zero = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        return cls(zero, basis_names=basis_names, name=name)

    @property
    def dim(self):
        return len(self._structure)

    @property
    def structure(self):
        return self._structure

    def index(self, name):
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError("{0} is not a basis element of {1}".format(name, self))

    def basis_vector(self, index):
        return tuple(to_scalar(1 if i == index else 0) for i in range(self.dim))

    def _check(self, values, what="vector"):
        values = tuple(values)
        if len(values) != self.dim:
            raise DimensionMismatch(
                "{0} of length {1} given to an algebra of dimension {2}".format(
                    what, len(values), self.dim
                )
            )
        return values

    def bracket(self, x, y):
        """Bracket of two coordinate vectors, any scalar type."""
        x = self._check(x)
        y = self._check(y)
        result = [0] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coefficient = xi * yj
                for k, c in enumerate(self._structure[i][j]):
                    if c != 0:
                        result[k] += coefficient * c
        return tuple(to_scalar(r) for r in result)

    def ad(self, x):
        """Matrix of ``ad_x``, column j holds ``[x, e_j]``."""
        x = self._check(x)
        columns = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(columns, nrows=self.dim)

    def ad_basis(self):
        if self._ad_cache is None:
            self._ad_cache = tuple(
                self.ad(self.basis_vector(i)) for i in range(self.dim)
            )
        return self._ad_cache

    def coad(self, x):
        """Matrix of ``f -> x.f`` on the dual, equal to ``-ad_x`` transposed."""
        return -self.ad(x).transpose()

    def covector_form(self, f, tol=None):
        """Matrix ``B[i][j] = f([e_i, e_j])`` of the bilinear form of ``f``.

        Args:
            f: :class:`Covector` or coordinate sequence
            tol (float): Float tolerance for numeric covectors, None for
                exact arithmetic

        """
        f = f if isinstance(f, Covector) else Covector(f)
        self._check(f.coords, "covector")
        return Matrix(
            [
                [f(self._structure[i][j]) for j in range(self.dim)]
                for i in range(self.dim)
            ],
            ncols=self.dim,
            tol=tol,
        )

    def stabilizer(self, f, tol=None):
        """The coadjoint isotropy algebra ``{x : f([x, y]) = 0 for all y}``."""
        return self.covector_form(f, tol=tol).transpose().kernel()

    def killing_form(self):
        ads = self.ad_basis()
        products = [[(a @ b) for b in ads] for a in ads]
        return Matrix(
            [
                [sum(p[k, k] for k in range(self.dim)) for p in row]
                for row in products
            ],
            ncols=self.dim,
        )

    def bracket_span(self, a, b):
        """Span of the brackets of basis vectors of two subspaces."""
        vectors = [self.bracket(x, y) for x in a.basis for y in b.basis]
        if isinstance(a, ComplexSubspace) or isinstance(b, ComplexSubspace):
            return ComplexSubspace(self.dim, vectors)
        return Subspace(self.dim, vectors)

    def is_subalgebra(self, subspace):
        return all(
            subspace.contains(self.bracket(x, y))
            for x, y in itertools.combinations(subspace.basis, 2)
        )

    def subalgebra(self, subspace, basis_names=None, name=None):
        """Structure constants of a subalgebra in its canonical basis.

        Raises:
            NotASubalgebra: The subspace is not closed under the bracket.

        """
        basis = subspace.basis
        n = len(basis)
        structure = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                try:
                    structure[i][j] = subspace.coordinates(
                        self.bracket(basis[i], basis[j])
                    )
                except NotASubspace:
                    raise NotASubalgebra(
                        "Bracket of basis vectors {0} and {1} leaves "
                        "the subspace".format(i, j),
                        context=subspace,
                    )
        if basis_names is None:
            basis_names = self._subspace_names(subspace)
        return LieAlgebra(structure, basis_names=basis_names, name=name)

    def _subspace_names(self, subspace):
        names = []
        for row in subspace.basis:
            support = [i for i, x in enumerate(row) if x != 0]
            if len(support) == 1 and row[support[0]] == 1:
                names.append(self.basis_names[support[0]])
            else:
                names.append(
                    "+".join(
                        "{0}*{1}".format(row[i], self.basis_names[i]) for i in support
                    )
                )
        # keep labels unique
        seen = {}
        unique = []
        for label in names:
            seen[label] = seen.get(label, 0) + 1
            if seen[label] > 1:
                label = "{0}#{1}".format(label, seen[label])
            unique.append(label)
        return unique

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._structure == other.structure

    def __hash__(self):
        return hash(self._structure)

    def __repr__(self):
        return "<LieAlgebra {0} dim={1}>".format(self.name or "", self.dim)


class Representation(object):
    """A derived representation of a Lie algebra on R^n

    Args:
        algebra (LieAlgebra): The represented algebra
        matrices (list): One square matrix per basis element, the map
            ``v -> e_i . v``
        name (str): Label for the representation
        space_names (list): Labels for the basis of the representation space

    Raises:
        DimensionMismatch: Wrong number of matrices or non-square matrices.

    """

    def __init__(self, algebra, matrices, name=None, space_names=None):
        if len(matrices) != algebra.dim:
            raise DimensionMismatch(
                "{0} matrices given for an algebra of dimension {1}".format(
                    len(matrices), algebra.dim
                )
            )
        converted = []
        size = None
        for index, m in enumerate(matrices):
            m = m if isinstance(m, Matrix) else Matrix(m)
            if m.nrows != m.ncols or (size is not None and m.nrows != size):
                raise DimensionMismatch(
                    "Matrix for basis element {0} has shape {1}".format(index, m.shape)
                )
            size = m.nrows
            converted.append(m)
        self.algebra = algebra
        self.matrices = tuple(converted)
        self.space_dim = size if size is not None else 0
        if space_names:
            names = tuple(space_names)
        else:
            names = _default_names("v", self.space_dim)
        if len(names) != self.space_dim:
            raise DimensionMismatch("Wrong number of representation space names")
        self.space_names = names
        self.name = name

    def action(self, x):
        """Matrix of ``v -> x.v``."""
        x = self.algebra._check(x)
        result = Matrix.zeros(self.space_dim, self.space_dim)
        for xi, m in zip(x, self.matrices):
            if xi != 0:
                result = result + m.scale(xi)
        return result

    def act(self, x, v):
        return self.action(x).apply(v)

    def dual_action(self, x):
        """Matrix of ``p -> x.p``, equal to minus the transposed action."""
        return -self.action(x).transpose()

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.algebra == other.algebra and self.matrices == other.matrices

    def __hash__(self):
        return hash((self.algebra, self.matrices))

    def __repr__(self):
        return "<Representation {0} of {1} on R^{2}>".format(
            self.name or "", self.algebra.name or "algebra", self.space_dim
        )


def bracket(g, x, y):
    """``[x, y]`` in the algebra ``g``.

    Raises:
        DimensionMismatch: A vector does not have ``g.dim`` coordinates.

    """
    return g.bracket(x, y)


def coderivative(g, A, f):  # noqa: N803
    """The coadjoint action ``A.f`` with ``(A.f)(B) = -f([A, B])``."""
    f = f if isinstance(f, Covector) else Covector(f)
    g._check(f.coords, "covector")
    return Covector([-f(g.bracket(A, g.basis_vector(j))) for j in range(g.dim)])


def contragredient(rep, A, p):  # noqa: N803
    """The dual action ``A.p`` with ``(A.p)(v) = -p(A.v)``."""
    p = p if isinstance(p, Covector) else Covector(p)
    if p.dim != rep.space_dim:
        raise DimensionMismatch(
            "Covector of dimension {0} on a space of dimension {1}".format(
                p.dim, rep.space_dim
            )
        )
    return Covector(rep.dual_action(A).apply(p.coords))


class ValidationReport(object):
    """Violations found by :func:`validate`

    Attributes:
        antisymmetry (list): ``(i, j, k)`` with ``c[i][j][k] != -c[j][i][k]``
        jacobi (list): Basis triples ``(i, j, k)`` violating the Jacobi identity
        homomorphism (list): Basis pairs ``(i, j)`` where the representation
            does not respect the bracket
        shape (list): Shape problems, as messages

    """

    def __init__(self, algebra, rep=None):
        self.algebra = algebra
        self.rep = rep
        self.antisymmetry = []
        self.jacobi = []
        self.homomorphism = []
        self.shape = []

    @property
    def ok(self):
        return not (self.antisymmetry or self.jacobi or self.homomorphism or self.shape)

    def messages(self):
        names = self.algebra.basis_names
        lines = list(self.shape)
        seen = set()
        for i, j, _ in self.antisymmetry:
            if (i, j) in seen:
                continue
            seen.add((i, j))
            lines.append(
                "antisymmetry violated at ({0},{1}): [{2},{3}] != -[{3},{2}]".format(
                    i, j, names[i], names[j]
                )
            )
        for i, j, k in self.jacobi:
            lines.append(
                "Jacobi identity fails for basis triple ({0}, {1}, {2})".format(
                    names[i], names[j], names[k]
                )
            )
        for i, j in self.homomorphism:
            lines.append(
                "representation does not respect [{0},{1}]".format(names[i], names[j])
            )
        return lines

    def raise_for_failures(self):
        if not self.ok:
            raise ValidationFailed("; ".join(self.messages()), report=self)

    def __repr__(self):
        return "<ValidationReport ok={0}>".format(self.ok)


def validate(g, rep=None):
    """Check antisymmetry, the Jacobi identity and the homomorphism property.

    Args:
        g (LieAlgebra): The algebra
        rep (Representation): Optional representation of ``g``

    Returns:
        ValidationReport: Empty (``ok``) if and only if everything holds.

    """
    report = ValidationReport(g, rep)
    n = g.dim
    c = g.structure
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i][j][k] + c[j][i][k] != 0:
                    report.antisymmetry.append((i, j, k))
    basis = [g.basis_vector(i) for i in range(n)]
    triples = (
        itertools.combinations(range(n), 3)
        if not report.antisymmetry
        else itertools.product(range(n), repeat=3)
    )
    for i, j, k in triples:
        total = [0] * n
        for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
            term = g.bracket(basis[a], g.bracket(basis[b], basis[d]))
            total = [t + x for t, x in zip(total, term)]
        if not is_zero_vector(total):
            report.jacobi.append((i, j, k))
    if rep is not None:
        if rep.algebra.dim != n:
            report.shape.append(
                "representation is defined on an algebra of dimension {0}, "
                "expected {1}".format(rep.algebra.dim, n)
            )
        else:
            for i, j in itertools.combinations(range(n), 2):
                lhs = rep.action(g.bracket(basis[i], basis[j]))
                a, b = rep.matrices[i], rep.matrices[j]
                if lhs != (a @ b) - (b @ a):
                    report.homomorphism.append((i, j))
    logger.debug1(
        "validated %r: %d antisymmetry, %d Jacobi, %d homomorphism violations",
        g,
        len(report.antisymmetry),
        len(report.jacobi),
        len(report.homomorphism),
    )
    return report


def matrix_algebra(matrices, basis_names=None, name=None):
    """Structure constants and defining representation of a matrix algebra.

    Args:
        matrices (list): Linearly independent square matrices spanning a
            space closed under the commutator

    Returns:
        tuple: (:class:`LieAlgebra`, :class:`Representation`)

    Raises:
        NotASubalgebra: The span is not closed under the commutator.
        DimensionMismatch: The matrices are dependent or of mixed sizes.

    """
    mats = [m if isinstance(m, Matrix) else Matrix(m) for m in matrices]
    if not mats:
        raise DimensionMismatch("At least one matrix is required")
    size = mats[0].nrows

    def flatten(m):
        if m.shape != (size, size):
            raise DimensionMismatch("Matrices of mixed shapes")
        return tuple(x for row in m.rows for x in row)

    columns = Matrix.from_columns([flatten(m) for m in mats])
    if columns.rank() != len(mats):
        raise DimensionMismatch("Matrices are linearly dependent")
    n = len(mats)
    structure = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            commutator = (mats[i] @ mats[j]) - (mats[j] @ mats[i])
            try:
                structure[i][j] = columns.solve(flatten(commutator))
            except InconsistentSystem:
                raise NotASubalgebra(
                    "Commutator of matrices {0} and {1} leaves their span".format(i, j)
                )
    algebra = LieAlgebra(structure, basis_names=basis_names, name=name)
    return algebra, Representation(algebra, mats, name=name)
