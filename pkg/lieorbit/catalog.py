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


"""Worked examples: the Euclidean, Galilei and Bargmann groups

Each fixture is a :class:`Fixture` holding the semidirect product, named
covector points, named polarization candidates and a table of expected
results. The unit vector is always ``e3``; the parameters ``s`` (spin),
``k`` (momentum), ``m`` (mass) and ``energy`` are positive rationals.

The Euclidean fixture is SO(3) x R^3. The Galilei and Bargmann fixtures
share ``K = SE(3)`` (rotations ``w1 w2 w3`` and boosts ``b1 b2 b3``) and act
on R^4 (space and time) and R^5 (space, time and the central direction).

"""

from fractions import Fraction

from lieorbit import getlogger
from lieorbit.base import Check, CheckList, Settings, verdict
from lieorbit.errors import UnknownFixture
from lieorbit.exactla import ComplexSubspace, Gaussian, Matrix
from lieorbit.induction import InductionSetup, symmetric_space_check
from lieorbit.lie_core import LieAlgebra, Representation, validate
from lieorbit.orbit import OrbitPoint, TangentData
from lieorbit.polarization import (
    PolarizationCandidate,
    check_polarization,
    pukanszky_check,
    reduced_candidate,
)
from lieorbit.semidirect import GroupElement, SemidirectProduct, coadjoint

logger = getlogger(__name__)

NAMES = ("se3", "galilei", "bargmann")

PAPER = "PAPER"
DERIVED = "DERIVED"


def hat(w):
    """The matrix of ``v -> w x v``."""
    a, b, c = w
    return [[0, -c, b], [c, 0, -a], [-b, a, 0]]


def _unit(i, dim=3):
    return [1 if j == i else 0 for j in range(dim)]


def so3():
    return LieAlgebra.from_brackets(
        ("w1", "w2", "w3"),
        {
            ("w1", "w2"): {"w3": 1},
            ("w1", "w3"): {"w2": -1},
            ("w2", "w3"): {"w1": 1},
        },
        name="so3",
    )


def se3():
    """Rotations ``w1 w2 w3`` and boosts ``b1 b2 b3``, boosts commute."""
    brackets = {
        ("w1", "w2"): {"w3": 1},
        ("w1", "w3"): {"w2": -1},
        ("w2", "w3"): {"w1": 1},
        ("w1", "b2"): {"b3": 1},
        ("w1", "b3"): {"b2": -1},
        ("w2", "b1"): {"b3": -1},
        ("w2", "b3"): {"b1": 1},
        ("w3", "b1"): {"b2": 1},
        ("w3", "b2"): {"b1": -1},
    }
    return LieAlgebra.from_brackets(
        ("w1", "w2", "w3", "b1", "b2", "b3"), brackets, name="se3"
    )


def _block(size, placements):
    m = [[0] * size for _ in range(size)]
    for (row, col), value in placements.items():
        m[row][col] = value
    return m


def _embed3(matrix, size):
    placements = {}
    for i in range(3):
        for j in range(3):
            if matrix[i][j]:
                placements[(i, j)] = matrix[i][j]
    return _block(size, placements)


def euclidean_product():
    k = so3()
    rho = Representation(
        k,
        [hat(_unit(i)) for i in range(3)],
        name="vector",
        space_names=("x1", "x2", "x3"),
    )
    return SemidirectProduct(k, rho, name="se3")


def galilei_product():
    k = se3()
    matrices = [_embed3(hat(_unit(i)), 4) for i in range(3)]
    matrices += [_block(4, {(j, 3): 1}) for j in range(3)]
    rho = Representation(
        k, matrices, name="spacetime", space_names=("x1", "x2", "x3", "t")
    )
    return SemidirectProduct(k, rho, name="galilei")


def bargmann_product():
    k = se3()
    matrices = [_embed3(hat(_unit(i)), 5) for i in range(3)]
    matrices += [_block(5, {(j, 3): 1, (4, j): -1}) for j in range(3)]
    rho = Representation(
        k, matrices, name="extended", space_names=("x1", "x2", "x3", "t", "c")
    )
    return SemidirectProduct(k, rho, name="bargmann")


def cayley_rotation(w):
    """The rational rotation ``(I - W)^-1 (I + W)`` for ``W = hat(w)``."""
    skew = Matrix(hat(w))
    identity = Matrix.identity(3)
    return (identity - skew).inverse() @ (identity + skew)


def se3_adjoint(rotation, b):
    """Adjoint matrix of ``(R, b)`` on ``(w, b)`` coordinates.

    In blocks ``[[R, 0], [hat(b) R, R]]``.

    """
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    lower = Matrix(hat(b)) @ r
    rows = []
    for i in range(3):
        rows.append(list(r.row(i)) + [0, 0, 0])
    for i in range(3):
        rows.append(list(lower.row(i)) + list(r.row(i)))
    return Matrix(rows)


def galilei_rep(rotation, b):
    """``[[R, b], [0, 1]]``."""
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    rows = [list(r.row(i)) + [b[i]] for i in range(3)]
    rows.append([0, 0, 0, 1])
    return Matrix(rows)


def bargmann_rep(rotation, b):
    """``[[R, b, 0], [0, 1, 0], [-b^T R, -|b|^2 / 2, 1]]``."""
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    b = [Fraction(x) for x in b]
    rows = [list(r.row(i)) + [b[i], 0] for i in range(3)]
    rows.append([0, 0, 0, 1, 0])
    last = [-sum(b[i] * r[i, j] for i in range(3)) for j in range(3)]
    rows.append(last + [-sum(x * x for x in b) / 2, 1])
    return Matrix(rows)


def galilei_dual(rotation, b, p):
    """Closed form of ``k.p`` on the Galilei dual: ``(R p, E - <R p, b>)``."""
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    moved = r.apply(p[:3])
    return moved + (p[3] - sum(x * y for x, y in zip(moved, b)),)


def bargmann_dual(rotation, b, p):
    """Closed form ``(R p + m b, E - <R p, b> - m |b|^2 / 2, m)``."""
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    moved = r.apply(p[:3])
    m = p[4]
    b = [Fraction(x) for x in b]
    return tuple(x + m * y for x, y in zip(moved, b)) + (
        p[3] - sum(x * y for x, y in zip(moved, b)) - m * sum(x * x for x in b) / 2,
        m,
    )


def se3_element(sd, rotation, b, rep):
    """Exact group element ``((R, b), 0)`` of ``SE(3) x V``."""
    r = rotation if isinstance(rotation, Matrix) else Matrix(rotation)
    return GroupElement(
        sd, se3_adjoint(r, b).rows, rep(r, b).rows, [Fraction(0)] * sd.nv
    )


def contragredient_check(fixture, w, b, p):
    """The closed form of ``k.p`` against the generic coadjoint action.

    Args:
        fixture (Fixture): The Galilei or Bargmann fixture
        w: Rational vector, the rotation is its Cayley transform
        b: Rational boost
        p: Covector on V

    Returns:
        tuple: (closed form, generic value), both exact

    """
    if fixture.name == "galilei":
        rep, closed = galilei_rep, galilei_dual
    elif fixture.name == "bargmann":
        rep, closed = bargmann_rep, bargmann_dual
    else:
        raise UnknownFixture(
            "No closed form for the dual action of {0}".format(fixture.name)
        )
    sd = fixture.sd
    rotation = cayley_rotation(w)
    element = se3_element(sd, rotation, b, rep)
    point = sd.point([0] * sd.nk, p)
    generic = coadjoint(sd, element, point).p.coords
    expected = closed(rotation, b, [Fraction(x) for x in p])
    return tuple(Fraction(x) for x in expected), generic


class ExpectedRow(object):
    """One expected result of a fixture

    Args:
        point (str): Name of the covector point
        quantity (str): What is measured, see :func:`measure`
        value: Expected value
        provenance (str): ``PAPER`` for values stated in the source material,
            ``DERIVED`` for values computed by hand
        citation (str): Where the value comes from
        polarization (str): Name of the polarization, for polarization rows

    """

    def __init__(self, point, quantity, value, provenance, citation, polarization=None):
        self.point = point
        self.quantity = quantity
        self.value = value
        self.provenance = provenance
        self.citation = citation
        self.polarization = polarization

    @property
    def key(self):
        parts = [self.point, self.quantity]
        if self.polarization:
            parts.append(self.polarization)
        return ".".join(parts)

    def to_dict(self):
        return {
            "point": self.point,
            "quantity": self.quantity,
            "polarization": self.polarization,
            "value": self.value,
            "provenance": self.provenance,
            "citation": self.citation,
        }

    def __repr__(self):
        return "<ExpectedRow {0} = {1!r}>".format(self.key, self.value)


class Fixture(object):
    """A worked example

    Attributes:
        name (str): One of ``se3``, ``galilei``, ``bargmann``
        sd (SemidirectProduct): The product
        points (dict): Covector points by name
        polarizations (dict): ``name -> (point name, ComplexSubspace)``
        params (dict): The parameters the fixture was built with
        expected (list): :class:`ExpectedRow` records

    """

    def __init__(self, name, sd, points, polarizations, params, expected):
        self.name = name
        self.sd = sd
        self.points = points
        self.polarizations = polarizations
        self.params = params
        self.expected = expected

    def point(self, name):
        try:
            return self.points[name]
        except KeyError:
            raise UnknownFixture(
                "Fixture {0} has no point {1}".format(self.name, name)
            )

    def polarization(self, name):
        """``(point name, h)`` for a named polarization."""
        try:
            return self.polarizations[name]
        except KeyError:
            raise UnknownFixture(
                "Fixture {0} has no polarization {1}".format(self.name, name)
            )

    def __repr__(self):
        return "<Fixture {0} dim={1}>".format(self.name, self.sd.dim)


def _with_v(sd, rows):
    """Complexified ``span(rows) + V``, rows given over the Lie algebra of K."""
    padded = [list(row) + [0] * sd.nv for row in rows]
    return ComplexSubspace(sd.dim, padded + list(sd.v_subspace.basis))


def _se3_fixture(params):
    sd = euclidean_product()
    s, k = params["s"], params["k"]
    points = {"axial": sd.point([0, 0, s], [0, 0, k])}
    polarizations = {"trivial": ("axial", _with_v(sd, [[0, 0, 1]]))}
    cotangent = "orbit is the cotangent bundle of the sphere with a spin term"
    expected = [
        ExpectedRow("axial", "orbit_dim", 4, PAPER, cotangent),
        ExpectedRow("axial", "base_orbit_dim", 2, PAPER, cotangent),
        ExpectedRow("axial", "little_orbit_dim", 0, PAPER, cotangent),
        ExpectedRow("axial", "isotropy_dim", 2, DERIVED, "dim g - dim O"),
        ExpectedRow("axial", "kp_in_kf", True, PAPER, cotangent),
        ExpectedRow("axial", "n_dim", 2, DERIVED, "rank of tau_p*"),
        ExpectedRow("axial", "n_lagrangian", True, DERIVED, "kp inside kf"),
        ExpectedRow("axial", "characteristic_dim", 0, DERIVED, "dim kf - dim kp"),
        ExpectedRow("axial", "induced_dim", True, PAPER, cotangent),
        ExpectedRow(
            "axial", "is_polarization", True, PAPER,
            "so(2) + R^3 is a real polarization", "trivial",
        ),
        ExpectedRow(
            "axial", "pukanszky", True, PAPER,
            "the trivial real polarization satisfies Pukanszky's condition", "trivial",
        ),
        ExpectedRow(
            "axial", "e_annihilator_dim", 2, DERIVED,
            "annihilator of so(2) + R^3", "trivial",
        ),
        ExpectedRow(
            "axial", "symmetric_spaces", True, PAPER,
            "the sphere and a point are symmetric spaces", "trivial",
        ),
    ]
    return sd, points, polarizations, expected


def _galilei_fixture(params):
    sd = galilei_product()
    s, k, energy = params["s"], params["k"], params["energy"]
    points = {
        "massless_spin": sd.point([0, 0, s, 0, 0, 0], [0, 0, k, energy]),
        "massless_boost": sd.point([0, 0, 0, s, 0, 0], [0, 0, k, 0]),
    }
    polarizations = {
        "trivial": (
            "massless_spin",
            _with_v(sd, [_unit(2, 6), _unit(3, 6), _unit(4, 6)]),
        ),
        "translations": ("massless_boost", _with_v(sd, [_unit(3, 6), _unit(4, 6)])),
    }
    spin = "massless spinning orbit with a spin term"
    boost = "eight dimensional orbit with a two dimensional isotropy group"
    expected = [
        ExpectedRow("massless_spin", "orbit_dim", 6, PAPER, spin),
        ExpectedRow("massless_spin", "base_orbit_dim", 3, PAPER, spin),
        ExpectedRow("massless_spin", "little_orbit_dim", 0, DERIVED, "kp inside kf"),
        ExpectedRow(
            "massless_spin", "kp_in_kf", True, DERIVED, "f vanishes on [k, kp]"
        ),
        ExpectedRow("massless_spin", "n_lagrangian", True, DERIVED, "kp inside kf"),
        ExpectedRow(
            "massless_spin", "characteristic_dim", 1, DERIVED, "dim kf - dim kp"
        ),
        ExpectedRow("massless_spin", "induced_dim", True, DERIVED, "6 = 0 + 2 * 3"),
        ExpectedRow(
            "massless_spin", "is_polarization", True, PAPER,
            "real polarization of the little algebra plus R^4", "trivial",
        ),
        ExpectedRow(
            "massless_spin", "pukanszky", True, PAPER,
            "real polarization satisfies Pukanszky's condition", "trivial",
        ),
        ExpectedRow("massless_boost", "orbit_dim", 8, PAPER, boost),
        ExpectedRow("massless_boost", "isotropy_dim", 2, PAPER, boost),
        ExpectedRow("massless_boost", "base_orbit_dim", 3, DERIVED, "rank of tau_p"),
        ExpectedRow(
            "massless_boost", "little_orbit_dim", 2, PAPER,
            "little orbit is the cotangent bundle of a circle",
        ),
        ExpectedRow("massless_boost", "kp_in_kf", False, DERIVED, "bracket table"),
        ExpectedRow("massless_boost", "n_dim", 3, DERIVED, "rank of tau_p*"),
        ExpectedRow("massless_boost", "n_perp_dim", 5, DERIVED, "8 - 3"),
        ExpectedRow("massless_boost", "n_lagrangian", False, DERIVED, "kp not in kf"),
        ExpectedRow(
            "massless_boost", "characteristic_dim", 1, DERIVED, "kf = span(w1, b1)"
        ),
        ExpectedRow("massless_boost", "induced_dim", True, PAPER, "8 = 2 + 2 * 3"),
        ExpectedRow(
            "massless_boost", "is_polarization", True, PAPER,
            "boosts in the plane plus R^4", "translations",
        ),
        ExpectedRow(
            "massless_boost", "pukanszky", True, PAPER,
            "D.phi fills a one dimensional affine plane", "translations",
        ),
        ExpectedRow(
            "massless_boost", "e_annihilator_dim", 4, DERIVED,
            "annihilator of span(b1, b2) + R^4", "translations",
        ),
        ExpectedRow(
            "massless_boost", "reduced_e_annihilator_dim", 1, PAPER,
            "D.phi fills a one dimensional affine plane", "translations",
        ),
        ExpectedRow(
            "massless_boost", "symmetric_spaces", False, DERIVED,
            "[p, m] leaves m for every complement", "translations",
        ),
    ]
    return sd, points, polarizations, expected


def _bargmann_fixture(params):
    sd = bargmann_product()
    s, m = params["s"], params["m"]
    points = {"massive_spin": sd.point([0, 0, s, 0, 0, 0], [0, 0, 0, 0, m])}
    i = Gaussian(0, 1)
    plus = [[1, i, 0, 0, 0, 0], _unit(2, 6)]
    minus = [[1, -i, 0, 0, 0, 0], _unit(2, 6)]
    polarizations = {
        "plus": ("massive_spin", _with_v(sd, plus)),
        "minus": ("massive_spin", _with_v(sd, minus)),
    }
    orbit = "orbit is the product of T*R^3 and a sphere"
    expected = [
        ExpectedRow("massive_spin", "orbit_dim", 8, PAPER, orbit),
        ExpectedRow("massive_spin", "base_orbit_dim", 3, PAPER, orbit),
        ExpectedRow("massive_spin", "little_orbit_dim", 2, PAPER, orbit),
        ExpectedRow("massive_spin", "isotropy_dim", 3, DERIVED, "11 - 8"),
        ExpectedRow("massive_spin", "kp_dim", 3, PAPER, "little algebra is so(3)"),
        ExpectedRow("massive_spin", "kp_in_kf", False, DERIVED, "f([w1, w2]) = s"),
        ExpectedRow("massive_spin", "characteristic_dim", 3, DERIVED, "4 - 1"),
        ExpectedRow("massive_spin", "induced_dim", True, PAPER, "8 = 2 + 2 * 3"),
    ]
    for name in ("plus", "minus"):
        expected += [
            ExpectedRow(
                "massive_spin", "is_polarization", True, PAPER,
                "complex polarizations of so(3) plus R^5", name,
            ),
            ExpectedRow(
                "massive_spin", "pukanszky", True, PAPER,
                "Pukanszky's condition holds since the annihilator of e is zero", name,
            ),
            ExpectedRow(
                "massive_spin", "e_annihilator_dim", 3, DERIVED,
                "annihilator of so(3) + R^5", name,
            ),
            ExpectedRow(
                "massive_spin", "reduced_e_annihilator_dim", 0, PAPER,
                "the annihilator of e is zero on the little algebra", name,
            ),
        ]
    return sd, points, polarizations, expected


BUILDERS = {
    "se3": _se3_fixture,
    "galilei": _galilei_fixture,
    "bargmann": _bargmann_fixture,
}


def build(name, s=1, k=1, m=1, energy=2):
    """Build and validate a fixture.

    Raises:
        UnknownFixture: ``name`` is not one of :data:`NAMES`.
        ValidationFailed: The structure constants or the representation are
            invalid.
        ValueError: A parameter is not a positive rational.

    """
    if name not in BUILDERS:
        raise UnknownFixture(
            "Unknown fixture {0}, expected one of {1}".format(name, ", ".join(NAMES))
        )
    params = {}
    for key, value in (("s", s), ("k", k), ("m", m), ("energy", energy)):
        value = Fraction(value)
        if value <= 0:
            raise ValueError("{0} must be positive, got {1}".format(key, value))
        params[key] = value
    sd, points, polarizations, expected = BUILDERS[name](params)
    validate(sd.k, sd.rho).raise_for_failures()
    validate(sd.g).raise_for_failures()
    logger.debug("built fixture %s with %r", name, params)
    return Fixture(name, sd, points, polarizations, params, expected)


def expected_table(name, **params):
    return build(name, **params).expected


def _reduced_candidate_dim(sd, n, candidate):
    point = OrbitPoint(sd, n)
    local = reduced_candidate(point, candidate.a)
    if local is None:
        return None
    reduced = PolarizationCandidate(point.kp_algebra, point.phi, local)
    return point.kp.dim - reduced.e.dim


def measure(fixture, row, settings=None):
    """Recompute the value an expected row describes."""
    settings = settings or Settings()
    sd = fixture.sd
    n = fixture.point(row.point)
    quantity = row.quantity
    if row.polarization is not None:
        _, h = fixture.polarization(row.polarization)
        candidate = PolarizationCandidate(sd, n, h)
        if quantity == "is_polarization":
            return check_polarization(sd, n, h, settings).is_polarization
        if quantity == "pukanszky":
            return pukanszky_check(sd, n, h, settings).holds
        if quantity == "e_annihilator_dim":
            return sd.dim - candidate.e.dim
        if quantity == "reduced_e_annihilator_dim":
            return _reduced_candidate_dim(sd, n, candidate)
        if quantity == "symmetric_spaces":
            return symmetric_space_check(sd, n, candidate.p_alg).holds
    point = OrbitPoint(sd, n)
    simple = {
        "orbit_dim": lambda: point.orbit_dim,
        "base_orbit_dim": lambda: point.base_orbit_dim,
        "little_orbit_dim": lambda: point.little_orbit_dim,
        "isotropy_dim": lambda: point.isotropy.dim,
        "kp_dim": lambda: point.kp.dim,
        "kp_in_kf": lambda: point.kp_in_kf,
    }
    if quantity in simple:
        return simple[quantity]()
    if quantity == "induced_dim":
        setup = InductionSetup(sd, n)
        return point.orbit_dim == setup.m_dim + 2 * setup.quotient_dim
    tangent = TangentData(sd, n)
    tangent_values = {
        "n_dim": lambda: tangent.tangent_n.dim,
        "n_perp_dim": lambda: tangent.tangent_n_perp.dim,
        "n_lagrangian": lambda: tangent.n_lagrangian,
        "characteristic_dim": lambda: tangent.characteristic().dim,
    }
    if quantity in tangent_values:
        return tangent_values[quantity]()
    raise KeyError("Unknown quantity {0}".format(quantity))


def check_expected(fixture, settings=None):
    """Recompute every expected row.

    Returns:
        CheckList: One ``expected.<row key>`` check per row

    """
    settings = settings or Settings()
    checks = CheckList()
    for row in fixture.expected:
        value = measure(fixture, row, settings)
        checks.add(
            Check(
                "expected.{0}.{1}".format(fixture.name, row.key),
                verdict(value == row.value),
                citations=["{0}: {1}".format(row.provenance, row.citation)],
                values={"expected": row.value, "computed": value},
            )
        )
    return checks


def random_rational_point(fixture, rng, scale=3):
    """A seeded exact point with small integer coordinates."""
    sd = fixture.sd
    coords = [int(x) for x in rng.integers(-scale, scale + 1, size=sd.dim)]
    return sd.point(coords[: sd.nk], coords[sd.nk :])


def bargmann_contragredient_check(w, b, p, fixture=None):
    """:func:`contragredient_check` on the Bargmann fixture."""
    return contragredient_check(fixture or build("bargmann"), w, b, p)


def galilei_contragredient_check(w, b, p, fixture=None):
    return contragredient_check(fixture or build("galilei"), w, b, p)
