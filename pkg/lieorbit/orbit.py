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


"""Geometry of a coadjoint orbit of a semidirect product

The orbit through ``n = (f, p)`` fibres over the K-orbit Z of ``p`` with the
little-group orbit of ``phi = f`` restricted to the little algebra of ``p``
along the way. Two submanifolds are always present: the K-orbit L and the
V-orbit N of the point. Tangent spaces are stored as subspaces of the dual of
the product, spanned by fundamental vector fields ``xi.m``.

Every statement about the connected stabilizer K_p is decided on its Lie
algebra and carries the connectedness caveat.

"""

import itertools

import numpy as np

from lieorbit import getlogger
from lieorbit.base import (
    CAVEAT_CONNECTED,
    CAVEAT_SAMPLED,
    FAILS,
    NOT_EVALUATED,
    Check,
    CheckList,
    Settings,
    distance_to_subspace,
    max_residual,
    sampled_verdict,
    verdict,
)
from lieorbit.errors import NotOnOrbit, PreconditionFailed
from lieorbit.exactla import (
    Matrix,
    Subspace,
    combine,
    intersect,
    quotient_basis,
    to_scalar,
)
from lieorbit.lie_core import coderivative
from lieorbit.semidirect import (
    CovectorPoint,
    GroupElement,
    coadjoint,
    fundamental_field,
    random_vector,
    sample_elements,
)

logger = getlogger(__name__)

SAMPLE_TIMES = (1, -1, 0.5, -0.5)


def point_tolerance(point, settings=None):
    """None for exact points, the configured tolerance for numeric ones."""
    if point.is_numeric:
        return (settings or Settings()).tol
    return None


class OrbitPoint(object):
    """Isotropy data at a point ``n = (f, p)``

    Args:
        sd (SemidirectProduct): The product
        n (CovectorPoint): The point
        tol (float): Tolerance for numeric points, None for exact ones

    Attributes:
        kp (Subspace): Little algebra of ``p``, the kernel of ``tau_p``
        kf (Subspace): Stabilizer of ``f`` in the Lie algebra of K
        phi (Covector): ``f`` restricted to ``kp``, in the canonical basis of ``kp``
        kp_algebra (LieAlgebra): ``kp`` with its own structure constants
        kp_phi (Subspace): Stabilizer of ``phi`` in ``kp``, as a subspace of
            the Lie algebra of K
        isotropy (Subspace): The isotropy algebra of ``n`` in the product

    """

    def __init__(self, sd, n, tol=None):
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        self.sd = sd
        self.n = n
        self.tol = tol
        self.tau = sd.tau(n.p, tol=tol)
        self.kp = self.tau.kernel
        self.kf = sd.k.stabilizer(n.f, tol=tol)
        self.isotropy = sd.g.stabilizer(n.as_covector(), tol=tol)
        self.phi = n.f.restrict(self.kp)
        self.kp_algebra = sd.k.subalgebra(self.kp)
        local = self.kp_algebra.stabilizer(self.phi, tol=tol)
        self.kp_phi_local = local
        self.kp_phi = Subspace(
            sd.nk,
            [combine(c, self.kp.basis, sd.nk) for c in local.basis],
            tol=tol,
        )
        self._logger.debug1(
            "point %r: dim kp = %d, dim kp_phi = %d, dim g_n = %d",
            n,
            self.kp.dim,
            self.kp_phi.dim,
            self.isotropy.dim,
        )

    @property
    def star_kernel(self):
        return self.tau.star_kernel

    @property
    def star_image(self):
        return self.tau.star_image

    @property
    def orbit_dim(self):
        return self.sd.dim - self.isotropy.dim

    @property
    def base_orbit_dim(self):
        return self.sd.nk - self.kp.dim

    @property
    def little_orbit_dim(self):
        return self.kp.dim - self.kp_phi.dim

    @property
    def kp_in_kf(self):
        return self.kp.is_subspace_of(self.kf)

    @property
    def f_closed_k(self):
        """``f([k, k]) = 0``."""
        return self.sd.k.covector_form(self.n.f, tol=self.tol).is_zero()

    @property
    def f_closed_kp(self):
        """``phi([kp, kp]) = 0``."""
        return self.kp_algebra.covector_form(self.phi, tol=self.tol).is_zero()

    def little_to_k(self, coords):
        """Coordinates in the canonical basis of ``kp`` to a vector of K."""
        return combine(coords, self.kp.basis, self.sd.nk)


def _field_span(sd, o, generators, tol):
    columns = [fundamental_field(sd, xi, o).coords for xi in generators]
    return Subspace(sd.dim, columns, tol=tol)


def tangent_space(sd, o, generators, tol=None):
    """``{xi.o : xi in generators}`` as a subspace of the dual."""
    return _field_span(sd, o, generators.basis, tol)


def orthogonal_complement(sd, o, generators, tol=None):
    """Symplectic orthogonal of ``{xi.o : xi in generators}`` in ``T_oO``.

    Args:
        sd (SemidirectProduct): The product
        o (CovectorPoint): Point of the orbit
        generators (Subspace): Subspace of the product whose fundamental
            fields span the tangent subspace

    Returns:
        Subspace: ``{eta.o : o([xi, eta]) = 0 for all xi in generators}``

    """
    form = sd.g.covector_form(o.as_covector(), tol=tol)
    if generators.dim == 0:
        preimage = Subspace.full(sd.dim, tol=tol)
    else:
        # row for xi holds o([xi, e_j])
        rows = [form.transpose().apply(xi) for xi in generators.basis]
        preimage = Matrix(rows, ncols=sd.dim, tol=tol).kernel()
    return _field_span(sd, o, preimage.basis, tol)


class TangentData(object):
    """Tangent spaces of L and N at a point and their orthogonal complements

    Attributes:
        tangent_l, tangent_l_perp, tangent_n, tangent_n_perp (Subspace):
            Subspaces of the dual of the product
        caveats (list): ``sampled-only`` when the point was reached by a
            numeric search
        reach_residual (float): Residual of that search, None otherwise

    """

    def __init__(self, sd, o, tol=None, caveats=None, reach_residual=None):
        self.point = o
        self.reach_residual = reach_residual
        self.tangent_l = tangent_space(sd, o, sd.k_subspace, tol)
        self.tangent_l_perp = orthogonal_complement(sd, o, sd.k_subspace, tol)
        self.tangent_n = tangent_space(sd, o, sd.v_subspace, tol)
        self.tangent_n_perp = orthogonal_complement(sd, o, sd.v_subspace, tol)
        self.caveats = list(caveats or [])

    @property
    def n_isotropic(self):
        return self.tangent_n.is_subspace_of(self.tangent_n_perp)

    @property
    def n_lagrangian(self):
        return self.n_isotropic and self.tangent_n.dim == self.tangent_n_perp.dim

    @property
    def l_lagrangian(self):
        return self.tangent_l == self.tangent_l_perp

    def characteristic(self):
        return intersect(self.tangent_l, self.tangent_l_perp)


def reach_point(sd, n, o, settings=None, starts=4, iterations=40):
    """Search ``g`` with ``Coad(g)n = o`` by Gauss-Newton steps from seeded starts.

    Each step solves ``xi.m = o - m`` in the least squares sense at the
    current point ``m`` and moves to ``Coad(exp(xi) g)n``.

    Returns:
        tuple: ``(element, residual)`` for the closest point found, the
        residual being the largest coordinate of ``o - Coad(g)n``

    """
    settings = settings or Settings()
    rng = settings.rng("orbit.reach")
    target = o.to_numpy()
    basis = [sd.g.basis_vector(i) for i in range(sd.dim)]
    best, best_residual = None, float("inf")
    for start in range(starts):
        if start:
            g = sample_elements(sd, rng, 1)[0]
        else:
            g = GroupElement.exp(sd, np.zeros(sd.dim))
        for _ in range(iterations):
            m = coadjoint(sd, g, n)
            gap = target - m.to_numpy()
            if np.max(np.abs(gap)) < settings.tol:
                break
            fields = np.array(
                [fundamental_field(sd, xi, m).to_numpy() for xi in basis]
            ).T
            step = np.linalg.lstsq(fields, gap, rcond=None)[0]
            g = GroupElement.exp(sd, step) * g
        residual = float(np.max(np.abs(target - coadjoint(sd, g, n).to_numpy())))
        if residual < best_residual:
            best, best_residual = g, residual
        if best_residual < settings.tol:
            break
    logger.debug2("reach %r from %r: residual %g", o, n, best_residual)
    return best, best_residual


def tangent_L_N(sd, n, o=None, settings=None):  # noqa: N802
    """Tangent spaces of L and N through a point ``o`` of the orbit of ``n``.

    A point that differs from ``n`` by a tangent vector of N is accepted
    exactly. Any other point must be reached by :func:`reach_point`.

    Raises:
        NotOnOrbit: ``o`` is not on the orbit: its isotropy dimensions differ
            from those of ``n``, or no seeded search reaches it.

    """
    settings = settings or Settings()
    caveats = []
    reach_residual = None
    if o is None or o == n:
        o = n
    else:
        tol = point_tolerance(o, settings) or point_tolerance(n, settings)
        along_n = tangent_space(sd, n, sd.v_subspace, tol)
        if not along_n.contains((o - n).coords):
            here = OrbitPoint(sd, n, tol=point_tolerance(n, settings))
            there = OrbitPoint(sd, o, tol=tol)
            if (
                here.isotropy.dim != there.isotropy.dim
                or here.kp.dim != there.kp.dim
                or here.kp_phi.dim != there.kp_phi.dim
            ):
                raise NotOnOrbit(
                    "Point {0!r} is not on the orbit of {1!r}".format(o, n), context=o
                )
            _, reach_residual = reach_point(sd, n, o, settings)
            if reach_residual >= settings.tol:
                raise NotOnOrbit(
                    "Point {0!r} was not reached from {1!r}, residual {2:g}".format(
                        o, n, reach_residual
                    ),
                    context=o,
                )
            caveats.append(CAVEAT_SAMPLED)
    return TangentData(
        sd,
        o,
        tol=point_tolerance(o, settings),
        caveats=caveats,
        reach_residual=reach_residual,
    )


def kks_form(sd, m, xi, eta):
    """``omega_m(xi.m, eta.m) = -m([xi, eta])``."""
    return to_scalar(-m(sd.bracket(xi, eta)))


def kks_form_expanded(sd, m, xi, eta):
    """The same form written with the components of the semidirect product.

    ``(A.h + q (.) a)(B) + (A.q)(b)`` for ``xi = (A, a)``, ``eta = (B, b)``
    and ``m = (h, q)``.

    """
    A, a = sd.split(xi)  # noqa: N806
    B, b = sd.split(eta)  # noqa: N806
    first = coderivative(sd.k, A, m.f) + sd.odot(m.p, a)
    second = sd.rho.dual_action(A).apply(m.p.coords)
    return to_scalar(first(B) + sum(x * y for x, y in zip(second, b)))


def splitting_sides(sd, n, g, xi, eta):
    """Both sides of the splitting of the symplectic form at ``Coad(g)n``.

    Returns:
        tuple: ``(q(B.(A.v + a)) - q(A.(B.v + b)) - h([A, B]),
        omega_m(xi.m, eta.m))`` with ``(h, q) = (k.f, k.p)`` and
        ``m = Coad(g)n``

    """
    A, a = sd.split(xi)  # noqa: N806
    B, b = sd.split(eta)  # noqa: N806
    q = g.dual_v(n.p.coords)
    h = g.dual_k(n.f.coords)
    v = g.v
    rho_a = sd.rho_array(g.convert(A))
    rho_b = sd.rho_array(g.convert(B))
    lhs = (
        q @ (rho_b @ (rho_a @ v + g.convert(a)))
        - q @ (rho_a @ (rho_b @ v + g.convert(b)))
        - h @ g.convert(sd.k.bracket(A, B))
    )
    m = coadjoint(sd, g, n)
    return to_scalar(lhs), kks_form(sd, m, xi, eta)


def splitting_check(sd, n, g, xi, eta):
    """Residual of the splitting identity, exact zero for exact elements."""
    lhs, rhs = splitting_sides(sd, n, g, xi, eta)
    return abs(lhs - rhs)


def splitting_theorem_check(sd, n, settings=None):
    """Sampled splitting identity over seeded ``(g, xi, eta)``."""
    settings = settings or Settings()
    rng = settings.rng("orbit.splitting")
    full = Subspace.full(sd.dim)
    residuals = []
    identity = GroupElement.identity(sd)
    base = [
        splitting_check(
            sd, n, identity, sd.g.basis_vector(i), sd.g.basis_vector(j)
        )
        for i, j in itertools.combinations(range(sd.dim), 2)
    ]
    for _ in range(settings.samples):
        g = GroupElement.exp(sd, random_vector(rng, full, 0.5))
        xi = random_vector(rng, full)
        eta = random_vector(rng, full)
        residuals.append(float(splitting_check(sd, n, g, xi, eta)))
    exact_ok = all(r == 0 for r in base)
    return Check(
        "orbit.splitting",
        sampled_verdict(settings, residuals, exact_ok)
        if settings.sampling
        else verdict(exact_ok),
        citations=["splitting of the orbit symplectic form over K x V"],
        residuals={"max": max_residual(residuals)},
        caveats=[CAVEAT_SAMPLED] if settings.sampling else [],
        values={"samples": settings.samples, "identity_exact": exact_ok},
    )


def characteristic_distribution(sd, n, o=None, settings=None):
    """``T_oL`` intersected with its symplectic orthogonal.

    Raises:
        PreconditionFailed: In strict mode, when the little algebra of ``p``
            is not contained in the stabilizer of ``f``; ``violations`` lists
            the offending basis vectors of the little algebra.

    """
    settings = settings or Settings()
    point = OrbitPoint(sd, n, tol=point_tolerance(n, settings))
    if not point.kp_in_kf:
        violations = [row for row in point.kp.basis if not point.kf.contains(row)]
        if settings.strict:
            raise PreconditionFailed(
                "Little algebra is not contained in the stabilizer of f",
                violations=violations,
            )
        logger.warning(
            "characteristic distribution computed without the inclusion of kp in kf"
        )
    return tangent_L_N(sd, n, o, settings).characteristic()


class Leaf(object):
    """An affine leaf ``o + q (.) V`` of the isotropic foliation"""

    def __init__(self, base, directions, orbit_dim, isotropic):
        self.base = base
        self.directions = directions
        self.orbit_dim = orbit_dim
        self.isotropic = isotropic

    @property
    def dim(self):
        return self.directions.dim

    @property
    def lagrangian(self):
        return self.isotropic and 2 * self.dim == self.orbit_dim

    def __repr__(self):
        return "<Leaf dim={0} of orbit dim={1}>".format(self.dim, self.orbit_dim)


def foliation_leaf(sd, o, settings=None):
    """The leaf through ``o`` of the foliation by V-orbits."""
    tol = point_tolerance(o, settings)
    directions = tangent_space(sd, o, sd.v_subspace, tol)
    v_basis = sd.v_subspace.basis
    values = [kks_form(sd, o, a, b) for a, b in itertools.combinations(v_basis, 2)]
    isotropic = all(abs(x) <= (tol or 0) for x in values)
    orbit_dim = sd.dim - sd.g.stabilizer(o.as_covector(), tol=tol).dim
    return Leaf(o, directions, orbit_dim, isotropic)


def little_group_samples(sd, point, settings, stream):
    """Seeded elements of the connected little group, as K x V elements."""
    rng = settings.rng(stream)
    elements = []
    for row, t in itertools.product(point.kp.basis, SAMPLE_TIMES):
        elements.append(
            GroupElement.exp(sd, sd.k_vector([t * float(x) for x in row]))
        )
    while len(elements) < settings.samples:
        direction = random_vector(rng, point.kp)
        elements.append(GroupElement.exp(sd, sd.k_vector(direction)))
    return elements[: settings.samples] if settings.sampling else []


def varisotropy_check(sd, n, settings=None):
    """The little group moves ``f`` only inside ``k_p`` annihilator.

    Stated for points with ``kp`` inside ``kf``; elsewhere the check reads
    "not-evaluated" and only records the measured condition.

    """
    settings = settings or Settings()
    point = OrbitPoint(sd, n, tol=point_tolerance(n, settings))
    infinitesimal = all(
        point.star_image.contains(coderivative(sd.k, row, n.f).coords)
        for row in point.kp.basis
    )
    residuals = []
    for element in little_group_samples(sd, point, settings, "orbit.varisotropy"):
        moved = element.dual_k(n.f.coords) - np.array([float(x) for x in n.f])
        residuals.append(distance_to_subspace(moved, point.star_image))
    condition = sampled_verdict(settings, residuals, infinitesimal)
    values = {
        "kp_in_kf": point.kp_in_kf,
        "infinitesimal": infinitesimal,
        "condition": condition,
    }
    if not point.kp_in_kf:
        return Check(
            "orbit.varisotropy",
            NOT_EVALUATED,
            citations=["little group moves f inside the annihilator of kp"],
            residuals={"max": max_residual(residuals)},
            values=values,
            detail="little algebra is not contained in the stabilizer of f",
        )
    return Check(
        "orbit.varisotropy",
        condition if settings.sampling else verdict(infinitesimal),
        citations=["little group moves f inside the annihilator of kp"],
        residuals={"max": max_residual(residuals)},
        caveats=[CAVEAT_CONNECTED] + ([CAVEAT_SAMPLED] if settings.sampling else []),
        values=values,
    )


class ModifiedCotangent(object):
    """The magnetic term ``alpha(A.p, B.p) = -f([A, B])`` on the base orbit

    Attributes:
        representatives (list): Vectors of K completing the little algebra,
            one per direction of the base orbit
        alpha (Matrix): The form on the representatives
        descends (bool): The form vanishes when one argument lies in the
            little algebra, so it is well defined on the base orbit
        closed (bool): The cocycle identity holds
        section_residual: Largest difference between the pullback of the
            orbit form along the section ``A.q -> (A.h, A.q)`` and ``alpha``

    """

    def __init__(self, representatives, alpha, descends, closed, section_residual):
        self.representatives = representatives
        self.alpha = alpha
        self.descends = descends
        self.closed = closed
        self.section_residual = section_residual

    def checks(self):
        citations = ["modified cotangent bundle of the base orbit"]
        return [
            Check("orbit.magnetic-descends", verdict(self.descends), citations),
            Check("orbit.magnetic-closed", verdict(self.closed), citations),
            Check(
                "orbit.section-pullback",
                verdict(self.section_residual == 0),
                citations,
                residuals={"max": self.section_residual},
            ),
        ]


def modified_cotangent_data(sd, n):
    point = OrbitPoint(sd, n)
    k = sd.k
    representatives = quotient_basis(Subspace.full(sd.nk), point.kp)
    f = n.f
    alpha = Matrix(
        [[-f(k.bracket(a, b)) for b in representatives] for a in representatives],
        ncols=len(representatives),
    )
    descends = all(
        f(k.bracket(a, k.basis_vector(j))) == 0
        for a in point.kp.basis
        for j in range(sd.nk)
    )
    closed = True
    basis = [k.basis_vector(i) for i in range(sd.nk)]
    for a, b, c in itertools.combinations(basis, 3):
        total = (
            f(k.bracket(k.bracket(a, b), c))
            + f(k.bracket(k.bracket(b, c), a))
            + f(k.bracket(k.bracket(c, a), b))
        )
        if total != 0:
            closed = False
    residual = 0
    for (i, a), (j, b) in itertools.product(enumerate(representatives), repeat=2):
        pulled = kks_form(sd, n, sd.k_vector(a), sd.k_vector(b))
        residual = max(residual, abs(pulled - alpha[i, j]))
    return ModifiedCotangent(representatives, alpha, descends, closed, residual)


class OrbitReport(object):
    """Dimensions and verdicts for the orbit through a point

    Attributes:
        values (dict): Dimensions (``orbit_dim``, ``base_orbit_dim``,
            ``little_orbit_dim``, ...) and boolean properties (``kp_in_kf``,
            ``n_lagrangian``, ...)
        checks (CheckList): The verified statements

    """

    def __init__(self, sd, point, tangent):
        self.sd = sd
        self.point = point
        self.tangent = tangent
        self.values = {
            "orbit_dim": point.orbit_dim,
            "isotropy_dim": point.isotropy.dim,
            "base_orbit_dim": point.base_orbit_dim,
            "little_orbit_dim": point.little_orbit_dim,
            "fibre_dim": point.star_image.dim,
            "kp_dim": point.kp.dim,
            "kf_dim": point.kf.dim,
            "kp_phi_dim": point.kp_phi.dim,
            "star_kernel_dim": point.star_kernel.dim,
            "l_dim": tangent.tangent_l.dim,
            "n_dim": tangent.tangent_n.dim,
            "n_perp_dim": tangent.tangent_n_perp.dim,
            "kp_in_kf": point.kp_in_kf,
            "f_closed_k": point.f_closed_k,
            "f_closed_kp": point.f_closed_kp,
            "n_isotropic": tangent.n_isotropic,
            "n_lagrangian": tangent.n_lagrangian,
            "l_lagrangian": tangent.l_lagrangian,
        }
        self.checks = CheckList()

    @property
    def orbit_dim(self):
        return self.values["orbit_dim"]

    def to_dict(self):
        return {"values": dict(self.values), "checks": self.checks.to_list()}


def analyze_point(sd, n, settings=None):
    """Dimensions, tangent spaces and Lagrangian criteria at ``n``.

    Returns:
        OrbitReport: Values and checks; all checks are exact except the
        sampled varisotropy and splitting checks.

    """
    settings = settings or Settings()
    tol = point_tolerance(n, settings)
    point = OrbitPoint(sd, n, tol=tol)
    tangent = TangentData(sd, n, tol=tol)
    report = OrbitReport(sd, point, tangent)
    checks = report.checks

    checks.add(
        Check(
            "orbit.exact-sequence",
            verdict(
                point.isotropy.dim == point.star_kernel.dim + point.kp_phi.dim
            ),
            citations=["0 -> ker tau_p* -> g_n -> (k_p)_phi -> 0"],
            values={
                "isotropy_dim": point.isotropy.dim,
                "star_kernel_dim": point.star_kernel.dim,
                "kp_phi_dim": point.kp_phi.dim,
            },
        )
    )
    checks.add(
        Check(
            "orbit.dimension-law",
            verdict(
                point.orbit_dim == 2 * point.base_orbit_dim + point.little_orbit_dim
            ),
            citations=["orbit fibres over the bundle of little-group orbits"],
            values={"orbit_dim": point.orbit_dim},
        )
    )
    fields = Matrix.from_columns(
        [fundamental_field(sd, sd.g.basis_vector(i), n).coords for i in range(sd.dim)],
        nrows=sd.dim,
        tol=tol,
    )
    checks.add(
        Check(
            "orbit.isotropy-fields",
            verdict(fields.kernel() == point.isotropy),
            citations=["isotropy algebra is the zero set of the fundamental fields"],
        )
    )
    checks.add(
        Check(
            "orbit.n-isotropic",
            verdict(tangent.n_isotropic),
            citations=["V-orbit through n is isotropic"],
        )
    )
    # kp in kf is sufficient, phi closed on kp is the exact condition
    criterion = tangent.n_lagrangian == point.f_closed_kp
    if point.kp_in_kf:
        criterion = criterion and (
            tangent.n_lagrangian
            and 2 * tangent.tangent_n.dim == point.orbit_dim
            and point.little_orbit_dim == 0
        )
    checks.add(
        Check(
            "orbit.n-lagrangian-criterion",
            verdict(criterion),
            citations=[
                "N is Lagrangian when kp lies in kf",
                "N is Lagrangian exactly when the little orbit is a point",
            ],
            caveats=[CAVEAT_CONNECTED],
            values={
                "kp_in_kf": point.kp_in_kf,
                "f_closed_kp": point.f_closed_kp,
                "n_lagrangian": tangent.n_lagrangian,
            },
        )
    )
    annihilator_form = tangent.tangent_n == sd.embed_k(point.star_image)
    checks.add(
        Check(
            "orbit.tangent-n",
            verdict(annihilator_form),
            citations=["T_nN is the annihilator of kp, independent of the point"],
        )
    )
    if point.f_closed_k:
        l_check = Check(
            "orbit.l-lagrangian",
            verdict(tangent.l_lagrangian),
            citations=["f([k, k]) = 0 makes L Lagrangian"],
        )
    else:
        l_check = Check(
            "orbit.l-lagrangian",
            NOT_EVALUATED,
            citations=["f([k, k]) = 0 makes L Lagrangian"],
            values={"l_lagrangian": tangent.l_lagrangian},
            detail="f does not vanish on [k, k]",
        )
    checks.add(l_check)
    characteristic = tangent.characteristic().dim
    expected = point.kf.dim - intersect(point.kf, point.kp).dim
    checks.add(
        Check(
            "orbit.characteristic-distribution",
            verdict(characteristic == expected),
            citations=["characteristic distribution of L is kf acting on the point"],
            values={"dim": characteristic, "expected": expected},
        )
    )
    if tol is None:
        checks.extend(modified_cotangent_data(sd, n).checks() if point.kp_in_kf else [])
        checks.add(varisotropy_check(sd, n, settings))
        checks.add(splitting_theorem_check(sd, n, settings))
    for check in checks:
        if check.verdict == FAILS:
            logger.warning("check %s fails at %r", check.name, n)
    return report


def sample_points(sd, rng, count, scale=2):
    """Seeded rational points, small integer coordinates."""
    points = []
    for _ in range(count):
        coords = [int(x) for x in rng.integers(-scale, scale + 1, size=sd.dim)]
        points.append(CovectorPoint.from_coords(sd, coords))
    return points
