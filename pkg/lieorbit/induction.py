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


"""Symplectic induction from the little group and connection transfer

The orbit through ``n = (f, p)`` is induced from the orbit of
``phi = f|kp`` under ``H = K_p x V``. Nothing here builds the induced
manifold; its defining identities are evaluated at seeded points instead.

Tangent vectors of G at ``g = (k, v)`` are written ``(Y, w)`` with ``Y`` in
the Lie algebra of K, left trivialized, and ``w`` in V.

"""

import itertools

import numpy as np

from lieorbit import getlogger
from lieorbit.base import (
    CAVEAT_SAMPLED,
    CAVEAT_TANGENT,
    NOT_EVALUATED,
    Check,
    CheckList,
    Settings,
    max_residual,
    sampled_verdict,
    verdict,
)
from lieorbit.errors import NotASubalgebra, PreconditionFailed
from lieorbit.exactla import (
    Matrix,
    Subspace,
    intersect,
    quotient_basis,
    span_sum,
)
from lieorbit.orbit import (
    OrbitPoint,
    kks_form,
    kks_form_expanded,
    little_group_samples,
)
from lieorbit.semidirect import (
    CovectorPoint,
    GroupElement,
    adjoint_matrix,
    fundamental_field,
    random_vector,
    sample_elements,
)

logger = getlogger(__name__)

PERTURBATION = 0.1


def _floats(values):
    return np.array([float(x) for x in values], dtype=float)


def _basis_array(subspace):
    return np.array(
        [[float(x) for x in row] for row in subspace.basis], dtype=float
    ).reshape(subspace.dim, subspace.ambient_dim)


class InductionSetup(object):
    """The data ``(G, H, M)`` of the induction at a point

    Args:
        sd (SemidirectProduct): The product G
        n (CovectorPoint): Exact point whose orbit is induced

    Raises:
        NotASubalgebra: ``kp + V`` is not closed under the bracket.

    Attributes:
        point (OrbitPoint): Isotropy data at ``n``
        h_sub (Subspace): ``kp + V``, the Lie algebra of H
        m_dim (int): Dimension of the little-group orbit M
        quotient_dim (int): Dimension of G/H

    """

    def __init__(self, sd, n):
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        self.sd = sd
        self.n = n
        self.point = OrbitPoint(sd, n)
        self.h_sub = sd.with_v(self.point.kp)
        if not sd.g.is_subalgebra(self.h_sub):
            raise NotASubalgebra("kp + V is not a subalgebra", context=self.h_sub)
        self.m_dim = self.point.kp.dim - self.point.kp_phi.dim
        self.quotient_dim = sd.nk - self.point.kp.dim
        self._kp_basis = _basis_array(self.point.kp)
        self._logger.debug1(
            "induction from H of dim %d, dim M = %d", self.h_sub.dim, self.m_dim
        )

    @property
    def h_dim(self):
        return self.h_sub.dim

    def restrict(self, mu):
        """``i_h* mu`` in the coordinates ``(kp canonical basis, V)``."""
        mu = np.asarray(mu, dtype=float)
        sd = self.sd
        return np.concatenate([self._kp_basis @ mu[: sd.nk], mu[sd.nk :]])

    def momentum(self, m, mu):
        """``J(m, g, mu) = m - i_h* mu``; the G slot does not enter."""
        return np.asarray(m, dtype=float) - self.restrict(mu)

    def base_tuple(self):
        """``((phi, p), identity, (f, p))``, exact."""
        m = tuple(self.point.phi.coords) + tuple(self.n.p.coords)
        return m, GroupElement.identity(self.sd), self.n

    def __repr__(self):
        return "<InductionSetup dim h={0} dim M={1}>".format(self.h_dim, self.m_dim)


def _zero_set_tuple(setup, element, rng):
    """``((k.phi, p), g, (k.f + p (.) v, k.p))`` for ``k`` in the little group."""
    sd, n = setup.sd, setup.n
    f = element.dual_k(n.f.coords)
    q = element.dual_v(n.p.coords)
    v = random_vector(rng, Subspace.full(sd.nv))
    mu = np.concatenate([f + sd.odot_array(q, v), q])
    m = np.concatenate([setup._kp_basis @ f, _floats(n.p.coords)])
    return m, mu


def _off_level_set(setup, m, rng):
    """``m`` moved along its ``kp*`` component, or along ``p`` when ``kp = 0``."""
    shift = np.zeros(len(m))
    kp_dim = setup.point.kp.dim
    if kp_dim:
        shift[:kp_dim] = rng.normal(size=kp_dim)
    else:
        shift[kp_dim:] = rng.normal(size=len(m) - kp_dim)
    return m + PERTURBATION * shift


def momentum_differential(setup):
    """Exact matrix of ``dJ`` in the coordinates ``(m, mu)``.

    ``J(m, g, mu) = m - i_h* mu`` is linear, so its differential is the same
    at every point of ``M x T*G``.

    """
    sd, kp = setup.sd, setup.point.kp
    size = setup.h_dim
    rows = []
    for i, row in enumerate(kp.basis):
        unit = [0] * size
        unit[i] = 1
        rows.append(unit + [-x for x in row] + [0] * sd.nv)
    for j in range(sd.nv):
        unit = [0] * size
        unit[kp.dim + j] = 1
        v_part = [0] * sd.nv
        v_part[j] = -1
        rows.append(unit + [0] * sd.nk + v_part)
    return Matrix(rows, ncols=size + sd.dim)


def zero_level_set_check(setup, settings=None):
    """Membership, violation and regularity of the zero level set.

    Returns:
        CheckList: ``induction.zero-level-set`` (seeded tuples of the
        characterization give zero), ``induction.off-level-set`` (the same
        tuples moved along the ``kp*`` component do not) and
        ``induction.regular-value`` (the differential has rank ``dim h``,
        exact)

    """
    settings = settings or Settings()
    sd = setup.sd
    checks = CheckList()
    citations = ["zero level set of the momentum map of M x T*G"]

    m0, _, n = setup.base_tuple()
    restricted = tuple(n.f.restrict(setup.point.kp).coords) + tuple(n.p.coords)
    base_residual = max([abs(a - b) for a, b in zip(m0, restricted)] + [0])

    rng = settings.rng("induction.zero-level-set")
    positives = []
    negatives = []
    elements = little_group_samples(sd, setup.point, settings, "induction.little")
    for element in elements:
        m, mu = _zero_set_tuple(setup, element, rng)
        positives.append(float(np.max(np.abs(setup.momentum(m, mu)))))
        shifted = setup.momentum(_off_level_set(setup, m, rng), mu)
        negatives.append(float(np.max(np.abs(shifted))))

    checks.add(
        Check(
            "induction.zero-level-set",
            sampled_verdict(settings, positives, base_residual == 0),
            citations,
            residuals={"max": max_residual(positives), "base": base_residual},
            caveats=[CAVEAT_SAMPLED],
            values={"samples": len(positives)},
        )
    )
    detected = [r for r in negatives if r > settings.tol]
    checks.add(
        Check(
            "induction.off-level-set",
            NOT_EVALUATED
            if not settings.sampling
            else verdict(len(detected) == len(negatives)),
            citations,
            residuals={"min": float(min(negatives)) if negatives else 0.0},
            caveats=[CAVEAT_SAMPLED],
            values={"detected": len(detected), "samples": len(negatives)},
        )
    )
    rank = momentum_differential(setup).rank()
    checks.add(
        Check(
            "induction.regular-value",
            verdict(rank == setup.h_dim),
            citations,
            values={"h_dim": setup.h_dim, "rank": rank},
        )
    )
    return checks


def induced_orbit_theorem_check(setup, settings=None):
    """The orbit of ``n`` is induced from the little-group orbit of ``phi``.

    Checks the dimension count ``dim O = dim M + 2 dim G/H``, that the
    quotient representatives ``(l.f + (l.p) (.) u, l.p)`` pair with every
    ``xi`` as ``n`` pairs with ``Ad(g^-1) xi``, that the points reached have
    the isotropy dimension and the tangent rank of ``n``, and that the
    induced form written in components reproduces the orbit form.

    """
    settings = settings or Settings()
    sd, n, point = setup.sd, setup.n, setup.point
    checks = CheckList()
    citations = ["coadjoint orbits of semidirect products are induced"]
    checks.add(
        Check(
            "induction.dimension",
            verdict(point.orbit_dim == setup.m_dim + 2 * setup.quotient_dim),
            citations,
            values={
                "orbit_dim": point.orbit_dim,
                "m_dim": setup.m_dim,
                "quotient_dim": setup.quotient_dim,
            },
        )
    )

    rng = settings.rng("induction.representatives")
    base = _floats(n.coords)
    basis = [sd.g.basis_vector(i) for i in range(sd.dim)]
    reach = []
    ranks = set()
    form = []
    elements = sample_elements(sd, rng, settings.samples) if settings.sampling else []
    for index, element in enumerate(elements):
        q = element.dual_v(n.p.coords)
        representative = np.concatenate(
            [element.dual_k(n.f.coords) + sd.odot_array(q, element.v), q]
        )
        # <Coad(g)n, xi> = <n, Ad(g^-1)xi>
        paired = adjoint_matrix(sd, element.inverse()).T @ base
        reach.append(float(np.max(np.abs(representative - paired))))
        image = CovectorPoint.from_coords(sd, paired)
        if index < 5:
            # isotropy of the image is the kernel of these fields
            fields = np.array(
                [_floats(fundamental_field(sd, xi, image).coords) for xi in basis]
            )
            ranks.add(int(np.linalg.matrix_rank(fields, tol=1e-6)))
        xi = rng.normal(size=sd.dim)
        eta = rng.normal(size=sd.dim)
        form.append(
            abs(kks_form_expanded(sd, image, xi, eta) - kks_form(sd, image, xi, eta))
        )
    checks.add(
        Check(
            "induction.representatives",
            sampled_verdict(settings, reach, ranks <= {point.orbit_dim}),
            citations,
            residuals={"max": max_residual(reach)},
            caveats=[CAVEAT_SAMPLED, CAVEAT_TANGENT],
            values={
                "orbit_dim": point.orbit_dim,
                "isotropy_dim": point.isotropy.dim,
                "ranks": sorted(ranks),
            },
        )
    )
    checks.add(
        Check(
            "induction.induced-form",
            sampled_verdict(settings, [float(x) for x in form]),
            citations,
            residuals={"max": max_residual([float(x) for x in form])},
            caveats=[CAVEAT_SAMPLED],
        )
    )
    return checks


class ConnectionSpec(object):
    """A connection on K -> K/P and its transfer to G -> G/D

    The connection on K is the projection onto ``p_alg`` along
    ``complement``; ``D = P x V``.

    Args:
        sd (SemidirectProduct): The product
        p_alg (Subspace): Lie algebra of P inside the Lie algebra of K
        complement (Subspace): Complement of ``p_alg`` in the Lie algebra of K

    Raises:
        PreconditionFailed: ``p_alg`` and ``complement`` do not split the Lie
            algebra of K, or ``p_alg`` is not a subalgebra.

    Attributes:
        invariant (bool): ``[p_alg, complement]`` lies in ``complement``;
            the transferred connection is equivariant only then

    """

    def __init__(self, sd, p_alg, complement):
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        full = Subspace.full(sd.nk)
        if (
            p_alg.dim + complement.dim != sd.nk
            or span_sum(p_alg, complement) != full
        ):
            raise PreconditionFailed(
                "p and its complement do not split the Lie algebra of K",
                violations=[p_alg.dim, complement.dim],
            )
        if not sd.k.is_subalgebra(p_alg):
            raise PreconditionFailed("p is not a subalgebra", violations=["p"])
        self.sd = sd
        self.p_alg = p_alg
        self.complement = complement
        self.d_alg = sd.with_v(p_alg)
        self.invariant = all(
            complement.contains(sd.k.bracket(x, y))
            for x in p_alg.basis
            for y in complement.basis
        )
        columns = np.vstack([_basis_array(p_alg), _basis_array(complement)]).T
        coefficients = np.linalg.inv(columns)
        self._projection = columns[:, : p_alg.dim] @ coefficients[: p_alg.dim]
        if not self.invariant:
            self._logger.warning("complement is not invariant under p")

    def project(self, Y):  # noqa: N803
        """The connection on K, ``Y -> pi_p Y``."""
        return self._projection @ np.asarray(Y, dtype=float)

    def connection(self, g, Y, w):  # noqa: N803
        """``c_g(Y, w) = (pi_p Y, k^-1 (w - rho'(Ad_k Y_h) v))``."""
        sd = self.sd
        Y = np.asarray(Y, dtype=float)  # noqa: N806
        vertical = self.project(Y)
        horizontal = Y - vertical
        k_ad = np.asarray(g.k_ad, dtype=float)
        v = np.asarray(g.v, dtype=float)
        moved = np.asarray(w, dtype=float) - sd.rho_array(k_ad @ horizontal) @ v
        return vertical, np.asarray(g.k_rep_inverse, dtype=float) @ moved

    def connection_vector(self, g, Y, w):  # noqa: N803
        vertical, translation = self.connection(g, Y, w)
        return np.concatenate([vertical, translation])

    def left_invariant(self, g, xi):
        """Value at ``g`` of the left invariant field of ``xi = (B, b)``.

        This is also the fundamental field of the right action when ``xi``
        lies in the Lie algebra of D.

        """
        sd = self.sd
        xi = np.asarray(xi, dtype=float)
        return xi[: sd.nk], np.asarray(g.k_rep, dtype=float) @ xi[sd.nk :]

    def right_translate(self, g, h, Y, w):  # noqa: N803
        """Tangent map of right translation by ``h = (l, u)`` at ``g``."""
        Y = np.asarray(Y, dtype=float)  # noqa: N806
        moved = np.asarray(h.k_ad_inverse, dtype=float) @ Y
        shift = np.asarray(g.k_rep, dtype=float) @ (
            self.sd.rho_array(Y) @ np.asarray(h.v, dtype=float)
        )
        return moved, np.asarray(w, dtype=float) + shift

    def adjoint_inverse(self, h, xi):
        """``Ad(h^-1)(B, b) = (Ad(l^-1)B, l^-1 b + rho'(Ad(l^-1)B) l^-1 u)``."""
        sd = self.sd
        xi = np.asarray(xi, dtype=float)
        moved = np.asarray(h.k_ad_inverse, dtype=float) @ xi[: sd.nk]
        rep_inv = np.asarray(h.k_rep_inverse, dtype=float)
        translation = rep_inv @ xi[sd.nk :] + sd.rho_array(moved) @ (
            rep_inv @ np.asarray(h.v, dtype=float)
        )
        return np.concatenate([moved, translation])

    def horizontal_lift(self, g, Y):  # noqa: N803
        """Lift of ``Y`` taken horizontal for the connection on K."""
        horizontal = np.asarray(Y, dtype=float) - self.project(Y)
        k_ad = np.asarray(g.k_ad, dtype=float)
        v = np.asarray(g.v, dtype=float)
        return horizontal, self.sd.rho_array(k_ad @ horizontal) @ v

    def form_value(self, n0, g, xi):
        """``n0(c(xi~))`` at ``g`` for the left invariant field of ``xi``."""
        vector = self.connection_vector(g, *self.left_invariant(g, xi))
        return float(_floats(n0) @ vector)

    def _derivative(self, n0, g, xi, eta, step):
        """``d/dt n0(c(eta~))(g exp(t xi))`` at 0, Richardson extrapolated."""

        def central(h):
            forward = g * GroupElement.exp(self.sd, h * xi)
            backward = g * GroupElement.exp(self.sd, -h * xi)
            return (
                self.form_value(n0, forward, eta) - self.form_value(n0, backward, eta)
            ) / (2 * h)

        return (4 * central(step / 2) - central(step)) / 3

    def beta_form(self, n0, g, xi, eta, step=1e-4):
        """The exterior derivative of ``n0(c)`` on two left invariant fields."""
        xi = np.asarray(xi, dtype=float)
        eta = np.asarray(eta, dtype=float)
        bracket = np.array(
            [float(x) for x in self.sd.bracket(xi, eta)], dtype=float
        )
        return (
            self._derivative(n0, g, xi, eta, step)
            - self._derivative(n0, g, eta, xi, step)
            - self.form_value(n0, g, bracket)
        )

    def __repr__(self):
        return "<ConnectionSpec dim p={0} invariant={1}>".format(
            self.p_alg.dim, self.invariant
        )


def connection_transfer(spec, settings=None):
    """Properties of the connection transferred from ``p`` to the product.

    A complement that is not invariant is reported through the
    ``connection.complement-invariant`` check; the equivariance check is then
    expected to fail.

    """
    settings = settings or Settings()
    sd = spec.sd
    rng = settings.rng("connection.transfer")
    citations = ["connection on G -> G/D transferred from K -> K/P"]
    k_full = Subspace.full(sd.nk)
    reproduction = []
    equivariance = []
    pullback = []
    horizontal = []
    for _ in range(settings.samples):
        g = sample_elements(sd, rng, 1)[0]
        zeta = random_vector(rng, spec.d_alg)
        value = spec.connection_vector(g, *spec.left_invariant(g, zeta))
        reproduction.append(float(np.max(np.abs(value - zeta))))

        h = GroupElement.exp(sd, random_vector(rng, spec.d_alg, 0.5))
        Y = random_vector(rng, k_full)  # noqa: N806
        w = rng.normal(size=sd.nv)
        lhs = spec.connection_vector(g * h, *spec.right_translate(g, h, Y, w))
        rhs = spec.adjoint_inverse(h, spec.connection_vector(g, Y, w))
        equivariance.append(float(np.max(np.abs(lhs - rhs))))

        k_only = g.k_part()
        value = spec.connection_vector(k_only, Y, np.zeros(sd.nv))
        expected = np.concatenate([spec.project(Y), np.zeros(sd.nv)])
        pullback.append(float(np.max(np.abs(value - expected))))

        lift = spec.horizontal_lift(g, random_vector(rng, k_full))
        horizontal.append(float(np.max(np.abs(spec.connection_vector(g, *lift)))))
    logger.debug2("connection transfer sampled %d times", settings.samples)

    checks = CheckList()
    checks.add(
        Check("connection.complement-invariant", verdict(spec.invariant), citations)
    )
    for name, residuals in (
        ("connection.reproduction", reproduction),
        ("connection.equivariance", equivariance),
        ("connection.pullback", pullback),
        ("connection.horizontal", horizontal),
    ):
        checks.add(
            Check(
                name,
                sampled_verdict(settings, residuals),
                citations,
                residuals={"max": max_residual(residuals)},
                caveats=[CAVEAT_SAMPLED],
            )
        )
    return checks


def is_character(sd, n0, subalgebra):
    """``n0([x, y]) = 0`` for ``x``, ``y`` in the subalgebra."""
    n0 = n0 if isinstance(n0, CovectorPoint) else CovectorPoint.from_coords(sd, n0)
    return all(
        n0(sd.bracket(x, y)) == 0
        for x, y in itertools.combinations(subalgebra.basis, 2)
    )


def beta_basic_check(spec, n0, settings=None):
    """The exterior derivative of ``n0(c)`` vanishes when one argument lies in D.

    Holds when ``n0`` is a character of the Lie algebra of D and the
    complement is invariant; otherwise the check reads "not-evaluated".

    """
    settings = settings or Settings()
    sd = spec.sd
    citations = ["modification 2-form of the induced structure"]
    n0 = n0 if isinstance(n0, CovectorPoint) else CovectorPoint.from_coords(sd, n0)
    if not (spec.invariant and is_character(sd, n0, spec.d_alg)):
        return Check(
            "connection.beta-basic",
            NOT_EVALUATED,
            citations,
            detail="n0 is not a character of d or the complement is not invariant",
        )
    local = settings.replace(tol=max(settings.tol, 1e-7))
    rng = settings.rng("connection.beta")
    residuals = []
    count = min(settings.samples, 10)
    vertical = _basis_array(spec.d_alg)
    every = np.eye(sd.dim)
    for _ in range(count):
        g = sample_elements(sd, rng, 1)[0]
        worst = 0.0
        for xi in vertical:
            for eta in every:
                value = spec.beta_form(n0.coords, g, xi, eta, settings.fd_step)
                worst = max(worst, abs(value))
        residuals.append(worst)
    return Check(
        "connection.beta-basic",
        sampled_verdict(local, residuals),
        citations,
        residuals={"max": max_residual(residuals)},
        caveats=[CAVEAT_SAMPLED],
        values={"tolerance": local.tol, "samples": count},
    )


def _killing_complement(k, whole, part):
    """Killing orthogonal of ``part`` inside ``whole``, if it is a complement."""
    if part.dim == 0:
        return whole
    killing = k.killing_form()
    rows = [killing.apply(x) for x in part.basis]
    orthogonal = intersect(Matrix(rows, ncols=k.dim).kernel(), whole)
    if orthogonal.dim + part.dim == whole.dim and intersect(orthogonal, part).dim == 0:
        return orthogonal
    return None


def _coordinate_complement(whole, part):
    return Subspace(whole.ambient_dim, quotient_basis(whole, part))


def _complement_candidates(k, whole, part, given):
    candidates = []
    if given is not None:
        candidates.append(("given", given))
    killing = _killing_complement(k, whole, part)
    if killing is not None:
        candidates.append(("killing", killing))
    candidates.append(("coordinate", _coordinate_complement(whole, part)))
    return candidates


def _brackets_in(k, a, b, target):
    return all(target.contains(k.bracket(x, y)) for x in a.basis for y in b.basis)


class SymmetricSpaceResult(object):
    """Complements found by :func:`symmetric_space_check`

    Attributes:
        m (Subspace): Complement of ``p`` in the little algebra
        n_sub (Subspace): Complement of the little algebra in K
        m_source, n_source (str): Where the complement came from, one of
            "given", "killing" or "coordinate"
        m_holds, n_holds (bool): The bracket relations for each complement

    """

    def __init__(self, m, m_source, m_holds, n_sub, n_source, n_holds):
        self.m = m
        self.m_source = m_source
        self.m_holds = m_holds
        self.n_sub = n_sub
        self.n_source = n_source
        self.n_holds = n_holds

    @property
    def holds(self):
        return self.m_holds and self.n_holds

    def check(self):
        return Check(
            "induction.symmetric-spaces",
            verdict(self.holds),
            ["canonical connection from symmetric space decompositions"],
            values={
                "m_dim": self.m.dim,
                "m_source": self.m_source,
                "m_holds": self.m_holds,
                "n_dim": self.n_sub.dim,
                "n_source": self.n_source,
                "n_holds": self.n_holds,
            },
        )


def symmetric_space_check(sd, n, p_alg, m=None, n_sub=None):
    """Look for ``kp = p + m`` and ``k = kp + n_sub`` with symmetric space relations.

    The relations are ``[p, m] in m``, ``[m, m] in p``, ``[kp, n_sub] in n_sub``
    and ``[n_sub, n_sub] in kp``. Given complements are tried first, then
    Killing orthogonal complements, then coordinate complements.

    Raises:
        PreconditionFailed: ``p_alg`` is not inside the little algebra.

    """
    k = sd.k
    point = OrbitPoint(sd, n)
    kp = point.kp
    if not p_alg.is_subspace_of(kp):
        raise PreconditionFailed(
            "p is not contained in the little algebra", violations=["p"]
        )
    full = Subspace.full(sd.nk)

    def search(whole, part, given, relations):
        first = None
        for source, candidate in _complement_candidates(k, whole, part, given):
            ok = relations(candidate)
            if first is None:
                first = (candidate, source, ok)
            if ok:
                return candidate, source, True
        return first

    m_found = search(
        kp,
        p_alg,
        m,
        lambda c: _brackets_in(k, p_alg, c, c) and _brackets_in(k, c, c, p_alg),
    )
    n_found = search(
        full,
        kp,
        n_sub,
        lambda c: _brackets_in(k, kp, c, c) and _brackets_in(k, c, c, kp),
    )
    result = SymmetricSpaceResult(*(m_found + n_found))
    logger.debug(
        "symmetric spaces: m from %s (%s), n from %s (%s)",
        result.m_source,
        result.m_holds,
        result.n_source,
        result.n_holds,
    )
    return result
