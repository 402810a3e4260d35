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


"""Polarizations and Pukanszky's condition

Every check here runs on a *target*, which is either a
:class:`lieorbit.semidirect.SemidirectProduct` with a
:class:`lieorbit.semidirect.CovectorPoint`, or a plain
:class:`lieorbit.lie_core.LieAlgebra` with a
:class:`lieorbit.lie_core.Covector`. The second form is how the little
algebra side of a semidirect product is checked.

A candidate ``h`` is a :class:`lieorbit.exactla.ComplexSubspace` of the
complexified algebra; a real :class:`lieorbit.exactla.Subspace` is accepted
and complexified. Polarization checks need exact points.

"""

import itertools

import numpy as np

from lieorbit import getlogger
from lieorbit.base import (
    CAVEAT_CONNECTED,
    CAVEAT_SAMPLED,
    FAILS,
    HOLDS,
    NOT_EVALUATED,
    Check,
    CheckList,
    Settings,
    distance_to_subspace,
    max_residual,
    sampled_verdict,
    verdict,
)
from lieorbit.errors import (
    AmbientMismatch,
    NotASubspace,
    NotSemidirectForm,
    PreconditionFailed,
)
from lieorbit.exactla import (
    ComplexSubspace,
    Matrix,
    Subspace,
    annihilator,
    embed,
    span_sum,
)
from lieorbit.lie_core import Covector
from lieorbit.orbit import OrbitPoint, little_group_samples
from lieorbit.semidirect import (
    CovectorPoint,
    SemidirectProduct,
    expm,
    random_vector,
)

logger = getlogger(__name__)

AXIOMS = (
    "is_subalgebra",
    "contains_isotropy",
    "dimension_ok",
    "isotropic",
    "invariant",
    "sum_subalgebra",
)


def _frame(target, n):
    """The algebra and the covector a check works with."""
    if isinstance(target, SemidirectProduct):
        if not isinstance(n, CovectorPoint):
            n = CovectorPoint.from_coords(target, n)
        covector = n.as_covector()
        algebra = target.g
    else:
        covector = n if isinstance(n, Covector) else Covector(n)
        algebra = target
    if covector.dim != algebra.dim:
        raise AmbientMismatch(
            "Covector of dimension {0} for an algebra of dimension {1}".format(
                covector.dim, algebra.dim
            )
        )
    if any(isinstance(x, float) for x in covector.coords):
        raise PreconditionFailed(
            "Polarizations are checked at exact points only", violations=["numeric"]
        )
    return algebra, covector


def _complexify(h, dim):
    if not isinstance(h, ComplexSubspace):
        h = ComplexSubspace.from_real(h)
    if h.ambient_dim != dim:
        raise AmbientMismatch(
            "Candidate lives in dimension {0}, the algebra has dimension {1}".format(
                h.ambient_dim, dim
            )
        )
    return h


def _perp(algebra, covector, subspace):
    """``{eta : c([xi, eta]) = 0 for all xi in subspace}``."""
    if subspace.dim == 0:
        return Subspace.full(algebra.dim)
    form = algebra.covector_form(covector).transpose()
    return Matrix(
        [form.apply(xi) for xi in subspace.basis], ncols=algebra.dim
    ).kernel()


def _coadjoint_sample(algebra, rng, subspace, factors=2):
    """Float matrix of ``Coad(exp x_1 ... exp x_k)`` for ``x_i`` in subspace."""
    result = np.eye(algebra.dim)
    for _ in range(factors):
        x = random_vector(rng, subspace, 0.5)
        result = result @ expm(algebra.coad(x).to_numpy())
    return result


def _adjoint_sample(algebra, rng, subspace, factors=2):
    result = np.eye(algebra.dim)
    for _ in range(factors):
        x = random_vector(rng, subspace, 0.5)
        result = result @ expm(algebra.ad(x).to_numpy())
    return result


def _complex_array(subspace):
    return np.array(
        [[complex(x) for x in row] for row in subspace.basis], dtype=complex
    ).reshape(subspace.dim, subspace.ambient_dim)


class PolarizationCandidate(object):
    """A complex subspace together with its derived real subalgebras

    Args:
        target: :class:`SemidirectProduct` or :class:`LieAlgebra`
        n: The point, a :class:`CovectorPoint` or a :class:`Covector`
        h: :class:`ComplexSubspace` of the complexified algebra

    Attributes:
        d (Subspace): ``h`` intersected with the real algebra
        e (Subspace): ``h + conj(h)`` intersected with the real algebra
        a (ComplexSubspace): For a semidirect product with ``V`` inside
            ``h``, the part of ``h`` over the Lie algebra of K; None otherwise
        p_alg (Subspace): ``a`` intersected with the Lie algebra of K
        q_alg (Subspace): ``a + conj(a)`` intersected with the Lie algebra of K

    """

    def __init__(self, target, n, h):
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        self.target = target
        self.n = n
        self.algebra, self.covector = _frame(target, n)
        self.h = _complexify(h, self.algebra.dim)
        self.d = self.h.real_part()
        self.e = self.h.realification()
        self.a = None
        self.p_alg = None
        self.q_alg = None
        if isinstance(target, SemidirectProduct):
            try:
                self.a = semidirect_form(target, self.h)
            except NotSemidirectForm:
                self._logger.debug("candidate is not of the form a + V")
            else:
                self.p_alg = self.a.real_part()
                self.q_alg = self.a.realification()

    @property
    def is_semidirect(self):
        return self.a is not None

    def conjugate(self):
        return PolarizationCandidate(self.target, self.n, self.h.conjugate())

    def __repr__(self):
        return "<PolarizationCandidate dim={0} d={1} e={2}>".format(
            self.h.dim, self.d.dim, self.e.dim
        )


class PolarizationVerdict(object):
    """Outcome of :func:`check_polarization`

    The axiom attributes are booleans; ``invariant_sampled`` is a verdict
    string. ``checks`` holds the same facts as :class:`lieorbit.base.Check`
    records, plus the facts about ``d`` and ``e``.

    """

    def __init__(self, candidate):
        self.candidate = candidate
        self.is_subalgebra = False
        self.contains_isotropy = False
        self.dimension_ok = False
        self.isotropic = False
        self.invariant = False
        self.invariant_sampled = NOT_EVALUATED
        self.sum_subalgebra = False
        self.isotropy = None
        self.checks = CheckList()

    @property
    def is_polarization(self):
        return (
            all(getattr(self, name) for name in AXIOMS)
            and self.invariant_sampled != FAILS
        )

    def failed_axioms(self):
        return [name for name in AXIOMS if not getattr(self, name)]

    def to_dict(self):
        result = dict((name, getattr(self, name)) for name in AXIOMS)
        result["invariant_sampled"] = self.invariant_sampled
        result["is_polarization"] = self.is_polarization
        return result

    def __repr__(self):
        return "<PolarizationVerdict {0}>".format(
            "polarization" if self.is_polarization else self.failed_axioms()
        )


def check_polarization(target, n, h, settings=None):
    """Decide the polarization axioms for ``h`` at ``n``.

    Args:
        target: :class:`SemidirectProduct` or :class:`LieAlgebra`
        n: The point
        h: Candidate subspace of the complexified algebra
        settings (Settings): Sampling for the group-level invariance

    Returns:
        PolarizationVerdict: Every axiom decided exactly; the sampled
        invariance under the identity component of the isotropy group is
        reported separately.

    Raises:
        AmbientMismatch: ``h`` does not live in the complexified algebra.
        PreconditionFailed: ``n`` has float coordinates.

    """
    settings = settings or Settings()
    candidate = (
        h
        if isinstance(h, PolarizationCandidate)
        else PolarizationCandidate(target, n, h)
    )
    algebra, covector, h = candidate.algebra, candidate.covector, candidate.h
    result = PolarizationVerdict(candidate)
    isotropy = algebra.stabilizer(covector)
    result.isotropy = isotropy

    result.is_subalgebra = algebra.is_subalgebra(h)
    result.contains_isotropy = ComplexSubspace.from_real(isotropy).is_subspace_of(h)
    result.dimension_ok = 2 * h.dim == algebra.dim + isotropy.dim
    result.isotropic = all(
        covector(algebra.bracket(x, y)) == 0
        for x, y in itertools.combinations(h.basis, 2)
    )
    result.invariant = all(
        h.contains(algebra.bracket(x, y)) for x in isotropy.basis for y in h.basis
    )
    result.sum_subalgebra = algebra.is_subalgebra(span_sum(h, h.conjugate()))

    residuals = []
    if settings.sampling and h.dim:
        rng = settings.rng("polarization.invariant")
        basis = _complex_array(h)
        for _ in range(settings.samples):
            moved = _adjoint_sample(algebra, rng, isotropy) @ basis.T
            residuals.append(
                max(distance_to_subspace(column, h) for column in moved.T)
            )
    result.invariant_sampled = sampled_verdict(settings, residuals)

    citations = ["definition of a polarization at a point"]
    checks = result.checks
    checks.add(
        Check("polarization.subalgebra", verdict(result.is_subalgebra), citations)
    )
    checks.add(
        Check(
            "polarization.contains-isotropy",
            verdict(result.contains_isotropy),
            citations,
            values={"isotropy_dim": isotropy.dim},
        )
    )
    checks.add(
        Check(
            "polarization.dimension",
            verdict(result.dimension_ok),
            ["dim h = (dim g + dim g_n) / 2"],
            values={"dim_h": h.dim, "dim_g": algebra.dim, "isotropy_dim": isotropy.dim},
        )
    )
    checks.add(Check("polarization.isotropic", verdict(result.isotropic), citations))
    checks.add(
        Check(
            "polarization.invariant",
            verdict(result.invariant),
            citations,
            caveats=[CAVEAT_CONNECTED],
        )
    )
    checks.add(
        Check(
            "polarization.invariant-sampled",
            result.invariant_sampled,
            citations,
            residuals={"max": max_residual(residuals)},
            caveats=[CAVEAT_SAMPLED, CAVEAT_CONNECTED],
        )
    )
    checks.add(
        Check("polarization.sum-subalgebra", verdict(result.sum_subalgebra), citations)
    )

    d, e = candidate.d, candidate.e
    lemma = ["real subalgebras of a polarization"]
    checks.add(Check("polarization.d-in-e", verdict(d.is_subspace_of(e)), lemma))
    if result.is_polarization:
        checks.add(
            Check(
                "polarization.d-e-subalgebras",
                verdict(algebra.is_subalgebra(d) and algebra.is_subalgebra(e)),
                lemma,
                values={"d_dim": d.dim, "e_dim": e.dim},
            )
        )
        checks.add(
            Check(
                "polarization.d-perp-is-e",
                verdict(_perp(algebra, covector, d) == e),
                lemma,
            )
        )
    else:
        for name in ("polarization.d-e-subalgebras", "polarization.d-perp-is-e"):
            checks.add(
                Check(name, NOT_EVALUATED, lemma, detail="h is not a polarization")
            )
    logger.debug("polarization check at %r: %r", n, result)
    return result


def semidirect_form(sd, h):
    """``a`` with ``h = a + V``, as a subspace of the complexified K algebra.

    Raises:
        NotSemidirectForm: ``V`` is not contained in ``h``.

    """
    h = _complexify(h, sd.dim)
    v = ComplexSubspace.from_real(sd.v_subspace)
    if not v.is_subspace_of(h):
        missing = [row for row in v.basis if not h.contains(row)]
        raise NotSemidirectForm(
            "Candidate does not contain the complexified vector space",
            violations=missing,
        )
    return ComplexSubspace(sd.nk, [row[: sd.nk] for row in h.basis])


def rebuild(sd, a):
    """``a + V`` in the complexified product."""
    if not isinstance(a, ComplexSubspace):
        a = ComplexSubspace.from_real(a)
    return span_sum(embed(a, sd.dim, 0), ComplexSubspace.from_real(sd.v_subspace))


def reduced_candidate(point, a):
    """``a`` in the canonical basis of the little algebra.

    Returns:
        ComplexSubspace: ``a`` as a subspace of the complexified little
        algebra, or None when ``a`` is not inside it.

    """
    try:
        rows = [point.kp.coordinates(row) for row in a.basis]
    except NotASubspace:
        return None
    return ComplexSubspace(point.kp.dim, rows)


class PukanszkyCertificate(object):
    """Evidence for Pukanszky's condition ``D.n = n + e annihilator``

    Attributes:
        tangent (Subspace): ``{xi.n : xi in d}``
        e_annihilator (Subspace): The annihilator of ``e``
        infinitesimal (bool): The two subspaces agree, exact
        sampled (str): Verdict over sampled elements of the identity
            component of D
        residual (float): Largest ``|x(b)|`` over samples ``x = d.n - n``
            and basis vectors ``b`` of ``e``
        affine_rank (int): Rank of the sampled differences ``d.n - n``

    """

    def __init__(self, tangent, e_annihilator, sampled, residual, affine_rank):
        self.tangent = tangent
        self.e_annihilator = e_annihilator
        self.infinitesimal = tangent == e_annihilator
        self.sampled = sampled
        self.residual = residual
        self.affine_rank = affine_rank

    @property
    def verdict(self):
        if not self.infinitesimal or self.sampled == FAILS:
            return FAILS
        return HOLDS

    @property
    def holds(self):
        return self.verdict == HOLDS

    def checks(self):
        citations = ["equivalent forms of Pukanszky's condition"]
        return [
            Check(
                "pukanszky.infinitesimal",
                verdict(self.infinitesimal),
                citations,
                values={
                    "tangent_dim": self.tangent.dim,
                    "e_annihilator_dim": self.e_annihilator.dim,
                },
            ),
            Check(
                "pukanszky.sampled",
                self.sampled,
                citations,
                residuals={"max": self.residual},
                caveats=[CAVEAT_SAMPLED, CAVEAT_CONNECTED],
                values={"affine_rank": self.affine_rank},
            ),
            Check(
                "pukanszky.orbit-closed",
                NOT_EVALUATED,
                citations,
                detail="closedness of D.n is topological",
            ),
        ]

    def __repr__(self):
        return "<PukanszkyCertificate {0}>".format(self.verdict)


def pukanszky_check(target, n, h, settings=None, verdict_result=None):
    """Infinitesimal and sampled certificates for Pukanszky's condition.

    Raises:
        PreconditionFailed: ``h`` is not a polarization at ``n``;
            ``violations`` names the failed axioms.

    """
    settings = settings or Settings()
    result = verdict_result or check_polarization(target, n, h, settings)
    if not result.is_polarization:
        raise PreconditionFailed(
            "Pukanszky's condition needs a polarization",
            violations=result.failed_axioms(),
        )
    candidate = result.candidate
    algebra, covector = candidate.algebra, candidate.covector
    d, e = candidate.d, candidate.e
    tangent = Subspace(
        algebra.dim, [algebra.coad(x).apply(covector.coords) for x in d.basis]
    )
    e_annihilator = annihilator(e)

    residuals = []
    differences = []
    if settings.sampling:
        rng = settings.rng("pukanszky.sampled")
        base = np.array([float(x) for x in covector.coords])
        e_basis = np.array([[float(x) for x in row] for row in e.basis]).reshape(
            e.dim, algebra.dim
        )
        for _ in range(settings.samples):
            moved = _coadjoint_sample(algebra, rng, d) @ base - base
            differences.append(moved)
            residuals.append(float(np.max(np.abs(e_basis @ moved), initial=0.0)))
    affine_rank = (
        int(np.linalg.matrix_rank(np.array(differences), tol=max(settings.tol, 1e-8)))
        if differences
        else 0
    )
    sampled = sampled_verdict(
        settings, residuals, affine_rank == min(e_annihilator.dim, len(differences))
    )
    certificate = PukanszkyCertificate(
        tangent, e_annihilator, sampled, max_residual(residuals), affine_rank
    )
    logger.debug("Pukanszky at %r: %r", n, certificate)
    return certificate


def trivial_polarization(sd, n):
    """The real polarization ``kp + V`` complexified.

    Raises:
        PreconditionFailed: ``f`` does not vanish on brackets of the little
            algebra; ``violations`` lists the offending pairs of basis names.

    """
    point = OrbitPoint(sd, n)
    names = point.kp_algebra.basis_names
    form = point.kp_algebra.covector_form(point.phi)
    violations = [
        (names[i], names[j])
        for i, j in itertools.combinations(range(point.kp.dim), 2)
        if form[i, j] != 0
    ]
    if violations:
        raise PreconditionFailed(
            "f does not vanish on [kp, kp]: {0}".format(
                ", ".join("[{0},{1}]".format(a, b) for a, b in violations)
            ),
            violations=violations,
        )
    return ComplexSubspace.from_real(sd.with_v(point.kp))


def _restrict_rows(rows, subspace):
    """Restrict covectors given by coordinate rows to a subspace."""
    return [Covector(row).restrict(subspace).coords for row in rows]


def reduction_theorem_check(sd, n, h, settings=None):
    """Compare polarization and Pukanszky verdicts on both sides of the reduction.

    Returns:
        CheckList: Agreement of the polarization verdicts, of the Pukanszky
        verdicts, of the dimension equation, and the intermediate facts

    Raises:
        NotSemidirectForm: ``h`` does not contain the vector space.

    """
    settings = settings or Settings()
    a = semidirect_form(sd, h)
    point = OrbitPoint(sd, n)
    checks = CheckList()
    citations = ["reduction of polarizations to the little algebra"]

    full = check_polarization(sd, n, h, settings)
    local = reduced_candidate(point, a)
    reduced = (
        check_polarization(point.kp_algebra, point.phi, local, settings)
        if local is not None
        else None
    )
    reduced_ok = reduced is not None and reduced.is_polarization
    checks.add(
        Check(
            "reduction.polarization-agrees",
            verdict(full.is_polarization == reduced_ok),
            citations,
            values={"full": full.is_polarization, "reduced": reduced_ok},
        )
    )
    if not (full.is_polarization and reduced_ok):
        return checks

    checks.add(
        Check(
            "reduction.dimension-equation",
            verdict(2 * a.dim == point.kp.dim + point.kp_phi.dim),
            ["dim a = (dim kp + dim (kp)_phi) / 2"],
            values={"dim_a": a.dim},
        )
    )
    full_cert = pukanszky_check(sd, n, h, settings, verdict_result=full)
    reduced_cert = pukanszky_check(
        point.kp_algebra, point.phi, local, settings, verdict_result=reduced
    )
    checks.add(
        Check(
            "reduction.pukanszky-agrees",
            verdict(full_cert.verdict == reduced_cert.verdict),
            citations,
            residuals={"full": full_cert.residual, "reduced": reduced_cert.residual},
            values={
                "full": full_cert.verdict,
                "reduced": reduced_cert.verdict,
                "reduced_affine_rank": reduced_cert.affine_rank,
                "reduced_e_annihilator_dim": reduced_cert.e_annihilator.dim,
            },
        )
    )

    q_alg = a.realification()
    q_annihilator = annihilator(q_alg)
    checks.add(
        Check(
            "reduction.kp-annihilator-in-q-annihilator",
            verdict(point.star_image.is_subspace_of(q_annihilator)),
            citations,
        )
    )
    restricted = Subspace(point.kp.dim, _restrict_rows(q_annihilator.basis, point.kp))
    residuals = []
    mismatches = 0
    tol = max(settings.tol, 1e-8)
    f = np.array([float(x) for x in n.f])
    kp_basis = np.array([[float(x) for x in row] for row in point.kp.basis]).reshape(
        point.kp.dim, sd.nk
    )
    for element in little_group_samples(sd, point, settings, "reduction.sampled"):
        moved = element.dual_k(n.f.coords) - f
        full_side = distance_to_subspace(moved, q_annihilator)
        reduced_side = distance_to_subspace(kp_basis @ moved, restricted)
        if (full_side < tol) != (reduced_side < tol):
            mismatches += 1
            residuals.append(max(full_side, reduced_side))
        else:
            residuals.append(0.0)
    checks.add(
        Check(
            "reduction.sampled-equivalence",
            sampled_verdict(settings, residuals, mismatches == 0),
            citations,
            residuals={"max": max_residual(residuals)},
            caveats=[CAVEAT_SAMPLED, CAVEAT_CONNECTED],
            values={"mismatches": mismatches},
        )
    )
    return checks


def pukanszky_bundle_check(sd, n, h, settings=None):
    """Dimension bookkeeping of the symplectic subbundle of Pukanszky's condition.

    Raises:
        PreconditionFailed: Pukanszky's condition does not hold for ``h``,
            or ``h`` is not of the form ``a + V``.

    """
    settings = settings or Settings()
    result = check_polarization(sd, n, h, settings)
    certificate = pukanszky_check(sd, n, h, settings, verdict_result=result)
    if not certificate.holds:
        raise PreconditionFailed(
            "Pukanszky's condition does not hold", violations=["pukanszky"]
        )
    candidate = result.candidate
    if not candidate.is_semidirect:
        raise NotSemidirectForm("Candidate is not of the form a + V")
    point = OrbitPoint(sd, n)
    local = reduced_candidate(point, candidate.a)
    reduced = PolarizationCandidate(point.kp_algebra, point.phi, local)
    checks = CheckList()
    citations = ["symplectic subbundle attached to Pukanszky's condition"]

    total = (sd.dim - candidate.d.dim) + certificate.e_annihilator.dim
    checks.add(
        Check(
            "bundle.total-dimension",
            verdict(total == point.orbit_dim),
            citations,
            values={"bundle_dim": total, "orbit_dim": point.orbit_dim},
        )
    )
    reduced_total = (point.kp.dim - reduced.d.dim) + annihilator(reduced.e).dim
    checks.add(
        Check(
            "bundle.reduced-dimension",
            verdict(reduced_total == point.little_orbit_dim),
            citations,
            values={
                "bundle_dim": reduced_total,
                "little_orbit_dim": point.little_orbit_dim,
            },
        )
    )
    # n([., .]) on e has radical d, so its rank is the fibre dimension
    e_basis = candidate.e.basis
    fibre_rank = (
        Matrix(
            [
                [candidate.covector(candidate.algebra.bracket(x, y)) for y in e_basis]
                for x in e_basis
            ]
        ).rank()
        if e_basis
        else 0
    )
    fibre_dim = candidate.e.dim - candidate.d.dim
    checks.add(
        Check(
            "bundle.fibre-split",
            verdict(
                fibre_rank == fibre_dim
                and 2 * (sd.dim - candidate.e.dim) + fibre_rank == point.orbit_dim
            ),
            citations,
            values={
                "base_dim": 2 * (sd.dim - candidate.e.dim),
                "fibre_dim": fibre_dim,
                "fibre_rank": fibre_rank,
            },
        )
    )

    q_annihilator = annihilator(candidate.q_alg)
    projected = Subspace(point.kp.dim, _restrict_rows(q_annihilator.basis, point.kp))
    checks.add(
        Check(
            "bundle.fibre-projection",
            verdict(projected == annihilator(reduced.e)),
            citations,
        )
    )

    residuals = []
    kp_basis = np.array([[float(x) for x in row] for row in point.kp.basis]).reshape(
        point.kp.dim, sd.nk
    )
    samples = little_group_samples(sd, point, settings, "bundle.projection")
    for element in samples if point.kp.dim else []:
        # Ad(k) on kp in the canonical basis of kp
        moved_basis = element.k_ad @ kp_basis.T
        local_ad = np.linalg.lstsq(kp_basis.T, moved_basis, rcond=None)[0]
        stays = float(np.max(np.abs(kp_basis.T @ local_ad - moved_basis), initial=0.0))
        local_dual = np.linalg.inv(local_ad).T
        worst = stays
        for row in q_annihilator.basis:
            x = np.array([float(v) for v in row])
            lhs = kp_basis @ element.dual_k(row)
            rhs = local_dual @ (kp_basis @ x)
            worst = max(worst, float(np.max(np.abs(lhs - rhs), initial=0.0)))
        residuals.append(worst)
    checks.add(
        Check(
            "bundle.fibre-projection-sampled",
            sampled_verdict(settings, residuals),
            citations,
            residuals={"max": max_residual(residuals)},
            caveats=[CAVEAT_SAMPLED, CAVEAT_CONNECTED],
        )
    )
    return checks
