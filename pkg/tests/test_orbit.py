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

import unittest
from fractions import Fraction

import numpy as np
import pytest

import lieorbit.errors as Err
import lieorbit.orbit as Orbit
from lieorbit.base import HOLDS, NOT_EVALUATED, Settings
from lieorbit.catalog import (
    NAMES,
    build,
    cayley_rotation,
    euclidean_product,
    random_rational_point,
)
from lieorbit.exactla import Subspace, annihilator
from lieorbit.semidirect import GroupElement, coadjoint


def unit(i, dim=6):
    return [1 if j == i else 0 for j in range(dim)]


@pytest.mark.parametrize(
    "name, point, orbit_dim, base_dim, little_dim",
    [
        ("se3", "axial", 4, 2, 0),
        ("galilei", "massless_spin", 6, 3, 0),
        ("galilei", "massless_boost", 8, 3, 2),
        ("bargmann", "massive_spin", 8, 3, 2),
    ],
)
def test_fixture_dimensions(name, point, orbit_dim, base_dim, little_dim):
    fixture = build(name)

    ret_val = Orbit.OrbitPoint(fixture.sd, fixture.point(point))

    assert ret_val.orbit_dim == orbit_dim
    assert ret_val.base_orbit_dim == base_dim
    assert ret_val.little_orbit_dim == little_dim
    assert ret_val.orbit_dim == 2 * ret_val.base_orbit_dim + ret_val.little_orbit_dim


@pytest.mark.parametrize("name", NAMES)
def test_exact_laws_at_seeded_points(name):
    fixture = build(name)
    rng = Settings(seed=5).rng("tests.points")

    for _ in range(100):
        n = random_rational_point(fixture, rng)
        point = Orbit.OrbitPoint(fixture.sd, n)

        assert annihilator(point.tau.kernel) == point.star_image, n
        assert point.isotropy.dim == point.star_kernel.dim + point.kp_phi.dim, n
        assert point.orbit_dim == point.little_orbit_dim + 2 * point.base_orbit_dim


@pytest.mark.parametrize(
    "name, point",
    [
        ("se3", "axial"),
        ("galilei", "massless_spin"),
        ("galilei", "massless_boost"),
        ("bargmann", "massive_spin"),
    ],
)
def test_splitting_at_fixture_points(name, point):
    fixture = build(name)

    check = Orbit.splitting_theorem_check(
        fixture.sd, fixture.point(point), Settings(seed=5, samples=100)
    )

    assert check.verdict == HOLDS
    assert check.values["samples"] == 100
    assert check.residuals["max"] < 1e-9


@pytest.mark.parametrize(
    "name, point",
    [
        ("se3", "axial"),
        ("galilei", "massless_spin"),
        ("galilei", "massless_boost"),
        ("bargmann", "massive_spin"),
    ],
)
def test_analyze_fixture_points(name, point):
    fixture = build(name, s=2, k=3)

    report = Orbit.analyze_point(
        fixture.sd, fixture.point(point), Settings(samples=0)
    )

    assert report.checks.holds
    assert [] == report.checks.failures()


class TestOrbitPoint(unittest.TestCase):
    def setUp(self):
        self.galilei = build("galilei")

    def test_massless_boost_algebras(self):
        point = Orbit.OrbitPoint(
            self.galilei.sd, self.galilei.point("massless_boost")
        )

        self.assertEqual(Subspace(6, [unit(2), unit(3), unit(4)]), point.kp)
        self.assertEqual(Subspace(6, [unit(0), unit(3)]), point.kf)
        self.assertFalse(point.kp_in_kf)
        self.assertEqual(2, point.isotropy.dim)

    def test_massless_spin_algebras(self):
        point = Orbit.OrbitPoint(self.galilei.sd, self.galilei.point("massless_spin"))

        self.assertEqual(Subspace(6, [unit(2), unit(3), unit(4)]), point.kp)
        self.assertTrue(point.kp_in_kf)
        self.assertTrue(point.f_closed_kp)

    def test_bargmann_little_algebra_is_so3(self):
        fixture = build("bargmann")

        point = Orbit.OrbitPoint(fixture.sd, fixture.point("massive_spin"))

        self.assertEqual(Subspace(6, [unit(0), unit(1), unit(2)]), point.kp)
        self.assertEqual(1, point.kp_phi.dim)
        self.assertFalse(point.f_closed_kp)

    def test_numeric_point(self):
        sd = euclidean_product()
        n = sd.point([0, 0, 1.5], [0, 0, 0.5])

        point = Orbit.OrbitPoint(sd, n, tol=Orbit.point_tolerance(n))

        self.assertTrue(n.is_numeric)
        self.assertEqual(4, point.orbit_dim)
        self.assertEqual(1, point.kp.dim)

    def test_point_tolerance(self):
        sd = euclidean_product()
        settings = Settings(tol=1e-6)

        self.assertIsNone(Orbit.point_tolerance(sd.point([0, 0, 1], [0, 0, 1])))
        self.assertEqual(
            1e-6, Orbit.point_tolerance(sd.point([0, 0, 1.0], [0, 0, 1]), settings)
        )


class TestCharacteristicDistribution(unittest.TestCase):
    def test_se3_is_trivial(self):
        fixture = build("se3")

        ret_val = Orbit.characteristic_distribution(fixture.sd, fixture.point("axial"))

        self.assertEqual(0, ret_val.dim)

    def test_strict_mode_refuses_bargmann(self):
        fixture = build("bargmann")

        with self.assertRaises(Err.PreconditionFailed) as cm:
            Orbit.characteristic_distribution(
                fixture.sd, fixture.point("massive_spin")
            )

        self.assertTrue(cm.exception.violations)

    def test_non_strict_bargmann(self):
        fixture = build("bargmann")

        ret_val = Orbit.characteristic_distribution(
            fixture.sd, fixture.point("massive_spin"), settings=Settings(strict=False)
        )

        self.assertEqual(3, ret_val.dim)

    def test_non_strict_galilei_boost(self):
        fixture = build("galilei")

        ret_val = Orbit.characteristic_distribution(
            fixture.sd, fixture.point("massless_boost"), settings=Settings(strict=False)
        )

        self.assertEqual(1, ret_val.dim)


class TestTangentSpaces(unittest.TestCase):
    def setUp(self):
        self.sd = euclidean_product()
        self.n = self.sd.point([0, 0, 1], [0, 0, 1])

    def test_dimensions(self):
        tangent = Orbit.tangent_L_N(self.sd, self.n)

        self.assertEqual(2, tangent.tangent_n.dim)
        self.assertEqual(2, tangent.tangent_n_perp.dim)
        self.assertTrue(tangent.n_lagrangian)
        self.assertEqual([], tangent.caveats)

    def test_point_along_n(self):
        o = self.sd.point([1, 0, 1], [0, 0, 1])

        tangent = Orbit.tangent_L_N(self.sd, self.n, o)

        self.assertEqual([], tangent.caveats)
        self.assertIs(o, tangent.point)

    def test_point_off_orbit(self):
        o = self.sd.point([0, 0, 1], [0, 0, 0])

        self.assertRaises(Err.NotOnOrbit, Orbit.tangent_L_N, self.sd, self.n, o)

    def test_rotated_point_is_reached(self):
        o = self.sd.point([0, 1, 0], [0, 1, 0])

        tangent = Orbit.tangent_L_N(self.sd, self.n, o)

        self.assertEqual(["sampled-only"], tangent.caveats)
        self.assertLess(tangent.reach_residual, 1e-9)
        self.assertEqual(2, tangent.tangent_n.dim)

    def test_same_isotropy_but_off_orbit(self):
        # f.p is invariant, 2 instead of 1
        o = self.sd.point([0, 0, 2], [0, 0, 1])

        with self.assertRaises(Err.NotOnOrbit) as cm:
            Orbit.tangent_L_N(self.sd, self.n, o)

        self.assertIn("was not reached", str(cm.exception))

    def test_reach_point(self):
        o = self.sd.point([1, 0, 0], [1, 0, 0])

        g, residual = Orbit.reach_point(self.sd, self.n, o, Settings(seed=2))

        self.assertLess(residual, 1e-9)
        np.testing.assert_allclose(
            o.to_numpy(), coadjoint(self.sd, g, self.n).to_numpy(), atol=1e-9
        )


class TestSymplecticForm(unittest.TestCase):
    def setUp(self):
        self.sd = euclidean_product()
        self.n = self.sd.point([1, -2, 3], [2, 0, 1])
        self.xi = (1, 0, 2, 0, -1, 3)
        self.eta = (0, 1, -1, 2, 1, 0)

    def test_expanded_form_agrees(self):
        expected = Orbit.kks_form(self.sd, self.n, self.xi, self.eta)

        ret_val = Orbit.kks_form_expanded(self.sd, self.n, self.xi, self.eta)

        self.assertEqual(expected, ret_val)

    def test_form_is_antisymmetric(self):
        self.assertEqual(
            Orbit.kks_form(self.sd, self.n, self.xi, self.eta),
            -Orbit.kks_form(self.sd, self.n, self.eta, self.xi),
        )

    def test_splitting_with_exact_element(self):
        rotation = cayley_rotation([1, 2, 0])
        g = GroupElement(
            self.sd,
            rotation.rows,
            rotation.rows,
            [Fraction(1), Fraction(-1, 2), Fraction(3)],
        )

        lhs, rhs = Orbit.splitting_sides(self.sd, self.n, g, self.xi, self.eta)

        self.assertEqual(lhs, rhs)
        residual = Orbit.splitting_check(self.sd, self.n, g, self.xi, self.eta)
        self.assertEqual(0, residual)

    def test_sampled_splitting(self):
        check = Orbit.splitting_theorem_check(self.sd, self.n, Settings(samples=5))

        self.assertEqual(HOLDS, check.verdict)
        self.assertIn("sampled-only", check.caveats)

    def test_splitting_without_samples(self):
        check = Orbit.splitting_theorem_check(self.sd, self.n, Settings(samples=0))

        self.assertEqual(HOLDS, check.verdict)
        self.assertEqual([], check.caveats)


class TestFoliation(unittest.TestCase):
    def test_se3_leaf_is_lagrangian(self):
        fixture = build("se3")

        leaf = Orbit.foliation_leaf(fixture.sd, fixture.point("axial"))

        self.assertEqual(2, leaf.dim)
        self.assertEqual(4, leaf.orbit_dim)
        self.assertTrue(leaf.lagrangian)

    def test_galilei_boost_leaf(self):
        fixture = build("galilei")

        leaf = Orbit.foliation_leaf(fixture.sd, fixture.point("massless_boost"))

        self.assertEqual(3, leaf.dim)
        self.assertEqual(8, leaf.orbit_dim)
        self.assertTrue(leaf.isotropic)
        self.assertFalse(leaf.lagrangian)


class TestLagrangianCriterion(unittest.TestCase):
    """N can be Lagrangian without kp inside kf."""

    def setUp(self):
        self.sd = euclidean_product()
        self.n = self.sd.point([1, 0, 0], [0, 0, 1])

    def test_values(self):
        report = Orbit.analyze_point(self.sd, self.n, Settings(samples=0))

        self.assertFalse(report.values["kp_in_kf"])
        self.assertTrue(report.values["f_closed_kp"])
        self.assertTrue(report.values["n_lagrangian"])
        self.assertEqual(4, report.orbit_dim)

    def test_checks(self):
        report = Orbit.analyze_point(self.sd, self.n, Settings(samples=0))

        criterion = report.checks.by_name("orbit.n-lagrangian-criterion")
        self.assertEqual(HOLDS, criterion.verdict)
        self.assertEqual(
            NOT_EVALUATED, report.checks.by_name("orbit.l-lagrangian").verdict
        )
        characteristic = report.checks.by_name("orbit.characteristic-distribution")
        self.assertEqual(1, characteristic.values["expected"])
        self.assertTrue(report.checks.holds)


class TestVarisotropy(unittest.TestCase):
    def test_holds_on_se3(self):
        fixture = build("se3")

        check = Orbit.varisotropy_check(
            fixture.sd, fixture.point("axial"), Settings(samples=5)
        )

        self.assertEqual(HOLDS, check.verdict)
        self.assertIn("connected-components-assumed-trivial", check.caveats)

    def test_not_evaluated_outside_hypothesis(self):
        fixture = build("galilei")

        check = Orbit.varisotropy_check(
            fixture.sd, fixture.point("massless_boost"), Settings(samples=0)
        )

        self.assertEqual(NOT_EVALUATED, check.verdict)
        self.assertFalse(check.values["kp_in_kf"])


class TestModifiedCotangent(unittest.TestCase):
    def test_se3_magnetic_term(self):
        fixture = build("se3", s=3)

        data = Orbit.modified_cotangent_data(fixture.sd, fixture.point("axial"))

        self.assertEqual(2, len(data.representatives))
        self.assertTrue(data.descends)
        self.assertTrue(data.closed)
        self.assertEqual(0, data.section_residual)
        self.assertEqual(-data.alpha.T, data.alpha)
        self.assertFalse(data.alpha.is_zero())
        self.assertTrue(all(check.holds for check in data.checks()))


class TestReport(unittest.TestCase):
    def test_to_dict(self):
        fixture = build("se3")

        report = Orbit.analyze_point(
            fixture.sd, fixture.point("axial"), Settings(samples=0)
        )
        ret_val = report.to_dict()

        self.assertEqual(4, ret_val["values"]["orbit_dim"])
        self.assertEqual(2, ret_val["values"]["fibre_dim"])
        names = [check["name"] for check in ret_val["checks"]]
        self.assertEqual(sorted(names), names)
        self.assertIn("orbit.splitting", names)


def test_sample_points_are_seeded():
    sd = euclidean_product()

    first = Orbit.sample_points(sd, np.random.default_rng(3), 4)
    second = Orbit.sample_points(sd, np.random.default_rng(3), 4)

    assert first == second
    assert all(not n.is_numeric for n in first)


if __name__ == "__main__":
    unittest.main()
