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

import lieorbit.catalog as Catalog
import lieorbit.errors as Err
from lieorbit.base import Settings
from lieorbit.exactla import Matrix


@pytest.mark.parametrize("name", Catalog.NAMES)
def test_expected_rows_hold(name):
    fixture = Catalog.build(name)

    checks = Catalog.check_expected(fixture, Settings(samples=10))

    assert len(checks) == len(fixture.expected)
    assert [] == [check.name for check in checks.failures()]


@pytest.mark.parametrize(
    "name, params",
    [
        ("se3", {"s": Fraction(1, 2), "k": 5}),
        ("galilei", {"s": 3, "k": Fraction(2, 3), "energy": 7}),
        ("bargmann", {"s": 2, "m": Fraction(5, 2)}),
    ],
)
def test_expected_rows_hold_for_other_parameters(name, params):
    fixture = Catalog.build(name, **params)

    checks = Catalog.check_expected(fixture, Settings(samples=10))

    assert checks.holds


class TestBuild(unittest.TestCase):
    def test_params_are_fractions(self):
        fixture = Catalog.build("galilei", s="1/2", energy=3)

        self.assertEqual(Fraction(1, 2), fixture.params["s"])
        self.assertEqual(Fraction(3), fixture.params["energy"])

    def test_unknown_fixture(self):
        self.assertRaises(Err.UnknownFixture, Catalog.build, "poincare")

    def test_parameters_must_be_positive(self):
        self.assertRaises(ValueError, Catalog.build, "se3", s=0)
        self.assertRaises(ValueError, Catalog.build, "bargmann", m=-1)

    def test_unknown_point_and_polarization(self):
        fixture = Catalog.build("se3")

        self.assertRaises(Err.UnknownFixture, fixture.point, "massive_spin")
        self.assertRaises(Err.UnknownFixture, fixture.polarization, "plus")

    def test_dimensions(self):
        dims = dict((name, Catalog.build(name).sd.dim) for name in Catalog.NAMES)

        self.assertEqual({"se3": 6, "galilei": 10, "bargmann": 11}, dims)

    def test_expected_table(self):
        rows = Catalog.expected_table("bargmann")

        self.assertTrue(rows)
        self.assertEqual(
            {Catalog.PAPER, Catalog.DERIVED}, set(row.provenance for row in rows)
        )


class TestExpectedRow(unittest.TestCase):
    def test_key(self):
        plain = Catalog.ExpectedRow("axial", "orbit_dim", 4, Catalog.PAPER, "x")
        polarized = Catalog.ExpectedRow(
            "axial", "pukanszky", True, Catalog.PAPER, "x", "trivial"
        )

        self.assertEqual("axial.orbit_dim", plain.key)
        self.assertEqual("axial.pukanszky.trivial", polarized.key)

    def test_to_dict(self):
        row = Catalog.ExpectedRow("axial", "orbit_dim", 4, Catalog.DERIVED, "count")

        ret_val = row.to_dict()

        self.assertEqual(4, ret_val["value"])
        self.assertEqual("DERIVED", ret_val["provenance"])
        self.assertIsNone(ret_val["polarization"])

    def test_check_names(self):
        fixture = Catalog.build("se3")

        checks = Catalog.check_expected(fixture, Settings(samples=0))

        self.assertIn("expected.se3.axial.orbit_dim", [c.name for c in checks])

    def test_unknown_quantity(self):
        fixture = Catalog.build("se3")
        row = Catalog.ExpectedRow("axial", "volume", 1, Catalog.DERIVED, "none")

        self.assertRaises(KeyError, Catalog.measure, fixture, row)


class TestClosedForms(unittest.TestCase):
    def test_hat_is_cross_product(self):
        ret_val = Matrix(Catalog.hat((1, 2, 3))).apply((4, 5, 6))

        self.assertEqual((-3, 6, -3), ret_val)

    def test_cayley_rotation_is_orthogonal(self):
        r = Catalog.cayley_rotation((1, Fraction(1, 2), -2))

        self.assertEqual(Matrix.identity(3), r.T @ r)

    def test_galilei_rep_composition(self):
        r1, b1 = Catalog.cayley_rotation((1, 0, 1)), (1, 2, 0)
        r2, b2 = Catalog.cayley_rotation((0, 2, 0)), (0, -1, 3)
        b = tuple(x + y for x, y in zip(b1, r1.apply(b2)))

        expected = Catalog.galilei_rep(r1 @ r2, b)
        ret_val = Catalog.galilei_rep(r1, b1) @ Catalog.galilei_rep(r2, b2)

        self.assertEqual(expected, ret_val)

    def test_bargmann_rep_composition(self):
        r1, b1 = Catalog.cayley_rotation((1, 0, 1)), (1, 2, 0)
        r2, b2 = Catalog.cayley_rotation((0, 2, 0)), (0, -1, 3)
        b = tuple(x + y for x, y in zip(b1, r1.apply(b2)))

        expected = Catalog.bargmann_rep(r1 @ r2, b)
        ret_val = Catalog.bargmann_rep(r1, b1) @ Catalog.bargmann_rep(r2, b2)

        self.assertEqual(expected, ret_val)


@pytest.mark.parametrize(
    "w, b, p",
    [
        ((1, 0, 0), (0, 0, 0), (0, 0, 1, 2)),
        ((0, 1, 2), (1, -1, 0), (1, 2, 3, 4)),
        ((Fraction(1, 3), 0, 1), (2, 0, Fraction(1, 2)), (0, -1, 1, 0)),
    ],
)
def test_galilei_dual_closed_form(w, b, p):
    closed, generic = Catalog.galilei_contragredient_check(w, b, p)

    assert closed == generic


@pytest.mark.parametrize(
    "w, b, p",
    [
        ((1, 0, 0), (0, 0, 0), (0, 0, 0, 0, 1)),
        ((0, 1, 2), (1, -1, 0), (1, 2, 3, 4, 5)),
        ((Fraction(1, 3), 0, 1), (2, 0, Fraction(1, 2)), (0, -1, 1, 0, 2)),
    ],
)
def test_bargmann_dual_closed_form(w, b, p):
    closed, generic = Catalog.bargmann_contragredient_check(w, b, p)

    assert closed == generic


def test_contragredient_check_needs_a_closed_form():
    with pytest.raises(Err.UnknownFixture):
        Catalog.contragredient_check(
            Catalog.build("se3"), (1, 0, 0), (0, 0, 0), (0, 0, 1)
        )


def test_random_rational_point():
    fixture = Catalog.build("galilei")

    first = Catalog.random_rational_point(fixture, np.random.default_rng(5))
    second = Catalog.random_rational_point(fixture, np.random.default_rng(5))

    assert first == second
    assert not first.is_numeric
    assert first.dim == 10


if __name__ == "__main__":
    unittest.main()
