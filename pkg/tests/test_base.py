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

import lieorbit.base as Base
import lieorbit.errors as Err
from lieorbit.exactla import Gaussian, Subspace


class TestSettings(unittest.TestCase):
    def setUp(self):
        self.settings = Base.Settings(seed=7, samples=20)

    def test_defaults(self):
        expected = {
            "seed": 0,
            "tol": 1e-9,
            "samples": 100,
            "strict": True,
            "fd_step": 1e-4,
        }

        ret_val = Base.Settings().to_dict()

        self.assertEqual(expected, ret_val)

    def test_same_stream_same_numbers(self):
        a = self.settings.rng("orbit.splitting").normal(size=5)
        b = self.settings.rng("orbit.splitting").normal(size=5)

        self.assertTrue(np.array_equal(a, b))

    def test_streams_are_independent(self):
        a = self.settings.rng("orbit.splitting").normal(size=5)
        b = self.settings.rng("polarization.invariant").normal(size=5)

        self.assertFalse(np.array_equal(a, b))

    def test_seed_changes_stream(self):
        a = self.settings.rng("orbit.splitting").normal(size=5)
        b = self.settings.replace(seed=8).rng("orbit.splitting").normal(size=5)

        self.assertFalse(np.array_equal(a, b))

    def test_replace_keeps_other_fields(self):
        ret_val = self.settings.replace(tol=1e-6)

        self.assertEqual(7, ret_val.seed)
        self.assertEqual(20, ret_val.samples)
        self.assertEqual(1e-6, ret_val.tol)

    def test_zero_samples_disables_sampling(self):
        self.assertFalse(Base.Settings(samples=0).sampling)
        self.assertTrue(self.settings.sampling)

    def test_negative_samples_rejected(self):
        self.assertRaises(ValueError, Base.Settings, samples=-1)

    def test_non_positive_tolerance_rejected(self):
        self.assertRaises(ValueError, Base.Settings, tol=0)


class TestCheck(unittest.TestCase):
    def test_unknown_verdict_rejected(self):
        self.assertRaises(ValueError, Base.Check, "x", "maybe")

    def test_caveats_sorted_and_unique(self):
        check = Base.Check(
            "x",
            Base.HOLDS,
            caveats=[Base.CAVEAT_SAMPLED, Base.CAVEAT_CONNECTED, Base.CAVEAT_SAMPLED],
        )

        self.assertEqual([Base.CAVEAT_CONNECTED, Base.CAVEAT_SAMPLED], check.caveats)

    def test_to_dict_is_plain_json(self):
        check = Base.Check(
            "orbit.dimension-law",
            Base.FAILS,
            ["citation"],
            residuals={"max": np.float64(0.5)},
            values={"dim": Fraction(4), "ratio": Fraction(1, 2)},
            detail="why",
        )

        ret_val = check.to_dict()

        self.assertEqual("fails", ret_val["verdict"])
        self.assertEqual({"dim": 4, "ratio": "1/2"}, ret_val["values"])
        self.assertIsInstance(ret_val["residuals"]["max"], float)
        self.assertEqual("why", ret_val["detail"])

    def test_holds_and_failed(self):
        self.assertTrue(Base.Check("a", Base.HOLDS).holds)
        self.assertTrue(Base.Check("a", Base.FAILS).failed)
        not_evaluated = Base.Check("a", Base.NOT_EVALUATED)
        self.assertFalse(not_evaluated.holds)
        self.assertFalse(not_evaluated.failed)


class TestCheckList(unittest.TestCase):
    def setUp(self):
        self.checks = Base.CheckList(
            [
                Base.Check("b.second", Base.HOLDS),
                Base.Check("a.first", Base.NOT_EVALUATED),
            ]
        )

    def test_not_evaluated_never_fails(self):
        self.assertTrue(self.checks.holds)

    def test_one_failure_fails(self):
        self.checks.add(Base.Check("c.third", Base.FAILS))

        self.assertFalse(self.checks.holds)
        self.assertEqual(["c.third"], [c.name for c in self.checks.failures()])

    def test_to_list_sorted_by_name(self):
        expected = ["a.first", "b.second"]

        ret_val = [c["name"] for c in self.checks.to_list()]

        self.assertEqual(expected, ret_val)

    def test_iteration_keeps_insertion_order(self):
        self.assertEqual(["b.second", "a.first"], [c.name for c in self.checks])

    def test_by_name(self):
        self.assertEqual(Base.HOLDS, self.checks.by_name("b.second").verdict)
        self.assertRaises(KeyError, self.checks.by_name, "missing")

    def test_extend_and_len(self):
        self.checks.extend([Base.Check("d", Base.HOLDS), Base.Check("e", Base.HOLDS)])

        self.assertEqual(4, len(self.checks))


@pytest.mark.parametrize(
    "samples, residuals, extra, expected",
    [
        (0, [], True, Base.NOT_EVALUATED),
        (0, [1.0], False, Base.NOT_EVALUATED),
        (10, [0.0, 1e-12], True, Base.HOLDS),
        (10, [0.0, 1e-3], True, Base.FAILS),
        (10, [0.0], False, Base.FAILS),
    ],
)
def test_sampled_verdict(samples, residuals, extra, expected):
    settings = Base.Settings(samples=samples)

    assert Base.sampled_verdict(settings, residuals, extra) == expected


def test_verdict():
    assert Base.verdict(True) == Base.HOLDS
    assert Base.verdict(False) == Base.FAILS


def test_max_residual_of_nothing_is_zero():
    assert Base.max_residual([]) == 0.0


def test_jsonable_subspace_and_gaussian():
    s = Subspace(3, [[2, 0, 0], [0, 1, 1]])

    ret_val = Base.jsonable({"s": s, "z": Gaussian(1, -2), "n": np.int64(3)})

    assert ret_val == {
        "s": {"dim": 2, "basis": [[1, 0, 0], [0, 1, 1]]},
        "z": "1-2i",
        "n": 3,
    }


def test_distance_to_subspace():
    s = Subspace(3, [[1, 0, 0], [0, 1, 0]])

    assert Base.distance_to_subspace([3.0, -1.0, 2.0], s) == pytest.approx(2.0)
    assert Base.distance_to_subspace([3.0, 4.0], Subspace.zero(2)) == pytest.approx(5.0)


class TestErrors(unittest.TestCase):
    def test_message_and_context(self):
        err = Err.SingularMatrix("Matrix is singular", context="m")

        self.assertEqual("Matrix is singular", err.message)
        self.assertEqual("m", err.context)

    def test_hierarchy(self):
        self.assertTrue(issubclass(Err.AmbientMismatch, Err.DimensionMismatch))
        self.assertTrue(issubclass(Err.NotSemidirectForm, Err.PreconditionFailed))
        for cls in (Err.SpecError, Err.UnknownFixture, Err.NotOnOrbit):
            self.assertTrue(issubclass(cls, Err.LieOrbitError))

    def test_precondition_violations(self):
        err = Err.PreconditionFailed("kp not in kf", violations=[(0, 1)])

        self.assertEqual([(0, 1)], err.violations)
        self.assertEqual([], Err.PreconditionFailed("x").violations)

    def test_spec_error_message_from_diagnostics(self):
        err = Err.SpecError(
            diagnostics=["a.lie:1:1: error: one", "a.lie:2:1: error: two"]
        )

        self.assertEqual("a.lie:1:1: error: one\na.lie:2:1: error: two", err.message)

    def test_validation_failed_report(self):
        err = Err.ValidationFailed("bad", report="r")

        self.assertEqual("r", err.report)


if __name__ == "__main__":
    unittest.main()
