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
from lieorbit.exactla import (
    ComplexSubspace,
    Gaussian,
    Matrix,
    Subspace,
    annihilator,
    embed,
    intersect,
    quotient_basis,
    span_sum,
    to_gaussian,
    to_scalar,
    vector,
)


class TestGaussian(unittest.TestCase):
    def setUp(self):
        self.a = Gaussian(1, 2)
        self.b = Gaussian(3, -1)

    def test_product(self):
        self.assertEqual(Gaussian(5, 5), self.a * self.b)

    def test_division_inverts_product(self):
        self.assertEqual(self.a, (self.a * self.b) / self.b)

    def test_mixed_with_rationals(self):
        self.assertEqual(Gaussian(Fraction(3, 2), 2), self.a + Fraction(1, 2))
        self.assertEqual(Gaussian(2, 4), 2 * self.a)
        self.assertEqual(Gaussian(0, -2), 1 - self.a)

    def test_division_by_zero(self):
        self.assertRaises(ZeroDivisionError, lambda: self.a / Gaussian(0, 0))

    def test_conjugate_and_real(self):
        self.assertEqual(Gaussian(1, -2), self.a.conjugate())
        self.assertFalse(self.a.is_real)
        self.assertTrue(Gaussian(3, 0).is_real)

    def test_equal_to_plain_numbers(self):
        self.assertEqual(Gaussian(3, 0), 3)
        self.assertEqual(Gaussian(1, 2), complex(1, 2))
        self.assertEqual(hash(Gaussian(3, 0)), hash(Fraction(3)))

    def test_str(self):
        self.assertEqual("1+2i", str(self.a))
        self.assertEqual("3-1i", str(self.b))
        self.assertEqual("-1/2i", str(Gaussian(0, Fraction(-1, 2))))
        self.assertEqual("4", str(Gaussian(4, 0)))


class TestScalars(unittest.TestCase):
    def test_to_scalar(self):
        self.assertEqual(Fraction(3, 4), to_scalar("3/4"))
        self.assertIsInstance(to_scalar(2), Fraction)
        self.assertIsInstance(to_scalar(0.5), float)

    def test_to_scalar_rejects_objects(self):
        self.assertRaises(TypeError, to_scalar, object())

    def test_to_gaussian_rejects_floats(self):
        self.assertRaises(TypeError, to_gaussian, 0.5)
        self.assertEqual(Gaussian(2, 0), to_gaussian(2))

    def test_vector_length(self):
        self.assertEqual((Fraction(1), Fraction(2)), vector([1, 2], 2))
        self.assertRaises(Err.DimensionMismatch, vector, [1, 2], 3)


class TestMatrix(unittest.TestCase):
    def setUp(self):
        self.m = Matrix([[1, 2, 3], [2, 4, 6]])
        self.square = Matrix([[2, 1], [1, 1]])

    def test_ragged_rows_rejected(self):
        self.assertRaises(Err.DimensionMismatch, Matrix, [[1, 2], [3]])

    def test_rank(self):
        self.assertEqual(1, self.m.rank())

    def test_rref_pivots(self):
        reduced, pivots = self.m.rref()

        self.assertEqual((0,), pivots)
        self.assertEqual((1, 2, 3), reduced.row(0))
        self.assertEqual((0, 0, 0), reduced.row(1))

    def test_kernel(self):
        kernel = self.m.kernel()

        self.assertEqual(2, kernel.dim)
        self.assertTrue(kernel.contains((-2, 1, 0)))
        self.assertTrue(kernel.contains((-3, 0, 1)))
        self.assertFalse(kernel.contains((1, 0, 0)))

    def test_kernel_vectors_are_annihilated(self):
        for row in self.m.kernel().basis:
            self.assertEqual((0, 0), self.m.apply(row))

    def test_image_and_row_space(self):
        self.assertEqual(Subspace(2, [[1, 2]]), self.m.image())
        self.assertEqual(Subspace(3, [[1, 2, 3]]), self.m.row_space())

    def test_solve(self):
        x = self.square.solve((3, 2))

        self.assertEqual((3, 2), self.square.apply(x))

    def test_solve_inconsistent(self):
        self.assertRaises(Err.InconsistentSystem, self.m.solve, (1, 0))

    def test_inverse(self):
        inverse = self.square.inverse()

        self.assertEqual(Matrix.identity(2), self.square @ inverse)
        self.assertEqual(Matrix([[1, -1], [-1, 2]]), inverse)

    def test_singular(self):
        self.assertRaises(Err.SingularMatrix, Matrix([[1, 2], [2, 4]]).inverse)
        self.assertRaises(Err.SingularMatrix, self.m.inverse)

    def test_shapes_checked(self):
        self.assertRaises(Err.DimensionMismatch, lambda: self.m @ self.m)
        self.assertRaises(Err.DimensionMismatch, self.m.apply, (1, 2))
        self.assertRaises(Err.DimensionMismatch, lambda: self.m + self.square)

    def test_transpose(self):
        self.assertEqual(Matrix([[1, 2], [2, 4], [3, 6]]), self.m.T)

    def test_empty_matrix_keeps_width(self):
        empty = Matrix([], ncols=3)

        self.assertEqual((0, 3), empty.shape)
        self.assertEqual(3, empty.kernel().dim)

    def test_float_mode_uses_tolerance(self):
        nearly = Matrix([[1.0, 1.0], [1.0, 1.0 + 1e-12]], tol=1e-9)

        self.assertEqual(1, nearly.rank())

    def test_to_numpy(self):
        ret_val = Matrix([[1, Fraction(1, 2)]]).to_numpy()

        self.assertTrue(np.allclose(ret_val, [[1.0, 0.5]]))
        self.assertTrue(np.iscomplexobj(Matrix([[Gaussian(0, 1)]]).to_numpy()))


class TestSubspace(unittest.TestCase):
    def setUp(self):
        self.plane = Subspace(3, [[1, 0, 1], [0, 1, 1]])
        self.line = Subspace(3, [[1, 1, 2]])

    def test_canonical_basis(self):
        other = Subspace(3, [[1, 1, 2], [1, -1, 0], [2, 0, 2]])

        self.assertEqual(self.plane.basis, other.basis)
        self.assertEqual(self.plane, other)
        self.assertEqual(hash(self.plane), hash(other))

    def test_coordinates(self):
        self.assertEqual((2, 3), self.plane.coordinates((2, 3, 5)))
        self.assertRaises(Err.NotASubspace, self.plane.coordinates, (0, 0, 1))

    def test_ambient_checked(self):
        self.assertRaises(Err.AmbientMismatch, self.plane.contains, (1, 0))
        self.assertRaises(Err.AmbientMismatch, Subspace, 2, [[1, 0, 0]])

    def test_subspace_of(self):
        self.assertTrue(self.line.is_subspace_of(self.plane))
        self.assertFalse(self.plane.is_subspace_of(self.line))

    def test_annihilator(self):
        expected = Subspace(3, [[1, 1, -1]])

        self.assertEqual(expected, annihilator(self.plane))
        self.assertEqual(Subspace.full(3), annihilator(Subspace.zero(3)))

    def test_sum_and_intersection(self):
        other = Subspace(3, [[1, 0, 0], [0, 0, 1]])

        self.assertEqual(Subspace.full(3), span_sum(self.plane, other))
        self.assertEqual(Subspace(3, [[1, 0, 1]]), intersect(self.plane, other))

    def test_quotient_basis(self):
        expected = [(0, 1, 1)]

        ret_val = quotient_basis(self.plane, Subspace(3, [[1, 0, 1]]))

        self.assertEqual(expected, [tuple(x) for x in ret_val])

    def test_quotient_requires_inclusion(self):
        self.assertRaises(
            Err.NotASubspace, quotient_basis, self.line, self.plane
        )

    def test_embed(self):
        ret_val = embed(self.line, 5, 2)

        self.assertEqual(((0, 0, 1, 1, 2),), ret_val.basis)
        self.assertRaises(Err.AmbientMismatch, embed, self.line, 4, 2)

    def test_span_needs_ambient_for_empty(self):
        self.assertRaises(Err.DimensionMismatch, Subspace.span, [])
        self.assertEqual(2, Subspace.span([[1, 0], [0, 3]]).dim)

    def test_float_subspace(self):
        s = Subspace(2, [[1.0, 1e-12]], tol=1e-9)

        self.assertTrue(s.contains((2.0, 0.0)))
        self.assertFalse(s.contains((0.0, 1.0)))


class TestComplexSubspace(unittest.TestCase):
    def setUp(self):
        i = Gaussian(0, 1)
        self.h = ComplexSubspace(3, [[1, i, 0], [0, 0, 1]])

    def test_conjugate(self):
        self.assertFalse(self.h.is_real())
        self.assertTrue(
            self.h.conjugate().contains((1, Gaussian(0, -1), 0))
        )

    def test_real_part(self):
        expected = Subspace(3, [[0, 0, 1]])

        self.assertEqual(expected, self.h.real_part())

    def test_realification(self):
        self.assertEqual(Subspace.full(3), self.h.realification())

    def test_from_real_is_real(self):
        real = Subspace(3, [[1, 2, 0]])
        h = ComplexSubspace.from_real(real)

        self.assertTrue(h.is_real())
        self.assertEqual(real, h.real_part())
        self.assertEqual(real, h.realification())

    def test_no_float_mode(self):
        self.assertRaises(ValueError, ComplexSubspace, 2, [], tol=1e-9)

    def test_complex_kernel(self):
        m = Matrix([[1, Gaussian(0, 1)]])

        kernel = m.kernel()

        self.assertIsInstance(kernel, ComplexSubspace)
        self.assertTrue(kernel.contains((Gaussian(0, -1), 1)))


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[0, 0], [0, 0]], 0),
        ([[1, 0], [0, 1]], 2),
        ([[1, 2], [2, 4]], 1),
        ([[0, 1, 0], [0, 0, 1], [0, 1, 1]], 2),
    ],
)
def test_rank(rows, expected):
    assert Matrix(rows).rank() == expected


if __name__ == "__main__":
    unittest.main()
