# -*- coding: utf-8 -*-
# Module: Verify
# License: MIT

"""Tests for the `verify` package"""

import math
import unittest
from fractions import Fraction

import numpy as np
from scipy import integrate

from resources.lib.bounds import kadec_bounds
from resources.lib.construct import (PerturbedRule, RoundedDualRule,
                                     SpectralNormRule)
from resources.lib.globals import g
from resources.lib.lattice import FreqSet, lattice_points
from resources.lib.linalg import Mat, inverse_transpose
from resources.lib.verify import (GramReport, TooLargeError, assemble_gram,
                                  block_deviation, eig_range,
                                  equidistribution_check, gram_entry,
                                  orthogonality_test, phi,
                                  truncation_ladder)
from resources.test.mocks.MatrixFixtures import H_EX, ROTATION_30
from resources.test.mocks.MinimalClassMocks import IntegerRule


def _quad_entry_1d(a, difference):
    """Integral of exp(2 pi i difference x) over [0, a]"""
    real = integrate.quad(lambda x: math.cos(2 * math.pi * difference * x),
                          0.0, a)[0]
    imag = integrate.quad(lambda x: math.sin(2 * math.pi * difference * x),
                          0.0, a)[0]
    return complex(real, imag)


class PhiTestCase(unittest.TestCase):
    """Tests for the one-dimensional kernel"""

    def setUp(self):
        g.reset_defaults()

    def test_values(self):
        """phi(0) = 1, phi(n) = 0 and phi(1/2) = 2i/pi"""
        self.assertEqual(phi(0.0), 1.0)
        np.testing.assert_array_equal(phi([1.0, -2.0, 7.0]), [0, 0, 0])
        self.assertAlmostEqual(phi(0.5), 2j / math.pi, places=14)

    def test_taylor_branch(self):
        """Tiny arguments use the series expansion"""
        self.assertAlmostEqual(phi(1e-10), 1.0 + 1j * math.pi * 1e-10,
                               places=15)

    def test_symmetry(self):
        """phi(-u) is the conjugate of phi(u)"""
        values = np.array([0.3, 1.7, 1e-9])
        np.testing.assert_allclose(phi(-values), np.conj(phi(values)),
                                   rtol=1e-15)


class GramTestCase(unittest.TestCase):
    """Tests for Gram entries and their assembly"""

    def setUp(self):
        g.reset_defaults()

    def test_entry_one_dimensional(self):
        """Closed form against numerical quadrature"""
        expected = _quad_entry_1d(0.7, 1.7)
        actual = gram_entry([[0.7]], [1.3], [-0.4])
        self.assertAlmostEqual(actual.real, expected.real, places=10)
        self.assertAlmostEqual(actual.imag, expected.imag, places=10)

    def test_entry_two_dimensional(self):
        """Closed form against a double integral over the unit square"""
        difference = np.array([2.0, -1.0])
        u = H_EX.array.T @ difference
        volume = 1.0 / math.sqrt(6.0)
        real = integrate.dblquad(
            lambda t2, t1: math.cos(2 * math.pi * (u[0] * t1 + u[1] * t2)),
            0.0, 1.0, 0.0, 1.0)[0]
        imag = integrate.dblquad(
            lambda t2, t1: math.sin(2 * math.pi * (u[0] * t1 + u[1] * t2)),
            0.0, 1.0, 0.0, 1.0)[0]
        actual = gram_entry(H_EX, [2, 0], [0, 1])
        self.assertAlmostEqual(actual.real, volume * real, places=8)
        self.assertAlmostEqual(actual.imag, volume * imag, places=8)

    def test_hermitian(self):
        """Conjugate symmetric bit for bit with |det A| on the diagonal"""
        freqs = RoundedDualRule(H_EX).window(4)
        gram = assemble_gram(H_EX, freqs)
        np.testing.assert_array_equal(gram, np.conj(gram.T))
        np.testing.assert_allclose(np.diag(gram).real,
                                   1.0 / math.sqrt(6.0), rtol=1e-14)

    def test_assembly_matches_entries(self):
        """The assembled matrix agrees with gram_entry"""
        freqs = FreqSet([[0, 0], [1, 2], [-3, 1]])
        gram = assemble_gram(H_EX, freqs)
        for i, gamma in enumerate(freqs.points):
            for j, gamma_prime in enumerate(freqs.points):
                self.assertAlmostEqual(
                    gram[i, j], gram_entry(H_EX, gamma, gamma_prime),
                    places=13)

    def test_single_worker(self):
        """The result does not depend on the worker count"""
        freqs = RoundedDualRule(H_EX).window(6)
        parallel = assemble_gram(H_EX, freqs)
        g.THREADS = 1
        np.testing.assert_array_equal(assemble_gram(H_EX, freqs), parallel)

    def test_size_cap(self):
        """Sets above the cap are refused"""
        g.GRAM_SIZE_CAP = 4
        with self.assertRaises(TooLargeError) as context:
            assemble_gram(Mat.identity(2), lattice_points(Mat.identity(2), 1))
        self.assertEqual(context.exception.size, 9)
        self.assertEqual(context.exception.cap, 4)

    def test_lanczos_branch(self):
        """The sparse eigensolver agrees with the dense one"""
        freqs = PerturbedRule.sine(0.2).build(30)
        gram = assemble_gram([[1.0]], freqs)
        dense = eig_range(gram)
        g.DENSE_EIG_LIMIT = 10
        sparse = eig_range(gram)
        self.assertAlmostEqual(sparse[0], dense[0], places=6)
        self.assertAlmostEqual(sparse[1], dense[1], places=6)


class OrthogonalityTestCase(unittest.TestCase):
    """Tests for the orthogonality check"""

    def setUp(self):
        g.reset_defaults()

    def test_dual_lattice(self):
        """A^-T Z^d is orthogonal on A[0,1]^d for any nonsingular A"""
        A = Mat([[1.2, 0.3], [-0.4, 0.9]])
        freqs = lattice_points(inverse_transpose(A), 2)
        self.assertTrue(orthogonality_test(A, freqs))

    def test_integers_on_unitriangular(self):
        """Z^2 is orthogonal on G[0,1]^2 for unitriangular G"""
        self.assertTrue(orthogonality_test([[1.0, 0.0], [3.0, 1.0]],
                                           lattice_points(Mat.identity(2),
                                                          2)))

    def test_rounded_set_is_not_orthogonal(self):
        """Rounding destroys orthogonality"""
        freqs = RoundedDualRule(H_EX).window(3)
        self.assertFalse(orthogonality_test(H_EX, freqs))

    def test_random_dual_lattices(self):
        """Fifty random well conditioned A in dimensions 2 and 3: the Gram
        of A^-T Z^d on [-6, 6]^d is |det A| I within 1e-9 |det A|"""
        random = np.random.RandomState(2024)
        checked = 0
        while checked < 50:
            dim = 2 if checked < 25 else 3
            array = random.normal(size=(dim, dim))
            if np.linalg.cond(array) > 100.0:
                continue
            A = Mat(array)
            freqs = lattice_points(inverse_transpose(A), 6)
            self.assertEqual(len(freqs), 13 ** dim)
            self.assertTrue(orthogonality_test(A, freqs),
                            'A = {}'.format(A.tolist()))
            checked += 1


class LadderTestCase(unittest.TestCase):
    """Tests for truncation ladders"""

    def setUp(self):
        g.reset_defaults()

    def test_constant_shift_is_orthonormal(self):
        """n + 0.2 is a unimodular multiple of the integers"""
        report = truncation_ladder([[1.0]], PerturbedRule.constant(0.2),
                                   [10, 20])
        np.testing.assert_allclose(report.eig_min, [1.0, 1.0], atol=1e-10)
        np.testing.assert_allclose(report.eig_max, [1.0, 1.0], atol=1e-10)
        self.assertTrue(report.stabilized)

    def test_kadec_containment(self):
        """Finite sections of n + 0.2 sin(n) stay inside the Kadec
        bounds for L = 0.2"""
        _, cert = kadec_bounds(0.2)
        report = truncation_ladder([[1.0]], PerturbedRule.sine(0.2),
                                   [50, 100])
        self.assertFalse(report.numerical_failure)
        self.assertGreaterEqual(report.floor, cert.lower - 1e-6)
        self.assertLessEqual(report.eig_max[-1], cert.upper + 1e-6)

    def test_interlacing(self):
        """eig_min is non-increasing and eig_max non-decreasing"""
        report = truncation_ladder(H_EX, RoundedDualRule(H_EX), [3, 6, 12])
        self.assertFalse(report.numerical_failure)
        self.assertEqual(report.interlacing_violations, [])
        for first, second in zip(report.eig_min, report.eig_min[1:]):
            self.assertLessEqual(second, first + 1e-8)
        for first, second in zip(report.eig_max, report.eig_max[1:]):
            self.assertGreaterEqual(second, first - 1e-8)
        self.assertGreater(report.floor, 0.0)
        self.assertEqual(report.sizes, sorted(report.sizes))

    def test_example_ladder(self):
        """Radii 5 to 40 for r(H_EX^-T Z^2): exact interlacing and a
        positive floor, the last Gram going through Lanczos"""
        report = truncation_ladder(H_EX, RoundedDualRule(H_EX),
                                   [5, 10, 20, 40])
        self.assertGreater(report.sizes[-1], g.DENSE_EIG_LIMIT)
        self.assertFalse(report.numerical_failure)
        self.assertEqual(report.interlacing_violations, [])
        for first, second in zip(report.eig_min, report.eig_min[1:]):
            self.assertLessEqual(second, first + 1e-8)
        for first, second in zip(report.eig_max, report.eig_max[1:]):
            self.assertGreaterEqual(second, first - 1e-8)
        self.assertGreaterEqual(report.floor, 1e-3)

    def test_spectral_norm_set(self):
        """The spectral norm construction stays well conditioned"""
        report = truncation_ladder(ROTATION_30, SpectralNormRule(ROTATION_30),
                                   [20, 40, 80])
        self.assertFalse(report.numerical_failure)
        self.assertGreater(report.floor, 0.05)
        self.assertLess(report.eig_max[-1], 4.0)

    def test_unnormalized(self):
        """Without normalization the eigenvalues carry |det A|"""
        rule = IntegerRule(1)
        normalized = truncation_ladder([[0.5]], rule, [4])
        raw = truncation_ladder([[0.5]], rule, [4], normalized=False)
        self.assertAlmostEqual(raw.eig_min[0], 0.5 * normalized.eig_min[0])
        self.assertAlmostEqual(raw.eig_max[0], 0.5 * normalized.eig_max[0])
        self.assertAlmostEqual(raw.volume, 0.5)
        self.assertFalse(raw.to_dict()['normalized'])

    def test_radii_validation(self):
        """Radii must increase"""
        with self.assertRaises(ValueError):
            truncation_ladder([[1.0]], IntegerRule(1), [10, 5])

    def test_failure_flags(self):
        """Negative eigenvalues and broken interlacing are failures"""
        negative = GramReport([1, 2], [3, 5], [0.5, -0.1], [1.0, 1.2],
                              True, 1.0)
        self.assertTrue(negative.numerical_failure)
        self.assertEqual(negative.interlacing_violations, [])
        rising = GramReport([1, 2], [3, 5], [0.5, 0.6], [1.0, 1.2], True,
                            1.0)
        self.assertTrue(rising.numerical_failure)
        self.assertEqual(rising.interlacing_violations,
                         [{'position': 1, 'series': 'eig_min'}])
        self.assertFalse(rising.stabilized)


class EquidistributionTestCase(unittest.TestCase):
    """Tests for block averages of fractional parts"""

    def test_irrational(self):
        """sqrt(2) averages to 1/2 over long blocks"""
        report = equidistribution_check(math.sqrt(2.0), [0.0, 0.5], 10000,
                                        (0, 3), 1e-3)
        self.assertTrue(report.satisfied)
        self.assertLess(report.max_deviation, 1e-3)

    def test_irrational_shifted_blocks(self):
        """sqrt(2) with shifts 0, 0.3 and 0.7 on the blocks m = 0..10"""
        report = equidistribution_check(math.sqrt(2.0), [0.0, 0.3, 0.7],
                                        10000, (0, 10), 1e-3)
        self.assertTrue(report.satisfied)
        self.assertLess(report.max_deviation, 1e-3)
        self.assertEqual(report.P, 10000)

    def test_integer_alpha(self):
        """alpha = 1 gives fractional parts 0 and deviation 1/2"""
        report = equidistribution_check(1, [0], 10, (0, 2), 0.1)
        self.assertAlmostEqual(report.max_deviation, 0.5)
        self.assertFalse(report.satisfied)
        self.assertEqual(report.worst_block, {'beta': 0.0, 'm': 0})

    def test_exact_rational(self):
        """alpha = 2/3 alternates between 0 and 1/2, whatever the shift"""
        self.assertAlmostEqual(block_deviation(Fraction(2, 3), 0, 2, 0),
                               0.25)
        self.assertAlmostEqual(
            block_deviation(Fraction(2, 3), Fraction(1, 3), 4, 5), 0.25)

    def test_validation(self):
        """alpha > 0 and P >= 1"""
        with self.assertRaises(ValueError):
            equidistribution_check(0, [0], 10, (0, 1), 0.1)
        with self.assertRaises(ValueError):
            equidistribution_check(0.5, [0], 0, (0, 1), 0.1)


if __name__ == '__main__':
    unittest.main()
