"""
Property suites over seeded random integer matrices, entries in [-9, 9].

Each corpus matrix is arranged, eliminated and verified once in `setUpClass`; the tests then read the shared results.
"""
import io
import os
import unittest
from contextlib import redirect_stdout
from unittest import mock

import numpy as np

from gjx import EXIT_FAILURE, EXIT_OK
from gjx.arrangement.arranger import arrange, is_properly_arranged, pivot_dominance_check
from gjx.cli.fuzz import draw_matrices
from gjx.cli.main import main
from gjx.closedform import formulas
from gjx.closedform.verification import INTERMEDIATE, OPERATION, PIVOT, PRODUCT, verify_trace
from gjx.engine.gauss_jordan import eliminate, gj_product, is_diagonally_eliminable
from gjx.numeric.helpers_numeric import adjugate_inverse, det_bareiss, det_laplace, principal_minor, rank_by_minors
from gjx.numeric.matrix import Matrix

TRIALS = 200
MAX_ABS = 9
SHAPES = [(3, 3), (4, 4), (5, 5), (5, 7), (7, 5), (6, 8)]
RANK_DEFICIENT_TRIALS = 50
MAX_RANK = 3

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "golden")


class Case:

    def __init__(self, a: Matrix):
        self.input = a
        self.result = arrange(a)
        self.report = verify_trace(self.result.arranged)
        self.trace = self.report.trace
        self.oracle_rank = rank_by_minors(a)


class TestPropertyCorpus(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.cases = {}
        for seed, (m, n) in enumerate(SHAPES):
            matrices = draw_matrices(TRIALS, m, n, MAX_ABS, seed=1000 + seed)
            matrices += draw_matrices(RANK_DEFICIENT_TRIALS, m, n, 2, seed=2000 + seed, max_rank=MAX_RANK)
            cls.cases[(m, n)] = [Case(a) for a in matrices if not a.is_zero()]

    def all_cases(self):
        for shape in SHAPES:
            yield from self.cases[shape]

    def test_intermediate_entries_match_minor_quotients(self):
        for case in self.all_cases():
            self.assertTrue(all(record.match for record in case.report.comparisons))
            self.assertEqual(len(case.report.comparisons), case.trace.rank * case.input.m * case.input.n)
            self.assertTrue(all(record.category == INTERMEDIATE for record in case.report.comparisons))

    def test_operation_matrices_match_closed_form(self):
        for case in self.all_cases():
            self.assertTrue(all(record.match for record in case.report.op_comparisons))
            self.assertEqual(len(case.report.op_comparisons), 2 * case.trace.rank * case.input.m ** 2)
            self.assertTrue(all(record.category == OPERATION for record in case.report.op_comparisons))

    def test_pivots_and_pivot_products(self):
        for case in self.all_cases():
            arranged = case.result.arranged
            for record in case.report.pivot_comparisons + case.report.product_checks:
                self.assertIn(record.category, (PIVOT, PRODUCT))
                self.assertTrue(record.match)
            for k in range(case.trace.rank):
                self.assertEqual(case.trace.pivot(k),
                                 principal_minor(arranged, k + 1) / principal_minor(arranged, k))
                self.assertTrue(formulas.lemma_product_check(arranged, k, case.trace))

    def test_arranged_matrices_eliminate_with_dominant_pivots(self):
        for case in self.all_cases():
            self.assertEqual(len(case.trace.steps), 2 * case.oracle_rank)
            self.assertTrue(pivot_dominance_check(case.trace))
            if min(case.input.m, case.input.n) <= 6:
                self.assertTrue(is_properly_arranged(case.result.arranged))

    def test_rank_agreement(self):
        deficient = 0
        for case in self.all_cases():
            self.assertEqual(case.trace.rank, case.oracle_rank)
            deficient += case.oracle_rank < min(case.input.m, case.input.n)
        self.assertGreater(deficient, 0)


class TestInverseCorpus(unittest.TestCase):

    def test_operator_product_is_the_inverse(self):
        rng = np.random.default_rng(77)
        found = 0
        while found < TRIALS:
            n = int(rng.integers(1, 6, endpoint=True))
            a = Matrix(rng.integers(-MAX_ABS, MAX_ABS, size=(n, n), endpoint=True).tolist())
            if det_bareiss(a) == 0:
                continue
            found += 1
            arranged = arrange(a).arranged
            self.assertTrue(is_diagonally_eliminable(arranged, n))
            g = gj_product(eliminate(arranged))
            self.assertEqual(g @ arranged, Matrix.identity(n))
            self.assertEqual(g, adjugate_inverse(arranged))


class TestDeterminantOracles(unittest.TestCase):

    def test_laplace_equals_bareiss(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n = int(rng.integers(1, 6, endpoint=True))
            a = Matrix(rng.integers(-MAX_ABS, MAX_ABS, size=(n, n), endpoint=True).tolist())
            self.assertEqual(det_laplace(a), det_bareiss(a))


class TestMutationSensitivity(unittest.TestCase):

    def verify_example(self) -> int:
        with redirect_stdout(io.StringIO()):
            return main(["verify", os.path.join(GOLDEN_DIR, "example_3x3.txt")])

    def test_unmutated_passes(self):
        self.assertEqual(self.verify_example(), EXIT_OK)

    def test_upper_branch_sign_flip(self):
        original = formulas.entry_formula

        def flipped(a, k, i, j):
            value = original(a, k, i, j)
            return -value if i <= k < j else value

        with mock.patch("gjx.closedform.formulas.entry_formula", side_effect=flipped):
            self.assertEqual(self.verify_example(), EXIT_FAILURE)

    def test_inverted_pivot_quotient(self):
        def inverted(a, k):
            return principal_minor(a, k) / principal_minor(a, k + 1)

        with mock.patch("gjx.closedform.formulas.pivot_formula", side_effect=inverted):
            self.assertEqual(self.verify_example(), EXIT_FAILURE)


if __name__ == '__main__':
    unittest.main()
