import unittest

from sympy.testing import pytest

from gjx.arrangement.permutation import Permutation
from gjx.exceptions import InvalidArgumentError
from gjx.numeric.matrix import Matrix


class TestPermutation(unittest.TestCase):

    def setUp(self):
        self.a = Matrix([[2, 1, 1], [4, 3, 1], [2, 2, 3]])
        self.perm = Permutation([2, 3, 1])

    def test_validation(self):
        with pytest.raises(InvalidArgumentError):
            Permutation([1, 1, 2])
        with pytest.raises(InvalidArgumentError):
            Permutation([0, 1])
        self.assertTrue(Permutation.identity(4).is_identity())
        self.assertEqual(self.perm.size, 3)
        self.assertEqual(self.perm(1), 2)

    def test_swap_and_inverse(self):
        self.assertEqual(Permutation.identity(3).swap(1, 2).swap(2, 3), self.perm)
        self.assertEqual(self.perm.inverse(), Permutation([3, 1, 2]))
        self.assertTrue(Permutation([self.perm(p) for p in self.perm.inverse().mapping]).is_identity())

    def test_matrices(self):
        p = self.perm.row_matrix()
        q = self.perm.column_matrix()
        permuted_rows = p @ self.a
        for position in range(1, 4):
            self.assertEqual(permuted_rows.row(position), self.a.row(self.perm(position)))
        permuted_cols = self.a @ q
        for position in range(1, 4):
            self.assertEqual(permuted_cols.column(position), self.a.column(self.perm(position)))
        # orthogonal: one 1 per row and column
        self.assertEqual(p @ p.transpose(), Matrix.identity(3))
        self.assertEqual(p @ self.perm.inverse().row_matrix(), Matrix.identity(3))


if __name__ == '__main__':
    unittest.main()
