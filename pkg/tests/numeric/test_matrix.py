import pickle
import unittest
from fractions import Fraction

from sympy.testing import pytest

from gjx.exceptions import DimensionMismatchError, IndexOutOfRangeError, InvalidArgumentError
from gjx.numeric.matrix import IndexList, Matrix


class TestIndexList(unittest.TestCase):

    def test_valid(self):
        indices = IndexList([1, 3, 4])
        self.assertEqual(len(indices), 3)
        self.assertEqual(list(indices), [1, 3, 4])
        self.assertEqual(indices[1], 3)
        self.assertEqual(IndexList.span(2, 4), IndexList([2, 3, 4]))
        self.assertEqual(len(IndexList.span(1, 0)), 0)
        self.assertEqual(hash(IndexList([1, 2])), hash(IndexList((1, 2))))

    def test_invalid(self):
        with pytest.raises(InvalidArgumentError):
            IndexList([2, 1])
        with pytest.raises(InvalidArgumentError):
            IndexList([1, 1])
        with pytest.raises(InvalidArgumentError):
            IndexList([0, 1])
        with pytest.raises(InvalidArgumentError):
            IndexList([1.0])
        with pytest.raises(IndexOutOfRangeError):
            IndexList([1, 4]).check_bound(3)


class TestMatrix(unittest.TestCase):

    def setUp(self):
        self.a = Matrix([[2, 1, 1], [4, 3, 1], [2, 2, 3]])

    def test_construction(self):
        b = Matrix([["1/2", -3], ["0.25", 7]])
        self.assertEqual(b.shape, (2, 2))
        self.assertEqual(b[1, 1], Fraction(1, 2))
        self.assertEqual(b[2, 1], Fraction(1, 4))
        self.assertTrue(all(isinstance(value, Fraction) for _, _, value in b.entries()))

    def test_construction_errors(self):
        with pytest.raises(DimensionMismatchError):
            Matrix([])
        with pytest.raises(DimensionMismatchError):
            Matrix([[]])
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2], [3]])
        with pytest.raises(InvalidArgumentError):
            Matrix([[0.5]])
        with pytest.raises(DimensionMismatchError):
            Matrix.identity(0)

    def test_indexing_is_one_based(self):
        self.assertEqual(self.a[1, 1], 2)
        self.assertEqual(self.a[3, 3], 3)
        self.assertEqual(self.a.row(2), (4, 3, 1))
        self.assertEqual(self.a.column(3), (1, 1, 3))
        with pytest.raises(IndexOutOfRangeError):
            _ = self.a[0, 1]
        with pytest.raises(IndexOutOfRangeError):
            _ = self.a[1, 4]

    def test_identity_and_zeros(self):
        identity = Matrix.identity(3)
        self.assertEqual(identity @ self.a, self.a)
        self.assertEqual(self.a @ identity, self.a)
        self.assertTrue(Matrix.zeros(2, 3).is_zero())
        self.assertFalse(identity.is_zero())

    def test_product(self):
        left = Matrix([["1/2", 0], [0, 1]])
        right = Matrix([[2, 1], [4, 3]])
        self.assertEqual(left @ right, Matrix([[1, "1/2"], [4, 3]]))
        self.assertIsInstance((left @ right)[1, 2], Fraction)
        with pytest.raises(DimensionMismatchError):
            _ = Matrix([[1, 2]]) @ Matrix([[1, 2]])

    def test_builders(self):
        self.assertEqual(self.a.transpose()[1, 2], 4)
        self.assertEqual(self.a.block([1, 2], [2, 3]), Matrix([[1, 1], [3, 1]]))
        self.assertEqual(self.a.swap_rows(1, 2).row(1), (4, 3, 1))
        self.assertEqual(self.a.swap_columns(1, 3).column(1), (1, 1, 3))
        changed = self.a.with_entry(2, 2, "1/3")
        self.assertEqual(changed[2, 2], Fraction(1, 3))
        # immutability
        self.assertEqual(self.a[2, 2], 3)

    def test_max_abs_in_block(self):
        self.assertEqual(self.a.max_abs_in_block(1, 1), (2, 1, 4))
        self.assertEqual(self.a.max_abs_in_block(2, 2), (2, 2, 3))
        ties = Matrix([[0, -2], [2, 1]])
        self.assertEqual(ties.max_abs_in_block(1, 1), (1, 2, -2))

    def test_equality_hash_pickle(self):
        same = Matrix([[2, 1, 1], [4, 3, 1], [2, 2, 3]])
        self.assertEqual(self.a, same)
        self.assertEqual(hash(self.a), hash(same))
        self.assertNotEqual(self.a, self.a.transpose())
        self.assertNotEqual(Matrix([[1, 2]]), Matrix([[1], [2]]))
        restored = pickle.loads(pickle.dumps(self.a))
        self.assertEqual(restored, self.a)
        self.assertEqual(hash(restored), hash(self.a))

    def test_text(self):
        b = Matrix([["1/2", -3], [0, 7]])
        self.assertEqual(str(b), "1/2 -3\n0 7")
        self.assertEqual(repr(b), "Matrix([['1/2', '-3'], ['0', '7']])")


if __name__ == '__main__':
    unittest.main()
