"""Tests for exact matrix rank."""

import unittest

from edge_ideal_analysis.linear_algebra import FieldChoice, matrix_rank


class TestFieldChoice(unittest.TestCase):
    """Test suite for coefficient field selection."""

    def test_parse(self):
        """Test the accepted spellings."""
        self.assertEqual(FieldChoice.parse("q"), FieldChoice())
        self.assertEqual(FieldChoice.parse("Q"), FieldChoice())
        self.assertEqual(FieldChoice.parse("p:32003"), FieldChoice(32003))
        self.assertEqual(FieldChoice.parse("p:2").label, "p:2")
        self.assertEqual(FieldChoice().characteristic, 0)

    def test_rejects_composites_and_garbage(self):
        """Test that only primes and 'q' are accepted."""
        for text in ("p:4", "p:x", "r", "p:1"):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    FieldChoice.parse(text)


class TestMatrixRank(unittest.TestCase):
    """Test suite for rank over the rationals and prime fields."""

    def test_rank_one(self):
        """Test a matrix with two equal rows."""
        rows = {0: {0: 1, 1: 1}, 1: {0: 1, 1: 1}}
        self.assertEqual(matrix_rank(rows, (2, 2), FieldChoice()), 1)
        self.assertEqual(matrix_rank(rows, (2, 2), FieldChoice(3)), 1)

    def test_rank_depends_on_the_characteristic(self):
        """Test diag(2, 1), which loses rank modulo 2."""
        rows = {0: {0: 2}, 1: {1: 1}}
        self.assertEqual(matrix_rank(rows, (2, 2), FieldChoice()), 2)
        self.assertEqual(matrix_rank(rows, (2, 2), FieldChoice(2)), 1)

    def test_signed_boundary(self):
        """Test the boundary of a triangle, which has rank 2."""
        rows = {0: {0: -1, 1: 1}, 1: {0: -1, 2: 1}, 2: {1: -1, 2: 1}}
        for field in (FieldChoice(), FieldChoice(2), FieldChoice(32003)):
            with self.subTest(field=field.label):
                self.assertEqual(matrix_rank(rows, (3, 3), field), 2)

    def test_large_prime(self):
        """Test ranks modulo a prime far beyond machine-word products."""
        field = FieldChoice.parse(f"p:{2**61 - 1}")
        boundary = {0: {0: -1, 1: 1}, 1: {0: -1, 2: 1}, 2: {1: -1, 2: 1}}
        self.assertEqual(matrix_rank(boundary, (3, 3), field), 2)
        rows = {0: {0: 2**61, 1: 1}, 1: {0: 1, 1: 2**62}}
        # both rows reduce to (1, 1) and (1, 2) modulo 2^61 - 1
        self.assertEqual(matrix_rank(rows, (2, 2), field), 2)
        self.assertEqual(matrix_rank({0: {0: 2**61 - 1}}, (1, 1), field), 0)

    def test_empty(self):
        """Test that empty matrices have rank 0."""
        self.assertEqual(matrix_rank({}, (0, 4), FieldChoice()), 0)
        self.assertEqual(matrix_rank({}, (3, 3), FieldChoice(5)), 0)


if __name__ == "__main__":
    unittest.main()
