"""Tests for the Stanley-Reisner Cohen-Macaulay oracle."""

import unittest

from edge_ideal_analysis.cm_oracle import (
    is_cohen_macaulay,
    oracle_check,
    polarize,
    reduced_homology_ranks,
    stanley_reisner,
)
from edge_ideal_analysis.document import load_fixture
from edge_ideal_analysis.exceptions import BoundExceeded, NotSquarefree, UnitIdeal
from edge_ideal_analysis.linear_algebra import FieldChoice
from edge_ideal_analysis.models import Bounds
from edge_ideal_analysis.monomial_ideal import (
    Monomial,
    MonomialIdeal,
    minimalize,
    parse_ideal,
)
from edge_ideal_analysis.oriented_graph import edge_ideal

FIVE_CYCLE = "a*b, b*c, c*d, d*e, e*a"
SEVEN_CYCLE = "a*b, b*c, c*d, d*e, e*f, f*g, g*a"
# minimal nonfaces of the six-vertex real projective plane
PROJECTIVE_PLANE = (
    "a*b*c, a*b*e, a*c*d, a*d*f, a*e*f, b*c*f, b*d*e, b*d*f, c*d*e, c*e*f"
)


def ideal(text: str) -> MonomialIdeal:
    return parse_ideal(text)[0]


class TestPolarization(unittest.TestCase):
    """Test suite for polarization."""

    def test_mixed_powers(self):
        """Test that y^2 becomes two copies of y."""
        parsed, names = parse_ideal("x*y^2")
        polarized = polarize(parsed)
        self.assertEqual(polarized.lineage, ((0, 1), (1, 1), (1, 2)))
        self.assertEqual(polarized.names(names), ("x_1", "y_1", "y_2"))
        self.assertEqual(
            polarized.ideal, minimalize([Monomial.from_variables([0, 1, 2])], 3)
        )

    def test_pure_power(self):
        """Test the polarization of x^2."""
        polarized = polarize(ideal("x^2"))
        self.assertEqual(polarized.lineage, ((0, 1), (0, 2)))
        self.assertEqual(polarized.ideal.generators, (Monomial.from_variables([0, 1]),))

    def test_squarefree_is_unchanged(self):
        """Test that a squarefree ideal polarizes to itself."""
        parsed = ideal(FIVE_CYCLE)
        self.assertEqual(polarize(parsed).ideal, parsed)


class TestStanleyReisner(unittest.TestCase):
    """Test suite for Stanley-Reisner complexes."""

    def test_five_cycle_complex(self):
        """Test that the independence complex of C5 has 11 faces."""
        complex_ = stanley_reisner(ideal(FIVE_CYCLE))
        self.assertEqual(len(complex_.faces), 11)
        self.assertEqual(complex_.dimension, 1)
        self.assertEqual(reduced_homology_ranks(complex_, FieldChoice()), [0, 0, 1])

    def test_single_edge(self):
        """Test the complex of (x1*x2): two points."""
        complex_ = stanley_reisner(ideal("x1*x2"))
        self.assertEqual(complex_.faces, frozenset({0, 1, 2}))

    def test_zero_ideal(self):
        """Test that the zero ideal gives the full simplex."""
        complex_ = stanley_reisner(MonomialIdeal.zero(3))
        self.assertEqual(len(complex_.faces), 8)

    def test_not_squarefree(self):
        """Test that powers are refused."""
        with self.assertRaises(NotSquarefree):
            stanley_reisner(ideal("x^2*y"))

    def test_ground_bound(self):
        """Test that oversized rings are refused."""
        with self.assertRaises(BoundExceeded) as raised:
            stanley_reisner(ideal(FIVE_CYCLE), bounds=Bounds(polarized_ground=4))
        self.assertEqual(raised.exception.what, "polarized_ground")


class TestOracle(unittest.TestCase):
    """Test suite for Reisner's criterion."""

    def test_cycles(self):
        """Test that C5 is Cohen-Macaulay and C7 is not."""
        self.assertTrue(is_cohen_macaulay(ideal(FIVE_CYCLE)))
        result = oracle_check(ideal(SEVEN_CYCLE))
        self.assertFalse(result.cohen_macaulay)
        self.assertIsNotNone(result.witness)
        self.assertEqual(result.polarized_ground, 7)

    def test_weighted_directed_cycle(self):
        """Test that the directed 5-cycle with weights 2 is not Cohen-Macaulay."""
        graph = load_fixture("directed-5-cycle-w2").graph
        result = oracle_check(edge_ideal(graph))
        self.assertFalse(result.cohen_macaulay)
        self.assertEqual(result.polarized_ground, 10)

    def test_weights_one(self):
        """Test that the unweighted directed 5-cycle is Cohen-Macaulay."""
        graph = load_fixture("directed-5-cycle-w1").graph
        self.assertTrue(is_cohen_macaulay(edge_ideal(graph)))

    def test_whiskered_paths(self):
        """Test the two whiskered path documents."""
        for name, expected in (
            ("whiskered-path-cm", True),
            ("whiskered-path-not-cm", False),
        ):
            with self.subTest(name=name):
                graph = load_fixture(name).graph
                self.assertEqual(is_cohen_macaulay(edge_ideal(graph)), expected)

    def test_mixed_ideal(self):
        """Test that an ideal with an embedded prime is not Cohen-Macaulay."""
        self.assertFalse(is_cohen_macaulay(ideal("x*y^2, y*z^2")))

    def test_unit_ideal(self):
        """Test that the unit ideal is refused."""
        with self.assertRaises(UnitIdeal):
            oracle_check(ideal("1"))

    def test_zero_ideal(self):
        """Test that a polynomial ring is Cohen-Macaulay."""
        self.assertTrue(is_cohen_macaulay(MonomialIdeal.zero(4)))

    def test_face_bound(self):
        """Test that the face bound propagates."""
        with self.assertRaises(BoundExceeded):
            oracle_check(ideal(SEVEN_CYCLE), bounds=Bounds(homology_faces=10))

    def test_projective_plane_depends_on_the_field(self):
        """Test the triangulated projective plane over three fields."""
        plane = ideal(PROJECTIVE_PLANE)
        self.assertTrue(oracle_check(plane, FieldChoice()).cohen_macaulay)
        self.assertTrue(oracle_check(plane, FieldChoice(3)).cohen_macaulay)
        result = oracle_check(plane, FieldChoice(2))
        self.assertFalse(result.cohen_macaulay)
        self.assertEqual(result.field, "p:2")
        self.assertEqual(result.witness.face, ())
        self.assertEqual((result.witness.dimension, result.witness.rank), (1, 1))


if __name__ == "__main__":
    unittest.main()
