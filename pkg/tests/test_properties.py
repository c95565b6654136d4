"""Tests for the property suites."""

import unittest
from unittest.mock import patch

import networkx as nx

from edge_ideal_analysis.graph import Graph
from edge_ideal_analysis.instances import Girth5Family, enumerate_oriented
from edge_ideal_analysis.models import InstanceSpec
from edge_ideal_analysis.monomial_ideal import Monomial, parse_ideal
from edge_ideal_analysis.oriented_graph import OrientedGraph, edge_ideal
from edge_ideal_analysis.properties import (
    associated_prime_violations,
    dimension_identity_violations,
    exponent_comparison_violations,
    field_agreement_findings,
    graph_ideal,
    pc_classification_violations,
    pendant_matching_violations,
    reducible_vertex_violations,
    shedding_identity_violations,
)

PROJECTIVE_PLANE = (
    "a*b*c, a*b*e, a*c*d, a*d*f, a*e*f, b*c*f, b*d*e, b*d*f, c*d*e, c*e*f"
)


def five_cycles():
    return list(enumerate_oriented(InstanceSpec(families=("cycle:5",))))


def sampled_coronas(size: int = 60, seed: int = 11):
    spec = InstanceSpec(
        families=("whiskered",),
        max_n=6,
        orientation_policy="sampled",
        sample_size=size,
        seed=seed,
    )
    return list(enumerate_oriented(spec))


def glued_cycles() -> Graph:
    return Graph.from_edges(
        [f"g{i}" for i in range(7)],
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)],
    )


class TestPropertySuites(unittest.TestCase):
    """Test suite for the property checks on small corpora."""

    @classmethod
    def setUpClass(cls):
        cls.graphs = five_cycles()
        cls.ideals = list(dict.fromkeys(edge_ideal(graph) for graph in cls.graphs))

    def test_reducible_statements(self):
        """Test the reducible-vertex statements on every oriented 5-cycle."""
        self.assertEqual(reducible_vertex_violations(self.graphs), [])

    def test_non_cycles_are_skipped(self):
        """Test that other graphs are ignored by the 5-cycle statements."""
        paths = enumerate_oriented(InstanceSpec(families=("path:4",)))
        self.assertEqual(reducible_vertex_violations(paths), [])

    def test_exponent_comparison(self):
        """Test the colon exponent comparison on 5-cycle ideals."""
        self.assertEqual(exponent_comparison_violations(self.ideals), [])

    def test_mixed_ideals_are_skipped(self):
        """Test that mixed or non-binomial ideals are not checked."""
        mixed, _ = parse_ideal("x*y^2, y*z^2")
        cubic, _ = parse_ideal("x*y*z")
        self.assertEqual(exponent_comparison_violations([mixed, cubic]), [])

    def test_dimension_identity(self):
        """Test dim R/I = max(dim R/(I:f), dim R/(I,f)) on random monomials."""
        self.assertEqual(
            dimension_identity_violations(self.ideals, seed=5, draws=3), []
        )

    def test_shedding_identities(self):
        """Test the shedding-vertex identities on small well-covered graphs."""
        graphs = [
            Graph.from_edges(list("abcde"), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            Graph.from_edges(list("abcd"), [(0, 1), (2, 3)]),
            Graph.from_edges(list("abcd"), [(0, 1), (1, 2), (2, 3)]),
        ]
        self.assertEqual(shedding_identity_violations(graphs), [])

    def test_graph_ideal(self):
        """Test the squarefree edge ideal of a simple graph."""
        path = Graph.from_edges(list("abc"), [(0, 1), (1, 2)])
        self.assertEqual(
            graph_ideal(path).generators,
            (Monomial.from_variables([0, 1]), Monomial.from_variables([1, 2])),
        )

    def test_field_agreement(self):
        """Test that the projective plane is reported over GF(2) only."""
        plane, _ = parse_ideal(PROJECTIVE_PLANE)
        findings = field_agreement_findings([plane], primes=(2,))
        self.assertEqual(len(findings), 1)
        self.assertEqual(findings[0].check, "field-agreement")
        self.assertIn("p:2: False", findings[0].detail)
        self.assertEqual(field_agreement_findings([plane], primes=(3,)), [])


class TestGirthFiveClassification(unittest.TestCase):
    """Test suite for the three descriptions of CM graphs of girth >= 5."""

    def test_girth_five_family(self):
        """Test that PC, decomposability and the oracle agree up to 8 vertices."""
        graphs = [template.underlying for template in Girth5Family(8).templates()]
        self.assertGreater(len(graphs), 50)
        self.assertEqual(pc_classification_violations(graphs), [])

    def test_glued_cycles(self):
        """Test that 5-cycles glued along a path fail all three descriptions."""
        self.assertEqual(pc_classification_violations([glued_cycles()]), [])

    @patch("edge_ideal_analysis.properties.components_in_pc", return_value=True)
    def test_wrong_membership_is_reported(self, mock_membership):
        """Test that a recognizer accepting glued cycles is caught."""
        findings = pc_classification_violations([glued_cycles()])
        self.assertEqual(len(findings), 1)
        self.assertEqual(findings[0].check, "pc-classification")
        self.assertIn("pc: True", findings[0].detail)
        self.assertIn("q: False", findings[0].detail)
        mock_membership.assert_called_once()

    @patch("edge_ideal_analysis.properties.is_cohen_macaulay")
    def test_other_graphs_are_skipped(self, mock_oracle):
        """Test that short girth, disconnected and edgeless graphs are skipped."""
        graphs = [
            Graph.from_edges(list("abcd"), [(0, 1), (1, 2), (2, 3), (3, 0)]),
            Graph.from_edges(list("abcd"), [(0, 1), (2, 3)]),
            Graph.from_edges(list("ab"), []),
        ]
        self.assertEqual(pc_classification_violations(graphs), [])
        mock_oracle.assert_not_called()


class TestPendantMatching(unittest.TestCase):
    """Test suite for the closed form on whiskered graphs."""

    def test_whiskered_edge(self):
        """Test every orientation and weighting of the whiskered edge."""
        graphs = list(
            enumerate_oriented(InstanceSpec(families=("path:4",), weights=(1, 2)))
        )
        self.assertGreater(len(graphs), 20)
        self.assertEqual(pendant_matching_violations(graphs), [])

    def test_sampled_coronas(self):
        """Test seeded samples of coronas on up to 6 vertices."""
        graphs = sampled_coronas()
        self.assertGreater(len(graphs), 20)
        self.assertEqual(pendant_matching_violations(graphs), [])

    @patch("edge_ideal_analysis.properties.is_cohen_macaulay")
    def test_cycles_are_skipped(self, mock_oracle):
        """Test that graphs without a pendant perfect matching are skipped."""
        self.assertEqual(pendant_matching_violations(five_cycles()[:10]), [])
        mock_oracle.assert_not_called()

    @patch("edge_ideal_analysis.properties.pendant_matching_is_cm", return_value=False)
    def test_disagreement_is_reported(self, mock_closed_form):
        """Test that a wrong closed form on a single edge is caught."""
        edge = OrientedGraph.from_arcs(["a", "b"], [(0, 1)], [1, 2])
        findings = pendant_matching_violations([edge])
        self.assertEqual(len(findings), 1)
        self.assertEqual(findings[0].check, "pendant-matching")
        self.assertIn("closed form: False, unmixed: True", findings[0].detail)
        mock_closed_form.assert_called_once()


class TestCorpusSweeps(unittest.TestCase):
    """Test suite for the algebraic identities beyond the 5-cycle corpus."""

    def test_associated_primes_of_small_graphs(self):
        """Test primes against minimal covers on every graph up to 5 vertices."""
        graphs = [
            Graph.from_networkx(graph)
            for graph in nx.graph_atlas_g()
            if 0 < graph.number_of_nodes() <= 5
        ]
        self.assertEqual(len(graphs), 52)
        self.assertEqual(associated_prime_violations(graphs), [])

    def test_mismatch_is_reported(self):
        """Test that a cover set differing from the primes is caught."""
        path = Graph.from_edges(list("abc"), [(0, 1), (1, 2)])
        with patch(
            "edge_ideal_analysis.properties.minimal_vertex_covers",
            return_value=[frozenset({1})],
        ):
            findings = associated_prime_violations([path])
        self.assertEqual([f.check for f in findings], ["associated-primes"])

    def test_corona_ideals(self):
        """Test the exponent comparison and dimension identity on corona ideals."""
        ideals = list(dict.fromkeys(edge_ideal(graph) for graph in sampled_coronas()))
        self.assertEqual(exponent_comparison_violations(ideals), [])
        self.assertEqual(dimension_identity_violations(ideals, seed=9, draws=3), [])


if __name__ == "__main__":
    unittest.main()
