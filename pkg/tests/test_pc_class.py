"""Tests for basic 5-cycles and PC-class decompositions."""

import unittest

import networkx as nx

from edge_ideal_analysis.document import load_fixture
from edge_ideal_analysis.graph import Graph
from edge_ideal_analysis.models import NotInPC, PCDecomposition
from edge_ideal_analysis.pc_class import (
    basic_five_cycles,
    components_in_pc,
    induced_five_cycles,
    pc_decomposition,
    pc_decomposition_without_isolated,
    pendant_edges,
)


def graph(n: int, edges) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(n)], edges)


FIVE_CYCLE = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
# the 5-cycles 0-1-4-6-3 and 0-2-5-6-3 share the path 0-3-6
SHARED_PATH_CYCLES = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]


class TestFiveCycles(unittest.TestCase):
    """Test suite for induced and basic 5-cycles."""

    def test_five_cycle(self):
        """Test that C5 has one canonical induced 5-cycle."""
        self.assertEqual(induced_five_cycles(graph(5, FIVE_CYCLE)), [(0, 1, 2, 3, 4)])
        self.assertEqual(basic_five_cycles(graph(5, FIVE_CYCLE)), [(0, 1, 2, 3, 4)])

    def test_chorded_cycle(self):
        """Test that a chord destroys the induced 5-cycle."""
        chorded = graph(5, FIVE_CYCLE + [(0, 2)])
        self.assertEqual(induced_five_cycles(chorded), [])

    def test_petersen(self):
        """Test that the Petersen graph has 12 induced, none basic, 5-cycles."""
        petersen = Graph.from_networkx(nx.petersen_graph())
        cycles = induced_five_cycles(petersen)
        self.assertEqual(len(cycles), 12)
        self.assertEqual(len(set(cycles)), 12)
        self.assertEqual(basic_five_cycles(petersen), [])

    def test_adjacent_heavy_vertices(self):
        """Test that whiskers at two adjacent cycle vertices make C5 non-basic."""
        whiskered = graph(7, FIVE_CYCLE + [(0, 5), (1, 6)])
        self.assertEqual(induced_five_cycles(whiskered), [(0, 1, 2, 3, 4)])
        self.assertEqual(basic_five_cycles(whiskered), [])

    def test_non_adjacent_heavy_vertices(self):
        """Test that whiskers at two non-adjacent cycle vertices keep C5 basic."""
        whiskered = graph(7, FIVE_CYCLE + [(0, 5), (2, 6)])
        self.assertEqual(basic_five_cycles(whiskered), [(0, 1, 2, 3, 4)])


class TestPendantEdges(unittest.TestCase):
    """Test suite for pendant edge detection."""

    def test_single_edge(self):
        """Test that an isolated edge is reported once."""
        self.assertEqual(pendant_edges(graph(2, [(0, 1)])), [(0, 1)])

    def test_path(self):
        """Test the two pendant edges of P4."""
        p4 = graph(4, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(pendant_edges(p4), [(1, 0), (2, 3)])

    def test_cycle_has_none(self):
        """Test that cycles have no leaves."""
        self.assertEqual(pendant_edges(graph(5, FIVE_CYCLE)), [])


class TestPCDecomposition(unittest.TestCase):
    """Test suite for PC membership."""

    def test_single_edge(self):
        """Test that one edge is a pendant matching."""
        outcome = pc_decomposition(graph(2, [(0, 1)]))
        self.assertIsInstance(outcome, PCDecomposition)
        self.assertEqual(outcome.pendant_matching, ((0, 1),))
        self.assertEqual(outcome.basic_cycles, ())

    def test_five_cycle(self):
        """Test that C5 is one basic cycle."""
        outcome = pc_decomposition(graph(5, FIVE_CYCLE))
        self.assertEqual(outcome.basic_cycles, ((0, 1, 2, 3, 4),))
        self.assertEqual(outcome.cycle_vertices, frozenset(range(5)))
        self.assertEqual(outcome.pendant_vertices, frozenset())

    def test_whiskered_cycle(self):
        """Test C5 with a pendant path of length two at one vertex."""
        outcome = pc_decomposition(graph(7, FIVE_CYCLE + [(0, 5), (5, 6)]))
        self.assertIsInstance(outcome, PCDecomposition)
        self.assertEqual(outcome.pendant_matching, ((5, 6),))
        self.assertEqual(outcome.basic_cycles, ((0, 1, 2, 3, 4),))

    def test_seven_cycle_is_uncovered(self):
        """Test that C7 has neither pendant edges nor 5-cycles."""
        seven = graph(7, [(i, (i + 1) % 7) for i in range(7)])
        outcome = pc_decomposition(seven)
        self.assertIsInstance(outcome, NotInPC)
        self.assertEqual(outcome.clause, "uncovered")
        self.assertEqual(outcome.vertices, tuple(range(7)))

    def test_overlap(self):
        """Test a pendant edge hanging directly off a basic 5-cycle."""
        outcome = pc_decomposition(load_fixture("five-cycle-whisker").graph.underlying)
        self.assertEqual(outcome.clause, "overlap")
        self.assertEqual(outcome.vertices, (0,))

    def test_basic_cycles_sharing_vertices(self):
        """Test two basic 5-cycles glued along a path of length two."""
        glued = graph(7, SHARED_PATH_CYCLES)
        self.assertEqual(basic_five_cycles(glued), [(0, 1, 4, 6, 3), (0, 2, 5, 6, 3)])
        outcome = pc_decomposition(glued)
        self.assertIsInstance(outcome, NotInPC)
        self.assertEqual(outcome.clause, "cycle-overlap")
        self.assertEqual(outcome.vertices, (0, 3, 6))
        self.assertEqual(components_in_pc(glued).clause, "cycle-overlap")

    def test_star(self):
        """Test that K_{1,3} has no perfect pendant matching."""
        outcome = pc_decomposition(graph(4, [(0, 1), (0, 2), (0, 3)]))
        self.assertEqual(outcome.clause, "pendant-matching")
        self.assertEqual(outcome.vertices, (0,))

    def test_isolated_vertex(self):
        """Test that isolated vertices are reported first."""
        outcome = pc_decomposition(graph(3, [(0, 1)]))
        self.assertEqual(outcome.clause, "isolated-vertex")
        self.assertEqual(outcome.vertices, (2,))

    def test_without_isolated_keeps_original_ids(self):
        """Test that ids are mapped back after dropping isolated vertices."""
        outcome = pc_decomposition_without_isolated(graph(3, [(1, 2)]))
        self.assertEqual(outcome.pendant_matching, ((1, 2),))
        seven = graph(8, [(i, i % 7 + 1) for i in range(1, 8)])
        failure = pc_decomposition_without_isolated(seven)
        self.assertEqual(failure.clause, "uncovered")
        self.assertEqual(failure.vertices, tuple(range(1, 8)))

    def test_components(self):
        """Test the per-component membership test."""
        self.assertTrue(components_in_pc(graph(3, [(1, 2)])))
        self.assertTrue(components_in_pc(graph(1, [])))
        star = graph(4, [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(components_in_pc(star).clause, "pendant-matching")


if __name__ == "__main__":
    unittest.main()
