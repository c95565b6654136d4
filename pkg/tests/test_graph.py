"""Tests for undirected graphs and the enumeration predicates."""

import math
import unittest

import networkx as nx

from edge_ideal_analysis.exceptions import BoundExceeded, ValidationError
from edge_ideal_analysis.graph import (
    Graph,
    girth,
    independence_number,
    is_shedding_vertex,
    is_vertex_decomposable,
    is_well_covered,
    maximal_independent_sets,
    minimal_vertex_covers,
    shortest_cycle,
)


def cycle(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges([f"v{i}" for i in range(n)], edges)


def path(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges([f"v{i}" for i in range(n)], edges)


def edgeless(n: int) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(n)], [])


class TestGraph(unittest.TestCase):
    """Test suite for the Graph value type."""

    def test_edges_are_sorted_pairs(self):
        """Test that edges come back once each, smaller id first."""
        graph = Graph.from_edges(["a", "b", "c"], [(1, 0), (2, 1), (0, 1)])
        self.assertEqual(graph.edges, ((0, 1), (1, 2)))
        self.assertEqual(graph.degree(1), 2)
        self.assertEqual(graph.neighbors(1), (0, 2))

    def test_loops_are_rejected(self):
        """Test that a loop violates the graph invariants."""
        with self.assertRaises(ValidationError) as context:
            Graph.from_edges(["a"], [(0, 0)])
        self.assertEqual(context.exception.invariant, "no-loops")

    def test_duplicate_labels_are_rejected(self):
        """Test that labels must be unique."""
        with self.assertRaises(ValidationError):
            Graph.from_edges(["a", "a"], [(0, 1)])

    def test_unknown_label_is_rejected(self):
        """Test building from label pairs with a label outside the table."""
        with self.assertRaises(ValidationError):
            Graph.from_labeled_edges(["a", "b"], [("a", "c")])

    def test_induced_renumbers_by_sorted_ids(self):
        """Test that induced subgraphs keep labels and renumber vertices."""
        graph = cycle(5).induced([4, 0, 1])
        self.assertEqual(graph.labels, ("v0", "v1", "v4"))
        self.assertEqual(graph.edges, ((0, 1), (0, 2)))

    def test_networkx_conversion(self):
        """Test conversion to and from networkx."""
        petersen = Graph.from_networkx(nx.petersen_graph())
        self.assertEqual(len(petersen.edges), 15)
        self.assertTrue(nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph()))
        self.assertEqual(girth(petersen), 5)
        self.assertEqual(independence_number(petersen), 4)


class TestCycles(unittest.TestCase):
    """Test suite for girth and shortest cycles."""

    def test_five_cycle(self):
        """Test that the 5-cycle has girth 5."""
        self.assertEqual(girth(cycle(5)), 5)
        self.assertEqual(shortest_cycle(cycle(5)), (0, 1, 2, 3, 4))

    def test_tree_has_infinite_girth(self):
        """Test that forests have infinite girth and no cycle."""
        self.assertEqual(girth(path(6)), math.inf)
        self.assertIsNone(shortest_cycle(path(6)))

    def test_chord_shortens_the_cycle(self):
        """Test a 5-cycle with the chord v0-v2."""
        graph = Graph.from_edges(cycle(5).labels, cycle(5).edges + ((0, 2),))
        self.assertEqual(girth(graph), 3)
        self.assertEqual(shortest_cycle(graph), (0, 1, 2))

    def test_shortest_cycle_is_a_cycle(self):
        """Test that the returned cycle closes up in the graph."""
        graph = Graph.from_networkx(nx.circular_ladder_graph(4))
        found = shortest_cycle(graph)
        self.assertEqual(len(found), girth(graph))
        for i, vertex in enumerate(found):
            self.assertTrue(graph.has_edge(vertex, found[(i + 1) % len(found)]))


class TestIndependentSets(unittest.TestCase):
    """Test suite for independent sets, covers and well-coveredness."""

    def test_single_edge(self):
        """Test the maximal independent sets of one edge."""
        self.assertEqual(
            maximal_independent_sets(path(2)), [frozenset({0}), frozenset({1})]
        )

    def test_path_on_four_vertices(self):
        """Test the maximal independent sets of x-y-z-v."""
        self.assertEqual(
            maximal_independent_sets(path(4)),
            [frozenset({0, 2}), frozenset({0, 3}), frozenset({1, 3})],
        )

    def test_edgeless_graph(self):
        """Test that an edgeless graph has one maximal independent set."""
        self.assertEqual(maximal_independent_sets(edgeless(3)), [frozenset({0, 1, 2})])
        self.assertEqual(minimal_vertex_covers(edgeless(3)), [frozenset()])
        self.assertEqual(independence_number(edgeless(4)), 4)

    def test_matches_networkx_cliques_of_the_complement(self):
        """Test enumeration against maximal cliques of the complement graph."""
        for seed in range(8):
            with self.subTest(seed=seed):
                random_graph = nx.gnp_random_graph(9, 0.4, seed=seed)
                graph = Graph.from_networkx(random_graph)
                expected = {
                    frozenset(clique)
                    for clique in nx.find_cliques(nx.complement(random_graph))
                }
                self.assertEqual(set(maximal_independent_sets(graph)), expected)
                sizes = {len(found) for found in expected}
                self.assertEqual(is_well_covered(graph), len(sizes) == 1)

    def test_well_covered(self):
        """Test well-coveredness of small cycles and paths."""
        self.assertTrue(is_well_covered(cycle(5)))
        self.assertTrue(is_well_covered(path(4)))
        self.assertFalse(is_well_covered(path(3)))
        self.assertTrue(is_well_covered(cycle(7)))

    def test_minimal_vertex_covers_of_the_five_cycle(self):
        """Test that covers are the complements of maximal independent sets."""
        covers = minimal_vertex_covers(cycle(5))
        self.assertEqual(len(covers), 5)
        self.assertTrue(all(len(cover) == 3 for cover in covers))
        full = frozenset(range(5))
        self.assertEqual(
            set(covers), {full - found for found in maximal_independent_sets(cycle(5))}
        )

    def test_independence_number(self):
        """Test the independence number of a cycle and a star."""
        star = Graph.from_edges(["c", "a", "b", "d"], [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(independence_number(cycle(5)), 2)
        self.assertEqual(independence_number(star), 3)

    def test_bound_is_enforced(self):
        """Test that enumeration above the bound raises."""
        with self.assertRaises(BoundExceeded) as context:
            maximal_independent_sets(cycle(6), bound=5)
        self.assertEqual(context.exception.bound, 5)
        self.assertEqual(context.exception.size, 6)


class TestDecomposability(unittest.TestCase):
    """Test suite for shedding vertices and vertex decomposability."""

    def test_shedding_vertices(self):
        """Test the shedding condition on an edge, a cycle and a path."""
        self.assertTrue(is_shedding_vertex(path(2), 0))
        for vertex in range(5):
            self.assertTrue(is_shedding_vertex(cycle(5), vertex))
        self.assertFalse(is_shedding_vertex(path(4), 0))
        self.assertTrue(is_shedding_vertex(path(4), 1))

    def test_two_disjoint_edges(self):
        """Test that the other endpoint of an isolated edge keeps v shedding."""
        graph = Graph.from_edges(["a", "b", "c", "d"], [(0, 1), (2, 3)])
        self.assertTrue(is_shedding_vertex(graph, 0))

    def test_vertex_decomposable(self):
        """Test decomposability of edgeless graphs, C5 and C4."""
        self.assertTrue(is_vertex_decomposable(edgeless(3)))
        self.assertTrue(is_vertex_decomposable(cycle(5)))
        self.assertFalse(is_vertex_decomposable(cycle(4)))

    def test_decomposability_bound(self):
        """Test that the recursion bound is enforced."""
        with self.assertRaises(BoundExceeded):
            is_vertex_decomposable(cycle(6), bound=4)


if __name__ == "__main__":
    unittest.main()
