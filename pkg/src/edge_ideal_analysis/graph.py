"""Simple undirected graphs and the classical predicates used by the classifier.

Vertices are dense integer ids ``0..n-1`` with a label table. Vertex sets are
Python ints used as bitsets, which keeps the exhaustive enumerations (independent
sets, covers, decomposability) cheap at desk scale.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import BoundExceeded, ValidationError
from .models import DEFAULT_DECOMPOSABILITY_BOUND, DEFAULT_SUBSET_BOUND

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Builds a bitset from vertex ids."""
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


def vertex_tuple(mask: int) -> Tuple[int, ...]:
    """Returns the vertices of a bitset as a sorted tuple."""
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on labeled vertices.

    Attributes:
        labels: One label per vertex; the position is the vertex id.
        adjacency: Neighbor bitset per vertex.
    """

    labels: Tuple[str, ...]
    adjacency: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise ValidationError("label-table", "length mismatch")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("unique-labels", ", ".join(self.labels))
        full = (1 << len(self.labels)) - 1
        for vertex, neighbors in enumerate(self.adjacency):
            if neighbors >> vertex & 1:
                raise ValidationError("no-loops", self.labels[vertex])
            if neighbors & ~full:
                raise ValidationError("edge-in-range", self.labels[vertex])
            for other in iter_bits(neighbors):
                if not self.adjacency[other] >> vertex & 1:
                    raise ValidationError(
                        "symmetric-adjacency",
                        f"{self.labels[vertex]}-{self.labels[other]}",
                    )

    @classmethod
    def from_edges(
        cls, labels: Sequence[str], edges: Iterable[Tuple[int, int]]
    ) -> Graph:
        """Builds a graph from vertex ids; duplicate edges collapse."""
        adjacency = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValidationError("no-loops", str(labels[u]))
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise ValidationError("edge-in-range", f"{u}-{v}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(tuple(str(label) for label in labels), tuple(adjacency))

    @classmethod
    def from_labeled_edges(
        cls, labels: Sequence[str], edges: Iterable[Tuple[str, str]]
    ) -> Graph:
        """Builds a graph from label pairs."""
        index = {label: position for position, label in enumerate(labels)}
        try:
            pairs = [(index[u], index[v]) for u, v in edges]
        except KeyError as exception:
            raise ValidationError("known-labels", str(exception)) from exception
        return cls.from_edges(labels, pairs)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Converts a networkx graph; node order is the iteration order."""
        nodes = list(graph.nodes)
        index = {node: position for position, node in enumerate(nodes)}
        return cls.from_edges(
            [str(node) for node in nodes],
            ((index[u], index[v]) for u, v in graph.edges),
        )

    def to_networkx(self) -> nx.Graph:
        """Converts to a networkx graph whose nodes are vertex ids."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple(
            (u, v)
            for u, neighbors in enumerate(self.adjacency)
            for v in iter_bits(neighbors)
            if u < v
        )

    @cached_property
    def label_index(self) -> Dict[str, int]:
        return {label: position for position, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        """Returns the vertex id of a label."""
        try:
            return self.label_index[label]
        except KeyError as exception:
            raise ValidationError("known-labels", label) from exception

    def degree(self, vertex: int) -> int:
        return self.adjacency[vertex].bit_count()

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        return vertex_tuple(self.adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def names(self, vertices: Iterable[int]) -> Tuple[str, ...]:
        """Maps vertex ids to labels."""
        return tuple(self.labels[vertex] for vertex in vertices)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Returns the induced subgraph; new ids follow the sorted old ids."""
        kept = sorted(set(vertices))
        position = {old: new for new, old in enumerate(kept)}
        edges = [
            (position[u], position[v])
            for u, v in self.edges
            if u in position and v in position
        ]
        return Graph.from_edges([self.labels[old] for old in kept], edges)

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        """Returns ``G \\ S`` with ids renumbered as in `induced`."""
        removed = set(vertices)
        return self.induced(v for v in range(self.vertex_count) if v not in removed)

    def delete_closed_neighborhood(self, vertex: int) -> Graph:
        """Returns ``G \\ N[v]``."""
        return self.delete_vertices(self.neighbors(vertex) + (vertex,))

    def is_vertex_cover(self, cover: int) -> bool:
        """True iff every edge has an endpoint in the bitset ``cover``."""
        outside = self.full_mask & ~cover
        return all(not self.adjacency[v] & outside for v in iter_bits(outside))


def _bfs_shortest_cycle(graph: Graph) -> Tuple[float, Optional[Tuple[int, ...]]]:
    """BFS from every root; the best closing edge overall is a shortest cycle."""
    best_length: float = math.inf
    best_cycle: Optional[List[int]] = None
    for root in range(graph.vertex_count):
        distance = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            current = queue.popleft()
            if 2 * distance[current] >= best_length:
                break
            for other in iter_bits(graph.adjacency[current]):
                if other not in distance:
                    distance[other] = distance[current] + 1
                    parent[other] = current
                    queue.append(other)
                elif other != parent[current]:
                    length = distance[current] + distance[other] + 1
                    if length < best_length:
                        best_length = length
                        # at minimum length the two root paths meet only at the root
                        left = _path_to_root(parent, current)
                        right = _path_to_root(parent, other)
                        best_cycle = left + right[:-1][::-1]
    if best_cycle is None:
        return math.inf, None
    return best_length, _canonical_cycle(best_cycle)


def _path_to_root(parent: Dict[int, int], vertex: int) -> List[int]:
    path = []
    while vertex != -1:
        path.append(vertex)
        vertex = parent[vertex]
    return path


def _canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotates to the smallest id and picks the direction with the smaller successor."""
    start = cycle.index(min(cycle))
    rotated = list(cycle[start:]) + list(cycle[:start])
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


def girth(graph: Graph) -> float:
    """Returns the length of a shortest cycle, ``math.inf`` for forests."""
    return _bfs_shortest_cycle(graph)[0]


def shortest_cycle(graph: Graph) -> Optional[Tuple[int, ...]]:
    """Returns a shortest cycle as an ordered vertex tuple, or None for forests."""
    return _bfs_shortest_cycle(graph)[1]


def connected_components(graph: Graph, within: Optional[int] = None) -> List[int]:
    """Returns the connected components of the induced subgraph on ``within``."""
    remaining = graph.full_mask if within is None else within
    components = []
    while remaining:
        seed = remaining & -remaining
        component = seed
        frontier = seed
        while frontier:
            reached = 0
            for vertex in iter_bits(frontier):
                reached |= graph.adjacency[vertex]
            frontier = reached & remaining & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components


def _maximal_independent_masks(adjacency: Sequence[int], within: int) -> List[int]:
    """Bron-Kerbosch with pivoting on the complement graph, restricted to ``within``."""
    found: List[int] = []

    def expand(chosen: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(chosen)
            return
        pivot = next(iter_bits(candidates | excluded))
        for vertex in iter_bits(candidates & (adjacency[pivot] | 1 << pivot)):
            blocked = adjacency[vertex] | 1 << vertex
            expand(chosen | 1 << vertex, candidates & ~blocked, excluded & ~blocked)
            candidates &= ~(1 << vertex)
            excluded |= 1 << vertex

    expand(0, within, 0)
    return found


def _check_bound(graph: Graph, bound: int) -> None:
    if graph.vertex_count > bound:
        raise BoundExceeded("vertex_count", graph.vertex_count, bound)


def _as_sorted_sets(masks: Iterable[int]) -> List[frozenset]:
    return [frozenset(vertex_tuple(mask)) for mask in sorted(masks, key=vertex_tuple)]


def maximal_independent_sets(
    graph: Graph, *, bound: int = DEFAULT_SUBSET_BOUND
) -> List[frozenset]:
    """Enumerates all maximal independent sets.

    Args:
        graph: The graph to enumerate.
        bound: Largest vertex count accepted.

    Returns:
        Vertex-id sets, ordered by their sorted vertex tuples.

    Raises:
        BoundExceeded: If the graph has more than ``bound`` vertices.
    """
    _check_bound(graph, bound)
    return _as_sorted_sets(_maximal_independent_masks(graph.adjacency, graph.full_mask))


def independence_number(graph: Graph, *, bound: int = DEFAULT_SUBSET_BOUND) -> int:
    _check_bound(graph, bound)
    masks = _maximal_independent_masks(graph.adjacency, graph.full_mask)
    return max(mask.bit_count() for mask in masks)


def is_well_covered(graph: Graph, *, bound: int = DEFAULT_SUBSET_BOUND) -> bool:
    """True iff every maximal independent set has the same size."""
    _check_bound(graph, bound)
    sizes = {
        mask.bit_count()
        for mask in _maximal_independent_masks(graph.adjacency, graph.full_mask)
    }
    return len(sizes) <= 1


def minimal_vertex_covers(
    graph: Graph, *, bound: int = DEFAULT_SUBSET_BOUND
) -> List[frozenset]:
    """Returns the complements of the maximal independent sets."""
    _check_bound(graph, bound)
    full = graph.full_mask
    return _as_sorted_sets(
        full & ~mask for mask in _maximal_independent_masks(graph.adjacency, full)
    )


def _is_shedding(adjacency: Sequence[int], within: int, vertex: int) -> bool:
    rest = within & ~(1 << vertex)
    neighbors = adjacency[vertex] & within
    return all(
        mask & neighbors for mask in _maximal_independent_masks(adjacency, rest)
    )


def is_shedding_vertex(graph: Graph, vertex: int) -> bool:
    """True iff every maximal independent set of G minus v meets N(v)."""
    return _is_shedding(graph.adjacency, graph.full_mask, vertex)


def is_vertex_decomposable(
    graph: Graph, *, bound: int = DEFAULT_DECOMPOSABILITY_BOUND
) -> bool:
    """Decides vertex decomposability of the independence complex.

    The recursion is memoized on induced subgraphs (vertex bitsets) for the
    duration of one call.

    Raises:
        BoundExceeded: If the graph has more than ``bound`` vertices.
    """
    _check_bound(graph, bound)
    adjacency = graph.adjacency
    memo: Dict[int, bool] = {}

    def decomposable(within: int) -> bool:
        if within in memo:
            return memo[within]
        if not any(adjacency[v] & within for v in iter_bits(within)):
            memo[within] = True
            return True
        result = False
        for vertex in iter_bits(within):
            if not adjacency[vertex] & within:
                continue
            if not _is_shedding(adjacency, within, vertex):
                continue
            closed = adjacency[vertex] | 1 << vertex
            if decomposable(within & ~(1 << vertex)) and decomposable(within & ~closed):
                result = True
                break
        memo[within] = result
        return result

    verdict = decomposable(graph.full_mask)
    logger.debug(
        "Vertex decomposability of %d-vertex graph: %s", graph.vertex_count, verdict
    )
    return verdict
