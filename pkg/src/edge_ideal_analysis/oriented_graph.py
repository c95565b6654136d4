"""Weighted oriented graphs, their edge ideals and the strong-cover unmixedness test.

An oriented graph carries an orientation on every edge of its underlying graph
and a positive weight on every vertex. The edge ideal has one generator
``x * y^w(y)`` per directed edge ``(x, y)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .exceptions import BoundExceeded, MissingOrientation, NotACover, ValidationError
from .graph import Graph, _maximal_independent_masks, iter_bits, mask_of, vertex_tuple
from .models import (
    DEFAULT_SUBSET_BOUND,
    CoverPartition,
    NotWellCovered,
    StrongCoverWitness,
    UnmixedResult,
)
from .monomial_ideal import Monomial, MonomialIdeal, minimalize

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
VertexSelection = Union[int, Iterable[int]]


def _as_mask(vertices: VertexSelection) -> int:
    return vertices if isinstance(vertices, int) else mask_of(vertices)


@dataclass(frozen=True)
class OrientedGraph:
    """A vertex-weighted oriented graph.

    Attributes:
        underlying: The underlying simple graph.
        arcs: Directed edges as ``(tail, head)`` vertex ids.
        weights: Positive weight per vertex id.
    """

    underlying: Graph
    arcs: FrozenSet[Arc]
    weights: Tuple[int, ...]

    def __post_init__(self):
        graph = self.underlying
        labels = graph.labels
        if len(self.weights) != graph.vertex_count:
            raise ValidationError("weight-table", "one weight per vertex required")
        for vertex, weight in enumerate(self.weights):
            if not isinstance(weight, int) or weight < 1:
                raise ValidationError("positive-weights", f"{labels[vertex]}={weight}")
        for tail, head in self.arcs:
            if not (0 <= tail < graph.vertex_count and 0 <= head < graph.vertex_count):
                raise ValidationError("arc-in-range", f"{tail}>{head}")
            if not graph.has_edge(tail, head):
                raise ValidationError(
                    "arc-on-edge", f"{labels[tail]}>{labels[head]} is not an edge"
                )
            if (head, tail) in self.arcs and (
                self.weights[tail] != 1 or self.weights[head] != 1
            ):
                raise ValidationError(
                    "bidirected-weight-one",
                    f"{labels[tail]}-{labels[head]} has both orientations",
                )
        for u, v in graph.edges:
            if (u, v) not in self.arcs and (v, u) not in self.arcs:
                raise MissingOrientation(
                    f"edge {labels[u]}-{labels[v]} has no orientation"
                )

    @classmethod
    def from_arcs(
        cls,
        labels: Sequence[str],
        arcs: Iterable[Arc],
        weights: Optional[Sequence[int]] = None,
    ) -> OrientedGraph:
        """Builds an oriented graph whose underlying edges are the given arcs."""
        arcs = frozenset((int(tail), int(head)) for tail, head in arcs)
        underlying = Graph.from_edges(labels, arcs)
        if weights is None:
            weights = [1] * len(labels)
        return cls(underlying, arcs, tuple(weights))

    @classmethod
    def from_labeled_arcs(
        cls,
        labels: Sequence[str],
        arcs: Iterable[Tuple[str, str]],
        weights: Optional[Mapping[str, int]] = None,
    ) -> OrientedGraph:
        """Builds from label pairs; labels missing from ``weights`` get weight 1."""
        index = {label: position for position, label in enumerate(labels)}
        try:
            pairs = [(index[tail], index[head]) for tail, head in arcs]
        except KeyError as exception:
            raise ValidationError("known-labels", str(exception)) from exception
        weights = weights or {}
        return cls.from_arcs(labels, pairs, [weights.get(label, 1) for label in labels])

    @property
    def vertex_count(self) -> int:
        return self.underlying.vertex_count

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.underlying.labels

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.vertex_count
        for tail, head in self.arcs:
            masks[head] |= 1 << tail
        return tuple(masks)

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.vertex_count
        for tail, head in self.arcs:
            masks[tail] |= 1 << head
        return tuple(masks)

    def weight(self, vertex: int) -> int:
        return self.weights[vertex]

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arcs

    def in_neighbors(self, vertex: int) -> Tuple[int, ...]:
        return vertex_tuple(self.in_masks[vertex])

    def out_neighbors(self, vertex: int) -> Tuple[int, ...]:
        return vertex_tuple(self.out_masks[vertex])

    def is_source(self, vertex: int) -> bool:
        """True iff no directed edge enters ``vertex``."""
        return not self.in_masks[vertex]

    def sorted_arcs(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self.arcs))


def normalize(graph: OrientedGraph) -> OrientedGraph:
    """Applies the source-weight and weight-one conventions.

    Every source gets weight 1, then every edge whose endpoints both have weight
    1 gets both orientations. Neither step changes the edge ideal, and the
    result is a fixed point.
    """
    weights = [
        1 if graph.is_source(vertex) else weight
        for vertex, weight in enumerate(graph.weights)
    ]
    arcs = set(graph.arcs)
    for u, v in graph.underlying.edges:
        if weights[u] == 1 and weights[v] == 1:
            arcs.update(((u, v), (v, u)))
    normalized = OrientedGraph(graph.underlying, frozenset(arcs), tuple(weights))
    if normalized != graph:
        logger.debug(
            "Normalized oriented graph on %d vertices (%d -> %d arcs)",
            graph.vertex_count,
            len(graph.arcs),
            len(arcs),
        )
    return normalized


def edge_monomial(graph: OrientedGraph, u: int, v: int) -> Monomial:
    """The monomial of the edge ``uv`` under its orientation.

    Raises:
        MissingOrientation: If ``uv`` is not an oriented edge.
    """
    forward, backward = graph.has_arc(u, v), graph.has_arc(v, u)
    if forward and backward:
        return Monomial.from_variables((u, v))
    if forward:
        return Monomial.variable(u) * Monomial.variable(v, graph.weight(v))
    if backward:
        return Monomial.variable(v) * Monomial.variable(u, graph.weight(u))
    raise MissingOrientation(f"{u}-{v} is not an oriented edge")


def edge_ideal(graph: OrientedGraph) -> MonomialIdeal:
    """The ideal generated by ``x * y^w(y)`` for every directed edge ``(x, y)``."""
    return minimalize(
        (
            Monomial.variable(tail) * Monomial.variable(head, graph.weight(head))
            for tail, head in graph.arcs
        ),
        graph.vertex_count,
    )


def underlying_ideal(graph: OrientedGraph) -> MonomialIdeal:
    """The squarefree edge ideal of the underlying graph."""
    return minimalize(
        (Monomial.from_variables(edge) for edge in graph.underlying.edges),
        graph.vertex_count,
    )


def induced_subgraph(graph: OrientedGraph, vertices: Iterable[int]) -> OrientedGraph:
    """Restricts to ``vertices``, inheriting directions and weights.

    New vertex ids follow the sorted old ids.
    """
    kept = sorted(set(vertices))
    position = {old: new for new, old in enumerate(kept)}
    arcs = frozenset(
        (position[tail], position[head])
        for tail, head in graph.arcs
        if tail in position and head in position
    )
    return OrientedGraph(
        graph.underlying.induced(kept),
        arcs,
        tuple(graph.weights[old] for old in kept),
    )


def delete_vertices(graph: OrientedGraph, vertices: Iterable[int]) -> OrientedGraph:
    removed = set(vertices)
    return induced_subgraph(
        graph, (v for v in range(graph.vertex_count) if v not in removed)
    )


def remove_edges(
    graph: OrientedGraph, edges: Iterable[Tuple[int, int]]
) -> OrientedGraph:
    """Drops the given underlying edges together with their orientations."""
    dropped = {frozenset(edge) for edge in edges}
    kept_edges = [
        edge for edge in graph.underlying.edges if frozenset(edge) not in dropped
    ]
    arcs = frozenset(arc for arc in graph.arcs if frozenset(arc) not in dropped)
    return OrientedGraph(
        Graph.from_edges(graph.labels, kept_edges), arcs, graph.weights
    )


def add_pendant(
    graph: OrientedGraph,
    vertex: int,
    leaf_label: str,
    leaf_weight: int = 1,
    *,
    into_vertex: bool = True,
) -> OrientedGraph:
    """Attaches a new leaf to ``vertex``.

    Args:
        graph: The oriented graph.
        vertex: Attachment vertex.
        leaf_label: Label of the new leaf; it receives the next id.
        leaf_weight: Weight of the new leaf.
        into_vertex: Orient the whisker as ``(leaf, vertex)``; otherwise
            ``(vertex, leaf)``.
    """
    leaf = graph.vertex_count
    arc = (leaf, vertex) if into_vertex else (vertex, leaf)
    labels = graph.labels + (leaf_label,)
    return OrientedGraph(
        Graph.from_edges(labels, graph.underlying.edges + ((vertex, leaf),)),
        graph.arcs | {arc},
        graph.weights + (leaf_weight,),
    )


def with_weights(
    graph: OrientedGraph, weights: Union[Sequence[int], Mapping[str, int]]
) -> OrientedGraph:
    """Reweights by id sequence or by label mapping (unlisted labels keep theirs).

    Arcs that become invalid under the new weights (both orientations on a pair
    that is no longer weight one) keep only their lower-to-higher direction.
    """
    if isinstance(weights, Mapping):
        new = tuple(
            weights.get(label, old) for label, old in zip(graph.labels, graph.weights)
        )
    else:
        new = tuple(weights)
    arcs = set(graph.arcs)
    for u, v in graph.underlying.edges:
        if (u, v) in arcs and (v, u) in arcs and (new[u] != 1 or new[v] != 1):
            arcs.discard((v, u))
    return OrientedGraph(graph.underlying, frozenset(arcs), new)


def _partition_masks(graph: OrientedGraph, cover: int) -> Tuple[int, int, int]:
    outside = graph.underlying.full_mask & ~cover
    l1 = l2 = l3 = 0
    for vertex in iter_bits(cover):
        bit = 1 << vertex
        if graph.out_masks[vertex] & outside:
            l1 |= bit
        elif graph.in_masks[vertex] & outside:
            l2 |= bit
        else:
            l3 |= bit
    return l1, l2, l3


def _require_cover(graph: OrientedGraph, cover: int) -> None:
    if not graph.underlying.is_vertex_cover(cover):
        raise NotACover(
            "{" + ", ".join(graph.underlying.names(iter_bits(cover))) + "} "
            "is not a vertex cover"
        )


def cover_partition(graph: OrientedGraph, cover: VertexSelection) -> CoverPartition:
    """Splits a vertex cover into L1, L2 and L3.

    L1 holds members with a directed edge leaving the cover, L2 the other
    members with a directed edge entering from outside, and L3 the members whose
    whole neighborhood lies in the cover.

    Raises:
        NotACover: If ``cover`` misses an edge.
    """
    mask = _as_mask(cover)
    _require_cover(graph, mask)
    l1, l2, l3 = _partition_masks(graph, mask)
    return CoverPartition(
        cover=frozenset(iter_bits(mask)),
        l1=frozenset(iter_bits(l1)),
        l2=frozenset(iter_bits(l2)),
        l3=frozenset(iter_bits(l3)),
    )


def _is_strong(graph: OrientedGraph, cover: int) -> Tuple[bool, int]:
    _, l2, l3 = _partition_masks(graph, cover)
    if not l3:
        return True, 0
    heavy = mask_of(v for v in iter_bits(l2 | l3) if graph.weights[v] >= 2)
    return all(graph.in_masks[x] & heavy for x in iter_bits(l3)), l3


def is_strong_cover(graph: OrientedGraph, cover: VertexSelection) -> bool:
    """True iff ``cover`` is minimal or every L3 member has a heavy in-neighbor.

    A heavy in-neighbor has weight at least 2 and lies in L2 or L3.

    Raises:
        NotACover: If ``cover`` misses an edge.
    """
    mask = _as_mask(cover)
    _require_cover(graph, mask)
    return _is_strong(graph, mask)[0]


def is_unmixed(
    graph: OrientedGraph, *, bound: int = DEFAULT_SUBSET_BOUND
) -> UnmixedResult:
    """Decides unmixedness of the edge ideal by the strong vertex cover criterion.

    The graph is normalized first. The ideal is unmixed iff the underlying
    graph is well-covered and no strong vertex cover has a nonempty L3. Covers
    are scanned by size, then lexicographically, so the witness is the first
    such cover in that order.

    Args:
        graph: The oriented graph.
        bound: Largest vertex count accepted.

    Returns:
        An `UnmixedResult` carrying a `NotWellCovered` or `StrongCoverWitness`
        when the answer is negative.

    Raises:
        BoundExceeded: If the graph has more than ``bound`` vertices.
    """
    if graph.vertex_count > bound:
        raise BoundExceeded("vertex_count", graph.vertex_count, bound)
    graph = normalize(graph)
    n = graph.vertex_count
    independent = sorted(
        _maximal_independent_masks(
            graph.underlying.adjacency, graph.underlying.full_mask
        ),
        key=vertex_tuple,
    )
    sizes = [mask.bit_count() for mask in independent]
    if len(set(sizes)) > 1:
        smaller = independent[sizes.index(min(sizes))]
        larger = independent[sizes.index(max(sizes))]
        return UnmixedResult(
            False,
            NotWellCovered(frozenset(iter_bits(smaller)), frozenset(iter_bits(larger))),
        )

    # covers with nonempty L3 are not minimal, so they are larger than n - alpha
    alpha = sizes[0] if sizes else 0
    for size in range(n - alpha + 1, n + 1):
        for members in combinations(range(n), size):
            mask = mask_of(members)
            if not graph.underlying.is_vertex_cover(mask):
                continue
            strong, l3 = _is_strong(graph, mask)
            if strong and l3:
                logger.debug("Strong cover with nonempty L3: %s", members)
                return UnmixedResult(
                    False,
                    StrongCoverWitness(frozenset(members), frozenset(iter_bits(l3))),
                )
    return UnmixedResult(True)
