"""Basic 5-cycles and the PC-class decomposition of a graph."""

import logging
from typing import List, Set, Tuple, Union

from .graph import Graph, iter_bits
from .models import NotInPC, PCDecomposition

logger = logging.getLogger(__name__)


def induced_five_cycles(graph: Graph) -> List[Tuple[int, ...]]:
    """Enumerates induced 5-cycles in canonical form.

    Each cycle starts at its smallest vertex and runs in the direction whose
    second vertex is smaller than its last.
    """
    cycles = []
    adjacency = graph.adjacency
    for start in range(graph.vertex_count):
        higher = ~((1 << (start + 1)) - 1)

        def extend(path: List[int]) -> None:
            last = path[-1]
            if len(path) == 5:
                if adjacency[last] >> start & 1 and path[1] < path[4]:
                    cycles.append(tuple(path))
                return
            for nxt in iter_bits(adjacency[last] & higher):
                if nxt in path:
                    continue
                # chords to every earlier vertex except the predecessor are forbidden
                earlier = path[:-1] if len(path) < 4 else path[1:-1]
                if any(adjacency[nxt] >> vertex & 1 for vertex in earlier):
                    continue
                path.append(nxt)
                extend(path)
                path.pop()

        extend([start])
    return sorted(cycles)


def basic_five_cycles(graph: Graph) -> List[Tuple[int, ...]]:
    """Induced 5-cycles with no two cycle-adjacent vertices of degree >= 3."""
    basic = []
    for cycle in induced_five_cycles(graph):
        heavy = [graph.degree(vertex) >= 3 for vertex in cycle]
        if not any(heavy[i] and heavy[(i + 1) % 5] for i in range(5)):
            basic.append(cycle)
    return basic


def pendant_edges(graph: Graph) -> List[Tuple[int, int]]:
    """Edges incident with a leaf, as ``(attachment, leaf)``.

    An isolated edge is reported once, smaller id first.
    """
    edges = []
    for leaf in range(graph.vertex_count):
        if graph.degree(leaf) != 1:
            continue
        attachment = next(iter_bits(graph.adjacency[leaf]))
        if graph.degree(attachment) == 1 and attachment > leaf:
            continue
        edges.append((attachment, leaf))
    return sorted(edges)


def pc_decomposition(graph: Graph) -> Union[PCDecomposition, NotInPC]:
    """Decides membership in the class PC.

    The vertex set must split into the vertices on pendant edges, on which the
    pendant edges form a perfect matching, and the vertices on pairwise disjoint
    basic 5-cycles.

    Returns:
        A `PCDecomposition`, or a `NotInPC` naming the first violated clause.
    """
    isolated = [v for v in range(graph.vertex_count) if graph.degree(v) == 0]
    if isolated:
        return NotInPC(
            "isolated-vertex",
            "isolated vertices lie in neither P nor C",
            tuple(isolated),
        )

    matching = pendant_edges(graph)
    seen: Set[int] = set()
    for attachment, leaf in matching:
        for vertex in (attachment, leaf):
            if vertex in seen:
                return NotInPC(
                    "pendant-matching",
                    "a vertex lies on two pendant edges",
                    (vertex,),
                )
            seen.add(vertex)
    pendant = frozenset(seen)

    cycles = basic_five_cycles(graph)
    for i, first in enumerate(cycles):
        for second in cycles[i + 1 :]:
            shared = set(first) & set(second)
            if shared:
                return NotInPC(
                    "cycle-overlap",
                    "basic 5-cycles share vertices",
                    tuple(sorted(shared)),
                )
    on_cycles = frozenset(vertex for cycle in cycles for vertex in cycle)

    overlap = pendant & on_cycles
    if overlap:
        return NotInPC(
            "overlap",
            "vertices lie on both a pendant edge and a basic 5-cycle",
            tuple(sorted(overlap)),
        )
    uncovered = frozenset(range(graph.vertex_count)) - pendant - on_cycles
    if uncovered:
        return NotInPC(
            "uncovered",
            "vertices lie on no pendant edge and no basic 5-cycle",
            tuple(sorted(uncovered)),
        )

    logger.debug(
        "PC decomposition: %d pendant vertices, %d basic cycles",
        len(pendant),
        len(cycles),
    )
    return PCDecomposition(
        pendant_vertices=pendant,
        cycle_vertices=on_cycles,
        pendant_matching=tuple(matching),
        basic_cycles=tuple(cycles),
    )


def pc_decomposition_without_isolated(graph: Graph) -> Union[PCDecomposition, NotInPC]:
    """`pc_decomposition` after dropping isolated vertices, in ids of ``graph``."""
    keep = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]
    outcome = pc_decomposition(graph.induced(keep))
    if isinstance(outcome, NotInPC):
        return NotInPC(
            outcome.clause,
            outcome.reason,
            tuple(keep[v] for v in outcome.vertices),
        )
    return PCDecomposition(
        pendant_vertices=frozenset(keep[v] for v in outcome.pendant_vertices),
        cycle_vertices=frozenset(keep[v] for v in outcome.cycle_vertices),
        pendant_matching=tuple(
            (keep[attachment], keep[leaf])
            for attachment, leaf in outcome.pendant_matching
        ),
        basic_cycles=tuple(
            tuple(keep[v] for v in cycle) for cycle in outcome.basic_cycles
        ),
    )


def components_in_pc(graph: Graph) -> Union[bool, NotInPC]:
    """True when every connected component is a single vertex or lies in PC.

    On failure the `NotInPC` of the graph without its isolated vertices is
    returned, with vertex ids of ``graph``.
    """
    outcome = pc_decomposition_without_isolated(graph)
    if isinstance(outcome, NotInPC):
        return outcome
    return True
