"""Cohen-Macaulay classification of weighted oriented graphs of girth >= 5.

The main entry point is `is_cm_girth5`, which normalizes the graph, guards the
girth, and evaluates the combinatorial conditions in a fixed order:

    pc -> a -> b.i -> b.ii -> b.iii

The first failing clause becomes the certificate of a negative verdict. The
well-covered/unmixed route (`condition_2_route`) is run alongside as a cross
check when the graph is small enough for subset enumeration.
"""

import logging
from typing import List, Optional, Tuple, Union

from .exceptions import (
    BoundExceeded,
    NotA5Cycle,
    NotAPath3,
    NoPendantPerfectMatching,
    RouteDisagreement,
)
from .graph import connected_components, girth, shortest_cycle
from .models import (
    Bounds,
    Certificate,
    ClauseCheck,
    FailedClause,
    NotGirth5,
    NotInPC,
    PCDecomposition,
    ReducibleFinding,
    ReducibleKind,
    UnmixedWitness,
    Verdict,
)
from .oriented_graph import (
    OrientedGraph,
    edge_monomial,
    induced_subgraph,
    is_unmixed,
    normalize,
)
from .pc_class import (
    components_in_pc,
    induced_five_cycles,
    pc_decomposition_without_isolated,
    pendant_edges,
)

logger = logging.getLogger(__name__)

CLAUSE_ORDER = ("pc", "a", "b.i", "b.ii", "b.iii")


def _path3_holds(graph: OrientedGraph, path: Tuple[int, int, int, int]) -> bool:
    """Exponent comparison along the path ``x-y-z-v`` of a normalized graph."""
    x, y, z, v = path
    middle = edge_monomial(graph, y, z)
    left = edge_monomial(graph, x, y)
    right = edge_monomial(graph, z, v)
    return middle.degree(y) <= left.degree(y) and middle.degree(z) <= right.degree(z)


def _path_order(graph: OrientedGraph) -> Tuple[int, int, int, int]:
    underlying = graph.underlying
    degrees = sorted(underlying.degree(v) for v in range(underlying.vertex_count))
    if (
        underlying.vertex_count != 4
        or degrees != [1, 1, 2, 2]
        or len(connected_components(underlying)) != 1
    ):
        raise NotAPath3(f"{underlying.labels} is not a path on four vertices")
    start = min(v for v in range(4) if underlying.degree(v) == 1)
    order = [start]
    while len(order) < 4:
        order.append(next(n for n in underlying.neighbors(order[-1]) if n not in order))
    return tuple(order)


def path3_is_unmixed(graph: OrientedGraph) -> bool:
    """Unmixedness of an oriented path ``x-y-z-v`` of length 3.

    The path is read from its smaller leaf. It is unmixed iff the middle edge
    monomial has y-degree at most that of ``m(xy)`` and z-degree at most that of
    ``m(zv)``.

    Raises:
        NotAPath3: If the underlying graph is not a path on four vertices.
    """
    order = _path_order(graph)
    return _path3_holds(normalize(graph), order)


def _cycle_order(graph: OrientedGraph) -> Tuple[int, ...]:
    underlying = graph.underlying
    if (
        underlying.vertex_count != 5
        or any(underlying.degree(v) != 2 for v in range(5))
        or len(connected_components(underlying)) != 1
    ):
        raise NotA5Cycle(f"{underlying.labels} is not a 5-cycle")
    return induced_five_cycles(underlying)[0]


def _around(cycle: Tuple[int, ...], vertex: int) -> Tuple[int, int, int, int]:
    """``(y, z, u, v)`` for ``x = vertex`` walking the cycle from x's successor."""
    i = cycle.index(vertex)
    return tuple(cycle[(i + step) % 5] for step in range(1, 5))


def _first_kind(
    graph: OrientedGraph, cycle: Tuple[int, ...], x: int
) -> List[ReducibleFinding]:
    y, z, u, v = _around(cycle, x)
    if not _path3_holds(graph, (y, z, u, v)):
        return []
    arc = graph.has_arc
    findings = []
    if arc(y, x) and arc(v, x):
        findings.append(
            ReducibleFinding(x, ReducibleKind.FIRST_KIND_SINK, ((y, x), (v, x)))
        )
    if graph.weight(x) == 1:
        for evidence in (((y, x), (x, v), (u, v)), ((v, x), (x, y), (z, y))):
            if all(arc(*edge) for edge in evidence):
                findings.append(
                    ReducibleFinding(x, ReducibleKind.FIRST_KIND_WEIGHT1, evidence)
                )
    return findings


def _second_kind(
    graph: OrientedGraph, cycle: Tuple[int, ...], x: int
) -> Optional[ReducibleFinding]:
    y, z, u, v = _around(cycle, x)
    evidence = ((x, v), (u, v), (x, y), (z, y))
    if all(graph.has_arc(*edge) for edge in evidence):
        return ReducibleFinding(x, ReducibleKind.SECOND_KIND, evidence)
    return None


def reducible_findings(graph: OrientedGraph) -> List[ReducibleFinding]:
    """Every reducible vertex of an oriented 5-cycle, of every kind, by vertex id.

    Raises:
        NotA5Cycle: If the underlying graph is not a 5-cycle.
    """
    cycle = _cycle_order(graph)
    graph = normalize(graph)
    findings = []
    for x in range(5):
        findings.extend(_first_kind(graph, cycle, x))
        second = _second_kind(graph, cycle, x)
        if second is not None:
            findings.append(second)
    return findings


def find_reducible_vertex(graph: OrientedGraph) -> Optional[ReducibleFinding]:
    """The first reducible vertex (by id) of an oriented 5-cycle, or None.

    Raises:
        NotA5Cycle: If the underlying graph is not a 5-cycle.
    """
    cycle = _cycle_order(graph)
    graph = normalize(graph)
    for x in range(5):
        findings = _first_kind(graph, cycle, x)
        if findings:
            return findings[0]
    return None


def cycle5_is_cm(graph: OrientedGraph) -> bool:
    """An oriented 5-cycle is Cohen-Macaulay iff it has a reducible vertex."""
    return find_reducible_vertex(graph) is not None


def _pendant_clause_holds(graph: OrientedGraph, x: int, leaf: int) -> bool:
    """A heavy x entered from a non-leaf must also be entered by its leaf."""
    if graph.weight(x) == 1:
        return True
    if not any(z != leaf for z in graph.in_neighbors(x)):
        return True
    return graph.has_arc(leaf, x)


def _pendant_pairs(graph: OrientedGraph, matching) -> List[Tuple[int, int]]:
    """``(attachment, leaf)`` pairs, with an isolated edge checked from both ends."""
    pairs = []
    for attachment, leaf in matching:
        pairs.append((attachment, leaf))
        if graph.underlying.degree(attachment) == 1:
            pairs.append((leaf, attachment))
    return pairs


def pendant_matching_is_cm(graph: OrientedGraph) -> bool:
    """Classifies graphs whose pendant edges form a perfect matching.

    Such a graph is Cohen-Macaulay iff every whiskered vertex ``x`` of weight
    other than 1 that receives an edge from a non-leaf also receives its whisker.

    Raises:
        NoPendantPerfectMatching: If the pendant edges are not a perfect matching.
    """
    graph = normalize(graph)
    matching = pendant_edges(graph.underlying)
    covered = [v for edge in matching for v in edge]
    if len(covered) != len(set(covered)) or len(covered) != graph.vertex_count:
        raise NoPendantPerfectMatching(
            f"pendant edges {matching} do not match all {graph.vertex_count} vertices"
        )
    return all(
        _pendant_clause_holds(graph, x, leaf)
        for x, leaf in _pendant_pairs(graph, matching)
    )


def _incoming_clause_holds(
    graph: OrientedGraph, cycle: Tuple[int, ...], x: int
) -> bool:
    """A heavy cycle vertex entered from outside the cycle is a sink on the cycle."""
    if graph.weight(x) == 1:
        return True
    if not any(w not in cycle for w in graph.in_neighbors(x)):
        return True
    y, _, _, v = _around(cycle, x)
    return graph.has_arc(y, x) and graph.has_arc(v, x)


def _evaluate(
    graph: OrientedGraph, decomposition: PCDecomposition
) -> Tuple[List[ClauseCheck], Optional[FailedClause]]:
    passes: List[ClauseCheck] = []

    for x, leaf in _pendant_pairs(graph, decomposition.pendant_matching):
        if not _pendant_clause_holds(graph, x, leaf):
            labels = graph.labels
            return passes, FailedClause(
                "a",
                (x, leaf),
                detail=f"{labels[x]} has weight {graph.weight(x)} and an in-edge "
                f"from a non-leaf but no edge from its leaf {labels[leaf]}",
            )
        passes.append(ClauseCheck("a", (x, leaf)))

    for cycle in decomposition.basic_cycles:
        if not cycle5_is_cm(induced_subgraph(graph, cycle)):
            return passes, FailedClause(
                "b.i", cycle, cycle, "the induced 5-cycle has no reducible vertex"
            )
        passes.append(ClauseCheck("b.i", cycle, cycle))

    for cycle in decomposition.basic_cycles:
        for x in cycle:
            if graph.underlying.degree(x) <= 2:
                continue
            if not _path3_holds(graph, _around(cycle, x)):
                return passes, FailedClause(
                    "b.ii",
                    (x,),
                    cycle,
                    f"the path left by removing {graph.labels[x]} is not unmixed",
                )
            passes.append(ClauseCheck("b.ii", (x,), cycle))

    for cycle in decomposition.basic_cycles:
        for x in cycle:
            if not _incoming_clause_holds(graph, cycle, x):
                return passes, FailedClause(
                    "b.iii",
                    (x,),
                    cycle,
                    f"{graph.labels[x]} has weight {graph.weight(x)} and an in-edge "
                    "from outside the cycle but is not entered by both cycle "
                    "neighbors",
                )
            passes.append(ClauseCheck("b.iii", (x,), cycle))
    return passes, None


def check_condition_3(graph: OrientedGraph) -> Certificate:
    """Evaluates the combinatorial classification and returns a certificate.

    Args:
        graph: An oriented graph; it is normalized first.

    Returns:
        OutOfScope with a short cycle when the girth is below 5, NotCM with the
        first failing clause, or CM with the PC decomposition and every passed
        clause.
    """
    graph = normalize(graph)
    length = girth(graph.underlying)
    if length < 5:
        cycle = shortest_cycle(graph.underlying)
        return Certificate(Verdict.OUT_OF_SCOPE, NotGirth5(cycle, int(length)))

    decomposition = pc_decomposition_without_isolated(graph.underlying)
    if isinstance(decomposition, NotInPC):
        return Certificate(
            Verdict.NOT_CM,
            FailedClause(
                "pc",
                decomposition.vertices,
                detail=f"{decomposition.clause}: {decomposition.reason}",
            ),
        )
    passes = [ClauseCheck("pc", tuple(range(graph.vertex_count)))]
    clause_passes, failure = _evaluate(graph, decomposition)
    passes.extend(clause_passes)
    if failure is not None:
        logger.debug("Clause %s failed on %s", failure.clause, failure.vertices)
        return Certificate(Verdict.NOT_CM, failure, passes)
    return Certificate(Verdict.CM, decomposition, passes)


def recheck_failure(graph: OrientedGraph, failure: FailedClause) -> bool:
    """Re-evaluates a failed clause on its named vertices.

    Returns:
        True iff the clause still fails, i.e. the certificate checks out.
    """
    graph = normalize(graph)
    if failure.clause == "pc":
        return components_in_pc(graph.underlying) is not True
    if failure.clause == "a":
        x, leaf = failure.vertices
        return (
            graph.underlying.degree(leaf) == 1
            and graph.underlying.has_edge(x, leaf)
            and not _pendant_clause_holds(graph, x, leaf)
        )
    if failure.clause == "b.i":
        return not cycle5_is_cm(induced_subgraph(graph, failure.cycle))
    if failure.clause == "b.ii":
        (x,) = failure.vertices
        return not _path3_holds(graph, _around(failure.cycle, x))
    if failure.clause == "b.iii":
        (x,) = failure.vertices
        return not _incoming_clause_holds(graph, failure.cycle, x)
    raise ValueError(f"unknown clause '{failure.clause}'")


def condition_2_route(
    graph: OrientedGraph, *, bounds: Bounds = Bounds()
) -> Tuple[bool, Optional[Union[NotInPC, UnmixedWitness]]]:
    """The PC-membership plus strong-cover route for girth >= 5.

    Returns:
        The verdict and, when negative, a `NotInPC` or an unmixedness witness.

    Raises:
        BoundExceeded: If the graph is above the subset enumeration bound.
    """
    membership = components_in_pc(graph.underlying)
    if membership is not True:
        return False, membership
    result = is_unmixed(graph, bound=bounds.subset_enumeration)
    return result.unmixed, result.witness


def is_cm_girth5(
    graph: OrientedGraph,
    *,
    cross_check: bool = True,
    bounds: Bounds = Bounds(),
) -> Certificate:
    """Classifies an oriented graph of girth >= 5 as Cohen-Macaulay or not.

    Args:
        graph: Any oriented graph; it is normalized first.
        cross_check: Also run `condition_2_route` and require agreement.
        bounds: Enumeration bounds for the cross check.

    Raises:
        BoundExceeded: If ``cross_check`` is set and the graph is too large
            to enumerate.
        RouteDisagreement: If the two routes disagree.
    """
    graph = normalize(graph)
    certificate = check_condition_3(graph)
    if certificate.verdict is Verdict.OUT_OF_SCOPE or not cross_check:
        return certificate
    if graph.vertex_count > bounds.subset_enumeration:
        raise BoundExceeded(
            "vertex_count", graph.vertex_count, bounds.subset_enumeration
        )
    verdict, witness = condition_2_route(graph, bounds=bounds)
    certificate.condition_2 = verdict
    certificate.condition_2_witness = witness
    if verdict != certificate.is_cm:
        raise RouteDisagreement(
            {"condition_3": certificate.is_cm, "condition_2": verdict}
        )
    return certificate
