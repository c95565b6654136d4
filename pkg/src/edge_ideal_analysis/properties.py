"""Property suites run over harness corpora.

Each suite takes instances and returns the `PropertyFinding` entries it could not
confirm. An empty list means the property held on every input. The field
agreement suite is different: a finding there is a datum, since
Cohen-Macaulayness may depend on the characteristic.
"""

import itertools
import logging
from typing import Iterable, List, Optional, Sequence, Set

import numpy as np

from .classifier import pendant_matching_is_cm, reducible_findings
from .cm_oracle import is_cohen_macaulay
from .exceptions import NoPendantPerfectMatching
from .graph import (
    Graph,
    connected_components,
    girth,
    independence_number,
    is_shedding_vertex,
    is_vertex_decomposable,
    is_well_covered,
    minimal_vertex_covers,
)
from .instances import encode_instance
from .linear_algebra import FieldChoice
from .models import Bounds, PropertyFinding, ReducibleKind
from .monomial_ideal import (
    Monomial,
    MonomialIdeal,
    associated_primes,
    dimension,
    is_unmixed_ideal,
    minimalize,
)
from .oriented_graph import (
    OrientedGraph,
    delete_vertices,
    edge_ideal,
    is_unmixed,
    normalize,
)
from .pc_class import components_in_pc

logger = logging.getLogger(__name__)

DEFAULT_FIELD_PRIMES = (2, 32003)


def _is_five_cycle(graph: OrientedGraph) -> bool:
    underlying = graph.underlying
    return (
        underlying.vertex_count == 5
        and len(underlying.edges) == 5
        and all(underlying.degree(v) == 2 for v in range(5))
    )


def reducible_vertex_violations(
    graphs: Iterable[OrientedGraph],
) -> List[PropertyFinding]:
    """Checks the existence statements for reducible vertices on oriented 5-cycles.

    For an unmixed oriented 5-cycle D:

    * if D minus x is unmixed, a reducible vertex lies in x or a non-neighbor of x;
    * if D minus x and D minus w are unmixed for non-adjacent x and w, then x or w
      is reducible of either kind.

    Inputs that are not 5-cycles, or not unmixed, are skipped.
    """
    findings = []
    for graph in graphs:
        if not _is_five_cycle(graph):
            continue
        graph = normalize(graph)
        if not is_unmixed(graph):
            continue
        subject = encode_instance(graph)
        found = reducible_findings(graph)
        first_kind = {
            f.vertex for f in found if f.kind is not ReducibleKind.SECOND_KIND
        }
        any_kind = {f.vertex for f in found}
        minus_one = [bool(is_unmixed(delete_vertices(graph, [x]))) for x in range(5)]
        for x in range(5):
            if not minus_one[x]:
                continue
            far = {
                w for w in range(5) if w != x and not graph.underlying.has_edge(x, w)
            }
            if not first_kind & (far | {x}):
                findings.append(
                    PropertyFinding(
                        "reducible-near-vertex",
                        subject,
                        f"no reducible vertex among {sorted(far | {x})}",
                    )
                )
            for w in sorted(far):
                if w > x and minus_one[w] and not any_kind & {x, w}:
                    findings.append(
                        PropertyFinding(
                            "reducible-pair",
                            subject,
                            f"neither {x} nor {w} is reducible",
                        )
                    )
    return findings


def _is_binomial_support(ideal: MonomialIdeal) -> bool:
    return all(len(generator.support) <= 2 for generator in ideal.generators)


def _colon_candidates(ideal: MonomialIdeal) -> List[Monomial]:
    """1, each variable, and the radicals of single generators and of pairs."""
    candidates: List[Monomial] = [Monomial.one()]
    candidates.extend(Monomial.variable(v) for v in sorted(ideal.support))
    generators = ideal.generators
    for g in generators:
        candidates.append(g.radical())
    for g, h in itertools.combinations(generators, 2):
        candidates.append(g.lcm(h).radical())
    unique = list(dict.fromkeys(candidates))
    return [f for f in unique if not ideal.contains(f)]


def _comparison_failure(colon_ideal: MonomialIdeal) -> Optional[str]:
    """Describes the first exponent pair violating the comparison, if any."""
    generators = colon_ideal.generators
    pure = {next(iter(g.support)) for g in generators if len(g.support) == 1}
    pairs = [g for g in generators if len(g.support) == 2]
    for first, second in itertools.permutations(pairs, 2):
        shared = first.support & second.support
        if len(shared) != 1:
            continue
        (x,) = shared
        if x in pure:
            continue
        (y,) = first.support - {x}
        if any(y in g.support for g in generators if g != first):
            continue
        m, n = first.degree(x), second.degree(x)
        if m < n:
            return f"{first.format()} vs {second.format()}: {m} < {n}"
    return None


def exponent_comparison_violations(
    ideals: Iterable[MonomialIdeal],
) -> List[PropertyFinding]:
    """Checks the exponent comparison for unmixed ideals generated by ``u^a w^b``.

    For each colon ``J = I : f`` with ``f`` not in ``I``: if ``x^m y^p`` and
    ``x^n z^q`` are minimal generators of ``J``, no power of ``x`` lies in ``J``
    and ``y`` occurs in no other minimal generator, then ``m >= n``.
    """
    findings = []
    for ideal in ideals:
        if ideal.is_zero or ideal.is_unit or not _is_binomial_support(ideal):
            continue
        if not is_unmixed_ideal(ideal):
            continue
        for f in _colon_candidates(ideal):
            failure = _comparison_failure(ideal.colon(f))
            if failure is not None:
                findings.append(
                    PropertyFinding(
                        "exponent-comparison",
                        ideal.format(),
                        f"I : {f.format()}: {failure}",
                    )
                )
    return findings


def _random_monomial(ideal: MonomialIdeal, rng: np.random.Generator) -> Monomial:
    largest = ideal.max_exponents()
    variables = sorted(ideal.support)
    chosen = [v for v in variables if rng.random() < 0.5] or [
        variables[int(rng.integers(len(variables)))]
    ]
    return Monomial.from_dict(
        {v: int(rng.integers(1, largest.get(v, 1) + 1)) for v in chosen}
    )


def dimension_identity_violations(
    ideals: Iterable[MonomialIdeal], *, seed: int = 0, draws: int = 4
) -> List[PropertyFinding]:
    """Checks ``dim R/I = max(dim R/(I:f), dim R/(I,f))`` for random ``f`` not in I."""
    rng = np.random.default_rng(seed)
    findings = []
    for ideal in ideals:
        if ideal.is_zero or ideal.is_unit:
            continue
        for _ in range(draws):
            f = _random_monomial(ideal, rng)
            if ideal.contains(f):
                continue
            whole = dimension(ideal)
            colon_dim = dimension(ideal.colon(f))
            sum_dim = dimension(ideal.add_generators(f))
            if whole != max(colon_dim, sum_dim):
                findings.append(
                    PropertyFinding(
                        "dimension-identity",
                        ideal.format(),
                        f"f={f.format()}: {whole} != max({colon_dim}, {sum_dim})",
                    )
                )
    return findings


def graph_ideal(graph: Graph) -> MonomialIdeal:
    """The squarefree edge ideal of a simple graph."""
    return minimalize(
        (Monomial.from_variables(edge) for edge in graph.edges), graph.vertex_count
    )


def _edge_subject(graph: Graph) -> str:
    return ",".join(f"{u}-{v}" for u, v in graph.edges)


def shedding_identity_violations(
    graphs: Iterable[Graph], *, bounds: Bounds = Bounds()
) -> List[PropertyFinding]:
    """Checks the dimension identities at shedding vertices of well-covered graphs.

    For well-covered G and a non-isolated shedding vertex v, the rings
    ``R/I(G)``, ``R/(I(G minus v), x_v)`` and ``R/(I(G) : x_v)`` have the same
    dimension, and G minus v is well-covered with the same independence number.
    """
    findings = []
    seen: Set[tuple] = set()
    for graph in graphs:
        key = (graph.labels, graph.edges)
        if key in seen or not graph.edges:
            continue
        seen.add(key)
        if not is_well_covered(graph, bound=bounds.subset_enumeration):
            continue
        ideal = graph_ideal(graph)
        alpha = independence_number(graph, bound=bounds.subset_enumeration)
        whole = dimension(ideal)
        subject = _edge_subject(graph)
        for v in range(graph.vertex_count):
            if graph.degree(v) == 0 or not is_shedding_vertex(graph, v):
                continue
            variable = Monomial.variable(v)
            rest = minimalize(
                [g for g in ideal.generators if v not in g.support] + [variable],
                graph.vertex_count,
            )
            dims = (whole, dimension(rest), dimension(ideal.colon(variable)))
            if len(set(dims)) != 1:
                findings.append(
                    PropertyFinding(
                        "shedding-dimension", subject, f"v={v}: dimensions {dims}"
                    )
                )
            smaller = graph.delete_vertices([v])
            if not is_well_covered(smaller) or independence_number(smaller) != alpha:
                findings.append(
                    PropertyFinding(
                        "shedding-well-covered",
                        subject,
                        f"v={v}: deletion changes the independence structure",
                    )
                )
    return findings


def field_agreement_findings(
    ideals: Iterable[MonomialIdeal],
    *,
    primes: Sequence[int] = DEFAULT_FIELD_PRIMES,
    bounds: Bounds = Bounds(),
) -> List[PropertyFinding]:
    """Ideals whose oracle verdict over a prime field differs from the rationals."""
    fields = [FieldChoice(prime) for prime in primes]
    findings = []
    for ideal in ideals:
        if ideal.is_unit:
            continue
        rational = is_cohen_macaulay(ideal, FieldChoice(), bounds=bounds)
        for field in fields:
            verdict = is_cohen_macaulay(ideal, field, bounds=bounds)
            if verdict != rational:
                logger.warning(
                    "Field dependence for %s over %s", ideal.format(), field.label
                )
                findings.append(
                    PropertyFinding(
                        "field-agreement",
                        ideal.format(),
                        f"q: {rational}, {field.label}: {verdict}",
                    )
                )
    return findings


def pc_classification_violations(
    graphs: Iterable[Graph],
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
) -> List[PropertyFinding]:
    """Checks the three descriptions of Cohen-Macaulay graphs of girth >= 5.

    For a connected graph G of girth at least 5, membership in PC, being
    well-covered and vertex decomposable, and the oracle verdict on ``I(G)``
    coincide. Disconnected graphs, edgeless graphs and graphs of smaller girth
    are skipped.
    """
    findings = []
    seen: Set[tuple] = set()
    for graph in graphs:
        key = (graph.labels, graph.edges)
        if key in seen or not graph.edges:
            continue
        seen.add(key)
        if len(connected_components(graph)) != 1 or girth(graph) < 5:
            continue
        in_pc = components_in_pc(graph) is True
        well_covered = is_well_covered(graph, bound=bounds.subset_enumeration)
        decomposable = well_covered and is_vertex_decomposable(
            graph, bound=bounds.decomposability
        )
        cohen_macaulay = is_cohen_macaulay(graph_ideal(graph), field, bounds=bounds)
        if len({in_pc, decomposable, cohen_macaulay}) != 1:
            findings.append(
                PropertyFinding(
                    "pc-classification",
                    _edge_subject(graph),
                    f"pc: {in_pc}, well-covered and decomposable: {decomposable}, "
                    f"{field.label}: {cohen_macaulay}",
                )
            )
    return findings


def pendant_matching_violations(
    graphs: Iterable[OrientedGraph],
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
) -> List[PropertyFinding]:
    """Compares the closed form for whiskered graphs with unmixedness and the oracle.

    Graphs whose pendant edges are not a perfect matching are skipped.
    """
    findings = []
    for graph in graphs:
        graph = normalize(graph)
        try:
            closed_form = pendant_matching_is_cm(graph)
        except NoPendantPerfectMatching:
            continue
        unmixed = bool(is_unmixed(graph, bound=bounds.subset_enumeration))
        cohen_macaulay = is_cohen_macaulay(edge_ideal(graph), field, bounds=bounds)
        if len({closed_form, unmixed, cohen_macaulay}) != 1:
            findings.append(
                PropertyFinding(
                    "pendant-matching",
                    encode_instance(graph),
                    f"closed form: {closed_form}, unmixed: {unmixed}, "
                    f"{field.label}: {cohen_macaulay}",
                )
            )
    return findings


def associated_prime_violations(
    graphs: Iterable[Graph], *, bounds: Bounds = Bounds()
) -> List[PropertyFinding]:
    """Checks that the associated primes of ``I(G)`` are the minimal vertex covers."""
    findings = []
    for graph in graphs:
        if not graph.edges:
            continue
        primes = set(associated_primes(graph_ideal(graph)))
        covers = set(minimal_vertex_covers(graph, bound=bounds.subset_enumeration))
        if primes != covers:
            findings.append(
                PropertyFinding(
                    "associated-primes",
                    _edge_subject(graph),
                    f"{len(primes ^ covers)} primes and covers differ",
                )
            )
    return findings
