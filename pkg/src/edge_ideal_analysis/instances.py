"""Graph families and the deterministic expansion of harness instances.

Families are named by strings such as ``cycle:5``, ``connected`` or
``fixture:example-graph``. Each yields `Template` graphs that are expanded into
oriented instances over every orientation and weight assignment, or into a
seeded sample of them.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .document import load_fixture
from .exceptions import BoundExceeded, ValidationError
from .graph import Graph, girth
from .instance_source_protocol import InstanceSource, Template
from .models import InstanceSpec, NotInPC
from .oriented_graph import OrientedGraph, normalize, with_weights
from .pc_class import pc_decomposition

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7
MAX_EXHAUSTIVE_INSTANCES = 1 << 22
DEFAULT_RANDOM_PC_COUNT = 60


def _numbered(graph: nx.Graph) -> Graph:
    relabeled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    labels = [str(v) for v in range(relabeled.number_of_nodes())]
    return Graph.from_edges(labels, relabeled.edges)


def _atlas(max_n: int) -> Iterator[nx.Graph]:
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if 1 <= n <= min(max_n, ATLAS_MAX_N) and nx.is_connected(graph):
            yield graph


@dataclass
class CycleFamily:
    length: int
    name: str = "cycle"

    def templates(self) -> Iterator[Template]:
        yield Template(_numbered(nx.cycle_graph(self.length)))


@dataclass
class PathFamily:
    """The path on ``vertices`` vertices."""

    vertices: int
    name: str = "path"

    def templates(self) -> Iterator[Template]:
        yield Template(_numbered(nx.path_graph(self.vertices)))


@dataclass
class AtlasFamily:
    """Connected graphs of the networkx atlas, optionally triangle-free."""

    max_n: int
    triangle_free: bool = False
    name: str = "connected"

    def templates(self) -> Iterator[Template]:
        for graph in _atlas(self.max_n):
            if self.triangle_free and (
                graph.number_of_nodes() < 2 or any(nx.triangles(graph).values())
            ):
                continue
            yield Template(_numbered(graph))


def _isomorph_free(graphs: Sequence[nx.Graph]) -> List[nx.Graph]:
    """Keeps one graph per isomorphism class; WL hashes bucket the candidates."""
    buckets: Dict[str, List[nx.Graph]] = {}
    kept = []
    for graph in graphs:
        key = nx.weisfeiler_lehman_graph_hash(graph)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(graph, other) for other in bucket):
            continue
        bucket.append(graph)
        kept.append(graph)
    return kept


def _far_apart_sets(graph: nx.Graph) -> Iterator[Tuple[int, ...]]:
    """Nonempty vertex sets whose members are pairwise at distance >= 3."""
    nodes = sorted(graph.nodes)
    lengths = dict(nx.all_pairs_shortest_path_length(graph))

    def far(u: int, v: int) -> bool:
        return lengths[u].get(v, 3) >= 3

    def extend(chosen: List[int], start: int) -> Iterator[Tuple[int, ...]]:
        for position in range(start, len(nodes)):
            vertex = nodes[position]
            if all(far(vertex, other) for other in chosen):
                chosen.append(vertex)
                yield tuple(chosen)
                yield from extend(chosen, position + 1)
                chosen.pop()

    yield from extend([], 0)


@dataclass
class Girth5Family:
    """Connected graphs of girth >= 5 up to ``max_n`` vertices.

    Built by adding one vertex at a time, joined to a set of vertices pairwise at
    distance at least 3, so no cycle shorter than 5 appears.
    """

    max_n: int
    name: str = "girth5"

    def levels(self) -> Iterator[List[nx.Graph]]:
        level = [nx.empty_graph(1)]
        for n in range(1, self.max_n + 1):
            yield level
            if n == self.max_n:
                return
            grown = []
            for graph in level:
                for targets in _far_apart_sets(graph):
                    bigger = graph.copy()
                    bigger.add_edges_from((n, target) for target in targets)
                    grown.append(bigger)
            level = _isomorph_free(grown)
            logger.debug("girth5 family: %d graphs on %d vertices", len(level), n + 1)

    def templates(self) -> Iterator[Template]:
        for level in self.levels():
            for graph in level:
                yield Template(_numbered(graph))


def whisker(graph: nx.Graph) -> nx.Graph:
    """The corona with K1: a new leaf on every vertex."""
    whiskered = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    n = whiskered.number_of_nodes()
    whiskered.add_edges_from((v, n + v) for v in range(n))
    return whiskered


@dataclass
class WhiskeredFamily:
    """Whiskered connected graphs on at most ``max_n`` vertices in total."""

    max_n: int
    name: str = "whiskered"

    def templates(self) -> Iterator[Template]:
        for graph in _atlas(self.max_n // 2):
            yield Template(_numbered(whisker(graph)))


@dataclass
class RandomPCFamily:
    """Seeded random connected graphs of girth >= 5 in the class PC.

    Pieces (basic 5-cycles and whiskered edges) are joined along a random tree,
    a few extra edges are added, and candidates outside PC or of girth below 5
    are rejected.
    """

    count: int
    max_n: int
    seed: int
    name: str = "pc-random"

    def _candidate(self, rng: np.random.Generator) -> Optional[nx.Graph]:
        graph = nx.Graph()
        pieces: List[List[int]] = []
        while graph.number_of_nodes() < self.max_n:
            start = graph.number_of_nodes()
            room = self.max_n - start
            if room >= 5 and rng.random() < 0.5:
                piece = list(range(start, start + 5))
                nx.add_cycle(graph, piece)
            elif room >= 2:
                piece = [start, start + 1]
                graph.add_edge(*piece)
            else:
                break
            if pieces:
                anchor_piece = pieces[int(rng.integers(len(pieces)))]
                anchor = anchor_piece[int(rng.integers(len(anchor_piece)))]
                graph.add_edge(anchor, piece[int(rng.integers(len(piece)))])
            pieces.append(piece)
            if rng.random() < 0.35:
                break
        for _ in range(int(rng.integers(0, 3))):
            u, v = (int(x) for x in rng.integers(0, graph.number_of_nodes(), size=2))
            if u != v:
                graph.add_edge(u, v)
        return graph if graph.number_of_nodes() >= 2 else None

    def templates(self) -> Iterator[Template]:
        rng = np.random.default_rng(self.seed)
        found = 0
        attempts = 0
        seen: List[nx.Graph] = []
        while found < self.count and attempts < self.count * 500:
            attempts += 1
            candidate = self._candidate(rng)
            if candidate is None:
                continue
            graph = _numbered(candidate)
            if girth(graph) < 5 or isinstance(pc_decomposition(graph), NotInPC):
                continue
            if any(nx.is_isomorphic(candidate, other) for other in seen):
                continue
            seen.append(candidate)
            found += 1
            yield Template(graph)
        if found < self.count:
            logger.warning(
                "pc-random produced %d of %d graphs in %d attempts",
                found,
                self.count,
                attempts,
            )


@dataclass
class FixtureFamily:
    """A packaged graph document with its written orientation and weights."""

    fixture: str
    name: str = "fixture"

    def templates(self) -> Iterator[Template]:
        raw = load_fixture(self.fixture).raw
        yield Template(raw.underlying, raw.arcs, raw.weights)


def family_source(
    family: str, *, max_n: int, seed: int, count: int = 0
) -> InstanceSource:
    """Resolves a family name to an `InstanceSource`.

    Raises:
        ValueError: For unknown family names.
    """
    kind, _, argument = family.partition(":")
    if kind == "cycle":
        return CycleFamily(int(argument))
    if kind == "path":
        return PathFamily(int(argument))
    if kind == "connected":
        return AtlasFamily(max_n)
    if kind == "triangle-free":
        return AtlasFamily(max_n, triangle_free=True, name="triangle-free")
    if kind == "girth5":
        return Girth5Family(max_n)
    if kind == "whiskered":
        return WhiskeredFamily(max_n)
    if kind == "pc-random":
        return RandomPCFamily(count or DEFAULT_RANDOM_PC_COUNT, max_n, seed)
    if kind == "fixture":
        return FixtureFamily(argument)
    raise ValueError(f"unknown family '{family}'")


def _weight_choices(
    template: Template, spec: InstanceSpec
) -> List[Tuple[int, ...]]:
    """Per-vertex weight alphabets after applying fixed weights."""
    fixed = dict(spec.fixed_weights)
    labels = template.underlying.labels
    choices = []
    for vertex, label in enumerate(labels):
        if label in fixed:
            choices.append((fixed[label],))
        elif spec.weights:
            choices.append(tuple(spec.weights))
        elif template.weights is not None:
            choices.append((template.weights[vertex],))
        else:
            choices.append((1,))
    return choices


def _orient(template: Template, bits: Sequence[int]) -> frozenset:
    if template.arcs is not None:
        return template.arcs
    return frozenset(
        (u, v) if bit == 0 else (v, u)
        for (u, v), bit in zip(template.underlying.edges, bits)
    )


def _build(
    template: Template, arcs: frozenset, weights: Tuple[int, ...]
) -> OrientedGraph:
    if template.arcs is None:
        return OrientedGraph(template.underlying, arcs, weights)
    # a fixed orientation may hold both directions only where weights are 1
    return with_weights(
        OrientedGraph(template.underlying, arcs, tuple(1 for _ in weights)), weights
    )


def raw_count(template: Template, spec: InstanceSpec) -> int:
    """Size of the full orientation and weight product for one template."""
    total = 1 if template.arcs is not None else 2 ** len(template.underlying.edges)
    for choice in _weight_choices(template, spec):
        total *= len(choice)
    return total


def expand_raw(template: Template, spec: InstanceSpec) -> Iterator[OrientedGraph]:
    """Every orientation and weight assignment of one template, unnormalized.

    Raises:
        BoundExceeded: If the product exceeds the exhaustive limit.
    """
    total = raw_count(template, spec)
    if total > MAX_EXHAUSTIVE_INSTANCES:
        raise BoundExceeded("instances", total, MAX_EXHAUSTIVE_INSTANCES)
    edge_count = 0 if template.arcs is not None else len(template.underlying.edges)
    weight_choices = _weight_choices(template, spec)
    for bits in itertools.product((0, 1), repeat=edge_count):
        arcs = _orient(template, bits)
        for weights in itertools.product(*weight_choices):
            yield _build(template, arcs, tuple(weights))


def _sample(
    template: Template, spec: InstanceSpec, rng: np.random.Generator
) -> OrientedGraph:
    edge_count = len(template.underlying.edges)
    bits = rng.integers(0, 2, size=edge_count).tolist()
    weights = tuple(
        int(choice[int(rng.integers(len(choice)))])
        for choice in _weight_choices(template, spec)
    )
    return _build(template, _orient(template, bits), weights)


def collect_templates(spec: InstanceSpec) -> List[Template]:
    """All templates of the spec's families within ``max_n`` vertices."""
    templates = []
    for family in spec.families:
        source = family_source(
            family, max_n=spec.max_n, seed=spec.seed, count=spec.sample_size
        )
        for template in source.templates():
            fixed = source.name == "fixture"
            if template.underlying.vertex_count > spec.max_n and not fixed:
                continue
            templates.append(template)
    return templates


def enumerate_oriented(spec: InstanceSpec) -> Iterator[OrientedGraph]:
    """Deterministic stream of distinct normalized instances for ``spec``.

    With the 'all' policy every orientation and weight assignment is expanded;
    with 'sampled', ``sample_size`` draws are made from a generator seeded by
    ``spec.seed``. Instances that normalize to the same graph are yielded once.

    Raises:
        BoundExceeded: If an exhaustive expansion is too large.
        ValueError: For an unknown policy.
    """
    templates = collect_templates(spec)
    seen: Set[str] = set()

    def fresh(graph: OrientedGraph) -> Optional[OrientedGraph]:
        normalized = normalize(graph)
        key = encode_instance(normalized)
        if key in seen:
            return None
        seen.add(key)
        return normalized

    if spec.orientation_policy == "all":
        for template in templates:
            for graph in expand_raw(template, spec):
                result = fresh(graph)
                if result is not None:
                    yield result
    elif spec.orientation_policy == "sampled":
        if not templates:
            return
        rng = np.random.default_rng(spec.seed)
        for _ in range(spec.sample_size):
            template = templates[int(rng.integers(len(templates)))]
            result = fresh(_sample(template, spec, rng))
            if result is not None:
                yield result
    else:
        raise ValueError(f"unknown orientation policy '{spec.orientation_policy}'")


def encode_instance(graph: OrientedGraph) -> str:
    """Replayable text form ``label:weight,...|tail>head,...``."""
    vertices = ",".join(
        f"{label}:{weight}" for label, weight in zip(graph.labels, graph.weights)
    )
    labels = graph.labels
    arcs = ",".join(f"{labels[t]}>{labels[h]}" for t, h in graph.sorted_arcs())
    return f"{vertices}|{arcs}"


def decode_instance(encoding: str) -> OrientedGraph:
    """Inverse of `encode_instance`.

    Raises:
        ValidationError: If the encoding is malformed.
    """
    try:
        vertex_part, arc_part = encoding.split("|")
        labels, weights = [], {}
        for entry in filter(None, vertex_part.split(",")):
            label, weight = entry.rsplit(":", 1)
            labels.append(label)
            weights[label] = int(weight)
        arcs = [
            tuple(entry.split(">")) for entry in filter(None, arc_part.split(","))
        ]
    except ValueError as exception:
        raise ValidationError("instance-encoding", encoding) from exception
    return OrientedGraph.from_labeled_arcs(labels, arcs, weights)

