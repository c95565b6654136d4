"""Defines the core data structures for the edge ideal analysis platform.

Results and witnesses are plain dataclasses so they can be compared in tests,
serialized by the reporting module and re-checked by the classifier. Vertex
references are integer ids of the graph the result was computed on.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

DEFAULT_SUBSET_BOUND = 24
DEFAULT_DECOMPOSABILITY_BOUND = 16
DEFAULT_POLARIZED_BOUND = 24
DEFAULT_FACE_BOUND = 200_000

VertexSet = frozenset
DirectedEdge = Tuple[int, int]


@dataclass(frozen=True)
class Bounds:
    """Size limits for the exhaustive procedures.

    Attributes:
        subset_enumeration: Max vertices for independent-set and cover enumeration.
        decomposability: Max vertices for the vertex-decomposability recursion.
        polarized_ground: Max variables of a polarized ideal handed to the oracle.
        homology_faces: Max faces of a Stanley-Reisner complex.
    """

    subset_enumeration: int = DEFAULT_SUBSET_BOUND
    decomposability: int = DEFAULT_DECOMPOSABILITY_BOUND
    polarized_ground: int = DEFAULT_POLARIZED_BOUND
    homology_faces: int = DEFAULT_FACE_BOUND


class Verdict(Enum):
    """Outcome of the girth-5 classification."""

    CM = "CM"
    NOT_CM = "NotCM"
    OUT_OF_SCOPE = "OutOfScope"


class ReducibleKind(Enum):
    """Which clause of the reducible-vertex definition matched."""

    FIRST_KIND_SINK = "first-kind-sink"
    FIRST_KIND_WEIGHT1 = "first-kind-weight1"
    SECOND_KIND = "second-kind"


@dataclass(frozen=True)
class PCDecomposition:
    """Witness that a graph lies in the class PC.

    Attributes:
        pendant_vertices: Vertices on pendant edges, P(G).
        cycle_vertices: Vertices on basic 5-cycles, C(G).
        pendant_matching: Pendant edges as ``(attachment, leaf)`` pairs; for an
            isolated edge both ends are leaves and the smaller id comes first.
        basic_cycles: Canonically ordered basic 5-cycles.
    """

    pendant_vertices: VertexSet
    cycle_vertices: VertexSet
    pendant_matching: Tuple[DirectedEdge, ...]
    basic_cycles: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class NotInPC:
    """First violated clause of the PC definition.

    Attributes:
        clause: One of 'isolated-vertex', 'pendant-matching', 'overlap', 'uncovered'.
        reason: Human readable explanation.
        vertices: Vertices that witness the violation.
    """

    clause: str
    reason: str
    vertices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class CoverPartition:
    """The L1/L2/L3 split of a vertex cover.

    Attributes:
        cover: The vertex cover.
        l1: Members with an out-edge leaving the cover.
        l2: Other members with an in-edge from outside the cover.
        l3: Members whose whole neighborhood lies in the cover.
    """

    cover: VertexSet
    l1: VertexSet
    l2: VertexSet
    l3: VertexSet

    @property
    def is_minimal(self) -> bool:
        return not self.l3


@dataclass(frozen=True)
class NotWellCovered:
    """Two maximal independent sets of different sizes."""

    smaller: VertexSet
    larger: VertexSet


@dataclass(frozen=True)
class StrongCoverWitness:
    """A strong vertex cover with a nonempty L3."""

    cover: VertexSet
    l3: VertexSet


UnmixedWitness = Union[NotWellCovered, StrongCoverWitness]


@dataclass(frozen=True)
class UnmixedResult:
    """Verdict of the strong-cover unmixedness test with its witness."""

    unmixed: bool
    witness: Optional[UnmixedWitness] = None

    def __bool__(self) -> bool:
        return self.unmixed


@dataclass(frozen=True)
class ReducibleFinding:
    """A reducible vertex of an oriented 5-cycle.

    Attributes:
        vertex: The reducible vertex.
        kind: The matched clause of the definition.
        evidence: Exactly the directed edges that clause requires.
    """

    vertex: int
    kind: ReducibleKind
    evidence: Tuple[DirectedEdge, ...]


@dataclass(frozen=True)
class ClauseCheck:
    """A passed clause of the main classification."""

    clause: str
    vertices: Tuple[int, ...]
    cycle: Tuple[int, ...] = ()


@dataclass(frozen=True)
class FailedClause:
    """The first failing clause of the main classification.

    Attributes:
        clause: One of 'pc', 'a', 'b.i', 'b.ii', 'b.iii'.
        vertices: The vertices the clause was evaluated on.
        cycle: The basic 5-cycle for the 'b' clauses.
        detail: Human readable explanation.
    """

    clause: str
    vertices: Tuple[int, ...]
    cycle: Tuple[int, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class NotGirth5:
    """A cycle shorter than five, which puts the graph out of scope."""

    cycle: Tuple[int, ...]
    girth: int


CertificateWitness = Union[PCDecomposition, FailedClause, NotGirth5, None]


@dataclass
class Certificate:
    """Verdict of the girth-5 classification plus a checkable witness.

    Attributes:
        verdict: CM, NotCM or OutOfScope.
        witness: PC decomposition on CM, failing clause on NotCM, short cycle on
            OutOfScope.
        passes: Clauses that were evaluated and passed, in evaluation order.
        condition_2: Verdict of the well-covered/unmixed route, when computed.
        condition_2_witness: Why that route rejected, when it did.
    """

    verdict: Verdict
    witness: CertificateWitness = None
    passes: List[ClauseCheck] = field(default_factory=list)
    condition_2: Optional[bool] = None
    condition_2_witness: Optional[Union[UnmixedWitness, NotInPC]] = None

    @property
    def is_cm(self) -> bool:
        return self.verdict is Verdict.CM


@dataclass(frozen=True)
class ReisnerWitness:
    """A face whose link has nonvanishing reduced homology below its dimension.

    Attributes:
        face: Vertices of the face in the complex's ground set.
        dimension: Homological degree of the nonvanishing group.
        rank: Its rank over the chosen field.
    """

    face: Tuple[int, ...]
    dimension: int
    rank: int


@dataclass(frozen=True)
class OracleResult:
    """Verdict of the Stanley-Reisner oracle.

    Attributes:
        cohen_macaulay: The verdict.
        field: Label of the coefficient field ('q' or 'p:N').
        polarized_ground: Variables in the complex after polarization.
        witness: Failing face when not Cohen-Macaulay.
    """

    cohen_macaulay: bool
    field: str
    polarized_ground: int
    witness: Optional[ReisnerWitness] = None

    def __bool__(self) -> bool:
        return self.cohen_macaulay


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic description of a harness corpus.

    Attributes:
        families: Underlying graph families, e.g. ('cycle:5',) or ('whiskered',).
        max_n: Largest underlying graph for enumerated families.
        orientation_policy: 'all' for the full product, 'sampled' for seeded draws.
        sample_size: Number of draws when sampled.
        weights: Weight alphabet.
        seed: Seed for sampled policies and random families.
        fixed_weights: ``(label, weight)`` pairs that are never resampled.
    """

    families: Tuple[str, ...]
    max_n: int = 8
    orientation_policy: str = "all"
    sample_size: int = 0
    weights: Tuple[int, ...] = (1, 2)
    seed: int = 0
    fixed_weights: Tuple[Tuple[str, int], ...] = ()


@dataclass(frozen=True)
class Discrepancy:
    """An instance on which two decision routes disagree.

    Attributes:
        encoding: Replayable instance encoding.
        verdicts: Verdict per route name (None when the route was skipped).
        first_pair: The first pair of route names that disagree.
    """

    encoding: str
    verdicts: Tuple[Tuple[str, Optional[bool]], ...]
    first_pair: Tuple[str, str]

    @property
    def verdict_map(self) -> Dict[str, Optional[bool]]:
        return dict(self.verdicts)


@dataclass
class SweepReport:
    """Rows and aggregates of a harness run.

    Attributes:
        frame: One row per instance, sorted by instance encoding.
        discrepancies: Instances on which the routes disagree.
        summary: Aggregate counts.
    """

    frame: pd.DataFrame
    discrepancies: List[Discrepancy] = field(default_factory=list)
    summary: Dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class PropertyFinding:
    """An input on which a property suite found a counterexample or a difference.

    Attributes:
        check: Name of the property.
        subject: The input, as an instance encoding or a formatted ideal.
        detail: What was observed.
    """

    check: str
    subject: str
    detail: str
