"""Core analysis engine for the edge ideal analysis platform."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .classifier import is_cm_girth5
from .cm_oracle import oracle_check
from .config_manager import ConfigManager
from .harness import conjecture_search, cross_validate
from .instances import enumerate_oriented
from .linear_algebra import FieldChoice
from .models import (
    Bounds,
    Certificate,
    InstanceSpec,
    OracleResult,
    PropertyFinding,
    SweepReport,
    UnmixedResult,
)
from .monomial_ideal import (
    IrreducibleComponent,
    MonomialIdeal,
    associated_primes,
    irreducible_decomposition,
)
from .oriented_graph import OrientedGraph, edge_ideal, is_unmixed
from .properties import (
    associated_prime_violations,
    dimension_identity_violations,
    exponent_comparison_violations,
    field_agreement_findings,
    pc_classification_violations,
    pendant_matching_violations,
    reducible_vertex_violations,
    shedding_identity_violations,
)

logger = logging.getLogger(__name__)


class EdgeIdealAnalyzer:
    """Runs classifications, oracle checks and harness sweeps from one configuration."""

    def __init__(
        self,
        config_manager: ConfigManager,
        *,
        bounds: Optional[Bounds] = None,
        field: Optional[FieldChoice] = None,
        workers: Optional[int] = None,
        show_progress: Optional[bool] = None,
    ):
        """Initializes the analyzer.

        Args:
            config_manager: The application's configuration manager.
            bounds: Enumeration bounds; read from the configuration when None.
            field: Oracle coefficient field; read from the configuration when None.
            workers: Sweep worker processes; read from the configuration when None.
            show_progress: Progress bars on stderr; read from the configuration
                when None.
        """
        self.config_manager = config_manager
        self.bounds = bounds or config_manager.bounds()
        self.field = field or config_manager.field()
        self.workers = (
            workers
            if workers is not None
            else int(config_manager.get("harness.workers", 1))
        )
        self.show_progress = (
            show_progress
            if show_progress is not None
            else bool(config_manager.get("harness.show_progress", True))
        )

    def instance_spec(
        self,
        families: Sequence[str],
        *,
        max_n: Optional[int] = None,
        sample_size: Optional[int] = None,
        weights: Optional[Sequence[int]] = None,
        seed: Optional[int] = None,
        fixed_weights: Sequence[Tuple[str, int]] = (),
        section: str = "harness",
    ) -> InstanceSpec:
        """Builds an `InstanceSpec`, filling unset fields from the configuration.

        A positive ``sample_size`` selects the sampled policy; otherwise every
        orientation and weight assignment is expanded.
        """
        get = self.config_manager.get
        if max_n is None:
            max_n = get(f"{section}.max_n", get("harness.max_n", 8))
        return InstanceSpec(
            families=tuple(families),
            max_n=int(max_n),
            orientation_policy="sampled" if sample_size else "all",
            sample_size=int(sample_size or 0),
            weights=tuple(weights if weights is not None else get("harness.weights")),
            seed=int(seed if seed is not None else get("harness.seed", 0)),
            fixed_weights=tuple(fixed_weights),
        )

    def classify(
        self, graph: OrientedGraph, *, cross_check: bool = True
    ) -> Certificate:
        logger.info("Classifying a graph on %d vertices", graph.vertex_count)
        return is_cm_girth5(graph, cross_check=cross_check, bounds=self.bounds)

    def unmixedness(self, graph: OrientedGraph) -> UnmixedResult:
        return is_unmixed(graph, bound=self.bounds.subset_enumeration)

    def oracle(
        self, ideal: MonomialIdeal, field: Optional[FieldChoice] = None
    ) -> OracleResult:
        return oracle_check(ideal, field or self.field, bounds=self.bounds)

    def graph_oracle(
        self, graph: OrientedGraph, field: Optional[FieldChoice] = None
    ) -> OracleResult:
        """Oracle verdict for the edge ideal of ``graph``."""
        return self.oracle(edge_ideal(graph), field)

    def decompose(
        self, ideal: MonomialIdeal
    ) -> Tuple[List[IrreducibleComponent], List[frozenset]]:
        """Irreducible components and associated primes."""
        return irreducible_decomposition(ideal), associated_primes(ideal)

    def sweep(self, spec: InstanceSpec) -> SweepReport:
        return cross_validate(
            spec,
            field=self.field,
            bounds=self.bounds,
            workers=self.workers,
            show_progress=self.show_progress,
        )

    def conjecture(self, spec: InstanceSpec) -> SweepReport:
        return conjecture_search(
            spec,
            field=self.field,
            bounds=self.bounds,
            workers=self.workers,
            show_progress=self.show_progress,
        )

    def check_properties(
        self, spec: InstanceSpec, *, primes: Sequence[int] = (2, 32003)
    ) -> Dict[str, List[PropertyFinding]]:
        """Runs every property suite over the instances of ``spec``."""
        graphs = list(enumerate_oriented(spec))
        ideals = list(dict.fromkeys(edge_ideal(graph) for graph in graphs))
        underlying = list(dict.fromkeys(graph.underlying for graph in graphs))
        logger.info(
            "Property suites over %d instances, %d ideals", len(graphs), len(ideals)
        )
        return {
            "reducible": reducible_vertex_violations(graphs),
            "exponent-comparison": exponent_comparison_violations(ideals),
            "dimension-identity": dimension_identity_violations(
                ideals, seed=spec.seed
            ),
            "shedding": shedding_identity_violations(underlying, bounds=self.bounds),
            "field-agreement": field_agreement_findings(
                ideals, primes=primes, bounds=self.bounds
            ),
            "pc-classification": pc_classification_violations(
                underlying, field=self.field, bounds=self.bounds
            ),
            "pendant-matching": pendant_matching_violations(
                graphs, field=self.field, bounds=self.bounds
            ),
            "associated-primes": associated_prime_violations(
                underlying, bounds=self.bounds
            ),
        }
