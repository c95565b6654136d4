import networkx as nx
import numpy as np

from edge_ideal_analysis.classifier import path3_is_unmixed
from edge_ideal_analysis.config_manager import ConfigManager
from edge_ideal_analysis.core import EdgeIdealAnalyzer
from edge_ideal_analysis.document import load_fixture
from edge_ideal_analysis.graph import Graph
from edge_ideal_analysis.instances import Girth5Family, enumerate_oriented
from edge_ideal_analysis.models import InstanceSpec
from edge_ideal_analysis.monomial_ideal import is_unmixed_ideal
from edge_ideal_analysis.oriented_graph import edge_ideal, with_weights
from edge_ideal_analysis.properties import (
    associated_prime_violations,
    dimension_identity_violations,
    exponent_comparison_violations,
    pc_classification_violations,
    pendant_matching_violations,
    reducible_vertex_violations,
)


def run_acceptance(
    weight_draws: int = 100,
    corona_samples: int = 10000,
    random_pc_graphs: int = 500,
    identity_pairs: int = 1000,
    seed: int = 20240601,
):
    """
    Runs the acceptance sweeps end to end and prints a pass/fail line for each.
    """
    print("🚀 Running acceptance sweeps...")

    config_manager = ConfigManager(config_path="config.yaml")
    analyzer = EdgeIdealAnalyzer(config_manager, workers=1, show_progress=False)
    field, bounds = analyzer.field, analyzer.bounds
    failures = 0

    # Oriented 5-cycles: classifier, strong covers and oracle
    cycle_spec = analyzer.instance_spec(["cycle:5"], weights=[1, 2])
    report = analyzer.sweep(cycle_spec)
    print(f"✅ 5-cycle sweep: {report.summary}")
    failures += report.summary["discrepancies"]
    cycles = list(enumerate_oriented(cycle_spec))
    reducible = reducible_vertex_violations(cycles)
    print(f"✅ Reducible vertices: {len(cycles)} cycles, {len(reducible)} violations")
    failures += len(reducible)

    # Paths of length 3: closed form against associated primes
    paths = list(enumerate_oriented(InstanceSpec(("path:4",), weights=(1, 2, 3))))
    path_mismatches = sum(
        path3_is_unmixed(graph) != is_unmixed_ideal(edge_ideal(graph))
        for graph in paths
    )
    print(f"✅ Path sweep: {len(paths)} instances, {path_mismatches} mismatches")
    failures += path_mismatches

    # Coronas: closed form against strong covers and oracle
    coronas = list(
        enumerate_oriented(
            analyzer.instance_spec(
                ["whiskered"],
                max_n=8,
                sample_size=corona_samples,
                weights=[1, 2],
                seed=seed,
            )
        )
    )
    pendant = pendant_matching_violations(coronas, field=field, bounds=bounds)
    print(f"✅ Corona sweep: {len(coronas)} instances, {len(pendant)} violations")
    failures += len(pendant)

    # Girth >= 5 graphs: PC, decomposability and oracle
    girth5 = [template.underlying for template in Girth5Family(9).templates()]
    classification = pc_classification_violations(girth5, field=field, bounds=bounds)
    print(f"✅ Girth-5 graphs: {len(girth5)} graphs, {len(classification)} violations")
    failures += len(classification)

    # Reconstructed example graph under random weights
    example = load_fixture("example-graph").raw
    rng = np.random.default_rng(seed)
    not_cm = 0
    for _ in range(weight_draws):
        weights = {
            label: int(rng.integers(1, 4)) for label in example.labels if label != "a3"
        }
        if not analyzer.classify(with_weights(example, weights)).is_cm:
            not_cm += 1
    print(f"✅ Example graph: {weight_draws} weightings, {not_cm} not CM")
    failures += not_cm

    # Random PC graphs: both routes and the oracle where in bounds
    random_pc = analyzer.sweep(
        analyzer.instance_spec(
            ["pc-random"],
            max_n=12,
            sample_size=random_pc_graphs,
            weights=[1, 2],
            seed=seed,
        )
    )
    print(f"✅ Random PC sweep: {random_pc.summary}")
    failures += random_pc.summary["discrepancies"]

    # Squarefree edge ideals: associated primes are minimal vertex covers
    small = [
        Graph.from_networkx(graph)
        for graph in nx.graph_atlas_g()
        if 0 < graph.number_of_nodes() <= 7
    ]
    primes = associated_prime_violations(small, bounds=bounds)
    print(f"✅ Associated primes: {len(small)} graphs, {len(primes)} violations")
    failures += len(primes)

    # Colon identities over the 5-cycle and corona ideals
    ideals = list(dict.fromkeys(edge_ideal(graph) for graph in cycles + coronas))
    comparison = exponent_comparison_violations(ideals)
    print(f"✅ Exponent comparison: {len(ideals)} ideals, {len(comparison)} found")
    failures += len(comparison)
    draws = max(1, identity_pairs // len(ideals))
    identity = dimension_identity_violations(ideals, seed=seed, draws=draws)
    print(f"✅ Dimension identity: {draws} draws per ideal, {len(identity)} found")
    failures += len(identity)

    # Conjecture control on even cycles
    spec = analyzer.instance_spec(
        ["cycle:4", "cycle:6"], weights=[1, 2], section="conjecture"
    )
    conjecture = analyzer.conjecture(spec)
    print(f"✅ Conjecture control: {conjecture.summary}")
    failures += conjecture.summary["control_discrepancies"]

    print("\n" + "=" * 60)
    if failures:
        print(f"⚠️ {failures} acceptance failures")
    else:
        print("🎉 All acceptance sweeps passed")
    print("=" * 60)


if __name__ == "__main__":
    run_acceptance()
