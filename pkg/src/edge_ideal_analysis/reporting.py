"""Renders certificates, witnesses and sweep summaries as JSON payloads or text.

Vertex ids never leave the process: every payload names vertices by label, and
`failed_clause_from_dict` maps them back so a JSON certificate can be re-checked.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from .cm_oracle import polarize
from .exceptions import ValidationError
from .models import (
    Certificate,
    FailedClause,
    NotGirth5,
    NotInPC,
    NotWellCovered,
    OracleResult,
    PCDecomposition,
    StrongCoverWitness,
    SweepReport,
    UnmixedResult,
)
from .monomial_ideal import MonomialIdeal, associated_primes, irreducible_decomposition
from .oriented_graph import OrientedGraph

logger = logging.getLogger(__name__)

VERDICT_ICONS = {"CM": "✅", "NotCM": "❌", "OutOfScope": "⚠️"}


def _names(graph: OrientedGraph, vertices) -> List[str]:
    return [graph.labels[v] for v in vertices]


def _sorted_names(graph: OrientedGraph, vertices) -> List[str]:
    return _names(graph, sorted(vertices))


def _witness_to_dict(graph: OrientedGraph, witness) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    if isinstance(witness, PCDecomposition):
        return {
            "type": "pc-decomposition",
            "pendant_matching": [
                _names(graph, pair) for pair in witness.pendant_matching
            ],
            "basic_cycles": [_names(graph, cycle) for cycle in witness.basic_cycles],
        }
    if isinstance(witness, FailedClause):
        return {
            "type": "failed-clause",
            "clause": witness.clause,
            "vertices": _names(graph, witness.vertices),
            "cycle": _names(graph, witness.cycle),
            "detail": witness.detail,
        }
    if isinstance(witness, NotGirth5):
        return {
            "type": "short-cycle",
            "cycle": _names(graph, witness.cycle),
            "girth": witness.girth,
        }
    if isinstance(witness, NotInPC):
        return {
            "type": "not-in-pc",
            "clause": witness.clause,
            "reason": witness.reason,
            "vertices": _names(graph, witness.vertices),
        }
    if isinstance(witness, NotWellCovered):
        return {
            "type": "not-well-covered",
            "smaller": _sorted_names(graph, witness.smaller),
            "larger": _sorted_names(graph, witness.larger),
        }
    if isinstance(witness, StrongCoverWitness):
        return {
            "type": "strong-cover",
            "cover": _sorted_names(graph, witness.cover),
            "l3": _sorted_names(graph, witness.l3),
        }
    raise TypeError(f"unsupported witness {type(witness).__name__}")


def certificate_to_dict(certificate: Certificate, graph: OrientedGraph) -> Dict:
    """JSON-ready form of a classification certificate."""
    return {
        "verdict": certificate.verdict.value,
        "witness": _witness_to_dict(graph, certificate.witness),
        "passes": [
            {
                "clause": check.clause,
                "vertices": _names(graph, check.vertices),
                "cycle": _names(graph, check.cycle),
            }
            for check in certificate.passes
        ],
        "condition_2": certificate.condition_2,
        "condition_2_witness": _witness_to_dict(graph, certificate.condition_2_witness),
    }


def failed_clause_from_dict(data: Dict[str, Any], graph: OrientedGraph) -> FailedClause:
    """Rebuilds a `FailedClause` from its payload against ``graph``.

    Raises:
        ValidationError: If the payload is not a failed clause or names unknown
            vertices.
    """
    if not data or data.get("type") != "failed-clause":
        raise ValidationError("failed-clause", "payload does not hold a failed clause")
    try:
        vertices = tuple(graph.underlying.index(label) for label in data["vertices"])
        cycle = tuple(graph.underlying.index(label) for label in data.get("cycle", []))
    except KeyError as exception:
        raise ValidationError("failed-clause", str(exception)) from exception
    return FailedClause(data["clause"], vertices, cycle, data.get("detail", ""))


def unmixed_to_dict(result: UnmixedResult, graph: OrientedGraph) -> Dict:
    return {
        "unmixed": result.unmixed,
        "witness": _witness_to_dict(graph, result.witness),
    }


def _polarized_names(ideal: MonomialIdeal, names: Sequence[str]) -> List[str]:
    """Names of the polarized variables that carry the Stanley-Reisner complex."""
    polarized = polarize(ideal)
    every = polarized.names(names)
    return [every[v] for v in sorted(polarized.ideal.support)]


def oracle_to_dict(
    result: OracleResult, ideal: MonomialIdeal, names: Sequence[str]
) -> Dict:
    payload: Dict[str, Any] = {
        "cohen_macaulay": result.cohen_macaulay,
        "field": result.field,
        "polarized_ground": result.polarized_ground,
        "witness": None,
    }
    if result.witness is not None:
        ground = _polarized_names(ideal, names)
        payload["witness"] = {
            "face": [ground[v] for v in result.witness.face],
            "degree": result.witness.dimension,
            "rank": result.witness.rank,
        }
    return payload


def decomposition_to_dict(ideal: MonomialIdeal, names: Sequence[str]) -> Dict:
    """Irreducible components and associated primes of ``ideal``."""
    components = irreducible_decomposition(ideal)
    primes = associated_primes(ideal)
    return {
        "ideal": ideal.format(names),
        "components": [component.format(names) for component in components],
        "associated_primes": [sorted(names[v] for v in prime) for prime in primes],
        "unmixed": len({len(prime) for prime in primes}) == 1,
    }


def render_certificate(certificate: Certificate, graph: OrientedGraph) -> str:
    """Human readable certificate."""
    payload = certificate_to_dict(certificate, graph)
    verdict = payload["verdict"]
    lines = [f"{VERDICT_ICONS[verdict]} Verdict: {verdict}"]
    witness = payload["witness"] or {"type": None}
    if witness["type"] == "pc-decomposition":
        lines.append("  Pendant matching: " + _pairs_text(witness["pendant_matching"]))
        for cycle in witness["basic_cycles"]:
            lines.append("  Basic 5-cycle: " + "-".join(cycle))
    elif witness["type"] == "failed-clause":
        lines.append(
            f"  Failed clause {witness['clause']} at {', '.join(witness['vertices'])}"
        )
        if witness["cycle"]:
            lines.append("  On cycle: " + "-".join(witness["cycle"]))
        if witness["detail"]:
            lines.append(f"  {witness['detail']}")
    elif witness["type"] == "short-cycle":
        lines.append(
            f"  Girth {witness['girth']} < 5: " + "-".join(witness["cycle"])
        )
    for check in payload["passes"]:
        where = ", ".join(check["vertices"]) if len(check["vertices"]) < 6 else "all"
        lines.append(f"  ✔ {check['clause']} ({where})")
    if payload["condition_2"] is not None:
        same = payload["condition_2"] == certificate.is_cm
        agreement = "agrees" if same else "differs"
        lines.append(f"🔁 Strong-cover route {agreement}: {payload['condition_2']}")
    return "\n".join(lines)


def _pairs_text(pairs: List[List[str]]) -> str:
    return ", ".join("-".join(pair) for pair in pairs) or "(none)"


def render_unmixed(result: UnmixedResult, graph: OrientedGraph) -> str:
    payload = unmixed_to_dict(result, graph)
    if result.unmixed:
        return "✅ Unmixed"
    witness = payload["witness"]
    if witness["type"] == "not-well-covered":
        return (
            "❌ Not unmixed: the underlying graph is not well-covered\n"
            f"  Maximal independent sets {{{', '.join(witness['smaller'])}}} and "
            f"{{{', '.join(witness['larger'])}}} differ in size"
        )
    return (
        "❌ Not unmixed: strong vertex cover "
        f"{{{', '.join(witness['cover'])}}} with L3 = {{{', '.join(witness['l3'])}}}"
    )


def render_oracle(
    result: OracleResult, ideal: MonomialIdeal, names: Sequence[str]
) -> str:
    payload = oracle_to_dict(result, ideal, names)
    status = "Cohen-Macaulay" if result.cohen_macaulay else "not Cohen-Macaulay"
    icon = "✅" if result.cohen_macaulay else "❌"
    lines = [
        f"{icon} R/I is {status} over {result.field} "
        f"({result.polarized_ground} polarized variables)"
    ]
    witness = payload["witness"]
    if witness is not None:
        lines.append(
            f"  Link of {{{', '.join(witness['face'])}}} has reduced homology "
            f"of rank {witness['rank']} in degree {witness['degree']}"
        )
    return "\n".join(lines)


def render_decomposition(ideal: MonomialIdeal, names: Sequence[str]) -> str:
    payload = decomposition_to_dict(ideal, names)
    lines = [f"🧮 I = {payload['ideal']}"]
    lines.extend(f"  component: {component}" for component in payload["components"])
    lines.extend(
        f"  associated prime: ({', '.join(prime)})"
        for prime in payload["associated_primes"]
    )
    lines.append("✅ Unmixed" if payload["unmixed"] else "❌ Not unmixed")
    return "\n".join(lines)


def render_summary(report: SweepReport, title: str = "Sweep") -> str:
    """Counts and the first few discrepancies of a sweep."""
    lines = [f"📊 {title} summary"]
    lines.extend(f"  {key}: {value}" for key, value in report.summary.items())
    if report.discrepancies:
        lines.append("⚠️ Discrepancies:")
        for discrepancy in report.discrepancies[:10]:
            first, second = discrepancy.first_pair
            lines.append(f"  {discrepancy.encoding} ({first} vs {second})")
    else:
        lines.append("🎉 No discrepancies")
    return "\n".join(lines)
