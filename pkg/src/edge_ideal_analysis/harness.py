"""Cross-validation sweeps and the triangle-free conjecture search.

Each instance is decided by up to three routes: the combinatorial conditions
(``condition_3``), PC membership plus strong covers (``condition_2``) and the
Stanley-Reisner oracle (``oracle``). Sweeps collect one row per instance into a
pandas frame, sorted by instance encoding so reports are stable across runs and
worker counts.
"""

import json
import logging
import sys
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from .classifier import check_condition_3, condition_2_route
from .cm_oracle import is_cohen_macaulay
from .exceptions import EdgeIdealError
from .graph import girth
from .instances import decode_instance, encode_instance, enumerate_oriented
from .linear_algebra import FieldChoice
from .models import Bounds, Discrepancy, InstanceSpec, SweepReport, Verdict
from .oriented_graph import OrientedGraph, edge_ideal, is_unmixed, underlying_ideal

logger = logging.getLogger(__name__)

ROUTES = ("condition_3", "condition_2", "oracle")
SWEEP_COLUMNS = (
    "encoding",
    "n",
    "girth",
    "in_scope",
    *ROUTES,
    "agree",
    "error",
)
CONJECTURE_COLUMNS = (
    "encoding",
    "n",
    "girth",
    "control",
    "graph_cm",
    "unmixed",
    "predicted",
    "oracle",
    "condition_3",
    "agree",
    "error",
)


def _girth_value(graph: OrientedGraph) -> int:
    """Girth as an int; 0 for forests."""
    length = girth(graph.underlying)
    return 0 if length == float("inf") else int(length)


def _error_text(exception: Exception) -> str:
    return f"{type(exception).__name__}: {exception}"


def first_disagreement(
    verdicts: Sequence[Tuple[str, Optional[bool]]],
) -> Optional[Tuple[str, str]]:
    """First pair of computed routes, in route order, whose verdicts differ."""
    computed = [(name, value) for name, value in verdicts if value is not None]
    for position, (name, value) in enumerate(computed):
        for other, other_value in computed[position + 1 :]:
            if value != other_value:
                return name, other
    return None


def evaluate_instance(
    graph: OrientedGraph,
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
) -> Dict[str, Any]:
    """Runs every applicable route on one normalized instance.

    The two combinatorial routes only run at girth >= 5; the oracle always runs.
    Library errors are recorded in the ``error`` column instead of raised.
    """
    length = _girth_value(graph)
    in_scope = length == 0 or length >= 5
    row: Dict[str, Any] = {
        "encoding": encode_instance(graph),
        "n": graph.vertex_count,
        "girth": length,
        "in_scope": in_scope,
        "condition_3": None,
        "condition_2": None,
        "oracle": None,
        "agree": True,
        "error": None,
    }
    try:
        if in_scope:
            certificate = check_condition_3(graph)
            row["condition_3"] = certificate.verdict is Verdict.CM
            row["condition_2"] = condition_2_route(graph, bounds=bounds)[0]
        row["oracle"] = is_cohen_macaulay(edge_ideal(graph), field, bounds=bounds)
    except EdgeIdealError as exception:
        row["error"] = _error_text(exception)
        logger.warning("Instance %s skipped: %s", row["encoding"], row["error"])
    row["agree"] = first_disagreement([(r, row[r]) for r in ROUTES]) is None
    return row


def _evaluate_encoding(encoding: str, field: FieldChoice, bounds: Bounds) -> Dict:
    return evaluate_instance(decode_instance(encoding), field=field, bounds=bounds)


def _run_rows(
    encodings: List[str],
    worker,
    *,
    workers: int,
    show_progress: bool,
    description: str,
) -> List[Dict[str, Any]]:
    progress = tqdm(
        encodings, desc=description, file=sys.stderr, disable=not show_progress
    )
    if workers <= 1:
        return [worker(encoding) for encoding in progress]
    return Parallel(n_jobs=workers)(delayed(worker)(encoding) for encoding in progress)


def _discrepancies(frame: pd.DataFrame) -> List[Discrepancy]:
    found = []
    for record in frame.to_dict(orient="records"):
        verdicts = tuple((route, record[route]) for route in ROUTES)
        pair = first_disagreement(verdicts)
        if pair is not None:
            found.append(Discrepancy(record["encoding"], verdicts, pair))
    return found


def cross_validate(
    spec: InstanceSpec,
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
    workers: int = 1,
    show_progress: bool = False,
) -> SweepReport:
    """Evaluates every instance of ``spec`` and collects route disagreements.

    Args:
        spec: The instance corpus.
        field: Coefficient field of the oracle.
        bounds: Enumeration bounds.
        workers: Worker processes; rows are merged in encoding order.
        show_progress: Show a progress bar on stderr.

    Returns:
        A `SweepReport`; instances above the bounds appear with an ``error``.

    Raises:
        BoundExceeded: If the instance expansion itself is too large.
    """
    encodings = [encode_instance(graph) for graph in enumerate_oriented(spec)]
    logger.info("Cross-validating %d instances of %s", len(encodings), spec.families)
    rows = _run_rows(
        encodings,
        partial(_evaluate_encoding, field=field, bounds=bounds),
        workers=workers,
        show_progress=show_progress,
        description="sweep",
    )
    frame = (
        pd.DataFrame(rows, columns=list(SWEEP_COLUMNS))
        .sort_values("encoding", kind="stable")
        .reset_index(drop=True)
    )
    discrepancies = _discrepancies(frame)
    for discrepancy in discrepancies:
        logger.warning(
            "Discrepancy on %s between %s", discrepancy.encoding, discrepancy.first_pair
        )
    summary = {
        "instances": len(frame),
        "in_scope": int(frame["in_scope"].sum()),
        "cm": int(frame["oracle"].eq(True).sum()),
        "errors": int(frame["error"].notna().sum()),
        "discrepancies": len(discrepancies),
    }
    logger.info("Sweep finished: %s", summary)
    return SweepReport(frame, discrepancies, summary)


def replay_discrepancy(
    discrepancy: Discrepancy,
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
) -> Dict[str, Optional[bool]]:
    """Re-evaluates a recorded instance from its encoding alone."""
    row = _evaluate_encoding(discrepancy.encoding, field, bounds)
    return {route: row[route] for route in ROUTES}


def _conjecture_row(encoding: str, field: FieldChoice, bounds: Bounds) -> Dict:
    graph = decode_instance(encoding)
    length = _girth_value(graph)
    row: Dict[str, Any] = {
        "encoding": encoding,
        "n": graph.vertex_count,
        "girth": length,
        "control": length == 0 or length >= 5,
        "graph_cm": None,
        "unmixed": None,
        "predicted": None,
        "oracle": None,
        "condition_3": None,
        "agree": True,
        "error": None,
    }
    try:
        row["graph_cm"] = is_cohen_macaulay(
            underlying_ideal(graph), field, bounds=bounds
        )
        row["unmixed"] = is_unmixed(graph, bound=bounds.subset_enumeration).unmixed
        row["predicted"] = row["graph_cm"] and row["unmixed"]
        row["oracle"] = is_cohen_macaulay(edge_ideal(graph), field, bounds=bounds)
        row["agree"] = row["predicted"] == row["oracle"]
        if row["control"]:
            row["condition_3"] = check_condition_3(graph).is_cm
            row["agree"] = row["agree"] and row["condition_3"] == row["oracle"]
    except EdgeIdealError as exception:
        row["error"] = _error_text(exception)
        logger.warning("Instance %s skipped: %s", encoding, row["error"])
    return row


def conjecture_search(
    spec: InstanceSpec,
    *,
    field: FieldChoice = FieldChoice(),
    bounds: Bounds = Bounds(),
    workers: int = 1,
    show_progress: bool = False,
) -> SweepReport:
    """Tests "CM(D) iff CM(G) and D unmixed" on triangle-free instances.

    Rows with girth >= 5 (and forests) form the control group, where the
    combinatorial conditions are also checked. Every row where the prediction
    and the oracle differ becomes a `Discrepancy` with routes ``predicted`` and
    ``oracle``. The result is evidence only; the families are finite.
    """
    encodings = [encode_instance(graph) for graph in enumerate_oriented(spec)]
    logger.info("Conjecture search over %d instances", len(encodings))
    rows = _run_rows(
        encodings,
        partial(_conjecture_row, field=field, bounds=bounds),
        workers=workers,
        show_progress=show_progress,
        description="conjecture",
    )
    frame = (
        pd.DataFrame(rows, columns=list(CONJECTURE_COLUMNS))
        .sort_values("encoding", kind="stable")
        .reset_index(drop=True)
    )
    discrepancies = []
    for record in frame.to_dict(orient="records"):
        if record["agree"]:
            continue
        verdicts = (
            ("predicted", record["predicted"]),
            ("oracle", record["oracle"]),
            ("condition_3", record["condition_3"]),
        )
        pair = first_disagreement(verdicts) or ("predicted", "oracle")
        discrepancies.append(Discrepancy(record["encoding"], verdicts, pair))
        logger.warning("Conjecture mismatch on %s", record["encoding"])
    summary = {
        "instances": len(frame),
        "control": int(frame["control"].sum()),
        "errors": int(frame["error"].notna().sum()),
        "cm_not_predicted": int(
            (frame["oracle"].eq(True) & frame["predicted"].eq(False)).sum()
        ),
        "predicted_not_cm": int(
            (frame["predicted"].eq(True) & frame["oracle"].eq(False)).sum()
        ),
        "control_discrepancies": int(
            (frame["control"] & frame["agree"].eq(False)).sum()
        ),
        "discrepancies": len(discrepancies),
    }
    logger.info("Conjecture search finished: %s", summary)
    return SweepReport(frame, discrepancies, summary)


def report_lines(report: SweepReport) -> List[str]:
    """JSON lines of every row followed by a summary record."""
    body = report.frame.to_json(orient="records", lines=True)
    lines = [line for line in body.splitlines() if line]
    lines.append(json.dumps({"summary": report.summary}, sort_keys=True))
    return lines


def write_report(report: SweepReport, path: Path) -> None:
    """Writes the report as line-delimited JSON with a trailing summary."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(report_lines(report)) + "\n", encoding="utf-8")
    logger.info("Report written to %s", path)
