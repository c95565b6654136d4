"""Command-Line Interface for the edge ideal analysis platform.

Payloads (certificates, verdicts, reports) go to stdout; diagnostics go to
stderr. Exit status 0 means the command completed whatever the verdict, 1 a
usage or input error, 2 an exceeded enumeration bound.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

import click

from .config_manager import ConfigManager
from .core import EdgeIdealAnalyzer
from .document import GraphDocument, list_fixtures, load_fixture, read_graph_file
from .exceptions import BoundExceeded, RouteDisagreement
from .harness import write_report
from .linear_algebra import FieldChoice
from .monomial_ideal import MonomialIdeal, parse_ideal
from .oriented_graph import edge_ideal
from .reporting import (
    certificate_to_dict,
    decomposition_to_dict,
    oracle_to_dict,
    render_certificate,
    render_decomposition,
    render_oracle,
    render_summary,
    render_unmixed,
    unmixed_to_dict,
)

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_BOUND = 2


class EdgeIdealGroup(click.Group):
    """Maps library errors to the documented exit statuses."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except BoundExceeded as exception:
            click.echo(f"⛔ {exception}", err=True)
            ctx.exit(EXIT_BOUND)
        except click.UsageError as exception:
            click.echo(f"❌ {exception.format_message()}", err=True)
            ctx.exit(EXIT_USAGE)
        except (FileNotFoundError, ValueError, OverflowError) as exception:
            click.echo(f"❌ {exception}", err=True)
            ctx.exit(EXIT_USAGE)


def _setup(config: str, field: Optional[str] = None) -> EdgeIdealAnalyzer:
    """Loads configuration, configures logging and builds the analyzer."""
    config_manager = ConfigManager(config_path=config)
    level = str(config_manager.get("logging.level", "INFO")).upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    chosen = FieldChoice.parse(field) if field else None
    return EdgeIdealAnalyzer(config_manager, field=chosen)


def _document(input_path: Optional[Path], fixture: Optional[str]) -> GraphDocument:
    if input_path and fixture:
        raise click.UsageError("use either --input or --fixture, not both")
    if input_path:
        return read_graph_file(input_path)
    if fixture:
        return load_fixture(fixture)
    raise click.UsageError("one of --input or --fixture is required")


def _ideal_source(
    input_path: Optional[Path], fixture: Optional[str], ideal: Optional[str]
) -> Tuple[MonomialIdeal, Sequence[str]]:
    """The ideal given by --ideal, or the edge ideal of a graph document."""
    if ideal:
        if input_path or fixture:
            raise click.UsageError("--ideal cannot be combined with a graph")
        return parse_ideal(ideal)
    graph = _document(input_path, fixture).graph
    return edge_ideal(graph), graph.labels


def _emit(payload, as_json: bool, text: str):
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


def _weights(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exception:
        raise click.BadParameter(f"invalid weights '{text}'") from exception


def _fixed(entries: Sequence[str]) -> Tuple[Tuple[str, int], ...]:
    fixed = []
    for entry in entries:
        label, _, weight = entry.partition("=")
        if not weight.isdigit() or int(weight) < 1:
            raise click.BadParameter(f"expected LABEL=WEIGHT, got '{entry}'")
        fixed.append((label, int(weight)))
    return tuple(fixed)


config_option = click.option(
    "--config", default="config.yaml", help="Path to the configuration file."
)
input_option = click.option(
    "--input",
    "input_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Graph document to read.",
)
fixture_option = click.option("--fixture", help="Name of a packaged graph document.")
json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
field_option = click.option("--field", help="Coefficient field: 'q' or 'p:PRIME'.")


def _corpus_options(command):
    for option in reversed(
        (
            click.option(
                "--family",
                "families",
                multiple=True,
                help="Graph family, e.g. cycle:5, whiskered, fixture:example-graph.",
            ),
            click.option("--max-n", type=int, help="Largest underlying graph."),
            click.option(
                "--sample", type=int, help="Draw this many seeded instances instead."
            ),
            click.option("--weights", help="Weight alphabet, e.g. 1,2."),
            click.option(
                "--fix-weight",
                "fixed_weights",
                multiple=True,
                help="Keep a vertex weight fixed, as LABEL=WEIGHT.",
            ),
            click.option("--seed", type=int, help="Seed for sampled policies."),
            click.option("--workers", type=int, help="Worker processes."),
            click.option(
                "--output",
                type=click.Path(dir_okay=False, path_type=Path),
                help="Write the JSON-lines report here.",
            ),
        )
    ):
        command = option(command)
    return command


@click.group(cls=EdgeIdealGroup)
def main():
    """A CLI for edge ideals of weighted oriented graphs."""


@main.command()
@config_option
@input_option
@fixture_option
@json_option
@click.option(
    "--no-cross-check",
    is_flag=True,
    help="Skip the strong-cover route.",
)
def classify(config, input_path, fixture, as_json, no_cross_check):
    """Classify Cohen-Macaulayness (girth >= 5) with a certificate."""
    analyzer = _setup(config)
    graph = _document(input_path, fixture).graph
    try:
        certificate = analyzer.classify(graph, cross_check=not no_cross_check)
    except RouteDisagreement as exception:
        logger.warning("Routes disagree: %s", exception.verdicts)
        _emit(
            {"error": "route-disagreement", "verdicts": exception.verdicts},
            as_json,
            f"⚠️ Routes disagree: {exception.verdicts}",
        )
        return
    _emit(
        certificate_to_dict(certificate, graph),
        as_json,
        render_certificate(certificate, graph),
    )


@main.command()
@config_option
@input_option
@fixture_option
@json_option
def unmixed(config, input_path, fixture, as_json):
    """Decide unmixedness by strong vertex covers."""
    analyzer = _setup(config)
    graph = _document(input_path, fixture).graph
    result = analyzer.unmixedness(graph)
    _emit(unmixed_to_dict(result, graph), as_json, render_unmixed(result, graph))


@main.command()
@config_option
@input_option
@fixture_option
@click.option("--ideal", help="Monomial ideal such as 'x*y^2, y*z^2'.")
@field_option
@json_option
def oracle(config, input_path, fixture, ideal, field, as_json):
    """Decide Cohen-Macaulayness with the Stanley-Reisner oracle."""
    analyzer = _setup(config, field)
    monomial_ideal, names = _ideal_source(input_path, fixture, ideal)
    result = analyzer.oracle(monomial_ideal)
    _emit(
        oracle_to_dict(result, monomial_ideal, names),
        as_json,
        render_oracle(result, monomial_ideal, names),
    )


@main.command()
@config_option
@input_option
@fixture_option
@click.option("--ideal", help="Monomial ideal such as 'x*y^2, y*z^2'.")
@json_option
def decompose(config, input_path, fixture, ideal, as_json):
    """Irreducible components and associated primes of an ideal."""
    _setup(config)
    monomial_ideal, names = _ideal_source(input_path, fixture, ideal)
    _emit(
        decomposition_to_dict(monomial_ideal, names),
        as_json,
        render_decomposition(monomial_ideal, names),
    )


def _run_corpus(
    analyzer: EdgeIdealAnalyzer,
    run,
    *,
    families,
    section,
    max_n,
    sample,
    weights,
    fixed_weights,
    seed,
    output,
    as_json,
    title,
):
    spec = analyzer.instance_spec(
        families,
        max_n=max_n,
        sample_size=sample,
        weights=_weights(weights),
        seed=seed,
        fixed_weights=_fixed(fixed_weights),
        section=section,
    )
    click.echo(f"🚀 {title} over {', '.join(spec.families)}...", err=True)
    report = run(spec)
    if output:
        write_report(report, output)
        click.echo(f"📄 Report written to {output}", err=True)
    payload = {
        "summary": report.summary,
        "discrepancies": [
            {
                "encoding": discrepancy.encoding,
                "verdicts": discrepancy.verdict_map,
                "first_pair": list(discrepancy.first_pair),
            }
            for discrepancy in report.discrepancies
        ],
    }
    _emit(payload, as_json, render_summary(report, title))


@main.command()
@config_option
@_corpus_options
@field_option
@json_option
def sweep(
    config,
    families,
    max_n,
    sample,
    weights,
    fixed_weights,
    seed,
    workers,
    output,
    field,
    as_json,
):
    """Cross-validate the three decision routes over a graph corpus."""
    analyzer = _setup(config, field)
    if workers is not None:
        analyzer.workers = workers
    _run_corpus(
        analyzer,
        analyzer.sweep,
        families=families or ("cycle:5",),
        section="harness",
        max_n=max_n,
        sample=sample,
        weights=weights,
        fixed_weights=fixed_weights,
        seed=seed,
        output=output,
        as_json=as_json,
        title="Sweep",
    )


@main.command()
@config_option
@_corpus_options
@field_option
@json_option
def conjecture(
    config,
    families,
    max_n,
    sample,
    weights,
    fixed_weights,
    seed,
    workers,
    output,
    field,
    as_json,
):
    """Compare CM(D) with CM(G) plus unmixedness on triangle-free graphs."""
    analyzer = _setup(config, field)
    if workers is not None:
        analyzer.workers = workers
    _run_corpus(
        analyzer,
        analyzer.conjecture,
        families=families or ("triangle-free",),
        section="conjecture",
        max_n=max_n,
        sample=sample,
        weights=weights,
        fixed_weights=fixed_weights,
        seed=seed,
        output=output,
        as_json=as_json,
        title="Conjecture search",
    )


@main.command()
@config_option
@click.option("--family", "families", multiple=True, help="Graph family.")
@click.option("--max-n", type=int, help="Largest underlying graph.")
@click.option("--sample", type=int, help="Draw this many seeded instances instead.")
@click.option("--seed", type=int, help="Seed for sampled policies.")
@json_option
def properties(config, families, max_n, sample, seed, as_json):
    """Run the property suites over a graph corpus."""
    analyzer = _setup(config)
    spec = analyzer.instance_spec(
        families or ("cycle:5",), max_n=max_n, sample_size=sample, seed=seed
    )
    findings = analyzer.check_properties(spec)
    payload = {
        suite: [
            {"check": f.check, "subject": f.subject, "detail": f.detail}
            for f in found
        ]
        for suite, found in findings.items()
    }
    lines = []
    for suite, found in findings.items():
        icon = "✅" if not found else "⚠️"
        lines.append(f"{icon} {suite}: {len(found)} findings")
        lines.extend(f"  {f.subject}: {f.detail}" for f in found[:5])
    _emit(payload, as_json, "\n".join(lines))


@main.command()
@json_option
def fixtures(as_json):
    """List the packaged graph documents."""
    names = list_fixtures()
    if as_json:
        click.echo(json.dumps(names))
        return
    for name in names:
        document = load_fixture(name)
        marker = " (reconstructed)" if document.reconstructed else ""
        click.echo(f"📁 {name}{marker}: {document.description}")


if __name__ == "__main__":
    main()
