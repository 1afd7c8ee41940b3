import logging
import sys
from dataclasses import replace
from functools import wraps

import click
from dotenv import load_dotenv

from data_utils import load_corpus
from sparing.config import Settings, load_settings
from sparing.errors import CapExceededError, LabelOverflowError, SparingError
from sparing.services.audit_service import AuditStatus, run_audit
from sparing.services.export_service import audit_csv, audit_table, report_text, to_dot
from sparing.services.family_service import generate
from sparing.services.labeling_service import construct_weak_iasi, require_total, verify
from sparing.services.solver_service import sparing_number_exact
from sparing.utils.parsing import (
    FAMILY_GRAMMAR,
    parse_family_spec,
    parse_graph,
    parse_labeling,
    serialize_graph,
    serialize_labeling,
)

# Load environment variables from .env file
load_dotenv()

log = logging.getLogger("sparing")

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def handle_errors(fn):
    """Map library errors to exit codes: 3 for resource caps, 2 for bad input."""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (CapExceededError, LabelOverflowError) as e:
            _fail(str(e), EXIT_CAP)
        except SparingError as e:
            _fail(str(e), EXIT_INPUT)
        except OSError as e:
            _fail(f"{e.filename or ''}: {e.strerror}", EXIT_INPUT)
    return wrapper


@click.group()
@click.option("--cap", type=int, default=None, help="Solver size cap (max vertices) for the chosen method.")
@click.option(
    "--method",
    type=click.Choice(["auto", "exhaustive", "bnb"]),
    default="auto",
    show_default=True,
    help="Exact solver: exhaustive scan, branch-and-bound, or auto by size.",
)
@click.option("--workers", type=int, default=None, help="Worker processes (default: SPARING_WORKERS or 1).")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logs on stderr.")
@click.pass_context
def cli(ctx: click.Context, cap: int | None, method: str, workers: int | None, verbose: int):
    """Sparing numbers and weak IASI labelings of simple graphs."""
    try:
        settings = load_settings()
        if workers is not None:
            if workers < 1:
                raise SparingError("--workers must be >= 1.")
            settings = replace(settings, workers=workers)
        settings = settings.with_cap(method, cap)
    except SparingError as e:
        _fail(str(e), EXIT_INPUT)

    level = {0: settings.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    log.debug("settings: %s, method=%s", settings, method)
    ctx.obj = {"settings": settings, "method": method}


@cli.command()
@click.argument("graph_file", type=click.File("r", encoding="utf-8"))
@click.option("--labeling", is_flag=True, help="Also print a witness labeling (stdout becomes a labeling file).")
@click.pass_obj
@handle_errors
def compute(obj: dict, graph_file, labeling: bool):
    """Compute the sparing number of the graph in GRAPH_FILE."""
    g = parse_graph(graph_file.read())
    result = sparing_number_exact(g, obj["method"], obj["settings"])
    summary = [
        f"sparing_number: {result.value}",
        f"method: {result.method.value}",
        f"vertices: {g.n}",
        f"edges: {g.edge_count}",
        "mono_vertices: " + " ".join(str(v) for v in result.witness.mono_vertices),
        "nonmono_vertices: " + " ".join(str(v) for v in result.witness.nonmono_vertices),
        "mono_edges: " + " ".join(str(e) for e in result.mono_edges),
    ]
    if not labeling:
        click.echo("\n".join(line.rstrip() for line in summary))
        return

    f = construct_weak_iasi(g, result.witness)
    click.echo("\n".join(f"# {line}".rstrip() for line in summary))
    click.echo(serialize_labeling(f), nl=False)


@cli.command("generate", epilog="Family spec grammar:\n\n\b\n" + FAMILY_GRAMMAR)
@click.argument("spec")
@click.argument("output", type=click.File("w", encoding="utf-8"), default="-")
@handle_errors
def generate_cmd(spec: str, output):
    """Write the edge-list file of the family member SPEC to OUTPUT (default stdout)."""
    g = generate(parse_family_spec(spec))
    output.write(serialize_graph(g))


@cli.command("verify")
@click.argument("graph_file", type=click.File("r", encoding="utf-8"))
@click.argument("labeling_file", type=click.File("r", encoding="utf-8"))
@handle_errors
def verify_cmd(graph_file, labeling_file):
    """Check that LABELING_FILE is a weak IASI of GRAPH_FILE (exit 0 iff weak)."""
    g = parse_graph(graph_file.read())
    f = parse_labeling(labeling_file.read())
    report = verify(g, f)
    click.echo(report_text(report), nl=False)
    sys.exit(EXIT_OK if report.is_weak else EXIT_FINDING)


@cli.command()
@click.argument("specs", nargs=-1)
@click.option("--csv", "as_csv", is_flag=True, help="Emit comma-separated values instead of a table.")
@click.pass_obj
@handle_errors
def audit(obj: dict, specs: tuple[str, ...], as_csv: bool):
    """
    Compare closed-form sparing numbers with the exact solver.

    SPECS are family specs where any integer may be a range a..b, e.g.
    "cycle:3..9" or "entwined:odd-chains,n=2..5". Without SPECS the built-in
    corpus is audited. Exit 1 if any row mismatches.
    """
    settings: Settings = obj["settings"]
    texts = list(specs) or load_corpus(settings.corpus_path)
    rows = run_audit(texts, obj["method"], settings)
    click.echo(audit_csv(rows) if as_csv else audit_table(rows), nl=False)
    if any(r.status is AuditStatus.MISMATCH for r in rows):
        sys.exit(EXIT_FINDING)


@cli.command("export-dot")
@click.argument("graph_file", type=click.File("r", encoding="utf-8"))
@click.argument("labeling_file", type=click.File("r", encoding="utf-8"), required=False)
@handle_errors
def export_dot(graph_file, labeling_file):
    """Print GRAPH_FILE as Graphviz DOT; mono-indexed vertices are boxed."""
    g = parse_graph(graph_file.read())
    labels = None
    if labeling_file is not None:
        labels = parse_labeling(labeling_file.read())
        require_total(g, labels)
    click.echo(to_dot(g, labels), nl=False)


if __name__ == "__main__":
    cli()
