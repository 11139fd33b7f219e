"""Command-line interface: validation, bijections, enumeration, verification and rewiring."""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import typer

from bijections.beta import Bi, Pair, beta_forward, beta_inverse
from config.constants import MapKind, SplitRange
from config.settings import APP_SETTINGS, get_settings
from enumeration.counts import count_table
from enumeration.generators import enumerate_bicellular, enumerate_unicellular
from enumeration.verify import verify_bijection, verify_recursion
from formats.records import format_record, format_trace, parse_records
from formats.tables import format_bijection_report, format_count_table, format_recursion_report
from maps.bicellular import BicellularMap
from maps.classify import classify_bicellular, classify_unicellular
from maps.unicellular import UnicellularMap
from rna.diagram import Diagram
from rna.duality import diagram_to_bicellular, diagram_to_unicellular, genus_of_diagram, map_to_diagram
from rna.rewire import rewire
from utils.errors import MapsError
from utils.validators import validate_edge_bound

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2

app = typer.Typer(
    name=APP_SETTINGS["app_name"],
    help="Bijections between planted unicellular maps, pairs and bicellular maps.",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR."),
):
    level = (log_level or get_settings()["log_level"]).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


# ── helpers ────────────────────────────────────────────────────────


def _fail(message: str, code: int = EXIT_INPUT_ERROR):
    typer.echo(f"error: {message}", err=True)
    raise typer.Exit(code)


@contextmanager
def _input_errors():
    try:
        yield
    except MapsError as e:
        _fail(str(e))
    except UnicodeDecodeError as e:
        _fail(f"input is not valid UTF-8 at byte {e.start}")
    except OSError as e:
        _fail(f"{e.filename}: {e.strerror}")


def _read_records(path: Path) -> list:
    text = sys.stdin.read() if str(path) == "-" else path.read_text(encoding="utf-8")
    records = parse_records(text)
    if not records:
        _fail(f"{path}: no records")
    return records


def _emit(records) -> None:
    typer.echo("\n\n".join(format_record(r) for r in records))


def _check_edges(n: int) -> None:
    ok, msg = validate_edge_bound(n)
    if not ok:
        _fail(msg)


def _workers(workers: Optional[int]) -> int:
    workers = workers if workers is not None else get_settings()["workers"]
    if workers < 1:
        _fail(f"--workers must be at least 1, got {workers}")
    return workers


def _store(db: Optional[Path]):
    path = db if db is not None else get_settings()["database_path"]
    if path is None:
        return None
    from models.database import DatabaseManager
    from models.results_store import ResultsStore
    return ResultsStore(DatabaseManager(str(path)))


def _split(strict: bool) -> SplitRange:
    return SplitRange.STRICT if strict else SplitRange.INCLUSIVE


def _kind(record) -> str:
    if isinstance(record, BicellularMap):
        return MapKind.BICELLULAR.value
    if isinstance(record, UnicellularMap):
        return MapKind.UNICELLULAR.value
    return "diagram"


# ── map commands ───────────────────────────────────────────────────


@app.command()
def validate(path: Path = typer.Argument(..., help="Record file, or - for stdin.")):
    """Check every record in a file against its invariants."""
    with _input_errors():
        records = _read_records(path)
    for record in records:
        if isinstance(record, Diagram):
            typer.echo(f"valid diagram edges {len(record.arcs)} backbones {record.backbone_count}")
        elif isinstance(record, BicellularMap):
            typer.echo(f"valid {_kind(record)} edges {record.n} m {record.m}")
        else:
            typer.echo(f"valid {_kind(record)} edges {record.n}")


@app.command()
def genus(path: Path = typer.Argument(..., help="Record file, or - for stdin.")):
    """Print the genus of every map or diagram record."""
    with _input_errors():
        for record in _read_records(path):
            g = genus_of_diagram(record) if isinstance(record, Diagram) else record.genus
            typer.echo(f"genus {g}")


@app.command()
def classify(path: Path = typer.Argument(..., help="Map record file, or - for stdin.")):
    """Print the class (I, II, III, BI or BII) of every map record."""
    with _input_errors():
        for record in _read_records(path):
            if isinstance(record, Diagram):
                _fail("classify takes map records, not diagrams")
            if isinstance(record, BicellularMap):
                map_class = classify_bicellular(record)
            else:
                map_class = classify_unicellular(record)
            typer.echo(f"class {map_class.value} genus {record.genus}")


@app.command()
def decompose(path: Path = typer.Argument(..., help="Unicellular map record file, or - for stdin.")):
    """Apply the inverse bijection: a pair of maps or one bicellular map."""
    outputs = []
    with _input_errors():
        for record in _read_records(path):
            if not isinstance(record, UnicellularMap):
                _fail(f"decompose takes unicellular maps, got a {_kind(record)} record")
            x = beta_inverse(record)
            outputs.extend((x.u1, x.u2) if isinstance(x, Pair) else (x.b,))
    _emit(outputs)


@app.command()
def compose(paths: List[Path] = typer.Argument(..., help="Two unicellular records or one bicellular record.")):
    """Apply the bijection: glue two unicellular maps, or plant a bicellular one."""
    with _input_errors():
        records = [r for p in paths for r in _read_records(p)]
        if len(records) == 2 and all(isinstance(r, UnicellularMap) for r in records):
            x = Pair(*records)
        elif len(records) == 1 and isinstance(records[0], BicellularMap):
            x = Bi(records[0])
        else:
            _fail("compose needs two unicellular records or one bicellular record, got "
                  + ", ".join(_kind(r) for r in records))
        u = beta_forward(x)
    _emit([u])


@app.command()
def dual(path: Path = typer.Argument(..., help="Diagram or map record file, or - for stdin.")):
    """Convert diagrams into their dual maps and maps into diagrams."""
    outputs = []
    with _input_errors():
        for record in _read_records(path):
            if isinstance(record, Diagram):
                if record.backbone_count == 1:
                    outputs.append(diagram_to_unicellular(record))
                else:
                    outputs.append(diagram_to_bicellular(record))
            else:
                outputs.append(map_to_diagram(record))
    _emit(outputs)


@app.command(name="rewire")
def rewire_command(
    path: Path = typer.Argument(..., help="Two-backbone diagram record file, or - for stdin."),
    trace: Optional[str] = typer.Option(None, "--trace", help="Write the position trace to PATH, or - for stdout."),
):
    """Rewire an interaction structure over two backbones into a diagram over one."""
    outputs = []
    traces = []
    with _input_errors():
        for record in _read_records(path):
            if not isinstance(record, Diagram):
                _fail(f"rewire takes diagrams, got a {_kind(record)} record")
            out, record_trace = rewire(record)
            outputs.append(out)
            traces.append(format_trace(record_trace))
        _emit(outputs)
        if trace == "-":
            typer.echo("")
            typer.echo("\n\n".join(traces))
        elif trace is not None:
            Path(trace).write_text("\n\n".join(traces) + "\n")


# ── enumeration and verification ───────────────────────────────────


@app.command(name="enumerate")
def enumerate_command(
    edges: int = typer.Option(..., "--edges", help="Number of edges."),
    genus_filter: Optional[int] = typer.Option(None, "--genus", help="Only maps of this genus."),
    bicellular: bool = typer.Option(False, "--bicellular", help="Enumerate bicellular maps instead."),
    strict_split: bool = typer.Option(False, "--strict-split", help="Restrict bicellular splits to 1 < m < 2n-1."),
):
    """Stream every map with the given number of edges."""
    _check_edges(edges)
    if bicellular:
        maps = enumerate_bicellular(edges, genus_filter, _split(strict_split))
    else:
        maps = enumerate_unicellular(edges, genus_filter)
    for i, x in enumerate(maps):
        if i:
            typer.echo("")
        typer.echo(format_record(x))


@app.command()
def counts(
    max_edges: int = typer.Option(..., "--max-edges", help="Largest edge count in the table."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel worker processes."),
    strict_split: bool = typer.Option(False, "--strict-split", help="Restrict bicellular splits to 1 < m < 2n-1."),
    xlsx: Optional[Path] = typer.Option(None, "--xlsx", help="Also write the table as a spreadsheet."),
    db: Optional[Path] = typer.Option(None, "--db", help="SQLite result store to reuse and update."),
):
    """Print the exact count table c_g(n) and c2_g(n)."""
    _check_edges(max_edges)
    workers = _workers(workers)
    split_range = _split(strict_split)
    with _input_errors():
        store = _store(db)
        table = store.load_count_table(max_edges, split_range) if store else None
        if table is None:
            table = count_table(max_edges, workers, split_range)
            if store:
                store.save_count_table(table)
        typer.echo(format_count_table(table))
        if xlsx is not None:
            from utils.export import export_count_table_xlsx
            export_count_table_xlsx(table, xlsx)


@app.command(name="verify-recursion")
def verify_recursion_command(
    max_edges: int = typer.Option(..., "--max-edges", help="Largest edge count c_{g+1}(n+1) is checked at."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel worker processes."),
    strict_split: bool = typer.Option(False, "--strict-split", help="Restrict bicellular splits to 1 < m < 2n-1."),
    db: Optional[Path] = typer.Option(None, "--db", help="SQLite result store to reuse and update."),
):
    """Check the counting recursion cell by cell against brute-force tables."""
    _check_edges(max_edges)
    workers = _workers(workers)
    split_range = _split(strict_split)
    with _input_errors():
        store = _store(db)
        max_bicellular_n = max(max_edges - 1, 0)
        table = store.load_count_table(max_edges, split_range, max_bicellular_n) if store else None
        if table is None:
            table = count_table(max_edges, workers, split_range, max_bicellular_n)
            if store:
                store.save_count_table(table)
        report = verify_recursion(max_edges, workers, split_range, table)
        if store:
            store.record_run("recursion", report, edges=max_edges)
    typer.echo(format_recursion_report(report))
    if not report.passed:
        raise typer.Exit(EXIT_FAILED)


@app.command(name="verify-bijection")
def verify_bijection_command(
    edges: int = typer.Option(..., "--edges", help="Edge count of the unicellular side."),
    genus_value: int = typer.Option(..., "--genus", help="Genus of the unicellular side, at least 1."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel worker processes."),
    db: Optional[Path] = typer.Option(None, "--db", help="SQLite result store to log the run in."),
):
    """Round-trip every map and every decomposition of the given size through the bijection."""
    _check_edges(edges)
    if edges < 1:
        _fail(f"--edges must be at least 1, got {edges}")
    if genus_value < 1:
        _fail(f"--genus must be at least 1, got {genus_value}")
    workers = _workers(workers)
    with _input_errors():
        report = verify_bijection(edges, genus_value, workers)
        store = _store(db)
        if store:
            store.record_run("bijection", report, edges=edges, genus=genus_value)
    typer.echo(format_bijection_report(report))
    if not report.passed:
        raise typer.Exit(EXIT_FAILED)
