"""Command line interface.

Exit codes: 0 ok, 2 malformed input, 3 unresolved name, 4 size limit.
"""

from __future__ import annotations

import functools
import sys
from dataclasses import dataclass

import click

from . import io
from .attributes import evaluate
from .errors import (
    AttributeSpecError,
    DomainError,
    InputError,
    LimitExceededError,
    PathAttrError,
    UnknownNameError,
)
from .graph import EdgePropertyVector
from .hypergraph import incidence_matrix, r_incidence_matrix
from .polymatroid import DEFAULT_SUBSET_LIMIT, check_axioms, tabulate
from .transforms import DEFAULT_CUT_LIMIT, TransformKind, transform

EXIT_PARSE = 2
EXIT_NAME = 3
EXIT_LIMIT = 4


@dataclass
class Options:
    format: str
    verbose: bool
    cut_limit: int
    subset_limit: int


def _exit_code(exc: PathAttrError) -> int:
    if isinstance(exc, LimitExceededError):
        return EXIT_LIMIT
    if isinstance(exc, (UnknownNameError, DomainError)):
        return EXIT_NAME
    if isinstance(exc, (InputError, AttributeSpecError)):
        return EXIT_PARSE
    return 1


def _guarded(fn):
    """Turn library errors into a one-line diagnostic and an exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PathAttrError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(_exit_code(exc))

    return wrapper


def _emit(text: str) -> None:
    click.echo(text, nl=False)


def _no_csv(opts: Options) -> None:
    if opts.format == "csv":
        raise click.UsageError("csv output is only available for the matrix command")


@click.group()
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table",
              show_default=True, help="Output format.")
@click.option("--verbose", is_flag=True, help="Include intermediate results.")
@click.option("--cut-limit", type=click.IntRange(min=0), default=DEFAULT_CUT_LIMIT, show_default=True,
              help="Largest path-set union (in edges) for cut enumeration.")
@click.option("--subset-limit", type=click.IntRange(min=0), default=DEFAULT_SUBSET_LIMIT, show_default=True,
              help="Largest path set for polymatroid tabulation (hard ceiling 16).")
@click.pass_context
def cli(ctx: click.Context, fmt: str, verbose: bool, cut_limit: int, subset_limit: int) -> None:
    """Compute attributes of path sets in directed networks."""
    ctx.obj = Options(fmt, verbose, cut_limit, subset_limit)


@cli.command()
@click.argument("graph_file")
@click.argument("path_set")
@click.argument("attribute")
@click.pass_obj
@_guarded
def compute(opts: Options, graph_file: str, path_set: str, attribute: str) -> None:
    """Evaluate ATTRIBUTE on the path set PATH_SET of GRAPH_FILE."""
    _no_csv(opts)
    doc = io.read_document(graph_file)
    spec = doc.attributes.get(attribute)
    result = evaluate(spec, doc.path_set(path_set), doc.graph, cut_limit=opts.cut_limit)
    if opts.format == "json":
        _emit(io.dumps(io.result_to_dict(path_set, result, opts.verbose)))
        return
    unit = f" {result.unit}" if result.unit else ""
    lines = [f"{result.name}({path_set}) = {io.format_number(result.value)}{unit}"]
    if opts.verbose:
        lines.append(f"transform: {result.transform}")
        lines += [f"  {label}: {io.format_number(v)}" for label, v in zip(result.column_labels, result.columns)]
    _emit("\n".join(lines) + "\n")


@cli.command()
@click.argument("graph_file")
@click.argument("path_set")
@click.argument("kind", type=click.Choice([k.value for k in TransformKind]))
@click.option("--r", "r", type=float, default=0.0, show_default=True, help="Value for non-member entries.")
@click.option("--property", "prop", default=None, help="Edge property for member entries (default: none).")
@click.pass_obj
@_guarded
def matrix(opts: Options, graph_file: str, path_set: str, kind: str, r: float, prop: str | None) -> None:
    """Print the (r-)incidence matrix of a path set transformation."""
    doc = io.read_document(graph_file)
    h = transform(kind, doc.path_set(path_set), cut_limit=opts.cut_limit)
    if prop is None or prop == "none":
        if r == 0:
            m = incidence_matrix(h)
        else:
            ones = EdgePropertyVector("none", {e: 1.0 for e in doc.graph.edge_ids})
            m = r_incidence_matrix(r, ones, h)
    else:
        m = r_incidence_matrix(r, doc.graph.property(prop), h)
    if opts.format == "json":
        _emit(io.dumps(io.matrix_to_dict(m)))
    elif opts.format == "csv":
        _emit(io.matrix_to_csv(m))
    else:
        _emit(io.matrix_to_table(m))


@cli.command()
@click.argument("graph_file")
@click.argument("path_set")
@click.pass_obj
@_guarded
def cuts(opts: Options, graph_file: str, path_set: str) -> None:
    """List the minimal cuts of a path set in canonical order."""
    _no_csv(opts)
    doc = io.read_document(graph_file)
    h = transform(TransformKind.CUTS, doc.path_set(path_set), cut_limit=opts.cut_limit)
    doc_out = io.cuts_to_dict(path_set, h)
    if opts.format == "json":
        _emit(io.dumps(doc_out))
        return
    lines = [f"{c['label']}: {', '.join(c['edges'])}" for c in doc_out["cuts"]]
    _emit("\n".join([f"{doc_out['count']} cuts of {path_set}", *lines]) + "\n")


@cli.command()
@click.argument("graph_file")
@click.argument("path_set")
@click.argument("attribute")
@click.pass_obj
@_guarded
def polymatroid(opts: Options, graph_file: str, path_set: str, attribute: str) -> None:
    """Check polymatroid axioms of the set function induced by ATTRIBUTE."""
    _no_csv(opts)
    doc = io.read_document(graph_file)
    spec = doc.attributes.get(attribute)
    table = tabulate(spec, doc.path_set(path_set), doc.graph, limit=opts.subset_limit, cut_limit=opts.cut_limit)
    report = check_axioms(table)
    out = {"path_set": path_set, "attribute": attribute, **report.to_dict()}
    for verdict in out["verdicts"].values():
        if "values" in verdict:
            verdict["values"] = {k: io.display_number(v) for k, v in verdict["values"].items()}
    if opts.verbose:
        out["table"] = {
            "{" + ",".join(table.members(m)) + "}": io.display_number(float(v)) for m, v in enumerate(table.values)
        }
    if opts.format == "json":
        _emit(io.dumps(out))
        return
    lines = [f"{attribute} on {path_set} {{{', '.join(report.ground_set)}}}: {'+'.join(report.classification)}"]
    for name, verdict in report.verdicts.items():
        if verdict.holds:
            lines.append(f"  {name}: holds")
            continue
        sets = " ".join("{" + ",".join(w) + "}" for w in verdict.witness)
        vals = ", ".join(f"{k}={io.format_number(v)}" for k, v in verdict.values.items())
        lines.append(f"  {name}: violated at {sets} ({vals}); {verdict.violations} violation(s)")
    if opts.verbose:
        lines += [f"  rho{k} = {v}" for k, v in out["table"].items()]
    _emit("\n".join(lines) + "\n")


@cli.command()
@click.argument("graph_file")
@click.pass_obj
@_guarded
def validate(opts: Options, graph_file: str) -> None:
    """Check that GRAPH_FILE parses and all its path sets are valid."""
    _no_csv(opts)
    doc = io.read_document(graph_file)
    g = doc.graph
    summary = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "properties": {
            name: {"unit": p.unit, "domain": p.domain} for name, p in g.properties.items()
        },
        "path_sets": {
            name: {"paths": len(ps), "source": ps.source, "destination": ps.destination}
            for name, ps in doc.path_sets.items()
        },
        "attributes": list(doc.attributes),
    }
    if opts.format == "json":
        _emit(io.dumps(summary))
        return
    lines = [f"ok: {summary['vertices']} vertices, {summary['edges']} edges"]
    for name, p in g.properties.items():
        lines.append(f"  property {name} [{p.domain}]" + (f" ({p.unit})" if p.unit else ""))
    for name, ps in doc.path_sets.items():
        ends = f"{ps.source}⇒{ps.destination}" if not ps.is_empty else "empty"
        lines.append(f"  path set {name}: {len(ps)} path(s), {ends}")
    lines.append("  attributes: " + ", ".join(summary["attributes"]))
    _emit("\n".join(lines) + "\n")


def main() -> None:
    cli(prog_name="pathattr")


if __name__ == "__main__":
    main()
