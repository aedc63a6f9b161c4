"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 unclassified diagram, 4 verification failure.
"""
from __future__ import annotations

import sys
from pathlib import Path

import click

from . import io
from .diagram import Diagram
from .dot import to_dot
from .orbit import enumerate_class
from .recognize import classify
from .seeds import MIN_RANK, TYPES, dynkin_seed
from .verify import check_closure, run_classification_check

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNCLASSIFIED = 3
EXIT_VERIFY = 4

# affine ranks exercised by the verification suites
_CLOSURE_RANKS = {"B1": range(3, 8), "C1": range(2, 8), "D1": range(4, 8)}


def _read_diagram(path: str) -> Diagram:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        return io.parse(data)
    except (io.ParseError, io.ValidationError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_PARSE)


def _write_doc(d: Diagram, out: str) -> None:
    data = io.serialize(d)
    if out == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(out).write_bytes(data)


class _Group(click.Group):
    """Click group whose usage errors exit with code 1 instead of 2."""

    def main(self, *args, **kwargs):
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            click.echo(f"error: {e.format_message()}", err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.exceptions.Abort:
            sys.exit(EXIT_USAGE)


@click.group(cls=_Group)
def main():
    """Mutation toolkit for weighted directed diagrams."""


@main.command("classify")
@click.argument("file")
def classify_cmd(file):
    """Print mutation type, family, parameters and width."""
    d = _read_diagram(file)
    cls = classify(d)
    if cls is None:
        click.echo("Unknown")
        sys.exit(EXIT_UNCLASSIFIED)
    fid = cls.match.family
    parts = [f"type={cls.type_display}", f"family={fid.kind}"]
    if fid.n is not None:
        parts.append(f"n={fid.n}")
    if fid.m is not None:
        parts.append(f"m={fid.m}")
    if fid.stars:
        parts.append("stars=" + ",".join(fid.stars))
    if cls.match.width is not None:
        parts.append(f"width={cls.match.width}")
    click.echo(" ".join(parts))


@main.command("mutate")
@click.argument("file")
@click.option("-k", "--vertex", required=True, help="Vertex id to mutate at.")
@click.option("-o", "--output", default="-", help="Output file (default stdout).")
def mutate_cmd(file, vertex, output):
    """Mutate the diagram at a vertex and write the resulting document."""
    d = _read_diagram(file)
    if vertex not in d.labels:
        click.echo(f"error: unknown vertex id '{vertex}'", err=True)
        sys.exit(EXIT_PARSE)
    _write_doc(d.mutate(d.labels.index(vertex)), output)


@main.command("orbit")
@click.argument("file")
@click.option("--max-members", default=100000, show_default=True)
@click.option("--max-steps", default=1000000, show_default=True)
def orbit_cmd(file, max_members, max_steps):
    """Enumerate the mutation class; print its size and a family census."""
    from .server import family_census

    d = _read_diagram(file)
    cs = enumerate_class(d, max_members=max_members, max_steps=max_steps)
    click.echo(f"size={cs.size} exhausted={str(cs.exhausted).lower()}")
    for fam, count in family_census(cs.members.values()).items():
        click.echo(f"{fam}\t{count}")


@main.command("seed")
@click.argument("dynkin_type", type=click.Choice(TYPES))
@click.argument("rank", type=int)
@click.option("-o", "--output", default="-", help="Output file (default stdout).")
def seed_cmd(dynkin_type, rank, output):
    """Emit the reference seed document for a type and rank."""
    if rank < MIN_RANK[dynkin_type]:
        click.echo(f"error: rank {rank} below minimum "
                   f"{MIN_RANK[dynkin_type]} for {dynkin_type}", err=True)
        sys.exit(EXIT_USAGE)
    _write_doc(dynkin_seed(dynkin_type, rank), output)


@main.command("export-dot")
@click.argument("file")
def export_dot_cmd(file):
    """Write the diagram in Graphviz DOT format."""
    d = _read_diagram(file)
    click.echo(to_dot(d), nl=False)


def _verify_suites(dynkin_type, rank, max_rank):
    suites = []
    if dynkin_type:
        if rank is None:
            raise click.UsageError("--type requires --rank")
        suites.append((dynkin_type, rank))
    else:
        for t in TYPES:
            top = {"A": 9, "B": 8, "D": 8, "B1": 7, "C1": 7, "D1": 7}[t]
            for r in range(MIN_RANK[t], min(top, max_rank) + 1):
                suites.append((t, r))
    return suites


@main.command("verify")
@click.option("--type", "dynkin_type", type=click.Choice(TYPES))
@click.option("--rank", type=int)
@click.option("--all", "run_all", is_flag=True)
@click.option("--max-rank", default=7, show_default=True)
@click.option("--report", "report_dir", default=None,
              help="Directory for the delimited report and figures.")
def verify_cmd(dynkin_type, rank, run_all, max_rank, report_dir):
    """Run verification suites; nonzero exit on any failure."""
    if not dynkin_type and not run_all:
        raise click.UsageError("specify --type T --rank R or --all")
    reports = []
    for t, r in _verify_suites(dynkin_type, rank, max_rank):
        rep = run_classification_check(t, r)
        reports.append((t, r, rep))
        click.echo(rep.summary())
        if t in _CLOSURE_RANKS and r in _CLOSURE_RANKS[t]:
            cs = enumerate_class(dynkin_seed(t, r))
            crep = check_closure(cs.members.values(), suite=f"closure:{t}{r}")
            reports.append((t, r, crep))
            click.echo(crep.summary())
    if report_dir:
        _write_report(Path(report_dir), reports)
    if any(not rep.passed for _, _, rep in reports):
        sys.exit(EXIT_VERIFY)


def _write_report(outdir: Path, reports) -> None:
    """Delimited summary plus rendered figures, side by side in outdir."""
    import csv

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "report.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "type", "rank", "diagrams", "mutations",
                         "failures", "passed"])
        for t, r, rep in reports:
            writer.writerow([rep.suite, t, r, rep.diagrams, rep.mutations,
                             len(rep.failures), rep.passed])
    class_rows = [(t, r, rep) for t, r, rep in reports
                  if rep.suite.startswith("classification")]
    if class_rows:
        fig, ax = plt.subplots(figsize=(8, 4))
        names = [f"{t}{r}" for t, r, _ in class_rows]
        sizes = [rep.diagrams for _, _, rep in class_rows]
        colors = ["tab:green" if rep.passed else "tab:red"
                  for _, _, rep in class_rows]
        ax.bar(names, sizes, color=colors)
        ax.set_yscale("log")
        ax.set_ylabel("class size (members up to isomorphism)")
        ax.set_xlabel("seed")
        ax.set_title("Enumerated mutation-class sizes")
        plt.setp(ax.get_xticklabels(), rotation=60, ha="right")
        fig.tight_layout()
        fig.savefig(outdir / "class_sizes.png", dpi=120)
        plt.close(fig)


@main.command("serve")
@click.option("--addr", default=None, envvar="DIAGMUT_ADDR",
              help="host:port to bind (default 127.0.0.1:8757).")
def serve_cmd(addr):
    """Start the HTTP service."""
    import uvicorn

    from .server import create_app

    addr = addr or "127.0.0.1:8757"
    try:
        host, port_s = addr.rsplit(":", 1)
        port = int(port_s)
    except ValueError:
        click.echo(f"error: bad address '{addr}'", err=True)
        sys.exit(EXIT_USAGE)
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
