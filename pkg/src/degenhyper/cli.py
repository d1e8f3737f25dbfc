"""Command-line interface: ``degenhyper eval | table | verify``.

Exit codes: 0 success, 1 unexpected identity outcome, 2 domain error,
3 non-convergence, 4 unparseable input.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction

import click

from .errors import DomainError, NoConvergence
from .hypergeometric import EvalMode, Kind
from .hypernumbers import Family, NumberQuery, evaluate
from .identities import registry, reports_to_json, run_all

CSV_HEADER = ["family", "n", "m", "p", "lambda", "lambda1", "mode", "value_exact", "value_float"]

EXIT_UNEXPECTED = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_PARSE = 4


class ParseError(click.BadParameter):
    exit_code = EXIT_PARSE


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{value!r} is not a rational literal like 3, -1/2 or 0.25", ctx, param)


class RangeType(click.ParamType):
    """``5``, ``0..4`` or ``1,3,7``."""

    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                lo, hi = (int(x) for x in text.split(".."))
                out = list(range(lo, hi + 1))
            else:
                out = sorted({int(x) for x in text.split(",")})
        except ValueError:
            raise ParseError(f"{value!r} is not an index range", ctx, param)
        if not out or min(out) < 0:
            raise ParseError(f"{value!r} must name at least one non-negative index", ctx, param)
        return out


RATIONAL = RationalType()
RANGE = RangeType()
FAMILIES = click.Choice([f.value for f in Family])


class _Cli(click.Group):
    """Maps usage errors to the parse exit code."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            if not standalone_mode:
                raise
            exc.show()
            sys.exit(EXIT_PARSE)
        except click.ClickException as exc:
            if not standalone_mode:
                raise
            exc.show()
            sys.exit(exc.exit_code)
        except click.exceptions.Abort:
            if not standalone_mode:
                raise
            click.echo("Aborted!", err=True)
            sys.exit(1)
        if standalone_mode:
            sys.exit(rv if isinstance(rv, int) else 0)
        return rv


def _mode(kind: str) -> EvalMode:
    max_terms = os.environ.get("DEGEN_MAX_TERMS")
    if max_terms is None:
        return EvalMode(Kind(kind))
    try:
        return EvalMode(Kind(kind), max_terms=int(max_terms))
    except ValueError:
        raise ParseError(f"DEGEN_MAX_TERMS={max_terms!r} is not a positive integer")


def _run(ctx: click.Context, fn):
    try:
        return fn()
    except NoConvergence as exc:
        click.echo(f"{type(exc).__name__}: {exc}", err=True)
        ctx.exit(EXIT_CONVERGENCE)
    except (DomainError, ValueError) as exc:
        click.echo(f"{type(exc).__name__}: {exc}", err=True)
        ctx.exit(EXIT_DOMAIN)


def format_value(value, exact: bool) -> str:
    if exact and isinstance(value, Fraction):
        return str(value)
    return f"{float(value):.15g}"


@click.group(cls=_Cli)
def cli():
    """Degenerate hypergeometric numbers: evaluate, tabulate, verify identities."""


@cli.command("eval")
@click.option("--family", required=True, type=FAMILIES)
@click.option("--n", "n", required=True, type=int)
@click.option("--m", "--k", "m", default=0, type=int, show_default=True, help="m index (k for GolombekB)")
@click.option("--p", "p", default=1, type=int, show_default=True)
@click.option("--lambda", "lam", default="1", type=RATIONAL, show_default=True)
@click.option("--lambda1", "lam1", default="1", type=RATIONAL, show_default=True)
@click.option("--mode", default="exact", type=click.Choice(["exact", "numeric"]), show_default=True)
@click.pass_context
def eval_cmd(ctx, family, n, m, p, lam, lam1, mode):
    """Print one number."""
    eval_mode = _mode(mode)
    value = _run(ctx, lambda: evaluate(NumberQuery(family, n, m, p, lam, lam1, eval_mode)))
    click.echo(format_value(value, eval_mode.exact))


def table_rows(family, ns, ms, ps, lam, lam1, mode: str) -> list[dict]:
    eval_mode = _mode(mode)
    rows = []
    for n in ns:
        for m in ms:
            for p in ps:
                value = evaluate(NumberQuery(family, n, m, p, lam, lam1, eval_mode))
                rows.append({
                    "family": family,
                    "n": n,
                    "m": m,
                    "p": p,
                    "lambda": str(lam),
                    "lambda1": str(lam1),
                    "mode": mode,
                    "value_exact": str(value) if isinstance(value, Fraction) else "",
                    "value_float": repr(float(value)),
                })
    return rows


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".degenhyper-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


@cli.command("table")
@click.option("--family", required=True, type=FAMILIES)
@click.option("--n", "ns", required=True, type=RANGE)
@click.option("--m", "--k", "ms", default="0", type=RANGE, show_default=True)
@click.option("--p", "ps", default="1", type=RANGE, show_default=True)
@click.option("--lambda", "lam", default="1", type=RATIONAL, show_default=True)
@click.option("--lambda1", "lam1", default="1", type=RATIONAL, show_default=True)
@click.option("--mode", default="exact", type=click.Choice(["exact", "numeric"]), show_default=True)
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "json"]), show_default=True)
@click.option("--output", default="-", help="file path, or - for stdout")
@click.pass_context
def table_cmd(ctx, family, ns, ms, ps, lam, lam1, mode, fmt, output):
    """Tabulate a family over index ranges; nothing is written if any entry fails."""
    rows = _run(ctx, lambda: table_rows(family, ns, ms, ps, lam, lam1, mode))
    text = render_table(rows, fmt)
    if output == "-":
        click.echo(text, nl=False)
    else:
        _write_atomic(output, text)


@cli.command("verify")
@click.argument("ids", nargs=-1)
@click.option("--report", default="identity_report.json", show_default=True, help="JSON report path, - to skip")
@click.pass_context
def verify_cmd(ctx, ids, report):
    """Run registered identities (default: all) and summarize."""
    reg = registry()
    if not ids or ids == ("all",):
        ids = tuple(reg)
    unknown = [i for i in ids if i not in reg]
    if unknown:
        raise ParseError(f"unknown identity id(s): {', '.join(unknown)}; known: {', '.join(reg)}")
    reports = run_all(list(ids))
    for r in reports:
        click.echo(f"{r.id} {r.label} ({r.points_checked})")
    if report != "-":
        _write_atomic(report, reports_to_json(reports) + "\n")
    if not all(r.as_expected for r in reports):
        ctx.exit(EXIT_UNEXPECTED)


def main():  # pragma: no cover
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
