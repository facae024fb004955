"""Command line front end.

Subcommands::

    gtrig pi     --p 2 --q 4                          print pi_pq
    gtrig eval   --p 2 --q 3 --fn sin --x 1.0         evaluate one function
    gtrig table  --p 2 --q 2 --fn sin --from 0 --to 1 --step 0.5
    gtrig verify --identity dbl-2-3 --samples 1000    sweep identities
    gtrig verify --all --format json

Exit codes: 0 success / all identities pass, 1 identity verification failure,
2 usage or domain error, 3 file I/O failure.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import click

from . import identities
from .errors import GtrigError, UnknownIdentityError
from .functions import ParamPair, arcsin_pq, cos_pq, pi_pq, sin_pq

__all__ = ["CliDefaults", "DEFAULTS", "TableRequest", "cli", "main"]


@dataclass(frozen=True)
class CliDefaults:
    """All flag defaults in one place."""

    samples: int = 1000
    tol: float = 1e-9
    seed: int = 0
    table_format: str = "csv"
    report_format: str = "table"


DEFAULTS = CliDefaults()

_FUNCTIONS = ("sin", "cos", "arcsin")


@dataclass(frozen=True)
class TableRequest:
    """A grid-evaluation request: function, range, step, and output format."""

    pp: ParamPair
    fn: str
    start: float
    stop: float
    step: float
    fmt: str = DEFAULTS.table_format
    out: Optional[str] = None

    def __post_init__(self) -> None:
        if self.fn not in _FUNCTIONS:
            raise GtrigError(f"fn must be one of {_FUNCTIONS}, got {self.fn!r}")
        if not self.start < self.stop:
            raise GtrigError(f"need from < to, got [{self.start}, {self.stop}]")
        if not 0.0 < self.step <= self.stop - self.start:
            raise GtrigError(
                f"step must lie in (0, to - from], got {self.step}"
            )
        if self.fn == "arcsin" and not (0.0 <= self.start and self.stop <= 1.0):
            raise GtrigError("arcsin tables require [from, to] within [0, 1]")

    def grid(self) -> list[float]:
        n = int((self.stop - self.start) / self.step + 1e-9) + 1
        return [self.start + i * self.step for i in range(n)]


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _evaluate(pp: ParamPair, fn: str, x: float) -> float:
    if fn == "sin":
        return sin_pq(pp, x).value
    if fn == "cos":
        return cos_pq(pp, x).value
    return arcsin_pq(pp, x)


@click.group()
def cli() -> None:
    """Generalized trigonometric functions and their identity verifier."""


@cli.command("pi")
@click.option("--p", type=float, required=True, help="First exponent, > 1.")
@click.option("--q", type=float, required=True, help="Second exponent, > 1.")
def cmd_pi(p: float, q: float) -> None:
    """Print the generalized circle constant pi_pq to 17 significant digits."""
    try:
        value = pi_pq(ParamPair(p, q))
    except GtrigError as exc:
        _fail(str(exc), 2)
    click.echo(f"{value:.17g}")


@cli.command("eval")
@click.option("--p", type=float, required=True)
@click.option("--q", type=float, required=True)
@click.option("--fn", type=click.Choice(_FUNCTIONS), required=True)
@click.option("--x", type=float, required=True)
def cmd_eval(p: float, q: float, fn: str, x: float) -> None:
    """Evaluate sin, cos, or arcsin for the pair (p, q) at a point."""
    try:
        value = _evaluate(ParamPair(p, q), fn, x)
    except GtrigError as exc:
        _fail(str(exc), 2)
    click.echo(f"{value:.17g}")


@cli.command("table")
@click.option("--p", type=float, required=True)
@click.option("--q", type=float, required=True)
@click.option("--fn", type=click.Choice(_FUNCTIONS), required=True)
@click.option("--from", "start", type=float, required=True)
@click.option("--to", "stop", type=float, required=True)
@click.option("--step", type=float, required=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default=DEFAULTS.table_format,
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_table(
    p: float,
    q: float,
    fn: str,
    start: float,
    stop: float,
    step: float,
    fmt: str,
    out: Optional[str],
) -> None:
    """Evaluate a function on a uniform grid; write CSV or JSON.

    Numbers are printed in shortest round-trip decimal form, so re-parsing a
    table reproduces the evaluated values bit for bit.
    """
    try:
        request = TableRequest(ParamPair(p, q), fn, start, stop, step, fmt, out)
        rows = [(x, _evaluate(request.pp, request.fn, x)) for x in request.grid()]
    except GtrigError as exc:
        _fail(str(exc), 2)
    if fmt == "csv":
        text = "x,value\n" + "".join(f"{x!r},{v!r}\n" for x, v in rows)
    else:
        text = json.dumps([{"x": x, "value": v} for x, v in rows]) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
        except OSError as exc:
            _fail(str(exc), 3)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _report_lines(reports: list[identities.IdentityReport], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {k: _json_safe(v) for k, v in dataclasses.asdict(rep).items()}
            for rep in reports
        ]
        return json.dumps(payload, indent=2) + "\n"
    header = f"{'identity':<16} {'samples':>8} {'max_abs_err':>13} {'argmax_x':>12} {'tol':>9} {'pass':>5} {'sec':>7}"
    lines = [header, "-" * len(header)]
    for rep in reports:
        lines.append(
            f"{rep.identity_id:<16} {rep.samples:>8} {rep.max_abs_err:>13.3e} "
            f"{rep.argmax_x:>12.6g} {rep.tol:>9.1e} {str(rep.passed):>5} {rep.elapsed:>7.2f}"
        )
    return "\n".join(lines) + "\n"


@cli.command("verify")
@click.option("--identity", "identity_id", type=str, default=None)
@click.option("--all", "run_all", is_flag=True, help="Verify the whole catalog.")
@click.option("--samples", type=int, default=DEFAULTS.samples, show_default=True)
@click.option("--tol", type=float, default=DEFAULTS.tol, show_default=True)
@click.option("--seed", type=int, default=DEFAULTS.seed, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default=DEFAULTS.report_format,
    show_default=True,
)
@click.option(
    "--perturb",
    type=float,
    default=0.0,
    help="Add a constant to every right-hand side (engine sensitivity check).",
)
@click.option("--list-identities", "list_ids", is_flag=True)
def cmd_verify(
    identity_id: Optional[str],
    run_all: bool,
    samples: int,
    tol: float,
    seed: int,
    fmt: str,
    perturb: float,
    list_ids: bool,
) -> None:
    """Verify one identity (or the whole catalog) and report max |lhs - rhs|."""
    if list_ids:
        for name in identities.identity_ids():
            click.echo(name)
        return
    if run_all == (identity_id is not None):
        _fail("exactly one of --identity or --all is required", 2)
    ids = sorted(identities.identity_ids()) if run_all else [identity_id]
    reports = []
    try:
        for name in ids:
            reports.append(
                identities.verify(name, samples, tol, seed, rhs_offset=perturb)
            )
    except UnknownIdentityError as exc:
        _fail(f"unknown identity {exc}", 2)
    except GtrigError as exc:
        _fail(str(exc), 2)
    click.echo(_report_lines(reports, fmt), nl=False)
    if not all(rep.passed for rep in reports):
        sys.exit(1)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
