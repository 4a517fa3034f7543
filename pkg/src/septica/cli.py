"""``septica`` command line: eval, verify, table."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from . import checks
from .closed_forms import closed_form_ids, get_entry
from .errors import (
    AmbiguousOrientationError,
    CacheParseError,
    InvalidPrecisionError,
    NonConvergenceError,
    RegistryError,
    SepticaError,
)
from .precision import decimal_string, make_context
from .report import ConstantCacheEntry, cache_load, cache_lookup, cache_store, default_cache_path, emit_report

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3
NUMERIC_ERRORS = (NonConvergenceError.__name__, AmbiguousOrientationError.__name__)

log = logging.getLogger("septica")

TABLE_ROWS = (
    ("phi(e^-pi)", "phi-e-pi"),
    ("phi(e^-3pi)", "phi-e-3pi"),
    ("phi(e^-5pi)", "phi-e-5pi"),
    ("phi(e^-7pi)", "phi-e-7pi"),
    ("phi(e^-9pi)", "phi-e-9pi"),
    ("phi(e^-21pi)", "phi-e-21pi"),
    ("phi(e^-35pi)", "phi-e-35pi"),
    ("phi(e^-49pi)", "phi-e-49pi"),
    ("phi(e^-7pi sqrt3)", "phi-e-7pi-sqrt3"),
    ("phi(e^-7pi sqrt7)", "thm1-phi-7pi-sqrt7"),
) + tuple((f"G_{n}", f"g-{n}") for n in (1, 3, 7, 9, 25, 49, 147, 343, 441, 1225))

LATEX_LABELS = {
    "phi-e-7pi-sqrt3": r"\varphi(e^{-7\pi\sqrt{3}})",
    "thm1-phi-7pi-sqrt7": r"\varphi(e^{-7\pi\sqrt{7}})",
}


def _context(digits: int):
    try:
        return make_context(digits)
    except InvalidPrecisionError as exc:
        raise click.BadParameter(str(exc), param_hint="--digits") from None


class ConstantStore:
    """Advisory decimal cache: read once, written once at the end."""

    def __init__(self, path: Path | None, enabled: bool = True):
        self.path = path or default_cache_path()
        self.enabled = enabled
        self.dirty = False
        self.entries = {}
        if enabled:
            checksums = {i: get_entry(i).checksum for i in closed_form_ids()}
            try:
                self.entries = cache_load(self.path, checksums)
            except (CacheParseError, OSError) as exc:
                log.warning("ignoring unreadable cache %s: %s", self.path, exc)

    def decimal(self, identifier: str, digits: int) -> str:
        entry = get_entry(identifier)
        if self.enabled:
            hit = cache_lookup(self.entries, identifier, digits, entry.checksum)
            if hit is not None:
                return hit.decimal
        value = decimal_string(entry.evaluate(make_context(digits)), digits)
        self.entries[(identifier, digits)] = ConstantCacheEntry(identifier, digits, value, entry.checksum)
        self.dirty = True
        return value

    def flush(self) -> None:
        if self.enabled and self.dirty:
            try:
                cache_store(self.path, self.entries)
            except OSError as exc:
                log.warning("could not write cache %s: %s", self.path, exc)


def _numeric_failure(exc: SepticaError):
    click.echo(f"error: {exc}", err=True)
    if isinstance(exc, AmbiguousOrientationError):
        click.echo("hint: rerun with a larger --digits", err=True)
    sys.exit(EXIT_NUMERIC)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log precision escalations and cache activity.")
def main(verbose: bool):
    """Verify the septic theta-function identities and evaluate their constants."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(name)s: %(message)s")


@main.command("eval")
@click.option("--id", "identifier", required=True, help="Closed-form id (see `septica eval --list`).")
@click.option("--digits", default=checks.DEFAULT_DIGITS, show_default=True, type=int)
@click.option("--no-cache", is_flag=True, help="Neither read nor write the decimal cache.")
def eval_cmd(identifier: str, digits: int, no_cache: bool):
    """Print a registry constant to DIGITS significant digits (truncated)."""
    _context(digits)
    try:
        get_entry(identifier)
    except RegistryError as exc:
        raise click.UsageError(f"{exc}; known ids: {', '.join(closed_form_ids())}") from None
    store = ConstantStore(None, enabled=not no_cache)
    try:
        value = store.decimal(identifier, digits)
    except SepticaError as exc:
        _numeric_failure(exc)
    store.flush()
    click.echo(value)


@main.command("verify")
@click.option("--all", "run_every", is_flag=True, help="Run every registered check.")
@click.option("--check", "selected", multiple=True, help="Check id; repeatable.")
@click.option("--list", "list_ids", is_flag=True, help="List check ids and exit.")
@click.option("--digits", default=checks.DEFAULT_DIGITS, show_default=True, type=int)
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True), help="Write a JSON report.")
@click.option("--markdown", "md_path", type=click.Path(dir_okay=False, writable=True), help="Write a markdown report.")
@click.option("--no-timing", is_flag=True, help="Omit elapsed times so reports are byte-reproducible.")
@click.option("--parallel", is_flag=True, help="Run checks in worker processes.")
def verify_cmd(run_every, selected, list_ids, digits, json_path, md_path, no_timing, parallel):
    """Run verification checks; exit 0 iff all pass."""
    if list_ids:
        for check_id in checks.check_ids():
            click.echo(f"{check_id}\t{checks.get_check(check_id).description}")
        return
    if not run_every and not selected:
        raise click.UsageError("give --all or at least one --check ID")
    _context(digits)
    ids = checks.check_ids() if run_every else list(selected)
    try:
        results = checks.run_all(digits, parallel=parallel, ids=ids)
    except RegistryError as exc:
        raise click.UsageError(str(exc)) from None

    timing = not no_timing
    if json_path:
        Path(json_path).write_bytes(emit_report(results, "json", digits, timing))
    if md_path:
        Path(md_path).write_bytes(emit_report(results, "markdown", digits, timing))
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = r.error or f"{r.digits_agreed}/{r.required_digits} digits"
        click.echo(f"{status} {r.check_id} ({detail})")
    passed = sum(r.passed for r in results)
    click.echo(f"{passed}/{len(results)} checks passed at {digits} digits")

    if any(r.error_kind in NUMERIC_ERRORS for r in results):
        sys.exit(EXIT_NUMERIC)
    if passed != len(results):
        sys.exit(EXIT_FAIL)


def _render_table(rows, fmt: str, digits: int) -> str:
    if fmt == "json":
        import json

        doc = {"digits": digits, "rows": [{"label": label, "id": i, "value": v} for label, i, v in rows]}
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "markdown":
        lines = ["| quantity | id | value |", "|---|---|---|"]
        lines += [f"| {label} | {i} | {v} |" for label, i, v in rows]
        return "\n".join(lines)
    lines = [r"\begin{tabular}{ll}", r"\hline", r"Quantity & Value \\", r"\hline"]
    for label, i, v in rows:
        tex = LATEX_LABELS.get(i)
        if tex is None:
            tex = label.replace("phi(e^-", r"\varphi(e^{-").replace("pi)", r"\pi})") if label.startswith("phi") else label
            tex = tex.replace("G_", "G_{") + "}" if tex.startswith("G_") else tex
        lines.append(f"${tex}$ & {v} \\\\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines)


@main.command("table")
@click.option("--format", "fmt", type=click.Choice(["json", "markdown", "latex"]), default="markdown", show_default=True)
@click.option("--digits", default=checks.DEFAULT_DIGITS, show_default=True, type=int)
@click.option("--no-cache", is_flag=True)
def table_cmd(fmt: str, digits: int, no_cache: bool):
    """Special values of phi and the class-invariant table."""
    _context(digits)
    store = ConstantStore(None, enabled=not no_cache)
    try:
        rows = [(label, i, store.decimal(i, digits)) for label, i in TABLE_ROWS]
    except SepticaError as exc:
        _numeric_failure(exc)
    store.flush()
    click.echo(_render_table(rows, fmt, digits))


if __name__ == "__main__":
    main()
