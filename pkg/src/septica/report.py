"""Report rendering and the decimal-snapshot cache of registry constants."""

from __future__ import annotations

import fcntl
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import CacheParseError
from .verification import VerificationResult

REPORT_VERSION = 1
CACHE_VERSION = 1
CACHE_ENV = "SEPTICA_CACHE"


def emit_report(results: Iterable[VerificationResult], fmt: str = "json", digits: int | None = None,
                timing: bool = True) -> bytes:
    """Render results as JSON or a markdown table. Output is sorted by check id."""
    results = sorted(results, key=lambda r: r.check_id)
    if fmt == "json":
        doc = {
            "version": REPORT_VERSION,
            "digits": digits,
            "checks": [r.to_dict(timing=timing) for r in results],
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    if fmt == "markdown":
        head = "| id | pass | digits_agreed | required_digits | lhs | rhs | elapsed_ms |"
        lines = [f"# Verification report ({digits} digits)", "", head, "|" + "---|" * 7]
        for r in results:
            d = r.to_dict(timing=timing)
            lhs = d["lhs"] or d.get("error", "")
            elapsed = "" if d["elapsed_ms"] is None else d["elapsed_ms"]
            lines.append(
                f"| {r.check_id} | {'PASS' if r.passed else 'FAIL'} | {r.digits_agreed} | "
                f"{r.required_digits} | {lhs} | {d['rhs']} | {elapsed} |"
            )
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def load_report(data: bytes) -> list[VerificationResult]:
    return [VerificationResult.from_dict(d) for d in json.loads(data)["checks"]]


# -- cache ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantCacheEntry:
    id: str
    digits: int
    decimal: str
    checksum: str


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "septica" / "constants.json"


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def parse_cache(text: str, current_checksums: dict[str, str] | None = None) -> dict[tuple[str, int], ConstantCacheEntry]:
    """Parse cache text. Entries whose checksum differs from ``current_checksums`` are dropped."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise CacheParseError("expected an object with an 'entries' list", line=1)
    cache = {}
    for raw in doc["entries"]:
        try:
            entry = ConstantCacheEntry(str(raw["id"]), int(raw["digits"]), str(raw["decimal"]), str(raw["checksum"]))
        except (KeyError, TypeError, ValueError) as exc:
            needle = json.dumps(raw.get("id")) if isinstance(raw, dict) else json.dumps(raw)
            pos = text.find(needle)
            raise CacheParseError(f"bad cache entry ({exc!r})", line=_line_of(text, pos) if pos >= 0 else None) from None
        if current_checksums is not None and current_checksums.get(entry.id) != entry.checksum:
            continue
        cache[(entry.id, entry.digits)] = entry
    return cache


def dump_cache(cache: dict[tuple[str, int], ConstantCacheEntry]) -> str:
    entries = [
        {"id": e.id, "digits": e.digits, "decimal": e.decimal, "checksum": e.checksum}
        for _, e in sorted(cache.items())
    ]
    return json.dumps({"version": CACHE_VERSION, "entries": entries}, indent=2, sort_keys=True) + "\n"


def cache_load(path: Path | str, current_checksums: dict[str, str] | None = None):
    """Read a cache file; a missing file is an empty cache."""
    path = Path(path)
    if not path.exists():
        return {}
    return parse_cache(path.read_text(), current_checksums)


def cache_store(path: Path | str, cache: dict[tuple[str, int], ConstantCacheEntry]) -> None:
    """Write the cache under an exclusive lock, replacing the file atomically."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lock_path = path.with_name(path.name + ".lock")
    with open(lock_path, "w") as lock:
        fcntl.flock(lock, fcntl.LOCK_EX)
        tmp = path.with_name(path.name + f".{os.getpid()}.tmp")
        tmp.write_text(dump_cache(cache))
        os.replace(tmp, path)


def cache_lookup(cache, identifier: str, digits: int, checksum: str) -> ConstantCacheEntry | None:
    """Exact (id, digits) match with a current checksum, else None."""
    entry = cache.get((identifier, digits))
    if entry is None or entry.checksum != checksum:
        return None
    return entry
