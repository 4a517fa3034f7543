from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .precision import PrecisionContext, agree_digits, decimal_string


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one named check: two independently computed values."""

    check_id: str
    lhs: str
    rhs: str
    digits_agreed: int
    required_digits: int
    passed: bool
    elapsed: float = field(default=0.0, compare=False)
    error: Optional[str] = None
    error_kind: Optional[str] = None

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "id": self.check_id,
            "pass": self.passed,
            "digits_agreed": self.digits_agreed,
            "required_digits": self.required_digits,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else None,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationResult":
        elapsed = d.get("elapsed_ms")
        return cls(
            check_id=d["id"], lhs=d["lhs"], rhs=d["rhs"],
            digits_agreed=d["digits_agreed"], required_digits=d["required_digits"],
            passed=d["pass"], elapsed=(elapsed or 0.0) / 1000, error=d.get("error"),
        )


def compare(check_id: str, lhs, rhs, ctx: PrecisionContext, required: int, elapsed: float = 0.0) -> VerificationResult:
    agreed = agree_digits(lhs, rhs, ctx)
    return VerificationResult(
        check_id=check_id,
        lhs=decimal_string(ctx.mp.mpf(lhs), ctx.digits),
        rhs=decimal_string(ctx.mp.mpf(rhs), ctx.digits),
        digits_agreed=agreed,
        required_digits=required,
        passed=agreed >= required,
        elapsed=elapsed,
    )


def failure(check_id: str, exc: Exception, required: int, elapsed: float = 0.0) -> VerificationResult:
    return VerificationResult(
        check_id=check_id, lhs="", rhs="", digits_agreed=0, required_digits=required,
        passed=False, elapsed=elapsed, error=f"{type(exc).__name__}: {exc}", error_kind=type(exc).__name__,
    )


