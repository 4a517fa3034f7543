"""Arbitrary-precision arithmetic contract.

Every quantity in the library is an mpmath ``mpf`` produced by the
``MPContext`` attached to a :class:`PrecisionContext`.  Contexts are kept
per thread, so concurrent callers never share mutable precision state.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mpf as Real  # noqa: F401  (re-exported for annotations)
from mpmath.libmp import to_digits_exp

from .errors import DomainError, InvalidPrecisionError, NonFiniteError

Rational = Union[int, Fraction, str]

MIN_DIGITS = 10
MIN_GUARD = 5

_local = threading.local()


def _mp_context(dps: int) -> mpmath.MPContext:
    contexts = getattr(_local, "contexts", None)
    if contexts is None:
        contexts = _local.contexts = {}
    ctx = contexts.get(dps)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.dps = dps
        contexts[dps] = ctx
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Requested digits plus guard digits and a truncation cap.

    Arithmetic runs at ``digits + guard_digits``; results are claimed
    accurate to ``digits``.
    """

    digits: int
    guard_digits: int = 10
    max_terms: int = 100_000

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise InvalidPrecisionError(f"digits must be >= {MIN_DIGITS}, got {self.digits!r}")
        if self.guard_digits < MIN_GUARD:
            raise InvalidPrecisionError(f"guard_digits must be >= {MIN_GUARD}, got {self.guard_digits!r}")
        if self.max_terms < 1:
            raise InvalidPrecisionError("max_terms must be positive")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard_digits

    @property
    def mp(self) -> mpmath.MPContext:
        return _mp_context(self.working_digits)

    @property
    def eps(self):
        """Truncation threshold 10^-(digits+guard)."""
        return self.mp.mpf(10) ** (-self.working_digits)

    def mpf(self, x) -> Real:
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def finite(self, x) -> Real:
        if not self.mp.isfinite(x):
            raise NonFiniteError(f"non-finite value {x!r}")
        return x

    def with_digits(self, digits: int) -> "PrecisionContext":
        return PrecisionContext(digits, self.guard_digits, self.max_terms)


def make_context(digits: int) -> PrecisionContext:
    return PrecisionContext(digits)


def as_fraction(n: Rational) -> Fraction:
    """Exact rational from int, Fraction or a string like ``"1/49"``."""
    try:
        return Fraction(n)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {n!r}") from exc


def const_pi(ctx: PrecisionContext) -> Real:
    return +ctx.mp.pi


def cos_rational_pi(k: int, m: int, ctx: PrecisionContext) -> Real:
    """cos(k*pi/m), exact when k/m has denominator 1, 2 or 3."""
    if m < 1:
        raise DomainError("m must be a positive integer")
    x = Fraction(k, m) % 2
    exact = {
        Fraction(0): 1, Fraction(1): -1,
        Fraction(1, 2): 0, Fraction(3, 2): 0,
        Fraction(1, 3): Fraction(1, 2), Fraction(5, 3): Fraction(1, 2),
        Fraction(2, 3): Fraction(-1, 2), Fraction(4, 3): Fraction(-1, 2),
    }
    if x in exact:
        return ctx.mpf(Fraction(exact[x]))
    return ctx.mp.cospi(ctx.mpf(x))


def gamma_rational(num: int, den: int, ctx: PrecisionContext) -> Real:
    if den <= 0 or num <= 0:
        raise DomainError(f"gamma_rational needs a positive argument, got {num}/{den}")
    return ctx.mp.gamma(ctx.mpf(Fraction(num, den)))


def beta_rational(x: Rational, y: Rational, ctx: PrecisionContext) -> Real:
    x, y = as_fraction(x), as_fraction(y)
    if x <= 0 or y <= 0:
        raise DomainError(f"beta_rational needs positive arguments, got {x}, {y}")
    gx = gamma_rational(x.numerator, x.denominator, ctx)
    gy = gamma_rational(y.numerator, y.denominator, ctx)
    s = x + y
    return gx * gy / gamma_rational(s.numerator, s.denominator, ctx)


def agree_digits(a, b, ctx: PrecisionContext | None = None) -> int:
    """Leading decimal digits on which ``a`` and ``b`` agree.

    Relative to ``max(|a|, 1)``.  Exact equality returns the working digits
    of ``ctx`` (or of the context ``a`` was computed in).
    """
    if ctx is not None:
        mp = ctx.mp
        sentinel = ctx.working_digits
    else:
        mp = getattr(a, "context", None) or getattr(b, "context", None) or mpmath.mp
        sentinel = max(mp.dps, MIN_DIGITS)
    a, b = mp.mpf(a), mp.mpf(b)
    if not (mp.isfinite(a) and mp.isfinite(b)):
        raise NonFiniteError("agree_digits needs finite inputs")
    diff = abs(a - b)
    if diff == 0:
        return sentinel
    rel = diff / max(abs(a), 1)
    # the small slack keeps 1e-7 from reading as 6.9999... digits
    return max(0, math.floor(float(-mp.log10(rel)) + 1e-9))


def decimal_string(x, digits: int) -> str:
    """Render ``x`` with ``digits`` significant digits.

    The value is first rounded to ``digits + 5`` significant digits (which
    absorbs guard-digit noise around exact values such as 41) and then
    truncated to ``digits``.
    """
    man, exp, = x._mpf_[1], x._mpf_[2]
    if man == 0 and exp == 0:
        return "0"
    sign, ds, e = to_digits_exp(x._mpf_, digits + 12)
    keep = digits + 5
    n = int(ds[: keep + 1].ljust(keep + 1, "0"))
    n = (n + 5) // 10
    if len(str(n)) > keep:
        e += 1
    s = str(n)[:digits]
    if -6 <= e < 21:
        if e >= 0:
            intpart, frac = s[: e + 1].ljust(e + 1, "0"), s[e + 1:]
        else:
            intpart, frac = "0", "0" * (-e - 1) + s
        out = intpart + ("." + frac if frac else "")
    else:
        out = s[0] + ("." + s[1:] if len(s) > 1 else "") + f"e{e:+d}"
    return sign + out
