"""Ramanujan-Weber class invariants G_n, the p-link and multipliers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import DomainError, UnknownInvariantError
from .precision import PrecisionContext, Rational, Real, as_fraction
from .theta import chi, phi


@dataclass(frozen=True)
class ClassInvariantRecord:
    n: Fraction
    value: Real
    source: str  # "numeric" or "closed-form"
    closed_form_id: Optional[str] = None


def _positive(n: Rational) -> Fraction:
    n = as_fraction(n)
    if n <= 0:
        raise DomainError(f"n must be a positive rational, got {n}")
    return n


def sqrt_rational(n: Fraction, ctx: PrecisionContext) -> Real:
    mp = ctx.mp
    return mp.sqrt(n.numerator) / mp.sqrt(n.denominator)


def nome(n: Rational, ctx: PrecisionContext) -> Real:
    """q = exp(-pi sqrt(n))."""
    n = _positive(n)
    return ctx.mp.exp(-ctx.mp.pi * sqrt_rational(n, ctx))


def class_invariant_numeric(n: Rational, ctx: PrecisionContext) -> Real:
    """G_n = 2^{-1/4} q^{-1/24} chi(q) with q = exp(-pi sqrt(n))."""
    n = _positive(n)
    mp = ctx.mp
    s = sqrt_rational(n, ctx)
    return mp.mpf(2) ** mp.mpf(-0.25) * mp.exp(mp.pi * s / 24) * chi(mp.exp(-mp.pi * s), ctx)


# -- closed forms -------------------------------------------------------------

def _g1(ctx):
    return ctx.mp.mpf(1)


def _g3(ctx):
    return ctx.mp.mpf(2) ** (ctx.mp.mpf(1) / 12)


def _g7(ctx):
    return ctx.mp.mpf(2) ** ctx.mp.mpf(0.25)


def _g9(ctx):
    mp = ctx.mp
    return mp.cbrt((1 + mp.sqrt(3)) / mp.sqrt(2))


def _g25(ctx):
    return (1 + ctx.mp.sqrt(5)) / 2


def _g49(ctx):
    mp = ctx.mp
    return (mp.root(7, 4) + mp.sqrt(4 + mp.sqrt(7))) / 2


def _g147(ctx):
    mp = ctx.mp
    inner = mp.sqrt(mp.mpf(7) / 4) - mp.root(28, 6)
    return mp.mpf(2) ** (mp.mpf(1) / 12) / (mp.mpf(1) / 2 + inner / mp.sqrt(3))


def _g343(ctx):
    # lazy: G_343 is assembled from the closed-forms module
    from .closed_forms import g343_theorem

    return g343_theorem(ctx)


def _radical_ratio_441(ctx):
    mp = ctx.mp
    a = mp.sqrt(3 + mp.sqrt(7))
    b = mp.root(6 * mp.sqrt(7), 4)
    return (a + b) / (a - b)


def _g441(ctx):
    mp = ctx.mp
    s3, s7 = mp.sqrt(3), mp.sqrt(7)
    return (
        mp.sqrt((s3 + s7) / 2)
        * mp.root(2 + s3, 6)
        * mp.sqrt((2 + s7 + mp.sqrt(7 + 4 * s7)) / 2)
        * mp.sqrt(_radical_ratio_441(ctx))
    )


def _g1225(ctx):
    mp = ctx.mp
    s5, s7 = mp.sqrt(5), mp.sqrt(7)
    x = (8 + 3 * s7) * mp.sqrt(10 * s7)
    return (
        (1 + s5) / 2
        * mp.root(6 + mp.sqrt(35), 4)
        * _g49(ctx) ** mp.mpf(1.5)
        * (mp.sqrt((43 + 15 * s7 + x) / 8) + mp.sqrt((35 + 15 * s7 + x) / 8))
    )


CLOSED_INVARIANTS: dict[Fraction, Callable[[PrecisionContext], Real]] = {
    Fraction(1): _g1,
    Fraction(3): _g3,
    Fraction(7): _g7,
    Fraction(9): _g9,
    Fraction(25): _g25,
    Fraction(49): _g49,
    Fraction(147): _g147,
    Fraction(343): _g343,
    Fraction(441): _g441,
    Fraction(1225): _g1225,
}


def closed_form_id(n: Rational) -> str | None:
    n = _positive(n)
    if n not in CLOSED_INVARIANTS:
        n = 1 / n
    if n in CLOSED_INVARIANTS:
        return f"g-{n}"
    return None


def has_closed_invariant(n: Rational) -> bool:
    n = _positive(n)
    return n in CLOSED_INVARIANTS or 1 / n in CLOSED_INVARIANTS


def class_invariant_closed(n: Rational, ctx: PrecisionContext) -> Real:
    """Tabulated G_n, using G_n = G_{1/n} for reciprocals."""
    n = _positive(n)
    recipe = CLOSED_INVARIANTS.get(n) or CLOSED_INVARIANTS.get(1 / n)
    if recipe is None:
        raise UnknownInvariantError(f"no closed form for G_{n}")
    return recipe(ctx)


def class_invariant(n: Rational, ctx: PrecisionContext, numeric_fallback: bool = True) -> ClassInvariantRecord:
    n = _positive(n)
    if has_closed_invariant(n):
        return ClassInvariantRecord(n, class_invariant_closed(n, ctx), "closed-form", closed_form_id(n))
    if not numeric_fallback:
        raise UnknownInvariantError(f"no closed form for G_{n} and numeric fallback disabled")
    return ClassInvariantRecord(n, class_invariant_numeric(n, ctx), "numeric")


def p_from_invariants(n: Rational, ctx: PrecisionContext, numeric_fallback: bool = True) -> Real:
    """p = 2 sqrt(2) G_n / G_{49n}^7, the value of uvw at q = exp(-pi sqrt(n))."""
    n = _positive(n)
    g_n = class_invariant(n, ctx, numeric_fallback).value
    g_49n = class_invariant(49 * n, ctx, numeric_fallback).value
    return 2 * ctx.mp.sqrt(2) * g_n / g_49n ** 7


def multiplier_numeric(n: Rational, d: int, ctx: PrecisionContext) -> Real:
    """phi^2(exp(-pi sqrt n)) / phi^2(exp(-d pi sqrt n)) from the series."""
    n = _positive(n)
    if d < 1:
        raise DomainError("degree must be a positive integer")
    if d == 1:
        return ctx.mp.mpf(1)
    mp = ctx.mp
    s = sqrt_rational(n, ctx)
    return (phi(mp.exp(-mp.pi * s), ctx) / phi(mp.exp(-d * mp.pi * s), ctx)) ** 2
