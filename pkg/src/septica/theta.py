"""Direct q-series and q-product evaluation of Ramanujan's theta functions.

Nothing here uses a closed form; these routines are the oracle every
closed-form evaluation and the septic pipeline are checked against.
"""

from __future__ import annotations

from .errors import DomainError, NonConvergenceError
from .precision import PrecisionContext, Real


def _real_power(q, e, ctx: PrecisionContext):
    """q**e for real e on 0 < q, via exp(e*ln q)."""
    if q <= 0:
        raise DomainError("fractional powers need a positive nome")
    return ctx.mp.exp(ctx.mpf(e) * ctx.mp.log(q))


def qpochhammer(a, q, ctx: PrecisionContext) -> Real:
    """(a; q)_inf = prod_{k>=0} (1 - a q^k).

    Stops once |a q^k| is below the threshold for two consecutive factors.
    """
    mp = ctx.mp
    a, q = mp.mpf(a), mp.mpf(q)
    if abs(q) >= 1:
        raise DomainError(f"(a; q)_inf needs |q| < 1, got q={q}")
    eps = ctx.eps
    prod = mp.mpf(1)
    term = a
    small = 0
    for _ in range(ctx.max_terms):
        prod *= 1 - term
        if abs(term) < eps:
            small += 1
            if small == 2:
                return prod
        else:
            small = 0
        term *= q
    raise NonConvergenceError(f"(a; q)_inf did not converge within {ctx.max_terms} factors")


def _one_sided(x, y, ctx: PrecisionContext):
    """sum_{n>=1} x^{n(n+1)/2} y^{n(n-1)/2}, built term by term.

    The ratio of consecutive terms is x (xy)^{n-1}, so the terms are
    unimodal; we stop after two sub-threshold terms on the decreasing side.
    """
    mp = ctx.mp
    eps = ctx.eps
    xy = x * y
    ratio = x
    term = mp.mpf(1)
    total = mp.mpf(0)
    small = 0
    for _ in range(ctx.max_terms):
        term *= ratio
        total += term
        if abs(term) < eps and abs(ratio * xy) < 1:
            small += 1
            if small == 2:
                return total
        else:
            small = 0
        ratio *= xy
    raise NonConvergenceError(f"theta series did not converge within {ctx.max_terms} terms")


def f_series(a, b, ctx: PrecisionContext) -> Real:
    """Ramanujan's f(a, b) = sum over all n of a^{n(n+1)/2} b^{n(n-1)/2}."""
    mp = ctx.mp
    a, b = mp.mpf(a), mp.mpf(b)
    if abs(a * b) >= 1:
        raise DomainError(f"f(a, b) needs |ab| < 1, got ab={a * b}")
    # n = -m contributes a^{m(m-1)/2} b^{m(m+1)/2}: the same series with a, b swapped
    return 1 + _one_sided(a, b, ctx) + _one_sided(b, a, ctx)


def f_product(a, b, ctx: PrecisionContext) -> Real:
    """f(a, b) through the Jacobi triple product."""
    mp = ctx.mp
    a, b = mp.mpf(a), mp.mpf(b)
    ab = a * b
    if abs(ab) >= 1:
        raise DomainError(f"f(a, b) needs |ab| < 1, got ab={ab}")
    return qpochhammer(-a, ab, ctx) * qpochhammer(-b, ab, ctx) * qpochhammer(ab, ab, ctx)


def phi(q, ctx: PrecisionContext) -> Real:
    """phi(q) = sum q^{n^2} = 1 + 2 sum_{n>=1} q^{n^2}."""
    mp = ctx.mp
    q = mp.mpf(q)
    if abs(q) >= 1:
        raise DomainError(f"phi(q) needs |q| < 1, got q={q}")
    eps = ctx.eps
    q2 = q * q
    step = q          # q^{2n-1}
    term = mp.mpf(1)  # q^{n^2}
    total = mp.mpf(0)
    small = 0
    for _ in range(ctx.max_terms):
        term *= step
        step *= q2
        total += term
        if abs(term) < eps:
            small += 1
            if small == 2:
                return 1 + 2 * total
        else:
            small = 0
    raise NonConvergenceError(f"phi(q) did not converge within {ctx.max_terms} terms")


def chi(q, ctx: PrecisionContext) -> Real:
    """chi(q) = (-q; q^2)_inf."""
    q = ctx.mp.mpf(q)
    if abs(q) >= 1:
        raise DomainError(f"chi(q) needs |q| < 1, got q={q}")
    return qpochhammer(-q, q * q, ctx)


def u_component(q, n: int, k: int, ctx: PrecisionContext) -> Real:
    """u_k = q^{k^2/n} f(q^{n-2k}, q^{n+2k}) for odd n >= 3 and 0 <= k < n."""
    q = ctx.mp.mpf(q)
    if not 0 < q < 1:
        raise DomainError(f"u_k needs 0 < q < 1, got q={q}")
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be an odd integer >= 3, got {n}")
    if not 0 <= k < n:
        raise DomainError(f"k must lie in [0, {n - 1}], got {k}")
    if k == 0:
        return phi(q ** n, ctx)
    return _real_power(q, ctx.mpf(k * k) / n, ctx) * f_series(q ** (n - 2 * k), q ** (n + 2 * k), ctx)


def uvw_series(q, ctx: PrecisionContext) -> tuple[Real, Real, Real]:
    """(u, v, w) = (2u_1/u_0, 2u_2/u_0, 2u_3/u_0) for n = 7, fixed order."""
    q = ctx.mp.mpf(q)
    if q == 0:
        zero = ctx.mp.mpf(0)
        return zero, zero, zero
    if not 0 < q < 1:
        raise DomainError(f"u, v, w need 0 < q < 1, got q={q}")
    u0 = u_component(q, 7, 0, ctx)
    return tuple(2 * u_component(q, 7, k, ctx) / u0 for k in (1, 2, 3))


def phi_ratio(q, d: int, ctx: PrecisionContext) -> Real:
    """phi(q) / phi(q^d); square it for the multiplier of degree d."""
    q = ctx.mp.mpf(q)
    if not 0 < q < 1:
        raise DomainError(f"phi_ratio needs 0 < q < 1, got q={q}")
    if d < 1:
        raise DomainError("degree must be a positive integer")
    if d == 1:
        return ctx.mp.mpf(1)
    return phi(q, ctx) / phi(q ** d, ctx)
