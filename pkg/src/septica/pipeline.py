"""The septic identity as an executable algorithm.

Given a nome 0 < q < 1: compute p = uvw, pick the correct root M of the
quadratic relating phi^4(q)/phi^4(q^7) to p, solve the cubic r(xi) for
alpha, beta, gamma, fix their order, and build u, v, w.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import AmbiguousOrientationError, DomainError, NonConvergenceError, UnexpectedDiscriminantError
from .precision import PrecisionContext, Real, agree_digits
from .theta import chi
from .verification import VerificationResult, compare

log = logging.getLogger(__name__)

#: extra digits by which the rejected orientation must miss the target
ORIENTATION_SEPARATION = 10
#: precision escalations attempted on an ambiguous orientation
MAX_ESCALATIONS = 2


@dataclass(frozen=True)
class CubicPoly:
    """Monic cubic xi^3 + c2 xi^2 + c1 xi + c0."""

    c2: Real
    c1: Real
    c0: Real

    @property
    def coefficients(self):
        return (1, self.c2, self.c1, self.c0)

    def __call__(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x):
        return (3 * x + 2 * self.c2) * x + self.c1

    def discriminant(self):
        a, b, c = self.c2, self.c1, self.c0
        return 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c


@dataclass(frozen=True)
class SepticSolution:
    q: Real
    p: Real
    M: Real  # phi^4(q) / phi^4(q^7)
    roots: tuple  # ordered (alpha, beta, gamma)
    uvw: tuple
    discriminant: Real  # Delta_minus
    ratio: Real  # 1 + u + v + w
    orientation_digits: tuple = (0, 0)  # (matching, rejected) agreement with the u^7+v^7+w^7 target
    digits: int = 0

    @property
    def u(self):
        return self.uvw[0]

    @property
    def v(self):
        return self.uvw[1]

    @property
    def w(self):
        return self.uvw[2]


def p_product(q, ctx: PrecisionContext) -> Real:
    """p = 8 q^2 chi(q) / chi(q^7)^7."""
    q = ctx.mp.mpf(q)
    if not 0 < q < 1:
        raise DomainError(f"p needs 0 < q < 1, got q={q}")
    return 8 * q * q * chi(q, ctx) / chi(q ** 7, ctx) ** 7


def phi4_ratio_from_p(p, ctx: PrecisionContext) -> Real:
    """The root M = 1 + 5p/2 + sqrt((2+5p)^2 - 4(1-p)^3)/2 of M^2 - (2+5p)M + (1-p)^3."""
    mp = ctx.mp
    p = mp.mpf(p)
    if not 0 < p < 8:
        raise DomainError(f"p must lie in (0, 8), got {p}")
    return 1 + 5 * p / 2 + mp.sqrt((2 + 5 * p) ** 2 - 4 * (1 - p) ** 3) / 2


def build_r(p, M) -> CubicPoly:
    return CubicPoly(2 * (1 + 3 * p - M), p * p * (p + 4), -p ** 4)


def discriminants(p, ctx: PrecisionContext) -> tuple[Real, Real]:
    """(Delta_plus, Delta_minus); the discriminant of r is Delta_minus."""
    if ctx.mp.mpf(p) <= 0:
        raise DomainError(f"discriminants need p > 0, got {p}")
    # base - tail cancels like (8 - p)^6 near p = 8; spend extra digits on it
    wide = ctx.with_digits(ctx.digits + 20)
    mp = wide.mp
    p = mp.mpf(p)
    base = p ** 3 + 104 * p ** 2 + 608 * p + 512
    tail = (8 * p ** mp.mpf(1.5) + 160 * mp.sqrt(p)) * mp.sqrt(4 * p * p + 13 * p + 32)
    return ctx.mp.mpf(p ** 5 * (base + tail)), ctx.mp.mpf(p ** 5 * (base - tail))


def solve_cubic_real(r: CubicPoly, ctx: PrecisionContext) -> tuple[Real, Real, Real]:
    """Three real roots in ascending order (trigonometric method + Newton polish)."""
    mp = ctx.mp
    c2, c1, c0 = mp.mpf(r.c2), mp.mpf(r.c1), mp.mpf(r.c0)
    r = CubicPoly(c2, c1, c0)
    disc = r.discriminant()
    if disc <= 0:
        raise UnexpectedDiscriminantError(f"cubic discriminant {mp.nstr(disc, 10)} is not positive")
    shift = c2 / 3
    P = c1 - c2 * c2 / 3
    Q = 2 * c2 ** 3 / 27 - c2 * c1 / 3 + c0
    amp = 2 * mp.sqrt(-P / 3)
    arg = 3 * Q / (2 * P) * mp.sqrt(-3 / P)
    theta = mp.acos(max(-1, min(1, arg))) / 3
    roots = []
    for k in range(3):
        x = amp * mp.cos(theta - 2 * mp.pi * k / 3) - shift
        for _ in range(8):
            d = r.derivative(x)
            if d == 0:
                break
            step = r(x) / d
            x -= step
            if abs(step) <= abs(x) * ctx.eps:
                break
        roots.append(x)
    roots.sort()
    bound = mp.mpf(10) ** (-(ctx.digits - 5)) * max(1, abs(c0))
    for x in roots:
        if abs(r(x)) >= bound:
            raise NonConvergenceError(f"cubic root residual {mp.nstr(r(x), 5)} above tolerance")
    return tuple(roots)


def seventh_power_target(p, M) -> Real:
    """u^7 + v^7 + w^7 expressed through p and M."""
    return M * M - 7 * (p - 2) * M + 7 * p * p - 49 * p - 15


def _cyclic_sum(o, p):
    a, b, c = o
    return a * a * p / b + b * b * p / c + c * c * p / a


def orient_roots(roots, p, M, ctx: PrecisionContext):
    """Like :func:`order_roots` but also returns the (matching, rejected) agreement digits."""
    mp = ctx.mp
    r1, r2, r3 = sorted(mp.mpf(x) for x in roots)
    if not (0 < r1 < r2 < r3):
        raise DomainError("roots must be distinct and positive")
    target = seventh_power_target(p, M)
    forward, backward = (r1, r2, r3), (r3, r2, r1)
    d_fwd = agree_digits(_cyclic_sum(forward, p), target, ctx)
    d_bwd = agree_digits(_cyclic_sum(backward, p), target, ctx)
    chosen, best, other = (forward, d_fwd, d_bwd) if d_fwd >= d_bwd else (backward, d_bwd, d_fwd)
    if best < ctx.digits // 2 or best - other < ORIENTATION_SEPARATION:
        raise AmbiguousOrientationError(
            f"orientation undecided at {ctx.digits} digits (agreement {best} vs {other})",
            digits=ctx.digits,
        )
    a, b, c = chosen
    for rot in ((a, b, c), (b, c, a), (c, a, b)):
        x, y, z = rot
        if x * x / y > y * y / z > z * z / x:
            return rot, (best, other)
    raise AmbiguousOrientationError("no rotation gives alpha^2/beta > beta^2/gamma > gamma^2/alpha", digits=ctx.digits)


def order_roots(roots, p, M, ctx: PrecisionContext) -> tuple[Real, Real, Real]:
    """Order the roots of r as (alpha, beta, gamma) so that u > v > w.

    The cyclic class is picked by matching alpha^2 p/beta + beta^2 p/gamma +
    gamma^2 p/alpha against u^7 + v^7 + w^7; the rotation by requiring
    alpha^2/beta > beta^2/gamma > gamma^2/alpha.
    """
    return orient_roots(roots, p, M, ctx)[0]


def uvw_from_roots(ordered, p, ctx: PrecisionContext) -> tuple[Real, Real, Real]:
    mp = ctx.mp
    a, b, c = ordered
    seventh = mp.mpf(1) / 7
    return tuple(mp.power(x, seventh) for x in (a * a * p / b, b * b * p / c, c * c * p / a))


def _solve(q, p, ctx: PrecisionContext) -> SepticSolution:
    if p is None:
        p = p_product(q, ctx)
    p = ctx.mp.mpf(p)
    M = phi4_ratio_from_p(p, ctx)
    r = build_r(p, M)
    roots = solve_cubic_real(r, ctx)
    ordered, digits = orient_roots(roots, p, M, ctx)
    uvw = uvw_from_roots(ordered, p, ctx)
    return SepticSolution(
        q=q, p=p, M=M, roots=ordered, uvw=uvw,
        discriminant=discriminants(p, ctx)[1], ratio=1 + sum(uvw),
        orientation_digits=digits, digits=ctx.digits,
    )


def run_pipeline(q, ctx: PrecisionContext, p=None) -> SepticSolution:
    """Run the septic algorithm for the nome q.

    ``p`` defaults to the eta-quotient series; pass a closed-form value (for
    instance from class invariants) to override it.  An undecidable root
    orientation is retried at doubled precision.
    """
    q = ctx.mp.mpf(q)
    if not 0 < q < 1:
        raise DomainError(f"the pipeline needs 0 < q < 1, got q={q}")
    attempt = ctx
    for _ in range(MAX_ESCALATIONS + 1):
        try:
            return _solve(q, p, attempt)
        except AmbiguousOrientationError as exc:
            log.warning("%s; retrying at %d digits", exc, 2 * attempt.digits)
            last = exc
            attempt = attempt.with_digits(2 * attempt.digits)
    raise last


def chebyshev_u(n: int, x, ctx: PrecisionContext) -> Real:
    """U_n(x) by the three-term recurrence."""
    if n < 0:
        raise DomainError("Chebyshev degree must be non-negative")
    mp = ctx.mp
    x = mp.mpf(x)
    prev, cur = mp.mpf(1), 2 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def r_u6_transform_check(ctx: PrecisionContext) -> VerificationResult:
    """-(2 xi)^6 r(1/(2 xi)^2) = U_6(xi) for r = xi^3 - 6 xi^2 + 5 xi - 1."""
    mp = ctx.mp
    r = build_r(mp.mpf(1), mp.mpf(7))
    worst = abs(r(mp.mpf(0)) - chebyshev_u(6, 0, ctx))
    for xi in ("0.1", "-0.1", "0.4", "-0.4", "0.9", "-0.9", "0.25"):
        xi = mp.mpf(xi)
        lhs = -(2 * xi) ** 6 * r(1 / (2 * xi) ** 2)
        worst = max(worst, abs(lhs - chebyshev_u(6, xi, ctx)))
    return compare("r-u6-transform", worst, 0, ctx, required=ctx.digits - 3)
