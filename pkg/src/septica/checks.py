"""Named verification checks.

Every check computes two independently obtained values; a check passes when
they agree to ``digits - margin`` decimal digits.  Inequality checks report
(number of inequalities that hold, number tested), which agree exactly when
all hold.
"""

from __future__ import annotations

import functools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from .errors import RegistryError, SepticaError
from .invariants import (
    class_invariant_closed,
    class_invariant_numeric,
    multiplier_numeric,
    nome,
    p_from_invariants,
)
from .pipeline import (
    build_r,
    chebyshev_u,
    discriminants,
    order_roots,
    p_product,
    phi4_ratio_from_p,
    run_pipeline,
    seventh_power_target,
    solve_cubic_real,
)
from .precision import (
    PrecisionContext,
    agree_digits,
    beta_rational,
    const_pi,
    cos_rational_pi,
    gamma_rational,
    make_context,
)
from .theta import f_product, f_series, phi, qpochhammer, u_component, uvw_series
from .verification import VerificationResult, compare, failure

DEFAULT_DIGITS = 60
DEFAULT_MARGIN = 10


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    compute: Callable[[PrecisionContext], tuple]
    margin: int = DEFAULT_MARGIN

    def required(self, digits: int) -> int:
        return max(1, digits - self.margin)


CHECKS: dict[str, Check] = {}


def _register(check_id, description, compute, margin=DEFAULT_MARGIN):
    if check_id in CHECKS:
        raise ValueError(f"duplicate check id {check_id}")
    CHECKS[check_id] = Check(check_id, description, compute, margin)


def _worst(pairs, ctx):
    return min(pairs, key=lambda pair: agree_digits(pair[0], pair[1], ctx))


def _count(conditions, ctx):
    conditions = list(conditions)
    return ctx.mp.mpf(sum(bool(c) for c in conditions)), ctx.mp.mpf(len(conditions))


# -- shared inputs -----------------------------------------------------------------

PIPELINE_GRID = ("0.05", "0.2", "0.4", "0.6", "e-pi", "e-pi-sqrt7", "e-pi-7")
SON_GRID = ("0.1", "0.3") + PIPELINE_GRID


def nome_for(label: str, ctx: PrecisionContext):
    """Grid nome by label: decimals, or e-pi, e-pi-sqrt7 (e^{-pi/sqrt 7}), e-pi-7 (e^{-pi/7})."""
    named = {"e-pi": Fraction(1), "e-pi-sqrt7": Fraction(1, 7), "e-pi-7": Fraction(1, 49)}
    if label in named:
        return nome(named[label], ctx)
    return ctx.mp.mpf(label)


@functools.lru_cache(maxsize=None)
def _solution(label: str, ctx: PrecisionContext):
    return run_pipeline(nome_for(label, ctx), ctx)


@functools.lru_cache(maxsize=None)
def _series(label: str, ctx: PrecisionContext):
    """Series-side quantities: (q, (u, v, w), p, M) with M = phi^4(q)/phi^4(q^7)."""
    q = nome_for(label, ctx)
    M = (phi(q, ctx) / phi(q ** 7, ctx)) ** 4
    return q, uvw_series(q, ctx), p_product(q, ctx), M


def _phi_series_npi(x, ctx):
    """phi(e^{-x pi}) from the series."""
    return phi(ctx.mp.exp(-x * ctx.mp.pi), ctx)


# -- precision core ------------------------------------------------------------------

def _build_precision_checks():
    _register("pi-arcsin", "pi against 2 asin(1)",
              lambda ctx: (const_pi(ctx), 2 * ctx.mp.asin(1)))
    _register("gamma-reflection-1/4", "Gamma(1/4) Gamma(3/4) = pi sqrt 2",
              lambda ctx: (gamma_rational(1, 4, ctx) * gamma_rational(3, 4, ctx), ctx.mp.pi * ctx.mp.sqrt(2)))
    _register("gamma-half", "Gamma(1/2) = sqrt(pi)",
              lambda ctx: (gamma_rational(1, 2, ctx), ctx.mp.sqrt(ctx.mp.pi)))
    for num, den in ((1, 7), (2, 7), (1, 4), (1, 3)):
        def recurrence(ctx, num=num, den=den):
            return gamma_rational(num + den, den, ctx), ctx.mpf(Fraction(num, den)) * gamma_rational(num, den, ctx)
        _register(f"gamma-recurrence-{num}/{den}", f"Gamma(x+1) = x Gamma(x) at x = {num}/{den}", recurrence, margin=2)
    _register("beta-half-half", "B(1/2, 1/2) = pi",
              lambda ctx: (beta_rational("1/2", "1/2", ctx), ctx.mp.pi))
    for m in (5, 7, 9):
        def cheb_roots(ctx, m=m):
            worst = max(abs(chebyshev_u(m - 1, cos_rational_pi(k, m, ctx), ctx)) for k in range(1, m))
            return worst, 0
        _register(f"cos-chebyshev-roots-m{m}", f"U_{m - 1}(cos(k pi/{m})) = 0", cheb_roots, margin=2)

    def minpoly(ctx):
        x = cos_rational_pi(1, 7, ctx)
        return 8 * x ** 3 - 4 * x ** 2 - 4 * x + 1, 0
    _register("cos-minpoly-1/7", "cos(pi/7) solves 8x^3 - 4x^2 - 4x + 1", minpoly, margin=2)


# -- theta series -------------------------------------------------------------------------

def _jtp_grid():
    rng = random.Random(20240607)
    pairs = []
    while len(pairs) < 10:
        a = round(rng.uniform(-2, 2), 3)
        b = round(rng.uniform(-2, 2), 3)
        if a != 0 and abs(a * b) <= 0.8:
            pairs.append((str(a), str(b)))
    return tuple(pairs)


JTP_GRID = _jtp_grid()


def _build_theta_checks():
    def jtp(ctx):
        pairs = []
        for a, b in JTP_GRID:
            a, b = ctx.mp.mpf(a), ctx.mp.mpf(b)
            pairs.append((f_series(a, b, ctx), f_product(a, b, ctx)))
        return _worst(pairs, ctx)
    _register("jacobi-triple-product", "f(a, b) series = triple product on a seeded grid", jtp, margin=2)

    for q in ("0.05", "0.2", "0.5", "0.8"):
        def product(ctx, q=q):
            q = ctx.mp.mpf(q)
            return phi(q, ctx), qpochhammer(-q, q * q, ctx) ** 2 * qpochhammer(q * q, q * q, ctx)
        _register(f"phi-product-q{q}", f"phi series = product form at q = {q}", product, margin=2)

    for n in (2, 3, 7, 49):
        def transform(ctx, n=n):
            mp = ctx.mp
            return phi(mp.exp(-mp.pi / mp.sqrt(n)), ctx), mp.root(n, 4) * phi(mp.exp(-mp.pi * mp.sqrt(n)), ctx)
        _register(f"transform-n{n}", f"phi(e^-pi/sqrt n) = n^(1/4) phi(e^-pi sqrt n), n = {n}", transform, margin=2)

    def shift(ctx):
        pairs = []
        for a, b in (("0.5", "0.3"), ("-0.4", "0.6"), ("1.5", "0.2"), ("0.9", "0.9"), ("-1.7", "-0.1")):
            a, b = ctx.mp.mpf(a), ctx.mp.mpf(b)
            pairs.append((f_series(a, b, ctx), a * f_series(1 / a, a * a * b, ctx)))
        return _worst(pairs, ctx)
    _register("f-shift-identity", "f(a, b) = a f(1/a, a^2 b)", shift, margin=2)

    for n in (5, 7):
        def dissection(ctx, n=n):
            q = ctx.mp.mpf("0.3")
            total = sum(u_component(q, n, k, ctx) for k in range(n))
            return total, phi(q ** (ctx.mp.mpf(1) / n), ctx)
        _register(f"dissection-sum-n{n}", f"sum of u_k = phi(q^(1/{n})) at q = 0.3", dissection, margin=2)

    def symmetry(ctx):
        q = ctx.mp.mpf("0.3")
        return _worst([(u_component(q, 7, k, ctx), u_component(q, 7, 7 - k, ctx)) for k in (1, 2, 3)], ctx)
    _register("uk-symmetry-n7", "u_k = u_{7-k} at q = 0.3", symmetry, margin=2)

    for n in (5, 7, 9, 11):
        def descent(ctx, n=n):
            conditions = []
            for q in ("0.1", "0.5", "0.9"):
                u = [u_component(ctx.mp.mpf(q), n, k, ctx) for k in range((n + 1) // 2)]
                conditions += [u[k] > u[k + 1] for k in range(len(u) - 1)] + [u[-1] > 0]
            return _count(conditions, ctx)
        _register(f"descent-order-n{n}", f"u_0 > u_1 > ... > u_(n-1)/2 > 0, n = {n}", descent)

    for label in SON_GRID:
        def power_sum_3(ctx, label=label):
            _, (u, v, w), p, M = _series(label, ctx)
            return u ** 3 * v + v ** 3 * w + w ** 3 * u, 2 * (M - 3 * p - 1)

        def power_sum_3i(ctx, label=label):
            _, (u, v, w), p, M = _series(label, ctx)
            return u ** 7 + v ** 7 + w ** 7, seventh_power_target(p, M)
        _register(f"power-sum-3-q{label}", "u^3 v + v^3 w + w^3 u = 2(M - 3p - 1)", power_sum_3)
        _register(f"power-sum-7-q{label}", "u^7 + v^7 + w^7 in terms of M and p", power_sum_3i)


# -- invariants ---------------------------------------------------------------------------------

G_TABLE = (1, 3, 7, 9, 25, 49, 147, 343, 441, 1225)


def _build_invariant_checks():
    for n in G_TABLE:
        _register(f"g-table-n{n}", f"closed G_{n} = numeric G_{n}",
                  lambda ctx, n=n: (class_invariant_closed(n, ctx), class_invariant_numeric(n, ctx)))
    for n in (3, 7, 49):
        _register(f"g-reciprocal-n{n}", f"G_{n} = G_1/{n} numerically",
                  lambda ctx, n=n: (class_invariant_numeric(n, ctx), class_invariant_numeric(Fraction(1, n), ctx)))
    _register("watson-6sqrt35", "(6 + sqrt 35)^(1/4) = sqrt((sqrt 14 + sqrt 10)/2)", cf.watson_6_sqrt35, margin=2)

    def septic(ctx, source):
        x = source(ctx) / ctx.mp.root(2, 4)
        return cf.watson_septic(x), 0
    _register("g343-septic", "2^(-1/4) G_343 (Watson) solves x^7 - 7x^6 - 7x^5 - 7x^4 - 1",
              lambda ctx: septic(ctx, cf.watson_g343_explicit))
    _register("g343-thm2-septic", "2^(-1/4) G_343 (cubic route) solves the Watson septic",
              lambda ctx: septic(ctx, cf.g343_theorem))

    for n, label in ((Fraction(1, 7), "e-pi-sqrt7"), (Fraction(1, 49), "e-pi-7"), (Fraction(1), "e-pi")):
        _register(f"p-invariants-n{n}", f"p = 2 sqrt2 G_n / G_49n^7 against the eta quotient, n = {n}",
                  lambda ctx, n=n, label=label: (p_from_invariants(n, ctx), _series(label, ctx)[2]))
    _register("p-invariants-n7", "p at q = e^-pi sqrt7 from G_7, G_343 against the eta quotient",
              lambda ctx: (p_from_invariants(7, ctx), p_product(nome(7, ctx), ctx)))

    def g343_p_cubic(ctx):
        p, m2 = cf.g343_p(ctx), cf.g343_multiplier(ctx) ** 2
        return p ** 3 - 3 * p ** 2 + (3 + 5 * m2) * p - (m2 - 1) ** 2, 0
    _register("g343-p-cubic", "p at e^-pi sqrt7 solves p^3 - 3p^2 + (3 + 5m^2)p - (m^2 - 1)^2", g343_p_cubic)
    _register("multiplier-n7-d7", "series multiplier at n = 7 = m from the missing terms",
              lambda ctx: (multiplier_numeric(7, 7, ctx), cf.g343_multiplier(ctx)))
    _register("multiplier-n1/49-d7", "series multiplier at n = 1/49 = m(p) at the e7 p",
              lambda ctx: (multiplier_numeric(Fraction(1, 49), 7, ctx), cf.m_of_p(cf.p_e7(ctx), ctx)))


# -- septic pipeline -------------------------------------------------------------------------------

def _build_pipeline_checks():
    for label in PIPELINE_GRID:
        def uvw(ctx, label=label):
            sol = _solution(label, ctx)
            return _worst(list(zip(sol.uvw, _series(label, ctx)[1])), ctx)

        def ratio(ctx, label=label):
            q = _series(label, ctx)[0]
            return _solution(label, ctx).ratio, phi(q ** (ctx.mp.mpf(1) / 7), ctx) / phi(q ** 7, ctx)

        def uvw_product(ctx, label=label):
            _, (u, v, w), p, _ = _series(label, ctx)
            return u * v * w, p

        def quadratic_residual(ctx, label=label):
            _, _, p, M = _series(label, ctx)
            return M * M - (2 + 5 * p) * M + (1 - p) ** 3, 0

        def bounds(ctx, label=label):
            _, (u, v, w), p, M = _series(label, ctx)
            return _count([2 > u, u > v, v > w, w > 0, 0 < p, p < 8, M >= 1 + 3 * p], ctx)

        def disc_positive(ctx, label=label):
            sol = _solution(label, ctx)
            return _count([sol.discriminant > 0, len(set(sol.roots)) == 3, min(sol.roots) > 0], ctx)

        def disc_formula(ctx, label=label):
            sol = _solution(label, ctx)
            return sol.discriminant, build_r(sol.p, sol.M).discriminant()

        def residuals(ctx, label=label):
            sol = _solution(label, ctx)
            r = build_r(sol.p, sol.M)
            return max(abs(r(x)) for x in sol.roots) / abs(r.c0), 0

        def vieta(ctx, label=label):
            sol = _solution(label, ctx)
            r = build_r(sol.p, sol.M)
            a, b, c = sol.roots
            return _worst([(a + b + c, -r.c2), (a * b * c, sol.p ** 4), (a * b + b * c + c * a, r.c1)], ctx)

        def orientation(ctx, label=label):
            sol = _solution(label, ctx)
            u, v, w = _series(label, ctx)[1]
            target = u ** 7 + v ** 7 + w ** 7
            a, b, c = sol.roots
            chosen = (a * a / b + b * b / c + c * c / a) * sol.p
            rejected = (c * c / b + b * b / a + a * a / c) * sol.p
            return _count([
                agree_digits(chosen, target, ctx) >= ctx.digits - DEFAULT_MARGIN,
                agree_digits(rejected, target, ctx) <= max(ctx.digits // 2 - 10, 5),
            ], ctx)

        def quadratic_root(ctx, label=label):
            _, _, p, M = _series(label, ctx)
            return phi4_ratio_from_p(p, ctx), M

        tag = f"q{label}"
        _register(f"pipeline-uvw-{tag}", "pipeline (u, v, w) = series (u, v, w)", uvw)
        _register(f"pipeline-ratio-{tag}", "1 + u + v + w = phi(q^(1/7))/phi(q^7)", ratio)
        _register(f"uvw-product-{tag}", "uvw = 8q^2 chi(q)/chi^7(q^7)", uvw_product)
        _register(f"quadratic-residual-{tag}", "M^2 - (2 + 5p)M + (1 - p)^3 = 0 on series values", quadratic_residual)
        _register(f"quadratic-root-{tag}", "the chosen root of the quadratic = series M", quadratic_root)
        _register(f"uvw-bounds-{tag}", "2 > u > v > w > 0, 0 < p < 8, M >= 1 + 3p", bounds)
        _register(f"disc-positive-{tag}", "Delta_minus > 0, three distinct positive roots", disc_positive)
        _register(f"disc-formula-{tag}", "Delta_minus = discriminant of r", disc_formula)
        _register(f"roots-residual-{tag}", "max |r(root)| / |c0| = 0", residuals, margin=5)
        _register(f"vieta-{tag}", "root sums and products match the coefficients", vieta)
        _register(f"orientation-{tag}", "exactly one orientation matches u^7 + v^7 + w^7", orientation)

    for p in ("0.5", "1", "2", "5", "7.9"):
        def product(ctx, p=p):
            p = ctx.mp.mpf(p)
            plus, minus = discriminants(p, ctx)
            return plus * minus, p ** 10 * (p - 8) ** 6
        _register(f"disc-product-p{p}", f"Delta_plus Delta_minus = p^10 (p - 8)^6 at p = {p}", product)

    _register("trig-41", "the three squared cosine quotients sum to 41",
              lambda ctx: (cf.trig_41(ctx), 41), margin=5)
    _register("trig-support-b-c-a", "cos(2pi/7) - cos(3pi/7) - cos(pi/7) = -1/2",
              lambda ctx: (cf.trig_support(ctx)[0], ctx.mp.mpf(-0.5)), margin=5)
    _register("trig-support-abc", "cos(pi/7) cos(2pi/7) cos(3pi/7) = 1/8",
              lambda ctx: (cf.trig_support(ctx)[1], ctx.mp.mpf(0.125)), margin=5)

    def u6(ctx):
        mp = ctx.mp
        r = build_r(mp.mpf(1), mp.mpf(7))
        pairs = [(r(mp.mpf(0)), chebyshev_u(6, 0, ctx))]
        for xi in ("0.1", "-0.1", "0.4", "-0.4", "0.9", "-0.9", "0.25"):
            xi = mp.mpf(xi)
            pairs.append((-(2 * xi) ** 6 * r(1 / (2 * xi) ** 2), chebyshev_u(6, xi, ctx)))
        return _worst(pairs, ctx)
    _register("r-u6-transform", "-(2 xi)^6 r(1/(2 xi)^2) = U_6(xi)", u6, margin=3)

    def thm1_roots(ctx):
        r = build_r(ctx.mp.mpf(1), ctx.mp.mpf(7))
        return _worst(list(zip(solve_cubic_real(r, ctx), sorted(cf.thm1_roots(ctx)))), ctx)

    def thm1_order(ctx):
        mp = ctx.mp
        r = build_r(mp.mpf(1), mp.mpf(7))
        ordered = order_roots(solve_cubic_real(r, ctx), mp.mpf(1), mp.mpf(7), ctx)
        return _worst(list(zip(ordered, cf.thm1_roots(ctx))), ctx)

    def thm1_factored(ctx):
        return _worst(list(zip(cf.thm1_roots_factored(ctx), cf.thm1_roots(ctx))), ctx)

    def thm1_uvw(ctx):
        from .pipeline import uvw_from_roots

        return _worst(list(zip(uvw_from_roots(cf.thm1_roots(ctx), 1, ctx), cf.missing_terms(ctx))), ctx)

    _register("thm1-roots", "roots of xi^3 - 6xi^2 + 5xi - 1 = 1/(2cos(k pi/7))^2", thm1_roots)
    _register("thm1-order", "root ordering gives (1/(2cos(3pi/7))^2, 1/(2cos(2pi/7))^2, 1/(2cos(pi/7))^2)", thm1_order)
    _register("thm1-factorization", "factorised roots over Q(cos pi/7) = cosine forms", thm1_factored)
    _register("thm1-uvw", "u, v, w from the cosine roots = the missing terms", thm1_uvw)


# -- closed forms ---------------------------------------------------------------------------------------

def _build_closed_form_checks():
    def thm1(ctx):
        mp = ctx.mp
        lhs = mp.mpf(7) ** mp.mpf(-0.75) * phi(nome(7, ctx), ctx) * cf.thm1_bracket(ctx)
        return lhs, phi(nome(343, ctx), ctx)
    _register("thm1", "phi(e^-7pi sqrt7) = 7^(-3/4) phi(e^-pi sqrt7) {1 + three terms}", thm1)
    _register("thm1-pipeline", "pipeline ratio at q = e^-pi/sqrt7 = 1 + the missing terms",
              lambda ctx: (_solution("e-pi-sqrt7", ctx).ratio, cf.thm1_bracket(ctx)))
    _register("thm1-phi-7pi-sqrt7", "closed phi(e^-7pi sqrt7) = series",
              lambda ctx: (cf.thm1_phi_7pi_sqrt7(ctx), phi(nome(343, ctx), ctx)))

    _register("phi-e-pi", "pi^(1/4)/Gamma(3/4) = series phi(e^-pi)",
              lambda ctx: (cf.phi_e_pi(ctx), phi(nome(1, ctx), ctx)), margin=2)
    _register("phi-e-pi-sqrt3", "Gamma(1/3) form = series phi(e^-pi sqrt3)",
              lambda ctx: (cf.phi_e_pi_sqrt3(ctx), phi(nome(3, ctx), ctx)), margin=2)
    _register("phi-e-pi-sqrt7-gamma", "Gamma form = series phi(e^-pi sqrt7)",
              lambda ctx: (cf.phi_e_pi_sqrt7_gamma(ctx), phi(nome(7, ctx), ctx)), margin=2)
    _register("phi-e-pi-sqrt7-beta", "Beta form = series phi(e^-pi sqrt7)",
              lambda ctx: (cf.phi_e_pi_sqrt7_beta(ctx), phi(nome(7, ctx), ctx)), margin=2)
    _register("phi-e-pi-sqrt7-forms", "Gamma form = Beta form",
              lambda ctx: (cf.phi_e_pi_sqrt7_gamma(ctx), cf.phi_e_pi_sqrt7_beta(ctx)), margin=2)

    _register("g343-cross", "G_343 via the cubic = Watson G_343",
              lambda ctx: (cf.g343_theorem(ctx), cf.watson_g343_explicit(ctx)))
    _register("g343-thm2-numeric", "G_343 via the cubic = chi-based G_343",
              lambda ctx: (cf.g343_theorem(ctx), class_invariant_numeric(343, ctx)))
    _register("g343-watson-numeric", "Watson G_343 = chi-based G_343",
              lambda ctx: (cf.watson_g343_explicit(ctx), class_invariant_numeric(343, ctx)))

    def series_ratio(n, ctx, power=1):
        return (_phi_series_npi(n, ctx) / _phi_series_npi(1, ctx)) ** power

    _register("thm-e7", "closed phi^2(e^-7pi)/phi^2(e^-pi) = series",
              lambda ctx: (cf.thm_e7(ctx), series_ratio(7, ctx, 2)))

    def e7s3(ctx):
        mp = ctx.mp
        return cf.thm_e7pisqrt3(ctx), (phi(nome(147, ctx), ctx) / phi(nome(3, ctx), ctx)) ** 2
    _register("thm-e7pisqrt3", "closed phi^2(e^-7pi sqrt3)/phi^2(e^-pi sqrt3) = series", e7s3)
    _register("phi-e-7pi-sqrt3", "closed phi(e^-7pi sqrt3) = series",
              lambda ctx: (cf.phi_e_7pi_sqrt3(ctx), phi(nome(147, ctx), ctx)))
    _register("thm-e21", "closed phi(e^-21pi)/phi(e^-pi) = series",
              lambda ctx: (cf.thm_e21(ctx), series_ratio(21, ctx)))
    _register("alt-e21", "G_441 form of phi(e^-21pi)/phi(e^-pi) = series", lambda ctx: (cf.alt_e21(ctx), series_ratio(21, ctx)))
    _register("alt-e21-vs-thm", "G_441 form = p-based form", lambda ctx: (cf.alt_e21(ctx), cf.thm_e21(ctx)))
    _register("thm-e35", "closed phi(e^-35pi)/phi(e^-pi) = series",
              lambda ctx: (cf.thm_e35(ctx), series_ratio(35, ctx)))
    _register("alt-e35", "G_1225 form of phi(e^-35pi)/phi(e^-pi) = series", lambda ctx: (cf.alt_e35(ctx), series_ratio(35, ctx)))
    _register("alt-e35-vs-thm", "G_1225 form = p-based form", lambda ctx: (cf.alt_e35(ctx), cf.thm_e35(ctx)))
    _register("e3-const", "(6 sqrt3 - 9)^(-1/4) = series phi(e^-3pi)/phi(e^-pi)",
              lambda ctx: (cf.e3_const(ctx), series_ratio(3, ctx)))
    _register("e5-const", "(5 sqrt5 - 10)^(-1/2) = series phi(e^-5pi)/phi(e^-pi)",
              lambda ctx: (cf.e5_const(ctx), series_ratio(5, ctx)))
    _register("thm-e49", "closed phi(e^-49pi)/phi(e^-pi) = series",
              lambda ctx: (cf.thm_e49(ctx), series_ratio(49, ctx)))
    _register("thm-e49-pipeline", "pipeline ratio at q = e^-pi/7, over 7 = closed phi(e^-49pi)/phi(e^-pi)",
              lambda ctx: (_solution("e-pi-7", ctx).ratio / 7, cf.thm_e49(ctx)))
    _register("thm-e49-p", "eta-quotient p at q = e^-pi/7 = sqrt7 + sqrt2 7^(1/4) + 1",
              lambda ctx: (_series("e-pi-7", ctx)[2], cf.p_e7(ctx)))
    _register("thm-e49-root-forms", "alpha, beta, gamma = their a = 28^(1/4) forms",
              lambda ctx: _worst(list(zip(cf.e49_roots(ctx), cf.e49_roots_in_a(ctx))), ctx))

    def e49_cubic(ctx):
        p, m, r = cf.family_pa_ma_ra(ctx.mp.root(28, 4), ctx)
        return _worst(list(zip(solve_cubic_real(r, ctx), sorted(cf.e49_roots(ctx)))), ctx)
    _register("thm-e49-cubic-roots", "roots of r_a at a = 28^(1/4) = closed alpha, beta, gamma", e49_cubic)

    def e49_order(ctx):
        p, m, r = cf.family_pa_ma_ra(ctx.mp.root(28, 4), ctx)
        ordered = order_roots(solve_cubic_real(r, ctx), p, m * m, ctx)
        return _worst(list(zip(ordered, cf.e49_roots(ctx))), ctx)
    _register("thm-e49-order", "root ordering gives the closed (alpha, beta, gamma) at a = 28^(1/4)", e49_order)

    _register("ratio-3pisqrtn", "3 pi sqrt n formula at n = 1 = e3 constant",
              lambda ctx: (cf.ratio_3pi_sqrt_n(1, ctx), cf.e3_const(ctx)))
    _register("ratio-5pisqrtn", "5 pi sqrt n formula at n = 1 = e5 constant",
              lambda ctx: (cf.ratio_5pi_sqrt_n(1, ctx), cf.e5_const(ctx)))
    _register("ratio-7pisqrtn", "7 pi sqrt n formula at n = 1 = sqrt of closed phi^2(e^-7pi)/phi^2(e^-pi)",
              lambda ctx: (cf.ratio_7pi_sqrt_n(1, ctx), ctx.mp.sqrt(cf.thm_e7(ctx))))
    _register("ratio-7pisqrtn-n3", "7 pi sqrt n formula at n = 3 = sqrt of closed e7pisqrt3 ratio",
              lambda ctx: (cf.ratio_7pi_sqrt_n(3, ctx), ctx.mp.sqrt(cf.thm_e7pisqrt3(ctx))))
    _register("ratio-9pisqrtn", "9 pi sqrt n formula at n = 1 = series phi(e^-9pi)/phi(e^-pi)",
              lambda ctx: (cf.ratio_9pi_sqrt_n(1, ctx), series_ratio(9, ctx)))
    _register("ratio-3pisqrtn-n49", "3 pi sqrt n formula at n = 49 = series phi(e^-21pi)/phi(e^-7pi)",
              lambda ctx: (cf.ratio_3pi_sqrt_n(49, ctx), _phi_series_npi(21, ctx) / _phi_series_npi(7, ctx)))
    _register("ratio-5pisqrtn-n49", "5 pi sqrt n formula at n = 49 = series phi(e^-35pi)/phi(e^-7pi)",
              lambda ctx: (cf.ratio_5pi_sqrt_n(49, ctx), _phi_series_npi(35, ctx) / _phi_series_npi(7, ctx)))

    for name, fn, n in (("e7", cf.p_e7, 1), ("e7pisqrt3", cf.p_e7pisqrt3, 3), ("e21", cf.p_e21, 9), ("e35", cf.p_e35, 25)):
        _register(f"p-{name}-invariants", f"closed p = 2 sqrt2 G_{49 * n} / G_{n}^7 (closed G)",
                  lambda ctx, fn=fn, n=n: (fn(ctx), cf.p_7pi_sqrt_n(n, ctx)))
        _register(f"p-{name}-numeric", f"closed p = 2 sqrt2 G_{49 * n} / G_{n}^7 (numeric G)",
                  lambda ctx, fn=fn, n=n: (fn(ctx), cf.p_7pi_sqrt_n(n, ctx, class_invariant_numeric)))

    def e7s3_108(ctx):
        mp = ctx.mp
        a = mp.root(756, 6)
        poly = a ** 4 + 3 * a ** 3 + 12 * a ** 2 + 18 * a + 90
        return poly * (mp.mpf(1) / 2 + (mp.sqrt(mp.mpf(7) / 4) - mp.root(28, 6)) / mp.sqrt(3)), 108
    _register("e7pisqrt3-108", "(a^4 + 3a^3 + 12a^2 + 18a + 90)(...) = 108 at a = 756^(1/6)", e7s3_108)

    for identity in cf.PROOF_IDENTITIES:
        def proof(ctx, identity=identity):
            fn, samples = cf.PROOF_IDENTITIES[identity]
            return _worst([fn(cf.sample_point(s, ctx), ctx) for s in samples], ctx)
        _register(identity, f"both sides of {identity} at a in {{0.5, 1, 28^(1/4), 756^(1/6)}}", proof)

    _register("proof-id-e7-i-vanish", "a^4 - 28 vanishes at a = 28^(1/4)",
              lambda ctx: (ctx.mp.root(28, 4) ** 4 - 28, 0))
    _register("proof-id-e7sqrt3-vanish", "a^6 - 756 vanishes at a = 756^(1/6)",
              lambda ctx: (ctx.mp.root(756, 6) ** 6 - 756, 0))

    def family_a0(ctx):
        p, m, r = cf.family_pa_ma_ra(0, ctx)
        return _worst([(p, 1), (m * m, 7), (r.c2, -6), (r.c1, 5), (r.c0, -1)], ctx)
    _register("family-a0", "a = 0 gives p = 1, m^2 = 7, r = xi^3 - 6xi^2 + 5xi - 1", family_a0)

    def family_expansion(ctx):
        pairs = []
        for a in ("0", "1", "28^1/4", "-0.7"):
            a = cf.sample_point(a, ctx)
            _, _, r = cf.family_pa_ma_ra(a, ctx)
            e = cf.family_r_expanded(a, ctx)
            pairs += [(r.c2, e.c2), (r.c1, e.c1), (r.c0, e.c0)]
        return _worst(pairs, ctx)
    _register("family-r-expansion", "r_a = its expansion in powers of a", family_expansion)
    _register("family-m-a", "m_a at a = 28^(1/4) = m(p) at the e7 p",
              lambda ctx: (cf.family_pa_ma_ra(ctx.mp.root(28, 4), ctx)[1], cf.m_of_p(cf.p_e7(ctx), ctx)))
    _register("family-p-a", "p_a at a = 28^(1/4) = sqrt7 + sqrt2 7^(1/4) + 1",
              lambda ctx: (cf.family_pa_ma_ra(ctx.mp.root(28, 4), ctx)[0], cf.p_e7(ctx)))


_build_precision_checks()
_build_theta_checks()
_build_invariant_checks()
_build_pipeline_checks()
_build_closed_form_checks()


def check_ids() -> list[str]:
    return sorted(CHECKS)


def get_check(check_id: str) -> Check:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise RegistryError(f"unknown check {check_id!r}") from None


def run_check(check_id: str, digits: int = DEFAULT_DIGITS) -> VerificationResult:
    """Run one check; errors other than an unknown id propagate."""
    check = get_check(check_id)
    ctx = make_context(digits)
    start = time.perf_counter()
    lhs, rhs = check.compute(ctx)
    return compare(check_id, lhs, rhs, ctx, check.required(digits), time.perf_counter() - start)


def _run_captured(check_id: str, digits: int) -> VerificationResult:
    start = time.perf_counter()
    try:
        return run_check(check_id, digits)
    except SepticaError as exc:
        return failure(check_id, exc, get_check(check_id).required(digits), time.perf_counter() - start)


def run_all(digits: int = DEFAULT_DIGITS, parallel: bool = False, ids=None) -> list[VerificationResult]:
    """Run the selected (default: all) checks, ordered by check id.

    Per-check library errors are recorded as failures instead of aborting.
    """
    ids = sorted(set(ids)) if ids is not None else check_ids()
    for check_id in ids:
        get_check(check_id)
    make_context(digits)
    if parallel and len(ids) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_captured, ids, [digits] * len(ids)))
    else:
        results = [_run_captured(check_id, digits) for check_id in ids]
    return sorted(results, key=lambda r: r.check_id)
