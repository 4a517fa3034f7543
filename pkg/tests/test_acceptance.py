"""Acceptance criteria 1-13; a PASS/FAIL line per criterion is printed in the terminal summary."""

import subprocess
import sys
from fractions import Fraction

import pytest

from conftest import assert_agree
from septica import closed_forms as cf
from septica.checks import PIPELINE_GRID, nome_for
from septica.invariants import class_invariant_closed, class_invariant_numeric, nome
from septica.pipeline import discriminants, p_product, run_pipeline
from septica.precision import decimal_string, make_context
from septica.theta import phi, u_component, uvw_series

NEED = 50
TINY_EXP = -50


@pytest.fixture
def criterion(record_property):
    def mark(number, title):
        record_property("criterion", number)
        record_property("title", title)
    return mark


def tiny(x, ctx):
    return abs(x) < ctx.mpf(10) ** TINY_EXP


def ratio_series(n, ctx):
    mp = ctx.mp
    return phi(mp.exp(-n * mp.pi), ctx) / phi(mp.exp(-mp.pi), ctx)


def test_criterion_01(ctx, criterion):
    criterion(1, "missing terms reproduce phi(e^{-7 pi sqrt7}) from phi(e^{-pi sqrt7})")
    mp = ctx.mp
    base = phi(nome(7, ctx), ctx)
    lhs = mp.mpf(7) ** mp.mpf(-0.75) * base * (1 + sum(cf.missing_terms(ctx)))
    assert_agree(lhs, phi(nome(343, ctx), ctx), ctx, NEED)


def test_criterion_02(ctx, criterion):
    criterion(2, "pipeline (u,v,w) equals the series on the q grid; product form; quadratic residual")
    for label in PIPELINE_GRID:
        q = nome_for(label, ctx)
        sol = run_pipeline(q, ctx)
        u, v, w = uvw_series(q, ctx)
        for a, b in zip(sol.uvw, (u, v, w)):
            assert_agree(a, b, ctx, NEED)
        p = p_product(q, ctx)
        assert_agree(u * v * w, p, ctx, NEED)
        M = (phi(q, ctx) / phi(q ** 7, ctx)) ** 4
        assert tiny(M * M - (2 + 5 * p) * M + (1 - p) ** 3, ctx)


def test_criterion_03(ctx, criterion):
    criterion(3, "power-sum identities on the q grid")
    for label in PIPELINE_GRID:
        q = nome_for(label, ctx)
        u, v, w = uvw_series(q, ctx)
        p = p_product(q, ctx)
        M = (phi(q, ctx) / phi(q ** 7, ctx)) ** 4
        assert_agree(u ** 3 * v + v ** 3 * w + w ** 3 * u, 2 * (M - 3 * p - 1), ctx, NEED)
        assert_agree(u ** 7 + v ** 7 + w ** 7, M * M - 7 * (p - 2) * M + 7 * p * p - 49 * p - 15, ctx, NEED)
        sol = run_pipeline(q, ctx)
        a, b, c = sol.roots
        assert_agree(u ** 7 + v ** 7 + w ** 7, p * (a * a / b + b * b / c + c * c / a), ctx, NEED)


def test_criterion_04(ctx, criterion):
    criterion(4, "discriminant positive on the grid; Delta_plus Delta_minus = p^10 (p-8)^6")
    for label in PIPELINE_GRID:
        assert run_pipeline(nome_for(label, ctx), ctx).discriminant > 0
    for p in ("0.5", "1", "2", "5", "7.9"):
        p = ctx.mpf(p)
        plus, minus = discriminants(p, ctx)
        expected = p ** 10 * (p - 8) ** 6
        assert abs(plus * minus - expected) / expected < ctx.mpf(10) ** TINY_EXP


def test_criterion_05(ctx, criterion):
    criterion(5, "cosine quotient sum is 41; b - c - a = -1/2; abc = 1/8")
    assert_agree(cf.trig_41(ctx), 41, ctx, 55)
    diff, prod = cf.trig_support(ctx)
    assert_agree(diff, ctx.mpf(-0.5), ctx, 55)
    assert_agree(prod, ctx.mpf(0.125), ctx, 55)


def test_criterion_06(ctx, criterion):
    criterion(6, "G_343 by the cubic, the radical construction and the series agree; septic residual")
    values = (cf.g343_theorem(ctx), cf.watson_g343_explicit(ctx), class_invariant_numeric(343, ctx))
    for i in range(3):
        for j in range(i + 1, 3):
            assert_agree(values[i], values[j], ctx, NEED)
    scale = ctx.mp.root(2, 4)
    for value in values:
        assert tiny(cf.watson_septic(value / scale), ctx)


def test_criterion_07(ctx, criterion):
    criterion(7, "closed forms at 7, 7 sqrt3, 21, 35, 49 match the series; alternative displays agree")
    assert_agree(cf.thm_e7(ctx), ratio_series(7, ctx) ** 2, ctx, NEED)
    sqrt3_ratio = phi(nome(147, ctx), ctx) / phi(nome(3, ctx), ctx)
    assert_agree(cf.thm_e7pisqrt3(ctx), sqrt3_ratio ** 2, ctx, NEED)
    for n, closed, alt in ((21, cf.thm_e21, cf.alt_e21), (35, cf.thm_e35, cf.alt_e35)):
        assert_agree(closed(ctx), ratio_series(n, ctx), ctx, NEED)
        assert_agree(alt(ctx), closed(ctx), ctx, NEED)
    assert_agree(cf.thm_e49(ctx), ratio_series(49, ctx), ctx, NEED)


def test_criterion_08(ctx, criterion):
    criterion(8, "ratio formulas in class invariants at n = 1")
    assert_agree(cf.ratio_3pi_sqrt_n(1, ctx), cf.e3_const(ctx), ctx, NEED)
    assert_agree(cf.ratio_5pi_sqrt_n(1, ctx), cf.e5_const(ctx), ctx, NEED)
    assert_agree(cf.ratio_7pi_sqrt_n(1, ctx) ** 2, cf.thm_e7(ctx), ctx, NEED)
    assert_agree(cf.ratio_9pi_sqrt_n(1, ctx), ratio_series(9, ctx), ctx, NEED)


def test_criterion_09(ctx, criterion):
    criterion(9, "class invariant table matches the series; reciprocity")
    for n in (1, 3, 7, 9, 25, 49, 147, 343, 441, 1225):
        assert_agree(class_invariant_closed(n, ctx), class_invariant_numeric(n, ctx), ctx, NEED)
    for n in (3, 7, 49):
        assert_agree(class_invariant_numeric(Fraction(1, n), ctx), class_invariant_numeric(n, ctx), ctx, NEED)


def test_criterion_10(ctx, criterion):
    criterion(10, "proof-step polynomial identities at sampled a, including the vanishing points")
    for identity, (fn, samples) in cf.PROOF_IDENTITIES.items():
        for label in samples:
            lhs, rhs = fn(cf.sample_point(label, ctx), ctx)
            assert_agree(lhs, rhs, ctx, NEED)
    a4 = cf.sample_point("28^1/4", ctx)
    a6 = cf.sample_point("756^1/6", ctx)
    assert tiny((a4 ** 4 - 28) / 28, ctx) and tiny((a6 ** 6 - 756) / 756, ctx)


def test_criterion_11(ctx, criterion):
    criterion(11, "strict descent u_0 > u_1 > ... > 0")
    for n in (5, 7, 9, 11):
        for q in ("0.1", "0.5", "0.9"):
            us = [u_component(ctx.mpf(q), n, k, ctx) for k in range((n + 1) // 2)]
            assert all(x > y for x, y in zip(us, us[1:])) and us[-1] > 0


def truncate(s: str, digits: int) -> str:
    """First ``digits`` significant digits of a rendered decimal."""
    mantissa, _, exponent = s.partition("e")
    out, seen, started = [], 0, False
    for ch in mantissa:
        if ch.isdigit():
            started = started or ch != "0"
            if started:
                if seen == digits:
                    break
                seen += 1
        out.append(ch)
    text = "".join(out).rstrip(".")
    return text + ("e" + exponent if exponent else "")


def test_criterion_12(criterion):
    criterion(12, "every registry constant at 30 digits truncates its 60-digit value")
    low, high = make_context(30), make_context(60)
    mismatched = []
    for identifier in cf.closed_form_ids():
        entry = cf.get_entry(identifier)
        a = decimal_string(entry.evaluate(low), 30)
        b = truncate(decimal_string(entry.evaluate(high), 60), 30)
        if a != b:
            mismatched.append((identifier, a, b))
    assert not mismatched


def test_criterion_13(tmp_path, criterion):
    criterion(13, "two full verify runs write byte-identical JSON")
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        run = subprocess.run(
            [sys.executable, "-m", "septica", "verify", "--all", "--digits", "60", "--json", str(path), "--no-timing"],
            capture_output=True, text=True,
        )
        assert run.returncode == 0, run.stdout + run.stderr
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
