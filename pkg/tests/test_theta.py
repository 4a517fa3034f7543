from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import assert_agree
from septica.errors import DomainError, NonConvergenceError
from septica.pipeline import p_product
from septica.precision import PrecisionContext, cos_rational_pi, gamma_rational, make_context
from septica.theta import chi, f_product, f_series, phi, phi_ratio, qpochhammer, u_component, uvw_series

C30 = make_context(30)


def exact_partial_product(a: Fraction, q: Fraction, factors: int) -> Fraction:
    out = Fraction(1)
    for k in range(factors):
        out *= 1 - a * q ** k
    return out


def exact_phi(q: Fraction, terms: int = 14) -> Fraction:
    return 1 + 2 * sum(q ** (n * n) for n in range(1, terms))


def son_sides(q, ctx):
    u, v, w = uvw_series(q, ctx)
    p = p_product(q, ctx)
    M = (phi(q, ctx) / phi(q ** 7, ctx)) ** 4
    first = (u ** 3 * v + v ** 3 * w + w ** 3 * u, 2 * (M - 3 * p - 1))
    second = (u ** 7 + v ** 7 + w ** 7, M * M - 7 * (p - 2) * M + 7 * p * p - 49 * p - 15)
    return first, second


class TestQPochhammer:
    def test_zero_a(self, ctx):
        assert qpochhammer(0, ctx.mpf("0.7"), ctx) == 1

    def test_small_nome_hand_product(self, ctx):
        oracle = exact_partial_product(Fraction(-1, 10), Fraction(1, 100), 40)
        value = qpochhammer(ctx.mpf("-0.1"), ctx.mpf("0.01"), ctx)
        assert_agree(value, ctx.mpf(oracle), ctx, 58)
        assert str(value).startswith("1.10111112")

    def test_half_against_long_partial_product(self, ctx):
        hi = make_context(100)
        oracle = hi.mp.mpf(1)
        for k in range(400):
            oracle *= 1 - hi.mpf(Fraction(1, 2 ** (k + 1)))
        assert_agree(qpochhammer(ctx.mpf("0.5"), ctx.mpf("0.5"), ctx), oracle, ctx, 60)

    def test_domain(self, ctx):
        with pytest.raises(DomainError):
            qpochhammer(ctx.mpf("0.1"), 1, ctx)

    def test_cap_raises(self):
        tight = PrecisionContext(digits=30, max_terms=50)
        with pytest.raises(NonConvergenceError):
            qpochhammer(tight.mpf("0.5"), tight.mpf("0.99"), tight)


class TestThetaSeries:
    def test_trivial_values(self, ctx):
        assert f_series(0, 0, ctx) == 1
        assert f_product(0, 0, ctx) == 1
        assert phi(0, ctx) == 1
        assert chi(0, ctx) == 1

    def test_phi_point_one(self, ctx):
        q = ctx.mpf("0.1")
        assert_agree(phi(q, ctx), ctx.mpf(exact_phi(Fraction(1, 10))), ctx, 60)
        assert_agree(f_series(q, q, ctx), phi(q, ctx), ctx, 60)
        assert_agree(f_product(q, q, ctx), phi(q, ctx), ctx, 58)
        assert str(phi(q, ctx)).startswith("1.2002000020")

    def test_chi_point_one(self, ctx):
        assert str(chi(ctx.mpf("0.1"), ctx)).startswith("1.10111112")

    def test_phi_e_pi_gamma_value(self, ctx):
        mp = ctx.mp
        assert_agree(phi(mp.exp(-mp.pi), ctx), mp.root(mp.pi, 4) / gamma_rational(3, 4, ctx), ctx, 58)

    def test_triple_product_point(self, ctx):
        a, b = ctx.mpf("0.2"), ctx.mpf("0.3")
        assert_agree(f_series(a, b, ctx), f_product(a, b, ctx), ctx, 58)

    @given(a=st.floats(-2.5, 2.5), b=st.floats(-2.5, 2.5))
    @settings(max_examples=60, deadline=None)
    def test_triple_product_random(self, a, b):
        assume(abs(a * b) <= 0.8)
        assert_agree(f_series(a, b, C30), f_product(a, b, C30), C30, 28)

    @given(a=st.floats(-3, 3), b=st.floats(-0.9, 0.9))
    @settings(max_examples=60, deadline=None)
    def test_shift_identity(self, a, b):
        assume(abs(a) > 0.05 and abs(a * b) < 0.9)
        a = C30.mpf(a)
        assert_agree(f_series(a, b, C30), a * f_series(1 / a, a * a * b, C30), C30, 27)

    @pytest.mark.parametrize("q", ["0.05", "0.2", "0.5", "0.8"])
    def test_phi_product_form(self, ctx, q):
        q = ctx.mpf(q)
        product = qpochhammer(-q, q * q, ctx) ** 2 * qpochhammer(q * q, q * q, ctx)
        assert_agree(phi(q, ctx), product, ctx, 58)

    @pytest.mark.parametrize("n", [2, 3, 7, 49])
    def test_transformation(self, ctx, n):
        mp = ctx.mp
        lhs = phi(mp.exp(-mp.pi / mp.sqrt(n)), ctx)
        assert_agree(lhs, mp.root(n, 4) * phi(mp.exp(-mp.pi * mp.sqrt(n)), ctx), ctx, 58)

    def test_domain(self, ctx):
        with pytest.raises(DomainError):
            phi(1, ctx)
        with pytest.raises(DomainError):
            f_series(2, 0.5, ctx)
        with pytest.raises(DomainError):
            f_product(2, 0.5, ctx)


class TestComponents:
    def test_u0(self, ctx):
        q = ctx.mpf("0.3")
        assert u_component(q, 7, 0, ctx) == phi(q ** 7, ctx)

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_dissection_sum(self, ctx, n):
        q = ctx.mpf("0.3")
        total = sum(u_component(q, n, k, ctx) for k in range(n))
        assert_agree(total, phi(q ** (ctx.mpf(1) / n), ctx), ctx, 58)

    @pytest.mark.parametrize("n", [5, 7, 9, 11])
    @pytest.mark.parametrize("q", ["0.1", "0.5", "0.9"])
    def test_strict_descent(self, ctx, n, q):
        u = [u_component(ctx.mpf(q), n, k, ctx) for k in range((n + 1) // 2)]
        assert all(x > y for x, y in zip(u, u[1:]))
        assert u[-1] > 0

    @given(q=st.floats(0.01, 0.95), n=st.sampled_from([5, 7, 9, 11]))
    @settings(max_examples=40, deadline=None)
    def test_strict_descent_random(self, q, n):
        u = [u_component(q, n, k, C30) for k in range((n + 1) // 2)]
        assert all(x > y for x, y in zip(u, u[1:])) and u[-1] > 0

    @pytest.mark.parametrize("bad", [(0.3, 4, 1), (0.3, 7, 7), (0.3, 1, 0), (1.2, 7, 1)])
    def test_domain(self, ctx, bad):
        q, n, k = bad
        with pytest.raises(DomainError):
            u_component(q, n, k, ctx)


class TestUVW:
    def test_zero_nome(self, ctx):
        assert uvw_series(0, ctx) == (0, 0, 0)

    def test_bounds_at_point_three(self, ctx):
        u, v, w = uvw_series(ctx.mpf("0.3"), ctx)
        assert 2 > u > v > w > 0

    @given(q=st.floats(0.001, 0.9))
    @settings(max_examples=40, deadline=None)
    def test_bounds_random(self, q):
        u, v, w = uvw_series(q, C30)
        p = p_product(q, C30)
        assert 2 > u > v > w > 0
        assert 0 < p < 8

    def test_theorem1_terms(self, ctx):
        # the three terms as explicit cosine expressions
        c = {k: cos_rational_pi(k, 7, ctx) for k in (1, 2, 3)}
        e = ctx.mpf(2) / 7
        expected = (
            (c[2] / (2 * c[3] ** 2)) ** e,
            (c[1] / (2 * c[2] ** 2)) ** e,
            (c[3] / (2 * c[1] ** 2)) ** e,
        )
        got = uvw_series(ctx.mp.exp(-ctx.mp.pi / ctx.mp.sqrt(7)), ctx)
        for x, y in zip(got, expected):
            assert_agree(x, y, ctx, 58)

    def test_frozen_uvw(self, ctx):
        # oracle: the q-series at 100 digits
        got = uvw_series(ctx.mp.exp(-ctx.mp.pi / ctx.mp.sqrt(7)), ctx)
        frozen = (
            "1.691617519854553658621756267280995349855",
            "1.043017841153446372848248387820667830398",
            "0.5667690003713972036167700621359740158004",
        )
        for x, y in zip(got, frozen):
            assert_agree(x, ctx.mpf(y), ctx, 39)

    @pytest.mark.parametrize("q", ["0.1", "0.3", "0.6"])
    def test_son_identities(self, ctx, q):
        for lhs, rhs in son_sides(ctx.mpf(q), ctx):
            assert_agree(lhs, rhs, ctx, 57)

    @given(q=st.floats(0.02, 0.7))
    @settings(max_examples=25, deadline=None)
    def test_son_identities_random(self, q):
        for lhs, rhs in son_sides(C30.mpf(q), C30):
            assert_agree(lhs, rhs, C30, 27)


class TestPhiRatio:
    def test_degree_one(self, ctx):
        assert phi_ratio(ctx.mpf("0.4"), 1, ctx) == 1

    def test_seventh_power_at_theorem1_nome(self, ctx):
        mp = ctx.mp
        assert_agree(phi_ratio(mp.exp(-mp.pi / mp.sqrt(7)), 7, ctx) ** 4, 7, ctx, 58)

    def test_theorem_e7(self, ctx):
        mp = ctx.mp
        s7 = mp.sqrt(7)
        closed = (mp.sqrt(13 + s7) + mp.sqrt(7 + 3 * s7)) / 14 * mp.root(28, 8)
        assert_agree(1 / phi_ratio(mp.exp(-mp.pi), 7, ctx) ** 2, closed, ctx, 55)

    def test_domain(self, ctx):
        with pytest.raises(DomainError):
            phi_ratio(ctx.mpf("0.4"), 0, ctx)
