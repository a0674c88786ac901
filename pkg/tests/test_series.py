from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from betajack.errors import UnboundedAtInfinity
from betajack.scalars import ParamContext
from betajack.series import TruncatedSeries, laurent_expand_at_infinity, limit_scaled_at_infinity
from oracles import laurent_at_infinity

CTX = ParamContext(("n", "c"))
n, c = CTX.gens()


def coeffs(series):
    return list(series.coefficients)


def test_expand_simple_quotient():
    assert coeffs(laurent_expand_at_infinity((n + 1) / n, "n", 2)) == [1, 1, 0]


def test_expand_geometric():
    assert coeffs(laurent_expand_at_infinity(1 / (n + 2), "n", 3)) == [0, 1, -2, 4]
    assert coeffs(laurent_expand_at_infinity(n ** 2 / (n ** 2 - 1), "n", 4)) == [1, 0, 1, 0, 1]


def test_expand_keeps_other_parameters():
    got = laurent_expand_at_infinity((c * n + 1) / (n + c), "n", 3)
    assert coeffs(got) == [c, 1 - c * c, c ** 3 - c, c ** 2 - c ** 4]
    assert got.variable == "1/n"


def test_unbounded_reports_excess_degree():
    with pytest.raises(UnboundedAtInfinity) as info:
        laurent_expand_at_infinity(n ** 3 / (n + 1), "n", 2)
    assert info.value.excess == 2


def test_limit_scaled():
    ctx = ParamContext(("n", "beta", "c", "d"))
    n_, beta, c_, d = ctx.gens()
    assert limit_scaled_at_infinity((3 * d ** 2 + n_ * d) / (d - 1), "d", 1) == 3
    assert limit_scaled_at_infinity(1 / (d + 1), "d", 0) == 0
    f = (beta * d / 2) * n_ * (c_ + n_ - 1) / (c_ + d + 2 * n_ - 2)
    # f is bounded in d: the finite limit is the power-0 one, and d^-1 f -> 0
    assert limit_scaled_at_infinity(f, "d", 0) == beta / 2 * n_ * (c_ + n_ - 1)
    assert limit_scaled_at_infinity(f, "d", 1) == 0
    assert limit_scaled_at_infinity(d * f, "d", 1) == beta / 2 * n_ * (c_ + n_ - 1)
    with pytest.raises(UnboundedAtInfinity):
        limit_scaled_at_infinity(d ** 2, "d", 1)


def test_truncated_series_ops():
    s = TruncatedSeries.linear("eps", 3, Fraction(2))
    g = TruncatedSeries.geometric("eps", 3, Fraction(2))
    assert coeffs(s * g) == [1, 4, 8, 16]
    assert coeffs(s.div_linear(2)) == coeffs(s * g)
    assert coeffs((s * s.inverse())) == [1, 0, 0, 0]
    assert coeffs(TruncatedSeries.one("eps", 3).mul_linear(2)) == coeffs(s)
    with pytest.raises(ValueError):
        s + TruncatedSeries.one("t", 3)


small = st.integers(-3, 3)


@st.composite
def bounded(draw):
    dd = draw(st.integers(1, 3))
    dn = draw(st.integers(0, dd))
    num = sum((draw(small) * n ** k for k in range(dn)), CTX.zero) + draw(st.integers(1, 3)) * n ** dn
    den = sum((draw(small) * (c + k) * n ** k for k in range(dd)), CTX.zero) + n ** dd
    return num / den


@given(bounded(), bounded())
def test_expansion_is_multiplicative(f, g):
    R = 4
    lhs = laurent_expand_at_infinity(f * g, "n", R)
    rhs = laurent_expand_at_infinity(f, "n", R) * laurent_expand_at_infinity(g, "n", R)
    assert coeffs(lhs) == coeffs(rhs)


@given(bounded())
def test_expansion_matches_sympy(f):
    R = 3
    nn, cc = sp.symbols("n c")
    expr = sp.sympify(str(f).replace("^", "**"), locals={"n": nn, "c": cc})
    want = laurent_at_infinity(expr, nn, R)
    got = laurent_expand_at_infinity(f, "n", R)
    for a, b in zip(got.coefficients, want):
        assert sp.simplify(sp.sympify(str(a).replace("^", "**"), locals={"c": cc}) - b) == 0


@given(bounded())
def test_truncation_error_is_small_at_large_n(f):
    # with c fixed, |f(N) - sum_{r<=R} a_r N^-r| is O(N^-(R+1))
    R, N = 3, 10 ** 6
    g = f.subs({"c": Fraction(1, 3)})
    try:
        series = laurent_expand_at_infinity(g, "n", R + 1)
    except Exception:
        return
    value = g.evaluate(n=N)
    approx = sum(Fraction(a.evaluate()) * Fraction(1, N ** r) for r, a in enumerate(series.coefficients[:R + 1]))
    bound = (abs(Fraction(series[R + 1].evaluate())) + 1) * Fraction(2, N ** (R + 1))
    assert abs(value - approx) <= bound
