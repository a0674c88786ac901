"""Truncated power series with exact coefficients, and expansions at infinity."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, UnboundedAtInfinity
from .scalars import Scalar


def _is_zero(x):
    return x.is_zero() if isinstance(x, Scalar) else x == 0


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{k<=order} coefficients[k] * variable^k, everything above dropped.

    Coefficients are ints, Fractions or Scalars of one context.  For series
    produced by :func:`laurent_expand_at_infinity` the variable is ``"1/n"``.
    """

    variable: str
    order: int
    coefficients: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(self.coefficients)[: self.order + 1]
        coeffs += (0,) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def one(cls, variable, order):
        return cls(variable, order, (1,))

    @classmethod
    def linear(cls, variable, order, a):
        """1 + a*variable."""
        return cls(variable, order, (1, a))

    @classmethod
    def geometric(cls, variable, order, a):
        """1/(1 - a*variable) = sum_k a^k variable^k."""
        coeffs, power = [], 1
        for _ in range(order + 1):
            coeffs.append(power)
            power = power * a
        return cls(variable, order, tuple(coeffs))

    def __getitem__(self, k):
        return self.coefficients[k] if 0 <= k <= self.order else 0

    def __len__(self):
        return self.order + 1

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.variable != self.variable:
            raise ValueError(f"series in {self.variable} and {other.variable} do not mix")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return TruncatedSeries(self.variable, order,
                               tuple(self[k] + other[k] for k in range(order + 1)))

    def __neg__(self):
        return TruncatedSeries(self.variable, self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.variable, self.order,
                                   tuple(c * other for c in self.coefficients))
        other = self._check(other)
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(order + 1):
            acc = 0
            for i in range(k + 1):
                if _is_zero(a[i]) or _is_zero(b[k - i]):
                    continue
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(self.variable, order, tuple(out))

    def __rmul__(self, other):
        return self * other

    def mul_linear(self, a):
        """Multiply by (1 + a*variable) in O(order)."""
        c = self.coefficients
        out = [c[0]] + [c[k] + a * c[k - 1] for k in range(1, self.order + 1)]
        return TruncatedSeries(self.variable, self.order, tuple(out))

    def div_linear(self, a):
        """Multiply by 1/(1 - a*variable) in O(order): running sum recursion."""
        c = self.coefficients
        out = [c[0]]
        for k in range(1, self.order + 1):
            out.append(c[k] + a * out[-1])
        return TruncatedSeries(self.variable, self.order, tuple(out))

    def inverse(self):
        c = self.coefficients
        if _is_zero(c[0]):
            raise DivisionByZero("series with zero constant term is not invertible")
        inv0 = 1 / c[0] if isinstance(c[0], Scalar) else _frac_inv(c[0])
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if not _is_zero(c[i]):
                    acc = acc + c[i] * out[k - i]
            out.append(-acc * inv0)
        return TruncatedSeries(self.variable, self.order, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return TruncatedSeries(self.variable, self.order, tuple(c / other for c in self.coefficients))

    def truncate(self, order):
        return TruncatedSeries(self.variable, min(order, self.order), self.coefficients)

    def evaluate(self, value):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc


def _frac_inv(x):
    from fractions import Fraction
    return 1 / Fraction(x)


def laurent_expand_at_infinity(f: Scalar, var: str, order: int) -> TruncatedSeries:
    """Coefficients a_0..a_R with f = sum_r a_r var^(-r) + O(var^(-R-1)).

    Coefficients are scalars of ``f``'s context that do not depend on ``var``.
    Raises UnboundedAtInfinity when f has a pole at infinity.
    """
    dn, dd = f.degree(var)
    if f.is_zero():
        return TruncatedSeries(f"1/{var}", order, (f.ctx.zero,))
    if dn > dd:
        raise UnboundedAtInfinity(var, dn - dd)
    gap = dd - dn
    num = f.coefficients_in(var, "num")
    den = f.coefficients_in(var, "den")
    zero = f.ctx.zero
    # in x = 1/var:  f = x^gap * (sum_i num[dn-i] x^i) / (sum_i den[dd-i] x^i)
    ns = [num.get(dn - i, zero) for i in range(order + 1)]
    ds = [den.get(dd - i, zero) for i in range(order + 1)]
    d0_inv = ds[0].inverse()
    quot = []
    for r in range(order + 1 - gap):
        acc = ns[r]
        for k in range(1, r + 1):
            if not ds[k].is_zero():
                acc = acc - ds[k] * quot[r - k]
        quot.append(acc * d0_inv)
    coeffs = [zero] * gap + quot
    return TruncatedSeries(f"1/{var}", order, tuple(coeffs))


def limit_scaled_at_infinity(f: Scalar, var: str, power: int) -> Scalar:
    """lim_{var -> oo} var^(-power) * f, via leading coefficients in var."""
    if f.is_zero():
        return f
    dn, dd = f.degree(var)
    gap = dn - dd
    if gap > power:
        raise UnboundedAtInfinity(var, gap - power)
    if gap < power:
        return f.ctx.zero
    return f.coefficients_in(var, "num")[dn] / f.coefficients_in(var, "den")[dd]
