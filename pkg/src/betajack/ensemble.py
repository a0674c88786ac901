"""Jacobi and Laguerre beta-ensemble correlators as exact rational functions.

Correlators come from the Jack expansion of their generating function:

    C_{+-lam} (beta/2)^l(lam) / z_lam = sum_{|mu|=|lam|} f_mu^{+-} / h'_{2/beta}(mu) [p_lam] P_mu^(2/beta)

where f^{+-} are finite content products.  Everything stays in exact rational
arithmetic; Gamma-function normalizations never appear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationError, ContextMismatch, MismatchAt, PoleAtParameters
from .hurwitz import HurwitzTable, hurwitz_table, make_weight
from .partitions import Partition, content, hook_products, partitions_of, z_of
from .scalars import ParamContext, Scalar, is_number, render
from .series import laurent_expand_at_infinity, limit_scaled_at_infinity
from .symfun import jack_in_powersum

SIGNS = ("+", "-")


class DivergentCorrelator(ComputationError):
    """Negative correlator requested at numeric parameters where the integral diverges."""


def _zero(x):
    return x.is_zero() if isinstance(x, Scalar) else x == 0


def _exact(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not parameters")
    return Fraction(x)


def _check_sign(sign):
    if sign not in SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class JacobiParams:
    """n, beta, c, d of the Jacobi weight; each a number or a Scalar of one context."""

    n: object
    beta: object
    c: object
    d: object

    def __post_init__(self):
        ctxs = {v.ctx for v in (self.n, self.beta, self.c, self.d) if isinstance(v, Scalar)}
        if len(ctxs) > 1:
            raise ContextMismatch("JacobiParams scalars must share one context")
        for name in ("n", "beta", "c", "d"):
            object.__setattr__(self, name, _exact(getattr(self, name)))
        if _zero(self.beta):
            raise ValueError("beta must be nonzero")

    @property
    def ctx(self):
        for v in (self.n, self.beta, self.c, self.d):
            if isinstance(v, Scalar):
                return v.ctx
        return None

    @property
    def alpha(self):
        """2/beta, the Jack parameter of the ensemble."""
        return 2 / self.beta

    def is_numeric(self):
        return self.ctx is None


@dataclass(frozen=True)
class CorrelatorRequest:
    lam: Partition
    sign: str
    params: JacobiParams

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        _check_sign(self.sign)


def f_coefficient(lam, sign, p: JacobiParams):
    """f_lam^{+-} as a product over the cells of lam."""
    _check_sign(sign)
    a = p.alpha
    n, c, d = p.n, p.c, p.d
    acc = Fraction(1)
    for cell in Partition(lam).cells():
        cc = content(cell, a)
        if sign == "+":
            num = (n + cc) * (c - 1 + n + cc)
            den = c + d - 2 + 2 * n + cc
        else:
            num = (n + cc) * (c + d + n - 1 - a - cc)
            den = c - a - cc
        if _zero(den):
            raise PoleAtParameters(cell)
        acc = acc * num / den
    return acc


def pochhammer(z, m: int):
    """(z)_m = z (z+1) ... (z+m-1)."""
    acc = Fraction(1)
    for j in range(m):
        acc = acc * (z + j)
    return acc


def _pair_product(lam: Partition, n: int, half_beta):
    """prod_{i<j<=n} (beta/2 (j-i+1))_{lam_i-lam_j} / (beta/2 (j-i))_{lam_i-lam_j}."""
    acc = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = lam.part(i) - lam.part(j)
            if m:
                acc = acc * pochhammer(half_beta * (j - i + 1), m) / pochhammer(half_beta * (j - i), m)
    return acc


def f_pochhammer_form(lam, sign, p: JacobiParams, n: int):
    """f_lam^{+-} from the Pochhammer-ratio form, which needs an explicit integer n."""
    _check_sign(sign)
    lam = Partition(lam)
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if len(lam) > n:
        raise ValueError(f"l({lam}) > n = {n}")
    hb = p.beta / 2
    h, _ = hook_products(lam, p.alpha)
    acc = h * _pair_product(lam, n, hb)
    c, d = p.c, p.d
    for i in range(1, n + 1):
        li = lam.part(i)
        if sign == "+":
            top, bottom = pochhammer(hb * (c + n - i), li), pochhammer(hb * (c + d + 2 * n - i - 1), li)
        else:
            top, bottom = pochhammer(hb * (c + d + n + i - 2) - li, li), pochhammer(hb * (c + i - 1) - li, li)
        if _zero(bottom):
            raise PoleAtParameters((i, None), f"row {i} Pochhammer denominator vanishes")
        acc = acc * top / bottom
    return acc


def appendix_sides(lam, n: int, beta):
    """Both sides of prod_{i<j} Pochhammer ratio = prod (n + c_{2/beta}) / h_{2/beta}."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"l({lam}) > n = {n}")
    beta = _exact(beta)
    a = 2 / beta
    lhs = _pair_product(lam, n, beta / 2)
    rhs = Fraction(1)
    for cell in lam.cells():
        rhs = rhs * (n + content(cell, a))
    h, _ = hook_products(lam, a)
    return lhs, rhs / h


def appendix_identity_check(lam, n: int, beta) -> bool:
    lhs, rhs = appendix_sides(lam, n, beta)
    return lhs == rhs


def _check_convergence(lam: Partition, p: JacobiParams):
    # every term of C_{-lam} contains x_i^{-|lam|}; integrable iff c > (2/beta)|lam|
    if p.is_numeric() and not p.c > p.alpha * lam.size:
        raise DivergentCorrelator(
            f"C_-{lam} diverges unless c > (2/beta)|lam| = {p.alpha * lam.size}")


def correlator(req: CorrelatorRequest, enforce_convergence: bool = True):
    """Exact Jacobi correlator C^J_{+-lam}(n, beta, c, d)."""
    lam, p = req.lam, req.params
    if not lam:
        return p.ctx.one if p.ctx is not None else Fraction(1)
    if req.sign == "-" and enforce_convergence:
        _check_convergence(lam, p)
    a = p.alpha
    acc = 0
    for mu in partitions_of(lam.size):
        coeff = jack_in_powersum(mu, a).coefficient(lam)
        if _zero(coeff):
            continue
        f = f_coefficient(mu, req.sign, p)
        if _zero(f):
            continue
        _, hp = hook_products(mu, a)
        acc = acc + f * coeff / hp
    return acc * z_of(lam) / (p.beta / 2) ** len(lam)


def laguerre_correlator(lam, sign, n, beta, c, enforce_convergence: bool = True):
    """C^L_{+-lam}(n, beta, c) = lim_{d -> oo} (beta d / 2)^{+-|lam|} C^J_{+-lam}(n, beta, c, d)."""
    _check_sign(sign)
    lam = Partition(lam)
    values = [_exact(v) for v in (n, beta, c)]
    base = next((v.ctx for v in values if isinstance(v, Scalar)), ParamContext(()))
    if "d" in base:
        raise ValueError("parameter name 'd' is reserved for the Jacobi limit")
    ctx = base.extend("d")
    n_, beta_, c_ = (ctx.coerce(v) for v in values)
    if not lam:
        return base.one if base.names else Fraction(1)
    if sign == "-" and enforce_convergence and all(is_number(v) for v in values):
        _check_convergence(lam, JacobiParams(values[0], values[1], values[2], 1))
    cj = correlator(CorrelatorRequest(lam, sign, JacobiParams(n_, beta_, c_, ctx.gen("d"))),
                    enforce_convergence=False)
    s = 1 if sign == "+" else -1
    limit = limit_scaled_at_infinity(cj, "d", -s * lam.size) * (beta_ / 2) ** (s * lam.size)
    out = base.coerce(limit)
    return out.to_fraction() if not base.names else out


# -- theorem verification ------------------------------------------------------

THEOREMS = {
    ("jacobi", "+"): "jacobi+",
    ("jacobi", "-"): "jacobi-",
    ("laguerre", "+"): "laguerre+",
    ("laguerre", "-"): "laguerre-",
}


@dataclass
class ExpansionReport:
    theorem: str
    lam: Partition
    beta: object
    orders: list = field(default_factory=list)

    @property
    def passed(self):
        return all(eq for _, _, _, eq in self.orders)

    def first_mismatch(self):
        for r, lhs, rhs, eq in self.orders:
            if not eq:
                return r, lhs, rhs
        return None

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "lambda": str(self.lam),
            "beta": render(self.beta),
            "orders": [{"r": r, "lhs": render(lhs), "rhs": render(rhs), "equal": eq}
                       for r, lhs, rhs, eq in self.orders],
            "pass": self.passed,
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def expansion_context(beta=None, gamma=None, delta=None):
    """Context holding n plus whichever of beta, gamma, delta are symbolic (None)."""
    names = ["n"]
    for name, value in (("beta", beta), ("gamma", gamma), ("delta", delta)):
        if value is None:
            names.append(name)
    return ParamContext(tuple(names))


def _param(ctx, name, value):
    return ctx.gen(name) if value is None else ctx.coerce(value)


def expansion_weight(ensemble, sign, ctx, gamma=None, delta=None):
    g = _param(ctx, "gamma", gamma)
    d = _param(ctx, "delta", delta) if ensemble == "jacobi" else None
    return make_weight(THEOREMS[(ensemble, sign)], g, d)


def expansion_lhs(lam, ensemble, sign, ctx, beta=None, gamma=None, delta=None):
    """The correlator side of the expansion theorem as a rational function of n."""
    lam = Partition(lam)
    n = ctx.gen("n")
    be = _param(ctx, "beta", beta)
    g = _param(ctx, "gamma", gamma)
    half = be / 2
    size, length = lam.size, len(lam)
    c = n * (g - 1) + 1 if sign == "+" else n * g + 2 / be
    if ensemble == "jacobi":
        de = _param(ctx, "delta", delta)
        d = n * (de - 1) + 1
        C = correlator(CorrelatorRequest(lam, sign, JacobiParams(n, be, c, d)),
                       enforce_convergence=False)
        scale = (g + de) / (g * n) if sign == "+" else g / ((g + de) * n)
        lhs = half ** length * scale ** size * C
    elif ensemble == "laguerre":
        C = laguerre_correlator(lam, sign, n, be, c, enforce_convergence=False)
        if sign == "+":
            lhs = half ** (length - size) * (g * n * n) ** (-size) * C
        else:
            lhs = half ** (length + size) * g ** size * C
    else:
        raise ValueError(f"unknown ensemble {ensemble!r}")
    return ctx.coerce(lhs / z_of(lam))


def verify_expansion(lam, ensemble, sign, beta=None, gamma=None, delta=None, R: int = 6,
                     table: HurwitzTable | None = None, strict: bool = False) -> ExpansionReport:
    """Compare the Laurent expansion in 1/n of the correlator side with H^b(lam; r).

    ``beta``, ``gamma``, ``delta`` are numbers, or None for a symbolic parameter.
    A precomputed ``table`` (built on :func:`expansion_context`) may be passed
    to share the Hurwitz side across several partitions.
    """
    if R < 0:
        raise ValueError("R must be nonnegative")
    _check_sign(sign)
    lam = Partition(lam)
    ctx = table.G.u[0].ctx if table is not None and isinstance(table.G.u[0], Scalar) \
        else expansion_context(beta, gamma, delta)
    be = _param(ctx, "beta", beta)
    lhs = expansion_lhs(lam, ensemble, sign, ctx, beta, gamma, delta)
    series = laurent_expand_at_infinity(lhs, "n", R)
    if table is None or table.N < lam.size or table.R < R:
        G = expansion_weight(ensemble, sign, ctx, gamma, delta)
        table = hurwitz_table(G, 2 / be - 1, lam.size, R)
    report = ExpansionReport(THEOREMS[(ensemble, sign)], lam, be if beta is None else beta)
    for r in range(R + 1):
        left, right = series[r], ctx.coerce(table[(lam, r)])
        equal = left == right
        report.orders.append((r, left, right, equal))
        if strict and not equal:
            raise MismatchAt(r, left, right)
    return report
