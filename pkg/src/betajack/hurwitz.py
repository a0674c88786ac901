"""b-Hurwitz numbers from the Jack expansion of the content-weighted tau function."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SingularAlpha, ZeroDenominatorParam
from .partitions import Partition, content, hook_products, partitions_of
from .scalars import ParamContext, Scalar, parse_scalar, render
from .series import TruncatedSeries
from .symfun import jack_in_powersum

EPS = "eps"


def _zero(x):
    return x.is_zero() if isinstance(x, Scalar) else x == 0


@dataclass(frozen=True)
class WeightGF:
    """G(z) = prod_{i<=L} (1 + u_i z) / prod_{i<=M} (1 - u_{L+i} z)."""

    L: int
    M: int
    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        if self.L < 0 or self.M < 0:
            raise ValueError("L and M must be nonnegative")
        if len(self.u) != self.L + self.M:
            raise ValueError(f"expected {self.L + self.M} parameters, got {len(self.u)}")

    def __call__(self, z):
        num = den = 1
        for a in self.u[: self.L]:
            num = num * (1 + a * z)
        for a in self.u[self.L:]:
            den = den * (1 - a * z)
        return num / den if not (isinstance(den, int) and den == 1) else num

    def to_dict(self):
        return {"L": self.L, "M": self.M, "u": [render(a) for a in self.u]}

    def __str__(self):
        num = "".join(f"(1+{render(a)}*z)" for a in self.u[: self.L]) or "1"
        den = "".join(f"(1-{render(a)}*z)" for a in self.u[self.L:])
        return f"{num}/{den}" if den else num


def make_weight(kind: str, gamma, delta=None) -> WeightGF:
    """Weights of the Jacobi and Laguerre expansions.

    jacobi+   (1+z)(1+z/g)/(1+z/(g+d))
    jacobi-   (1+z)(1-z/(g+d))/(1-z/g)
    laguerre+ (1+z)(1+z/g)
    laguerre- (1+z)/(1-z/g)
    """
    if _zero(gamma):
        raise ZeroDenominatorParam("gamma must be nonzero")
    if kind in ("jacobi+", "jacobi-"):
        if delta is None:
            raise ValueError(f"{kind} needs delta")
        total = gamma + delta
        if _zero(total):
            raise ZeroDenominatorParam("gamma + delta must be nonzero")
        if kind == "jacobi+":
            return WeightGF(2, 1, (1, _inv(gamma), -_inv(total)))
        return WeightGF(2, 1, (1, -_inv(total), _inv(gamma)))
    if kind == "laguerre+":
        return WeightGF(2, 0, (1, _inv(gamma)))
    if kind == "laguerre-":
        return WeightGF(1, 1, (1, _inv(gamma)))
    raise ValueError(f"unknown weight kind {kind!r}")


def _inv(x):
    return 1 / x if isinstance(x, Scalar) else 1 / Fraction(x)


def content_weight_series(G: WeightGF, mu, alpha, order: int) -> TruncatedSeries:
    """prod over cells of G(eps * c_alpha(cell)), truncated at eps^order."""
    series = TruncatedSeries.one(EPS, order)
    for cell in Partition(mu).cells():
        c = content(cell, alpha)
        if _zero(c):
            continue
        for a in G.u[: G.L]:
            series = series.mul_linear(a * c)
        for a in G.u[G.L:]:
            series = series.div_linear(a * c)
    return series


@dataclass
class HurwitzTable:
    """H(lam; r) for |lam| <= N and 0 <= r <= R."""

    G: WeightGF
    b: object
    N: int
    R: int
    entries: dict = field(default_factory=dict)
    source: str = "jack-expansion"

    def __getitem__(self, key):
        lam, r = key
        return self.entries[(Partition(lam), r)]

    def keys(self):
        return [(lam, r) for n in range(self.N + 1) for lam in partitions_of(n)
                for r in range(self.R + 1)]

    def diff(self, other: HurwitzTable):
        """Keys where the two tables disagree (shapes must match)."""
        if (self.N, self.R) != (other.N, other.R):
            raise ValueError("tables have different bounds")
        return [key for key in self.keys() if self.entries[key] != other.entries[key]]

    def to_dict(self):
        b = "symbolic" if isinstance(self.b, Scalar) and not self.b.is_constant() and \
            self.b.variables() == ("b",) and self.b == self.b.ctx.gen("b") else render(self.b)
        return {
            "G": self.G.to_dict(),
            "b": b,
            "N": self.N,
            "R": self.R,
            "source": self.source,
            "entries": [{"lambda": str(lam), "r": r, "value": render(self.entries[(lam, r)])}
                        for lam, r in self.keys()],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data, ctx: ParamContext) -> HurwitzTable:
        g = data["G"]
        u = tuple(_parse_value(s, ctx) for s in g["u"])
        b = ctx.gen("b") if data["b"] == "symbolic" else _parse_value(data["b"], ctx)
        entries = {(Partition.parse(e["lambda"]), int(e["r"])): _parse_value(e["value"], ctx)
                   for e in data["entries"]}
        return cls(WeightGF(g["L"], g["M"], u), b, data["N"], data["R"], entries,
                   data.get("source", "jack-expansion"))


def _parse_value(text, ctx):
    value = parse_scalar(text, ctx)
    return value.to_fraction() if value.is_constant() else value


def _normalize(value):
    if isinstance(value, Scalar) and value.is_constant() and not value.ctx.names:
        return value.to_fraction()
    if isinstance(value, int):
        return Fraction(value)
    return value


def hurwitz_table(G: WeightGF, b, N: int, R: int) -> HurwitzTable:
    """H_G^b(lam; r) = sum_mu [p_lam] P_mu^(b+1) / h'_{b+1}(mu) * [eps^r] prod G(eps c).

    ``b`` is a number or a Scalar (symbolic b is ``ctx.gen("b")``); the u's of
    G must be numbers or Scalars of the same context.
    """
    if N < 0 or R < 0:
        raise ValueError("N and R must be nonnegative")
    alpha = b + 1
    if _zero(alpha):
        raise SingularAlpha("b = -1 makes every h'_{b+1} vanish")
    entries = {}
    for n in range(N + 1):
        mus = partitions_of(n)
        weights = {}
        for mu in mus:
            _, hp = hook_products(mu, alpha)
            weights[mu] = (jack_in_powersum(mu, alpha), content_weight_series(G, mu, alpha, R), hp)
        for lam in mus:
            for r in range(R + 1):
                acc = 0
                for mu in mus:
                    jack, series, hp = weights[mu]
                    coeff = jack.coefficient(lam)
                    if _zero(coeff) or _zero(series[r]):
                        continue
                    acc = acc + coeff * series[r] / hp
                entries[(lam, r)] = _normalize(acc)
    return HurwitzTable(G, b, N, R, entries, "jack-expansion")
