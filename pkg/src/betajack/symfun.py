"""Symmetric functions in the power-sum basis and Jack polynomials.

A :class:`SymmetricFunction` is a finite sum ``sum c_lam p_lam`` keyed by
partitions.  Jack polynomials are computed once with a symbolic parameter
``alpha`` (context :data:`ALPHA`) by solving the orthogonality conditions
against the monomials below ``lam`` in dominance order, then specialized by
substitution.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import NotEigenvector, SingularAlpha, ZeroSamplePoint, DivisionByZero
from .partitions import (Partition, dominance_leq, hat_partition, hook_products,
                         partitions_of, z_of)
from .scalars import EMPTY, ParamContext, Scalar, is_number, render

ALPHA = ParamContext(("alpha",))


class SymmetricFunction:
    """Immutable sparse element of the ring of symmetric functions, p-basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if not _is_zero(c):
                clean[lam] = c
        self._terms = clean

    @classmethod
    def p(cls, *parts, coeff=1):
        return cls({Partition(sorted(parts, reverse=True)): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, lam):
        return self._terms.get(Partition(lam), 0)

    def __iter__(self):
        return iter(_ordered(self._terms))

    def items(self):
        return [(lam, self._terms[lam]) for lam in _ordered(self._terms)]

    def degrees(self):
        return sorted({lam.size for lam in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return (self - other)._terms == {}

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymmetricFunction(out)

    def __neg__(self):
        return SymmetricFunction({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymmetricFunction):
            out = {}
            for lam, a in self._terms.items():
                for mu, b in other._terms.items():
                    key = Partition(sorted(lam + mu, reverse=True))
                    out[key] = out[key] + a * b if key in out else a * b
            return SymmetricFunction(out)
        return SymmetricFunction({lam: c * other for lam, c in self._terms.items()})

    __rmul__ = __mul__

    def map_coefficients(self, fn):
        return SymmetricFunction({lam: fn(c) for lam, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{_paren(render(c))}·p[{lam}]" for lam, c in self.items())

    def __repr__(self):
        return f"SymmetricFunction({self})"


def _paren(text):
    return text if text.startswith("(") or "/" not in text else f"({text})"


def _is_zero(c):
    return c.is_zero() if isinstance(c, Scalar) else c == 0


def _ordered(keys):
    """Enumeration order: by size, then reverse lexicographic."""
    return sorted(keys, key=lambda lam: (lam.size, tuple(-p for p in lam)))


# -- monomial <-> power sum ---------------------------------------------------

def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for k in range(len(sub)):
            yield sub[:k] + [[first] + sub[k]] + sub[k + 1:]
        yield [[first]] + sub


@lru_cache(maxsize=None)
def monomial_to_powersum(mu: Partition) -> SymmetricFunction:
    """m_mu in the p-basis.

    Moebius inversion on the set-partition lattice: the augmented monomial
    prod_c m_c(mu)! * m_mu equals sum over set partitions pi of the parts of
    prod_B (-1)^{|B|-1} (|B|-1)! p_{sum of parts in B}.
    """
    mu = Partition(mu)
    out = {}
    for blocks in _set_partitions(list(range(len(mu)))):
        weight = 1
        for block in blocks:
            weight *= (-1) ** (len(block) - 1) * factorial(len(block) - 1)
        key = Partition(sorted((sum(mu[i] for i in block) for block in blocks), reverse=True))
        out[key] = out.get(key, 0) + weight
    aut = 1
    for mult in mu.multiplicities().values():
        aut *= factorial(mult)
    return SymmetricFunction({lam: Fraction(c, aut) for lam, c in out.items()})


@lru_cache(maxsize=None)
def _powersum_to_monomial_table(n: int):
    """Invert the (triangular) m -> p transition for degree n."""
    parts = partitions_of(n)
    index = {lam: k for k, lam in enumerate(parts)}
    size = len(parts)
    # rows: m_mu = sum_nu A[mu][nu] p_nu, with A[mu][nu] != 0 only for nu >= mu
    A = [[Fraction(0)] * size for _ in range(size)]
    for mu in parts:
        for nu, c in monomial_to_powersum(mu).items():
            A[index[mu]][index[nu]] = c
    # B = A^{-1}; coarser nu come first in reverse-lex order, so A is lower triangular
    B = [[Fraction(0)] * size for _ in range(size)]
    for col in range(size):
        for row in range(size):
            acc = Fraction(int(row == col))
            for k in range(row):
                if A[row][k]:
                    acc -= A[row][k] * B[k][col]
            B[row][col] = acc / A[row][row]
    return parts, B


def powersum_to_monomial(lam: Partition) -> dict:
    """p_lam in the m-basis, as {mu: coefficient}."""
    lam = Partition(lam)
    parts, B = _powersum_to_monomial_table(lam.size)
    col = parts.index(lam)
    # m_mu = sum A p  =>  p_lam = sum_mu (A^{-1})[lam][mu] m_mu
    return {mu: B[col][k] for k, mu in enumerate(parts) if B[col][k]}


def to_monomial_basis(f: SymmetricFunction) -> dict:
    out = {}
    for lam, c in f.items():
        for mu, w in powersum_to_monomial(lam).items():
            out[mu] = out[mu] + c * w if mu in out else c * w
    return {mu: c for mu, c in out.items() if not _is_zero(c)}


# -- deformed Hall product ----------------------------------------------------

def hall_inner(f: SymmetricFunction, g: SymmetricFunction, alpha):
    """<p_lam, p_mu>_alpha = delta * z_lam * alpha^l(lam), extended bilinearly."""
    acc = 0
    for lam, a in f.items():
        b = g.coefficient(lam)
        if _is_zero(b):
            continue
        acc = acc + a * b * z_of(lam) * alpha ** len(lam)
    return acc


# -- Jack polynomials ---------------------------------------------------------

@dataclass(frozen=True)
class _JackEntry:
    poly: SymmetricFunction
    gram_det: Scalar


_jack_cache: dict = {}
_jack_lock = threading.Lock()


def _solve(matrix, rhs, one):
    """Gaussian elimination over a field; returns (solution, determinant)."""
    n = len(rhs)
    A = [list(row) + [b] for row, b in zip(matrix, rhs)]
    det = one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not _is_zero(A[r][col])), None)
        if pivot is None:
            return None, one * 0
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = -det
        det = det * A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            if _is_zero(A[r][col]):
                continue
            factor = A[r][col] * inv
            A[r] = [A[r][k] - factor * A[col][k] if k >= col else A[r][k] for k in range(n + 1)]
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = A[r][n]
        for k in range(r + 1, n):
            if not _is_zero(A[r][k]):
                acc = acc - A[r][k] * x[k]
        x[r] = acc / A[r][r]
    return x, det


def _jack_system(lam, alpha, one):
    below = [mu for mu in partitions_of(lam.size) if mu != lam and dominance_leq(mu, lam)]
    m_lam = monomial_to_powersum(lam)
    m_below = [monomial_to_powersum(mu) for mu in below]
    gram = [[one * hall_inner(m_mu, m_nu, alpha) for m_mu in m_below] for m_nu in m_below]
    rhs = [-one * hall_inner(m_lam, m_nu, alpha) for m_nu in m_below]
    return below, m_lam, m_below, gram, rhs


def _jack_symbolic(lam: Partition) -> _JackEntry:
    entry = _jack_cache.get(lam)
    if entry is not None:
        return entry
    alpha = ALPHA.gen("alpha")
    one = ALPHA.one
    below, m_lam, m_below, gram, rhs = _jack_system(lam, alpha, one)
    coeffs, det = _solve(gram, rhs, one)
    poly = m_lam.map_coefficients(ALPHA.const)
    for c, m_mu in zip(coeffs, m_below):
        poly = poly + m_mu * c
    entry = _JackEntry(poly, det)
    with _jack_lock:
        _jack_cache.setdefault(lam, entry)
    return _jack_cache[lam]


def _jack_direct(lam: Partition, alpha: Fraction) -> SymmetricFunction:
    below, m_lam, m_below, gram, rhs = _jack_system(lam, alpha, Fraction(1))
    coeffs, det = _solve(gram, rhs, Fraction(1))
    if coeffs is None or det == 0:
        raise SingularAlpha(f"Jack system for {lam} is singular at alpha={alpha}")
    poly = m_lam
    for c, m_mu in zip(coeffs, m_below):
        poly = poly + m_mu * c
    return poly


def jack_in_powersum(lam, alpha=None, method="substitute") -> SymmetricFunction:
    """Jack polynomial P_lam^(alpha) in the p-basis.

    ``alpha`` may be None (symbolic, context ALPHA), a number, or a Scalar of
    any context (the symbolic result is specialized by substitution).
    ``method="direct"`` solves the linear system afresh for numeric alpha.
    """
    lam = Partition(lam)
    entry = _jack_symbolic(lam)
    if alpha is None or (isinstance(alpha, str) and alpha == "sym"):
        return entry.poly
    numeric = None
    if is_number(alpha):
        numeric = Fraction(alpha)
    elif isinstance(alpha, Scalar) and alpha.is_constant():
        numeric = alpha.to_fraction()
    if numeric is not None:
        if entry.gram_det.evaluate(alpha=numeric) == 0:
            raise SingularAlpha(f"Jack system for {lam} is singular at alpha={numeric}")
        if method == "direct":
            poly = _jack_direct(lam, numeric)
        else:
            try:
                poly = entry.poly.map_coefficients(lambda c: c.evaluate(alpha=numeric))
            except DivisionByZero:
                raise SingularAlpha(f"P_{lam} has a pole at alpha={numeric}") from None
        if isinstance(alpha, Scalar):
            return poly.map_coefficients(alpha.ctx.const)
        return poly
    if not isinstance(alpha, Scalar):
        raise TypeError(f"unsupported alpha {alpha!r}")
    target = alpha.ctx
    return entry.poly.map_coefficients(lambda c: c.subs({"alpha": alpha}, target))


# -- finite specializations ---------------------------------------------------

@dataclass(frozen=True)
class FiniteSpecialization:
    values: tuple

    def __init__(self, values):
        object.__setattr__(self, "values", tuple(values))

    @property
    def n(self):
        return len(self.values)


def _values_ctx(values):
    for v in values:
        if isinstance(v, Scalar):
            return v.ctx
    return None


def specialize(f: SymmetricFunction, sample) -> object:
    """Evaluate f at p_k = x_1^k + ... + x_n^k."""
    values = sample.values if isinstance(sample, FiniteSpecialization) else tuple(sample)
    ctx = _values_ctx(values)
    if ctx is not None:
        values = tuple(ctx.coerce(v) for v in values)
    cache = {}

    def power_sum(k):
        if k not in cache:
            cache[k] = sum((v ** k for v in values), 0)
        return cache[k]

    acc = 0
    for lam, c in f.items():
        if isinstance(c, Scalar) and ctx is not None and c.ctx != ctx:
            c = ctx.coerce(c)
        term = c
        for part in lam:
            term = term * power_sum(part)
        acc = acc + term
    return acc


def _with_x(alpha, n):
    base = alpha.ctx if isinstance(alpha, Scalar) else EMPTY
    names = tuple(f"x{i}" for i in range(1, n + 1))
    ctx = base.extend(*names)
    return ctx, [ctx.gen(name) for name in names]


def _alpha_arg(alpha):
    return ALPHA.gen("alpha") if alpha is None or alpha == "sym" else alpha


def cs_eigenvalue(lam: Partition, alpha, n: int):
    """sum_i (alpha*lam_i^2/2 + (n+1-2i)*lam_i/2)."""
    acc = 0
    for i in range(1, n + 1):
        li = lam.part(i)
        acc = acc + alpha * Fraction(li * li, 2) + Fraction((n + 1 - 2 * i) * li, 2)
    return acc


def cs_apply(lam, alpha=None, n=None):
    """Apply the Calogero-Sutherland operator to P_lam in n variables.

    Returns (image, eigenvalue): image is a Scalar in the context of alpha
    extended by x1..xn, the eigenvalue is in alpha's context; raises NotEigenvector when image differs from
    eigenvalue * P_lam.
    """
    lam = Partition(lam)
    n = len(lam) if n is None else n
    if len(lam) > n:
        raise ValueError(f"l({lam}) > n = {n}")
    alpha = _alpha_arg(alpha)
    ctx, xs = _with_x(alpha, n)
    a = ctx.coerce(alpha)
    ptilde = specialize(jack_in_powersum(lam, alpha), xs)
    ptilde = ctx.coerce(ptilde)
    num = ptilde.num
    offset = len(ctx.names) - n
    dx = [xs[i].num * num.derivative(offset + i) for i in range(n)]
    second = sum((xs[i].num * dx[i].derivative(offset + i) for i in range(n)), num * 0)
    cross = num * 0
    for i in range(n):
        for j in range(i + 1, n):
            xi, xj = xs[i].num, xs[j].num
            q, r = divmod((xi + xj) * (dx[i] - dx[j]), xi - xj)
            if not r.is_zero():
                raise NotEigenvector(f"non-polynomial image for {lam} (remainder {r})")
            cross += q
    den = Scalar(ctx, ptilde.den)
    image = (a * Scalar(ctx, second) + Scalar(ctx, cross)) / (2 * den)
    eig = ctx.coerce(cs_eigenvalue(lam, a, n))
    if image != eig * ptilde:
        raise NotEigenvector(f"H P_{lam} != E P_{lam} for n={n}")
    # the eigenvalue lives in alpha's own context; the image needs the x's
    return image, cs_eigenvalue(lam, alpha, n)


def verify_inverse_identity(lam, n: int, alpha, sample) -> bool:
    """P_lam(1/x) == (x_1...x_n)^(-lam_1) * P_hat(lam)(x), evaluated exactly."""
    lam = Partition(lam)
    values = sample.values if isinstance(sample, FiniteSpecialization) else tuple(sample)
    if len(values) != n:
        raise ValueError(f"sample has {len(values)} values, expected n={n}")
    if any(_is_zero(v) for v in values):
        raise ZeroSamplePoint("sample point has a zero coordinate")
    alpha = _alpha_arg(alpha)
    hat = hat_partition(lam, n)
    lhs = specialize(jack_in_powersum(lam, alpha), [1 / _as_exact(v) for v in values])
    prod = 1
    for v in values:
        prod = prod * v
    first = lam[0] if lam else 0
    rhs = specialize(jack_in_powersum(hat, alpha), values) * _as_exact(prod) ** (-first)
    return (lhs - rhs) == 0


def _as_exact(v):
    return v if isinstance(v, Scalar) else Fraction(v)


def cauchy_identity_check(n: int, max_degree: int, alpha=None) -> bool:
    """exp((1/alpha) sum t_k p_k(x)/k) == sum (h/h') P_lam(t) P_lam(x), degree by degree."""
    alpha = _alpha_arg(alpha)
    ctx, xs = _with_x(alpha, n)
    a = ctx.coerce(alpha)
    for d in range(max_degree + 1):
        lams = [lam for lam in partitions_of(d) if len(lam) <= n]
        ptildes = {lam: ctx.coerce(specialize(jack_in_powersum(lam, alpha), xs)) for lam in lams}
        weights = {}
        for lam in lams:
            h, hp = hook_products(lam, a)
            weights[lam] = h / hp
        jacks = {lam: jack_in_powersum(lam, alpha) for lam in lams}
        for mu in partitions_of(d):
            lhs = ctx.coerce(specialize(SymmetricFunction.p(*mu), xs)) / (z_of(mu) * a ** len(mu))
            rhs = ctx.zero
            for lam in lams:
                c = jacks[lam].coefficient(mu)
                if not _is_zero(c):
                    rhs = rhs + weights[lam] * ctx.coerce(c) * ptildes[lam]
            if lhs != rhs:
                return False
    return True
