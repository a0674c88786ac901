"""Colored monotone Hurwitz maps through the vertex-attachment recursion.

``T^[n] = G(Lambda) z_1/(1+b) T^[n-1] |_{z_i = p_i}`` computes the generating
polynomial of (L|M)-colored monotone Hurwitz maps with n vertices, with each
edge of color i weighted by a formal symbol g_i.  Two b = 0 oracles work
directly in the symmetric group: brute-force enumeration of colored monotone
factorizations, and expansion of prod_i G(eps J_i) over Jucys-Murphy elements.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import factorial

import flint

from .errors import GuardExceeded, SingularAlpha
from .hurwitz import HurwitzTable, WeightGF
from .partitions import Partition, partitions_of, z_of
from .scalars import Scalar

ENUMERATION_GUARD = 8

# coefficients of PZ polynomials are polynomials in a formal b
_B = flint.fmpq_poly([0, 1])
_ONE_PLUS_B = flint.fmpq_poly([1, 1])


def _add_part(parts, k):
    return Partition(sorted(parts + (k,), reverse=True))


def _remove_part(parts, k):
    out = list(parts)
    out.remove(k)
    return Partition(out)


class PZPolynomial:
    """sum over (g-exponents, p-partition, z-partition) of coefficient(b).

    The whole sum carries an overall factor (1+b)^(-scale).  g-exponent vectors
    have one slot per color and total degree at most ``order``.
    """

    __slots__ = ("terms", "ncolors", "order", "scale")

    def __init__(self, terms=None, ncolors=0, order=0, scale=0):
        self.terms = {key: c for key, c in (terms or {}).items() if c != 0}
        self.ncolors, self.order, self.scale = ncolors, order, scale

    @classmethod
    def one(cls, ncolors=0, order=0):
        return cls.monomial(ncolors=ncolors, order=order)

    @classmethod
    def monomial(cls, p=(), z=(), g=None, coeff=1, ncolors=0, order=0, scale=0):
        g = tuple(g) if g is not None else (0,) * ncolors
        key = (g, Partition(sorted(p, reverse=True)), Partition(sorted(z, reverse=True)))
        return cls({key: flint.fmpq_poly(coeff) if not isinstance(coeff, flint.fmpq_poly) else coeff},
                   ncolors, order, scale)

    def _like(self, terms, scale=None):
        return PZPolynomial(terms, self.ncolors, self.order, self.scale if scale is None else scale)

    def __add__(self, other):
        if self.scale != other.scale:
            raise ValueError("cannot add PZ polynomials with different (1+b) scales")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return self._like(out)

    def __eq__(self, other):
        if not isinstance(other, PZPolynomial):
            return NotImplemented
        return self.scale == other.scale and self.terms == other.terms

    def coefficient(self, p=(), z=(), g=None):
        g = tuple(g) if g is not None else (0,) * self.ncolors
        return self.terms.get((g, Partition(sorted(p, reverse=True)),
                               Partition(sorted(z, reverse=True))), flint.fmpq_poly(0))

    def grading(self):
        """Set of total degrees sum(p) + sum(z) over all monomials."""
        return {p.size + z.size for _, p, z in self.terms}

    def has_z(self):
        return any(z for _, _, z in self.terms)

    def z_to_p(self):
        out = {}
        for (g, p, z), c in self.terms.items():
            key = (g, Partition(sorted(p + z, reverse=True)), Partition())
            out[key] = out[key] + c if key in out else c
        return self._like(out)

    def __repr__(self):
        return f"PZPolynomial({len(self.terms)} terms, scale={self.scale})"


def lambda_apply(f: PZPolynomial) -> PZPolynomial:
    """Lambda = (1+b) sum i z_{i+j} d2/dp_i dz_j + sum z_i p_j d/dz_{i+j}
    + b sum_{i>=2} (i-1) z_i d/dz_i."""
    out = {}

    def put(key, c):
        out[key] = out[key] + c if key in out else c

    for (g, p, z), c in f.terms.items():
        if not z:
            continue
        pm, zm = Counter(p), Counter(z)
        for i, mi in pm.items():
            p_less = _remove_part(p, i)
            for j, kj in zm.items():
                put((g, p_less, _add_part(_remove_part(z, j), i + j)), c * _ONE_PLUS_B * (i * mi * kj))
        for s, ks in zm.items():
            z_less = _remove_part(z, s)
            for i in range(1, s):
                put((g, _add_part(p, s - i), _add_part(z_less, i)), c * ks)
            if s >= 2:
                put((g, p, z), c * _B * ((s - 1) * ks))
    return f._like(out)


def _g_lambda(f: PZPolynomial, color: int) -> PZPolynomial:
    """g_color * Lambda(f), dropping terms of total g-degree above the order."""
    keep = PZPolynomial({k: c for k, c in f.terms.items() if sum(k[0]) < f.order},
                        f.ncolors, f.order, f.scale)
    image = lambda_apply(keep)
    out = {}
    for (g, p, z), c in image.terms.items():
        g2 = g[:color] + (g[color] + 1,) + g[color + 1:]
        out[(g2, p, z)] = c
    return f._like(out)


def apply_weight_operator(f: PZPolynomial, L: int, M: int, order=None) -> PZPolynomial:
    """prod_{i<=L} (1 + g_i Lambda) then prod_{i<=M} (1 - g_{L+i} Lambda)^(-1)."""
    return _apply_factors(f, [("num", i) for i in range(L)] + [("den", L + i) for i in range(M)])


def _apply_factors(f, factors):
    for kind, color in factors:
        if kind == "num":
            f = f + _g_lambda(f, color)
        else:
            acc, cur = f, f
            while True:
                cur = _g_lambda(cur, color)
                if not cur.terms:
                    break
                acc = acc + cur
            f = acc
    return f


def attach_vertex(T: PZPolynomial, G: WeightGF) -> PZPolynomial:
    """T^[n] from T^[n-1]: multiply by z_1/(1+b), apply G(Lambda), set z_i = p_i."""
    if T.has_z():
        raise ValueError("attach_vertex expects a polynomial in p only")
    if T.ncolors != G.L + G.M:
        raise ValueError(f"T has {T.ncolors} colors but G has {G.L + G.M}")
    f = T._like({(g, p, _add_part(z, 1)): c for (g, p, z), c in T.terms.items()}, T.scale + 1)
    f = apply_weight_operator(f, G.L, G.M)
    return f.z_to_p()


def _eval_bpoly(poly, b):
    acc = 0
    for q in reversed(poly.coeffs()):
        acc = acc * b + Fraction(int(q.p), int(q.q))
    return acc


def _monomial_value(exps, u, cache):
    key = exps
    if key not in cache:
        val = 1
        for e, a in zip(exps, u):
            if e:
                val = val * a ** e
        cache[key] = val
    return cache[key]


def _normalize(value):
    if isinstance(value, Scalar) and value.is_constant() and not value.ctx.names:
        return value.to_fraction()
    if isinstance(value, int):
        return Fraction(value)
    return value


def t_table(G: WeightGF, N: int, R: int, b) -> HurwitzTable:
    """Hurwitz table from the Lambda recursion: entry = [p_lam g^e] T^[n] / n!."""
    if N < 0 or R < 0:
        raise ValueError("N and R must be nonnegative")
    one_plus_b = b + 1
    if (one_plus_b.is_zero() if isinstance(one_plus_b, Scalar) else one_plus_b == 0):
        raise SingularAlpha("b = -1: the recursion divides by 1+b")
    K = G.L + G.M
    T = PZPolynomial.one(K, R)
    cache = {}
    entries = {}
    for n in range(N + 1):
        if n:
            T = attach_vertex(T, G)
        sums = {}
        for (g, p, _), c in T.terms.items():
            r = sum(g)
            term = _eval_bpoly(c, b) * _monomial_value(g, G.u, cache)
            sums[(p, r)] = sums[(p, r)] + term if (p, r) in sums else term
        norm = one_plus_b ** T.scale * factorial(n)
        for lam in partitions_of(n):
            for r in range(R + 1):
                value = sums.get((lam, r), 0)
                entries[(lam, r)] = _normalize(value / norm if not _is_int_zero(value) else 0)
    return HurwitzTable(G, b, N, R, entries, "lambda-recursion")


def _is_int_zero(v):
    return isinstance(v, (int, Fraction)) and v == 0


# -- symmetric group oracles (b = 0) -----------------------------------------

def _compose(sigma, tau):
    """(sigma * tau)(k) = sigma(tau(k))."""
    return tuple(sigma[t] for t in tau)


def _transposition(n, a, b):
    perm = list(range(n))
    perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    return tuple(perm)


def cycle_type(perm) -> Partition:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


class FactorizationQuery:
    __slots__ = ("lam", "r", "L", "M")

    def __init__(self, lam, r, L, M):
        self.lam, self.r, self.L, self.M = Partition(lam), r, L, M

    def __repr__(self):
        return f"FactorizationQuery({self.lam}, r={self.r}, L={self.L}, M={self.M})"


def _monotone_tuples(n, r):
    """All r-tuples of transpositions (a_i, b_i), a_i < b_i, with b weakly increasing."""
    def rec(prefix, last_b):
        if len(prefix) == r:
            yield tuple(prefix)
            return
        for b in range(max(last_b, 2), n + 1):
            for a in range(1, b):
                prefix.append((a, b))
                yield from rec(prefix, b)
                prefix.pop()
    yield from rec([], 2)


def _valid_coloring(bs, colors, L):
    r = len(bs)
    for i in range(r):
        for j in range(i + 1, r):
            if colors[i] == colors[j] and colors[i] < L and not bs[i] < bs[j]:
                return False
            if bs[i] == bs[j] and not colors[i] <= colors[j]:
                return False
    return True


def enumerate_colored_monotone_factorizations(q: FactorizationQuery) -> Counter:
    """Count (L|M)-colored monotone factorizations of type lam and length r.

    Returns a Counter mapping color-multiplicity vectors e (one slot per color)
    to the number of colored factorizations whose weight is prod u_i^e_i.
    """
    n = q.lam.size
    if n > ENUMERATION_GUARD or q.r > ENUMERATION_GUARD:
        raise GuardExceeded(f"enumeration limited to |lam|, r <= {ENUMERATION_GUARD}")
    K = q.L + q.M
    counts = Counter()
    identity = tuple(range(n))
    for tup in _monotone_tuples(n, q.r):
        perm = identity
        for a, b in tup:
            perm = _compose(perm, _transposition(n, a, b))
        if cycle_type(perm) != q.lam:
            continue
        bs = [b for _, b in tup]
        for colors in product(range(K), repeat=q.r):
            if _valid_coloring(bs, colors, q.L):
                exps = [0] * K
                for c in colors:
                    exps[c] += 1
                counts[tuple(exps)] += 1
    return counts


def weight_value(counts: Counter, u):
    """Evaluate a Counter of color-multiplicity vectors at the parameters u."""
    acc, cache = 0, {}
    for exps in sorted(counts):
        acc = acc + counts[exps] * _monomial_value(exps, u, cache)
    return acc


def factorization_table(G: WeightGF, N: int, R: int) -> HurwitzTable:
    """b = 0 table from brute-force factorization counts divided by |lam|!."""
    entries = {}
    for n in range(N + 1):
        for lam in partitions_of(n):
            for r in range(R + 1):
                counts = enumerate_colored_monotone_factorizations(FactorizationQuery(lam, r, G.L, G.M))
                entries[(lam, r)] = _normalize(weight_value(counts, G.u) / Fraction(factorial(n)))
    return HurwitzTable(G, 0, N, R, entries, "factorization")


def _class_representative(lam: Partition):
    perm, start = [], 0
    for part in lam:
        cycle = list(range(start, start + part))
        perm.extend(cycle[1:] + cycle[:1])
        start += part
    return tuple(perm)


def jm_class_expansion(G: WeightGF, n: int, R: int, check_central: bool = True) -> dict:
    """Expand prod_i G(eps J_i) in the group algebra of S_n up to eps^R.

    Returns {(lam, r): coefficient of eps^r C_lam divided by z_lam}.
    """
    if n > ENUMERATION_GUARD:
        raise GuardExceeded(f"group algebra limited to n <= {ENUMERATION_GUARD}")
    K = G.L + G.M
    identity = tuple(range(n))
    element = {((0,) * K, identity): 1}

    def times_j(elem, i, color):
        out = {}
        for (e, sigma), c in elem.items():
            if sum(e) >= R:
                continue
            e2 = e[:color] + (e[color] + 1,) + e[color + 1:]
            for k in range(1, i):
                key = (e2, _compose(sigma, _transposition(n, k, i)))
                out[key] = out.get(key, 0) + c
        return out

    def add(x, y):
        out = dict(x)
        for key, c in y.items():
            out[key] = out.get(key, 0) + c
        return out

    for i in range(2, n + 1):
        for color in range(G.L):
            element = add(element, times_j(element, i, color))
        for color in range(G.L, K):
            acc, cur = element, element
            while True:
                cur = times_j(cur, i, color)
                if not cur:
                    break
                acc = add(acc, cur)
            element = acc

    by_perm = {}
    for (e, sigma), c in element.items():
        if c:
            by_perm.setdefault(sigma, Counter())[e] += c
    if check_central:
        for sigma, counts in by_perm.items():
            rep = _class_representative(cycle_type(sigma))
            if by_perm.get(rep) != counts:
                raise AssertionError(f"expansion is not central at {sigma}")
    out = {}
    for lam in partitions_of(n):
        counts = by_perm.get(_class_representative(lam), Counter())
        for r in range(R + 1):
            sub = Counter({e: c for e, c in counts.items() if sum(e) == r})
            out[(lam, r)] = _normalize(weight_value(sub, G.u) / Fraction(z_of(lam)))
    return out


def jm_table(G: WeightGF, N: int, R: int) -> HurwitzTable:
    entries = {}
    for n in range(N + 1):
        entries.update(jm_class_expansion(G, n, R))
    return HurwitzTable(G, 0, N, R, entries, "jucys-murphy")
