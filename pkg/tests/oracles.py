"""Independent sympy oracles; nothing here touches the package internals."""

from itertools import permutations

import sympy as sp


def monomial_symmetric(mu, xs):
    """m_mu(x_1..x_n) by summing over distinct permutations of the exponent vector."""
    exps = list(mu) + [0] * (len(xs) - len(mu))
    if len(exps) > len(xs):
        return sp.Integer(0)
    total = sp.Integer(0)
    for e in set(permutations(exps)):
        term = sp.Integer(1)
        for x, k in zip(xs, e):
            term *= x ** k
        total += term
    return sp.expand(total)


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for p in range(min(n, cap), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def dominated(mu, lam):
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def jack_by_cs_operator(lam, nvars, alpha):
    """P_lam in nvars variables as the triangular eigenvector of the CS operator."""
    xs = sp.symbols(f"x1:{nvars + 1}")
    lower = [mu for mu in partitions(sum(lam)) if mu != tuple(lam) and dominated(mu, lam)
             and len(mu) <= nvars]
    cs = sp.symbols(f"k0:{len(lower)}") if lower else ()
    P = monomial_symmetric(lam, xs) + sum(c * monomial_symmetric(mu, xs) for c, mu in zip(cs, lower))

    def D(f, x):
        return x * sp.diff(f, x)

    H = alpha / 2 * sum(D(D(P, x), x) for x in xs)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            xi, xj = xs[i], xs[j]
            H += sp.Rational(1, 2) * sp.cancel((xi + xj) * (D(P, xi) - D(P, xj)) / (xi - xj))
    E = sum(alpha * sp.Rational(k * k, 2) + sp.Rational((nvars + 1 - 2 * i) * k, 2)
            for i, k in enumerate(list(lam) + [0] * (nvars - len(lam)), 1))
    eqs = sp.Poly(sp.expand(H - E * P), *xs).coeffs()
    sol = sp.solve(eqs, cs, dict=True) if cs else [{}]
    return xs, sp.expand(P.subs(sol[0]))


def jacobi_moment_two_particles(ks, beta, c, d):
    """E[prod_k (x^k + y^k)] for the n=2 Jacobi ensemble; beta in {2, 4}, integer c, d."""
    x, y = sp.symbols("x y")
    half = sp.Rational(beta, 2)
    w = x ** (half * c - 1) * (1 - x) ** (half * d - 1) * y ** (half * c - 1) * (1 - y) ** (half * d - 1)
    w *= (x - y) ** beta
    f = sp.Integer(1)
    for k in ks:
        f *= x ** k + y ** k
    num = sp.integrate(sp.expand(f * w), (x, 0, 1), (y, 0, 1))
    den = sp.integrate(sp.expand(w), (x, 0, 1), (y, 0, 1))
    return sp.Rational(num / den)


def laurent_at_infinity(expr, var, order):
    """[a_0..a_order] with expr = sum a_r var^-r, via sympy's series in 1/var."""
    t = sp.Symbol("t_inv", positive=True)
    s = sp.series(expr.subs(var, 1 / t), t, 0, order + 1).removeO()
    return [sp.simplify(s.coeff(t, r)) for r in range(order + 1)]
