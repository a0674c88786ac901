"""Verification suites shared by the CLI and the acceptance tests.

Each suite is a list of independent cases; a case returns a small dict of
details and a pass flag.  Cases run on a thread pool but results are always
assembled in case order, so reports are byte-identical across thread counts.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .ensemble import (CorrelatorRequest, JacobiParams, appendix_identity_check, correlator,
                       expansion_context, expansion_weight, f_coefficient, f_pochhammer_form,
                       laguerre_correlator, verify_expansion)
from .hurwitz import WeightGF, hurwitz_table
from .maps import (FactorizationQuery, enumerate_colored_monotone_factorizations, factorization_table,
                   jm_table, t_table)
from .partitions import Partition, dominance_leq, hook_products, partitions_of, partitions_up_to
from .scalars import ParamContext, render
from .symfun import (ALPHA, FiniteSpecialization, cs_apply, hall_inner, jack_in_powersum,
                     to_monomial_basis, verify_inverse_identity)

SUITES = ("jack", "jacobi", "laguerre", "cross-pipeline", "b0", "appendix", "inverse-lemma",
          "moments", "f-forms")

DEFAULTS = {
    "jack": 5, "jacobi": 4, "laguerre": 4, "cross-pipeline": 5, "b0": 4, "appendix": 6,
    "inverse-lemma": 3, "moments": 3, "f-forms": 5,
}


@dataclass
class Case:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"case": self.name, "pass": self.passed, **self.details}


@dataclass
class SuiteResult:
    suite: str
    cases: list

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def first_failure(self):
        return next((c for c in self.cases if not c.passed), None)

    def to_dict(self):
        fail = self.first_failure()
        return {
            "suite": self.suite,
            "pass": self.passed,
            "cases": len(self.cases),
            "first_failure": fail.name if fail else None,
            "results": [c.to_dict() for c in self.cases],
        }


def _run(tasks, threads):
    """tasks: list of (name, thunk).  Thunks return (passed, details)."""
    def call(task):
        name, thunk = task
        passed, details = thunk()
        return Case(name, bool(passed), details)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(call, tasks))
    return [call(t) for t in tasks]


# -- individual suites -------------------------------------------------------

def _jack_case(lam):
    a = ALPHA.gen("alpha")
    P = jack_in_powersum(lam)
    h, hp = hook_products(lam, a)
    checks = {}
    checks["orthogonal"] = all(hall_inner(P, jack_in_powersum(mu), a).is_zero()
                               for mu in partitions_of(lam.size) if mu != lam)
    checks["norm"] = hall_inner(P, P, a) == hp / h
    m = to_monomial_basis(P)
    checks["triangular"] = m.get(lam) == 1 and all(dominance_leq(mu, lam) for mu in m)
    # P(p_1 = 1, p_k = 0 for k >= 2) is the coefficient of p_1^|lam|
    checks["special_value"] = P.coefficient(Partition([1] * lam.size)) == 1 / h
    return all(checks.values()), checks


def jack_suite(max_size=5):
    return [(f"jack {lam}", lambda lam=lam: _jack_case(lam))
            for lam in partitions_up_to(max_size)]


def _expansion_tasks(ensemble, max_size, R, betas, symbolic_beta_size=0):
    tasks = []
    for beta in list(betas) + ([None] if symbolic_beta_size else []):
        size = max_size if beta is not None else symbolic_beta_size
        for sign in ("+", "-"):
            cache = {}

            def table(beta=beta, sign=sign, size=size, cache=cache):
                if "t" not in cache:
                    ctx = expansion_context(beta)
                    G = expansion_weight(ensemble, sign, ctx)
                    be = ctx.gen("beta") if beta is None else ctx.coerce(beta)
                    cache["t"] = hurwitz_table(G, 2 / be - 1, size, R)
                return cache["t"]

            for lam in partitions_up_to(size)[1:]:
                def thunk(lam=lam, beta=beta, sign=sign, table=table):
                    rep = verify_expansion(lam, ensemble, sign, beta=beta, R=R, table=table())
                    return rep.passed, {"report": rep.to_dict()}
                tasks.append((f"{ensemble}{sign} lambda={lam} beta={'sym' if beta is None else beta}",
                              thunk))
    return tasks


def jacobi_suite(max_size=4, R=6, betas=(1, 2, 4), symbolic_beta_size=0):
    return _expansion_tasks("jacobi", max_size, R, betas, symbolic_beta_size)


def laguerre_suite(max_size=4, R=6, betas=(1, 2, 4), symbolic_beta_size=0):
    return _expansion_tasks("laguerre", max_size, R, betas, symbolic_beta_size)


SIGNATURES = ((1, 0), (0, 1), (2, 1), (1, 1))


def symbolic_weight(L, M):
    names = ("b",) + tuple(f"u{i}" for i in range(1, L + M + 1))
    ctx = ParamContext(names)
    return ctx, WeightGF(L, M, tuple(ctx.gen(n) for n in names[1:]))


def cross_pipeline_suite(max_size=5, R=5, signatures=SIGNATURES):
    tasks = []
    for L, M in signatures:
        def thunk(L=L, M=M):
            ctx, G = symbolic_weight(L, M)
            b = ctx.gen("b")
            jack = hurwitz_table(G, b, max_size, R)
            rec = t_table(G, max_size, R, b)
            diff = jack.diff(rec)
            return not diff, {"entries": len(jack.keys()),
                              "mismatches": [f"{lam};{r}" for lam, r in diff]}
        tasks.append((f"cross-pipeline (L,M)=({L},{M})", thunk))
    return tasks


def _pinned_b0():
    out = {}
    G = WeightGF(1, 0, (1,))
    tab = hurwitz_table(G, 0, 2, 1)
    out["H((2);1) for 1+z"] = (tab[((2,), 1)], Fraction(1, 2))
    out["H((1,1);1) for 1+z"] = (tab[((1, 1), 1)], Fraction(0))
    tab = hurwitz_table(WeightGF(0, 1, (1,)), 0, 3, 2)
    out["H((3);2) for 1/(1-z)"] = (tab[((3,), 2)], Fraction(2, 3))
    counts = enumerate_colored_monotone_factorizations(FactorizationQuery((3,), 2, 0, 1))
    out["factorizations (3), r=2, (0|1)"] = (dict(counts), {(2,): 4})
    return out


def b0_suite(max_size=4, R=4, signatures=SIGNATURES):
    tasks = []
    for L, M in signatures:
        def thunk(L=L, M=M):
            ctx, G = symbolic_weight(L, M)
            sub = ParamContext(ctx.names[1:])
            G = WeightGF(L, M, tuple(sub.coerce(u) for u in G.u))
            jack = hurwitz_table(G, 0, max_size, R)
            rec = t_table(G, max_size, R, 0)
            fact = factorization_table(G, max_size, R)
            jm = jm_table(G, max_size, R)
            bad = sorted(set(jack.diff(rec)) | set(jack.diff(fact)) | set(jack.diff(jm)))
            return not bad, {"mismatches": [f"{lam};{r}" for lam, r in bad]}
        tasks.append((f"b=0 oracles (L,M)=({L},{M})", thunk))

    def pinned():
        values = _pinned_b0()
        ok = all(got == want for got, want in values.values())
        return ok, {k: {"got": str(g), "expected": str(w)} for k, (g, w) in values.items()}
    tasks.append(("b=0 pinned values", pinned))
    return tasks


def appendix_suite(max_size=6, max_n=7):
    ctx = ParamContext(("beta",))
    beta = ctx.gen("beta")
    tasks = []
    for lam in partitions_up_to(max_size):
        for n in range(max(len(lam), 1), max_n + 1):
            tasks.append((f"appendix lambda={lam} n={n}",
                          lambda lam=lam, n=n: (appendix_identity_check(lam, n, beta), {})))
    return tasks


def inverse_lemma_suite(max_size=3, max_n=3, samples=5, seed=20240101):
    rng = random.Random(seed)
    tasks = []
    for n in range(1, max_n + 1):
        for lam in partitions_up_to(max_size):
            if len(lam) > n:
                continue
            points = []
            for _ in range(samples):
                points.append(tuple(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
                                    for _ in range(n)))

            def thunk(lam=lam, n=n, points=points):
                ok = all(verify_inverse_identity(lam, n, None, FiniteSpecialization(x)) for x in points)
                _, eig = cs_apply(lam, None, n)
                return ok, {"samples": [[str(v) for v in x] for x in points], "eigenvalue": str(eig)}
            tasks.append((f"inverse lemma lambda={lam} n={n}", thunk))
    return tasks


def beta_moment(k, c, d):
    """E[x^k] for x ~ Beta(c, d), as a Pochhammer ratio (negative k allowed)."""
    acc = Fraction(1)
    if k >= 0:
        for j in range(k):
            acc = acc * (c + j) / (c + d + j)
    else:
        for j in range(1, -k + 1):
            acc = acc * (c + d - j) / (c - j)
    return acc


def gamma_moment(k, c):
    """E[x^k] for x ~ Gamma(c, 1): (c)_k, or 1/((c-1)...(c-|k|)) for k < 0."""
    acc = Fraction(1)
    if k >= 0:
        for j in range(k):
            acc = acc * (c + j)
    else:
        for j in range(1, -k + 1):
            acc = acc / (c - j)
    return acc


def moments_suite(max_k=3):
    ctx = ParamContext(("c", "d"))
    c, d = ctx.gens()
    lctx = ParamContext(("c",))
    lc = lctx.gen("c")
    tasks = []
    for k in range(-max_k, max_k + 1):
        def thunk(k=k):
            sign = "+" if k >= 0 else "-"
            lam = Partition([abs(k)] if k else [])
            cj = correlator(CorrelatorRequest(lam, sign, JacobiParams(1, 2, c, d)))
            cl = laguerre_correlator(lam, sign, 1, 2, lc)
            ok = cj == beta_moment(k, c, d) and cl == gamma_moment(k, lc)
            return ok, {"jacobi": render(cj), "laguerre": render(cl)}
        tasks.append((f"moment k={k}", thunk))
    return tasks


def f_forms_suite(max_size=5, max_n=6):
    ctx = ParamContext(("beta", "c", "d"))
    beta, c, d = ctx.gens()
    tasks = []
    for lam in partitions_up_to(max_size):
        for n in range(max(len(lam), 1), max_n + 1):
            def thunk(lam=lam, n=n):
                p = JacobiParams(n, beta, c, d)
                ok = all(f_coefficient(lam, s, p) == f_pochhammer_form(lam, s, p, n) for s in "+-")
                return ok, {}
            tasks.append((f"f-forms lambda={lam} n={n}", thunk))
    return tasks


def build_suite(name, max_size=None, R=6):
    size = DEFAULTS[name] if max_size is None else max_size
    if name == "jack":
        return jack_suite(size)
    if name == "jacobi":
        return jacobi_suite(size, R, symbolic_beta_size=size)
    if name == "laguerre":
        return laguerre_suite(size, R, symbolic_beta_size=size)
    if name == "cross-pipeline":
        return cross_pipeline_suite(size, min(R, 5) if max_size is None else R)
    if name == "b0":
        return b0_suite(size, min(R, 4) if max_size is None else R)
    if name == "appendix":
        return appendix_suite(size)
    if name == "inverse-lemma":
        return inverse_lemma_suite(size)
    if name == "moments":
        return moments_suite(size)
    if name == "f-forms":
        return f_forms_suite(size)
    raise ValueError(f"unknown suite {name!r}")


def run_suite(name, max_size=None, R=6, threads=1) -> SuiteResult:
    return SuiteResult(name, _run(build_suite(name, max_size, R), threads))
