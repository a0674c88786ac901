from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from betajack.errors import NotEigenvector, SingularAlpha, ZeroSamplePoint
from betajack.partitions import Partition, hook_products, partitions_of, partitions_up_to
from betajack.scalars import ParamContext
from betajack.symfun import (ALPHA, FiniteSpecialization, SymmetricFunction, cauchy_identity_check,
                             cs_apply, cs_eigenvalue, hall_inner, jack_in_powersum,
                             monomial_to_powersum, powersum_to_monomial, specialize,
                             to_monomial_basis, verify_inverse_identity)
from oracles import jack_by_cs_operator, monomial_symmetric

alpha = ALPHA.gen("alpha")
p = SymmetricFunction.p


def test_monomial_to_powersum():
    assert monomial_to_powersum(Partition([1])) == p(1)
    assert monomial_to_powersum(Partition([1, 1])) == (p(1, 1) - p(2)) * Fraction(1, 2)
    assert monomial_to_powersum(Partition([2, 1])) == p(2, 1) - p(3)


@pytest.mark.parametrize("degree", range(0, 9))
def test_monomial_powersum_round_trip(degree):
    for mu in partitions_of(degree):
        assert to_monomial_basis(monomial_to_powersum(mu)) == {mu: 1}
    for lam in partitions_of(degree):
        back = SymmetricFunction()
        for mu, c in powersum_to_monomial(lam).items():
            back = back + monomial_to_powersum(mu) * c
        assert back == p(*lam)


def test_monomial_expansion_against_variables():
    xs = sp.symbols("x1:5")
    for mu in partitions_up_to(4):
        f = monomial_to_powersum(mu)
        got = sum(sp.Rational(c.numerator, c.denominator) *
                  sp.Mul(*[sum(x ** k for x in xs) for k in lam]) for lam, c in f.items())
        assert sp.expand(got - monomial_symmetric(mu, xs)) == 0


def test_small_jacks():
    assert jack_in_powersum((1,)) == p(1)
    assert jack_in_powersum((2,)) == p(1, 1) * (1 / (alpha + 1)) + p(2) * (alpha / (alpha + 1))
    assert jack_in_powersum((1, 1)) == (p(1, 1) - p(2)) * Fraction(1, 2)


def test_rendering_uses_enumeration_order():
    assert str(jack_in_powersum((2,))) == "(alpha)/(alpha + 1)·p[2] + (1)/(alpha + 1)·p[1,1]"


def test_jack_three_frozen():
    # P_(3) in the m-basis, solved by hand from the two orthogonality conditions
    m = to_monomial_basis(jack_in_powersum((3,)))
    assert m[Partition([3])] == 1
    assert m[Partition([2, 1])] == 3 / (1 + 2 * alpha)
    assert m[Partition([1, 1, 1])] == 6 / ((1 + alpha) * (1 + 2 * alpha))


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(3) if lam])
def test_jack_matches_operator_oracle(lam):
    a = sp.Symbol("alpha")
    xs, oracle = jack_by_cs_operator(lam, lam.size, a)
    P = jack_in_powersum(lam)
    got = sum(sp.sympify(str(c).replace("^", "**"), locals={"alpha": a}) *
              sp.Mul(*[sum(x ** k for x in xs) for k in mu]) for mu, c in P.items())
    assert sp.simplify(got - oracle) == 0


def test_hall_inner():
    assert hall_inner(p(2), p(2), alpha) == 2 * alpha
    assert hall_inner(p(1, 1), p(1, 1), alpha) == 2 * alpha ** 2
    P2 = jack_in_powersum((2,))
    assert hall_inner(P2, P2, alpha) == 2 * alpha ** 2 / (alpha + 1)


@pytest.mark.parametrize("size", range(0, 6))
def test_orthogonality_norm_triangularity(size):
    from betajack.partitions import dominance_leq
    parts = partitions_of(size)
    jacks = {lam: jack_in_powersum(lam) for lam in parts}
    for lam in parts:
        h, hp = hook_products(lam, alpha)
        for mu in parts:
            value = hall_inner(jacks[lam], jacks[mu], alpha)
            assert value == (hp / h if mu == lam else 0)
        m = to_monomial_basis(jacks[lam])
        assert m[lam] == 1 and all(dominance_leq(mu, lam) for mu in m)
        assert jacks[lam].coefficient(Partition([1] * size)) == 1 / h


@pytest.mark.parametrize("size", range(0, 6))
def test_schur_self_duality(size):
    for lam in partitions_of(size):
        P = jack_in_powersum(lam, 1)
        assert hall_inner(P, P, 1) == 1


def test_numeric_alpha_paths_agree():
    for lam in partitions_up_to(4):
        for a in (Fraction(1, 2), 2, Fraction(-3, 7)):
            assert jack_in_powersum(lam, a) == jack_in_powersum(lam, a, method="direct")


def test_singular_alpha():
    with pytest.raises(SingularAlpha):
        jack_in_powersum((2,), -1)


def test_specialize():
    assert specialize(p(1), FiniteSpecialization([1, 2])) == 3
    assert specialize(jack_in_powersum((2,)), [1, 2]) == 5 + 4 / (alpha + 1)


def test_cs_eigenvalues():
    for lam, n, want in [((1,), 2, (alpha + 1) / 2), ((1, 1), 2, alpha), ((2,), 2, 2 * alpha + 1)]:
        _, eig = cs_apply(lam, None, n)
        assert eig == want


def test_printed_eigenvalue_lacks_the_part_factor():
    # the variant sum_i (alpha lam_i^2/2 + (n+1-2i)/2) gives alpha/2 for lam=(1), n=2,
    # while applying the operator to x1 + x2 gives (alpha+1)/2
    printed = sum(alpha * Fraction(k * k, 2) + Fraction(2 + 1 - 2 * i, 2)
                  for i, k in enumerate([1, 0], 1))
    assert printed == alpha / 2
    image, eig = cs_apply((1,), None, 2)
    assert eig == (alpha + 1) / 2 != printed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cs_eigen_relation_grid(n):
    for lam in partitions_up_to(3):
        if len(lam) <= n:
            cs_apply(lam, None, n)


def test_cs_eigenvalue_formula_for_hat():
    # E_lam + alpha/2 n lam_1^2 - alpha lam_1 |lam| = E_hat(lam)
    from betajack.partitions import hat_partition
    for n in range(1, 5):
        for lam in partitions_up_to(5):
            if len(lam) <= n and lam:
                lhs = cs_eigenvalue(lam, alpha, n) + alpha * Fraction(n * lam[0] ** 2, 2) - alpha * lam[0] * lam.size
                assert lhs == cs_eigenvalue(hat_partition(lam, n), alpha, n)


def test_inverse_identity_examples():
    assert verify_inverse_identity((2,), 2, None, FiniteSpecialization([2, 3]))
    lhs = specialize(jack_in_powersum((2,)), [Fraction(1, 2), Fraction(1, 3)])
    assert lhs == Fraction(13, 36) + Fraction(1, 3) / (alpha + 1)
    assert verify_inverse_identity((2, 2), 2, None, [Fraction(3), Fraction(-5, 2)])
    assert verify_inverse_identity((1,), 1, None, [5])
    with pytest.raises(ZeroSamplePoint):
        verify_inverse_identity((1,), 2, None, [1, 0])


nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda x: x != 0)


@settings(max_examples=25)
@given(st.sampled_from([lam for lam in partitions_up_to(3)]), st.lists(nonzero, min_size=3, max_size=3))
def test_inverse_identity_random(lam, xs):
    n = max(len(lam), 1)
    assert verify_inverse_identity(lam, n, None, xs[:n])


def test_inverse_identity_symbolic_point():
    ctx = ParamContext(("alpha", "s", "t"))
    s, t = ctx.gen("s"), ctx.gen("t")
    assert verify_inverse_identity((2, 1), 2, ctx.gen("alpha"), [s, t])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cauchy_identity(n):
    assert cauchy_identity_check(n, 4)


def test_not_eigenvector_is_an_internal_error_type():
    assert issubclass(NotEigenvector, Exception)
