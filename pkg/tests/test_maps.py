from fractions import Fraction
from math import factorial

import flint
import pytest
from hypothesis import given, strategies as st

from betajack.errors import GuardExceeded
from betajack.hurwitz import WeightGF, hurwitz_table
from betajack.maps import (FactorizationQuery, PZPolynomial, _apply_factors, attach_vertex,
                           enumerate_colored_monotone_factorizations, factorization_table,
                           jm_class_expansion, jm_table, lambda_apply, t_table)
from betajack.partitions import Partition, partitions_of, z_of
from betajack.scalars import ParamContext

B = flint.fmpq_poly([0, 1])
ONE_PLUS_B = flint.fmpq_poly([1, 1])


def mono(p=(), z=(), g=(0,), coeff=1, order=3, scale=0):
    return PZPolynomial.monomial(p, z, g, coeff, ncolors=len(g), order=order, scale=scale)


def test_lambda_examples():
    assert lambda_apply(mono(z=(1,))).terms == {}
    assert lambda_apply(mono(p=(1,), z=(1,))) == mono(z=(2,), coeff=ONE_PLUS_B)
    assert lambda_apply(mono(z=(2,))) == mono(p=(1,), z=(1,)) + mono(z=(2,), coeff=B)


monomials = st.tuples(
    st.lists(st.integers(1, 4), max_size=3),
    st.lists(st.integers(1, 4), min_size=1, max_size=2),
)


@given(monomials)
def test_lambda_preserves_grading(m):
    p, z = m
    f = mono(p=tuple(p), z=tuple(z))
    image = lambda_apply(f)
    assert image.grading() <= {sum(p) + sum(z)}


def test_attach_vertex_examples():
    G = WeightGF(1, 0, (1,))
    T1 = attach_vertex(PZPolynomial.one(1, 2), G)
    assert T1 == mono(p=(1,), g=(0,), order=2, scale=1)
    T2 = attach_vertex(T1, G)
    assert T2.scale == 2
    assert T2.coefficient(p=(1, 1), g=(0,)) == 1
    assert T2.coefficient(p=(2,), g=(1,)) == ONE_PLUS_B
    assert len(T2.terms) == 2


def test_attach_vertex_geometric_weight():
    G = WeightGF(0, 1, (1,))
    T2 = attach_vertex(attach_vertex(PZPolynomial.one(1, 2), G), G)
    assert T2.scale == 2
    assert T2.coefficient(p=(1, 1), g=(0,)) == 1
    assert T2.coefficient(p=(2,), g=(1,)) == ONE_PLUS_B
    assert T2.coefficient(p=(1, 1), g=(2,)) == ONE_PLUS_B
    assert T2.coefficient(p=(2,), g=(2,)) == ONE_PLUS_B * B
    assert len(T2.terms) == 4


def test_operator_factors_commute():
    # (1 + g1 L)(1 - g2 L)^-1 and (1 - g2 L)^-1 (1 + g1 L) act identically
    f = mono(p=(1, 1), z=(2, 1), g=(0, 0), order=4, scale=0)
    a = _apply_factors(f, [("num", 0), ("den", 1)])
    b = _apply_factors(f, [("den", 1), ("num", 0)])
    assert a == b


def test_t_table_examples():
    ctx = ParamContext(("b",))
    b = ctx.gen("b")
    t = t_table(WeightGF(1, 0, (1,)), 2, 1, b)
    assert t[((1,), 0)] == 1 / (1 + b)
    assert t[((2,), 1)] == 1 / (2 * (1 + b))
    assert t[((1, 1), 0)] == 1 / (2 * (1 + b) ** 2)
    assert t.source == "lambda-recursion"


def test_factorization_examples():
    assert enumerate_colored_monotone_factorizations(FactorizationQuery((2,), 1, 1, 0)) == {(1,): 1}
    for L, M in [(1, 0), (0, 1), (2, 1)]:
        assert not enumerate_colored_monotone_factorizations(FactorizationQuery((1, 1), 1, L, M))
    assert enumerate_colored_monotone_factorizations(FactorizationQuery((3,), 2, 0, 1)) == {(2,): 4}


def test_factorization_strict_colors_forbid_repeats():
    # with a single strict color, b_i must increase: (3), r=2 has 2 factorizations
    assert enumerate_colored_monotone_factorizations(FactorizationQuery((3,), 2, 1, 0)) == {(2,): 2}


def test_factorization_guard():
    with pytest.raises(GuardExceeded):
        enumerate_colored_monotone_factorizations(FactorizationQuery([1] * 9, 0, 1, 0))


def test_jm_examples():
    H = jm_class_expansion(WeightGF(1, 0, (1,)), 2, 2)
    assert H[(Partition([2]), 1)] == Fraction(1, 2)
    assert H[(Partition([1, 1]), 1)] == 0
    H3 = jm_class_expansion(WeightGF(0, 1, (1,)), 3, 2)
    assert H3[(Partition([3]), 2)] == Fraction(2, 3)
    with pytest.raises(GuardExceeded):
        jm_class_expansion(WeightGF(0, 1, (1,)), 9, 1)


def test_monotone_hurwitz_numbers_are_consistent():
    # (L, M) = (0, 1), u = 1: all three b = 0 paths agree on monotone numbers
    G = WeightGF(0, 1, (1,))
    fact = factorization_table(G, 4, 4)
    assert fact.diff(jm_table(G, 4, 4)) == []
    assert fact.diff(t_table(G, 4, 4, 0)) == []
    # class sizes reconcile the two normalizations
    for n in range(1, 5):
        for lam in partitions_of(n):
            assert Fraction(factorial(n), z_of(lam)).denominator == 1


@pytest.mark.parametrize("LM", [(1, 0), (0, 1), (2, 1), (1, 1), (0, 2), (2, 0)])
def test_b0_tables_agree(LM):
    L, M = LM
    ctx = ParamContext(tuple(f"u{i}" for i in range(1, L + M + 1)))
    G = WeightGF(L, M, ctx.gens())
    jack = hurwitz_table(G, 0, 4, 4)
    assert jack.diff(t_table(G, 4, 4, 0)) == []
    assert jack.diff(factorization_table(G, 4, 4)) == []
    assert jack.diff(jm_table(G, 4, 4)) == []


def test_symbolic_b_recursion_matches_jack_expansion_with_numeric_u():
    ctx = ParamContext(("b",))
    G = WeightGF(2, 1, (1, Fraction(1, 2), Fraction(-1, 3)))
    b = ctx.gen("b")
    assert hurwitz_table(G, b, 4, 4).diff(t_table(G, 4, 4, b)) == []
