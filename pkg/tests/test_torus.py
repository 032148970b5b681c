import random

import pytest
from hypothesis import given, settings, strategies as st

from qck.cartan import CartanDatum
from qck.laurent import QLaurentScalar
from qck.seeds import FrozenDirection, build_seed, check_seed, grading_shift_mk, mutated_weight
from qck.torus import (
    DimensionMismatch,
    MutationState,
    TorusElement,
    cluster_monomial,
    left_divide,
    mutate_B,
    mutate_D,
    mutate_L,
    mutate_matrices,
    torus_mul,
)

A2 = CartanDatum.named("A2")
A3 = CartanDatum.named("A3")
SEED2 = build_seed(A2, (1, 2, 1))
SEED3 = build_seed(A3, (1, 2, 1, 3, 2, 1))


def X(rank, exp, coef=None):
    return TorusElement.monomial(rank, exp, coef)


# -- based multiplication


def test_monomial_rule_basics():
    L = SEED2.L
    x1 = TorusElement.generator(3, 1)
    x2 = TorusElement.generator(3, 2)
    # X^{e1} X^{e2} = v^{L_12} X^{e1+e2} = q^{-1/2} X^{(1,1,0)}
    got = torus_mul(x1, x2, L)
    assert got == X(3, (1, 1, 0), QLaurentScalar.v_power(L[0][1]))
    assert L[0][1] == -1


def test_monomial_rule_identity_and_same_index():
    L = SEED2.L
    one = TorusElement.one(3)
    y = X(3, (2, 0, 1), QLaurentScalar.q_integer(2))
    assert torus_mul(one, y, L) == y
    xi = TorusElement.generator(3, 1)
    assert torus_mul(xi, xi, L) == X(3, (2, 0, 0))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        torus_mul(TorusElement.one(2), TorusElement.one(3), SEED2.L)


exps = st.tuples(*[st.integers(min_value=-2, max_value=2)] * 3)
elements = st.lists(exps, min_size=1, max_size=3).map(
    lambda es: TorusElement(3, {e: QLaurentScalar.q_power(0, 1) for e in es})
)


@settings(max_examples=40)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    L = SEED2.L
    assert torus_mul(torus_mul(a, b, L), c, L) == torus_mul(a, torus_mul(b, c, L), L)


@settings(max_examples=40)
@given(exps, exps)
def test_monomial_commutation(a, b):
    # X^a X^b = q^{sum L_ij a_i b_j} X^b X^a
    L = SEED2.L
    xa, xb = X(3, a), X(3, b)
    n = sum(L[i][j] * a[i] * b[j] for i in range(3) for j in range(3))
    lhs = torus_mul(xa, xb, L)
    rhs = torus_mul(xb, xa, L)
    assert lhs == rhs.q_shift(n)


def test_left_divide_rejects_inexact_coefficient():
    from qck.torus import ExchangeInconsistent

    L = SEED2.L
    x = X(3, (0, 0, 0), QLaurentScalar.q_power(0, 2))
    y = TorusElement.generator(3, 1)
    with pytest.raises(ExchangeInconsistent):
        left_divide(x, y, L)


def test_left_divide_roundtrip():
    L = SEED3.L
    rng = random.Random(5)
    for _ in range(10):
        xt = {tuple(rng.randint(-2, 2) for _ in range(6)): QLaurentScalar.q_power(rng.randint(-1, 1))
              for _ in range(rng.randint(1, 3))}
        zt = {tuple(rng.randint(-2, 2) for _ in range(6)): QLaurentScalar.q_power(rng.randint(-1, 1))
              for _ in range(rng.randint(1, 3))}
        x, z = TorusElement(6, xt), TorusElement(6, zt)
        if x.is_zero() or z.is_zero():
            continue
        y = torus_mul(x, z, L)
        assert left_divide(x, y, L) == z


# -- matrix mutation


def test_mutate_B_column_flip():
    B1 = mutate_B(SEED2, 1)
    assert B1 == ((0,), (1,), (-1,))
    assert mutate_B(type(SEED2)(SEED2.cartan, SEED2.L, B1, SEED2.D, SEED2.frozen, SEED2.word), 1) == SEED2.B


def test_mutate_B_involution_a3():
    for k in SEED3.exchangeable():
        once = mutate_matrices(SEED3, k)
        twice = mutate_matrices(once, k)
        assert twice.B == SEED3.B and twice.L == SEED3.L and twice.D == SEED3.D


def test_mutate_frozen_rejected():
    with pytest.raises(FrozenDirection):
        mutate_B(SEED2, 2)
    with pytest.raises(FrozenDirection):
        mutate_L(SEED2, 3)
    with pytest.raises(FrozenDirection):
        mutate_D(SEED2, 2)


def test_mutate_L_sign_independent():
    for seed in (SEED2, SEED3):
        for k in seed.exchangeable():
            assert mutate_L(seed, k, eps=1) == mutate_L(seed, k, eps=-1)


def test_mutate_L_preserves_compatibility():
    for seed in (SEED2, SEED3):
        for k in seed.exchangeable():
            assert check_seed(mutate_matrices(seed, k))["pass"]


def test_mutate_D_examples():
    newD = mutate_D(SEED2, 1)
    assert newD[0] == -1 * A2.simple_root(2)
    assert newD[1:] == SEED2.D[1:]
    # involution through the mutated matrices
    once = mutate_matrices(SEED2, 1)
    assert mutate_D(once, 1)[0] == SEED2.D[0]


# -- mutation state and exchange


def test_initial_state_and_cluster_monomial():
    st0 = MutationState.initial(SEED2)
    assert st0.check_q_commutation()
    # in the initial state the based monomial is the basis element itself
    assert cluster_monomial(st0, (1, 1, 0)) == X(3, (1, 1, 0))
    assert cluster_monomial(st0, (2, 0, 1)) == X(3, (2, 0, 1))


def test_exchange_variable_a2():
    st0 = MutationState.initial(SEED2)
    x1p = st0.exchange_variable(1)
    assert x1p == X(3, (-1, 0, 1)) + X(3, (-1, 1, 0))
    # denominators touch only the mutated coordinate
    assert x1p.denominator_support() == [1]


def test_exchange_matches_grading_normalization():
    # q^{m_k} x_k x'_k = q^{(d_k, xi)/2} (q x^{[b]+} + x^{[-b]+})
    for seed in (SEED2, SEED3):
        st0 = MutationState.initial(seed)
        for k in seed.exchangeable():
            mk, _ = grading_shift_mk(seed, k)
            xi = mutated_weight(seed, k)
            col = seed.column(k)
            pos = tuple(max(b, 0) for b in col)
            neg = tuple(max(-b, 0) for b in col)
            lhs = torus_mul(st0.variables[k - 1], st0.exchange_variable(k), st0.L0).q_shift(mk)
            half = seed.cartan.bilinear(seed.D[k - 1], xi)
            rhs = (cluster_monomial(st0, pos).q_shift(1) + cluster_monomial(st0, neg)).v_shift(half)
            assert lhs == rhs


def test_mutation_involution_full_state():
    for seed in (SEED2, SEED3):
        st0 = MutationState.initial(seed)
        for k in seed.exchangeable():
            st2 = st0.mutate(k).mutate(k)
            assert st2.seed == st0.seed
            assert st2.variables == st0.variables


def test_mutation_keeps_q_commutation():
    st = MutationState.initial(SEED3)
    rng = random.Random(1)
    for _ in range(5):
        k = rng.choice(st.seed.exchangeable())
        st = st.mutate(k)
        assert st.check_q_commutation()


def test_frozen_direction_guard():
    st0 = MutationState.initial(SEED2)
    with pytest.raises(FrozenDirection):
        st0.mutate(2)


def test_undo_restores_state():
    st0 = MutationState.initial(SEED3)
    st = st0.mutate(1).mutate(2)
    back = st.undo().undo()
    assert back.seed == st0.seed and back.variables == st0.variables
    assert back.history == []


def walk_states(seed, depth):
    stack = [(MutationState.initial(seed), depth)]
    while stack:
        state, d = stack.pop()
        for k in state.seed.exchangeable():
            nxt = state.mutate(k)
            yield nxt
            if d > 1:
                stack.append((nxt, d - 1))


def test_laurent_property_and_compatibility_along_walks():
    # every mutation closes with exact division and a compatible seed
    for seed, depth in ((SEED2, 6), (SEED3, 3)):
        for state in walk_states(seed, depth):
            assert check_seed(state.seed)["pass"]
            for k in state.seed.exchangeable():
                grading_shift_mk(state.seed, k)  # raises if non-integral


def test_laurent_denominators_single_mutation_sequences():
    # after (1) and (1,1) in the small seed, denominators sit only at index 1
    st1 = MutationState.initial(SEED2).mutate(1)
    assert all(set(x.denominator_support()) <= {1} for x in st1.variables)
    st11 = st1.mutate(1)
    assert all(x.denominator_support() == [] for x in st11.variables)


def test_torus_json_roundtrip():
    st1 = MutationState.initial(SEED2).mutate(1)
    x = st1.variables[0]
    assert TorusElement.from_json(3, x.to_json()) == x
    assert x.to_json() == [
        {"exp": [-1, 0, 1], "coef": [[0, 1]]},
        {"exp": [-1, 1, 0], "coef": [[0, 1]]},
    ]
