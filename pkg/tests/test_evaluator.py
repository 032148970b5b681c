import pytest

from qck.cartan import CartanDatum, NotInOrbit
from qck.evaluator import (
    NegativeExponent,
    WeightMismatch,
    apply_e,
    evaluate_minor,
    extremal_fword,
    minor_value,
)
from qck.laurent import ONE, QLaurentScalar
from qck.seeds import MinorSpec

A2 = CartanDatum.named("A2")
A3 = CartanDatum.named("A3")


def test_extremal_word_two_steps():
    # u_{s1 s2 w2}: pair against w2 first (exponent 1), then s2 w2 (exponent 1)
    assert extremal_fword(A2, A2.fundamental_weight(2), (1, 2)) == ((1, 1), (2, 1))


def test_extremal_word_empty():
    assert extremal_fword(A2, A2.fundamental_weight(1), ()) == ()


def test_extremal_word_zero_exponent_collapses():
    # the first letter of (1,2,1) pairs to 0 on s2 s1 w1 and drops out
    assert extremal_fword(A2, A2.fundamental_weight(1), (1, 2, 1)) == ((2, 1), (1, 1))


def test_extremal_word_divided_power():
    lam = 2 * A2.fundamental_weight(1)
    assert extremal_fword(A2, lam, (1,)) == ((1, 2),)


def test_extremal_word_rejects_bad_word():
    lam = A2.fundamental_weight(1)
    with pytest.raises(NegativeExponent):
        extremal_fword(A2, A2.apply_word((1,), lam), (1,))


def test_apply_e_single_letter():
    lam = A2.fundamental_weight(1)
    state = {((1, 1),): ONE}
    out = apply_e(A2, lam, 1, state)
    assert out == {(): QLaurentScalar.q_integer(1)}


def test_apply_e_annihilates_highest_weight():
    lam = A2.fundamental_weight(1)
    assert apply_e(A2, lam, 1, {(): ONE}) == {}


def test_apply_e_commutes_past_other_letters():
    # e_1 through f_1 f_2 u_{w2}: only the f_1 letter matches, weight below
    # it is w2 - a2 with pairing 1
    lam = A2.fundamental_weight(2)
    state = {((1, 1), (2, 1)): ONE}
    out = apply_e(A2, lam, 1, state)
    assert out == {((2, 1),): QLaurentScalar.q_integer(1)}


def test_apply_e_divided_power_coefficient():
    # e f^(2) on a highest weight vector of pairing 2: coefficient [2-2+1] = [1]
    lam = 2 * A2.fundamental_weight(1)
    out = apply_e(A2, lam, 1, {((1, 2),): ONE})
    assert out == {((1, 1),): QLaurentScalar.q_integer(1)}
    out2 = apply_e(A2, lam, 1, out)
    assert out2 == {(): QLaurentScalar.q_integer(2)}


def test_minor_fixture_single_letter():
    lam = A2.fundamental_weight(1)
    spec = MinorSpec(A2.simple_reflection(1, lam), lam, lam)
    assert evaluate_minor(A2, spec, (1,)) == ONE


def test_minor_on_equal_weights_is_unit():
    lam = A2.fundamental_weight(2)
    spec = MinorSpec(lam, lam, lam)
    assert evaluate_minor(A2, spec, ()) == ONE


def test_minor_two_letter_tables():
    lam = A2.fundamental_weight(2)
    mu = A2.apply_word((1, 2), lam)
    spec = MinorSpec(mu, lam, lam)
    assert evaluate_minor(A2, spec, (2, 1)) == ONE
    assert evaluate_minor(A2, spec, (1, 2)).is_zero()


def test_minor_weight_mismatch_guard_and_internal_zero():
    lam = A2.fundamental_weight(2)
    mu = A2.apply_word((1, 2), lam)
    spec = MinorSpec(mu, lam, lam)
    with pytest.raises(WeightMismatch):
        evaluate_minor(A2, spec, (1, 1))
    # the unrestricted path vanishes on off-content words by itself
    assert minor_value(A2, lam, (1, 2), (), (1, 1)).is_zero()
    assert minor_value(A2, lam, (1, 2), (), (2,)).is_zero()


def test_minor_divided_power_value():
    # doubled fundamental weight: the one-column minor picks up [2]
    lam = 2 * A2.fundamental_weight(1)
    mu = A2.simple_reflection(1, lam)
    spec = MinorSpec(mu, lam, lam)
    assert evaluate_minor(A2, spec, (1, 1)) == QLaurentScalar.q_integer(2)


def test_minor_independent_of_reduced_word():
    from qck.shuffle import words_of_content

    for c, w0 in ((A2, (1, 2, 1)), (A3, (1, 2, 1, 3, 2, 1))):
        for i in c.index_set:
            lam = c.fundamental_weight(i)
            mu = c.apply_word(w0, lam)
            content = (lam - mu).alpha
            base = None
            for word in c.reduced_words_of(w0):
                vals = {nu: minor_value(c, lam, word, (), nu) for nu in words_of_content(c, content)}
                if base is None:
                    base = vals
                else:
                    assert vals == base


def test_minor_independent_of_zeta_word():
    # both raising words vary: zeta = s1 s3 s2 w2 has two reduced words
    from qck.shuffle import words_of_content

    c = A3
    lam = c.fundamental_weight(2)
    w_mu_canon = c.canonical_word((2, 1, 3, 2))
    mu = c.apply_word(w_mu_canon, lam)
    zeta = c.apply_word((1, 3, 2), lam)
    content = (zeta - mu).alpha
    tables = []
    for w_zeta in c.reduced_words_of((1, 3, 2)):
        for w_mu in c.reduced_words_of(w_mu_canon):
            tables.append(
                {nu: minor_value(c, lam, w_mu, w_zeta, nu) for nu in words_of_content(c, content)}
            )
    assert len(tables) > 2
    assert all(t == tables[0] for t in tables[1:])
    assert any(v for v in tables[0].values())


def test_minor_values_integral_a3():
    c = A3
    lam = c.fundamental_weight(2)
    mu = c.apply_word((1, 2, 1, 3, 2, 1), lam)
    spec = MinorSpec(mu, lam, lam)
    from qck.shuffle import words_of_content

    for nu in words_of_content(c, spec.content(c)):
        v = evaluate_minor(c, spec, nu)
        assert v.is_q_laurent()


def test_nonprecedent_pair_vanishes_everywhere():
    lam = A2.fundamental_weight(1)
    s1lam = A2.simple_reflection(1, lam)
    # (mu, zeta) = (lam, s1 lam) is not in the orbit order; the raw pairing
    # vanishes on every word of the right content
    assert minor_value(A2, lam, (), (1,), (1,)).is_zero()


def test_raising_word_not_in_orbit():
    spec = MinorSpec(A2.fundamental_weight(2), A2.fundamental_weight(1), A2.fundamental_weight(1))
    with pytest.raises(NotInOrbit):
        evaluate_minor(A2, spec, ())
