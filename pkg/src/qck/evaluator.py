"""Normal-ordering evaluator for minor values in a highest weight module.

A minor value is the pairing (u_zeta, e_nu u_mu) inside V(lam), computed by
commuting each e generator through an explicit word of divided f-powers
applied to the highest weight vector.  States are stored as finitely
supported sums of f-words; the words may be linearly dependent as module
elements, which is harmless because only the coefficient of the empty word
(the u_lam component) is ever read off, and any nonempty f-word pairs to
zero against u_lam by weight.

The single commutation rule, on a vector of weight wt:

    e_i f_i^(a) = f_i^(a) e_i + [<h_i, wt> - a + 1]_q f_i^(a-1),

keeps every coefficient in Z[q,q^-1].  The divided e-powers mirroring the
raising word contribute one global 1/([c_1]! ... [c_m]!) factor which is
divided out exactly at the very end; the result must land in Z[q,q^-1]
(its failure signals an evaluator bug, never a rounding problem).
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import CartanDatum, NotInOrbit, Weight
from .laurent import ONE, NonLaurentResult, QLaurentScalar
from .seeds import MinorSpec


class NegativeExponent(ValueError):
    """The raising word was not reduced for the given dominant weight."""


class WeightMismatch(ValueError):
    pass


# An f-word is a tuple of (letter, multiplicity) pairs, leftmost applied
# last; an f-state maps f-words to scalars.


def extremal_fword(cartan: CartanDatum, lam: Weight, word) -> tuple[tuple[int, int], ...]:
    """Divided-power f-word sending u_lam to the extremal vector u_{w lam}.

    Letters are consumed from the end of `word` (the first reflection to
    act), pairing each against the partial weight; zero exponents drop out.
    """
    cur = lam
    exps = []
    for j in reversed(tuple(word)):
        c = cartan.pairing_h(j, cur)
        if c < 0:
            raise NegativeExponent(f"letter {j} pairs to {c} < 0: word not reduced for weight")
        exps.append((j, c))
        cur = cartan.simple_reflection(j, cur)
    exps.reverse()
    return tuple((j, c) for j, c in exps if c > 0)


def apply_e(cartan: CartanDatum, lam: Weight, i: int, state: dict) -> dict:
    """One e_i through every term of an f-state."""
    out: dict = {}
    alpha = {j: cartan.simple_root(j) for j in cartan.index_set}
    for word, coef in state.items():
        # weight below each position: suffix of the word applied to u_lam
        below = []
        cur = lam
        for j, m in reversed(word):
            below.append(cur)
            cur = cur - m * alpha[j]
        below.reverse()
        for p, (j, m) in enumerate(word):
            if j != i:
                continue
            n = cartan.pairing_h(i, below[p]) - m + 1
            q_int = QLaurentScalar.q_integer(n)
            if not q_int:
                continue
            if m == 1:
                new_word = word[:p] + word[p + 1 :]
            else:
                new_word = word[:p] + ((j, m - 1),) + word[p + 1 :]
            add = coef * q_int
            prev = out.get(new_word)
            tot = add if prev is None else prev + add
            if tot:
                out[new_word] = tot
            else:
                out.pop(new_word, None)
    return out


def _raising_word(cartan: CartanDatum, w: Weight, top: Weight):
    dom, word = cartan.raise_to_dominant(w)
    if dom != top:
        raise NotInOrbit(f"{w} does not raise to {top}")
    return word


@lru_cache(maxsize=None)
def _minor_value_cached(cartan: CartanDatum, lam: Weight, w_mu, w_zeta, nu) -> QLaurentScalar:
    f_mu = extremal_fword(cartan, lam, w_mu)
    f_zeta = extremal_fword(cartan, lam, w_zeta)
    state = {f_mu: ONE}
    # e_nu acts rightmost-first
    for letter in reversed(nu):
        state = apply_e(cartan, lam, letter, state)
        if not state:
            return QLaurentScalar.zero()
    # the mirror of the raising word: the anti-automorphism reverses the
    # factor order, so the first f-letter's mirror e-power acts first;
    # powers are applied plain, pooling divided-power factorials at the end
    denom = ONE
    for j, c in f_zeta:
        denom = denom * QLaurentScalar.q_factorial(c)
        for _ in range(c):
            state = apply_e(cartan, lam, j, state)
            if not state:
                return QLaurentScalar.zero()
    val = state.get((), QLaurentScalar.zero())
    if not val:
        return QLaurentScalar.zero()
    return val.divide_exact(denom)


def minor_value(cartan: CartanDatum, lam: Weight, w_mu, w_zeta, nu) -> QLaurentScalar:
    """(u_{zeta}, e_nu u_{mu}) with mu, zeta given by explicit raising words.

    No weight precondition: off-weight words come out zero naturally.
    """
    return _minor_value_cached(cartan, lam, tuple(w_mu), tuple(w_zeta), tuple(nu))


def evaluate_minor(cartan: CartanDatum, spec: MinorSpec, nu) -> QLaurentScalar:
    """The value of the minor on the word nu, an element of Z[q,q^-1]."""
    nu = tuple(nu)
    w_mu = _raising_word(cartan, spec.mu, spec.dominant)
    w_zeta = _raising_word(cartan, spec.zeta, spec.dominant)
    content = spec.content(cartan)
    counts = [0] * cartan.rank
    for letter in nu:
        counts[cartan._pos(letter)] += 1
    if tuple(counts) != tuple(content):
        raise WeightMismatch(f"word {nu} does not have content {content}")
    val = minor_value(cartan, spec.dominant, w_mu, w_zeta, nu)
    if not val.is_q_laurent():
        raise NonLaurentResult(f"minor value {val} not in Z[q,q^-1]")
    return val
