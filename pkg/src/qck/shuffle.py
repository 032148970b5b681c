"""Weight-graded functionals on monomial words: the coordinate-ring model.

An element is a functional on the degree-beta part of the free algebra on
the index set, stored as its value table on words of content beta.  The
product dualizes the twisted coproduct

    D(e_i) = e_i (x) 1 + 1 (x) e_i,
    (x1 (x) x2)(y1 (x) y2) = q^{-(wt x2, wt y1)} (x1 y1 (x) x2 y2),

so that (psi . theta)(x) = sum theta(x_(1)) psi(x_(2)).  Which tensor slot
feeds which factor, and whether the generator actions append or prepend a
letter, cannot be read off the indexing alone; both choices live behind
set_convention() and the deciding two-letter product fixture keeps the
default honest (see tests).

Minor tables are produced by the evaluator and cached; they are exactly
the value tables of the unipotent quantum minors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .cartan import CartanDatum, PrecedenceViolation, Weight
from .evaluator import evaluate_minor
from .laurent import ONE, QLaurentScalar
from .seeds import MinorSpec

# 'theta_left': theta eats the left tensor factor
_CONVENTION = "theta_left"


def set_convention(name: str):
    """Switch the word-to-operator convention; returns the previous one."""
    global _CONVENTION
    if name not in ("theta_left", "psi_left"):
        raise ValueError("convention must be 'theta_left' or 'psi_left'")
    prev = _CONVENTION
    _CONVENTION = name
    return prev


def get_convention() -> str:
    return _CONVENTION


class ZeroElement(ValueError):
    pass


class ShuffleElement:
    """Functional of fixed content beta with values in Z[q,q^-1]."""

    __slots__ = ("cartan", "beta", "values")

    def __init__(self, cartan: CartanDatum, beta, values=None):
        self.cartan = cartan
        self.beta = tuple(int(x) for x in beta)
        vals = {}
        for word, coef in (values or {}).items():
            if not isinstance(coef, QLaurentScalar):
                coef = QLaurentScalar.q_power(0, coef)
            if coef:
                vals[tuple(word)] = coef
        self.values = vals
        for word in vals:
            if self._content(word) != self.beta:
                raise ValueError(f"word {word} does not have content {self.beta}")

    def _content(self, word):
        counts = [0] * self.cartan.rank
        for letter in word:
            counts[self.cartan._pos(letter)] += 1
        return tuple(counts)

    # -- basic structure

    @classmethod
    def unit(cls, cartan: CartanDatum):
        return cls(cartan, (0,) * cartan.rank, {(): ONE})

    def is_zero(self):
        return not self.values

    def weight(self) -> Weight:
        """wt = -beta as a root-lattice weight."""
        return Weight((0,) * self.cartan.rank, tuple(-b for b in self.beta))

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        if not self.values and not other.values:
            return True
        return self.beta == other.beta and self.values == other.values

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.beta != self.beta:
            raise ValueError("cannot add functionals of different contents")
        vals = dict(self.values)
        for w, c in other.values.items():
            tot = vals.get(w)
            tot = c if tot is None else tot + c
            if tot:
                vals[w] = tot
            else:
                vals.pop(w, None)
        return ShuffleElement(self.cartan, self.beta, vals)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        if isinstance(scalar, int):
            scalar = QLaurentScalar.q_power(0, scalar)
        return ShuffleElement(
            self.cartan, self.beta, {w: c * scalar for w, c in self.values.items()}
        )

    __rmul__ = __mul__

    def q_shift(self, n):
        return ShuffleElement(
            self.cartan, self.beta, {w: c.q_shift(n) for w, c in self.values.items()}
        )

    def bar(self):
        """q -> q^-1 on values; monomial words are bar-fixed."""
        return ShuffleElement(self.cartan, self.beta, {w: c.bar() for w, c in self.values.items()})

    def is_bar_fixed(self):
        return all(c == c.bar() for c in self.values.values())

    def value(self, word) -> QLaurentScalar:
        return self.values.get(tuple(word), QLaurentScalar.zero())

    def __repr__(self):
        if not self.values:
            return "ShuffleElement(0)"
        items = ", ".join(f"{w}: {c}" for w, c in sorted(self.values.items()))
        return f"ShuffleElement({items})"

    def to_json(self):
        return {
            "beta": list(self.beta),
            "values": [
                {"word": list(w), "coef": c.pairs(unit="q")} for w, c in sorted(self.values.items())
            ],
        }

    @classmethod
    def from_json(cls, cartan: CartanDatum, obj):
        vals = {
            tuple(entry["word"]): QLaurentScalar.from_pairs(entry["coef"], unit="q")
            for entry in obj["values"]
        }
        return cls(cartan, tuple(obj["beta"]), vals)

    def rescaled_convention(self):
        """The image under x -> q^{-(beta,beta)/2} x, the alternate-product
        normalization used elsewhere in the literature.  Documented transform
        only; nothing in the engine consumes it."""
        c = self.cartan
        beta_wt = Weight((0,) * c.rank, self.beta)
        n = c.bilinear(beta_wt, beta_wt)
        return ShuffleElement(
            self.cartan, self.beta, {w: v.v_shift(-n) for w, v in self.values.items()}
        )


def delta_n_expand(cartan: CartanDatum, nu):
    """All splittings of the word nu under the twisted coproduct.

    Returns (left_subword, right_subword, q_power) triples, one per subset
    of positions assigned to the left tensor factor; the power accumulates
    -(alpha_a, alpha_b) over pairs where a right-assigned letter precedes a
    left-assigned one.
    """
    nu = tuple(nu)
    gcm = cartan.gcm
    out = []
    n = len(nu)
    for mask in range(1 << n):
        left, right, power = [], [], 0
        for p in range(n):
            if mask >> p & 1:
                for j in right:
                    power -= gcm[j - 1][nu[p] - 1]
                left.append(nu[p])
            else:
                right.append(nu[p])
        out.append((tuple(left), tuple(right), power))
    return out


def _merges(cartan, wl, wr):
    """Interleavings of wl (left factor) into wr with accumulated q-powers."""
    gcm = cartan.gcm
    out = []

    def rec(i, j, word, power):
        if i == len(wl) and j == len(wr):
            out.append((word, power))
            return
        if i < len(wl):
            # placing the next left letter after the consumed right prefix
            p = power
            for t in range(j):
                p -= gcm[wr[t] - 1][wl[i] - 1]
            rec(i + 1, j, word + (wl[i],), p)
        if j < len(wr):
            rec(i, j + 1, word + (wr[j],), power)

    rec(0, 0, (), 0)
    return out


def multiply(psi: ShuffleElement, theta: ShuffleElement) -> ShuffleElement:
    """The ring product psi . theta."""
    cartan = psi.cartan
    beta = tuple(a + b for a, b in zip(psi.beta, theta.beta))
    vals: dict = {}
    if _CONVENTION == "theta_left":
        left_elt, right_elt = theta, psi
    else:
        left_elt, right_elt = psi, theta
    for wl, cl in left_elt.values.items():
        for wr, cr in right_elt.values.items():
            coef = cl * cr
            for word, power in _merges(cartan, wl, wr):
                add = coef.v_shift(2 * power)
                tot = vals.get(word)
                tot = add if tot is None else tot + add
                if tot:
                    vals[word] = tot
                else:
                    vals.pop(word, None)
    return ShuffleElement(cartan, beta, vals)


def product(*elts: ShuffleElement) -> ShuffleElement:
    out = elts[0]
    for e in elts[1:]:
        out = multiply(out, e)
    return out


# -- generator actions


def e_action(i: int, psi: ShuffleElement) -> ShuffleElement:
    """Left action of the i-th generator; drops the content by alpha_i."""
    cartan = psi.cartan
    p = cartan._pos(i)
    if psi.beta[p] == 0:
        return ShuffleElement(cartan, tuple(0 for _ in psi.beta), {})
    beta = tuple(b - (1 if k == p else 0) for k, b in enumerate(psi.beta))
    vals = {}
    for word in _all_words(cartan, beta):
        child = word + (i,) if _CONVENTION == "theta_left" else (i,) + word
        c = psi.values.get(child)
        if c:
            vals[word] = c
    return ShuffleElement(cartan, beta, vals)


def e_star_action(i: int, psi: ShuffleElement) -> ShuffleElement:
    """Right action of the i-th generator."""
    cartan = psi.cartan
    p = cartan._pos(i)
    if psi.beta[p] == 0:
        return ShuffleElement(cartan, tuple(0 for _ in psi.beta), {})
    beta = tuple(b - (1 if k == p else 0) for k, b in enumerate(psi.beta))
    vals = {}
    for word in _all_words(cartan, beta):
        child = (i,) + word if _CONVENTION == "theta_left" else word + (i,)
        c = psi.values.get(child)
        if c:
            vals[word] = c
    return ShuffleElement(cartan, beta, vals)


def e_divided(i: int, n: int, psi: ShuffleElement) -> ShuffleElement:
    """The n-th divided power of the left action, exactly."""
    out = psi
    for _ in range(n):
        out = e_action(i, out)
    fact = QLaurentScalar.q_factorial(n)
    return ShuffleElement(
        out.cartan, out.beta, {w: c.divide_exact(fact) for w, c in out.values.items()}
    )


def epsilon(i: int, psi: ShuffleElement) -> int:
    """Largest n with the n-fold left action nonzero."""
    if psi.is_zero():
        raise ZeroElement("epsilon of the zero functional is undefined")
    n = 0
    cur = psi
    while True:
        cur = e_action(i, cur)
        if cur.is_zero():
            return n
        n += 1


def epsilon_star(i: int, psi: ShuffleElement) -> int:
    if psi.is_zero():
        raise ZeroElement("epsilon* of the zero functional is undefined")
    n = 0
    cur = psi
    while True:
        cur = e_star_action(i, cur)
        if cur.is_zero():
            return n
        n += 1


@lru_cache(maxsize=None)
def _all_words(cartan: CartanDatum, beta) -> tuple:
    """All words with the given content, as distinct permutations."""
    letters = []
    for p, b in enumerate(beta):
        letters.extend([p + 1] * b)
    return tuple(sorted(set(permutations(letters))))


def words_of_content(cartan: CartanDatum, beta):
    return _all_words(cartan, tuple(beta))


# -- minors


@lru_cache(maxsize=None)
def _minor_element_cached(cartan: CartanDatum, mu, zeta, dominant) -> ShuffleElement:
    spec = MinorSpec(mu, zeta, dominant)
    content = spec.content(cartan)
    vals = {}
    for word in _all_words(cartan, content):
        v = evaluate_minor(cartan, spec, word)
        if v:
            vals[word] = v
    return ShuffleElement(cartan, content, vals)


def minor_element(cartan: CartanDatum, spec: MinorSpec) -> ShuffleElement:
    """Tabulate the minor over all words of its content; nonzero by theory."""
    if not cartan.preceq(spec.mu, spec.zeta, spec.dominant):
        raise PrecedenceViolation(f"{spec.mu} does not precede {spec.zeta} in the orbit order")
    return _minor_element_cached(cartan, spec.mu, spec.zeta, spec.dominant)


def seed_minor_element(rwd, s: int, t: int = 0) -> ShuffleElement:
    spec = rwd.seed_minor(s, t)
    if spec.mu == spec.zeta:
        return ShuffleElement.unit(rwd.cartan)
    return minor_element(rwd.cartan, spec)
