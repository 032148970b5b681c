"""Initial quantum seed of the unipotent coordinate ring from a reduced word.

Given a symmetric Cartan datum and a reduced word (i_1, ..., i_r), this
module builds the standard initial seed: the two-rule quiver, the exchange
matrix B, the commutation matrix L with the orientation

    D(i,0) D(j,0) = q^(L[i][j]) D(j,0) D(i,0)   for i >= j,

the weight vector d_s = lambda_s - w_{i_s}, and the degree bookkeeping
(pair degrees, their symmetrized and halved companions, and the grading
shifts m_k, m'_k of the two exchange sequences).  The commutation
orientation is not trusted: qck.verifier measures it against the shuffle
realization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cartan import CartanDatum, NonReducedInput, PrecedenceViolation, Weight


class NonReducedWord(NonReducedInput):
    pass


class FrozenDirection(ValueError):
    pass


class NonIntegralShift(ArithmeticError):
    """An exchange grading shift came out non-integral: inconsistent seed."""


class HypothesisViolation(ValueError):
    pass


@dataclass(frozen=True)
class MinorSpec:
    """A quantum minor D(mu, zeta) inside the orbit of a dominant weight."""

    mu: Weight
    zeta: Weight
    dominant: Weight

    def validate(self, cartan: CartanDatum):
        if not cartan.preceq(self.mu, self.zeta, self.dominant):
            raise PrecedenceViolation(f"{self.mu} does not precede {self.zeta}")
        return self

    def weight(self) -> Weight:
        return self.mu - self.zeta

    def content(self, cartan: CartanDatum) -> tuple[int, ...]:
        """Coordinates of zeta - mu over the simple roots (all >= 0)."""
        diff = self.zeta - self.mu
        if not diff.is_root_lattice():
            raise ValueError("zeta - mu must lie in the root lattice")
        return diff.alpha


@dataclass(frozen=True)
class ReducedWordData:
    """The index combinatorics of a fixed reduced word."""

    cartan: CartanDatum
    word: tuple[int, ...]
    splus: tuple[int, ...] = field(init=False)
    sminus: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        r = len(self.word)
        splus, sminus = [], []
        for s in range(1, r + 1):
            nxt = [k for k in range(s + 1, r + 1) if self.word[k - 1] == self.word[s - 1]]
            prv = [k for k in range(1, s) if self.word[k - 1] == self.word[s - 1]]
            splus.append(min(nxt) if nxt else r + 1)
            sminus.append(max(prv) if prv else 0)
        object.__setattr__(self, "splus", tuple(splus))
        object.__setattr__(self, "sminus", tuple(sminus))

    @property
    def r(self):
        return len(self.word)

    def letter(self, s: int) -> int:
        return self.word[s - 1]

    def splus_of(self, s: int) -> int:
        return self.splus[s - 1]

    def sminus_of(self, s: int) -> int:
        return self.sminus[s - 1]

    def sminus_letter(self, s: int, j: int) -> int:
        """Largest k < s whose letter is j, else 0."""
        prv = [k for k in range(1, s) if self.word[k - 1] == j]
        return max(prv) if prv else 0

    def frozen_indices(self):
        return tuple(s for s in range(1, self.r + 1) if self.splus_of(s) == self.r + 1)

    def exchangeable_indices(self):
        frozen = set(self.frozen_indices())
        return tuple(s for s in range(1, self.r + 1) if s not in frozen)

    def prefix(self, k: int) -> tuple[int, ...]:
        return self.word[:k]

    def lambda_of(self, k: int) -> Weight:
        """The extremal weight of the k-th seed minor: prefix applied to w_{i_k}."""
        return self.cartan.apply_word(self.prefix(k), self.cartan.fundamental_weight(self.letter(k)))

    def seed_minor(self, s: int, t: int) -> MinorSpec:
        """The minor D(s,t); t = 0 takes the fundamental weight on the right."""
        if not (0 <= t <= s <= self.r):
            raise ValueError("need 0 <= t <= s <= r")
        if s == 0:
            w = self.cartan.fundamental_weight(self.letter(1))
            return MinorSpec(w, w, w)
        i = self.letter(s)
        if t > 0 and self.letter(t) != i:
            raise ValueError("D(s,t) needs matching letters i_s = i_t")
        top = self.cartan.fundamental_weight(i)
        zeta = top if t == 0 else self.lambda_of(t)
        return MinorSpec(self.lambda_of(s), zeta, top)


def build_word_data(cartan: CartanDatum, word) -> ReducedWordData:
    word = tuple(int(x) for x in word)
    for i in word:
        cartan._pos(i)  # raises UnknownIndex
    if not cartan.is_reduced(word):
        raise NonReducedWord(f"word {word} is not reduced")
    return ReducedWordData(cartan, word)


def build_quiver(rwd: ReducedWordData) -> Counter:
    """Arrow multiset over vertex pairs (s, t), 1-based.

    Ordinary arrows s -> t with multiplicity |a_{i_s, i_t}| when
    s < t < s_+ < t_+, horizontal arrows s -> s_- when s_- >= 1.
    """
    arrows: Counter = Counter()
    r = rwd.r
    a = rwd.cartan.gcm
    for s in range(1, r + 1):
        for t in range(s + 1, r + 1):
            if t < rwd.splus_of(s) < rwd.splus_of(t) <= r + 1:
                mult = abs(a[rwd.letter(s) - 1][rwd.letter(t) - 1])
                if mult:
                    arrows[(s, t)] += mult
        if rwd.sminus_of(s) >= 1:
            arrows[(s, rwd.sminus_of(s))] += 1
    return arrows


def btilde_from_quiver(arrows: Counter, r: int, exchangeable) -> list[list[int]]:
    """K x K_ex exchange matrix: b[i][j] = #(i -> j) - #(j -> i)."""
    cols = list(exchangeable)
    out = []
    for i in range(1, r + 1):
        row = []
        for j in cols:
            row.append(arrows.get((i, j), 0) - arrows.get((j, i), 0))
        out.append(row)
    return out


def d_vector(rwd: ReducedWordData) -> list[Weight]:
    """d_s = (prefix-extremal weight) - (fundamental weight at s)."""
    return [
        rwd.lambda_of(s) - rwd.cartan.fundamental_weight(rwd.letter(s))
        for s in range(1, rwd.r + 1)
    ]


def lambda_matrix(rwd: ReducedWordData) -> list[list[int]]:
    """Skew-symmetric commutation matrix of the seed minors D(s,0).

    For i >= j the entry is (lambda_i + w_{i_i}, lambda_j - w_{i_j}); the
    second factor is d_j, a root-lattice element, so the form is defined.
    """
    c = rwd.cartan
    r = rwd.r
    lam = [rwd.lambda_of(k) for k in range(1, r + 1)]
    fund = [c.fundamental_weight(rwd.letter(k)) for k in range(1, r + 1)]
    L = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i):
            val = c.bilinear(lam[i] + fund[i], lam[j] - fund[j])
            L[i][j] = val
            L[j][i] = -val
    return L


@dataclass(frozen=True)
class QuantumSeed:
    """Commutation matrix, exchange matrix, weight vector, frozen split.

    Matrices are 0-indexed lists internally; the public index set K is
    1-based to match the reduced-word positions.
    """

    cartan: CartanDatum
    L: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]  # K x K_ex, columns ordered by exchangeable()
    D: tuple[Weight, ...]
    frozen: tuple[int, ...]
    word: tuple[int, ...] | None = None

    @property
    def rank(self):
        return len(self.L)

    def indices(self):
        return tuple(range(1, self.rank + 1))

    def exchangeable(self):
        frozen = set(self.frozen)
        return tuple(k for k in self.indices() if k not in frozen)

    def is_exchangeable(self, k: int) -> bool:
        return k in self.exchangeable()

    def column(self, k: int) -> tuple[int, ...]:
        """The full K-column of B in exchange direction k (1-based)."""
        j = self.exchangeable().index(k)
        return tuple(self.B[i][j] for i in range(self.rank))

    def to_json(self):
        return {
            "cartan": self.cartan.to_json(),
            "word": list(self.word) if self.word is not None else None,
            "L": [list(r) for r in self.L],
            "B": [list(r) for r in self.B],
            "D": [w.to_json() for w in self.D],
            "frozen": list(self.frozen),
        }

    @classmethod
    def from_json(cls, obj):
        word = obj.get("word")
        return cls(
            cartan=CartanDatum.from_json(obj["cartan"]),
            L=tuple(tuple(int(x) for x in r) for r in obj["L"]),
            B=tuple(tuple(int(x) for x in r) for r in obj["B"]),
            D=tuple(Weight.from_json(w) for w in obj["D"]),
            frozen=tuple(int(x) for x in obj["frozen"]),
            word=tuple(int(x) for x in word) if word is not None else None,
        )


def build_seed(cartan: CartanDatum, word) -> QuantumSeed:
    """The initial quantum seed attached to a reduced word."""
    rwd = build_word_data(cartan, word)
    arrows = build_quiver(rwd)
    B = btilde_from_quiver(arrows, rwd.r, rwd.exchangeable_indices())
    L = lambda_matrix(rwd)
    return QuantumSeed(
        cartan=cartan,
        L=tuple(tuple(r) for r in L),
        B=tuple(tuple(r) for r in B),
        D=tuple(d_vector(rwd)),
        frozen=rwd.frozen_indices(),
        word=rwd.word,
    )


# -- seed conditions


def check_seed(seed: QuantumSeed) -> dict:
    """Pass/fail report for the three quantum-seed conditions.

    compatibility: L . B = 2 Id on exchangeable columns;
    parity: L[i][j] - (d_i, d_j) even;
    weight balance: sum_i B[i][k] d_i = 0 for exchangeable k.
    """
    c = seed.cartan
    r = seed.rank
    ex = seed.exchangeable()
    report = {"compatibility": True, "parity": True, "weight_balance": True, "failures": []}
    for j, k in enumerate(ex):
        for i in range(r):
            want = 2 if (i + 1) == k else 0
            got = sum(seed.L[i][t] * seed.B[t][j] for t in range(r))
            if got != want:
                report["compatibility"] = False
                report["failures"].append(
                    {"check": "compatibility", "row": i + 1, "col": k, "got": got, "want": want}
                )
    for i in range(r):
        for j in range(r):
            if (seed.L[i][j] - c.bilinear(seed.D[i], seed.D[j])) % 2 != 0:
                report["parity"] = False
                report["failures"].append({"check": "parity", "pair": [i + 1, j + 1]})
    for j, k in enumerate(ex):
        tot = c.zero_weight()
        for i in range(r):
            tot = tot + seed.B[i][j] * seed.D[i]
        if not tot.is_zero():
            report["weight_balance"] = False
            report["failures"].append({"check": "weight_balance", "col": k})
    report["pass"] = not report["failures"]
    return report


# -- degree ledger


def pair_degree(cartan: CartanDatum, outer, inner, lam: Weight, mu: Weight):
    """Degree data of the ordered minor pair from the length-additive patterns.

    The first minor is D(s's lam, t' lam) and the second D(s' mu, t't mu),
    where outer = (s', s) and inner = (t', t) are word pairs satisfying
    length additivity.  Returns a dict with the pair degree, both halved
    companions, and their symmetrized defect (0 exactly when the pair
    commutes, which the hypotheses force).
    """
    c = cartan
    if not (c.is_dominant(lam) and c.is_dominant(mu)):
        raise HypothesisViolation("lam and mu must be dominant")
    sp, s = (tuple(outer[0]), tuple(outer[1]))
    tp, t = (tuple(inner[0]), tuple(inner[1]))
    for a, b in ((sp, s), (tp, t)):
        if not (c.is_reduced(a) and c.is_reduced(b)):
            raise HypothesisViolation("factor words must be reduced")
        if c.length(a + b) != len(c.canonical_word(a)) + len(c.canonical_word(b)):
            raise HypothesisViolation("length additivity fails")
    m1_mu = c.apply_word(sp + s, lam)
    m1_zeta = c.apply_word(tp, lam)
    m2_mu = c.apply_word(sp, mu)
    m2_zeta = c.apply_word(tp + t, mu)
    wt1 = m1_mu - m1_zeta
    wt2 = m2_mu - m2_zeta
    deg = c.bilinear(m1_mu + m1_zeta, m2_zeta - m2_mu)
    if (c.bilinear(wt1, wt2) + deg) % 2 != 0:
        raise NonIntegralShift("halved pair degree is not an integer")
    tilde_12 = (c.bilinear(wt1, wt2) + deg) // 2
    # reverse-order degree from its own closed form
    tilde_21 = c.bilinear(m2_mu - m2_zeta, m1_mu)
    deg_21 = 2 * tilde_21 - c.bilinear(wt2, wt1)
    delta = (deg + deg_21) // 2
    return {
        "minor1": MinorSpec(m1_mu, m1_zeta, lam),
        "minor2": MinorSpec(m2_mu, m2_zeta, mu),
        "degree": deg,
        "tilde": tilde_12,
        "tilde_reversed": tilde_21,
        "delta": delta,
    }


def seed_pair_tilde(seed: QuantumSeed, i: int, j: int) -> int:
    """Halved degree of the ordered seed-minor pair (i, j), 1-based.

    The pair degree of (M_i, M_j) equals -L[i][j]; the halved companion is
    ((d_i, d_j) - L[i][j]) / 2 and is an integer by the parity condition.
    """
    c = seed.cartan
    num = c.bilinear(seed.D[i - 1], seed.D[j - 1]) - seed.L[i - 1][j - 1]
    if num % 2 != 0:
        raise NonIntegralShift("parity condition violated")
    return num // 2


def mutated_weight(seed: QuantumSeed, k: int) -> Weight:
    """mu_k(D)_k = -d_k + sum over positive column entries of b d_i."""
    if not seed.is_exchangeable(k):
        raise FrozenDirection(f"direction {k} is frozen")
    col = seed.column(k)
    out = -seed.D[k - 1]
    for i, b in enumerate(col):
        if b > 0:
            out = out + b * seed.D[i]
    return out


def grading_shift_mk(seed: QuantumSeed, k: int) -> tuple[int, int]:
    """The integer shifts (m_k, m'_k) of the two exchange sequences."""
    if not seed.is_exchangeable(k):
        raise FrozenDirection(f"direction {k} is frozen")
    c = seed.cartan
    xi = mutated_weight(seed, k)
    col = seed.column(k)
    base = c.bilinear(seed.D[k - 1], xi)
    neg = sum(seed.L[k - 1][i] * b for i, b in enumerate(col) if b < 0)
    pos = sum(seed.L[k - 1][i] * b for i, b in enumerate(col) if b > 0)
    two_mk = base + neg
    two_mk_prime = base + pos
    if two_mk % 2 != 0 or two_mk_prime % 2 != 0:
        raise NonIntegralShift(f"grading shifts at k={k} are not integers")
    return two_mk // 2, two_mk_prime // 2
