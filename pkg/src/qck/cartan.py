"""Symmetric Cartan data, formal weights, and Weyl group combinatorics.

Weights are formal pairs: integer coordinates over the fundamental weights
(phi) and over the simple roots (alpha), with no relation imposed between
the two blocks.  This is faithful for nondegenerate Cartan matrices and
conservative otherwise; every formula in the engine needs only the coroot
pairing <h_i, .> and the bilinear form against root-lattice elements, and
both are well defined on the formal pair.  Equality of weights is
structural equality of the pair; for full-rank types tests may compare
through pi_coordinates().

A word (j_1, ..., j_m) denotes the composition s_{j_1} ... s_{j_m}; acting
on a weight the last letter applies first, so prefixes of a fixed reduced
word act the way successive partial products do.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class UnknownIndex(ValueError):
    pass


class BothOutsideRootLattice(ValueError):
    """Pairing two non-root-lattice weights needs the inverse Cartan matrix."""


class NonReducedInput(ValueError):
    pass


class NotInOrbit(ValueError):
    pass


class PrecedenceViolation(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Formal weight: phi over fundamental weights, alpha over simple roots."""

    phi: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        if len(self.phi) != len(self.alpha):
            raise ValueError("phi and alpha blocks must have equal rank")

    @property
    def rank(self):
        return len(self.phi)

    def __add__(self, other):
        return Weight(
            tuple(a + b for a, b in zip(self.phi, other.phi)),
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
        )

    def __sub__(self, other):
        return Weight(
            tuple(a - b for a, b in zip(self.phi, other.phi)),
            tuple(a - b for a, b in zip(self.alpha, other.alpha)),
        )

    def __neg__(self):
        return Weight(tuple(-a for a in self.phi), tuple(-a for a in self.alpha))

    def __mul__(self, n: int):
        return Weight(tuple(n * a for a in self.phi), tuple(n * a for a in self.alpha))

    __rmul__ = __mul__

    def is_zero(self):
        return all(a == 0 for a in self.phi) and all(a == 0 for a in self.alpha)

    def is_root_lattice(self):
        return all(a == 0 for a in self.phi)

    def to_json(self):
        return {"phi": list(self.phi), "alpha": list(self.alpha)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(int(x) for x in obj["phi"]), tuple(int(x) for x in obj["alpha"]))

    def __repr__(self):
        parts = []
        for i, a in enumerate(self.phi):
            if a:
                parts.append(f"{'' if a == 1 else a}w{i + 1}")
        for i, a in enumerate(self.alpha):
            if a:
                parts.append(f"{'+' if a > 0 else '-'}{'' if abs(a) == 1 else abs(a)}a{i + 1}")
        return "".join(parts).lstrip("+") or "0"


NAMED_CARTAN = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    # center at node 2: edges 1-2, 2-3, 2-4
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
}


@dataclass(frozen=True)
class CartanDatum:
    """Symmetric generalized Cartan matrix over the index set 1..n."""

    gcm: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.gcm)
        for row in self.gcm:
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
        for i in range(n):
            if self.gcm[i][i] != 2:
                raise ValueError("diagonal Cartan entries must equal 2")
            for j in range(n):
                if self.gcm[i][j] != self.gcm[j][i]:
                    raise ValueError("Cartan matrix must be symmetric")
                if i != j and self.gcm[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")

    @classmethod
    def named(cls, name: str) -> "CartanDatum":
        try:
            rows = NAMED_CARTAN[name.upper()]
        except KeyError:
            raise ValueError(f"unknown Cartan name {name!r}; known: {sorted(NAMED_CARTAN)}")
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_matrix(cls, rows) -> "CartanDatum":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def rank(self):
        return len(self.gcm)

    @property
    def index_set(self):
        return tuple(range(1, self.rank + 1))

    def _pos(self, i: int) -> int:
        if not (1 <= i <= self.rank):
            raise UnknownIndex(f"index {i} not in 1..{self.rank}")
        return i - 1

    # -- basic weights

    def fundamental_weight(self, i: int) -> Weight:
        p = self._pos(i)
        return Weight(tuple(1 if k == p else 0 for k in range(self.rank)), (0,) * self.rank)

    def simple_root(self, i: int) -> Weight:
        p = self._pos(i)
        return Weight((0,) * self.rank, tuple(1 if k == p else 0 for k in range(self.rank)))

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank, (0,) * self.rank)

    def rho(self) -> Weight:
        return Weight((1,) * self.rank, (0,) * self.rank)

    # -- pairings

    def pairing_h(self, i: int, w: Weight) -> int:
        """<h_i, w> = phi_i + sum_j a_{i,j} alpha_j."""
        p = self._pos(i)
        return w.phi[p] + sum(self.gcm[p][j] * w.alpha[j] for j in range(self.rank))

    def bilinear(self, x: Weight, y: Weight) -> int:
        """(x, y) extended from (w_i, a_j) = delta_ij, (a_i, a_j) = gcm entries.

        At least one argument must lie in the root lattice.
        """
        if y.is_root_lattice():
            # (x, sum c_j a_j) = sum_j c_j <h_j, x> in the symmetric case
            return sum(c * self.pairing_h(j + 1, x) for j, c in enumerate(y.alpha) if c)
        if x.is_root_lattice():
            return sum(c * self.pairing_h(j + 1, y) for j, c in enumerate(x.alpha) if c)
        raise BothOutsideRootLattice(
            "bilinear form of two non-root-lattice weights is not defined here"
        )

    def pi_coordinates(self, w: Weight) -> tuple[int, ...]:
        """Coordinates of w over fundamental weights after expanding alpha.

        Only meaningful for full-rank Cartan matrices; used to compare formal
        pairs that coincide in P.
        """
        return tuple(
            w.phi[i] + sum(self.gcm[i][j] * w.alpha[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing_h(i, w) >= 0 for i in self.index_set)

    # -- Weyl action

    def simple_reflection(self, i: int, w: Weight) -> Weight:
        n = self.pairing_h(i, w)
        p = self._pos(i)
        alpha = list(w.alpha)
        alpha[p] -= n
        return Weight(w.phi, tuple(alpha))

    def apply_word(self, word, w: Weight) -> Weight:
        """Apply s_{j_1} ... s_{j_m} to w; the last letter acts first."""
        for j in reversed(tuple(word)):
            w = self.simple_reflection(j, w)
        return w

    # -- reduced words and Bruhat order

    def canonical_word(self, word) -> tuple[int, ...]:
        """Canonical reduced word of the element given by `word`.

        Works on the regular dominant weight rho: the element is recovered by
        repeatedly peeling the smallest index with <h_i, w(rho)> < 0, which
        is exactly the set of left descents.
        """
        cur = self.apply_word(word, self.rho())
        out = []
        while True:
            for i in self.index_set:
                if self.pairing_h(i, cur) < 0:
                    out.append(i)
                    cur = self.simple_reflection(i, cur)
                    break
            else:
                return tuple(out)

    def length(self, word) -> int:
        return len(self.canonical_word(word))

    def is_reduced(self, word) -> bool:
        return len(self.canonical_word(word)) == len(tuple(word))

    def words_equal(self, w1, w2) -> bool:
        return self.canonical_word(w1) == self.canonical_word(w2)

    def left_descents(self, word):
        cur = self.apply_word(word, self.rho())
        return [i for i in self.index_set if self.pairing_h(i, cur) < 0]

    def bruhat_leq(self, u, w) -> bool:
        """u <= w in Bruhat order; both words must be reduced."""
        u = tuple(u)
        w = tuple(w)
        if not self.is_reduced(u) or not self.is_reduced(w):
            raise NonReducedInput("bruhat_leq requires reduced words")
        return self._bruhat(self.canonical_word(u), self.canonical_word(w))

    @lru_cache(maxsize=None)
    def _bruhat(self, u, w) -> bool:
        if not w:
            return not u
        if len(u) > len(w):
            return False
        # standard recursion on a left descent s of w:
        # u <= w  iff  (su <= sw if su < u else u <= sw)
        s = w[0]
        sw = w[1:]
        su = self.canonical_word((s,) + u)
        if len(su) < len(u):
            return self._bruhat(su, sw)
        return self._bruhat(u, sw)

    # -- orbit raising and the minor order

    def raise_to_dominant(self, w: Weight):
        """Return (dominant representative, word) with w = word applied to it.

        Lowest-index negative pairing is chosen first, so the word is a
        deterministic minimal-length coset representative.
        """
        letters = []
        cur = w
        while True:
            for i in self.index_set:
                if self.pairing_h(i, cur) < 0:
                    letters.append(i)
                    cur = self.simple_reflection(i, cur)
                    break
            else:
                return cur, tuple(letters)

    def orbit_word(self, mu: Weight, top: Weight):
        """Minimal word with mu = apply_word(word, top); NotInOrbit otherwise."""
        dom, word = self.raise_to_dominant(mu)
        if dom != top:
            raise NotInOrbit(f"{mu} does not raise to {top}")
        return word

    def preceq(self, mu: Weight, zeta: Weight, top: Weight) -> bool:
        """The orbit order: mu precedes zeta iff w_zeta <= w_mu in Bruhat order."""
        if not self.is_dominant(top):
            raise ValueError("orbit representative must be dominant")
        w_mu = self.orbit_word(mu, top)
        w_zeta = self.orbit_word(zeta, top)
        return self._bruhat(w_zeta, w_mu)

    def weyl_orbit(self, w: Weight):
        """The finite orbit of w (explodes on non-finite types; test use)."""
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for i in self.index_set:
                    y = self.simple_reflection(i, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def weyl_elements(self):
        """All canonical reduced words of the (assumed finite) Weyl group."""
        seen = {(): self.rho()}
        frontier = [()]
        while frontier:
            nxt = []
            for word in frontier:
                for i in self.index_set:
                    cand = self.canonical_word(word + (i,))
                    if cand not in seen:
                        seen[cand] = None
                        nxt.append(cand)
            frontier = nxt
        return sorted(seen, key=lambda w: (len(w), w))

    def reduced_words_of(self, word):
        """All reduced words of the element of `word` (finite-type test use)."""
        word = self.canonical_word(word)

        def rec(w):
            if not w:
                return [()]
            out = []
            for i in self.left_descents(w):
                rest = self.canonical_word((i,) + w)
                out.extend((i,) + r for r in rec(rest))
            return out

        return rec(word)

    def to_json(self):
        return {"matrix": [list(r) for r in self.gcm]}

    @classmethod
    def from_json(cls, obj):
        return cls.from_matrix(obj["matrix"])
