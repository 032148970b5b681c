"""Based quantum-torus arithmetic and quantum seed mutation.

Torus elements are finitely supported sums of based monomials X^a over
Z[v,v^-1] with the twisted product X^a X^b = v^{sum a_i b_j L_ij} X^{a+b};
the based normalization is baked into the basis, so monomial coefficients
of honest cluster monomials stay v-integral.

Mutation keeps every cluster variable expanded in the coordinates of the
initial torus.  The mutated variable is produced without any skew-field:
form the two-term exchange combination of current variables (all exponents
nonnegative), then cancel the known factor by exact based division.  An
inexact division is an error, never an approximation; the quantum Laurent
property is what makes the division close.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import QLaurentScalar
from .seeds import FrozenDirection, QuantumSeed, grading_shift_mk, mutated_weight


class DimensionMismatch(ValueError):
    pass


class ExchangeInconsistent(ArithmeticError):
    pass


class TorusElement:
    """Map from exponent vectors in Z^K to scalars; zero coefficients dropped."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        tms = {}
        for exp, coef in (terms or {}).items():
            if not isinstance(coef, QLaurentScalar):
                coef = QLaurentScalar.q_power(0, coef)
            if coef:
                exp = tuple(int(e) for e in exp)
                if len(exp) != rank:
                    raise DimensionMismatch(f"exponent {exp} has wrong rank")
                tms[exp] = coef
        self.terms = tms

    @classmethod
    def monomial(cls, rank: int, exp, coef=None):
        return cls(rank, {tuple(exp): coef if coef is not None else QLaurentScalar.one()})

    @classmethod
    def generator(cls, rank: int, k: int):
        """X_k, 1-based."""
        return cls.monomial(rank, tuple(1 if i == k - 1 else 0 for i in range(rank)))

    @classmethod
    def zero(cls, rank: int):
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int):
        return cls.monomial(rank, (0,) * rank)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TorusElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.rank != other.rank:
            raise DimensionMismatch("rank mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            tot = terms.get(e)
            tot = c if tot is None else tot + c
            if tot:
                terms[e] = tot
            else:
                terms.pop(e, None)
        return TorusElement(self.rank, terms)

    def __sub__(self, other):
        return self + other.scale(QLaurentScalar.q_power(0, -1))

    def scale(self, scalar: QLaurentScalar):
        return TorusElement(self.rank, {e: c * scalar for e, c in self.terms.items()})

    def v_shift(self, n: int):
        return TorusElement(self.rank, {e: c.v_shift(n) for e, c in self.terms.items()})

    def q_shift(self, n: int):
        return self.v_shift(2 * n)

    def denominator_support(self):
        """Indices (1-based) where some exponent is negative."""
        out = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x < 0:
                    out.add(i + 1)
        return sorted(out)

    def to_json(self):
        return [
            {"exp": list(e), "coef": c.pairs(unit="v")} for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, rank: int, obj):
        return cls(
            rank,
            {tuple(t["exp"]): QLaurentScalar.from_pairs(t["coef"], unit="v") for t in obj},
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*X^{list(e)}" for e, c in sorted(self.terms.items()))


def _twist(a, b, L) -> int:
    """v-exponent of X^a X^b = v^twist X^(a+b)."""
    tot = 0
    for i, ai in enumerate(a):
        if not ai:
            continue
        row = L[i]
        for j, bj in enumerate(b):
            if bj:
                tot += ai * bj * row[j]
    return tot


def torus_mul(x: TorusElement, y: TorusElement, L) -> TorusElement:
    if x.rank != y.rank or len(L) != x.rank:
        raise DimensionMismatch("element ranks and L size must agree")
    out: dict = {}
    for ea, ca in x.terms.items():
        for eb, cb in y.terms.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            add = (ca * cb).v_shift(_twist(ea, eb, L))
            tot = out.get(e)
            tot = add if tot is None else tot + add
            if tot:
                out[e] = tot
            else:
                out.pop(e, None)
    return TorusElement(x.rank, out)


def left_divide(x: TorusElement, y: TorusElement, L) -> TorusElement:
    """The unique Z with x * Z = y, by lex-leading-term peeling.

    Exact by construction: ExchangeInconsistent when no torus element works.
    """
    if x.is_zero():
        raise ZeroDivisionError("division by the zero torus element")
    lead = max(x.terms)
    clead = x.terms[lead]
    rem = y
    out = TorusElement.zero(x.rank)
    guard = 0
    while not rem.is_zero():
        guard += 1
        if guard > 100000:
            raise ExchangeInconsistent("based division does not terminate")
        m = max(rem.terms)
        b = tuple(mm - ll for mm, ll in zip(m, lead))
        num = rem.terms[m]
        den = clead.v_shift(_twist(lead, b, L))
        try:
            coef = num.divide_exact(den)
        except Exception as exc:
            raise ExchangeInconsistent(f"based division failed at {m}: {exc}") from exc
        piece = TorusElement.monomial(x.rank, b, coef)
        out = out + piece
        rem = rem - torus_mul(x, piece, L)
    return out


# -- matrix/weight mutation


def mutate_B(seed: QuantumSeed, k: int) -> tuple[tuple[int, ...], ...]:
    """Standard matrix mutation of the exchange matrix in direction k."""
    if not seed.is_exchangeable(k):
        raise FrozenDirection(f"direction {k} is frozen")
    ex = seed.exchangeable()
    kc = ex.index(k)
    r = seed.rank
    old = seed.B
    new = []
    for i in range(r):
        row = []
        for j, kj in enumerate(ex):
            if i == k - 1 or kj == k:
                row.append(-old[i][j])
            else:
                bik = old[i][kc]
                bkj = old[k - 1][j]
                extra = (1 if bik > 0 else -1) * max(0, bik * bkj) if bik else 0
                row.append(old[i][j] + extra)
        new.append(tuple(row))
    return tuple(new)


def _mutation_matrix(seed: QuantumSeed, k: int, eps: int):
    """Column-k elementary matrix E with E[k][k] = -1, E[i][k] = max(0, -eps*b_ik)."""
    ex = seed.exchangeable()
    kc = ex.index(k)
    r = seed.rank
    E = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r):
        if i == k - 1:
            E[i][k - 1] = -1
        else:
            E[i][k - 1] = max(0, -eps * seed.B[i][kc])
    return E


def mutate_L(seed: QuantumSeed, k: int, eps: int = 1) -> tuple[tuple[int, ...], ...]:
    """L' = E^T L E for the sign-eps elementary matrix; eps-independent on
    compatible pairs (asserted in tests)."""
    if not seed.is_exchangeable(k):
        raise FrozenDirection(f"direction {k} is frozen")
    E = _mutation_matrix(seed, k, eps)
    r = seed.rank
    L = seed.L
    LE = [[sum(L[i][t] * E[t][j] for t in range(r)) for j in range(r)] for i in range(r)]
    return tuple(
        tuple(sum(E[t][i] * LE[t][j] for t in range(r)) for j in range(r)) for i in range(r)
    )


def mutate_D(seed: QuantumSeed, k: int) -> tuple:
    if not seed.is_exchangeable(k):
        raise FrozenDirection(f"direction {k} is frozen")
    new = list(seed.D)
    new[k - 1] = mutated_weight(seed, k)
    return tuple(new)


def mutate_matrices(seed: QuantumSeed, k: int) -> QuantumSeed:
    return QuantumSeed(
        cartan=seed.cartan,
        L=mutate_L(seed, k),
        B=mutate_B(seed, k),
        D=mutate_D(seed, k),
        frozen=seed.frozen,
        word=seed.word,
    )


# -- mutation state with Laurent-expanded cluster variables


def cluster_monomial(state: "MutationState", exps) -> TorusElement:
    """Based monomial in the current variables, expanded in initial coordinates.

    For a >= 0 this is v^{sum_{i>j} a_i a_j Lcur_ij} x_1^{a_1} ... x_r^{a_r}.
    """
    seed = state.seed
    r = seed.rank
    exps = tuple(int(e) for e in exps)
    shift = 0
    for i in range(r):
        for j in range(i):
            shift += exps[i] * exps[j] * seed.L[i][j]
    out = TorusElement.one(r)
    for i in range(r):
        for _ in range(exps[i]):
            out = torus_mul(out, state.variables[i], state.L0)
    return out.v_shift(shift)


@dataclass
class MutationState:
    """Current seed plus cluster variables expanded over the initial torus.

    Single-writer: mutations go through mutate()/undo(); the variables and
    seed attributes are replaced wholesale, never edited in place.
    """

    seed: QuantumSeed
    L0: tuple[tuple[int, ...], ...]
    variables: tuple[TorusElement, ...]
    history: list

    @classmethod
    def initial(cls, seed: QuantumSeed) -> "MutationState":
        r = seed.rank
        return cls(
            seed=seed,
            L0=seed.L,
            variables=tuple(TorusElement.generator(r, k) for k in seed.indices()),
            history=[],
        )

    def exchange_variable(self, k: int) -> TorusElement:
        """The mutated variable at k, in initial coordinates.

        Both exchange monomials are formed with the known factor multiplied
        back in (so all exponents are nonnegative), then the factor is
        cancelled by exact based division; the product identity is
        re-checked explicitly afterwards.
        """
        seed = self.seed
        if not seed.is_exchangeable(k):
            raise FrozenDirection(f"direction {k} is frozen")
        col = seed.column(k)
        pos = tuple(max(b, 0) for b in col)
        neg = tuple(max(-b, 0) for b in col)
        a_pos = sum(seed.L[k - 1][i] * pos[i] for i in range(seed.rank))
        a_neg = sum(seed.L[k - 1][i] * neg[i] for i in range(seed.rank))
        y = cluster_monomial(self, pos).v_shift(a_pos) + cluster_monomial(self, neg).v_shift(a_neg)
        xk = self.variables[k - 1]
        xk_new = left_divide(xk, y, self.L0)
        if torus_mul(xk, xk_new, self.L0) != y:
            raise ExchangeInconsistent("exchange product check failed")
        return xk_new

    def mutate(self, k: int) -> "MutationState":
        """Mutate in direction k, returning a new state; history is carried."""
        xk_new = self.exchange_variable(k)
        mk, mk_prime = grading_shift_mk(self.seed, k)
        new_seed = mutate_matrices(self.seed, k)
        variables = list(self.variables)
        variables[k - 1] = xk_new
        return MutationState(
            seed=new_seed,
            L0=self.L0,
            variables=tuple(variables),
            history=self.history + [{"k": k, "m_k": mk, "m_k_prime": mk_prime}],
        )

    def undo(self) -> "MutationState":
        if not self.history:
            raise ValueError("nothing to undo")
        k = self.history[-1]["k"]
        rolled = self.mutate(k)
        return MutationState(
            seed=rolled.seed, L0=self.L0, variables=rolled.variables, history=self.history[:-1]
        )

    def check_q_commutation(self) -> bool:
        """Current variables must q-commute with exponents given by current L."""
        L = self.seed.L
        r = self.seed.rank
        for i in range(r):
            for j in range(i):
                xi, xj = self.variables[i], self.variables[j]
                lhs = torus_mul(xi, xj, self.L0)
                rhs = torus_mul(xj, xi, self.L0).q_shift(L[i][j])
                if lhs != rhs:
                    return False
        return True


def mutate_seed(state: MutationState, k: int) -> MutationState:
    return state.mutate(k)
