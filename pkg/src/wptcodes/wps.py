"""Weighted projective space descriptor and numerical semigroup arithmetic.

A ``WeightedSpace`` bundles a prime field with the weight vector
(w_0, ..., w_n) and the derived quantities

    d_i      = (q - 1) / gcd(q - 1, w_i)
    wtilde_i = w_i / gcd(q - 1, w_i)

d_i is the order of eta**w_i in GF(q)^*, the key invariant behind point
counts, vanishing ideals and dimension formulas.  The graded pieces of the
coordinate ring are counted here as well: ``dim_S_alpha`` is the number of
monomials of weighted degree alpha (the denumerant of alpha with respect to
the weights).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime
from .gf import PrimeField, make_field


@dataclass(frozen=True)
class WeightedSpace:
    """Weights (w_0, ..., w_n) over GF(q), with d_i and wtilde_i precomputed."""

    field: PrimeField
    weights: tuple[int, ...]
    d: tuple[int, ...]
    wtilde: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        """Dimension of the ambient space (one less than the weight count)."""
        return len(self.weights) - 1

    def __repr__(self) -> str:
        return f"WeightedSpace(q={self.q}, weights={self.weights})"


def make_space(q: int | PrimeField, weights) -> WeightedSpace:
    """Build a WeightedSpace, validating positivity and gcd(w_0,...,w_n) = 1."""
    field = q if isinstance(q, PrimeField) else make_field(q)
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    if any(w < 1 for w in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    g = 0
    for w in weights:
        g = gcd(g, w)
    if g != 1:
        raise NotCoprime(f"weights must have gcd 1, got {weights} with gcd {g}")
    qm1 = field.q - 1
    d = tuple(qm1 // gcd(qm1, w) for w in weights)
    wtilde = tuple(w // gcd(qm1, w) for w in weights)
    return WeightedSpace(field, weights, d, wtilde)


def dim_S_alpha(space: WeightedSpace, alpha: int) -> int:
    """Number of monomials of weighted degree alpha.

    Counts tuples (m_0, ..., m_n) of nonnegative integers with
    sum(m_i * w_i) == alpha by a coin-change style DP, one pass per
    variable.  Exact integers throughout; 0 for negative alpha.
    """
    if alpha < 0:
        return 0
    ways = [0] * (alpha + 1)
    ways[0] = 1
    for w in space.weights:
        for s in range(w, alpha + 1):
            ways[s] += ways[s - w]
    return ways[alpha]


def semigroup_contains(space: WeightedSpace, alpha: int) -> bool:
    """Whether alpha lies in the numerical semigroup generated by the weights."""
    return dim_S_alpha(space, alpha) > 0


def monomial_exponents(weights, alpha: int):
    """Yield all exponent tuples (m_0, ..., m_n) with sum(m_i * w_i) == alpha.

    Enumeration order: lexicographic in (m_n, ..., m_1), matching the
    standard-monomial ordering used by the code construction.
    """
    weights = tuple(weights)

    def descend(i: int, rem: int, suffix: tuple[int, ...]):
        if i == 0:
            if rem % weights[0] == 0:
                yield (rem // weights[0],) + suffix
            return
        w = weights[i]
        for m in range(rem // w + 1):
            yield from descend(i - 1, rem - m * w, (m,) + suffix)

    if alpha < 0:
        return
    yield from descend(len(weights) - 1, alpha, ())


def frobenius_number(generators) -> int:
    """Largest integer not representable over the given generators.

    Returns -1 when the semigroup is all of the naturals (some generator
    equals 1).  Representability is decided by DP up to min*max, which
    always exceeds the Frobenius number for coprime generators.
    """
    gens = sorted(int(g) for g in generators)
    if not gens or gens[0] < 1:
        raise ValueError(f"generators must be positive, got {generators}")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NotCoprime(f"generators {tuple(gens)} have gcd {g}")
    if gens[0] == 1:
        return -1
    bound = gens[0] * gens[-1]
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for s in range(1, bound + 1):
        reachable[s] = any(s >= x and reachable[s - x] for x in gens)
    for s in range(bound, -1, -1):
        if not reachable[s]:
            return s
    raise AssertionError("unreachable: 1 not a generator, so some gap exists")
