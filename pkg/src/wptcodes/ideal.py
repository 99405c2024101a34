"""Binomial generators of the vanishing ideal and the complete-intersection
certificate.

The vanishing ideal of the degenerate torus is generated by the n binomials

    F_i = x_i^(d_i) - x_0^(d_0 * wtilde_i),    i = 1, ..., n

whenever w_0 divides q - 1.  Binomials are kept as pairs of exponent
vectors; only evaluation at points is ever needed, so no general polynomial
arithmetic lives here.  ``is_mixed`` / ``is_dominating`` implement the
matrix criterion certifying that a lattice basis generates a complete
intersection: every column of a mixed matrix has entries of both signs, and
a dominating matrix has no square mixed submatrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import PreconditionFailed, TooLarge
from .torus import PointSet
from .wps import WeightedSpace

# Rows of small integer matrices; shape checked where it matters.
IntMatrix = list[list[int]]

DOMINATING_BUDGET = 1 << 20


def _monomial_str(exponents) -> str:
    parts = []
    for i, e in enumerate(exponents):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Binomial:
    """Difference of two monomials, stored as exponent vectors."""

    lead: tuple[int, ...]
    trail: tuple[int, ...]

    def weighted_degree(self, weights) -> int:
        lhs = sum(m * w for m, w in zip(self.lead, weights))
        rhs = sum(m * w for m, w in zip(self.trail, weights))
        if lhs != rhs:
            raise ValueError(f"binomial {self} is not homogeneous: {lhs} != {rhs}")
        return lhs

    def evaluate(self, point, q: int) -> int:
        lhs = 1
        rhs = 1
        for p, a, b in zip(point, self.lead, self.trail):
            if a:
                lhs = lhs * pow(p, a, q) % q
            if b:
                rhs = rhs * pow(p, b, q) % q
        return (lhs - rhs) % q

    def as_json(self) -> dict:
        return {"lead": list(self.lead), "trail": list(self.trail)}

    def __str__(self) -> str:
        return f"{_monomial_str(self.lead)} - {_monomial_str(self.trail)}"


def _require_divides(space: WeightedSpace) -> None:
    if (space.q - 1) % space.weights[0] != 0:
        raise PreconditionFailed(
            f"leading weight {space.weights[0]} must divide q-1={space.q - 1}"
        )


def vanishing_ideal_generators(space: WeightedSpace) -> list[Binomial]:
    """The n binomials x_i^(d_i) - x_0^(d_0 * wtilde_i) cutting out the
    degenerate torus.  Each is homogeneous of weighted degree d_i * w_i."""
    _require_divides(space)
    nvars = space.n + 1
    gens = []
    for i in range(1, nvars):
        lead = [0] * nvars
        lead[i] = space.d[i]
        trail = [0] * nvars
        trail[0] = space.d[0] * space.wtilde[i]
        b = Binomial(tuple(lead), tuple(trail))
        b.weighted_degree(space.weights)  # homogeneity sanity check
        gens.append(b)
    return gens


def verify_vanishing(gens, pts: PointSet) -> bool:
    """True iff every generator evaluates to 0 at every point."""
    q = pts.space.q
    return all(g.evaluate(p, q) == 0 for g in gens for p in pts.points)


def is_mixed(m: IntMatrix) -> bool:
    """Every column holds at least one positive and one negative entry."""
    if not m:
        return True
    ncols = len(m[0])
    for c in range(ncols):
        col = [row[c] for row in m]
        if not (any(x > 0 for x in col) and any(x < 0 for x in col)):
            return False
    return True


def is_dominating(m: IntMatrix, budget: int = DOMINATING_BUDGET) -> bool:
    """No square submatrix (row subset x equal-size column subset) is mixed.

    Exhaustive over subsets; intended for the (n+1) x n lattice bases that
    arise here.  Raises TooLarge when the subset-pair count exceeds budget.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    total = sum(comb(nrows, k) * comb(ncols, k) for k in range(1, min(nrows, ncols) + 1))
    if total > budget:
        raise TooLarge(f"{total} square submatrices exceed budget {budget}")
    for k in range(1, min(nrows, ncols) + 1):
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                if is_mixed([[m[r][c] for c in cols] for r in rows]):
                    return False
    return True


def lattice_basis(space: WeightedSpace) -> IntMatrix:
    """(n+1) x n matrix whose columns (-wtilde_i, e_i) span the relation
    lattice of the degenerate torus.  Always mixed dominating."""
    _require_divides(space)
    n = space.n
    rows = [[-space.wtilde[i] for i in range(1, n + 1)]]
    for i in range(1, n + 1):
        rows.append([1 if j == i else 0 for j in range(1, n + 1)])
    return rows
