"""Hilbert function of the degenerate torus and the a-invariants.

The vanishing ideal is a complete intersection of binomials of weighted
degrees alpha_i = d_i * w_i, so its Koszul resolution turns the Hilbert
function into an inclusion-exclusion over the 2^n subsets of generators:

    H(alpha) = sum over I of (-1)^|I| * dim S_(alpha - alpha_I)

with alpha_I the sum of the generator degrees indexed by I.  The value
stabilizes at the point count exactly beyond the a-invariant

    a = (d_1 - 1) w_1 + ... + (d_n - 1) w_n - w_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionFailed
from .wps import WeightedSpace, dim_S_alpha, frobenius_number, semigroup_contains


@dataclass(frozen=True)
class HilbertProfile:
    """Generator degrees and a-invariant of a degenerate torus."""

    space: WeightedSpace
    degrees: tuple[int, ...]
    a_invariant: int


def _require_divides(space: WeightedSpace) -> None:
    if (space.q - 1) % space.weights[0] != 0:
        raise PreconditionFailed(
            f"leading weight {space.weights[0]} must divide q-1={space.q - 1}"
        )


def profile(space: WeightedSpace) -> HilbertProfile:
    _require_divides(space)
    degrees = tuple(space.d[i] * space.weights[i] for i in range(1, space.n + 1))
    a = sum((space.d[i] - 1) * space.weights[i] for i in range(1, space.n + 1))
    return HilbertProfile(space, degrees, a - space.weights[0])


def a_invariant(space: WeightedSpace) -> int:
    """(d_1 - 1) w_1 + ... + (d_n - 1) w_n - w_0."""
    return profile(space).a_invariant


def hilbert_function(space: WeightedSpace, alpha: int) -> int:
    """Koszul inclusion-exclusion over subsets of the generator degrees.

    Equals the dimension of the degree-alpha evaluation code on the
    degenerate torus; returns 0 for alpha outside the weight semigroup.
    """
    prof = profile(space)
    total = 0
    for s in range(space.n + 1):
        for subset in combinations(prof.degrees, s):
            total += (-1) ** s * dim_S_alpha(space, alpha - sum(subset))
    return total


def hilbert_numerator(space: WeightedSpace) -> dict[int, int]:
    """Coefficients (degree -> coeff) of the Hilbert series numerator,
    sum over subsets of (-1)^|I| t^(alpha_I).  Debugging aid only."""
    prof = profile(space)
    coeffs: dict[int, int] = {}
    for s in range(space.n + 1):
        for subset in combinations(prof.degrees, s):
            deg = sum(subset)
            coeffs[deg] = coeffs.get(deg, 0) + (-1) ** s
    return {d: c for d, c in sorted(coeffs.items()) if c != 0}


def in_regularity(space: WeightedSpace, alpha: int) -> bool:
    """Whether the code at degree alpha is already trivial (dimension equals
    length): alpha must exceed the a-invariant and lie in the semigroup.

    The threshold identity is established for leading weight 1; for larger
    leading weights dividing q - 1 the same rule is applied unchanged.
    """
    prof = profile(space)
    return alpha >= prof.a_invariant + 1 and semigroup_contains(space, alpha)


def a_invariant_full_torus(space: WeightedSpace) -> int:
    """a-invariant of the full torus: (q-2) * (w_0 + ... + w_n + g) + g,
    where g is the Frobenius number of the weight semigroup."""
    g = frobenius_number(space.weights)
    return (space.q - 2) * (sum(space.weights) + g) + g
