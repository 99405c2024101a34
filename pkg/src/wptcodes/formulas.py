"""Closed-form parameter formulas for codes on degenerate tori.

For a plane with weights (1, 1, a) both the dimension and the minimum
distance have explicit piecewise formulas in alpha; for a general plane
(1, w1, w2) the distance is exact in the upper two ranges of alpha and
bounded above by d2 * (d1 - floor(alpha / w1)) below them.  The adjacent
branch conditions overlap at alpha = q - 2 by design; branches are tried
first-match-wins and their agreement on the seam is assert-checked.

All half-integer intermediates (the a/2 terms) cancel over the integers:
mu*(mu+1) and k*(k+1) are even, so plain integer division is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .code import CodeSummary
from .errors import OutOfRange, UnsupportedWeight
from .torus import enumerate_degenerate_torus
from .wps import WeightedSpace


def dimension_nested_sum(space: WeightedSpace, alpha: int) -> int:
    """Dimension of the degree-alpha code as the nested sum over exponents
    m_n, ..., m_1 bounded by min(floor(rem / w_i), d_i - 1); the leading
    exponent m_0 soaks up the remainder since w_0 = 1."""
    if space.weights[0] != 1:
        raise UnsupportedWeight(
            f"nested-sum dimension needs leading weight 1, got {space.weights[0]}"
        )
    if alpha < 0:
        return 0

    def descend(i: int, rem: int) -> int:
        if i == 0:
            return 1
        w = space.weights[i]
        top = min(rem // w, space.d[i] - 1)
        return sum(descend(i - 1, rem - m * w) for m in range(top + 1))

    return descend(space.n, alpha)


def code_length(space: WeightedSpace) -> int:
    """Number of points of the degenerate torus: d_1 * ... * d_n."""
    return prod(space.d[1:])


# ---------------------------------------------------------------------------
# weights (1, 1, a)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class P11aContext:
    """Derived quantities for the plane with weights (1, 1, a)."""

    q: int
    a: int
    alpha: int

    @property
    def d2(self) -> int:
        return (self.q - 1) // gcd(self.a, self.q - 1)

    @property
    def mu2(self) -> int:
        return min(self.alpha // self.a, self.d2 - 1)

    @property
    def k(self) -> int:
        """floor((alpha - (q-2)) / a); meaningful once alpha >= q - 2."""
        return (self.alpha - (self.q - 2)) // self.a

    @property
    def length(self) -> int:
        return (self.q - 1) * self.d2

    @property
    def a_invariant(self) -> int:
        return (self.q - 2) + (self.d2 - 1) * self.a


def p11a_context(space: WeightedSpace, alpha: int) -> P11aContext:
    if space.n != 2 or space.weights[0] != 1 or space.weights[1] != 1:
        raise UnsupportedWeight(f"weights must be (1, 1, a), got {space.weights}")
    return P11aContext(space.q, space.weights[2], alpha)


def _dimension_p11a_middle(ctx: P11aContext) -> int:
    k, mu2 = ctx.k, ctx.mu2
    pair_sum = mu2 * (mu2 + 1) - k * (k + 1)  # always even
    return (ctx.q - 1) * (k + 1) + (mu2 - k) * (ctx.alpha + 1) - ctx.a * (pair_sum // 2)


def dimension_p11a(ctx: P11aContext) -> int:
    """Piecewise dimension for weights (1, 1, a); equals the length once
    alpha passes the a-invariant."""
    q, a, alpha = ctx.q, ctx.a, ctx.alpha
    if alpha < 0:
        raise OutOfRange(f"alpha must be nonnegative, got {alpha}")
    if alpha <= q - 2:
        mu2 = ctx.mu2
        val = (mu2 + 1) * (alpha + 1) - a * (mu2 * (mu2 + 1) // 2)
        if alpha == q - 2:
            assert val == _dimension_p11a_middle(ctx), "branch seam mismatch"
        return val
    if 0 < alpha - (q - 2) < (ctx.d2 - 1) * a:
        return _dimension_p11a_middle(ctx)
    return ctx.length


def distance_p11a(ctx: P11aContext) -> int:
    """Piecewise exact minimum distance for weights (1, 1, a)."""
    q, alpha = ctx.q, ctx.alpha
    if alpha < 0:
        raise OutOfRange(f"alpha must be nonnegative, got {alpha}")
    if alpha <= q - 2:
        val = ctx.d2 * (q - 1 - alpha)
        if alpha == q - 2:
            assert val == ctx.d2 - ctx.k, "branch seam mismatch"
        return val
    if alpha < (q - 2) + (ctx.d2 - 1) * ctx.a:
        return ctx.d2 - ctx.k
    return 1


def distance_witness_p11a(space: WeightedSpace, alpha: int) -> int:
    """Weight of an explicit codeword attaining the distance formula.

    Evaluates the product of linear factors whose roots sweep consecutive
    powers of eta (in x_1, plus x_2 factors in the middle range) at every
    point; the weight upper-bounds the minimum distance by construction.
    """
    ctx = p11a_context(space, alpha)
    q = space.q
    eta1 = space.field.eta % q
    eta2 = pow(space.field.eta, ctx.a, q)
    if 0 <= alpha <= q - 2:
        roots1 = [pow(eta1, i, q) for i in range(1, alpha + 1)]
        roots2: list[int] = []
    elif alpha < (q - 2) + (ctx.d2 - 1) * ctx.a:
        roots1 = [pow(eta1, i, q) for i in range(1, q - 1)]
        roots2 = [pow(eta2, j, q) for j in range(1, ctx.k + 1)]
    else:
        raise OutOfRange(f"no product construction at alpha={alpha} (trivial range)")
    weight = 0
    for p in enumerate_degenerate_torus(space).points:
        v = 1
        for r in roots1:
            v = v * (p[1] - r) % q
        for r in roots2:
            v = v * (p[2] - r) % q
        if v != 0:
            weight += 1
    return weight


# ---------------------------------------------------------------------------
# weights (1, w1, w2)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneContext:
    """Derived quantities for the plane with weights (1, w1, w2)."""

    q: int
    w1: int
    w2: int
    alpha: int

    @property
    def d1(self) -> int:
        return (self.q - 1) // gcd(self.q - 1, self.w1)

    @property
    def d2(self) -> int:
        return (self.q - 1) // gcd(self.q - 1, self.w2)

    @property
    def mu2(self) -> int:
        return min(self.alpha // self.w2, self.d2 - 1)

    @property
    def k(self) -> int:
        """floor((alpha - w1*(d1-1)) / w2); meaningful once alpha reaches
        w1*(d1-1).  Coincides with the saturation index mu2' of the
        envelope."""
        return (self.alpha - self.w1 * (self.d1 - 1)) // self.w2

    @property
    def length(self) -> int:
        return self.d1 * self.d2


def plane_context(space: WeightedSpace, alpha: int) -> PlaneContext:
    if space.n != 2 or space.weights[0] != 1:
        raise UnsupportedWeight(f"weights must be (1, w1, w2), got {space.weights}")
    return PlaneContext(space.q, space.weights[1], space.weights[2], alpha)


@dataclass(frozen=True)
class DistanceResult:
    """Distance value plus whether it is exact or only an upper bound."""

    value: int
    exact: bool
    regime: str  # "bound" | "middle" | "trivial"


def distance_bounds_plane(ctx: PlaneContext) -> DistanceResult:
    """Minimum distance on the plane (1, w1, w2): exact d2 - k in the middle
    alpha range, exact 1 past the a-invariant, otherwise only the upper
    bound d2 * (d1 - floor(alpha / w1))."""
    if ctx.alpha < 0:
        raise OutOfRange(f"alpha must be nonnegative, got {ctx.alpha}")
    lo = ctx.w1 * (ctx.d1 - 1)
    hi = lo + ctx.w2 * (ctx.d2 - 1)
    if lo <= ctx.alpha < hi:
        return DistanceResult(ctx.d2 - ctx.k, True, "middle")
    if ctx.alpha >= hi:
        return DistanceResult(1, True, "trivial")
    return DistanceResult(ctx.d2 * (ctx.d1 - ctx.alpha // ctx.w1), False, "bound")


def envelope_u(ctx: PlaneContext, y: int) -> int:
    """Zero-count envelope u(y) = d1*y + (d2 - y) * min(floor((alpha - y*w2)/w1), d1 - 1)."""
    if not 0 <= y <= ctx.mu2:
        raise OutOfRange(f"y must lie in [0, {ctx.mu2}], got {y}")
    return ctx.d1 * y + (ctx.d2 - y) * min((ctx.alpha - y * ctx.w2) // ctx.w1, ctx.d1 - 1)


def singleton_defect(summary: CodeSummary) -> int:
    """N + 1 - K - delta; zero exactly for MDS codes."""
    if summary.delta is None:
        raise ValueError("summary has no distance value")
    return summary.n + 1 - summary.k - summary.delta
