"""Rational points of the torus and of its weight-power subgroup.

Points are stored as normalized affine tuples with leading coordinate 1 and
all coordinates nonzero; these are exactly the canonical representatives of
the projective classes, so no orbit deduplication is ever needed.  Both
enumerations run in a fixed lexicographic order over discrete logarithms,
keeping generator matrices and golden files stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .errors import UnsupportedWeight
from .wps import WeightedSpace

Point = tuple[int, ...]


class PointSetKind(Enum):
    DEGENERATE_TORUS = "degenerate_torus"
    FULL_TORUS = "full_torus"


@dataclass(frozen=True)
class PointSet:
    """Ordered, immutable list of normalized points on a WeightedSpace."""

    space: WeightedSpace
    points: tuple[Point, ...]
    kind: PointSetKind

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_lists(self) -> list[list[int]]:
        """JSON-friendly view: one list of residues per point."""
        return [list(p) for p in self.points]


def _require_unit_leading_weight(space: WeightedSpace) -> None:
    if space.weights[0] != 1:
        raise UnsupportedWeight(
            f"point enumeration needs leading weight 1, got w0={space.weights[0]}"
        )


def enumerate_degenerate_torus(space: WeightedSpace) -> PointSet:
    """All points [1 : eta1^i1 : ... : etan^in] with eta_i = eta**w_i.

    The exponent i_j runs over 0 .. d_j - 1 and the tuples (i_1, ..., i_n)
    are visited in lexicographic order, giving d_1 * ... * d_n points.
    """
    _require_unit_leading_weight(space)
    field = space.field
    q = field.q
    # per-coordinate power tables eta_i^0 .. eta_i^(d_i - 1)
    tables = []
    for i in range(1, space.n + 1):
        eta_i = pow(field.eta, space.weights[i], q)
        tables.append([pow(eta_i, t, q) for t in range(space.d[i])])
    pts = tuple(
        (1,) + tuple(tables[j][e[j]] for j in range(space.n))
        for e in product(*(range(space.d[i]) for i in range(1, space.n + 1)))
    )
    return PointSet(space, pts, PointSetKind.DEGENERATE_TORUS)


def enumerate_full_torus(space: WeightedSpace) -> PointSet:
    """All (q-1)^n normalized torus points [1 : t_1 : ... : t_n], t_i nonzero.

    Coordinates are visited in lexicographic order of their discrete logs
    with respect to eta.
    """
    _require_unit_leading_weight(space)
    field = space.field
    q = field.q
    table = [pow(field.eta, t, q) for t in range(q - 1)]
    pts = tuple(
        (1,) + tuple(table[k] for k in logs)
        for logs in product(range(q - 1), repeat=space.n)
    )
    return PointSet(space, pts, PointSetKind.FULL_TORUS)
