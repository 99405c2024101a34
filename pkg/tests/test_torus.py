from math import prod

import pytest

from wptcodes.errors import UnsupportedWeight
from wptcodes.torus import (
    PointSetKind,
    enumerate_degenerate_torus,
    enumerate_full_torus,
)
from wptcodes.wps import make_space


def test_point_counts_from_examples():
    assert len(enumerate_degenerate_torus(make_space(5, (1, 1, 2)))) == 8
    assert len(enumerate_degenerate_torus(make_space(5, (1, 1, 3)))) == 16
    pts = enumerate_degenerate_torus(make_space(3, (1, 1)))
    assert pts.points == ((1, 1), (1, 2))
    assert pts.kind is PointSetKind.DEGENERATE_TORUS


def test_full_torus_counts():
    assert len(enumerate_full_torus(make_space(5, (1, 1, 1)))) == 16
    assert len(enumerate_full_torus(make_space(3, (1, 1)))) == 2
    pts = enumerate_full_torus(make_space(2, (1, 1, 1, 1)))
    assert pts.points == ((1, 1, 1, 1),)


def test_leading_weight_must_be_one():
    sp = make_space(5, (2, 3))
    with pytest.raises(UnsupportedWeight):
        enumerate_degenerate_torus(sp)
    with pytest.raises(UnsupportedWeight):
        enumerate_full_torus(sp)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 31])
@pytest.mark.parametrize("weights", [(1, 1), (1, 2), (1, 1, 1), (1, 1, 2), (1, 2, 3), (1, 3, 4)])
def test_cardinality_and_normalization(q, weights):
    sp = make_space(q, weights)
    pts = enumerate_degenerate_torus(sp)
    assert len(pts) == prod(sp.d[1:])
    assert len(set(pts.points)) == len(pts)
    for p in pts:
        assert p[0] == 1
        assert all(c % q != 0 for c in p)


def test_subgroup_inside_full_torus():
    for q, weights in [(5, (1, 1, 2)), (7, (1, 2, 3)), (11, (1, 3, 4))]:
        sp = make_space(q, weights)
        sub = set(enumerate_degenerate_torus(sp).points)
        full = set(enumerate_full_torus(sp).points)
        assert sub <= full


def test_closed_under_coordinatewise_multiplication():
    sp = make_space(7, (1, 2, 3))
    pts = enumerate_degenerate_torus(sp)
    members = set(pts.points)
    q = sp.q
    for a in pts:
        for b in pts:
            assert tuple(x * y % q for x, y in zip(a, b)) in members


def test_unit_weights_match_full_torus_ordering():
    for q in [3, 5, 7]:
        sp = make_space(q, (1, 1, 1))
        assert enumerate_degenerate_torus(sp).points == enumerate_full_torus(sp).points


def test_lexicographic_order_in_exponents():
    sp = make_space(5, (1, 1, 2))
    pts = enumerate_degenerate_torus(sp).points
    eta = sp.field.eta
    # first block fixes the middle coordinate at eta^0 = 1
    assert pts[0] == (1, 1, 1)
    assert pts[1] == (1, 1, pow(eta, 2, 5))
    assert pts[2][1] == eta


def test_as_lists_serialization():
    pts = enumerate_degenerate_torus(make_space(3, (1, 1)))
    assert pts.as_lists() == [[1, 1], [1, 2]]
