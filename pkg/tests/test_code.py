import numpy as np
import pytest

from wptcodes.code import (
    CodeSummary,
    GeneratorMatrix,
    evaluation_matrix,
    generator_matrix,
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    matrix_to_text,
    min_distance_exhaustive,
    rank,
    rank_mod,
    standard_monomials,
    weight_distribution,
)
from wptcodes.errors import BudgetExceeded, EmptyCode, UnsupportedWeight
from wptcodes.torus import enumerate_degenerate_torus
from wptcodes.wps import make_space, monomial_exponents
from wptcodes.code import Monomial


def space_and_points(q, weights):
    sp = make_space(q, weights)
    return sp, enumerate_degenerate_torus(sp)


def brute_min_distance(entries, q):
    """Oracle: span all q^K messages directly."""
    k, n = entries.shape
    best = None
    for idx in range(1, q**k):
        msg = []
        r = idx
        for _ in range(k):
            msg.append(r % q)
            r //= q
        cw = [sum(m * entries[i][c] for i, m in enumerate(msg)) % q for c in range(n)]
        w = sum(1 for v in cw if v)
        if w and (best is None or w < best):
            best = w
    return best


def test_standard_monomials_alpha2():
    sp, _ = space_and_points(5, (1, 1, 2))
    monos = standard_monomials(sp, 2)
    assert [m.exponents for m in monos] == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)]
    assert [str(m) for m in monos] == ["x0^2", "x0*x1", "x1^2", "x2"]


def test_standard_monomials_corners():
    sp, _ = space_and_points(5, (1, 1, 2))
    assert [m.exponents for m in standard_monomials(sp, 0)] == [(0, 0, 0)]
    assert str(standard_monomials(sp, 0)[0]) == "1"
    assert len(standard_monomials(sp, 5)) == 8
    assert standard_monomials(sp, -1) == []
    with pytest.raises(UnsupportedWeight):
        standard_monomials(make_space(5, (2, 3)), 2)


def test_generator_matrix_constant_row():
    sp, pts = space_and_points(5, (1, 1, 2))
    gm = generator_matrix(sp, 0, pts)
    assert gm.entries.shape == (1, 8)
    assert np.all(gm.entries == 1)
    assert rank(gm) == 1


def test_generator_matrix_q3_projective_line():
    sp, pts = space_and_points(3, (1, 1))
    gm = generator_matrix(sp, 1, pts)
    assert gm.entries.tolist() == [[1, 1], [1, 2]]
    assert rank(gm) == 2


def test_rank_matches_table_values():
    sp, pts = space_and_points(5, (1, 1, 2))
    assert rank(generator_matrix(sp, 3, pts)) == 6
    assert rank(generator_matrix(sp, 2, pts)) == 4
    empty = generator_matrix(sp, -1, pts)
    assert empty.entries.shape == (0, 8)
    assert rank(empty) == 0


def test_rank_mod_padding_and_dependent_rows():
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank_mod(a, 5) == 2
    assert rank_mod(np.zeros((3, 4), dtype=np.int64), 5) == 0


def test_standard_monomials_evaluate_independently():
    for q, weights in [(3, (1, 1)), (5, (1, 1, 2)), (5, (1, 1, 3)), (7, (1, 2, 3))]:
        sp, pts = space_and_points(q, weights)
        for alpha in range(0, 12):
            gm = generator_matrix(sp, alpha, pts)
            assert rank(gm) == gm.k_rows


def test_full_monomial_matrix_spans_the_same_code():
    for q, weights, alphas in [(5, (1, 1, 2), range(9)), (7, (1, 2, 3), range(14))]:
        sp, pts = space_and_points(q, weights)
        for alpha in alphas:
            monos = [
                Monomial(e, alpha) for e in monomial_exponents(sp.weights, alpha)
            ]
            full = evaluation_matrix(sp, monos, pts)
            std = generator_matrix(sp, alpha, pts)
            assert rank_mod(full, q) == rank(std)


def test_min_distance_examples():
    sp, pts = space_and_points(5, (1, 1, 2))
    assert min_distance_exhaustive(generator_matrix(sp, 2, pts)) == 4
    sp3, pts3 = space_and_points(5, (1, 1, 3))
    assert min_distance_exhaustive(generator_matrix(sp3, 6, pts3)) == 3


def test_min_distance_matches_bruteforce():
    for q, weights, alpha in [(3, (1, 1), 1), (5, (1, 1, 2), 2), (5, (1, 1, 3), 3), (7, (1, 2, 3), 4)]:
        sp, pts = space_and_points(q, weights)
        gm = generator_matrix(sp, alpha, pts)
        assert min_distance_exhaustive(gm) == brute_min_distance(gm.entries, q)


def test_min_distance_empty_code():
    gm = GeneratorMatrix(5, None, np.zeros((0, 8), dtype=np.int64))
    with pytest.raises(EmptyCode):
        min_distance_exhaustive(gm)


def test_budget_exceeded_carries_required_count():
    sp, pts = space_and_points(5, (1, 1, 2))
    gm = generator_matrix(sp, 3, pts)  # K = 6
    with pytest.raises(BudgetExceeded) as exc:
        min_distance_exhaustive(gm, budget=10)
    assert exc.value.required == (5**6 - 1) // 4
    with pytest.raises(BudgetExceeded):
        weight_distribution(gm, budget=10)


def test_min_distance_non_increasing_in_alpha():
    for q, weights in [(3, (1, 1, 1)), (5, (1, 1, 2)), (5, (1, 1, 3))]:
        sp, pts = space_and_points(q, weights)
        prev = None
        for alpha in range(0, 9):
            gm = generator_matrix(sp, alpha, pts)
            d = min_distance_exhaustive(gm)
            if prev is not None:
                assert d <= prev
            prev = d


def test_singleton_bound_for_computed_triples():
    for q, weights in [(3, (1, 1, 1)), (5, (1, 1, 2)), (7, (1, 2, 3))]:
        sp, pts = space_and_points(q, weights)
        n = len(pts)
        for alpha in range(0, 8):
            gm = generator_matrix(sp, alpha, pts)
            if gm.k_rows == 0:
                continue
            assert rank(gm) + min_distance_exhaustive(gm) <= n + 1


def test_weight_distribution_constants():
    sp, pts = space_and_points(5, (1, 1, 2))
    dist = weight_distribution(generator_matrix(sp, 0, pts))
    assert dist[0] == 1 and dist[8] == 4
    assert sum(dist) == 5
    assert all(v == 0 for v in dist[1:8])


def test_weight_distribution_alpha1_first_nonzero_at_6():
    sp, pts = space_and_points(5, (1, 1, 2))
    dist = weight_distribution(generator_matrix(sp, 1, pts))
    nonzero = [w for w in range(1, 9) if dist[w]]
    assert min(nonzero) == 6
    assert sum(dist) == 5**2


def test_weight_distribution_k0():
    gm = GeneratorMatrix(5, None, np.zeros((0, 8), dtype=np.int64))
    assert weight_distribution(gm) == [1] + [0] * 8


def test_weight_distribution_totals():
    for q, weights, alpha in [(3, (1, 1), 1), (5, (1, 1, 2), 3), (5, (1, 1, 3), 4)]:
        sp, pts = space_and_points(q, weights)
        gm = generator_matrix(sp, alpha, pts)
        dist = weight_distribution(gm)
        assert sum(dist) == q**gm.k_rows
        assert dist[0] == 1
        assert min(w for w in range(1, len(dist)) if dist[w]) == min_distance_exhaustive(gm)


def test_thread_partitioning_is_invisible():
    sp, pts = space_and_points(5, (1, 1, 3))
    gm = generator_matrix(sp, 5, pts)
    assert min_distance_exhaustive(gm, threads=1) == min_distance_exhaustive(gm, threads=4)
    assert weight_distribution(gm, threads=1) == weight_distribution(gm, threads=4)


def test_text_round_trip():
    sp, pts = space_and_points(5, (1, 1, 2))
    gm = generator_matrix(sp, 2, pts)
    text = matrix_to_text(gm)
    assert text.splitlines()[0] == "1 1 1 1 1 1 1 1"
    back = matrix_from_text(text, 5)
    assert np.array_equal(back.entries, gm.entries)
    assert min_distance_exhaustive(back) == min_distance_exhaustive(gm)


def test_text_rejects_bad_entries():
    with pytest.raises(ValueError):
        matrix_from_text("1 2\n3\n", 5)
    with pytest.raises(ValueError):
        matrix_from_text("1 7\n", 5)


def test_json_round_trip():
    sp, pts = space_and_points(5, (1, 1, 3))
    gm = generator_matrix(sp, 2, pts)
    back = matrix_from_json(matrix_to_json(gm))
    assert back.q == 5 and back.alpha == 2
    assert np.array_equal(back.entries, gm.entries)


def test_code_summary_rejects_singleton_violation():
    CodeSummary(alpha=2, n=8, k=4, delta=4)
    with pytest.raises(ValueError):
        CodeSummary(alpha=2, n=8, k=6, delta=4)
