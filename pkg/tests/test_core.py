"""Matrix model: construction, validation, triads, weights, approximations."""

import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcmkit import (
    MatrixValidationError,
    PCMatrix,
    Triad,
    WeightVector,
    approx_error,
    consistent_approx,
    geometric_mean_weights,
    is_consistent,
    make_matrix,
    triads,
)

RECIPROCITY_TOL = 1e-12

A_PAIRS = [(1, 2, 2.0), (1, 3, 2.0), (2, 3, 2.0)]


def matrix_a() -> PCMatrix:
    return make_matrix(A_PAIRS)


entry_values = st.floats(min_value=0.05, max_value=20.0, allow_nan=False, allow_infinity=False)


@st.composite
def pc_matrices(draw, min_n=3, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    values = draw(st.lists(entry_values, min_size=len(pairs), max_size=len(pairs)))
    return make_matrix([(i, j, v) for (i, j), v in zip(pairs, values)])


@st.composite
def weight_lists(draw, min_n=3, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(st.lists(st.floats(0.1, 10.0), min_size=n, max_size=n))


def test_make_matrix_builds_reciprocal_fill():
    m = matrix_a()
    assert m.n == 3
    assert m.entry(1, 2) == 2.0
    assert m.entry(2, 1) == 0.5
    assert m.entry(3, 1) == 0.5
    assert m.entry(3, 2) == 0.5
    assert all(m.entry(i, i) == 1.0 for i in (1, 2, 3))


def test_make_matrix_single_pair_gives_2x2():
    m = make_matrix([(1, 2, 1.0)])
    assert m.n == 2
    assert np.array_equal(m.values, np.ones((2, 2)))


@pytest.mark.parametrize(
    "pairs, code",
    [
        ([(1, 2, 3.0), (1, 3, 0.0), (2, 3, 1.0)], "nonpositive_entry"),
        ([(1, 2, 3.0), (1, 3, -2.0), (2, 3, 1.0)], "nonpositive_entry"),
        ([(1, 2, 3.0), (1, 2, 2.0)], "duplicate_pair"),
        ([(1, 3, 2.0)], "missing_pair"),
        ([(2, 1, 2.0)], "bad_index"),
        ([(1, 1, 2.0)], "bad_index"),
        ([], "too_small"),
    ],
)
def test_make_matrix_rejects_bad_input(pairs, code):
    with pytest.raises(MatrixValidationError) as err:
        make_matrix(pairs)
    assert err.value.code == code


def test_from_grid_matches_make_matrix():
    grid = [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]]
    assert np.array_equal(PCMatrix.from_grid(grid).values, matrix_a().values)


@pytest.mark.parametrize(
    "grid, code",
    [
        ([[1, 2], [0.5, 1], [1, 1]], "ragged_grid"),
        ([[1, 2], [0.5]], "ragged_grid"),
        ([[2, 2], [0.5, 1]], "bad_diagonal"),
        ([[1, 2], [0.4, 1]], "reciprocity_violation"),
        ([[1, -2], [-0.5, 1]], "nonpositive_entry"),
        ([[1]], "too_small"),
    ],
)
def test_from_grid_rejects_bad_input(grid, code):
    with pytest.raises(MatrixValidationError) as err:
        PCMatrix.from_grid(grid)
    assert err.value.code == code


def test_size_cap():
    n = 65
    grid = np.ones((n, n)).tolist()
    with pytest.raises(MatrixValidationError) as err:
        PCMatrix.from_grid(grid)
    assert err.value.code == "too_large"


def test_values_are_read_only():
    m = matrix_a()
    with pytest.raises(ValueError):
        m.values[0, 1] = 9.0


def test_with_entry_returns_new_matrix():
    m = matrix_a()
    m2 = m.with_entry(1, 3, 4.0)
    assert m2.entry(1, 3) == 4.0
    assert m2.entry(3, 1) == 0.25
    # original untouched
    assert m.entry(1, 3) == 2.0
    with pytest.raises(MatrixValidationError):
        m.with_entry(1, 1, 2.0)
    with pytest.raises(MatrixValidationError):
        m.with_entry(1, 2, 0.0)
    with pytest.raises(MatrixValidationError):
        m.with_entry(0, 2, 1.0)


def test_triads_lexicographic_count_and_values():
    m = matrix_a()
    ts = triads(m)
    assert len(ts) == 1
    t = ts[0]
    assert (t.i, t.j, t.k) == (1, 2, 3)
    assert (t.x, t.y, t.z) == (2.0, 2.0, 2.0)

    m7 = make_matrix([(i, j, 1.0) for i, j in combinations(range(1, 8), 2)])
    ts7 = triads(m7)
    assert len(ts7) == 35  # C(7,3)
    assert [t.indices for t in ts7] == list(combinations(range(1, 8), 3))


@pytest.mark.parametrize("n", range(3, 11))
def test_triad_count_matches_direct_loop(n):
    m = make_matrix([(i, j, 1.0) for i, j in combinations(range(1, n + 1), 2)])
    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                count += 1
    assert len(triads(m)) == count


def test_triad_validation():
    with pytest.raises(ValueError):
        Triad(2, 1, 3, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        Triad(1, 2, 3, 1.0, -1.0, 1.0)


def test_is_consistent_on_quotient_matrix():
    s = [0.5, 0.3, 0.2]
    m = make_matrix(
        [(i, j, s[i - 1] / s[j - 1]) for i, j in combinations(range(1, 4), 2)]
    )
    assert is_consistent(m, 1e-12)
    assert m.entry(1, 2) == pytest.approx(5 / 3, rel=1e-15)
    assert m.entry(1, 3) == pytest.approx(5 / 2, rel=1e-15)
    assert m.entry(2, 3) == pytest.approx(3 / 2, rel=1e-15)


def test_is_consistent_flags_matrix_a():
    assert not is_consistent(matrix_a(), 1e-9)


def test_two_by_two_always_consistent():
    assert is_consistent(make_matrix([(1, 2, 7.3)]), 0.0)


def test_is_consistent_rejects_negative_tol():
    with pytest.raises(ValueError):
        is_consistent(matrix_a(), -1e-9)


def test_geometric_mean_weights_matrix_a():
    w = geometric_mean_weights(matrix_a())
    for got, expected in zip(w, (0.4934, 0.3108, 0.1958)):
        assert abs(got - expected) <= 5e-4
    assert math.fsum(w) == pytest.approx(1.0, abs=1e-12)


def test_geometric_mean_weights_all_ones():
    m = make_matrix([(i, j, 1.0) for i, j in combinations(range(1, 5), 2)])
    assert all(w == pytest.approx(0.25, abs=1e-15) for w in geometric_mean_weights(m))


def test_weight_recovery_on_consistent_matrix():
    s = [0.5, 0.3, 0.2]
    m = consistent_approx(WeightVector(tuple(s)))
    w = geometric_mean_weights(m)
    assert all(abs(a - b) <= 1e-12 for a, b in zip(w, s))


def test_consistent_approx_golden_entries():
    b = consistent_approx(geometric_mean_weights(matrix_a()))
    assert abs(b.entry(1, 2) - 1.5874011) <= 1e-6
    assert abs(b.entry(1, 3) - 2.5198421) <= 1e-6
    assert abs(b.entry(2, 3) - 1.5874011) <= 1e-6
    assert abs(b.entry(2, 1) - 0.6299605) <= 1e-6
    assert abs(b.entry(3, 1) - 0.3968503) <= 1e-6
    assert is_consistent(b, 1e-12)


def test_approx_error():
    assert approx_error(1.0, 1.0) == 0.0
    assert approx_error(2.25, 1.0) == pytest.approx(0.5556, abs=1e-4)
    assert approx_error(2.84, 1.0) == pytest.approx(0.6479, abs=1e-4)
    with pytest.raises(ValueError):
        approx_error(0.0, 1.0)


def test_weight_vector_validation():
    with pytest.raises(ValueError):
        WeightVector((0.9, 0.2))  # sums to 1.1
    with pytest.raises(ValueError):
        WeightVector((1.2, -0.2))
    w = WeightVector.normalized([3.0, 1.0])
    assert w.values == (0.75, 0.25)


@given(pc_matrices())
def test_reciprocity_invariant(m):
    prod = m.values * m.values.T
    assert np.max(np.abs(prod - 1.0)) <= RECIPROCITY_TOL


@given(weight_lists())
def test_weights_round_trip(raw):
    s = WeightVector.normalized(raw)
    back = geometric_mean_weights(consistent_approx(s))
    assert all(abs(a - b) <= 1e-12 for a, b in zip(back, s))


@given(weight_lists())
def test_quotient_matrices_are_consistent(raw):
    s = WeightVector.normalized(raw)
    assert is_consistent(consistent_approx(s), 1e-12)


@given(pc_matrices())
def test_consistent_approx_is_idempotent(m):
    once = consistent_approx(geometric_mean_weights(m))
    twice = consistent_approx(geometric_mean_weights(once))
    assert np.max(np.abs(once.values - twice.values)) <= 1e-12
