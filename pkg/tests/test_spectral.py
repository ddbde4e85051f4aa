"""Eigenvalue machinery, consistency ratios, parametric families, and bounds."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcmkit import (
    ALTERNATE_RI_N3,
    CR_ACCEPTANCE_THRESHOLD,
    DEFAULT_RI_TABLE,
    ConvergenceError,
    MissingRandomIndexError,
    RITable,
    WeightVector,
    consistent_approx,
    cpc,
    cpc_ci_bounds,
    cpc_lambda_max,
    delta_error,
    eigen_bound_from_all_triads,
    eigen_bound_from_worst_triad,
    estimate_ri,
    fpc,
    fpc_lambda_max,
    make_matrix,
    max_acceptable_x,
    power_iteration,
    random_reciprocal,
    ratio_error,
    saaty_ci,
    saaty_cr,
    triad_ii,
)


def matrix_a():
    return make_matrix([(1, 2, 2.0), (1, 3, 2.0), (2, 3, 2.0)])


# --- power iteration ---------------------------------------------------------


def test_power_iteration_consistent_matrix():
    m = consistent_approx(WeightVector.normalized([0.5, 0.3, 0.2]))
    res = power_iteration(m)
    assert res.lambda_max == pytest.approx(3.0, abs=1e-9)
    assert res.weights.values == pytest.approx((0.5, 0.3, 0.2), abs=1e-9)


def test_power_iteration_matrix_a():
    res = power_iteration(matrix_a())
    # characteristic root of the 3x3 with one doubled chain
    assert res.lambda_max == pytest.approx(3.0536215758848, abs=1e-9)
    assert math.isclose(sum(res.weights.values), 1.0, abs_tol=1e-12)
    assert res.residual <= 1e-12
    assert res.iterations >= 1


def test_power_iteration_weights_are_right_eigenvector():
    m = random_reciprocal(6, rng=np.random.default_rng(11))
    res = power_iteration(m)
    w = np.array(res.weights.values)
    mv = m.values @ w
    assert np.max(np.abs(mv - res.lambda_max * w) / w) <= 1e-11


def test_power_iteration_reports_nonconvergence():
    with pytest.raises(ConvergenceError) as exc:
        power_iteration(matrix_a(), max_iter=1)
    assert exc.value.iterations == 1
    assert exc.value.residual > 0


def test_power_iteration_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        power_iteration(matrix_a(), tol=0.0)
    with pytest.raises(ValueError):
        power_iteration(matrix_a(), max_iter=0)


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=2**31))
def test_lambda_max_at_least_n(n, seed):
    m = random_reciprocal(n, rng=np.random.default_rng(seed))
    res = power_iteration(m)
    assert res.lambda_max >= n - 1e-12


# --- Saaty CI / CR -----------------------------------------------------------


def test_saaty_ci_examples():
    assert saaty_ci(3.0536215758848, 3) == pytest.approx(0.0268107879424, abs=1e-10)
    assert saaty_ci(4.0, 4) == 0.0
    with pytest.raises(ValueError):
        saaty_ci(3.0, 1)


def test_saaty_cr_golden():
    # CI = 1/18 at n = 4 against RI 0.882
    cr = saaty_cr(1 / 18, 4)
    assert cr == pytest.approx(0.06299, abs=1e-5)
    assert cr < CR_ACCEPTANCE_THRESHOLD


def test_saaty_cr_zero_ci():
    assert saaty_cr(0.0, 5) == 0.0


def test_saaty_cr_missing_order():
    with pytest.raises(MissingRandomIndexError) as exc:
        saaty_cr(0.1, 12)
    assert exc.value.n == 12


def test_ri_table_contents():
    assert DEFAULT_RI_TABLE.get(3) == 0.5245
    assert DEFAULT_RI_TABLE.get(7) == 1.341
    assert ALTERNATE_RI_N3 == 0.52
    assert 3 in DEFAULT_RI_TABLE and 8 not in DEFAULT_RI_TABLE


def test_ri_table_validation():
    with pytest.raises(ValueError):
        RITable({4: 0.882})  # no n=3 entry
    with pytest.raises(ValueError):
        RITable({2: 0.1, 3: 0.5245})
    with pytest.raises(ValueError):
        RITable({3: 0.0})


def test_ri_table_extension():
    base = RITable({3: 0.5245, 4: 0.882})
    with pytest.raises(MissingRandomIndexError):
        base.get(6)
    extended = base.with_extension()
    assert extended.get(6) == 0.882  # holds the last known value
    assert extended.get(4) == 0.882
    assert base.to_dict() == {3: 0.5245, 4: 0.882}


# --- parametric families -----------------------------------------------------


def test_cpc_structure():
    m = cpc(2.62, 3)
    assert m.entry(1, 3) == 2.62
    assert m.entry(1, 2) == 1.0 and m.entry(2, 3) == 1.0
    assert m.entry(3, 1) == pytest.approx(1 / 2.62, rel=1e-15)


def test_cpc_triad_profile():
    # only triads containing the (1, n) corner are off, each scoring 1 - 1/x
    x, n = 6.0, 6
    m = cpc(x, n)
    scores = [triad_ii(m.entry(i, j), m.entry(i, k), m.entry(j, k))
              for i in range(1, n + 1) for j in range(i + 1, n + 1)
              for k in range(j + 1, n + 1)]
    hot = [s for s in scores if s > 0]
    assert len(hot) == n - 2
    assert all(s == pytest.approx(1 - 1 / x, abs=1e-15) for s in hot)


def test_fpc_structure():
    m = fpc(2.25, 4)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            assert m.entry(i, j) == 2.25
    v = triad_ii(2.25, 2.25, 2.25)
    assert v == pytest.approx(1 - 1 / 2.25, rel=1e-15)


def test_family_validation():
    for fam in (cpc, fpc):
        with pytest.raises(ValueError):
            fam(0.0, 4)
        with pytest.raises(ValueError):
            fam(2.0, 2)


def test_cpc_lambda_max_golden():
    assert cpc_lambda_max(6.0, 6) == pytest.approx(6.406123, abs=1e-6)
    assert cpc_lambda_max(2.62, 3) == pytest.approx(3.10397, abs=1e-5)
    assert cpc_lambda_max(1.0, 7) == 7.0


def test_cpc_lambda_max_matches_power_iteration():
    for x in (1.5, 2.62, 6.0, 9.0):
        for n in (3, 5, 8):
            direct = cpc_lambda_max(x, n)
            iterated = power_iteration(cpc(x, n)).lambda_max
            assert direct == pytest.approx(iterated, abs=1e-8)


def test_fpc_lambda_max_golden():
    assert fpc_lambda_max(2.25, 4) == pytest.approx(25 / 6, abs=1e-9)
    assert fpc_lambda_max(1.0, 5) == 5.0


def test_fpc_lambda_max_matches_power_iteration():
    for x in (0.5, 2.25, 2.84, 7.0):
        for n in (3, 6, 9):
            direct = fpc_lambda_max(x, n)
            iterated = power_iteration(fpc(x, n)).lambda_max
            assert direct == pytest.approx(iterated, abs=1e-8)


def test_fpc_cr_at_acceptance_edge():
    ci = saaty_ci(fpc_lambda_max(2.84, 7), 7)
    cr = saaty_cr(ci, 7)
    assert cr == pytest.approx(0.1, abs=5e-4)


# --- bounds ------------------------------------------------------------------


def test_cpc_ci_bounds_golden():
    b = cpc_ci_bounds(6.0, 6)
    assert b.ci == pytest.approx(0.081224, abs=1e-5)
    assert b.tight_bound == pytest.approx((4 / 5) * (1 / 6 + 6 - 2) / 36, rel=1e-12)
    assert b.loose_bound == pytest.approx(6 / 36, rel=1e-15)
    assert b.ci <= b.tight_bound <= b.loose_bound


def test_cpc_ci_bounds_large_order():
    b = cpc_ci_bounds(10.0, 20)
    assert b.ci <= 10 / 400
    assert b.ci <= b.tight_bound <= b.loose_bound


def test_cpc_ci_bounds_rejects_x_below_one():
    with pytest.raises(ValueError):
        cpc_ci_bounds(0.9, 5)


def test_eigen_bounds_on_consistent_matrix():
    m = consistent_approx(WeightVector.normalized([4, 2, 1, 0.5]))
    assert eigen_bound_from_worst_triad(m) == pytest.approx(4.0, abs=1e-9)
    assert eigen_bound_from_all_triads(m) == pytest.approx(4.0, abs=1e-9)


def test_eigen_bounds_never_exceed_lambda_max():
    rng = np.random.default_rng(23)
    for n in (3, 4, 6, 8):
        for _ in range(25):
            m = random_reciprocal(n, rng=rng)
            lam = power_iteration(m).lambda_max
            assert eigen_bound_from_worst_triad(m) <= lam + 1e-8
            assert eigen_bound_from_all_triads(m) <= lam + 1e-8


def test_eigen_bounds_coincide_for_n3():
    m = matrix_a()
    assert eigen_bound_from_all_triads(m) == pytest.approx(
        eigen_bound_from_worst_triad(m), abs=1e-12
    )


def test_eigen_bounds_coincide_for_cpc():
    # a single hot triad value shared by all n-2 off triads makes the
    # averaged bound collapse onto the worst-triad bound
    for x, n in ((2.62, 3), (6.0, 6), (4.0, 9)):
        m = cpc(x, n)
        assert eigen_bound_from_all_triads(m) == pytest.approx(
            eigen_bound_from_worst_triad(m), abs=1e-12
        )


def test_eigen_bound_gap_term_blows_up():
    # per-triad contribution grows without bound as the score approaches 1
    def term(n, ii):
        return ii * ii / (3 * (n - 1) * n * (1 - ii) ** (1 / 3))

    samples = [0.0, 0.5, 0.9, 0.99, 0.999]
    vals = [term(5, ii) for ii in samples]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert term(5, 1 - 1e-15) > 1e3 * term(5, 0.999)


# --- acceptability thresholds ------------------------------------------------


def test_max_acceptable_x_cpc_default_table():
    x = max_acceptable_x("cpc", 3)
    assert x == pytest.approx(2.6312, abs=2e-3)
    ci = saaty_ci(cpc_lambda_max(x, 3), 3)
    assert saaty_cr(ci, 3) == pytest.approx(0.1, abs=1e-9)


def test_max_acceptable_x_cpc_alternate_table():
    table = RITable({3: ALTERNATE_RI_N3})
    x = max_acceptable_x("cpc", 3, ri_table=table)
    assert x == pytest.approx(2.617, rel=3e-3)


def test_max_acceptable_x_fpc():
    # CI = 1/18 at n = 4 comes from the uniform matrix with x = 2.25
    target_cr = (1 / 18) / 0.882
    x = max_acceptable_x("fpc", 4, cr_threshold=target_cr)
    assert x == pytest.approx(2.25, abs=1e-6)


def test_max_acceptable_x_validation():
    with pytest.raises(ValueError):
        max_acceptable_x("upc", 4)
    with pytest.raises(ValueError):
        max_acceptable_x("cpc", 4, cr_threshold=0.0)
    with pytest.raises(MissingRandomIndexError):
        max_acceptable_x("cpc", 9)


# --- error translations ------------------------------------------------------


def test_delta_error():
    assert delta_error(2.25) == pytest.approx(0.5556, abs=1e-4)
    assert delta_error(2.84) == pytest.approx(0.6479, abs=1e-4)
    assert delta_error(1.0) == 0.0
    assert delta_error(0.5) == 1.0  # symmetric reading of a halved judgment
    with pytest.raises(ValueError):
        delta_error(0.0)


def test_ratio_error():
    assert ratio_error(2.62) == 2.62
    with pytest.raises(ValueError):
        ratio_error(-1.0)


# --- random matrices and RI estimation ----------------------------------------


def test_random_reciprocal_determinism():
    a = random_reciprocal(5, rng=np.random.default_rng(7))
    b = random_reciprocal(5, rng=np.random.default_rng(7))
    assert np.array_equal(a.values, b.values)


def test_random_reciprocal_shape_and_range():
    m = random_reciprocal(6, rng=np.random.default_rng(1), scale=5.0)
    v = m.values
    assert np.allclose(v * v.T, 1.0, rtol=1e-12)
    upper = v[np.triu_indices(6, k=1)]
    assert np.all(upper >= 1 / 5.0) and np.all(upper <= 5.0)


def test_random_reciprocal_validation():
    with pytest.raises(ValueError):
        random_reciprocal(1)
    with pytest.raises(ValueError):
        random_reciprocal(4, scale=1.0)


def test_estimate_ri_plausible():
    est = estimate_ri(3, samples=400, rng=np.random.default_rng(3))
    assert 0.3 < est < 0.8  # same ballpark as the published n=3 entries
    with pytest.raises(ValueError):
        estimate_ri(2)
    with pytest.raises(ValueError):
        estimate_ri(3, samples=0)
