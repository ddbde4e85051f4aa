"""The combined per-matrix report."""

import pytest

from pcmkit import (
    RITable,
    WeightVector,
    analyze_matrix,
    consistent_approx,
    geometric_mean_weights,
    make_matrix,
    power_iteration,
    saaty_ci,
)


def test_report_inconsistent_3x3():
    m = make_matrix([(1, 2, 2.0), (1, 3, 2.0), (2, 3, 2.0)])
    r = analyze_matrix(m)
    assert r.n == 3
    assert not r.consistent
    assert r.kii == 0.5
    assert r.chain_ii == 0.5
    assert r.worst_triad.indices == (1, 2, 3)
    assert r.lambda_max == pytest.approx(3.0536215758848, abs=1e-9)
    assert r.ci == pytest.approx(saaty_ci(r.lambda_max, 3), abs=1e-15)
    assert r.cr == pytest.approx(r.ci / 0.5245, abs=1e-15)
    assert r.ri == 0.5245
    assert len(r.triad_scores) == 1
    assert r.triad_scores[0].value == 0.5
    assert r.eigen_residual <= 1e-12


def test_report_consistent_matrix():
    m = consistent_approx(WeightVector.normalized([5, 3, 2]))
    r = analyze_matrix(m)
    assert r.consistent
    assert r.kii <= 1e-12
    assert r.cr <= 1e-9
    assert r.weights == pytest.approx((0.5, 0.3, 0.2), abs=1e-9)


def test_report_n2_has_no_triad_fields():
    m = make_matrix([(1, 2, 7.0)])
    r = analyze_matrix(m)
    assert r.n == 2
    assert r.consistent
    assert r.kii is None and r.chain_ii is None and r.worst_triad is None
    assert r.triad_scores == ()
    assert r.lambda_max == pytest.approx(2.0, abs=1e-12)
    assert r.ci == 0.0


def test_report_missing_ri_entry():
    m = consistent_approx(WeightVector.normalized([1] * 9))
    r = analyze_matrix(m)
    assert r.cr is None and r.ri is None
    assert r.ci == pytest.approx(0.0, abs=1e-12)


def test_report_custom_table():
    m = make_matrix([(1, 2, 2.0), (1, 3, 2.0), (2, 3, 2.0)])
    r = analyze_matrix(m, ri_table=RITable({3: 0.52}))
    assert r.ri == 0.52
    assert r.cr == pytest.approx(r.ci / 0.52, abs=1e-15)


def test_report_weights_are_geometric_means():
    m = make_matrix([(1, 2, 3.0), (1, 3, 0.5), (2, 3, 4.0)])
    r = analyze_matrix(m)
    assert r.weights == geometric_mean_weights(m)
    # for n = 3 the geometric-mean vector is also the principal eigenvector
    assert tuple(r.weights) == pytest.approx(power_iteration(m).weights.values, abs=1e-11)
