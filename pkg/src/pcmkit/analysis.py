"""One-call summary combining the triad indicators with the eigenvalue ones."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .matrix import PCMatrix, Triad, WeightVector, geometric_mean_weights, is_consistent
from .indicators import chain_ii, kii, triad_inconsistencies
from .spectral import (
    DEFAULT_RI_TABLE,
    MissingRandomIndexError,
    RITable,
    power_iteration,
    saaty_ci,
)


class TriadScore(NamedTuple):
    i: int
    j: int
    k: int
    value: float


@dataclass(frozen=True)
class IndicatorReport:
    """Everything the CLI and the HTTP service report about one matrix.

    Triad-based fields are None (and triad_scores empty) for n == 2, which has
    no triads and is always consistent. cr and ri are None when the random-index
    table has no entry for n.
    """

    n: int
    consistent: bool
    weights: WeightVector
    lambda_max: float
    ci: float
    cr: float | None
    ri: float | None
    kii: float | None
    chain_ii: float | None
    worst_triad: Triad | None
    triad_scores: tuple[TriadScore, ...]
    eigen_iterations: int
    eigen_residual: float


def analyze_matrix(
    matrix: PCMatrix,
    ri_table: RITable = DEFAULT_RI_TABLE,
    consistency_tol: float = 1e-9,
    eigen_tol: float = 1e-12,
) -> IndicatorReport:
    eig = power_iteration(matrix, tol=eigen_tol)
    n = matrix.n
    ci = saaty_ci(eig.lambda_max, n)
    try:
        ri = ri_table.get(n)
        cr = ci / ri
    except MissingRandomIndexError:
        ri = None
        cr = None

    if n >= 3:
        kii_value, worst = kii(matrix)
        chain_value = chain_ii(matrix)
        scores = triad_inconsistencies(matrix)
        triad_scores = tuple(
            TriadScore(i + 1, j + 1, k + 1, float(v))
            for (i, j, k), v in zip(combinations(range(n), 3), scores)
        )
    else:
        kii_value = None
        worst = None
        chain_value = None
        triad_scores = ()

    return IndicatorReport(
        n=n,
        consistent=is_consistent(matrix, consistency_tol),
        weights=geometric_mean_weights(matrix),
        lambda_max=eig.lambda_max,
        ci=ci,
        cr=cr,
        ri=ri,
        kii=kii_value,
        chain_ii=chain_value,
        worst_triad=worst,
        triad_scores=triad_scores,
        eigen_iterations=eig.iterations,
        eigen_residual=eig.residual,
    )
