"""Stepwise inconsistency reduction.

Each step localizes the worst triad, tries the three single-entry exact
repairs of that triad (set y := x*z, or x := y/z, or z := y/x), and keeps the
one that leaves the lowest matrix-level kii. Repairs are exact: the repaired
triad itself becomes consistent, so progress only stalls when a different
triad already ties for the maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .matrix import PCMatrix, Triad, is_consistent
from .indicators import kii

DEFAULT_THRESHOLD = 1 / 3


class AlreadyConsistentError(ValueError):
    """Asked to repair a matrix that is already consistent."""


def worst_triad(matrix: PCMatrix) -> tuple[Triad, float]:
    """The triad attaining the matrix kii, with its value (ties: lexicographic)."""
    value, triad = kii(matrix)
    return triad, value


@dataclass(frozen=True)
class RepairCandidate:
    """One single-entry exact repair of the worst triad.

    cell is the 1-based (row, col) of the changed upper-triangle entry;
    projected_kii is the matrix kii after applying it.
    """

    cell: tuple[int, int]
    old_value: float
    new_value: float
    projected_kii: float
    triad: Triad


def repair_candidates(matrix: PCMatrix) -> list[RepairCandidate]:
    """The three exact repairs of the worst triad, best first.

    Ordering: lowest projected kii, then smallest multiplicative change
    max(new/old, old/new), then cell position in the order (i,k), (i,j), (j,k).
    """
    triad, value = worst_triad(matrix)
    if value == 0.0 or is_consistent(matrix):
        raise AlreadyConsistentError("matrix has no inconsistent triad to repair")
    i, j, k = triad.indices
    x, y, z = triad.x, triad.y, triad.z
    moves = [
        ((i, k), y, x * z),  # replace y by the product
        ((i, j), x, y / z),  # replace x by what the other two imply
        ((j, k), z, y / x),  # replace z likewise
    ]
    scored = []
    for order, (cell, old, new) in enumerate(moves):
        projected = kii(matrix.with_entry(cell[0], cell[1], new)).value
        stretch = max(new / old, old / new) - 1.0
        scored.append((projected, stretch, order, RepairCandidate(cell, old, new, projected, triad)))
    scored.sort(key=lambda item: item[:3])
    return [item[3] for item in scored]


@dataclass(frozen=True)
class ReductionStep:
    """One applied repair, with the matrix it produced."""

    triad: Triad
    changed_cell: tuple[int, int]
    old_value: float
    new_value: float
    kii_before: float
    kii_after: float
    matrix: PCMatrix


@dataclass(frozen=True)
class ReductionTrace:
    """Full history of a reduction run.

    converged means the threshold was reached; False means the loop stopped
    early (step budget exhausted, or the best repair no longer lowered kii).
    """

    steps: tuple[ReductionStep, ...]
    final_matrix: PCMatrix
    final_kii: float
    converged: bool
    threshold: float


def reduce_step(matrix: PCMatrix) -> ReductionStep:
    """Apply the best single repair of the worst triad.

    Raises AlreadyConsistentError when there is nothing to repair.
    """
    if is_consistent(matrix):
        raise AlreadyConsistentError("matrix is already consistent")
    before = kii(matrix).value
    best = repair_candidates(matrix)[0]
    repaired = matrix.with_entry(best.cell[0], best.cell[1], best.new_value)
    return ReductionStep(
        triad=best.triad,
        changed_cell=best.cell,
        old_value=best.old_value,
        new_value=best.new_value,
        kii_before=before,
        kii_after=best.projected_kii,
        matrix=repaired,
    )


def reduce_inconsistency(
    matrix: PCMatrix,
    threshold: float = DEFAULT_THRESHOLD,
    max_steps: int | None = None,
) -> ReductionTrace:
    """Repair worst triads until kii <= threshold.

    max_steps defaults to 10 * C(n, 3). A step that would not strictly lower
    kii is not applied; the trace ends there with converged=False.
    """
    if not (0.0 < threshold < 1.0) or not math.isfinite(threshold):
        raise ValueError(f"threshold must be in (0, 1), got {threshold!r}")
    n = matrix.n
    if n < 3:
        return ReductionTrace((), matrix, 0.0, True, threshold)
    if max_steps is None:
        max_steps = 10 * (n * (n - 1) * (n - 2) // 6)
    if max_steps < 0:
        raise ValueError(f"max_steps must be nonnegative, got {max_steps}")

    steps: list[ReductionStep] = []
    current = matrix
    while True:
        value = kii(current).value
        if value <= threshold:
            return ReductionTrace(tuple(steps), current, value, True, threshold)
        if len(steps) >= max_steps:
            return ReductionTrace(tuple(steps), current, value, False, threshold)
        step = reduce_step(current)
        if step.kii_after >= value:
            # no strict progress available; stop rather than thrash
            return ReductionTrace(tuple(steps), current, value, False, threshold)
        steps.append(step)
        current = step.matrix
