"""Triad-based inconsistency indicators and the axiom checker.

The main indicator scores one triad of judgments (x, y, z) = (a_ij, a_ik, a_jk)
by how far y is from the product x*z, on a 0..1 scale:

    triad_ii(x, y, z) = 1 - min(y / (x*z), (x*z) / y)

which is 0 exactly when the triad is consistent and approaches (never reaches)
1 as the mismatch grows. The matrix-level value ``kii`` is the worst triad,
``chain_ii`` compares direct judgments against products along consecutive
chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .matrix import PCMatrix, Triad, triad_values, _triad_index_arrays

#: grid of judgment values the axiom checker sweeps by default
DEFAULT_AXIOM_GRID = (1 / 3, 1 / 2, 2 / 3, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0)

_STRICT_GUARD = 1e-12


def _check_triad_args(x: float, y: float, z: float) -> tuple[float, float, float]:
    out = []
    for name, v in (("x", x), ("y", y), ("z", z)):
        v = float(v)
        if not (math.isfinite(v) and v > 0):
            raise ValueError(f"triad value {name}={v!r} must be positive and finite")
        out.append(v)
    return out[0], out[1], out[2]


def triad_ii(x: float, y: float, z: float) -> float:
    """Inconsistency of one triad, in [0, 1).

    Zero iff y == x*z; equals 1 - exp(-|ln(y/(x*z))|), so it only depends on
    the log-distance between y and x*z and treats overshoot and undershoot
    symmetrically.
    """
    x, y, z = _check_triad_args(x, y, z)
    p = x * z
    return 1.0 - min(y / p, p / y)


class KiiResult(NamedTuple):
    value: float
    triad: Triad


def triad_inconsistencies(matrix: PCMatrix) -> np.ndarray:
    """triad_ii for every triad, in the lexicographic order of :func:`triads`."""
    if matrix.n < 3:
        raise ValueError(f"need n >= 3 for triad indicators, got n={matrix.n}")
    x, y, z = triad_values(matrix)
    p = x * z
    return 1.0 - np.minimum(y / p, p / y)


def kii(matrix: PCMatrix) -> KiiResult:
    """Worst-triad inconsistency of the matrix, with the triad that attains it.

    Ties break toward the lexicographically first (i, j, k).
    """
    vals = triad_inconsistencies(matrix)
    pos = int(np.argmax(vals))  # first occurrence of the max
    i_arr, j_arr, k_arr = _triad_index_arrays(matrix.n)
    i, j, k = int(i_arr[pos]), int(j_arr[pos]), int(k_arr[pos])
    v = matrix.values
    triad = Triad(i + 1, j + 1, k + 1, float(v[i, j]), float(v[i, k]), float(v[j, k]))
    return KiiResult(float(vals[pos]), triad)


def chain_ii(matrix: PCMatrix) -> float:
    """Chain-based inconsistency: worst mismatch between a direct judgment
    a_ij and the product of consecutive judgments a_i,i+1 * ... * a_j-1,j.

    For n == 3 the only chain is the only triad, so this equals kii exactly.
    """
    n = matrix.n
    if n < 3:
        raise ValueError(f"need n >= 3 for chain_ii, got n={n}")
    v = matrix.values
    worst = 1.0
    for i in range(n - 1):
        p = 1.0
        logp = 0.0
        for j in range(i + 1, n):
            step = float(v[j - 1, j])
            p = p * step
            logp += math.log(step)
            a = float(v[i, j])
            if math.isfinite(p) and p > 0.0:
                ratio = min(a / p, p / a)
            else:
                # chain product left the float range; score it in log space
                ratio = math.exp(-abs(math.log(a) - logp))
            if ratio < worst:
                worst = ratio
    return 1.0 - worst


@dataclass(frozen=True)
class TriadIndicator:
    """A named triad-scoring function, as fed to :func:`check_axioms`."""

    name: str
    fn: Callable[[float, float, float], float]

    def __call__(self, x: float, y: float, z: float) -> float:
        return self.fn(x, y, z)


TRIAD_II = TriadIndicator("triad_ii", triad_ii)


@dataclass(frozen=True)
class AxiomCounterexample:
    axiom: int
    triad: tuple[float, float, float]
    value: float
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of sweeping an indicator over a grid of judgment values.

    axiom 1: value 0 exactly on consistent triads (y == x*z)
    axiom 2: values always in [0, 1)
    axiom 3: moving a triad strictly away from consistency strictly increases
             the value (checked in both the x*z < y and x*z > y regimes)
    """

    indicator: str
    grid: tuple[float, ...]
    axiom1_ok: bool
    axiom2_ok: bool
    axiom3_ok: bool
    counterexamples: tuple[AxiomCounterexample, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.axiom1_ok and self.axiom2_ok and self.axiom3_ok


def _validate_grid(grid: Sequence[float]) -> tuple[float, ...]:
    vals = tuple(sorted({float(g) for g in grid}))
    if len(vals) < 3:
        raise ValueError("axiom grid needs at least 3 distinct values")
    if any(not (math.isfinite(g) and g > 0) for g in vals):
        raise ValueError("axiom grid values must be positive and finite")
    return vals


def check_axioms(
    indicator: TriadIndicator | Callable[[float, float, float], float],
    grid: Sequence[float] = DEFAULT_AXIOM_GRID,
    max_counterexamples: int = 5,
) -> AxiomReport:
    """Sweep ``indicator`` over ``grid``-valued triads and test the three axioms.

    Monotonicity (axiom 3) is checked on component-wise moves away from
    consistency. Starting from a triad with x*z < y, every grid move with
    x' <= x, z' <= z, y' >= y must not lower the indicator, and moves that
    both strictly shrink the product and strictly grow y must strictly raise
    it; mirrored for x*z > y. Strictness uses a small guard so float noise
    does not count as a violation either way.
    """
    if isinstance(indicator, TriadIndicator):
        name, fn = indicator.name, indicator.fn
    else:
        name, fn = getattr(indicator, "__name__", "indicator"), indicator
    g = _validate_grid(grid)

    ok = [True, True, True]
    examples: list[AxiomCounterexample] = []
    stored = [0, 0, 0]  # per-axiom cap, so every failed axiom keeps evidence

    def note(axiom: int, triad, value, detail):
        ok[axiom - 1] = False
        if stored[axiom - 1] < max_counterexamples:
            stored[axiom - 1] += 1
            examples.append(AxiomCounterexample(axiom, triad, value, detail))

    # axiom 1: exact zero on consistent triads
    for x in g:
        for z in g:
            y = x * z
            v = fn(x, y, z)
            if abs(v) > _STRICT_GUARD:
                note(1, (x, y, z), v, f"consistent triad (y = x*z) scored {v!r}, expected 0")

    # axiom 2: range [0, 1)
    for x in g:
        for y in g:
            for z in g:
                v = fn(x, y, z)
                if not (0.0 <= v < 1.0):
                    note(2, (x, y, z), v, f"value {v!r} outside [0, 1)")

    # axiom 3: moving away from consistency never helps, jointly-strict moves hurt
    cache: dict[tuple[float, float, float], float] = {}

    def val(x, y, z):
        key = (x, y, z)
        if key not in cache:
            cache[key] = fn(x, y, z)
        return cache[key]

    for x in g:
        for z in g:
            p = x * z
            for y in g:
                if p == y:
                    continue
                v0 = val(x, y, z)
                if p < y:  # understated product; away = shrink x,z and/or grow y
                    moves = (
                        (x2, y2, z2)
                        for x2 in g if x2 <= x
                        for z2 in g if z2 <= z
                        for y2 in g if y2 >= y
                    )
                    for x2, y2, z2 in moves:
                        v1 = val(x2, y2, z2)
                        if v1 < v0 - _STRICT_GUARD:
                            note(
                                3, (x, y, z), v0,
                                f"move to ({x2}, {y2}, {z2}) gave {v1!r}, "
                                f"expected at least {v0!r}",
                            )
                        elif x2 * z2 < p and y2 > y and v1 <= v0 + _STRICT_GUARD:
                            note(
                                3, (x, y, z), v0,
                                f"strict move to ({x2}, {y2}, {z2}) gave {v1!r}, "
                                f"expected strictly above {v0!r}",
                            )
                else:  # overstated product; away = grow x,z and/or shrink y
                    moves = (
                        (x2, y2, z2)
                        for x2 in g if x2 >= x
                        for z2 in g if z2 >= z
                        for y2 in g if y2 <= y
                    )
                    for x2, y2, z2 in moves:
                        v1 = val(x2, y2, z2)
                        if v1 < v0 - _STRICT_GUARD:
                            note(
                                3, (x, y, z), v0,
                                f"move to ({x2}, {y2}, {z2}) gave {v1!r}, "
                                f"expected at least {v0!r}",
                            )
                        elif x2 * z2 > p and y2 < y and v1 <= v0 + _STRICT_GUARD:
                            note(
                                3, (x, y, z), v0,
                                f"strict move to ({x2}, {y2}, {z2}) gave {v1!r}, "
                                f"expected strictly above {v0!r}",
                            )

    return AxiomReport(
        indicator=name,
        grid=g,
        axiom1_ok=ok[0],
        axiom2_ok=ok[1],
        axiom3_ok=ok[2],
        counterexamples=tuple(examples),
    )
