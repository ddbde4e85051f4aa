"""Core model for multiplicative pairwise comparison matrices.

A comparison matrix stores "how many times better" judgments: entry (i, j)
says how strongly alternative i beats alternative j. The matrix is square,
every entry is positive, the diagonal is 1 and a_ji == 1/a_ij. All public
indices are 1-based, matching the way these matrices are written out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

MAX_SIZE = 64
#: relative tolerance for reciprocity / diagonal checks on ingested grids
GRID_RTOL = 1e-9
#: default relative tolerance for the consistency test
CONSISTENCY_RTOL = 1e-9


class MatrixValidationError(ValueError):
    """Input cannot form a valid comparison matrix.

    ``code`` is a stable machine-readable tag (e.g. ``"reciprocity_violation"``)
    so callers such as the HTTP service can map failures without parsing text.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _require_positive(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise MatrixValidationError(
            "nonpositive_entry", f"{what} must be a positive finite number, got {value!r}"
        )
    return value


@dataclass(frozen=True)
class Triad:
    """One triple of judgments a_ij, a_ik, a_jk for indices i < j < k (1-based)."""

    i: int
    j: int
    k: int
    x: float  # a_ij
    y: float  # a_ik
    z: float  # a_jk

    def __post_init__(self):
        if not (1 <= self.i < self.j < self.k):
            raise ValueError(f"triad indices must satisfy 1 <= i < j < k, got {(self.i, self.j, self.k)}")
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"triad value {name}={v!r} must be positive and finite")

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class WeightVector:
    """Positive priority weights, normalized to sum exactly to 1 (within 1e-12)."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("weight vector needs at least 2 entries")
        if any(not (math.isfinite(v) and v > 0) for v in self.values):
            raise ValueError("weights must be positive finite numbers")
        total = math.fsum(self.values)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {total!r}")

    @classmethod
    def normalized(cls, raw: Iterable[float]) -> "WeightVector":
        """Scale a raw positive vector so it sums to 1."""
        vals = [float(v) for v in raw]
        if any(not (math.isfinite(v) and v > 0) for v in vals):
            raise ValueError("weights must be positive finite numbers")
        total = math.fsum(vals)
        scaled = [v / total for v in vals]
        # fsum of v/total can still be 1 +/- a few ulp; nudge the largest entry
        drift = math.fsum(scaled) - 1.0
        if drift != 0.0:
            top = max(range(len(scaled)), key=scaled.__getitem__)
            scaled[top] -= drift
        return cls(tuple(scaled))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, idx: int) -> float:
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)


class PCMatrix:
    """Immutable positive reciprocal comparison matrix.

    Reciprocity is structural: instances are always built from the upper
    triangle, the diagonal is pinned at 1 and the lower triangle holds exact
    float reciprocals. Edits go through :meth:`with_entry`, which returns a
    new matrix.
    """

    __slots__ = ("_values",)

    def __init__(self, values: np.ndarray):
        # internal: expects an already-reciprocal square array.
        # Use make_matrix / from_grid / from_upper to build one.
        arr = np.asarray(values, dtype=float)
        arr = arr.copy()
        arr.setflags(write=False)
        self._values = arr

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], float]) -> "PCMatrix":
        """Build from a complete upper triangle, keyed by 1-based (i, j), i < j."""
        if n < 2:
            raise MatrixValidationError("too_small", f"matrix size must be at least 2, got {n}")
        if n > MAX_SIZE:
            raise MatrixValidationError("too_large", f"matrix size must be at most {MAX_SIZE}, got {n}")
        values = np.ones((n, n), dtype=float)
        seen = set()
        for (i, j), v in upper.items():
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= n):
                raise MatrixValidationError(
                    "bad_index", f"upper-triangle key must have 1 <= i < j <= {n}, got {(i, j)}"
                )
            v = _require_positive(v, f"entry ({i},{j})")
            values[i - 1, j - 1] = v
            values[j - 1, i - 1] = 1.0 / v
            seen.add((i, j))
        missing = [(i, j) for i, j in combinations(range(1, n + 1), 2) if (i, j) not in seen]
        if missing:
            raise MatrixValidationError(
                "missing_pair", f"incomplete upper triangle, missing {missing[:5]}"
            )
        return cls(values)

    @classmethod
    def from_grid(cls, rows: Sequence[Sequence[float]], rtol: float = GRID_RTOL) -> "PCMatrix":
        """Validate a full square grid and rebuild it from its upper triangle.

        The grid must be square, positive, have ones on the diagonal and satisfy
        a_ij * a_ji == 1 within ``rtol``. The returned matrix re-imposes exact
        reciprocity from the upper triangle.
        """
        n = len(rows)
        if n < 2:
            raise MatrixValidationError("too_small", f"matrix size must be at least 2, got {n}")
        if n > MAX_SIZE:
            raise MatrixValidationError("too_large", f"matrix size must be at most {MAX_SIZE}, got {n}")
        if any(len(r) != n for r in rows):
            raise MatrixValidationError(
                "ragged_grid", f"grid must be square, got row lengths {[len(r) for r in rows]}"
            )
        arr = np.empty((n, n), dtype=float)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                arr[i, j] = _require_positive(v, f"entry ({i + 1},{j + 1})")
        diag = np.diagonal(arr)
        if np.any(np.abs(diag - 1.0) > rtol):
            bad = int(np.argmax(np.abs(diag - 1.0))) + 1
            raise MatrixValidationError(
                "bad_diagonal", f"diagonal entry ({bad},{bad}) = {float(diag[bad - 1])!r} is not 1"
            )
        prod = arr * arr.T
        if np.any(np.abs(prod - 1.0) > rtol):
            i, j = np.unravel_index(int(np.argmax(np.abs(prod - 1.0))), prod.shape)
            raise MatrixValidationError(
                "reciprocity_violation",
                f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not reciprocal: "
                f"{float(arr[i, j])!r} * {float(arr[j, i])!r} = {float(arr[i, j] * arr[j, i])!r}",
            )
        upper = {
            (int(i) + 1, int(j) + 1): float(arr[i, j])
            for i, j in zip(*np.triu_indices(n, k=1))
        }
        return cls.from_upper(n, upper)

    # -- basic access ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> np.ndarray:
        """Read-only (n, n) float array of the judgments."""
        return self._values

    def entry(self, i: int, j: int) -> float:
        """1-based entry access."""
        self._check_index(i)
        self._check_index(j)
        return float(self._values[i - 1, j - 1])

    def _check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.n):
            raise MatrixValidationError("bad_index", f"index {i!r} out of range 1..{self.n}")

    def to_rows(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self._values]

    def __repr__(self) -> str:
        return f"PCMatrix(n={self.n})"

    # -- editing ----------------------------------------------------------

    def with_entry(self, i: int, j: int, value: float) -> "PCMatrix":
        """Return a new matrix with (i, j) set to ``value`` and (j, i) to 1/value."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise MatrixValidationError("bad_index", "diagonal entries are fixed at 1")
        value = _require_positive(value, f"entry ({i},{j})")
        arr = self._values.copy()
        arr[i - 1, j - 1] = value
        arr[j - 1, i - 1] = 1.0 / value
        return PCMatrix(arr)


def make_matrix(pairs: Iterable[tuple[int, int, float]]) -> PCMatrix:
    """Build a matrix from upper-triangle judgments (i, j, value), 1-based.

    The size is inferred from the largest index; every pair i < j must appear
    exactly once.
    """
    upper: dict[tuple[int, int], float] = {}
    n = 0
    for i, j, v in pairs:
        if not (isinstance(i, int) and isinstance(j, int)):
            raise MatrixValidationError("bad_index", f"indices must be integers, got {(i, j)!r}")
        if not (1 <= i < j):
            raise MatrixValidationError("bad_index", f"need 1 <= i < j, got {(i, j)}")
        if (i, j) in upper:
            raise MatrixValidationError("duplicate_pair", f"pair ({i},{j}) given twice")
        upper[(i, j)] = _require_positive(v, f"entry ({i},{j})")
        n = max(n, j)
    if n < 2:
        raise MatrixValidationError("too_small", "need at least one judgment pair")
    return PCMatrix.from_upper(n, upper)


def _triad_index_arrays(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """0-based index arrays (i, j, k) for all C(n,3) triads, lexicographic."""
    idx = np.array(list(combinations(range(n), 3)), dtype=np.intp)
    return idx[:, 0], idx[:, 1], idx[:, 2]


def triads(matrix: PCMatrix) -> list[Triad]:
    """All C(n,3) triads in lexicographic index order."""
    if matrix.n < 3:
        return []
    v = matrix.values
    out = []
    for i, j, k in combinations(range(matrix.n), 3):
        out.append(
            Triad(i + 1, j + 1, k + 1, float(v[i, j]), float(v[i, k]), float(v[j, k]))
        )
    return out


def triad_values(matrix: PCMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (x, y, z) arrays over all triads, same order as :func:`triads`."""
    i, j, k = _triad_index_arrays(matrix.n)
    v = matrix.values
    return v[i, j], v[i, k], v[j, k]


def is_consistent(matrix: PCMatrix, tol: float = CONSISTENCY_RTOL) -> bool:
    """True when a_ik == a_ij * a_jk for every i < j < k, within relative ``tol``.

    A 2x2 reciprocal matrix has no triads and is always consistent.
    """
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    if matrix.n < 3:
        return True
    x, y, z = triad_values(matrix)
    return bool(np.all(np.abs(y - x * z) <= tol * y))


def geometric_mean_weights(matrix: PCMatrix) -> WeightVector:
    """Priority weights: row geometric means, normalized to sum 1."""
    logs = np.log(matrix.values)
    raw = np.exp(logs.mean(axis=1))
    return WeightVector.normalized(raw.tolist())


def consistent_approx(weights: WeightVector) -> PCMatrix:
    """The consistent matrix with entries w_i / w_j induced by a weight vector."""
    n = len(weights)
    if n > MAX_SIZE:
        raise MatrixValidationError("too_large", f"weight vector too long ({n} > {MAX_SIZE})")
    upper = {
        (i, j): weights[i - 1] / weights[j - 1]
        for i, j in combinations(range(1, n + 1), 2)
    }
    return PCMatrix.from_upper(n, upper)


def approx_error(value: float, approx: float) -> float:
    """Relative deviation |1 - approx/value| of an approximation from a true value."""
    value = float(value)
    approx = float(approx)
    if value == 0.0 or not math.isfinite(value):
        raise ValueError(f"reference value must be nonzero and finite, got {value!r}")
    if not math.isfinite(approx):
        raise ValueError(f"approximation must be finite, got {approx!r}")
    return abs(1.0 - approx / value)
