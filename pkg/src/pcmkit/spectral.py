"""Eigenvalue-based consistency measures and parametric matrix families.

Covers the classic machinery: principal eigenvalue via power iteration,
consistency index CI = (lambda_max - n) / (n - 1), consistency ratio
CR = CI / RI against a random-index table, plus two one-parameter families
(``cpc``: a single corrupted corner judgment, ``fpc``: every judgment set to
the same value x) whose principal eigenvalues have closed or near-closed
forms. These families make good stress tests because their CR can stay
acceptable while individual judgments are badly wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Mapping, NamedTuple

import numpy as np

from .matrix import MAX_SIZE, PCMatrix, WeightVector
from .indicators import kii, triad_inconsistencies

DEFAULT_POWER_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000

#: classic random-index values for n = 3..7 (the n=3 entry is the commonly
#: tabulated 0.5245; some older tables round it to 0.52, see ALTERNATE_RI_N3)
_DEFAULT_RI_VALUES = {3: 0.5245, 4: 0.882, 5: 1.109, 6: 1.252, 7: 1.341}
ALTERNATE_RI_N3 = 0.52

#: the usual acceptance threshold for the consistency ratio
CR_ACCEPTANCE_THRESHOLD = 0.1


class ConvergenceError(RuntimeError):
    """Power iteration failed to reach the requested tolerance."""

    def __init__(self, message: str, residual: float | None = None, iterations: int | None = None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class EigenResult:
    """Principal eigenpair estimate.

    residual is max_i |(M w)_i - lambda w_i| / w_i at the returned vector.
    """

    lambda_max: float
    weights: WeightVector
    iterations: int
    residual: float


def power_iteration(
    matrix: PCMatrix,
    tol: float = DEFAULT_POWER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> EigenResult:
    """Principal eigenvalue and eigenvector of a positive reciprocal matrix.

    Starts from the uniform vector, renormalizes to sum 1 each step, and stops
    when both the eigenvalue change and the componentwise residual fall under
    ``tol``. Positive matrices have a simple dominant eigenvalue, so this
    converges for every valid input; ConvergenceError signals ``max_iter``
    was too small for the requested tolerance.
    """
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    v = matrix.values
    n = matrix.n
    w = np.full(n, 1.0 / n)
    mw = v @ w
    lam = float(mw.sum())  # sum(M w) / sum(w) with sum(w) == 1
    residual = math.inf
    for it in range(1, max_iter + 1):
        w_next = mw / mw.sum()
        mw_next = v @ w_next
        lam_next = float(mw_next.sum())
        residual = float(np.max(np.abs(mw_next - lam_next * w_next) / w_next))
        if abs(lam_next - lam) <= tol and residual <= tol:
            return EigenResult(
                lambda_max=lam_next,
                weights=WeightVector.normalized(w_next.tolist()),
                iterations=it,
                residual=residual,
            )
        w, mw, lam = w_next, mw_next, lam_next
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations "
        f"(last residual {residual:.3e}, tol {tol:.3e})",
        residual=residual,
        iterations=max_iter,
    )


def saaty_ci(lambda_max: float, n: int) -> float:
    """Consistency index (lambda_max - n) / (n - 1).

    Tiny negative values can occur for numerically consistent matrices; they
    are returned as-is rather than clamped.
    """
    if not (isinstance(n, int) and n >= 2):
        raise ValueError(f"need integer n >= 2, got {n!r}")
    if not math.isfinite(lambda_max):
        raise ValueError(f"lambda_max must be finite, got {lambda_max!r}")
    return (lambda_max - n) / (n - 1)


class MissingRandomIndexError(KeyError):
    """No random-index value is available for this matrix size."""

    def __init__(self, n: int):
        super().__init__(f"no random index for n={n}")
        self.n = n


class RITable:
    """Random-index lookup for the consistency ratio.

    Maps matrix size n to the mean consistency index of random matrices of
    that size. ``extend=True`` lets sizes beyond the largest tabulated n fall
    back to the last known value (useful for rough large-n demos); otherwise
    missing sizes raise MissingRandomIndexError.
    """

    def __init__(self, values: Mapping[int, float], extend: bool = False):
        cleaned: dict[int, float] = {}
        for k, v in values.items():
            k = int(k)
            v = float(v)
            if k < 3:
                raise ValueError(f"random-index entries start at n=3, got n={k}")
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"random index for n={k} must be positive, got {v!r}")
            cleaned[k] = v
        if 3 not in cleaned:
            raise ValueError("random-index table must include n=3")
        self._values = dict(sorted(cleaned.items()))
        self.extend = bool(extend)

    def get(self, n: int) -> float:
        if n in self._values:
            return self._values[n]
        top = max(self._values)
        if self.extend and n > top:
            return self._values[top]
        raise MissingRandomIndexError(n)

    def __contains__(self, n: int) -> bool:
        try:
            self.get(n)
        except MissingRandomIndexError:
            return False
        return True

    def to_dict(self) -> dict[int, float]:
        return dict(self._values)

    def with_extension(self) -> "RITable":
        return RITable(self._values, extend=True)

    def __repr__(self) -> str:
        return f"RITable({self._values!r}, extend={self.extend})"


DEFAULT_RI_TABLE = RITable(_DEFAULT_RI_VALUES)


def saaty_cr(ci: float, n: int, ri_table: RITable = DEFAULT_RI_TABLE) -> float:
    """Consistency ratio CI / RI(n). Raises MissingRandomIndexError when the
    table has no entry for n (and is not extended)."""
    if not math.isfinite(ci):
        raise ValueError(f"ci must be finite, got {ci!r}")
    return ci / ri_table.get(n)


# -- parametric families ----------------------------------------------------


def _check_family_args(x: float, n: int, min_n: int) -> tuple[float, int]:
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"x must be positive and finite, got {x!r}")
    if not (isinstance(n, int) and min_n <= n <= MAX_SIZE):
        raise ValueError(f"need integer {min_n} <= n <= {MAX_SIZE}, got {n!r}")
    return x, n


def cpc(x: float, n: int) -> PCMatrix:
    """Corner-perturbed matrix: all ones except a_1n = x (and a_n1 = 1/x).

    Exactly n-2 triads are inconsistent, each scoring triad_ii = 1 - min(x, 1/x).
    """
    x, n = _check_family_args(x, n, min_n=3)
    upper = {(i, j): 1.0 for i, j in combinations(range(1, n + 1), 2)}
    upper[(1, n)] = x
    return PCMatrix.from_upper(n, upper)


def fpc(x: float, n: int) -> PCMatrix:
    """Fully-perturbed matrix: every above-diagonal judgment equals x, so all
    C(n,3) triads are (x, x, x)."""
    x, n = _check_family_args(x, n, min_n=3)
    upper = {(i, j): x for i, j in combinations(range(1, n + 1), 2)}
    return PCMatrix.from_upper(n, upper)


def cpc_lambda_max(x: float, n: int) -> float:
    """Principal eigenvalue of cpc(x, n), from its characteristic cubic.

    lambda_max is the largest root of l^2 (l - n) = (n - 2)(1/x + x - 2),
    found by bisection; no matrix is built, so n is not capped.
    """
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"x must be positive and finite, got {x!r}")
    if not (isinstance(n, int) and n >= 3):
        raise ValueError(f"need integer n >= 3, got {n!r}")
    rhs = (n - 2) * (1.0 / x + x - 2.0)
    if rhs == 0.0:
        return float(n)

    def g(lam: float) -> float:
        return lam * lam * (lam - n) - rhs

    lo = float(n)
    hi = n + rhs / (n * n)  # analytic upper bound on lambda_max - n
    while g(hi) < 0.0:  # guard against rounding right at the bound
        hi = n + 2.0 * (hi - n) + 1e-9
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return 0.5 * (lo + hi)


def fpc_lambda_max(x: float, n: int) -> float:
    """Principal eigenvalue of fpc(x, n), in closed form."""
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"x must be positive and finite, got {x!r}")
    if not (isinstance(n, int) and n >= 3):
        raise ValueError(f"need integer n >= 3, got {n!r}")
    if x == 1.0:
        return float(n)
    t = x ** (2.0 / n)
    return ((x - 1.0) / x) * ((x + t) / (t - 1.0))


class CPCBounds(NamedTuple):
    ci: float
    tight_bound: float
    loose_bound: float


def cpc_ci_bounds(x: float, n: int) -> CPCBounds:
    """CI of cpc(x, n) together with its two analytic upper bounds.

    Returns (ci, tight_bound, loose_bound) with ci <= tight <= loose:
    tight = ((n-2)/(n-1)) (1/x + x - 2) / n^2, loose = x / n^2. Requires
    x >= 1 (the loose bound only holds on that side).
    """
    x = float(x)
    if not (math.isfinite(x) and x >= 1.0):
        raise ValueError(f"bounds need x >= 1, got {x!r}")
    if not (isinstance(n, int) and n >= 3):
        raise ValueError(f"need integer n >= 3, got {n!r}")
    lam = cpc_lambda_max(x, n)
    ci = (lam - n) / (n - 1)
    tight = ((n - 2) / (n - 1)) * (1.0 / x + x - 2.0) / (n * n)
    loose = x / (n * n)
    return CPCBounds(ci, tight, loose)


# -- eigenvalue lower bounds from triad inconsistency -----------------------


def eigen_bound_from_worst_triad(matrix: PCMatrix) -> float:
    """Lower bound on lambda_max driven by the single worst triad:
    n + kii^2 / (3 n (1 - kii)^(1/3))."""
    value = kii(matrix).value
    n = matrix.n
    return n + value * value / (3.0 * n * float(np.cbrt(1.0 - value)))


def eigen_bound_from_all_triads(matrix: PCMatrix) -> float:
    """Lower bound on lambda_max pooling every triad:
    n + sum_t kii_t^2 / (1 - kii_t)^(1/3) / (3 n (n - 2)). Needs n >= 3;
    at n == 3 it coincides with the worst-triad bound."""
    n = matrix.n
    vals = triad_inconsistencies(matrix)
    if n == 3:
        value = float(vals[0])
        return n + value * value / (3.0 * n * float(np.cbrt(1.0 - value)))
    s = float(np.sum(vals * vals / np.cbrt(1.0 - vals)))
    return n + s / (3.0 * n * (n - 2))


# -- acceptance-threshold search and error scales ----------------------------


def max_acceptable_x(
    family: str,
    n: int,
    cr_threshold: float = CR_ACCEPTANCE_THRESHOLD,
    ri_table: RITable = DEFAULT_RI_TABLE,
) -> float:
    """Largest x >= 1 for which the family's CR stays within ``cr_threshold``.

    ``family`` is "cpc" or "fpc". CR grows monotonically in x on x >= 1, so
    this is a plain bisection on the closed-form eigenvalues.
    """
    fam = family.lower()
    lam_of: Callable[[float, int], float]
    if fam == "cpc":
        lam_of = cpc_lambda_max
    elif fam == "fpc":
        lam_of = fpc_lambda_max
    else:
        raise ValueError(f"unknown family {family!r}, expected 'cpc' or 'fpc'")
    if not (isinstance(n, int) and n >= 3):
        raise ValueError(f"need integer n >= 3, got {n!r}")
    if not (cr_threshold > 0 and math.isfinite(cr_threshold)):
        raise ValueError(f"cr_threshold must be positive, got {cr_threshold!r}")
    ri = ri_table.get(n)

    def cr_of(x: float) -> float:
        return ((lam_of(x, n) - n) / (n - 1)) / ri

    lo, hi = 1.0, 2.0
    while cr_of(hi) < cr_threshold:
        lo, hi = hi, hi * 2.0
        if hi > 1e12:
            raise RuntimeError("no acceptable-x crossover found below 1e12")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if cr_of(mid) < cr_threshold:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    return 0.5 * (lo + hi)


def delta_error(x: float) -> float:
    """Relative error |1 - 1/x| committed by accepting a judgment inflated by x."""
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"x must be positive and finite, got {x!r}")
    return abs(1.0 - 1.0 / x)


def ratio_error(x: float) -> float:
    """Error expressed as the raw ratio x itself (x = 2.62 reads as 262%)."""
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"x must be positive and finite, got {x!r}")
    return x


# -- random matrices ---------------------------------------------------------


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def random_reciprocal(n: int, rng=None, scale: float = 5.0) -> PCMatrix:
    """Random reciprocal matrix, upper entries exp(U[-ln(scale), ln(scale)]).

    ``rng`` may be a numpy Generator, a seed, or None.
    """
    if not (isinstance(n, int) and 2 <= n <= MAX_SIZE):
        raise ValueError(f"need integer 2 <= n <= {MAX_SIZE}, got {n!r}")
    if not (math.isfinite(scale) and scale > 1.0):
        raise ValueError(f"scale must be > 1, got {scale!r}")
    gen = _as_generator(rng)
    span = math.log(scale)
    pairs = list(combinations(range(1, n + 1), 2))
    draws = np.exp(gen.uniform(-span, span, size=len(pairs)))
    return PCMatrix.from_upper(n, {pair: float(v) for pair, v in zip(pairs, draws)})


#: the classic discrete judgment scale 1/9..9, used when estimating RI values
SAATY_SCALE = tuple(1.0 / k for k in range(9, 1, -1)) + tuple(float(k) for k in range(1, 10))


def estimate_ri(n: int, samples: int = 500, rng=None) -> float:
    """Monte-Carlo estimate of the random index for size n.

    Draws upper triangles uniformly from the discrete 1/9..9 scale and
    averages the consistency index. A few hundred samples reproduce the
    tabulated values to roughly two decimals; this is a sanity-check tool,
    not a replacement for the shipped table.
    """
    if not (isinstance(n, int) and 3 <= n <= MAX_SIZE):
        raise ValueError(f"need integer 3 <= n <= {MAX_SIZE}, got {n!r}")
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    gen = _as_generator(rng)
    pairs = list(combinations(range(1, n + 1), 2))
    scale = np.array(SAATY_SCALE)
    total = 0.0
    for _ in range(samples):
        draws = gen.choice(scale, size=len(pairs))
        m = PCMatrix.from_upper(n, {pair: float(v) for pair, v in zip(pairs, draws)})
        total += saaty_ci(power_iteration(m).lambda_max, n)
    return total / samples
