"""
s-means and s-concavity certification of functions of one variable.

A positive function f is s-concave when

    f((1 - λ) t1 + λ t2) >= M_s(f(t1), f(t2); λ)

for all t1, t2 in its positivity set. Every test point records its deficit
M_s - f(mid), in the units of f; a test fails when the deficit exceeds
tol * max f.
"""
import math
from typing import Callable, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

import config
from errors import InsufficientDataError, ParameterRangeError
from grid_function import GridFunction


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    t1: float
    t2: float
    lam: float
    deficit: float


class ConcavityReport(BaseModel):
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    s: float
    verdict: Literal["pass", "fail"]
    violations: List[Violation]
    violation_count: int
    worst_deficit: float
    tolerance: float
    notes: List[str] = []

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def s_mean(a: float, b: float, lam: float, s: float) -> float:
    """
    M_s(a, b; λ) = ((1 - λ) a^s + λ b^s)^(1/s); geometric mean at s = 0,
    min at s = -inf, max at s = +inf.

    Raises:
        ParameterRangeError: if a <= 0, b <= 0 or λ outside [0, 1]
    """
    if not (a > 0 and b > 0):
        raise ParameterRangeError(f"s-mean needs a, b > 0, got {a}, {b}")
    if not 0 <= lam <= 1:
        raise ParameterRangeError(f"λ must lie in [0, 1], got {lam}")
    return float(_s_mean_array(np.asarray(a, float), np.asarray(b, float), lam, s))


def _s_mean_array(a: np.ndarray, b: np.ndarray, lam, s: float) -> np.ndarray:
    if s == math.inf:
        return np.maximum(a, b)
    if s == -math.inf:
        return np.minimum(a, b)
    lam = np.asarray(lam, float)
    la, lb = np.log(a), np.log(b)
    geometric = (1 - lam) * la + lam * lb
    if s == 0:
        return np.exp(geometric)
    # log-domain around the larger log for s > 0 (smaller for s < 0) so s·Δ <= 0
    swap = (la < lb) if s > 0 else (la > lb)
    ref = np.where(swap, lb, la)
    other = np.where(swap, la, lb)
    w = np.where(swap, 1 - lam, lam)
    with np.errstate(divide="ignore"):
        # w = 1 can hit log1p(-1); those entries are replaced by the λ = 1 branch below
        log_mean = ref + np.log1p(w * np.expm1(s * (other - ref))) / s
    # s·log underflows below eps; the limit is the geometric mean
    tiny = abs(s) * np.maximum(np.abs(la), np.abs(lb)) < np.finfo(float).eps
    log_mean = np.where(tiny, geometric, log_mean)
    log_mean = np.where(lam == 0, la, np.where(lam == 1, lb, log_mean))
    return np.exp(log_mean)


class _Tests:
    """Accumulates (t1, t2, λ, deficit) rows from vectorized test batches."""

    def __init__(self, s: float):
        self.s = s
        self.rows = []

    def add(self, t1, t2, lam, a, b, f_mid):
        t1, t2, a, b = map(np.asarray, (t1, t2, a, b))
        lam = np.broadcast_to(np.asarray(lam, float), t1.shape)
        f_mid = np.nan_to_num(np.asarray(f_mid, float), nan=0.0)
        deficit = _s_mean_array(a, b, lam, self.s) - f_mid
        self.rows.append(np.column_stack([t1, t2, lam, deficit]))

    def report(self, tol: float, scale: float, notes: List[str]) -> ConcavityReport:
        rows = np.concatenate(self.rows) if self.rows else np.empty((0, 4))
        deficits = rows[:, 3]
        failing = rows[deficits > tol * scale]
        failing = failing[np.argsort(-failing[:, 3])]
        worst = float(deficits.max()) if deficits.size else 0.0
        violations = [
            Violation(t1=float(r[0]), t2=float(r[1]), lam=float(r[2]), deficit=float(r[3]))
            for r in failing[:config.MAX_REPORTED_VIOLATIONS]
        ]
        return ConcavityReport(
            s=self.s,
            verdict="fail" if len(failing) else "pass",
            violations=violations,
            violation_count=int(len(failing)),
            worst_deficit=max(0.0, worst),
            tolerance=tol,
            notes=notes + [f"{len(rows)} tests, scale max f = {scale:.6g}"],
        )


def _positive(values: np.ndarray) -> np.ndarray:
    return np.isfinite(values) & (values > 0)


def _infinite_s_note(s: float) -> List[str]:
    if s == math.inf:
        return ["s = +inf: f must be constant on its positivity set"]
    if s == -math.inf:
        return ["s = -inf: quasi-concavity test against the smaller endpoint"]
    return []


def check_s_concave(
    f: Callable[[float], float],
    t_lo: float,
    t_hi: float,
    s: float,
    grid: int = config.DEFAULT_GRID,
    tol: Optional[float] = None,
) -> ConcavityReport:
    """
    Certify s-concavity of an evaluable f on [t_lo, t_hi].

    Tests every pair of grid nodes at λ in LAMBDA_SAMPLES, then a dense
    midpoint sweep with several strides. Grid nodes with f = 0 are skipped
    as endpoints; a zero between two positive nodes is a violation.

    Raises:
        InsufficientDataError: if fewer than 3 grid nodes have f > 0
    """
    if grid < 3:
        raise ParameterRangeError(f"grid must have at least 3 nodes, got {grid}")
    if not t_lo < t_hi:
        raise ParameterRangeError(f"need t_lo < t_hi, got [{t_lo}, {t_hi}]")
    tol = config.CLOSED_FORM_TOL if tol is None else tol

    ts = np.linspace(t_lo, t_hi, grid)
    vs = np.array([f(t) for t in ts], dtype=float)
    valid = _positive(vs)
    if valid.sum() < 3:
        raise InsufficientDataError()

    notes = _infinite_s_note(s)
    skipped = int(grid - valid.sum())
    if skipped:
        notes.append(f"{skipped} grid nodes with f = 0 skipped as endpoints")
    scale = float(vs[valid].max())

    tests = _Tests(s)
    idx = np.flatnonzero(valid)
    first, second = np.triu_indices(idx.size, k=1)
    i, j = idx[first], idx[second]
    for lam in config.LAMBDA_SAMPLES:
        t_mid = (1 - lam) * ts[i] + lam * ts[j]
        f_mid = [f(t) for t in t_mid]
        tests.add(ts[i], ts[j], lam, vs[i], vs[j], f_mid)

    dense_ts = np.linspace(t_lo, t_hi, (grid - 1) * config.DENSE_SWEEP_FACTOR + 1)
    dense_vs = np.array([f(t) for t in dense_ts], dtype=float)
    dense_valid = _positive(dense_vs)
    for stride in config.DENSE_SWEEP_STRIDES:
        i = np.arange(dense_ts.size - 2 * stride)
        j = i + 2 * stride
        keep = dense_valid[i] & dense_valid[j]
        i, j = i[keep], j[keep]
        tests.add(dense_ts[i], dense_ts[j], 0.5, dense_vs[i], dense_vs[j], dense_vs[i + stride])

    return tests.report(tol, scale, notes)


def _subsample(n: int, limit: int) -> np.ndarray:
    if n <= limit:
        return np.arange(n)
    return np.unique(np.linspace(0, n - 1, limit).round().astype(int))


def check_s_concave_samples(ts, vs, s: float, tol: Optional[float] = None) -> ConcavityReport:
    """
    Certify s-concavity of a sampled curve from node triples i < k < j,
    with λ = (t_k - t_i) / (t_j - t_i).

    Long curves are thinned to MAX_TRIPLE_NODES nodes for the all-triples
    test; consecutive triples of the full curve are always tested.

    Raises:
        InsufficientDataError: if fewer than 3 samples have f > 0
    """
    ts = np.asarray(ts, dtype=float)
    vs = np.asarray(vs, dtype=float)
    if ts.shape != vs.shape or ts.ndim != 1:
        raise ParameterRangeError("t and value samples must be 1-D arrays of equal length")
    if ts.size and np.any(np.diff(ts) <= 0):
        raise ParameterRangeError("sample abscissae must be strictly increasing")
    tol = config.CLOSED_FORM_TOL if tol is None else tol

    valid = _positive(vs)
    if valid.sum() < 3:
        raise InsufficientDataError()

    notes = _infinite_s_note(s)
    skipped = int(vs.size - valid.sum())
    if skipped:
        notes.append(f"{skipped} samples with f = 0 skipped as endpoints")
    scale = float(vs[valid].max())

    tests = _Tests(s)
    nodes = _subsample(ts.size, config.MAX_TRIPLE_NODES)
    if nodes.size < ts.size:
        notes.append(f"all-triples test thinned to {nodes.size} of {ts.size} samples")
    for pos in range(1, nodes.size - 1):
        k = nodes[pos]
        i, j = np.meshgrid(nodes[:pos], nodes[pos + 1:], indexing="ij")
        i, j = i.ravel(), j.ravel()
        keep = valid[i] & valid[j]
        i, j = i[keep], j[keep]
        lam = (ts[k] - ts[i]) / (ts[j] - ts[i])
        tests.add(ts[i], ts[j], lam, vs[i], vs[j], np.full(i.shape, vs[k]))

    if nodes.size < ts.size:
        i = np.arange(ts.size - 2)
        keep = valid[i] & valid[i + 2]
        i = i[keep]
        lam = (ts[i + 1] - ts[i]) / (ts[i + 2] - ts[i])
        tests.add(ts[i], ts[i + 2], lam, vs[i], vs[i + 2], vs[i + 1])

    return tests.report(tol, scale, notes)


def check_gamma_concave_fn(g: GridFunction, gamma: float, tol: Optional[float] = None) -> ConcavityReport:
    """γ-concavity of a sampled function of x; absent nodes count as g = 0."""
    tol = config.GRID_TOL if tol is None else tol
    values = np.nan_to_num(g.values, nan=0.0)
    return check_s_concave_samples(g.nodes, values, gamma, tol)
