"""Output-size-specified selection around an estimated weight vector.

Both operators relax preference uncertainty as a closed ball of radius rho
around the estimate ``w`` (intersected with the simplex) and binary-search
the least radius whose result reaches the requested size m:

* ``ord_query`` keeps tuples ball-dominated by fewer than ``k_depth`` others;
* ``oru_query`` keeps tuples that enter some top-``k_depth`` result for at
  least one vector in the ball.

Growing the ball only shrinks dominance and only grows reachability, so both
cardinalities are non-decreasing in rho and the search is well posed.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, Tuple
from .queries import check_weights
from .regions import ball_region, exists_weak_optimum, grid_sample, region_interval_d2
from .flexible import DOM_TOL, f_dominates

RHO_MAX = math.sqrt(2.0)
RHO_TOL = 1e-6
_RADIUS_GROUP = 1e-5  # entry radii closer than the search tolerance tie


class UnreachableSizeError(ValueError):
    """Requested output size exceeds what any radius can produce."""

    def __init__(self, requested: int, achievable: int):
        super().__init__(
            f"m unreachable: requested {requested}, max achievable {achievable}"
        )
        self.requested = requested
        self.achievable = achievable


@dataclass(frozen=True)
class OssResult:
    """Chosen ids (already ranked), the radius found, and the depth used."""

    ids: tuple[str, ...]
    rho_star: float
    k_depth: int


def rho_dominates(r1: Tuple, r2: Tuple, w: Sequence[float], rho: float) -> bool:
    """Ball dominance: region dominance on the radius-rho ball around w.

    At rho = 0 this degenerates to a strict score comparison at w itself.
    """
    if rho < 0.0:
        raise ValueError("rho must be >= 0")
    check_weights(w, r1.dim)
    return f_dominates(r1, r2, ball_region(tuple(w), rho))


def _dominator_counts(ds: Dataset, w: np.ndarray, rho: float) -> np.ndarray:
    n = len(ds)
    if n == 0:
        return np.zeros(0, dtype=int)
    if ds.dim == 2:
        lo, hi = region_interval_d2(ball_region(tuple(w), rho))
        a = ds.attr_array()
        p_lo = a @ np.array([lo, 1.0 - lo])
        p_hi = a @ np.array([hi, 1.0 - hi])
        d_lo = p_lo[:, None] - p_lo[None, :]
        d_hi = p_hi[:, None] - p_hi[None, :]
        mx = np.maximum(d_lo, d_hi)
        mn = np.minimum(d_lo, d_hi)
        dom = (mx <= DOM_TOL) & (mn < -DOM_TOL)
        return dom.sum(axis=0)
    reg = ball_region(tuple(w), rho)
    counts = np.zeros(n, dtype=int)
    for j, t in enumerate(ds.tuples):
        for i, s in enumerate(ds.tuples):
            if i != j and f_dominates(s, t, reg):
                counts[j] += 1
    return counts


def non_rho_dominated(
    ds: Dataset, w: Sequence[float], rho: float, k_depth: int = 1
) -> set[str]:
    """Ids ball-dominated by fewer than ``k_depth`` other tuples."""
    wv = check_weights(w, ds.dim)
    if rho < 0.0:
        raise ValueError("rho must be >= 0")
    if k_depth < 1:
        raise ValueError("k_depth must be >= 1")
    counts = _dominator_counts(ds, wv, rho)
    return {t.id for t, c in zip(ds.tuples, counts) if c < k_depth}


def _rank_by_score(ds: Dataset, w: np.ndarray, ids: set[str]) -> list[str]:
    a = ds.attr_array()
    scored = [
        (float(a[i] @ w), t.id) for i, t in enumerate(ds.tuples) if t.id in ids
    ]
    scored.sort()
    return [tid for _, tid in scored]


def _bisect_least_radius(count_at, m: int) -> tuple[float, float]:
    """Least rho with count(rho) >= m; returns (reported midpoint, feasible hi)."""
    lo, hi = 0.0, RHO_MAX
    while hi - lo > RHO_TOL:
        mid = 0.5 * (lo + hi)
        if count_at(mid) >= m:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi), hi


def ord_query(ds: Dataset, w: Sequence[float], m: int, k_depth: int = 1) -> OssResult:
    """Least-radius ball-undominated set truncated to exactly m ids.

    Survivors are ranked by score at w (ties by id). When the survivor count
    jumps past m at the critical radius, the ranking decides which m stay.
    Raises :class:`UnreachableSizeError` when even the full simplex cannot
    reach m survivors.
    """
    wv = check_weights(w, ds.dim)
    n = len(ds)
    if not 1 <= m <= n:
        raise ValueError("m must satisfy 1 <= m <= n")
    if k_depth < 1:
        raise ValueError("k_depth must be >= 1")

    def count_at(rho: float) -> int:
        return int((_dominator_counts(ds, wv, rho) < k_depth).sum())

    if count_at(0.0) >= m:
        rho_star, at = 0.0, 0.0
    else:
        achievable = count_at(RHO_MAX)
        if achievable < m:
            raise UnreachableSizeError(m, achievable)
        rho_star, at = _bisect_least_radius(count_at, m)
    survivors = non_rho_dominated(ds, tuple(wv), at, k_depth)
    ranked = _rank_by_score(ds, wv, survivors)[:m]
    return OssResult(tuple(ranked), rho_star, k_depth)


def _member_d2(a: np.ndarray, i: int, w: np.ndarray, rho: float, k_depth: int) -> bool:
    """Exact 2-d membership: beaten by fewer than k_depth rivals somewhere.

    A rival beats the tuple at v when its score is <= the tuple's. The beaten
    count is piecewise constant between pairwise breakpoints, and boundary
    points never beat the adjacent open cells, so scanning cell midpoints
    finds the minimum.
    """
    lo, hi = region_interval_d2(ball_region(tuple(w), rho))
    rows = []
    for j in range(a.shape[0]):
        if j != i and not np.array_equal(a[j], a[i]):
            rows.append(a[j] - a[i])
    if not rows:
        return True
    diffs = np.array(rows)  # rival minus target; beaten when diff . v <= 0
    alphas = diffs[:, 0] - diffs[:, 1]
    betas = diffs[:, 1]
    if hi - lo <= 1e-15:
        return int((alphas * lo + betas <= 0.0).sum()) < k_depth
    cuts = [lo, hi]
    for alpha, beta in zip(alphas, betas):
        if abs(alpha) > 1e-15:
            t = -beta / alpha
            if lo < t < hi:
                cuts.append(float(t))
    cuts.sort()
    for left, right in zip(cuts, cuts[1:]):
        mid = 0.5 * (left + right)
        if int((alphas * mid + betas <= 0.0).sum()) < k_depth:
            return True
    return False


def _member_general(ds: Dataset, i: int, w: np.ndarray, rho: float, k_depth: int) -> bool:
    reg = ball_region(tuple(w), rho)
    target = ds.tuples[i]
    rivals = [t for j, t in enumerate(ds.tuples) if j != i]
    if k_depth == 1:
        ok, _ = exists_weak_optimum(reg, target, rivals, strict=True)
        return ok
    # depth > 1 beyond two dimensions: sampled approximation on the ball
    a = ds.attr_array()
    diffs = np.array(
        [a[j] - a[i] for j in range(len(ds)) if j != i and not np.array_equal(a[j], a[i])]
    )
    if diffs.size == 0:
        return True
    for v in grid_sample(reg, 32):
        if int((diffs @ v <= 0.0).sum()) < k_depth:
            return True
    return False


def _membership(ds: Dataset, w: np.ndarray, rho: float, k_depth: int) -> set[str]:
    a = ds.attr_array()
    out: set[str] = set()
    for i, t in enumerate(ds.tuples):
        if ds.dim == 2:
            member = _member_d2(a, i, w, rho, k_depth)
        else:
            member = _member_general(ds, i, w, rho, k_depth)
        if member:
            out.add(t.id)
    return out


def oru_query(ds: Dataset, w: Sequence[float], m: int, k_depth: int = 1) -> OssResult:
    """Least-radius union of reachable top-``k_depth`` results, size exactly m.

    When the membership count jumps past m, survivors are ranked by their
    individual entry radius (the least rho at which they become reachable),
    then score at w, then id. Raises :class:`UnreachableSizeError` when the
    full simplex cannot reach m members, reporting the maximum achievable.
    """
    wv = check_weights(w, ds.dim)
    n = len(ds)
    if not 1 <= m <= n:
        raise ValueError("m must satisfy 1 <= m <= n")
    if k_depth < 1:
        raise ValueError("k_depth must be >= 1")

    def members_at(rho: float) -> set[str]:
        return _membership(ds, wv, rho, k_depth)

    if len(members_at(0.0)) >= m:
        rho_star, at = 0.0, 0.0
    else:
        achievable = len(members_at(RHO_MAX))
        if achievable < m:
            raise UnreachableSizeError(m, achievable)
        rho_star, at = _bisect_least_radius(lambda r: len(members_at(r)), m)
    members = members_at(at)

    if len(members) <= m:
        ranked = _rank_by_score(ds, wv, members)[:m]
        return OssResult(tuple(ranked), rho_star, k_depth)

    # overshoot: order by entry radius, grouped at the search tolerance
    a = ds.attr_array()
    idx_of = {t.id: i for i, t in enumerate(ds.tuples)}
    keyed = []
    for tid in members:
        i = idx_of[tid]
        if ds.dim == 2:
            member_fn = lambda r, i=i: _member_d2(a, i, wv, r, k_depth)
        else:
            member_fn = lambda r, i=i: _member_general(ds, i, wv, r, k_depth)
        if member_fn(0.0):
            entry = 0.0
        else:
            lo, hi = 0.0, at
            while hi - lo > RHO_TOL:
                mid = 0.5 * (lo + hi)
                if member_fn(mid):
                    hi = mid
                else:
                    lo = mid
            entry = 0.5 * (lo + hi)
        score = float(a[i] @ wv)
        keyed.append((round(entry / _RADIUS_GROUP), score, tid))
    keyed.sort()
    return OssResult(tuple(tid for _, _, tid in keyed[:m]), rho_star, k_depth)
