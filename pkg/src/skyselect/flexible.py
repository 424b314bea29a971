"""Region-restricted dominance and the two flexible skyline operators.

A tuple r1 region-dominates r2 when its score is never worse anywhere in the
weight region and strictly better somewhere in it. The two operators:

* ``nd``: tuples not region-dominated by any other tuple;
* ``po``: tuples that are optimal for at least one weight vector.

Optimality semantics: ``po`` uses STRICT optimality by default, meaning the
tuple strictly beats every rival with a different attribute vector at the
witness weight. Under this reading ``po(ds, reg)`` is always a subset of
``nd(ds, reg)``. The weaker reading (ties allowed at the witness) is
available with ``strict=False``; it is not a subset of ``nd`` in general.
"""

from __future__ import annotations

import numpy as np

from .dataset import Dataset, Tuple
from .queries import skyline
from .regions import (
    EmptyRegionError,
    LinearConstraint,
    WeightRegion,
    exists_weak_optimum,
    find_feasible_point,
    linear_range,
    region_interval_d2,
    region_vertices,
)

DOM_TOL = 1e-12


def _attrs_of(t) -> tuple[float, ...]:
    return t.attrs if isinstance(t, Tuple) else tuple(float(x) for x in t)


def constraint_from_preference(preferred, other) -> LinearConstraint:
    """Linear weight constraint implied by ranking ``preferred`` above ``other``.

    Accepts tuples or raw attribute vectors. Scoring ``preferred`` strictly
    better means ``(preferred - other) . v < 0``. Identical attribute vectors
    carry no information and are rejected.
    """
    p, o = _attrs_of(preferred), _attrs_of(other)
    if len(p) != len(o):
        raise ValueError("preference tuples must share a dimension")
    coeffs = tuple(a - b for a, b in zip(p, o))
    if all(c == 0.0 for c in coeffs):
        raise ValueError("uninformative preference: identical attribute vectors")
    return LinearConstraint(coeffs, 0.0, strict=True)


def f_dominates(r1: Tuple, r2: Tuple, reg: WeightRegion) -> bool:
    """True when r1 scores <= r2 across the region and < somewhere in it."""
    if r1.dim != r2.dim:
        raise ValueError("tuples must share a dimension")
    if r1.dim != reg.dim:
        raise ValueError("region dimension does not match tuples")
    c = np.asarray(r1.attrs, dtype=float) - np.asarray(r2.attrs, dtype=float)
    lo, hi = linear_range(reg, c)
    return hi <= DOM_TOL and lo < -DOM_TOL


def _support_points(reg: WeightRegion) -> np.ndarray | None:
    """Points whose score extremes decide region dominance, when finite.

    For a polytope the vertices work at any dimension; in dimension 2 every
    region reduces to an interval whose endpoints work even with a ball.
    Returns None when no finite support set exists (ball, dim >= 3).
    """
    if reg.dim == 2:
        lo, hi = region_interval_d2(reg)
        return np.array([[lo, 1.0 - lo], [hi, 1.0 - hi]])
    if reg.ball is None:
        return region_vertices(reg)
    return None


def nd(ds: Dataset, reg: WeightRegion) -> set[str]:
    """Ids of tuples no other tuple region-dominates.

    Candidate dominators are restricted to the Pareto skyline: any
    region-dominator is itself weakly score-dominated by some skyline tuple
    at every weight, so the restriction never changes the result.
    """
    if reg.dim != ds.dim:
        raise ValueError("region dimension does not match dataset")
    n = len(ds)
    if n == 0:
        return set()
    support = _support_points(reg)
    if support is None and find_feasible_point(reg) is None:
        raise EmptyRegionError("empty region")

    sky = skyline(ds)
    sky_pos = [i for i, t in enumerate(ds.tuples) if t.id in sky]

    if support is not None:
        a = ds.attr_array()
        scores = a @ support.T  # (n, num support points)
        out: set[str] = set()
        sky_scores = scores[sky_pos]
        for i in range(n):
            diff = sky_scores - scores[i]  # dominator score minus candidate score
            mx = diff.max(axis=1)
            mn = diff.min(axis=1)
            if not ((mx <= DOM_TOL) & (mn < -DOM_TOL)).any():
                out.add(ds.tuples[i].id)
        return out

    out = set()
    for i, t in enumerate(ds.tuples):
        dominated = False
        for j in sky_pos:
            if i == j:
                continue
            if f_dominates(ds.tuples[j], t, reg):
                dominated = True
                break
        if not dominated:
            out.add(t.id)
    return out


def _weak_dominance_matrix(scores: np.ndarray) -> np.ndarray:
    """w[i, j] true when tuple i scores <= tuple j at every support point."""
    diff = scores[:, None, :] - scores[None, :, :]
    return diff.max(axis=2) <= DOM_TOL


def po(ds: Dataset, reg: WeightRegion, strict: bool = True) -> set[str]:
    """Ids of tuples optimal somewhere in the region.

    With ``strict=True`` (default) the tuple must strictly beat every rival
    with different attributes at the witness vector, which keeps the result
    inside ``nd``. Rival lists passed to the optimizer are pruned to tuples
    that are not weakly score-dominated by a kept rival, which cannot change
    any decision.
    """
    if reg.dim != ds.dim:
        raise ValueError("region dimension does not match dataset")
    n = len(ds)
    if n == 0:
        return set()

    candidates = nd(ds, reg) if strict else {t.id for t in ds.tuples}
    support = _support_points(reg)
    reduced: dict[str, list[Tuple]] | None = None
    if support is not None and strict:
        scores = ds.attr_array() @ support.T
        weak = _weak_dominance_matrix(scores)
        nd_idx = [i for i, t in enumerate(ds.tuples) if t.id in candidates]
        nd_mask = np.zeros(n, dtype=bool)
        nd_mask[nd_idx] = True
        reduced = {}
        for i in nd_idx:
            keep = nd_mask | weak[i]
            keep[i] = False
            reduced[ds.tuples[i].id] = [ds.tuples[j] for j in np.flatnonzero(keep)]

    out: set[str] = set()
    for t in ds.tuples:
        if t.id not in candidates:
            continue
        rivals = reduced[t.id] if reduced is not None else [r for r in ds.tuples if r.id != t.id]
        ok, _ = exists_weak_optimum(reg, t, rivals, strict=strict)
        if ok:
            out.add(t.id)
    return out
