"""Baseline operators: Pareto dominance, skyline, k-skyband, linear top-k.

Scores are ``w . r`` with smaller meaning better. Ranked output orders by
ascending score and breaks exact score ties by ascending id.
"""

from __future__ import annotations

import heapq
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, Tuple

SCORE_TOL = 1e-9


@dataclass(frozen=True)
class RankedResult:
    """Scored tuples ordered best-first: (id, score) pairs."""

    entries: tuple[tuple[str, float], ...]

    def ids(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.entries)

    def scores(self) -> tuple[float, ...]:
        return tuple(e[1] for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _dominates_attrs(a: Sequence[float], b: Sequence[float]) -> bool:
    le = True
    lt = False
    for x, y in zip(a, b):
        if x > y:
            le = False
            break
        if x < y:
            lt = True
    return le and lt


def pareto_dominates(t: Tuple, r: Tuple) -> bool:
    """True when t is no worse than r everywhere and strictly better somewhere."""
    if t.dim != r.dim:
        raise ValueError(f"dimension mismatch: {t.dim} vs {r.dim}")
    return _dominates_attrs(t.attrs, r.attrs)


def skyline(ds: Dataset) -> set[str]:
    """Pareto-optimal ids via block-nested-loops.

    Tuples with identical attribute vectors do not dominate each other, so
    duplicated skyline points are all retained.
    """
    window: list[Tuple] = []
    for t in ds.tuples:
        dominated = False
        survivors: list[Tuple] = []
        for s in window:
            if _dominates_attrs(s.attrs, t.attrs):
                dominated = True
                survivors = window
                break
            if not _dominates_attrs(t.attrs, s.attrs):
                survivors.append(s)
        window = survivors
        if not dominated:
            window.append(t)
    return {t.id for t in window}


def k_skyband(ds: Dataset, k: int) -> set[str]:
    """Ids of tuples Pareto-dominated by fewer than k others."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(ds)
    if n == 0:
        return set()
    a = ds.attr_array()
    le = (a[:, None, :] <= a[None, :, :]).all(axis=2)
    lt = (a[:, None, :] < a[None, :, :]).any(axis=2)
    dom = le & lt
    counts = dom.sum(axis=0)
    return {t.id for t, c in zip(ds.tuples, counts) if c < k}


def check_weights(w: Sequence[float], dim: int) -> np.ndarray:
    """Validate that w is a dim-length vector on the probability simplex."""
    v = np.asarray(w, dtype=float)
    if v.shape != (dim,):
        raise ValueError(f"weight vector must have length {dim}")
    if (v < -SCORE_TOL).any() or abs(float(v.sum()) - 1.0) > SCORE_TOL:
        raise ValueError("weight vector must be on the probability simplex")
    return v


def _score_all(ds: Dataset, w: np.ndarray) -> list[float]:
    a = ds.attr_array()
    # row-wise dot keeps scores identical across both top-k evaluation paths
    return [float(a[i] @ w) for i in range(len(ds))]


def top_k(ds: Dataset, w: Sequence[float], k: int) -> RankedResult:
    """Best k tuples by linear score, ties broken by ascending id.

    k larger than the dataset returns everything.
    """
    wv = check_weights(w, ds.dim)
    if k < 1:
        raise ValueError("k must be >= 1")
    scores = _score_all(ds, wv)
    ids = ds.ids()
    order = heapq.nsmallest(k, range(len(ds)), key=lambda i: (scores[i], ids[i]))
    return RankedResult(tuple((ids[i], scores[i]) for i in order))


def top_k_threshold(
    ds: Dataset, w: Sequence[float], k: int
) -> tuple[RankedResult, int]:
    """Top-k via per-attribute sorted lists with a score threshold halt.

    Returns the same set and order as :func:`top_k` plus the number of tuples
    that were fully scored. The halt comparison is strict against the list
    frontier so a never-seen tuple tied with the k-th candidate cannot be
    missed.
    """
    wv = check_weights(w, ds.dim)
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(ds)
    if n == 0:
        return RankedResult(()), 0
    a = ds.attr_array()
    ids = ds.ids()
    columns = [np.argsort(a[:, j], kind="stable") for j in range(ds.dim)]

    seen: dict[int, float] = {}
    worst_of_best: list[float] = []  # max-heap (negated) of the k best scores
    for depth in range(n):
        for col in columns:
            idx = int(col[depth])
            if idx not in seen:
                s = float(a[idx] @ wv)
                seen[idx] = s
                heapq.heappush(worst_of_best, -s)
                if len(worst_of_best) > k:
                    heapq.heappop(worst_of_best)
        threshold = float(sum(wv[j] * a[columns[j][depth], j] for j in range(ds.dim)))
        if len(seen) >= k and -worst_of_best[0] < threshold - SCORE_TOL:
            break

    order = sorted(seen, key=lambda i: (seen[i], ids[i]))[:k]
    result = RankedResult(tuple((ids[i], seen[i]) for i in order))
    return result, len(seen)
