"""Representative subsets of the skyline.

Two notions of a good k-subset:

* dominance representativeness: maximize how many non-skyline tuples are
  dominated by at least one chosen member (a monotone submodular coverage
  objective, so the greedy rule carries the classic 1 - 1/e guarantee);
* distance representativeness: minimize the largest Euclidean distance from
  an unchosen skyline member to its nearest chosen one (the k-center
  objective, where farthest-point greedy is a 2-approximation).

Distances are taken in raw attribute space; normalize first when attribute
scales differ. Exact modes enumerate subsets and break ties toward the
lexicographically first id combination.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .dataset import Dataset
from .queries import pareto_dominates, skyline

EXACT_BUDGET = 1_000_000


def coverage(ds: Dataset, chosen: set[str]) -> int:
    """Non-skyline tuples dominated by at least one chosen skyline member."""
    sky = skyline(ds)
    extra = chosen - sky
    if extra:
        raise ValueError(f"chosen ids not on the skyline: {sorted(extra)}")
    by_id = ds.as_dict()
    picked = [by_id[c] for c in chosen]
    count = 0
    for t in ds.tuples:
        if t.id in sky:
            continue
        if any(pareto_dominates(p, t) for p in picked):
            count += 1
    return count


def _covered_sets(ds: Dataset, sky_ids: list[str]) -> dict[str, frozenset[int]]:
    by_id = ds.as_dict()
    others = [(i, t) for i, t in enumerate(ds.tuples) if t.id not in set(sky_ids)]
    out = {}
    for sid in sky_ids:
        s = by_id[sid]
        out[sid] = frozenset(i for i, t in others if pareto_dominates(s, t))
    return out


def dominance_representative(ds: Dataset, k: int, mode: str = "greedy") -> list[str]:
    """k skyline ids maximizing coverage of dominated non-skyline tuples.

    Greedy mode returns ids in selection order (each step takes the largest
    marginal gain, ties to the smallest id), so prefixes are themselves
    greedy solutions. Exact mode enumerates combinations when the count fits
    the budget and returns the lexicographically first maximizer.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in ("greedy", "exact"):
        raise ValueError("mode must be 'greedy' or 'exact'")
    sky_ids = sorted(skyline(ds))
    kk = min(k, len(sky_ids))
    if kk == len(sky_ids):
        return sky_ids
    covered = _covered_sets(ds, sky_ids)
    if mode == "exact":
        if math.comb(len(sky_ids), kk) > EXACT_BUDGET:
            raise ValueError("exact search exceeds the enumeration budget")
        best_val, best_combo = -1, None
        for combo in combinations(sky_ids, kk):
            val = len(frozenset().union(*(covered[c] for c in combo)))
            if val > best_val:
                best_val, best_combo = val, combo
        return list(best_combo)
    chosen: list[str] = []
    have: frozenset[int] = frozenset()
    remaining = list(sky_ids)
    for _ in range(kk):
        gain, pick = -1, None
        for sid in remaining:
            g = len(covered[sid] - have)
            if g > gain:
                gain, pick = g, sid
        chosen.append(pick)
        have |= covered[pick]
        remaining.remove(pick)
    return chosen


def _max_min_dist(d: np.ndarray, picked: list[int], rest: list[int]) -> float:
    if not rest:
        return 0.0
    return float(max(min(d[r, p] for p in picked) for r in rest))


def distance_representative(ds: Dataset, k: int, mode: str = "greedy") -> list[str]:
    """k skyline ids minimizing the worst distance to the nearest chosen one.

    Greedy mode seeds with the best single center and then repeatedly adds
    the skyline member farthest from the current picks (ties to the smallest
    id), returning ids in selection order. Exact mode enumerates within the
    budget, lexicographically first among minimizers.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in ("greedy", "exact"):
        raise ValueError("mode must be 'greedy' or 'exact'")
    sky_ids = sorted(skyline(ds))
    kk = min(k, len(sky_ids))
    if kk == len(sky_ids):
        return sky_ids
    by_id = ds.as_dict()
    pts = np.array([by_id[s].attrs for s in sky_ids])
    d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2))
    idx = list(range(len(sky_ids)))
    if mode == "exact":
        if math.comb(len(sky_ids), kk) > EXACT_BUDGET:
            raise ValueError("exact search exceeds the enumeration budget")
        best_val, best_combo = math.inf, None
        for combo in combinations(idx, kk):
            rest = [i for i in idx if i not in combo]
            val = _max_min_dist(d, list(combo), rest)
            if val < best_val:
                best_val, best_combo = val, combo
        return [sky_ids[i] for i in best_combo]
    # seed: the single center with the least worst-case distance, ties by id
    best_val, seed = math.inf, 0
    for i in idx:
        val = max(d[i, j] for j in idx if j != i)
        if val < best_val:
            best_val, seed = val, i
    picked = [seed]
    while len(picked) < kk:
        far, pick = -1.0, None
        for i in idx:
            if i in picked:
                continue
            near = min(d[i, p] for p in picked)
            if near > far:
                far, pick = near, i
        picked.append(pick)
    return [sky_ids[i] for i in picked]
