"""Convex weight regions on the preference simplex and linear optimization over them.

A region is the intersection of the probability simplex
``{v : v >= 0, sum(v) = 1}`` with optional linear constraints ``c . v <= b``
(strict ``<`` allowed) and an optional closed Euclidean ball. Regions are the
shared substrate for every preference-parameterized operator in the package.

Optimization strategy:

* polytope regions (no ball): exact, by enumerating the vertices of the
  bounded polytope and scanning them;
* any region in dimension 2: exact, because the region collapses to an
  interval of the first coordinate;
* ball regions in dimension >= 3: numeric, by sequential quadratic
  programming seeded from alternating-projection feasible points, with an
  analytic shortcut when the ball section stays inside the positive orthant.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

CONTAIN_TOL = 1e-9
STRICT_MARGIN = 1e-12
VERTEX_DEDUP = 1e-9
MAX_VERTEX_DIM = 7
MAX_GRID_DIM = 4


class EmptyRegionError(ValueError):
    """Raised when an operation needs a non-empty region but got none."""


class UnsupportedDimensionError(ValueError):
    """Raised when a combinatorial path would blow up at this dimension."""


@dataclass(frozen=True)
class LinearConstraint:
    """c . v <= rhs, or strictly < when ``strict`` is set."""

    coeffs: tuple[float, ...]
    rhs: float
    strict: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", float(self.rhs))

    def value(self, v: Sequence[float]) -> float:
        return float(np.dot(self.coeffs, v))

    def holds(self, v: Sequence[float]) -> bool:
        # strict constraints reject only a clear violation of the boundary;
        # membership exactly on the boundary is accepted and re-checked by
        # the optimizers that need true interior witnesses
        g = self.value(v) - self.rhs
        if self.strict:
            return g < STRICT_MARGIN
        return g <= CONTAIN_TOL


@dataclass(frozen=True)
class Ball:
    """Closed Euclidean ball with center on the simplex."""

    center: tuple[float, ...]
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if self.radius < 0.0:
            raise ValueError("ball radius must be >= 0")
        c = np.asarray(self.center, dtype=float)
        if (c < -CONTAIN_TOL).any() or abs(float(c.sum()) - 1.0) > CONTAIN_TOL:
            raise ValueError("ball center must lie on the probability simplex")


@dataclass(frozen=True)
class WeightRegion:
    """Simplex cap: linear constraints plus an optional ball, all intersected."""

    dim: int
    constraints: tuple[LinearConstraint, ...] = ()
    ball: Ball | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.dim < 1:
            raise ValueError("region dimension must be >= 1")
        for con in self.constraints:
            if len(con.coeffs) != self.dim:
                raise ValueError("constraint dimension does not match region")
        if self.ball is not None and len(self.ball.center) != self.dim:
            raise ValueError("ball dimension does not match region")

    def contains(self, v: Sequence[float]) -> bool:
        x = np.asarray(v, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(f"vector must have length {self.dim}")
        if (x < -CONTAIN_TOL).any() or abs(float(x.sum()) - 1.0) > CONTAIN_TOL:
            return False
        if not all(con.holds(x) for con in self.constraints):
            return False
        if self.ball is not None:
            center = np.asarray(self.ball.center)
            if float(np.linalg.norm(x - center)) > self.ball.radius + CONTAIN_TOL:
                return False
        return True


def full_simplex(dim: int) -> WeightRegion:
    return WeightRegion(dim)


def ball_region(center: Sequence[float], radius: float) -> WeightRegion:
    return WeightRegion(len(tuple(center)), (), Ball(tuple(center), radius))


def _contains_closure(reg: WeightRegion, v: np.ndarray, tol: float) -> bool:
    if (v < -tol).any() or abs(float(v.sum()) - 1.0) > tol:
        return False
    for con in reg.constraints:
        if con.value(v) - con.rhs > tol:
            return False
    if reg.ball is not None:
        if float(np.linalg.norm(v - np.asarray(reg.ball.center))) > reg.ball.radius + tol:
            return False
    return True


@lru_cache(maxsize=512)
def _vertices_cached(reg: WeightRegion) -> tuple[tuple[float, ...], ...]:
    d = reg.dim
    planes: list[tuple[np.ndarray, float]] = []
    for i in range(d):
        e = np.zeros(d)
        e[i] = 1.0
        planes.append((e, 0.0))
    for con in reg.constraints:
        planes.append((np.asarray(con.coeffs, dtype=float), con.rhs))

    found: list[np.ndarray] = []
    ones = np.ones(d)
    for combo in itertools.combinations(range(len(planes)), d - 1):
        m = np.vstack([ones] + [planes[i][0] for i in combo])
        rhs = np.array([1.0] + [planes[i][1] for i in combo])
        try:
            v = np.linalg.solve(m, rhs)
        except np.linalg.LinAlgError:
            continue
        if not np.isfinite(v).all():
            continue
        if (v < -CONTAIN_TOL).any():
            continue
        if any(con.value(v) - con.rhs > CONTAIN_TOL for con in reg.constraints):
            continue
        if any(np.max(np.abs(v - u)) <= VERTEX_DEDUP for u in found):
            continue
        found.append(v)
    return tuple(tuple(float(x) for x in v) for v in found)


def region_vertices(reg: WeightRegion) -> np.ndarray:
    """Vertices of a polytope region as an (m, dim) array.

    Works on the closure: strict constraints contribute their boundary
    hyperplane. Raises :class:`EmptyRegionError` when no vertex survives the
    feasibility filter, which for this bounded geometry means the region is
    empty.
    """
    if reg.ball is not None:
        raise ValueError("vertex enumeration requires a polytope-only region")
    if reg.dim > MAX_VERTEX_DIM:
        raise UnsupportedDimensionError(
            f"vertex enumeration supports dim <= {MAX_VERTEX_DIM}, got {reg.dim}"
        )
    verts = _vertices_cached(reg)
    if not verts:
        raise EmptyRegionError("empty region")
    return np.array(verts, dtype=float)


def region_interval_d2(reg: WeightRegion) -> tuple[float, float]:
    """Closure of a 2-d region as an interval [lo, hi] of the first weight."""
    if reg.dim != 2:
        raise ValueError("interval reduction requires dim == 2")
    lo, hi = 0.0, 1.0
    for con in reg.constraints:
        c0, c1 = con.coeffs
        alpha = c0 - c1
        beta = con.rhs - c1
        if abs(alpha) <= 1e-15:
            if beta < -CONTAIN_TOL:
                raise EmptyRegionError("empty region")
        elif alpha > 0:
            hi = min(hi, beta / alpha)
        else:
            lo = max(lo, beta / alpha)
    if reg.ball is not None:
        half = reg.ball.radius / math.sqrt(2.0)
        lo = max(lo, reg.ball.center[0] - half)
        hi = min(hi, reg.ball.center[0] + half)
    if lo > hi:
        if lo > hi + CONTAIN_TOL:
            raise EmptyRegionError("empty region")
        mid = 0.5 * (lo + hi)
        lo = hi = mid
    return lo, hi


def _project_simplex(v: np.ndarray) -> np.ndarray:
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, v.size + 1)
    cond = u + (1.0 - css) / idx > 0
    rho = int(idx[cond][-1])
    lam = (1.0 - css[rho - 1]) / rho
    return np.maximum(v + lam, 0.0)


def _project_halfspace(v: np.ndarray, con: LinearConstraint) -> np.ndarray:
    a = np.asarray(con.coeffs)
    viol = float(a @ v) - con.rhs
    if viol <= 0.0:
        return v
    return v - viol * a / float(a @ a)


def _project_ball(v: np.ndarray, ball: Ball) -> np.ndarray:
    c = np.asarray(ball.center)
    delta = v - c
    n = float(np.linalg.norm(delta))
    if n <= ball.radius:
        return v
    return c + delta * (ball.radius / n)


def _pocs_point(reg: WeightRegion, start: np.ndarray | None = None, iters: int = 2000) -> np.ndarray:
    """Alternating projections onto simplex, halfspaces and ball."""
    if start is None:
        if reg.ball is not None:
            x = np.asarray(reg.ball.center, dtype=float).copy()
        else:
            x = np.full(reg.dim, 1.0 / reg.dim)
    else:
        x = np.asarray(start, dtype=float).copy()
    for _ in range(iters):
        prev = x
        x = _project_simplex(x)
        for con in reg.constraints:
            x = _project_halfspace(x, con)
        if reg.ball is not None:
            x = _project_ball(x, reg.ball)
        if float(np.max(np.abs(x - prev))) < 1e-13:
            break
    return _project_simplex(x)


def find_feasible_point(reg: WeightRegion) -> np.ndarray | None:
    """A point of the region closure, or None when the region looks empty."""
    if reg.ball is None:
        try:
            verts = region_vertices(reg)
        except EmptyRegionError:
            return None
        return verts.mean(axis=0)
    if reg.dim == 2:
        try:
            lo, hi = region_interval_d2(reg)
        except EmptyRegionError:
            return None
        mid = 0.5 * (lo + hi)
        return np.array([mid, 1.0 - mid])
    x = _pocs_point(reg)
    if _contains_closure(reg, x, 1e-7):
        return x
    return None


def is_empty(reg: WeightRegion) -> bool:
    return find_feasible_point(reg) is None


def _interval_minimize(reg: WeightRegion, c: np.ndarray) -> tuple[float, np.ndarray]:
    lo, hi = region_interval_d2(reg)
    v_lo = c[0] * lo + c[1] * (1.0 - lo)
    v_hi = c[0] * hi + c[1] * (1.0 - hi)
    if v_lo <= v_hi:
        return float(v_lo), np.array([lo, 1.0 - lo])
    return float(v_hi), np.array([hi, 1.0 - hi])


def _minimize_linear_numeric(reg: WeightRegion, c: np.ndarray) -> tuple[float, np.ndarray]:
    ball = reg.ball
    assert ball is not None
    d = reg.dim
    w = np.asarray(ball.center, dtype=float)
    rho = ball.radius
    if rho <= 1e-15:
        if _contains_closure(reg, w, CONTAIN_TOL):
            return float(c @ w), w.copy()
        raise EmptyRegionError("empty region")
    if not reg.constraints:
        # ball section fully inside the positive orthant: the optimum is the
        # center shifted along the in-plane gradient, no solver needed
        ct = c - c.mean()
        nrm = float(np.linalg.norm(ct))
        if nrm <= 1e-15:
            return float(c @ w), w.copy()
        x = w - rho * ct / nrm
        if (x >= -1e-12).all():
            return float(c @ x), np.maximum(x, 0.0)

    x0 = find_feasible_point(reg)
    if x0 is None:
        raise EmptyRegionError("empty region")

    cons: list[dict] = [
        {"type": "eq", "fun": lambda v: float(v.sum()) - 1.0, "jac": lambda v: np.ones(d)}
    ]
    for con in reg.constraints:
        a = np.asarray(con.coeffs, dtype=float)
        cons.append(
            {
                "type": "ineq",
                "fun": (lambda v, a=a, b=con.rhs: b - float(a @ v)),
                "jac": (lambda v, a=a: -a),
            }
        )
    cons.append(
        {
            "type": "ineq",
            "fun": lambda v: rho * rho - float((v - w) @ (v - w)),
            "jac": lambda v: -2.0 * (v - w),
        }
    )

    starts = [x0]
    ct = c - c.mean()
    nrm = float(np.linalg.norm(ct))
    if nrm > 1e-15:
        guided = _pocs_point(reg, start=w - rho * ct / nrm)
        if _contains_closure(reg, guided, 1e-7):
            starts.append(guided)

    best_val = float(c @ x0)
    best_x = x0
    for s in starts:
        res = optimize.minimize(
            lambda v: float(c @ v),
            s,
            jac=lambda v: c,
            method="SLSQP",
            bounds=[(0.0, 1.0)] * d,
            constraints=cons,
            options={"ftol": 1e-14, "maxiter": 400},
        )
        if res.x is None:
            continue
        x = np.asarray(res.x, dtype=float)
        if _contains_closure(reg, x, 1e-7):
            val = float(c @ x)
            if val < best_val:
                best_val, best_x = val, x
    return best_val, best_x


def minimize_linear(
    reg: WeightRegion, c: Sequence[float], method: str = "auto"
) -> tuple[float, np.ndarray]:
    """Minimize ``c . v`` over the region closure; returns (value, argmin).

    ``method`` picks the evaluation path: ``auto`` chooses exact vertex
    scanning for polytopes, the exact interval reduction for 2-d ball
    regions and the numeric path otherwise; ``numeric`` forces the solver
    path (the tests compare it against an independent analytic oracle).
    """
    cv = np.asarray(c, dtype=float)
    if cv.shape != (reg.dim,):
        raise ValueError(f"objective must have length {reg.dim}")
    if method not in ("auto", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if method == "numeric":
        if reg.ball is None:
            raise ValueError("numeric path requires a ball region")
        return _minimize_linear_numeric(reg, cv)
    if reg.ball is None:
        verts = region_vertices(reg)
        vals = verts @ cv
        i = int(np.argmin(vals))
        return float(vals[i]), verts[i]
    if reg.dim == 2:
        return _interval_minimize(reg, cv)
    return _minimize_linear_numeric(reg, cv)


def maximize_linear(
    reg: WeightRegion, c: Sequence[float], method: str = "auto"
) -> tuple[float, np.ndarray]:
    val, x = minimize_linear(reg, -np.asarray(c, dtype=float), method)
    return -val, x


def linear_range(reg: WeightRegion, c: Sequence[float]) -> tuple[float, float]:
    """(min, max) of ``c . v`` over the region closure."""
    cv = np.asarray(c, dtype=float)
    if reg.ball is None:
        verts = region_vertices(reg)
        vals = verts @ cv
        return float(vals.min()), float(vals.max())
    if reg.dim == 2:
        lo, hi = region_interval_d2(reg)
        v_lo = float(cv[0] * lo + cv[1] * (1.0 - lo))
        v_hi = float(cv[0] * hi + cv[1] * (1.0 - hi))
        return min(v_lo, v_hi), max(v_lo, v_hi)
    mn, _ = _minimize_linear_numeric(reg, cv)
    neg, _ = _minimize_linear_numeric(reg, -cv)
    return mn, -neg


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def grid_sample(reg: WeightRegion, resolution: int) -> list[np.ndarray]:
    """Simplex lattice points (multiples of 1/resolution) inside the region.

    Used by the sampled UTK path and as a brute-force oracle in the test
    suite. An empty region yields an empty list.
    """
    if reg.dim > MAX_GRID_DIM:
        raise UnsupportedDimensionError(
            f"grid sampling supports dim <= {MAX_GRID_DIM}, got {reg.dim}"
        )
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    pts: list[np.ndarray] = []
    for comp in _compositions(resolution, reg.dim):
        v = np.array(comp, dtype=float) / resolution
        if reg.contains(v):
            pts.append(v)
    return pts


def _as_attr_vector(x) -> np.ndarray:
    return np.asarray(getattr(x, "attrs", x), dtype=float)


def _interior_point(reg: WeightRegion) -> np.ndarray:
    if reg.ball is not None:
        return np.asarray(reg.ball.center, dtype=float)
    try:
        return region_vertices(reg).mean(axis=0)
    except EmptyRegionError:
        return np.full(reg.dim, 1.0 / reg.dim)


def _exists_scan_d2(reg: WeightRegion, diffs: np.ndarray) -> tuple[float, np.ndarray]:
    """Exact min of max(diffs . v) over a 2-d region.

    The max of linear functions is convex piecewise linear in the interval
    coordinate, so the minimum sits at an endpoint or at a crossing of two
    gap lines.
    """
    lo, hi = region_interval_d2(reg)
    alphas = diffs[:, 0] - diffs[:, 1]
    betas = diffs[:, 1]
    cand = [lo, hi]
    m = diffs.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            den = alphas[i] - alphas[j]
            if abs(den) <= 1e-15:
                continue
            t = (betas[j] - betas[i]) / den
            if lo < t < hi:
                cand.append(float(t))
    best_val = math.inf
    best_t = lo
    for t in cand:
        g = float(np.max(alphas * t + betas))
        if g < best_val:
            best_val = g
            best_t = t
    return best_val, np.array([best_t, 1.0 - best_t])


def _exists_numeric_ball(reg: WeightRegion, diffs: np.ndarray) -> tuple[float, np.ndarray]:
    ball = reg.ball
    assert ball is not None
    d = reg.dim
    w = np.asarray(ball.center, dtype=float)
    rho = ball.radius
    x0 = find_feasible_point(reg)
    if x0 is None:
        raise EmptyRegionError("empty region")
    if rho <= 1e-15:
        return float(np.max(diffs @ x0)), x0

    m = diffs.shape[0]
    y0 = np.append(x0, float(np.max(diffs @ x0)) + 1.0)

    cons: list[dict] = [
        {
            "type": "eq",
            "fun": lambda y: float(y[:d].sum()) - 1.0,
            "jac": lambda y: np.append(np.ones(d), 0.0),
        },
        {
            "type": "ineq",
            "fun": lambda y: rho * rho - float((y[:d] - w) @ (y[:d] - w)),
            "jac": lambda y: np.append(-2.0 * (y[:d] - w), 0.0),
        },
    ]
    for i in range(m):
        row = diffs[i]
        cons.append(
            {
                "type": "ineq",
                "fun": (lambda y, row=row: y[d] - float(row @ y[:d])),
                "jac": (lambda y, row=row: np.append(-row, 1.0)),
            }
        )
    for con in reg.constraints:
        a = np.asarray(con.coeffs, dtype=float)
        cons.append(
            {
                "type": "ineq",
                "fun": (lambda y, a=a, b=con.rhs: b - float(a @ y[:d])),
                "jac": (lambda y, a=a: np.append(-a, 0.0)),
            }
        )

    obj_jac = np.append(np.zeros(d), 1.0)
    res = optimize.minimize(
        lambda y: float(y[d]),
        y0,
        jac=lambda y: obj_jac,
        method="SLSQP",
        bounds=[(0.0, 1.0)] * d + [(None, None)],
        constraints=cons,
        options={"ftol": 1e-14, "maxiter": 400},
    )
    best_val = float(np.max(diffs @ x0))
    best_x = x0
    if res.x is not None:
        x = np.asarray(res.x[:d], dtype=float)
        if _contains_closure(reg, x, 1e-7):
            val = float(np.max(diffs @ x))
            if val < best_val:
                best_val, best_x = val, x
    return best_val, best_x


def exists_weak_optimum(
    reg: WeightRegion, target, rivals, strict: bool = False
) -> tuple[bool, np.ndarray | None]:
    """Decide whether some v in the region makes ``target`` beat every rival.

    Weak mode asks for ``v . target <= v . r`` against every rival; strict
    mode asks for ``<`` against every rival whose attribute vector differs
    from the target's. Decisions are certified on an explicit witness: the
    returned vector achieves max-gap <= 1e-12 (weak) or < -1e-12 (strict).
    Witnesses violating a strict region constraint are nudged toward the
    region interior before being rejected.
    """
    t = _as_attr_vector(target)
    rows = []
    for r in rivals:
        ra = _as_attr_vector(r)
        if ra.shape != t.shape:
            raise ValueError("rival dimension does not match target")
        if np.array_equal(ra, t):
            continue
        rows.append(t - ra)
    if not rows:
        fp = find_feasible_point(reg)
        if fp is None:
            raise EmptyRegionError("empty region")
        return True, fp
    diffs = np.unique(np.array(rows, dtype=float), axis=0)

    limit = -STRICT_MARGIN if strict else STRICT_MARGIN

    def admissible(v: np.ndarray) -> bool:
        g = float(np.max(diffs @ v))
        return g < -STRICT_MARGIN if strict else g <= limit

    def finish(v: np.ndarray) -> tuple[bool, np.ndarray | None]:
        if reg.contains(v):
            return True, v
        interior = _interior_point(reg)
        for theta in (1e-9, 1e-7, 1e-5, 1e-3, 1e-2):
            shifted = (1.0 - theta) * v + theta * interior
            if reg.contains(shifted) and admissible(shifted):
                return True, shifted
        return False, None

    # cheap witness scan before any solver runs
    candidates: list[np.ndarray] = []
    if reg.ball is None:
        verts = region_vertices(reg)
        candidates.extend(verts)
        candidates.append(verts.mean(axis=0))
    elif reg.dim == 2:
        lo, hi = region_interval_d2(reg)
        for tt in (lo, 0.5 * (lo + hi), hi):
            candidates.append(np.array([tt, 1.0 - tt]))
    else:
        fp = find_feasible_point(reg)
        if fp is None:
            raise EmptyRegionError("empty region")
        candidates.append(fp)
    best_val = math.inf
    best_x: np.ndarray | None = None
    for v in candidates:
        g = float(np.max(diffs @ v))
        if g < best_val:
            best_val, best_x = g, v
    if best_x is not None and admissible(best_x):
        ok, witness = finish(best_x)
        if ok:
            return True, witness

    if reg.ball is None:
        d = reg.dim
        m = diffs.shape[0]
        a_ub = [np.append(diffs[i], -1.0) for i in range(m)]
        b_ub = [0.0] * m
        for con in reg.constraints:
            a_ub.append(np.append(np.asarray(con.coeffs, dtype=float), 0.0))
            b_ub.append(con.rhs)
        res = optimize.linprog(
            c=np.append(np.zeros(d), 1.0),
            A_ub=np.array(a_ub),
            b_ub=np.array(b_ub),
            A_eq=np.append(np.ones(d), 0.0).reshape(1, -1),
            b_eq=np.array([1.0]),
            bounds=[(0.0, None)] * d + [(None, None)],
            method="highs",
        )
        if res.status == 2:
            raise EmptyRegionError("empty region")
        if res.x is not None:
            x = np.asarray(res.x[:d], dtype=float)
            val = float(np.max(diffs @ x))
            if val < best_val:
                best_val, best_x = val, x
    elif reg.dim == 2:
        val, x = _exists_scan_d2(reg, diffs)
        if val < best_val:
            best_val, best_x = val, x
    else:
        val, x = _exists_numeric_ball(reg, diffs)
        if val < best_val:
            best_val, best_x = val, x

    if best_x is not None and admissible(best_x):
        ok, witness = finish(best_x)
        if ok:
            return True, witness
    return False, None


def parse_region(text: str, dim: int, names: Sequence[str] | None = None) -> WeightRegion:
    """Parse the region literal syntax into a :class:`WeightRegion`.

    One constraint per line, for example ``3 w1 - 1 w2 >= 0``; a line
    ``ball 0.5 0.5 0.1`` gives the center and radius. Weight names are
    ``w1 .. w<dim>`` plus any attribute names passed in ``names``. ``#``
    starts a comment.
    """
    name_to_idx = {f"w{i + 1}": i for i in range(dim)}
    if names is not None:
        for i, nm in enumerate(names):
            name_to_idx.setdefault(str(nm), i)

    constraints: list[LinearConstraint] = []
    ball: Ball | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "ball":
            nums = []
            for tok in tokens[1:]:
                try:
                    nums.append(float(tok))
                except ValueError:
                    raise ValueError(f"region line {lineno}: bad ball number {tok!r}") from None
            if len(nums) != dim + 1:
                raise ValueError(
                    f"region line {lineno}: ball needs {dim} center values and a radius"
                )
            ball = Ball(tuple(nums[:dim]), nums[dim])
            continue

        rel_idx = next(
            (i for i, tok in enumerate(tokens) if tok in ("<=", ">=", "<", ">")), None
        )
        if rel_idx is None or rel_idx == len(tokens) - 1:
            raise ValueError(f"region line {lineno}: expected '<coeffs> <rel> <rhs>'")
        rel = tokens[rel_idx]
        if len(tokens) != rel_idx + 2:
            raise ValueError(f"region line {lineno}: expected a single right-hand side")
        try:
            rhs = float(tokens[rel_idx + 1])
        except ValueError:
            raise ValueError(
                f"region line {lineno}: bad right-hand side {tokens[rel_idx + 1]!r}"
            ) from None

        coeffs = [0.0] * dim
        sign = 1.0
        pending: float | None = None
        for tok in tokens[:rel_idx]:
            if tok == "+":
                continue
            if tok == "-":
                sign = -sign
                continue
            if tok in name_to_idx:
                coeffs[name_to_idx[tok]] += sign * (1.0 if pending is None else pending)
                sign = 1.0
                pending = None
                continue
            try:
                pending = float(tok)
            except ValueError:
                raise ValueError(f"region line {lineno}: cannot parse term {tok!r}") from None
        if pending is not None:
            raise ValueError(f"region line {lineno}: dangling coefficient")

        arr = np.array(coeffs)
        if rel in (">=", ">"):
            arr = -arr
            rhs = -rhs
        constraints.append(LinearConstraint(tuple(arr), rhs, strict=rel in ("<", ">")))
    return WeightRegion(dim, tuple(constraints), ball)
