"""Length bounds for increasing-chord curves in R^d.

Everything here is closed-form arithmetic in float64. Quantities such as
``sin(alpha) ** (-d*(d-1)/2)`` overflow quickly, so each bound is also
available as a natural logarithm; the plain value becomes ``inf`` once it
leaves float range.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDirections, DomainError

ALPHA_SLACK = 1e-12
PLANAR_CONSTANT = 2 * math.pi / 3


def _check_alpha(alpha):
    if not (-ALPHA_SLACK < alpha < math.pi / 2 + ALPHA_SLACK):
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    if alpha <= 0.0 or alpha >= math.pi / 2:
        raise DomainError(f"alpha={alpha!r} is on the boundary of (0, pi/2)")


def _exp(x):
    return math.exp(x) if x < 709.0 else math.inf


def log_c_d(d, alpha):
    """Natural log of :func:`c_d`; finite for any ``d``."""
    _check_alpha(alpha)
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d == 1:
        return 0.0
    s, c = math.sin(alpha), math.cos(alpha)
    ls, lc = math.log(s), math.log(c)
    terms = [-ls, lc - (d - 1) * ls]
    if d > 2:
        # 1 - s**(d-2) > 0 for 0 < s < 1
        terms.append(lc + math.log1p(-s ** (d - 2)) - (d - 1) * ls - math.log1p(-s))
    return float(np.logaddexp.reduce(terms))


def c_d(d, alpha):
    """Edge-sum constant for a curve monotone in ``d`` tilted directions.

    ``C_1 = 1`` and, for ``d >= 2``,
    ``1/sin a + cos a/sin^(d-1) a + cos a (1 - sin^(d-2) a) / (sin^(d-1) a (1 - sin a))``.
    """
    _check_alpha(alpha)
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d == 1:
        return 1.0
    s, c = math.sin(alpha), math.cos(alpha)
    if d <= 30:
        return 1.0 / s + c / s ** (d - 1) + c * (1.0 - s ** (d - 2)) / (s ** (d - 1) * (1.0 - s))
    return _exp(log_c_d(d, alpha))


def log_eq1_bound(d, alpha):
    _check_alpha(alpha)
    s, c = math.sin(alpha), math.cos(alpha)
    return (math.log1p(c) + (d - 1) * (math.log(2.0 - s) - math.log1p(-s))
            - d * (d - 1) / 2 * math.log(s))


def eq1_bound(d, alpha):
    """``(1 + cos a) ((2 - sin a)/(1 - sin a))^(d-1) / sin(a)^(d(d-1)/2)``."""
    return _exp(log_eq1_bound(d, alpha))


def log_dimension_bound(d):
    if d < 3:
        raise DomainError(f"the dimension bound needs d >= 3 (planar optimum is 2*pi/3), got d={d}")
    return math.log(2.0) + (d - 1) * (1.0 + math.log((d + 4) / 2.0))


def dimension_bound(d):
    """``2 (e/2 (d + 4))^(d-1)``, the bound at ``sin(alpha) = d/(d+2)``."""
    if d < 3:
        raise DomainError(f"the dimension bound needs d >= 3 (planar optimum is 2*pi/3), got d={d}")
    if d <= 100:
        return 2.0 * (math.e / 2.0 * (d + 4)) ** (d - 1)
    return _exp(log_dimension_bound(d))


def theorem_alpha(d):
    """The angle ``arcsin(d/(d+2))`` at which the dimension bound is derived."""
    return math.asin(d / (d + 2))


@dataclass(frozen=True)
class BoundProfile:
    d: int
    alpha: float
    c_values: tuple  # C_1 .. C_d
    f_values: tuple  # F_1 .. F_d (stored in index order)
    log_f_values: tuple
    eq1_bound: float
    log_eq1_bound: float
    eq2_bound: float | None

    @property
    def f1(self):
        return self.f_values[0]

    @property
    def log_f1(self):
        return self.log_f_values[0]

    def as_dict(self):
        return {
            "d": self.d,
            "alpha": self.alpha,
            "sin_alpha": math.sin(self.alpha),
            "c_values": list(self.c_values),
            "f_values": list(self.f_values),
            "F1": self.f1,
            "eq1_bound": self.eq1_bound,
            "eq2_bound": self.eq2_bound,
        }


def f_profile(d, alpha):
    """``F_d = C_d`` and ``F_i = (1 + C_i / cos a) F_{i+1}`` down to ``F_1``."""
    _check_alpha(alpha)
    if d < 2:
        raise DomainError(f"f_profile needs d >= 2, got {d}")
    c = math.cos(alpha)
    log_c = [log_c_d(i, alpha) for i in range(1, d + 1)]
    log_f = [0.0] * d
    log_f[d - 1] = log_c[d - 1]
    for i in range(d - 1, 0, -1):
        # log(1 + C_i / cos a)
        log_factor = float(np.logaddexp(0.0, log_c[i - 1] - math.log(c)))
        log_f[i - 1] = log_factor + log_f[i]
    c_vals = tuple(c_d(i, alpha) for i in range(1, d + 1))
    f_vals = [0.0] * d
    f_vals[d - 1] = c_vals[d - 1]
    for i in range(d - 1, 0, -1):
        f_vals[i - 1] = (1.0 + c_vals[i - 1] / c) * f_vals[i]
    if not all(math.isfinite(x) for x in f_vals):
        f_vals = [_exp(x) for x in log_f]
    return BoundProfile(
        d=d,
        alpha=alpha,
        c_values=c_vals,
        f_values=tuple(f_vals),
        log_f_values=tuple(log_f),
        eq1_bound=eq1_bound(d, alpha),
        log_eq1_bound=log_eq1_bound(d, alpha),
        eq2_bound=dimension_bound(d) if d >= 3 else None,
    )


INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section(f, a, b, tol=1e-10):
    """Minimize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


@dataclass(frozen=True)
class OptimumResult:
    d: int
    objective: str
    alpha: float
    value: float
    log_value: float
    grid: np.ndarray = field(repr=False)
    grid_log_values: np.ndarray = field(repr=False)

    def as_dict(self):
        return {"d": self.d, "objective": self.objective, "alpha": self.alpha,
                "sin_alpha": math.sin(self.alpha), "value": self.value, "log_value": self.log_value}


OBJECTIVES = {
    "F1": lambda d, a: f_profile(d, a).log_f1,
    "Eq1": log_eq1_bound,
}


def optimize_alpha(d, objective="F1", samples=1024, tol=1e-10):
    """Minimize ``F_1`` or the closed-form bound over ``alpha`` in ``(0, pi/2)``.

    A uniform grid of ``samples`` interior points locates the basin, then a
    golden-section search refines inside the neighbouring grid cells. The
    search runs on logarithms, which preserves the minimizer.
    """
    if d < 2:
        raise DomainError(f"optimize_alpha needs d >= 2, got {d}")
    try:
        log_obj = OBJECTIVES[objective]
    except KeyError:
        raise ValueError(f"objective must be one of {sorted(OBJECTIVES)}") from None
    h = (math.pi / 2) / samples
    grid = (np.arange(samples) + 0.5) * h
    vals = np.array([log_obj(d, a) for a in grid])
    k = int(np.argmin(vals))
    lo = grid[k - 1] if k > 0 else grid[k] / 2
    hi = grid[k + 1] if k + 1 < samples else (grid[k] + math.pi / 2) / 2
    a_star, v_star = golden_section(lambda a: log_obj(d, a), lo, hi, tol)
    if vals[k] < v_star:
        a_star, v_star = float(grid[k]), float(vals[k])
    return OptimumResult(d, objective, float(a_star), _exp(v_star), float(v_star), grid, vals)


def reuleaux_midpoint_distance(d):
    """Distance between midpoints of two disjoint edges of the Reuleaux unit d-simplex."""
    if d < 3:
        raise DomainError(f"disjoint edges need d >= 3, got d={d}")
    return (math.sqrt(d * (d + 1)) - math.sqrt(2.0)) / (d - 1)


def _unit_from_angles(angles):
    """Unit vector in R^(len(angles)+1) from nested spherical angles."""
    m = len(angles) + 1
    w = np.empty(m)
    w[0] = np.prod(np.cos(angles))
    for j in range(1, m):
        w[j] = math.sin(angles[m - j - 1]) * np.prod(np.cos(angles[:m - j - 1]))
    return w


@dataclass(frozen=True)
class MatrixFrame:
    """Rows ``q_i`` lie in span(e_1..e_i) and make angle ``alpha`` with span(q_1..q_(i-1))."""

    d: int
    alpha: float
    zeta_angles: tuple  # per row i >= 3, the i-2 angles of its in-span part
    Q: np.ndarray

    @classmethod
    def random(cls, d, alpha, rng):
        s, c = math.sin(alpha), math.cos(alpha)
        Q = np.zeros((d, d))
        Q[0, 0] = 1.0
        zetas = []
        for i in range(1, d):
            angles = rng.uniform(0.0, 2 * math.pi, size=i - 1)
            zetas.append(tuple(angles))
            Q[i, :i] = c * _unit_from_angles(angles)
            Q[i, i] = s
        return cls(d, alpha, tuple(zetas[1:]), Q)

    def inverse_columns(self):
        return np.linalg.inv(self.Q)


@dataclass(frozen=True)
class ColumnCheck:
    index: int
    norm: float
    bound: float
    ok: bool


@dataclass(frozen=True)
class ColumnReport:
    d: int
    alpha: float
    seed: int
    det: float
    det_expected: float
    singular: bool
    columns: tuple

    @property
    def ok(self):
        return (not self.singular and all(c.ok for c in self.columns)
                and abs(self.det - self.det_expected) <= 1e-10)

    def as_dict(self):
        return {
            "d": self.d, "alpha": self.alpha, "seed": self.seed, "det": self.det,
            "det_expected": self.det_expected, "singular": self.singular, "ok": self.ok,
            "columns": [{"index": c.index, "norm": c.norm, "bound": c.bound, "ok": c.ok}
                        for c in self.columns],
        }


def column_bound(d, i, alpha):
    """Upper bound on the norm of column ``i`` (1-based) of ``Q^-1``."""
    s = math.sin(alpha)
    return 1.0 / s ** (d - 1) if i == 1 else 1.0 / s ** (d - i + 1)


def verify_column_bounds(d, alpha, seed, slack=1e-8):
    """Draw a random frame and compare the columns of ``Q^-1`` with their bounds."""
    _check_alpha(alpha)
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    frame = MatrixFrame.random(d, alpha, np.random.default_rng(seed))
    det = float(np.linalg.det(frame.Q))
    expected = math.sin(alpha) ** (d - 1)
    if abs(det) < 1e-14:
        return ColumnReport(d, alpha, seed, det, expected, True, ())
    inv = frame.inverse_columns()
    cols = []
    for i in range(1, d + 1):
        norm = float(np.linalg.norm(inv[:, i - 1]))
        bound = column_bound(d, i, alpha)
        cols.append(ColumnCheck(i, norm, bound, norm <= bound + slack))
    return ColumnReport(d, alpha, seed, det, expected, False, tuple(cols))


def parallelotope_check(chain, directions, tol=1e-9):
    """True iff every vertex lies between the endpoints' projections on each direction.

    The caller must already know the chain is monotone in every direction.
    """
    q = np.asarray(directions, dtype=np.float64)
    d = chain.dimension
    if q.shape != (d, d):
        raise DegenerateDirections(f"need {d} directions of dimension {d}, got shape {q.shape}")
    if abs(np.linalg.det(q)) <= 1e-10:
        raise DegenerateDirections("directions are not linearly independent")
    v = chain.vertices
    s, t = v[0], v[-1]
    proj = v @ q.T
    lo = np.minimum(s @ q.T, t @ q.T)
    hi = np.maximum(s @ q.T, t @ q.T)
    slack = tol * (1.0 + np.linalg.norm(v - s, axis=1))[:, None]
    return bool(np.all(proj >= lo - slack) and np.all(proj <= hi + slack))
