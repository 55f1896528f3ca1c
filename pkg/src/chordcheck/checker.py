"""Exact increasing-chord decision via extremal halfspaces at the vertices.

A chain has increasing chords iff, at every interior vertex, everything after
it lies in the closed positive halfspace orthogonal to the incoming edge
(loop L1) and everything before it lies in the closed negative halfspace
orthogonal to the outgoing edge (loop L2). Each test is a halfspace
emptiness question over the points still "alive" in the loop.

Vertex indices in reports and query ranges are 1-based, matching the usual
``p_1, ..., p_n`` notation.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import TooFewVertices

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class HalfspaceQuery:
    """The open region ``{x : <x - anchor, normal> < -tol * (1 + |x - anchor|)}``."""

    anchor: np.ndarray
    normal: np.ndarray
    tol: float = DEFAULT_TOL

    def offsets(self, points):
        return (points - self.anchor) @ self.normal

    def violations(self, points):
        """Boolean mask of ``points`` inside the open query region."""
        off = points @ self.normal - float(self.anchor @ self.normal)
        mask = off < -self.tol
        if np.any(mask):
            idx = np.flatnonzero(mask)
            dist = np.linalg.norm(points[idx] - self.anchor, axis=1)
            mask[idx] = off[idx] < -self.tol * (1.0 + dist)
        return mask, off


@dataclass(frozen=True)
class ExtremalQuery:
    loop: str
    vertex_index: int
    query: HalfspaceQuery
    live: range  # 1-based vertex indices that are still present


@dataclass(frozen=True)
class Witness:
    loop: str
    vertex_index: int
    offender_index: int
    offset: float

    def as_dict(self):
        return {
            "loop": self.loop,
            "vertex_index": self.vertex_index,
            "offender_index": self.offender_index,
            "offset": self.offset,
        }


@dataclass
class CheckStats:
    halfspace_tests: int = 0
    points_inspected: int = 0
    index_queries: int = 0


@dataclass
class CheckReport:
    passed: bool
    witness: Witness | None = None
    stats: CheckStats = field(default_factory=CheckStats)
    algorithm: str = "naive"

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def as_dict(self):
        return {
            "algorithm": self.algorithm,
            "verdict": self.verdict,
            "witness": self.witness.as_dict() if self.witness else None,
            "stats": {
                "halfspace_tests": self.stats.halfspace_tests,
                "points_inspected": self.stats.points_inspected,
                "index_queries": self.stats.index_queries,
            },
        }


def extremal_queries(chain, tol=DEFAULT_TOL):
    """Yield the ``2(n-2)`` extremal halfspace tests in loop order.

    L1 tests at ``p_{i+1}`` against the live range ``[i+2, n]`` for
    ``i = 1..n-2``; L2 tests at ``p_{i-1}`` against ``[1, i-2]`` for
    ``i = n..3``. L2 queries carry the negated edge direction so that every
    query asks the same question: is the open negative side empty?
    """
    v = chain.vertices
    n = chain.n
    steps = np.diff(v, axis=0)
    units = steps / np.linalg.norm(steps, axis=1)[:, None]
    for i in range(1, n - 1):
        # edge p_i p_{i+1} is steps[i-1]
        yield ExtremalQuery("L1", i + 1, HalfspaceQuery(v[i], units[i - 1], tol), range(i + 2, n + 1))
    for i in range(n, 2, -1):
        yield ExtremalQuery("L2", i - 1, HalfspaceQuery(v[i - 2], -units[i - 2], tol), range(1, i - 1))


def check_naive(chain, tol=DEFAULT_TOL):
    """Quadratic two-loop test; stops at the first violated query."""
    if chain.n < 2:
        raise TooFewVertices("need at least 2 vertices")
    v = chain.vertices
    stats = CheckStats()
    for eq in extremal_queries(chain, tol):
        lo, hi = eq.live.start - 1, eq.live.stop - 1
        pts = v[lo:hi]
        stats.halfspace_tests += 1
        stats.points_inspected += len(pts)
        mask, off = eq.query.violations(pts)
        if np.any(mask):
            k = int(np.argmax(mask))
            w = Witness(eq.loop, eq.vertex_index, lo + k + 1, float(off[k]))
            return CheckReport(False, w, stats, "naive")
    return CheckReport(True, None, stats, "naive")
