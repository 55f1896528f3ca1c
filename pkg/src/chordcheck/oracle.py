"""Definition-level checks used to cross-examine the halfspace checkers.

The chord oracle works on a discrete sample of the chain, so it can only
refute the increasing-chord property, never certify it.
"""

from dataclasses import dataclass

import numpy as np

from .geometry import _same_dim


@dataclass(frozen=True)
class SamplePoint:
    location: np.ndarray
    edge_index: int
    parameter: float


@dataclass(frozen=True)
class QuadrupleWitness:
    """Four samples in chain order with ``|bc| > |ad|``."""

    a: SamplePoint
    b: SamplePoint
    c: SamplePoint
    d: SamplePoint
    inner_chord: float
    outer_chord: float

    @property
    def margin(self):
        return self.inner_chord - self.outer_chord


@dataclass(frozen=True)
class OracleResult:
    passed: bool
    witness: QuadrupleWitness | None = None

    def __bool__(self):
        return self.passed


def sample_chain(chain, per_edge=1):
    """All vertices plus ``per_edge`` equally spaced interior points per edge."""
    if per_edge < 0:
        raise ValueError("per_edge must be >= 0")
    v = chain.vertices
    out = []
    for i in range(chain.n - 1):
        for k in range(per_edge + 1):
            t = k / (per_edge + 1)
            out.append(SamplePoint((1.0 - t) * v[i] + t * v[i + 1], i, t))
    out.append(SamplePoint(v[-1].copy(), chain.n - 2, 1.0))
    return out


def _locations(samples):
    return np.array([s.location for s in samples], dtype=np.float64)


def chord_oracle(samples, tol=1e-9):
    """Test ``|bc| <= |ad|`` over every quadruple ``a < b < c < d`` of samples.

    Uses the table ``M[x, y] = min(|s_x s_y|, M[x-1, y], M[x, y+1])``, which
    holds the shortest chord that encloses the index pair ``(x, y)``; the
    pair ``(b, c)`` violates when ``|s_b s_c| > M[b-1, c+1] + tol*(1+|s_b s_c|)``.
    Rows are streamed, so memory stays O(N) and time O(N^2).
    On failure the witness has the largest margin among violating pairs;
    ties go to the pair that comes last in (b, c) order.
    """
    pts = _locations(samples)
    n = len(pts)
    if n < 4:
        return OracleResult(True)
    best = None  # (margin, b, c)
    prev = np.full(n, np.inf)  # M[x-1, :]
    for x in range(n):
        row = np.linalg.norm(pts - pts[x], axis=1)
        if x >= 1:
            # pairs (b=x, c) against chords (a <= x-1, d >= c+1)
            enclosing = np.full(n, np.inf)
            enclosing[:-1] = prev[1:]
            cs = np.arange(n)
            valid = (cs > x) & np.isfinite(enclosing)
            if np.any(valid):
                margins = np.where(valid, row - enclosing, -np.inf)
                bad = margins > tol * (1.0 + row)
                if np.any(bad):
                    c = int(np.argmax(np.where(bad, margins, -np.inf)))
                    if best is None or margins[c] >= best[0]:
                        best = (float(margins[c]), x, c)
        cur = np.minimum(row, prev)
        cur[:x] = np.inf  # M is only defined for x <= y
        prev = np.minimum.accumulate(cur[::-1])[::-1]
    if best is None:
        return OracleResult(True)
    _, b, c = best
    return OracleResult(False, _witness(samples, pts, b, c))


def _witness(samples, pts, b, c):
    outer = np.linalg.norm(pts[:b, None, :] - pts[None, c + 1:, :], axis=2)
    a, dd = np.unravel_index(int(np.argmin(outer)), outer.shape)
    d = c + 1 + int(dd)
    return QuadrupleWitness(
        samples[int(a)], samples[b], samples[c], samples[d],
        inner_chord=float(np.linalg.norm(pts[c] - pts[b])),
        outer_chord=float(outer[a, dd]),
    )


def brute_force_oracle(samples, tol=1e-9):
    """O(N^4) enumeration of all ordered quadruples; reference for tests."""
    pts = _locations(samples)
    n = len(pts)
    best = None
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                inner = float(np.linalg.norm(pts[c] - pts[b]))
                for d in range(c + 1, n):
                    outer = float(np.linalg.norm(pts[d] - pts[a]))
                    margin = inner - outer
                    if margin > tol * (1.0 + inner) and (best is None or margin >= best[0]):
                        best = (margin, a, b, c, d)
    if best is None:
        return OracleResult(True)
    _, a, b, c, d = best
    return OracleResult(False, QuadrupleWitness(
        samples[a], samples[b], samples[c], samples[d],
        float(np.linalg.norm(pts[c] - pts[b])), float(np.linalg.norm(pts[d] - pts[a]))))


def is_monotone(chain, q, tol=1e-9):
    """True iff every edge has ``<p_{i+1} - p_i, q> >= -tol*(1 + |p_{i+1} - p_i|)``."""
    q = np.asarray(q, dtype=np.float64)
    _same_dim(chain.vertices[0], q)
    steps = np.diff(chain.vertices, axis=0)
    proj = steps @ q
    return bool(np.all(proj >= -tol * (1.0 + np.linalg.norm(steps, axis=1))))
