"""Deterministic chain families for tests and benchmarks."""

import math

import numpy as np
from scipy.optimize import brentq

from .chain import PolygonalChain


def gen_staircase(steps=1, widths=1.0, heights=1.0):
    """Ascending staircase: alternating +x and +y segments, ``2*steps`` edges.

    ``widths`` and ``heights`` are scalars or sequences of length ``steps``.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    w = np.broadcast_to(np.asarray(widths, dtype=np.float64), (steps,))
    h = np.broadcast_to(np.asarray(heights, dtype=np.float64), (steps,))
    if np.any(w <= 0) or np.any(h <= 0):
        raise ValueError("staircase widths and heights must be positive")
    pts = [(0.0, 0.0)]
    x = y = 0.0
    for wi, hi in zip(w, h):
        x += wi
        pts.append((x, y))
        y += hi
        pts.append((x, y))
    return PolygonalChain.from_points(pts)


def _spiral_half(m):
    """First half of the Reuleaux-type chain, as points around ``t = (1, 0)``.

    Vertex ``i`` sits at polar angle ``i*delta`` (measured from the ray
    t -> s) and radius ``cos(delta)**i``, so every edge meets the radius at
    its end point at a right angle. That keeps the distance to ``t``
    non-increasing along each edge. The total angle is chosen so the last
    vertex lands on the symmetry axis ``x = 1/2``.
    """
    def end_x(phi):
        return 1.0 - math.cos(phi / m) ** m * math.cos(phi) - 0.5

    phi = brentq(end_x, 0.0, math.pi / 2, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    delta = phi / m
    i = np.arange(m + 1)
    r = np.cos(delta) ** i
    ang = i * delta
    pts = np.column_stack((1.0 - r * np.cos(ang), r * np.sin(ang)))
    pts[0] = (0.0, 0.0)
    pts[-1, 0] = 0.5
    return pts


def gen_reuleaux_arc(m=100, inscribed=False):
    """Polyline with ``2m`` edges approximating two sides of a Reuleaux triangle.

    The limit curve runs from ``s = (0, 0)`` along the unit circle about
    ``(1, 0)`` up to ``(1/2, sqrt(3)/2)`` and back down along the unit circle
    about ``(0, 0)`` to ``t = (1, 0)``; its stretch is ``2*pi/3``.

    By default the vertices follow slowly contracting spirals around the far
    endpoint, which keeps the polyline increasing-chord for every ``m``.
    ``inscribed=True`` puts the vertices on the two circles instead; that
    polyline always fails, because each chord dips strictly inside the circle
    whose center is the far endpoint.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if inscribed:
        ang = np.linspace(0.0, math.pi / 3, m + 1)
        first = np.column_stack((1.0 - np.cos(ang), np.sin(ang)))
        first[-1] = (0.5, math.sqrt(3) / 2)
    else:
        first = _spiral_half(m)
    second = first[-2::-1].copy()
    second[:, 0] = 1.0 - second[:, 0]
    return PolygonalChain.from_points(np.vstack((first, second)))


def gen_hexagon_upper_hull():
    """Upper hull of the regular unit hexagon with a horizontal long diagonal."""
    h = math.sqrt(3) / 2
    return PolygonalChain.from_points([(0.0, 0.0), (0.5, h), (1.5, h), (2.0, 0.0)])


def gen_u_shape():
    return PolygonalChain.from_points([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


def gen_random_monotone(d=2, n=100, max_turn=0.3, seed=0):
    """Unit steps whose directions stay within ``max_turn`` of +x_1.

    Each step draws its angle to +x_1 uniformly in ``[0, max_turn]`` and its
    transverse direction uniformly on the unit sphere of the other axes.
    """
    if d < 2 or n < 2:
        raise ValueError("random monotone chains need d >= 2 and n >= 2")
    if not 0.0 <= max_turn < math.pi / 2:
        raise ValueError("max_turn must lie in [0, pi/2)")
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, max_turn, size=n - 1)
    side = rng.standard_normal((n - 1, d - 1))
    norms = np.linalg.norm(side, axis=1)
    norms[norms == 0] = 1.0
    side /= norms[:, None]
    steps = np.empty((n - 1, d))
    steps[:, 0] = np.cos(theta)
    steps[:, 1:] = np.sin(theta)[:, None] * side
    pts = np.vstack((np.zeros(d), np.cumsum(steps, axis=0)))
    return PolygonalChain.from_points(pts)


def gen_straight_subdivided(d=2, n=10, direction=None):
    """``n`` equally spaced collinear vertices from the origin."""
    if d < 2 or n < 2:
        raise ValueError("straight chains need d >= 2 and n >= 2")
    u = np.zeros(d)
    if direction is None:
        u[0] = 1.0
    else:
        u = np.asarray(direction, dtype=np.float64)
    return PolygonalChain.from_points(np.outer(np.arange(n, dtype=np.float64), u))


FAMILIES = {
    "staircase": gen_staircase,
    "reuleaux2": gen_reuleaux_arc,
    "hexagon": gen_hexagon_upper_hull,
    "ushape": gen_u_shape,
    "random-monotone": gen_random_monotone,
    "straight": gen_straight_subdivided,
}
