"""Small d-dimensional vector kernel.

Points and directions are plain float64 numpy arrays. Directions are kept
unit-normalized so that :func:`signed_offset` is a true Euclidean distance.
"""

import numpy as np

from .errors import DimensionMismatch, DimensionTooSmall, ZeroLengthDirection

UNIT_NORM_TOL = 1e-12
ZERO_LENGTH_REL = 1e-15


def as_point(coords):
    """Return ``coords`` as a finite float64 vector of dimension >= 2."""
    p = np.asarray(coords, dtype=np.float64)
    if p.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d coordinate vector, got shape {p.shape}")
    if p.shape[0] < 2:
        raise DimensionTooSmall(f"points need d >= 2, got d={p.shape[0]}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point coordinates must be finite")
    return p


def _same_dim(*vectors):
    d = vectors[0].shape[-1]
    for v in vectors[1:]:
        if v.shape[-1] != d:
            raise DimensionMismatch(f"dimension {v.shape[-1]} does not match {d}")


def is_zero_length(a, b):
    """True when ``a`` and ``b`` are too close to define a direction."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    scale = 1.0 + np.linalg.norm(a) + np.linalg.norm(b)
    return bool(np.linalg.norm(b - a) < ZERO_LENGTH_REL * scale)


def unit_direction(a, b):
    """Unit vector pointing from ``a`` to ``b``.

    Raises ZeroLengthDirection when ``|b - a| < 1e-15 * (1 + |a| + |b|)``.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    _same_dim(a, b)
    if is_zero_length(a, b):
        raise ZeroLengthDirection(f"points {a.tolist()} and {b.tolist()} coincide")
    v = b - a
    return v / np.linalg.norm(v)


def is_unit(u, tol=UNIT_NORM_TOL):
    return abs(float(np.linalg.norm(u)) - 1.0) <= tol


def signed_offset(x, p, u):
    """Signed distance ``<x - p, u>`` of ``x`` from the hyperplane through ``p``.

    Negative values put ``x`` on the negative side of the hyperplane with
    normal ``u``.
    """
    x = np.asarray(x, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    _same_dim(x, p, u)
    return float(np.dot(x - p, u))


def tol_eff(tol, x, p):
    """Scale-aware tolerance ``tol * (1 + |x - p|)``; vectorized over rows of ``x``."""
    x = np.asarray(x, dtype=np.float64)
    return tol * (1.0 + np.linalg.norm(x - p, axis=-1))
