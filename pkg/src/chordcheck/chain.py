"""Polygonal chain model, the text interchange format, and length metrics."""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CoincidentEndpoints,
    DimensionMismatch,
    DimensionTooSmall,
    FormatError,
    TooFewVertices,
)
from .geometry import ZERO_LENGTH_REL


@dataclass(frozen=True)
class PolygonalChain:
    """An immutable chain ``p_1, ..., p_n`` in R^d with no zero-length edges.

    Build instances with :meth:`from_points`, which collapses consecutive
    duplicates and records how many were dropped.
    """

    vertices: np.ndarray
    duplicates_collapsed: int = 0

    def __post_init__(self):
        v = self.vertices
        if v.ndim != 2:
            raise DimensionMismatch(f"vertices must be an (n, d) array, got shape {v.shape}")
        if v.shape[1] < 2:
            raise DimensionTooSmall(f"chains need d >= 2, got d={v.shape[1]}")
        if v.shape[0] < 2:
            raise TooFewVertices(f"chains need n >= 2 vertices, got {v.shape[0]}")
        if not np.all(np.isfinite(v)):
            raise FormatError("vertex coordinates must be finite")
        v.flags.writeable = False

    @classmethod
    def from_points(cls, points):
        pts = np.array(points, dtype=np.float64)
        if pts.ndim != 2:
            raise DimensionMismatch("all vertices must share one dimension")
        if pts.shape[1] < 2:
            raise DimensionTooSmall(f"chains need d >= 2, got d={pts.shape[1]}")
        if pts.shape[0] == 0:
            raise TooFewVertices("empty chain")
        keep = [0]
        for i in range(1, len(pts)):
            a, b = pts[keep[-1]], pts[i]
            scale = 1.0 + np.linalg.norm(a) + np.linalg.norm(b)
            if np.linalg.norm(b - a) >= ZERO_LENGTH_REL * scale:
                keep.append(i)
        return cls(np.ascontiguousarray(pts[keep]), len(pts) - len(keep))

    @property
    def n(self):
        return self.vertices.shape[0]

    @property
    def dimension(self):
        return self.vertices.shape[1]

    def reversed(self):
        return PolygonalChain(np.ascontiguousarray(self.vertices[::-1]), self.duplicates_collapsed)

    def transformed(self, rotation, translation):
        """Apply ``x -> R x + t`` to every vertex."""
        pts = self.vertices @ np.asarray(rotation, dtype=np.float64).T + np.asarray(translation)
        return PolygonalChain.from_points(pts)

    def edge_lengths(self):
        return np.linalg.norm(np.diff(self.vertices, axis=0), axis=1)

    def diameter(self):
        """Largest vertex-to-vertex distance (O(n^2) memory-light scan)."""
        v = self.vertices
        best = 0.0
        for i in range(len(v) - 1):
            best = max(best, float(np.max(np.linalg.norm(v[i + 1:] - v[i], axis=1))))
        return best


@dataclass(frozen=True)
class ChainMetrics:
    arc_length: float
    endpoint_distance: float
    stretch: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "stretch", self.arc_length / self.endpoint_distance)


def chain_metrics(chain):
    """Arc length, endpoint distance and their ratio (the stretch factor)."""
    v = chain.vertices
    s, t = v[0], v[-1]
    dist = float(np.linalg.norm(t - s))
    if dist < ZERO_LENGTH_REL * (1.0 + np.linalg.norm(s) + np.linalg.norm(t)):
        raise CoincidentEndpoints("first and last vertex coincide; stretch is undefined")
    return ChainMetrics(float(np.sum(chain.edge_lengths())), dist)


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_chain(text):
    """Parse the chain file format.

    Comment lines start with ``#``; the first data line is ``d n``, followed by
    exactly ``n`` lines with ``d`` reals each.
    """
    if not isinstance(text, str):
        text = text.read()
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("missing 'd n' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {lineno}: header must be 'd n', got {header!r}")
    try:
        d, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must hold two integers, got {header!r}") from None
    if d < 2:
        raise DimensionTooSmall(f"line {lineno}: d must be >= 2, got {d}")
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count {n}")
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"header announces {n} vertices but {len(body)} follow")
    pts = np.empty((n, d), dtype=np.float64)
    for row, (lineno, line) in enumerate(body):
        tokens = line.split()
        if len(tokens) != d:
            raise FormatError(f"line {lineno}: expected {d} columns, got {len(tokens)}")
        try:
            pts[row] = [float(tok) for tok in tokens]
        except ValueError:
            raise FormatError(f"line {lineno}: non-numeric token in {line!r}") from None
        if not np.all(np.isfinite(pts[row])):
            raise FormatError(f"line {lineno}: non-finite coordinate")
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    chain = PolygonalChain.from_points(pts)
    return chain


def serialize_chain(chain, comment=None):
    """Render ``chain`` in the chain file format with 17 significant digits."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{chain.dimension} {chain.n}")
    for row in chain.vertices:
        out.append(" ".join(f"{x:.17g}" for x in row))
    return "\n".join(out) + "\n"


def read_chain(path):
    with open(path, encoding="utf-8") as fh:
        return parse_chain(fh.read())


def write_chain(chain, path, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_chain(chain, comment))
