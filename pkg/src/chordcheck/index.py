"""Static halfspace-emptiness indexes.

Two interchangeable backends answer "does any stored point lie in the open
region of this HalfspaceQuery?":

* ``LinearScanIndex`` checks every point; it is the correctness reference.
* ``KdTreeIndex`` splits on the widest axis at the median down to leaves of
  at most 16 points and skips any subtree whose bounding box lies in the
  closed complement of the query.
"""

import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, EmptyInput

LEAF_SIZE = 16


class IndexKind(str, Enum):
    LINEAR = "linear"
    KDTREE = "kdtree"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {"linear": cls.LINEAR, "linearscan": cls.LINEAR, "scan": cls.LINEAR,
                   "kdtree": cls.KDTREE, "kd": cls.KDTREE, "kd-tree": cls.KDTREE}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown index kind {value!r}") from None


@dataclass(frozen=True)
class EmptinessAnswer:
    empty: bool
    witness_id: int | None = None
    offset: float | None = None
    points_inspected: int = 0


@dataclass(frozen=True)
class BuildStats:
    build_time: float
    node_count: int
    depth: int = 0


def _box_min_offset(lo, hi, query):
    """Minimum of ``<x - anchor, normal>`` over each box (rows of lo/hi)."""
    u = query.normal
    return np.minimum(lo * u, hi * u).sum(axis=-1) - float(query.anchor @ u)


class LinearScanIndex:
    kind = IndexKind.LINEAR

    def __init__(self, ids, points):
        t0 = time.perf_counter()
        self.ids = ids
        self.points = points
        self.lo = points.min(axis=0)
        self.hi = points.max(axis=0)
        self.build_stats = BuildStats(time.perf_counter() - t0, 1, 0)

    def __len__(self):
        return len(self.ids)

    @property
    def dimension(self):
        return self.points.shape[1]

    def query_empty(self, query):
        _check_query_dim(self, query)
        mask, off = query.violations(self.points)
        if not np.any(mask):
            return EmptinessAnswer(True, points_inspected=len(self.ids))
        hits = np.flatnonzero(mask)
        k = hits[np.argmin(self.ids[hits])]
        return EmptinessAnswer(False, int(self.ids[k]), float(off[k]), len(self.ids))


class KdTreeIndex:
    """Array-backed kd-tree; points are stored permuted into leaf order."""

    kind = IndexKind.KDTREE

    def __init__(self, ids, points, leaf_size=LEAF_SIZE):
        t0 = time.perf_counter()
        self.leaf_size = leaf_size
        order = np.arange(len(ids))
        starts, ends, lefts, rights, los, his, depths = [], [], [], [], [], [], []

        # iterative build; node ids are assigned in creation order, root = 0
        perm = np.empty(len(ids), dtype=np.intp)
        stack = [(order, 0, 0, -1, False)]  # (members, start, depth, parent, is_right)
        while stack:
            members, start, depth, parent, is_right = stack.pop()
            node = len(starts)
            pts = points[members]
            starts.append(start)
            ends.append(start + len(members))
            los.append(pts.min(axis=0))
            his.append(pts.max(axis=0))
            lefts.append(-1)
            rights.append(-1)
            depths.append(depth)
            if parent >= 0:
                (rights if is_right else lefts)[parent] = node
            if len(members) <= leaf_size:
                perm[start:start + len(members)] = members
                continue
            axis = int(np.argmax(his[-1] - los[-1]))
            half = len(members) // 2
            part = np.argpartition(pts[:, axis], half, kind="introselect")
            left, right = members[part[:half]], members[part[half:]]
            # push right first so the left child gets the smaller node id
            stack.append((right, start + half, depth + 1, node, True))
            stack.append((left, start, depth + 1, node, False))

        self.ids = ids[perm]
        self.points = np.ascontiguousarray(points[perm])
        self.start = np.array(starts, dtype=np.intp)
        self.end = np.array(ends, dtype=np.intp)
        self.left = np.array(lefts, dtype=np.intp)
        self.right = np.array(rights, dtype=np.intp)
        self.node_lo = np.array(los)
        self.node_hi = np.array(his)
        self.lo = self.node_lo[0]
        self.hi = self.node_hi[0]
        self.depth = int(max(depths))
        self.build_stats = BuildStats(time.perf_counter() - t0, len(starts), self.depth)

    def __len__(self):
        return len(self.ids)

    @property
    def dimension(self):
        return self.points.shape[1]

    @property
    def node_count(self):
        return len(self.start)

    def query_empty(self, query):
        """Level-order descent, left child first; stops after the first level
        whose surviving leaves contain a witness."""
        _check_query_dim(self, query)
        active = np.zeros(1, dtype=np.intp)
        inspected = 0
        while active.size:
            keep = active[_box_min_offset(self.node_lo[active], self.node_hi[active], query) < -query.tol]
            if not keep.size:
                break
            leaf = self.left[keep] < 0
            for node in keep[leaf]:
                s, e = self.start[node], self.end[node]
                inspected += e - s
                mask, off = query.violations(self.points[s:e])
                if np.any(mask):
                    k = int(np.argmax(mask))
                    return EmptinessAnswer(False, int(self.ids[s + k]), float(off[k]), int(inspected))
            inner = keep[~leaf]
            active = np.column_stack((self.left[inner], self.right[inner])).ravel()
        return EmptinessAnswer(True, points_inspected=int(inspected))


def _check_query_dim(index, query):
    if query.normal.shape[0] != index.dimension or query.anchor.shape[0] != index.dimension:
        raise DimensionMismatch(
            f"query dimension {query.normal.shape[0]} does not match index dimension {index.dimension}")


def build_index(points, kind=IndexKind.KDTREE, ids=None, leaf_size=LEAF_SIZE):
    """Build an immutable index over ``points``.

    ``points`` is either an (m, d) array (ids default to 0..m-1) or a sequence
    of ``(id, point)`` pairs.
    """
    kind = IndexKind.parse(kind)
    if ids is None and len(points) and not isinstance(points, np.ndarray) \
            and isinstance(points[0], tuple) and len(points[0]) == 2 and np.ndim(points[0][1]) == 1:
        ids = [pid for pid, _ in points]
        points = [p for _, p in points]
    if len(points) == 0:
        raise EmptyInput("cannot index an empty point set")
    try:
        pts = np.array(points, dtype=np.float64)
    except ValueError:
        raise DimensionMismatch("points have mixed dimensions") from None
    if pts.ndim != 2:
        raise DimensionMismatch("points have mixed dimensions")
    ids = np.arange(len(pts)) if ids is None else np.asarray(ids, dtype=np.int64)
    if len(np.unique(ids)) != len(ids):
        raise ValueError("ids must be unique")
    pts.flags.writeable = False
    if kind is IndexKind.LINEAR:
        return LinearScanIndex(ids, pts)
    return KdTreeIndex(ids, pts, leaf_size)


def query_empty(index, query):
    return index.query_empty(query)
