"""Subquadratic variant of the two-loop checker using bucketed indexes.

The chain is cut into ``q`` contiguous buckets, each with its own static
emptiness index. Both loops delete points strictly in chain order (a prefix
for L1, a suffix for L2), so deletion is just a moving cursor: the bucket
that holds the cursor is brute-forced over its live points, and every bucket
beyond it is still complete and can be asked through its index.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .checker import DEFAULT_TOL, CheckReport, CheckStats, Witness, extremal_queries
from .errors import InvalidOverride, TooFewVertices
from .index import IndexKind, _box_min_offset, build_index


@dataclass(frozen=True)
class BucketPlan:
    n: int
    d: int
    k: int
    q: int
    bucket_ranges: tuple  # 1-based inclusive (first, last) per bucket

    @property
    def max_bucket_size(self):
        return max(b - a + 1 for a, b in self.bucket_ranges)


def default_bucket_count(n, d):
    k = d // 2
    return min(max(int(round(n ** (1.0 / (k + 1)))), 1), n)


def plan_buckets(n, d, q_override=None):
    """Split ``1..n`` into ``q = round(n^(1/(k+1)))`` near-equal runs, ``k = d // 2``."""
    if n < 2 or d < 2:
        raise ValueError("plan_buckets needs n >= 2 and d >= 2")
    if q_override is None:
        q = default_bucket_count(n, d)
    else:
        if not 1 <= q_override <= n:
            raise InvalidOverride(f"q must lie in [1, {n}], got {q_override}")
        q = int(q_override)
    base, extra = divmod(n, q)
    ranges = []
    first = 1
    for j in range(q):
        size = base + (1 if j < extra else 0)
        ranges.append((first, first + size - 1))
        first += size
    return BucketPlan(n, d, d // 2, q, tuple(ranges))


@dataclass
class BucketStats(CheckStats):
    brute_points_scanned: int = 0
    max_brute_per_query: int = 0
    bucket_count: int = 1


@dataclass
class BucketedReport(CheckReport):
    stats: BucketStats = field(default_factory=BucketStats)
    plan: BucketPlan | None = None

    def as_dict(self):
        out = super().as_dict()
        out["stats"].update({
            "brute_points_scanned": self.stats.brute_points_scanned,
            "max_brute_per_query": self.stats.max_brute_per_query,
            "bucket_count": self.stats.bucket_count,
        })
        return out


class BucketArray:
    """The ``q`` per-bucket indexes of one chain, built once for both loops."""

    def __init__(self, chain, plan, kind=IndexKind.KDTREE, build=build_index):
        self.plan = plan
        self.kind = IndexKind.parse(kind)
        self.vertices = chain.vertices
        self.indexes = []
        for first, last in plan.bucket_ranges:
            ids = np.arange(first, last + 1)
            self.indexes.append(build(chain.vertices[first - 1:last], self.kind, ids=ids))
        self.root_lo = np.array([ix.lo for ix in self.indexes])
        self.root_hi = np.array([ix.hi for ix in self.indexes])
        # bucket number (0-based) of each 1-based vertex id; slot 0 unused
        self.bucket_of = np.zeros(plan.n + 1, dtype=np.intp)
        for j, (first, last) in enumerate(plan.bucket_ranges):
            self.bucket_of[first:last + 1] = j

    def search(self, query, buckets, stats):
        """Query the full buckets in the given order; first witness wins."""
        if not len(buckets):
            return None
        if self.kind is IndexKind.LINEAR and all(ix.kind is IndexKind.LINEAR for ix in self.indexes):
            return self._search_linear(query, buckets, stats)
        # the root-box test every index query starts with, batched over buckets
        buckets = np.asarray(buckets)
        live = _box_min_offset(self.root_lo[buckets], self.root_hi[buckets], query) < -query.tol
        for pos, j in enumerate(buckets):
            if not live[pos]:
                continue
            ans = self.indexes[j].query_empty(query)
            stats.points_inspected += ans.points_inspected
            if not ans.empty:
                stats.index_queries += pos + 1
                return ans.witness_id, ans.offset
        stats.index_queries += len(buckets)
        return None

    def _search_linear(self, query, buckets, stats):
        # buckets are consecutive, so their points form one contiguous run
        ranges = self.plan.bucket_ranges
        first = min(ranges[buckets[0]][0], ranges[buckets[-1]][0])
        last = max(ranges[buckets[0]][1], ranges[buckets[-1]][1])
        pts = self.vertices[first - 1:last]
        stats.points_inspected += len(pts)
        mask, off = query.violations(pts)
        if not np.any(mask):
            stats.index_queries += len(buckets)
            return None
        hit_ids = np.flatnonzero(mask) + first
        hit_buckets = self.bucket_of[hit_ids]
        ascending = buckets[-1] >= buckets[0]
        j = hit_buckets.min() if ascending else hit_buckets.max()
        stats.index_queries += abs(int(j) - int(buckets[0])) + 1
        # LinearScan reports the lowest id inside the answering bucket
        wid = int(hit_ids[hit_buckets == j].min())
        return wid, float(off[wid - first])


def check_bucketed(chain, tol=DEFAULT_TOL, kind=IndexKind.KDTREE, q_override=None,
                   plan=None, build=build_index):
    """Same verdict as :func:`check_naive`, answered with per-bucket indexes."""
    if chain.n < 2:
        raise TooFewVertices("need at least 2 vertices")
    plan = plan or plan_buckets(chain.n, chain.dimension, q_override)
    kind = IndexKind.parse(kind)
    stats = BucketStats(bucket_count=plan.q)
    algo = f"bucketed:{kind.value}"
    if chain.n < 3:
        return BucketedReport(True, None, stats, algo, plan)
    buckets = BucketArray(chain, plan, kind, build)
    v = chain.vertices
    for eq in extremal_queries(chain, tol):
        stats.halfspace_tests += 1
        if eq.loop == "L1":
            cursor = eq.live.start  # first live id; the live range runs to n
            j = buckets.bucket_of[cursor]
            lo, hi = cursor, plan.bucket_ranges[j][1]
            later = np.arange(j + 1, plan.q)
        else:
            cursor = eq.live.stop - 1  # last live id; the live range starts at 1
            j = buckets.bucket_of[cursor]
            lo, hi = plan.bucket_ranges[j][0], cursor
            later = np.arange(j - 1, -1, -1)
        frontier = v[lo - 1:hi]
        scanned = len(frontier)
        stats.brute_points_scanned += scanned
        stats.points_inspected += scanned
        stats.max_brute_per_query = max(stats.max_brute_per_query, scanned)
        mask, off = eq.query.violations(frontier)
        if np.any(mask):
            k = int(np.argmax(mask))
            w = Witness(eq.loop, eq.vertex_index, lo + k, float(off[k]))
            return BucketedReport(False, w, stats, algo, plan)
        hit = buckets.search(eq.query, later, stats)
        if hit is not None:
            wid, offset = hit
            return BucketedReport(False, Witness(eq.loop, eq.vertex_index, wid, offset), stats, algo, plan)
    return BucketedReport(True, None, stats, algo, plan)


def expected_max_brute(n, q):
    return math.ceil(n / q)
