import math

import numpy as np
import pytest

from chordcheck.bucketed import check_bucketed, plan_buckets
from chordcheck.checker import check_naive
from chordcheck.errors import InvalidOverride
from chordcheck.generators import gen_random_monotone, gen_staircase, gen_u_shape
from chordcheck.index import IndexKind

from corpus import generator_corpus, random_corpus

TOL = 1e-9


def test_plan_examples():
    p = plan_buckets(4096, 4)
    assert (p.k, p.q) == (2, 16)
    assert {b - a + 1 for a, b in p.bucket_ranges} == {256}
    assert plan_buckets(65536, 6).q == 16
    single = plan_buckets(10, 4, q_override=1)
    assert single.bucket_ranges == ((1, 10),)


@pytest.mark.parametrize("n,d,q", [(2, 2, None), (17, 3, None), (100, 5, 7), (31, 2, 31), (1000, 9, None)])
def test_plan_covers_in_order(n, d, q):
    p = plan_buckets(n, d, q)
    ids = [i for a, b in p.bucket_ranges for i in range(a, b + 1)]
    assert ids == list(range(1, n + 1))
    sizes = [b - a + 1 for a, b in p.bucket_ranges]
    assert max(sizes) - min(sizes) <= 1
    assert max(sizes) <= math.ceil(n / p.q)


@pytest.mark.parametrize("bad", [0, 11, -1])
def test_plan_rejects_bad_override(bad):
    with pytest.raises(InvalidOverride):
        plan_buckets(10, 4, bad)


@pytest.mark.parametrize("kind", list(IndexKind))
@pytest.mark.parametrize("q", [1, 2, 3])
def test_staircase_any_backend(kind, q):
    chain = gen_staircase(1)
    assert check_bucketed(chain, TOL, kind, q).passed


def test_u_shape_kdtree_q2():
    r = check_bucketed(gen_u_shape(), TOL, "kdtree", 2)
    assert not r.passed
    x = gen_u_shape().vertices[r.witness.offender_index - 1]
    anchor = gen_u_shape().vertices[r.witness.vertex_index - 1]
    assert r.witness.offset < -TOL * (1 + np.linalg.norm(x - anchor))


def test_large_monotone_chain_matches_naive():
    chain = gen_random_monotone(4, 1000, 0.3, seed=1)
    naive = check_naive(chain, TOL)
    for kind in IndexKind:
        r = check_bucketed(chain, TOL, kind)
        assert r.passed == naive.passed
        assert r.stats.max_brute_per_query <= math.ceil(1000 / r.plan.q)


def test_q1_reproduces_naive_stats():
    for chain in random_corpus(100, seed=21) + [c for _, c, _ in generator_corpus()]:
        naive = check_naive(chain, TOL)
        for kind in IndexKind:
            r = check_bucketed(chain, TOL, kind, 1)
            assert r.stats.index_queries == 0
            assert r.stats.halfspace_tests == naive.stats.halfspace_tests
            assert r.stats.points_inspected == naive.stats.points_inspected
            assert r.witness == naive.witness


def test_counters_and_live_ranges():
    for chain in random_corpus(300, seed=22):
        n = chain.n
        for q in (2, None, n):
            for kind in IndexKind:
                r = check_bucketed(chain, TOL, kind, q)
                Q = r.plan.q
                assert r.stats.index_queries <= 2 * (n - 2) * (Q - 1)
                assert r.stats.max_brute_per_query <= math.ceil(n / Q)
                if r.witness:
                    w = r.witness
                    if w.loop == "L1":
                        assert w.offender_index >= w.vertex_index + 1
                    else:
                        assert w.offender_index <= w.vertex_index - 1
                    assert w.offset < -TOL


def test_verdicts_match_naive():
    for chain in random_corpus(200, seed=23):
        want = check_naive(chain, TOL).passed
        for q in (1, 2, None, chain.n):
            for kind in IndexKind:
                assert check_bucketed(chain, TOL, kind, q).passed == want
