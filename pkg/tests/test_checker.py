import math

import numpy as np
import pytest

from chordcheck.chain import PolygonalChain
from chordcheck.checker import check_naive, extremal_queries
from chordcheck.errors import TooFewVertices
from chordcheck.generators import gen_hexagon_upper_hull, gen_staircase, gen_u_shape
from chordcheck.oracle import chord_oracle, sample_chain

from corpus import generator_corpus, random_corpus, random_rotation, turn_angle

TOL = 1e-9


def test_staircase_passes_on_boundaries():
    r = check_naive(gen_staircase(1), TOL)
    assert r.passed and r.witness is None
    assert r.stats.halfspace_tests == 2


def test_u_shape_first_witness():
    r = check_naive(gen_u_shape(), TOL)
    assert not r.passed
    w = r.witness
    assert (w.loop, w.vertex_index, w.offender_index) == ("L1", 2, 4)
    assert w.offset == -1.0


def test_hexagon_upper_hull_passes():
    assert check_naive(gen_hexagon_upper_hull(), TOL).passed


def test_two_vertex_chain():
    r = check_naive(PolygonalChain.from_points([(0, 0), (1, 2)]), TOL)
    assert r.passed and r.stats.halfspace_tests == 0


def test_too_few_vertices():
    with pytest.raises(TooFewVertices):
        check_naive(PolygonalChain.from_points([(0, 0), (0, 0)]), TOL)


def test_extremal_queries_staircase():
    qs = list(extremal_queries(gen_staircase(1), TOL))
    assert [q.loop for q in qs] == ["L1", "L2"]
    assert qs[0].query.anchor.tolist() == [1, 0] and qs[0].query.normal.tolist() == [1, 0]
    assert list(qs[0].live) == [3]
    # L2 queries are stored with the outward normal negated, see HalfspaceQuery
    assert qs[1].query.anchor.tolist() == [1, 0] and qs[1].query.normal.tolist() == [0, -1]
    assert list(qs[1].live) == [1]


def test_extremal_queries_ranges():
    assert list(extremal_queries(PolygonalChain.from_points([(0, 0), (1, 0)]))) == []
    qs = list(extremal_queries(gen_u_shape()))
    assert [(q.loop, q.live.start, q.live.stop - 1) for q in qs] == [
        ("L1", 3, 4), ("L1", 4, 4), ("L2", 1, 2), ("L2", 1, 1)]


def test_queries_match_naive_checker():
    for _, chain, _ in generator_corpus():
        qs = list(extremal_queries(chain, TOL))
        assert len(qs) == 2 * max(chain.n - 2, 0)
        fails = [q for q in qs if q.query.violations(chain.vertices[q.live.start - 1:q.live.stop - 1])[0].any()]
        assert bool(fails) != check_naive(chain, TOL).passed


def test_generator_ground_truth():
    for name, chain, expected in generator_corpus():
        if expected is not None:
            assert check_naive(chain, TOL).passed == expected, name


def test_pass_uses_all_tests():
    for chain in random_corpus(300, seed=5):
        r = check_naive(chain, TOL)
        if r.passed:
            assert r.stats.halfspace_tests == 2 * (chain.n - 2)
        else:
            assert r.witness.offset < -TOL


def test_agrees_with_chord_oracle():
    for chain in random_corpus(300, seed=6):
        verdict = check_naive(chain, TOL).passed
        otol = 2 * TOL * (1 + chain.diameter())
        for m in (0, 1, 3):
            oracle = chord_oracle(sample_chain(chain, m), otol)
            if verdict:
                assert oracle.passed
            if not oracle.passed:
                assert not verdict


def test_rigid_motion_and_reversal_invariance():
    rng = np.random.default_rng(77)
    for chain in random_corpus(200, seed=7) + [c for _, c, _ in generator_corpus()]:
        verdict = check_naive(chain, TOL).passed
        assert check_naive(chain.reversed(), TOL).passed == verdict
        d = chain.dimension
        moved = chain.transformed(random_rotation(rng, d), rng.uniform(-3, 3, d))
        assert check_naive(moved, TOL).passed == verdict


def test_sharp_turn_fails():
    rng = np.random.default_rng(3)
    limit = math.pi / 2 + math.asin(2 * TOL)
    for chain in random_corpus(400, seed=8):
        turns = [turn_angle(chain, i) for i in range(1, chain.n - 1)]
        if any(t > limit for t in turns):
            assert not check_naive(chain, TOL).passed
    # explicit construction: a straight run followed by a 100 degree turn
    for _ in range(20):
        ang = math.radians(100) + rng.uniform(0, 0.5)
        pts = [(0, 0), (1, 0), (1 + math.cos(ang), math.sin(ang))]
        assert not check_naive(PolygonalChain.from_points(pts), TOL).passed
