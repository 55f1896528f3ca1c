import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chordcheck.chain import PolygonalChain
from chordcheck.checker import check_naive
from chordcheck.errors import DimensionMismatch
from chordcheck.generators import gen_staircase, gen_u_shape
from chordcheck.oracle import brute_force_oracle, chord_oracle, is_monotone, sample_chain

from corpus import generator_corpus

STAIR = gen_staircase(1)


def locs(samples):
    return [s.location.tolist() for s in samples]


def test_sample_chain_examples():
    assert locs(sample_chain(STAIR, 0)) == [[0, 0], [1, 0], [1, 1]]
    five = sample_chain(STAIR, 1)
    assert len(five) == 5
    assert [0.5, 0] in locs(five) and [1, 0.5] in locs(five)
    seg = sample_chain(PolygonalChain.from_points([(0, 0), (1, 0)]), 3)
    assert [p[0] for p in locs(seg)] == [0, 0.25, 0.5, 0.75, 1]


def test_sample_count_and_parametrization():
    chain = gen_staircase(3)
    for m in range(4):
        samples = sample_chain(chain, m)
        assert len(samples) == chain.n + m * (chain.n - 1)
        for s in samples:
            v = chain.vertices
            expected = (1 - s.parameter) * v[s.edge_index] + s.parameter * v[s.edge_index + 1]
            assert np.allclose(s.location, expected)


def test_staircase_passes():
    assert chord_oracle(sample_chain(STAIR, 0), 1e-9).passed


def test_u_shape_witness_with_midpoints():
    # maximal-margin quadruple, confirmed by brute_force_oracle enumeration
    res = chord_oracle(sample_chain(gen_u_shape(), 1), 1e-9)
    assert not res.passed
    w = res.witness
    assert locs([w.a, w.b, w.c, w.d]) == [[0, 0], [1, 0], [0.5, 1], [0, 1]]
    assert w.inner_chord == pytest.approx(math.sqrt(1.25), abs=1e-15)
    assert w.outer_chord == pytest.approx(1.0, abs=1e-15)
    assert w.margin == pytest.approx(math.sqrt(1.25) - 1, abs=1e-15)


def test_u_shape_vertices_only_miss_the_violation():
    assert chord_oracle(sample_chain(gen_u_shape(), 0), 1e-9).passed


def test_two_point_chain_passes():
    assert chord_oracle(sample_chain(PolygonalChain.from_points([(0, 0), (3, 1)]), 0)).passed
    assert chord_oracle(sample_chain(PolygonalChain.from_points([(0, 0), (3, 1)]), 5)).passed


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(2, 12), st.integers(2, 4))
def test_dp_matches_brute_force(seed, n_samples, d):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 1, size=(n_samples, d))
    if seed % 3 == 0:  # nearly monotone samples exercise the passing side
        pts[:, 1:] *= 0.1
        pts = np.cumsum(pts, axis=0)
    chain = PolygonalChain.from_points(pts)
    samples = sample_chain(chain, 0)
    fast, slow = chord_oracle(samples, 1e-9), brute_force_oracle(samples, 1e-9)
    assert fast.passed == slow.passed
    if not fast.passed:
        assert abs(fast.witness.margin - slow.witness.margin) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(0, 3))
def test_refinement_keeps_failures(seed, m):
    rng = np.random.default_rng(seed)
    chain = PolygonalChain.from_points(rng.uniform(0, 1, size=(int(rng.integers(3, 8)), 2)))
    tol = 1e-9
    coarse = chord_oracle(sample_chain(chain, m), tol)
    if not coarse.passed and coarse.witness.margin > 2 * tol:
        assert not chord_oracle(sample_chain(chain, m + 1), tol).passed


def test_checker_pass_implies_monotone_on_corpus():
    for name, chain, _ in generator_corpus():
        if check_naive(chain).passed:
            q = chain.vertices[-1] - chain.vertices[0]
            assert is_monotone(chain, q / np.linalg.norm(q)), name


def test_is_monotone_examples():
    s = math.sqrt(2) / 2
    assert is_monotone(STAIR, (s, s))
    assert is_monotone(gen_u_shape(), (0, 1))
    assert not is_monotone(PolygonalChain.from_points([(0, 0), (1, 0), (0.5, 0)]), (1, 0))
    with pytest.raises(DimensionMismatch):
        is_monotone(STAIR, (1, 0, 0))
