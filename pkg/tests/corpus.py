"""Shared chain corpora for the differential and metamorphic tests."""

import math

import numpy as np

from chordcheck.chain import PolygonalChain
from chordcheck.generators import (gen_hexagon_upper_hull, gen_random_monotone, gen_reuleaux_arc,
                                   gen_staircase, gen_straight_subdivided, gen_u_shape)

DIMS = (2, 3, 4, 6)


def generator_corpus():
    """(name, chain, expected verdict or None) for every generator family."""
    rng = np.random.default_rng(2024)
    out = [
        ("hexagon", gen_hexagon_upper_hull(), True),
        ("ushape", gen_u_shape(), False),
        ("reuleaux-inscribed-20", gen_reuleaux_arc(20, inscribed=True), False),
    ]
    for steps in (1, 2, 3, 5, 8):
        out.append((f"staircase-{steps}", gen_staircase(steps), True))
        out.append((f"staircase-rand-{steps}",
                    gen_staircase(steps, rng.uniform(0.1, 2, steps), rng.uniform(0.1, 2, steps)), True))
    for d in DIMS:
        out.append((f"straight-{d}", gen_straight_subdivided(d, 12), True))
    for m in (8, 16, 50):
        out.append((f"reuleaux-{m}", gen_reuleaux_arc(m), True))
    for d in DIMS:
        for turn in (0.0, 0.5, 1.0, 1.4):
            out.append((f"monotone-{d}-{turn}", gen_random_monotone(d, 25, turn, seed=d), None))
    return out


def random_uniform_chain(rng, d, n):
    return PolygonalChain.from_points(rng.uniform(0.0, 1.0, size=(n, d)))


def random_corpus(count=1000, seed=12345):
    """Seeded mix of uniform-random chains (mostly failing) and monotone
    chains with a range of turn limits (both verdicts)."""
    rng = np.random.default_rng(seed)
    chains = []
    for k in range(count):
        d = DIMS[k % len(DIMS)]
        n = int(rng.integers(3, 31))
        if k % 2 == 0:
            chains.append(random_uniform_chain(rng, d, n))
        else:
            turn = float(rng.uniform(0.0, 1.5))
            chains.append(gen_random_monotone(d, n, turn, seed=int(rng.integers(1 << 31))))
    return chains


def random_rotation(rng, d):
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def turn_angle(chain, i):
    """Turn angle at 0-based interior vertex ``i``."""
    v = chain.vertices
    a, b = v[i] - v[i - 1], v[i + 1] - v[i]
    cosang = a @ b / (np.linalg.norm(a) * np.linalg.norm(b))
    return math.acos(max(-1.0, min(1.0, cosang)))
