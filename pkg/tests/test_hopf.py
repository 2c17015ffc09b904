import math

import numpy as np
import pytest

from hopfact.hopf import HopfParams, OrbitPoint, canonicalize, deck_equal, orbit_distance


def pt(params, *coords):
    return OrbitPoint(params, np.array(coords, dtype=complex))


def test_params_reject_unit_modulus():
    with pytest.raises(ValueError):
        HopfParams(d=1j, n=2, m=1)


def test_params_reject_zero_d():
    with pytest.raises(ValueError):
        HopfParams(d=0, n=2, m=1)


def test_params_reject_small_n():
    with pytest.raises(ValueError):
        HopfParams(d=2, n=1, m=1)


def test_orbit_point_rejects_zero_vector():
    with pytest.raises(ValueError):
        OrbitPoint(HopfParams(d=2, n=2, m=1), np.zeros(2, dtype=complex))


def test_deck_generator_equivalence():
    p = HopfParams(d=3 + 1j, n=2, m=1)
    z = pt(p, 1.0, 2.0 - 1j)
    w = OrbitPoint(p, p.d * z.rep)
    assert deck_equal(z, w)


def test_rotation_generator_equivalence():
    p = HopfParams(d=2, n=2, m=3)
    z = pt(p, 1.0, 0.5j)
    w = OrbitPoint(p, np.exp(2j * math.pi / 3) * z.rep)
    assert deck_equal(z, w)


def test_modulus_mismatch_not_equal():
    p = HopfParams(d=3, n=2, m=1)
    assert not deck_equal(pt(p, 1.0, 0.0), pt(p, 2.0, 0.0))


def test_deck_equal_rejects_mismatched_params():
    p1 = HopfParams(d=2, n=2, m=1)
    p2 = HopfParams(d=2, n=2, m=2)
    with pytest.raises(ValueError):
        deck_equal(pt(p1, 1, 0), pt(p2, 1, 0))


def test_deck_equal_reflexive_symmetric():
    p = HopfParams(d=1 + 2j, n=3, m=4)
    rng = np.random.Generator(np.random.Philox(3))
    for _ in range(20):
        z = OrbitPoint(p, rng.standard_normal(3) + 1j * rng.standard_normal(3))
        w = OrbitPoint(p, rng.standard_normal(3) + 1j * rng.standard_normal(3))
        assert deck_equal(z, z)
        assert deck_equal(z, w) == deck_equal(w, z)


def test_canonicalize_scaling_example():
    p = HopfParams(d=2, n=2, m=1)
    z = pt(p, 8.0, 0.0)
    c = canonicalize(z)
    assert np.allclose(c.rep, [1.0, 0.0])


def test_canonicalize_rotation_example():
    # m = 4: rotating (i, 0) by i^3 brings the leading argument to 0
    p = HopfParams(d=2, n=2, m=4)
    c = canonicalize(pt(p, 1j, 0.0))
    assert np.allclose(c.rep, [1.0, 0.0], atol=1e-12)


def test_canonicalize_idempotent():
    p = HopfParams(d=1 + 2j, n=3, m=5)
    rng = np.random.Generator(np.random.Philox(11))
    for _ in range(20):
        z = OrbitPoint(p, rng.standard_normal(3) + 1j * rng.standard_normal(3))
        c1 = canonicalize(z)
        c2 = canonicalize(c1)
        assert np.max(np.abs(c1.rep - c2.rep)) < 1e-10


def test_canonicalize_modulus_exponent_in_unit_interval():
    p = HopfParams(d=0.5, n=2, m=2)
    rng = np.random.Generator(np.random.Philox(12))
    for _ in range(50):
        z = OrbitPoint(p, 10.0 ** rng.uniform(-4, 4) *
                       (rng.standard_normal(2) + 1j * rng.standard_normal(2)))
        c = canonicalize(z)
        s = math.log(np.linalg.norm(c.rep)) / math.log(abs(p.d))
        assert 0.0 <= s < 1.0


@pytest.mark.parametrize("ell,K", [(-3, 0), (-1, 1), (0, 2), (2, 0), (3, 2)])
def test_canonicalize_deck_invariant(ell, K):
    p = HopfParams(d=4, n=2, m=3)
    rng = np.random.Generator(np.random.Philox(40 + ell * 7 + K))
    for _ in range(10):
        v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        z = OrbitPoint(p, v)
        g = p.d ** ell * np.exp(2j * math.pi * K / p.m)
        moved = OrbitPoint(p, g * v)
        c1, c2 = canonicalize(z), canonicalize(moved)
        assert np.max(np.abs(c1.rep - c2.rep)) / np.linalg.norm(c1.rep) < 1e-10


def test_deck_equal_canonical_representative():
    p = HopfParams(d=-2, n=2, m=3)
    rng = np.random.Generator(np.random.Philox(77))
    for _ in range(20):
        z = OrbitPoint(p, rng.standard_normal(2) + 1j * rng.standard_normal(2))
        assert deck_equal(z, canonicalize(z))


def test_orbit_distance_zero_on_deck_translates():
    p = HopfParams(d=1 + 2j, n=2, m=2)
    v = np.array([1.0, 2.0 - 1j])
    g = p.d ** 2 * np.exp(1j * math.pi)
    assert orbit_distance(g * v, v, p) < 1e-12
