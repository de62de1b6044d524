"""Cochains: rings, coboundary, coefficient maps, pullback, serialization."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spin4.builders import build_boundary_simplex, build_simplex, product_triangulation, random_complex
from spin4.cochain import (QZ, Z, Z2, Cochain, CochainError, Ring, all_cochains, all_cocycles, coboundary,
                           coefficient_map, half, integrate, mod2, pullback, qz, special_lift)
from spin4.complex import orient

seeds = st.integers(0, 2 ** 32 - 1)


def _naive_coboundary(c: Cochain) -> np.ndarray:
    """Oracle: (dc)(v0..vk+1) = sum_j (-1)^j c(v0..^vj..vk+1), looked up by vertex ids."""
    cx, k = c.complex, c.degree
    out = np.zeros(cx.count(k + 1), dtype=object)
    for s in range(cx.count(k + 1)):
        ids = cx.simplex_ids(k + 1, s)
        for j in range(k + 2):
            face = ids[:j] + ids[j + 1:]
            out[s] += (-1) ** j * int(c.values[cx.find(face)])
    return out


@settings(max_examples=30, deadline=None)
@given(seed=seeds, k=st.integers(0, 3))
def test_coboundary_matches_naive(seed, k):
    rng = np.random.default_rng(seed)
    cx = random_complex(rng, 7, 3, 4)
    c = Cochain.random(cx, k, Z, rng)
    got = coboundary(c).values
    assert list(got) == list(_naive_coboundary(c))


@settings(max_examples=30, deadline=None)
@given(seed=seeds, k=st.integers(0, 3), ring=st.sampled_from([Z, Z2, QZ, Ring.zn(8)]))
def test_dd_is_zero(seed, k, ring):
    rng = np.random.default_rng(seed)
    cx = random_complex(rng, 8, 4, 5)
    c = Cochain.random(cx, k, ring, rng)
    assert coboundary(coboundary(c)).is_zero()


def test_ring_tags_round_trip():
    for r in (Z, Z2, QZ, Ring.zn(4), Ring.zn(8)):
        assert Ring.parse(r.tag) == r
    assert Ring.zn(2) is Z2
    with pytest.raises(ValueError):
        Ring.parse("R")


def test_qz_values_are_reduced():
    cx = build_simplex(1)
    c = Cochain(cx, 0, QZ, [6, 3], 8)
    assert c.value((0,)) == Fraction(3, 4)
    assert c.value((1,)) == Fraction(3, 8)
    d = c + c
    assert d.den == 4 and d.value((1,)) == Fraction(3, 4)
    assert (8 * c).is_zero()


def test_mixed_operations_are_rejected():
    cx = build_simplex(2)
    with pytest.raises(CochainError):
        Cochain.zero(cx, 1, Z) + Cochain.zero(cx, 1, Z2)
    with pytest.raises(CochainError):
        Cochain.zero(cx, 1, Z) + Cochain.zero(cx, 2, Z)
    with pytest.raises(CochainError):
        Cochain.zero(cx, 1, Z) + Cochain.zero(build_simplex(2), 1, Z)
    with pytest.raises(CochainError):
        Cochain(cx, 1, Z, [1, 2])


def test_coefficient_maps():
    cx = build_simplex(2)
    c = Cochain(cx, 1, Z, [1, 2, 3])
    assert mod2(c) == Cochain(cx, 1, Z2, [1, 0, 1])
    assert half(c).value((0, 2)) == Fraction(0)
    assert qz(c, Fraction(1, 8)).value((1, 2)) == Fraction(3, 8)
    assert special_lift(mod2(c)).values.tolist() == [1, 0, 1]
    # (1/4) is not well defined on Z/2
    with pytest.raises(CochainError):
        coefficient_map(mod2(c), QZ, Fraction(1, 4))
    with pytest.raises(CochainError):
        coefficient_map(mod2(c), Z)
    assert coefficient_map(mod2(c), Ring.zn(4), 2).values.tolist() == [2, 0, 2]


@pytest.mark.parametrize("n,k,count", [(3, 1, 8), (4, 2, 64), (5, 2, 1024), (4, 1, 16)])
def test_cocycle_space_sizes(n, k, count):
    # the simplex is acyclic, so |Z^k| = |B^k| = 2^rank(d_{k-1}) = 2^C(n, k)
    a = all_cocycles(build_simplex(n), k)
    assert a.values.shape[1] == count
    assert coboundary(a).is_zero()
    assert len({tuple(col) for col in a.values.T}) == count


def test_all_cochains_enumerates():
    c = all_cochains(build_simplex(4), 1)
    assert c.values.shape == (10, 1024)


def test_pullback_commutes_with_coboundary():
    rng = np.random.default_rng(0)
    s2 = build_boundary_simplex(3)
    prod, pi1, _ = product_triangulation(s2, s2)
    c = Cochain.random(s2, 1, Z, rng)
    assert pullback(pi1, coboundary(c)) == coboundary(pullback(pi1, c))


def test_integrate_coboundary_on_closed_manifold_vanishes():
    rng = np.random.default_rng(1)
    cx = build_boundary_simplex(4)
    fc = orient(cx)
    for ring in (Z, QZ):
        c = Cochain.random(cx, 2, ring, rng)
        assert integrate(coboundary(c), fc) == 0


def test_json_round_trip():
    rng = np.random.default_rng(2)
    cx = build_boundary_simplex(4)
    for ring in (Z, Z2, QZ, Ring.zn(4)):
        c = Cochain.random(cx, 2, ring, rng)
        back = Cochain.from_json(c.to_json(), cx)
        assert back == c and back.ring == ring
