"""cup_i products, Sq^i and the cochain suspension."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spin4.builders import build_simplex, random_complex, suspension
from spin4.cochain import QZ, Z, Z2, Cochain, CochainError, all_cochains, all_cocycles, coboundary, mod2
from spin4.cup import cup, cup_i, cup_terms, sq, suspend_cochain

seeds = st.integers(0, 2 ** 32 - 1)


def _rand(cx, k, ring, rng, n):
    if ring is Z2:
        return Cochain(cx, k, Z2, rng.integers(0, 2, (cx.count(k), n)))
    return Cochain(cx, k, Z, rng.integers(-4, 5, (cx.count(k), n)))


def _steenrod_rhs(x, y, i):
    p, q = x.degree, y.degree
    return (-1) ** i * (cup_i(coboundary(x), y, i) + (-1) ** p * cup_i(x, coboundary(y), i)
                        - cup_i(x, y, i - 1) - (-1) ** (i + p * q) * cup_i(y, x, i - 1))


@pytest.mark.parametrize("p,q,i", [(p, q, i) for p in range(4) for q in range(4)
                                   for i in range(min(p, q) + 1) if p + q - i + 1 <= 6])
@pytest.mark.parametrize("ring", [Z, Z2])
def test_coboundary_formula_on_delta6(p, q, i, ring):
    rng = np.random.default_rng(100 * p + 10 * q + i)
    cx = build_simplex(6)
    x, y = _rand(cx, p, ring, rng, 40), _rand(cx, q, ring, rng, 40)
    assert coboundary(cup_i(x, y, i)) == _steenrod_rhs(x, y, i)


@pytest.mark.parametrize("p,q,i", [(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)])
def test_coboundary_formula_exhaustive_delta3(p, q, i):
    cx = build_simplex(min(p + q - i + 1, 3))
    if p > cx.dim or q > cx.dim:
        pytest.skip("degrees exceed the simplex")
    xs, ys = all_cochains(cx, p), all_cochains(cx, q)
    nx, ny = xs.values.shape[1], ys.values.shape[1]
    x = Cochain(cx, p, Z2, np.repeat(xs.values, ny, axis=1))
    y = Cochain(cx, q, Z2, np.tile(ys.values, (1, nx)))
    assert coboundary(cup_i(x, y, i)) == _steenrod_rhs(x, y, i)


def _aw_cup(x, y):
    """Oracle: (x u y)(v0..vn) = x(v0..vp) y(vp..vn)."""
    cx, p, q = x.complex, x.degree, y.degree
    out = []
    for s in range(cx.count(p + q)):
        ids = cx.simplex_ids(p + q, s)
        out.append(int(x.values[cx.find(ids[:p + 1])]) * int(y.values[cx.find(ids[p:])]))
    return out


@settings(max_examples=25, deadline=None)
@given(seed=seeds, p=st.integers(0, 2), q=st.integers(0, 2))
def test_cup0_is_alexander_whitney(seed, p, q):
    rng = np.random.default_rng(seed)
    cx = random_complex(rng, 8, 4, 4)
    x, y = Cochain.random(cx, p, Z, rng), Cochain.random(cx, q, Z, rng)
    assert cup(x, y).values.tolist() == _aw_cup(x, y)


@settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_cup_is_associative_and_leibniz(seed):
    rng = np.random.default_rng(seed)
    cx = random_complex(rng, 8, 4, 5)
    x, y, z = (Cochain.random(cx, k, Z, rng) for k in (1, 2, 1))
    assert cup(cup(x, y), z) == cup(x, cup(y, z))
    assert coboundary(cup(x, y)) == cup(coboundary(x), y) - cup(x, coboundary(y))


def test_cup_terms_counts():
    # cup_0 has one term; cup_p on two p-cochains evaluates on a p-simplex
    assert len(cup_terms(2, 3, 0)) == 1
    assert cup_terms(2, 2, 2) == (((0, 1, 2), (0, 1, 2), 1),)
    assert cup_terms(1, 1, 1) == (((0, 1), (0, 1), -1),)
    assert cup_terms(1, 1, 3) == ()


def test_sq0_is_identity_and_sq_top_is_square():
    rng = np.random.default_rng(4)
    cx = random_complex(rng, 9, 5, 5)
    for k in range(1, 3):
        c = Cochain(cx, k, Z2, rng.integers(0, 2, cx.count(k)))
        assert cup_i(c, c, k) == c
        # Sq^k c = c u c + c u_1 dc, which is the square only on cocycles
        assert sq(c, k) == cup(c, c) + cup_i(c, coboundary(c), 1)
    a = all_cocycles(build_simplex(5), 2)
    assert sq(a, 2) == cup(a, a)


def test_sq_of_cocycles_is_a_cocycle():
    a = all_cocycles(build_simplex(6), 2)
    for i in range(3):
        assert coboundary(sq(a, i)).is_zero()


def test_sq_out_of_range_is_zero():
    c = Cochain.random(build_simplex(4), 1, Z2, np.random.default_rng(0))
    assert sq(c, 2).is_zero() and sq(c, 2).degree == 3


def test_mod2_commutes_with_cup_i():
    rng = np.random.default_rng(5)
    cx = build_simplex(5)
    x, y = _rand(cx, 2, Z, rng, 50), _rand(cx, 2, Z, rng, 50)
    for i in range(3):
        assert mod2(cup_i(x, y, i)) == cup_i(mod2(x), mod2(y), i)


def test_cup_rejects_qz_and_mixed_rings():
    cx = build_simplex(3)
    rng = np.random.default_rng(6)
    x = Cochain.random(cx, 1, Z, rng)
    with pytest.raises(CochainError):
        cup(x, Cochain.random(cx, 1, QZ, rng, den=8))
    with pytest.raises(CochainError):
        cup(x, mod2(x))


@settings(max_examples=15, deadline=None)
@given(seed=seeds)
def test_suspension_sign_formula(seed):
    rng = np.random.default_rng(seed)
    base = random_complex(rng, 7, 2, 3, low_facets=8)
    s = suspension(base)
    for p, q, i in [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, 1), (2, 2, 1), (2, 2, 2)]:
        if p + q - i > base.dim:
            continue
        x, y = Cochain.random(base, p, Z, rng), Cochain.random(base, q, Z, rng)
        lhs = suspend_cochain(cup_i(x, y, i), s)
        rhs = (-1) ** (p + i + 1) * cup_i(suspend_cochain(x, s), suspend_cochain(y, s), i + 1)
        assert lhs == rhs
        assert suspend_cochain(coboundary(x), s) == coboundary(suspend_cochain(x, s))
