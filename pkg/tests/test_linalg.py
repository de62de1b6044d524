"""Exact linear algebra: GF(2), Z/m, Z, Smith forms and Q/Z coboundary decisions."""
import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

import spin4.linalg as la
from spin4.builders import build_boundary_simplex, build_rp_n, build_simplex, prism, random_complex
from spin4.cochain import QZ, Z, Z2, Cochain, Ring, coboundary
from spin4.linalg import (GF2Eliminator, Infeasible, SparseSystem, array_to_bits, bits_to_array,
                          cohomology_rank, extend_cocycle, gf2_kernel_bits, gf2_nullspace, gf2_rank_rows,
                          is_coboundary, smith_normal_form, smith_sparse, solve, solve_coboundary_mod,
                          solve_integer, solve_mod, torsion_exponent)

seeds = st.integers(0, 2 ** 32 - 1)


def _oracle_invariants(A):
    D = sympy_snf(sympy.Matrix(A.tolist()), domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


@settings(max_examples=60, deadline=None)
@given(seed=seeds, r=st.integers(1, 6), c=st.integers(1, 6))
def test_smith_matches_sympy(seed, r, c):
    rng = np.random.default_rng(seed)
    A = rng.integers(-6, 7, (r, c)) * rng.integers(1, 4)
    got = smith_normal_form(A)
    assert sorted(got) == _oracle_invariants(A)
    assert all(got[i + 1] % got[i] == 0 for i in range(len(got) - 1))


@settings(max_examples=40, deadline=None)
@given(seed=seeds, r=st.integers(1, 7), c=st.integers(1, 7))
def test_smith_sparse_matches_dense(seed, r, c):
    rng = np.random.default_rng(seed)
    A = rng.integers(-3, 4, (r, c)) * (rng.random((r, c)) < 0.5)
    rows = [{j: int(v) for j, v in enumerate(row) if v} for row in A]
    assert sorted(smith_sparse(rows, c)) == sorted(smith_normal_form(A))


def _brute_kernel(rows, n):
    return {x for x in range(1 << n) if all(bin(r & x).count("1") % 2 == 0 for r in rows)}


@settings(max_examples=60, deadline=None)
@given(seed=seeds, m=st.integers(0, 8), n=st.integers(1, 9))
def test_gf2_nullspace_matches_brute_force(seed, m, n):
    rng = np.random.default_rng(seed)
    rows = [int(v) for v in rng.integers(0, 1 << n, m)]
    basis = gf2_nullspace(rows, n)
    vecs = [array_to_bits(b) for b in basis.T]
    assert len(vecs) == n - gf2_rank_rows(rows)
    span = {0}
    for v in vecs:
        span |= {s ^ v for s in span}
    assert span == _brute_kernel(rows, n)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, n=st.integers(2, 9))
def test_gf2_kernel_bits_on_allowed_columns(seed, n):
    rng = np.random.default_rng(seed)
    rows = [int(v) for v in rng.integers(0, 1 << n, rng.integers(0, n))]
    allowed = int(rng.integers(0, 1 << n))
    vecs = gf2_kernel_bits(rows, n, allowed)
    for v in vecs:
        assert all(bin(r & v).count("1") % 2 == 0 for r in rows)
    assert gf2_rank_rows(vecs) == len(vecs)


def test_gf2_eliminator_detects_inconsistency():
    el = GF2Eliminator(3)
    assert el.add_row(0b011, 1)
    assert el.add_row(0b110, 0)
    assert not el.add_row(0b101, 0)
    assert not el.feasible


def test_bits_round_trip():
    a = np.array([1, 0, 1, 1, 0, 0, 0, 1])
    assert bits_to_array(array_to_bits(a), 8).tolist() == a.tolist()


def _brute_solvable(A, b, m):
    return any(np.all((A @ np.array(x) - b) % m == 0)
               for x in itertools.product(range(m), repeat=A.shape[1]))


@settings(max_examples=60, deadline=None)
@given(seed=seeds, m=st.sampled_from([2, 3, 4, 6, 8]))
def test_solve_mod_matches_brute_force(seed, m):
    rng = np.random.default_rng(seed)
    r, c = rng.integers(1, 4), rng.integers(1, 4)
    A = rng.integers(0, m, (r, c))
    b = rng.integers(0, m, r)
    x = solve_mod(A, b, m)
    assert (x is not None) == _brute_solvable(A, b, m)
    if x is not None:
        assert np.all((A @ x - b) % m == 0)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_solve_integer(seed):
    rng = np.random.default_rng(seed)
    A = rng.integers(-4, 5, (4, 3))
    x0 = rng.integers(-5, 6, 3)
    x = solve_integer(A, A @ x0)
    assert x is not None and np.array_equal(A.astype(object) @ np.asarray(x, dtype=object), A @ x0)
    assert solve_integer(np.array([[2, 0], [0, 2]]), np.array([1, 0])) is None


def test_bitplane_eliminator_agrees_with_dense(monkeypatch):
    rng = np.random.default_rng(7)
    cx = build_rp_n(3)
    rhs_ok = coboundary(Cochain.random(cx, 1, Ring.zn(8), rng)).values
    monkeypatch.setattr(la, "DENSE_LIMIT", 0)
    f = solve_coboundary_mod(cx, 2, rhs_ok, 8)
    assert f is not None
    assert np.array_equal(coboundary(Cochain(cx, 1, Ring.zn(8), f)).values, rhs_ok % 8)
    for _ in range(10):
        rhs = rng.integers(0, 8, cx.count(2))
        sparse = solve_coboundary_mod(cx, 2, rhs, 8) is not None
        monkeypatch.setattr(la, "DENSE_LIMIT", 1 << 40)
        dense = solve_coboundary_mod(cx, 2, rhs, 8) is not None
        monkeypatch.setattr(la, "DENSE_LIMIT", 0)
        assert sparse == dense


def test_qz_coboundary_decision_uses_torsion():
    # H^2(RP^2; Q/Z) = 0, so every Q/Z 2-cochain is a coboundary there,
    # while (1/2)[top simplex] is a nontrivial class on S^2
    rp2 = build_rp_n(2)
    c = Cochain(rp2, 2, QZ, np.eye(rp2.count(2), 1, dtype=np.int64)[:, 0], 2)
    ok, f = is_coboundary(c)
    assert ok and coboundary(f) == c and f.den % 4 == 0
    s2 = build_boundary_simplex(3)
    c2 = Cochain(s2, 2, QZ, np.eye(s2.count(2), 1, dtype=np.int64)[:, 0], 2)
    assert not is_coboundary(c2)[0]
    assert torsion_exponent(rp2, 1) == 2


def test_is_coboundary_over_each_ring():
    rng = np.random.default_rng(8)
    cx = random_complex(rng, 8, 4, 4)
    for ring in (Z, Z2, QZ, Ring.zn(4), Ring.zn(3)):
        f = Cochain.random(cx, 1, ring, rng)
        ok, w = is_coboundary(coboundary(f))
        assert ok and coboundary(w) == coboundary(f)


def test_cohomology_ranks_of_rp3():
    cx = build_rp_n(3)
    assert [cohomology_rank(cx, k) for k in range(4)] == [1, 1, 1, 1]


def test_sparse_system_and_infeasible():
    s = SparseSystem(Z2, 2)
    s.add_row([(0, 1), (1, 1)], 1)
    s.add_row([(0, 1)], 1)
    x = solve(s)
    assert x.tolist() == [1, 0]
    s.add_row([(1, 1)], 1)
    assert isinstance(solve(s), Infeasible)
    zs = SparseSystem(Ring.zn(4), 1)
    zs.add_row([(0, 2)], 1)
    assert not solve(zs)
    assert "MatrixMarket" in zs.to_matrix_market()


def test_extend_cocycle_across_prism():
    s2 = build_boundary_simplex(3)
    pr = prism(s2, s2)
    rng = np.random.default_rng(9)
    a = coboundary(Cochain.random(s2, 1, Z2, rng))
    b = coboundary(Cochain.random(s2, 1, Z2, rng))
    x = extend_cocycle(pr, a, b, 2)
    assert not isinstance(x, Infeasible)
    assert coboundary(x).is_zero()
    top = Cochain(s2, 2, Z2, np.eye(s2.count(2), 1, dtype=np.int64)[:, 0])
    assert isinstance(extend_cocycle(pr, a, a + top, 2), Infeasible)
