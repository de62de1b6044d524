"""GF(2) polynomials and symbolic cochains on the universal simplex."""
import numpy as np
from hypothesis import given, settings, strategies as st

from spin4.builders import build_simplex
from spin4.cochain import Z2, Cochain, coboundary
from spin4.cup import cup_i
from spin4.symbolic import (ONE, ZERO, FaceEvalFormula, VarTable, padd, pdegree, pmul, psubst, pvar,
                            sym_cocycle, sym_cup_i, sym_d, sym_free)

polys = st.frozensets(st.integers(0, 31), max_size=6)


@given(p=polys, q=polys, r=polys)
def test_poly_ring_laws(p, q, r):
    assert padd(p, q) == padd(q, p)
    assert padd(p, p) == ZERO
    assert pmul(p, q) == pmul(q, p)
    assert pmul(p, ONE) == p
    assert pmul(pmul(p, q), r) == pmul(p, pmul(q, r))
    assert pmul(p, padd(q, r)) == padd(pmul(p, q), pmul(p, r))
    # squarefree: polynomials are functions on GF(2)^n
    assert pmul(p, p) == p


def test_vars_and_substitution():
    x, y = pvar(0), pvar(1)
    p = padd(pmul(x, y), x)
    assert pdegree(p) == 2
    assert psubst(p, [ONE, y]) == padd(y, ONE)
    assert psubst(p, [y, y]) == ZERO


def test_symbolic_dd_zero_and_cocycles():
    t = VarTable()
    c = sym_free(5, 2, 0, t)
    assert sym_d(sym_d(c)).is_zero()
    assert sym_d(sym_cocycle(5, 2, 1, t)).is_zero()


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2 ** 32 - 1), p=st.integers(1, 2), q=st.integers(1, 2), i=st.integers(0, 2))
def test_symbolic_cup_matches_numeric(seed, p, q, i):
    # evaluate symbolic cup_i at random 0/1 values and compare with the numeric product
    n = 4
    t = VarTable()
    x, y = sym_free(n, p, 0, t), sym_free(n, q, 1, t)
    rng = np.random.default_rng(seed)
    vals = rng.integers(0, 2, len(t))
    cx = build_simplex(n)

    def numeric(arg, deg):
        arr = np.zeros(cx.count(deg), dtype=np.int64)
        for v, (a, f) in enumerate(t.labels):
            if a == arg:
                arr[cx.find(f)] = vals[v]
        return Cochain(cx, deg, Z2, arr)

    images = [ONE if v else ZERO for v in vals]
    sym = sym_cup_i(x, y, i)
    num = cup_i(numeric(0, p), numeric(1, q), i)
    for face in sym.faces():
        assert (psubst(sym[face], images) == ONE) == bool(num.values[cx.find(face)])


def test_formula_parse_and_strings():
    f = FaceEvalFormula.parse("a(012)b(234) + a(012)b(234) + a(013)a(013)", 4, "ab")
    assert f.term_strings() == ["a(013)"]
    assert FaceEvalFormula.parse(f.term_strings(), 4, "ab") == f
