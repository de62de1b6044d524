"""Steenrod cup_i products with integral signs, cochain Sq^i, and the cochain
suspension.

For a (p+q-i)-simplex (0..n), cup_i sums over 0 <= j0 < ... < ji <= n.  The
front face is [0,j0] u [j1,j2] u ... and the back face is
[j0,j1] u [j2,j3] u ...; a term contributes only if the front has p+1
vertices and the back q+1.  The integral sign of a term is (-1)^(inv + p*i),
where inv counts pairs (u, v), u < v, with u a back-only vertex and v a
front-only vertex.  With this sign

    d(X u_i Y) = (-1)^i (dX u_i Y + (-1)^|X| X u_i dY
                         - X u_{i-1} Y - (-1)^(i + |X||Y|) Y u_{i-1} X),

which the test suite checks exhaustively on small simplices.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .cochain import Cochain, CochainError, Z2, coboundary
from .complex import OrderedComplex, SimplicialMap
from .builders import suspension_apexes

Term = Tuple[Tuple[int, ...], Tuple[int, ...], int]


@lru_cache(maxsize=None)
def cup_terms(p: int, q: int, i: int) -> Tuple[Term, ...]:
    """(front positions, back positions, sign) for each term of cup_i."""
    n = p + q - i
    out: List[Term] = []
    if n < 0 or i < 0:
        return ()
    for J in itertools.combinations(range(n + 1), i + 1):
        bounds = [0] + list(J) + [n]
        front, back = set(), set()
        for k in range(len(bounds) - 1):
            (front if k % 2 == 0 else back).update(range(bounds[k], bounds[k + 1] + 1))
        if len(front) != p + 1 or len(back) != q + 1:
            continue
        only_f = [u for u in range(n + 1) if u in front and u not in back]
        only_b = [u for u in range(n + 1) if u in back and u not in front]
        inv = sum(1 for u in only_b for v in only_f if u < v)
        out.append((tuple(sorted(front)), tuple(sorted(back)), -1 if (inv + p * i) % 2 else 1))
    return tuple(out)


def _bcast(a: np.ndarray, b: np.ndarray):
    if a.ndim < b.ndim:
        a = a.reshape(a.shape + (1,) * (b.ndim - a.ndim))
    elif b.ndim < a.ndim:
        b = b.reshape(b.shape + (1,) * (a.ndim - b.ndim))
    return a, b


def cup_i(x: Cochain, y: Cochain, i: int = 0) -> Cochain:
    """Steenrod's x cup_i y (i = 0 is the cup product)."""
    if x.complex is not y.complex:
        raise CochainError("cochains live on different complexes")
    if x.ring != y.ring or x.ring.kind == "QZ":
        raise CochainError("cup_i needs both factors over the same ring Z/2, Z or Z/n")
    cx = x.complex
    p, q = x.degree, y.degree
    n = p + q - i
    if n < 0:
        raise CochainError("negative result degree")
    shape = np.broadcast_shapes(x.batch_shape, y.batch_shape) if x.batch_shape or y.batch_shape else ()
    out = np.zeros((cx.count(n),) + shape, dtype=np.int64)
    if i < 0 or i > min(p, q) or n > cx.dim:
        return Cochain(cx, n, x.ring, out)
    signed = x.ring is not Z2
    for front, back, sign in cup_terms(p, q, i):
        a = x.values[cx.faces(n, front)]
        b = y.values[cx.faces(n, back)]
        a, b = _bcast(a, b)
        if signed and sign < 0:
            out -= a * b
        else:
            out += a * b
    return Cochain(cx, n, x.ring, out)


def cup(x: Cochain, y: Cochain) -> Cochain:
    return cup_i(x, y, 0)


def sq(c: Cochain, i: int) -> Cochain:
    """Cochain Sq^i c = c u_j c + c u_{j+1} dc with i + j = |c| (Z/2)."""
    if c.ring is not Z2:
        raise CochainError("Sq needs a Z/2 cochain")
    k = c.degree
    if i < 0 or i > k:
        return Cochain.zero(c.complex, k + i, Z2, c.batch_shape) if k + i >= 0 else None
    j = k - i
    return cup_i(c, c, j) + cup_i(c, coboundary(c), j + 1)


def suspend_cochain(c: Cochain, susp: OrderedComplex) -> Cochain:
    """s(c)(s0..sn, top) = c(s0..sn); zero on the lower cone and on X."""
    base = c.complex
    top_id, bot_id = suspension_apexes(base)
    ids = set(susp.vertex_ids.tolist())
    if ids != set(base.vertex_ids.tolist()) | {top_id, bot_id}:
        raise CochainError("target is not the suspension of the cochain's complex")
    k = c.degree + 1
    top = susp.index_of_id(top_id)
    rows = susp.simplices(k)
    vals = np.zeros((len(rows),) + c.batch_shape, dtype=np.int64)
    upper = np.flatnonzero(rows[:, -1] == top) if k >= 1 else np.zeros(0, dtype=np.int64)
    if len(upper):
        base_idx = base.ids_to_index(susp.vertex_ids[rows[upper, :-1]].reshape(-1)).reshape(len(upper), k)
        j = base.lookup(k - 1, np.sort(base_idx, axis=1), missing_ok=False)
        vals[upper] = c.values[j]
    return Cochain(susp, k, c.ring, vals, c.den)
