"""Exact linear algebra over GF(2), Z/m and Z for coboundary and cohomology
decisions.

GF(2) rows are Python ints used as bitsets (bit j = column j), eliminated
incrementally with the lowest set bit as pivot.  Z/m and Z systems are
diagonalized by unimodular row and column operations (Smith-style), which
also yields integer Smith normal forms for homology.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cochain import Cochain, CochainError, QZ, Ring, Z, Z2, coboundary
from .complex import OrderedComplex


class LinalgError(RuntimeError):
    """Internal failure (a returned solution did not verify)."""


# GF(2) --------------------------------------------------------------------------

class GF2Eliminator:
    """Incremental GF(2) elimination.  ``add_row`` returns False when the new
    row reduces to 0 = 1 (the system became infeasible)."""

    def __init__(self, ncols: int = 0):
        self.ncols = ncols
        self.pivots: Dict[int, Tuple[int, int]] = {}
        self.inconsistent: Optional[Tuple[int, int]] = None

    def reduce(self, row: int, rhs: int = 0) -> Tuple[int, int]:
        pivots = self.pivots
        while row:
            col = (row & -row).bit_length() - 1
            hit = pivots.get(col)
            if hit is None:
                break
            row ^= hit[0]
            rhs ^= hit[1]
        return row, rhs

    def _reduce_full(self, row: int, rhs: int) -> Tuple[int, int]:
        # reduce past non-pivot low bits too, so the remainder is canonical
        out = 0
        pivots = self.pivots
        while row:
            low = row & -row
            col = low.bit_length() - 1
            hit = pivots.get(col)
            if hit is None:
                out |= low
                row ^= low
            else:
                row ^= hit[0]
                rhs ^= hit[1]
        return out, rhs

    def add_row(self, row: int, rhs: bool | int = 0, tag=None) -> bool:
        row, rhs = self.reduce(int(row), int(bool(rhs)))
        if row == 0:
            if rhs:
                if self.inconsistent is None:
                    self.inconsistent = (0, 1)
                return False
            return True
        col = (row & -row).bit_length() - 1
        self.pivots[col] = (row, rhs)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def feasible(self) -> bool:
        return self.inconsistent is None

    def in_span(self, row: int) -> bool:
        return self._reduce_full(int(row), 0)[0] == 0

    def solution(self) -> int:
        """A solution bitset (free columns set to 0)."""
        if self.inconsistent is not None:
            raise LinalgError("system is infeasible")
        x = 0
        for col in sorted(self.pivots, reverse=True):
            row, rhs = self.pivots[col]
            rest = row & ~(1 << col)
            if (bin(rest & x).count("1") + rhs) & 1:
                x |= 1 << col
        return x


def bits_from_indices(idx: Iterable[int]) -> int:
    out = 0
    for i in idx:
        out ^= 1 << int(i)
    return out


def bits_to_array(x: int, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    b = x.to_bytes((n + 7) // 8, "little")
    arr = np.unpackbits(np.frombuffer(b, dtype=np.uint8), bitorder="little")[:n]
    return arr.astype(np.int64)


def array_to_bits(a: np.ndarray) -> int:
    a = np.asarray(a, dtype=np.uint8) & 1
    if a.size == 0:
        return 0
    return int.from_bytes(np.packbits(a, bitorder="little").tobytes(), "little")


def gf2_rank_rows(rows: Sequence[int]) -> int:
    el = GF2Eliminator()
    for r in rows:
        el.add_row(r)
    return el.rank


def coboundary_rows(cx: OrderedComplex, k: int) -> List[int]:
    """Rows of d: C^k -> C^(k+1) over GF(2): row per (k+1)-simplex, bits over
    its k-faces."""
    n = k + 1
    if n > cx.dim or n < 1:
        return []
    bf = cx.boundary_faces(n)
    return [bits_from_indices(r) for r in bf.tolist()]


def gf2_solve_coboundary(cx: OrderedComplex, target: np.ndarray, k: int) -> Optional[np.ndarray]:
    """Solve dh = target over GF(2) with h a (k-1)-cochain; target values on
    k-simplices.  Returns h or None."""
    el = GF2Eliminator(cx.count(k - 1))
    if k == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(target % 2) else None
    bf = cx.boundary_faces(k)
    for r, t in zip(bf.tolist(), (np.asarray(target) % 2).tolist()):
        if not el.add_row(bits_from_indices(r), t):
            return None
    h = bits_to_array(el.solution(), cx.count(k - 1))
    return h


def gf2_nullspace_of_coboundary(cx: OrderedComplex, k: int) -> np.ndarray:
    """Basis (columns) of the kernel of d: C^k -> C^(k+1) over GF(2)."""
    n = cx.count(k)
    rows = coboundary_rows(cx, k)
    return gf2_nullspace(rows, n)


def gf2_nullspace(rows: Sequence[int], n: int) -> np.ndarray:
    """Basis (columns) of {x : row . x = 0 for every row} over GF(2)."""
    vecs = gf2_kernel_bits(rows, n)
    basis = np.zeros((n, len(vecs)), dtype=np.int64)
    for j, v in enumerate(vecs):
        basis[:, j] = bits_to_array(v, n)
    return basis


def gf2_kernel_bits(rows: Sequence[int], n: int, allowed: Optional[int] = None) -> List[int]:
    """Kernel basis as bitsets, one per free column.  With ``allowed`` (a
    column mask) the unknowns outside the mask are fixed to zero.

    Each kernel vector is found by back substitution: the pivot of a row is
    its lowest bit, so processing pivots in decreasing column order fixes
    every pivot variable from the higher ones."""
    el = GF2Eliminator(n)
    for r in rows:
        el.add_row(r if allowed is None else r & allowed)
    pivots = el.pivots
    order = sorted(pivots, reverse=True)
    mask = (1 << n) - 1 if allowed is None else allowed
    out = []
    for f in range(n):
        if f in pivots or not (mask >> f) & 1:
            continue
        x = 1 << f
        for col in order:
            if col >= f:
                continue
            if bin(pivots[col][0] & x).count("1") & 1:
                x |= 1 << col
        out.append(x)
    return out


# Z/m and Z: diagonalization ----------------------------------------------------------

def _val2(x: int) -> int:
    return (x & -x).bit_length() - 1 if x else 1 << 30


@dataclass
class DiagonalForm:
    """U A V = D with D diagonal (entries ``diag``); ``rowops`` replays U on a
    right-hand side, ``V`` maps diagonal coordinates back to unknowns."""
    diag: List[int]
    perm_rows: List[int] = field(default_factory=list)
    V: Optional[np.ndarray] = None
    U: Optional[np.ndarray] = None


def _inv_mod(u: int, m: int) -> int:
    return pow(int(u), -1, m)


def solve_mod(A: np.ndarray, b: np.ndarray, m: int) -> Optional[np.ndarray]:
    """Solve A x = b over Z/m (m a power of two, or any m for small systems).

    Dense elimination: at each step the pivot is an entry of minimal 2-adic
    valuation (for m = 2^s every entry is a multiple of it), then row and
    column operations clear its row and column.  Returns x or None."""
    A = np.array(A, dtype=object if m >= 2 ** 31 else np.int64) % m
    b = np.array(b, dtype=A.dtype).reshape(-1) % m
    rows, cols = A.shape
    if m & (m - 1):
        return _solve_mod_general(A, b, m)
    V = np.eye(cols, dtype=A.dtype)
    r = 0
    diag = []
    while r < min(rows, cols):
        sub = A[r:, r:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            break
        vals = sub[nz[:, 0], nz[:, 1]]
        v = np.array([_val2(int(x)) for x in vals])
        j = int(np.argmin(v))
        pi, pj = nz[j] + r
        if pi != r:
            A[[r, pi]] = A[[pi, r]]
            b[[r, pi]] = b[[pi, r]]
        if pj != r:
            A[:, [r, pj]] = A[:, [pj, r]]
            V[:, [r, pj]] = V[:, [pj, r]]
        piv = int(A[r, r])
        e = _val2(piv)
        u = piv >> e
        uinv = _inv_mod(u, m)
        A[r] = (A[r] * uinv) % m
        b[r] = (b[r] * uinv) % m
        pe = 1 << e
        # clear column r below/above
        col = A[:, r].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if len(nzr):
            f = (col[nzr] // pe) % m
            A[nzr] = (A[nzr] - np.outer(f, A[r])) % m
            b[nzr] = (b[nzr] - f * b[r]) % m
        # clear row r to the right (column operations, tracked in V)
        rowv = A[r].copy()
        rowv[r] = 0
        nzc = np.flatnonzero(rowv)
        if len(nzc):
            f = (rowv[nzc] // pe) % m
            A[:, nzc] = (A[:, nzc] - np.outer(A[:, r], f)) % m
            V[:, nzc] = (V[:, nzc] - np.outer(V[:, r], f)) % m
        diag.append(pe)
        r += 1
    y = np.zeros(cols, dtype=A.dtype)
    for i, pe in enumerate(diag):
        if int(b[i]) % pe:
            return None
        y[i] = (int(b[i]) // pe) % m
    if np.any(b[len(diag):] % m):
        return None
    return (V @ y) % m


# Z/2^t: sparse rows as bit planes ---------------------------------------------------

def _planes_add(a: List[int], b: List[int]) -> List[int]:
    """Entrywise a + b mod 2^t with both vectors stored as t bit planes."""
    out = []
    carry = 0
    for x, y in zip(a, b):
        s = x ^ y
        out.append(s ^ carry)
        carry = (x & y) | (carry & s)
    return out


def _planes_neg(a: List[int]) -> List[int]:
    supp = 0
    for x in a:
        supp |= x
    if not supp:
        return list(a)
    inv = [x ^ supp for x in a]
    one = [supp] + [0] * (len(a) - 1)
    return _planes_add(inv, one)


def _planes_scale(a: List[int], s: int) -> List[int]:
    t = len(a)
    s %= 1 << t
    out = [0] * t
    j = 0
    while s:
        if s & 1:
            out = _planes_add(out, [0] * j + a[:t - j])
        s >>= 1
        j += 1
    return out


def _planes_entry(a: List[int], col: int) -> int:
    v = 0
    for i, x in enumerate(a):
        v |= ((x >> col) & 1) << i
    return v


def _planes_dot(a: List[int], x: List[int]) -> int:
    t = len(a)
    v = 0
    for i in range(t):
        if not a[i]:
            continue
        for j in range(t - i):
            if x[j]:
                v += (a[i] & x[j]).bit_count() << (i + j)
    return v % (1 << t)


class Z2tEliminator:
    """Incremental sparse elimination over Z/2^t with odd (unit) pivots.

    Rows are t bit planes (Python ints); a pivot row is normalized to 1 at
    its pivot column and contains no earlier pivot column, so reduction by
    any present pivot terminates.  Rows left with only even entries are set
    aside and solved densely at the end; for coboundary matrices they come
    from 2-torsion and are few."""

    def __init__(self, ncols: int, t: int):
        self.ncols = ncols
        self.t = t
        self.mod = 1 << t
        self.pivots: Dict[int, Tuple[List[int], List[int], int]] = {}
        self.order: List[int] = []
        self.mask = 0
        self.even: List[Tuple[List[int], int]] = []
        self.infeasible = False

    def row_from(self, cols: Sequence[int], vals: Sequence[int]) -> List[int]:
        planes = [0] * self.t
        for c, v in zip(cols, vals):
            v %= self.mod
            for i in range(self.t):
                if v >> i & 1:
                    planes[i] |= 1 << int(c)
        return planes

    def _reduce(self, row: List[int], rhs: int):
        while True:
            supp = 0
            for x in row:
                supp |= x
            cand = supp & self.mask
            if not cand:
                return row, rhs, supp
            col = (cand & -cand).bit_length() - 1
            piv, neg, prhs = self.pivots[col]
            s = _planes_entry(row, col)
            if s == 1:
                row = _planes_add(row, neg)
            elif s == self.mod - 1:
                row = _planes_add(row, piv)
            else:
                row = _planes_add(row, _planes_scale(neg, s))
            rhs = (rhs - s * prhs) % self.mod

    def add_row(self, row: List[int], rhs: int) -> bool:
        row, rhs, supp = self._reduce(row, rhs % self.mod)
        if not supp:
            if rhs:
                self.infeasible = True
            return not self.infeasible
        odd = row[0]
        if not odd:
            self.even.append((row, rhs))
            return True
        col = (odd & -odd).bit_length() - 1
        u = _planes_entry(row, col)
        if u != 1:
            inv = pow(u, -1, self.mod)
            row = _planes_scale(row, inv)
            rhs = rhs * inv % self.mod
        self.pivots[col] = (row, _planes_neg(row), rhs)
        self.order.append(col)
        self.mask |= 1 << col
        return True

    def solution(self) -> Optional[np.ndarray]:
        if self.infeasible:
            return None
        # leftover even rows, reduced by every pivot, live on free columns
        rest = []
        for row, rhs in self.even:
            row, rhs, supp = self._reduce(row, rhs)
            if not supp:
                if rhs:
                    return None
                continue
            rest.append((row, rhs))
        x = [0] * self.t
        if rest:
            cols = sorted({c for row, _ in rest for c in _bit_indices(_or_all(row))})
            A = np.array([[_planes_entry(row, c) for c in cols] for row, _ in rest], dtype=np.int64)
            b = np.array([rhs for _, rhs in rest], dtype=np.int64)
            y = solve_mod(A, b, self.mod)
            if y is None:
                return None
            for c, v in zip(cols, np.asarray(y).tolist()):
                for i in range(self.t):
                    if int(v) >> i & 1:
                        x[i] |= 1 << c
        for col in reversed(self.order):
            row, _, rhs = self.pivots[col]
            # the pivot entry is 1 and x[col] is still 0
            v = (rhs - _planes_dot(row, x)) % self.mod
            for i in range(self.t):
                if v >> i & 1:
                    x[i] |= 1 << col
        out = np.zeros(self.ncols, dtype=np.int64)
        for i in range(self.t):
            out += bits_to_array(x[i], self.ncols) << i
        return out


def _or_all(planes: List[int]) -> int:
    s = 0
    for x in planes:
        s |= x
    return s


def _bit_indices(x: int) -> List[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def solve_coboundary_mod(cx: OrderedComplex, k: int, rhs: np.ndarray, m: int,
                         extra_cols: Optional[np.ndarray] = None) -> Optional[np.ndarray]:
    """Solve d f (+ extra columns) = rhs over Z/m, f a (k-1)-cochain.  Small
    systems go to the dense solver; m = 2^t uses the sparse bit-plane
    eliminator."""
    n_rows, n_cols = cx.count(k), cx.count(k - 1)
    n_extra = 0 if extra_cols is None else extra_cols.shape[1]
    if m & (m - 1) or n_rows * (n_cols + n_extra) <= DENSE_LIMIT:
        A = _dense_coboundary(cx, k)
        if n_extra:
            A = np.hstack([A, extra_cols])
        return solve_mod(A, rhs, m)
    t = m.bit_length() - 1
    el = Z2tEliminator(n_cols + n_extra, t)
    bf = cx.boundary_faces(k)
    signs = np.array([1 if j % 2 == 0 else -1 for j in range(k + 1)], dtype=np.int64)
    ext = None
    if n_extra:
        ext = [np.flatnonzero(extra_cols[i]) for i in range(n_rows)]
    rhs = np.asarray(rhs, dtype=np.int64) % m
    for i in range(n_rows):
        cols, vals = bf[i].tolist(), signs.tolist()
        if ext is not None and len(ext[i]):
            cols = cols + (n_cols + ext[i]).tolist()
            vals = vals + extra_cols[i, ext[i]].tolist()
        if not el.add_row(el.row_from(cols, vals), int(rhs[i])):
            return None
    return el.solution()


DENSE_LIMIT = 1 << 20


def _solve_mod_general(A: np.ndarray, b: np.ndarray, m: int) -> Optional[np.ndarray]:
    """A x = b mod m via integer Smith form of [A | m I]."""
    rows, cols = A.shape
    big = np.hstack([A.astype(object), np.eye(rows, dtype=object) * m])
    x = solve_integer(big, b.astype(object))
    if x is None:
        return None
    return np.array([int(v) % m for v in x[:cols]], dtype=np.int64)


def solve_integer(A: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Integer solution of A x = b (small dense systems, exact Python ints)."""
    A = np.array(A, dtype=object)
    b = np.array(b, dtype=object).reshape(-1)
    rows, cols = A.shape
    V = np.eye(cols, dtype=object)
    diag = []
    r = 0
    while r < min(rows, cols):
        sub = A[r:, r:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            break
        vals = np.array([abs(int(x)) for x in sub[nz[:, 0], nz[:, 1]]])
        j = int(np.argmin(vals))
        pi, pj = nz[j] + r
        A[[r, pi]] = A[[pi, r]]
        b[[r, pi]] = b[[pi, r]]
        A[:, [r, pj]] = A[:, [pj, r]]
        V[:, [r, pj]] = V[:, [pj, r]]
        while True:
            piv = A[r, r]
            done = True
            for i in range(rows):
                if i != r and A[i, r] != 0:
                    q = A[i, r] // piv
                    A[i] = A[i] - q * A[r]
                    b[i] = b[i] - q * b[r]
                    if A[i, r] != 0:
                        done = False
            for jj in range(cols):
                if jj != r and A[r, jj] != 0:
                    q = A[r, jj] // piv
                    A[:, jj] = A[:, jj] - q * A[:, r]
                    V[:, jj] = V[:, jj] - q * V[:, r]
                    if A[r, jj] != 0:
                        done = False
            if done:
                break
            sub = A[r:, r:]
            nz = np.argwhere(sub != 0)
            vals = np.array([abs(int(x)) for x in sub[nz[:, 0], nz[:, 1]]])
            j = int(np.argmin(vals))
            pi, pj = nz[j] + r
            A[[r, pi]] = A[[pi, r]]
            b[[r, pi]] = b[[pi, r]]
            A[:, [r, pj]] = A[:, [pj, r]]
            V[:, [r, pj]] = V[:, [pj, r]]
        diag.append(A[r, r])
        r += 1
    y = np.zeros(cols, dtype=object)
    for i, dv in enumerate(diag):
        if b[i] % dv:
            return None
        y[i] = b[i] // dv
    if any(int(v) != 0 for v in b[len(diag):]):
        return None
    return V.dot(y)


def smith_normal_form(A) -> List[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Unit pivots are eliminated first on sparse dict rows; the remaining core
    is diagonalized densely and the diagonal normalized by gcd/lcm swaps."""
    A = np.asarray(A)
    rows = [dict((int(j), int(A[i, j])) for j in np.flatnonzero(A[i])) for i in range(A.shape[0])]
    return smith_sparse(rows, A.shape[1])


def smith_sparse(rows: List[Dict[int, int]], ncols: int) -> List[int]:
    rows = [dict(r) for r in rows if r]
    units = 0
    # column -> set of rows containing it
    colmap: Dict[int, set] = {}
    for i, r in enumerate(rows):
        for j in r:
            colmap.setdefault(j, set()).add(i)
    alive = set(range(len(rows)))
    changed = True
    while changed:
        changed = False
        order = sorted(alive, key=lambda i: len(rows[i]))
        for i in order:
            if i not in alive:
                continue
            r = rows[i]
            if not r:
                alive.discard(i)
                continue
            piv = None
            best = None
            for j, v in r.items():
                if v in (1, -1):
                    cnt = len(colmap[j])
                    if best is None or cnt < best:
                        piv, best = j, cnt
            if piv is None:
                continue
            pv = r[piv]
            alive.discard(i)
            for j in r:
                colmap[j].discard(i)
            for k in list(colmap[piv]):
                rk = rows[k]
                f = rk[piv] * pv  # pv = +-1 so rk - f*pv*r clears piv
                for j, v in r.items():
                    nv = rk.get(j, 0) - f * v
                    if nv:
                        if j not in rk:
                            colmap[j].add(k)
                        rk[j] = nv
                    elif j in rk:
                        del rk[j]
                        colmap[j].discard(k)
                if not rk:
                    alive.discard(k)
            # column operations clear the rest of row i; it no longer matters
            units += 1
            changed = True
    core_rows = [rows[i] for i in sorted(alive) if rows[i]]
    diag = [1] * units
    if core_rows:
        cols = sorted({j for r in core_rows for j in r})
        cpos = {j: t for t, j in enumerate(cols)}
        M = np.zeros((len(core_rows), len(cols)), dtype=object)
        for t, r in enumerate(core_rows):
            for j, v in r.items():
                M[t, cpos[j]] = v
        diag += _dense_smith_diag(M)
    return _normalize_invariants(diag)


def _dense_smith_diag(M: np.ndarray) -> List[int]:
    A = M.copy()
    rows, cols = A.shape
    diag = []
    r = 0
    while r < min(rows, cols):
        nz = np.argwhere(A[r:, r:] != 0)
        if len(nz) == 0:
            break
        while True:
            nz = np.argwhere(A[r:, r:] != 0)
            vals = np.array([abs(int(x)) for x in A[r:, r:][nz[:, 0], nz[:, 1]]])
            j = int(np.argmin(vals))
            pi, pj = nz[j] + r
            A[[r, pi]] = A[[pi, r]]
            A[:, [r, pj]] = A[:, [pj, r]]
            piv = A[r, r]
            done = True
            for i in range(r + 1, rows):
                if A[i, r] != 0:
                    A[i] = A[i] - (A[i, r] // piv) * A[r]
                    done = done and A[i, r] == 0
            for jj in range(r + 1, cols):
                if A[r, jj] != 0:
                    A[:, jj] = A[:, jj] - (A[r, jj] // piv) * A[:, r]
                    done = done and A[r, jj] == 0
            if done:
                break
        diag.append(abs(int(A[r, r])))
        r += 1
    return diag


def _normalize_invariants(diag: List[int]) -> List[int]:
    d = [abs(int(x)) for x in diag if x]
    units = sum(1 for x in d if x == 1)
    d = [x for x in d if x != 1]
    # enforce divisibility: replace pairs by (gcd, lcm) until sorted chain
    changed = True
    while changed:
        changed = False
        d.sort()
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    d = [1] * units + sorted(d)
    for i in range(len(d) - 1):
        assert d[i + 1] % d[i] == 0
    return d


def boundary_sparse_rows(cx: OrderedComplex, k: int) -> List[Dict[int, int]]:
    """Signed boundary matrix C_k -> C_(k-1) as sparse rows indexed by
    k-simplices (the transpose of the coboundary d: C^(k-1) -> C^k)."""
    if k < 1 or k > cx.dim:
        return []
    bf = cx.boundary_faces(k)
    out = []
    for r in bf.tolist():
        row: Dict[int, int] = {}
        for j, f in enumerate(r):
            row[f] = row.get(f, 0) + (1 if j % 2 == 0 else -1)
        out.append({f: v for f, v in row.items() if v})
    return out


@dataclass
class HomologyGroup:
    betti: int
    torsion: List[int]

    def __str__(self) -> str:
        parts = ([f"Z^{self.betti}"] if self.betti else []) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


_SNF_CACHE: Dict[Tuple[int, int], List[int]] = {}


def boundary_invariants(cx: OrderedComplex, k: int) -> List[int]:
    key = (id(cx), k)
    got = _SNF_CACHE.get(key)
    if got is None or got[0] is not cx:
        got = (cx, smith_sparse(boundary_sparse_rows(cx, k), cx.count(k - 1)))
        _SNF_CACHE[key] = got
    return got[1]


def integral_homology(cx: OrderedComplex, k: int) -> HomologyGroup:
    """H_k(cx; Z) from Smith forms of the boundary maps."""
    rk_k = len(boundary_invariants(cx, k)) if k >= 1 else 0
    inv_next = boundary_invariants(cx, k + 1) if k + 1 <= cx.dim else []
    betti = cx.count(k) - rk_k - len(inv_next)
    return HomologyGroup(betti, [t for t in inv_next if t > 1])


def cohomology_rank(cx: OrderedComplex, degree: int, ring: Ring = Z2):
    """Rank of H^degree(cx; ring).  Over Z2 this is a dimension; over Z,
    Z/n and Q/Z a HomologyGroup-like summary (free rank plus torsion)."""
    if degree < 0 or degree > cx.dim:
        return 0 if ring is Z2 else HomologyGroup(0, [])
    if ring is Z2:
        r_out = gf2_rank_rows(coboundary_rows(cx, degree))
        r_in = gf2_rank_rows(coboundary_rows(cx, degree - 1)) if degree >= 1 else 0
        return cx.count(degree) - r_out - r_in
    hk = integral_homology(cx, degree)
    hk1 = integral_homology(cx, degree - 1) if degree >= 1 else HomologyGroup(0, [])
    if ring is Z:
        return HomologyGroup(hk.betti, list(hk1.torsion))
    if ring is QZ:
        # Hom(H_k, Q/Z): (Q/Z)^b plus the torsion of H_k
        return HomologyGroup(hk.betti, list(hk.torsion))
    n = ring.n
    tors = [gcd(t, n) for t in hk.torsion if gcd(t, n) > 1] + [gcd(t, n) for t in hk1.torsion if gcd(t, n) > 1]
    return HomologyGroup(0, [n] * hk.betti + tors)


def torsion_exponent(cx: OrderedComplex, k: int) -> int:
    """Exponent of the torsion subgroup of H_k(cx; Z)."""
    e = 1
    for t in integral_homology(cx, k).torsion:
        e = e * t // gcd(e, t)
    return e


# coboundary decisions --------------------------------------------------------------------

def _dense_coboundary(cx: OrderedComplex, k: int) -> np.ndarray:
    """Matrix of d: C^(k-1) -> C^k (rows k-simplices)."""
    A = np.zeros((cx.count(k), cx.count(k - 1)), dtype=np.int64)
    if k >= 1 and k <= cx.dim:
        bf = cx.boundary_faces(k)
        for j in range(k + 1):
            np.add.at(A, (np.arange(len(bf)), bf[:, j]), 1 if j % 2 == 0 else -1)
    return A


QZ_LADDER = (0, 3)


def _qz_moduli(cx: OrderedComplex, k: int, den: int):
    """Moduli M = den * 2^j for the ladder, then den * E with E the torsion
    exponent of H_(k-1)(X; Z).  A solution mod any multiple of den is a Q/Z
    witness; failure mod den * E is conclusive.  Yields (M, conclusive)."""
    tried = set()
    E = None
    for j in QZ_LADDER:
        M = den << j
        if E is None and j > 0:
            E = torsion_exponent(cx, k - 1)
        if E is not None and M % (den * E) == 0:
            yield M, True
            return
        if M not in tried:
            tried.add(M)
            yield M, False
    if E is None:
        E = torsion_exponent(cx, k - 1)
    if den * E not in tried:
        yield den * E, True


def is_coboundary(c: Cochain, check_cocycle: bool = True):
    """Decide whether c = d f over its ring.  Returns (bool, witness or None).

    Q/Z cochains with denominator D are decided over Z/(D * 2^j) for j on a
    short ladder and finally at j = e where 2^e (times the odd part) is the
    exponent of the torsion of H_(k-1)(X; Z); at that modulus solvability
    over Z/(D * E) is equivalent to solvability over Q/Z."""
    cx, k = c.complex, c.degree
    if c.batch_shape:
        raise CochainError("is_coboundary takes a single cochain")
    if check_cocycle and not coboundary(c).is_zero():
        raise CochainError("not a cocycle")
    if k == 0:
        return c.is_zero(), None
    if c.is_zero():
        return True, Cochain.zero(cx, k - 1, c.ring)
    if c.ring is Z2:
        h = gf2_solve_coboundary(cx, c.values, k)
        if h is None:
            return False, None
        w = Cochain(cx, k - 1, Z2, h)
        _verify(w, c)
        return True, w
    if c.ring is QZ:
        for M, _ in _qz_moduli(cx, k, c.den):
            f = solve_coboundary_mod(cx, k, c.values * (M // c.den), M)
            if f is not None:
                w = Cochain(cx, k - 1, QZ, np.asarray(f, dtype=np.int64), M)
                _verify(w, c)
                return True, w
        return False, None
    A = _dense_coboundary(cx, k)
    if c.ring is Z:
        f = solve_integer(A, c.values)
        if f is None:
            return False, None
        w = Cochain(cx, k - 1, Z, np.array([int(v) for v in f], dtype=np.int64))
        _verify(w, c)
        return True, w
    f = solve_mod(A, c.values, c.ring.n)
    if f is None:
        return False, None
    w = Cochain(cx, k - 1, c.ring, np.asarray(f, dtype=np.int64))
    _verify(w, c)
    return True, w


def coboundary_modulo(c: Cochain, extras: Sequence[Cochain]):
    """Decide c = df + sum_i l_i e_i with l_i in {0, 1}, for Q/Z cochains e_i
    of order 2 (values in {0, 1/2}).  Because 2 e_i = 0 the l_i enter as
    extra Z/M columns (M/2) e_i.  Returns (bool, (f, [l_i]) or None)."""
    cx, k = c.complex, c.degree
    if c.ring is not QZ or any(e.ring is not QZ or ((2 * e.values) % e.den != 0).any() for e in extras):
        raise CochainError("coboundary_modulo takes Q/Z cochains and order-2 extras")
    if not extras:
        ok, f = is_coboundary(c, check_cocycle=False)
        return ok, ((f if f is not None else Cochain.zero(cx, k - 1, QZ)), []) if ok else None
    X = np.stack([(2 * e.values) // e.den for e in extras], axis=1)  # 0/1 columns
    den = c.den * 2 // gcd(c.den, 2)
    n = cx.count(k - 1)
    for M, _ in _qz_moduli(cx, k, den):
        sol = solve_coboundary_mod(cx, k, c.values * (M // c.den), M, X * (M // 2))
        if sol is not None:
            sol = np.asarray(sol, dtype=np.int64)
            lam = [int(v) % 2 for v in sol[n:]]
            f = Cochain(cx, k - 1, QZ, sol[:n], M)
            rest = c
            for l, e in zip(lam, extras):
                if l:
                    rest = rest - e
            _verify(f, rest)
            return True, (f, lam)
    return False, None


def _verify(w: Cochain, c: Cochain) -> None:
    if not (coboundary(w) == c):
        raise LinalgError("solver returned a witness that does not verify")


# generic sparse systems ------------------------------------------------------------------------

@dataclass
class SparseSystem:
    """Rows of (column, value) pairs with a right-hand side over ``ring``
    (Z2, Z/2^t or Z)."""
    ring: Ring
    ncols: int
    rows: List[List[Tuple[int, int]]] = field(default_factory=list)
    rhs: List[int] = field(default_factory=list)

    def add_row(self, entries: Iterable[Tuple[int, int]], value: int) -> int:
        self.rows.append([(int(j), int(v)) for j, v in entries])
        self.rhs.append(int(value))
        return len(self.rows) - 1

    def dense(self) -> np.ndarray:
        A = np.zeros((len(self.rows), self.ncols), dtype=np.int64)
        for i, r in enumerate(self.rows):
            for j, v in r:
                A[i, j] += v
        return A

    def to_matrix_market(self) -> str:
        entries = [(i + 1, j + 1, v) for i, r in enumerate(self.rows) for j, v in r if v]
        lines = ["%%MatrixMarket matrix coordinate integer general",
                 f"% ring {self.ring.tag}",
                 f"{len(self.rows)} {self.ncols} {len(entries)}"]
        lines += [f"{i} {j} {v}" for i, j, v in entries]
        lines.append(f"% rhs {' '.join(str(v) for v in self.rhs)}")
        return "\n".join(lines) + "\n"


@dataclass
class Infeasible:
    reason: str = "inconsistent system"

    def __bool__(self) -> bool:
        return False


def solve(system: SparseSystem):
    """A solution vector, or an ``Infeasible`` certificate."""
    if system.ring is Z2:
        el = GF2Eliminator(system.ncols)
        for r, b in zip(system.rows, system.rhs):
            bits = 0
            for j, v in r:
                if v & 1:
                    bits ^= 1 << j
            if not el.add_row(bits, b & 1):
                return Infeasible("row reduces to 0 = 1")
        x = bits_to_array(el.solution(), system.ncols)
    elif system.ring is Z:
        x = solve_integer(system.dense(), np.array(system.rhs, dtype=object))
        if x is None:
            return Infeasible("no integer solution")
        x = np.array([int(v) for v in x], dtype=object)
    else:
        x = solve_mod(system.dense(), np.array(system.rhs), system.ring.n)
        if x is None:
            return Infeasible("no solution modulo %d" % system.ring.n)
    # residual check
    m = system.ring.n
    for r, b in zip(system.rows, system.rhs):
        s = sum(int(v) * int(x[j]) for j, v in r)
        if (s - b) % m if m else s != b:
            raise LinalgError("solution failed residual check")
    return x


# cochain extension across a prism -------------------------------------------------------------

def _sorted_with_positions(cols: np.ndarray):
    order = np.argsort(cols, axis=1, kind="stable")
    rows = np.take_along_axis(cols, order, axis=1)
    pos = np.argsort(order, axis=1)
    return rows, pos


def extend_cocycle(prism, end0: Cochain, end1: Cochain, degree: int, target: Optional[Cochain] = None):
    """Cochain x on the prism with x = end0 on the 0-end, x = end1 on the
    1-end and dx = target (default 0); an ``Infeasible`` result otherwise.

    The prism over a base simplex (v0..vm) has top simplices
    P_i = (v0^0..vi^0, vi^1..vm^1) and slanted m-simplices
    Q_i = (v0^0..vi^0, v(i+1)^1..vm^1), with Q_m on the 0-end and Q_(-1) on
    the 1-end.  The equation on P_i links Q_(i-1) and Q_i only (the other
    faces lie over smaller base simplices and are set to zero), so the Q's
    are solved from the 0-end upward.  The equation on P_0 then yields
    values f1 on the 1-end; f1 - end1 is a cocycle there and is removed by
    d of a cochain supported on the 1-end.  Equations on simplices over
    (m+1)-dimensional bases follow from the P equations because the target
    is a cocycle."""
    P, K, Kp = prism.complex, prism.bottom, prism.top
    ring = end0.ring
    m = degree
    if end0.complex is not K or end1.complex is not Kp or end0.degree != m or end1.degree != m:
        raise CochainError("end values must be degree-m cochains on the prism ends")
    if target is None:
        target = Cochain.zero(P, m + 1, ring)
    if not coboundary(target).is_zero():
        raise CochainError("target is not a cocycle")
    for e, incl in ((end0, prism.incl0), (end1, prism.incl1)):
        from .cochain import pullback
        if not (coboundary(e) == pullback(incl, target)):
            raise CochainError("end value does not satisfy the equation on its end")
    signed = ring is not Z2
    mod = ring.n

    x = np.zeros(P.count(m), dtype=np.int64)
    x[prism.incl0.image(m)] = end0.values
    t = target.values
    sig = K.simplices(m)
    b0 = prism.incl0.assignment[sig]
    top_pos = Kp.ids_to_index(K.vertex_ids)
    b1 = prism.incl1.assignment[top_pos[sig]]
    f1 = None
    for i in range(m, -1, -1):
        cols = np.hstack([b0[:, :i + 1], b1[:, i:]])
        rows, pos = _sorted_with_positions(cols)
        pidx = P.lookup(m + 1, rows, missing_ok=False)
        rhs = t[pidx].copy()
        face_rows = P.boundary_faces(m + 1)[pidx]  # column s = face without sorted position s
        drop = pos[:, i]  # position of v_i^0: removing it gives Q_(i-1)
        acc = np.zeros(len(sig), dtype=np.int64)
        for s in range(m + 2):
            f = face_rows[:, s]
            v = x[f]
            sg = 1 if (s % 2 == 0 or not signed) else -1
            acc += np.where(drop == s, 0, sg * v)
        unknown = face_rows[np.arange(len(sig)), drop]
        sgn = np.where(drop % 2 == 0, 1, -1) if signed else np.ones(len(sig), dtype=np.int64)
        val = sgn * (rhs - acc)
        if mod:
            val %= mod
        if i > 0:
            x[unknown] = val
        else:
            f1 = val  # value forced on the 1-end simplex Q_(-1)
            top_idx = unknown
    # mismatch on the 1-end
    end1_img = prism.incl1.image(m)
    mism_vals = np.zeros(Kp.count(m), dtype=np.int64)
    inv = np.empty(P.count(m), dtype=np.int64)
    inv[end1_img] = np.arange(Kp.count(m))
    mism_vals[inv[top_idx]] = f1
    mism_vals = mism_vals - end1.values
    mism = Cochain(Kp, m, ring, mism_vals)
    x[top_idx] = f1
    if not mism.is_zero():
        if m == 0:
            return Infeasible("end values lie in different components' classes")
        ok, h = is_coboundary(mism, check_cocycle=False)
        if not ok:
            return Infeasible("end classes differ")
        from .cochain import extend_by_zero
        dh = coboundary(extend_by_zero(h, prism.incl1))
        x = x - dh.values
    out = Cochain(P, m, ring, x)
    from .cochain import pullback
    if not (coboundary(out) == target and pullback(prism.incl0, out) == end0
            and pullback(prism.incl1, out) == end1):
        raise LinalgError("prism extension failed verification")
    return out
