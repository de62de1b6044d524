"""Cochain triples (w, p, a), their product, inverses, relations and the
null-triple decision; the G^2 / G^3 mini-algebras and the suspension into
G^4; filtration quotients and extension invariants."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .cochain import (Cochain, CochainError, QZ, Z, Z2, coboundary, half, qz, special_lift)
from .complex import OrderedComplex
from .cup import cup, cup_i, sq, suspend_cochain
from .linalg import (GF2Eliminator, LinalgError, bits_to_array, coboundary_rows, gf2_nullspace_of_coboundary,
                     gf2_solve_coboundary, is_coboundary)
from .natural_ops import x_op, y4_formula, z_op

EIGHTH = Fraction(1, 8)
QUARTER = Fraction(1, 4)


def _q(c: Cochain, s) -> Cochain:
    return qz(c, Fraction(s))


def _zero_qz(cx: OrderedComplex, k: int) -> Cochain:
    return Cochain.zero(cx, k, QZ)


# triples ----------------------------------------------------------------------

@dataclass
class Triple:
    """(w, p, a): w a Q/Z 4-cochain, p a Z/2 3-cochain, a a Z/2 2-cocycle
    with dp = a^2."""
    w: Cochain
    p: Cochain
    a: Cochain

    def __post_init__(self):
        if (self.w.degree, self.p.degree, self.a.degree) != (4, 3, 2):
            raise CochainError("triple degrees must be (4, 3, 2)")
        if self.w.ring is not QZ or self.p.ring is not Z2 or self.a.ring is not Z2:
            raise CochainError("triple rings must be (Q/Z, Z/2, Z/2)")
        if not (self.w.complex is self.p.complex is self.a.complex):
            raise CochainError("triple coordinates live on different complexes")

    @property
    def complex(self) -> OrderedComplex:
        return self.a.complex

    @classmethod
    def zero(cls, cx: OrderedComplex) -> "Triple":
        return cls(_zero_qz(cx, 4), Cochain.zero(cx, 3, Z2), Cochain.zero(cx, 2, Z2))

    def in_c_hat(self) -> bool:
        return coboundary(self.a).is_zero() and coboundary(self.p) == cup(self.a, self.a)

    def require_c_hat(self) -> None:
        if not self.in_c_hat():
            raise CochainError("triple does not satisfy da = 0 and dp = a^2")

    def __eq__(self, other) -> bool:
        return isinstance(other, Triple) and self.w == other.w and self.p == other.p and self.a == other.a

    __hash__ = None

    def to_json(self) -> dict:
        return {"kind": "triple", "w": self.w.to_json(), "p": self.p.to_json(), "a": self.a.to_json()}

    @classmethod
    def from_json(cls, data: dict, cx: OrderedComplex) -> "Triple":
        if data.get("kind") != "triple":
            raise CochainError("not a triple record")
        return cls(Cochain.from_json(data["w"], cx), Cochain.from_json(data["p"], cx),
                   Cochain.from_json(data["a"], cx))


@dataclass
class RelationPair:
    """(c, r): c a Z/2 2-cochain, r a Z/2 1-cochain."""
    c: Cochain
    r: Cochain

    def __post_init__(self):
        if (self.c.degree, self.r.degree) != (2, 1) or self.c.ring is not Z2 or self.r.ring is not Z2:
            raise CochainError("relation pair must be Z/2 cochains of degrees (2, 1)")

    @classmethod
    def zero(cls, cx: OrderedComplex) -> "RelationPair":
        return cls(Cochain.zero(cx, 2, Z2), Cochain.zero(cx, 1, Z2))

    def to_json(self) -> dict:
        return {"kind": "relation", "c": self.c.to_json(), "r": self.r.to_json()}

    @classmethod
    def from_json(cls, data: dict, cx: OrderedComplex) -> "RelationPair":
        if data.get("kind") != "relation":
            raise CochainError("not a relation record")
        return cls(Cochain.from_json(data["c"], cx), Cochain.from_json(data["r"], cx))


def k_cochain(p: Cochain, a: Cochain) -> Cochain:
    """k(p, a) = (1/2)Sq^2 p + (1/4)A(A u_1 A) + (1/2)x(a), a Q/Z 5-cocycle."""
    A = special_lift(a)
    return half(sq(p, 2)) + _q(cup(A, cup_i(A, A, 1)), QUARTER) + half(x_op(a, check=False))


def basic_equation_D(t: Triple, check: bool = True) -> Cochain:
    """D(w, p, a) = dw - k(p, a)."""
    if check:
        t.require_c_hat()
    return coboundary(t.w) - k_cochain(t.p, t.a)


def in_kernel_D(t: Triple) -> bool:
    return t.in_c_hat() and basic_equation_D(t, check=False).is_zero()


def product_u(t1: Triple, t2: Triple, alternate: bool = False) -> Cochain:
    p, a, q, b = t1.p, t1.a, t2.p, t2.a
    A, B = special_lift(a), special_lift(b)
    a1b = cup_i(a, b, 1)
    u = (half(cup_i(p, q, 2)) + half(cup_i(cup(a, a), q, 3)) + half(cup_i(p + q, a1b, 2))
         + _q(cup(A, B), EIGHTH) - _q(cup_i(cup_i(A, A, 1), B, 1), QUARTER)
         - _q(cup(A + B, cup_i(A, B, 2)), QUARTER) + half(y4_formula(a, b, check=False)))
    if alternate:
        u = u + half(cup(a, b))
    return u


def triple_product(t1: Triple, t2: Triple, alternate: bool = False) -> Triple:
    """(w+v+u, p+q+a u_1 b, a+b)."""
    if t1.complex is not t2.complex:
        raise CochainError("triples live on different complexes")
    u = product_u(t1, t2, alternate)
    return Triple(t1.w + t2.w + u, t1.p + t2.p + cup_i(t1.a, t2.a, 1), t1.a + t2.a)


def triple_inverse(t: Triple) -> Triple:
    """(w', p + Sq^1 a, a) with w' = -w - (3/8)A^2 - (1/4)(A u_1 A) u_1 A + (1/2)Sq^1 a u_2 p."""
    A = special_lift(t.a)
    s1 = sq(t.a, 1)
    w = (-t.w - _q(cup(A, A), Fraction(3, 8)) - _q(cup_i(cup_i(A, A, 1), A, 1), QUARTER)
         + half(cup_i(s1, t.p, 2)))
    return Triple(w, t.p + s1, t.a)


def pontrjagin_square(a: Cochain) -> Cochain:
    """P(a) = A u A + A u_1 dA on the special lift (Z/4 valued, as Z)."""
    A = special_lift(a)
    return cup(A, A) + cup_i(A, coboundary(A), 1)


def alternate_iso(t: Triple) -> Triple:
    """(w, p, a) -> (w + (1/4)P(a), p, a), intertwining the two products."""
    return Triple(t.w + _q(pontrjagin_square(t.a), QUARTER), t.p, t.a)


# relations ----------------------------------------------------------------------

def d_prime(rel: RelationPair) -> Triple:
    """D'(c, r) = ((1/2)dc u_2 rdr + (1/2)Sq^2 c + (1/2)z(r) + (1/8)R d(Dr), dc + rdr, dr)."""
    c, r = rel.c, rel.r
    dc, dr = coboundary(c), coboundary(r)
    rdr = cup(r, dr)
    R, Dr = special_lift(r), special_lift(dr)
    w = (half(cup_i(dc, rdr, 2)) + half(sq(c, 2)) + half(z_op(r))
         + _q(cup(R, coboundary(Dr)), EIGHTH))
    return Triple(w, dc + rdr, dr)


def relation_product(r1: RelationPair, r2: RelationPair) -> RelationPair:
    """(c, r)(e, s) = (c + e + r u_1 ds + sr, r + s)."""
    c = r1.c + r2.c + cup_i(r1.r, coboundary(r2.r), 1) + cup(r2.r, r1.r)
    return RelationPair(c, r1.r + r2.r)


def first_relation(f: Cochain) -> Triple:
    cx = f.complex
    return Triple(coboundary(f), Cochain.zero(cx, 3, Z2), Cochain.zero(cx, 2, Z2))


def second_relation(c: Cochain) -> Triple:
    return Triple(half(sq(c, 2)), coboundary(c), Cochain.zero(c.complex, 2, Z2))


def third_relation(r: Cochain) -> Triple:
    dr = coboundary(r)
    R, Dr = special_lift(r), special_lift(dr)
    w = half(z_op(r)) + _q(cup(R, cup_i(Dr, Dr, 1)), QUARTER)
    return Triple(w, cup(r, dr), dr)


def factor_by_third_relation(t: Triple, r: Cochain) -> Triple:
    """t times D'(0, r): an equivalent triple with third coordinate a + dr."""
    return triple_product(t, d_prime(RelationPair(Cochain.zero(r.complex, 2, Z2), r)))


# null-triple decision -------------------------------------------------------------------

@dataclass
class NullWitness:
    c: Cochain
    r: Cochain
    f: Cochain


def _cocycle_reps(cx: OrderedComplex, k: int) -> List[np.ndarray]:
    """Cocycles whose classes form a basis of H^k(cx; Z/2).

    The non-pivot coordinates of an echelon basis of B^k span a complement W
    of B^k; since B^k lies in Z^k, the cocycles supported in W map
    isomorphically onto H^k, so only a kernel of dimension dim H^k is
    extracted."""
    from .linalg import gf2_kernel_bits
    if k < 0 or k > cx.dim:
        return []
    n = cx.count(k)
    el = GF2Eliminator(n)
    for row in _coboundary_span(cx, k):
        el.add_row(row)
    allowed = (1 << n) - 1
    for col in el.pivots:
        allowed &= ~(1 << col)
    return [bits_to_array(v, n) for v in gf2_kernel_bits(coboundary_rows(cx, k), n, allowed)]


class Undecided(Exception):
    """The coset search budget was exhausted."""


def _combos(reps: List[np.ndarray], n: int, budget: int):
    k = len(reps)
    if 2 ** k > budget:
        raise Undecided(f"coset space of size 2^{k} exceeds budget {budget}")
    for mask in range(2 ** k):
        v = np.zeros(n, dtype=np.int64)
        for j in range(k):
            if mask >> j & 1:
                v ^= reps[j]
        yield v


def is_null_triple(t: Triple, budget: int = 1 << 12, check: bool = True):
    """Decide t = D'(c, r) (df, 0, 0).  Returns (bool, NullWitness or None).

    Stages: r with dr = a, searched over r0 + H^1 coset representatives;
    c0 with dc0 = p + r dr; then a Q/Z decision on w - first(D'(c0, r))
    modulo coboundaries and the order-2 classes
    (1/2)(z^2 + c0 z + z c0 + z u_1 dc0) for z in an H^2 basis.  The first
    coordinate of D'(c0 + z, r) is affine in z modulo coboundaries, so
    the H^2 coset is searched by linear algebra rather than enumeration.
    Raises Undecided when the H^1 coset exceeds the budget."""
    from .linalg import coboundary_modulo
    cx = t.complex
    if check and not in_kernel_D(t):
        raise CochainError("triple is not in Kernel(D)")
    r0 = gf2_solve_coboundary(cx, t.a.values, 2)
    if r0 is None:
        return False, None
    h1 = _cocycle_reps(cx, 1)
    h2 = [Cochain(cx, 2, Z2, v) for v in _cocycle_reps(cx, 2)]
    for z1 in _combos(h1, cx.count(1), budget):
        r = Cochain(cx, 1, Z2, r0 ^ z1)
        dr = coboundary(r)
        c0v = gf2_solve_coboundary(cx, (t.p + cup(r, dr)).values, 3)
        if c0v is None:
            continue
        c0 = Cochain(cx, 2, Z2, c0v)
        dc0 = coboundary(c0)
        extras = [half(cup(z, z) + cup(c0, z) + cup(z, c0) + cup_i(z, dc0, 1)) for z in h2]
        resid = t.w - d_prime(RelationPair(c0, r)).w
        ok, sol = coboundary_modulo(resid, extras)
        if ok:
            f, lam = sol
            c = c0
            for l, z in zip(lam, h2):
                if l:
                    c = c + z
            rel = d_prime(RelationPair(c, r))
            f_final = t.w - rel.w
            ok2, f2 = is_coboundary(f_final, check_cocycle=False)
            if not ok2:
                raise LinalgError("null-triple witness failed to verify")
            return True, NullWitness(c, r, f2 if f2 is not None else _zero_qz(cx, 3))
    return False, None


def triples_equivalent(t1: Triple, t2: Triple, **kw) -> bool:
    """Equality in G^4: t1 t2^-1 is null."""
    return is_null_triple(triple_product(t1, triple_inverse(t2)), **kw)[0]


def commutator(t1: Triple, t2: Triple) -> Triple:
    return triple_product(triple_product(t1, t2), triple_product(triple_inverse(t1), triple_inverse(t2)))


# G^2 and G^3 ------------------------------------------------------------------------------

@dataclass
class G2Pair:
    """(p, a): p a Q/Z 2-cocycle, a a Z/2 1-cocycle."""
    p: Cochain
    a: Cochain

    def check(self) -> None:
        if not (coboundary(self.p).is_zero() and coboundary(self.a).is_zero()):
            raise CochainError("G^2 pair coordinates must be cocycles")


def g2_product(x: G2Pair, y: G2Pair) -> G2Pair:
    """(p + q + (1/2)ab, a + b)."""
    x.check()
    y.check()
    return G2Pair(x.p + y.p + half(cup(x.a, y.a)), x.a + y.a)


@dataclass
class G3Triple:
    """(w, p, a): w a Q/Z 3-cochain, p a Z/2 2-cocycle, a a Z/2 1-cocycle,
    with dw = (1/2)p^2."""
    w: Cochain
    p: Cochain
    a: Cochain

    @property
    def complex(self) -> OrderedComplex:
        return self.a.complex

    def satisfies_equation(self) -> bool:
        return (coboundary(self.a).is_zero() and coboundary(self.p).is_zero()
                and coboundary(self.w) == half(cup(self.p, self.p)))

    def check(self) -> None:
        if not self.satisfies_equation():
            raise CochainError("G^3 triple violates dp = 0, da = 0, dw = (1/2)p^2")


def g3_u(x: G3Triple, y: G3Triple) -> Cochain:
    p, a, q, b = x.p, x.a, y.p, y.a
    A, B = special_lift(a), special_lift(b)
    ab = cup(a, b)
    return (half(cup_i(p, q, 1)) + half(cup_i(p + q, ab, 1)) + half(cup(cup(a, cup_i(a, b, 1)), b))
            + _q(cup(cup(A, A), B), QUARTER))


def g3_product(x: G3Triple, y: G3Triple, check: bool = True) -> G3Triple:
    """(w + v + u, p + q + ab, a + b)."""
    if check:
        x.check()
        y.check()
    return G3Triple(x.w + y.w + g3_u(x, y), x.p + y.p + cup(x.a, y.a), x.a + y.a)


def g3_relation(f: Cochain, t: Cochain, x: Cochain) -> G3Triple:
    """(df + (1/2) t dt, dt, dx), a null G^3 triple."""
    dt = coboundary(t)
    return G3Triple(coboundary(f) + half(cup(t, dt)), dt, coboundary(x))


def suspend_triple(t: G3Triple, susp: OrderedComplex) -> Triple:
    """s(w, p, a) = (sw, sp, sa)."""
    return Triple(suspend_cochain(t.w, susp), suspend_cochain(t.p, susp), suspend_cochain(t.a, susp))


def suspend_pair(x: G2Pair, susp: OrderedComplex) -> G3Triple:
    """s(p, a) = (sp, sa, 0)."""
    return G3Triple(suspend_cochain(x.p, susp), suspend_cochain(x.a, susp), Cochain.zero(susp, 1, Z2))


# filtration quotients and extension invariants --------------------------------------------

def _span_combos(reps: List[np.ndarray]):
    for mask in range(2 ** len(reps)):
        v = np.zeros(len(reps[0]) if reps else 0, dtype=np.int64)
        for j in range(len(reps)):
            if mask >> j & 1:
                v ^= reps[j]
        yield mask, v


def _gf2_rank_vectors(vecs: List[np.ndarray], modulo_rows: List[int]) -> int:
    """Rank of the classes of ``vecs`` modulo the span of ``modulo_rows``."""
    from .linalg import array_to_bits
    el = GF2Eliminator()
    for r in modulo_rows:
        el.add_row(r)
    base = el.rank
    for v in vecs:
        el.add_row(array_to_bits(v))
    return el.rank - base


def _coboundary_span(cx: OrderedComplex, k: int) -> List[int]:
    """GF(2) rows spanning B^k (images of the basis (k-1)-cochains)."""
    if k < 1:
        return []
    bf = cx.boundary_faces(k)
    n = cx.count(k - 1)
    cols: List[int] = [0] * n
    for i, r in enumerate(bf.tolist()):
        for f in r:
            cols[f] ^= 1 << i
    return cols


@dataclass
class FiltrationReport:
    ssh2_dim: int
    sh3_dim: int
    qh4_order: int  # 0 encodes an infinite group
    ssh2_basis: List[np.ndarray]
    sh3_basis: List[np.ndarray]
    undecided: bool = False

    def to_json(self) -> dict:
        return {"ssh2_dim": self.ssh2_dim, "sh3_dim": self.sh3_dim, "qh4_order": self.qh4_order,
                "undecided": self.undecided}


def secondary_test(a: Cochain, h3: Optional[List[np.ndarray]] = None) -> Tuple[bool, Optional[Triple]]:
    """Whether some triple (w, p, a) lies in Kernel(D): a^2 must be a
    coboundary dp0 and then k(p0 + z, a) a Q/Z coboundary for some z in
    the H^3 coset.  Returns (passes, triple)."""
    cx = a.complex
    aa = cup(a, a)
    p0 = gf2_solve_coboundary(cx, aa.values, 4) if cx.dim >= 4 else np.zeros(cx.count(3), dtype=np.int64)
    if p0 is None:
        return False, None
    if h3 is None:
        h3 = _cocycle_reps(cx, 3)
    for _, z in _span_combos(h3) if h3 else [(0, np.zeros(cx.count(3), dtype=np.int64))]:
        p = Cochain(cx, 3, Z2, p0 ^ z)
        k = k_cochain(p, a)
        if k.is_zero():
            return True, Triple(_zero_qz(cx, 4), p, a)
        ok, w = is_coboundary(k, check_cocycle=False)
        if ok:
            return True, Triple(w, p, a)
    return False, None


def filtration_quotients(cx: OrderedComplex) -> FiltrationReport:
    """SSH^2: classes of H^2(Z/2) admitting a triple in Kernel(D).
    SH^3: classes p of H^3(Z/2) with (1/2)Sq^2 p a Q/Z coboundary.
    QH^4: H^4(Q/Z) modulo the image of (1/2)Sq^2 on H^2(Z/2).

    All three are computed on the given complex; only the 5-skeleton matters."""
    h2 = _cocycle_reps(cx, 2)
    h3 = _cocycle_reps(cx, 3)
    # SSH^2 is a subgroup of H^2: test every class, collect a basis
    passing = []
    for mask, v in _span_combos(h2):
        if mask == 0:
            continue
        ok, _ = secondary_test(Cochain(cx, 2, Z2, v), h3)
        if ok:
            passing.append(v)
    b2 = _coboundary_span(cx, 2)
    ssh2_dim = _gf2_rank_vectors(passing, b2) if passing else 0
    ssh2_basis = _independent(passing, b2)
    # SH^3
    sh3 = []
    for mask, v in _span_combos(h3):
        if mask == 0:
            continue
        p = Cochain(cx, 3, Z2, v)
        k = half(sq(p, 2))
        if k.is_zero() or is_coboundary(k, check_cocycle=False)[0]:
            sh3.append(v)
    b3 = _coboundary_span(cx, 3)
    sh3_dim = _gf2_rank_vectors(sh3, b3) if sh3 else 0
    # QH^4 = H^4(Q/Z) / {(1/2)Sq^2 classes of H^2(Z/2)}
    qh4 = _qh4_order(cx, h2)
    return FiltrationReport(ssh2_dim, sh3_dim, qh4, ssh2_basis, _independent(sh3, b3))


def _independent(vecs: List[np.ndarray], modulo_rows: List[int]) -> List[np.ndarray]:
    from .linalg import array_to_bits
    el = GF2Eliminator()
    for r in modulo_rows:
        el.add_row(r)
    out = []
    for v in vecs:
        b = array_to_bits(v)
        if not el.in_span(b):
            el.add_row(b)
            out.append(v)
    return out


def _qh4_order(cx: OrderedComplex, h2: List[np.ndarray]) -> int:
    """|H^4(Q/Z) / <(1/2)Sq^2 ā>| for a finite H^4 (torsion H_4(Z) only).

    H^4(X; Q/Z) = Hom(H_4(X; Z), Q/Z); when H_4 is finite its order is the
    product of the torsion coefficients.  The subgroup generated by the
    classes (1/2)Sq^2 ā = (1/2)ā^2 has order 2^(rank of the nonzero ones
    modulo Q/Z coboundaries)."""
    from .linalg import integral_homology
    h4 = integral_homology(cx, 4)
    if h4.betti:
        return 0  # H^4(Q/Z) contains a circle: infinite
    order = 1
    for t in h4.torsion:
        order *= t
    # the image of ā -> (1/2)ā^2 is an elementary 2-group; find its rank
    imgs = []
    for mask, v in _span_combos(h2):
        if mask == 0:
            continue
        a = Cochain(cx, 2, Z2, v)
        c = half(cup(a, a))
        if not (c.is_zero() or is_coboundary(c, check_cocycle=False)[0]):
            imgs.append(c)
    rank = _qz_rank(imgs)
    return order // (2 ** rank)


def _qz_rank(cs: List[Cochain]) -> int:
    """Rank over Z/2 of the span of order-2 Q/Z cohomology classes."""
    basis: List[Cochain] = []
    for c in cs:
        independent = True
        for mask in range(1, 2 ** len(basis)):
            s = c
            for j in range(len(basis)):
                if mask >> j & 1:
                    s = s + basis[j]
            if s.is_zero() or is_coboundary(s, check_cocycle=False)[0]:
                independent = False
                break
        if independent and not (c.is_zero() or is_coboundary(c, check_cocycle=False)[0]):
            basis.append(c)
    return len(basis)


@dataclass
class ExtensionReport:
    e2_matrix: np.ndarray  # rows: SSH^2 basis, columns: coordinates in SH^3 basis
    e2_rank: int
    e1_values: List[bool]  # Sq^2 p nonzero in H^5(Z/2) image, per H^3 basis class
    e3_squares: List[Triple]

    def to_json(self) -> dict:
        return {"e2_matrix": self.e2_matrix.tolist(), "e2_rank": self.e2_rank,
                "e1_nonzero": self.e1_values}


def extension_invariants(cx: OrderedComplex, report: Optional[FiltrationReport] = None) -> ExtensionReport:
    """(II) e(ā) = Sq^1 ā expressed in an SH^3 basis, with its GF(2) rank
    (the number of Z/4 summands); (I) Sq^2 p̄ for the H^3 basis; (III) the
    square (2w - (1/8)(A^2 + 2A u_1(A u_1 A)), Sq^1 a, 0) of basis lifts."""
    from .linalg import array_to_bits
    rep = report or filtration_quotients(cx)
    b3 = _coboundary_span(cx, 3)
    # coordinates of Sq^1 a in the SH^3 basis modulo coboundaries
    el = GF2Eliminator()
    for r in b3:
        el.add_row(r)
    sh3 = rep.sh3_basis
    mat = np.zeros((len(rep.ssh2_basis), len(sh3)), dtype=np.int64)
    for i, v in enumerate(rep.ssh2_basis):
        s1 = sq(Cochain(cx, 2, Z2, v), 1).values
        target = array_to_bits(s1)
        found = False
        for mask, comb in _span_combos(sh3):
            if el.in_span(target ^ array_to_bits(comb)):
                mat[i] = [(mask >> j) & 1 for j in range(len(sh3))]
                found = True
                break
        if not found:
            raise CochainError("Sq^1 of an SSH^2 class is not in SH^3")
    rank = _gf2_rank_vectors([row for row in mat], []) if len(mat) else 0
    e1 = []
    b5 = _coboundary_span(cx, 5)
    for v in _cocycle_reps(cx, 3):
        s2 = sq(Cochain(cx, 3, Z2, v), 2).values if cx.dim >= 5 else np.zeros(0, dtype=np.int64)
        e1.append(bool(s2.size) and not _in_span_rows(s2, b5))
    squares = []
    for v in rep.ssh2_basis:
        ok, t = secondary_test(Cochain(cx, 2, Z2, v))
        if ok:
            squares.append(lift_square(t))
    return ExtensionReport(mat, rank, e1, squares)


def _in_span_rows(v: np.ndarray, rows: List[int]) -> bool:
    from .linalg import array_to_bits
    el = GF2Eliminator()
    for r in rows:
        el.add_row(r)
    return el.in_span(array_to_bits(v))


def lift_square(t: Triple) -> Triple:
    """(w, p, a)^2 up to equivalence: (2w - (1/8)(A^2 + 2A u_1(A u_1 A)), Sq^1 a, 0)."""
    A = special_lift(t.a)
    corr = cup(A, A) + 2 * cup_i(A, cup_i(A, A, 1), 1)
    return Triple(2 * t.w - _q(corr, EIGHTH), sq(t.a, 1), Cochain.zero(t.complex, 2, Z2))
