"""Natural Z/2 cochain operations x_M, x, Delta x, delta x, y4, z_M, z and the
two derivation algorithms (cone contraction, GF(2) discovery of y4).

Each operation exists in two forms: a numeric one acting on ``Cochain``
objects over any complex, and a symbolic one acting on ``SymCochain``
objects over the universal simplex.  Identities are checked by comparing
the two routes, or by exact polynomial equality.
"""
from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .cochain import Cochain, CochainError, Z2, coboundary
from .cup import cup_i
from .symbolic import (FaceEvalFormula, Poly, SymCochain, VarTable, ONE, ZERO, padd, pmul, psubst, pvar,
                       sym_cocycle, sym_cup_i, sym_d, sym_free)
from ._y4_terms import Y4_TERMS

X_MEDINA = FaceEvalFormula.parse("a(012)a(235)a(023)a(345)", 5, "a")
X_FORMULA = FaceEvalFormula.parse(
    "a(012)a(235)a(023)a(345) + a(012)a(235)a(345) + a(012)a(245)a(234)", 5, "a")
# nine-term variant; it misses r(12)r(23)r(34), so dz_M differs
# from Delta_M by d(r(12)r(23)r(34)).  Z_MEDINA is the cone-derived primitive.
Z_MEDINA_NINE_TERM = FaceEvalFormula.parse(
    "r(01)r(01)r(12)r(34) + r(01)r(01)r(13)r(34) + r(01)r(12)r(23)r(24)"
    " + r(01)r(12)r(24)r(24) + r(01)r(12)r(24)r(34) + r(01)r(12)r(14)r(23)"
    " + r(01)r(12)r(14)r(24) + r(01)r(12)r(14)r(34) + r(02)r(23)r(23)r(34)", 4, "r")
Z_MEDINA = Z_MEDINA_NINE_TERM + FaceEvalFormula.parse("r(12)r(23)r(34)", 4, "r")
Y4_FORMULA = FaceEvalFormula.parse([t for g in Y4_TERMS.values() for t in g], 4, "ab")


class _NumOps:
    cup = staticmethod(cup_i)
    d = staticmethod(coboundary)


class _SymOps:
    cup = staticmethod(sym_cup_i)
    d = staticmethod(sym_d)


def _ops(c):
    return _SymOps if isinstance(c, SymCochain) else _NumOps


def _apply(formula: FaceEvalFormula, *args):
    if isinstance(args[0], SymCochain):
        return formula.sym_cochain(*args)
    return formula.evaluate(*args)


def _require_cocycle(*cs: Cochain) -> None:
    for c in cs:
        if isinstance(c, SymCochain):
            continue
        if c.ring is not Z2:
            raise CochainError("expected a Z/2 cochain")
        if not coboundary(c).is_zero():
            raise CochainError("argument is not a cocycle")


# the operations -------------------------------------------------------------

def x_medina(a, check: bool = True):
    """x_M(a)(012345) = a^2(01235) a^2(02345)."""
    if check:
        _require_cocycle(a)
    return _apply(X_MEDINA, a)


def x_op(a, check: bool = True):
    """x(a) = x_M(a) + a(a u_1 a)."""
    if check:
        _require_cocycle(a)
    return _apply(X_FORMULA, a)


def x_op_via_cup(a):
    """x(a) assembled from x_M and cup_i products (second route)."""
    c = _ops(a).cup
    return _apply(X_MEDINA, a) + c(a, c(a, a, 1), 0)


def delta_x_big(a, b):
    """Delta x(a, b) = x(a+b) - x(a) - x(b)."""
    return x_op(a + b, check=False) + x_op(a, check=False) + x_op(b, check=False)


def delta_x_small(a, b):
    """The cup_i expression delta x(a, b)."""
    ops = _ops(a)
    c = ops.cup
    a1a, b1b, a1b, a2b = c(a, a, 1), c(b, b, 1), c(a, b, 1), c(a, b, 2)
    aa, bb = c(a, a, 0), c(b, b, 0)
    s1, s0 = a1a + b1b, aa + bb
    terms = [
        c(a1a, b1b, 1), c(a1b, a1b, 1),
        c(s1, a2b, 0), c(a2b, s1, 0),
        c(s0, a1b, 2), c(a1b, s0, 2),
        c(a1b, ops.d(a1b), 2), c(a2b, ops.d(a2b), 0), c(aa, bb, 3),
    ]
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def delta_terms(a, b, check: bool = True):
    """(Delta x(a, b), delta x(a, b))."""
    if check:
        _require_cocycle(a, b)
    return delta_x_big(a, b), delta_x_small(a, b)


def y4_formula(a, b, check: bool = True):
    """The explicit 174-term y4(a, b)."""
    if check:
        _require_cocycle(a, b)
    return _apply(Y4_FORMULA, a, b)


def z_medina(r):
    return _apply(Z_MEDINA, r)


def z_op(r):
    """z(r) = z_M(r) + r(dr u_1 dr)."""
    ops = _ops(r)
    dr = ops.d(r)
    return _apply(Z_MEDINA, r) + ops.cup(r, ops.cup(dr, dr, 1), 0)


def sq_any(c, i: int):
    """Cochain Sq^i for numeric or symbolic Z/2 cochains."""
    ops = _ops(c)
    j = c.degree - i
    return ops.cup(c, c, j) + ops.cup(c, ops.d(c), j + 1)


def delta_medina(r):
    """Delta_M(r) = x_M(dr) + Sq^2(r dr) + Sq^1(r) Sq^1(dr), a natural 5-cocycle."""
    ops = _ops(r)
    dr = ops.d(r)
    return _apply(X_MEDINA, dr) + sq_any(ops.cup(r, dr, 0), 2) + ops.cup(sq_any(r, 1), sq_any(dr, 1), 0)


# universal-simplex machinery ---------------------------------------------------

def universal_args(n: int, kinds: Sequence[Tuple[str, int]], table: Optional[VarTable] = None):
    """Universal arguments on the n-simplex.  ``kinds`` lists ("cocycle"|"free",
    degree) per argument."""
    table = VarTable() if table is None else table
    args = []
    for a, (kind, deg) in enumerate(kinds):
        make = sym_cocycle if kind == "cocycle" else sym_free
        args.append(make(n, deg, a, table))
    return args, table


def formula_of(op: Callable, degree: int, kinds: Sequence[Tuple[str, int]],
               names: Optional[Sequence[str]] = None) -> FaceEvalFormula:
    """Face-evaluation formula of a natural operation, read off from its
    symbolic value on the universal ``degree``-simplex."""
    args, table = universal_args(degree, kinds)
    p = op(*args).top()
    return FaceEvalFormula.from_poly(p, table, degree, len(kinds), names)


def _param_count(n: int, kinds) -> int:
    _, table = universal_args(n, kinds)
    return len(table)


def _all_monomials(nvars: int, max_degree: Optional[int] = None) -> List[int]:
    out = []
    top = nvars if max_degree is None else min(max_degree, nvars)
    for k in range(top + 1):
        for comb in itertools.combinations(range(nvars), k):
            m = 0
            for v in comb:
                m |= 1 << v
            out.append(m)
    return out


def _coboundary_columns(n: int, kinds, monomials: Sequence[int]) -> List[Poly]:
    """For each monomial phi in the parameters of the universal (n-1)-simplex,
    the polynomial (d phi)(0..n) in the parameters of the n-simplex."""
    big, _ = universal_args(n, kinds)
    _, small_table = universal_args(n - 1, kinds)
    cols = []
    face_images = []
    for j in range(n + 1):
        verts = [v for v in range(n + 1) if v != j]
        face_images.append([big[a][tuple(verts[t] for t in f)] for a, f in small_table.labels])
    for m in monomials:
        acc = set()
        for imgs in face_images:
            acc ^= psubst(frozenset([m]), imgs)
        cols.append(frozenset(acc))
    return cols


def _solve_columns(cols: Sequence[Poly], rhs: Poly):
    """Solve sum x_c cols[c] = rhs over GF(2).  Returns a list of chosen
    column indices or None."""
    from .linalg import GF2Eliminator
    rows: Dict[int, int] = {}
    for c, p in enumerate(cols):
        for m in p:
            rows[m] = rows.get(m, 0) ^ (1 << c)
    el = GF2Eliminator(len(cols))
    rhs_set = set(rhs)
    for m in sorted(set(rows) | rhs_set):
        if not el.add_row(rows.get(m, 0), m in rhs_set):
            return None
    x = el.solution()
    return [c for c in range(len(cols)) if (x >> c) & 1]


def natural_coboundary_witness(target: Poly, n: int, kinds) -> Optional[FaceEvalFormula]:
    """A natural (n-1)-cochain phi with d(phi) = target on the universal
    n-simplex, or None.  ``target`` is a polynomial in the universal
    parameters of the n-simplex; phi may be any function of the face values
    on an (n-1)-simplex (normalization is not needed for the decision)."""
    nvars = _param_count(n - 1, kinds)
    monos = _all_monomials(nvars)
    cols = _coboundary_columns(n, kinds, monos)
    chosen = _solve_columns(cols, target)
    if chosen is None:
        return None
    _, small_table = universal_args(n - 1, kinds)
    p = frozenset(monos[c] for c in chosen)
    return FaceEvalFormula.from_poly(p, small_table, n - 1, len(kinds))


def is_natural_coboundary(target: Poly, n: int, kinds) -> bool:
    return natural_coboundary_witness(target, n, kinds) is not None


def formula_poly(formula: FaceEvalFormula, kinds, table: Optional[VarTable] = None) -> Poly:
    args, _ = universal_args(formula.degree, kinds, table)
    return formula.evaluate_sym(*args)


PAIR = (("cocycle", 2), ("cocycle", 2))
SINGLE = (("cocycle", 2),)


def diagonal_poly(p: Poly, n: int = 4) -> Poly:
    """Substitute b = a in a polynomial of the universal pair parameters."""
    _, table = universal_args(n, PAIR)
    single, _ = universal_args(n, SINGLE)
    imgs = [single[0][f] for a, f in table.labels]
    return psubst(p, imgs)


def restrict_poly(p: Poly, keep_arg: int, n: int = 4) -> Poly:
    """Set the other argument of a pair polynomial to zero; the kept argument
    becomes argument 0."""
    _, table = universal_args(n, PAIR)
    single, _ = universal_args(n, SINGLE)
    imgs = [single[0][f] if a == keep_arg else ZERO for a, f in table.labels]
    return psubst(p, imgs)


def _side_targets(y4_poly: Poly, flipped: bool) -> Dict[str, Poly]:
    """Cocycles that must be natural coboundaries for a valid y4."""
    single, _ = universal_args(4, SINGLE)
    a = single[0]
    extra = sym_cup_i(a, sym_cup_i(a, a, 1), 1).top()
    if not flipped:
        extra = padd(extra, sym_cup_i(a, a, 0).top())
    return {
        "y4(a,0)": restrict_poly(y4_poly, 0),
        "y4(0,b)": restrict_poly(y4_poly, 1),
        "y4(a,a)+a1(a1a)" + ("" if flipped else "+a2"): padd(diagonal_poly(y4_poly), extra),
    }


def check_side_conditions(formula: FaceEvalFormula = Y4_FORMULA, flipped: bool = False) -> Dict[str, bool]:
    poly = formula_poly(formula, PAIR)
    return {k: is_natural_coboundary(v, 4, SINGLE) for k, v in _side_targets(poly, flipped).items()}


def dy4_target_poly() -> Tuple[Poly, VarTable]:
    """(Delta x + delta x)(012345) on the universal pair of 2-cocycles."""
    args, table = universal_args(5, PAIR)
    a, b = args
    big = x_op(a + b, check=False) + x_op(a, check=False) + x_op(b, check=False)
    return (big + delta_x_small(a, b)).top(), table


def d_formula_poly(formula: FaceEvalFormula, kinds) -> Poly:
    """(d phi)(0..n+1) for a formula phi of degree n, on universal arguments."""
    args, _ = universal_args(formula.degree + 1, kinds)
    n1 = formula.degree + 1
    acc = set()
    for j in range(n1 + 1):
        on = tuple(v for v in range(n1 + 1) if v != j)
        acc ^= formula.evaluate_sym(*args, on=on)
    return frozenset(acc)


def discover_y4(side_conditions: bool | str = True, max_degree: int = 4) -> Optional[FaceEvalFormula]:
    """Find a normalized natural 4-cochain y4(a, b) with dy4 = Delta x + delta x.

    Unknowns are the coefficients of squarefree monomials of degree
    <= ``max_degree`` in the 12 pair parameters a(ij4), b(ij4), plus the
    coefficients of natural 3-cochains witnessing the side conditions.
    Equations are matched monomial by monomial (algebraic normal form), which
    is equivalent to imposing them on every cocycle pair.

    ``side_conditions``: True/"standard" (y4(a,a)+a1(a1a)+a^2 a coboundary),
    "flipped" (without a^2) or False (only the differential equation)."""
    from .linalg import GF2Eliminator
    _, t4 = universal_args(4, PAIR)
    monos = _all_monomials(len(t4), max_degree)
    big, t5 = universal_args(5, PAIR)
    rhs, _ = dy4_target_poly()

    # differential equation: column for each y4 monomial
    face_imgs = []
    for j in range(6):
        verts = [v for v in range(6) if v != j]
        face_imgs.append([big[a][tuple(verts[t] for t in f)] for a, f in t4.labels])
    d_cols = []
    for m in monos:
        acc = set()
        for imgs in face_imgs:
            acc ^= psubst(frozenset([m]), imgs)
        d_cols.append(frozenset(acc))

    equations: List[Tuple[Dict[int, int], Poly]] = []  # (column -> poly) blocks
    nY = len(monos)
    offset = nY
    blocks = [("d", {c: d_cols[c] for c in range(nY)}, rhs)]

    # normalization: y4 vanishes on degenerate 4-simplices
    small3, t3 = universal_args(3, PAIR)
    for i in range(4):
        verts = list(range(i + 1)) + list(range(i, 4))
        imgs = []
        for a, f in t4.labels:
            img = [verts[t] for t in f]
            imgs.append(ZERO if len(set(img)) < len(img) else small3[a][tuple(img)])
        blocks.append((f"s{i}", {c: psubst(frozenset([monos[c]]), imgs) for c in range(nY)}, ZERO))

    witness_info = []
    flipped = side_conditions == "flipped"
    if side_conditions:
        single4, s4t = universal_args(4, SINGLE)
        _, s3t = universal_args(3, SINGLE)
        phi_monos = _all_monomials(len(s3t))
        phi_cols = _coboundary_columns(4, SINGLE, phi_monos)
        a = single4[0]
        extra = sym_cup_i(a, sym_cup_i(a, a, 1), 1).top()
        if not flipped:
            extra = padd(extra, sym_cup_i(a, a, 0).top())
        # images of y4 monomials under the three substitutions
        _, tp = universal_args(4, PAIR)
        sub_a = [single4[0][f] if arg == 0 else ZERO for arg, f in tp.labels]
        sub_b = [single4[0][f] if arg == 1 else ZERO for arg, f in tp.labels]
        sub_d = [single4[0][f] for arg, f in tp.labels]
        for name, sub, rhs_side in (("y4(a,0)", sub_a, ZERO), ("y4(0,b)", sub_b, ZERO), ("diag", sub_d, extra)):
            cols = {c: psubst(frozenset([monos[c]]), sub) for c in range(nY)}
            for k, pc in enumerate(phi_cols):
                cols[offset + k] = pc
            witness_info.append((name, offset))
            offset += len(phi_monos)
            blocks.append((name, cols, rhs_side))

    el = GF2Eliminator(offset)
    for _, cols, rhs_p in blocks:
        rows: Dict[int, int] = {}
        for c, p in cols.items():
            for m in p:
                rows[m] = rows.get(m, 0) ^ (1 << c)
        rset = set(rhs_p)
        for m in sorted(set(rows) | rset):
            if not el.add_row(rows.get(m, 0), m in rset):
                return None
    x = el.solution()
    poly = frozenset(monos[c] for c in range(nY) if (x >> c) & 1)
    return FaceEvalFormula.from_poly(poly, t4, 4, 2, "ab")


def derive_via_cone(target: FaceEvalFormula, input_degree: int = 1) -> FaceEvalFormula:
    """Natural primitive of a natural cocycle of free ``input_degree``-cochains.

    The arguments are extended by zero over a cone whose apex is the last
    vertex; phi(s) is the target evaluated on the cone over s.  In face terms
    this keeps exactly the monomials that avoid the apex."""
    kinds = [("free", input_degree)] * target.arity
    if d_formula_poly(target, kinds):
        raise CochainError("target is not a natural cocycle")
    apex = target.degree
    kept = [mono for mono in target.terms if all(apex not in f for _, f in mono)]
    return FaceEvalFormula(target.degree - 1, target.arity, kept, target.names)
