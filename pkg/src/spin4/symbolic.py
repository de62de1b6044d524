"""GF(2) polynomial calculus for natural cochain operations.

A natural Z/2 operation evaluated on the standard simplex is a polynomial in
the values of its arguments on faces.  Polynomials are frozensets of
monomials and a monomial is an int bitmask over variables (squarefree, since
e^2 = e over GF(2)).  ``SymCochain`` holds one polynomial per face of the
universal simplex, so cup_i products and coboundaries can be computed
symbolically and compared exactly.
"""
from __future__ import annotations

import itertools
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cochain import Cochain, CochainError, Z2
from .cup import cup_terms

Poly = frozenset
ZERO: Poly = frozenset()
ONE: Poly = frozenset([0])


def padd(*ps: Poly) -> Poly:
    out = set()
    for p in ps:
        out ^= p
    return frozenset(out)


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = set()
    for m1 in p:
        for m2 in q:
            out ^= {m1 | m2}
    return frozenset(out)


def pvar(i: int) -> Poly:
    return frozenset([1 << i])


def psubst(p: Poly, images: Sequence[Poly]) -> Poly:
    """Substitute polynomial images[i] for variable i."""
    out: set = set()
    cache: Dict[int, Poly] = {}
    for m in p:
        if m not in cache:
            term = ONE
            v = 0
            mm = m
            while mm:
                if mm & 1:
                    term = pmul(term, images[v])
                mm >>= 1
                v += 1
            cache[m] = term
        out ^= cache[m]
    return frozenset(out)


def pdegree(p: Poly) -> int:
    return max((bin(m).count("1") for m in p), default=-1)


class VarTable:
    """Bijection between variable indices and (argument, face) labels."""

    def __init__(self):
        self.labels: List[Tuple[int, Tuple[int, ...]]] = []
        self.index: Dict[Tuple[int, Tuple[int, ...]], int] = {}

    def var(self, arg: int, face: Tuple[int, ...]) -> int:
        key = (arg, tuple(face))
        if key not in self.index:
            self.index[key] = len(self.labels)
            self.labels.append(key)
        return self.index[key]

    def __len__(self) -> int:
        return len(self.labels)


class SymCochain:
    """Z/2 cochain on the standard n-simplex with polynomial values."""

    def __init__(self, n: int, degree: int, values: Dict[Tuple[int, ...], Poly]):
        self.n = n
        self.degree = degree
        self.values = values

    def __getitem__(self, face) -> Poly:
        return self.values.get(tuple(face), ZERO)

    def __add__(self, other: "SymCochain") -> "SymCochain":
        assert self.n == other.n and self.degree == other.degree
        keys = set(self.values) | set(other.values)
        return SymCochain(self.n, self.degree, {k: padd(self[k], other[k]) for k in keys})

    def faces(self):
        return itertools.combinations(range(self.n + 1), self.degree + 1)

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def top(self) -> Poly:
        return self[tuple(range(self.n + 1))]


def sym_free(n: int, degree: int, arg: int, table: VarTable) -> SymCochain:
    """Universal cochain: one variable per face."""
    vals = {f: pvar(table.var(arg, f)) for f in itertools.combinations(range(n + 1), degree + 1)}
    return SymCochain(n, degree, vals)


def sym_cocycle(n: int, degree: int, arg: int, table: VarTable) -> SymCochain:
    """Universal Z/2 cocycle on the n-simplex: values on faces containing the
    last vertex n are free; the rest follow from the cocycle condition."""
    vals: Dict[Tuple[int, ...], Poly] = {}
    for f in itertools.combinations(range(n + 1), degree + 1):
        if f[-1] == n:
            vals[f] = pvar(table.var(arg, f))
    for f in itertools.combinations(range(n), degree + 1):
        terms = []
        for j in range(degree + 1):
            g = tuple(sorted(f[:j] + f[j + 1:] + (n,)))
            terms.append(vals[g])
        vals[f] = padd(*terms)
    return SymCochain(n, degree, vals)


def sym_d(c: SymCochain) -> SymCochain:
    k = c.degree + 1
    vals = {}
    for f in itertools.combinations(range(c.n + 1), k + 1):
        vals[f] = padd(*[c[f[:j] + f[j + 1:]] for j in range(k + 1)])
    return SymCochain(c.n, k, vals)


def sym_cup_i(x: SymCochain, y: SymCochain, i: int = 0) -> SymCochain:
    p, q = x.degree, y.degree
    m = p + q - i
    vals = {}
    terms = cup_terms(p, q, i) if 0 <= i <= min(p, q) else ()
    for f in itertools.combinations(range(x.n + 1), m + 1):
        acc = set()
        for front, back, _ in terms:
            acc ^= pmul(x[tuple(f[t] for t in front)], y[tuple(f[t] for t in back)])
        vals[f] = frozenset(acc)
    return SymCochain(x.n, m, vals)


def sym_zero(n: int, degree: int) -> SymCochain:
    return SymCochain(n, degree, {})


# face-evaluation formulas ---------------------------------------------------

Factor = Tuple[int, Tuple[int, ...]]
_FACTOR_RE = re.compile(r"([A-Za-z])\(\s*(\d+)\s*\)")


class FaceEvalFormula:
    """Sum of products of argument evaluations on faces of a ``degree``-simplex.

    ``terms`` is a list of monomials, each a tuple of (argument index, face)
    factors; arithmetic is mod 2, repeated factors collapse (e^2 = e) and
    repeated monomials cancel in pairs."""

    def __init__(self, degree: int, arity: int, terms: Iterable[Iterable[Factor]],
                 names: Optional[Sequence[str]] = None):
        self.degree = degree
        self.arity = arity
        self.names = list(names) if names is not None else [chr(ord("a") + i) for i in range(arity)]
        counts: Dict[Tuple[Factor, ...], int] = {}
        for t in terms:
            mono = tuple(sorted({(int(a), tuple(int(v) for v in f)) for a, f in t}))
            counts[mono] = counts.get(mono, 0) ^ 1
        self.terms: List[Tuple[Factor, ...]] = sorted(m for m, c in counts.items() if c)
        for mono in self.terms:
            for a, f in mono:
                if a >= arity or list(f) != sorted(set(f)) or (f and f[-1] > degree):
                    raise ValueError(f"bad factor {a}:{f}")

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "FaceEvalFormula") -> "FaceEvalFormula":
        assert self.degree == other.degree and self.arity == other.arity
        return FaceEvalFormula(self.degree, self.arity, list(self.terms) + list(other.terms), self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, FaceEvalFormula) and self.degree == other.degree \
            and self.arity == other.arity and self.terms == other.terms

    def arg_degrees(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for mono in self.terms:
            for a, f in mono:
                if out.setdefault(a, len(f) - 1) != len(f) - 1:
                    raise ValueError("inconsistent argument degree")
        return out

    # evaluation -------------------------------------------------------------
    def evaluate(self, *args: Cochain) -> Cochain:
        if len(args) != self.arity:
            raise CochainError("wrong number of arguments")
        cx = args[0].complex
        for a in args:
            if a.ring is not Z2 or a.complex is not cx:
                raise CochainError("formula arguments must be Z/2 cochains on one complex")
        shape = np.broadcast_shapes(*[a.batch_shape for a in args]) if any(a.batch_shape for a in args) else ()
        n = self.degree
        out = np.zeros((cx.count(n),) + shape, dtype=np.int64)
        if n > cx.dim or cx.count(n) == 0:
            return Cochain(cx, n, Z2, out)
        cache: Dict[Factor, np.ndarray] = {}

        def col(a: int, f: Tuple[int, ...]) -> np.ndarray:
            key = (a, f)
            if key not in cache:
                v = args[a].values[cx.faces(n, f)]
                if v.ndim < 1 + len(shape):
                    v = v.reshape(v.shape + (1,) * (1 + len(shape) - v.ndim))
                cache[key] = v
            return cache[key]

        for mono in self.terms:
            term = None
            for a, f in mono:
                v = col(a, f)
                term = v if term is None else term & v
            if term is None:
                out ^= 1
            else:
                out ^= term
        return Cochain(cx, n, Z2, out)

    def evaluate_sym(self, *args: SymCochain, on: Optional[Tuple[int, ...]] = None) -> Poly:
        """Polynomial value on the face ``on`` (default: the whole simplex,
        which must have dimension ``degree``)."""
        on = tuple(range(self.degree + 1)) if on is None else tuple(on)
        acc = set()
        for mono in self.terms:
            term = ONE
            for a, f in mono:
                term = pmul(term, args[a][tuple(on[t] for t in f)])
                if not term:
                    break
            acc ^= term
        return frozenset(acc)

    def sym_cochain(self, *args: SymCochain) -> SymCochain:
        n = args[0].n
        vals = {f: self.evaluate_sym(*args, on=f) for f in itertools.combinations(range(n + 1), self.degree + 1)}
        return SymCochain(n, self.degree, vals)

    @classmethod
    def from_poly(cls, p: Poly, table: VarTable, degree: int, arity: int,
                  names: Optional[Sequence[str]] = None) -> "FaceEvalFormula":
        terms = []
        for m in p:
            mono = []
            v = 0
            while m:
                if m & 1:
                    mono.append(table.labels[v])
                m >>= 1
                v += 1
            terms.append(mono)
        return cls(degree, arity, terms, names)

    # text form ----------------------------------------------------------------
    def term_strings(self) -> List[str]:
        return ["".join(f"{self.names[a]}({''.join(str(v) for v in f)})" for a, f in mono) or "1"
                for mono in self.terms]

    def __str__(self) -> str:
        return " + ".join(self.term_strings()) or "0"

    def __repr__(self) -> str:
        return f"FaceEvalFormula(degree={self.degree}, arity={self.arity}, terms={len(self.terms)})"

    @classmethod
    def parse(cls, text: str | Sequence[str], degree: int, names: Sequence[str]) -> "FaceEvalFormula":
        pieces = text.split("+") if isinstance(text, str) else list(text)
        terms = []
        for piece in pieces:
            piece = piece.strip()
            if not piece or piece == "0":
                continue
            if piece == "1":
                terms.append([])
                continue
            facs = _FACTOR_RE.findall(piece)
            if not facs or _FACTOR_RE.sub("", piece).strip():
                raise ValueError(f"cannot parse term {piece!r}")
            terms.append([(list(names).index(nm), tuple(int(ch) for ch in digits)) for nm, digits in facs])
        return cls(degree, len(names), terms, names)

    def to_json(self) -> dict:
        return {"degree": self.degree, "arity": self.arity, "names": self.names, "terms": self.term_strings()}

    @classmethod
    def from_json(cls, data: dict) -> "FaceEvalFormula":
        return cls.parse(data["terms"], int(data["degree"]), data["names"])

    def vanishes_on_degenerate(self, cocycle_args: bool = True) -> bool:
        """Symbolic check: every degeneracy of the universal simplex gives 0.

        A factor whose face hits a repeated vertex vanishes; the rest become
        evaluations on faces of the (degree-1)-simplex."""
        n = self.degree - 1
        if n < 0:
            return True
        table = VarTable()
        degs = self.arg_degrees()
        args = []
        for a in range(self.arity):
            k = degs.get(a, 0)
            args.append(sym_cocycle(n, k, a, table) if cocycle_args else sym_free(n, k, a, table))
        for i in range(n + 1):
            verts = list(range(i + 1)) + list(range(i, n + 1))  # s_i
            acc = set()
            for mono in self.terms:
                term = ONE
                for a, f in mono:
                    img = [verts[t] for t in f]
                    if len(set(img)) < len(img):
                        term = ZERO
                        break
                    term = pmul(term, args[a][tuple(img)])
                acc ^= term
            if acc:
                return False
        return True
