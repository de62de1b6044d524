"""Coefficient rings and normalized cochains.

A cochain stores one value per non-degenerate simplex of its degree in a
dense int64 array (storage order of the complex).  An optional trailing
batch axis holds many cochains at once, which is how exhaustive identity
checks are vectorized.  Q/Z values are exact: an int64 numerator array over
a single positive denominator ``den``, reduced mod ``den``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

import numpy as np

from .complex import ComplexError, OrderedComplex, OrientedFundamentalChain, SimplicialMap, Subcomplex


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: ``kind`` in {"Z2", "Z", "Zn", "QZ"}; ``n`` is the
    modulus for Z2 / Zn and 0 otherwise."""
    kind: str
    n: int = 0

    @staticmethod
    def zn(n: int) -> "Ring":
        if n < 2:
            raise ValueError("modulus must be at least 2")
        return Z2 if n == 2 else Ring("Zn", n)

    @property
    def modulus(self) -> int:
        return self.n

    @property
    def tag(self) -> str:
        if self.kind == "Zn":
            return f"Z/{self.n}"
        return self.kind

    @staticmethod
    def parse(tag: str) -> "Ring":
        if tag == "Z2":
            return Z2
        if tag == "Z":
            return Z
        if tag == "QZ":
            return QZ
        if tag.startswith("Z/"):
            return Ring.zn(int(tag[2:]))
        raise ValueError(f"unknown ring tag {tag!r}")

    def __str__(self) -> str:
        return self.tag


Z2 = Ring("Z2", 2)
Z = Ring("Z", 0)
QZ = Ring("QZ", 0)


class CochainError(ValueError):
    pass


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Cochain:
    __slots__ = ("complex", "degree", "ring", "values", "den")

    def __init__(self, complex: OrderedComplex, degree: int, ring: Ring, values, den: int = 1,
                 normalize: bool = True):
        self.complex = complex
        self.degree = int(degree)
        self.ring = ring
        vals = np.asarray(values, dtype=np.int64)
        if vals.shape[:1] != (complex.count(degree),):
            raise CochainError(f"expected {complex.count(degree)} values in degree {degree}, got {vals.shape}")
        self.den = int(den) if ring is QZ else 1
        if normalize:
            if ring.n:
                vals = vals % ring.n
            elif ring is QZ:
                vals = vals % self.den
                g = gcd(self.den, int(np.gcd.reduce(vals.reshape(-1))) if vals.size else 0)
                if g > 1:
                    vals = vals // g
                    self.den //= g
        self.values = vals

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, cx: OrderedComplex, degree: int, ring: Ring, batch: tuple = ()) -> "Cochain":
        return cls(cx, degree, ring, np.zeros((cx.count(degree),) + tuple(batch), dtype=np.int64))

    @classmethod
    def random(cls, cx: OrderedComplex, degree: int, ring: Ring, rng: np.random.Generator,
               den: int = 8, bound: int = 5) -> "Cochain":
        n = cx.count(degree)
        if ring.n:
            return cls(cx, degree, ring, rng.integers(0, ring.n, n))
        if ring is QZ:
            return cls(cx, degree, ring, rng.integers(0, den, n), den)
        return cls(cx, degree, ring, rng.integers(-bound, bound + 1, n))

    @classmethod
    def from_dict(cls, cx: OrderedComplex, degree: int, ring: Ring, values: dict) -> "Cochain":
        """Values keyed by tuples of vertex ids (any order)."""
        if ring is QZ:
            fr = {k: _as_fraction(v) for k, v in values.items()}
            den = 1
            for v in fr.values():
                den = den * v.denominator // gcd(den, v.denominator)
            arr = np.zeros(cx.count(degree), dtype=np.int64)
            for k, v in fr.items():
                arr[_index(cx, degree, k)] = int(v * den) % den
            return cls(cx, degree, ring, arr, den)
        arr = np.zeros(cx.count(degree), dtype=np.int64)
        for k, v in values.items():
            arr[_index(cx, degree, k)] = int(v)
        return cls(cx, degree, ring, arr)

    # basic protocol ---------------------------------------------------------
    @property
    def batch_shape(self) -> tuple:
        return self.values.shape[1:]

    def _like(self, values, den: Optional[int] = None) -> "Cochain":
        return Cochain(self.complex, self.degree, self.ring, values, self.den if den is None else den)

    def _check_compatible(self, other: "Cochain") -> None:
        if not isinstance(other, Cochain):
            raise CochainError("expected a cochain")
        if other.complex is not self.complex:
            raise CochainError("cochains live on different complexes")
        if other.degree != self.degree:
            raise CochainError("degree mismatch")
        if other.ring != self.ring:
            raise CochainError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _aligned(self, other: "Cochain"):
        if self.ring is not QZ or self.den == other.den:
            return self.values, other.values, self.den
        den = self.den * other.den // gcd(self.den, other.den)
        return self.values * (den // self.den), other.values * (den // other.den), den

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        a, b, den = self._aligned(other)
        return self._like(a + b, den)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        a, b, den = self._aligned(other)
        return self._like(a - b, den)

    def __neg__(self) -> "Cochain":
        return self._like(-self.values)

    def __mul__(self, k: int) -> "Cochain":
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return self._like(self.values * int(k))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        try:
            return (self - other).is_zero()
        except CochainError:
            return False

    __hash__ = None

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def nonzero_mask(self) -> np.ndarray:
        return self.values != 0

    def value(self, simplex) -> Union[int, Fraction]:
        """Ring value on the simplex with the given vertex ids (0 if degenerate)."""
        ids = list(simplex)
        if len(set(ids)) != len(ids):
            return self._ring_value(0)
        j = _index(self.complex, self.degree, ids)
        return self._ring_value(self.values[j])

    def _ring_value(self, v):
        if self.ring is QZ:
            return Fraction(int(v), self.den) if not isinstance(v, np.ndarray) else v
        return int(v) if not isinstance(v, np.ndarray) else v

    def batch_item(self, j) -> "Cochain":
        return self._like(self.values[..., j])

    def copy(self) -> "Cochain":
        return self._like(self.values.copy())

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, ring={self.ring}, nnz={int(np.count_nonzero(self.values))})"

    # serialization --------------------------------------------------------------
    def to_json(self) -> dict:
        if self.batch_shape:
            raise CochainError("cannot serialize a batched cochain")
        ids = self.complex.vertex_ids[self.complex.simplices(self.degree)]
        out = {}
        for j in np.flatnonzero(self.values):
            key = ",".join(str(int(v)) for v in ids[j])
            if self.ring is QZ:
                out[key] = fraction_str(Fraction(int(self.values[j]), self.den))
            else:
                out[key] = str(int(self.values[j]))
        return {"degree": self.degree, "ring": self.ring.tag, "values": out}

    @classmethod
    def from_json(cls, data: dict, cx: OrderedComplex) -> "Cochain":
        ring = Ring.parse(data["ring"])
        vals = {}
        for key, v in data["values"].items():
            ids = tuple(int(x) for x in key.split(",")) if key else ()
            vals[ids] = Fraction(v) if ring is QZ else int(v)
        return cls.from_dict(cx, int(data["degree"]), ring, vals)


def fraction_str(x: Fraction) -> str:
    x = x % 1 if isinstance(x, Fraction) else Fraction(x) % 1
    return f"{x.numerator}/{x.denominator}"


def _index(cx: OrderedComplex, degree: int, ids) -> int:
    ids = list(ids)
    if len(ids) != degree + 1:
        raise CochainError("simplex has the wrong dimension")
    j = cx.find(ids)
    if j < 0:
        raise CochainError(f"{tuple(ids)} is not a simplex")
    return j


# operations ----------------------------------------------------------------

def coboundary(c: Cochain) -> Cochain:
    """(dc)(s) = sum_j (-1)^j c(d_j s)."""
    cx, k = c.complex, c.degree
    n = k + 1
    if n > cx.dim or cx.count(n) == 0:
        return Cochain.zero(cx, n, c.ring, c.batch_shape) if n <= cx.dim else \
            Cochain(cx, n, c.ring, np.zeros((0,) + c.batch_shape, dtype=np.int64), c.den)
    out = np.zeros((cx.count(n),) + c.batch_shape, dtype=np.int64)
    signed = c.ring is not Z2
    for j in range(n + 1):
        f = c.values[cx.faces(n, tuple(p for p in range(n + 1) if p != j))]
        if signed and j % 2:
            out -= f
        else:
            out += f
    return Cochain(cx, n, c.ring, out, c.den)


d = coboundary


def special_lift(c: Cochain) -> Cochain:
    """Integer cochain with values in {0,1} reducing to the Z/2 cochain c."""
    if c.ring is not Z2:
        raise CochainError("special lift needs a Z/2 cochain")
    return Cochain(c.complex, c.degree, Z, c.values.copy())


def coefficient_map(c: Cochain, target: Ring, scale: Union[int, Fraction] = 1) -> Cochain:
    """Value-wise x -> scale * x into ``target``; must be well defined."""
    s = Fraction(scale)
    m = c.ring.n  # 0 for Z; for QZ the source torsion is not bounded
    if c.ring is QZ:
        if target is not QZ or s.denominator != 1:
            raise CochainError("Q/Z only maps to Q/Z by integer scaling")
        return Cochain(c.complex, c.degree, QZ, c.values * s.numerator, c.den)
    if target is QZ:
        if m and (s * m).denominator != 1:
            raise CochainError(f"scale {s} is not well defined on {c.ring}")
        return Cochain(c.complex, c.degree, QZ, c.values * s.numerator, s.denominator)
    if s.denominator != 1:
        raise CochainError("fractional scale needs a Q/Z target")
    k = s.numerator
    if target is Z:
        if m:
            raise CochainError(f"no coefficient map {c.ring} -> Z (use special_lift)")
        return Cochain(c.complex, c.degree, Z, c.values * k)
    if m and (k * m) % target.n:
        raise CochainError(f"scale {k} is not well defined from {c.ring} to {target}")
    return Cochain(c.complex, c.degree, target, c.values * k)


def mod2(c: Cochain) -> Cochain:
    return coefficient_map(c, Z2, 1)


def half(c: Cochain) -> Cochain:
    """(1/2): Z/2 or Z -> Q/Z."""
    return coefficient_map(c, QZ, Fraction(1, 2))


def qz(c: Cochain, scale: Fraction) -> Cochain:
    return coefficient_map(c, QZ, scale)


def integrate(c: Cochain, fc: OrientedFundamentalChain):
    """Sum of sign * value over the top simplices, as a ring value."""
    if c.degree != fc.degree or c.complex is not fc.complex:
        raise CochainError("degree or complex mismatch in integrate")
    signs = fc.signs if fc.signs is not None else np.ones(c.complex.count(c.degree), dtype=np.int64)
    if fc.signs is None and c.ring is not Z2:
        raise CochainError("non-orientable chain integrates only Z/2 cochains")
    sh = (-1,) + (1,) * len(c.batch_shape)
    tot = (c.values * signs.reshape(sh)).sum(axis=0)
    if c.ring is QZ:
        tot = tot % c.den
        return Fraction(int(tot), c.den) if np.ndim(tot) == 0 else [Fraction(int(t), c.den) for t in tot]
    if c.ring.n:
        tot = tot % c.ring.n
    return int(tot) if np.ndim(tot) == 0 else tot


def pullback(f: SimplicialMap, c: Cochain) -> Cochain:
    """(f*c)(s) = c(f(s)), zero on simplices with degenerate image."""
    if c.complex is not f.target:
        raise CochainError("cochain is not on the target of the map")
    img = f.image(c.degree)
    vals = np.zeros((len(img),) + c.batch_shape, dtype=np.int64)
    ok = img >= 0
    vals[ok] = c.values[img[ok]]
    return Cochain(f.source, c.degree, c.ring, vals, c.den)


def restrict(c: Cochain, sub: Union[SimplicialMap, Subcomplex]) -> Cochain:
    """Values on a subcomplex, given as an inclusion map or a Subcomplex."""
    if isinstance(sub, Subcomplex):
        sub = sub.inclusion()
    return pullback(sub, c)


def extend_by_zero(c: Cochain, incl: SimplicialMap) -> Cochain:
    """Cochain on the target of an injective inclusion agreeing with c on the
    image and zero elsewhere."""
    img = incl.image(c.degree)
    vals = np.zeros((incl.target.count(c.degree),) + c.batch_shape, dtype=np.int64)
    vals[img] = c.values
    return Cochain(incl.target, c.degree, c.ring, vals, c.den)


def cocycles_basis(cx: OrderedComplex, degree: int):
    """Basis of Z^degree(cx; Z/2) as an (N, dim) 0/1 array."""
    from .linalg import gf2_nullspace_of_coboundary
    return gf2_nullspace_of_coboundary(cx, degree)


def all_cocycles(cx: OrderedComplex, degree: int) -> Cochain:
    """Every Z/2 cocycle of the given degree, as one batched cochain."""
    basis = cocycles_basis(cx, degree)
    k = basis.shape[1]
    if k > 22:
        raise CochainError("cocycle space too large to enumerate")
    coeff = ((np.arange(2 ** k)[:, None] >> np.arange(k)) & 1).T  # (k, 2^k)
    vals = (basis @ coeff) % 2
    return Cochain(cx, degree, Z2, vals)


def all_cochains(cx: OrderedComplex, degree: int) -> Cochain:
    n = cx.count(degree)
    if n > 22:
        raise CochainError("cochain space too large to enumerate")
    vals = (np.arange(2 ** n)[None, :] >> np.arange(n)[:, None]) & 1
    return Cochain(cx, degree, Z2, vals)


def transport(c: Cochain, other: OrderedComplex) -> Cochain:
    """The same cochain on a complex with the same simplices under another
    vertex order.  Values follow vertex sets, times the sign of the
    reordering permutation (so that d commutes with transport)."""
    from .complex import _perm_parity
    src = c.complex
    k = c.degree
    rows = other.vertex_ids[other.simplices(k)]
    idx = src.ids_to_index(rows.reshape(-1)).reshape(rows.shape)
    j = src.lookup(k, np.sort(idx, axis=1), missing_ok=False)
    vals = c.values[j]
    if c.ring is not Z2 and k > 0:
        odd = _perm_parity(np.argsort(idx, axis=1)) == -1
        sh = (-1,) + (1,) * len(c.batch_shape)
        vals = np.where(odd.reshape(sh), -vals, vals)
    return Cochain(other, k, c.ring, vals, c.den)
