"""Ordered simplicial complexes, simplicial maps and fundamental chains.

Vertices carry opaque integer ids and a separate integer rank.  Internally a
complex relabels its vertices 0..V-1 sorted by (rank, id), so a simplex is a
strictly increasing row of internal indices and the rows of each dimension
are stored in lexicographic order.  This makes the storage order agree with
the (dimension, lexicographic rank) column order used by the solvers, and
lets face lookups run as vectorized ``searchsorted`` calls on packed keys.
"""
from __future__ import annotations

import itertools
import json
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np


class ComplexError(ValueError):
    """Invalid argument for a complex-level operation."""


def _lexsort_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def _unique_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    rows = _lexsort_rows(rows)
    keep = np.ones(rows.shape[0], dtype=bool)
    keep[1:] = np.any(rows[1:] != rows[:-1], axis=1)
    return rows[keep]


class OrderedComplex:
    """A finite simplicial complex whose simplices are totally ordered by rank.

    ``vertex_ids[i]`` and ``ranks[i]`` describe internal vertex ``i``;
    ``simplices(k)`` is an ``(N_k, k+1)`` int array of internal indices.
    """

    def __init__(self, vertex_ids: Sequence[int], ranks: Sequence[int],
                 simplices: Mapping[int, np.ndarray], *, _trusted: bool = False):
        ids = np.asarray(vertex_ids, dtype=np.int64).reshape(-1)
        rk = np.asarray(ranks, dtype=np.int64).reshape(-1)
        if ids.shape != rk.shape:
            raise ComplexError("vertex ids and ranks differ in length")
        if len(np.unique(ids)) != len(ids):
            raise ComplexError("duplicate vertex ids")
        if _trusted:
            self._ids, self._ranks = ids, rk
            self._simp = {int(k): np.ascontiguousarray(v, dtype=np.int64) for k, v in simplices.items()}
        else:
            order = np.lexsort((ids, rk))
            relabel = np.empty(len(ids), dtype=np.int64)
            relabel[order] = np.arange(len(ids))
            self._ids, self._ranks = ids[order], rk[order]
            self._simp = {}
            for k, rows in simplices.items():
                rows = np.asarray(rows, dtype=np.int64).reshape(-1, int(k) + 1)
                rows = np.sort(relabel[rows], axis=1)
                self._simp[int(k)] = _unique_rows(rows)
        nv = len(self._ids)
        self._simp[0] = np.arange(nv, dtype=np.int64).reshape(-1, 1)
        top = max([k for k, v in self._simp.items() if len(v)] or [-1])
        self._simp = {k: self._simp.get(k, np.zeros((0, k + 1), dtype=np.int64)) for k in range(top + 1)}
        self._dim = top
        self._face_cache: Dict[Tuple[int, Tuple[int, ...]], np.ndarray] = {}
        self._key_cache: Dict[int, object] = {}
        self._id_index = {int(v): i for i, v in enumerate(self._ids)}

    # construction -------------------------------------------------------
    @classmethod
    def from_maximal(cls, vertex_ids: Sequence[int], ranks: Sequence[int],
                     maximal: Iterable[Sequence[int]] | Mapping[int, np.ndarray],
                     by_index: bool = False) -> "OrderedComplex":
        """Closure of the given simplices, which are lists of vertex ids
        (or internal positions into ``vertex_ids`` when ``by_index``)."""
        ids = np.asarray(vertex_ids, dtype=np.int64)
        if isinstance(maximal, Mapping):
            groups = {int(k): np.asarray(v, dtype=np.int64).reshape(-1, int(k) + 1) for k, v in maximal.items()}
        else:
            groups: Dict[int, list] = {}
            for s in maximal:
                s = list(s)
                groups.setdefault(len(s) - 1, []).append(s)
            groups = {k: np.asarray(v, dtype=np.int64).reshape(-1, k + 1) for k, v in groups.items()}
        if not by_index:
            pos = {int(v): i for i, v in enumerate(ids)}
            try:
                groups = {k: np.vectorize(pos.__getitem__, otypes=[np.int64])(v) if v.size else v
                          for k, v in groups.items()}
            except KeyError as exc:
                raise ComplexError(f"unknown vertex id {exc}") from None
        rk = np.asarray(ranks, dtype=np.int64)
        order = np.lexsort((ids, rk))
        relabel = np.empty(len(ids), dtype=np.int64)
        relabel[order] = np.arange(len(ids))
        out: Dict[int, List[np.ndarray]] = {}
        for d, rows in groups.items():
            if rows.size == 0:
                continue
            rows = np.sort(relabel[rows], axis=1)
            if np.any(rows[:, 1:] == rows[:, :-1]):
                raise ComplexError("repeated vertex in a simplex")
            for k in range(d + 1):
                for pos_ in itertools.combinations(range(d + 1), k + 1):
                    out.setdefault(k, []).append(rows[:, pos_])
        simp = {k: _unique_rows(np.concatenate(v)) for k, v in out.items()}
        cx = cls(ids[order], rk[order], simp, _trusted=True)
        cx._check_ranks()
        return cx

    def _check_ranks(self) -> None:
        for k in range(1, self._dim + 1):
            r = self._ranks[self._simp[k]]
            if np.any(r[:, 1:] <= r[:, :-1]):
                raise ComplexError("vertex ranks are not strictly increasing on some simplex")

    # basic accessors ----------------------------------------------------
    @property
    def dim(self) -> int:
        return self._dim

    @property
    def vertex_ids(self) -> np.ndarray:
        return self._ids

    @property
    def ranks(self) -> np.ndarray:
        return self._ranks

    @property
    def n_vertices(self) -> int:
        return len(self._ids)

    def simplices(self, k: int) -> np.ndarray:
        if k < 0 or k > self._dim:
            return np.zeros((0, max(k, 0) + 1), dtype=np.int64)
        return self._simp[k]

    def count(self, k: int) -> int:
        return len(self.simplices(k))

    def f_vector(self) -> List[int]:
        return [self.count(k) for k in range(self._dim + 1)]

    def euler_characteristic(self) -> int:
        return int(sum((-1) ** k * n for k, n in enumerate(self.f_vector())))

    def index_of_id(self, vid: int) -> int:
        return self._id_index[int(vid)]

    def ids_to_index(self, ids) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int64)
        srt = np.argsort(self._ids)
        pos = np.searchsorted(self._ids[srt], ids)
        pos = np.clip(pos, 0, len(self._ids) - 1)
        found = self._ids[srt][pos] == ids
        if not np.all(found):
            raise ComplexError("unknown vertex id")
        return srt[pos]

    def simplex_ids(self, k: int, j: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._ids[self._simp[k][j]])

    def __repr__(self) -> str:
        return f"OrderedComplex(f={self.f_vector()})"

    def same_as(self, other: "OrderedComplex") -> bool:
        """Identical vertices, ranks and simplices."""
        if self._dim != other._dim or not np.array_equal(self._ids, other._ids):
            return False
        if not np.array_equal(self._ranks, other._ranks):
            return False
        return all(np.array_equal(self._simp[k], other._simp[k]) for k in range(self._dim + 1))

    def unordered_signature(self):
        """Simplices as frozensets of vertex ids, for comparing underlying complexes."""
        return {k: {frozenset(int(v) for v in self._ids[r]) for r in self._simp[k]} for k in range(self._dim + 1)}

    # lookups ------------------------------------------------------------
    def _keys(self, k: int):
        if k not in self._key_cache:
            self._key_cache[k] = self._encode(self.simplices(k))
        return self._key_cache[k]

    def _encode(self, rows: np.ndarray):
        nv = max(self.n_vertices, 2)
        width = rows.shape[1]
        if width * np.log2(nv) < 62:
            key = np.zeros(rows.shape[0], dtype=np.int64)
            for c in range(width):
                key = key * nv + rows[:, c]
            return key
        return [tuple(r) for r in rows.tolist()]

    def lookup(self, k: int, rows: np.ndarray, missing_ok: bool = True) -> np.ndarray:
        """Indices of the given sorted rows among k-simplices (-1 where absent)."""
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, k + 1)
        keys = self._keys(k)
        q = self._encode(rows)
        if isinstance(keys, np.ndarray):
            if len(keys) == 0:
                idx = np.full(len(rows), -1, dtype=np.int64)
            else:
                idx = np.searchsorted(keys, q)
                idx = np.clip(idx, 0, len(keys) - 1)
                idx = np.where(keys[idx] == q, idx, -1)
        else:
            table = self._key_cache.setdefault(("dict", k), {t: i for i, t in enumerate(keys)})
            idx = np.array([table.get(t, -1) for t in q], dtype=np.int64)
        if not missing_ok and np.any(idx < 0):
            raise ComplexError("simplex not present in complex")
        return idx

    def find(self, ids: Sequence[int]) -> int:
        """Index of the simplex with the given vertex ids (any order), or -1."""
        idx = np.sort(self.ids_to_index(list(ids)))
        return int(self.lookup(len(idx) - 1, idx[None, :])[0])

    def faces(self, n: int, positions: Tuple[int, ...]) -> np.ndarray:
        """For each n-simplex, the index of its face spanned by ``positions``."""
        key = (n, tuple(positions))
        got = self._face_cache.get(key)
        if got is None:
            rows = self.simplices(n)[:, list(positions)]
            got = self.lookup(len(positions) - 1, rows, missing_ok=False)
            self._face_cache[key] = got
        return got

    def boundary_faces(self, n: int) -> np.ndarray:
        """(N_n, n+1) array: column j holds the index of the j-th face."""
        return np.stack([self.faces(n, tuple(p for p in range(n + 1) if p != j)) for j in range(n + 1)], axis=1) \
            if n >= 1 else np.zeros((self.count(n), 0), dtype=np.int64)

    def coface_counts(self, k: int) -> np.ndarray:
        out = np.zeros(self.count(k), dtype=np.int64)
        if k + 1 <= self._dim:
            np.add.at(out, self.boundary_faces(k + 1).reshape(-1), 1)
        return out

    def maximal_mask(self, k: int) -> np.ndarray:
        return self.coface_counts(k) == 0

    # validation -----------------------------------------------------------
    def validate(self) -> None:
        """Check closure, strict rank order and absence of repeated vertices."""
        for k in range(self._dim + 1):
            rows = self._simp[k]
            if k >= 1 and np.any(rows[:, 1:] <= rows[:, :-1]):
                raise ComplexError(f"unsorted or repeated vertices in dimension {k}")
            if len(rows) > 1 and np.any(np.all(rows[1:] == rows[:-1], axis=1)):
                raise ComplexError("duplicate simplex")
            if k >= 1:
                for j in range(k + 1):
                    pos = tuple(p for p in range(k + 1) if p != j)
                    if np.any(self.lookup(k - 1, rows[:, list(pos)]) < 0):
                        raise ComplexError(f"closure fails in dimension {k}")
        self._check_ranks()

    # serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vertices": [{"id": int(i), "rank": int(r)} for i, r in zip(self._ids, self._ranks)],
            "simplices": {str(k): self._ids[self._simp[k]].tolist() for k in range(self._dim + 1)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrderedComplex":
        ids = [int(v["id"]) for v in data["vertices"]]
        ranks = [int(v["rank"]) for v in data["vertices"]]
        groups = {int(k): np.asarray(v, dtype=np.int64).reshape(-1, int(k) + 1)
                  for k, v in data.get("simplices", {}).items() if len(v)}
        cx = cls.from_maximal(ids, ranks, groups)
        for k, rows in groups.items():
            if k and np.any(np.diff(np.asarray([ranks[ids.index(v)] for v in rows[0]])) <= 0):
                raise ComplexError("simplex vertex lists must be in increasing rank order")
        return cx

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)

    @classmethod
    def load(cls, path: str) -> "OrderedComplex":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


class SimplicialMap:
    """Weakly order preserving simplicial map, stored as internal-index arrays."""

    def __init__(self, source: OrderedComplex, target: OrderedComplex, assignment: np.ndarray,
                 check: bool = True):
        self.source = source
        self.target = target
        self.assignment = np.asarray(assignment, dtype=np.int64)
        if self.assignment.shape != (source.n_vertices,):
            raise ComplexError("vertex assignment has wrong length")
        self._image_cache: Dict[int, np.ndarray] = {}
        if check:
            self.validate()

    @classmethod
    def from_ids(cls, source, target, mapping: Mapping[int, int]) -> "SimplicialMap":
        arr = np.empty(source.n_vertices, dtype=np.int64)
        for i, vid in enumerate(source.vertex_ids):
            arr[i] = target.index_of_id(mapping[int(vid)])
        return cls(source, target, arr)

    def image(self, k: int) -> np.ndarray:
        """Index of the image of each source k-simplex (-1 if degenerate)."""
        got = self._image_cache.get(k)
        if got is not None:
            return got
        rows = self.assignment[self.source.simplices(k)]
        if k == 0:
            got = rows[:, 0].copy()
        else:
            degenerate = np.any(rows[:, 1:] == rows[:, :-1], axis=1)
            got = np.full(len(rows), -1, dtype=np.int64)
            ok = ~degenerate
            got[ok] = self.target.lookup(k, rows[ok])
            if np.any(got[ok] < 0):
                raise ComplexError("image of a simplex is not a simplex of the target")
        self._image_cache[k] = got
        return got

    def validate(self) -> None:
        tr = self.target.ranks
        for k in range(1, self.source.dim + 1):
            rows = self.assignment[self.source.simplices(k)]
            r = tr[rows]
            if np.any(r[:, 1:] < r[:, :-1]):
                raise ComplexError("map is not weakly order preserving")
            if np.any((r[:, 1:] == r[:, :-1]) & (rows[:, 1:] != rows[:, :-1])):
                raise ComplexError("map sends a simplex onto incomparable vertices")
            self.image(k)

    def to_json(self) -> dict:
        return {"vertex_assignment": {str(int(self.source.vertex_ids[i])): int(self.target.vertex_ids[j])
                                      for i, j in enumerate(self.assignment)}}

    @classmethod
    def from_json(cls, data: dict, source: OrderedComplex, target: OrderedComplex) -> "SimplicialMap":
        return cls.from_ids(source, target, {int(k): int(v) for k, v in data["vertex_assignment"].items()})


class Subcomplex:
    """A subcomplex given by boolean masks over the simplices of a parent."""

    def __init__(self, parent: OrderedComplex, masks: Mapping[int, np.ndarray]):
        self.parent = parent
        self.masks = {k: np.asarray(masks.get(k, np.zeros(parent.count(k), bool)), dtype=bool)
                      for k in range(parent.dim + 1)}

    @classmethod
    def full(cls, parent: OrderedComplex, vertex_mask: np.ndarray) -> "Subcomplex":
        vm = np.asarray(vertex_mask, dtype=bool)
        return cls(parent, {k: np.all(vm[parent.simplices(k)], axis=1) for k in range(parent.dim + 1)})

    @property
    def vertex_mask(self) -> np.ndarray:
        return self.masks[0] if self.masks else np.zeros(0, bool)

    def count(self, k: int) -> int:
        return int(self.masks[k].sum()) if k in self.masks else 0

    def is_empty(self) -> bool:
        return not any(m.any() for m in self.masks.values())

    def is_full(self) -> bool:
        vm = self.vertex_mask
        return all(np.array_equal(self.masks[k], np.all(vm[self.parent.simplices(k)], axis=1))
                   for k in self.masks)

    def to_complex(self, ranks: Optional[np.ndarray] = None) -> OrderedComplex:
        p = self.parent
        vm = self.vertex_mask
        ids = p.vertex_ids[vm]
        rk = (p.ranks if ranks is None else np.asarray(ranks))[vm]
        relabel = np.cumsum(vm) - 1
        simp = {k: relabel[p.simplices(k)[m]] for k, m in self.masks.items() if k > 0 and m.any()}
        return OrderedComplex.from_maximal(ids, rk, simp, by_index=True)

    def inclusion(self, sub: Optional[OrderedComplex] = None) -> SimplicialMap:
        sub = self.to_complex() if sub is None else sub
        return SimplicialMap(sub, self.parent, self.parent.ids_to_index(sub.vertex_ids))


class OrientedFundamentalChain:
    """Signed sum of top simplices.  ``signs`` is None for a non-orientable
    complex (see ``orientable``)."""

    def __init__(self, complex: OrderedComplex, degree: int, signs: Optional[np.ndarray]):
        self.complex = complex
        self.degree = degree
        self.signs = None if signs is None else np.asarray(signs, dtype=np.int64)

    @property
    def orientable(self) -> bool:
        return self.signs is not None

    def boundary(self) -> np.ndarray:
        """Signed boundary as integer coefficients on (degree-1)-simplices."""
        if self.signs is None:
            raise ComplexError("non-orientable")
        n = self.degree
        out = np.zeros(self.complex.count(n - 1), dtype=np.int64)
        bf = self.complex.boundary_faces(n)
        for j in range(n + 1):
            np.add.at(out, bf[:, j], (-1) ** j * self.signs)
        return out

    def negated(self) -> "OrientedFundamentalChain":
        return OrientedFundamentalChain(self.complex, self.degree, -self.signs)


def orient(cx: OrderedComplex, normalization: Optional[Tuple[Sequence[int], int]] = None,
           degree: Optional[int] = None) -> OrientedFundamentalChain:
    """Propagate compatible signs over the dual graph of the top simplices.

    ``normalization`` is an optional (simplex vertex ids, sign) pair fixing
    the global sign; by default the first top simplex is positive."""
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import breadth_first_order, connected_components

    n = cx.dim if degree is None else degree
    if n < 0 or cx.count(n) == 0:
        raise ComplexError("cannot orient an empty complex")
    ntop = cx.count(n)
    if n == 0:
        return OrientedFundamentalChain(cx, 0, np.ones(ntop, dtype=np.int64))
    bf = cx.boundary_faces(n)
    flat = bf.reshape(-1)
    counts = np.bincount(flat, minlength=cx.count(n - 1))
    if np.any(counts > 2):
        raise ComplexError("not a pseudo-manifold: a codimension-one face has more than two cofaces")
    tops = np.repeat(np.arange(ntop), n + 1)
    inc = np.tile((-1) ** np.arange(n + 1), ntop)
    order = np.argsort(flat, kind="stable")
    f_sorted = flat[order]
    pair_start = np.flatnonzero((counts[f_sorted] == 2) & (np.r_[True, f_sorted[1:] != f_sorted[:-1]]))
    s1, s2 = order[pair_start], order[pair_start + 1]
    t1, t2 = tops[s1], tops[s2]
    # compatible orientations induce opposite signs on a shared face:
    # sign[t1]*inc1 = -sign[t2]*inc2, i.e. sign[t2] = rel * sign[t1]
    rel = -inc[s1] * inc[s2]
    g = coo_matrix((np.ones(len(t1)), (t1, t2)), shape=(ntop, ntop)).tocsr()
    g = g + g.T
    ncomp, labels = connected_components(g, directed=False)
    signs = np.zeros(ntop, dtype=np.int64)
    # adjacency with relation signs
    src = np.concatenate([t1, t2])
    dst = np.concatenate([t2, t1])
    rr = np.concatenate([rel, rel])
    adj_order = np.argsort(src, kind="stable")
    src, dst, rr = src[adj_order], dst[adj_order], rr[adj_order]
    for comp in range(ncomp):
        root = int(np.flatnonzero(labels == comp)[0])
        bfs, pred = breadth_first_order(g, root, directed=False, return_predecessors=True)
        signs[root] = 1
        # lookup relation for each (pred, node) edge
        nodes = bfs[1:]
        parents = pred[nodes]
        key_edges = src.astype(np.int64) * ntop + dst
        eo = np.argsort(key_edges)
        q = parents.astype(np.int64) * ntop + nodes
        pos = eo[np.searchsorted(key_edges[eo], q)]
        edge_rel = rr[pos]
        for node, parent, r in zip(nodes.tolist(), parents.tolist(), edge_rel.tolist()):
            signs[node] = r * signs[parent]
    if np.any(signs[t2] != rel * signs[t1]):
        return OrientedFundamentalChain(cx, n, None)
    if normalization is not None:
        simplex, sgn = normalization
        j = cx.find(simplex)
        if j < 0:
            raise ComplexError("normalization simplex not found")
        if signs[j] != sgn:
            signs = np.where(labels == labels[j], -signs, signs)
    return OrientedFundamentalChain(cx, n, signs)


def transfer_orientation(fc: OrientedFundamentalChain, other: OrderedComplex) -> OrientedFundamentalChain:
    """The same geometric orientation expressed in another vertex order of the
    same underlying complex (signs pick up the permutation parity)."""
    src = fc.complex
    n = fc.degree
    rows_ids = src.vertex_ids[src.simplices(n)]
    idx = other.ids_to_index(rows_ids.reshape(-1)).reshape(rows_ids.shape)
    perm = np.argsort(idx, axis=1)
    parity = _perm_parity(perm)
    target = other.lookup(n, np.sort(idx, axis=1), missing_ok=False)
    signs = np.zeros(other.count(n), dtype=np.int64)
    signs[target] = fc.signs * parity
    return OrientedFundamentalChain(other, n, signs)


def _perm_parity(perm: np.ndarray) -> np.ndarray:
    """Sign (+1/-1) of each row permutation."""
    m = perm.shape[1]
    inv = np.zeros(perm.shape[0], dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            inv += perm[:, i] > perm[:, j]
    return 1 - 2 * (inv % 2)
