"""Triangulation builders: simplices, products, subdivisions, cones,
suspensions, prisms, projective spaces and the S^2 x S^2 neighborhood data."""
from __future__ import annotations

import itertools
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .complex import ComplexError, OrderedComplex, SimplicialMap, Subcomplex


def build_simplex(n: int) -> OrderedComplex:
    """Closure of the standard n-simplex with vertices 0..n."""
    if n < 0:
        raise ComplexError("n must be non-negative")
    return OrderedComplex.from_maximal(range(n + 1), range(n + 1), [list(range(n + 1))])


def build_boundary_simplex(n: int) -> OrderedComplex:
    """All proper faces of the n-simplex."""
    if n < 1:
        raise ComplexError("n must be at least 1")
    facets = [[v for v in range(n + 1) if v != j] for j in range(n + 1)]
    return OrderedComplex.from_maximal(range(n + 1), range(n + 1), facets)


def _maximal_groups(cx: OrderedComplex) -> Dict[int, np.ndarray]:
    return {k: cx.simplices(k)[cx.maximal_mask(k)] for k in range(cx.dim + 1)
            if cx.maximal_mask(k).any()}


def product_triangulation(cx1: OrderedComplex, cx2: OrderedComplex):
    """Staircase triangulation of cx1 x cx2 with the lexicographic vertex order.

    Returns (product, pi1, pi2).  Vertex (i, j) gets id ``i * V2 + j`` where
    i, j are internal indices of the factors."""
    for cx in (cx1, cx2):
        if len(np.unique(cx.ranks)) != cx.n_vertices:
            raise ComplexError("product needs totally ordered factors")
    v1, v2 = cx1.n_vertices, cx2.n_vertices
    ii, jj = np.meshgrid(np.arange(v1), np.arange(v2), indexing="ij")
    ii, jj = ii.reshape(-1), jj.reshape(-1)
    ids = ii * v2 + jj
    ranks = ii * v2 + jj  # internal index order is rank order in each factor
    groups: Dict[int, List[np.ndarray]] = {}
    for p, m1 in _maximal_groups(cx1).items():
        for q, m2 in _maximal_groups(cx2).items():
            a = np.repeat(m1, len(m2), axis=0)
            b = np.tile(m2, (len(m1), 1))
            for steps in itertools.combinations(range(p + q), p):
                x, y = 0, 0
                cols = [a[:, 0] * v2 + b[:, 0]]
                for t in range(p + q):
                    if t in steps:
                        x += 1
                    else:
                        y += 1
                    cols.append(a[:, x] * v2 + b[:, y])
                groups.setdefault(p + q, []).append(np.stack(cols, axis=1))
    prod = OrderedComplex.from_maximal(ids, ranks, {k: np.concatenate(v) for k, v in groups.items()}, by_index=True)
    pidx = prod.vertex_ids
    pi1 = SimplicialMap(prod, cx1, pidx // v2)
    pi2 = SimplicialMap(prod, cx2, pidx % v2)
    return prod, pi1, pi2


def barycentric_subdivide(cx: OrderedComplex):
    """First barycentric subdivision, barycenters ranked by dimension.

    Returns (sd, carrier) where carrier maps each new vertex id to the tuple
    of original vertex ids spanning its simplex.  The barycenter of the
    k-simplex with storage index j gets id ``offset[k] + j``."""
    offsets = np.cumsum([0] + cx.f_vector())
    ids = np.arange(offsets[-1], dtype=np.int64)
    ranks = np.concatenate([np.full(cx.count(k), k, dtype=np.int64) for k in range(cx.dim + 1)]) \
        if cx.dim >= 0 else np.zeros(0, dtype=np.int64)
    groups: Dict[int, List[np.ndarray]] = {}
    for d, rows in _maximal_groups(cx).items():
        mask = cx.maximal_mask(d)
        for perm in itertools.permutations(range(d + 1)):
            cols = []
            for m in range(d + 1):
                pos = tuple(sorted(perm[:m + 1]))
                cols.append(offsets[m] + cx.faces(d, pos)[mask])
            groups.setdefault(d, []).append(np.stack(cols, axis=1))
    sd = OrderedComplex.from_maximal(ids, ranks, {k: np.concatenate(v) for k, v in groups.items()}, by_index=True)
    carrier = {}
    for k in range(cx.dim + 1):
        rows = cx.vertex_ids[cx.simplices(k)]
        for j, r in enumerate(rows.tolist()):
            carrier[int(offsets[k] + j)] = tuple(r)
    return sd, carrier


def cone(cx: OrderedComplex) -> OrderedComplex:
    """Cone with apex ranked above every vertex (id = max id + 1)."""
    apex = int(cx.vertex_ids.max()) + 1 if cx.n_vertices else 0
    top = int(cx.ranks.max()) + 1 if cx.n_vertices else 0
    ids = np.r_[cx.vertex_ids, apex]
    ranks = np.r_[cx.ranks, top]
    nv = cx.n_vertices
    groups = {}
    for d, rows in _maximal_groups(cx).items():
        groups[d + 1] = np.hstack([rows, np.full((len(rows), 1), nv)])
    if not groups:
        groups = {0: np.array([[nv]])}
    return OrderedComplex.from_maximal(ids, ranks, groups, by_index=True)


def suspension(cx: OrderedComplex) -> OrderedComplex:
    """Union of an upper cone (apex id max+1, ranked last) and a lower cone
    (apex id max+2, ranked first)."""
    top_id, bot_id = suspension_apexes(cx)
    ids = np.r_[cx.vertex_ids, top_id, bot_id]
    hi = int(cx.ranks.max()) + 1 if cx.n_vertices else 1
    lo = int(cx.ranks.min()) - 1 if cx.n_vertices else -1
    ranks = np.r_[cx.ranks, hi, lo]
    nv = cx.n_vertices
    groups: Dict[int, List[np.ndarray]] = {}
    for d, rows in _maximal_groups(cx).items():
        groups.setdefault(d + 1, []).append(np.hstack([rows, np.full((len(rows), 1), nv)]))
        groups.setdefault(d + 1, []).append(np.hstack([np.full((len(rows), 1), nv + 1), rows]))
    groups.setdefault(0, []).append(np.array([[nv], [nv + 1]]))
    return OrderedComplex.from_maximal(ids, ranks, {k: np.concatenate(v) for k, v in groups.items()}, by_index=True)


def suspension_apexes(cx: OrderedComplex) -> Tuple[int, int]:
    """Ids (upper apex, lower apex) that ``suspension`` assigns over cx."""
    m = int(cx.vertex_ids.max()) if cx.n_vertices else -1
    return m + 1, m + 2


def suspension_inclusion(base: OrderedComplex, susp: OrderedComplex) -> SimplicialMap:
    return SimplicialMap(base, susp, susp.ids_to_index(base.vertex_ids))


class Prism(NamedTuple):
    """Staircase prism; unpacks as (complex, incl0, incl1, bottom, top)."""
    complex: OrderedComplex
    incl0: SimplicialMap
    incl1: SimplicialMap
    bottom: OrderedComplex
    top: OrderedComplex


def prism(cx_bottom: OrderedComplex, cx_top: OrderedComplex) -> Prism:
    """Triangulate X x I with ends cx_bottom x 0 and cx_top x 1.

    Vertex (v, 0) gets id 2v and (v, 1) gets id 2v + 1.  End-0 vertices keep
    the bottom ranks, end-1 vertices the top ranks shifted above them.  The
    top simplices over a bottom-ordered simplex (v0..vn) are the staircases
    ((v0,0)..(vi,0),(vi,1)..(vn,1))."""
    if cx_bottom.unordered_signature() != cx_top.unordered_signature():
        raise ComplexError("prism ends must share the same underlying complex")
    nb = cx_bottom.n_vertices
    bid = cx_bottom.vertex_ids
    top_pos = cx_top.ids_to_index(bid)  # top index of bottom vertex i
    rb = cx_bottom.ranks - (cx_bottom.ranks.min() if nb else 0)
    rt = cx_top.ranks - (cx_top.ranks.min() if nb else 0)
    shift = (int(rb.max()) + 1) if nb else 0
    ids = np.r_[2 * bid, 2 * bid + 1]
    ranks = np.r_[rb, shift + rt[top_pos]]
    groups: Dict[int, List[np.ndarray]] = {}
    for d, rows in _maximal_groups(cx_bottom).items():
        for i in range(d + 1):
            groups.setdefault(d + 1, []).append(np.hstack([rows[:, :i + 1], nb + rows[:, i:]]))
    cx = OrderedComplex.from_maximal(ids, ranks, {k: np.concatenate(v) for k, v in groups.items()}, by_index=True)
    incl0 = SimplicialMap(cx_bottom, cx, cx.ids_to_index(2 * cx_bottom.vertex_ids))
    incl1 = SimplicialMap(cx_top, cx, cx.ids_to_index(2 * cx_top.vertex_ids + 1))
    return Prism(cx, incl0, incl1, cx_bottom, cx_top)


def reorder_vertices(cx: OrderedComplex, rank_override) -> OrderedComplex:
    """Same simplices under a new rank function (mapping id -> rank, or an
    array aligned with ``cx.vertex_ids``)."""
    if isinstance(rank_override, dict):
        ranks = np.array([rank_override[int(v)] for v in cx.vertex_ids], dtype=np.int64)
    else:
        ranks = np.asarray(rank_override, dtype=np.int64)
    if ranks.shape != (cx.n_vertices,):
        raise ComplexError("rank override has the wrong length")
    for k in range(1, cx.dim + 1):
        r = ranks[cx.simplices(k)]
        if np.any(np.sort(r, axis=1)[:, 1:] == np.sort(r, axis=1)[:, :-1]):
            raise ComplexError("new ranks do not totally order some simplex")
    return OrderedComplex(cx.vertex_ids, ranks, {k: cx.simplices(k) for k in range(1, cx.dim + 1)})


def regular_neighborhood_of_diagonal(T: OrderedComplex, D: Subcomplex):
    """Closed star V of a full subcomplex D and its frontier dV.

    V is the union of closed simplices meeting D; dV consists of the simplices
    of V that do not meet D."""
    if not D.is_full():
        raise ComplexError("D must be a full subcomplex")
    dmask = D.vertex_mask
    vmasks: Dict[int, np.ndarray] = {k: np.zeros(T.count(k), dtype=bool) for k in range(T.dim + 1)}
    for d in range(T.dim + 1):
        rows = T.simplices(d)
        hit = np.any(dmask[rows], axis=1) & T.maximal_mask(d)
        if not hit.any():
            continue
        for k in range(d + 1):
            for pos in itertools.combinations(range(d + 1), k + 1):
                vmasks[k][T.faces(d, pos)[hit]] = True
    bmasks = {k: vmasks[k] & ~np.any(dmask[T.simplices(k)], axis=1) for k in vmasks}
    return Subcomplex(T, vmasks), Subcomplex(T, bmasks)


def collapse_map_g(Tp: OrderedComplex, V: Subcomplex, dV: Subcomplex):
    """Map T' onto the suspension of dV: interior of V to the lower apex,
    dV identically, everything outside V to the upper apex.

    Returns (g, suspension complex, dV complex)."""
    dvc = _sub_in(Tp, dV)
    susp = suspension(dvc)
    top_id, bot_id = suspension_apexes(dvc)
    in_v = _vertex_mask_in(Tp, V)
    in_b = _vertex_mask_in(Tp, dV)
    assign = np.empty(Tp.n_vertices, dtype=np.int64)
    assign[in_b] = susp.ids_to_index(Tp.vertex_ids[in_b])
    assign[in_v & ~in_b] = susp.index_of_id(bot_id)
    assign[~in_v] = susp.index_of_id(top_id)
    rk = Tp.ranks
    if in_b.any() and ((in_v & ~in_b).any() and rk[in_v & ~in_b].max() >= rk[in_b].min()
                       or (~in_v).any() and rk[~in_v].min() <= rk[in_b].max()):
        raise ComplexError("ranks are not layered interior < frontier < exterior")
    return SimplicialMap(Tp, susp, assign), susp, dvc


def _vertex_mask_in(cx: OrderedComplex, sub: Subcomplex) -> np.ndarray:
    ids = set(sub.parent.vertex_ids[sub.vertex_mask].tolist())
    return np.array([int(v) in ids for v in cx.vertex_ids], dtype=bool)


def _sub_in(cx: OrderedComplex, sub: Subcomplex) -> OrderedComplex:
    """The subcomplex ``sub`` (of another complex with the same simplices)
    rebuilt with the vertex order of ``cx``."""
    p = sub.parent
    simp = {k: p.vertex_ids[p.simplices(k)[m]] for k, m in sub.masks.items() if m.any()}
    vm = _vertex_mask_in(cx, sub)
    return OrderedComplex.from_maximal(cx.vertex_ids[vm], cx.ranks[vm], simp)


def build_rp_n(n: int) -> OrderedComplex:
    """RP^n as the antipodal quotient of the barycentric subdivision of the
    boundary of the (n+1)-dimensional cross-polytope.

    A face of the cross-polytope is a sign vector in {-1,0,1}^(n+1); its orbit
    is represented by the vector whose first nonzero entry is +1, encoded in
    base 3 as the vertex id.  Rank = dimension of the face."""
    if n < 1:
        raise ComplexError("n must be at least 1")
    m = n + 1
    pow3 = 3 ** np.arange(m)[::-1]
    signs = np.array(list(itertools.product((1, -1), repeat=m)), dtype=np.int64)
    rows = []
    for perm in itertools.permutations(range(m)):
        cols = []
        for k in range(m):
            vec = np.zeros((len(signs), m), dtype=np.int64)
            sel = list(perm[:k + 1])
            vec[:, sel] = signs[:, sel]
            first = vec[np.arange(len(vec)), np.argmax(vec != 0, axis=1)]
            vec = vec * first[:, None]
            cols.append(((vec % 3) * pow3).sum(axis=1))
        rows.append(np.stack(cols, axis=1))
    rows = np.concatenate(rows)
    ids = np.unique(rows)
    digits = (ids[:, None] // pow3) % 3
    ranks = (digits != 0).sum(axis=1) - 1
    pos = np.searchsorted(ids, rows)
    cx = OrderedComplex.from_maximal(ids, ranks, {n: pos}, by_index=True)
    if cx.count(n) != len(signs) * int(np.prod(range(1, m + 1))) // 2:
        raise ComplexError("antipodal quotient is not simplicial")
    return cx


def simplify_manifold(cx: OrderedComplex, seed: int = 0, max_rounds: int = 50) -> OrderedComplex:
    """Shrink a closed combinatorial manifold by edge contractions that satisfy
    the link condition lk(u) n lk(v) = lk(uv), which preserves the PL type.

    The result is ranked by an arbitrary total order of the surviving
    vertices (any total order makes a complex ordered)."""
    n = cx.dim
    facets = {frozenset(r) for r in cx.simplices(n).tolist()}
    rng = np.random.default_rng(seed)
    star: Dict[int, set] = {}
    for f in facets:
        for v in f:
            star.setdefault(v, set()).add(f)

    def faces_of(fs, drop):
        out = set()
        for f in fs:
            rest = tuple(sorted(f - drop))
            for k in range(1, len(rest) + 1):
                out.update(itertools.combinations(rest, k))
        return out

    for _ in range(max_rounds):
        edges = sorted({tuple(sorted(e)) for f in facets for e in itertools.combinations(sorted(f), 2)})
        rng.shuffle(edges)
        changed = False
        for u, v in edges:
            if u not in star or v not in star:
                continue
            su, sv = star[u], star[v]
            suv = [f for f in su if v in f]
            if not suv:
                continue
            lu = faces_of(su, {u})
            lv = faces_of(sv, {v})
            luv = faces_of(suv, {u, v})
            if (lu & lv) - luv:
                continue
            for f in suv:
                facets.discard(f)
                for w in f:
                    star[w].discard(f)
            for f in list(star[u]):
                g = (f - {u}) | {v}
                facets.discard(f)
                for w in f:
                    star[w].discard(f)
                facets.add(g)
                for w in g:
                    star.setdefault(w, set()).add(g)
            del star[u]
            changed = True
        if not changed:
            break
    verts = sorted(star)
    ids = cx.vertex_ids[verts]
    pos = {v: i for i, v in enumerate(verts)}
    rows = np.array([sorted(pos[v] for v in f) for f in facets], dtype=np.int64)
    return OrderedComplex.from_maximal(ids, np.arange(len(verts)), {n: rows}, by_index=True)


def subdivided_map(f: SimplicialMap, sd_src: OrderedComplex, carrier_src: Dict[int, tuple],
                   sd_tgt: OrderedComplex, carrier_tgt: Dict[int, tuple]) -> SimplicialMap:
    """sd(f): the barycenter of a simplex goes to the barycenter of its image.

    Weakly order preserving for the dimension ranks since images of nested
    simplices are nested."""
    src, tgt = f.source, f.target
    back = {v: k for k, v in carrier_tgt.items()}
    assign = np.empty(sd_src.n_vertices, dtype=np.int64)
    for i, vid in enumerate(sd_src.vertex_ids.tolist()):
        idx = src.ids_to_index(np.array(carrier_src[vid]))
        img = np.unique(f.assignment[idx])
        key = tuple(tgt.vertex_ids[img].tolist())  # np.unique sorts by internal index
        assign[i] = sd_tgt.index_of_id(back[key])
    return SimplicialMap(sd_src, sd_tgt, assign)


def random_complex(rng: np.random.Generator, n_vertices: int = 8, n_facets: int = 5, dim: int = 4,
                   max_simplices: Optional[int] = None, low_facets: int = 0) -> OrderedComplex:
    """Closure of ``n_facets`` random dim-simplices plus ``low_facets`` random
    simplices of dimensions 1..dim-1 on ``n_vertices`` vertices, totally
    ordered by vertex id.  The low-dimensional facets create cohomology.
    Resamples until the simplex count is at most ``max_simplices``."""
    if dim + 1 > n_vertices:
        raise ComplexError("not enough vertices for the requested dimension")
    while True:
        facets = [sorted(rng.choice(n_vertices, dim + 1, replace=False).tolist()) for _ in range(n_facets)]
        for _ in range(low_facets):
            k = int(rng.integers(1, dim))
            facets.append(sorted(rng.choice(n_vertices, k + 1, replace=False).tolist()))
        cx = OrderedComplex.from_maximal(range(n_vertices), range(n_vertices), facets)
        if max_simplices is None or sum(cx.f_vector()) <= max_simplices:
            return cx
