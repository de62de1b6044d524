"""Ordered complexes, maps, orientation and the builders."""
import json

import numpy as np
import pytest

from spin4.builders import (barycentric_subdivide, build_boundary_simplex, build_rp_n, build_simplex, cone,
                            prism, product_triangulation, random_complex, simplify_manifold, suspension,
                            suspension_apexes, suspension_inclusion)
from spin4.complex import ComplexError, OrderedComplex, SimplicialMap, orient
from spin4.linalg import integral_homology


def _binom_row(n):
    from math import comb
    return [comb(n + 1, k + 1) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(0, 7))
def test_simplex_f_vector(n):
    assert build_simplex(n).f_vector() == _binom_row(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_boundary_simplex_is_a_sphere(n):
    cx = build_boundary_simplex(n)
    assert cx.dim == n - 1
    assert cx.euler_characteristic() == 1 + (-1) ** (n - 1)
    assert orient(cx).orientable


def test_from_maximal_closes_under_faces():
    cx = OrderedComplex.from_maximal([10, 20, 30, 40], [3, 2, 1, 0], [[10, 20, 30], [30, 40]])
    assert cx.f_vector() == [4, 4, 1]
    # simplices are stored in rank order
    assert cx.simplex_ids(2, 0) == (30, 20, 10)
    cx.validate()


def test_lookup_and_find():
    cx = build_simplex(3)
    for k in range(4):
        for j in range(cx.count(k)):
            assert cx.find(cx.simplex_ids(k, j)) == j
    assert build_boundary_simplex(3).find((0, 1, 2, 3)) == -1


def test_json_round_trip(tmp_path):
    cx = suspension(build_boundary_simplex(3))
    path = tmp_path / "cx.json"
    cx.save(str(path))
    back = OrderedComplex.load(str(path))
    assert back.same_as(cx)
    assert json.loads(cx.dumps()) == json.loads(back.dumps())


def test_product_of_simplices_has_binomial_top_count():
    # the staircase triangulation of Delta^p x Delta^q has C(p+q, p) top simplices
    for p, q in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        prod, pi1, pi2 = product_triangulation(build_simplex(p), build_simplex(q))
        from math import comb
        assert prod.dim == p + q
        assert prod.count(p + q) == comb(p + q, p)
        pi1.validate()
        pi2.validate()


def test_product_of_spheres_homology():
    s2 = build_boundary_simplex(3)
    T, _, _ = product_triangulation(s2, s2)
    assert T.euler_characteristic() == 4
    assert [integral_homology(T, k).betti for k in range(5)] == [1, 0, 2, 0, 1]
    assert orient(T).orientable


def test_barycentric_subdivision():
    cx, carrier = barycentric_subdivide(build_simplex(2))
    assert cx.f_vector() == [7, 12, 6]
    sd, _ = barycentric_subdivide(build_boundary_simplex(3))
    assert sd.count(2) == 24
    assert sd.euler_characteristic() == 2


def test_cone_and_suspension():
    base = build_boundary_simplex(3)
    c = cone(base)
    assert c.euler_characteristic() == 1
    s = suspension(base)
    assert s.euler_characteristic() == 0  # S^3
    assert s.dim == 3
    hi, lo = suspension_apexes(base)
    assert s.ranks[s.index_of_id(hi)] == s.ranks.max()
    assert s.ranks[s.index_of_id(lo)] == s.ranks.min()
    suspension_inclusion(base, s).validate()


@pytest.mark.parametrize("n,expected", [(2, ["Z", "Z/2", "0"]), (3, ["Z", "Z/2", "0", "Z"])])
def test_rp_n_homology(n, expected):
    cx = build_rp_n(n)
    assert cx.dim == n
    assert [str(integral_homology(cx, k)) for k in range(n + 1)] == [
        e if e != "Z" else "Z^1" for e in expected]


def test_simplify_preserves_homology():
    cx = build_rp_n(3)
    small = simplify_manifold(cx)
    assert small.count(0) < cx.count(0)
    for k in range(4):
        assert str(integral_homology(small, k)) == str(integral_homology(cx, k))


def test_prism_ends():
    cx = build_boundary_simplex(3)
    pr = prism(cx, cx)
    assert pr.complex.dim == 3
    pr.incl0.validate()
    pr.incl1.validate()
    assert pr.complex.euler_characteristic() == cx.euler_characteristic()


def test_map_validation_rejects_non_simplicial():
    src = build_simplex(1)
    tgt = build_boundary_simplex(2)
    SimplicialMap.from_ids(src, tgt, {0: 0, 1: 1}).validate()
    # the top face is missing from the boundary of the 2-simplex
    with pytest.raises(ComplexError):
        SimplicialMap.from_ids(build_simplex(2), tgt, {0: 0, 1: 1, 2: 2}).validate()


def test_orientation_of_non_orientable():
    assert not orient(build_rp_n(2)).orientable
    assert orient(build_rp_n(3)).orientable


def test_random_complex_respects_bound():
    rng = np.random.default_rng(3)
    for _ in range(5):
        cx = random_complex(rng, 10, 3, 5, max_simplices=500, low_facets=25)
        assert sum(cx.f_vector()) <= 500
        cx.validate()
