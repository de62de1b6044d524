"""The S^2 x S^2 pipeline: triangulations, generators, the prism extension."""
from fractions import Fraction

import numpy as np

from spin4.cochain import Z2, coboundary, integrate, mod2, pullback, transport
from spin4.cup import cup
from spin4.linalg import cohomology_rank, is_coboundary
from spin4.repro import (build_s2xs2, diagonal_cocycle, generator_lifts, key_result_1, key_result_2,
                         key_result_3, prism_extension)


def test_triangulation_sizes(s2xs2):
    assert s2xs2.T.count(4) == 11520
    assert s2xs2.prism.complex.count(5) == 57600
    assert s2xs2.T.same_as(s2xs2.T) and s2xs2.Tp.f_vector() == s2xs2.T.f_vector()
    assert s2xs2.T.euler_characteristic() == 4


def test_generators_are_dual(s2xs2):
    A1, A2 = generator_lifts(s2xs2)
    fc = s2xs2.fc
    assert integrate(cup(A1, A2), fc) == 1
    assert integrate(cup(A2, A1), fc) == 1
    assert integrate(cup(A1, A1), fc) == 0
    assert cohomology_rank(s2xs2.T, 2) == 2


def test_diagonal_cocycle_is_the_diagonal_class(s2xs2):
    A1, A2 = generator_lifts(s2xs2)
    c = diagonal_cocycle(s2xs2)
    assert coboundary(c).is_zero() and cup(c, c).is_zero()
    assert is_coboundary(c + transport(mod2(A1) + mod2(A2), s2xs2.Tp))[0]


def test_prism_extension_restrictions(s2xs2):
    ext = prism_extension(s2xs2)
    pr = s2xs2.prism
    A1, A2 = generator_lifts(s2xs2)
    assert pullback(pr.incl0, ext.a) == mod2(A1) + mod2(A2)
    assert pullback(pr.incl1, ext.a) == ext.c
    assert coboundary(ext.p) == cup(ext.a, ext.a)


def test_key_results(s2xs2):
    k1, k2, k3 = key_result_1(s2xs2), key_result_2(s2xs2), key_result_3(s2xs2)
    assert k1.passed and k2.passed and k3.passed
    assert k1.values["int first coordinate"] == Fraction(1, 8)
    assert k1.values["int first coordinate, alternate product"] == Fraction(5, 8)
    assert k3.values["CLAIM evaluation of (0,0,c)"] == Fraction(-1, 8) % 1


def test_cache_round_trip(tmp_path):
    fresh = build_s2xs2(str(tmp_path))
    assert (tmp_path / "s2xs2-T.json").exists()
    from spin4 import repro
    repro._CACHE.pop(str(tmp_path))
    again = build_s2xs2(str(tmp_path))
    assert again.T.same_as(fresh.T) and again.Tp.same_as(fresh.Tp)
