"""Natural operations x, x_M, y4, z_M and the two derivation algorithms."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spin4.builders import build_simplex, random_complex
from spin4.cochain import Z2, Cochain, CochainError, all_cochains, all_cocycles, coboundary
from spin4.cup import cup, cup_i, sq
from spin4.natural_ops import (PAIR, SINGLE, X_FORMULA, X_MEDINA, Y4_FORMULA, Z_MEDINA, Z_MEDINA_NINE_TERM,
                               check_side_conditions, d_formula_poly, delta_medina, delta_terms, derive_via_cone,
                               discover_y4, dy4_target_poly, formula_of, formula_poly, is_natural_coboundary,
                               natural_coboundary_witness, universal_args, x_medina, x_op, x_op_via_cup, y4_formula, z_medina,
                               z_op)
from spin4.symbolic import FaceEvalFormula, padd

seeds = st.integers(0, 2 ** 32 - 1)
FREE1 = (("free", 1),)


def _dx_target(a):
    aa, a1a = cup(a, a), cup_i(a, a, 1)
    return cup_i(aa, aa, 2) + cup(a1a, a1a)


def test_x_two_routes_agree():
    a = all_cocycles(build_simplex(5), 2)
    assert x_op(a) == x_op_via_cup(a)


def test_x_symbolic_formula_matches_numeric():
    # the cup_i route and the face table agree as polynomials on the universal simplex
    (a,), _ = universal_args(5, SINGLE)
    assert x_op_via_cup(a).top() == formula_poly(X_FORMULA, SINGLE)
    assert x_op_via_cup(a).top() != formula_poly(X_MEDINA, SINGLE)
    assert len(X_MEDINA) == 1 and len(X_FORMULA) == 3


@pytest.mark.parametrize("op", [x_op, x_medina])
def test_dx_exhaustive_delta5(op):
    a = all_cocycles(build_simplex(5), 2)
    assert a.values.shape[1] == 1024
    assert coboundary(op(a)) == _dx_target(a)


def test_x_of_dr_exhaustive_delta4():
    r = all_cochains(build_simplex(4), 1)
    dr = coboundary(r)
    rhs = sq(cup(r, dr), 2) + cup(sq(r, 1), sq(dr, 1)) + coboundary(z_op(r))
    assert x_op(dr) == rhs
    assert coboundary(z_medina(r)) == delta_medina(r)


def test_nine_term_zm_misses_one_term():
    # the nine-term variant is off by d(r(12)r(23)r(34)), and that term is not natural-closed
    r = all_cochains(build_simplex(5), 1)
    nine = FaceEvalFormula.evaluate(Z_MEDINA_NINE_TERM, r)
    missing = FaceEvalFormula.parse("r(12)r(23)r(34)", 4, "r")
    assert coboundary(nine) != delta_medina(r)
    assert coboundary(nine) + coboundary(missing.evaluate(r)) == delta_medina(r)
    assert d_formula_poly(missing, FREE1)


def test_cone_algorithm_recovers_zm():
    target = formula_of(delta_medina, 5, FREE1, "r")
    assert not d_formula_poly(target, FREE1)
    assert derive_via_cone(target) == Z_MEDINA


def test_cone_algorithm_rejects_non_cocycles():
    with pytest.raises(CochainError):
        derive_via_cone(FaceEvalFormula.parse("r(01)r(12)", 2, "r"))


def test_y4_table_shape():
    assert len(Y4_FORMULA) == 174
    assert Y4_FORMULA.degree == 4 and Y4_FORMULA.arity == 2
    assert FaceEvalFormula.from_json(Y4_FORMULA.to_json()) == Y4_FORMULA


def test_y4_solves_the_equation_symbolically():
    target, _ = dy4_target_poly()
    assert d_formula_poly(Y4_FORMULA, PAIR) == target


@settings(max_examples=20, deadline=None)
@given(seed=seeds)
def test_dy4_on_random_complexes(seed):
    rng = np.random.default_rng(seed)
    cx = random_complex(rng, 9, 6, 5)
    from spin4.suites import random_cocycle
    a, b = random_cocycle(cx, 2, rng), random_cocycle(cx, 2, rng)
    big, small = delta_terms(a, b)
    assert coboundary(y4_formula(a, b)) == big + small


def test_side_conditions_hold():
    assert all(check_side_conditions().values())


def test_side_condition_witness_verifies():
    single_poly = formula_poly(Y4_FORMULA, PAIR)
    from spin4.natural_ops import _side_targets
    for name, target in _side_targets(single_poly, False).items():
        w = natural_coboundary_witness(target, 4, SINGLE)
        assert w is not None, name
        assert d_formula_poly(w, SINGLE) == target


def test_tabulated_y4_is_not_normalized_but_x_and_zm_are():
    # the tabulated formula keeps monomials such as a(014)b(014) that survive a degeneracy
    assert not Y4_FORMULA.vanishes_on_degenerate()
    assert X_FORMULA.vanishes_on_degenerate() and X_MEDINA.vanishes_on_degenerate()
    assert Z_MEDINA.vanishes_on_degenerate(cocycle_args=False)


def test_discover_y4():
    found = discover_y4(True)
    assert found is not None
    assert found.vanishes_on_degenerate()
    target, _ = dy4_target_poly()
    assert d_formula_poly(found, PAIR) == target
    assert all(check_side_conditions(found).values())
    assert is_natural_coboundary(padd(formula_poly(found, PAIR), formula_poly(Y4_FORMULA, PAIR)), 4, PAIR)


def test_discover_y4_flipped_differs_by_ab():
    flipped = discover_y4("flipped")
    assert flipped is not None
    y4p = formula_poly(Y4_FORMULA, PAIR)
    ab = formula_poly(FaceEvalFormula.parse("a(012)b(234)", 4, "ab"), PAIR)
    diff = padd(formula_poly(flipped, PAIR), y4p)
    assert is_natural_coboundary(padd(diff, ab), 4, PAIR)
    assert not is_natural_coboundary(diff, 4, PAIR)


def test_operations_require_cocycles():
    cx = build_simplex(5)
    r = Cochain(cx, 2, Z2, np.eye(cx.count(2), 1, dtype=np.int64)[:, 0])
    with pytest.raises(CochainError):
        x_op(r)
    with pytest.raises(CochainError):
        y4_formula(r, r)
