"""Acceptance criteria.  Each test prints one PASS/FAIL line, visible even
under output capture, and then asserts."""
import time
from fractions import Fraction

import numpy as np
import pytest

from spin4.builders import build_simplex
from spin4.cochain import all_cochains, all_cocycles, coboundary
from spin4.cup import cup, cup_i, sq
from spin4.natural_ops import x_op, z_op
from spin4.repro import key_result_1, key_result_2, key_result_3
from spin4.suites import verify_suite


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else ""))
        return ok
    return emit


def _counts(rep, *keys):
    """(passed, total) for each named property; raises if a property is missing."""
    return {k: (rep.values[k], rep.expected[k]) for k in keys}


def _all_pass(counts, minimum=None):
    minimum = minimum or {}
    return all(p == t and t >= minimum.get(k, 1) for k, (p, t) in counts.items())


def test_criterion_01_exhaustive_lift_identities(report):
    rep = verify_suite("lifts", trials=500, seed=2024)
    c = _counts(rep, "dA = 2A^2 (all 1-cocycles, Delta^3)", "dB = 2B u_1 B (all 2-cocycles, Delta^4)",
                "(1/4)dR = (1/4)Dr + (1/2)Sq^1 r (all 1-cochains, Delta^2)",
                "d((1/8)[A^2 + 2A u_1(A u_1 A)]) identity (all 2-cocycles, Delta^5)",
                "d((1/8)[A^2 + 2A u_1(A u_1 A)]) identity (random complexes)")
    sizes = {"dA = 2A^2 (all 1-cocycles, Delta^3)": 8, "dB = 2B u_1 B (all 2-cocycles, Delta^4)": 64,
             "(1/4)dR = (1/4)Dr + (1/2)Sq^1 r (all 1-cochains, Delta^2)": 8,
             "d((1/8)[A^2 + 2A u_1(A u_1 A)]) identity (all 2-cocycles, Delta^5)": 1024}
    # every one of the 64 2-cocycles on the face 01234 occurs among the Delta^5 cocycles
    s5 = build_simplex(5)
    a5 = all_cocycles(s5, 2)
    face = [j for j in range(s5.count(2)) if 5 not in s5.simplex_ids(2, j)]
    restricted = {tuple(col) for col in a5.values[face].T}
    ok = _all_pass(c) and all(c[k][1] == n for k, n in sizes.items()) and len(restricted) == 64
    report("criterion 1: exhaustive lift identities", ok,
           ", ".join(f"{p}/{t}" for p, t in c.values()) + f"; Z^2(Delta^4) covered {len(restricted)}/64")
    assert ok


def test_criterion_02_x_and_x_of_dr(report):
    a = all_cocycles(build_simplex(5), 2)
    aa, a1a = cup(a, a), cup_i(a, a, 1)
    lhs, rhs = coboundary(x_op(a)).values, (cup_i(aa, aa, 2) + cup(a1a, a1a)).values
    ok_dx = ~np.any(lhs != rhs, axis=0)
    r = all_cochains(build_simplex(4), 1)
    dr = coboundary(r)
    lhs2 = x_op(dr).values
    rhs2 = (sq(cup(r, dr), 2) + cup(sq(r, 1), sq(dr, 1)) + coboundary(z_op(r))).values
    ok_xdr = ~np.any(lhs2 != rhs2, axis=0)
    ok = ok_dx.size == 1024 and ok_dx.all() and ok_xdr.size == 1024 and ok_xdr.all()
    report("criterion 2: dx(a) and x(dr) exhaustive", ok,
           f"dx {int(ok_dx.sum())}/{ok_dx.size}, x(dr) {int(ok_xdr.sum())}/{ok_xdr.size}")
    assert ok


def test_criterion_03_dy4_random_pairs(report):
    t0 = time.time()
    rep = verify_suite("natural-ops", trials=100_000, seed=2024, discover=False)
    c = _counts(rep, "dy4 = Delta x + delta x (random pairs, Delta^5)",
                "dy4 = Delta x + delta x (random pairs, random 5-complexes)",
                "side condition y4(a,0) decided a coboundary (all 2-cocycles, Delta^4)",
                "side condition y4(0,b) decided a coboundary (all 2-cocycles, Delta^4)",
                "side condition y4(a,a)+a u_1(a u_1 a)+a^2 decided a coboundary (all 2-cocycles, Delta^4)")
    ok = rep.passed and _all_pass(c, {"dy4 = Delta x + delta x (random pairs, Delta^5)": 100_000,
                                      "dy4 = Delta x + delta x (random pairs, random 5-complexes)": 1000})
    report("criterion 3: dy4 = Delta x + delta x", ok,
           ", ".join(f"{p}/{t}" for p, t in c.values()) + f" ({time.time() - t0:.1f}s)")
    assert ok


def test_criterion_04_discover_y4(report):
    rep = verify_suite("natural-ops", trials=0, seed=0)
    keys = ["discover_y4 is feasible", "discovered y4 vanishes on degenerate simplices",
            "discovered y4 differs from the formula by a natural coboundary",
            "discover_y4 (flipped side condition) is feasible",
            "flipped y4 differs from the formula by ab plus a natural coboundary",
            "flipped y4 does not differ from the formula by a natural coboundary alone"]
    ok = all(rep.checks.get(k, False) for k in keys)
    report("criterion 4: discover_y4", ok, ", ".join(k for k in keys if not rep.checks.get(k, False)))
    assert ok


def test_criterion_05_key_result_1(report, s2xs2):
    rep = key_result_1(s2xs2)
    ok = (rep.passed and s2xs2.T.count(4) == 11520 and rep.values["int y4(a1,a2) mod 2"] == 0
          and rep.values["int first coordinate"] == Fraction(1, 8) and rep.wall_time < 300)
    report("criterion 5: key result 1", ok,
           f"int y4 = {rep.values['int y4(a1,a2) mod 2']}, first coordinate = {rep.values['int first coordinate']}"
           f" on {s2xs2.T.count(4)} simplices ({rep.wall_time:.1f}s)")
    assert ok


def test_criterion_06_key_result_2(report, s2xs2):
    rep = key_result_2(s2xs2)
    ends = ["a~ = a1 + a2 on T x 0", "a~ = c on T' x 1", "p~ = a1 u_1 a2 on T x 0", "p~ = 0 on T' x 1"]
    diffs = ["d a~ = 0", "d p~ = a~^2"]
    ok = (rep.passed and s2xs2.prism.complex.count(5) == 57600
          and all(rep.checks[k] for k in ends + diffs) and rep.wall_time < 1800)
    report("criterion 6: key result 2", ok,
           f"{sum(rep.checks[k] for k in ends)}/4 end restrictions, {sum(rep.checks[k] for k in diffs)}/2"
           f" differential constraints on {s2xs2.prism.complex.count(5)} simplices ({rep.wall_time:.1f}s)")
    assert ok


def test_criterion_07_key_result_3(report, s2xs2):
    rep = key_result_3(s2xs2)
    claim = rep.values["CLAIM evaluation of (0,0,c)"]
    end = rep.values["int w on T' end"]
    ok = (rep.passed and rep.values["prism integral of k"] == 0
          and end == Fraction(1, 8) and claim == Fraction(-1, 8) % 1)
    report("criterion 7: key result 3", ok,
           f"prism integral {rep.values['prism integral of k']}, T' end {end}, "
           f"CLAIM {claim} = -1/8 in Q/Z")
    assert ok


def test_criterion_08_group_laws(report):
    rep = verify_suite("group-laws", trials=200, seed=2024)
    n = rep.expected.get("kernel triples generated", 0)
    ok = rep.passed and n >= 200
    report("criterion 8: group laws", ok,
           f"{n} random kernel triples, {sum(rep.checks.values())}/{len(rep.checks)} properties")
    assert ok


def test_criterion_09_suspension(report):
    rep = verify_suite("suspension", trials=1000, seed=2024)
    c = _counts(rep, "s(x u_i y) = (-1)^(|x|+i+1) sx u_(i+1) sy", "D o suspend_triple = 0",
                "s(t1 t2) and s(t1) s(t2) differ by a null triple")
    ok = rep.passed and _all_pass(c, {"s(x u_i y) = (-1)^(|x|+i+1) sx u_(i+1) sy": 1000,
                                      "s(t1 t2) and s(t1) s(t2) differ by a null triple": 50})
    report("criterion 9: suspension", ok, ", ".join(f"{p}/{t}" for p, t in c.values()))
    assert ok


def test_criterion_10_filtration(report):
    rep = verify_suite("filtration", trials=3, seed=2024, max_n=5)
    v4, v5 = rep.values.get("sigma_rp4"), rep.values.get("sigma_rp5")
    expected = {"ssh2_dim": 1, "sh3_dim": 1, "qh4_order": 2, "e2_rank": 1, "e1_nonzero": [True]}
    if v4 is None or v5 is None:
        report("criterion 10: filtration on suspended RP^4 (cross-checked on RP^5)", False, "missing values")
        pytest.fail("filtration values missing")
    ok = rep.passed and v4 == expected and v5 == v4
    report("criterion 10: filtration on suspended RP^4 (cross-checked on RP^5)", ok,
           f"ssh2 {v4['ssh2_dim']}, sh3 {v4['sh3_dim']}, |QH^4| {v4['qh4_order']}, e rank {v4['e2_rank']}, "
           f"Sq^2 on H^3 nonzero {v4['e1_nonzero']}; identical on RP^5: {v5 == v4} ({rep.wall_time:.0f}s)")
    assert ok
