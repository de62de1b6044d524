"""The operations x and y4, and the GF(2) search that rediscovers y4."""
from spin4.builders import build_simplex
from spin4.cochain import all_cocycles, coboundary
from spin4.cup import cup, cup_i
from spin4.natural_ops import PAIR, Y4_FORMULA, discover_y4, formula_poly, is_natural_coboundary, x_op
from spin4.symbolic import padd

a = all_cocycles(build_simplex(5), 2)
aa, a1a = cup(a, a), cup_i(a, a, 1)
print("dx(a) = a^2 u_2 a^2 + (a u_1 a)^2 on all", a.values.shape[1], "2-cocycles of Delta^5:",
      coboundary(x_op(a)) == cup_i(aa, aa, 2) + cup(a1a, a1a))

found = discover_y4()
print("discovered y4:", len(found), "terms, normalized:", found.vanishes_on_degenerate())
print("tabulated y4:", len(Y4_FORMULA), "terms")
print("they differ by a natural coboundary:",
      is_natural_coboundary(padd(formula_poly(found, PAIR), formula_poly(Y4_FORMULA, PAIR)), 4, PAIR))
