"""cup_i products on the 6-simplex: the coboundary formula and Sq^i."""
import numpy as np

from spin4 import Z, Z2, Cochain, build_simplex, coboundary, cup, cup_i, sq

cx = build_simplex(6)
rng = np.random.default_rng(0)
x, y = Cochain.random(cx, 2, Z, rng), Cochain.random(cx, 2, Z, rng)
for i in range(3):
    rhs = (-1) ** i * (cup_i(coboundary(x), y, i) + cup_i(x, coboundary(y), i)
                       - cup_i(x, y, i - 1) - (-1) ** i * cup_i(y, x, i - 1))
    print(f"d(x u_{i} y) formula holds:", coboundary(cup_i(x, y, i)) == rhs)

a = coboundary(Cochain.random(cx, 1, Z2, rng))
print("Sq^2 a = a^2 on a cocycle:", sq(a, 2) == cup(a, a))
print("Sq^0 a = a:", sq(a, 0) == a)
