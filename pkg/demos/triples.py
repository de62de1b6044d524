"""Triples (w, p, a): products, inverses, relations and the null decision."""
import numpy as np

from spin4 import QZ, Z2, Cochain, RelationPair, Triple, build_boundary_simplex, d_prime, in_kernel_D
from spin4 import is_null_triple, triple_inverse, triple_product
from spin4.builders import random_complex
from spin4.suites import random_kernel_triple

# on S^4 the class (1/8)[S^4] has order exactly 8
s4 = build_boundary_simplex(5)
w = Cochain(s4, 4, QZ, np.eye(s4.count(4), 1, dtype=np.int64)[:, 0], 8)
t = Triple(w, Cochain.zero(s4, 3, Z2), Cochain.zero(s4, 2, Z2))
powers, acc = [], t
for j in range(1, 9):
    powers.append(is_null_triple(acc)[0])
    acc = triple_product(acc, t)
print("(1/8)[S^4]^j null for j = 1..8:", powers)

rng = np.random.default_rng(1)
cx = random_complex(rng, 10, 3, 5, max_simplices=500, low_facets=25)
t1 = random_kernel_triple(cx, rng)
print("random kernel triple on", cx.f_vector(), "in Kernel(D):", in_kernel_D(t1))
print("t t^-1 null:", is_null_triple(triple_product(t1, triple_inverse(t1)))[0])
rel = d_prime(RelationPair(Cochain.random(cx, 2, Z2, rng), Cochain.random(cx, 1, Z2, rng)))
ok, wit = is_null_triple(rel)
print("D'(c, r) is null:", ok)
