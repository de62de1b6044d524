"""Exact simplicial cochain computations: cup_i products, natural Z/2
operations, and the group of triples (w, p, a) with its filtration."""
from .builders import (barycentric_subdivide, build_boundary_simplex, build_rp_n, build_simplex, cone, prism,
                       product_triangulation, suspension)
from .cochain import QZ, Z, Z2, Cochain, Ring, coboundary, integrate, pullback
from .complex import OrderedComplex, SimplicialMap, Subcomplex, orient
from .cup import cup, cup_i, sq, suspend_cochain
from .g4 import (RelationPair, Triple, basic_equation_D, d_prime, extension_invariants, filtration_quotients,
                 in_kernel_D, is_null_triple, triple_inverse, triple_product)
from .natural_ops import discover_y4, x_medina, x_op, y4_formula, z_medina, z_op
from .suites import verify_suite

__version__ = "0.1.0"
