"""The three S^2 x S^2 computations, with their Stokes bookkeeping."""
from spin4.repro import build_s2xs2, run_all

data = build_s2xs2()
print("T:", data.T.f_vector(), " prism:", data.prism.complex.f_vector())
for rep in run_all(data):
    print("\n".join(rep.lines()))
