"""Invariants of I = (ab^2, bc^3, cd^4, da^5) in k[a, b, c, d].

Run with ``python demos/01_timing_session.py``.
"""
import time

from multseq import (
    RingSpec,
    j_multiplicity,
    mon_analytic_spread,
    mon_j_mult,
    multiplicity_sequence,
    parse_ideal,
    power,
)

R = RingSpec.from_string("a..d")
I = parse_ideal("ab2,bc3,cd4,da5", R)
print("I =", I)

# j-multiplicity of I^3 from the Newton polyhedron
t = time.perf_counter()
print("monjMult I^3      =", mon_j_mult(power(I, 3)), f"({time.perf_counter() - t:.3f}s)")

# analytic spread of I^5 from the compact faces of NP(I^5)
t = time.perf_counter()
print("monAnalyticSpread =", mon_analytic_spread(power(I, 5)), f"({time.perf_counter() - t:.3f}s)")

# NP(I^k) = k NP(I), so j(I^k) = k^4 j(I)
print("monjMult I        =", mon_j_mult(I))

# The same number from the bigraded Hilbert polynomial (slower: the driver
# grows the grid of lengths until a degree-4 fit validates).
t = time.perf_counter()
seq = multiplicity_sequence(I)
print("multiplicity seq  =", seq.nonzero(), f"({time.perf_counter() - t:.1f}s)")
print("jMult I           =", j_multiplicity(I))
