"""Newton polyhedra: facets, reductions and integral closures.

Run with ``python demos/02_newton_polyhedron.py``.
"""
from multseq import (
    RingSpec,
    integral_closure,
    mon_analytic_spread,
    mon_j_mult,
    mon_reduction,
    newton_polyhedron,
    normalized_covolume,
    parse_ideal,
)

R = RingSpec(("x", "y"))

# (x^2, xy, y^2): the middle generator sits on the segment between the others
A = parse_ideal("x2,xy,y2", R)
P = newton_polyhedron(A)
print("vertices:", P.vertices)
for f in P.facets:
    print("  facet", f, "(bounded)" if f.is_bounded else "")
print("reduction:", mon_reduction(A))

# (x^3, y^3) is not integrally closed: x^2y and xy^2 lie on the bounded facet
B = parse_ideal("x3,y3", R)
print("closure of", B, "=", integral_closure(B))
print("e(B) =", normalized_covolume(B))

# a non m-primary ideal: one compact edge, so analytic spread 2
C = parse_ideal("x2,xy", R)
print("spread", C, "=", mon_analytic_spread(C), " j =", mon_j_mult(C))

# three variables
S = RingSpec(("x", "y", "z"))
D = parse_ideal("xy2,y3z,x2z2", S)
print("NP of", D, "has", len(newton_polyhedron(D).facets), "facets; j =", mon_j_mult(D))
