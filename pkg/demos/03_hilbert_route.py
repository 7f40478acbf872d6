"""The bivariate Hilbert polynomial, one step at a time.

Run with ``python demos/03_hilbert_route.py``.
"""
import numpy as np

from multseq import (
    RingSpec,
    extract_coefficients,
    fit_bivariate,
    lambda_table,
    mon_j_mult,
    multiplicity_sequence,
    parse_ideal,
    sum_transform,
)
from multseq.oracle import brute_lambda

R = RingSpec(("x", "y"))
A = parse_ideal("x2,xy", R)

# lengths of the bigraded pieces G_ij, rows i, columns j
T = lambda_table(A, 6, 6)
print(T.as_array())

# spot-check one cell against direct monomial counting
print("brute force lambda[1, 3] =", brute_lambda(A, 1, 3), "table:", T[1, 3])

# double prefix sums h(m, n) and the interpolating polynomial
h = sum_transform(T)
print(np.array(h))
P = fit_bivariate(h, 2, (2, 2, 6, 6))
print("P(m, n) =", P)
print("c =", extract_coefficients(P, 2).c)

# the adaptive driver does all of the above and validates the fit
S = RingSpec(("x", "y", "z"))
B = parse_ideal("xy2,y3z,x2z2", S)
seq = multiplicity_sequence(B)
print(B, "->", seq.c, "; c_3 agrees with the polyhedral j-multiplicity:", seq[3] == mon_j_mult(B))
