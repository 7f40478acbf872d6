"""Brute-force reference computations used only to validate the main routes.

Nothing here shares code with the degree sweep in :mod:`multseq.hilbert` or the
polyhedral kernels in :mod:`multseq.newton`; the oracles count monomials
directly and may be exponentially slower.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InconclusiveError, ResourceCapError
from .monomial import (
    MonomialIdeal,
    maximal_ideal_power_times,
    power,
    product,
    require_proper,
    sum_ideals,
)

DEFAULT_ENUM_CAP = 5_000_000


def _monomials_up_to(d: int, max_degree: int, box, cap: int) -> np.ndarray:
    """Every exponent vector with total degree <= max_degree inside the box [0, box]."""
    box = [min(int(b), max_degree) for b in box]
    size = math.prod(b + 1 for b in box)
    if size > cap:
        raise ResourceCapError(f"brute-force enumeration of {size} monomials exceeds cap {cap}")
    pts = np.indices([b + 1 for b in box]).reshape(d, -1).T
    return pts[pts.sum(axis=1) <= max_degree]


def _member(pts: np.ndarray, A: MonomialIdeal) -> np.ndarray:
    out = np.zeros(len(pts), dtype=bool)
    if A.is_zero:
        return out
    G = A.as_array()
    for lo in range(0, len(G), 256):
        g = G[lo:lo + 256]
        out |= (pts[:, None, :] >= g[None, :, :]).all(axis=2).any(axis=1)
    return out


def brute_lambda(A: MonomialIdeal, i: int, j: int, *, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Length of G_ij by listing every monomial up to the top generator degree of N."""
    require_proper(A, "brute_lambda")
    Aj = power(A, j)
    Aj1 = product(Aj, A)
    N = sum_ideals(maximal_ideal_power_times(Aj, i), Aj1)
    D = sum_ideals(maximal_ideal_power_times(Aj, i + 1), Aj1)
    # monomials of N \ D are minimal generators of N, so they sit below N's lcm
    G = N.as_array()
    pts = _monomials_up_to(A.d, N.max_degree(), G.max(axis=0), cap)
    total = 0
    for lo in range(0, len(pts), 20000):
        chunk = pts[lo:lo + 20000]
        total += int((_member(chunk, N) & ~_member(chunk, D)).sum())
    return total


def minimal_generator_counts(A: MonomialIdeal, n_max: int):
    """mu(A^n) for n = 1..n_max."""
    out = []
    P = MonomialIdeal.unit(A.ring)
    for _ in range(n_max):
        P = product(P, A)
        out.append(len(P.gens))
    return out


def mu_growth_spread(A: MonomialIdeal, n_max: int) -> int:
    """Analytic spread read off the polynomial growth of mu(A^n)."""
    require_proper(A, "mu_growth_spread")
    if n_max < A.d + 3:
        raise ValueError(f"n_max must be at least d + 3 = {A.d + 3}")
    mu = minimal_generator_counts(A, n_max)
    return growth_degree(mu[-max(A.d + 3, n_max // 2):], A.d - 1) + 1


def growth_degree(values, max_degree: int) -> int:
    """Smallest e <= max_degree whose e-th finite differences of ``values`` are constant."""
    for e in range(max_degree + 1):
        diffs = list(values)
        for _ in range(e):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        if len(diffs) >= 2 and len(set(diffs)) == 1:
            return e
    raise InconclusiveError(f"no polynomial growth of degree <= {max_degree} in {list(values)}")


def standard_monomial_count(A: MonomialIdeal, degree_cap: int, *, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of monomials of degree <= degree_cap outside A."""
    require_proper(A, "standard_monomial_count")
    pts = _monomials_up_to(A.d, degree_cap, [degree_cap] * A.d, cap)
    return int((~_member(pts, A)).sum())


def brute_power(A: MonomialIdeal, k: int) -> MonomialIdeal:
    """A**k by k sequential multiplications."""
    result = MonomialIdeal.unit(A.ring)
    for _ in range(k):
        result = product(result, A)
    return result
