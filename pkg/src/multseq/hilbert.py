"""Multiplicity sequences of monomial ideals from the bivariate Hilbert polynomial.

For a monomial ideal I the bigraded pieces of gr_m(gr_I(R)) are

    G_ij = (m^i I^j + I^(j+1)) / (m^(i+1) I^j + I^(j+1)),

and their lengths are counts of monomials.  The double prefix sum h(m, n) of
these lengths agrees with a polynomial P(m, n) of total degree <= d for
m, n >> 0; c_i(I) = coeff(m^(d-i) n^i) * (d-i)! * i!.

Two routes compute the lengths:

* :func:`lambda_cell` uses ideal arithmetic.  Put N = m^i I^j + I^(j+1) and
  D = m^(i+1) I^j + I^(j+1).  Since m N is contained in D, a monomial of N
  that is a proper multiple of a minimal generator of N already lies in D, so
  the monomials of N \\ D are exactly the minimal generators of N outside D.
* :func:`lambda_table` sweeps each power I^j by total degree.  For u in I^j let
  ord_j(u) = |u| - min{|g| : g a minimal generator of I^j dividing u}; then u
  lies in m^i I^j exactly when ord_j(u) >= i, so lambda_ij counts the monomials
  of I^j \\ I^(j+1) with ord_j = i.  ord_j(u) is 0 on generators and otherwise
  1 + max ord_j over the predecessors u - e_k lying in I^j.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from . import _linalg
from .errors import (
    GridCapExceededError,
    InvalidFitError,
    ResourceCapError,
    SingularSystemError,
)
from .monomial import (
    MonomialIdeal,
    contains_monomial,
    maximal_ideal_power_times,
    power,
    product,
    require_proper,
    sum_ideals,
)

DEFAULT_GEN_CAP = 2_000_000
DEFAULT_GRID_CAP = 64


@dataclass(frozen=True)
class LambdaTable:
    """values[i][j] = length of G_ij for 0 <= i <= max_i, 0 <= j <= max_j."""

    ideal: MonomialIdeal
    max_i: int
    max_j: int
    values: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.values[i][j]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64).reshape(self.max_i + 1, self.max_j + 1)


@dataclass(frozen=True)
class BivariatePolynomial:
    """sum of coeffs[(a, b)] * m**a * n**b over a + b <= degree_bound."""

    degree_bound: int
    coeffs: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, b), c in self.coeffs.items():
            if a < 0 or b < 0 or a + b > self.degree_bound:
                raise ValueError(f"monomial m^{a} n^{b} exceeds degree bound {self.degree_bound}")
            c = Fraction(c)
            if c:
                clean[(a, b)] = c
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(clean.items()))))

    def __call__(self, m, n) -> Fraction:
        return sum((c * m**a * n**b for (a, b), c in self.coeffs.items()), Fraction(0))

    def coeff(self, a: int, b: int) -> Fraction:
        return self.coeffs.get((a, b), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(s for s in (_pow("m", a), _pow("n", b)) if s)
            terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms)


def _pow(x, e):
    return "" if e == 0 else x if e == 1 else f"{x}^{e}"


@dataclass(frozen=True)
class MultiplicitySequence:
    d: int
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.d + 1:
            raise ValueError(f"a multiplicity sequence in dimension {self.d} has {self.d + 1} entries")
        if any(not isinstance(x, int) or x < 0 for x in self.c):
            raise ValueError(f"multiplicities must be nonnegative integers, got {self.c}")

    def __getitem__(self, i: int) -> int:
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    def nonzero(self) -> Dict[int, int]:
        return {i: x for i, x in enumerate(self.c) if x}


# -- lengths of the bigraded pieces ------------------------------------------


def _check_cap(A: MonomialIdeal, gen_cap: int) -> MonomialIdeal:
    if len(A.gens) > gen_cap:
        raise ResourceCapError(f"intermediate ideal has {len(A.gens)} generators, cap is {gen_cap}")
    return A


def lambda_cell(A: MonomialIdeal, i: int, j: int, *, gen_cap: int = DEFAULT_GEN_CAP) -> int:
    """Length of G_ij via the minimal-generator lemma (see module docstring)."""
    require_proper(A, "lambda_cell")
    if i < 0 or j < 0:
        raise ValueError("cell indices must be nonnegative")
    Aj = _check_cap(power(A, j), gen_cap)
    Aj1 = _check_cap(product(Aj, A), gen_cap)
    N = _check_cap(sum_ideals(maximal_ideal_power_times(Aj, i), Aj1), gen_cap)
    D = _check_cap(sum_ideals(maximal_ideal_power_times(Aj, i + 1), Aj1), gen_cap)
    return sum(1 for g in N.gens if not contains_monomial(D, g))


class _Staircase:
    """O(1) membership test for a monomial ideal in a fixed number of variables.

    Stores, for every prefix (u_0, ..., u_{d-2}) inside the generators' bounding
    box, the least last exponent a monomial with that prefix needs to lie in
    the ideal.
    """

    def __init__(self, gens: np.ndarray, gen_cap: int):
        d = gens.shape[1]
        self.d = d
        big = np.iinfo(np.int64).max
        if d == 1:
            self.table = np.array(gens[:, 0].min())
            self.lim = np.zeros(0, dtype=np.int64)
            return
        self.lim = gens[:, : d - 1].max(axis=0)
        shape = tuple(int(x) + 1 for x in self.lim)
        if math.prod(shape) > gen_cap:
            raise ResourceCapError(f"membership table of size {math.prod(shape)} exceeds cap {gen_cap}")
        table = np.full(shape, big, dtype=np.int64)
        np.minimum.at(table, tuple(gens[:, : d - 1].T), gens[:, d - 1])
        for axis in range(d - 1):
            table = np.minimum.accumulate(table, axis=axis)
        self.table = table

    def contains(self, pts: np.ndarray) -> np.ndarray:
        if self.d == 1:
            return pts[:, 0] >= self.table
        idx = tuple(np.minimum(pts[:, k], self.lim[k]) for k in range(self.d - 1))
        return pts[:, self.d - 1] >= self.table[idx]


def _power_column(
    Gj: np.ndarray, Gj1: np.ndarray, max_i: int, gen_cap: int
) -> np.ndarray:
    """Lengths of G_ij for 0 <= i <= max_i, given generators of I^j and I^(j+1)."""
    d = Gj.shape[1]
    counts = np.zeros(max_i + 1, dtype=np.int64)
    in_j = _Staircase(Gj, gen_cap)
    in_j1 = _Staircase(Gj1, gen_cap)

    radix = Gj.max(axis=0) + max_i + 2
    if float(np.prod(radix.astype(float))) >= 2.0**62:
        raise ResourceCapError("monomial encoding for the degree sweep would overflow int64")
    strides = np.ones(d, dtype=np.int64)
    for k in range(d - 2, -1, -1):
        strides[k] = strides[k + 1] * radix[k + 1]
    eye = np.eye(d, dtype=np.int64)

    gdeg = Gj.sum(axis=1)
    gen_keys = Gj @ strides
    t = int(gdeg.min())
    t_last = int(gdeg.max())
    prev_keys = np.zeros(0, dtype=np.int64)
    prev_ord = np.zeros(0, dtype=np.int64)
    prev_pts = np.zeros((0, d), dtype=np.int64)

    while len(prev_keys) or t <= t_last:
        grow = prev_pts[prev_ord < max_i]
        cand = (grow[:, None, :] + eye[None, :, :]).reshape(-1, d)
        cand = np.concatenate([cand, Gj[gdeg == t]])
        keys, first = np.unique(cand @ strides, return_index=True)
        pts = cand[first]
        is_gen = np.isin(keys, gen_keys[gdeg == t])

        best = np.full(len(keys), -1, dtype=np.int64)
        blocked = np.zeros(len(keys), dtype=bool)
        for k in range(d):
            has = pts[:, k] > 0
            pk = keys - strides[k]
            pos = np.searchsorted(prev_keys, pk)
            pos_c = np.minimum(pos, max(len(prev_keys) - 1, 0))
            found = has & (pos < len(prev_keys))
            if len(prev_keys):
                found &= prev_keys[pos_c] == pk
            best = np.where(found, np.maximum(best, prev_ord[pos_c] if len(prev_keys) else -1), best)
            # a predecessor in I^j that was not kept has ord_j > max_i, so this one does too
            missing = has & ~found
            if missing.any():
                pm = pts[missing] - eye[k]
                hit = np.zeros(len(keys), dtype=bool)
                hit[np.flatnonzero(missing)] = in_j.contains(pm)
                blocked |= hit & ~is_gen

        order = np.where(is_gen, 0, best + 1)
        keep = ~blocked & (order <= max_i)
        prev_keys, prev_ord, prev_pts = keys[keep], order[keep], pts[keep]
        if len(keys) > gen_cap:
            raise ResourceCapError(f"degree sweep level holds {len(keys)} monomials, cap is {gen_cap}")
        outside = ~in_j1.contains(prev_pts)
        counts += np.bincount(prev_ord[outside], minlength=max_i + 1)
        t += 1
    return counts


def lambda_table(
    A: MonomialIdeal,
    max_i: int,
    max_j: int,
    *,
    gen_cap: int = DEFAULT_GEN_CAP,
    threads: int = 1,
) -> LambdaTable:
    """Grid of lengths of G_ij, one degree sweep per power I^j."""
    require_proper(A, "lambda_table")
    if max_i < 0 or max_j < 0:
        raise ValueError("grid bounds must be nonnegative")
    powers = [MonomialIdeal.unit(A.ring)]
    for _ in range(max_j + 1):
        powers.append(_check_cap(product(powers[-1], A), gen_cap))
    arrays = [P.as_array() for P in powers]

    def column(j):
        return _power_column(arrays[j], arrays[j + 1], max_i, gen_cap)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cols = list(pool.map(column, range(max_j + 1)))
    else:
        cols = [column(j) for j in range(max_j + 1)]
    grid = np.stack(cols, axis=1)
    values = tuple(tuple(int(x) for x in row) for row in grid)
    return LambdaTable(A, max_i, max_j, values)


def sum_transform(T: LambdaTable) -> Tuple[Tuple[int, ...], ...]:
    """h[m][n] = sum of T[i][j] over i <= m, j <= n."""
    h = [[0] * (T.max_j + 1) for _ in range(T.max_i + 1)]
    for m in range(T.max_i + 1):
        run = 0
        for n in range(T.max_j + 1):
            run += T.values[m][n]
            h[m][n] = run + (h[m - 1][n] if m else 0)
    return tuple(tuple(row) for row in h)


# -- interpolation ------------------------------------------------------------


def interpolation_nodes(D: int, m0: int, n0: int):
    """The triangular node set {(m0 + a, n0 + b) : a + b <= D}; unisolvent for degree <= D."""
    return [(m0 + a, n0 + b) for a in range(D + 1) for b in range(D + 1 - a)]


def fit_bivariate(h: Sequence[Sequence[int]], D: int, fit_window: Tuple[int, int, int, int]) -> BivariatePolynomial:
    """Interpolate h by a polynomial of total degree <= D.

    ``fit_window`` is (m0, n0, m1, n1), inclusive.  The nodes form the
    triangular pattern anchored at the window's top-right corner.  Raises
    :class:`SingularSystemError` if the window cannot hold the nodes.
    """
    m0, n0, m1, n1 = fit_window
    if m1 >= len(h) or n1 >= len(h[0]) or m0 < 0 or n0 < 0:
        raise ValueError(f"fit window {fit_window} is outside the grid")
    need = (D + 1) * (D + 2) // 2
    if (m1 - m0 + 1) * (n1 - n0 + 1) < need:
        raise ValueError(f"fit window holds fewer than {need} points")
    if m1 - m0 < D or n1 - n0 < D:
        raise SingularSystemError(f"window {fit_window} is too narrow for a triangular node set of degree {D}")
    nodes = [(m1 - a, n1 - b) for a, b in ((a, b) for a in range(D + 1) for b in range(D + 1 - a))]
    basis = [(a, b) for a in range(D + 1) for b in range(D + 1 - a)]
    rows = [[m**a * n**b for a, b in basis] for m, n in nodes]
    rhs = [h[m][n] for m, n in nodes]
    sol = _linalg.solve(rows, rhs)
    return BivariatePolynomial(D, dict(zip(basis, sol)))


def extract_coefficients(P: BivariatePolynomial, d: int) -> MultiplicitySequence:
    if P.degree_bound > d and any(a + b > d for a, b in P.coeffs):
        raise InvalidFitError(f"polynomial has total degree above {d}")
    c = []
    for i in range(d + 1):
        x = P.coeff(d - i, i) * math.factorial(d - i) * math.factorial(i)
        if x.denominator != 1:
            raise InvalidFitError(f"c_{i} = {x} is not an integer")
        if x < 0:
            raise InvalidFitError(f"c_{i} = {x} is negative")
        c.append(int(x))
    return MultiplicitySequence(d, tuple(c))


# -- driver -------------------------------------------------------------------

_CACHE: Dict[MonomialIdeal, Tuple[MultiplicitySequence, int]] = {}
_CACHE_LOCK = threading.Lock()


def _validate(h, P: BivariatePolynomial, m0: int, n0: int):
    bad = []
    for m in range(m0, len(h)):
        for n in range(n0, len(h[0])):
            if P(m, n) != h[m][n]:
                bad.append((m, n, h[m][n], P(m, n)))
    return bad


def multiplicity_sequence(
    A: MonomialIdeal,
    *,
    grid_cap: int = DEFAULT_GRID_CAP,
    gen_cap: int = DEFAULT_GEN_CAP,
    threads: int = 1,
) -> MultiplicitySequence:
    """c_0(A), ..., c_d(A), from an adaptively sized grid of lengths.

    The grid starts at (2d+4) x (2d+4).  P is interpolated on a triangular node
    set and must reproduce h on the whole square [g - 2d - 2, g]^2, which leaves
    d + 2 validation points past the nodes along each axis; on any mismatch the
    grid doubles.  Results are cached per ideal.
    """
    return multiplicity_sequence_with_grid(A, grid_cap=grid_cap, gen_cap=gen_cap, threads=threads)[0]


def multiplicity_sequence_with_grid(
    A: MonomialIdeal,
    *,
    grid_cap: int = DEFAULT_GRID_CAP,
    gen_cap: int = DEFAULT_GEN_CAP,
    threads: int = 1,
) -> Tuple[MultiplicitySequence, int]:
    """Like :func:`multiplicity_sequence` but also returns the grid size that succeeded."""
    require_proper(A, "multiplicity_sequence")
    with _CACHE_LOCK:
        hit = _CACHE.get(A)
    if hit is not None:
        return hit

    d = A.d
    side = 2 * d + 2
    g = 2 * d + 4
    failing: list = []
    reason = ""
    while True:
        if g > grid_cap:
            raise GridCapExceededError(
                f"no valid Hilbert polynomial fit up to grid {g // 2} (cap {grid_cap}): {reason}",
                last_grid=g // 2,
                failing_points=failing[:10],
                reason=reason,
            )
        T = lambda_table(A, g, g, gen_cap=gen_cap, threads=threads)
        h = sum_transform(T)
        corner = g - side
        try:
            P = fit_bivariate(h, d, (corner, corner, g, g))
        except SingularSystemError as exc:
            reason, failing = str(exc), []
        else:
            failing = _validate(h, P, corner, corner)
            if failing:
                reason = f"fit disagrees with h at {len(failing)} points"
            else:
                try:
                    seq = extract_coefficients(P, d)
                except InvalidFitError as exc:
                    reason = str(exc)
                else:
                    with _CACHE_LOCK:
                        _CACHE[A] = (seq, g)
                    return seq, g
        g *= 2


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def j_multiplicity(A: MonomialIdeal, **kwargs) -> int:
    """c_d(A), the j-multiplicity, read off the Hilbert-polynomial route."""
    return multiplicity_sequence(A, **kwargs)[A.d]
