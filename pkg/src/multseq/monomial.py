"""Monomials and monomial ideals in a polynomial ring k[x_1, ..., x_d].

A monomial is identified with its exponent vector, a plain tuple of
nonnegative ints.  A monomial ideal is identified with its antichain of
minimal generators, stored in a canonical order so that structural equality
is ideal equality.  The coefficient field is never modelled: every quantity
computed downstream is a count of monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Tuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    ExponentOverflowError,
    ImproperIdealError,
    RingMismatchError,
)

ExponentVector = Tuple[int, ...]

#: Largest exponent any operation may produce.  Kept well inside int64 so the
#: vectorised routines in :mod:`multseq.hilbert` can encode monomials safely.
EXPONENT_LIMIT = 2**62


@dataclass(frozen=True)
class RingSpec:
    """The ambient polynomial ring, described by its ordered variable names."""

    var_names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be non-empty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def d(self) -> int:
        return len(self.var_names)

    @classmethod
    def from_string(cls, spec: str) -> "RingSpec":
        """Build a ring from ``"x,y,z"`` or ``"a..e"``."""
        spec = spec.strip()
        if ".." in spec and "," not in spec:
            lo, hi = (s.strip() for s in spec.split(".."))
            if len(lo) != 1 or len(hi) != 1 or ord(hi) < ord(lo):
                raise ValueError(f"bad variable range {spec!r}")
            return cls(tuple(chr(c) for c in range(ord(lo), ord(hi) + 1)))
        return cls(tuple(v.strip() for v in spec.split(",")))

    @classmethod
    def standard(cls, d: int) -> "RingSpec":
        """x_1..x_d, or x,y,z,w style names for d <= 4."""
        if d <= 3:
            return cls(tuple("xyz"[:d]))
        if d == 4:
            return cls(("a", "b", "c", "d"))
        return cls(tuple(f"x{k}" for k in range(1, d + 1)))


def _canonical_key(v: ExponentVector):
    # graded lex: lower degree first, then larger exponents of earlier variables first
    return (sum(v), tuple(-e for e in v))


def _check_point(v, d: int) -> ExponentVector:
    v = tuple(int(e) for e in v)
    if len(v) != d:
        raise DimensionMismatchError(f"exponent vector {v} has length {len(v)}, expected {d}")
    if any(e < 0 for e in v):
        raise ValueError(f"negative exponent in {v}")
    if any(e > EXPONENT_LIMIT for e in v):
        raise ExponentOverflowError(f"exponent in {v} exceeds {EXPONENT_LIMIT}")
    return v


def divides(u: ExponentVector, v: ExponentVector) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _minimal_elements(points: Sequence[ExponentVector], d: int) -> list:
    pts = sorted(set(points), key=_canonical_key)
    if len(pts) < 64 or max(max(p, default=0) for p in pts) * d >= 2**62:
        kept = []
        for p in pts:
            if not any(divides(g, p) for g in kept):
                kept.append(p)
        return kept
    # Vectorised: a point can only be divided by points of strictly smaller
    # degree (equal-degree divisors are equal and were deduplicated).
    arr = np.array(pts, dtype=np.int64).reshape(len(pts), d)
    degs = arr.sum(axis=1)
    kept = np.empty((0, d), dtype=np.int64)
    start = 0
    while start < len(pts):
        stop = int(np.searchsorted(degs, degs[start], side="right"))
        block = arr[start:stop]
        if len(kept):
            alive = np.ones(len(block), dtype=bool)
            for lo in range(0, len(kept), 4096):
                chunk = kept[lo:lo + 4096]
                hit = (chunk[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
                alive &= ~hit
            block = block[alive]
        kept = np.concatenate([kept, block])
        start = stop
    return [tuple(int(e) for e in row) for row in kept]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators in canonical order.

    Build instances with :func:`minimalize` (or :meth:`from_generators`);
    the constructor trusts its input.
    """

    ring: RingSpec
    gens: Tuple[ExponentVector, ...]

    @classmethod
    def from_generators(cls, ring: RingSpec, points: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimalize(points, ring)

    @classmethod
    def zero(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ((0,) * ring.d,))

    @classmethod
    def maximal(cls, ring: RingSpec) -> "MonomialIdeal":
        return minimalize(_unit_vectors(ring.d), ring)

    @property
    def d(self) -> int:
        return self.ring.d

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.d,)

    @property
    def is_proper_nonzero(self) -> bool:
        return not (self.is_zero or self.is_unit)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, v) -> bool:
        return contains_monomial(self, v)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return sum_ideals(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def as_array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.d)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __str__(self) -> str:
        from .parsing import render_ideal

        return render_ideal(self)


def _unit_vectors(d: int):
    return [tuple(int(k == l) for l in range(d)) for k in range(d)]


def require_proper(A: MonomialIdeal, what: str = "this operation") -> None:
    if A.is_zero:
        raise ImproperIdealError(f"{what} needs a nonzero ideal; got the zero ideal")
    if A.is_unit:
        raise ImproperIdealError(f"{what} needs a proper ideal; got the unit ideal")


def _same_ring(A: MonomialIdeal, B: MonomialIdeal) -> None:
    if A.ring != B.ring:
        raise RingMismatchError(f"ideals live in different rings: {A.ring.var_names} vs {B.ring.var_names}")


def minimalize(points: Iterable[Sequence[int]], ring: RingSpec) -> MonomialIdeal:
    """The monomial ideal generated by ``points``, minimally generated."""
    d = ring.d
    pts = [_check_point(p, d) for p in points]
    return MonomialIdeal(ring, tuple(_minimal_elements(pts, d)))


def sum_ideals(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _same_ring(A, B)
    return MonomialIdeal(A.ring, tuple(_minimal_elements(A.gens + B.gens, A.d)))


def _checked_add(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    w = tuple(a + b for a, b in zip(u, v))
    if any(e > EXPONENT_LIMIT for e in w):
        raise ExponentOverflowError(f"exponent overflow multiplying {u} by {v}")
    return w


def product(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _same_ring(A, B)
    if A.is_zero or B.is_zero:
        return MonomialIdeal.zero(A.ring)
    pts = {_checked_add(u, v) for u in A.gens for v in B.gens}
    return MonomialIdeal(A.ring, tuple(_minimal_elements(list(pts), A.d)))


def power(A: MonomialIdeal, k: int) -> MonomialIdeal:
    """A**k by repeated squaring, minimalizing after every product."""
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    result = MonomialIdeal.unit(A.ring)
    base = A
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def exponents_of_degree(d: int, i: int):
    """All exponent vectors in d variables with total degree i."""
    if d == 1:
        yield (i,)
        return
    for first in range(i, -1, -1):
        for rest in exponents_of_degree(d - 1, i - first):
            yield (first,) + rest


def maximal_ideal_power_times(A: MonomialIdeal, i: int) -> MonomialIdeal:
    """m**i * A where m = (x_1, ..., x_d)."""
    if i < 0:
        raise ValueError("power of the maximal ideal must be nonnegative")
    if i == 0 or A.is_zero:
        return A
    shifts = list(exponents_of_degree(A.d, i))
    pts = {_checked_add(g, e) for g in A.gens for e in shifts}
    return MonomialIdeal(A.ring, tuple(_minimal_elements(list(pts), A.d)))


def contains_monomial(A: MonomialIdeal, v: Sequence[int]) -> bool:
    v = tuple(v)
    if len(v) != A.d:
        raise DimensionMismatchError(f"monomial {v} has length {len(v)}, ideal lives in {A.d} variables")
    return any(divides(g, v) for g in A.gens)


def equals(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    _same_ring(A, B)
    return A.gens == B.gens


def is_subideal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    """True iff A is contained in B."""
    _same_ring(A, B)
    return all(contains_monomial(B, g) for g in A.gens)


def is_m_primary(A: MonomialIdeal) -> bool:
    require_proper(A, "is_m_primary")
    found = set()
    for g in A.gens:
        support = [k for k, e in enumerate(g) if e]
        if len(support) == 1:
            found.add(support[0])
    return len(found) == A.d


def dim_quotient(A: MonomialIdeal) -> int:
    """Krull dimension of R/A: the largest set of variables avoiding every generator's support."""
    if A.is_unit:
        raise ImproperIdealError("dim_quotient is undefined for the unit ideal")
    if A.is_zero:
        return A.d
    supports = [frozenset(k for k, e in enumerate(g) if e) for g in A.gens]
    for size in range(A.d, -1, -1):
        for subset in combinations(range(A.d), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0  # unreachable for proper ideals: the empty set always qualifies
