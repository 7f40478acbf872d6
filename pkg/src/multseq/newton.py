"""Newton polyhedra of monomial ideals and the invariants they determine.

NP(A) = conv(exponents of A) + R^d_{>=0}.  Everything here is exact: facet
normals are primitive integer vectors and all volumes are integer
determinants.

The facet description comes from a double-description pass over the
homogenised cone generated by (g, 1) for every generator g and (e_k, 0) for
every recession direction; its extreme rays (a, c) with a != 0 are the facets
a.x >= -c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from ._linalg import affine_rank, det_int, primitive, rank
from .errors import DegenerateSimplexError, DimensionMismatchError, NotMPrimaryError
from .monomial import (
    ExponentVector,
    MonomialIdeal,
    RingSpec,
    _canonical_key,
    is_m_primary,
    minimalize,
    require_proper,
)


@dataclass(frozen=True, order=True)
class Halfspace:
    """The closed halfspace {x : normal . x >= offset}, primitively scaled."""

    normal: Tuple[int, ...]
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("halfspace normal must be nonzero")
        if any(a < 0 for a in self.normal):
            raise ValueError(f"Newton polyhedron normals are nonnegative, got {self.normal}")

    def value(self, v: Sequence) -> Fraction:
        return sum(Fraction(a) * x for a, x in zip(self.normal, v))

    def contains(self, v: Sequence) -> bool:
        return self.value(v) >= self.offset

    def is_tight(self, v: Sequence) -> bool:
        return self.value(v) == self.offset

    @property
    def is_bounded(self) -> bool:
        """A facet of a Newton polyhedron is compact iff its normal is strictly positive."""
        return all(a > 0 for a in self.normal)

    def __str__(self) -> str:
        return f"{self.normal} . x >= {self.offset}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    ring: RingSpec
    vertices: Tuple[ExponentVector, ...]
    facets: Tuple[Halfspace, ...]

    @property
    def d(self) -> int:
        return self.ring.d

    @cached_property
    def facet_vertex_sets(self) -> Tuple[FrozenSet[int], ...]:
        """For each facet, the indices (into ``vertices``) of the vertices on it."""
        return tuple(
            frozenset(i for i, v in enumerate(self.vertices) if f.is_tight(v)) for f in self.facets
        )

    @property
    def bounded_facets(self) -> Tuple[int, ...]:
        return tuple(k for k, f in enumerate(self.facets) if f.is_bounded)

    def __contains__(self, v) -> bool:
        return point_in_polyhedron(self, v)


# -- double description -------------------------------------------------------


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _facet_rays(points: Sequence[ExponentVector], d: int) -> List[Tuple[int, ...]]:
    """Extreme rays (a, c) of {(a, c) : a_k >= 0, a.g + c >= 0 for g in points}."""
    rows = [tuple(int(k == l) for l in range(d)) + (0,) for k in range(d)]
    rows += [tuple(g) + (1,) for g in points]
    g0 = points[0]

    # rows 0..d are independent; the initial rays are the columns of their inverse
    rays = [tuple(int(k == l) for l in range(d)) + (-g0[k],) for k in range(d)]
    rays.append((0,) * d + (1,))
    masks = []
    for r in rays:
        masks.append(sum(1 << i for i in range(d + 1) if _dot(rows[i], r) == 0))

    for idx in range(d + 1, len(rows)):
        row = rows[idx]
        vals = [_dot(row, r) for r in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        new_rays, new_masks = [], []
        for p in pos:
            for n in neg:
                common = masks[p] & masks[n]
                if _popcount(common) < d - 1:
                    continue
                if any(
                    (masks[r] & common) == common for r in range(len(rays)) if r != p and r != n
                ):
                    continue
                vp, vn = vals[p], vals[n]
                ray = primitive(tuple(vp * b - vn * a for a, b in zip(rays[p], rays[n])))
                new_rays.append(ray)
                new_masks.append(common | (1 << idx))
        keep = [k for k, s in enumerate(vals) if s >= 0]
        rays = [rays[k] for k in keep] + new_rays
        masks = [masks[k] | ((1 << idx) if vals[k] == 0 else 0) for k in keep] + new_masks
    return rays


def newton_polyhedron(A: MonomialIdeal) -> NewtonPolyhedron:
    require_proper(A, "newton_polyhedron")
    return _newton_cached(A)


_NP_CACHE: Dict[MonomialIdeal, NewtonPolyhedron] = {}


def _newton_cached(A: MonomialIdeal) -> NewtonPolyhedron:
    hit = _NP_CACHE.get(A)
    if hit is not None:
        return hit
    d = A.d
    facets = []
    for ray in _facet_rays(A.gens, d):
        normal, c = ray[:d], ray[d]
        if any(normal):
            facets.append(Halfspace(tuple(normal), -c))
    facets.sort()
    # a generator is a vertex iff the normals of the facets through it span R^d
    vertices = [g for g in A.gens if rank([f.normal for f in facets if f.is_tight(g)]) == d]
    vertices.sort(key=_canonical_key)
    P = NewtonPolyhedron(A.ring, tuple(vertices), tuple(facets))
    if len(_NP_CACHE) > 4096:
        _NP_CACHE.clear()
    _NP_CACHE[A] = P
    return P


def point_in_polyhedron(P: NewtonPolyhedron, v: Sequence) -> bool:
    if len(v) != P.d:
        raise DimensionMismatchError(f"point {tuple(v)} has length {len(v)}, polyhedron lives in R^{P.d}")
    return all(f.contains(v) for f in P.facets)


def mon_reduction(A: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by the vertices of NP(A), a minimal monomial reduction of A."""
    P = newton_polyhedron(A)
    return minimalize(P.vertices, A.ring)


def integral_closure(A: MonomialIdeal) -> MonomialIdeal:
    """Integral closure of A: the monomials whose exponents lie in NP(A)."""
    P = newton_polyhedron(A)
    # minimal lattice points of NP(A) never exceed the generators' coordinatewise max
    top = A.as_array().max(axis=0)
    grid = np.indices(tuple(int(t) + 1 for t in top)).reshape(A.d, -1).T
    normals = np.array([f.normal for f in P.facets], dtype=object)
    offsets = np.array([f.offset for f in P.facets], dtype=object)
    inside = np.ones(len(grid), dtype=bool)
    for lo in range(0, len(grid), 65536):
        chunk = grid[lo:lo + 65536].astype(object)
        inside[lo:lo + 65536] = (chunk @ normals.T >= offsets).all(axis=1)
    return minimalize((tuple(int(e) for e in p) for p in grid[inside]), A.ring)


# -- faces ----------------------------------------------------------------------


def _faces(P: NewtonPolyhedron) -> List[FrozenSet[int]]:
    """Vertex sets of all nonempty faces (intersections of facets, plus single vertices)."""
    seen = set()
    frontier = [W for W in P.facet_vertex_sets if W]
    frontier += [frozenset([i]) for i in range(len(P.vertices))]
    while frontier:
        nxt = []
        for W in frontier:
            if W in seen:
                continue
            seen.add(W)
            for F in P.facet_vertex_sets:
                X = W & F
                if X and X not in seen:
                    nxt.append(X)
        frontier = nxt
    return sorted(seen, key=lambda W: (len(W), sorted(W)))


def _is_compact(P: NewtonPolyhedron, W: FrozenSet[int]) -> bool:
    # The smallest face containing W lies on exactly the facets through W; it has
    # no recession direction iff those normals jointly touch every coordinate.
    covered = [False] * P.d
    for F, f in zip(P.facet_vertex_sets, P.facets):
        if W <= F:
            for k, a in enumerate(f.normal):
                if a > 0:
                    covered[k] = True
    return all(covered)


def compact_faces(P: NewtonPolyhedron) -> List[FrozenSet[int]]:
    return [W for W in _faces(P) if _is_compact(P, W)]


def mon_analytic_spread(A: MonomialIdeal) -> int:
    """Analytic spread of A: one more than the largest dimension of a compact face of NP(A)."""
    P = newton_polyhedron(A)
    best = 0
    for W in compact_faces(P):
        best = max(best, affine_rank([P.vertices[i] for i in W]))
    return best + 1


# -- volumes --------------------------------------------------------------------


def _lex_min(P: NewtonPolyhedron) -> Callable[[FrozenSet[int]], int]:
    return lambda W: min(W, key=lambda i: P.vertices[i])


def triangulate_face(
    P: NewtonPolyhedron,
    W: FrozenSet[int],
    dim: int,
    apex: Callable[[FrozenSet[int]], int] | None = None,
) -> List[Tuple[int, ...]]:
    """Triangulate the ``dim``-dimensional face with vertex set W.

    Pulling triangulation: cone from an apex vertex over the triangulations of
    the facets of W that avoid it.  Returns simplices as tuples of vertex indices.
    """
    if apex is None:
        apex = _lex_min(P)
    if dim == 0:
        return [tuple(W)]
    v0 = apex(W)
    subfaces = set()
    for F in P.facet_vertex_sets:
        X = W & F
        if v0 not in X and X != W and len(X) >= dim and affine_rank([P.vertices[i] for i in X]) == dim - 1:
            subfaces.add(X)
    out = []
    for X in sorted(subfaces, key=sorted):
        for simplex in triangulate_face(P, X, dim - 1, apex):
            out.append((v0,) + simplex)
    return out


def _pyramid_volume_sum(P: NewtonPolyhedron, apex=None) -> int:
    total = 0
    for k in P.bounded_facets:
        W = P.facet_vertex_sets[k]
        for simplex in triangulate_face(P, W, P.d - 1, apex):
            det = det_int([P.vertices[i] for i in simplex])
            if det == 0:
                raise DegenerateSimplexError(f"degenerate simplex {simplex} on facet {P.facets[k]}")
            total += abs(det)
    return total


def mon_j_mult(A: MonomialIdeal) -> int:
    """j-multiplicity of A: d! times the volume of the pyramids from the origin over the bounded facets of NP(A)."""
    return _pyramid_volume_sum(newton_polyhedron(A))


def normalized_covolume(A: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity e(A) = d! vol(R^d_{>=0} minus NP(A)) of an m-primary ideal."""
    if not is_m_primary(A):
        raise NotMPrimaryError("normalized_covolume needs an m-primary ideal")
    return _pyramid_volume_sum(newton_polyhedron(A))
