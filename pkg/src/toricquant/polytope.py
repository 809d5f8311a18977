"""Half-space polytopes: vertices, the Delzant check, lattice points, and the
family of facet sets with a common point.

Facets are indexed from 0 in the library; reports add 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, lcm
from typing import FrozenSet, List, Sequence, Tuple

from . import linalg
from .errors import (BoxTooLarge, EmptyPolytope, NonIntegralOffset,
                     NonIntegralVertex, NotFullDimensional, NotSimple,
                     NotUnimodular, RedundantFacet, Singular, Unbounded)
from .linalg import IntVector

DEFAULT_MAX_BOX = 10 ** 8


@dataclass(frozen=True)
class Facet:
    normal: IntVector
    offset: int

    def contains(self, x) -> bool:
        return linalg.dot(x, self.normal) >= self.offset


@dataclass(frozen=True)
class Vertex:
    """A vertex together with every facet through it."""

    point: tuple
    active_facets: Tuple[int, ...]

    @property
    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.point)


@dataclass(frozen=True)
class HalfspacePolytope:
    """``{x : <x, normal_j> >= offset_j for all j}``, validated on construction.

    Build instances with :func:`build_polytope`; it canonicalizes the normals
    and rejects unbounded, empty, lower-dimensional or redundant input.
    """

    dim: int
    facets: Tuple[Facet, ...]
    vertex_list: Tuple[Vertex, ...]

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def normals(self) -> Tuple[IntVector, ...]:
        return tuple(f.normal for f in self.facets)

    @property
    def offsets(self) -> IntVector:
        return tuple(f.offset for f in self.facets)

    def contains(self, x) -> bool:
        return all(f.contains(x) for f in self.facets)


@dataclass(frozen=True)
class DelzantCertificate:
    vertices: Tuple[Vertex, ...]
    vertex_determinants: Tuple[int, ...]


@dataclass(frozen=True)
class FacetFamily:
    """Downward-closed family of facet index sets with nonempty intersection."""

    n_facets: int
    members: FrozenSet[FrozenSet[int]]

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> List[Tuple[int, ...]]:
        """Members as sorted tuples, ordered by size then lexicographically."""
        return sorted((tuple(sorted(s)) for s in self.members),
                      key=lambda s: (len(s), s))


def build_polytope(n: int, raw_facets: Sequence[Tuple[Sequence[int], int]]
                   ) -> HalfspacePolytope:
    """Validate and canonicalize an H-representation.

    Each ``(normal, offset)`` pair encodes ``<x, normal> >= offset``.  Normals
    are divided by their gcd, which must also divide the offset.  Facet order
    is preserved.
    """
    facets = []
    for j, (normal, offset) in enumerate(raw_facets):
        normal = tuple(int(c) for c in normal)
        if len(normal) != n:
            raise linalg.DimensionMismatch(
                f"facet {j + 1}: normal has length {len(normal)}, expected {n}")
        g = linalg.gcd_list(normal)
        if offset % g:
            raise NonIntegralOffset(j, normal, offset)
        facets.append(Facet(tuple(c // g for c in normal), offset // g))
    facets = tuple(facets)
    normals = tuple(f.normal for f in facets)

    _check_bounded(n, normals)
    verts = _enumerate_vertices(n, facets)
    if not verts:
        raise EmptyPolytope()
    aff = _affine_dim([v.point for v in verts])
    if aff < n:
        raise NotFullDimensional(aff, n)
    for j in range(len(facets)):
        on_facet = [v.point for v in verts if j in v.active_facets]
        if not on_facet or _affine_dim(on_facet) < n - 1:
            raise RedundantFacet(j)
    return HalfspacePolytope(n, facets, tuple(verts))


def _check_bounded(n, normals):
    # Bounded iff the recession cone {d : V d >= 0} is {0}.  With rank V = n
    # the cone is pointed, so it is trivial iff it has no extreme ray; every
    # extreme ray spans the kernel of some rank-(n-1) set of rows.
    if not normals or linalg.rank(normals) < n:
        raise Unbounded()
    for rows in combinations(normals, n - 1):
        ker = linalg.kernel_lattice_basis(rows, cols=n)
        if len(ker[0]) != 1:
            continue
        d = tuple(r[0] for r in ker)
        for s in (1, -1):
            ray = tuple(s * c for c in d)
            if all(linalg.dot(ray, v) >= 0 for v in normals):
                raise Unbounded(ray)


def _enumerate_vertices(n, facets) -> List[Vertex]:
    found = {}
    for idx in combinations(range(len(facets)), n):
        A = tuple(facets[j].normal for j in idx)
        try:
            x = linalg.solve_rational(A, [facets[j].offset for j in idx])
        except Singular:
            continue
        if x in found:
            continue
        slack = [linalg.dot(x, f.normal) - f.offset for f in facets]
        if all(s >= 0 for s in slack):
            x = tuple(int(c) if c.denominator == 1 else c for c in x)
            found[x] = tuple(j for j, s in enumerate(slack) if s == 0)
    return [Vertex(p, found[p]) for p in sorted(found)]


def _affine_dim(points) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)]
             for p in points[1:]]
    # clear denominators so the integer rank routine applies
    rows = []
    for d in diffs:
        den = lcm(*(c.denominator for c in d))
        rows.append(tuple(int(c * den) for c in d))
    return linalg.rank(rows)


def vertices(P: HalfspacePolytope) -> List[Vertex]:
    """Vertices in lexicographic order, with all facets attaining equality."""
    return list(P.vertex_list)


def validate_delzant(P: HalfspacePolytope) -> DelzantCertificate:
    """Check that every vertex cone is simple and unimodular.

    Raises :class:`NotSimple` or :class:`NotUnimodular` at the first failing
    vertex in lexicographic order.
    """
    dets = []
    for v in P.vertex_list:
        if len(v.active_facets) != P.dim:
            raise NotSimple(v.point, v.active_facets)
        d = linalg.det(tuple(P.facets[j].normal for j in v.active_facets))
        if abs(d) != 1:
            raise NotUnimodular(d, vertex=v.point)
        if not v.is_integral:
            raise NonIntegralVertex(v.point)
        dets.append(d)
    return DelzantCertificate(P.vertex_list, tuple(dets))


def bounding_box(P: HalfspacePolytope) -> List[Tuple[int, int]]:
    pts = [v.point for v in P.vertex_list]
    return [(floor(min(p[i] for p in pts)), ceil(max(p[i] for p in pts)))
            for i in range(P.dim)]


def lattice_points(P: HalfspacePolytope, max_box: int = DEFAULT_MAX_BOX
                   ) -> List[IntVector]:
    """All integer points of ``P`` in lexicographic order (bounding-box scan)."""
    box = bounding_box(P)
    volume = 1
    for lo, hi in box:
        volume *= hi - lo + 1
    if volume > max_box:
        raise BoxTooLarge(volume, max_box)
    ranges = [range(lo, hi + 1) for lo, hi in box]
    return [x for x in product(*ranges) if P.contains(x)]


def facet_family(cert: DelzantCertificate, n_facets: int) -> FacetFamily:
    """Facet index sets with a common point.

    A set of facets meets iff the face they cut out is nonempty, and every
    nonempty face of a polytope contains a vertex, so the family is the set of
    subsets of the vertex active sets.
    """
    members = {frozenset()}
    for v in cert.vertices:
        act = v.active_facets
        for k in range(1, len(act) + 1):
            members.update(frozenset(c) for c in combinations(act, k))
    return FacetFamily(n_facets, frozenset(members))
