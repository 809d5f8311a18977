"""Quantization dimension of a Delzant polytope, computed two ways."""

from contextlib import contextmanager
from dataclasses import dataclass
from typing import List, Tuple

from . import complex_side
from .complex_side import SectionBasis
from .construction import (BijectionWitness, ConstructionData,
                           build_construction, verify_claim1)
from .errors import OriginNotContained, ToricError
from .linalg import IntVector
from .polytope import (DEFAULT_MAX_BOX, DelzantCertificate, FacetFamily,
                       HalfspacePolytope, build_polytope, facet_family,
                       lattice_points, validate_delzant)


@dataclass(frozen=True)
class QuantizationReport:
    polytope: HalfspacePolytope
    certificate: DelzantCertificate
    construction: ConstructionData
    family: FacetFamily
    complement_codim: int
    complement_witnesses: Tuple[Tuple[int, ...], ...]
    lattice: Tuple[IntVector, ...]
    basis: SectionBasis
    bijection: BijectionWitness

    @property
    def lattice_count(self) -> int:
        return len(self.lattice)

    @property
    def dimension(self) -> int:
        return len(self.basis.monomials)

    @property
    def theorem_verified(self) -> bool:
        return self.lattice_count == self.dimension and self.bijection.complete


@contextmanager
def _stage(name):
    try:
        yield
    except ToricError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def quantize(P: HalfspacePolytope, max_box: int = DEFAULT_MAX_BOX
             ) -> QuantizationReport:
    """Run the full pipeline on ``P``.

    The dimension is the number of equivariant monomials, counted on the
    fiber side. It is compared with a direct lattice-point count of ``P``,
    and the affine bijection between the two sets is checked point by point.
    Errors carry the failing stage in their ``stage`` attribute.
    """
    with _stage("validate_delzant"):
        cert = validate_delzant(P)
    with _stage("build_construction"):
        C = build_construction(P, cert)
    with _stage("facet_family"):
        family = facet_family(cert, P.n_facets)
    with _stage("complement_codimension"):
        codim, witnesses = complex_side.minimal_missing_sets(family)
    with _stage("lattice_points"):
        lattice = tuple(lattice_points(P, max_box))
    with _stage("section_basis"):
        basis = complex_side.section_basis(C, max_box=max_box)
    with _stage("verify_claim1"):
        bijection = verify_claim1(C, P, max_box)
    return QuantizationReport(P, cert, C, family, codim, tuple(witnesses),
                              lattice, basis, bijection)


def dilate(P: HalfspacePolytope, m: int) -> HalfspacePolytope:
    """Scale ``P`` by ``m`` about the origin, which must lie in ``P``."""
    if any(f.offset > 0 for f in P.facets):
        raise OriginNotContained()
    return build_polytope(P.dim, [(f.normal, m * f.offset) for f in P.facets])


def dilate_sweep(P: HalfspacePolytope, m_max: int,
                 max_box: int = DEFAULT_MAX_BOX) -> List[Tuple[int, int]]:
    """Quantization dimension of ``m * P`` for ``m = 1..m_max``."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    if any(f.offset > 0 for f in P.facets):
        raise OriginNotContained()
    out = []
    for m in range(1, m_max + 1):
        report = quantize(dilate(P, m), max_box)
        if not report.theorem_verified:
            raise ToricError(f"dimension check failed at m={m}")
        out.append((m, report.dimension))
    return out
