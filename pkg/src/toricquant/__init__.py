"""Geometric quantization of symplectic toric manifolds from their Delzant
polytopes, in exact integer arithmetic."""

from .complex_side import (SectionBasis, complement_codimension,
                           equivariance_witness, format_monomial, in_UF,
                           minimal_missing_sets, monomial_weight,
                           section_basis)
from .construction import (BijectionWitness, ConstructionData, affine_embed,
                           build_construction, fiber_lattice_points,
                           pullback_lattice_point, verify_claim1)
from .errors import *  # noqa: F401,F403
from .generators import box, hirzebruch, simplex
from .polytope import (DelzantCertificate, FacetFamily, HalfspacePolytope,
                       Vertex, build_polytope, facet_family, lattice_points,
                       validate_delzant, vertices)
from .quantize import QuantizationReport, dilate, dilate_sweep, quantize

__version__ = "0.1.0"
