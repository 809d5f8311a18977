"""Combinatorial model of the complex quotient construction.

Points of ``C^N`` are never represented.  The open set ``U_F`` is described
by zero-index sets alone, and sections of the line bundle by exponent vectors
of monomials.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from . import linalg
from .construction import ConstructionData, fiber_lattice_points
from .errors import AllSubsetsPresent, DimensionMismatch
from .linalg import IntVector
from .polytope import FacetFamily

Monomial = IntVector


@dataclass(frozen=True)
class SectionBasis:
    monomials: Tuple[Monomial, ...]
    weight: IntVector

    def __len__(self):
        return len(self.monomials)


def in_UF(family: FacetFamily, zero_indices: Iterable[int]) -> bool:
    """Whether points with exactly these zero coordinates lie in ``U_F``."""
    return frozenset(zero_indices) in family.members


def minimal_missing_sets(family: FacetFamily) -> Tuple[int, List[Tuple[int, ...]]]:
    """Smallest size of an index set outside the family, with all such sets."""
    for size in range(1, family.n_facets + 1):
        missing = [c for c in combinations(range(family.n_facets), size)
                   if frozenset(c) not in family.members]
        if missing:
            return size, missing
    raise AllSubsetsPresent()


def complement_codimension(family: FacetFamily) -> int:
    """Complex codimension of the smallest coordinate stratum removed from
    ``C^N`` to form ``U_F``.

    Singletons are always members, so for a family coming from a polytope
    this is at least 2.
    """
    return minimal_missing_sets(family)[0]


def monomial_weight(C: ConstructionData, I: Sequence[int]) -> IntVector:
    """Character ``L I`` by which the complexified kernel torus scales ``z^I``."""
    if len(I) != C.N:
        raise DimensionMismatch(f"exponent has length {len(I)}, expected {C.N}")
    if any(e < 0 for e in I):
        raise ValueError(f"negative exponent in {list(I)}")
    return linalg.matvec(C.L, I)


def section_basis(C: ConstructionData, **kwargs) -> SectionBasis:
    """Equivariant monomials ``z^I`` with ``L I = nu``, ``I >= 0``."""
    monomials = tuple(fiber_lattice_points(C, **kwargs))
    for I in monomials:
        if monomial_weight(C, I) != C.nu:
            raise AssertionError(f"monomial {list(I)} has the wrong weight")
    return SectionBasis(monomials, C.nu)


def equivariance_witness(C: ConstructionData, I: Sequence[int],
                         trials: int = 8, rng: random.Random = None) -> bool:
    """Randomized check that ``z^I`` is equivariant of weight ``nu``.

    A torus element ``k = exp(sum t_i K_i)`` scales ``z^I`` by
    ``exp(<t, K^T I>)`` and the fiber by ``exp(<t, nu>)``.  Both sides are
    compared in exponent space for random rational ``t``.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = rng or random.Random(0)
    K = C.kernel_basis
    k = C.k
    scale = [sum(K[j][i] * I[j] for j in range(C.N)) for i in range(k)]
    for _ in range(trials):
        t = [Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))
             for _ in range(k)]
        lhs = sum(ti * s for ti, s in zip(t, scale))
        rhs = sum(ti * w for ti, w in zip(t, C.nu))
        if lhs != rhs:
            return False
    return True


def format_monomial(I: Sequence[int]) -> str:
    """Render exponents as ``z1^2*z3`` (1-based variables, ``1`` if constant)."""
    parts = []
    for j, e in enumerate(I, start=1):
        if e == 1:
            parts.append(f"z{j}")
        elif e > 1:
            parts.append(f"z{j}^{e}")
    return "*".join(parts) or "1"
