"""Symplectic-side data of the Delzant construction.

For a Delzant polytope with primitive inward normals ``v_j`` and offsets
``lambda_j`` this builds

* ``pi``: the ``n x N`` matrix sending ``e_j`` to ``v_j``,
* ``V = pi^T`` (the dual map),
* a saturated integer basis ``K`` of ``ker(pi)`` and ``L = K^T``,
* the weight ``nu = L(-lambda)``,

and checks that ``x -> V x - lambda`` matches the lattice points of the
polytope with the nonnegative integer solutions of ``L I = nu``.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import (BoxTooLarge, DimensionMismatch, SurjectivityFailure,
                     ToricError)
from .linalg import IntMatrix, IntVector
from .polytope import (DEFAULT_MAX_BOX, DelzantCertificate, HalfspacePolytope,
                       lattice_points, validate_delzant)


@dataclass(frozen=True)
class ConstructionData:
    pi: IntMatrix
    V: IntMatrix
    kernel_basis: IntMatrix
    L: IntMatrix
    lam: IntVector
    nu: IntVector
    #: per-coordinate upper bounds of the fiber polytope, from the vertices
    fiber_bounds: IntVector
    #: active facets of the first vertex; a unimodular row set of ``V``
    vertex_basis: Tuple[int, ...]
    invariants: Dict[str, bool] = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def N(self) -> int:
        return len(self.lam)

    @property
    def k(self) -> int:
        return len(self.nu)


@dataclass(frozen=True)
class BijectionWitness:
    pairs: Tuple[Tuple[IntVector, IntVector], ...]
    complete: bool
    counterexample: Optional[str] = None


def build_construction(P: HalfspacePolytope,
                       cert: Optional[DelzantCertificate] = None,
                       kernel_basis: Optional[IntMatrix] = None
                       ) -> ConstructionData:
    """Assemble the exact sequences for ``P``.

    ``kernel_basis`` overrides the canonical basis; any saturated basis of
    ``ker(pi)`` gives the same fiber, only ``nu`` changes coordinates.
    """
    if cert is None:
        cert = validate_delzant(P)
    N, n = P.n_facets, P.dim
    V = P.normals
    pi = linalg.transpose(V)
    lam = P.offsets

    smith = linalg.smith_invariants(pi)
    if len(smith) != n or any(d != 1 for d in smith):
        raise SurjectivityFailure(smith)

    K = kernel_basis if kernel_basis is not None else \
        linalg.kernel_lattice_basis(pi)
    k = N - n
    if len(K) != N or any(len(row) != k for row in K):
        raise DimensionMismatch(f"kernel basis must be {N}x{k}")
    L = linalg.transpose(K, N) if k else ()
    nu = tuple(-x for x in linalg.matvec(L, lam))

    canon = linalg.kernel_lattice_basis(pi)
    invariants = {
        "pi_K_zero": linalg.is_zero(linalg.matmul(pi, K)) if k else True,
        "pi_surjective": True,
        "L_V_zero": linalg.is_zero(linalg.matmul(L, V)) if k else True,
        "K_saturated": k == 0 or linalg.smith_invariants(K) == (1,) * k,
        "K_canonical": K == canon,
    }
    failed = [name for name, ok in invariants.items()
              if not ok and name != "K_canonical"]
    if failed:
        raise ToricError(f"construction invariants failed: {failed}")

    bounds = tuple(
        max(linalg.dot(v.point, P.facets[j].normal) for v in cert.vertices)
        - P.facets[j].offset
        for j in range(N))
    return ConstructionData(pi, V, K, L, lam, nu, bounds,
                            cert.vertices[0].active_facets, invariants)


def affine_embed(C: ConstructionData, x: Sequence[int]) -> IntVector:
    """``V x - lambda``: nonnegative exactly when ``x`` lies in the polytope."""
    if len(x) != C.n:
        raise DimensionMismatch(f"point has length {len(x)}, expected {C.n}")
    return tuple(y - l for y, l in zip(linalg.matvec(C.V, x), C.lam))


def pullback_lattice_point(C: ConstructionData, y: Sequence[int],
                           vertex_basis: Sequence[int] = None) -> IntVector:
    """Recover ``x`` from ``y = V x - lambda`` using one vertex's rows of ``V``.

    Those rows form a unimodular matrix, so an integer ``y`` pulls back to an
    integer ``x``.
    """
    if len(y) != C.N:
        raise DimensionMismatch(f"point has length {len(y)}, expected {C.N}")
    basis = tuple(sorted(vertex_basis if vertex_basis is not None
                         else C.vertex_basis))
    Vbar = tuple(C.V[j] for j in basis)
    inv = linalg.unimodular_inverse(Vbar)
    return linalg.matvec(inv, [y[j] + C.lam[j] for j in basis])


def fiber_lattice_points(C: ConstructionData,
                         bounds: Optional[Sequence[int]] = None,
                         max_box: int = DEFAULT_MAX_BOX) -> List[IntVector]:
    """All ``I`` with ``0 <= I_j <= bounds_j`` and ``L I = nu``, lex ordered.

    Depth-first over coordinates; a branch is cut when some row of ``L`` can
    no longer reach its target with the remaining coordinates.  Uses only
    ``L``, ``nu`` and the bounds.
    """
    bounds = tuple(C.fiber_bounds if bounds is None else bounds)
    N, k = C.N, C.k
    if len(bounds) != N:
        raise DimensionMismatch(f"bounds have length {len(bounds)}, expected {N}")
    if any(b < 0 for b in bounds):
        return []
    volume = 1
    for b in bounds:
        volume *= b + 1
    if volume > max_box:
        raise BoxTooLarge(volume, max_box)

    cols = [tuple(C.L[i][j] for i in range(k)) for j in range(N)]
    # reach_lo[j][i], reach_hi[j][i]: range of row i over coordinates j..N-1
    reach_lo = [[0] * k for _ in range(N + 1)]
    reach_hi = [[0] * k for _ in range(N + 1)]
    for j in range(N - 1, -1, -1):
        for i in range(k):
            t = cols[j][i] * bounds[j]
            reach_lo[j][i] = reach_lo[j + 1][i] + min(0, t)
            reach_hi[j][i] = reach_hi[j + 1][i] + max(0, t)

    out = []
    current = [0] * N

    def dfs(j, residual):
        if any(not (reach_lo[j][i] <= residual[i] <= reach_hi[j][i])
               for i in range(k)):
            return
        if j == N:
            out.append(tuple(current))
            return
        for value in range(bounds[j] + 1):
            current[j] = value
            dfs(j + 1, [r - c * value for r, c in zip(residual, cols[j])])
        current[j] = 0

    dfs(0, list(C.nu))
    return out


def verify_claim1(C: ConstructionData, P: HalfspacePolytope,
                  max_box: int = DEFAULT_MAX_BOX) -> BijectionWitness:
    """Check that ``V x - lambda`` is a bijection from the lattice points of
    ``P`` onto the fiber lattice points.

    Both sides are enumerated independently.  On failure the witness carries
    the first counterexample found and ``complete`` is False.
    """
    xs = lattice_points(P, max_box)
    ys = fiber_lattice_points(C, max_box=max_box)
    fiber = set(ys)
    pairs = []
    seen = {}

    def fail(msg):
        return BijectionWitness(tuple(pairs), False, msg)

    for x in xs:
        y = affine_embed(C, x)
        if y in seen:
            return fail(f"points {list(seen[y])} and {list(x)} both map to {list(y)}")
        if y not in fiber:
            return fail(f"image {list(y)} of {list(x)} is not a fiber point")
        seen[y] = x
        pairs.append((x, y))
    lattice = set(xs)
    for y in ys:
        x = pullback_lattice_point(C, y)
        if x not in lattice or affine_embed(C, x) != y:
            return fail(f"fiber point {list(y)} is not hit")
    return BijectionWitness(tuple(pairs), True)
