"""Exact integer and rational linear algebra.

Vectors are tuples of Python ints (or :class:`fractions.Fraction` for rational
vectors); matrices are tuples of row tuples.  Everything here is exact, and
every function is pure.
"""

from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

from .errors import (DimensionMismatch, NotSquare, NotUnimodular, Singular,
                     ZeroVector)

IntVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]
IntMatrix = Tuple[IntVector, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Freeze a nested sequence into a rectangular matrix."""
    m = tuple(tuple(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged matrix")
    return m


def shape(A: IntMatrix) -> Tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: IntMatrix, cols: int = None) -> IntMatrix:
    """Transpose; ``cols`` gives the column count when ``A`` has no rows."""
    if not A:
        return tuple(() for _ in range(cols or 0))
    return tuple(zip(*A))


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def matvec(A: IntMatrix, v) -> tuple:
    return tuple(dot(row, v) for row in A)


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if A and len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = transpose(B) if B else ()
    return tuple(tuple(dot(row, c) for c in cols) for row in A)


def is_zero(A: IntMatrix) -> bool:
    return all(x == 0 for row in A for x in row)


def gcd_list(values: Sequence[int]) -> int:
    """Positive gcd of ``values``; raises :class:`ZeroVector` if all are zero."""
    g = 0
    for x in values:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector()
    return g


def primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its entries, keeping its direction."""
    g = gcd_list(v)
    return tuple(x // g for x in v)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``.

    When ``a`` divides ``b`` (and ``a != 0``) the result has ``t == 0``.
    """
    if a != 0 and b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def _col_op(M, p, j, a, b, c, d):
    # (col_p, col_j) <- (a*col_p + c*col_j, b*col_p + d*col_j)
    for row in M:
        x, y = row[p], row[j]
        row[p] = a * x + c * y
        row[j] = b * x + d * y


def hermite_normal_form(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``H == A @ U`` and ``U`` unimodular.  ``H`` is lower
    echelon: each nonzero column has a positive pivot strictly below the
    previous pivot, entries to the left of a pivot lie in ``[0, pivot)``, and
    zero columns come last.  ``H`` spans the same column lattice as ``A``.
    """
    m, n = shape(A)
    H = [list(r) for r in A]
    U = [list(r) for r in identity(n)]
    p = 0
    for i in range(m):
        if p == n:
            break
        for j in range(p + 1, n):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][p]
            g, s, t = xgcd(a, b)
            # unimodular 2x2 [[s, -b/g], [t, a/g]]
            for M in (H, U):
                _col_op(M, p, j, s, -b // g, t, a // g)
        piv = H[i][p]
        if piv == 0:
            continue
        if piv < 0:
            for M in (H, U):
                for row in M:
                    row[p] = -row[p]
            piv = -piv
        for j in range(p):
            q = H[i][j] // piv
            if q:
                for M in (H, U):
                    for row in M:
                        row[j] -= q * row[p]
        p += 1
    return as_matrix(H) if m else (), as_matrix(U)


def smith_invariants(A: IntMatrix) -> IntVector:
    """Nonzero invariant factors ``d1 | d2 | ...`` of the Smith normal form."""
    M = [list(r) for r in A]
    m, n = shape(A)
    diag = []
    for t in range(min(m, n)):
        # move the smallest nonzero entry of the trailing block to (t, t)
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap_to(M, t, *best)
        while True:
            for i in range(t + 1, m):
                q = M[i][t] // M[t][t]
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
            for j in range(t + 1, n):
                q = M[t][j] // M[t][t]
                if q:
                    for row in M:
                        row[j] -= q * row[t]
            rest = [(i, t) for i in range(t + 1, m) if M[i][t]]
            rest += [(t, j) for j in range(t + 1, n) if M[t][j]]
            if not rest:
                # pivot must divide the whole trailing block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if M[i][j] % M[t][t]), None)
                if bad is None:
                    break
                M[t] = [x + y for x, y in zip(M[t], M[bad[0]])]
                continue
            _swap_to(M, t, *min(rest, key=lambda ij: abs(M[ij[0]][ij[1]])))
        diag.append(abs(M[t][t]))
    return tuple(diag)


def _swap_to(M, t, i, j):
    M[t], M[i] = M[i], M[t]
    for row in M:
        row[t], row[j] = row[j], row[t]


def kernel_lattice_basis(A: IntMatrix, cols: int = None) -> IntMatrix:
    """Saturated basis of ``ker(A) ∩ Z^N`` as the columns of an ``N x k`` matrix.

    The basis is canonical: it is the column Hermite form of any saturated
    basis, so the result depends only on the kernel.  ``cols`` supplies ``N``
    when ``A`` has no rows.
    """
    N = shape(A)[1] if A else cols
    if N is None:
        raise DimensionMismatch("column count unknown for empty matrix")
    if not A:
        return identity(N)
    H, U = hermite_normal_form(A)
    r = sum(1 for c in transpose(H) if any(c))
    basis = tuple(row[r:] for row in U)
    if r == N:
        return basis
    canon, _ = hermite_normal_form(basis)
    return canon


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m, n = shape(A)
    if m != n:
        raise NotSquare(m, n)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _gauss_jordan(A, rhs_cols):
    # Reduce [A | rhs] over Q; returns the solved rhs columns or raises Singular.
    n = len(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(c[i]) for c in rhs_cols]
         for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise Singular()
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [x * inv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return [row[n:] for row in M]


def solve_rational(A: IntMatrix, b: Sequence[int]) -> RationalVector:
    """Unique rational solution of ``A x = b`` for square nonsingular ``A``."""
    m, n = shape(A)
    if m != n:
        raise NotSquare(m, n)
    if len(b) != n:
        raise DimensionMismatch(f"rhs has length {len(b)}, expected {n}")
    return tuple(row[0] for row in _gauss_jordan(A, [b]))


def unimodular_inverse(A: IntMatrix) -> IntMatrix:
    d = det(A)
    if abs(d) != 1:
        raise NotUnimodular(d)
    sol = _gauss_jordan(A, identity(len(A)))
    assert all(x.denominator == 1 for row in sol for x in row)
    return tuple(tuple(int(x) for x in row) for row in sol)


def rank(A: IntMatrix) -> int:
    H, _ = hermite_normal_form(A)
    return sum(1 for c in transpose(H, shape(A)[1]) if any(c))
