"""Built-in Delzant polytope families."""

from itertools import product
from typing import Iterator, Tuple

from .polytope import HalfspacePolytope, build_polytope


def simplex_facets(dim: int, m: int):
    # coordinate facets listed from the last axis down, so dim=2 gives the
    # normals (0,1), (1,0), (-1,-1) in that order
    facets = []
    for i in reversed(range(dim)):
        facets.append((tuple(int(a == i) for a in range(dim)), 0))
    facets.append(((-1,) * dim, -m))
    return facets


def simplex(dim: int, m: int = 1) -> HalfspacePolytope:
    """``{x >= 0, x_1 + ... + x_dim <= m}``."""
    if dim < 1 or m < 1:
        raise ValueError("simplex needs dim >= 1 and m >= 1")
    return build_polytope(dim, simplex_facets(dim, m))


def box_facets(sides):
    dim = len(sides)
    unit = [tuple(int(a == i) for a in range(dim)) for i in range(dim)]
    lower = [(u, 0) for u in unit]
    upper = [(tuple(-c for c in u), -s) for u, s in zip(unit, sides)]
    return lower + upper


def box(*sides: int) -> HalfspacePolytope:
    """Axis-aligned box ``[0, s_1] x ... x [0, s_d]``.

    Lower facets come first, then upper ones, so the unit square is numbered
    ``x>=0, y>=0, x<=1, y<=1``.
    """
    if not sides or any(s < 1 for s in sides):
        raise ValueError("box needs at least one positive side")
    return build_polytope(len(sides), box_facets(sides))


def hirzebruch_facets(a: int, b: int):
    return [((1, 0), 0), ((0, 1), 0), ((0, -1), -1), ((-1, -a), -b)]


def hirzebruch(a: int, b: int) -> HalfspacePolytope:
    """Trapezoid ``{x >= 0, 0 <= y <= 1, x + a*y <= b}`` with ``b > a >= 1``."""
    if not b > a >= 1:
        raise ValueError("hirzebruch needs b > a >= 1")
    return build_polytope(2, hirzebruch_facets(a, b))


def suite() -> Iterator[Tuple[str, HalfspacePolytope]]:
    """Every polytope in the standard test suite, with a label."""
    for dim in (2, 3):
        for m in range(1, 7):
            yield f"simplex(dim={dim}, m={m})", simplex(dim, m)
    for dim in (1, 2, 3):
        for sides in product(range(1, 4), repeat=dim):
            yield f"box{sides}", box(*sides)
    for a in range(1, 4):
        for b in range(a + 1, 6):
            yield f"hirzebruch(a={a}, b={b})", hirzebruch(a, b)
