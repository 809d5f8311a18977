import random
from itertools import combinations, product
from math import ceil, floor

import pytest
from sympy import Matrix

from toricquant import build_polytope, linalg
from toricquant.generators import suite

TRIANGLE = [((0, 1), 0), ((1, 0), 0), ((-1, -1), -1)]
SQUARE = [((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)]
BAD_TRIANGLE = [((1, 0), 0), ((0, 1), 0), ((-1, -2), -2)]


def triangle(m=1):
    return build_polytope(2, [(v, m * l) for v, l in TRIANGLE])


def square():
    return build_polytope(2, SQUARE)


def random_unimodular(n, rng, steps=10):
    M = [list(r) for r in linalg.identity(n)]
    for _ in range(steps):
        if n == 1:
            M[0][0] *= -1
            continue
        i, j = rng.sample(range(n), 2)
        f = rng.randint(-2, 2)
        M[i] = [a + f * b for a, b in zip(M[i], M[j])]
        if rng.random() < 0.3:
            M[i], M[j] = M[j], M[i]
    return linalg.as_matrix(M)


def transform_facets(facets, A, t):
    """Facets of ``A P + t`` for unimodular ``A``.

    ``<x, v> >= l`` becomes ``<y, A^-T v> >= l + <t, A^-T v>`` with ``y = A x + t``.
    """
    Ainv_T = linalg.transpose(linalg.unimodular_inverse(A))
    out = []
    for v, l in facets:
        w = linalg.matvec(Ainv_T, v)
        out.append((w, l + linalg.dot(t, w)))
    return out


def random_delzant(rng, max_box=10 ** 4):
    """A suite polytope moved by a random unimodular map and translation."""
    polys = list(suite())
    while True:
        _, P = rng.choice(polys)
        facets = [(f.normal, f.offset) for f in P.facets]
        n = P.dim
        A = random_unimodular(n, rng)
        t = tuple(rng.randint(-3, 3) for _ in range(n))
        perm = list(range(len(facets)))
        rng.shuffle(perm)
        moved = transform_facets([facets[j] for j in perm], A, t)
        lo, hi = oracle_box(n, moved)
        vol = 1
        for a, b in zip(lo, hi):
            vol *= b - a + 1
        if vol <= max_box:
            return build_polytope(n, moved), moved


def oracle_vertices(n, facets):
    """Vertices by solving every n-subset with sympy."""
    pts = set()
    for idx in combinations(range(len(facets)), n):
        A = Matrix([list(facets[j][0]) for j in idx])
        if A.det() == 0:
            continue
        x = A.solve(Matrix([facets[j][1] for j in idx]))
        if all(sum(a * b for a, b in zip(x, v)) >= l for v, l in facets):
            pts.add(tuple(x))
    return sorted(pts)


def oracle_box(n, facets):
    pts = oracle_vertices(n, facets)
    lo = [floor(min(p[i] for p in pts)) for i in range(n)]
    hi = [ceil(max(p[i] for p in pts)) for i in range(n)]
    return lo, hi


def oracle_lattice_points(n, facets):
    lo, hi = oracle_box(n, facets)
    out = []
    for x in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        ok = True
        for v, l in facets:
            s = 0
            for a, b in zip(x, v):
                s += a * b
            if s < l:
                ok = False
                break
        if ok:
            out.append(x)
    return out


@pytest.fixture
def rng():
    return random.Random(20071027)


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__ != "test_acceptance":
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((label, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in _acceptance:
        terminalreporter.write_line(f"[{status}] {label}")
