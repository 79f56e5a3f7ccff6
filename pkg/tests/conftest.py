"""Shared fixtures and independent mini-oracles for the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

import plconvex as pc
from plconvex.exactgeom import Projection3, orient3d, vmean


@pytest.fixture
def cube():
    return pc.gen_hypercube(3)


@pytest.fixture
def tesseract():
    return pc.gen_hypercube(4)


@pytest.fixture
def octahedron():
    return pc.gen_cross_polytope(3)


@pytest.fixture
def schonhardt():
    return pc.gen_schonhardt()


def float_winding(edges) -> float:
    """Independent winding computation: principal-value angle summation."""
    angles = [math.atan2(float(e[1]), float(e[0])) for e in edges]
    total = 0.0
    m = len(angles)
    for i in range(m):
        d = angles[(i + 1) % m] - angles[i]
        while d <= -math.pi:
            d += 2 * math.pi
        while d > math.pi:
            d -= 2 * math.pi
        total += d
    return total / (2 * math.pi)


def reflex_adjacent_vertices(surface) -> set[int]:
    """Vertices touching a solid-reflex edge, for star-shaped n=3 surfaces.

    An edge between facets T1 and T2 counts as reflex when T2's off-edge
    vertex lies strictly on the opposite side of aff(T1) from the vertex
    centroid.  Uses only oracle-style global predicates, never the fan
    machinery.
    """
    poset = surface.poset
    assert surface.n == 3
    centroid = vmean(list(surface.vertices))
    out: set[int] = set()
    for e in poset.faces(1):
        h1, h2 = poset.up(e)
        tri = [surface.vertices[i] for i in poset.vertex_lists[h1][:3]]
        off = [i for i in poset.vertex_lists[h2] if i not in poset.vertex_lists[e]]
        s_off = orient3d(tri[0], tri[1], tri[2], surface.vertices[off[0]])
        s_in = orient3d(tri[0], tri[1], tri[2], centroid)
        if s_off != 0 and s_in != 0 and s_off != s_in:
            out.update(poset.vertex_lists[e])
    return out


def locally_nonconvex_vertices(surface) -> set[int]:
    """Independent n=3 star oracle via local supporting planes.

    A vertex star lies on a convex boundary iff every incident facet's
    plane has the whole local point set (all vertices of incident
    facets) weakly on one side.  This never touches the fan code.
    """
    from plconvex.exactgeom import dot, sign
    from plconvex.surface import facet_equation

    poset = surface.poset
    assert surface.n == 3
    out: set[int] = set()
    for v in range(poset.count(0)):
        star_facets: set = set()
        for e in poset.up(pc.Face(0, v)):
            star_facets.update(poset.up(e))
        local = sorted({w for h in star_facets for w in poset.vertex_lists[h]})
        for h in sorted(star_facets):
            eq = facet_equation(surface, h)
            signs = {sign(dot(eq.normal, surface.vertices[w]) - eq.offset) for w in local}
            if 1 in signs and -1 in signs:
                out.add(v)
                break
    return out


def random_same_kernel_projection(kernel, n: int, rng: random.Random) -> Projection3:
    """A random rank-3 map with the given kernel: invertible mix of the default rows."""
    base = pc.complementary_projection(kernel, n)
    while True:
        mix = [
            [Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(3)]
            for _ in range(3)
        ]
        det = (
            mix[0][0] * (mix[1][1] * mix[2][2] - mix[1][2] * mix[2][1])
            - mix[0][1] * (mix[1][0] * mix[2][2] - mix[1][2] * mix[2][0])
            + mix[0][2] * (mix[1][0] * mix[2][1] - mix[1][1] * mix[2][0])
        )
        if det != 0:
            break
    rows = tuple(
        tuple(sum(mix[i][k] * base.rows[k][j] for k in range(3)) for j in range(n))
        for i in range(3)
    )
    return Projection3(rows, base.kernel)


def pinched_tube() -> pc.PLSurface:
    """Two tetrahedra sharing their apex, connected by a triangulated tube.

    Closed and connected, but the shared apex (vertex 0) has a link made
    of two disjoint cycles, so it is not a manifold point.
    """
    h = Fraction(3, 2)
    coords = [
        (Fraction(0), Fraction(0), h),  # shared apex, index 0
        (Fraction(0), Fraction(0), Fraction(0)),  # a1
        (Fraction(1), Fraction(0), Fraction(0)),  # a2
        (Fraction(0), Fraction(1), Fraction(0)),  # a3
        (Fraction(0), Fraction(0), Fraction(3)),  # b1
        (Fraction(1), Fraction(0), Fraction(3)),  # b2
        (Fraction(0), Fraction(1), Fraction(3)),  # b3
    ]
    a1, a2, a3, b1, b2, b3 = 1, 2, 3, 4, 5, 6
    polygons = [
        [0, a1, a2],
        [0, a2, a3],
        [0, a3, a1],
        [0, b1, b2],
        [0, b2, b3],
        [0, b3, b1],
        [a1, a2, b1],
        [a2, b2, b1],
        [a2, a3, b2],
        [a3, b3, b2],
        [a3, a1, b3],
        [a1, b1, b3],
    ]
    return pc.surface_from_polygons(coords, polygons)


def cyclic_variants(seq):
    """All rotations of seq and of its reversal (cyclic-equality helper)."""
    seq = list(seq)
    m = len(seq)
    for base in (seq, list(reversed(seq))):
        for r in range(m):
            yield tuple(base[r:] + base[:r])
