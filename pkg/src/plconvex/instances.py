"""Generators for convex and non-convex test surfaces.

All coordinates are exact rationals; the generators emit only the face
ranks the verifier consumes (dims 0, n-3, n-2, n-1).  Circle-like
shapes use the tangent half-angle parametrization
t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), which keeps points exactly on the
unit circle with small denominators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .exactgeom import Vec, as_vec, dot, vmean, vscale, vsub, vadd
from .poset import Face, FacePoset
from .surface import PLSurface

F0 = Fraction(0)
F1 = Fraction(1)


@dataclass(frozen=True)
class GenSpec:
    """Config for a generated instance; deterministic given (family, params, seed)."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def surface_from_polygons(coords: list[Vec], polygons: list[list[int]]) -> PLSurface:
    """Assemble an n=3 vertex-mode surface from facet vertex cycles.

    Edges are the consecutive vertex pairs of each cycle, deduplicated
    and numbered in sorted order.
    """
    nv = len(coords)
    edge_set = set()
    for cyc in polygons:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edge_set.add((min(a, b), max(a, b)))
    edges = sorted(edge_set)
    edge_id = {e: i for i, e in enumerate(edges)}

    vertex_lists: dict[Face, tuple[int, ...]] = {}
    up: dict[Face, tuple[Face, ...]] = {}
    for v in range(nv):
        vertex_lists[Face(0, v)] = (v,)
    for i, (a, b) in enumerate(edges):
        vertex_lists[Face(1, i)] = (a, b)
    facet_of_edge: dict[int, list[Face]] = {i: [] for i in range(len(edges))}
    edges_of_vertex: dict[int, set[Face]] = {v: set() for v in range(nv)}
    for fi, cyc in enumerate(polygons):
        vertex_lists[Face(2, fi)] = tuple(sorted(set(cyc)))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            ei = edge_id[(min(a, b), max(a, b))]
            facet_of_edge[ei].append(Face(2, fi))
            edges_of_vertex[a].add(Face(1, ei))
            edges_of_vertex[b].add(Face(1, ei))
    for v in range(nv):
        up[Face(0, v)] = tuple(sorted(edges_of_vertex[v]))
    for ei in range(len(edges)):
        up[Face(1, ei)] = tuple(sorted(set(facet_of_edge[ei])))

    poset = FacePoset(
        n=3,
        faces_per_dim={0: nv, 1: len(edges), 2: len(polygons)},
        incidence_up=up,
        vertex_lists=vertex_lists,
    )
    return PLSurface(poset, vertices=tuple(coords))


def _assemble(n: int, per_dim: dict[int, list], vertex_sets, cofaces) -> PLSurface:
    """Shared builder for the combinatorially-defined families.

    ``per_dim`` maps each needed dim > 0 to the list of abstract face
    keys in enumeration order; ``vertex_sets(dim, key)`` yields vertex
    indices, ``cofaces(dim, key)`` yields abstract keys one rank up.
    """
    coords = per_dim.pop("coords")
    dims = sorted(per_dim)
    ids = {d: {key: i for i, key in enumerate(per_dim[d])} for d in dims}
    counts = {0: len(coords)}
    for d in dims:
        counts[d] = len(per_dim[d])
    vertex_lists: dict[Face, tuple[int, ...]] = {}
    up: dict[Face, tuple[Face, ...]] = {}
    if n == 3:
        for v in range(len(coords)):
            vertex_lists[Face(0, v)] = (v,)
    for d in dims:
        for key in per_dim[d]:
            face = Face(d, ids[d][key])
            vertex_lists[face] = tuple(sorted(vertex_sets(d, key)))
            if d in (n - 3, n - 2):
                up[face] = tuple(
                    sorted(Face(d + 1, ids[d + 1][ck]) for ck in cofaces(d, key))
                )
    if n == 3:
        # vertices are the (n-3)-rank; their cofaces are the edges
        edge_up: dict[int, set[Face]] = {v: set() for v in range(len(coords))}
        for key in per_dim[1]:
            f = Face(1, ids[1][key])
            for v in vertex_lists[f]:
                edge_up[v].add(f)
        for v in range(len(coords)):
            up[Face(0, v)] = tuple(sorted(edge_up[v]))
    poset = FacePoset(n=n, faces_per_dim=counts, incidence_up=up, vertex_lists=vertex_lists)
    return PLSurface(poset, vertices=tuple(coords))


def gen_hypercube(n: int) -> PLSurface:
    """Boundary of the unit n-cube; a k-face fixes n-k coordinates."""
    if n < 3:
        raise ValueError("need n >= 3")
    coords = [as_vec([(v >> j) & 1 for j in range(n)]) for v in range(2**n)]
    dims = sorted({n - 3, n - 2, n - 1} - {0})
    per_dim: dict[int, list] = {"coords": coords}
    for k in dims:
        keys = []
        for free in combinations(range(n), k):
            fixed = [j for j in range(n) if j not in free]
            for bits in range(2 ** len(fixed)):
                base = sum(((bits >> t) & 1) << j for t, j in enumerate(fixed))
                keys.append((free, base))
        per_dim[k] = keys

    def vertex_sets(k, key):
        free, base = key
        for bits in range(2 ** len(free)):
            yield base + sum(((bits >> t) & 1) << j for t, j in enumerate(free))

    def cofaces(k, key):
        free, base = key
        for a in range(n):
            if a not in free:
                yield (tuple(sorted(free + (a,))), base & ~(1 << a))

    return _assemble(n, per_dim, vertex_sets, cofaces)


def gen_cross_polytope(n: int) -> PLSurface:
    """Boundary of conv(+-e_i); faces are sign-consistent simplices."""
    if n < 3:
        raise ValueError("need n >= 3")
    coords = []
    for i in range(n):
        for s in (F1, -F1):
            coords.append(tuple(s if j == i else F0 for j in range(n)))
    # vertex 2i is +e_i, vertex 2i+1 is -e_i
    dims = sorted({n - 3, n - 2, n - 1} - {0})
    per_dim: dict[int, list] = {"coords": coords}
    for k in dims:
        per_dim[k] = [
            (supp, signs)
            for supp in combinations(range(n), k + 1)
            for signs in product((0, 1), repeat=k + 1)
        ]

    def vertex_sets(k, key):
        supp, signs = key
        return [2 * c + s for c, s in zip(supp, signs)]

    def cofaces(k, key):
        supp, signs = key
        for a in range(n):
            if a in supp:
                continue
            pos = sum(1 for c in supp if c < a)
            for s in (0, 1):
                yield (
                    tuple(sorted(supp + (a,))),
                    signs[:pos] + (s,) + signs[pos:],
                )

    return _assemble(n, per_dim, vertex_sets, cofaces)


def gen_simplex(n: int) -> PLSurface:
    """Boundary of conv(0, e_1, ..., e_n); every proper vertex subset is a face."""
    if n < 3:
        raise ValueError("need n >= 3")
    coords = [tuple(F0 for _ in range(n))]
    for i in range(n):
        coords.append(tuple(F1 if j == i else F0 for j in range(n)))
    dims = sorted({n - 3, n - 2, n - 1} - {0})
    per_dim: dict[int, list] = {"coords": coords}
    for k in dims:
        per_dim[k] = list(combinations(range(n + 1), k + 1))

    def vertex_sets(k, key):
        return key

    def cofaces(k, key):
        for a in range(n + 1):
            if a not in key:
                yield tuple(sorted(key + (a,)))

    return _assemble(n, per_dim, vertex_sets, cofaces)


def circle_points(m: int) -> list[tuple[Fraction, Fraction]]:
    """m distinct rational points on the unit circle in increasing angular order."""
    pts = []
    for i in range(m):
        t = Fraction(2 * i - (m - 1), m)
        den = 1 + t * t
        pts.append(((1 - t * t) / den, 2 * t / den))
    return pts

def gen_prism(m: int) -> PLSurface:
    """Prism over a convex m-gon inscribed in the unit circle, height 1."""
    if m < 3:
        raise ValueError("need m >= 3")
    base = circle_points(m)
    coords = [(x, y, F0) for x, y in base] + [(x, y, F1) for x, y in base]
    polygons = [list(range(m)), list(range(m, 2 * m))]
    for i in range(m):
        j = (i + 1) % m
        polygons.append([i, j, m + j, m + i])
    return surface_from_polygons(coords, polygons)


def gen_schonhardt() -> PLSurface:
    """Twisted triangular prism with the side quads split into triangles.

    The twist makes the three splitting diagonals reflex, so the surface
    is closed, connected, simplicial and not convex.
    """
    bottom2 = [
        (F1, F0),
        (Fraction(-3, 5), Fraction(4, 5)),
        (Fraction(-3, 5), Fraction(-4, 5)),
    ]
    c, s = Fraction(4, 5), Fraction(3, 5)  # rational rotation, about 37 degrees
    top2 = [(c * x - s * y, s * x + c * y) for x, y in bottom2]
    coords = [(x, y, F0) for x, y in bottom2] + [(x, y, F1) for x, y in top2]
    polygons: list[list[int]] = [[0, 1, 2], [3, 4, 5]]
    for i in range(3):
        j = (i + 1) % 3
        # quad (b_i, b_j, t_j, t_i) split along the diagonal b_i - t_j,
        # which the twist folds inward
        polygons.append([i, j, 3 + j])
        polygons.append([i, 3 + j, 3 + i])
    return surface_from_polygons(coords, polygons)


def _cube_polygons() -> tuple[list[Vec], list[list[int]]]:
    coords = [as_vec([(v >> j) & 1 for j in range(3)]) for v in range(8)]
    polygons = [
        [4, 5, 7, 6],  # z = 1 (listed first so a single dent hits the top)
        [0, 1, 3, 2],  # z = 0
        [0, 1, 5, 4],  # y = 0
        [2, 3, 7, 6],  # y = 1
        [0, 2, 6, 4],  # x = 0
        [1, 3, 7, 5],  # x = 1
    ]
    return coords, polygons


def gen_dented_cube(dents: int = 1) -> PLSurface:
    """Unit cube with ``dents`` facets each replaced by four triangles
    meeting at an apex pulled halfway toward the body center.

    With one dent the apex sits at (1/2, 1/2, 3/4).  All faces stay
    planar, so the surface is a valid realization that fails convexity.
    """
    if not 1 <= dents <= 6:
        raise ValueError("dents must be between 1 and 6")
    coords, polygons = _cube_polygons()
    center = as_vec([Fraction(1, 2)] * 3)
    kept = polygons[dents:]
    out = list(kept)
    for cyc in polygons[:dents]:
        centroid = vmean([coords[v] for v in cyc])
        apex = vadd(centroid, vscale(Fraction(1, 2), vsub(center, centroid)))
        apex_id = len(coords)
        coords.append(apex)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out.append([a, b, apex_id])
    return surface_from_polygons(coords, out)


def split_facet_cube(diagonal: bool = False) -> PLSurface:
    """Unit cube with the top facet subdivided while staying flat.

    ``diagonal=False`` splits the top square into two coplanar rectangles
    through two new mid-edge vertices (whose stars are wedges);
    ``diagonal=True`` splits it into two coplanar triangles along a
    diagonal (the diagonal's endpoints get a flat turn in their stars).
    Either way the surface bounds the same convex cube.
    """
    coords, _ = _cube_polygons()
    if diagonal:
        polygons = [
            [0, 1, 3, 2],
            [0, 1, 5, 4],
            [2, 3, 7, 6],
            [0, 2, 6, 4],
            [1, 3, 7, 5],
            [4, 5, 7],
            [4, 7, 6],
        ]
        return surface_from_polygons(coords, polygons)
    half = Fraction(1, 2)
    coords = coords + [(half, F0, F1), (half, F1, F1)]  # ids 8, 9
    polygons = [
        [0, 1, 3, 2],
        [0, 1, 5, 8, 4],  # y = 0 pentagon, one straight vertex at 8
        [2, 3, 7, 9, 6],  # y = 1 pentagon
        [0, 2, 6, 4],
        [1, 3, 7, 5],
        [4, 8, 9, 6],  # top, x <= 1/2
        [8, 5, 7, 9],  # top, x >= 1/2
    ]
    return surface_from_polygons(coords, polygons)


def dent(surface: PLSurface, vertex_index: int, t: Fraction) -> PLSurface:
    """Move one vertex toward the centroid of all vertices by factor t.

    Combinatorics are untouched; whether the result is still a valid
    realization (faces must stay flat) is the verifier's preflight's
    business.
    """
    if surface.mode != "vertices":
        raise ValueError("dent needs vertex coordinates")
    t = Fraction(t)
    centroid = vmean(list(surface.vertices))
    v = surface.vertices[vertex_index]
    moved = vsub(v, vscale(t, vsub(v, centroid)))
    verts = list(surface.vertices)
    verts[vertex_index] = moved
    return PLSurface(surface.poset, vertices=tuple(verts))


def rigid_motion(surface: PLSurface, seed: int) -> PLSurface:
    """Apply a seeded rational motion: unit shears (det 1) plus a translation.

    Seed 0 is the identity.  Shear coefficients come from a small set so
    coordinate denominators stay bounded.
    """
    if surface.mode != "vertices":
        raise ValueError("rigid_motion needs vertex coordinates")
    if seed == 0:
        return surface
    rng = random.Random(seed)
    n = surface.n
    rows = [[F1 if i == j else F0 for j in range(n)] for i in range(n)]
    for _ in range(3):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        coef = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2, 3]))
        rows[i] = [a + coef * b for a, b in zip(rows[i], rows[j])]
    shift = tuple(Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(n))
    verts = tuple(
        tuple(dot(tuple(r), v) + s for r, s in zip(rows, shift)) for v in surface.vertices
    )
    return PLSurface(surface.poset, vertices=verts)


def scale(surface: PLSurface, factor: Fraction) -> PLSurface:
    """Uniformly scale all coordinates by a positive rational."""
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("factor must be positive")
    verts = tuple(vscale(factor, v) for v in surface.vertices)
    return PLSurface(surface.poset, vertices=verts)


def relabel(surface: PLSurface, seed: int) -> PLSurface:
    """Permute face indices within every rank (a pure renaming)."""
    rng = random.Random(seed)
    poset = surface.poset
    perms = {d: rng.sample(range(c), c) for d, c in poset.faces_per_dim.items()}

    def rename(face: Face) -> Face:
        return Face(face.dim, perms[face.dim][face.index])

    p0 = perms.get(0, [])
    new_up = {
        rename(f): tuple(sorted(rename(g) for g in ups))
        for f, ups in poset.incidence_up.items()
    }
    new_lists = {
        rename(f): tuple(sorted(p0[v] for v in verts))
        for f, verts in poset.vertex_lists.items()
    }
    new_poset = FacePoset(
        n=poset.n,
        faces_per_dim=dict(poset.faces_per_dim),
        incidence_up=new_up,
        vertex_lists=new_lists,
    )
    if surface.mode == "vertices":
        verts: list[Vec] = [None] * len(surface.vertices)  # type: ignore[list-item]
        for old, new in enumerate(p0):
            verts[new] = surface.vertices[old]
        return PLSurface(new_poset, vertices=tuple(verts))
    eqs = {rename(f): eq for f, eq in surface.equations.items()}
    wits = {rename(f): w for f, w in surface.witnesses.items()}
    return PLSurface(new_poset, equations=eqs, witnesses=wits)


def build_instance(spec: GenSpec) -> PLSurface:
    """Materialize a GenSpec (the standalone families)."""
    fam, p = spec.family, spec.params
    if fam == "hypercube":
        return gen_hypercube(p["n"])
    if fam == "cross_polytope":
        return gen_cross_polytope(p["n"])
    if fam == "simplex":
        return gen_simplex(p["n"])
    if fam == "prism":
        return gen_prism(p["m"])
    if fam == "schonhardt":
        return gen_schonhardt()
    if fam == "dented":
        return gen_dented_cube(p.get("dents", 1))
    raise ValueError(f"unknown family {fam!r}")
