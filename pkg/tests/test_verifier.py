import random
from fractions import Fraction

import pytest

import plconvex as pc
from plconvex.poset import Face, FacePoset, LinkCycle
from plconvex.surface import PLSurface, direction_space
from plconvex.verifier import verify, verify_face

from conftest import (
    locally_nonconvex_vertices,
    pinched_tube,
    random_same_kernel_projection,
    reflex_adjacent_vertices,
)

F = Fraction


def test_cube_convex(cube):
    v = verify(cube)
    assert v.kind == "CONVEX"
    assert v.witness is None and v.reason is None
    # every star contributes 2k entries
    assert v.entries_checked == 2 * sum(len(cube.poset.up(f)) for f in cube.poset.faces(0))


def test_simplex_boundary_in_r4_convex():
    v = verify(pc.gen_simplex(4))
    assert v.kind == "CONVEX"


def test_schonhardt_not_convex(schonhardt):
    v = verify(schonhardt, collect_all=True)
    assert v.kind == "NOT_CONVEX"
    expected = locally_nonconvex_vertices(schonhardt)
    assert expected
    assert {f.index for f, _ in v.failures} == expected
    # here the local defects coincide with the reflex-edge endpoints
    assert expected == reflex_adjacent_vertices(schonhardt)
    assert v.witness == Face(0, min(expected))
    assert pc.oracle_verdict(schonhardt).convex is False


def test_dented_cube_witness_near_dent():
    s = pc.gen_dented_cube()
    v = verify(s, collect_all=True)
    assert v.kind == "NOT_CONVEX"
    expected = locally_nonconvex_vertices(s)
    assert {f.index for f, _ in v.failures} == expected
    assert v.witness == Face(0, min(expected))
    # the witness shares a facet with the dent apex (vertex 8)
    apex_facets = {
        h for h in s.poset.faces(2) if 8 in s.poset.vertex_lists[h]
    }
    witness_facets = {
        h for h in s.poset.faces(2) if v.witness.index in s.poset.vertex_lists[h]
    }
    assert apex_facets & witness_facets
    assert pc.oracle_verdict(s).convex is False


def test_verify_face_cube_all_pointed(cube):
    for f in cube.poset.faces(0):
        assert verify_face(cube, f) == (True, "OK_POINTED")


def test_split_facet_cube_accepted():
    for diagonal in (False, True):
        s = pc.split_facet_cube(diagonal=diagonal)
        v = verify(s)
        assert v.kind == "CONVEX"
        assert pc.oracle_verdict(s).convex is True


def test_split_facet_cube_star_reasons():
    s = pc.split_facet_cube(diagonal=False)
    reasons = {f.index: verify_face(s, f).reason for f in s.poset.faces(0)}
    # the two inserted mid-edge vertices sit on a wedge line
    assert reasons[8] == "OK_FLAT"
    assert reasons[9] == "OK_FLAT"
    assert all(r == "OK_POINTED" for i, r in reasons.items() if i < 8)


def test_invalid_before_stars(cube):
    dented = pc.dent(cube, 0, F(1, 4))
    v = verify(dented)
    assert v.kind == "INVALID"
    assert v.reason == "DEGENERATE_FACE"


def test_pinched_vertex_invalid():
    s = pinched_tube()
    v = verify(s)
    assert v.kind == "INVALID"
    assert v.reason == "NOT_SINGLE_CYCLE"
    assert v.witness == Face(0, 0)


def test_order_independence(schonhardt):
    bit = verify(schonhardt).kind
    faces = list(schonhardt.poset.faces(0))
    for seed in range(5):
        rng = random.Random(seed)
        rng.shuffle(faces)
        per_face = [verify_face(schonhardt, f).convex for f in faces]
        assert (all(per_face) and bit == "CONVEX") or (not all(per_face) and bit == "NOT_CONVEX")


def test_parallel_matches_sequential(schonhardt, cube):
    for s in (schonhardt, cube, pc.gen_dented_cube(3)):
        seq = verify(s, parallel=False, collect_all=True)
        par = verify(s, parallel=True, collect_all=True)
        assert (seq.kind, seq.witness, seq.reason, seq.failures) == (
            par.kind,
            par.witness,
            par.reason,
            par.failures,
        )
        assert seq.entries_checked == par.entries_checked


def test_custom_projection_equals_fast_path(tesseract, schonhardt):
    rng = random.Random(11)
    for surface in (tesseract, schonhardt):
        for f in surface.poset.faces(surface.poset.dim_low):
            base = verify_face(surface, f)
            kern = direction_space(surface, f)
            for _ in range(5):
                proj = random_same_kernel_projection(kern, surface.n, rng)
                assert verify_face(surface, f, projection=proj) == base


def test_zero_direction_guard():
    # a (crafted) 2-face whose vertices all sit on the center's line: its
    # interior point projects exactly onto the apex
    coords = (
        (F(0), F(0), F(0), F(0)),
        (F(1), F(0), F(0), F(0)),
        (F(2), F(0), F(0), F(0)),
        (F(0), F(1), F(0), F(0)),
    )
    g0, g1 = Face(2, 0), Face(2, 1)
    h0, h1 = Face(3, 0), Face(3, 1)
    center = Face(1, 0)
    poset = FacePoset(
        n=4,
        faces_per_dim={0: 4, 1: 1, 2: 2, 3: 2},
        incidence_up={center: (g0, g1), g0: (h0, h1), g1: (h0, h1)},
        vertex_lists={
            center: (0, 1),
            g0: (0, 1, 2),  # collapsed onto the center's line
            g1: (0, 1, 3),
            h0: (0, 1, 2, 3),
            h1: (0, 1, 2, 3),
        },
    )
    s = PLSurface(poset, vertices=coords)
    kern = direction_space(s, center)
    proj = pc.complementary_projection(kern, 4)
    cyc = LinkCycle(center, (g0, h0, g1, h1))
    with pytest.raises(pc.ZeroDirectionError):
        pc.build_fan(s, center, cyc, proj)
    assert verify_face(s, center).reason == "ZERO_DIRECTION"


def test_verdict_flags():
    v = pc.Verdict("CONVEX")
    assert v.convex
    assert not pc.Verdict("NOT_CONVEX", witness=Face(0, 0), reason="NO_SUPPORT").convex
