"""Convexity of a projected star: a fan of rays and cell witnesses in 3-space.

The star of an (n-3)-face, projected along the face's direction space,
becomes a two-dimensional fan in R^3: an apex, the rays that are the
images of the incident (n-2)-faces, and between consecutive rays the
image of one facet.  Each facet contributes a witness direction pointing
into its projected cone; rays alone cannot tell a fold (two facets
occupying the same cone) or a reflex occupancy from a convex fan, so the
cyclic entry list interleaves rays with witnesses.

The fan is accepted exactly when its neighborhood of the apex lies on
the boundary of a convex 3-dimensional body.  Three shapes qualify:

* pointed: a strict support vector s exists (s . d > 0 for every entry
  direction d).  Scaling each direction onto the plane x . s = 1 turns
  the fan into a closed polygon which must be weakly convex and wind
  exactly once (witnesses sit on polygon edges, giving flat turns).
* flat: all directions span a 2-plane and sweep it exactly once in a
  consistent sense; the neighborhood is a flat disk.
* wedge: the directions span 3-space but two antipodal rays form a fold
  line, and each of the two chains between them sweeps half of its own
  plane monotonically; the neighborhood is the boundary of a dihedral
  wedge.  This covers subdividing vertices sitting on an edge line of
  an otherwise convex surface.

Everything else is rejected with a reason code; failure of the fan to be
an embedded once-wound fan (the immersion defect) surfaces as one of the
rejection reasons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exactgeom import (
    Projection3,
    Vec,
    ZERO,
    coords_in_2basis,
    cross3,
    dot,
    is_zero_vec,
    project,
    vsub,
)
from .poset import Face, LinkCycle
from .surface import PLSurface, interior_point

RAY = "ray"
CELL = "cell"

OK_POINTED = "OK_POINTED"
OK_FLAT = "OK_FLAT"
NO_SUPPORT = "NO_SUPPORT"
BAD_ROTATION_INDEX = "BAD_ROTATION_INDEX"
WRONG_TURN_SIGN = "WRONG_TURN_SIGN"
ZERO_ANGLE_CONE = "ZERO_ANGLE_CONE"
DEGENERATE_RANK = "DEGENERATE_RANK"

ACCEPT_REASONS = frozenset({OK_POINTED, OK_FLAT})


class ConvexityCheck(NamedTuple):
    convex: bool
    reason: str


class FanEntry(NamedTuple):
    kind: str  # RAY or CELL
    direction: Vec
    source: Face


@dataclass(frozen=True)
class Fan3:
    """Apex plus the cyclic alternating ray/witness directions of a star."""

    apex: Vec
    entries: tuple[FanEntry, ...]

    def directions(self) -> list[Vec]:
        return [e.direction for e in self.entries]


class ZeroDirectionError(Exception):
    """A face's interior point projects onto the apex."""

    code = "ZERO_DIRECTION"

    def __init__(self, face: Face):
        super().__init__(f"projected direction of {face} vanishes")
        self.face = face


class OppositeDirectionsError(Exception):
    """Consecutive directions are antiparallel; the half-turn has no sign."""

    code = "OPPOSITE_DIRECTIONS"


def build_fan(surface: PLSurface, center: Face, cycle: LinkCycle, proj: Projection3) -> Fan3:
    """Project the star of ``center`` into 3-space along its direction space.

    The apex is the projected interior point of ``center``; every face of
    the link cycle contributes the direction from the apex to its own
    projected interior point, in cycle order.
    """
    apex = project(proj, interior_point(surface, center))
    entries = []
    for face in cycle.entries:
        d = vsub(project(proj, interior_point(surface, face)), apex)
        if is_zero_vec(d):
            raise ZeroDirectionError(face)
        kind = RAY if face.dim == surface.poset.dim_mid else CELL
        entries.append(FanEntry(kind, d, face))
    return Fan3(apex, tuple(entries))


IVec = tuple[int, int, int]


def _int_dir(d: Vec) -> IVec:
    """Scale a rational direction to a primitive-ish integer vector (same ray)."""
    scale = math.lcm(d[0].denominator, d[1].denominator, d[2].denominator)
    return (
        d[0].numerator * (scale // d[0].denominator),
        d[1].numerator * (scale // d[1].denominator),
        d[2].numerator * (scale // d[2].denominator),
    )


def _icross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _idot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _rank3(dirs: Sequence[IVec]) -> int:
    """Rank of a set of integer 3-vectors."""
    first = next((d for d in dirs if d != (0, 0, 0)), None)
    if first is None:
        return 0
    normal = None
    for d in dirs:
        c = _icross(first, d)
        if c != (0, 0, 0):
            normal = c
            break
    if normal is None:
        return 1
    return 3 if any(_idot(normal, d) != 0 for d in dirs) else 2


def _float_candidate(dirs: Sequence[IVec]) -> IVec | None:
    """Sum of float-normalized directions, rounded back to an integer vector."""
    acc = [0.0, 0.0, 0.0]
    for d in dirs:
        try:
            f = [float(c) for c in d]
        except OverflowError:
            return None
        norm = math.sqrt(sum(c * c for c in f))
        if not math.isfinite(norm) or norm == 0.0:
            return None
        for k in range(3):
            acc[k] += f[k] / norm
    if not all(math.isfinite(c) for c in acc):
        return None
    fracs = [Fraction(c).limit_denominator(10**9) for c in acc]
    scale = math.lcm(*(f.denominator for f in fracs))
    cand = tuple(f.numerator * (scale // f.denominator) for f in fracs)
    return None if cand == (0, 0, 0) else cand


def _int_reference_direction(dirs: Sequence[IVec]) -> IVec | None:
    cand = _float_candidate(dirs)
    if cand is not None and all(_idot(cand, d) > 0 for d in dirs):
        return cand
    found: list[IVec] = []
    m = len(dirs)
    for i in range(m):
        for j in range(i + 1, m):
            c = _icross(dirs[i], dirs[j])
            if c == (0, 0, 0):
                continue
            for cc in (c, (-c[0], -c[1], -c[2])):
                if all(_idot(cc, d) >= 0 for d in dirs):
                    found.append(cc)
    if found:
        s = found[0]
        for v in found[1:]:
            s = (s[0] + v[0], s[1] + v[1], s[2] + v[2])
        if s != (0, 0, 0) and all(_idot(s, d) > 0 for d in dirs):
            return s
    return None


def reference_direction(dirs: Sequence[Vec]) -> Vec | None:
    """A rational s with s . d > 0 for every direction, or None if impossible.

    The float heuristic (sum of unit vectors) is tried first and certified
    by exact sign tests.  On failure the strict feasibility problem is
    decided exactly: when the directions span 3-space, the dual cone
    {s : s . d >= 0} is generated by those pairwise cross products that
    are weakly feasible, so their sum is interior whenever the cone is
    full-dimensional, and otherwise no strict support exists.
    """
    s = _int_reference_direction([_int_dir(d) for d in dirs])
    if s is None:
        return None
    return (Fraction(s[0]), Fraction(s[1]), Fraction(s[2]))


def _lower_half(u: tuple[Fraction, Fraction]) -> bool:
    # angle in [-pi, 0): strictly below the x-axis, or on the negative x-axis
    return u[1] < 0 or (u[1] == 0 and u[0] < 0)


def rotation_index(directions: Sequence[tuple[Fraction, Fraction]]) -> int:
    """Winding number of a cyclic sequence of nonzero plane directions.

    Each step follows the short arc between consecutive directions; the
    result counts signed crossings of the positive x half-axis, which is
    exact and equals the total turning divided by a full turn.  Raises
    OppositeDirectionsError on an antiparallel consecutive pair (the
    half-turn's sign would be undefined).
    """
    m = len(directions)
    total = 0
    for i in range(m):
        u = directions[i]
        v = directions[(i + 1) % m]
        c = u[0] * v[1] - u[1] * v[0]
        d = u[0] * v[0] + u[1] * v[1]
        if c == 0:
            if d < 0:
                raise OppositeDirectionsError(f"entries {i} and {(i + 1) % m}")
            continue
        if _lower_half(u) and not _lower_half(v) and c > 0:
            total += 1
        elif not _lower_half(u) and _lower_half(v) and c < 0:
            total -= 1
    return total


def _closed_edges_convex(edges: Sequence[tuple]) -> ConvexityCheck:
    """Shared clause checks on the edge vectors of a closed polygon.

    Works generically over exact numeric types (Fraction or int); a zero
    edge must have been filtered out by the caller.
    """
    m = len(edges)
    turn = 0
    for i in range(m):
        u = edges[i - 1]
        v = edges[i]
        c = u[0] * v[1] - u[1] * v[0]
        if c == 0:
            if u[0] * v[0] + u[1] * v[1] < 0:
                return ConvexityCheck(False, WRONG_TURN_SIGN)
            continue
        s = 1 if c > 0 else -1
        if turn == 0:
            turn = s
        elif s != turn:
            return ConvexityCheck(False, WRONG_TURN_SIGN)
    if turn == 0:
        # all turns zero cannot close a polygon; reachable only through junk
        return ConvexityCheck(False, WRONG_TURN_SIGN)
    if abs(rotation_index(edges)) != 1:
        return ConvexityCheck(False, BAD_ROTATION_INDEX)
    return ConvexityCheck(True, OK_POINTED)


def polygon_is_convex(points: Sequence[tuple[Fraction, Fraction]]) -> ConvexityCheck:
    """Weak convexity of a closed polygon, wound exactly once.

    Checked clause by clause over the whole cycle (so the reported reason
    does not depend on the starting point): no repeated consecutive
    points; no reversal and no mixed turn signs (zero turns are allowed:
    collinear points are fine); rotation index of the edge directions
    exactly +-1.
    """
    m = len(points)
    if m < 3:
        raise ValueError("polygon needs at least 3 points")
    edges = []
    for i in range(m):
        e = (points[(i + 1) % m][0] - points[i][0], points[(i + 1) % m][1] - points[i][1])
        if e[0] == 0 and e[1] == 0:
            return ConvexityCheck(False, ZERO_ANGLE_CONE)
        edges.append(e)
    return _closed_edges_convex(edges)


def _flat_check(dirs2: Sequence[tuple]) -> ConvexityCheck:
    """Directions confined to a plane must sweep it once, strictly monotonically."""
    m = len(dirs2)
    turn = 0
    for i in range(m):
        u = dirs2[i]
        v = dirs2[(i + 1) % m]
        c = u[0] * v[1] - u[1] * v[0]
        if c == 0:
            d = u[0] * v[0] + u[1] * v[1]
            return ConvexityCheck(False, ZERO_ANGLE_CONE if d > 0 else WRONG_TURN_SIGN)
        s = 1 if c > 0 else -1
        if turn == 0:
            turn = s
        elif s != turn:
            return ConvexityCheck(False, WRONG_TURN_SIGN)
    if abs(rotation_index(dirs2)) != 1:
        return ConvexityCheck(False, BAD_ROTATION_INDEX)
    return ConvexityCheck(True, OK_FLAT)


def _chain_is_half_sweep(start: Vec, end: Vec, between: Sequence[Vec]) -> bool:
    """Do the directions sweep monotonically through one half-plane?

    ``start`` and ``end`` are antiparallel fold directions; the chain
    must stay inside a single plane through the fold line, strictly on
    one side of it, with strictly monotone angular order from start to
    end.
    """
    if not between:
        return False
    b1, b2 = start, between[0]
    seq = [(Fraction(1), ZERO)]
    for u in between:
        xy = coords_in_2basis(u, b1, b2)
        if xy is None or xy[1] <= 0:
            return False
        seq.append(xy)
    seq.append((Fraction(-1), ZERO))
    turn = 0
    for a, b in zip(seq, seq[1:]):
        c = a[0] * b[1] - a[1] * b[0]
        if c == 0:
            return False
        s = 1 if c > 0 else -1
        if turn == 0:
            turn = s
        elif s != turn:
            return False
    return True


def _wedge_check(fan: Fan3) -> ConvexityCheck:
    """Rank-3 fan without strict support: accept only a genuine dihedral wedge."""
    entries = fan.entries
    m = len(entries)
    dirs = fan.directions()
    pairs = []
    for i in range(m):
        if entries[i].kind != RAY:
            continue
        for j in range(i + 1, m):
            if entries[j].kind != RAY:
                continue
            if is_zero_vec(cross3(dirs[i], dirs[j])) and dot(dirs[i], dirs[j]) < 0:
                pairs.append((i, j))
    for i, j in pairs:
        axis = dirs[i]
        cluttered = False
        for k in range(m):
            if k in (i, j):
                continue
            if is_zero_vec(cross3(dirs[k], axis)):
                cluttered = True
                break
        if cluttered:
            continue
        chain_a = [dirs[k % m] for k in range(i + 1, i + ((j - i) % m))]
        chain_b = [dirs[k % m] for k in range(j + 1, j + ((i - j) % m))]
        if _chain_is_half_sweep(dirs[i], dirs[j], chain_a) and _chain_is_half_sweep(
            dirs[j], dirs[i], chain_b
        ):
            return ConvexityCheck(True, OK_FLAT)
    return ConvexityCheck(False, NO_SUPPORT)


def fan_is_convex(fan: Fan3) -> ConvexityCheck:
    """Decide whether the fan bounds a convex neighborhood of its apex.

    All sign tests run on integer-rescaled directions (rescaling along a
    ray changes nothing), and the pointed branch works with homogeneous
    coordinates of the section points so no divisions are needed.
    """
    dirs = [_int_dir(d) for d in fan.directions()]
    r = _rank3(dirs)
    if r <= 1:
        return ConvexityCheck(False, DEGENERATE_RANK)
    if r == 2:
        first = next(d for d in dirs if d != (0, 0, 0))
        other = next(d for d in dirs if _icross(first, d) != (0, 0, 0))
        # coordinate pair with a nonzero basis minor; every direction then
        # gets plane coordinates scaled by that common minor
        i, j, det = next(
            (i, j, first[i] * other[j] - first[j] * other[i])
            for i in range(3)
            for j in range(3)
            if first[i] * other[j] - first[j] * other[i] != 0
        )
        dirs2 = [(d[i] * other[j] - d[j] * other[i], first[i] * d[j] - first[j] * d[i]) for d in dirs]
        return _flat_check(dirs2)
    s = _int_reference_direction(dirs)
    if s is None:
        return _wedge_check(fan)
    b1 = next(
        c
        for c in ((-s[1], s[0], 0), (-s[2], 0, s[0]), (0, -s[2], s[1]))
        if c != (0, 0, 0)
    )
    b2 = _icross(s, b1)
    # homogeneous section points (x, y, w), w > 0; the true point is (x/w, y/w)
    hom = [(_idot(d, b1), _idot(d, b2), _idot(d, s)) for d in dirs]
    m = len(hom)
    edges = []
    for k in range(m):
        a = hom[k]
        b = hom[(k + 1) % m]
        e = (a[2] * b[0] - b[2] * a[0], a[2] * b[1] - b[2] * a[1])
        if e == (0, 0):
            return ConvexityCheck(False, ZERO_ANGLE_CONE)
        edges.append(e)
    return _closed_edges_convex(edges)
