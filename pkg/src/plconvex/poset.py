"""Partial face posets of closed PL-surfaces.

Only the ranks the verifier needs are stored: dimensions 0, n-3, n-2 and
n-1 of the ambient dimension n (for n = 3 the ranks 0 and n-3 coincide
and are stored once).  Upward incidences are recorded for the two
consecutive steps (n-3) -> (n-2) and (n-2) -> (n-1); everything else the
algorithm needs is derived from those.

The poset is immutable after construction; all operations here are pure
reads, so per-face work may run concurrently without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple


class Face(NamedTuple):
    dim: int
    index: int


class Violation(NamedTuple):
    code: str
    face: Face | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


class LinkCycleError(Exception):
    """The faces around an (n-3)-face do not close into a single cycle."""

    code = "NOT_SINGLE_CYCLE"

    def __init__(self, face: Face, message: str = ""):
        super().__init__(message or f"link of {face} is not a single cycle")
        self.face = face


@dataclass(frozen=True)
class FacePoset:
    """Faces of dims {0, n-3, n-2, n-1} with upward incidences.

    ``faces_per_dim`` maps each stored dimension to its face count; faces
    are addressed as ``Face(dim, index)`` with dense indices.
    ``incidence_up`` maps every (n-3)- and (n-2)-face to the sorted tuple
    of faces one rank higher.  ``vertex_lists`` maps faces of dims n-3,
    n-2, n-1 to sorted tuples of 0-face indices; it is empty when the
    geometry is given by facet equations instead of vertex coordinates.
    """

    n: int
    faces_per_dim: dict[int, int]
    incidence_up: dict[Face, tuple[Face, ...]]
    vertex_lists: dict[Face, tuple[int, ...]] = field(default_factory=dict)

    @property
    def dim_low(self) -> int:
        return self.n - 3

    @property
    def dim_mid(self) -> int:
        return self.n - 2

    @property
    def dim_top(self) -> int:
        return self.n - 1

    def count(self, dim: int) -> int:
        return self.faces_per_dim.get(dim, 0)

    def faces(self, dim: int) -> Iterator[Face]:
        for i in range(self.count(dim)):
            yield Face(dim, i)

    def up(self, face: Face) -> tuple[Face, ...]:
        return self.incidence_up.get(face, ())

    def required_dims(self, mode: str) -> tuple[int, ...]:
        low = {0, self.n - 3} if mode == "vertices" else {self.n - 3}
        return tuple(sorted(low | {self.n - 2, self.n - 1}))


@dataclass(frozen=True)
class LinkCycle:
    """Alternating cyclic sequence G1, H1, ..., Gk, Hk around an (n-3)-face.

    The G's are the incident (n-2)-faces, the H's the incident facets;
    consecutive entries are incident and H_i contains exactly G_i and
    G_{i+1} among the G's.  The start and orientation are normalised:
    G1 is the incident (n-2)-face of least index and H1 the facet of
    least index containing G1.
    """

    center: Face
    entries: tuple[Face, ...]

    @property
    def k(self) -> int:
        return len(self.entries) // 2

    def rays(self) -> tuple[Face, ...]:
        return self.entries[0::2]

    def cells(self) -> tuple[Face, ...]:
        return self.entries[1::2]


def _infer_mode(poset: FacePoset) -> str:
    return "vertices" if poset.vertex_lists else "equations"


def validate_poset(poset: FacePoset, mode: str | None = None) -> ValidationReport:
    """Structural validation: ranks present, references in range, lists nested.

    Does not look at coordinates; geometric checks live with the surface.
    """
    bad: list[Violation] = []
    if mode is None:
        mode = _infer_mode(poset)
    n = poset.n
    if n < 3:
        return ValidationReport((Violation("MISSING_RANK", None, f"ambient dimension {n} < 3"),))

    required = set(poset.required_dims(mode))
    for d in sorted(required):
        if poset.count(d) <= 0:
            bad.append(Violation("MISSING_RANK", None, f"no faces of dimension {d}"))
    for d in poset.faces_per_dim:
        if d not in required and d != 0:
            bad.append(Violation("EXTRA_RANK", None, f"unexpected rank of dimension {d}"))

    def in_range(f: Face) -> bool:
        return 0 <= f.index < poset.count(f.dim)

    for face, ups in poset.incidence_up.items():
        if face.dim not in (n - 3, n - 2):
            bad.append(Violation("INVALID_ID", face, "incidences recorded at unexpected rank"))
            continue
        if not in_range(face):
            bad.append(Violation("INVALID_ID", face, "face index out of range"))
            continue
        if len(set(ups)) != len(ups):
            bad.append(Violation("INVALID_ID", face, "duplicate upward reference"))
        for g in ups:
            if g.dim != face.dim + 1 or not in_range(g):
                bad.append(Violation("INVALID_ID", face, f"bad upward reference {g}"))

    for d in (n - 3, n - 2):
        for face in poset.faces(d):
            if face not in poset.incidence_up:
                bad.append(Violation("INVALID_ID", face, "missing upward incidence record"))

    if mode == "vertices":
        n_verts = poset.count(0)
        for d in sorted({n - 3, n - 2, n - 1}):
            for face in poset.faces(d):
                verts = poset.vertex_lists.get(face)
                if verts is None:
                    bad.append(Violation("MISSING_VERTEX_LIST", face, "no vertex list"))
                    continue
                if any(v < 0 or v >= n_verts for v in verts):
                    bad.append(Violation("INVALID_ID", face, "vertex index out of range"))
        for face, ups in poset.incidence_up.items():
            mine = set(poset.vertex_lists.get(face, ()))
            if not mine:
                continue
            for g in ups:
                theirs = set(poset.vertex_lists.get(g, ()))
                if theirs and not mine <= theirs:
                    bad.append(
                        Violation("VERTEX_NOT_CONTAINED", face, f"vertices not contained in {g}")
                    )
    return ValidationReport(tuple(bad))


def check_closed(poset: FacePoset) -> ValidationReport:
    """Every (n-2)-face must lie in exactly two facets."""
    bad = [
        Violation("NOT_CLOSED", g, f"(n-2)-face lies in {len(poset.up(g))} facets")
        for g in poset.faces(poset.dim_mid)
        if len(poset.up(g)) != 2
    ]
    return ValidationReport(tuple(bad))


def check_connected(poset: FacePoset) -> ValidationReport:
    """The facet adjacency graph (edges = shared (n-2)-faces) must be connected."""
    total = poset.count(poset.dim_top)
    if total == 0:
        return ValidationReport((Violation("NOT_CONNECTED", None, "no facets"),))
    neighbors: dict[int, set[int]] = {i: set() for i in range(total)}
    for g in poset.faces(poset.dim_mid):
        ups = poset.up(g)
        if len(ups) == 2:
            a, b = ups
            neighbors[a.index].add(b.index)
            neighbors[b.index].add(a.index)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in neighbors[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != total:
        return ValidationReport(
            (Violation("NOT_CONNECTED", None, f"{total - len(seen)} facets unreachable"),)
        )
    return ValidationReport()


def link_cycle(poset: FacePoset, center: Face) -> LinkCycle:
    """Walk the faces incident to an (n-3)-face into their unique cycle.

    Raises LinkCycleError when the walk closes early, a face has the
    wrong local valence, or faces are left over; any of those means the
    input is not a closed manifold near ``center``.
    """
    if center.dim != poset.dim_low:
        raise ValueError(f"{center} is not an (n-3)-face")
    mid_faces = poset.up(center)
    if len(mid_faces) < 2:
        raise LinkCycleError(center, "fewer than two (n-2)-faces at center")
    mid_set = set(mid_faces)
    cells_of: dict[Face, tuple[Face, ...]] = {}
    for g in mid_faces:
        ups = poset.up(g)
        if len(ups) != 2:
            raise LinkCycleError(center, f"{g} lies in {len(ups)} facets")
        cells_of[g] = ups
    rim: dict[Face, list[Face]] = {}
    for g in mid_faces:
        for h in cells_of[g]:
            rim.setdefault(h, []).append(g)
    for h, gs in rim.items():
        if len(gs) != 2:
            raise LinkCycleError(center, f"{h} touches {len(gs)} incident (n-2)-faces")

    start = min(mid_faces)
    first_cell = min(cells_of[start])
    entries: list[Face] = []
    g, h = start, first_cell
    while True:
        entries.append(g)
        entries.append(h)
        a, b = rim[h]
        g = b if a == g else a
        if g not in mid_set:
            raise LinkCycleError(center, "walk left the star")
        if g == start:
            break
        a, b = cells_of[g]
        h = b if a == h else a
        if len(entries) > 2 * len(mid_faces):
            raise LinkCycleError(center, "walk does not close")
    if len(entries) != 2 * len(mid_faces) or len(set(entries)) != len(entries):
        raise LinkCycleError(center, "walk closed before exhausting the star")
    return LinkCycle(center, tuple(entries))
