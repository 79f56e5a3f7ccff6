"""File formats: the PLS document (JSON) and a small OFF subset for n = 3.

PLS documents carry exact rationals as strings "p/q" (or JSON integers);
decimal floats are rejected so no rounding can sneak in.  Vertex-mode
documents list coordinates plus per-face vertex lists, and upward
incidences are derived from vertex containment.  Equations-mode
documents list facet hyperplanes plus explicit upward links and a
relative-interior witness point per face.

Vertex mode, schematically::

    {"n": 3, "mode": "vertices",
     "vertices": [["0", "0", "0"], ...],
     "faces": {"1": [{"id": 0, "vertices": [0, 1]}, ...],
               "2": [{"id": 0, "vertices": [0, 1, 2, 3]}, ...]}}

Equations mode replaces vertex lists with records
``{"id", "up": [...], "witness": [...]}`` and facet records
``{"id", "normal": [...], "offset": "p/q", "witness": [...]}``.

OFF files (n = 3 only) are parsed with exact decimal-to-rational
conversion; edges are derived from consecutive facet-cycle pairs and
must each occur in exactly two facets.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactgeom import Vec
from .instances import surface_from_polygons
from .poset import Face, FacePoset, validate_poset
from .surface import EQUATION_MODE, FacetEquation, PLSurface, VERTEX_MODE


class ParseError(Exception):
    code = "PARSE_ERROR"


class SemanticError(Exception):
    code = "SEMANTIC_ERROR"


class NonManifoldError(Exception):
    code = "NON_MANIFOLD"


def _frac(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: rationals must be 'p/q' strings or integers")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"{where}: bad rational {value!r} ({exc})") from None


def _vec(values, where: str) -> Vec:
    if not isinstance(values, list):
        raise ParseError(f"{where}: expected a coordinate list")
    return tuple(_frac(x, where) for x in values)


def _records(doc_faces, dim: int, where: str) -> list[dict]:
    recs = doc_faces.get(str(dim))
    if recs is None:
        raise ParseError(f"{where}: missing face records for dimension {dim}")
    if not isinstance(recs, list):
        raise ParseError(f"{where}: face records must be a list")
    by_id: dict[int, dict] = {}
    for rec in recs:
        if not isinstance(rec, dict) or "id" not in rec:
            raise ParseError(f"{where}: face record without id")
        if rec["id"] in by_id:
            raise ParseError(f"{where}: duplicate face id {rec['id']}")
        by_id[rec["id"]] = rec
    if sorted(by_id) != list(range(len(by_id))):
        raise ParseError(f"{where}: face ids must be dense 0..{len(by_id) - 1}")
    return [by_id[i] for i in range(len(by_id))]


def _derive_up(lower: dict[Face, tuple[int, ...]], upper: dict[Face, tuple[int, ...]]):
    """Upward incidence by vertex containment, via a vertex->cofaces index."""
    cofaces_at: dict[int, list[Face]] = {}
    upper_sets = {f: frozenset(vs) for f, vs in upper.items()}
    for f, vs in upper.items():
        for v in vs:
            cofaces_at.setdefault(v, []).append(f)
    out: dict[Face, tuple[Face, ...]] = {}
    for f, vs in lower.items():
        cands = cofaces_at.get(vs[0], [])
        mine = frozenset(vs)
        out[f] = tuple(sorted(c for c in cands if mine <= upper_sets[c]))
    return out


def parse_pls(text: str) -> PLSurface:
    """Parse a PLS document; exact round-trip partner of emit_pls."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    try:
        n = int(doc["n"])
        mode = doc["mode"]
    except (KeyError, TypeError, ValueError):
        raise ParseError("fields 'n' and 'mode' are required") from None
    if n < 3:
        raise ParseError(f"n must be >= 3, got {n}")
    if mode not in (VERTEX_MODE, EQUATION_MODE):
        raise ParseError(f"unknown mode {mode!r}")
    faces_doc = doc.get("faces")
    if not isinstance(faces_doc, dict):
        raise ParseError("field 'faces' must be an object keyed by dimension")

    if mode == VERTEX_MODE:
        verts_doc = doc.get("vertices")
        if not isinstance(verts_doc, list) or not verts_doc:
            raise ParseError("vertex mode needs a nonempty 'vertices' list")
        coords = [_vec(v, f"vertices[{i}]") for i, v in enumerate(verts_doc)]
        if any(len(c) != n for c in coords):
            raise ParseError("every vertex needs exactly n coordinates")
        nv = len(coords)
        dims = sorted({n - 3, n - 2, n - 1} - {0})
        vertex_lists: dict[Face, tuple[int, ...]] = {}
        for i in range(nv):
            if n == 3:
                vertex_lists[Face(0, i)] = (i,)
        counts = {0: nv}
        per_dim: dict[int, dict[Face, tuple[int, ...]]] = {}
        for d in dims:
            recs = _records(faces_doc, d, f"faces[{d}]")
            counts[d] = len(recs)
            per_dim[d] = {}
            for i, rec in enumerate(recs):
                vs = rec.get("vertices")
                if not isinstance(vs, list) or not all(isinstance(v, int) for v in vs):
                    raise ParseError(f"faces[{d}][{i}]: 'vertices' must be a list of ints")
                if any(v < 0 or v >= nv for v in vs):
                    raise SemanticError(f"faces[{d}][{i}]: vertex index out of range")
                per_dim[d][Face(d, i)] = tuple(sorted(set(vs)))
            vertex_lists.update(per_dim[d])
        low = {Face(0, i): (i,) for i in range(nv)} if n == 3 else per_dim[n - 3]
        up = _derive_up(low, per_dim[n - 2])
        up.update(_derive_up(per_dim[n - 2], per_dim[n - 1]))
        poset = FacePoset(n=n, faces_per_dim=counts, incidence_up=up, vertex_lists=vertex_lists)
        surface = PLSurface(poset, vertices=tuple(coords))
    else:
        dims = sorted({n - 3, n - 2, n - 1})
        counts = {}
        recs_by_dim = {}
        for d in dims:
            recs = _records(faces_doc, d, f"faces[{d}]")
            counts[d] = len(recs)
            recs_by_dim[d] = recs
        up: dict[Face, tuple[Face, ...]] = {}
        witnesses: dict[Face, Vec] = {}
        equations: dict[Face, FacetEquation] = {}
        for d in dims:
            for i, rec in enumerate(recs_by_dim[d]):
                face = Face(d, i)
                w = rec.get("witness")
                if w is None:
                    raise ParseError(f"faces[{d}][{i}]: equations mode requires a witness")
                witnesses[face] = _vec(w, f"faces[{d}][{i}].witness")
                if d < n - 1:
                    ups = rec.get("up")
                    if not isinstance(ups, list) or not all(isinstance(u, int) for u in ups):
                        raise ParseError(f"faces[{d}][{i}]: 'up' must be a list of ints")
                    if any(u < 0 or u >= counts.get(d + 1, 0) for u in ups):
                        raise SemanticError(f"faces[{d}][{i}]: up reference out of range")
                    up[face] = tuple(sorted(Face(d + 1, u) for u in set(ups)))
                else:
                    if "normal" not in rec or "offset" not in rec:
                        raise ParseError(f"faces[{d}][{i}]: facet needs 'normal' and 'offset'")
                    equations[face] = FacetEquation(
                        _vec(rec["normal"], f"faces[{d}][{i}].normal"),
                        _frac(rec["offset"], f"faces[{d}][{i}].offset"),
                    )
        poset = FacePoset(n=n, faces_per_dim=counts, incidence_up=up)
        surface = PLSurface(poset, equations=equations, witnesses=witnesses)

    report = validate_poset(surface.poset, surface.mode)
    if not report.ok:
        first = report.violations[0]
        raise SemanticError(f"{first.code}: {first.message}")
    return surface


def _frac_str(x: Fraction) -> str:
    return str(x)


def emit_pls(surface: PLSurface) -> str:
    """Serialize to the canonical PLS document (parse_pls round-trips it)."""
    n = surface.n
    poset = surface.poset
    doc: dict = {"n": n, "mode": surface.mode}
    faces: dict[str, list] = {}
    if surface.mode == VERTEX_MODE:
        doc["vertices"] = [[_frac_str(c) for c in v] for v in surface.vertices]
        for d in sorted({n - 3, n - 2, n - 1} - {0}):
            faces[str(d)] = [
                {"id": f.index, "vertices": list(poset.vertex_lists[f])}
                for f in poset.faces(d)
            ]
    else:
        for d in sorted({n - 3, n - 2, n - 1}):
            recs = []
            for f in poset.faces(d):
                rec: dict = {"id": f.index, "witness": [_frac_str(c) for c in surface.witnesses[f]]}
                if d < n - 1:
                    rec["up"] = [g.index for g in poset.up(f)]
                else:
                    eq = surface.equations[f]
                    rec["normal"] = [_frac_str(c) for c in eq.normal]
                    rec["offset"] = _frac_str(eq.offset)
                recs.append(rec)
            faces[str(d)] = recs
    doc["faces"] = faces
    return json.dumps(doc, indent=1)


def parse_off(text: str) -> PLSurface:
    """Parse the OFF subset: header, counts, vertex rows, facet cycles (n = 3)."""
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((ln, stripped))
    if not lines or lines[0][1] != "OFF":
        raise ParseError("line 1: missing OFF header")
    if len(lines) < 2:
        raise ParseError("missing counts line")
    ln, counts_line = lines[1]
    parts = counts_line.split()
    if len(parts) != 3:
        raise ParseError(f"line {ln}: counts line needs three numbers")
    try:
        nv, nf, _ne = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"line {ln}: bad counts {counts_line!r}") from None
    body = lines[2:]
    if len(body) < nv + nf:
        raise ParseError(f"expected {nv} vertex and {nf} facet lines")
    coords = []
    for ln, row in body[:nv]:
        toks = row.split()
        if len(toks) != 3:
            raise ParseError(f"line {ln}: expected 3 coordinates")
        try:
            coords.append(tuple(Fraction(t) for t in toks))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {ln}: bad coordinate in {row!r}") from None
    polygons = []
    for ln, row in body[nv : nv + nf]:
        toks = row.split()
        try:
            k = int(toks[0])
            cyc = [int(t) for t in toks[1 : 1 + k]]
        except (ValueError, IndexError):
            raise ParseError(f"line {ln}: bad facet row {row!r}") from None
        if len(cyc) != k or k < 3:
            raise ParseError(f"line {ln}: facet row {row!r} is inconsistent")
        if any(v < 0 or v >= nv for v in cyc):
            raise SemanticError(f"line {ln}: facet lists unknown vertex")
        polygons.append(cyc)

    edge_uses: dict[tuple[int, int], int] = {}
    for cyc in polygons:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edge_uses[(min(a, b), max(a, b))] = edge_uses.get((min(a, b), max(a, b)), 0) + 1
    bad = {e: c for e, c in edge_uses.items() if c != 2}
    if bad:
        e, c = next(iter(sorted(bad.items())))
        raise NonManifoldError(f"edge {e} occurs in {c} facets")
    return surface_from_polygons(coords, polygons)
