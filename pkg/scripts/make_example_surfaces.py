#!/usr/bin/env python3
"""Write a small gallery of example surfaces (.pls and .off) to a directory."""

import argparse
from pathlib import Path

import plconvex as pc


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="examples_out")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    gallery = {
        "cube.pls": pc.gen_hypercube(3),
        "tesseract.pls": pc.gen_hypercube(4),
        "octahedron.pls": pc.gen_cross_polytope(3),
        "simplex4.pls": pc.gen_simplex(4),
        "prism12.pls": pc.gen_prism(12),
        "schonhardt.pls": pc.gen_schonhardt(),
        "dented_cube.pls": pc.gen_dented_cube(),
        "split_top_cube.pls": pc.split_facet_cube(),
        "cube_equations.pls": pc.as_equations(pc.gen_hypercube(3)),
    }
    for name, surface in gallery.items():
        (out / name).write_text(pc.emit_pls(surface) + "\n")
        verdict = pc.verify(surface)
        print(f"{name}: {verdict.kind}")

    off = out / "tetrahedron.off"
    off.write_text(
        "OFF\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n"
        "3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n"
    )
    print(f"tetrahedron.off: {pc.verify(pc.parse_off(off.read_text())).kind}")
    print(f"wrote {len(gallery) + 1} files to {out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
