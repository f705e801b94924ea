#!/usr/bin/env python3
"""Survey of hypersurface invariants over dilated polygons and 3-polytopes.

Prints, for each Newton polytope: lattice counts, genus, skeleton count, the
frontier Hodge numbers, and (for polygons) the curve class with its Euler
characteristic.
"""

import argparse

from toric_ih.counting import lattice_points, skeleton_count
from toric_ih.fixtures import cube, lattice_polygon, octahedron, simplex
from toric_ih.hypersurface import (
    curve_e_polynomial,
    frontier_hodge,
    geometric_genus_count,
)


def survey(name, p):
    lat = p.face_lattice()
    l = lattice_points(p)[0]
    g = geometric_genus_count(p)
    pi = skeleton_count(lat)
    front = frontier_hodge(p, lat)
    line = f"{name:16s} dim={p.n}  l={l:3d}  l*={g:2d}  Pi={pi:3d}  frontier={front}"
    if p.n == 2:
        e = curve_e_polynomial(p)
        line += f"  E={e}  chi={e(1, 1)}"
    print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dilations", type=int, default=5,
                    help="largest triangle dilation to survey")
    args = ap.parse_args()

    for k in range(1, args.dilations + 1):
        survey(f"{k}*triangle", simplex(2, scale=k))
    for k in range(3, 9):
        survey(f"{k}-gon", lattice_polygon(k))
    survey("square", cube(2))
    survey("cube", cube(3))
    survey("octahedron", octahedron())
    survey("2*simplex-3", simplex(3, scale=2))
    survey("4*simplex-3", simplex(3, scale=4))


if __name__ == "__main__":
    main()
