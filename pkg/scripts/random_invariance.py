#!/usr/bin/env python3
"""Randomized invariance sweep, a larger budget than the test suite uses.

Draws random lattice polytopes, checks the structural invariants of the
stalk recursion and the counting identities, and confirms invariance of the
outputs under random unimodular changes of lattice basis.
"""

import argparse
import random
import time
from fractions import Fraction

from toric_ih.counting import interior_lattice_points, lattice_points, skeleton_count
from toric_ih.fixtures import (
    cone_over,
    random_lattice_polytope,
    random_unimodular_matrix,
)
from toric_ih.hypersurface import alternating_identity_holds, euler_relation_check
from toric_ih.lattice import unimodular_image
from toric_ih.stalks import (
    TatePoly,
    global_ih_class,
    punctured_cone_classes,
    stalk_polynomials,
)


def check_one(rng, dim):
    p = random_lattice_polytope(rng, dim, npoints=rng.randint(5, 9), bound=2)
    lat = p.face_lattice()

    ms = stalk_polynomials(lat)
    for f in lat.faces:
        m = ms[f.id]
        assert m.coeff(0) == 1 and all(c >= 0 for c in m.coeffs)
        if f.codim:
            assert Fraction(m.degree) < Fraction(f.codim, 2)
    h = global_ih_class(lat)
    assert h.is_palindromic(lat.n) and h.is_unimodal_to_middle(lat.n)

    assert euler_relation_check(lat)[0]
    a = {f.id: rng.randint(-50, 50) for f in lat.faces}
    assert alternating_identity_holds(lat, a)

    ih, ihc = punctured_cone_classes(cone_over(p).face_lattice())
    assert ih + ihc == TatePoly.zero()

    u = random_unimodular_matrix(rng, dim)
    q = unimodular_image(p, u)
    assert global_ih_class(q.face_lattice()) == h
    assert lattice_points(q)[0] == lattice_points(p)[0]
    assert interior_lattice_points(q)[0] == interior_lattice_points(p)[0]
    assert skeleton_count(q.face_lattice()) == skeleton_count(lat)
    return len(lat.faces)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rounds", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.time()
    faces = 0
    for i in range(args.rounds):
        faces += check_one(rng, rng.choice((2, 2, 3, 3, 4)))
        if (i + 1) % 10 == 0:
            print(f"{i + 1:4d} polytopes ok ({faces} faces so far, "
                  f"{time.time() - t0:.1f}s)")
    print(f"all {args.rounds} rounds passed in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
