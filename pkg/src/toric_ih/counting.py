"""Lattice-point counting, Ehrhart polynomials and the cone over a polytope.

Counting is a bounding-box scan with exact membership tests; lower
dimensional faces are counted in the lattice chart of their affine span.
Faces whose span carries no lattice point count as 0 rather than erroring,
so that totals over all faces stay clean.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NonIntegralSpanError, UnboundedError
from .lattice import as_rat, dot
from .polytope import Face, FaceLattice, Polytope, reduce_to_span


def _scan(p: Polytope, strict: bool):
    """Lattice points of a full-dimensional compact polytope (or its interior)."""
    if not p.is_compact:
        raise UnboundedError("unbounded input")
    if p.n == 0:
        return ((),)
    lo, hi = p.bounding_box()
    member = p.contains_interior if strict else p.contains
    pts = []
    for x in product(*(range(int(l), int(h) + 1) for l, h in zip(lo, hi))):
        if member(x):
            pts.append(x)
    return tuple(pts)


def _face_chart(lattice: FaceLattice, face: Face):
    """(polytope in frame coordinates, frame) for a lower-dimensional face.

    Returns (None, None) when the face's affine span has no lattice point.
    """
    if face.ray_ids:
        raise UnboundedError("unbounded input")
    pts = [lattice.polytope.vertices[i] for i in face.vertex_ids]
    try:
        return reduce_to_span(pts)
    except NonIntegralSpanError:
        return None, None


def _face_points(lattice: FaceLattice, face: Face, strict: bool):
    if face.dim == lattice.n:
        return _scan(lattice.polytope, strict)
    chart, frame = _face_chart(lattice, face)
    if chart is None:
        return ()
    pts = _scan(chart, strict)
    return tuple(sorted(tuple(frame.from_coords(y)) for y in pts))


def lattice_points(obj, face: Face | None = None):
    """(count, points) for a compact polytope or one of its faces.

    Pass a Polytope, or a FaceLattice together with one of its faces; points
    come back in ambient coordinates, sorted.
    """
    if isinstance(obj, Polytope):
        pts = _scan(obj, strict=False)
        return len(pts), pts
    pts = _face_points(obj, face, strict=False)
    return len(pts), pts


def interior_lattice_points(obj, face: Face | None = None):
    """(count, points) over the relative interior (a point is its own interior)."""
    if isinstance(obj, Polytope):
        pts = _scan(obj, strict=True)
        return len(pts), pts
    pts = _face_points(obj, face, strict=True)
    return len(pts), pts


def skeleton_count(lattice: FaceLattice) -> int:
    """Number of lattice points on the union of the 1-dimensional faces."""
    if not lattice.is_compact:
        raise UnboundedError("unbounded input")
    seen = set()
    for f in lattice.of_dim(1):
        _, pts = lattice_points(lattice, f)
        seen.update(pts)
    return len(seen)


def ehrhart_counts(p: Polytope):
    """Exact counts |kP ∩ Z^n| for k = 0 .. n."""
    if not p.is_compact:
        raise UnboundedError("unbounded input")
    counts = [1]
    for k in range(1, p.n + 1):
        counts.append(lattice_points(p.dilate(k))[0])
    return counts


def ehrhart_polynomial(p: Polytope):
    """Coefficients (c_0, ..., c_n) of the lattice-point counting polynomial.

    Only lattice polytopes are supported; rational vertices would need a
    quasi-polynomial.
    """
    if not p.is_lattice:
        raise ValueError("Ehrhart quasi-polynomial not supported: vertices are not lattice points")
    counts = ehrhart_counts(p)
    n = p.n
    # exact interpolation through k = 0..n
    coeffs = [Fraction(0)] * (n + 1)
    for k, val in enumerate(counts):
        basis = [Fraction(1)]  # product over j != k of (x - j)/(k - j), as coefficients
        denom = Fraction(1)
        for j in range(n + 1):
            if j == k:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for i, c in enumerate(basis):
                new[i] -= j * c
                new[i + 1] += c
            basis = new
            denom *= k - j
        for i, c in enumerate(basis):
            coeffs[i] += val * c / denom
    return tuple(coeffs)


def ehrhart_eval(coeffs, k) -> Fraction:
    x = as_rat(k)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def reciprocity_check(p: Polytope, kmax: int = 3) -> bool:
    """(-1)^n L(-k) equals the interior count of kP, by direct enumeration."""
    coeffs = ehrhart_polynomial(p)
    n = p.n
    for k in range(1, kmax + 1):
        lhs = (-1) ** n * ehrhart_eval(coeffs, -k)
        rhs = interior_lattice_points(p.dilate(k))[0]
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class ConeOverPolytope:
    """The cone over P x {1} in one more dimension, graded by the last coordinate.

    Lattice points at grade k correspond exactly to the lattice points of kP.
    """

    polytope: Polytope
    grading: tuple[int, ...]

    def slice_count(self, k: int) -> int:
        return len(self.slice_points(k))

    def slice_points(self, k: int):
        if k < 0:
            return ()
        base = self.polytope
        n = base.n - 1
        if n == 0:
            return ((k,),) if all(dot(a, (k,)) >= b for a, b in base.rows) else ()
        lo, hi = [], []
        for i in range(n):
            cs = [Fraction(k) * r[i] for r in base.rays]
            lo.append(-((-min(cs)).__ceil__()) if cs else 0)
            hi.append(max(cs).__floor__() if cs else 0)
        pts = []
        for x in product(*(range(int(l), int(h) + 1) for l, h in zip(lo, hi))):
            y = x + (k,)
            if all(dot(a, y) >= b for a, b in base.rows):
                pts.append(y)
        return tuple(pts)


def cone_over_polytope(p: Polytope) -> ConeOverPolytope:
    """Home of a compact polytope at height one inside a pointed cone."""
    if not p.is_compact:
        raise UnboundedError("unbounded input")
    n = p.n
    if n == 0:
        cone = Polytope._trusted(1, [(0,)], [(1,)], [((1,), 0)])
        return ConeOverPolytope(cone, (1,))
    from .lattice import primitive

    rays = sorted(primitive(tuple(v) + (1,)) for v in p.vertices)
    rows = sorted((tuple(a) + (-b,), 0) for a, b in p.rows)
    cone = Polytope._trusted(n + 1, [tuple([0] * (n + 1))], rays, rows)
    grading = tuple([0] * n + [1])
    return ConeOverPolytope(cone, grading)


@dataclass(frozen=True)
class CountReport:
    """Per-face lattice counts plus Ehrhart data for a compact lattice polytope."""

    per_face: tuple  # (face_id, dim, count, interior_count)
    skeleton: int
    ehrhart_values: tuple
    ehrhart_coeffs: tuple

    @property
    def total(self) -> int:
        return self.ehrhart_values[1] if len(self.ehrhart_values) > 1 else 1


def count_report(p: Polytope) -> CountReport:
    lat = p.face_lattice()
    rows = []
    for f in lat.faces:
        l = lattice_points(lat, f)[0] if f.dim < lat.n else lattice_points(p)[0]
        ls = (interior_lattice_points(lat, f)[0] if f.dim < lat.n
              else interior_lattice_points(p)[0])
        rows.append((f.id, f.dim, l, ls))
    coeffs = ehrhart_polynomial(p)
    vals = tuple(ehrhart_counts(p))
    return CountReport(tuple(rows), skeleton_count(lat), vals, coeffs)
