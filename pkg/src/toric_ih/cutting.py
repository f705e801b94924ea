"""Prime cutting and the single-vertex toric blow-up.

A compact polytope is shaved into a prime one by pushing a supporting
hyperplane past every face whose dual cone is not simplicial.  The shave
depths form a cascade: a face of dimension d is cut at depth proportional to
eps^(d+1), so the depth ratio between a face and any larger face vanishes
with eps.  Exactness is restored by a stability protocol: the construction
is repeated with eps/2 and must reproduce the identical labeled face
structure and the identical limit face map, otherwise eps is halved and the
construction retried.

The limit face map sends each face of the cut polytope to the smallest face
of the original containing the eps -> 0 limit of its barycenter; vertices of
the cut polytope are followed through the limit by re-solving their defining
row systems with the shave depths set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EmptyPolyhedronError,
    EpsilonUnstableError,
    InvariantViolation,
    NonIntegralSpanError,
    UnboundedError,
)
from .lattice import (
    affine_frame,
    as_rat,
    dot,
    lattice_vector,
    mat_rank,
    pairing,
    rat_vector,
    rational_affine_basis,
    solve_consistent,
    solve_square,
    vscale,
    vsub,
)
from .polytope import (
    FaceLattice,
    Polytope,
    is_prime,
    normalize_row,
    vertex_normal_cone_contains,
)


@dataclass(frozen=True)
class CutEntry:
    """One face to shave: its supporting functional, base value and cascade order."""

    face_id: int
    functional: tuple[int, ...]
    base: Fraction
    order: int


@dataclass(frozen=True)
class CutSpec:
    entries: tuple[CutEntry, ...]


@dataclass(frozen=True)
class CutResult:
    """The prime cut polytope with its limit face map.

    ``face_map`` sends face ids of the cut polytope to face ids of the
    original; ``spec`` records the functionals used (the cut is canonical
    only relative to this choice).
    """

    polytope: Polytope
    face_map: dict
    epsilon: Fraction
    spec: CutSpec


def choose_cut_functionals(p: Polytope, lattice: FaceLattice | None = None) -> CutSpec:
    """Select the faces with non-simplicial dual cone and a functional for each.

    The functional is the sum of the primitive inner normals of the facets
    through the face, which lies in the relative interior of the dual cone,
    so its minimum face on the polytope is exactly the selected face.
    """
    if not p.is_compact:
        raise UnboundedError("prime cutting needs a compact polytope")
    lattice = lattice or p.face_lattice()
    entries = []
    for f in lattice.faces:
        if len(f.active) <= f.codim:
            continue
        v = tuple(sum(p.rows[j][0][i] for j in f.active) for i in range(p.n))
        base = min(pairing(x, v) for x in p.vertices)
        entries.append(CutEntry(f.id, v, base, f.dim + 1))
    return CutSpec(tuple(entries))


def _cut_once(p: Polytope, lattice: FaceLattice, spec: CutSpec, eps: Fraction):
    """Build the cut polytope at one eps; returns (polytope, labels, face_map).

    ``labels`` assigns each row of the cut polytope its origin: an original
    facet row of p, or the cut entry it came from.  Raises ValueError when the
    labeling is ambiguous (a signal to shrink eps).
    """
    label_of = {}
    rows = []
    for row in p.rows:
        rows.append(row)
        label_of[row] = ("row", row)
    for e in spec.entries:
        width = max(pairing(x, e.functional) for x in p.vertices) - e.base
        depth = width * eps ** e.order
        rows.append((e.functional, e.base + depth))
        canon = normalize_row(e.functional, e.base + depth)
        if canon in label_of:
            raise ValueError("cut row collides with another row")
        label_of[canon] = ("cut", e)
    q = Polytope.from_inequalities(rows)
    qlat = q.face_lattice()

    # limit position of each vertex of q: re-solve its defining rows at depth 0
    limit_of_vertex = {}
    for vf in qlat.of_dim(0):
        chosen, rhs = [], []
        for j in vf.active:
            kind, data = label_of[q.rows[j]]
            normal = data[0] if kind == "row" else data.functional
            if mat_rank(chosen + [list(map(Fraction, normal))]) > len(chosen):
                chosen.append(list(map(Fraction, normal)))
                rhs.append(Fraction(data[1]) if kind == "row" else data.base)
            if len(chosen) == p.n:
                break
        w0 = solve_square(chosen, rhs)
        if w0 is None or not p.contains(w0):
            raise ValueError("vertex limit escaped the polytope")
        limit_of_vertex[vf.id] = w0

    face_map = {}
    for f in qlat.faces:
        verts = [limit_of_vertex[g.id] for g in qlat.of_dim(0) if qlat.leq(g.id, f.id)]
        k = Fraction(1, len(verts))
        bary = tuple(sum(col) * k for col in zip(*verts))
        face_map[f.id] = lattice.smallest_face_containing(bary).id

    labels = {f.id: frozenset(label_of[q.rows[j]] for j in f.active) for f in qlat.faces}
    return q, qlat, labels, face_map


def _signature(qlat, labels, face_map):
    return tuple(sorted((labels[f.id], f.dim, face_map[f.id]) for f in qlat.faces))


def _fan_refines(q: Polytope, p: Polytope) -> bool:
    """Every vertex normal cone of q sits inside exactly one of p."""
    plat = p.face_lattice()
    p_vertices = plat.of_dim(0)
    qlat = q.face_lattice()
    for vf in qlat.of_dim(0):
        gens = [q.rows[j][0] for j in vf.active]
        hits = sum(1 for u in p_vertices
                   if all(vertex_normal_cone_contains(p, u, g) for g in gens))
        if hits != 1:
            return False
    return True


def prime_cut(p: Polytope, spec: CutSpec | None = None,
              epsilon=Fraction(1, 8), max_rounds: int = 12) -> CutResult:
    """Shave the polytope into a prime one, with the limit face map.

    The result is recomputed at eps/2 and must agree exactly (same labeled
    face lattice, same face map) before being accepted; disagreement, an
    empty intersection, a non-prime result or a non-refining fan all shrink
    eps and retry.  Raises EpsilonUnstableError after max_rounds failures.
    """
    lattice = p.face_lattice()
    if spec is None:
        spec = choose_cut_functionals(p, lattice)
    eps = as_rat(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if not spec.entries:
        return CutResult(p, {f.id: f.id for f in lattice.faces}, eps, spec)
    for _ in range(max_rounds):
        try:
            q, qlat, labels, face_map = _cut_once(p, lattice, spec, eps)
            _, qlat2, labels2, face_map2 = _cut_once(p, lattice, spec, eps / 2)
        except (ValueError, EmptyPolyhedronError):
            eps = eps / 2
            continue
        same = _signature(qlat, labels, face_map) == _signature(qlat2, labels2, face_map2)
        if same and is_prime(q) and _fan_refines(q, p):
            return CutResult(q, face_map, eps, spec)
        eps = eps / 2
    raise EpsilonUnstableError(f"epsilon unstable after {max_rounds} halvings")


@dataclass(frozen=True)
class BlowupResult:
    """Data of the single-vertex toric blow-up of a cone.

    ``prime`` is the cone truncated below the cutting level (a closed
    polyhedron, so the compact figure is one of its faces); ``figure`` is
    that unique compact facet-level face, reduced to full dimension in its
    own span; ``face_map`` matches each face of the figure with the cone
    face of one dimension higher that it spans.
    """

    prime: Polytope
    figure: Polytope
    figure_vertices: tuple
    face_map: dict
    functional: tuple[int, ...]
    level: Fraction
    lattice_chart: bool


def vertex_blowup(p: Polytope, v, c) -> BlowupResult:
    """Truncate a cone with vertex at the origin along <., v> = c.

    ``v`` must pair strictly positively with every ray (the interior of the
    dual cone); the slice is then a compact polytope of one dimension less
    whose faces correspond to the positive-dimensional faces of the cone.
    """
    if not p.is_cone_with_vertex or p.vertices[0] != tuple([Fraction(0)] * p.n):
        raise ValueError("need a cone with vertex at the origin")
    v = lattice_vector(v)
    c = as_rat(c)
    if c <= 0:
        raise ValueError("cutting level must be positive")
    for r in p.rays:
        if dot(r, v) <= 0:
            raise ValueError("not interior to dual cone")
    prime = Polytope.from_inequalities(list(p.rows) + [(v, c)])
    figure_vertices = tuple(vscale(c / dot(r, v), tuple(map(Fraction, r)))
                            for r in p.rays)
    try:
        frame = affine_frame(figure_vertices)
        coords = [frame.to_coords(w) for w in figure_vertices]
        lattice_chart = True
    except NonIntegralSpanError:
        base, dirs = rational_affine_basis(figure_vertices)
        cols = [[d[i] for d in dirs] for i in range(p.n)]
        coords = [solve_consistent(cols, list(vsub(w, base))) for w in figure_vertices]
        lattice_chart = False
    figure = Polytope.from_points(coords)
    if figure.n != p.n - 1:
        raise InvariantViolation("compact figure has the wrong dimension")

    ray_of_coord = {rat_vector(y): i for i, y in enumerate(coords)}

    plat = p.face_lattice()
    cone_face_by_rays = {frozenset(f.ray_ids): f.id for f in plat.faces if f.dim > 0}
    figlat = figure.face_lattice()
    face_map = {}
    for f in figlat.faces:
        rays = frozenset(ray_of_coord[figure.vertices[i]] for i in f.vertex_ids)
        target = cone_face_by_rays.get(rays)
        if target is None or plat.faces[target].dim != f.dim + 1:
            raise InvariantViolation("figure faces do not match the cone faces")
        face_map[f.id] = target
    if len(face_map) != len(plat.faces) - 1:
        raise InvariantViolation("figure faces do not exhaust the cone faces")
    return BlowupResult(prime, figure, figure_vertices, face_map,
                        v, c, lattice_chart)
