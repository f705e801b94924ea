"""Hodge-number bookkeeping for non-degenerate toric hypersurfaces.

The hypersurface itself never appears: non-degeneracy is an input assumption
and every quantity here is computed from the Newton polytope's lattice data.
Classes of mixed Hodge structures are tracked as two-variable integer
polynomials E(u, v), with the Tate class represented as L = uv.

With n the polytope dimension, l* the interior lattice count of a face and
Pi the number of lattice points on the 1-skeleton:

* the compactly supported cohomology above the middle degree is forced by
  weak Lefschetz into a fixed binomial table (high_weight_table);
* the (p, 0) edge of the middle degree is sum of l* over faces of dimension
  p + 1 for p > 0, and Pi - 1 for p = 0 (frontier_hodge);
* the geometric genus is the interior count of the whole polytope.

The closed/open stratification transform and the prime-cut multipliers are
the exact bookkeeping identities that let the middle weights be chased
through a toric quasi-resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .counting import interior_lattice_points, skeleton_count
from .errors import NotFullDimensionalError, UnboundedError
from .lattice import lattice_vector
from .polytope import Face, FaceLattice, Polytope
from .stalks import TatePoly


class EPoly2:
    """Integer polynomial in (u, v): Hodge-Deligne class bookkeeping.

    Immutable.  Coefficient of u^p v^q is the signed count of (p, q) pieces;
    classes of real Hodge structures arising here are symmetric under u <-> v.
    """

    __slots__ = ("_t",)

    def __init__(self, terms=()):
        acc = {}
        for (p, q), c in (terms.items() if isinstance(terms, dict) else terms):
            c = int(c)
            if c:
                acc[(int(p), int(q))] = acc.get((int(p), int(q)), 0) + c
        object.__setattr__(self, "_t", tuple(sorted((k, c) for k, c in acc.items() if c)))

    def __setattr__(self, *a):
        raise AttributeError("EPoly2 is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def lefschetz(cls):
        """The class L = uv of the weight-two Tate structure."""
        return cls({(1, 1): 1})

    @classmethod
    def monomial(cls, p, q, c=1):
        return cls({(p, q): c})

    @property
    def terms(self):
        return self._t

    def coeff(self, p, q) -> int:
        for (pp, qq), c in self._t:
            if (pp, qq) == (p, q):
                return c
        return 0

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, int):
            other = EPoly2({(0, 0): other})
        return isinstance(other, EPoly2) and self._t == other._t

    def __hash__(self):
        return hash(self._t)

    def __add__(self, other):
        if isinstance(other, int):
            other = EPoly2({(0, 0): other})
        return EPoly2(list(self._t) + list(other._t))

    __radd__ = __add__

    def __neg__(self):
        return EPoly2([(k, -c) for k, c in self._t])

    def __sub__(self, other):
        if isinstance(other, int):
            other = EPoly2({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return EPoly2([(k, other * c) for k, c in self._t])
        out = {}
        for (p1, q1), c1 in self._t:
            for (p2, q2), c2 in other._t:
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, 0) + c1 * c2
        return EPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = EPoly2.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, u, v):
        return sum(c * u ** p * v ** q for (p, q), c in self._t)

    def is_uv_symmetric(self) -> bool:
        return all(self.coeff(q, p) == c for (p, q), c in self._t)

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for (p, q), c in sorted(self._t, key=lambda e: (-(e[0][0] + e[0][1]), e[0])):
            mono = "".join(s for s, e in (("u", p), ("v", q)) for s in
                           ([s] if e == 1 else [f"{s}^{e}"] if e else []))
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def tate_to_e(h: TatePoly) -> EPoly2:
    """Substitute t -> uv, landing Tate classes in the two-variable ring."""
    return EPoly2({(k, k): c for k, c in enumerate(h.coeffs)})


def torus_class(d: int) -> EPoly2:
    """Class of the compactly supported cohomology of a d-torus: (uv - 1)^d."""
    if d < 0:
        raise ValueError("torus dimension must be nonnegative")
    return (EPoly2.lefschetz() - 1) ** d


@dataclass(frozen=True)
class MonomialSupport:
    """The exponent set of a Laurent polynomial (duplicates collapsed)."""

    exponents: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, points) -> "MonomialSupport":
        pts = sorted(set(lattice_vector(p) for p in points))
        if not pts:
            raise ValueError("empty support")
        if len(set(len(p) for p in pts)) != 1:
            raise ValueError("exponents of mixed dimension")
        return cls(tuple(pts))

    @property
    def n(self) -> int:
        return len(self.exponents[0])

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)


def newton_polytope(support: MonomialSupport) -> Polytope:
    """Convex hull of the exponent set; its vertices are support points."""
    return Polytope.from_points(support.exponents)


def face_support(support: MonomialSupport, lattice: FaceLattice, face: Face) -> MonomialSupport:
    """Support points lying on one face of the Newton polytope."""
    p = lattice.polytope
    pts = []
    for m in support.exponents:
        if not p.contains(m):
            raise ValueError("support point outside the polytope")
        if all(sum(a * x for a, x in zip(p.rows[j][0], m)) == p.rows[j][1]
               for j in face.active):
            pts.append(m)
    return MonomialSupport.of(pts)


@dataclass(frozen=True)
class HodgeTable:
    """Compactly supported Hodge numbers pinned above the middle degree.

    Entries are (degree j, p, q, value) with j > n - 1.  Everything below the
    middle degree vanishes, as does the off-diagonal part above it; within
    the middle degree only weights at most n - 1 survive.
    """

    n: int
    entries: tuple[tuple[int, int, int, int], ...]

    def known_value(self, j: int, p: int, q: int):
        """Value when the table pins it; None when only the middle-degree
        analysis (not this table) can decide."""
        n = self.n
        for jj, pp, qq, val in self.entries:
            if (jj, pp, qq) == (j, p, q):
                return val
        if j < n - 1:
            return 0
        if j == n - 1:
            return 0 if p + q > n - 1 else None
        return 0  # above the middle: off-diagonal or out of the ladder


def high_weight_table(n: int) -> HodgeTable:
    """The forced binomial ladder of Hodge numbers above the middle degree."""
    if n < 2:
        raise ValueError("need ambient dimension at least 2")
    entries = []
    for i in range(n - 1):
        entries.append((2 * n - 2 - i, n - 1 - i, n - 1 - i, comb(n, i)))
    return HodgeTable(n, tuple(entries))


def _require_lattice_polytope(p: Polytope):
    if not p.is_compact:
        raise UnboundedError("unbounded input")
    if not p.is_lattice:
        raise ValueError("need a lattice polytope (integral vertices)")


def geometric_genus_count(p: Polytope) -> int:
    """Interior lattice-point count: the geometric genus of the hypersurface."""
    _require_lattice_polytope(p)
    return interior_lattice_points(p)[0]


def frontier_hodge(p: Polytope, lattice: FaceLattice | None = None,
                   components: int = 1) -> dict[int, int]:
    """The (p, 0) edge of the middle compactly supported cohomology.

    Returns {p: h} for p = 0 .. n-1: the sum of interior counts over faces of
    dimension p + 1 for p > 0, and the skeleton count minus the number of
    components of the compactified hypersurface (1 unless overridden) at
    p = 0.
    """
    _require_lattice_polytope(p)
    if p.n < 2:
        raise NotFullDimensionalError("need a polytope of dimension at least 2; "
                                      "reduce to affine span first")
    lattice = lattice or p.face_lattice()
    out = {}
    for pp in range(1, p.n):
        total = 0
        for f in lattice.of_dim(pp + 1):
            total += (interior_lattice_points(lattice, f)[0] if f.dim < lattice.n
                      else interior_lattice_points(p)[0])
        out[pp] = total
    out[0] = skeleton_count(lattice) - components
    return out


def euler_relation_check(lattice: FaceLattice):
    """Alternating face counts over every proper face.

    For each proper face F, sum of (-1)^codim over the faces containing F
    must vanish; returns (all_ok, violations).
    """
    violations = []
    for f in lattice.faces:
        if f.codim == 0:
            continue
        s = sum((-1) ** g.codim for g in lattice.faces_above(f.id, strict=False))
        if s != 0:
            violations.append((f.id, s))
    return not violations, tuple(violations)


def closed_open_transform(lattice: FaceLattice, assignment: dict, direction: str) -> dict:
    """Convert between per-stratum (open) and per-closure (closed) classes.

    open -> closed sums a value over all faces below; closed -> open is the
    inverse.  The assignment must cover every face; values only need + and -.
    """
    missing = [f.id for f in lattice.faces if f.id not in assignment]
    if missing:
        raise ValueError(f"partial assignment: missing faces {missing}")
    if direction == "open_to_closed":
        out = {}
        for f in lattice.faces:
            acc = assignment[f.id]
            for g in lattice.faces_below(f.id):
                acc = acc + assignment[g.id]
            out[f.id] = acc
        return out
    if direction == "closed_to_open":
        out = {}
        for f in sorted(lattice.faces, key=lambda x: x.dim):
            acc = assignment[f.id]
            for g in lattice.faces_below(f.id):
                acc = acc - out[g.id]
            out[f.id] = acc
        return out
    raise ValueError(f"unknown direction {direction!r}")


def alternating_identity_holds(lattice: FaceLattice, assignment: dict) -> bool:
    """Does the open class of the top face equal the signed sum of closures?

    True for every assignment; this is the numerical shadow of the Euler
    relation on face counts.
    """
    closed = closed_open_transform(lattice, assignment, "open_to_closed")
    acc = None
    for f in lattice.faces:
        term = closed[f.id] if f.codim % 2 == 0 else -closed[f.id]
        acc = term if acc is None else acc + term
    return acc == assignment[lattice.top.id]


def stratum_component_count(lattice: FaceLattice, face: Face) -> int:
    """Points of the hypersurface on a 1-dimensional stratum: the lattice
    length of the edge (= interior count + 1)."""
    if face.dim != 1:
        raise ValueError("need an edge (1-dimensional face)")
    return interior_lattice_points(lattice, face)[0] + 1


def frontier_crosscheck(p: Polytope, lattice: FaceLattice | None = None) -> bool:
    """Re-derive the p = 0 frontier number through the dimension chase.

    Checks the skeleton decomposition Pi = #vertices + sum of edge interior
    counts, then recomputes h = (#vertices - 1) + sum of edge interior counts
    and compares with the skeleton-count route.
    """
    lattice = lattice or p.face_lattice()
    pi = skeleton_count(lattice)
    nv = len(lattice.of_dim(0))
    edge_interiors = sum(interior_lattice_points(lattice, f)[0]
                         for f in lattice.of_dim(1))
    if pi != nv + edge_interiors:
        return False
    via_chase = (nv - 1) + edge_interiors
    return via_chase == frontier_hodge(p, lattice)[0]


def prime_cut_multipliers(cut, lattice: FaceLattice, cut_lattice: FaceLattice) -> dict:
    """Per-face multiplier classes of a prime cutting.

    For each face of the original polytope, sums (L-1)^(dim drop) over the
    faces of the cut polytope degenerating onto it; evaluated at L = 1 this
    counts the equal-dimension preimages.
    """
    face_map = cut.face_map if hasattr(cut, "face_map") else dict(cut)
    missing = [f.id for f in cut_lattice.faces if f.id not in face_map]
    if missing:
        raise ValueError(f"face map not total: missing faces {missing}")
    lm1 = EPoly2.lefschetz() - 1
    out = {f.id: EPoly2.zero() for f in lattice.faces}
    for tau in cut_lattice.faces:
        sigma = face_map[tau.id]
        drop = tau.dim - lattice.faces[sigma].dim
        if drop < 0:
            raise ValueError("face map increases codimension the wrong way")
        out[sigma] = out[sigma] + lm1 ** drop
    return out


def curve_e_polynomial(p: Polytope, components: int = 1) -> EPoly2:
    """Class of the compactly supported cohomology of the punctured curve cut
    out by a two-dimensional Newton polytope:

        E = uv - l*(u + v) + (components - Pi).
    """
    _require_lattice_polytope(p)
    if p.n != 2:
        raise ValueError("need a two-dimensional polytope")
    lat = p.face_lattice()
    g = interior_lattice_points(p)[0]
    pi = skeleton_count(lat)
    return (EPoly2.lefschetz()
            - g * (EPoly2.monomial(1, 0) + EPoly2.monomial(0, 1))
            + (components - pi))
