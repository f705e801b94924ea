"""Exact arithmetic over the character lattice.

Vectors are plain tuples: lattice vectors hold Python ints, rational vectors
hold ``fractions.Fraction`` entries (always in lowest terms with positive
denominator, which the Fraction type guarantees).  No floating point is used
anywhere.  All values are immutable and all functions are pure, so everything
here can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from .errors import DimensionMismatchError, NonIntegralSpanError, NotUnimodularError

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_vector(coords) -> tuple[Fraction, ...]:
    return tuple(as_rat(c) for c in coords)


def lattice_vector(coords) -> tuple[int, ...]:
    out = []
    for c in coords:
        c = as_rat(c)
        if c.denominator != 1:
            raise ValueError(f"not a lattice vector entry: {c}")
        out.append(int(c))
    return tuple(out)


def is_integral_vector(u) -> bool:
    return all(as_rat(c).denominator == 1 for c in u)


def pairing(u, v) -> Fraction:
    """The perfect pairing of a rational character with a cocharacter."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((as_rat(a) * as_rat(b) for a, b in zip(u, v)), Fraction(0))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def vneg(u):
    return tuple(-a for a in u)


def integerize(u) -> tuple[int, ...]:
    """Scale a rational vector by a positive integer to clear denominators."""
    u = rat_vector(u)
    mult = 1
    for c in u:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    return tuple(int(c * mult) for c in u)


def vec_gcd(u) -> int:
    g = 0
    for c in u:
        g = gcd(g, abs(int(c)))
    return g


def primitive(u) -> tuple[int, ...]:
    """Primitive integer vector on the same ray (direction preserved)."""
    w = integerize(u)
    g = vec_gcd(w)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(c // g for c in w)


# ---------------------------------------------------------------------------
# Rational linear algebra (dense, row based; desk scale only).

def transpose(rows):
    return [list(col) for col in zip(*rows)] if rows else []


def mat_vec(rows, x):
    return tuple(dot(r, x) for r in rows)


def mat_mul(a, b):
    bt = transpose(b)
    return [[dot(r, c) for c in bt] for r in a]


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _echelon(rows):
    """Row reduce over Q; returns (reduced rows, pivot column list)."""
    m = [[as_rat(c) for c in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def mat_rank(rows) -> int:
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def nullspace(rows) -> list[tuple[Fraction, ...]]:
    """Rational basis of {x : rows @ x = 0}."""
    if not rows:
        return []
    n = len(rows[0])
    m, pivots = _echelon(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def solve_consistent(rows, rhs):
    """One solution of rows @ x = rhs over Q, or None if inconsistent."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = _echelon(aug)
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        if p == n:
            return None  # pivot in the rhs column
        x[p] = m[i][n]
    return tuple(x)


def solve_square(rows, rhs):
    """Solve an n x n system; None when the matrix is singular."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = _echelon(aug)
    if len(pivots) != n or pivots != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))


def det_int(rows) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return int(rows[0][0])
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [[int(c) for c in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cramer_solve_int(rows, rhs):
    """Solve an integer n x n system exactly.

    Returns (numerators, denominator > 0) with x_i = numerators[i]/den, or
    None when the matrix is singular.
    """
    n = len(rows)
    d = det_int(rows)
    if d == 0:
        return None
    nums = []
    for i in range(n):
        col = [r[:i] + (b,) + r[i + 1:] for r, b in zip(rows, rhs)]
        nums.append(det_int(col))
    if d < 0:
        d = -d
        nums = [-x for x in nums]
    return nums, d


def cofactor_kernel_vector(rows):
    """Kernel generator of an integer (n-1) x n matrix via signed minors.

    Returns the zero tuple when the rows are dependent; otherwise an integer
    vector spanning the kernel (the generalized cross product).
    """
    n = len(rows[0]) if rows else 1
    out = []
    sign = 1
    for i in range(n):
        minor = [r[:i] + r[i + 1:] for r in rows]
        out.append(sign * det_int(minor))
        sign = -sign
    return tuple(out)


def invert_unimodular(rows) -> list[list[int]]:
    """Inverse of an integer matrix with |det| = 1 (again integral)."""
    d = det_int(rows)
    if d not in (1, -1):
        raise NotUnimodularError(f"not unimodular: determinant {d}")
    n = len(rows)
    inv = []
    for i in range(n):
        e = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        col = solve_square(rows, e)
        inv.append([int(c) for c in col])
    # solve gave us columns of the inverse; assemble as rows
    return transpose(inv)


# ---------------------------------------------------------------------------
# Integer lattice routines (Hermite reduction).

def ext_gcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_with_transform(rows):
    """Row Hermite normal form H = U @ A with U unimodular.

    H is in row-echelon form with positive pivots and the entries above each
    pivot reduced modulo it.  Returns (H, U) as lists of lists of ints.
    """
    h = [[int(c) for c in r] for r in rows]
    m = len(h)
    n = len(h[0]) if h else 0
    u = identity_rows(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if h[i][c] != 0), None)
        if piv is None:
            continue
        h[r], h[piv] = h[piv], h[r]
        u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            g, s, t = ext_gcd(h[r][c], h[i][c])
            a_, b_ = h[r][c] // g, h[i][c] // g
            h[r], h[i] = (
                [s * x + t * y for x, y in zip(h[r], h[i])],
                [-b_ * x + a_ * y for x, y in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [s * x + t * y for x, y in zip(u[r], u[i])],
                [-b_ * x + a_ * y for x, y in zip(u[r], u[i])],
            )
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def solve_integer_system(rows, rhs=None):
    """Solve rows @ x = rhs over the integers.

    Returns (x0, kernel) where x0 is one integer solution (None when no
    integer solution exists) and kernel is a tuple of integer vectors forming
    a basis of the full integer kernel {x in Z^n : rows @ x = 0}.  The kernel
    basis is saturated: every integer kernel vector is an integer combination
    of it.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if rhs is None:
        rhs = [0] * m
    if m == 0:
        raise ValueError("need at least one row (or a known ambient rank)")
    h, u = hnf_with_transform(transpose(rows))  # h = u @ rows^T, shapes n x m
    lead = []
    for i, hrow in enumerate(h):
        p = next((j for j in range(m) if hrow[j] != 0), None)
        if p is None:
            break
        lead.append((i, p))
    rank = len(lead)
    b = [int(x) for x in rhs]
    ys = {}
    for i, p in lead:
        if b[p] % h[i][p] != 0:
            return None, tuple(tuple(r) for r in u[rank:])
        y = b[p] // h[i][p]
        ys[i] = y
        b = [bx - y * hx for bx, hx in zip(b, h[i])]
    if any(b):
        return None, tuple(tuple(r) for r in u[rank:])
    x0 = [0] * n
    for i, y in ys.items():
        x0 = [a + y * c for a, c in zip(x0, u[i])]
    return tuple(x0), tuple(tuple(r) for r in u[rank:])


def affine_span_equations(points):
    """Integer equations (C, e) with affine span(points) = {x : C @ x = e}.

    The rows of C span the saturated lattice of functionals vanishing on
    the direction space of the span; e holds rational right-hand sides.
    """
    pts = [rat_vector(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    p0 = pts[0]
    dirs = [integerize(vsub(p, p0)) for p in pts[1:]]
    dirs = [d for d in dirs if any(d)]
    if not dirs:
        eqs = [tuple(r) for r in identity_rows(n)]
    else:
        _, eqs = solve_integer_system(dirs)
    rhs = tuple(pairing(p0, c) for c in eqs)
    return tuple(eqs), rhs


@dataclass(frozen=True)
class AffineLatticeFrame:
    """A lattice chart of the affine span of a face.

    ``base`` is a lattice point on the span and ``basis`` a lattice basis of
    the intersection of the span's direction space with Z^n, so the lattice
    points of the span are exactly base + (integer combinations of basis).
    """

    base: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_coords(self, point) -> tuple[Fraction, ...]:
        """Coordinates of a span point in this frame."""
        p = rat_vector(point)
        if not self.basis:
            if p != rat_vector(self.base):
                raise ValueError("point not on the affine span")
            return ()
        cols = [[Fraction(b[i]) for b in self.basis] for i in range(len(p))]
        y = solve_consistent(cols, list(vsub(p, self.base)))
        if y is None or self.from_coords(y) != p:
            raise ValueError("point not on the affine span")
        return y

    def from_coords(self, coords) -> tuple:
        p = rat_vector(self.base)
        for c, b in zip(coords, self.basis):
            p = vadd(p, vscale(as_rat(c), b))
        if all(x.denominator == 1 for x in p):
            return tuple(int(x) for x in p)
        return p


def affine_frame(points) -> AffineLatticeFrame:
    """Lattice frame of the affine span of rational points.

    Raises NonIntegralSpanError when the span contains no lattice point
    (callers counting lattice points treat that face as contributing 0).
    """
    eqs, rhs = affine_span_equations(points)
    n = len(points[0])
    if not eqs:
        return AffineLatticeFrame(tuple([0] * n), tuple(tuple(r) for r in identity_rows(n)))
    int_rows, int_rhs = [], []
    for row, e in zip(eqs, rhs):
        d = e.denominator
        int_rows.append([d * c for c in row])
        int_rhs.append(e.numerator)
    x0, kernel = solve_integer_system(int_rows, int_rhs)
    if x0 is None:
        raise NonIntegralSpanError("non-integral span: no lattice point on the affine span")
    return AffineLatticeFrame(x0, kernel)


def rational_affine_basis(points):
    """(base, directions): a rational chart of the affine span.

    Only the linear structure is meaningful; use affine_frame when lattice
    points matter.
    """
    pts = [rat_vector(p) for p in points]
    p0 = pts[0]
    dirs = []
    for p in pts[1:]:
        d = vsub(p, p0)
        if any(d) and mat_rank(dirs + [d]) > len(dirs):
            dirs.append(d)
    return p0, tuple(dirs)


def transform_points(points, u_rows):
    return tuple(mat_vec(u_rows, p) for p in points)


def unimodular_image(obj, u_rows):
    """Image of a point set (or anything with apply_unimodular) under x -> Ux."""
    d = det_int(u_rows)
    if d not in (1, -1):
        raise NotUnimodularError(f"not unimodular: determinant {d}")
    if hasattr(obj, "apply_unimodular"):
        return obj.apply_unimodular(u_rows)
    seq = list(obj)
    if seq and isinstance(seq[0], (int, Fraction)):
        return mat_vec(u_rows, seq)
    return transform_points(seq, u_rows)
