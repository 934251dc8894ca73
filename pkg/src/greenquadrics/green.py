"""Green's relations on 2x2 matrices and the geometry of their classes.

Convention fixed package-wide: L-equivalence is equality of row spaces and
R-equivalence equality of column spaces (zero and invertible matrices each
forming their own class).  Nontrivial L/R classes are punctured planes
inside the singular variety, H-classes punctured lines, and every punctured
plane inside the variety arises this way - `classify_plane` decides which.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from greenquadrics.errors import DependentBasisError, NotRankOneError
from greenquadrics.exact import Rational
from greenquadrics.mat2 import Mat2, det_polar, outer, proportional

__all__ = [
    "ProjLine",
    "GreenDescriptor",
    "PuncturedLine",
    "PlaneInVariety",
    "rowspace",
    "colspace",
    "descriptor",
    "green_eq",
    "class_plane",
    "h_class_line",
    "classify_plane",
]


class ProjLine:
    """A line through the origin of the plane, stored as a primitive
    integer direction with the first nonzero coordinate positive, so that
    equality of lines is syntactic equality of directions."""

    __slots__ = ("_d",)

    def __init__(self, p, q):
        pn, pd = p.numerator, p.denominator
        qn, qd = q.numerator, q.denominator
        a = pn * qd
        b = qn * pd
        if a == 0 and b == 0:
            raise ValueError("a projective line needs a nonzero direction")
        g = gcd(a, b)
        a //= g
        b //= g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        self._d = (a, b)

    @property
    def direction(self) -> tuple[int, int]:
        return self._d

    def perp(self) -> "ProjLine":
        a, b = self._d
        return ProjLine(Rational(-b), Rational(a))

    def dot(self, other: "ProjLine") -> int:
        return self._d[0] * other._d[0] + self._d[1] * other._d[1]

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        return hash(self._d)

    def __repr__(self):
        return f"ProjLine({self._d[0]}, {self._d[1]})"

    def __str__(self):
        return f"({self._d[0]},{self._d[1]})"


def _line_from_pair(u) -> ProjLine:
    return ProjLine(u[0], u[1])


def rowspace(a: Mat2) -> ProjLine | None:
    """Row space of a rank-1 matrix as a line; None for the zero matrix.

    For invertible `a` the row space is the whole plane, also None here:
    callers branch on rank first.
    """
    if a.rank() != 1:
        return None
    r1, r2 = a.rows()
    return _line_from_pair(r1 if r1[0] or r1[1] else r2)


def colspace(a: Mat2) -> ProjLine | None:
    if a.rank() != 1:
        return None
    c1, c2 = a.cols()
    return _line_from_pair(c1 if c1[0] or c1[1] else c2)


@dataclass(frozen=True)
class GreenDescriptor:
    """D-class of a matrix plus, for rank 1, the row/column lines that pin
    down its L- and R-classes."""

    kind: str  # "zero" | "rank_one" | "invertible"
    rowspace: ProjLine | None = None
    colspace: ProjLine | None = None


def descriptor(a: Mat2) -> GreenDescriptor:
    r = a.rank()
    if r == 0:
        return GreenDescriptor("zero")
    if r == 2:
        return GreenDescriptor("invertible")
    return GreenDescriptor("rank_one", rowspace(a), colspace(a))


def green_eq(rel: str, a: Mat2, b: Mat2) -> bool:
    """Test a Green's relation: rel is one of L, R, H, D, J."""
    rel = rel.upper()
    ra, rb = a.rank(), b.rank()
    if rel in ("D", "J"):
        return ra == rb
    if rel == "H":
        return green_eq("L", a, b) and green_eq("R", a, b)
    if rel == "L":
        if ra != rb:
            return False
        return ra != 1 or rowspace(a) == rowspace(b)
    if rel == "R":
        if ra != rb:
            return False
        return ra != 1 or colspace(a) == colspace(b)
    raise ValueError(f"unknown Green relation {rel!r}")


def class_plane(rel: str, a: Mat2) -> tuple[Mat2, Mat2]:
    """Basis of the plane whose puncture is the L- or R-class of rank-1 `a`.

    The L-class of `a` consists of every matrix whose rows span row(a), a
    plane with basis {e_i . r^T}; dually for R with columns.
    """
    if a.rank() != 1:
        raise NotRankOneError("class planes exist only for rank-1 matrices")
    rel = rel.upper()
    if rel == "L":
        r = rowspace(a).direction
        return outer((1, 0), r), outer((0, 1), r)
    if rel == "R":
        c = colspace(a).direction
        return outer(c, (1, 0)), outer(c, (0, 1))
    raise ValueError("class planes are defined for rel 'L' or 'R'")


@dataclass(frozen=True)
class PuncturedLine:
    """The set {t . direction : t != 0}; the shape of a nontrivial H-class."""

    direction: Mat2

    def point(self, t) -> Mat2:
        return self.direction * t

    def contains(self, x: Mat2) -> bool:
        return proportional(x, self.direction)


def h_class_line(a: Mat2) -> PuncturedLine:
    """The H-class of rank-1 `a` is the punctured line through `a`."""
    if a.rank() != 1:
        raise NotRankOneError("nontrivial H-classes exist only in rank 1")
    return PuncturedLine(a)


@dataclass(frozen=True)
class PlaneInVariety:
    """Verdict for a plane spanned by two independent matrices: an L-class
    plane (common row space), an R-class plane (common column space), or not
    contained in the singular variety at all."""

    basis: tuple[Mat2, Mat2]
    kind: str  # "L" | "R" | "not_contained"
    rep: Mat2 | None = None


def classify_plane(b1: Mat2, b2: Mat2) -> PlaneInVariety:
    """Decide whether span{b1, b2} minus the origin is an L- or R-class.

    Containment in the singular variety is three exact checks: det(b1),
    det(b2) and the polarization det(b1+b2)-det(b1)-det(b2) are the
    coefficients of det(s b1 + t b2) as a form in (s, t).
    """
    if b1.is_zero() or b2.is_zero() or proportional(b1, b2):
        raise DependentBasisError("plane basis must be linearly independent")
    if b1.det() != 0 or b2.det() != 0 or det_polar(b1, b2) != 0:
        return PlaneInVariety((b1, b2), "not_contained")
    # contained: rank-1 matrices with matching row or column spaces
    if rowspace(b1) == rowspace(b2):
        return PlaneInVariety((b1, b2), "L", b1)
    if colspace(b1) == colspace(b2):
        return PlaneInVariety((b1, b2), "R", b1)
    raise AssertionError("plane inside the variety with no common space")
