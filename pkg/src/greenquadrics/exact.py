"""Exact scalars: arbitrary-precision rationals and the field Q(sqrt 2).

`Rational` is whichever implementation the kernel selected (compiled or
`fractions.Fraction`); both are exact and always canonical (gcd 1, positive
denominator).  `QuadExt` is a + b*sqrt2 with rational a, b, the smallest
field containing every orthonormal-frame coordinate of a rational matrix.

Floats appear only in `to_float`, which exporters use; nothing here or in
the layers above decides anything with floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from greenquadrics._kernel import LANE, Rational
from greenquadrics.errors import LiteralParseError

__all__ = [
    "LANE",
    "Rational",
    "QuadExt",
    "SQRT2",
    "rational_sign",
    "parse_rational",
    "format_rational",
    "parse_quadext",
    "format_quadext",
    "to_float",
]

_ZERO = Rational(0)
_ONE = Rational(1)

# sqrt(2) to 50 digits; only to_float consumes this
_SQRT2_APPROX = Fraction(isqrt(2 * 10**100), 10**50)


def rational_sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def parse_rational(text: str, offset: int = 0) -> Rational:
    """Parse `p` or `p/q` with an optional leading minus; q must be > 0."""
    s = text.strip()
    if not s:
        raise LiteralParseError("empty rational literal", offset)
    body = s[1:] if s[0] == "-" else s
    num_part, slash, den_part = body.partition("/")
    if not num_part.isdigit():
        raise LiteralParseError(f"bad rational literal {s!r}", offset)
    num = int(num_part)
    if s[0] == "-":
        num = -num
    if not slash:
        return Rational(num, 1)
    if not den_part.isdigit():
        raise LiteralParseError(f"bad denominator in {s!r}", offset)
    den = int(den_part)
    if den == 0:
        raise LiteralParseError(f"zero denominator in {s!r}", offset)
    return Rational(num, den)


def format_rational(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QuadExt:
    """Element a + b*sqrt2 of Q(sqrt 2); zero iff both parts are zero."""

    __slots__ = ("_a", "_b")

    def __init__(self, rat_part=0, root2_part=0):
        self._a = Rational(rat_part) if not isinstance(rat_part, Rational) else rat_part
        self._b = (
            Rational(root2_part) if not isinstance(root2_part, Rational) else root2_part
        )

    @property
    def rat_part(self) -> Rational:
        return self._a

    @property
    def root2_part(self) -> Rational:
        return self._b

    @staticmethod
    def _coerce(x) -> "QuadExt | None":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Rational)):
            return QuadExt(Rational(x), _ZERO)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b r)(c + d r) = ac + 2bd + (ad + bc) r  with r^2 = 2
        a, b, c, d = self._a, self._b, o._a, o._b
        return QuadExt(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # 1/(a + b r) = (a - b r)/(a^2 - 2 b^2); the norm vanishes only at 0
        a, b = self._a, self._b
        norm = a * a - 2 * b * b
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return QuadExt(a / norm, -b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadExt(-self._a, -self._b)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self._a, -self._b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def sign(self) -> int:
        """Exact sign: compares a^2 with 2 b^2 when the parts disagree."""
        sa, sb = rational_sign(self._a), rational_sign(self._b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite part signs: |a| vs |b| sqrt2 decided by a^2 vs 2 b^2
        cmp = rational_sign(self._a * self._a - 2 * self._b * self._b)
        return sa * cmp if cmp != 0 else 0

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def is_rational(self) -> bool:
        return self._b == 0

    def __float__(self):
        return to_float(self)

    def __str__(self):
        return format_quadext(self)

    def __repr__(self):
        return f"QuadExt({self._a!r}, {self._b!r})"


SQRT2 = QuadExt(0, 1)


def format_quadext(x: QuadExt) -> str:
    """Canonical text form: `p`, `q*sqrt2`, `p + q*sqrt2` or `p - q*sqrt2`."""
    a, b = x.rat_part, x.root2_part
    if b == 0:
        return format_rational(a)
    root_term = f"{format_rational(abs(b))}*sqrt2"
    if a == 0:
        return root_term if b > 0 else f"-{root_term}"
    op = "+" if b > 0 else "-"
    return f"{format_rational(a)} {op} {root_term}"


def parse_quadext(text: str) -> QuadExt:
    """Inverse of `format_quadext`; also accepts bare `sqrt2` coefficients."""
    s = text.replace(" ", "")
    if not s:
        raise LiteralParseError("empty literal")

    def term_value(term: str) -> tuple[Rational, bool]:
        # returns (coefficient, is_root_term)
        if term.endswith("*sqrt2"):
            return parse_rational(term[: -len("*sqrt2")]), True
        if term in ("sqrt2", "+sqrt2"):
            return _ONE, True
        if term == "-sqrt2":
            return -_ONE, True
        return parse_rational(term), False

    # split at the last top-level +/- (signs can only open the string or a term)
    split = 0
    for i in range(len(s) - 1, 0, -1):
        if s[i] in "+-" and s[i - 1] not in "+-*/":
            split = i
            break
    terms = [s] if split == 0 else [s[:split], s[split:]]
    a = _ZERO
    b = _ZERO
    seen_root = False
    seen_rat = False
    for term in terms:
        if term.startswith("+"):
            term = term[1:]
        coeff, is_root = term_value(term)
        if is_root:
            if seen_root:
                raise LiteralParseError(f"two sqrt2 terms in {text!r}")
            seen_root = True
            b = coeff
        else:
            if seen_rat:
                raise LiteralParseError(f"two rational terms in {text!r}")
            seen_rat = True
            a = coeff
    return QuadExt(a, b)


def to_float(x) -> float:
    """Nearest double for rationals; sqrt2 terms use a 50-digit convergent."""
    if isinstance(x, QuadExt):
        if x.root2_part == 0:
            return to_float(x.rat_part)
        a = Fraction(x.rat_part.numerator, x.rat_part.denominator)
        b = Fraction(x.root2_part.numerator, x.root2_part.denominator)
        return float(a + b * _SQRT2_APPROX)
    if isinstance(x, (int, float)):
        return float(x)
    return x.numerator / x.denominator
