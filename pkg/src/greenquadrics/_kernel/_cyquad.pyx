# cython: language_level=3, binding=False
"""Compiled arithmetic kernel.

Same surface as `greenquadrics._kernel.pure`: an exact arbitrary-precision
`Rational` scalar (numerator/denominator are Python ints, so intermediate
blow-up is never truncated) and fused operations on 2x2 matrices stored as
4-tuples.  The speedup over `fractions.Fraction` comes from bypassing the
Python-level constructor and dispatch machinery, not from changing the
arithmetic: all reductions use plain integer gcd exactly as the stdlib does.
"""

import sys

from math import gcd

cdef object _HASH_MODULUS = sys.hash_info.modulus
cdef object _HASH_INF = sys.hash_info.inf

LANE = "cython"


cdef inline Rational _make(object n, object d):
    # n/d must already be normalized: gcd 1, d > 0
    cdef Rational r = Rational.__new__(Rational)
    r._n = n
    r._d = d
    return r


cdef inline Rational _reduce(object n, object d):
    # d > 0 required
    cdef object g = gcd(n, d)
    if g != 1:
        n = n // g
        d = d // g
    return _make(n, d)


cdef inline Rational _add(Rational a, Rational b):
    # Knuth-style: with gcd(na,da)=gcd(nb,db)=1, only gcd(da,db) can recombine
    cdef object da = a._d, db = b._d
    cdef object g = gcd(da, db)
    if g == 1:
        return _make(a._n * db + b._n * da, da * db)
    cdef object s = da // g
    cdef object x = a._n * (db // g) + b._n * s
    cdef object g2 = gcd(x, g)
    if g2 == 1:
        return _make(x, s * db)
    return _make(x // g2, s * (db // g2))


cdef inline Rational _sub(Rational a, Rational b):
    cdef object da = a._d, db = b._d
    cdef object g = gcd(da, db)
    if g == 1:
        return _make(a._n * db - b._n * da, da * db)
    cdef object s = da // g
    cdef object x = a._n * (db // g) - b._n * s
    cdef object g2 = gcd(x, g)
    if g2 == 1:
        return _make(x, s * db)
    return _make(x // g2, s * (db // g2))


cdef inline Rational _mul(Rational a, Rational b):
    cdef object na = a._n, nb = b._n, da = a._d, db = b._d
    cdef object g1 = gcd(na, db)
    if g1 != 1:
        na = na // g1
        db = db // g1
    cdef object g2 = gcd(nb, da)
    if g2 != 1:
        nb = nb // g2
        da = da // g2
    return _make(na * nb, da * db)


cdef inline Rational _div(Rational a, Rational b):
    if b._n == 0:
        raise ZeroDivisionError("division by zero")
    cdef object na = a._n, nb = b._n, da = a._d, db = b._d
    cdef object g1 = gcd(na, nb)
    if g1 != 1:
        na = na // g1
        nb = nb // g1
    cdef object g2 = gcd(db, da)
    if g2 != 1:
        db = db // g2
        da = da // g2
    cdef object n = na * db
    cdef object d = da * nb
    if nb < 0:
        n = -n
        d = -d
    return _make(n, d)


cdef inline Rational _coerce(object x):
    if type(x) is Rational:
        return <Rational> x
    if isinstance(x, int):
        return _make(x, 1)
    if isinstance(x, Rational):
        return <Rational> x
    return None


cdef class Rational:
    """Exact rational number; always stored with gcd 1 and denominator > 0."""

    cdef object _n
    cdef object _d

    def __init__(self, num=0, den=None):
        cdef Rational r
        if den is None:
            if isinstance(num, int):
                self._n = num
                self._d = 1
                return
            if isinstance(num, Rational):
                r = <Rational> num
                self._n = r._n
                self._d = r._d
                return
            num_attr = getattr(num, "numerator", None)
            if num_attr is not None and isinstance(num_attr, int):
                self._n = num_attr
                self._d = num.denominator
                return
            raise TypeError(f"cannot build a Rational from {type(num).__name__}")
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("numerator and denominator must be ints")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = -num
            den = -den
        g = gcd(num, den)
        if g != 1:
            num //= g
            den //= g
        self._n = num
        self._d = den

    @property
    def numerator(self):
        return self._n

    @property
    def denominator(self):
        return self._d

    def __add__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _add(a, b)

    def __radd__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _add(a, b)

    def __sub__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _sub(a, b)

    def __rsub__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _sub(b, a)

    def __mul__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _mul(a, b)

    def __rmul__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _mul(a, b)

    def __truediv__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _div(a, b)

    def __rtruediv__(x, y):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        return _div(b, a)

    def __pow__(x, y, z):
        if z is not None:
            return NotImplemented
        cdef Rational a = _coerce(x)
        if a is None or not isinstance(y, int):
            return NotImplemented
        if y >= 0:
            return _make(a._n ** y, a._d ** y)
        if a._n == 0:
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        if a._n > 0:
            return _make(a._d ** (-y), a._n ** (-y))
        return _make((-a._d) ** (-y), (-a._n) ** (-y))

    def __neg__(self):
        return _make(-self._n, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        if self._n < 0:
            return _make(-self._n, self._d)
        return self

    def __bool__(self):
        return self._n != 0

    def __float__(self):
        return self._n / self._d

    def __int__(self):
        if self._n < 0:
            return -((-self._n) // self._d)
        return self._n // self._d

    def __richcmp__(x, y, int op):
        cdef Rational a = _coerce(x)
        cdef Rational b = _coerce(y)
        if a is None or b is None:
            return NotImplemented
        lhs = a._n * b._d
        rhs = b._n * a._d
        if op == 0:
            return lhs < rhs
        if op == 1:
            return lhs <= rhs
        if op == 2:
            return lhs == rhs
        if op == 3:
            return lhs != rhs
        if op == 4:
            return lhs > rhs
        return lhs >= rhs

    def __hash__(self):
        # stdlib numeric hash so equal ints/Fractions hash identically
        try:
            dinv = pow(self._d, -1, _HASH_MODULUS)
        except ValueError:
            h = _HASH_INF
        else:
            h = hash(hash(abs(self._n)) * dinv)
        result = h if self._n >= 0 else -h
        return -2 if result == -1 else result

    def __str__(self):
        if self._d == 1:
            return str(self._n)
        return f"{self._n}/{self._d}"

    def __repr__(self):
        return f"Rational({self._n}, {self._d})"

    def __reduce__(self):
        return (Rational, (self._n, self._d))


def mat_mul(a, b):
    cdef Rational a1 = <Rational?> a[0], a2 = <Rational?> a[1]
    cdef Rational a3 = <Rational?> a[2], a4 = <Rational?> a[3]
    cdef Rational b1 = <Rational?> b[0], b2 = <Rational?> b[1]
    cdef Rational b3 = <Rational?> b[2], b4 = <Rational?> b[3]
    return (
        _add(_mul(a1, b1), _mul(a2, b3)),
        _add(_mul(a1, b2), _mul(a2, b4)),
        _add(_mul(a3, b1), _mul(a4, b3)),
        _add(_mul(a3, b2), _mul(a4, b4)),
    )


def mat_add(a, b):
    return (
        _add(<Rational?> a[0], <Rational?> b[0]),
        _add(<Rational?> a[1], <Rational?> b[1]),
        _add(<Rational?> a[2], <Rational?> b[2]),
        _add(<Rational?> a[3], <Rational?> b[3]),
    )


def mat_sub(a, b):
    return (
        _sub(<Rational?> a[0], <Rational?> b[0]),
        _sub(<Rational?> a[1], <Rational?> b[1]),
        _sub(<Rational?> a[2], <Rational?> b[2]),
        _sub(<Rational?> a[3], <Rational?> b[3]),
    )


def mat_neg(a):
    cdef Rational a1 = <Rational?> a[0], a2 = <Rational?> a[1]
    cdef Rational a3 = <Rational?> a[2], a4 = <Rational?> a[3]
    return (
        _make(-a1._n, a1._d),
        _make(-a2._n, a2._d),
        _make(-a3._n, a3._d),
        _make(-a4._n, a4._d),
    )


def mat_scale(c, a):
    cdef Rational s = _coerce(c)
    if s is None:
        raise TypeError("scale factor must be a Rational or int")
    return (
        _mul(s, <Rational?> a[0]),
        _mul(s, <Rational?> a[1]),
        _mul(s, <Rational?> a[2]),
        _mul(s, <Rational?> a[3]),
    )


def mat_det(a):
    return _sub(
        _mul(<Rational?> a[0], <Rational?> a[3]),
        _mul(<Rational?> a[1], <Rational?> a[2]),
    )


def mat_trace(a):
    return _add(<Rational?> a[0], <Rational?> a[3])


def mat_inner(a, b):
    cdef Rational acc = _mul(<Rational?> a[0], <Rational?> b[0])
    acc = _add(acc, _mul(<Rational?> a[1], <Rational?> b[1]))
    acc = _add(acc, _mul(<Rational?> a[2], <Rational?> b[2]))
    acc = _add(acc, _mul(<Rational?> a[3], <Rational?> b[3]))
    return acc
