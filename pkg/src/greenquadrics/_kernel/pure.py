"""Pure-Python arithmetic kernel.

Scalars are `fractions.Fraction`; 2x2 matrices are 4-tuples of scalars in
row-major order (x1, x2, x3, x4).  The compiled twin `_cyquad` exposes the
same surface and `greenquadrics._kernel` picks one lane at import time, so
everything above this module is written once against the shared contract.
"""

from fractions import Fraction

LANE = "pure"

Rational = Fraction


def mat_mul(a, b):
    a1, a2, a3, a4 = a
    b1, b2, b3, b4 = b
    return (
        a1 * b1 + a2 * b3,
        a1 * b2 + a2 * b4,
        a3 * b1 + a4 * b3,
        a3 * b2 + a4 * b4,
    )


def mat_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def mat_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


def mat_neg(a):
    return (-a[0], -a[1], -a[2], -a[3])


def mat_scale(c, a):
    return (c * a[0], c * a[1], c * a[2], c * a[3])


def mat_det(a):
    return a[0] * a[3] - a[1] * a[2]


def mat_trace(a):
    return a[0] + a[3]


def mat_inner(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
