"""Both arithmetic lanes satisfy one contract; these tests pin it.

The pure lane always imports; the compiled lane is skipped when the
extension was not built.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenquadrics._kernel import pure

try:
    from greenquadrics._kernel import _cyquad
except ImportError:
    _cyquad = None

LANES = [pure] + ([_cyquad] if _cyquad is not None else [])


def lane_id(mod):
    return mod.LANE


@pytest.fixture(params=LANES, ids=lane_id, scope="module")
def kernel(request):
    return request.param


ints = st.integers(min_value=-10**9, max_value=10**9)
nonzero = ints.filter(bool)


class TestScalarContract:
    def test_construction_and_canonical_form(self, kernel):
        R = kernel.Rational
        x = R(6, -4)
        assert (x.numerator, x.denominator) == (-3, 2)
        assert R(0, 5).numerator == 0
        with pytest.raises(ZeroDivisionError):
            R(1, 0)

    def test_mixed_int_arithmetic(self, kernel):
        R = kernel.Rational
        a = R(3, 4)
        assert a + 1 == R(7, 4)
        assert 1 + a == R(7, 4)
        assert 2 * a == R(3, 2)
        assert a - 1 == R(-1, 4)
        assert 1 - a == R(1, 4)
        assert a / 3 == R(1, 4)
        assert 3 / a == R(4)
        assert a**2 == R(9, 16)
        assert sum([a, a, a]) == R(9, 4)

    def test_comparisons_and_hash(self, kernel):
        R = kernel.Rational
        assert R(1, 2) < R(2, 3) < 1
        assert R(5) == 5 and hash(R(5)) == hash(5)
        assert hash(R(22, 7)) == hash(Fraction(22, 7))
        assert sorted([R(3), R(-1, 2), R(1, 3)]) == [R(-1, 2), R(1, 3), R(3)]

    @given(a=ints, b=nonzero, c=ints, d=nonzero)
    def test_matches_fraction_semantics(self, kernel, a, b, c, d):
        R = kernel.Rational
        x, y = R(a, b), R(c, d)
        fx, fy = Fraction(a, b), Fraction(c, d)
        for op in ("add", "sub", "mul"):
            got = getattr(x, f"__{op}__")(y)
            want = getattr(fx, f"__{op}__")(fy)
            assert (got.numerator, got.denominator) == (want.numerator, want.denominator)
        if fy:
            got = x / y
            want = fx / fy
            assert (got.numerator, got.denominator) == (want.numerator, want.denominator)
        assert (x < y) == (fx < fy)
        assert (x == y) == (fx == fy)
        assert float(x) == float(fx)

    def test_division_by_zero(self, kernel):
        R = kernel.Rational
        with pytest.raises(ZeroDivisionError):
            R(1) / R(0)


class TestMatContract:
    def mats(self, kernel):
        R = kernel.Rational
        a = (R(1), R(2), R(3), R(4))
        b = (R(0, 1), R(1, 2), R(-1, 3), R(5))
        return R, a, b

    def test_mul_add_det_trace(self, kernel):
        R, a, b = self.mats(kernel)
        prod = kernel.mat_mul(a, b)
        assert [ (v.numerator, v.denominator) for v in prod ] == [
            (-2, 3), (21, 2), (-4, 3), (43, 2),
        ]
        assert kernel.mat_det(a) == R(-2)
        assert kernel.mat_trace(a) == R(5)
        assert kernel.mat_inner(a, a) == R(30)
        total = kernel.mat_add(a, kernel.mat_neg(a))
        assert all(v == 0 for v in total)
        assert kernel.mat_sub(a, a) == total
        scaled = kernel.mat_scale(R(1, 2), a)
        assert scaled[3] == R(2)

    def test_lanes_agree(self):
        if _cyquad is None:
            pytest.skip("compiled lane not built")
        import random

        rng = random.Random(99)
        for _ in range(200):
            nums = [rng.randint(-50, 50) for _ in range(8)]
            dens = [rng.randint(1, 20) for _ in range(8)]
            ap = tuple(pure.Rational(n, d) for n, d in zip(nums[:4], dens[:4]))
            bp = tuple(pure.Rational(n, d) for n, d in zip(nums[4:], dens[4:]))
            ac = tuple(_cyquad.Rational(n, d) for n, d in zip(nums[:4], dens[:4]))
            bc = tuple(_cyquad.Rational(n, d) for n, d in zip(nums[4:], dens[4:]))
            for op in ("mat_mul", "mat_add", "mat_sub"):
                got_p = getattr(pure, op)(ap, bp)
                got_c = getattr(_cyquad, op)(ac, bc)
                assert [(v.numerator, v.denominator) for v in got_p] == [
                    (v.numerator, v.denominator) for v in got_c
                ]
            dp, dc = pure.mat_det(ap), _cyquad.mat_det(ac)
            assert (dp.numerator, dp.denominator) == (dc.numerator, dc.denominator)
