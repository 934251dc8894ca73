import pytest

from greenquadrics.errors import (
    NotOnHyperplaneError,
    ZeroCoefficientError,
    ZeroLambdaError,
)
from greenquadrics.exact import QuadExt, Rational
from greenquadrics.green import class_plane, green_eq, rowspace
from greenquadrics.mat2 import IDENTITY, Mat2, ZERO, inner, inverse_mat
from greenquadrics.quadrics import QuadricClass, classify_quadric, inertia
from greenquadrics.sampling import (
    rand_idempotent_rank1,
    rand_invertible,
    rand_rank1,
    rand_rational,
    rng_for,
)
from greenquadrics.sections import (
    BellPoint,
    Hyperplane,
    QuadMat2,
    SectionClass,
    bell_residual,
    classify_affine_quadric,
    classify_section,
    from_bell,
    hyperboloid_metrics,
    membership,
    normalize,
    quadric_on_chart,
    restrict_quadric,
    section_membership,
    to_bell,
)

R = Rational
E = Mat2(1, 0, 0, 0)
HALF = R(1, 2)
LEVELS = (R(0), R(1), R(-1), R(3, 2), R(-3, 2), R(7, 2))


class TestMembership:
    def test_examples(self):
        h = Hyperplane(IDENTITY, R(1))
        assert section_membership(h, Mat2(HALF, HALF, HALF, HALF))
        assert not membership(h, IDENTITY)
        assert section_membership(Hyperplane(E, R(1)), Mat2(1, 2, 3, 6))

    def test_normalize(self):
        h = normalize(Hyperplane(IDENTITY, R(2)))
        assert h.a == IDENTITY * HALF and h.lam == 1
        h = normalize(Hyperplane(E, R(-1)))
        assert h.a == -E and h.lam == 1
        with pytest.raises(ZeroLambdaError):
            normalize(Hyperplane(E, R(0)))

    def test_normalize_preserves_membership(self):
        for i in range(100):
            rng = rng_for(79, i)
            a = rand_invertible(rng)
            lam = R(rng.randint(1, 5), rng.randint(1, 3))
            h = Hyperplane(a, lam)
            x = rand_rank1(rng)
            assert membership(h, x) == membership(normalize(h), x)


class TestBell:
    def test_center_maps_to_origin(self):
        for lam in LEVELS:
            p = to_bell(IDENTITY * (lam * HALF), lam)
            assert p.X == QuadExt(0) and p.Y == QuadExt(0) and p.Z == QuadExt(0)

    def test_point_a_has_unit_x(self):
        for lam in (R(0), R(1), R(5, 3)):
            half = QuadExt(lam * HALF)
            inv_sqrt2 = QuadExt(0, HALF)  # 1/sqrt2 = sqrt2/2
            A = QuadMat2(half + inv_sqrt2, QuadExt(0), QuadExt(0), half - inv_sqrt2)
            p = to_bell(A, lam)
            assert p.X == QuadExt(1) and p.Y == QuadExt(0) and p.Z == QuadExt(0)

    def test_idempotent_coordinates(self):
        p = to_bell(E, R(1))
        assert p.X == QuadExt(0, HALF)  # 1/sqrt2
        assert p.Y == QuadExt(0) and p.Z == QuadExt(0)
        # satisfies X^2+Y^2-Z^2 = 1/2
        assert p.X * p.X + p.Y * p.Y - p.Z * p.Z == QuadExt(HALF)

    def test_requires_trace_level(self):
        with pytest.raises(NotOnHyperplaneError):
            to_bell(E, R(2))

    def test_roundtrip_both_ways(self):
        for i in range(200):
            rng = rng_for(83, i)
            lam = rand_rational(rng, 4, 3)
            x = rand_rank1(rng)
            x = x + IDENTITY * ((lam - x.trace()) * HALF)
            p = to_bell(x, lam)
            back = from_bell(p)
            assert back.is_rational() and back.to_mat2() == x
            # frame -> ambient -> frame
            q = BellPoint(
                QuadExt(rand_rational(rng), rand_rational(rng)),
                QuadExt(rand_rational(rng), rand_rational(rng)),
                QuadExt(rand_rational(rng), rand_rational(rng)),
                lam,
            )
            assert to_bell(from_bell(q), lam) == q


class TestBellResidual:
    def test_examples(self):
        assert bell_residual(E) == 0
        assert bell_residual(IDENTITY) == -2
        assert bell_residual(Mat2(0, 1, 0, 0)) == 0

    def test_residual_is_minus_two_det(self):
        for i in range(300):
            rng = rng_for(89, i)
            from greenquadrics.sampling import rand_mat

            x = rand_mat(rng)
            assert bell_residual(x) == -2 * x.det()

    def test_exactness_per_level(self):
        for li, lam in enumerate(LEVELS):
            for i in range(100):
                rng = rng_for(97, li * 100 + i)
                assert bell_residual(rand_rank1(rng)) == 0
                assert bell_residual(rand_invertible(rng)) != 0


class TestRestriction:
    def test_identity_coefficient_signature(self):
        for lam in (R(1), R(-2), R(7, 2)):
            aq = restrict_quadric(Hyperplane(IDENTITY, lam))
            np_, nm, nz = inertia(aq.Q)
            assert nz == 0 and {np_, nm} == {1, 2}

    def test_rank1_level1_is_paraboloid_chart(self):
        aq = restrict_quadric(Hyperplane(E, R(1)))
        np_, nm, nz = inertia(aq.Q)
        assert (np_, nm, nz) == (1, 1, 1)
        assert any(v != 0 for v in aq.b)
        assert classify_affine_quadric(aq) == QuadricClass.HYPERBOLIC_PARABOLOID

    def test_rank1_level0_is_plane_pair(self):
        aq = restrict_quadric(Hyperplane(E, R(0)))
        assert classify_affine_quadric(aq) == QuadricClass.INTERSECTING_PLANES

    def test_zero_coefficient_rejected(self):
        with pytest.raises(ZeroCoefficientError):
            restrict_quadric(Hyperplane(ZERO, R(1)))

    def test_restriction_identity(self):
        for i in range(60):
            rng = rng_for(101, i)
            a = rand_invertible(rng) if i % 2 else rand_rank1(rng)
            lam = rand_rational(rng, 3, 2)
            aq = restrict_quadric(Hyperplane(a, lam))
            for _ in range(40):
                t = [rand_rational(rng, 4, 3) for _ in range(3)]
                pt = aq.point(t)
                assert membership(Hyperplane(a, lam), pt)
                assert pt.det() == aq.evaluate(t)

    def test_affine_invariance(self):
        for i in range(60):
            rng = rng_for(103, i)
            a = rand_invertible(rng) if i % 2 else rand_rank1(rng)
            lam = rand_rational(rng, 3, 2) if i % 3 else R(0)
            aq = restrict_quadric(Hyperplane(a, lam))
            base = classify_affine_quadric(aq)
            while True:
                T = [[rand_rational(rng, 2, 2) for _ in range(3)] for _ in range(3)]
                det3 = (
                    T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1])
                    - T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0])
                    + T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0])
                )
                if det3 != 0:
                    break
            origin = aq.point([rand_rational(rng, 2, 2) for _ in range(3)])
            basis = tuple(
                aq.basis[0] * T[0][j] + aq.basis[1] * T[1][j] + aq.basis[2] * T[2][j]
                for j in range(3)
            )
            Q, b, c = quadric_on_chart(origin, basis)
            assert classify_quadric(Q, b, c) == base


class TestClassifySection:
    def test_table_examples(self):
        assert classify_section(IDENTITY, R(1)).kind == SectionClass.HYPERBOLOID_ONE_SHEET
        assert classify_section(IDENTITY, R(0)).kind == SectionClass.CONE
        assert classify_section(E, R(1)).kind == SectionClass.HYPERBOLIC_PARABOLOID
        assert classify_section(ZERO, R(0)).kind == SectionClass.FULL_VARIETY
        assert classify_section(ZERO, R(3)).kind == SectionClass.EMPTY

    def test_two_planes_reps(self):
        v = classify_section(E, R(0))
        assert v.kind == SectionClass.TWO_PUNCTURED_PLANES
        assert rowspace(v.l_rep).direction == (0, 1)
        from greenquadrics.green import colspace

        assert colspace(v.r_rep).direction == (0, 1)
        # both representatives genuinely lie in the slice
        h = Hyperplane(E, R(0))
        assert section_membership(h, v.l_rep) and section_membership(h, v.r_rep)

    def test_two_planes_cover_slice(self):
        for i in range(100):
            rng = rng_for(107, i)
            a = rand_rank1(rng)
            v = classify_section(a, R(0))
            h = Hyperplane(a, R(0))
            lb = class_plane("L", v.l_rep)
            rb = class_plane("R", v.r_rep)
            s, t = rand_rational(rng, 4, 3), rand_rational(rng, 4, 3)
            assert section_membership(h, lb[0] * s + lb[1] * t)
            assert section_membership(h, rb[0] * s + rb[1] * t)
            # and a generic slice member lands in one of the two classes
            x = rand_rank1(rng)
            if section_membership(h, x):
                assert green_eq("L", x, v.l_rep) or green_eq("R", x, v.r_rep)

    def test_inverse_image_law(self):
        for i in range(200):
            rng = rng_for(109, i)
            a = rand_invertible(rng)
            x = inverse_mat(a) @ rand_idempotent_rank1(rng) if i % 2 else rand_rank1(rng)
            in_section = section_membership(Hyperplane(a, R(1)), x)
            ax = a @ x
            assert in_section == (ax.trace() == 1 and ax.det() == 0 and not ax.is_zero())


class TestMetrics:
    def test_examples(self):
        m = hyperboloid_metrics(R(1))
        assert m.center == Mat2(HALF, 0, 0, HALF)
        assert m.radius_sq == HALF
        assert hyperboloid_metrics(R(0)).radius_sq == 0
        assert (
            hyperboloid_metrics(R(3)).asymptotic_form
            == hyperboloid_metrics(R(5)).asymptotic_form
        )

    def test_centers_collinear(self):
        for lam in LEVELS:
            c = hyperboloid_metrics(lam).center
            assert c.x2 == 0 and c.x3 == 0 and c.x1 == c.x4  # on the scalar line

    def test_axis_is_skew_direction(self):
        m = hyperboloid_metrics(R(2))
        assert m.axis_dir == Mat2(0, 1, -1, 0)
        assert m.axis_dir.transpose() == -m.axis_dir

    def test_symmetric_slice_circle(self):
        center = hyperboloid_metrics(R(1)).center
        for i in range(200):
            rng = rng_for(113, i)
            while True:
                u = (rng.randint(-6, 6), rng.randint(-6, 6))
                if u != (0, 0):
                    break
            from greenquadrics.mat2 import outer

            x = outer(u, u) / (u[0] * u[0] + u[1] * u[1])
            assert x.is_symmetric()
            d = x - center
            assert inner(d, d) == HALF
            assert to_bell(x, R(1)).Z == QuadExt(0)


class TestTwoPlanesAreExactlyTheSlice:
    def test_constructed_members_land_in_the_classes(self):
        from greenquadrics.semigroup import rank1_factor

        for i in range(150):
            rng = rng_for(149, i)
            a = rand_rank1(rng)
            v = classify_section(a, R(0))
            c, r = rank1_factor(a)
            r_perp = (-r[1], r[0])
            c_perp = (-c[1], c[0])
            from greenquadrics.mat2 import outer

            w = (rand_rational(rng, 4, 3), rand_rational(rng, 4, 3))
            if w == (R(0), R(0)):
                continue
            # column factor orthogonal to r: the R-class plane
            x = outer(r_perp, w)
            if not x.is_zero():
                assert section_membership(Hyperplane(a, R(0)), x)
                assert green_eq("R", x, v.r_rep)
            # row factor orthogonal to c: the L-class plane
            y = outer(w, c_perp)
            if not y.is_zero():
                assert section_membership(Hyperplane(a, R(0)), y)
                assert green_eq("L", y, v.l_rep)
