import math
import random
from fractions import Fraction as Fr

import pytest

from kiss3.certificate import certificate_poly
from kiss3.errors import MultipleRoots, NoRoot
from kiss3.polynomial import (
    Interval,
    RationalPoly,
    isolate_all_roots,
    isolate_root,
    max_on_interval,
    sturm_count,
)

F = certificate_poly()


def random_poly(rng, max_deg=9):
    deg = rng.randint(0, max_deg)
    return RationalPoly(
        [Fr(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(deg + 1)]
    )


class TestEval:
    def test_f_at_one_exact(self):
        assert F.eval(1) == Fr(4044, 400)

    def test_f_at_minus_one_exact(self):
        assert F.eval(-1) == Fr(1108, 400)

    def test_zero_poly(self):
        z = RationalPoly([])
        assert z.eval(Fr(7, 3)) == 0
        assert z.eval_real(2.5) == 0.0

    def test_horner_matches_monomial_sum(self):
        rng = random.Random(0)
        for _ in range(50):
            p = random_poly(rng)
            t = Fr(rng.randint(-20, 20), rng.randint(1, 10))
            assert p.eval(t) == sum(c * t**i for i, c in enumerate(p.coeffs))


class TestEvalReal:
    def test_f_negative_at_half(self):
        assert F.eval_real(0.5) < 0

    def test_p2_at_one(self):
        p2 = RationalPoly([Fr(-1, 2), 0, Fr(3, 2)])
        assert p2.eval_real(1.0) == 1.0

    def test_f_near_root(self):
        assert abs(F.eval_real(-0.5907)) < 1e-3


class TestDerivative:
    def test_quadratic(self):
        assert RationalPoly([-1, 0, 1]).derivative() == RationalPoly([0, 2])

    def test_f_leading(self):
        df = F.derivative()
        assert df.degree == 8
        assert df.coeffs[-1] == 9 * Fr(2431, 80)

    def test_constant(self):
        assert RationalPoly([5]).derivative().is_zero()

    def test_linearity(self):
        rng = random.Random(1)
        for _ in range(30):
            p, q = random_poly(rng), random_poly(rng)
            assert (p + q).derivative() == p.derivative() + q.derivative()


class TestSturm:
    def test_quadratic_one_root(self):
        assert sturm_count(RationalPoly([-1, 0, 1]), 0, 2) == 1

    def test_f_single_root_on_feasible_range(self):
        assert sturm_count(F, -1, Fr(1, 2)) == 1

    def test_f_derivative_no_root_left_of_t0(self):
        assert sturm_count(F.derivative(), -1, Fr(-59, 100)) == 0

    def test_additivity(self):
        rng = random.Random(2)
        for _ in range(25):
            p = random_poly(rng, max_deg=6)
            if p.degree < 1:
                continue
            a, b, c = Fr(-3), Fr(1, 3), Fr(3)
            if p.eval(a) == 0 or p.eval(b) == 0 or p.eval(c) == 0:
                continue
            assert sturm_count(p, a, b) + sturm_count(p, b, c) == sturm_count(p, a, c)

    def test_endpoint_root_not_counted(self):
        p = RationalPoly([0, 1]) * RationalPoly([-1, 2])  # roots 0, 1/2
        assert sturm_count(p, 0, 1) == 1

    def test_multiple_root_counted_once(self):
        p = RationalPoly([-1, 1]) ** 2 * RationalPoly([-3, 1])
        assert sturm_count(p, 0, 4) == 2


class TestIsolateRoot:
    def test_sqrt2(self):
        iv = isolate_root(RationalPoly([-2, 0, 1]), 1, 2, 1e-12)
        assert iv.contains(math.sqrt(2))
        assert iv.width < 1e-11

    def test_f_root(self):
        iv = isolate_root(F, -1, 0, 1e-10)
        assert iv.contains(-0.59069) or abs(iv.mid + 0.5907) < 1e-4

    def test_rational_root(self):
        iv = isolate_root(RationalPoly([Fr(-1, 3), 1]), 0, 1, 1e-12)
        assert abs(iv.mid - 1 / 3) < 1e-11

    def test_no_root_raises(self):
        with pytest.raises(NoRoot):
            isolate_root(RationalPoly([1, 0, 1]), 0, 1)

    def test_multiple_roots_raises(self):
        p = RationalPoly([0, 1]) * RationalPoly([-1, 2])
        with pytest.raises(MultipleRoots):
            isolate_root(p, -1, 1)

    def test_endpoints_bracket_sign_change(self):
        rng = random.Random(3)
        found = 0
        while found < 10:
            p = random_poly(rng, max_deg=5)
            if p.degree < 1:
                continue
            try:
                iv = isolate_root(p, -2, 2, 1e-9)
            except (NoRoot, MultipleRoots):
                continue
            found += 1
            slo = p.eval_real(iv.lo)
            shi = p.eval_real(iv.hi)
            assert slo == 0 or shi == 0 or (slo < 0) != (shi < 0)


class TestMaxOnInterval:
    def test_interior_max(self):
        iv = max_on_interval(RationalPoly([0, 0, -1]), -1, 1, 1e-9)
        assert iv.lo <= 0 <= iv.hi
        assert iv.width <= 1e-9

    def test_boundary_max(self):
        iv = max_on_interval(RationalPoly([0, 1]), 0, 1, 1e-9)
        assert iv.contains(1.0)

    def test_dominates_endpoints(self):
        rng = random.Random(4)
        for _ in range(20):
            p = random_poly(rng)
            iv = max_on_interval(p, -1.0, 1.0, 1e-7)
            assert iv.lo >= max(p.eval_real(-1.0), p.eval_real(1.0)) - 1e-7

    def test_contains_grid_maximum(self):
        rng = random.Random(5)
        for _ in range(10):
            p = random_poly(rng)
            iv = max_on_interval(p, -1.0, 1.0, 1e-7)
            grid_max = max(
                p.eval_real(-1.0 + 2.0 * i / 100000) for i in range(100001)
            )
            assert iv.hi >= grid_max - 1e-9
            assert iv.lo <= grid_max + 1e-7


class TestIsolateAllRoots:
    def test_cubic(self):
        p = RationalPoly([0, 1]) * RationalPoly([-1, 1]) * RationalPoly([1, 2])
        roots = isolate_all_roots(p, Fr(-2), Fr(2), 1e-10)
        assert len(roots) == 3
        for iv, expected in zip(roots, (-0.5, 0.0, 1.0)):
            assert abs(iv.mid - expected) < 1e-9


class TestInterval:
    def test_invalid_order(self):
        with pytest.raises(ValueError):
            Interval(1.0, 0.0)

    def test_hull(self):
        h = Interval.hull([Interval(0, 1), Interval(0.5, 2)])
        assert h.lo == 0 and h.hi == 2
