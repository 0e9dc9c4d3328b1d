import math
import random

import pytest

from kiss3.bounds import (
    DEG,
    R0,
    F1,
    F2,
    build_omega,
    build_triangle_profile,
    h3_bound,
    h4_bound,
    h4_cases,
    h_small,
    mu_angle,
    mu_upper_bound,
    profiles_csv,
    psi_grid,
    refine_h34,
    table_to_json_dict,
    table_to_text,
    verify_theorem,
)
from kiss3.errors import DomainError


class TestMu:
    def test_angle(self, cert):
        assert abs(mu_angle(cert) - 76.582) < 1e-3

    def test_bound_is_four(self, cert):
        assert mu_upper_bound(cert) == 4

    def test_failure_for_shallow_cap(self, cert):
        # with t0 = cos 60deg = 1/2 the azimuth bound drops to about 70.5deg
        t = 0.5
        angle = math.degrees(math.acos((0.5 - t * t) / (1.0 - t * t)))
        assert angle < 72.0

    def test_q_monotone_in_first_argument(self, cert):
        # Q(a, b) = (1/2 - cos a cos b) / (sin a sin b) increases in a below
        # the cap radius
        theta0 = cert.theta0.mid

        def q(a, b):
            return (0.5 - math.cos(a) * math.cos(b)) / (math.sin(a) * math.sin(b))

        rng = random.Random(41)
        for _ in range(200):
            b = rng.uniform(0.2, theta0)
            a1 = rng.uniform(0.2, theta0)
            a2 = rng.uniform(a1, theta0)
            assert q(a2, b) >= q(a1, b) - 1e-12


class TestOmega:
    def test_symmetric_point(self, cert):
        for psi_deg in (60.0, 75.0, 90.0, 100.0):
            psi = psi_deg * DEG
            omega = build_omega(cert, psi)
            expected = 2.0 * cert.f.eval_real(-math.cos(psi / 2.0))
            assert omega.eval(1.0) == pytest.approx(expected, abs=1e-9)

    def test_cap_edge_point(self, cert):
        psi = 80.0 * DEG
        theta0 = cert.theta0.mid
        omega = build_omega(cert, psi)
        s = math.cos(theta0 - psi / 2.0)
        # f(-cos theta0) is essentially zero at the cap edge
        expected = cert.f.eval_real(-math.cos(psi - theta0))
        assert omega.eval(s) == pytest.approx(expected, abs=1e-8)

    def test_matches_direct_two_term_evaluation(self, cert):
        rng = random.Random(42)
        for _ in range(100):
            psi = rng.uniform(60.0 * DEG, 2.0 * cert.theta0.lo)
            theta = rng.uniform(psi / 2.0, cert.theta0.lo)
            omega = build_omega(cert, psi)
            direct = cert.f.eval_real(-math.cos(theta)) + cert.f.eval_real(
                -math.cos(psi - theta)
            )
            assert omega.eval(math.cos(theta - psi / 2.0)) == pytest.approx(
                direct, abs=1e-10
            )

    def test_domain_check(self, cert):
        with pytest.raises(DomainError):
            build_omega(cert, 30.0 * DEG)


class TestF1:
    def test_value_at_sixty(self, cert):
        iv = F1(cert, 60.0 * DEG)
        assert abs(iv.mid - 2.7649) < 5e-4

    def test_nonincreasing_on_grid(self, cert):
        psis = [60.0 * DEG + i * (2.0 * cert.theta0.lo - 60.0 * DEG) / 63 for i in range(64)]
        values = [F1(cert, p, tol=1e-6) for p in psis]
        for a, b in zip(values, values[1:]):
            assert b.lo <= a.hi + 1e-6

    def test_dominates_symmetric_configuration(self, cert):
        rng = random.Random(43)
        for _ in range(50):
            psi = rng.uniform(60.0 * DEG, 2.0 * cert.theta0.lo)
            iv = F1(cert, psi)
            assert iv.hi >= 2.0 * cert.f.eval_real(-math.cos(psi / 2.0)) - 1e-7

    def test_dominates_feasible_pairs(self, cert):
        rng = random.Random(44)
        cache = {}
        for _ in range(1000):
            psi = rng.choice([60.0, 70.0, 80.0, 90.0, 100.0]) * DEG
            theta = rng.uniform(psi / 2.0, cert.theta0.lo)
            if psi not in cache:
                cache[psi] = F1(cert, psi)
            direct = cert.f.eval_real(-math.cos(theta)) + cert.f.eval_real(
                -math.cos(psi - theta)
            )
            assert direct <= cache[psi].hi + 1e-9


class TestTriangleProfile:
    def test_symmetric_at_u_zero(self, cert):
        for psi_deg in (38.0, 44.0, 50.0):
            psi = psi_deg * DEG
            prof = build_triangle_profile(cert, psi)
            c1 = 0.5 * math.cos(psi) + math.sin(60.0 * DEG) * math.sin(psi) * math.cos(R0)
            assert prof.eval(1.0) == pytest.approx(
                2.0 * cert.f.eval_real(-c1), abs=1e-9
            )

    def test_matches_direct_evaluation(self, cert):
        rng = random.Random(45)
        for _ in range(100):
            psi = rng.uniform(R0 + 1e-6, cert.theta0.lo)
            cot = math.cos(psi) / math.sin(psi)
            u0 = max(math.acos(min(cot / math.sqrt(3.0), 1.0)) - R0, 0.0)
            u = rng.uniform(0.0, u0)
            prof = build_triangle_profile(cert, psi)
            c1 = 0.5 * math.cos(psi) + math.sin(60 * DEG) * math.sin(psi) * math.cos(R0 - u)
            c2 = 0.5 * math.cos(psi) + math.sin(60 * DEG) * math.sin(psi) * math.cos(R0 + u)
            direct = cert.f.eval_real(-c1) + cert.f.eval_real(-c2)
            assert prof.eval(math.cos(u)) == pytest.approx(direct, abs=1e-10)

    def test_far_vertex_at_u0(self, cert):
        # at u = u0 the two movable colatitudes close onto psi itself
        psi = 48.0 * DEG
        cot = math.cos(psi) / math.sin(psi)
        u0 = math.acos(cot / math.sqrt(3.0)) - R0
        c2 = 0.5 * math.cos(psi) + math.sin(60 * DEG) * math.sin(psi) * math.cos(R0 + u0)
        assert c2 == pytest.approx(math.cos(psi), abs=1e-12)

    def test_domain_check(self, cert):
        with pytest.raises(DomainError):
            build_triangle_profile(cert, 20.0 * DEG)


class TestF2:
    def test_nondecreasing_on_reference_grid(self, cert):
        grid = psi_grid(cert)
        values = [F2(cert, p) for p in grid]
        for a, b in zip(values, values[1:]):
            assert b.hi >= a.lo - 1e-7

    def test_dominates_feasible_pairs(self, cert):
        rng = random.Random(46)
        grid = psi_grid(cert)[1:]
        cache = {psi: F2(cert, psi) for psi in grid}
        for _ in range(1000):
            psi = rng.choice(grid)
            cot = math.cos(psi) / math.sin(psi)
            u0 = max(math.acos(min(cot / math.sqrt(3.0), 1.0)) - R0, 0.0)
            u = rng.uniform(0.0, u0)
            c1 = 0.5 * math.cos(psi) + math.sin(60 * DEG) * math.sin(psi) * math.cos(R0 - u)
            c2 = 0.5 * math.cos(psi) + math.sin(60 * DEG) * math.sin(psi) * math.cos(R0 + u)
            direct = cert.f.eval_real(-c1) + cert.f.eval_real(-c2)
            assert direct <= cache[psi].hi + 1e-9


class TestHBounds:
    def test_h_small(self, cert):
        h0, h1, h2 = h_small(cert)
        assert h0.mid == pytest.approx(10.11, abs=1e-12)
        assert h1.mid == pytest.approx(12.88, abs=1e-12)
        assert abs(h2.mid - 12.8749) < 5e-4

    def test_h4_cases(self, cert):
        case1, case2 = h4_cases(cert)
        assert abs(case1.mid - 12.9171) < 5e-4
        assert abs(case2.mid - 12.9182) < 5e-4

    def test_h4_under_13(self, cert):
        assert h4_bound(cert).hi < 13.0

    def test_w_values(self, cert):
        ws, h3 = h3_bound(cert)
        expected = (12.9425, 12.9648, 12.9508, 12.9606, 12.9519)
        assert len(ws) == 5
        for w, e in zip(ws, expected):
            assert abs(w.mid - e) < 5e-4
        assert h3.hi < 13.0

    def test_grid_endpoints(self, cert):
        grid = psi_grid(cert)
        assert grid[0] == pytest.approx(R0)
        assert abs(math.degrees(R0) - 35.2644) < 1e-4
        assert grid[-1] == cert.theta0.hi


class TestBoundTable:
    def test_verdict(self, bound_table):
        assert bound_table.verdict
        assert bound_table.mu == 4
        assert all(h.hi < 13.0 for h in bound_table.h)

    def test_h_max_at_least_h1(self, bound_table):
        assert 12.88 - 1e-12 <= bound_table.h_max.hi < 13.0

    def test_json_export(self, bound_table):
        d = table_to_json_dict(bound_table)
        assert d["mu"] == 4
        assert d["verdict"] is True
        assert len(d["w"]) == 5
        assert d["h2"][0] <= 12.8749 <= d["h2"][1] + 5e-4
        assert d["unit"] == "degrees"

    def test_text_export(self, bound_table):
        text = table_to_text(bound_table)
        assert "h2" in text and "PASS" in text


class TestTheorem:
    def test_conclusion(self, cert):
        report = verify_theorem(cert)
        assert report.conclusion == 12
        assert report.ok

    def test_witness(self, cert):
        report = verify_theorem(cert)
        assert report.witness_size == 12
        assert math.degrees(report.witness_min_sep) == pytest.approx(63.4349, abs=1e-3)
        assert 144.0 * (1 - 1e-9) <= report.witness_energy < 156.0


class TestRefine:
    def test_estimates_and_dominance(self, cert, bound_table):
        h3_est, h4_est = refine_h34(cert, grid_density=256, seed=42)
        assert abs(h3_est.mid - 12.8721) < 1e-3
        assert abs(h4_est.mid - 12.4849) < 1e-3
        assert h3_est.mid <= bound_table.h[3].hi
        assert h4_est.mid <= bound_table.h[4].hi

    def test_grid_density_floor(self, cert):
        with pytest.raises(ValueError):
            refine_h34(cert, grid_density=32)


class TestProfilesCsv:
    def test_header_and_rows(self, cert):
        csv = profiles_csv(cert, n=8, tol=1e-5)
        lines = csv.strip().splitlines()
        assert lines[0] == "profile,psi_deg,lo,hi"
        assert sum(1 for ln in lines if ln.startswith("F1,")) == 8
        assert sum(1 for ln in lines if ln.startswith("F2,")) == 8
