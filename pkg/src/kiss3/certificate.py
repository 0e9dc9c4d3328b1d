"""The degree-9 certificate polynomial, its Legendre expansion, and the
enclosures of its unique root t0 on [-1, 1/2] and of the cap radius
theta0 = arccos(t0).

The polynomial is fixed data; searching for certificates is out of scope.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificateInvalid
from .legendre import LegendreExpansion, from_legendre_basis, to_legendre_basis
from .polynomial import Interval, RationalPoly, isolate_root, sturm_count

# Monomial coefficients, lowest power first.
F_COEFFS = (
    Fraction(-1, 200),
    Fraction(1, 10),
    Fraction(-213, 100),
    Fraction(-83, 10),
    Fraction(343, 40),
    Fraction(18333, 400),
    Fraction(0),
    Fraction(-1287, 20),
    Fraction(0),
    Fraction(2431, 80),
)

# Expected Legendre coefficients c_0 ... c_9 of the certificate.
EXPECTED_LEGENDRE_COEFFS = (
    Fraction(1),
    Fraction(8, 5),
    Fraction(87, 25),
    Fraction(33, 20),
    Fraction(49, 25),
    Fraction(1, 10),
    Fraction(0),
    Fraction(0),
    Fraction(0),
    Fraction(8, 25),
)


@dataclass(frozen=True)
class Certificate:
    f: RationalPoly
    legendre_coeffs: LegendreExpansion
    t0: Interval  # enclosure of the positive root magnitude (f(-t0) = 0)
    theta0: Interval  # arccos(t0), radians, outward rounded


def certificate_poly(coeffs=F_COEFFS) -> RationalPoly:
    return RationalPoly(coeffs)


def build_certificate(coeffs=F_COEFFS, root_width: float = 1e-12) -> Certificate:
    """Construct and validate the certificate.

    The root of f on (-1, 0) is isolated by exact bisection; t0 is its
    magnitude and theta0 = arccos(t0), both carried as outward enclosures.
    Raises CertificateInvalid on any structural failure.
    """
    f = certificate_poly(coeffs)
    if f.degree != 9:
        raise CertificateInvalid(f"certificate must have degree 9, got {f.degree}")
    expansion = to_legendre_basis(f)
    if from_legendre_basis(expansion) != f:
        raise CertificateInvalid("Legendre expansion does not reconstruct f")
    if expansion[0] != 1:
        raise CertificateInvalid(f"c_0 must be 1, got {expansion[0]}")
    if any(c < 0 for c in expansion.coefficients):
        raise CertificateInvalid("negative Legendre coefficient")
    if sturm_count(f, Fraction(-1), Fraction(1, 2)) != 1:
        raise CertificateInvalid("f must have exactly one root on (-1, 1/2)")
    neg_root = isolate_root(f, Fraction(-1), Fraction(0), root_width)
    t0 = Interval(-neg_root.hi, -neg_root.lo)
    if not (0.59 < t0.lo and t0.hi < 0.591):
        raise CertificateInvalid(f"t0 enclosure {t0} outside (0.59, 0.591)")
    theta0 = Interval(
        math.nextafter(math.acos(t0.hi), 0.0),
        math.nextafter(math.acos(t0.lo), math.pi),
    )
    return Certificate(f=f, legendre_coeffs=expansion, t0=t0, theta0=theta0)


def verify_expansion(c: Certificate, expected=None) -> bool:
    """Check the Legendre expansion: exact reconstruction, c_0 = 1, all
    c_k >= 0; when an expected coefficient tuple is given, require exact
    equality with it as well.
    """
    e = c.legendre_coeffs
    if from_legendre_basis(e) != c.f:
        return False
    if e[0] != 1 or any(ck < 0 for ck in e.coefficients):
        return False
    if expected is not None:
        exp = tuple(Fraction(x) for x in expected)
        got = e.coefficients + (Fraction(0),) * (len(exp) - len(e.coefficients))
        return got == exp
    return True


def _neg_t0_upper(c: Certificate) -> Fraction:
    """Rational upper endpoint of the enclosure of -t0."""
    return Fraction(-c.t0.lo)


def verify_property_i(c: Certificate) -> bool:
    """f is monotone decreasing on [-1, -t0]: the derivative has no root
    there (exact Sturm count on the conservative enclosure endpoint) and is
    negative at -1.
    """
    df = c.f.derivative()
    if df.eval(-1) >= 0:
        return False
    return sturm_count(df, Fraction(-1), _neg_t0_upper(c)) == 0


def verify_property_ii(c: Certificate) -> bool:
    """f < 0 on (-t0, 1/2]: exactly one root on (-1, 1/2), f(-1) > 0 and
    f(1/2) < 0, all in exact arithmetic.
    """
    f = c.f
    return (
        sturm_count(f, Fraction(-1), Fraction(1, 2)) == 1
        and f.eval(Fraction(1, 2)) < 0
        and f.eval(-1) > 0
    )


def classic_delsarte_gap(c: Certificate) -> Fraction:
    """f(-1), exactly.  A positive value means f violates the classical
    Delsarte sign condition on [-1, 1/2], which is what forces the extended
    method's cap analysis.
    """
    return c.f.eval(-1)


def certificate_to_json(c: Certificate) -> str:
    payload = {
        "monomial_coefficients": [
            {"numerator": str(x.numerator), "denominator": str(x.denominator)}
            for x in c.f.coeffs
        ],
        "legendre_coefficients": [
            {"numerator": str(x.numerator), "denominator": str(x.denominator)}
            for x in c.legendre_coeffs.coefficients
        ],
        "t0": [c.t0.lo, c.t0.hi],
        "theta0_rad": [c.theta0.lo, c.theta0.hi],
        "theta0_deg": [math.degrees(c.theta0.lo), math.degrees(c.theta0.hi)],
    }
    return json.dumps(payload, sort_keys=True, indent=2)
