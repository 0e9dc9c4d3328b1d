"""Quadratic-form energies of point sets under the certificate polynomial:
the full double sum S(X), the per-point sums S_i, their cap truncations T_i,
and the deep-cap index sets J(i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .certificate import Certificate
from .errors import SeparationViolation
from .legendre import gegenbauer_sum
from .sphere import PointSet, min_separation

SIXTY_DEG = math.pi / 3.0


@dataclass(frozen=True)
class PerPoint:
    S_i: float
    T_i: float
    J_i: tuple[int, ...]


@dataclass(frozen=True)
class EnergySummary:
    n: int
    S: float
    per_point: tuple[PerPoint, ...]
    min_sep: float  # radians; nan for singletons


def energy(ps: PointSet, c: Certificate) -> EnergySummary:
    """Full double sum S(X) = sum_ij f(cos dist(x_i, x_j)), diagonal included
    (each diagonal term is f(1)), with the per-point decomposition.

    J(i) collects the j with cos dist < -t0; membership is tested against the
    lower enclosure endpoint of t0, which can only enlarge J(i) and therefore
    only increase T_i -- conservative for the < 13 direction.
    """
    n = len(ps)
    cosm = ps.cos_matrix()
    np.fill_diagonal(cosm, 1.0)
    fcoeffs = [float(x) for x in reversed(c.f.coeffs)]
    values = np.polyval(fcoeffs, cosm)
    f_at_1 = float(c.f.eval(1))
    np.fill_diagonal(values, f_at_1)
    threshold = -c.t0.lo
    per_point = []
    for i in range(n):
        S_i = float(values[i].sum())
        J_i = tuple(j for j in range(n) if j != i and cosm[i, j] < threshold)
        T_i = f_at_1 + float(sum(values[i, j] for j in J_i))
        per_point.append(PerPoint(S_i=S_i, T_i=T_i, J_i=J_i))
    sep = min_separation(ps) if n >= 2 else math.nan
    return EnergySummary(
        n=n, S=float(values.sum()), per_point=tuple(per_point), min_sep=sep
    )


def check_lemma2(ps: PointSet, c: Certificate) -> bool:
    """S(X) >= n^2 (with relative floating slack 1e-9); holds for every point
    set on the sphere, separated or not."""
    summary = energy(ps, c)
    return summary.S >= summary.n**2 * (1.0 - 1e-9)


def check_lemma3(ps: PointSet, c: Certificate) -> bool:
    """S(X) < 13 n strictly for 60-degree separated sets, plus the per-point
    chain S_i <= T_i < 13.  Raises SeparationViolation if the set is not
    separated."""
    summary = energy(ps, c)
    if len(ps) >= 2 and summary.min_sep < SIXTY_DEG - 1e-9:
        raise SeparationViolation(
            f"min separation {math.degrees(summary.min_sep):.4f} deg < 60 deg"
        )
    if not summary.S < 13.0 * summary.n:
        return False
    for rec in summary.per_point:
        if rec.S_i > rec.T_i + 1e-9 or not rec.T_i < 13.0:
            return False
    return True


def check_lemma1(ps: PointSet, kmax: int = 9) -> list[float]:
    """The Gegenbauer sums for k = 0 ... kmax; each is >= 0 up to rounding."""
    if kmax > 12:
        raise ValueError("kmax capped at 12")
    return [gegenbauer_sum(ps, k) for k in range(kmax + 1)]


def linearity_gap(ps: PointSet, c: Certificate) -> float:
    """|S(X) - sum_k c_k * (Gegenbauer sum at k)|; the mechanized form of the
    lower-bound lemma's one-line proof."""
    summary = energy(ps, c)
    via_basis = sum(
        float(ck) * gegenbauer_sum(ps, k)
        for k, ck in enumerate(c.legendre_coeffs.coefficients)
        if ck != 0
    )
    return abs(summary.S - via_basis)


def energy_to_json_dict(summary: EnergySummary) -> dict:
    return {
        "n": summary.n,
        "S": summary.S,
        "min_sep_deg": None
        if math.isnan(summary.min_sep)
        else math.degrees(summary.min_sep),
        "per_point": [
            {"S_i": r.S_i, "T_i": r.T_i, "J_i": list(r.J_i)} for r in summary.per_point
        ],
    }
