"""Points on the unit sphere: distances, the law of cosines, the rhombus
diagonal map, and point-set generation (icosahedron witness, seeded random
separated sets).

Angles are radians everywhere inside the library; degrees appear only at the
CLI boundary and in the point-set text format.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SaturationError, TooFewPoints

TWO_PI = 2.0 * math.pi


def _clamp(x: float) -> float:
    return -1.0 if x < -1.0 else (1.0 if x > 1.0 else x)


@dataclass(frozen=True)
class SphericalPoint:
    """Colatitude theta in [0, pi] (0 = reference pole), azimuth phi in [0, 2pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"colatitude out of range: {self.theta}")
        object.__setattr__(self, "phi", self.phi % TWO_PI)

    def to_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    @staticmethod
    def from_vector(v) -> "SphericalPoint":
        v = np.asarray(v, dtype=float)
        v = v / np.linalg.norm(v)
        return SphericalPoint(math.acos(_clamp(v[2])), math.atan2(v[1], v[0]))


@dataclass(frozen=True)
class PointSet:
    points: tuple[SphericalPoint, ...]

    def __init__(self, points):
        object.__setattr__(self, "points", tuple(points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def vectors(self) -> np.ndarray:
        return np.array([p.to_vector() for p in self.points])

    def cos_matrix(self) -> np.ndarray:
        """Pairwise cosines of angular distance, clamped into [-1, 1]."""
        v = self.vectors()
        return np.clip(v @ v.T, -1.0, 1.0)

    def distance_matrix(self) -> np.ndarray:
        return np.arccos(self.cos_matrix())


def cos_law(theta1: float, theta2: float, dphi: float) -> float:
    """Spherical law of cosines: cosine of the side opposite the angle dphi."""
    c = math.cos(theta1) * math.cos(theta2) + math.sin(theta1) * math.sin(
        theta2
    ) * math.cos(dphi)
    return _clamp(c)


def angular_distance(p: SphericalPoint, q: SphericalPoint) -> float:
    return math.acos(cos_law(p.theta, q.theta, p.phi - q.phi))


def rho(s: float) -> float:
    """Companion diagonal of a unit-edge (60 degree) spherical rhombus.

    The diagonals d1, d2 satisfy cos(d1/2) cos(d2/2) = 1/2, so
    rho(s) = 2 arccos(1 / (2 cos(s/2))); an involution with rho(pi/2) = pi/2.
    """
    c = math.cos(s / 2.0)
    if c <= 0.5:
        raise DomainError(f"rho requires cos(s/2) > 1/2, got s = {s}")
    return 2.0 * math.acos(1.0 / (2.0 * c))


def min_separation(ps: PointSet) -> float:
    if len(ps) < 2:
        raise TooFewPoints("min_separation needs at least two points")
    d = ps.distance_matrix()
    n = len(ps)
    return float(min(d[i, j] for i in range(n) for j in range(i + 1, n)))


def icosahedron() -> PointSet:
    """The 12 icosahedron vertices from the cyclic (0, +-1, +-tau) family,
    normalized to the unit sphere.  Minimal separation arccos(1/sqrt(5)).
    """
    tau = (1.0 + math.sqrt(5.0)) / 2.0
    verts = []
    for a in (1.0, -1.0):
        for b in (tau, -tau):
            verts += [(0.0, a, b), (a, b, 0.0), (b, 0.0, a)]
    return PointSet(SphericalPoint.from_vector(v) for v in verts)


def random_point(rng: random.Random) -> SphericalPoint:
    """Area-uniform: azimuth uniform, cosine of colatitude uniform."""
    return SphericalPoint(math.acos(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, TWO_PI))


def random_separated_set(
    n: int, min_sep: float, seed: int, max_tries: int = 20000
) -> PointSet:
    """n area-uniform points accepted by rejection against the separation
    constraint; deterministic for a fixed seed.  Raises SaturationError after
    max_tries consecutive rejections.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    accepted: list[SphericalPoint] = []
    rejections = 0
    while len(accepted) < n:
        cand = random_point(rng)
        if all(angular_distance(cand, p) >= min_sep for p in accepted):
            accepted.append(cand)
            rejections = 0
        else:
            rejections += 1
            if rejections >= max_tries:
                raise SaturationError(
                    f"placed {len(accepted)}/{n} points before {max_tries} "
                    f"consecutive rejections at separation {min_sep}"
                )
    return PointSet(accepted)


def rotated(ps: PointSet, matrix: np.ndarray) -> PointSet:
    """Apply a 3x3 rotation matrix to every point."""
    return PointSet(SphericalPoint.from_vector(matrix @ p.to_vector()) for p in ps)


def random_rotation(seed: int) -> np.ndarray:
    """A uniformly random rotation matrix (QR of a Gaussian matrix)."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


# -- point-set text format: one "theta_deg phi_deg" pair per line ------------


def format_points(ps: PointSet) -> str:
    lines = ["# theta_deg phi_deg"]
    for p in ps:
        lines.append(f"{math.degrees(p.theta):.12f} {math.degrees(p.phi):.12f}")
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'theta_deg phi_deg', got {raw!r}")
        theta, phi = (math.radians(float(x)) for x in parts)
        points.append(SphericalPoint(theta, phi))
    return PointSet(points)
