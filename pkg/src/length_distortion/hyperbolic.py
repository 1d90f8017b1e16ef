"""Hyperbolic geometry of the unit disk and the upper half-plane.

Geodesics are kept as their carrier (a generalized circle orthogonal to the
model boundary) together with the two ideal endpoints.  Only geodesics that
are symmetric about the real axis, or that are given by boundary endpoints,
are constructed here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._validation import DomainError, check_interval, check_unit_interval
from .moebius import Circle, GeneralizedCircle, Line

__all__ = [
    "SQRT2_MINUS_1",
    "Geodesic",
    "HalfPlaneRegion",
    "Side",
    "hyperbolic_distance_disk",
    "symmetric_geodesic_through",
    "sigma_geodesic",
    "disk_geodesic_between",
    "alpha_from_p",
    "p_from_alpha",
    "omega_region",
    "omega1_region",
    "omega0_region",
    "side_of",
    "rotation_sector_max_angle",
    "circle_geodesic_intersection",
]

SQRT2_MINUS_1 = math.sqrt(2.0) - 1.0

DISK = "disk"
HALF_PLANE = "half-plane"


@dataclass(frozen=True)
class Geodesic:
    model: str
    carrier: GeneralizedCircle
    endpoints: tuple[complex, complex]

    def __post_init__(self):
        if self.model not in (DISK, HALF_PLANE):
            raise DomainError(f"unknown model {self.model!r}")


class Side(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class HalfPlaneRegion:
    """One of the two hyperbolic half-planes cut out by ``geodesic``.

    The region is the side of the carrier that contains ``anchor``.
    """

    geodesic: Geodesic
    anchor: complex

    def __post_init__(self):
        object.__setattr__(self, "anchor", complex(self.anchor))
        if abs(_carrier_value(self.geodesic.carrier, self.anchor)) < 1e-12:
            raise DomainError("anchor lies on the defining geodesic")


def _in_model(model: str, z: complex) -> bool:
    if model == DISK:
        return abs(z) < 1.0
    return z.imag > 0.0


def hyperbolic_distance_disk(z1: complex, z2: complex) -> float:
    """Distance for the density 1/(1 − |z|²), i.e. atanh of the pseudo-hyperbolic distance."""
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) >= 1.0 or abs(z2) >= 1.0:
        raise DomainError("points must lie in the open unit disk")
    return math.atanh(abs(z1 - z2) / abs(1.0 - z1.conjugate() * z2))


def symmetric_geodesic_through(alpha: float) -> Geodesic:
    """Disk geodesic x² + y² − (2/α)x + 1 = 0 with endpoints α ± i√(1−α²).

    It crosses the real axis at α/(1 + √(1−α²)).
    """
    alpha = check_unit_interval("alpha", alpha)
    s = math.sqrt(1.0 - alpha * alpha)
    carrier = Circle(1.0 / alpha, s / alpha)
    return Geodesic(DISK, carrier, (complex(alpha, s), complex(alpha, -s)))


def sigma_geodesic(alpha: float) -> Geodesic:
    """Half-plane geodesic x² + y² + (2/α)x + 1 = 0, y > 0."""
    alpha = check_unit_interval("alpha", alpha)
    s = math.sqrt(1.0 - alpha * alpha)
    carrier = Circle(-1.0 / alpha, s / alpha)
    # roots of x² + (2/α)x + 1 written to avoid cancellation
    near = -alpha / (1.0 + s)
    far = -(1.0 + s) / alpha
    return Geodesic(HALF_PLANE, carrier, (complex(near), complex(far)))


def disk_geodesic_between(e1: complex, e2: complex) -> Geodesic:
    """The disk geodesic with ideal endpoints ``e1`` and ``e2`` on the unit circle."""
    e1, e2 = complex(e1), complex(e2)
    for e in (e1, e2):
        if abs(abs(e) - 1.0) > 1e-12:
            raise DomainError(f"ideal endpoints must lie on the unit circle (got {e!r})")
    if abs(e1 - e2) < 1e-14:
        raise DomainError("ideal endpoints must be distinct")
    total = e1 + e2
    if abs(total) < 1e-12:
        return Geodesic(DISK, Line(1j * e1, 0.0), (e1, e2))
    center = 2.0 * total / abs(total) ** 2
    radius = math.sqrt(abs(center) ** 2 - 1.0)
    return Geodesic(DISK, Circle(center, radius), (e1, e2))


def alpha_from_p(p: float) -> float:
    p = check_unit_interval("p", p)
    return 2.0 * p / (1.0 + p * p)


def p_from_alpha(alpha: float) -> float:
    alpha = check_unit_interval("alpha", alpha)
    return alpha / (1.0 + math.sqrt(1.0 - alpha * alpha))


def _carrier_value(carrier: GeneralizedCircle, z):
    # |z − c|² − r² vanishes on the carrier; for a line, the signed offset
    if isinstance(carrier, Circle):
        return np.abs(z - carrier.center) ** 2 - carrier.radius**2
    return carrier.residual(z)


def omega_region(alpha: float) -> HalfPlaneRegion:
    """Side of the symmetric disk geodesic that contains the origin."""
    return HalfPlaneRegion(symmetric_geodesic_through(alpha), 0.0)


def omega1_region(alpha: float) -> HalfPlaneRegion:
    """Side of the half-plane geodesic x² + y² + (2/α)x + 1 = 0 containing i."""
    return HalfPlaneRegion(sigma_geodesic(alpha), 1j)


def omega0_region() -> HalfPlaneRegion:
    """Side of the geodesic through √2 − 1 that does not contain the origin."""
    geodesic = symmetric_geodesic_through(1.0 / math.sqrt(2.0))
    return HalfPlaneRegion(geodesic, (SQRT2_MINUS_1 + 1.0) / 2.0)


def side_of(region: HalfPlaneRegion, z: complex, tol: float = 1e-12) -> Side:
    z = complex(z)
    if not _in_model(region.geodesic.model, z):
        raise DomainError(f"{z!r} is not a point of the {region.geodesic.model} model")
    value = _carrier_value(region.geodesic.carrier, z)
    if abs(value) < tol:
        return Side.BOUNDARY
    anchor_sign = _carrier_value(region.geodesic.carrier, region.anchor) > 0
    return Side.INSIDE if (value > 0) == anchor_sign else Side.OUTSIDE


def _sector_radicand(p: float) -> float:
    # the sector closes at p = √2 − 1, which is accepted as a limit case
    p = check_interval(
        "p", p, SQRT2_MINUS_1 - 1e-15, 1.0, lo_label="√2−1", closed_lo=True
    )
    radicand = 6.0 * p * p - p**4 - 1.0
    return p, max(radicand, 0.0)


def rotation_sector_max_angle(p: float) -> float:
    """Largest |θ| for which the rotated pole p·e^{−iθ} stays beyond the geodesic through √2 − 1."""
    p, radicand = _sector_radicand(p)
    return math.atan(math.sqrt(radicand) / (1.0 + p * p))


def circle_geodesic_intersection(p: float) -> tuple[complex, complex]:
    """Points where |z| = p meets x² + y² − 2√2x + 1 = 0 (upper point first)."""
    p, radicand = _sector_radicand(p)
    x = (1.0 + p * p) / (2.0 * math.sqrt(2.0))
    y = math.sqrt(radicand) / (2.0 * math.sqrt(2.0))
    return complex(x, y), complex(x, -y)
