"""The concrete analytic and meromorphic maps used in the length estimates.

Each map is callable on points of the extended plane (and, for finite
points, on numpy arrays), exposes its exact derivative, and can list the
preimages of a point so that poles of compositions come out exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._validation import DomainError, PoleError, check_interval, check_unit_interval
from .hyperbolic import SQRT2_MINUS_1, Side, omega_region, side_of
from .moebius import (
    INF,
    MoebiusMap,
    compose,
    disk_to_half_plane,
    disk_to_half_plane_at,
)

__all__ = [
    "ConformalMap",
    "SlitMap",
    "RegionToDiskMap",
    "ExpCayleyMap",
    "MoebiusMapping",
    "Composition",
    "Slit",
    "kp_slit",
    "slit_distance",
    "kp_length_I",
    "kp_length_Cprime",
    "kp_ratio",
    "kp_image_circle_of_I",
    "lemma1_rhs",
    "p0_from_alpha1",
    "reduction_map",
    "p1_prime",
]


def _quadratic_roots(a: complex, b: complex, c: complex) -> list:
    """Roots of az² + bz + c on the sphere; a vanishing leading term contributes ∞."""
    if a == 0:
        if b == 0:
            return [INF, INF]
        return [-c / b, INF]
    disc = cmath.sqrt(b * b - 4 * a * c)
    # pick the sign that avoids cancellation, then use Vieta
    q = -0.5 * (b + disc) if (b.conjugate() * disc).real >= 0 else -0.5 * (b - disc)
    if q == 0:
        return [0j, 0j]
    return [q / a, c / q]


class ConformalMap:
    """Common interface: ``m(z)``, ``m.deriv(z)``, ``m.preimages(w)``, ``m.poles()``."""

    def __call__(self, z):
        raise NotImplementedError

    def deriv(self, z):
        raise NotImplementedError

    def preimages(self, w) -> list:
        raise NotImplementedError

    def poles(self) -> list:
        """All points of the sphere mapped to ∞, without repetition."""
        out = []
        for z in self.preimages(INF):
            if not any(_same_point(z, seen) for seen in out):
                out.append(z)
        return out

    def _check_not_pole(self, z):
        if z is INF:
            raise DomainError("derivative is only provided at finite points")
        if isinstance(z, np.ndarray):
            return
        for pole in self.poles():
            if pole is not INF and z == pole:
                raise PoleError(f"derivative requested at the pole {pole!r}")


def _same_point(z, w) -> bool:
    if z is INF or w is INF:
        return z is w
    return abs(complex(z) - complex(w)) <= 1e-14 * (1.0 + abs(complex(z)))


@dataclass(frozen=True)
class SlitMap(ConformalMap):
    """pz / ((1 − pz)(p − z)): the disk onto the sphere minus a real slit, pole at p."""

    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", check_unit_interval("p", self.p))

    def __call__(self, z):
        p = self.p
        if z is INF:
            return 0j
        if isinstance(z, np.ndarray):
            return p * z / ((1 - p * z) * (p - z))
        z = complex(z)
        den = (1 - p * z) * (p - z)
        if den == 0:
            return INF
        return p * z / den

    def deriv(self, z):
        self._check_not_pole(z)
        p = self.p
        den = (1 - p * z) * (p - z)
        return p * p * (1 - z * z) / den**2

    def preimages(self, w) -> list:
        p = self.p
        if w is INF:
            return [complex(p), complex(1.0 / p)]
        w = complex(w)
        # w(p − (1 + p²)z + pz²) = pz
        return _quadratic_roots(w * p, -(w * (1 + p * p) + p), w * p)


@dataclass(frozen=True)
class RegionToDiskMap(ConformalMap):
    """z(1 − αz)/(z − α): the side of the symmetric geodesic containing 0 onto the disk."""

    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_unit_interval("alpha", self.alpha))

    def __call__(self, z):
        a = self.alpha
        if z is INF:
            return INF
        if isinstance(z, np.ndarray):
            return z * (1 - a * z) / (z - a)
        z = complex(z)
        if z == a:
            return INF
        return z * (1 - a * z) / (z - a)

    def deriv(self, z):
        self._check_not_pole(z)
        a = self.alpha
        return -a * (1 - 2 * a * z + z * z) / (z - a) ** 2

    def preimages(self, w) -> list:
        a = self.alpha
        if w is INF:
            return [complex(a), INF]
        w = complex(w)
        # αz² + (w − 1)z − wα = 0
        return _quadratic_roots(complex(a), w - 1, -w * a)


@dataclass(frozen=True)
class ExpCayleyMap(ConformalMap):
    """exp(i(1 + z)/(1 − z)): analytic in the disk, essential singularity at 1.

    On the upper unit semicircle it is evaluated in the real form
    exp(−cot(θ/2)), which cannot overflow.
    """

    def _on_upper_circle(self, z):
        return np.abs(np.abs(z) - 1.0) <= 1e-14 and np.imag(z) > 0

    def __call__(self, z):
        if z is INF:
            return complex(cmath.exp(-1j))
        if isinstance(z, np.ndarray):
            z = z.astype(complex)
            out = np.exp(1j * (1 + z) / (1 - z))
            mask = (np.abs(np.abs(z) - 1.0) <= 1e-14) & (z.imag > 0)
            if np.any(mask):
                theta = np.angle(z[mask])
                out[mask] = np.exp(-1.0 / np.tan(theta / 2))
            return out
        z = complex(z)
        if z == 1:
            raise DomainError("exp(i(1+z)/(1−z)) has an essential singularity at z = 1")
        if self._on_upper_circle(z):
            return complex(math.exp(-1.0 / math.tan(cmath.phase(z) / 2)))
        return cmath.exp(1j * (1 + z) / (1 - z))

    def deriv(self, z):
        if z is INF:
            raise DomainError("derivative is only provided at finite points")
        if not isinstance(z, np.ndarray) and complex(z) == 1:
            raise DomainError("exp(i(1+z)/(1−z)) has an essential singularity at z = 1")
        return self(z) * 2j / (1 - z) ** 2

    def preimages(self, w) -> list:
        if w is INF:
            return []
        raise NotImplementedError("finite values have infinitely many preimages")


@dataclass(frozen=True)
class MoebiusMapping(ConformalMap):
    """A fractional-linear map seen as a :class:`ConformalMap`."""

    m: MoebiusMap

    def __call__(self, z):
        return self.m(z)

    def deriv(self, z):
        self._check_not_pole(z)
        return self.m.deriv(z)

    def preimages(self, w) -> list:
        return [self.m.inverse()(w)]


class Composition(ConformalMap):
    """``Composition(f, g, h)(z) == f(g(h(z)))``."""

    def __init__(self, *maps: ConformalMap):
        if not maps:
            raise DomainError("a composition needs at least one map")
        self.maps = tuple(
            MoebiusMapping(m) if isinstance(m, MoebiusMap) else m for m in maps
        )

    def __repr__(self) -> str:
        return f"Composition{self.maps!r}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.maps == other.maps

    def __hash__(self) -> int:
        return hash(self.maps)

    def __call__(self, z):
        for m in reversed(self.maps):
            z = m(z)
        return z

    def deriv(self, z):
        self._check_not_pole(z)
        total = 1.0
        for m in reversed(self.maps):
            total = total * m.deriv(z)
            z = m(z)
        return total

    def preimages(self, w) -> list:
        points = [w]
        for m in self.maps:
            points = [z for target in points for z in m.preimages(target)]
        return points


# -- the slit image of the extremal map -----------------------------------

@dataclass(frozen=True)
class Slit:
    left: float
    right: float

    def __post_init__(self):
        if not self.left < self.right:
            raise DomainError("slit endpoints must satisfy left < right")


def kp_slit(p: float) -> Slit:
    """The omitted segment [−p/(1−p)², −p/(1+p)²]."""
    p = check_unit_interval("p", p)
    return Slit(-p / (1 - p) ** 2, -p / (1 + p) ** 2)


def slit_distance(w: complex, slit: Slit) -> float:
    w = complex(w)
    nearest = min(max(w.real, slit.left), slit.right)
    return abs(w - nearest)


def kp_length_I(p: float) -> float:
    p = check_unit_interval("p", p)
    return p * math.pi / (1 + p * p)


def kp_length_Cprime(p: float) -> float:
    # the image segment is traversed twice
    p = check_unit_interval("p", p)
    return 4 * p * p / ((1 + p * p) * (1 + p) ** 2)


def kp_ratio(p: float) -> float:
    p = check_unit_interval("p", p)
    return (1 + p) ** 2 * math.pi / (4 * p)


def kp_image_circle_of_I(p: float) -> tuple[complex, float]:
    """Center and radius of the circle that carries the image of the vertical diameter."""
    p = check_unit_interval("p", p)
    radius = p / (2 * (1 + p * p))
    return complex(-radius, 0.0), radius


def lemma1_rhs(alpha: float, z: complex, rho: float) -> float:
    """4|φ′(z)| / (1 − |φ(z)|²) · ρ, where φ maps the region Ω(alpha) onto the disk."""
    rho = float(rho)
    if rho < 0 or not math.isfinite(rho):
        raise DomainError(f"rho must be a nonnegative finite distance (got {rho!r})")
    region = omega_region(alpha)
    z = complex(z)
    if side_of(region, z) is not Side.INSIDE:
        raise DomainError(f"{z!r} is not inside the region bounded by the geodesic")
    phi = RegionToDiskMap(alpha)
    return 4 * abs(phi.deriv(z)) / (1 - abs(phi(z)) ** 2) * rho


# -- reduction of a general symmetric geodesic to the vertical diameter ----

def _check_alpha1(alpha1: complex) -> complex:
    alpha1 = complex(alpha1)
    if abs(abs(alpha1) - 1.0) > 1e-12 or not alpha1.imag > 0:
        raise DomainError(f"alpha1 must lie on the open upper unit semicircle (got {alpha1!r})")
    return alpha1


def p0_from_alpha1(alpha1: complex) -> float:
    """(1 + √2 Re α₁)/(√2 + Re((1 − i)α₁)); lies in (−1, 1)."""
    alpha1 = _check_alpha1(alpha1)
    r2 = math.sqrt(2.0)
    return (1 + r2 * alpha1.real) / (r2 + ((1 - 1j) * alpha1).real)


def reduction_map(alpha1: complex) -> MoebiusMap:
    """The disk automorphism g⁻¹∘g₁ carrying the geodesic ending at α₁, ᾱ₁ onto the vertical diameter."""
    alpha1 = _check_alpha1(alpha1)
    return compose(disk_to_half_plane().inverse(), disk_to_half_plane_at(alpha1))


def p1_prime(p1: float, alpha1: complex) -> float:
    """Image of the pole p₁ under the reduction map, in closed form."""
    alpha1 = _check_alpha1(alpha1)
    p0 = p0_from_alpha1(alpha1)
    p1 = check_interval("p1", p1, p0, 1.0, lo_label=f"p0 = {p0:.12g}")
    value = (1 - p1 * alpha1 + 1j * (alpha1 - p1)) / (p1 - alpha1 + 1j * (p1 * alpha1 - 1))
    if abs(value.imag) > 1e-10:
        raise ArithmeticError(f"reduced pole is not real: {value!r}")
    if not SQRT2_MINUS_1 - 1e-12 < value.real < 1.0 + 1e-12:
        raise ArithmeticError(f"reduced pole {value.real!r} left (√2−1, 1)")
    return value.real
