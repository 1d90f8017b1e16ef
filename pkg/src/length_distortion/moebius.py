"""Fractional-linear maps on the extended complex plane.

Points of the Riemann sphere are plain Python ``complex`` values plus the
singleton :data:`INF`.  Maps are immutable and stored with coefficients
normalised to unit determinant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ._validation import DomainError

__all__ = [
    "INF",
    "ExtendedComplex",
    "is_inf",
    "chordal_distance",
    "MoebiusMap",
    "IDENTITY",
    "apply",
    "compose",
    "inverse",
    "Line",
    "Circle",
    "GeneralizedCircle",
    "circle_through",
    "image_circle",
    "UNIT_CIRCLE",
    "REAL_AXIS",
    "IMAGINARY_AXIS",
    "disk_to_half_plane",
    "disk_to_half_plane_at",
]


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtendedComplex = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def _as_point(z) -> ExtendedComplex:
    if z is INF:
        return INF
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"finite points need finite coordinates (got {z!r}); use INF")
    return z


def chordal_distance(z, w) -> float:
    """Chordal distance on the unit Riemann sphere, so that d(0, ∞) = 2."""
    if z is INF and w is INF:
        return 0.0
    if z is INF:
        z, w = w, z
    z = complex(z)
    if w is INF:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    w = complex(w)
    return 2.0 * abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


@dataclass(frozen=True)
class MoebiusMap:
    """z ↦ (az + b)/(cz + d) with ad − bc ≠ 0.

    Coefficients are rescaled at construction so that ad − bc = 1.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(x) for x in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        scale = max(abs(a), abs(b), abs(c), abs(d))
        if scale == 0 or not math.isfinite(scale) or abs(det) <= 1e-14 * scale * scale:
            raise DomainError("Moebius map is degenerate (ad − bc = 0)")
        s = cmath.sqrt(det)
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def pole(self) -> ExtendedComplex:
        """The point sent to ∞."""
        if self.c == 0:
            return INF
        return -self.d / self.c

    def __call__(self, z):
        if isinstance(z, np.ndarray):
            return (self.a * z + self.b) / (self.c * z + self.d)
        z = _as_point(z)
        if z is INF:
            return INF if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    def deriv(self, z):
        """Derivative (ad − bc)/(cz + d)² at a finite, non-pole point."""
        return self.determinant / (self.c * z + self.d) ** 2

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return compose(self, other)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def isclose(self, other: "MoebiusMap", tol: float = 1e-12) -> bool:
        """Projective equality: equal coefficients up to a common sign."""
        m1, m2 = self.matrix(), other.matrix()
        return bool(
            np.max(np.abs(m1 - m2)) <= tol or np.max(np.abs(m1 + m2)) <= tol
        )


IDENTITY = MoebiusMap(1, 0, 0, 1)


def apply(m: MoebiusMap, z) -> ExtendedComplex:
    return m(z)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """The map z ↦ m1(m2(z))."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: MoebiusMap) -> MoebiusMap:
    return m.inverse()


# -- generalized circles ---------------------------------------------------

@dataclass(frozen=True)
class Line:
    """The line Re(conj(normal)·z) = offset; ``normal`` has modulus one."""

    normal: complex
    offset: float

    def __post_init__(self):
        n = complex(self.normal)
        if abs(n) == 0:
            raise DomainError("line normal must be nonzero")
        object.__setattr__(self, "normal", n / abs(n))
        object.__setattr__(self, "offset", float(self.offset) / abs(n))

    @classmethod
    def through(cls, z1: complex, z2: complex) -> "Line":
        direction = complex(z2) - complex(z1)
        if direction == 0:
            raise DomainError("two distinct points are needed to define a line")
        n = 1j * direction / abs(direction)
        return cls(n, (n.conjugate() * z1).real)

    def residual(self, z):
        """Signed distance from the line; zero at ∞."""
        if z is INF:
            return 0.0
        return (np.conj(self.normal) * z).real - self.offset

    def points(self, n: int) -> list[complex]:
        base = self.offset * self.normal
        ts = np.tan(np.linspace(-1.45, 1.45, n))
        return [complex(base + 1j * self.normal * t) for t in ts]

    def isclose(self, other, tol: float = 1e-10) -> bool:
        if not isinstance(other, Line):
            return False
        same = abs(self.normal - other.normal) <= tol and abs(self.offset - other.offset) <= tol
        flipped = abs(self.normal + other.normal) <= tol and abs(self.offset + other.offset) <= tol
        return bool(same or flipped)


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        r = float(self.radius)
        if not r > 0 or not math.isfinite(r):
            raise DomainError(f"circle radius must be positive and finite (got {r!r})")
        object.__setattr__(self, "radius", r)

    def residual(self, z):
        """Signed distance from the circle, positive outside."""
        if z is INF:
            return math.inf
        return np.abs(z - self.center) - self.radius

    def points(self, n: int) -> list[complex]:
        angles = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
        return [complex(self.center + self.radius * np.exp(1j * t)) for t in angles]

    def isclose(self, other, tol: float = 1e-10) -> bool:
        if not isinstance(other, Circle):
            return False
        return bool(
            abs(self.center - other.center) <= tol and abs(self.radius - other.radius) <= tol
        )


GeneralizedCircle = Union[Line, Circle]

UNIT_CIRCLE = Circle(0, 1)
REAL_AXIS = Line(1j, 0.0)
IMAGINARY_AXIS = Line(1, 0.0)

# images with a larger radius are reported as lines
_LINE_RADIUS = 1e8


def circle_through(z1: complex, z2: complex, z3: complex) -> GeneralizedCircle:
    """The generalized circle through three distinct finite points."""
    a = complex(z2) - complex(z1)
    b = complex(z3) - complex(z1)
    det = a.real * b.imag - a.imag * b.real
    scale = max(abs(a), abs(b))
    far = z2 if abs(a) >= abs(b) else z3
    if abs(det) <= 1e-15 * scale * scale:
        return Line.through(z1, far)
    rhs = np.array([abs(a) ** 2 / 2, abs(b) ** 2 / 2])
    cx, cy = np.linalg.solve(np.array([[a.real, a.imag], [b.real, b.imag]]), rhs)
    radius = math.hypot(cx, cy)
    if radius > _LINE_RADIUS:
        return Line.through(z1, far)
    return Circle(complex(z1) + complex(cx, cy), radius)


def _fit_line(points: list[complex]) -> Line:
    pts = np.asarray(points, dtype=complex)
    xy = np.column_stack([pts.real, pts.imag])
    mean = xy.mean(axis=0)
    _, _, vt = np.linalg.svd(xy - mean)
    direction = complex(vt[0, 0], vt[0, 1])
    n = 1j * direction
    return Line(n, (n.conjugate() * complex(*mean)).real)


def _widest_triple(points: list[complex]) -> tuple[complex, complex, complex]:
    best, best_area = None, -1.0
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                u, v = points[j] - points[i], points[k] - points[i]
                area = abs(u.real * v.imag - u.imag * v.real)
                if area > best_area:
                    best, best_area = (points[i], points[j], points[k]), area
    return best


def image_circle(m: MoebiusMap, circle: GeneralizedCircle) -> GeneralizedCircle:
    """Image of a generalized circle under a Moebius map."""
    images = [m(z) for z in circle.points(12)]
    finite = [w for w in images if w is not INF]
    pole = m.pole
    through_pole = pole is INF and isinstance(circle, Line)
    if pole is not INF:
        scale = 1.0 + abs(pole)
        through_pole = abs(circle.residual(pole)) <= 1e-12 * scale
    if through_pole:
        moduli = np.abs(finite)
        keep = [w for w, r in zip(finite, moduli) if r <= 10 * np.median(moduli) + 1.0]
        return _fit_line(keep)
    result = circle_through(*_widest_triple(finite))
    if isinstance(result, Line):
        moduli = np.abs(finite)
        keep = [w for w, r in zip(finite, moduli) if r <= 10 * np.median(moduli) + 1.0]
        return _fit_line(keep)
    return result


# -- the two half-plane maps used throughout ------------------------------

def disk_to_half_plane() -> MoebiusMap:
    """z ↦ (−1 − iz)/(z + i): unit disk onto the upper half-plane, 0 ↦ i."""
    return MoebiusMap(-1j, -1, 1, 1j)


def disk_to_half_plane_at(alpha1: complex) -> MoebiusMap:
    """z ↦ (z − α₁)/(α₁z − 1) for α₁ on the open upper unit semicircle.

    Sends α₁ to 0 and −1 to 1; the arc of the unit circle through −1 between
    α₁ and its conjugate lands on the positive real axis.
    """
    alpha1 = complex(alpha1)
    if abs(abs(alpha1) - 1.0) > 1e-12 or not alpha1.imag > 0:
        raise DomainError(f"alpha1 must lie on the open upper unit semicircle (got {alpha1!r})")
    return MoebiusMap(1, -alpha1, alpha1, -1)
