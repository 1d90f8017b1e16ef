"""Arc length of image curves, ∫ |f′(γ(t))| |γ′(t)| dt, by adaptive quadrature.

The integrator bisects the subinterval with the largest error estimate until
the summed estimate meets the requested relative tolerance.  Each
subinterval is integrated with a 10-point and a 20-point Gauss–Legendre rule;
the 20-point value is kept and the difference is the error estimate.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

from ._validation import DomainError, check_interval
from .hyperbolic import DISK, Geodesic
from .moebius import INF, Circle

__all__ = [
    "ParamCurve",
    "ArcLength",
    "QuadratureError",
    "PoleProximityError",
    "integrate",
    "arc_length",
    "truncated_length",
    "diameter_I",
    "horizontal_diameter",
    "semicircle_Cprime",
    "upper_semicircle",
    "curve_of_semicircle_upper",
    "unit_circle_arc",
    "real_segment",
    "rotated_diameter",
    "geodesic_arc",
    "reparametrized",
]

MAX_EVALUATIONS = 1_000_000
POLE_CLEARANCE = 1e-8
DEFAULT_REL_TOL = 1e-10

_LO_X, _LO_W = np.polynomial.legendre.leggauss(10)
_HI_X, _HI_W = np.polynomial.legendre.leggauss(20)
# levels of geometric clustering laid down next to an open endpoint
_CLUSTER_LEVELS = 8


class QuadratureError(RuntimeError):
    """The subdivision budget ran out before the tolerance was met."""

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (best estimate {estimate!r}, error bound {error!r})")
        self.estimate = estimate
        self.error = error


class PoleProximityError(DomainError):
    """The curve passes too close to a pole of the map."""


class ArcLength(NamedTuple):
    value: float
    error: float
    evaluations: int

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class ParamCurve:
    """A C¹ curve t ↦ γ(t) on [t0, t1]; open ends are never evaluated."""

    t0: float
    t1: float
    point: Callable
    deriv: Callable
    open_start: bool = False
    open_end: bool = False
    name: str = "curve"

    def __post_init__(self):
        if not self.t0 < self.t1:
            raise DomainError("curve domain must satisfy t0 < t1")

    def restricted(self, t0: float, t1: float, *, name: str | None = None) -> "ParamCurve":
        """Same curve on the sub-domain [t0, t1]; an end stays open only if it is unchanged."""
        return ParamCurve(
            t0,
            t1,
            self.point,
            self.deriv,
            open_start=self.open_start and t0 == self.t0,
            open_end=self.open_end and t1 == self.t1,
            name=name or self.name,
        )

    def distance_to(self, w: complex) -> float:
        """Distance from ``w`` to the curve: dense sampling refined by a bounded 1-D search."""
        # endpoints included: the distance is to the closure of the curve
        ts = np.linspace(self.t0, self.t1, 2001)
        with np.errstate(all="ignore"):
            d = np.abs(self.point(ts) - w)
        d = np.where(np.isfinite(d), d, np.inf)
        i = int(np.argmin(d))
        lo, hi = ts[max(i - 1, 0)], ts[min(i + 1, len(ts) - 1)]
        if hi <= lo or d[i] == 0:
            return float(d[i])
        res = minimize_scalar(
            lambda t: abs(complex(self.point(np.array([t]))[0]) - w),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-14 * max(1.0, abs(hi - lo))},
        )
        return float(min(d[i], res.fun))


def diameter_I() -> ParamCurve:
    """t ↦ it on (−1, 1)."""
    return ParamCurve(
        -1.0, 1.0, lambda t: 1j * t, lambda t: 1j * np.ones_like(t),
        open_start=True, open_end=True, name="I",
    )


def horizontal_diameter() -> ParamCurve:
    """t ↦ t on (−1, 1)."""
    return ParamCurve(
        -1.0, 1.0, lambda t: t + 0j, lambda t: np.ones_like(t) + 0j,
        open_start=True, open_end=True, name="(-1,1)",
    )


def unit_circle_arc(theta0: float, theta1: float, *, open_start=False, open_end=False, name="arc") -> ParamCurve:
    return ParamCurve(
        theta0, theta1, lambda t: np.exp(1j * t), lambda t: 1j * np.exp(1j * t),
        open_start=open_start, open_end=open_end, name=name,
    )


def semicircle_Cprime() -> ParamCurve:
    """θ ↦ e^{iθ} on [π/2, 3π/2], the left half of the unit circle."""
    return unit_circle_arc(math.pi / 2, 3 * math.pi / 2, name="Cprime")


def upper_semicircle() -> ParamCurve:
    """θ ↦ e^{iθ} on (0, π)."""
    return unit_circle_arc(0.0, math.pi, open_start=True, open_end=True, name="upper")


curve_of_semicircle_upper = upper_semicircle


def real_segment(a: float, b: float) -> ParamCurve:
    return ParamCurve(
        float(a), float(b), lambda t: t + 0j, lambda t: np.ones_like(t) + 0j,
        name=f"[{a:g}, {b:g}]",
    )


def rotated_diameter(theta: float) -> ParamCurve:
    """The diameter making angle θ with I: t ↦ i t e^{iθ}, t ∈ (−1, 1)."""
    direction = 1j * complex(math.cos(theta), math.sin(theta))
    return ParamCurve(
        -1.0, 1.0, lambda t: direction * t, lambda t: direction * np.ones_like(t),
        open_start=True, open_end=True, name=f"I(θ={theta:g})",
    )


def geodesic_arc(geodesic: Geodesic) -> ParamCurve:
    """Parametrize the part of a geodesic's carrier that lies inside its model.

    Vertical half-plane geodesics are reparametrized onto (0, 1) by
    t ↦ x + i t/(1 − t).
    """
    carrier = geodesic.carrier
    e1, e2 = geodesic.endpoints
    if isinstance(carrier, Circle):
        c, r = carrier.center, carrier.radius
        a1 = math.atan2((e1 - c).imag, (e1 - c).real)
        a2 = math.atan2((e2 - c).imag, (e2 - c).real)
        if a2 < a1:
            a1, a2 = a2, a1
        mid = c + r * complex(math.cos((a1 + a2) / 2), math.sin((a1 + a2) / 2))
        inside = abs(mid) < 1.0 if geodesic.model == DISK else mid.imag > 0
        if not inside:
            a1, a2 = a2, a1 + 2 * math.pi
        return ParamCurve(
            a1, a2, lambda t: c + r * np.exp(1j * t), lambda t: 1j * r * np.exp(1j * t),
            open_start=True, open_end=True, name="geodesic",
        )
    if geodesic.model == DISK:
        return ParamCurve(
            -1.0, 1.0, lambda t: e1 * t, lambda t: e1 * np.ones_like(t),
            open_start=True, open_end=True, name="geodesic",
        )
    finite = e1 if e1 is not INF else e2
    x0 = complex(finite).real
    return ParamCurve(
        0.0, 1.0, lambda t: x0 + 1j * t / (1 - t), lambda t: 1j / (1 - t) ** 2 + 0j * t,
        open_start=True, open_end=True, name="geodesic",
    )


def reparametrized(curve: ParamCurve, power: int = 3) -> ParamCurve:
    """The same point set traced by s ↦ γ(φ(s)), with φ a smooth increasing cubic-type bijection.

    φ maps [−1, 1] onto [t0, t1] through u ↦ (u + u^power)/2, which has
    nonzero derivative everywhere.
    """
    t0, t1 = curve.t0, curve.t1
    half = (t1 - t0) / 2

    def phi(s):
        return t0 + half * (1 + (s + s**power) / 2)

    def dphi(s):
        return half * (1 + power * s ** (power - 1)) / 2

    return ParamCurve(
        -1.0, 1.0,
        lambda s: curve.point(phi(s)),
        lambda s: curve.deriv(phi(s)) * dphi(s),
        open_start=curve.open_start, open_end=curve.open_end,
        name=f"{curve.name}∘φ",
    )


# -- the integrator --------------------------------------------------------

def _rule(f, a: float, b: float) -> tuple[float, float]:
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    x = np.concatenate([mid + half * _LO_X, mid + half * _HI_X])
    y = f(x)
    lo = half * float(np.dot(_LO_W, y[: len(_LO_X)]))
    hi = half * float(np.dot(_HI_W, y[len(_LO_X):]))
    return hi, abs(hi - lo)


def _initial_partition(a: float, b: float, open_start: bool, open_end: bool) -> list[float]:
    """Breakpoints clustered geometrically (ratio 1/2) towards each open end."""
    mid = 0.5 * (a + b)
    left = [a]
    if open_start:
        left += [a + (mid - a) * 0.5**k for k in range(_CLUSTER_LEVELS, 0, -1)]
    right = [mid]
    if open_end:
        right += [b - (b - mid) * 0.5**k for k in range(1, _CLUSTER_LEVELS + 1)]
    return left + right + [b]


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    rel_tol: float = DEFAULT_REL_TOL,
    *,
    open_start: bool = False,
    open_end: bool = False,
    abs_tol: float = 0.0,
    max_evaluations: int = MAX_EVALUATIONS,
) -> ArcLength:
    """Adaptive integral of a vectorized real function over [a, b]."""
    per_rule = len(_LO_X) + len(_HI_X)
    points = _initial_partition(a, b, open_start, open_end)
    heap = []
    evaluations = 0
    for lo, hi in zip(points[:-1], points[1:]):
        value, err = _rule(f, lo, hi)
        evaluations += per_rule
        heap.append((-err, lo, hi, value))
    heapq.heapify(heap)
    finished = []
    total = math.fsum(v for _, _, _, v in heap)
    error = math.fsum(-e for e, _, _, _ in heap)
    while heap and error > max(rel_tol * abs(total), abs_tol):
        if evaluations + 2 * per_rule > max_evaluations:
            raise QuadratureError("subdivision budget exhausted", total, error)
        neg_err, lo, hi, value = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # interval cannot be split further in floating point
            finished.append((neg_err, lo, hi, value))
            continue
        total -= value
        error += neg_err
        for s0, s1 in ((lo, mid), (mid, hi)):
            v, e = _rule(f, s0, s1)
            heapq.heappush(heap, (-e, s0, s1, v))
            total += v
            error += e
        evaluations += 2 * per_rule
        if not math.isfinite(total):
            raise QuadratureError("integrand is not finite", total, error)
    # deterministic summation order: by position along the interval
    items = sorted(heap + finished, key=lambda item: item[1])
    total = math.fsum(v for _, _, _, v in items)
    error = math.fsum(-e for e, _, _, _ in items)
    return ArcLength(total, error, evaluations)


def _check_clearance(m, curve: ParamCurve) -> None:
    for pole in m.poles():
        if pole is INF:
            continue
        d = curve.distance_to(complex(pole))
        if d < POLE_CLEARANCE:
            raise PoleProximityError(
                f"curve {curve.name} passes within {d:.3g} of the pole {complex(pole)!r}"
            )


def arc_length(m, curve: ParamCurve, rel_tol: float = DEFAULT_REL_TOL) -> ArcLength:
    """Length of the image m(curve) with the integrator's error estimate."""
    rel_tol = check_interval("rel_tol", rel_tol, 1e-13, 1e-3, closed_lo=True, closed_hi=True)
    _check_clearance(m, curve)

    def speed(t):
        return np.abs(m.deriv(curve.point(t))) * np.abs(curve.deriv(t))

    return integrate(
        speed, curve.t0, curve.t1, rel_tol,
        open_start=curve.open_start, open_end=curve.open_end,
    )


def truncated_length(
    m,
    curve: ParamCurve,
    eps_list,
    *,
    bad_end: str = "end",
    rel_tol: float = DEFAULT_REL_TOL,
) -> list[tuple[float, ArcLength]]:
    """Lengths over the domain cut a parameter distance ε short of the divergent end."""
    if bad_end not in ("start", "end"):
        raise DomainError("bad_end must be 'start' or 'end'")
    span = curve.t1 - curve.t0
    eps_list = [float(e) for e in eps_list]
    for e in eps_list:
        check_interval("eps", e, 0.0, span)
    if any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps values must be strictly decreasing")
    out = []
    for eps in eps_list:
        if bad_end == "end":
            piece = curve.restricted(curve.t0, curve.t1 - eps)
        else:
            piece = curve.restricted(curve.t0 + eps, curve.t1)
        out.append((eps, arc_length(m, piece, rel_tol)))
    return out
