"""Scalar bound functions for the length-distortion constant and its minimisation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._validation import DomainError, check_interval, check_unit_interval
from .hyperbolic import SQRT2_MINUS_1

__all__ = [
    "HalfPlaneSeg",
    "BoundRow",
    "MinimizeResult",
    "harmonic_measure_segment",
    "omega_lower_bound",
    "psi",
    "psi_domain",
    "psi_argmax",
    "xi",
    "lemma_a_bound",
    "b_alpha",
    "m_p",
    "golden_section",
    "minimize_mp",
    "lower_bound",
    "bound_row",
]

INV_SQRT2 = 1.0 / math.sqrt(2.0)
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

SCAN_POINTS = 200
SCAN_LO = 1.0 + 1e-6
SCAN_HI = 1e4
Q_TOL = 1e-8


@dataclass(frozen=True)
class HalfPlaneSeg:
    """The boundary segment [a, b] of the upper half-plane, 0 < a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not 0 < self.a < self.b:
            raise DomainError(f"segment needs 0 < a < b (got a={self.a!r}, b={self.b!r})")


@dataclass(frozen=True)
class BoundRow:
    p: float
    lower_bound: float
    q_star: float
    m_star: float


class MinimizeResult(NamedTuple):
    q_star: float
    m_star: float


def _atan_nonneg(x: float) -> float:
    assert x >= 0.0, f"inverse tangent argument {x!r} should be nonnegative"
    return math.atan(x)


def harmonic_measure_segment(z: complex, seg: HalfPlaneSeg) -> float:
    """Harmonic measure of [a, b] at z in the upper half-plane: subtended angle over π."""
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"z must lie in the upper half-plane (got {z!r})")
    x, y = z.real, z.imag
    return (math.atan((seg.b - x) / y) - math.atan((seg.a - x) / y)) / math.pi


def omega_lower_bound(q: float) -> float:
    """(1/π) atan((q − 1)/(q + 1)): lower bound of the measure of [a, qa] along [ia, iqa]."""
    q = check_interval("q", q, 1.0, math.inf)
    return _atan_nonneg((q - 1) / (q + 1)) / math.pi


def psi_domain(alpha: float) -> tuple[float, float]:
    alpha = check_unit_interval("alpha", alpha)
    s = math.sqrt(1 - alpha * alpha)
    return -(1 + s) / alpha, -alpha / (1 + s)


def psi(x, alpha: float):
    """−√(r² − (x + m)²)/x with m = 1/α and r = √(1−α²)/α.

    Accepts a scalar or an array of abscissae inside the closed domain.
    """
    lo, hi = psi_domain(alpha)
    xs = np.asarray(x, dtype=float)
    # allow rounding at the domain ends
    slack = 1e-12 * max(1.0, abs(lo))
    if np.any(xs < lo - slack) or np.any(xs > hi + slack):
        raise DomainError(f"x must lie in [{lo!r}, {hi!r}]")
    m = 1.0 / alpha
    r2 = (1.0 - alpha * alpha) / alpha**2
    out = -np.sqrt(np.maximum(r2 - (xs + m) ** 2, 0.0)) / xs
    return float(out) if out.ndim == 0 else out


def psi_argmax(alpha: float) -> tuple[float, float]:
    """Maximiser −α of ψ and the maximum √(1−α²)/α."""
    alpha = check_unit_interval("alpha", alpha)
    return -alpha, math.sqrt(1 - alpha * alpha) / alpha


def _check_alpha_q(alpha: float, q: float) -> tuple[float, float]:
    alpha = check_interval("alpha", alpha, INV_SQRT2, 1.0, lo_label="1/√2")
    q = check_interval("q", q, 1.0, math.inf)
    return alpha, q


def xi(alpha: float, q: float) -> float:
    """atan(k) − atan(k·√(1−α²)/α) with k = (q − 1)/(q + 1); lies in (0, π/4)."""
    alpha, q = _check_alpha_q(alpha, q)
    k = (q - 1) / (q + 1)
    return _atan_nonneg(k) - _atan_nonneg(k * math.sqrt(1 - alpha * alpha) / alpha)


def lemma_a_bound(d: float, u: float) -> float:
    """d·cot²(πu/4); +∞ when u = 0."""
    d = float(d)
    if d < 0:
        raise DomainError(f"d must be nonnegative (got {d!r})")
    u = check_interval("u", u, 0.0, 1.0, closed_lo=True, closed_hi=True)
    if u == 0.0:
        return math.inf
    return d / math.tan(math.pi * u / 4) ** 2


def b_alpha(alpha: float, q: float) -> float:
    """(1/α)·cot²(ξ/4)·log q."""
    alpha, q = _check_alpha_q(alpha, q)
    return math.log(q) / (alpha * math.tan(xi(alpha, q) / 4) ** 2)


def m_p(p: float, q: float) -> float:
    """((1 + p²)/2p)·cot²(θ/4)·log q, θ = atan((q−1)/(q+1)) − atan((1−p²)(q−1)/(2p(q+1)))."""
    p = check_interval("p", p, SQRT2_MINUS_1, 1.0, lo_label="√2−1")
    q = check_interval("q", q, 1.0, math.inf)
    k = (q - 1) / (q + 1)
    theta = _atan_nonneg(k) - _atan_nonneg((1 - p * p) * k / (2 * p))
    return (1 + p * p) / (2 * p) * math.log(q) / math.tan(theta / 4) ** 2


def golden_section(f, lo: float, hi: float, tol: float = Q_TOL, max_iter: int = 500) -> float:
    """Minimiser of f on [lo, hi] to absolute tolerance ``tol``."""
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
    else:
        raise RuntimeError("golden-section search did not converge")
    return float(0.5 * (lo + hi))


def minimize_mp(p: float) -> MinimizeResult:
    """Minimise M_p over q > 1: log-spaced scan to bracket, then golden section."""
    p = check_interval("p", p, SQRT2_MINUS_1, 1.0, lo_label="√2−1")
    qs = np.geomspace(SCAN_LO, SCAN_HI, SCAN_POINTS)
    values = np.array([m_p(p, q) for q in qs])
    i = int(np.argmin(values))
    if i == 0 or i == len(qs) - 1:
        raise RuntimeError(f"minimum of M_p for p={p!r} is not bracketed by the scan")
    q_star = golden_section(lambda q: m_p(p, q), float(qs[i - 1]), float(qs[i + 1]))
    return MinimizeResult(q_star, m_p(p, q_star))


def lower_bound(p: float) -> float:
    """(1 + p)²π/(4p); p = 1 is accepted as the conformal limit."""
    p = check_interval("p", p, 0.0, 1.0, closed_hi=True)
    return (1 + p) ** 2 * math.pi / (4 * p)


def bound_row(p: float) -> BoundRow:
    q_star, m_star = minimize_mp(p)
    return BoundRow(p=p, lower_bound=lower_bound(p), q_star=q_star, m_star=m_star)

