"""Acceptance criteria, one test each.

The terminal summary (see conftest.py) prints one PASS/FAIL line per criterion.
"""

import cmath
import math
import time

import numpy as np
import pytest
from scipy.integrate import quad

from length_distortion.bounds import (
    HalfPlaneSeg,
    harmonic_measure_segment,
    lower_bound,
    minimize_mp,
    omega_lower_bound,
    psi,
    psi_domain,
)
from length_distortion.experiments import PUBLISHED_MINIMA
from length_distortion.hyperbolic import (
    SQRT2_MINUS_1,
    Side,
    alpha_from_p,
    circle_geodesic_intersection,
    disk_geodesic_between,
    omega0_region,
    omega_region,
    rotation_sector_max_angle,
    side_of,
)
from length_distortion.maps import (
    ExpCayleyMap,
    SlitMap,
    kp_slit,
    lemma1_rhs,
    p0_from_alpha1,
    p1_prime,
    reduction_map,
    slit_distance,
)
from length_distortion.quadrature import (
    arc_length,
    diameter_I,
    geodesic_arc,
    horizontal_diameter,
    semicircle_Cprime,
    truncated_length,
    upper_semicircle,
)

INV_SQRT2 = 1 / math.sqrt(2)


@pytest.mark.criterion(1, "published minima: m_star within 0.5%, q_star within ±0.05, under 10 s")
def test_criterion_1_table():
    start = time.perf_counter()
    results = [minimize_mp(p) for p, *_ in PUBLISHED_MINIMA]
    elapsed = time.perf_counter() - start
    for (p, q_published, m_published, _), (q_star, m_star) in zip(PUBLISHED_MINIMA, results):
        assert abs(m_star - m_published) <= 0.005 * m_published, (p, m_star)
        assert abs(q_star - q_published) <= 0.05, (p, q_star)
    assert elapsed < 10


@pytest.mark.criterion(2, "lower-bound column truncates to the published two-decimal endpoints")
def test_criterion_2_lower_column():
    for p, _, _, lower_published in PUBLISHED_MINIMA:
        value = (1 + p) ** 2 * math.pi / (4 * p)
        assert value == lower_bound(p)
        assert math.floor(value * 100) == round(lower_published * 100), (p, value)


@pytest.mark.criterion(3, "k_p lengths over I and C′ match the closed forms to 1e-8")
def test_criterion_3_closed_forms():
    for p in np.linspace(0.06, 0.998, 20):
        k = SlitMap(p)
        li = arc_length(k, diameter_I(), 1e-10)
        lc = arc_length(k, semicircle_Cprime(), 1e-10)
        exact_i = p * math.pi / (1 + p * p)
        exact_c = 4 * p * p / ((1 + p * p) * (1 + p) ** 2)
        assert abs(li.value - exact_i) <= 1e-8 * exact_i
        assert abs(lc.value - exact_c) <= 1e-8 * exact_c
        ratio = li.value / lc.value
        exact_ratio = (1 + p) ** 2 * math.pi / (4 * p)
        assert abs(ratio - exact_ratio) <= 1e-8 * exact_ratio


@pytest.mark.criterion(4, "f0: upper semicircle length 1, truncated diameter 2/ε − 1")
def test_criterion_4_counterexample():
    f0 = ExpCayleyMap()
    upper = arc_length(f0, upper_semicircle(), 1e-10)
    assert abs(upper.value - 1) <= 1e-8
    eps = [1e-2, 1e-4, 1e-6]
    lengths = truncated_length(f0, horizontal_diameter(), eps, rel_tol=1e-10)
    for e, length in lengths:
        assert abs(length.value - (2 / e - 1)) <= 1e-6 * (2 / e - 1)
    values = [length.value for _, length in lengths]
    assert values[0] < values[1] < values[2]


@pytest.mark.criterion(5, "numeric ratio ≤ min M_p and equals lower_bound to 1e-8 (50 p)")
def test_criterion_5_theorem_consistency():
    for p in np.linspace(SQRT2_MINUS_1 + 0.01, 0.999, 50):
        k = SlitMap(p)
        ratio = (arc_length(k, diameter_I(), 1e-12).value
                 / arc_length(k, semicircle_Cprime(), 1e-12).value)
        assert ratio <= minimize_mp(p).m_star
        assert abs(ratio - lower_bound(p)) <= 1e-8 * lower_bound(p)


@pytest.mark.criterion(6, "harmonic measure vs Poisson-kernel integration; β′ bound holds")
def test_criterion_6_harmonic_measure():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        z = complex(rng.uniform(-5, 5), rng.uniform(0.05, 5))
        a = rng.uniform(0.01, 5)
        b = a + rng.uniform(0.01, 10)
        x, y = z.real, z.imag
        numeric, _ = quad(lambda t: y / ((x - t) ** 2 + y * y), a, b,
                          epsabs=1e-13, epsrel=1e-12, limit=200)
        assert abs(harmonic_measure_segment(z, HalfPlaneSeg(a, b)) - numeric / math.pi) <= 1e-6
    for q in (1.05, 2.0, 3.37, 5.55, 50.0):
        seg = HalfPlaneSeg(1.0, q)
        bound = omega_lower_bound(q)
        # equality holds at y = a and y = b, hence the rounding slack
        for y in np.linspace(1.0, q, 100):
            assert harmonic_measure_segment(1j * y, seg) >= bound - 1e-15


@pytest.mark.criterion(7, "grid argmax of ψ is −α; maximum √(1−α²)/α to 1e-10")
def test_criterion_7_psi_maximum():
    for alpha in np.linspace(INV_SQRT2 + 0.005, 0.995, 20):
        lo, hi = psi_domain(alpha)
        xs = np.linspace(lo, hi, 100_000)
        i = int(np.argmax(psi(xs, alpha)))
        assert abs(xs[i] + alpha) <= xs[1] - xs[0]
        assert abs(psi(-alpha, alpha) - math.sqrt(1 - alpha**2) / alpha) <= 1e-10


@pytest.mark.criterion(8, "distortion inequality for k_p at 500 points of Ω, p ∈ {0.5, 0.7, 0.9}")
def test_criterion_8_distortion_inequality():
    rng = np.random.default_rng(8)
    for p in (0.5, 0.7, 0.9):
        alpha = alpha_from_p(p)
        region = omega_region(alpha)
        k, slit = SlitMap(p), kp_slit(p)
        count = 0
        while count < 500:
            z = complex(*rng.uniform(-1, 1, 2))
            if abs(z) >= 1 or side_of(region, z) is not Side.INSIDE:
                continue
            assert abs(k.deriv(z)) <= lemma1_rhs(alpha, z, slit_distance(k(z), slit))
            count += 1


@pytest.mark.criterion(9, "T = g⁻¹∘g₁ sends γ₁, γ₂ onto I, C′; T(p₀) = √2−1; p′₁ = T(p₁)")
def test_criterion_9_reduction():
    for theta in np.linspace(0.1, math.pi - 0.1, 12):
        a1 = cmath.exp(1j * theta)
        t = reduction_map(a1)
        arc = geodesic_arc(disk_geodesic_between(a1, a1.conjugate()))
        s = np.linspace(arc.t0, arc.t1, 66)[1:-1]
        assert np.max(np.abs(t(arc.point(s)).real)) <= 1e-10
        phis = np.linspace(theta, 2 * math.pi - theta, 66)[1:-1]
        img = t(np.exp(1j * phis))
        assert np.max(np.abs(np.abs(img) - 1)) <= 1e-10
        assert np.all(img.real <= 1e-10)
        p0 = p0_from_alpha1(a1)
        assert abs(complex(t(p0)) - SQRT2_MINUS_1) <= 1e-10
        for p1 in np.linspace(p0 + 1e-3, 0.999, 10):
            assert abs(p1_prime(p1, a1) - complex(t(p1)).real) <= 1e-12


@pytest.mark.criterion(10, "intersections satisfy both circle equations; rotated pole sides")
def test_criterion_10_corollary_geometry():
    region = omega0_region()
    for p in (0.6, 0.75, 0.9):
        for z in circle_geodesic_intersection(p):
            assert abs(abs(z) ** 2 - p * p) <= 1e-12
            assert abs(abs(z - math.sqrt(2)) ** 2 - 1) <= 1e-12
        limit = rotation_sector_max_angle(p)
        for theta in (0.0, 0.5 * limit, 0.95 * limit, -0.95 * limit):
            assert side_of(region, p * cmath.exp(-1j * theta)) is Side.INSIDE
        for theta in (1.05 * limit, 1.5 * limit, -1.05 * limit):
            assert side_of(region, p * cmath.exp(-1j * theta)) is Side.OUTSIDE
