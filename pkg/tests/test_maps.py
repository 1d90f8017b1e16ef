import cmath
import math

import numpy as np
import pytest

from length_distortion._validation import DomainError, PoleError
from length_distortion.hyperbolic import SQRT2_MINUS_1, Side, alpha_from_p, omega_region, side_of
from length_distortion.maps import (
    Composition,
    ExpCayleyMap,
    MoebiusMapping,
    RegionToDiskMap,
    Slit,
    SlitMap,
    kp_image_circle_of_I,
    kp_length_Cprime,
    kp_length_I,
    kp_ratio,
    kp_slit,
    lemma1_rhs,
    p0_from_alpha1,
    p1_prime,
    reduction_map,
    slit_distance,
)
from length_distortion.moebius import INF, MoebiusMap, chordal_distance, disk_to_half_plane


def test_slit_map_values():
    k = SlitMap(0.5)
    assert abs(k(1j) - (-0.4)) < 1e-15
    assert abs(k(-1j) - (-0.4)) < 1e-15
    assert abs(k(-1) - (-2 / 9)) < 1e-15
    assert k(0.5) is INF
    assert k(INF) == 0


def test_region_map_values():
    phi = RegionToDiskMap(0.8)
    assert phi(0) == 0
    assert abs(phi.deriv(0) - (-1 / 0.8)) < 1e-15


def test_derivative_examples():
    assert abs(SlitMap(0.5).deriv(0) - 1) < 1e-15
    f0 = ExpCayleyMap()
    for x in (-0.9, -0.2, 0.0, 0.4, 0.95):
        assert abs(abs(f0.deriv(x)) - 2 / (1 - x) ** 2) < 1e-12 * 2 / (1 - x) ** 2


def test_derivative_at_pole_signals():
    with pytest.raises(PoleError):
        SlitMap(0.5).deriv(0.5)
    with pytest.raises(PoleError):
        RegionToDiskMap(0.3).deriv(0.3)
    with pytest.raises(DomainError):
        ExpCayleyMap().deriv(1.0)


def test_poles():
    assert SlitMap(0.5).poles() == [0.5, 2.0]
    assert sum(1 for z in SlitMap(0.5).poles() if abs(z) < 1) == 1
    assert RegionToDiskMap(0.4).poles() == [0.4, INF]
    assert ExpCayleyMap().poles() == []
    m = MoebiusMap(1, 0, 1, -0.5)
    assert MoebiusMapping(m).poles() == [0.5]


def test_composition_poles_and_eval():
    g = disk_to_half_plane()
    comp = Composition(SlitMap(0.5), g.inverse())
    poles = comp.poles()
    for pole in poles:
        assert chordal_distance(comp(pole), INF) < 1e-10
    # pole of the slit map pulled back through g⁻¹ is g(0.5)
    assert any(abs(z - g(0.5)) < 1e-12 for z in poles if z is not INF)
    z = 0.3 + 1.2j
    assert abs(comp(z) - SlitMap(0.5)(g.inverse()(z))) < 1e-15


def _variants():
    g = disk_to_half_plane()
    return [
        SlitMap(0.6),
        RegionToDiskMap(0.7),
        ExpCayleyMap(),
        MoebiusMapping(g),
        Composition(RegionToDiskMap(0.7), SlitMap(0.3)),
        Composition(ExpCayleyMap(), MoebiusMapping(g.inverse()), g),
    ]


@pytest.mark.parametrize("m", _variants(), ids=lambda m: type(m).__name__)
def test_derivative_matches_central_differences(m):
    rng = np.random.default_rng(7)
    poles = [p for p in m.poles() if p is not INF]
    h = 1e-6
    checked = 0
    while checked < 100:
        z = complex(*rng.uniform(-0.95, 0.95, 2))
        if any(abs(z - p) < 0.1 for p in poles) or abs(z - 1) < 0.1:
            continue
        fd = (m(z + h) - m(z - h)) / (2 * h)
        exact = m.deriv(z)
        assert abs(fd - exact) <= 1e-6 * abs(exact) + 1e-9
        checked += 1


@pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
def test_slit_map_sends_I_to_circle(p):
    center, radius = kp_image_circle_of_I(p)
    assert abs(center.real + p / (2 * (1 + p * p))) < 1e-15
    r = np.linspace(-0.999, 0.999, 401)
    w = SlitMap(p)(1j * r)
    assert np.max(np.abs(np.abs(w - center) - radius)) < 1e-12


@pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
def test_slit_map_sends_Cprime_to_segment(p):
    theta = np.linspace(math.pi / 2 + 1e-6, 3 * math.pi / 2 - 1e-6, 401)
    w = SlitMap(p)(np.exp(1j * theta))
    assert np.max(np.abs(w.imag)) < 1e-12
    assert np.all(w.real > -p / (1 + p * p) - 1e-12)
    assert np.all(w.real <= -p / (1 + p) ** 2 + 1e-12)


def test_slit_and_distance_examples():
    s = kp_slit(0.5)
    assert s == Slit(-2.0, -2 / 9)
    assert abs(slit_distance(0, s) - 2 / 9) < 1e-15
    assert slit_distance(-0.3, s) == 0
    assert abs(slit_distance(-2 / 9 + 0.1j, s) - 0.1) < 1e-15


def test_closed_form_lengths():
    assert abs(kp_length_I(0.5) - 0.4 * math.pi) < 1e-15
    assert abs(kp_length_Cprime(0.5) - 1 / 2.8125) < 1e-15
    assert abs(kp_ratio(0.5) - 1.125 * math.pi) < 1e-15
    assert abs(kp_ratio(0.5) - kp_length_I(0.5) / kp_length_Cprime(0.5)) < 1e-14
    with pytest.raises(DomainError):
        kp_ratio(1.0)


def test_lemma1_examples():
    assert abs(lemma1_rhs(0.8, 0, 2 / 9) - 10 / 9) < 1e-15
    assert abs(SlitMap(0.5).deriv(0)) <= lemma1_rhs(0.8, 0, 2 / 9)
    assert lemma1_rhs(0.8, 0.2j, 0) == 0
    k = SlitMap(0.5)
    rhs = lemma1_rhs(0.8, 0.2, slit_distance(k(0.2), kp_slit(0.5)))
    assert 0 < rhs < math.inf
    assert abs(k.deriv(0.2)) <= rhs
    with pytest.raises(DomainError):
        lemma1_rhs(0.8, 0.95, 1.0)


@pytest.mark.parametrize("p", [0.5, 0.7, 0.9])
def test_lemma1_inequality_on_samples(p):
    alpha = alpha_from_p(p)
    region = omega_region(alpha)
    k, slit = SlitMap(p), kp_slit(p)
    rng = np.random.default_rng(11)
    count = 0
    while count < 500:
        z = complex(*rng.uniform(-1, 1, 2))
        if abs(z) >= 1 or side_of(region, z) is not Side.INSIDE:
            continue
        assert abs(k.deriv(z)) <= lemma1_rhs(alpha, z, slit_distance(k(z), slit))
        count += 1


def test_p0_examples():
    assert abs(p0_from_alpha1(1j) - SQRT2_MINUS_1) < 1e-15
    assert abs(p0_from_alpha1((1 + 1j) / math.sqrt(2)) - 1 / math.sqrt(2)) < 1e-15
    rng = np.random.default_rng(5)
    for theta in rng.uniform(1e-3, math.pi - 1e-3, 100):
        assert -1 < p0_from_alpha1(cmath.exp(1j * theta)) < 1
    with pytest.raises(DomainError):
        p0_from_alpha1(0.5j)


def test_p1_prime_examples():
    assert abs(p1_prime(0.5, 1j) - 0.5) < 1e-15
    a1 = (1 + 1j) / math.sqrt(2)
    # Moebius-composition oracle, written out by hand
    w = (0.9 - a1) / (a1 * 0.9 - 1)
    oracle = ((-1j * w - 1) / (w + 1j)).real
    assert abs(p1_prime(0.9, a1) - oracle) < 1e-12
    assert abs(p1_prime(0.9, a1) - 0.7745223231905085) < 1e-12
    with pytest.raises(DomainError):
        p1_prime(0.6, a1)


def test_p1_prime_tends_to_threshold():
    a1 = cmath.exp(1.1j)
    p0 = p0_from_alpha1(a1)
    gaps = [1e-2, 1e-4, 1e-6, 1e-8]
    values = [p1_prime(p0 + gap, a1) for gap in gaps]
    dist = [v - SQRT2_MINUS_1 for v in values]
    assert all(d > 0 for d in dist)
    assert all(b < a for a, b in zip(dist, dist[1:]))
    assert dist[-1] < 1e-7


def test_p1_prime_matches_composition_grid():
    for theta in np.linspace(0.05, math.pi - 0.05, 25):
        a1 = cmath.exp(1j * theta)
        t = reduction_map(a1)
        p0 = p0_from_alpha1(a1)
        for p1 in np.linspace(p0 + 1e-3, 0.999, 20):
            assert abs(p1_prime(p1, a1) - t(p1)) < 1e-12


def test_f0_on_upper_circle_uses_real_form():
    f0 = ExpCayleyMap()
    theta = 1e-3
    value = f0(cmath.exp(1j * theta))
    assert value == math.exp(-1 / math.tan(theta / 2))
    arr = f0(np.exp(1j * np.array([0.5, 1.0, 2.0])))
    assert np.allclose(arr.imag, 0)
    assert np.allclose(arr.real, np.exp(-1 / np.tan(np.array([0.5, 1.0, 2.0]) / 2)), rtol=1e-14)
