"""Length distortion of curves under meromorphic univalent maps of the disk.

Bound constants and their minima, the extremal and counterexample maps,
image-curve lengths by adaptive quadrature, and the supporting Moebius and
hyperbolic geometry.
"""

from ._validation import DomainError, PoleError
from .bounds import (
    BoundRow,
    HalfPlaneSeg,
    b_alpha,
    harmonic_measure_segment,
    lemma_a_bound,
    lower_bound,
    m_p,
    minimize_mp,
    omega_lower_bound,
    psi,
    psi_argmax,
    xi,
)
from .hyperbolic import alpha_from_p, p_from_alpha
from .maps import (
    Composition,
    ExpCayleyMap,
    MoebiusMapping,
    RegionToDiskMap,
    SlitMap,
    kp_ratio,
    p0_from_alpha1,
    p1_prime,
)
from .moebius import INF, MoebiusMap
from .quadrature import (
    ArcLength,
    PoleProximityError,
    QuadratureError,
    arc_length,
    diameter_I,
    semicircle_Cprime,
    truncated_length,
    upper_semicircle,
)

__version__ = "0.1.0"
