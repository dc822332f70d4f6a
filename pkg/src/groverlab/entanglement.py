"""Per-iteration entanglement diagnostics of the search states.

Closed-form Bloch vector of any single qubit, entropy and distance measures
of the reduced state, the Schmidt eigenvalue product of the one-qubit
versus rest bipartition, and the purity-parameter bound below which a
mixed-ensemble state is not proven entangled.

The closed forms assume the target frame in which the traced qubit's bit of
the target index is 1; :func:`target_frame_bloch` maps a raw reduced state
into that frame for comparison.
"""

import math
from dataclasses import dataclass

import numpy as np

from .search import QubitReducedState, SearchInstance, rotation_angle

BLOCH_SLACK = 1e-12

# Entanglement verdicts tolerate this much rounding in the bound itself, so
# steps that complete the search exactly are not flagged by noise ~1e-16.
BOUND_DECISION_TOL = 1e-12


def _checked_bloch_length(s: float) -> float:
    if not -BLOCH_SLACK <= s <= 1.0 + BLOCH_SLACK:
        raise ValueError(f"Bloch length must lie in [0, 1], got {s}")
    return min(max(s, 0.0), 1.0)


def bloch_components(N: int, theta: float) -> np.ndarray:
    """Bloch vector (s_x, 0, s_z) of one qubit of the rotated search state.

    Valid for any rotation angle; independent of which qubit is kept and of
    the target index, in the target frame.
    """
    c2 = math.cos(theta) ** 2
    s_x = (N - 2) / (N - 1) * c2 + math.sin(2 * theta) / math.sqrt(N - 1)
    s_z = c2 / (N - 1) - math.sin(theta) ** 2
    return np.array([s_x, 0.0, s_z])


def bloch_vector(instance: SearchInstance, k: int) -> np.ndarray:
    """Closed-form Bloch vector after k search iterations."""
    return bloch_components(instance.N, rotation_angle(instance, k))


def target_frame_bloch(reduced: QubitReducedState, instance: SearchInstance, ell: int) -> np.ndarray:
    """Express a traced qubit's Bloch vector in the target frame.

    When bit ``ell`` of the target index is 0 the computational basis of
    that qubit is relabeled (a bit flip), which negates s_y and s_z.
    """
    s = np.array(reduced.bloch, dtype=float)
    if not (instance.y >> ell) & 1:
        s[1] = -s[1]
        s[2] = -s[2]
    return s


def von_neumann_entropy(s: float) -> float:
    """Entropy in bits of a qubit state with Bloch length s.

    1 for the maximally mixed state (s = 0), 0 for a pure state (s = 1);
    equals the binary entropy of (1 + s)/2.
    """
    s = _checked_bloch_length(s)
    if s >= 1.0:
        return 0.0
    if s <= 0.0:
        return 1.0
    return 1.0 - 0.5 * (1 - s) * math.log2(1 - s) - 0.5 * (1 + s) * math.log2(1 + s)


def linear_entropy(s: float) -> float:
    """Linear entropy (1 - s^2)/2 of a qubit state with Bloch length s."""
    s = _checked_bloch_length(s)
    return (1.0 - s * s) / 2.0


def hs_distance(s: float) -> float:
    """Hilbert-Schmidt distance s/sqrt(2) from the maximally mixed state.

    Satisfies d^2 = 1/2 - linear_entropy(s).
    """
    s = _checked_bloch_length(s)
    return s / math.sqrt(2.0)


def schmidt_product(instance: SearchInstance, k: int) -> float:
    """Eigenvalue product lambda1*lambda2 of the one-qubit reduced state.

    Closed form N(N-2)/(2(N-1)^2) * sin^2(2k*theta0) * cos^2(theta_k);
    zero exactly when the state is a product state across the one-qubit
    versus rest bipartition.
    """
    N = instance.N
    theta = rotation_angle(instance, k)
    return (
        N * (N - 2) / (2.0 * (N - 1) ** 2)
        * math.sin(2 * k * instance.theta0) ** 2
        * math.cos(theta) ** 2
    )


def separability_bound(instance: SearchInstance, k: int) -> float:
    """Largest purity parameter not proven entangled after k iterations.

    Returns eps_k = 1 / (1 + N*sqrt(lambda1*lambda2)).  A mixed-ensemble
    state with purity above eps_k is certainly entangled at step k; at or
    below the bound it is not proven entangled by this criterion.
    """
    product = max(schmidt_product(instance, k), 0.0)
    return 1.0 / (1.0 + instance.N * math.sqrt(product))


def requires_entanglement(epsilon: float, bound: float) -> bool:
    """Whether purity ``epsilon`` exceeds a separability bound decisively.

    Uses a 1e-12 guard so bounds that are 1 up to rounding do not flag
    exact-completion steps.
    """
    return epsilon > bound + BOUND_DECISION_TOL


@dataclass(frozen=True)
class SeparabilityProfile:
    """Per-iteration separability bounds with their running minimum."""

    per_iteration_bounds: tuple[tuple[int, float], ...]
    cumulative_min: tuple[tuple[int, float], ...]


def separability_profile(instance: SearchInstance, k_max: int) -> SeparabilityProfile:
    """Bounds eps_k for k = 0..k_max and the running minimum over steps.

    The running minimum at k is the largest purity compatible with
    separability at every step up to and including k.
    """
    if k_max < 0:
        raise ValueError(f"iteration bound must be non-negative, got {k_max}")
    bounds = []
    cumulative = []
    running = 1.0
    for k in range(k_max + 1):
        eps_k = separability_bound(instance, k)
        running = min(running, eps_k)
        bounds.append((k, eps_k))
        cumulative.append((k, running))
    return SeparabilityProfile(
        per_iteration_bounds=tuple(bounds),
        cumulative_min=tuple(cumulative),
    )


def projected_singlet_fraction(lambda1: float, lambda2: float, N: int, epsilon: float) -> float:
    """Singlet fraction of the ensemble state projected onto two levels.

    Builds the normalized 4x4 projection of the mixed ensemble explicitly
    in the Schmidt basis and returns its overlap with the singlet state.
    Fractions above 1/2 certify entanglement; solving the 1/2 crossing in
    epsilon reproduces :func:`separability_bound` and serves as its
    independent verification route.
    """
    if abs(lambda1 + lambda2 - 1.0) > 1e-6:
        raise ValueError("Schmidt eigenvalues must sum to 1")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"purity parameter must lie in [0, 1], got {epsilon}")
    psi = np.array([0.0, math.sqrt(max(lambda1, 0.0)), -math.sqrt(max(lambda2, 0.0)), 0.0])
    rho4 = N / (4.0 + epsilon * (N - 4)) * (
        (1.0 - epsilon) / N * np.eye(4) + epsilon * np.outer(psi, psi)
    )
    singlet = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)
    return float(singlet @ rho4 @ singlet)
