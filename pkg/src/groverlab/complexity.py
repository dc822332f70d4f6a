"""Expected query counts: classical baseline, ensemble-machine optimum,
and the relation between speed-up and entanglement.

The ensemble machine runs k search iterations and one extra function
evaluation to test the outcome, repeating until the target is confirmed,
so the expected cost of the strategy with k iterations is (k+1)/p(k).
"""

import math
from dataclasses import dataclass

from .entanglement import requires_entanglement, separability_bound, separability_profile
from .pseudopure import success_probability
from .search import SearchInstance, make_instance, rotation_angle

MAX_TABLE_QUBITS = 30
MAX_SCAN_QUBITS = 20


def classical_queries(N: int) -> float:
    """Expected function evaluations of the systematic classical search.

    Stepping through locations in a fixed order and inferring the last one
    gives expectation (N+2)(N-1)/(2N) over a uniformly placed target.
    """
    if not isinstance(N, int) or N < 2:
        raise ValueError(f"search-space size must be an integer >= 2, got {N}")
    return (N + 2) * (N - 1) / (2.0 * N)


def k_search_limit(instance: SearchInstance) -> int:
    """Iteration range guard: past the first pi/2 crossing the expected
    cost only grows, so a margin of 2 beyond ceil(pi/(4*theta0)) suffices."""
    return math.ceil(math.pi / (4.0 * instance.theta0)) + 2


def pseudo_queries(
    instance: SearchInstance,
    epsilon: float,
    k_max: int | None = None,
    include_test_query: bool = True,
) -> tuple[int, float]:
    """Optimal iteration count and expected query count at fixed purity.

    Minimizes (k+1)/p(k, eps) over k in [0, k_max]; ties go to the smaller
    k.  With ``include_test_query`` False the one outcome-testing
    evaluation is dropped from the count (the optimum k is unchanged).
    eps = 0 is allowed (pure guessing at p = 1/N).
    """
    if k_max is None:
        k_max = k_search_limit(instance)
    if k_max < 0:
        raise ValueError(f"iteration bound must be non-negative, got {k_max}")
    best_k, best_q = 0, math.inf
    for k in range(k_max + 1):
        q = (k + 1) / success_probability(instance, k, epsilon)
        if q < best_q:
            best_k, best_q = k, q
    if not include_test_query:
        best_q -= 1.0
    return best_k, best_q


def max_separable_epsilon(instance: SearchInstance, k: int) -> float:
    """Largest purity compatible with separability at every step 0..k."""
    profile = separability_profile(instance, k)
    return profile.cumulative_min[-1][1]


@dataclass(frozen=True)
class ComplexityRow:
    """One line of the query-count comparison at a given qubit count."""

    n: int
    N: int
    k_opt: int
    quantum_queries: float
    classical_queries: float
    epsilon_used: float
    speedup: bool


def table1_row(n: int, include_test_query: bool = True) -> ComplexityRow:
    """Best separability-constrained ensemble query count for n qubits.

    At each candidate k the purity is capped by the running separability
    bound, so the machine stays unproven-entangled through every step it
    executes.
    """
    instance = make_instance(n, (1 << n) - 1)
    n_class = classical_queries(instance.N)
    running_bound = 1.0
    best = None
    for k in range(k_search_limit(instance) + 1):
        running_bound = min(running_bound, separability_bound(instance, k))
        q = (k + 1) / success_probability(instance, k, running_bound)
        if best is None or q < best[1]:
            best = (k, q, running_bound)
    k_opt, quantum, eps_used = best
    if not include_test_query:
        quantum -= 1.0
    return ComplexityRow(
        n=n,
        N=instance.N,
        k_opt=k_opt,
        quantum_queries=quantum,
        classical_queries=n_class,
        epsilon_used=eps_used,
        speedup=quantum < n_class,
    )


def table1(n_min: int, n_max: int, include_test_query: bool = True) -> list[ComplexityRow]:
    """Rows for every qubit count in [n_min, n_max]."""
    if not 1 <= n_min <= n_max <= MAX_TABLE_QUBITS:
        raise ValueError(
            f"qubit range must satisfy 1 <= n_min <= n_max <= {MAX_TABLE_QUBITS}, "
            f"got [{n_min}, {n_max}]"
        )
    return [table1_row(n, include_test_query) for n in range(n_min, n_max + 1)]


def epsilon_speedup(instance: SearchInstance, k_max: int | None = None) -> tuple[int, float] | None:
    """Smallest purity at which the ensemble machine beats classical search.

    The success probability is affine in the purity, so for each k the
    break-even purity is in closed form; the returned pair is the k
    attaining the smallest such threshold and that threshold.  Returns
    None when no purity <= 1 achieves a speed-up (e.g. a single qubit).
    Strictly above the threshold the machine is faster; at it, equal.
    """
    if k_max is None:
        k_max = k_search_limit(instance)
    N = instance.N
    n_class = classical_queries(N)
    best = None
    for k in range(1, k_max + 1):
        gain = N * math.sin(rotation_angle(instance, k)) ** 2 - 1.0
        if gain <= 0.0:
            continue
        threshold = (N * (k + 1) / n_class - 1.0) / gain
        if 0.0 < threshold <= 1.0 and (best is None or threshold < best[1]):
            best = (k, threshold)
    return best


@dataclass(frozen=True)
class SpeedupScanRecord:
    """Speed-up purity threshold versus separability bounds for one n.

    ``iterations`` holds (k, separability bound at k, entangled flag) for
    each 0 < k <= k_opt, where the flag records whether any speed-up
    achieving purity must exceed the bound at that step.
    """

    n: int
    k_opt: int
    epsilon_speedup: float
    iterations: tuple[tuple[int, float, bool], ...]
    entangled_throughout: bool
    last_step_exception: bool


def scan_record(n: int) -> SpeedupScanRecord:
    """Compare the speed-up threshold against every step's bound."""
    instance = make_instance(n, (1 << n) - 1)
    found = epsilon_speedup(instance)
    if found is None:
        raise RuntimeError(f"no speed-up purity exists at n = {n}; scan is undefined")
    k_opt, eps_su = found
    iterations = []
    violations = []
    for k in range(1, k_opt + 1):
        bound = separability_bound(instance, k)
        entangled = requires_entanglement(eps_su, bound)
        iterations.append((k, bound, entangled))
        if not entangled:
            violations.append(k)
    past_half_turn = rotation_angle(instance, k_opt) > math.pi / 2.0
    last_step_exception = past_half_turn and k_opt in violations
    allowed = {k_opt} if last_step_exception else set()
    return SpeedupScanRecord(
        n=n,
        k_opt=k_opt,
        epsilon_speedup=eps_su,
        iterations=tuple(iterations),
        entangled_throughout=set(violations) <= allowed,
        last_step_exception=last_step_exception,
    )


def speedup_entanglement_scan(n_min: int, n_max: int) -> list[SpeedupScanRecord]:
    """Scan records for every qubit count in (2, 20]."""
    if not 2 < n_min <= n_max <= MAX_SCAN_QUBITS:
        raise ValueError(
            f"scan range must satisfy 2 < n_min <= n_max <= {MAX_SCAN_QUBITS}, "
            f"got [{n_min}, {n_max}]"
        )
    return [scan_record(n) for n in range(n_min, n_max + 1)]
