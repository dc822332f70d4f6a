"""Deterministic command-line reports in CSV or JSON.

Every command validates its arguments up front (argument errors exit with
status 2), computes rows in a deterministic order, and emits them through a
single writer.  Floats are printed in the shortest form that round-trips,
so identical arguments always produce byte-identical output.
"""

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor

import click

from .complexity import (
    MAX_SCAN_QUBITS,
    MAX_TABLE_QUBITS,
    scan_record,
    table1_row,
)
from .entanglement import (
    bloch_vector,
    hs_distance,
    linear_entropy,
    requires_entanglement,
    schmidt_product,
    separability_bound,
    von_neumann_entropy,
)
from .pseudopure import (
    direct_pseudo_variance,
    fluctuation_report,
    projector_deviation,
)
from .search import MAX_INSTANCE_QUBITS, closed_form_state, make_instance, rotation_angle

FORMAT_CHOICE = click.Choice(["csv", "json"])

# Dense-matrix verification in the fluctuations report caps the dimension.
MAX_FLUCTUATION_QUBITS = 8


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(records: list[dict], columns: list[str], fmt: str, output: str | None) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_format_value(record[c]) for c in columns) for record in records)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(records, indent=2) + "\n"
    if output is None:
        click.get_text_stream("stdout").write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _map_ordered(fn, items, threads: int | None) -> list:
    if threads is None:
        threads = os.cpu_count() or 1
    if threads < 1:
        raise click.BadParameter("thread count must be >= 1", param_hint="--threads")
    items = list(items)
    if threads == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _check_qubits(n: int, upper: int, hint: str) -> None:
    if not 1 <= n <= upper:
        raise click.BadParameter(f"qubit count must be in [1, {upper}], got {n}", param_hint=hint)


def _check_epsilon(epsilon: float) -> None:
    if not 0.0 <= epsilon <= 1.0:
        raise click.BadParameter(
            f"purity parameter must lie in [0, 1], got {epsilon}", param_hint="--epsilon"
        )


def _trace_span(instance) -> int:
    return math.ceil(math.pi / (4.0 * instance.theta0))


@click.group()
def cli() -> None:
    """Quantum-search entanglement and query-complexity reports."""


@cli.command("table1")
@click.option("--min-qubits", type=int, default=1, show_default=True, help="Smallest qubit count.")
@click.option("--max-qubits", type=int, required=True, help="Largest qubit count.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to file instead of stdout.")
@click.option("--threads", type=int, default=None, help="Worker threads; defaults to available parallelism.")
@click.option(
    "--include-final-test-query",
    type=bool,
    default=True,
    show_default=True,
    help="Count the one outcome-testing function evaluation per repetition.",
)
def cmd_table1(min_qubits, max_qubits, fmt, output, threads, include_final_test_query) -> None:
    """Best separability-constrained query counts versus classical search."""
    if not 1 <= min_qubits <= max_qubits <= MAX_TABLE_QUBITS:
        raise click.BadParameter(
            f"range must satisfy 1 <= min <= max <= {MAX_TABLE_QUBITS}, "
            f"got [{min_qubits}, {max_qubits}]",
            param_hint="--min-qubits/--max-qubits",
        )
    rows = _map_ordered(
        lambda n: table1_row(n, include_test_query=include_final_test_query),
        range(min_qubits, max_qubits + 1),
        threads,
    )
    records = [
        {
            "n": row.n,
            "N": row.N,
            "k_opt": row.k_opt,
            "n_pseudo_min": float(row.quantum_queries),
            "n_class": float(row.classical_queries),
            "epsilon_used": float(row.epsilon_used),
            "speedup": row.speedup,
        }
        for row in rows
    ]
    _emit(records, ["n", "N", "k_opt", "n_pseudo_min", "n_class", "epsilon_used", "speedup"], fmt, output)


@cli.command("trace")
@click.option("--qubits", type=int, required=True, help="Qubit count n.")
@click.option("--target", type=int, default=None, help="Target index; defaults to 2^n - 1.")
@click.option("--epsilon", type=float, default=1.0, show_default=True, help="Purity parameter.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
def cmd_trace(qubits, target, epsilon, fmt, output) -> None:
    """Per-iteration entanglement diagnostics of the search at purity eps.

    All emitted quantities are independent of the target index; --target is
    validated and accepted to make that symmetry easy to exercise.
    """
    _check_qubits(qubits, MAX_INSTANCE_QUBITS, "--qubits")
    _check_epsilon(epsilon)
    if target is None:
        target = (1 << qubits) - 1
    if not 0 <= target < (1 << qubits):
        raise click.BadParameter(
            f"target index must be in [0, {1 << qubits}), got {target}", param_hint="--target"
        )
    instance = make_instance(qubits, target)
    records = []
    running_bound = 1.0
    for k in range(_trace_span(instance) + 1):
        theta = rotation_angle(instance, k)
        s = bloch_vector(instance, k)
        s_norm = min(float(math.hypot(s[0], s[2])), 1.0)
        bound = separability_bound(instance, k)
        running_bound = min(running_bound, bound)
        n_sin2 = instance.N * math.sin(theta) ** 2
        records.append(
            {
                "k": k,
                "theta_k": float(theta),
                "s_x": float(s[0]),
                "s_y": float(s[1]),
                "s_z": float(s[2]),
                "s_norm": s_norm,
                "von_neumann_entropy": float(von_neumann_entropy(s_norm)),
                "linear_entropy": float(linear_entropy(s_norm)),
                "hs_distance": float(hs_distance(s_norm)),
                "lambda_product": float(schmidt_product(instance, k)),
                "epsilon_bound": float(bound),
                "epsilon_bound_cummin": float(running_bound),
                "success_probability": float((1.0 + epsilon * (n_sin2 - 1.0)) / instance.N),
                "entangled": requires_entanglement(epsilon, bound),
            }
        )
    _emit(
        records,
        [
            "k",
            "theta_k",
            "s_x",
            "s_y",
            "s_z",
            "s_norm",
            "von_neumann_entropy",
            "linear_entropy",
            "hs_distance",
            "lambda_product",
            "epsilon_bound",
            "epsilon_bound_cummin",
            "success_probability",
            "entangled",
        ],
        fmt,
        output,
    )


@cli.command("bound")
@click.option("--qubits", type=int, required=True, help="Qubit count n.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
def cmd_bound(qubits, fmt, output) -> None:
    """Separability bound per iteration with its running minimum."""
    _check_qubits(qubits, MAX_INSTANCE_QUBITS, "--qubits")
    instance = make_instance(qubits, (1 << qubits) - 1)
    records = []
    running_bound = 1.0
    for k in range(_trace_span(instance) + 1):
        bound = separability_bound(instance, k)
        running_bound = min(running_bound, bound)
        records.append(
            {
                "k": k,
                "theta_k": float(rotation_angle(instance, k)),
                "lambda_product": float(schmidt_product(instance, k)),
                "epsilon_bound": float(bound),
                "epsilon_bound_cummin": float(running_bound),
            }
        )
    _emit(records, ["k", "theta_k", "lambda_product", "epsilon_bound", "epsilon_bound_cummin"], fmt, output)


@cli.command("scan")
@click.option("--min-qubits", type=int, required=True, help="Smallest qubit count (> 2).")
@click.option("--max-qubits", type=int, required=True, help="Largest qubit count (<= 20).")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--threads", type=int, default=None, help="Worker threads; defaults to available parallelism.")
def cmd_scan(min_qubits, max_qubits, fmt, output, threads) -> None:
    """Speed-up purity threshold versus per-step separability bounds.

    Emits one row per (n, iteration) pair; a summary verdict goes to
    standard error so the payload stays machine-readable.
    """
    if not 2 < min_qubits <= max_qubits <= MAX_SCAN_QUBITS:
        raise click.BadParameter(
            f"range must satisfy 2 < min <= max <= {MAX_SCAN_QUBITS}, "
            f"got [{min_qubits}, {max_qubits}]",
            param_hint="--min-qubits/--max-qubits",
        )
    scans = _map_ordered(scan_record, range(min_qubits, max_qubits + 1), threads)
    records = [
        {
            "n": rec.n,
            "k_opt": rec.k_opt,
            "k": k,
            "epsilon_bound": float(bound),
            "epsilon_speedup": float(rec.epsilon_speedup),
            "entangled_at_k": entangled,
            "entangled_throughout": rec.entangled_throughout,
            "last_step_exception": rec.last_step_exception,
        }
        for rec in scans
        for (k, bound, entangled) in rec.iterations
    ]
    _emit(
        records,
        [
            "n",
            "k_opt",
            "k",
            "epsilon_bound",
            "epsilon_speedup",
            "entangled_at_k",
            "entangled_throughout",
            "last_step_exception",
        ],
        fmt,
        output,
    )
    holds = all(rec.entangled_throughout for rec in scans)
    exceptions = [rec.n for rec in scans if rec.last_step_exception]
    if holds:
        detail = f"final-step exceptions at n = {exceptions}" if exceptions else "no final-step exceptions"
        message = (
            f"scan {min_qubits}..{max_qubits}: speed-up requires entanglement after "
            f"every iteration up to k_opt for every n ({detail})"
        )
    else:
        bad = [rec.n for rec in scans if not rec.entangled_throughout]
        message = f"scan {min_qubits}..{max_qubits}: conclusion violated at n = {bad}"
    click.echo(message, err=True)


@cli.command("fluctuations")
@click.option("--qubits", type=int, required=True, help=f"Qubit count n (<= {MAX_FLUCTUATION_QUBITS}).")
@click.option("--epsilon", type=float, default=1.0, show_default=True, help="Purity parameter.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
def cmd_fluctuations(qubits, epsilon, fmt, output) -> None:
    """Ensemble-variance identity for the projector-deviation observable.

    Uses Theta = |psi><psi| - I/N with psi the uniform superposition; the
    numbers depend only on N and eps.  Reports the closed-form ensemble
    variance next to the direct dense-matrix value.
    """
    _check_qubits(qubits, MAX_FLUCTUATION_QUBITS, "--qubits")
    _check_epsilon(epsilon)
    instance = make_instance(qubits, (1 << qubits) - 1)
    psi = closed_form_state(instance, 0).statevector()
    theta_op = projector_deviation(psi)
    report = fluctuation_report(theta_op, psi, epsilon)
    direct = direct_pseudo_variance(theta_op, psi, epsilon)
    record = {
        "n": instance.n,
        "N": instance.N,
        "epsilon": float(report.epsilon),
        "pure_expectation": float(report.pure_expectation),
        "pure_variance": float(report.pure_variance),
        "trace_theta_sq_over_N": float(report.trace_theta_sq_over_N),
        "pseudo_variance": float(report.pseudo_variance),
        "direct_variance": float(direct),
        "abs_difference": float(abs(report.pseudo_variance - direct)),
    }
    _emit(
        [record],
        [
            "n",
            "N",
            "epsilon",
            "pure_expectation",
            "pure_variance",
            "trace_theta_sq_over_N",
            "pseudo_variance",
            "direct_variance",
            "abs_difference",
        ],
        fmt,
        output,
    )


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
