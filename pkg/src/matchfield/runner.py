"""Per-instance verification pipeline and the exhaustive sweep harness."""

from __future__ import annotations

import csv
import io
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .complexes import ResolutionReport, build_complex, verify_resolution
from .decomposition import (DecompositionFunction, verify_exchange,
                            verify_set_containment)
from .monomials import Partition
from .oracle import (closed_form_Q, hilbert_series, lcm_lattice, multiplicity,
                     projdim_from_betti, total_betti)
from .quotients import (LQCertificate, LQFailure, betti_from_sets,
                        power_generators, verify_linear_quotients)

MAX_SWEEP_N = 7
MAX_SWEEP_POWER = 3

PARALLELISM_ENV = "MATCHFIELD_PARALLELISM"


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^(n-1) ordered partitions of n, in binary-cut order."""
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


@dataclass(frozen=True)
class InstanceReport:
    """One verification row: every check for one (partition, power)."""

    partition: tuple[int, ...]
    ell: int
    n_generators: int
    lq_ok: bool
    lq_failure_index: int | None
    exchange_violations: int | None
    containment_violations: int | None
    d_squared_ok: bool | None
    resolution_ok: bool | None
    resolution_failures: int | None
    betti_formula: tuple[int, ...] | None
    betti_oracle: tuple[int, ...] | None
    betti_match: bool | None
    f_vector: tuple[int, ...] | None
    decomposition: str
    seconds: float

    @property
    def all_pass(self) -> bool:
        return bool(
            self.lq_ok
            and (self.exchange_violations in (0, None))
            and self.d_squared_ok in (True, None)
            and self.resolution_ok in (True, None)
            and self.betti_match in (True, None)
        )


def verify_instance(
    partition: Sequence[int] | Partition,
    ell: int,
    decomposition: str = "paper-bl",
    with_oracle: bool = True,
    with_resolution: bool = True,
) -> InstanceReport:
    """Run every verification on one instance and collect the outcome."""
    a = partition if isinstance(partition, Partition) else Partition(tuple(partition))
    start = time.perf_counter()
    result = verify_linear_quotients(a, ell)
    if isinstance(result, LQFailure):
        return InstanceReport(
            partition=a.parts, ell=ell, n_generators=len(result.generators),
            lq_ok=False, lq_failure_index=result.index,
            exchange_violations=None, containment_violations=None,
            d_squared_ok=None, resolution_ok=None, resolution_failures=None,
            betti_formula=None, betti_oracle=None, betti_match=None,
            f_vector=None, decomposition=decomposition,
            seconds=time.perf_counter() - start)
    cert: LQCertificate = result
    b = DecompositionFunction(decomposition, cert)
    exchange = verify_exchange(b)
    containment = verify_set_containment(b)
    betti = betti_from_sets(cert)

    d2_ok = res_ok = None
    res_failures = None
    fvec = None
    if with_resolution:
        complex_ = build_complex(b)
        fvec = complex_.f_vector()
        report: ResolutionReport = verify_resolution(complex_)
        d2_ok = report.is_complex
        res_ok = report.ok
        res_failures = len(report.failures)

    oracle_betti = None
    match = None
    if with_oracle:
        oracle_betti = total_betti(cert.generators.monomials)
        match = oracle_betti == betti

    return InstanceReport(
        partition=a.parts, ell=ell, n_generators=len(cert.generators),
        lq_ok=True, lq_failure_index=None,
        exchange_violations=len(exchange.violations),
        containment_violations=len(containment.violations),
        d_squared_ok=d2_ok, resolution_ok=res_ok,
        resolution_failures=res_failures,
        betti_formula=betti, betti_oracle=oracle_betti, betti_match=match,
        f_vector=fvec, decomposition=decomposition,
        seconds=time.perf_counter() - start)


@dataclass(frozen=True)
class SweepReport:
    """All instance rows for the requested grid, in a stable order."""

    max_n: int
    max_power: int
    rows: tuple[InstanceReport, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.all_pass for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow([
            "partition", "power", "generators", "lq_pass", "exchange_pass",
            "containment_pass", "d_squared_pass", "bs_acyclicity_pass",
            "betti", "f_vector", "formula_vs_oracle",
        ])
        for r in self.rows:
            writer.writerow([
                ",".join(str(p) for p in r.partition),
                r.ell,
                r.n_generators,
                _flag(r.lq_ok),
                _flag(None if r.exchange_violations is None
                      else r.exchange_violations == 0),
                _flag(None if r.containment_violations is None
                      else r.containment_violations == 0),
                _flag(r.d_squared_ok),
                _flag(r.resolution_ok),
                _join(r.betti_formula),
                _join(r.f_vector),
                _flag(r.betti_match),
            ])
        return buf.getvalue()


def _flag(value: bool | None) -> str:
    return "" if value is None else ("pass" if value else "FAIL")


def _join(values: tuple[int, ...] | None) -> str:
    return "" if values is None else ",".join(str(v) for v in values)


def _instance_worker(args) -> InstanceReport:
    partition, ell, decomposition, with_oracle, with_resolution = args
    return verify_instance(partition, ell, decomposition,
                           with_oracle, with_resolution)


def default_parallelism() -> int:
    env = os.environ.get(PARALLELISM_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(
    max_n: int,
    max_power: int,
    decomposition: str = "paper-bl",
    with_oracle: bool = True,
    with_resolution: bool = True,
    parallelism: int | None = None,
) -> SweepReport:
    """Every verification on every composition of every n in [3, max_n] and
    every power in [1, max_power]."""
    if not 3 <= max_n <= MAX_SWEEP_N:
        raise ValueError(f"max_n must be in [3, {MAX_SWEEP_N}]")
    if not 1 <= max_power <= MAX_SWEEP_POWER:
        raise ValueError(f"max_power must be in [1, {MAX_SWEEP_POWER}]")
    jobs = [
        (parts, ell, decomposition, with_oracle, with_resolution)
        for n in range(3, max_n + 1)
        for parts in compositions(n)
        for ell in range(1, max_power + 1)
    ]
    workers = parallelism if parallelism is not None else default_parallelism()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_instance_worker, jobs))
    else:
        rows = [_instance_worker(job) for job in jobs]
    return SweepReport(max_n, max_power, tuple(rows))


@dataclass(frozen=True)
class DiagonalReport:
    """Invariants of the diagonal field M_(n), oracle versus closed forms."""

    n: int
    betti: tuple[int, ...]
    projdim: int
    projdim_expected: int
    hilbert_numerator: tuple[int, ...]
    denominator_exponent: int
    closed_form_numerator: tuple[int, ...]
    multiplicity: int
    multiplicity_expected: int

    @property
    def closed_form_matches(self) -> bool:
        return self.hilbert_numerator == self.closed_form_numerator

    @property
    def ok(self) -> bool:
        return (self.closed_form_matches
                and self.multiplicity == self.multiplicity_expected
                and self.projdim == self.projdim_expected)


def diagonal_invariants(n: int) -> DiagonalReport:
    """Multiplicity, projective dimension and Hilbert data for M_(n)."""
    a = Partition((n,))
    gens = power_generators(a, 1).monomials
    series = hilbert_series(gens, n)
    betti = total_betti(gens)
    return DiagonalReport(
        n=n,
        betti=betti,
        projdim=projdim_from_betti(betti),
        projdim_expected=n - 2,
        hilbert_numerator=series.numerator,
        denominator_exponent=series.denominator_exponent,
        closed_form_numerator=closed_form_Q(n),
        multiplicity=multiplicity(series),
        multiplicity_expected=comb(n, 2),
    )
