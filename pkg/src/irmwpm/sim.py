"""Monte Carlo harness: logical error rates, iteration statistics, and
threshold sweeps for the three decoder variants.

Each trial draws one depolarizing error (seeded per trial, so results are
independent of execution order), computes the syndrome once, and decodes it
with every requested variant — a paired comparison, as in the reference
experiments.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .decoder import Variant, decode_all
from .lattice import Code
from .logical import check_success
from .noise import NoiseModel, sample, trial_rng
from .pauli import syndrome

CSV_HEADER = ("code_kind,d,epsilon,variant,trials,failures,rate,ci_low,ci_high,"
              "mean_extra_iters,hist0,hist1,hist2,hist3,hist_gt3,base_seed")

HIST_BUCKETS = ("0", "1", "2", "3", ">3")


def wilson_interval(failures: int, trials: int, z: float = 1.959963984540054):
    """Wilson score interval at 95% for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    p = failures / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials ** 2)) / denom
    lo = 0.0 if failures == 0 else max(0.0, center - half)
    hi = 1.0 if failures == trials else min(1.0, center + half)
    return lo, hi


@dataclass
class VariantStats:
    variant: Variant
    trials: int
    failures: int
    # extra-iteration distribution, Full variant only
    histogram: Optional[dict] = None
    mean_extra_iters: Optional[float] = None

    @property
    def rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    @property
    def ci(self):
        return wilson_interval(self.failures, self.trials)


@dataclass
class RunStats:
    code: Code
    epsilon: float
    trials: int
    base_seed: int
    per_variant: dict  # Variant -> VariantStats


def run_trials(code: Code, epsilon: float, trials: int, base_seed: int,
               variants: Sequence[Variant] = (Variant.PLAIN, Variant.FULL),
               max_iters: int = 50) -> RunStats:
    """Sample, decode, and score `trials` paired trials."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    variants = tuple(variants)
    model = NoiseModel.depolarizing(epsilon)
    failures = {v: 0 for v in variants}
    extra_counts = []
    for t in range(trials):
        rng = trial_rng(base_seed, t)
        error = sample(model, code.n_qubits, rng)
        syn = syndrome(code, error)
        outcomes = decode_all(code, syn, variants, max_iters=max_iters)
        for v in variants:
            if not check_success(code, error, outcomes[v].correction):
                failures[v] += 1
        if Variant.FULL in outcomes:
            extra_counts.append(outcomes[Variant.FULL].extra_iterations)

    per_variant = {}
    for v in variants:
        hist = mean = None
        if v is Variant.FULL:
            hist = {b: 0 for b in HIST_BUCKETS}
            for e in extra_counts:
                hist[str(e) if e <= 3 else ">3"] += 1
            mean = sum(extra_counts) / len(extra_counts)
        per_variant[v] = VariantStats(v, trials, failures[v], hist, mean)
    return RunStats(code, epsilon, trials, base_seed, per_variant)


def stats_rows(stats: RunStats):
    """CSV rows (no header) for one run, one row per variant."""
    rows = []
    for v, vs in stats.per_variant.items():
        lo, hi = vs.ci
        if vs.histogram is not None:
            hist_cols = [str(vs.histogram[b]) for b in HIST_BUCKETS]
            mean_col = repr(vs.mean_extra_iters)
        else:
            hist_cols = ["", "", "", "", ""]
            mean_col = ""
        rows.append(",".join([
            stats.code.kind.value, str(stats.code.d), repr(stats.epsilon),
            v.value, str(stats.trials), str(vs.failures), repr(vs.rate),
            repr(lo), repr(hi), mean_col, *hist_cols, str(stats.base_seed),
        ]))
    return rows


def write_csv(stream: io.TextIOBase, all_stats: Iterable[RunStats]):
    stream.write(CSV_HEADER + "\n")
    for stats in all_stats:
        for row in stats_rows(stats):
            stream.write(row + "\n")


def sweep(codes: Sequence[Code], epsilons: Sequence[float], trials: int,
          base_seed: int,
          variants: Sequence[Variant] = (Variant.PLAIN, Variant.FULL)):
    """Evaluate the full (code, epsilon) grid; one RunStats per point."""
    if not codes or not epsilons:
        raise ValueError("codes and epsilons must be nonempty")
    return [run_trials(code, eps, trials, base_seed, variants)
            for code in codes for eps in epsilons]


@dataclass
class ThresholdEstimate:
    variant: Variant
    value: float
    spread: float
    crossings: list  # (d_small, d_large, epsilon)


def estimate_threshold(table: Sequence[RunStats], variant: Variant
                       ) -> Optional[ThresholdEstimate]:
    """Crossing of adjacent-distance log-rate curves, log-linearly
    interpolated in (log eps, log rate) space."""
    by_d = {}
    for stats in table:
        if variant not in stats.per_variant:
            continue
        vs = stats.per_variant[variant]
        if vs.failures > 0:  # log scale needs a nonzero rate
            by_d.setdefault(stats.code.d, {})[stats.epsilon] = vs.rate
    ds = sorted(by_d)
    crossings = []
    for d1, d2 in zip(ds, ds[1:]):
        shared = sorted(set(by_d[d1]) & set(by_d[d2]))
        if len(shared) < 2:
            continue
        # diff changes sign where the curves cross
        diffs = [math.log(by_d[d1][e]) - math.log(by_d[d2][e]) for e in shared]
        for i in range(len(shared) - 1):
            a, b = diffs[i], diffs[i + 1]
            if a == 0:
                crossings.append((d1, d2, shared[i]))
            elif a * b < 0:
                la, lb = math.log(shared[i]), math.log(shared[i + 1])
                frac = a / (a - b)
                crossings.append((d1, d2, math.exp(la + frac * (lb - la))))
    if not crossings:
        return None
    values = [c[2] for c in crossings]
    center = sum(values) / len(values)
    spread = max(values) - min(values) if len(values) > 1 else 0.0
    return ThresholdEstimate(variant, center, spread, crossings)
