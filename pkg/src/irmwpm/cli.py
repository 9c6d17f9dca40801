"""Command-line entry point: simulation runs, sweep campaigns, a worked
decoding example, and self-tests.

All randomness flows from the --seed flag (or the config's seed); repeated
runs with identical arguments produce byte-identical CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .decoder import Variant, decode, ledger_check
from .lattice import CodeKind, build_hole_with_distance, build_mixed_boundary
from .matching import MatchGraph, brute_force_mwpm, solve_mwpm
from .noise import NoiseModel, sample, trial_rng
from .pauli import Syndrome, syndrome
from .logical import check_success
from .sim import estimate_threshold, run_trials, write_csv

_VARIANT_NAMES = {v.value: v for v in Variant}


def _build_code(kind: str, distance: int):
    if kind == CodeKind.MIXED_BOUNDARY.value:
        return build_mixed_boundary(distance)
    if kind == CodeKind.HOLE.value:
        return build_hole_with_distance(distance)
    raise ValueError(f"unknown code kind {kind!r}")


def _parse_variants(text: str):
    out = []
    for name in text.split(","):
        name = name.strip()
        if name not in _VARIANT_NAMES:
            raise ValueError(f"unknown variant {name!r}; choose from "
                             + ",".join(_VARIANT_NAMES))
        v = _VARIANT_NAMES[name]
        if v not in out:
            out.append(v)
    if not out:
        raise ValueError("at least one variant is required")
    return tuple(out)


def _check_epsilon(epsilon: float) -> float:
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError("epsilon out of range")
    return epsilon


def cmd_simulate(args) -> int:
    _check_epsilon(args.epsilon)
    variants = _parse_variants(args.variants)
    code = _build_code(args.code, args.distance)
    stats = run_trials(code, args.epsilon, args.trials, args.seed, variants)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            write_csv(f, [stats])
    else:
        write_csv(sys.stdout, [stats])
    return 0


@dataclass(frozen=True)
class SweepSpec:
    codes: tuple       # of (kind, distance)
    epsilons: tuple
    trials: int
    seed: int
    variants: tuple    # of Variant

    def normalized(self) -> dict:
        return {
            "codes": [{"kind": k, "distance": d} for k, d in self.codes],
            "epsilons": list(self.epsilons),
            "trials": self.trials,
            "seed": self.seed,
            "variants": [v.value for v in self.variants],
        }


def parse_config(text: str) -> SweepSpec:
    """Parse and validate a sweep configuration (strict: unknown keys are
    rejected, error messages name the offending key path)."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError("config: expected a JSON object")
    allowed = {"codes", "epsilons", "trials", "seed", "variants"}
    for key in raw:
        if key not in allowed:
            raise ValueError(f"config: unknown key {key!r}")
    for key in allowed:
        if key not in raw:
            raise ValueError(f"config: missing key {key!r}")

    codes = raw["codes"]
    if not isinstance(codes, list) or not codes:
        raise ValueError("codes: expected a nonempty list")
    parsed_codes = []
    for i, entry in enumerate(codes):
        if not isinstance(entry, dict):
            raise ValueError(f"codes[{i}]: expected an object")
        for key in entry:
            if key not in ("kind", "distance"):
                raise ValueError(f"codes[{i}]: unknown key {key!r}")
        kind = entry.get("kind")
        if kind not in (CodeKind.MIXED_BOUNDARY.value, CodeKind.HOLE.value):
            raise ValueError(f"codes[{i}].kind: expected 'mixed' or 'hole'")
        dist = entry.get("distance")
        if not isinstance(dist, int) or isinstance(dist, bool) or dist < 2:
            raise ValueError(f"codes[{i}].distance: expected an integer >= 2")
        parsed_codes.append((kind, dist))

    eps = raw["epsilons"]
    if not isinstance(eps, list) or not eps:
        raise ValueError("epsilons: expected a nonempty list")
    for i, e in enumerate(eps):
        if not isinstance(e, (int, float)) or isinstance(e, bool):
            raise ValueError(f"epsilons[{i}]: expected a number")
        if not 0.0 <= e <= 1.0:
            raise ValueError(f"epsilons[{i}]: epsilon out of range")

    trials = raw["trials"]
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise ValueError("trials: expected a positive integer")
    seed = raw["seed"]
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ValueError("seed: expected a nonnegative integer")

    variants = raw["variants"]
    if not isinstance(variants, list) or not variants:
        raise ValueError("variants: expected a nonempty list")
    parsed_variants = []
    for i, name in enumerate(variants):
        if name not in _VARIANT_NAMES:
            raise ValueError(f"variants[{i}]: unknown variant {name!r}")
        v = _VARIANT_NAMES[name]
        if v not in parsed_variants:
            parsed_variants.append(v)

    return SweepSpec(tuple(parsed_codes), tuple(float(e) for e in eps),
                     trials, seed, tuple(parsed_variants))


def cmd_sweep(args) -> int:
    with open(args.config, "r", encoding="utf-8") as f:
        spec = parse_config(f.read())
    codes = [_build_code(k, d) for k, d in spec.codes]
    table = [run_trials(code, e, spec.trials, spec.seed, spec.variants)
             for code in codes for e in spec.epsilons]
    write_csv(sys.stdout, table)
    for v in spec.variants:
        est = estimate_threshold(table, v)
        if est is None:
            print(f"# threshold[{v.value}]: no crossing found")
        else:
            print(f"# threshold[{v.value}]: {est.value:.4f} "
                  f"(spread {est.spread:.4f}, {len(est.crossings)} crossings)")
    return 0


# Worked example: distance-4 mixed-boundary code, six lit vertex generators
# and six lit plaquette generators, the same starting point as the decoding
# walkthrough in the module docs.
_DEMO_PRIMAL = ((4, 1), (0, 3), (2, 3), (0, 5), (2, 5), (4, 5))
_DEMO_DUAL = ((3, 0), (5, 0), (1, 4), (5, 4), (3, 6), (5, 6))


def demo_syndrome(code):
    vmap = {xy: i for i, xy in enumerate(code.vertex_coords)}
    pmap = {xy: i for i, xy in enumerate(code.plaquette_coords)}
    return Syndrome(frozenset(vmap[xy] for xy in _DEMO_PRIMAL),
                    frozenset(pmap[xy] for xy in _DEMO_DUAL))


def cmd_demo(_args) -> int:
    code = build_mixed_boundary(4)
    syn = demo_syndrome(code)
    print("Worked example: mixed-boundary code, d=4 "
          f"({code.n_qubits} qubits)")
    print("Lit vertex generators (primal syndrome), checkerboard coords:")
    print("  " + " ".join(str(xy) for xy in _DEMO_PRIMAL))
    print("Lit plaquette generators (dual syndrome), checkerboard coords:")
    print("  " + " ".join(str(xy) for xy in _DEMO_DUAL))
    out = decode(code, syn, Variant.FULL)

    def fmt(pattern):
        return "{" + ", ".join(str(code.qubit_coords[q])
                               for q in sorted(pattern.support)) + "}"

    for i, b in enumerate(out.b_patterns):
        print(f"B_{i} (Z-correction support): {fmt(b)}")
    for i, r in enumerate(out.r_patterns):
        print(f"R_{i} (X-correction support): {fmt(r)}")
    for i, ((w_b, w_r), total) in enumerate(zip(out.ledger.components,
                                                out.ledger.totals)):
        print(f"T_{i} = {w_b} + {w_r} = {total}")
    print(f"Ledger: {out.ledger.totals} (non-increasing)")
    print(f"Extra iterations: {out.extra_iterations}")
    final = (out.final_b.support | out.final_r.support)
    print(f"Final correction weight: {len(final)}")
    ok = ledger_check(code, out)
    print(f"Accounting identities hold: {ok}")
    return 0 if ok else 1


def _selftest_matching(report) -> bool:
    import numpy as np
    rng = np.random.default_rng(20240)
    ok = True
    for m in (4, 6, 8, 10):
        for _ in range(100):
            edges = [(u, v, int(rng.integers(0, 21)))
                     for u in range(m) for v in range(u + 1, m)]
            g = MatchGraph.from_edges(m, edges)
            exact = solve_mwpm(g)
            brute = brute_force_mwpm(g)
            if (exact.total_weight != brute.total_weight
                    or set(exact.pairs) != set(brute.pairs)):
                ok = False
    report("matching oracle equivalence (400 random graphs)", ok)
    return ok


def _selftest_invariants(report) -> bool:
    ok = True
    for code in (build_mixed_boundary(3), build_hole_with_distance(2)):
        model = NoiseModel.depolarizing(0.12)
        for t in range(200):
            rng = trial_rng(77, t)
            error = sample(model, code.n_qubits, rng)
            syn = syndrome(code, error)
            out = decode(code, syn, Variant.FULL)
            if syndrome(code, out.correction) != syn:
                ok = False
            if not ledger_check(code, out):
                ok = False
            check_success(code, error, out.correction)  # raises on mismatch
    report("decode invariants (syndrome match, weight ledger)", ok)
    return ok


def cmd_selftest(_args) -> int:
    failed = False

    def report(name, good):
        print(f"{'ok' if good else 'FAIL'}  {name}")

    if not _selftest_matching(report):
        failed = True
    if not _selftest_invariants(report):
        failed = True
    print("selftest:", "FAIL" if failed else "all passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irmwpm",
        description="Surface-code decoding over depolarizing noise with "
                    "iteratively reweighted minimum-weight perfect matching.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="Monte Carlo run at one point")
    sim.add_argument("--code", choices=["mixed", "hole"], required=True)
    sim.add_argument("--distance", type=int, required=True)
    sim.add_argument("--epsilon", type=float, required=True)
    sim.add_argument("--trials", type=int, required=True)
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--variants", default="plain,full",
                     help="comma-separated subset of plain,one,full")
    sim.add_argument("--out", help="CSV output path (default: stdout)")
    sim.set_defaults(func=cmd_simulate)

    sw = sub.add_parser("sweep", help="grid run from a JSON config")
    sw.add_argument("--config", required=True)
    sw.set_defaults(func=cmd_sweep)

    dm = sub.add_parser("demo", help="worked decoding example with ledger")
    dm.set_defaults(func=cmd_demo)

    st = sub.add_parser("selftest", help="oracle and invariant suites")
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
