"""Command-line front end: run check suites, emit text or JSON reports.

Exit codes: 0 when every check PASSes (the non-existence argument is fully
confirmed), 1 when any check fails, 2 on usage errors.  JSON output is
deterministic for a fixed (config, seed) apart from the elapsed_ms fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import PASS, RunConfig, SUITES, run_suite

SEED_ENV_VAR = "TWISTORCHECK_SEED"
SCHEMA_VERSION = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Machine-check the hypersurface commutation obstructions"
                    " on the two nearly Kahler twistor spaces.",
    )
    parser.add_argument("suite", choices=SUITES,
                        help="which check suite to run")
    parser.add_argument("--backend", choices=("exact", "float", "both"),
                        default="both", help="scalar backend (default: both)")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed for float sweeps (default: ${SEED_ENV_VAR}"
                             " or 0); exact results are seed-independent")
    parser.add_argument("--trials", type=int, default=10000,
                        help="sample count for randomized float sweeps")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="float-backend zero tolerance")
    parser.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text", help="report format")
    return parser


def _resolve_seed(arg_seed) -> int | None:
    if arg_seed is not None:
        return arg_seed
    raw = os.environ.get(SEED_ENV_VAR, "0")
    try:
        return int(raw)
    except ValueError:
        return None


_CONCLUSIONS = {
    "cp3": "conclusion: no hypersurface of the nearly Kahler twistor space of"
           " the 4-sphere has its shape operator commute with the induced"
           " almost contact structure.",
    "f12": "conclusion: no hypersurface of the nearly Kahler twistor space of"
           " the reversed projective plane has its shape operator commute with"
           " the induced almost contact structure.",
}

_CONSEQUENCES = (
    "consequence (not computed here): among the homogeneous six-dimensional"
    " nearly Kahler spaces, the equatorial 5-sphere in the round 6-sphere"
    " remains the only nearly cosymplectic hypersurface.",
    "consequence (not computed here): neither twistor space admits a totally"
    " geodesic or totally umbilical hypersurface.",
)


def _emit_text(cfg: RunConfig, reports, out) -> None:
    print(f"suite={cfg.suite} backend={cfg.backend} seed={cfg.seed}"
          f" trials={cfg.trials} tolerance={cfg.tolerance}", file=out)
    for rep in reports:
        line = f"{rep.status:4s} {rep.id} [{rep.backend}]"
        if rep.residual is not None:
            line += f" residual={rep.residual}"
        if rep.certificate is not None:
            line += f" :: {rep.certificate}"
        line += f" ({rep.elapsed_ms:.1f} ms)"
        print(line, file=out)
    passed = sum(1 for r in reports if r.status == PASS)
    failed = sum(1 for r in reports if r.status != PASS)
    print(f"summary: pass={passed} fail={failed}", file=out)
    if failed == 0:
        if cfg.suite in _CONCLUSIONS:
            print(_CONCLUSIONS[cfg.suite], file=out)
        elif cfg.suite == "all":
            for line in (_CONCLUSIONS["cp3"], _CONCLUSIONS["f12"], *_CONSEQUENCES):
                print(line, file=out)


def _emit_json(cfg: RunConfig, reports, out) -> None:
    passed = sum(1 for r in reports if r.status == PASS)
    failed = sum(1 for r in reports if r.status != PASS)
    payload = {
        "schema": SCHEMA_VERSION,
        "suite": cfg.suite,
        "checks": [rep.to_json() for rep in reports],
        "summary": {"pass": passed, "fail": failed},
    }
    json.dump(payload, out, indent=2, sort_keys=False)
    out.write("\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 2
    if not args.tolerance > 0:
        print("error: --tolerance must be positive", file=sys.stderr)
        return 2
    seed = _resolve_seed(args.seed)
    if seed is None:
        print(f"error: {SEED_ENV_VAR} is not an integer", file=sys.stderr)
        return 2
    cfg = RunConfig(suite=args.suite, backend=args.backend, seed=seed,
                    trials=args.trials, tolerance=args.tolerance, fmt=args.fmt)
    reports = run_suite(cfg)
    if cfg.fmt == "json":
        _emit_json(cfg, reports, sys.stdout)
    else:
        _emit_text(cfg, reports, sys.stdout)
    return 0 if all(rep.status == PASS for rep in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
