"""Command line entry point: encode, spectrum, verify, simulate, profile-gen.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .codec import pac_encode
from .gf2 import BitVec
from .harness import ConfigError, SimConfig, fer_csv, run_fer, run_spectrum, run_verify
from .polar import (
    PolarDim,
    ProfileError,
    bhattacharyya_profile,
    rm_profile,
    save_profile,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_CONFIG = 2


def _add_code_args(p: argparse.ArgumentParser, n_required: bool = True) -> None:
    p.add_argument("--n", type=int, required=n_required, help="log2 of the block length")
    p.add_argument("--profile", choices=["rm"], help="built-in profile rule")
    p.add_argument("--k", type=int, help="data word length for --profile rm")
    p.add_argument("--profile-file", help="profile file (N=<int> line then indices)")
    p.add_argument("--poly", help="connection polynomial, octal (default 1 = none)")


def _sim_config(args: argparse.Namespace, **extra) -> SimConfig:
    if getattr(args, "config", None):
        cfg = SimConfig.from_json(args.config)
        for name in ("n", "k", "profile_file", "poly"):
            value = getattr(args, name, None)
            if value is not None:
                setattr(cfg, name, value)
    else:
        cfg = SimConfig(
            n=args.n,
            k=getattr(args, "k", None),
            profile_file=getattr(args, "profile_file", None),
            poly=getattr(args, "poly", None) or "1",
        )
    for name, value in extra.items():
        if value is not None:
            setattr(cfg, name, value)
    return cfg


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paccode")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a data word and print the codeword")
    _add_code_args(p)
    p.add_argument("--data", required=True, help="data bits, leftmost = d_1")

    p = sub.add_parser("spectrum", help="exact weight spectrum CSV")
    _add_code_args(p)
    p.add_argument("--guard-k", type=int, default=30)
    p.add_argument("--chunks", type=int, default=1)
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("verify", help="machine-check the cyclic-shift identities")
    _add_code_args(p)
    p.add_argument("--check", choices=["theorem", "prop1", "equiv", "all"], default="all")
    p.add_argument("--mode", choices=["exhaustive", "randomized"], default="exhaustive")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("simulate", help="Monte Carlo FER/ANV campaign")
    _add_code_args(p, n_required=False)
    p.add_argument("--config", help="JSON config file; flags override its values")
    p.add_argument("--ebn0", type=float, nargs="+", help="Eb/N0 points in dB")
    p.add_argument("--master-seed", type=int)
    p.add_argument("--min-errors", type=int)
    p.add_argument("--max-trials", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--bias", type=float)
    p.add_argument("--max-visits", type=int)
    p.add_argument("--llr", choices=["exact", "minsum"])
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("profile-gen", help="construct and save a rate profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["rm", "bhattacharyya"], default="rm")
    p.add_argument("--design-erasure", type=float, default=0.5)
    p.add_argument("--out", required=True)

    return parser


def _cmd_encode(args) -> int:
    cfg = _sim_config(args)
    code = cfg.build_code()
    d = BitVec.from_string(args.data)
    if d.length != code.K:
        raise ConfigError(f"data length {d.length} != K {code.K}")
    print(pac_encode(d, code))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    cfg = _sim_config(args)
    _, csv_text, (d_min, a_dmin) = run_spectrum(cfg, guard_k=args.guard_k, chunks=args.chunks)
    _write(csv_text, args.out)
    print(f"d_min={d_min} A_dmin={a_dmin}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = _sim_config(args)
    reports = run_verify(cfg, check=args.check, mode=args.mode, samples=args.samples, seed=args.seed)
    ok = True
    for report in reports:
        print(report.summary())
        for violation in report.violations[:20]:
            print(f"  {violation}")
        ok = ok and report.ok
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _cmd_simulate(args) -> int:
    cfg = _sim_config(
        args,
        ebn0_db=args.ebn0,
        master_seed=args.master_seed,
        min_errors=args.min_errors,
        max_trials=args.max_trials,
        delta=args.delta,
        bias=args.bias,
        max_visits=args.max_visits,
        llr_domain=args.llr,
    )
    rows = run_fer(cfg)
    _write(fer_csv(cfg, rows), args.out)
    return EXIT_OK


def _cmd_profile_gen(args) -> int:
    dim = PolarDim(args.n)
    if args.method == "rm":
        profile = rm_profile(dim, args.k)
    else:
        profile = bhattacharyya_profile(dim, args.k, args.design_erasure)
    save_profile(profile, args.out)
    return EXIT_OK


_COMMANDS = {
    "encode": _cmd_encode,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
    "profile-gen": _cmd_profile_gen,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ProfileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
