"""Command-line front end.

Exit codes: 0 success, 1 internal invariant failure, 2 bad input,
3 undecided (only exhaustive search applies and the instance is too big).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .errors import InvariantError, ProfileError, UndecidedError
from .generators import (
    lift_approval_depth,
    lift_new_candidate,
    random_3dm,
    random_profile,
    reduce_3dm_to_3approval,
    reduce_3dm_to_rdelta,
)
from .profile import Profile, VotingSituation, parse_profile, serialize_profile
from .scoring import ScoringRule, parse_rule, verify_witness
from .solvers import min_k_borda
from .solvers.dispatch import METHODS, solve

SCHEMA = 1
EXIT_INVARIANT, EXIT_INPUT, EXIT_UNDECIDED = 1, 2, 3


class InputError(Exception):
    """Bad file or parameter; reported with exit code 2."""


def _read_profile(path: str, allow_new: bool = False) -> Profile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_profile(text, allow_new=allow_new)
    except ProfileError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _rule(token: str) -> ScoringRule:
    try:
        return parse_rule(token)
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from exc


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _witness_path(base: str, candidate: str, many: bool) -> Path:
    # with --all the path names a directory holding one file per candidate
    return Path(base) / f"{candidate}.profile" if many else Path(base)


def cmd_solve(args) -> int:
    profile = _read_profile(args.profile)
    rule = _rule(args.rule)
    try:
        situation = VotingSituation(profile, args.k)
    except (ValueError, ProfileError) as exc:
        raise InputError(str(exc)) from exc
    if args.all:
        targets = list(profile.candidates)
    else:
        if args.candidate not in profile:
            raise InputError(f"unknown candidate {args.candidate!r}")
        targets = [args.candidate]

    start = time.perf_counter()
    results = []
    for target in targets:
        try:
            decision = solve(situation, rule, target, strategy=args.strategy)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        record = {"candidate": target, "possible": decision.possible, "method": decision.method}
        if rule.kind == "borda":
            mk = min_k_borda(profile, target)
            record["min_k"] = "inf" if mk == math.inf else mk
        if args.witness and decision.witness is not None:
            path = _witness_path(args.witness, target, args.all)
            _write(path, serialize_profile(decision.witness))
            record["witness"] = str(path)
        results.append(record)
    elapsed = (time.perf_counter() - start) * 1000
    out = {"schema": SCHEMA, "rule": rule.name, "k": args.k, "results": results, "timing_ms": round(elapsed, 3)}
    print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    profile = _read_profile(args.profile)
    witness = _read_profile(args.witness, allow_new=True)
    rule = _rule(args.rule)
    k = args.k if args.k is not None else max(0, witness.m - profile.m)
    try:
        situation = VotingSituation(profile, k)
    except (ValueError, ProfileError) as exc:
        raise InputError(str(exc)) from exc
    check = verify_witness(situation, rule, args.candidate, witness)
    print("true" if check else f"false reason={check.reason}")
    return 0 if check else 1


def _generate_instance(args):
    if args.kind == "random":
        return random_profile(args.m, args.n, args.seed), {
            "construction": "random",
            "m": args.m,
            "n": args.n,
            "seed": args.seed,
            "ground_truth": None,
        }
    if args.kind in ("3dm-3approval", "3dm-rdelta"):
        source = random_3dm(args.nprime, args.seed, positive=not args.negative)
        build = reduce_3dm_to_3approval if args.kind == "3dm-3approval" else reduce_3dm_to_rdelta
        inst = build(source)
        meta = inst.metadata()
        meta["seed"] = args.seed
        return inst.profile, meta
    profile = _read_profile(args.profile)
    situation = VotingSituation(profile, args.k)
    if args.kind == "lift-k":
        lifted = lift_new_candidate(situation, args.candidate)
        meta = {"construction": "lift-k", "rule": "kapproval:3", "target": args.candidate}
    else:
        lifted = lift_approval_depth(situation)
        meta = {"construction": "lift-K"}
    meta.update(source=args.profile, k=lifted.k, m=lifted.profile.m, n=lifted.profile.n, ground_truth=None)
    return lifted.profile, meta


def cmd_generate(args) -> int:
    try:
        profile, meta = _generate_instance(args)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = Path(args.out)
    _write(out, serialize_profile(profile))
    _write(Path(f"{out}.json"), json.dumps(meta, indent=2, sort_keys=True) + "\n")
    print(str(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcwnc", description="Possible cowinners when new candidates join.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether candidates can still cowin")
    p.add_argument("profile")
    p.add_argument("--rule", required=True, help="plurality, veto, kapproval:<K>, borda, rdelta or custom:<json>")
    p.add_argument("--k", type=int, required=True, help="number of new candidates")
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--candidate")
    who.add_argument("--all", action="store_true", help="every initial candidate, in declared order")
    p.add_argument("--witness", help="witness file (a directory with --all)")
    p.add_argument("--strategy", default="auto", choices=("auto",) + METHODS)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a witness extension")
    p.add_argument("profile")
    p.add_argument("witness")
    p.add_argument("--rule", required=True)
    p.add_argument("--candidate", required=True)
    p.add_argument("--k", type=int, help="declared number of new candidates (default: inferred)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write an instance and its metadata side-car")
    p.add_argument("kind", choices=("random", "3dm-3approval", "3dm-rdelta", "lift-k", "lift-K"))
    p.add_argument("--out", required=True)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nprime", type=int, default=3)
    p.add_argument("--negative", action="store_true", help="3-DM source without a perfect matching")
    p.add_argument("--profile", help="input profile for lift-k / lift-K")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--candidate", default="x*")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and args.kind.startswith("lift") and not args.profile:
        print(f"pcwnc: error: {args.kind} needs --profile", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"pcwnc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UndecidedError as exc:
        print(f"pcwnc: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except InvariantError as exc:
        print(f"pcwnc: internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
