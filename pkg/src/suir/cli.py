"""Command-line entry point.

Exit statuses: 0 success, 1 property violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import checker
from .adversary import SchedulerSpec
from .engine import ScenarioError, Scenario, run
from .geometry import AgreementMode, DomainError, Similarity1D
from .io import dumps, load_scenario, scenario_from_dict, write_trace
from .sweep import SweepOptions, run_sweep

OK, VIOLATION, INPUT_ERROR = 0, 1, 2
SEED_ENV = "SUIR_SEED"


class InputError(Exception):
    pass


def _env_seed():
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV}: expected an integer, got {raw!r}") from None


def _overrides(sc: Scenario, args) -> Scenario:
    changes = {}
    if getattr(args, "max_rounds", None) is not None:
        changes["max_rounds"] = args.max_rounds
    if getattr(args, "epsilon", None) is not None:
        changes["epsilon"] = args.epsilon
    seed = args.seed if args.seed is not None else _env_seed()
    if seed is not None:
        changes["seed"] = seed
    return replace(sc, **changes).validate() if changes else sc


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline="\n"), True


def _run_and_report(sc: Scenario, out_path) -> int:
    trace = run(sc)
    fh, close = _open_out(out_path)
    try:
        write_trace(trace, fh)
    finally:
        if close:
            fh.close()
    expected = sc.expected_outcome()
    got = "gather" if trace.terminal.gathered else "no_gather"
    verdict = "ok" if expected in (None, got) else "VIOLATION"
    print(f"{sc.name or sc.protocol}: {trace.terminal} (expected {expected or 'unspecified'}) {verdict}",
          file=sys.stderr)
    return OK if verdict == "ok" else VIOLATION


def cmd_run(args) -> int:
    sc = _overrides(load_scenario(args.scenario), args)
    return _run_and_report(sc, args.out)


def cmd_adversary(args) -> int:
    if args.scenario:
        sc = load_scenario(args.scenario)
    else:
        lights = (0, 0) if args.protocol == "luminous_ssync" else None
        sc = Scenario(AgreementMode.Line1DOriented, (0.0, 1.0), (Similarity1D(), Similarity1D()),
                      args.protocol, lights=lights, max_rounds=10_000,
                      name=f"impossibility-vs-{args.protocol}").validate()
    sc = _overrides(replace(sc, scheduler=SchedulerSpec("impossibility")).validate(), args)
    return _run_and_report(sc, args.out)


def cmd_sweep(args) -> int:
    if args.seeds < 1:
        raise InputError("--seeds: a sweep needs at least one seed")
    try:
        data = json.loads(Path(args.scenario).read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"<file>: not valid JSON ({exc})"]) from None
    template = scenario_from_dict(data)
    template = _overrides(template, argparse.Namespace(
        max_rounds=args.max_rounds, epsilon=args.epsilon, seed=None))
    try:
        options = SweepOptions.from_dict(data.get("sweep") if isinstance(data, dict) else None)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    master = args.seed if args.seed is not None else _env_seed()
    summary = run_sweep(template, args.seeds, master or 0, options)
    fh, close = _open_out(args.out)
    try:
        fh.write(dumps(summary.to_dict()) + "\n")
    finally:
        if close:
            fh.close()
    return VIOLATION if summary.violations else OK


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else (_env_seed() or 0)
    reports = checker.verify_all(seed)
    fh, close = _open_out(args.out)
    try:
        for rep in reports:
            fh.write(dumps(rep.to_dict()) + "\n")
    finally:
        if close:
            fh.close()
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {rep.lemma}: {rep.samples} samples, {len(rep.violations)} violations",
              file=sys.stderr)
    return OK if all(r.passed for r in reports) else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="suir", description="Two-robot rendezvous simulator and verifier.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, scenario_required=True):
        sp.add_argument("--scenario", required=scenario_required, help="scenario JSON file")
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.add_argument("--max-rounds", type=int)
        sp.add_argument("--epsilon", type=float)
        sp.add_argument("--seed", type=int, help=f"seed override (default: ${SEED_ENV})")

    sp = sub.add_parser("run", help="run a scenario and write its JSON-lines trace")
    common(sp)
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("sweep", help="run randomized copies of a scenario template")
    common(sp)
    sp.add_argument("--seeds", type=int, default=100)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("adversary", help="run under the never-meet scheduler")
    common(sp, scenario_required=False)
    sp.add_argument("--protocol", default="goto_other",
                    help="protocol when no scenario is given (goto_other or luminous_ssync)")
    sp.set_defaults(func=cmd_adversary)

    sp = sub.add_parser("verify", help="run every checker suite")
    sp.add_argument("--out", help="report file (default: stdout)")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except ScenarioError as exc:
        for problem in exc.fields:
            print(f"error: {problem}", file=sys.stderr)
        return INPUT_ERROR
    except (InputError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
