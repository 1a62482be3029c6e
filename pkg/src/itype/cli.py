"""
Command line front end.

    itype validate <file>
    itype analyze <file> [--format json|text] [--ball N]
    itype simples <file>
    itype group <file>
    itype enumerate --n K [--raw] --out DIR
    itype check <file|dir> [--ball N] [--depth D]
    itype check --n K [--raw]

``<file>`` may also be ``named:<name>`` for a built-in solution
(sol-a, sol-b, triv1..triv4, almost-trivial-6).

Exit status: 0 on success, 1 if a checked invariant (or an axiom, for
``validate``) fails, 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .census import enumerate_solutions, solution_hash
from .errors import ItypeError, SolutionFormatError
from .named import NAMED
from .report import analysis_report, group_report, render_text, simples_report
from .solution import YbeSolution, dumps_solution, loads_solution, property_c, validate
from .suite import MAX_BALL, MAX_DEPTH, run_suite

INDEX_NAME = "index.json"


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input_path: Optional[str] = None
    n: Optional[int] = None
    out_dir: Optional[str] = None
    format: str = "json"
    ball_radius: int = 4
    frozen_depth: int = 3
    raw: bool = False
    allow_invalid: bool = False


def parse_solution_file(path, allow_invalid: bool = False) -> YbeSolution:
    """Load a solution file (or ``named:<name>``) and check the axioms."""
    path = str(path)
    if path.startswith("named:"):
        name = path[len("named:") :]
        if name not in NAMED:
            raise InputError(f"unknown named solution {name!r}; choose from {sorted(NAMED)}")
        sol = NAMED[name]()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
        try:
            sol = loads_solution(text)
        except SolutionFormatError as exc:
            raise InputError(f"{path}: {exc}") from None
    if not allow_invalid:
        rep = validate(sol)
        if not rep.ok:
            raise InputError(f"{path}: not a symmetric solution: {rep.as_dict()}")
    return sol


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "text":
        out.write(render_text(report))
    else:
        out.write(json.dumps(report, indent=2) + "\n")


def _solutions_at(path: str) -> list[tuple[str, YbeSolution]]:
    p = Path(path)
    if p.is_dir():
        files = sorted(f for f in p.glob("*.json") if f.name != INDEX_NAME)
        return [(f.name, parse_solution_file(f)) for f in files]
    return [(path, parse_solution_file(path))]


def _index_row(name: str, sol: YbeSolution) -> dict:
    g = group_report(sol)
    return {
        "file": name,
        "hash": solution_hash(sol),
        "property_c": property_c(sol),
        "order": g["order"],
        "nilpotency_class": g["nilpotency_class"],
    }


def run(config: CliConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _run(config, out, err)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 2


def _run(config: CliConfig, out, err) -> int:
    cmd = config.command
    if cmd == "validate":
        sol = parse_solution_file(config.input_path, allow_invalid=True)
        rep = validate(sol)
        _emit(rep.as_dict(), config.format, out)
        return 0 if rep.ok else 1

    if cmd in ("analyze", "simples", "group"):
        sol = parse_solution_file(config.input_path, config.allow_invalid)
        if cmd == "analyze":
            report = analysis_report(sol, config.ball_radius)
        elif cmd == "simples":
            report = simples_report(sol)
        else:
            report = group_report(sol)
        _emit(report, config.format, out)
        return 0

    if cmd == "enumerate":
        census = _census(config)
        os.makedirs(config.out_dir, exist_ok=True)
        rows = []
        width = len(str(len(census)))
        for k, sol in enumerate(census, start=1):
            name = f"n{census.n}_{k:0{width}d}.json"
            Path(config.out_dir, name).write_text(dumps_solution(sol), encoding="utf-8")
            rows.append(_index_row(name, sol))
        index = {"n": census.n, "up_to_iso": census.up_to_iso, "count": len(rows), "solutions": rows}
        Path(config.out_dir, INDEX_NAME).write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
        _emit({"n": census.n, "up_to_iso": census.up_to_iso, "count": len(rows), "out": config.out_dir}, config.format, out)
        return 0

    if cmd == "check":
        if config.input_path is not None:
            targets = _solutions_at(config.input_path)
        else:
            census = _census(config)
            targets = [(f"n{census.n}_{k}", s) for k, s in enumerate(census, start=1)]
        failures = []
        checked = 0
        for name, sol in targets:
            for check, ok in run_suite(sol, config.ball_radius, config.frozen_depth):
                checked += 1
                if not ok:
                    failures.append({"solution": name, "check": check})
        _emit({"solutions": len(targets), "checks": checked, "failures": failures}, config.format, out)
        return 1 if failures else 0

    raise InputError(f"unknown command {cmd!r}")


def _census(config: CliConfig):
    try:
        return enumerate_solutions(config.n, up_to_iso=not config.raw)
    except ItypeError as exc:
        raise InputError(str(exc)) from None


def _bounded(lo: int, hi: int):
    def parse(text: str) -> int:
        v = int(text)
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"must be in {lo}..{hi}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="itype", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("validate", help="check the solution axioms")
    p.add_argument("input_path")
    common(p)

    for name, help_ in [
        ("analyze", "full quotient-group analysis"),
        ("simples", "list the 2^n simple elements"),
        ("group", "invariants of W(X,S)"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input_path")
        p.add_argument("--allow-invalid", action="store_true")
        common(p)
        if name == "analyze":
            p.add_argument("--ball", dest="ball_radius", type=_bounded(0, MAX_BALL), default=4)

    p = sub.add_parser("enumerate", help="write a census of solutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--raw", action="store_true", help="do not identify isomorphic solutions")
    p.add_argument("--out", dest="out_dir", required=True)
    common(p)

    p = sub.add_parser("check", help="run the invariant suite")
    p.add_argument("input_path", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--raw", action="store_true")
    p.add_argument("--ball", dest="ball_radius", type=_bounded(0, MAX_BALL), default=4)
    p.add_argument("--depth", dest="frozen_depth", type=_bounded(0, MAX_DEPTH), default=3)
    common(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and (args.input_path is None) == (args.n is None):
        parser.error("check needs exactly one of <file|dir> or --n")
    config = CliConfig(**{k: v for k, v in vars(args).items() if k in CliConfig.__dataclass_fields__})
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
