#!/usr/bin/env python3
"""
V-Order Toolkit command line

Compares strings in V-order, factors them into V-words, builds
lex-extension suffix arrays and the V-order Burrows-Wheeler transform, and
runs the property suites and benchmarks that validate all of it.

Input strings come from the named files, or from stdin when none are
given, one string per line:
- text: every character is a letter, ordered by code point
- ints: whitespace-separated decimal letters >= 1, ordered numerically
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, List, Optional, Sequence, TextIO, Tuple

# Add the parent directory to the path to enable imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.core import Alphabet, VOrderToolkit
from app.core.bench import format_table, run_bench
from app.core.checks import DEFAULT_SEED, SUITES, CheckScope, SuiteReport, run_checks
from app.core.toolkit import MODES

logger = logging.getLogger("vorder-toolkit")

COMMANDS = ("compare", "factor", "sa", "bwt", "check", "bench", "vform", "star")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, validated up front."""

    command: str
    mode: str = "text"
    alphabet: Optional[str] = None
    output: str = "plain"
    seed: int = DEFAULT_SEED
    max_n: int = 64
    sigma: int = 6
    count: Optional[int] = None
    log_level: str = "WARNING"
    inputs: Tuple[str, ...] = ()
    suites: Tuple[str, ...] = ()
    quick: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}")
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode {self.mode!r}")
        if self.output not in ("plain", "json"):
            raise ValueError(f"Unknown output format {self.output!r}")
        if self.alphabet is not None:
            Alphabet.parse(self.alphabet, self.mode)
        if self.command == "compare" and len(self.inputs) != 2:
            raise ValueError("compare takes exactly two strings")
        if self.sigma < 1 or self.max_n < 1 or (self.count is not None and self.count < 0):
            raise ValueError("--sigma and --max-n must be positive and --count non-negative")

    @property
    def as_json(self) -> bool:
        return self.output == "json"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        if args.command == "compare":
            inputs = (args.x, args.y)
        else:
            inputs = tuple(getattr(args, "files", ()) or ())
        return cls(
            command=args.command,
            mode=args.mode,
            alphabet=args.alphabet,
            output="json" if args.json else "plain",
            seed=args.seed,
            max_n=args.max_n,
            sigma=args.sigma,
            count=args.count,
            log_level=args.log_level,
            inputs=inputs,
            suites=tuple(getattr(args, "suite", None) or ()),
            quick=getattr(args, "quick", False),
        )


def create_argument_parser():
    """Create argument parser for the toolkit commands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--mode",
        choices=MODES,
        default="text",
        help="How input lines become letters (default: text)"
    )
    common.add_argument(
        "--alphabet",
        default=None,
        help="Explicit symbol order, smallest first: characters in text mode, "
             "whitespace-separated integers in ints mode"
    )
    common.add_argument(
        "--json",
        action="store_true",
        help="Print one JSON object per result instead of plain text"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Seed for check and bench randomness (default: {DEFAULT_SEED})"
    )
    common.add_argument(
        "--max-n",
        type=int,
        default=64,
        help="Longest random string in check (default: 64)"
    )
    common.add_argument(
        "--sigma",
        type=int,
        default=6,
        help="Largest random alphabet in check and bench (default: 6)"
    )
    common.add_argument(
        "--count",
        type=int,
        default=None,
        help="Random pairs and lemma instances in check (default: 10000, 200 with --quick)"
    )
    common.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="WARNING",
        help="Logging threshold on stderr (default: WARNING)"
    )

    parser = argparse.ArgumentParser(
        prog="vorder",
        description="V-Order Toolkit - comparison, factorization and suffix sorting in V-order",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
  compare A B   Print LT, EQ or GT
  factor        V-word factors with their rightmost positions
  sa            Lex-extension suffix array (1-based starts)
  bwt           V-order BWT and primary index
  vform         Maximal letter, count and blocks
  star          Star deletion path down to the empty string
  check         Property suites; exits 1 on any violation
  bench         Input-sensitivity and pipeline scaling tables

Examples:
  # Dictionary words in V-order
  python -m app.cli compare sop top

  # Integer letters
  python -m app.cli compare --mode ints "4 5" "3 2 4 1 5"

  # Factor every line of a file, JSON output
  python -m app.cli factor --json words.txt

  # Quick property run with a different seed
  python -m app.cli check --quick --seed 7
        """
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    compare = subparsers.add_parser("compare", parents=[common], help="Compare two strings")
    compare.add_argument("x", help="First string")
    compare.add_argument("y", help="Second string")

    for name, summary in (("factor", "Factor strings into V-words"),
                          ("sa", "Lex-extension suffix arrays"),
                          ("bwt", "V-order Burrows-Wheeler transform"),
                          ("vform", "V-form decomposition"),
                          ("star", "Star deletion path")):
        command = subparsers.add_parser(name, parents=[common], help=summary)
        command.add_argument("files", nargs="*", help="Input files, one string per line (default: stdin)")

    check = subparsers.add_parser("check", parents=[common], help="Run the property suites")
    check.add_argument(
        "--suite",
        action="append",
        choices=list(SUITES),
        help="Run only this suite (repeatable)"
    )
    check.add_argument(
        "--quick",
        action="store_true",
        help="Shrink every enumeration and sweep"
    )

    subparsers.add_parser("bench", parents=[common], help="Print the benchmark tables")
    return parser


def read_lines(paths: Sequence[str], stdin: TextIO) -> List[str]:
    """Input strings from files, or stdin for no paths or ``-``."""
    if not paths:
        return stdin.read().splitlines()
    lines: List[str] = []
    for path in paths:
        if path == "-":
            lines.extend(stdin.read().splitlines())
        else:
            lines.extend(Path(path).read_text(encoding="utf-8").splitlines())
    return lines


def _emit(stdout: TextIO, value: Any, as_json: bool) -> None:
    text = json.dumps(value, sort_keys=True, ensure_ascii=False) if as_json else str(value)
    print(text, file=stdout, flush=True)


def _blank(text: str) -> str:
    return text or "ε"


def _plain(command: str, payload: dict) -> str:
    if command == "sa":
        return " ".join(str(start) for start in payload["order"])
    if command == "bwt":
        return f"{payload['transformed']}\t{payload['primary_index']}"
    if command == "vform":
        blocks = " | ".join(_blank(block) for block in payload["blocks"])
        return f"{payload['max_letter']}\t{payload['count']}\t{blocks}"
    return " > ".join(_blank(state) for state in payload["states"])


def _run_lines(config: RunConfig, toolkit: VOrderToolkit, stdin: TextIO, stdout: TextIO) -> int:
    lines = read_lines(config.inputs, stdin)
    logger.info(f"Read {len(lines)} input strings")
    for index, line in enumerate(lines):
        if config.command == "factor":
            if config.as_json:
                _emit(stdout, toolkit.factor(line), True)
                continue
            if index:
                print(file=stdout)
            toolkit.factor(line, on_factor=lambda factor, end: _emit(stdout, f"{end}\t{factor}", False))
            continue
        operation = {"sa": toolkit.suffix_array, "bwt": toolkit.bwt, "vform": toolkit.vform, "star": toolkit.star}
        payload = operation[config.command](line)
        _emit(stdout, payload if config.as_json else _plain(config.command, payload), config.as_json)
    return 0


def _describe(report: SuiteReport) -> str:
    notes = "".join(f" {key}={value}" for key, value in sorted(report.notes.items()))
    return f"{report.status} {report.name} cases={report.cases} failures={report.failures}{notes}"


def _run_check(config: RunConfig, stdout: TextIO) -> int:
    overrides = {"seed": config.seed, "sigma": config.sigma, "max_n": config.max_n}
    if config.count is not None:
        overrides["count"] = config.count
    scope = replace(CheckScope.quick() if config.quick else CheckScope(), **overrides)

    def on_report(report: SuiteReport) -> None:
        if config.as_json:
            return
        _emit(stdout, _describe(report), False)
        if report.status == "FAIL":
            for example in report.examples:
                _emit(stdout, f"  {example}", False)

    reports = run_checks(scope, config.suites or None, on_report=on_report)
    passed = all(report.passed for report in reports)
    if config.as_json:
        _emit(stdout, {"passed": passed, "suites": [report.to_dict() for report in reports]}, True)
    if not passed:
        logger.warning("Property check failed")
    return 0 if passed else 1


def _run_bench(config: RunConfig, stdout: TextIO) -> int:
    tables = run_bench(seed=config.seed, sigma=config.sigma)
    if config.as_json:
        _emit(stdout, {name: [asdict(row) for row in rows] for name, rows in tables.items()}, True)
        return 0
    for index, (name, rows) in enumerate(tables.items()):
        if index:
            print(file=stdout)
        _emit(stdout, f"# {name}", False)
        _emit(stdout, format_table(rows), False)
    return 0


def run(config: RunConfig, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    """Execute one command and return its exit status.

    Raises:
        VOrderError: For unknown symbols, empty strings or malformed alphabets
        OSError: If an input file cannot be read
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    if config.command == "check":
        return _run_check(config, stdout)
    if config.command == "bench":
        return _run_bench(config, stdout)

    toolkit = VOrderToolkit(mode=config.mode, alphabet=config.alphabet)
    if config.command == "compare":
        payload = toolkit.compare(*config.inputs)
        _emit(stdout, payload if config.as_json else payload["order"], config.as_json)
        return 0
    return _run_lines(config, toolkit, stdin, stdout)


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Main entry point; returns the process exit status."""
    stderr = stderr or sys.stderr
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig.from_args(args)
        return run(config, stdin=stdin, stdout=stdout)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
