# cli/main.py
"""
polyconj command line.

Exit status: 0 for any computed verdict (YES and NO alike), 1 when a verify
sweep finds violations, 2 on usage errors, 3 on violated preconditions.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from analysis.conjugacy import DECIDERS
from analysis.verification import SWEEPS
from cli.commands import COMMANDS
from core.config import load_config
from generation.generator import ResultRenderer
from models.config_models import Config
from models.errors import (
    AlphabetError, ConfigError, PolyconjError, PreconditionError, RankMismatchError,
    RelationNotDefinedError, UnknownPresetError, WordSyntaxError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

_USAGE_ERRORS = (WordSyntaxError, UnknownPresetError, RelationNotDefinedError, ConfigError)
_PRECONDITION_ERRORS = (PreconditionError, AlphabetError, RankMismatchError)

RELATIONS = list(DECIDERS)
SWEEP_NAMES = list(SWEEPS)


def _length_list(text: str) -> List[int]:
    try:
        lengths = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not lengths:
        raise argparse.ArgumentTypeError("length schedule is empty")
    if any(n <= 0 for n in lengths):
        raise argparse.ArgumentTypeError("lengths must be positive")
    return lengths


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _add_target(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--preset", help="pn, example22, example22-zero, onerel-<k>, tin1-trivial, "
                                        "tin1-cyclic-<m> (default: pn)")
    group.add_argument("--rules", metavar="FILE", help="Rule file (LHS -> RHS per line)")
    parser.add_argument("--rank", type=int, help="Rank n of P_n (default from config, 2)")
    parser.add_argument("--k", type=int, help="Exponent k for onerel")
    parser.add_argument("--base", help="Base group for tin1: trivial or cyclic-<m>")


def _common_options(on_subcommand: bool) -> argparse.ArgumentParser:
    """Options accepted before or after the subcommand; a subcommand only overrides what it sees."""
    default = argparse.SUPPRESS if on_subcommand else None
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=default, help="Config file (.yaml, .yml or .json)")
    common.add_argument("--json", action="store_true", default=default, help="Emit JSON")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=default,
                        help="Logging level (default from config, WARNING)")
    common.add_argument("--verbose", "-v", action="store_true", default=default, help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyconj",
        parents=[_common_options(False)],
        description="Normal forms and conjugacy in polycyclic monoids and related presentations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  polyconj reduce --preset pn --rank 2 "q1 p2"
  polyconj conj --preset pn --rank 2 --rel p "p1 p1 p2 q1" "p2 p2 p1 q2"
  polyconj conj --preset pn --rank 2 --rel c "p1 p1 p2 q1" "p2 p2 p1 q2"
  polyconj oracle --preset example22 --rel p bac ba --bound 3
  polyconj critpairs --rules my.rules
  polyconj zoo separation --json
  polyconj bench --lengths 10000,20000,40000 --trials 3 --seed 0
  polyconj verify --sweep ccp --max-component 3
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options(True)

    p = sub.add_parser("reduce", parents=[common], help="Normal form of a word")
    _add_target(p)
    p.add_argument("word")

    p = sub.add_parser("mul", parents=[common], help="Normal form of a product")
    _add_target(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("conj", parents=[common], help="Decide a conjugacy relation")
    _add_target(p)
    p.add_argument("--rel", choices=RELATIONS, default="p")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("oracle", parents=[common], help="Bounded brute-force conjugator search")
    _add_target(p)
    p.add_argument("--rel", choices=RELATIONS, default="p")
    p.add_argument("--bound", type=_non_negative, help="Search bound (default |a| + |b|)")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("critpairs", parents=[common], help="List critical pairs")
    _add_target(p)

    p = sub.add_parser("classify", parents=[common],
                       help="Special / monadic / length-reducing flags and confluence")
    _add_target(p)

    p = sub.add_parser("zoo", parents=[common],
                       help="Inspect an example monoid or run the separation report")
    p.add_argument("target", help="example22, example22-zero, onerel-<k>, tin1-trivial, "
                                  "tin1-cyclic-<m> or separation")
    p.add_argument("--max-length", type=_non_negative, help="Normal forms up to this length (default 4)")

    p = sub.add_parser("bench", parents=[common], help="Time reduction and conjugacy on random words")
    p.add_argument("--rank", type=int)
    p.add_argument("--lengths", type=_length_list, help="Comma separated word lengths")
    p.add_argument("--trials", type=_positive)
    p.add_argument("--seed", type=int)

    p = sub.add_parser("verify", parents=[common], help="Exhaustive small-universe property sweeps")
    p.add_argument("--sweep", action="append", choices=SWEEP_NAMES, help="Repeatable; default all")
    p.add_argument("--max-component", type=_non_negative, default=2)

    return parser


def configure_logging(config: Config):
    level = "DEBUG" if config.verbose else config.log_level
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _apply_overrides(config: Config, args: argparse.Namespace) -> Config:
    if args.json is not None:
        config.output.json = args.json
    if args.log_level is not None:
        config.log_level = args.log_level
    if args.verbose is not None:
        config.verbose = args.verbose
    return config


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command, print the result; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_config(Path(args.config) if args.config else None)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    config = _apply_overrides(config, args)
    configure_logging(config)

    try:
        result = COMMANDS[args.command](args, config)
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (_PRECONDITION_ERRORS + (PolyconjError,)) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(ResultRenderer(json_mode=config.output.json).render(result))
    return result.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
