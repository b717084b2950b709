"""
Sierpinski edge-isoperimetry toolkit - command-line entry point

Subcommands: graph, profile, verify, metrics, steiner. Data goes to stdout
(or --out), logs to stderr. Exit codes: 0 ok, 1 violation, 2 usage or cap.
"""

import argparse
import logging
import sys
from typing import List

from dotenv import load_dotenv

from config.settings import (
    EXIT_CODES,
    OUTPUT_FORMATS,
    PROFILE_METHODS,
    STEINER_OPS,
    VERIFY_KINDS,
    configure_logging,
)
from ui.commands import cmd_graph, cmd_metrics, cmd_profile, cmd_steiner, cmd_verify
from ui.formatters import render_message
from utils.errors import (
    CanonicalSetError,
    InvalidParamsError,
    IterationBoundError,
    NotCompressedError,
    RangeError,
    RecurrenceCalibrationError,
    SetSpecError,
    SizeCapError,
    SteinerPropertyError,
)

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

COMMANDS = {
    "graph": cmd_graph,
    "profile": cmd_profile,
    "verify": cmd_verify,
    "metrics": cmd_metrics,
    "steiner": cmd_steiner,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="recursion depth n >= 0")
    common.add_argument("--m", type=int, help="alphabet size m >= 2")
    common.add_argument("--out", help="write data to this file instead of stdout")
    common.add_argument("--quiet", action="store_true", help="no progress bars, errors only")
    common.add_argument("--log-level", help="override SIERPINSKI_LOG_LEVEL")

    decorated = argparse.ArgumentParser(add_help=False)
    decorated.add_argument("--s", type=int, help="|I|: corners whose exterior end counts as inside")
    decorated.add_argument("--t", type=int, help="|J|: corners without an exterior edge")

    parser = argparse.ArgumentParser(prog="sierpinski", description="Edge-isoperimetric profiles of Sierpinski graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", parents=[common], help="edge list of S(n,m)")
    graph.add_argument("--format", choices=OUTPUT_FORMATS, default="text")

    profile = sub.add_parser("profile", parents=[common], help="isoperimetric profile table")
    profile.add_argument("--method", choices=PROFILE_METHODS, default="recurrence")
    profile.add_argument("--format", choices=OUTPUT_FORMATS, default="csv")

    verify = sub.add_parser("verify", parents=[common, decorated], help="numeric verification")
    verify.add_argument("kind", choices=VERIFY_KINDS)
    verify.add_argument("--max-nm", type=int, help="sweep every n + m <= this bound")
    verify.add_argument("--jobs", type=int, help="worker processes (default SIERPINSKI_JOBS or all CPUs)")
    verify.add_argument("--format", choices=OUTPUT_FORMATS, default="json")

    metrics = sub.add_parser("metrics", parents=[common], help="bisection width, max profile, Cheeger constant")
    metrics.add_argument("--format", choices=OUTPUT_FORMATS, default="json")

    steiner = sub.add_parser("steiner", parents=[common, decorated], help="Steiner operations on a vertex set")
    steiner.add_argument("op", choices=STEINER_OPS)
    steiner.add_argument("--set", help='vertices or rank ranges, e.g. "00,01,11" or "1-4"')
    steiner.add_argument("--h", type=int, help="compress only this copy")
    steiner.add_argument("--random", type=int, metavar="K", help="use a random K-set instead of --set")
    steiner.add_argument("--seed", type=int, help="seed for --random (default SIERPINSKI_SEED)")
    steiner.add_argument("--format", choices=OUTPUT_FORMATS, default="json")
    return parser


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("ERROR" if args.quiet else args.log_level)

    try:
        return COMMANDS[args.command](args)
    except SizeCapError as e:
        logger.error(render_message("cap_exceeded", detail=str(e)))
        return EXIT_CODES["usage"]
    except SetSpecError as e:
        logger.error(render_message("bad_set", detail=str(e)))
        return EXIT_CODES["usage"]
    except (InvalidParamsError, RangeError, NotCompressedError, CanonicalSetError) as e:
        logger.error(render_message("bad_params", detail=str(e)))
        return EXIT_CODES["usage"]
    except (SteinerPropertyError, IterationBoundError) as e:
        logger.error(render_message("steiner_failed", detail=str(e)))
        return EXIT_CODES["violation"]
    except RecurrenceCalibrationError as e:
        logger.error(render_message("violation", detail=str(e)))
        return EXIT_CODES["violation"]


if __name__ == "__main__":
    sys.exit(main())
