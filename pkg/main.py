"""
Embedded Trees
Command-line entry point: sequence emission and verification suites
"""

import argparse
import os
import sys

from loguru import logger
from pydantic import ValidationError

from config.tree_config import SUITE_GROUPS
from src.cli.commands import EXIT_USAGE, FAMILIES, cmd_seq, cmd_verify
from src.models.cli_config import CliConfig
from src.oracle.suites import SUITES
from src.utils.log_setup import configure_logging


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d", type=int, help="Arity of the trees (default 3)")
    parser.add_argument("--j", type=int, help="Label bound or marked label")
    parser.add_argument("--m", type=int, help="Mark window: labels j-m..j+m are marked")
    parser.add_argument("--k", type=int, help="Power k for power-coeff")
    parser.add_argument("--n-max", dest="n_max", type=int, help="Largest size emitted or enumerated")
    parser.add_argument("--order", type=int, help="Truncation order of the series")
    parser.add_argument("--cap", type=int, help="Enumeration cap (sets EMBEDDED_TREES_CAP)")
    parser.add_argument("--format", default="text", choices=["text", "csv", "jsonl", "json-lines"],
                        help="Output format")
    parser.add_argument("--workers", type=int, default=None, help="Processes for the oracle")
    parser.add_argument("--log-level", dest="log_level", default=None, help="loguru level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Embedded d-ary trees: exact counts and verification")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    seq = subparsers.add_parser("seq", help="Emit a sequence or table")
    seq.add_argument("target", metavar="family", help=f"One of: {', '.join(FAMILIES)}")
    _add_common(seq)

    verify = subparsers.add_parser("verify", help="Run a verification suite or group")
    verify.add_argument("target", metavar="suite",
                        help=f"One of: {', '.join(list(SUITE_GROUPS) + list(SUITES))}")
    _add_common(verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    values = {k: v for k, v in vars(args).items() if v is not None}
    try:
        config = CliConfig(**values)
    except ValidationError as exc:
        configure_logging()
        logger.error(f"❌ Invalid arguments: {exc}")
        return EXIT_USAGE

    configure_logging(config.log_level)
    if config.cap is not None:
        os.environ["EMBEDDED_TREES_CAP"] = str(config.cap)

    logger.info(f"🚀 {config.subcommand} {config.target}")
    if config.subcommand == "seq":
        return cmd_seq(config)
    return cmd_verify(config)


if __name__ == "__main__":
    sys.exit(main())
