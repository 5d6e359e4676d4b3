"""
Command-line entry point for sharptree.

Exit codes: 0 ok, 1 input error, 2 property violation, 3 resource limit.
With several input files the exit code is the largest one.
"""
import argparse
import sys

from dotenv import load_dotenv

load_dotenv()

from app.models.sharp import SharpMethod
from app.processors.report_generator import run_batch
from app.schemas.request import AnalysisRequest, Command, OutputFormat


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1, not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("paths", nargs="+", metavar="PATH", help="edge-list file(s)")
    common.add_argument("--matching-cap", type=int, default=None,
                        help="maximum number of maximum matchings to enumerate "
                             "(default: SHARPTREE_MATCHING_CAP or 1000000)")
    common.add_argument("--jobs", type=int, default=1, help="process input files in N worker processes")

    parser = ArgumentParser(
        prog="sharptree",
        description="Exact group inverses of weighted tree adjacency matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sharp = sub.add_parser("sharp", parents=[common], help="print the group inverse graph T#")
    fmt = sharp.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output_format", action="store_const", const=OutputFormat.JSON)
    fmt.add_argument("--dot", dest="output_format", action="store_const", const=OutputFormat.DOT)
    fmt.add_argument("--edges", dest="output_format", action="store_const", const=OutputFormat.EDGES)
    sharp.add_argument("--method", choices=[m.value for m in SharpMethod], default=SharpMethod.COMBINATORIAL.value)
    sharp.set_defaults(output_format=OutputFormat.EDGES)

    sub.add_parser("verify", parents=[common], help="cross-check all group inverse methods")

    analyze = sub.add_parser("analyze", parents=[common], help="structural report on T#")
    analyze.add_argument("--all", dest="include_all", action="store_true", help="emit the full analysis document")
    analyze.add_argument("--search", action="store_true", help="with --all, search for a signature outside class T")

    sub.add_parser("matchings", parents=[common], help="list maximum matchings and alternating paths")

    signature = sub.add_parser("signature", parents=[common], help="signature making S A# S non-negative")
    signature.add_argument("--search", action="store_true", help="exhaustive search when the class T construction does not apply")

    spectral = sub.add_parser("spectral", parents=[common], help="spectra of A and A#")
    spectral.add_argument("--tol", type=float, default=None, help="tolerance (default: 1e-9)")
    return parser


def to_requests(args: argparse.Namespace) -> list[AnalysisRequest]:
    command = Command(args.command)
    options = {
        "command": command,
        "matching_cap": args.matching_cap,
        "output_format": getattr(args, "output_format", OutputFormat.EDGES),
        "method": SharpMethod(getattr(args, "method", SharpMethod.COMBINATORIAL.value)),
        "include_all": getattr(args, "include_all", False),
        "search": getattr(args, "search", False),
        "tol": getattr(args, "tol", None),
    }
    return [AnalysisRequest(path=path, **options) for path in args.paths]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.matching_cap is not None and args.matching_cap <= 0:
        parser.error("--matching-cap must be positive")
    if getattr(args, "tol", None) is not None and not args.tol > 0:
        parser.error("--tol must be positive")

    exit_code = 0
    for job in run_batch(to_requests(args), jobs=args.jobs):
        if job.output is not None:
            sys.stdout.write(job.output)
        if job.error is not None:
            print(f"{job.path}: {job.error}", file=sys.stderr)
        exit_code = max(exit_code, job.exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
