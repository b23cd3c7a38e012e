"""
torskur - Command Line Entry Point
Evaluate operator words, run verification suites and compute lattices; JSON on stdout
"""

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from dotenv import load_dotenv

from commands import LatticeRequest, RankRequest, cmd_eval, cmd_lattice, cmd_rank, cmd_report_all, cmd_verify
from models.report import exit_code_for
from runtime.config import get_settings
from runtime.errors import InputError, TorskurError
from runtime.observability import setup_structured_logging
from runtime.startup_validation import validate_and_report
from suites import SUITE_ORDER, SuiteParams, parse_alpha


def _composition(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated parts, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torskur", description=__doc__.strip().splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="also write the JSON to this file")
        p.add_argument("--timings", action="store_true", help="add per-check durations")

    p_eval = sub.add_parser("eval", help="apply a word to a polynomial")
    p_eval.add_argument("input", nargs="?", help="request JSON file, stdin when omitted")
    p_eval.add_argument("--out")

    p_verify = sub.add_parser("verify", help="run one verification suite")
    p_verify.add_argument("suite_name", nargs="?", metavar="suite")
    p_verify.add_argument("--suite", dest="suite_flag")
    p_verify.add_argument("--n", type=int, default=2)
    p_verify.add_argument("--alpha", help="dimension vector, e.g. 2,2")
    p_verify.add_argument("--deg", type=int, default=6)
    p_verify.add_argument("--prime", type=int)
    output_flags(p_verify)

    p_all = sub.add_parser("report-all", help="run every suite")
    p_all.add_argument("--n", "--max-n", dest="n", type=int)
    p_all.add_argument("--deg", "--max-deg", dest="deg", type=int)
    p_all.add_argument("--prime", type=int)
    output_flags(p_all)

    p_rank = sub.add_parser("rank", help="rank of the Psi basis words of one degree")
    p_rank.add_argument("--mu", type=_composition, required=True)
    p_rank.add_argument("--lambda", dest="lam", type=_composition, required=True)
    p_rank.add_argument("--deg", type=int, required=True)
    p_rank.add_argument("--out")

    p_lattice = sub.add_parser("lattice", help="Im phi and tautological lattices")
    p_lattice.add_argument("--n", type=int, default=2)
    p_lattice.add_argument("--deg", type=int, default=4)
    p_lattice.add_argument("--prime", type=int)
    p_lattice.add_argument("--out")

    return parser


def _emit(data: Any, out: Optional[str]) -> None:
    text = json.dumps(data, indent=2)
    print(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _read_input(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _suite_params(args: argparse.Namespace, window_cap: int) -> tuple[str, SuiteParams]:
    name = args.suite_flag or args.suite_name
    if name is None:
        raise InputError(f"no suite given; expected one of {', '.join(SUITE_ORDER)}")
    try:
        params = SuiteParams(
            n=args.n,
            alpha=parse_alpha(args.alpha) if args.alpha else None,
            deg=args.deg,
            prime=args.prime,
            window_cap=window_cap,
        )
    except ValueError as e:
        raise InputError(f"bad suite parameters: {e}") from e
    return name, params


def _check_prime(prime: int) -> None:
    try:
        SuiteParams(prime=prime)
    except ValueError as e:
        raise InputError(f"bad prime: {e}") from e


def run(args: argparse.Namespace) -> int:
    """Dispatch one parsed command; returns the exit code"""
    settings = get_settings()

    if args.command == "eval":
        _emit(cmd_eval(_read_input(args.input)), args.out)
        return 0

    if args.command == "verify":
        name, params = _suite_params(args, settings.window_cap)
        report = cmd_verify(name, params, settings)
        _emit(report.to_json_dict(args.timings), args.out)
        return exit_code_for(report.status)

    if args.command == "report-all":
        if args.prime is not None:
            _check_prime(args.prime)
        aggregate = cmd_report_all(settings, args.n, args.deg, args.prime)
        _emit(aggregate.to_json_dict(args.timings), args.out)
        return exit_code_for(aggregate.status)

    if args.command == "rank":
        request = RankRequest(mu=args.mu, lam=args.lam, deg=args.deg, window_cap=settings.window_cap)
        _emit(cmd_rank(request), args.out)
        return 0

    request = LatticeRequest(n=args.n, deg=args.deg, prime=args.prime)
    _emit(cmd_lattice(request), args.out)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    # Load environment variables
    load_dotenv()

    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        setup_structured_logging(settings.log_level)
        validate_and_report(strict_mode=False)
        code = run(args)
    except TorskurError as e:
        print(json.dumps({'error': type(e).__name__, 'message': str(e), 'exit_code': e.exit_code}))
        return e.exit_code
    except ValueError as e:
        # pydantic validation of command requests
        print(json.dumps({'error': 'InputError', 'message': str(e), 'exit_code': 2}))
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
