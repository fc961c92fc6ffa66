import argparse
import logging
import sys

import dotenv

from tc_algebra import input_validator
from tc_algebra.algebra_app import AlgebraApp
from tc_algebra.config import SessionConfig
from tc_algebra.errors import TcAlgebraError
from tc_algebra.output_formatter import format_report, to_json
from tc_algebra.storage import make_report_storage
from tc_algebra.suites import suite_names

EXIT_USAGE = 2

EPILOG = """examples:
  python main.py simplify "q1*p1"
  python main.py fprod "a[1]" "a[p1]" T1
  python main.py check C --backend cend --n 1 --N 2
  python main.py dim --variety free --arity 3
  python main.py operad compose "x1 x2" "x1 x2" x1
"""


def session_flags():
    """Flags shared by every command; unset flags fall back to TC_ALGEBRA_* variables."""
    flags = argparse.ArgumentParser(add_help=False)
    group = flags.add_argument_group("session")
    group.add_argument("--n", dest="n_vars", type=input_validator.positive_int,
                       help="number of variables T1..Tn")
    group.add_argument("--N", dest="matrix_size", type=input_validator.positive_int,
                       help="matrix size of the coefficients")
    group.add_argument("--backend", type=input_validator.backend_name, help="cend or cur")
    group.add_argument("--variety", type=input_validator.variety_name, help="free or assoc")
    group.add_argument("--ring", type=input_validator.ring_name,
                       help="coefficient ring of formal distributions")
    group.add_argument("--seed", type=input_validator.non_negative_int, help="seed of randomized suites")
    group.add_argument("--degree-bound", dest="degree_bound", type=input_validator.non_negative_int,
                       help="degree bound of exhaustive grids")
    group.add_argument("--jobs", type=input_validator.positive_int, help="suites run concurrently")
    group.add_argument("--report-log", dest="report_log", help="append reports to this .json or .csv file")
    group.add_argument("--json", action="store_true", help="print the report as JSON")
    group.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr; twice for debug")
    return flags


def build_parser():
    flags = session_flags()
    parser = argparse.ArgumentParser(
        prog="tc_algebra",
        description="Exact computations in conformal and TC-algebras, with checkable axiom suites.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", metavar="command", required=True)

    def command(name, help_text, *options):
        sub = commands.add_parser(name, parents=[flags], help=help_text)
        sub.set_defaults(app_command=name, options=options)
        return sub

    command("simplify", "evaluate an expression", "expression").add_argument("expression")

    sub = command("eval", "evaluate a conformal element at f", "element", "polynomial")
    sub.add_argument("element")
    sub.add_argument("polynomial")

    sub = command("fprod", "f-product a_(f) b", "left", "right", "polynomial")
    sub.add_argument("left")
    sub.add_argument("right")
    sub.add_argument("polynomial")

    for name, help_text in (("nprod", "n-th product a_(n) b"), ("res-nprod", "residue n-product")):
        sub = command(name, help_text, "left", "right", "n")
        sub.add_argument("left")
        sub.add_argument("right")
        sub.add_argument("n", type=input_validator.non_negative_int)

    sub = command("locality", "locality set of a pair", "left", "right")
    sub.add_argument("left")
    sub.add_argument("right")

    sub = command("check", "run an axiom suite", "suite", "samples")
    sub.add_argument("suite", choices=suite_names())
    sub.add_argument("--samples", type=input_validator.positive_int, help="randomized instances per identity")

    command("dim", "dimension of C(k)", "arity").add_argument(
        "--arity", type=input_validator.positive_int, required=True)

    operad_parser = commands.add_parser("operad", help="operad compositions and actions")
    operad_commands = operad_parser.add_subparsers(dest="operad_command", metavar="action", required=True)
    sub = operad_commands.add_parser("compose", parents=[flags], help="substitute g_i for x_i in f")
    sub.set_defaults(app_command="operad compose", options=("outer", "inner"))
    sub.add_argument("outer", help="a word such as '(x1 x2) x3'")
    sub.add_argument("inner", nargs="+")
    sub = operad_commands.add_parser("act", parents=[flags], help="relabel leaf i as sigma(i)")
    sub.set_defaults(app_command="operad act", options=("sigma", "element"))
    sub.add_argument("sigma", type=input_validator.permutation, help="one-line notation, e.g. [2,1,3]")
    sub.add_argument("element")
    return parser


def configure_logging(args, session):
    if args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, session.log_level, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """Entry point of the command line; returns the process exit code."""
    # Load environment variables from .env file if it exists
    dotenv.load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        session = SessionConfig.from_env().override(
            n_vars=args.n_vars, matrix_size=args.matrix_size, backend=args.backend,
            variety=args.variety, ring=args.ring, seed=args.seed, degree_bound=args.degree_bound,
            jobs=args.jobs, report_log=args.report_log,
        )
    except ValueError as e:
        print(f"error: invalid TC_ALGEBRA_* setting: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(args, session)

    try:
        storage = make_report_storage(session.report_log) if session.report_log else None
        app = AlgebraApp(session, storage)
        report = app.run(args.app_command, **{name: getattr(args, name) for name in args.options})
    except (TcAlgebraError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(to_json(report) if args.json else format_report(report))
    return report.exit_code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted by user.", file=sys.stderr)
        sys.exit(130)
