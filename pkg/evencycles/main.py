import argparse
import logging
import sys

from pydantic import ValidationError

from .cli.commands import EXIT_BUDGET, EXIT_NOT_FOUND, EXIT_USAGE, HANDLERS, CliConfig, render
from .config import settings
from .errors import BudgetExceeded, EvenCyclesError

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def configure_logging(level=None):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("evencycles")
    root.handlers[:] = [handler]
    root.setLevel(level or settings.log_level)
    root.propagate = False


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("-k", type=int, default=2, help="number of cycles")
    common.add_argument("--eps", default=None, help="positive rational, e.g. 1 or 1/2")
    common.add_argument("--mode", choices=["exact", "asymptotic", "k2"], default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("-o", "--output", default=None, help="write the result here instead of stdout")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")

    parser = _Parser(prog="evencycles", description="Consecutive even cycles: finders, pipeline, oracle")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, helptext in (
        ("find", "k (possibly overlapping) cycles of consecutive even lengths"),
        ("disjoint", "k vertex-disjoint cycles of consecutive even lengths"),
        ("oracle", "exhaustive existence check for small graphs"),
        ("stats", "densities, degree distribution and a partition preview"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=helptext)
        cmd.add_argument("input", nargs="?", default="-", help="edge list path, or - for stdin")

    cmd = sub.add_parser("verify", parents=[common], help="check a certificate or report against a graph")
    cmd.add_argument("input", nargs="?", default="-")
    cmd.add_argument("-c", "--certificate", required=True, help="certificate or report JSON")

    cmd = sub.add_parser("gen", parents=[common], help="generate an instance")
    cmd.add_argument("generator", choices=["complete-bipartite", "random", "theta", "layered"])
    cmd.add_argument("values", nargs="+", help="a b | n d | l1 l2 l3 | k depth")
    return parser


def _config(args):
    if args.subcommand == "find" and args.budget is not None:
        raise UsageError("find runs no budgeted search; --budget applies to disjoint and oracle")
    fields = {
        "subcommand": args.subcommand,
        "k": args.k,
        "seed": args.seed,
        "output": args.output,
    }
    for name in ("eps", "mode", "budget", "jobs"):
        value = getattr(args, name)
        if value is not None:
            fields[name] = value
    for name in ("input", "certificate", "generator"):
        if getattr(args, name, None) is not None:
            fields[name] = getattr(args, name)
    if getattr(args, "values", None):
        fields["values"] = tuple(args.values)
    return CliConfig(**fields)


def _error(kind, message):
    return {"schema": 1, "error": kind, "message": message}


def cli_dispatch(argv):
    """
    Run one subcommand. JSON goes to stdout (or -o), logs to stderr.

    Returns:
        int: 0 success/exists, 1 not found/failure, 2 usage or input error,
        3 budget exceeded
    """
    output = None
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level.upper() if args.log_level else None)
        config = _config(args)
        output = config.output if config.subcommand != "gen" else None
        payload, code = HANDLERS[config.subcommand](config)
    except SystemExit as e:
        return int(e.code or 0)
    except (UsageError, ValidationError, ValueError, OSError) as e:
        payload, code = _error(type(e).__name__, str(e)), EXIT_USAGE
    except BudgetExceeded as e:
        payload, code = _error("BudgetExceeded", str(e)), EXIT_BUDGET
    except EvenCyclesError as e:
        logger.error("%s", e)
        payload, code = _error(type(e).__name__, str(e)), EXIT_NOT_FOUND

    text = render(payload)
    if output:
        with open(output, "w") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
