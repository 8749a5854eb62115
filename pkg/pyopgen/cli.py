"""
The command line front end.

    pyopgen [-v] COMMAND INPUT [options]

INPUT is a presentation file or the name of a built-in presentation. The
commands are

    dims        dimensions from the oracle or from a system of equations
    solve       build, solve and print a system of equations
    guess       guess a rational function or an algebraic equation
    check       regularity report of a presentation
    crosscheck  compare oracle and system dimensions

Exit codes: 0 success, 2 input or usage error, 3 no guess found,
4 crosscheck mismatch.
"""
from __future__ import annotations
import json
import logging
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import List, Union

from .opgen_exceptions import OperadError
from .monomials.generator import OperadKind
from .monomials.skeleton import SkeletonFlavor
from .presentation.presentation import Presentation
from .presentation.parser import parse_presentation
from .presentation.builtins import get_builtin
from .presentation.regularity import incomplete_skeleton_classes, is_reduced
from .series.truncated_series import (DEFAULT_ORDER,
                                      evaluate_t,
                                      format_coefficient,
                                      format_rational,
                                      t_coefficients)
from .series.operations import weighted_dims
from .enumeration import basis_dims, basis_dims_weighted
from .eqsys.eq_system import EmitFormat, SystemEngine
from .eqsys.stump_systems import build_system
from .eqsys.solver import solve_coefficients
from .eqsys.emit import emit_system
from .analysis.rational_guess import guess_rational, DEFAULT_RATIONAL_MARGIN
from .analysis.algebraic_guess import (guess_algebraic,
                                       search_algebraic,
                                       DEFAULT_ALGEBRAIC_MARGIN)
from .analysis.dependence_graph import dependence_graph, classify_growth

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NOT_FOUND = 3
EXIT_MISMATCH = 4

DEFAULT_ORACLE_ARITY = {OperadKind.NONSYM: 10, OperadKind.SHUFFLE: 7}

def load_presentation(source: str) -> Presentation:
    """
    Reads a presentation file, or looks up a built-in presentation if no
    such file exists.
    """
    path = Path(source)
    if path.is_file():
        return parse_presentation(path.read_text(), name=path.stem)
    return get_builtin(source)

def _weighted_json(values) -> List[List[str]]:
    return [[format_rational(part) for part in t_coefficients(value)]
            for value in values]

class _Output():
    """
    Collects the text or JSON result of a command.
    """

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: List[str] = []
        self.data: dict = {}

    def text(self) -> str:
        if self.as_json:
            return json.dumps(self.data, indent=2) + "\n"
        return "\n".join(self.lines) + "\n"

def _solution(p: Presentation, engine: str, order: int, weighted: bool = False):
    system = build_system(p, engine=SystemEngine(engine))
    return system, solve_coefficients(system, order, weighted=weighted)

def cmd_dims(args: Namespace, out: _Output) -> int:
    p = load_presentation(args.input)
    if args.oracle:
        if args.weighted:
            values = basis_dims_weighted(p, args.n, progress=args.progress)
        else:
            values = basis_dims(p, args.n, progress=args.progress)
        source = "oracle"
    else:
        _, solution = _solution(p, args.system, args.n, weighted=args.weighted)
        values = weighted_dims(solution.total) if args.weighted else solution.dims()
        source = args.system
    if args.weighted:
        dims = [int(evaluate_t(value, 1).numerator) for value in values]
        out.data = {"dims": dims, "weighted": _weighted_json(values)}
        out.lines = [f"{n}: {format_coefficient(value)}"
                     for n, value in enumerate(values, start=1)]
    else:
        out.data = {"dims": values}
        out.lines = [", ".join(str(value) for value in values)]
    out.data["source"] = source
    return EXIT_OK

def cmd_solve(args: Namespace, out: _Output) -> int:
    p = load_presentation(args.input)
    system, solution = _solution(p, args.system, args.n, weighted=args.weighted)
    out.data = {"system": system.to_dict(), "solution": solution.to_dict()}
    out.lines = [emit_system(system, EmitFormat(args.emit), weighted=args.weighted).rstrip("\n"),
                 "",
                 f"total = {solution.total}",
                 f"dims = {', '.join(str(value) for value in solution.dims())}"]
    if args.graph:
        graph = dependence_graph(system)
        report = classify_growth(graph, solution)
        out.data["graph"] = graph.to_dict()
        out.data["growth"] = report.to_dict()
        out.lines += ["", str(report)]
    return EXIT_OK

def _guess_order(args: Namespace, margin: int) -> int:
    """
    The truncation order for `guess`: `--n` if given, else large enough to
    certify the largest algebraic ansatz that is searched.
    """
    if args.n is not None:
        return args.n
    if not args.algebraic:
        return DEFAULT_ORDER
    deg_y = args.max_deg_y if args.deg_y is None else args.deg_y
    deg_z = deg_y if args.deg_z is None else args.deg_z
    return max(DEFAULT_ORDER, (deg_y + 1) * (deg_z + 1) + margin)

def cmd_guess(args: Namespace, out: _Output) -> int:
    p = load_presentation(args.input)
    if args.algebraic:
        margin = DEFAULT_ALGEBRAIC_MARGIN if args.margin is None else args.margin
    else:
        margin = DEFAULT_RATIONAL_MARGIN if args.margin is None else args.margin
    order = _guess_order(args, margin)
    _, solution = _solution(p, args.system, order)
    total = solution.total
    if args.algebraic:
        if args.deg_y is not None and args.deg_z is not None:
            result = guess_algebraic(total, args.deg_y, args.deg_z, margin=margin)
        else:
            result = search_algebraic(total, max_deg_y=args.max_deg_y,
                                      max_deg_z=args.deg_z, margin=margin,
                                      deg_y=args.deg_y)
        kind = "algebraic"
    else:
        result = guess_rational(total, margin=margin)
        kind = "rational"
    if result is None:
        out.data = {"kind": kind, "found": False}
        out.lines = [f"no {kind} form found up to order {order}"]
        return EXIT_NOT_FOUND
    out.data = {"kind": kind, "found": True, "result": result.to_dict()}
    out.lines = [str(result), f"certified to order {result.certified_order}"]
    return EXIT_OK

def _missing(p: Presentation, flavor: SkeletonFlavor) -> dict:
    return {skeleton.key: [monomial.key for monomial in missing]
            for skeleton, missing in incomplete_skeleton_classes(p, flavor).items()}

def cmd_check(args: Namespace, out: _Output) -> int:
    p = load_presentation(args.input)
    out.data = {"kind": p.kind.value,
                "generators": len(p.generators),
                "relations": len(p.relations),
                "reduced": is_reduced(p)}
    out.lines = [f"kind: {p.kind.value}",
                 f"generators: {len(p.generators)}, relations: {len(p.relations)}",
                 f"reduced: {'yes' if out.data['reduced'] else 'no'}"]
    if p.kind is OperadKind.SHUFFLE:
        for label, flavor in (("shuffle", SkeletonFlavor.PLANAR),
                              ("symmetric", SkeletonFlavor.TREE)):
            missing = _missing(p, flavor)
            out.data[f"{label}_regular"] = not missing
            out.data[f"{label}_missing"] = missing
            out.lines.append(f"{label} regular: {'no' if missing else 'yes'}")
            for key, monomials in missing.items():
                out.lines.append(f"  {key} misses {', '.join(monomials)}")
    return EXIT_OK

def cmd_crosscheck(args: Namespace, out: _Output) -> int:
    p = load_presentation(args.input)
    n_oracle = args.n_oracle or DEFAULT_ORACLE_ARITY[p.kind]
    n_system = args.n_system or n_oracle
    oracle = basis_dims(p, n_oracle, progress=args.progress)
    _, solution = _solution(p, args.system, n_system)
    system = solution.dims()
    diverging = next((n for n, (a, b) in enumerate(zip(oracle, system), start=1)
                      if a != b), None)
    out.data = {"oracle": oracle, "system": system,
                "engine": args.system, "match": diverging is None}
    out.lines = [f"oracle: {', '.join(str(value) for value in oracle)}",
                 f"{args.system}: {', '.join(str(value) for value in system)}"]
    if diverging is None:
        out.lines.append(f"match up to arity {min(n_oracle, n_system)}")
        return EXIT_OK
    out.data["first_diverging_arity"] = diverging
    out.lines.append(f"mismatch at arity {diverging}: oracle {oracle[diverging - 1]},"
                     f" system {system[diverging - 1]}")
    return EXIT_MISMATCH

def build_parser() -> ArgumentParser:
    """
    The argument parser with one sub-parser per command.
    """
    parser = ArgumentParser(prog="pyopgen",
                            description="Generating series of monomial operads.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log more, repeat for debug output.")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_common(sub: ArgumentParser):
        sub.add_argument("input", type=str,
                         help="A presentation file or a built-in name.")
        sub.add_argument("--json", action="store_true",
                         help="Write the result as JSON.")
        sub.add_argument("--out", type=str, default=None,
                         help="Write the result to this file.")

    def add_system(sub: ArgumentParser):
        sub.add_argument("--system", type=str, default=SystemEngine.STUMP.value,
                         choices=[engine.value for engine in SystemEngine])

    dims = commands.add_parser("dims", help="Dimensions of the components.")
    add_common(dims)
    add_system(dims)
    dims.add_argument("--n", type=int, default=DEFAULT_ORDER)
    dims.add_argument("--oracle", action="store_true",
                      help="Count basis monomials instead of solving a system.")
    dims.add_argument("--weighted", action="store_true")
    dims.add_argument("--progress", action="store_true")
    dims.set_defaults(handler=cmd_dims)

    solve = commands.add_parser("solve", help="Build and solve a system.")
    add_common(solve)
    add_system(solve)
    solve.add_argument("--n", type=int, default=DEFAULT_ORDER)
    solve.add_argument("--emit", type=str, default=EmitFormat.TEXT.value,
                       choices=[fmt.value for fmt in EmitFormat])
    solve.add_argument("--weighted", action="store_true")
    solve.add_argument("--graph", action="store_true",
                       help="Add the dependence graph and the growth report.")
    solve.set_defaults(handler=cmd_solve)

    guess = commands.add_parser("guess", help="Guess a closed form.")
    add_common(guess)
    add_system(guess)
    mode = guess.add_mutually_exclusive_group()
    mode.add_argument("--rational", action="store_true")
    mode.add_argument("--algebraic", action="store_true")
    guess.add_argument("--n", type=int, default=None,
                       help="Truncation order, by default fitted to the degrees.")
    guess.add_argument("--deg-y", type=int, default=None)
    guess.add_argument("--deg-z", type=int, default=None)
    guess.add_argument("--max-deg-y", type=int, default=4)
    guess.add_argument("--margin", type=int, default=None)
    guess.set_defaults(handler=cmd_guess)

    check = commands.add_parser("check", help="Regularity report.")
    add_common(check)
    check.set_defaults(handler=cmd_check)

    crosscheck = commands.add_parser("crosscheck",
                                     help="Compare oracle and system dimensions.")
    add_common(crosscheck)
    add_system(crosscheck)
    crosscheck.add_argument("--n-oracle", type=int, default=None)
    crosscheck.add_argument("--n-system", type=int, default=None)
    crosscheck.add_argument("--progress", action="store_true")
    crosscheck.set_defaults(handler=cmd_crosscheck)
    return parser

def _log_level(verbosity: int) -> int:
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG

def main(argv: Union[List[str], None] = None) -> int:
    """
    Runs a command and returns its exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code is None else int(err.code)
    logging.basicConfig(level=_log_level(args.verbose),
                        format="%(levelname)s %(name)s: %(message)s")
    out = _Output(args.json)
    try:
        code = args.handler(args, out)
    except (OperadError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    text = out.text()
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code

def run():
    """
    Entry point of the console script.
    """
    sys.exit(main())
