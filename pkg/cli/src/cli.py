"""
Command line front end.

    python main.py data --type D4(3)
    python main.py weyl --type D4(3) --weight 1,0 --out json
    python main.py demazure --type A1(1) --level 1 --weight 2 --graded
    python main.py decompose --type E6(2) --weight 0,0,1,0
    python main.py verify --suite paper --workers 4

Type names are a base letter, the rank and the twist order in parentheses:
A2(2), A2l(2) as A4(2), A6(2), ..., A2l-1(2) as A3(2), A5(2), ..., Dl+1(2) as
D3(2), D4(2), ..., E6(2), D4(3) and the untwisted X_n(1).

JSON output is canonical: keys in a fixed order, arrays sorted, every rational
(levels, pairings, delta coordinates, the invariant form) written as a "p/q"
string with the denominator kept for integers ("1/1"). Grading degrees are
integers and appear as plain decimal keys of "graded_dimension".
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Sequence

from affine.src.affine import AffineData, AffineWeight, affine_data
from cartan.src.cartan import FiniteWeight
from cartan.src.errors import RepresentationError
from characters.src.characters import ANCHORS, GradedCharacter, IrrDecomposition, decompose_g0
from characters.src.formal import FormalCharacter, exact, format_rational
from cli.src.verification import DEFAULT_MAX_COORDINATE, SUITES, format_results, run_verification
from demazure.src.demazure import DemazureResult, demazure_D
from weyl.src.weyl import WeylModuleReport, weyl_char

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors carry the same prefix as ours."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"error: UsageError: {message}\n")


def parse_weight(text: str, data: AffineData) -> FiniteWeight:
    """'1,0,2' -> FiniteWeight for the rank of g0."""
    try:
        coords = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ValueError(f"weight {text!r} is not a comma-separated list of integers")
    if len(coords) != data.rank:
        raise ValueError(f"weight {text!r} has {len(coords)} entries, {data.name} needs {data.rank}")
    return FiniteWeight(coords)


def parse_level(text: str):
    try:
        return exact(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"level {text!r} is not a rational number p/q")


def _graded_dimension(graded: GradedCharacter) -> Dict[str, int]:
    return {str(d): n for d, n in graded.dimension_by_degree().items()}


def _decomposition_rows(decomposition: IrrDecomposition) -> List[Dict]:
    return [{"weight": list(mu.coords), "mult": mult} for mu, mult in decomposition.items()]


def _character_rows(character: FormalCharacter) -> List[Dict]:
    rows = []
    for key, mult in character.sorted_items():
        weight = AffineWeight.from_key(key)
        rows.append(
            {
                "pairings": [format_rational(p) for p in weight.pairings],
                "delta": format_rational(weight.delta),
                "mult": mult,
            }
        )
    return rows


def module_payload(
    data: AffineData,
    lam: FiniteWeight,
    level,
    result: DemazureResult,
    decomposition: IrrDecomposition,
) -> Dict:
    """JSON object for a Demazure or Weyl module, keys in canonical order."""
    return {
        "type": data.name,
        "weight": list(lam.coords),
        "level": format_rational(level),
        "dimension": result.dimension(),
        "graded_dimension": _graded_dimension(result.graded),
        "decomposition": _decomposition_rows(decomposition),
        "character": _character_rows(result.character),
    }


def data_payload(data: AffineData) -> Dict:
    return {
        "type": data.name,
        "g0": data.g0.label,
        "twist_order": data.twist_order,
        "cartan": [list(row) for row in data.cartan],
        "marks": list(data.marks),
        "comarks": list(data.comarks),
        "form": [[format_rational(x) for x in row] for row in data.form],
    }


def render_json(payload: Dict) -> str:
    return json.dumps(payload, indent=2)


def _format_decomposition(decomposition: IrrDecomposition) -> str:
    parts = []
    for mu, mult in decomposition.items():
        name = f"V({mu})"
        parts.append(name if mult == 1 else f"{mult}*{name}")
    return " + ".join(parts) if parts else "0"


def render_module_text(payload: Dict, graded: GradedCharacter | None, decomposition: IrrDecomposition) -> str:
    lines = [
        f"type: {payload['type']}",
        f"weight: {tuple(payload['weight'])}",
        f"level: {payload['level']}",
        f"dimension: {payload['dimension']}",
        f"decomposition: {_format_decomposition(decomposition)}",
    ]
    if graded is not None:
        lines.append(f"graded ({graded.anchor} anchor):")
        for degree in graded.degrees():
            bucket = graded.bucket(degree)
            lines.append(f"  q^{degree}: dimension {bucket.dimension()}")
    return "\n".join(lines)


def render_data_text(payload: Dict) -> str:
    lines = [
        f"type: {payload['type']}",
        f"g0: {payload['g0']}",
        f"twist order: {payload['twist_order']}",
        "cartan:",
    ]
    lines += ["  " + " ".join(f"{x:>3}" for x in row) for row in payload["cartan"]]
    lines.append(f"marks: {tuple(payload['marks'])}")
    lines.append(f"comarks: {tuple(payload['comarks'])}")
    lines.append("form: " + "; ".join(" ".join(row) for row in payload["form"]))
    return "\n".join(lines)


def _cmd_data(args) -> int:
    payload = data_payload(affine_data(args.type))
    print(render_json(payload) if args.out == "json" else render_data_text(payload))
    return EXIT_OK


def _cmd_demazure(args) -> int:
    data = affine_data(args.type)
    lam = parse_weight(args.weight, data)
    level = parse_level(args.level)
    result = demazure_D(data, level, lam, {"anchor": args.anchor})
    decomposition = decompose_g0(result.restricted(), data.g0)
    payload = module_payload(data, lam, level, result, decomposition)
    _emit_module(args, payload, result.graded, decomposition)
    return EXIT_OK


def _cmd_weyl(args) -> int:
    data = affine_data(args.type)
    lam = parse_weight(args.weight, data)
    report: WeylModuleReport = weyl_char(data, lam, {"anchor": args.anchor})
    payload = module_payload(data, lam, report.level, report.demazure, report.decomposition)
    _emit_module(args, payload, report.graded_character, report.decomposition)
    ident = report.identification
    if args.out != "json" and ident.get("predicted_index") is not None:
        print(f"identified with V_w(Lambda_{ident['predicted_index']}), w = {ident['element']}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    data = affine_data(args.type)
    lam = parse_weight(args.weight, data)
    if args.level is None:
        decomposition = weyl_char(data, lam).decomposition
    else:
        decomposition = decompose_g0(demazure_D(data, parse_level(args.level), lam).restricted(), data.g0)
    if args.out == "json":
        print(render_json({"type": data.name, "weight": list(lam.coords), "decomposition": _decomposition_rows(decomposition)}))
    else:
        print(_format_decomposition(decomposition))
        print(f"dimension: {decomposition.dimension(data.g0)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    options = {"workers": args.workers, "max_coordinate": args.max_coordinate}
    results = run_verification(args.suite, options)
    if args.out == "json":
        rows = [{"index": r.index, "check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        print(render_json({"suite": args.suite, "results": rows}))
    else:
        print(format_results(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def _emit_module(args, payload: Dict, graded: GradedCharacter, decomposition: IrrDecomposition) -> None:
    if args.out == "json":
        print(render_json(payload))
    else:
        print(render_module_text(payload, graded if args.graded else None, decomposition))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="twisted-demazure",
        description="Demazure characters and graded Weyl modules of twisted affine algebras",
        epilog="type names: A2(2), A4(2), A3(2), D4(2), E6(2), D4(3), A1(1), ...",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def module_command(name: str, help_text: str, needs_level: bool):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--type", required=True, help="affine type such as D4(3)")
        sub.add_argument("--weight", required=True, help="comma-separated m_1,...,m_l")
        if needs_level:
            sub.add_argument("--level", required=True, help="positive rational k, e.g. 1 or 1/2")
        sub.add_argument("--graded", action="store_true", help="print the character by q-degree")
        sub.add_argument(
            "--anchor",
            choices=ANCHORS,
            default="cyclic",
            help="degree 0 at the cyclic vector's layer (cyclic) or at the top delta layer (top)",
        )
        sub.add_argument("--out", choices=("text", "json"), default="text")
        return sub

    data = commands.add_parser("data", help="Cartan matrix, marks, comarks and g0")
    data.add_argument("--type", required=True)
    data.add_argument("--out", choices=("text", "json"), default="text")
    data.set_defaults(handler=_cmd_data)

    module_command("demazure", "character of D(k, lambda)", True).set_defaults(handler=_cmd_demazure)
    module_command("weyl", "graded Weyl module W(lambda)", False).set_defaults(handler=_cmd_weyl)

    decompose = commands.add_parser("decompose", help="g0-decomposition of W(lambda) or D(k, lambda)")
    decompose.add_argument("--type", required=True)
    decompose.add_argument("--weight", required=True)
    decompose.add_argument("--level", default=None, help="omit for the Weyl module")
    decompose.add_argument("--out", choices=("text", "json"), default="text")
    decompose.set_defaults(handler=_cmd_decompose)

    verify = commands.add_parser("verify", help="run a regression suite")
    verify.add_argument("--suite", choices=SUITES, default="paper")
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument(
        "--max-coordinate", dest="max_coordinate", type=int, default=DEFAULT_MAX_COORDINATE
    )
    verify.add_argument("--out", choices=("text", "json"), default="text")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (RepresentationError, ValueError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
