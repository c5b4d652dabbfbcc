import argparse
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from core.command_runner import run
from core.initialization import initialize_run, load_configuration
from core.report_handler import error_document, write_document
from models.documents import COMMANDS
from models.errors import Coxwl2Error, SchemaError


def _names(raw: Optional[str]) -> Optional[List[str]]:
    if raw is None:
        return None
    return [s.strip() for s in raw.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="Coxeter matrix (or complex) JSON document")
    common.add_argument("-q", "--weights", help="weights JSON document")
    common.add_argument("-o", "--output", help="write the JSON document here instead of stdout")
    common.add_argument("--max-order", type=int)
    common.add_argument("--max-ball", type=int)
    common.add_argument("--precision-bits", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--json", action="store_true", help="JSON output (the default and only format)")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="coxwl2", description="Coxeter groups, growth series and weighted L2-Betti numbers")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{" + ",".join(COMMANDS) + "}")

    p = sub.add_parser("classify", parents=[common], help="type of W_T and the spherical subsets")
    p.add_argument("-T", "--subset")
    sub.add_parser("nerve", parents=[common], help="nerve L and its topology")
    p = sub.add_parser("growth", parents=[common], help="growth series W(q)")
    p.add_argument("--at", help="weights JSON document to evaluate at")
    sub.add_parser("region", parents=[common], help="position of q against the convergence region")
    sub.add_parser("betti", parents=[common], help="weighted L2-Betti vector")
    sub.add_parser("verify", parents=[common], help="which vanishing theorem applies")
    p = sub.add_parser("census", parents=[common], help="Lanner diagrams")
    p.add_argument("--max-label", type=int, default=5)
    p.add_argument("--rank", type=int, default=4, choices=(3, 4))
    p = sub.add_parser("ruin", parents=[common], help="(U, T)-ruin of the Davis complex")
    p.add_argument("-U", "--universe")
    p.add_argument("-T", "--subset")
    p.add_argument("--radius", type=int)
    p.add_argument("--homology", action="store_true")
    sub.add_parser("homology", parents=[common], help="integral homology of a complex document")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, object]:
    values = vars(args).copy()
    values.pop("json", None)
    for key in ("subset", "universe"):
        if key in values:
            values[key] = _names(values[key])
    return values


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_configuration()
        runtime = initialize_run(config, _overrides(args))
    except ValidationError as ve:
        write_document(error_document(args.command, SchemaError(str(ve))), args.output)
        return 1
    except Coxwl2Error as exc:
        write_document(error_document(args.command, exc), args.output)
        return 1

    code, document = run(runtime["run"])
    try:
        write_document(document, runtime["run"].output)
    except Coxwl2Error as exc:
        runtime["logger"].error("❌ %s", exc.message)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
