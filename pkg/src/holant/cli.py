"""Command-line surface for batch evaluation, classification, and demos.

Subcommands: eval, classify, gadget, interpolate-demo, solve, selftest.
All output is deterministic; --format json emits machine-readable documents
whose scalar strings parse back into the same values.

Exit codes: 0 success, 1 internal failure (including failed selftest),
2 parse error, 3 size guard, 4 dimension mismatch, 5 interpolation found
only a finite or degenerate gadget group.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .classify import classify
from .gadgets import (
    GadgetExprError,
    GadgetSpec,
    anti_gadget_product,
    eval_gadget_expr,
    finite_order_up_to_scalar,
    resolve_gadget,
    transition_matrix,
)
from .grids import (
    BinarySignature,
    DirectedMultiGraph,
    GridFormatError,
    Signature,
    SignatureGrid,
    SizeGuardError,
    eval_holant,
    eval_holant_by_elimination,
    eval_partition,
    pendant_grid,
)
from .interpolation import (
    FiniteGroupError,
    ProjectiveSetError,
    group_lemma_interpolate,
)
from .linalg import DimensionMismatch, Matrix
from .scalars import ScalarParseError, format_scalar, parse_scalar, scalars_equal
from .selftest import run_all
from .solvers import solve_dispatch

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_SIZE_GUARD = 3
EXIT_DIMENSION = 4
EXIT_FINITE_GROUP = 5

_PARSE_ERRORS = (
    ScalarParseError,
    GridFormatError,
    GadgetExprError,
    KeyError,
    OSError,
    json.JSONDecodeError,
)


class CliError(Exception):
    """Input problem mapped to a fixed exit code."""

    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CliConfig:
    """Run-wide switches shared by every subcommand."""

    backend: str = "exact"
    tolerance: Optional[float] = None
    allow_large: bool = False
    format: str = "human"

    @property
    def is_json(self) -> bool:
        return self.format == "json"


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    backend = args.backend or os.environ.get("HOLANT_BACKEND", "exact")
    if backend not in ("exact", "float"):
        raise CliError(f"unknown backend {backend!r}; use exact or float")
    return CliConfig(
        backend=backend,
        tolerance=args.tolerance,
        allow_large=getattr(args, "allow_large", False),
        format=args.format,
    )


def _parse_signature(text: str, config: CliConfig) -> BinarySignature:
    f = BinarySignature.parse(text)
    return f.to_float() if config.backend == "float" else f


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_graph(path: str) -> DirectedMultiGraph:
    return DirectedMultiGraph.from_json(_load_json(path))


def _load_grid(path: str) -> SignatureGrid:
    return SignatureGrid.from_json(_load_json(path))


def _load_gadget_spec(path: str) -> GadgetSpec:
    obj = _load_json(path)
    try:
        return GadgetSpec(
            name=str(obj.get("name", path)),
            vertices=int(obj["vertices"]),
            edges=tuple((int(t), int(h)) for t, h in obj["edges"]),
            leading=tuple((str(d), int(v)) for d, v in obj.get("leading", [])),
            trailing=tuple(int(v) for v in obj.get("trailing", [])),
            expr=obj.get("expr"),
            pendants=tuple((int(v), str(lbl)) for v, lbl in obj.get("pendants", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad gadget file {path}: {exc}") from exc


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(document) -> None:
    _emit(json.dumps(document, indent=2, sort_keys=True))


def _matrix_rows(m: Matrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m.data]


def _matrix_text(m: Matrix) -> str:
    return "\n".join("[" + ", ".join(row) + "]" for row in _matrix_rows(m))


# -- eval -----------------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    if bool(args.grid) == bool(args.graph):
        raise CliError("eval needs exactly one of --graph or --grid")
    if args.graph:
        if not args.sig:
            raise CliError("--graph also needs --sig")
        graph = _load_graph(args.graph)
        f = _parse_signature(args.sig, config)
        value = eval_partition(graph, f, allow_large=config.allow_large)
    else:
        grid = _load_grid(args.grid)
        value = eval_holant(grid, allow_large=config.allow_large)
    if config.is_json:
        _emit_json({"value": format_scalar(value)})
    else:
        _emit(format_scalar(value))
    return EXIT_OK


# -- classify ---------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    f = _parse_signature(args.sig, config)
    report = classify(f, tol=config.tolerance)
    doc = report.to_json()
    if config.is_json:
        _emit_json(doc)
        return EXIT_OK
    lines = [
        "classes: " + (", ".join(str(c) for c in doc["classes"]) or "none"),
        f"general: {doc['general']}",
        f"planar: {doc['planar']}",
    ]
    wit = doc["witness"]
    if wit is None:
        lines.append("witness: none (tractable)")
    elif wit.get("certificate") is None:
        lines.append(f"witness: {wit['lemma']} (cited: {wit['citation']})")
    else:
        lines.append(f"witness: {wit['lemma']} ({wit['kind']})")
        for t in wit["transforms"]:
            lines.append(f"  after {t}")
        for row in wit["certificate"]:
            lines.append("  [" + ", ".join(row) + "]")
    if doc["citations"]:
        lines.append("citations: " + ", ".join(doc["citations"]))
    _emit("\n".join(lines))
    return EXIT_OK


# -- gadget -----------------------------------------------------------------------


def _gadget_matrix(args: argparse.Namespace, f: BinarySignature) -> tuple[str, Matrix]:
    sources = [s for s in (args.name, args.expr, args.gadget_file) if s]
    if args.anti:
        if sources:
            raise CliError("--anti cannot be combined with another gadget source")
        left, right = args.anti
        product = anti_gadget_product(
            transition_matrix(left, f), transition_matrix(right, f)
        )
        return f"anti({left}, {right})", product
    if len(sources) != 1:
        raise CliError("gadget needs exactly one of --name, --expr, --gadget-file, --anti")
    if args.name:
        return args.name, transition_matrix(args.name, f)
    if args.expr:
        return args.expr, eval_gadget_expr(args.expr, f)
    spec = _load_gadget_spec(args.gadget_file)
    return spec.name, transition_matrix(spec, f)


def cmd_gadget(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    f = _parse_signature(args.sig, config)
    if args.action == "anti" and not args.anti:
        raise CliError("--action anti needs --anti LEFT RIGHT")
    # the source options pick the matrix; --action says what to do with it
    action = args.action
    label, matrix = _gadget_matrix(args, f)
    if action in ("matrix", "anti"):
        if config.is_json:
            _emit_json({"gadget": label, "matrix": _matrix_rows(matrix)})
        else:
            _emit(_matrix_text(matrix))
        return EXIT_OK
    if action == "charpoly":
        coeffs = [format_scalar(c) for c in matrix.char_poly()]
        if config.is_json:
            _emit_json({"gadget": label, "charpoly": coeffs})
        else:
            _emit("charpoly: " + ", ".join(coeffs))
        return EXIT_OK
    result = finite_order_up_to_scalar(matrix)
    order = result.order if result.is_finite else "infinite"
    if config.is_json:
        _emit_json(
            {
                "gadget": label,
                "order": result.order,
                "certified_infinite": result.certified_infinite,
                "reason": result.reason,
            }
        )
    else:
        _emit(f"order: {order} ({result.reason})")
    return EXIT_OK


# -- interpolate-demo ----------------------------------------------------------------


def cmd_interpolate_demo(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    graph = _load_graph(args.graph)
    f = _parse_signature(args.sig, config)
    pendant = Signature.unary(parse_scalar(args.x), parse_scalar(args.y))
    if config.backend == "float":
        pendant = pendant.to_float()
    occ = args.occurrences
    if occ < 1:
        raise CliError("--occurrences must be at least 1")
    grid = pendant_grid(graph, f, list(range((occ + 1) // 2)), occ, pendant)
    run = group_lemma_interpolate(None, ("m4", "m5"), None, grid)
    direct = eval_holant_by_elimination(grid)
    equal = scalars_equal(run.value, direct, config.tolerance)
    doc = {
        "value": format_scalar(run.value),
        "direct": format_scalar(direct),
        "equal": equal,
        "trace": run.to_json(),
    }
    if config.is_json:
        _emit_json(doc)
    else:
        _emit(
            f"interpolated: {doc['value']}\n"
            f"direct: {doc['direct']}\n"
            f"equal: {'yes' if equal else 'NO'}\n"
            "trace: " + json.dumps(doc["trace"], sort_keys=True)
        )
    return EXIT_OK if equal else EXIT_FAILURE


# -- solve -----------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    graph = _load_graph(args.graph)
    f = _parse_signature(args.sig, config)
    result = solve_dispatch(graph, f, allow_large=config.allow_large)
    doc = {
        "route": result.route,
        "classes": list(result.classes),
        "value": None if result.value is None else format_scalar(result.value),
        "notes": list(result.notes),
    }
    if config.is_json:
        _emit_json(doc)
    else:
        lines = [
            "route: " + result.route,
            "classes: " + (", ".join(str(c) for c in result.classes) or "none"),
            "value: " + ("none" if doc["value"] is None else doc["value"]),
        ]
        lines.extend("note: " + n for n in result.notes)
        _emit("\n".join(lines))
    return EXIT_OK if result.value is not None else EXIT_SIZE_GUARD


# -- selftest ---------------------------------------------------------------------------


def cmd_selftest(args: argparse.Namespace) -> int:
    ok = run_all(sys.stdout, include_timing=args.timing)
    return EXIT_OK if ok else EXIT_FAILURE


# -- parser -----------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--backend", choices=("exact", "float"), default=None)
    sub.add_argument("--tolerance", type=float, default=None)
    sub.add_argument("--format", choices=("human", "json"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holant",
        description="Partition functions, dichotomy classification, and "
        "gadget calculus for binary spin systems on directed graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate a partition function or grid")
    p_eval.add_argument("--graph")
    p_eval.add_argument("--grid")
    p_eval.add_argument("--sig")
    p_eval.add_argument("--allow-large", action="store_true")
    _add_common(p_eval)
    p_eval.set_defaults(handler=cmd_eval)

    p_cls = subs.add_parser("classify", help="dichotomy verdict with witness")
    p_cls.add_argument("--sig", required=True)
    _add_common(p_cls)
    p_cls.set_defaults(handler=cmd_classify)

    p_gad = subs.add_parser("gadget", help="transition-matrix calculus")
    p_gad.add_argument("--name")
    p_gad.add_argument("--expr")
    p_gad.add_argument("--gadget-file")
    p_gad.add_argument("--anti", nargs=2, metavar=("LEFT", "RIGHT"))
    p_gad.add_argument("--sig", required=True)
    p_gad.add_argument(
        "--action", choices=("matrix", "charpoly", "order", "anti"), default="matrix"
    )
    _add_common(p_gad)
    p_gad.set_defaults(handler=cmd_gadget)

    p_int = subs.add_parser(
        "interpolate-demo", help="recover a grid value without evaluating its pendant"
    )
    p_int.add_argument("--graph", required=True)
    p_int.add_argument("--sig", required=True)
    p_int.add_argument("--x", required=True)
    p_int.add_argument("--y", required=True)
    p_int.add_argument("--occurrences", type=int, default=2)
    _add_common(p_int)
    p_int.set_defaults(handler=cmd_interpolate_demo)

    p_sol = subs.add_parser("solve", help="route to a tractable solver when one exists")
    p_sol.add_argument("--graph", required=True)
    p_sol.add_argument("--sig", required=True)
    p_sol.add_argument("--allow-large", action="store_true")
    _add_common(p_sol)
    p_sol.set_defaults(handler=cmd_solve)

    p_self = subs.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--timing", action="store_true")
    _add_common(p_self)
    p_self.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (FiniteGroupError, ProjectiveSetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FINITE_GROUP
    except _PARSE_ERRORS as exc:
        message = str(exc) or exc.__class__.__name__
        print(f"error: {message}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        # degenerate signatures surface here from the interpolation demo
        code = EXIT_FINITE_GROUP if args.command == "interpolate-demo" else EXIT_PARSE
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
