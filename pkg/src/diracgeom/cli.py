"""Command-line front end.

Every subcommand reads one JSON document (``--input PATH``, ``--input -`` for
stdin, or ``--json TEXT``), runs one validator and prints a report that
echoes the input.  Exit codes: 0 when the predicate holds or every trial
passes, 1 when it fails, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable

from . import dirac_core as dc
from . import io_json as io
from .dirac_maps import PREDICATES, DiracMapProblem, is_abm_dirac, pushforward
from .exact_linalg import Subspace
from .group_data import (
    GroupReport,
    check_dirac_group_datum,
    check_dual_dirac_group_datum,
    check_gc_group_datum,
    check_twisted_dual_dirac_group_datum,
    gc_lagrangian,
    invariant_cocycle_space,
)
from .lie_core import integrability_formula, invariant_courant_bracket, invariant_integrable, schouten_quotient
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DIRAC_CHOICES = ("M", "M2p", "M2pp", "piU", "Eeps")
DUAL_CHOICES = ("dual", "dual_Eeps")


class Outcome:
    def __init__(self, ok: bool, report: dict):
        self.ok = ok
        self.report = report


def _jsonable(x: Any) -> Any:
    """Turn Matrices and Scalars inside report values into the JSON input forms."""
    from .exact_linalg import Matrix, Scalar

    if isinstance(x, Matrix):
        return io.enc_matrix(x)
    if isinstance(x, Scalar):
        return io.enc_scalar(x)
    if isinstance(x, Subspace):
        return io.enc_subspace(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------


def cmd_structure_decompose(doc, args) -> Outcome:
    d = io.load_structure_doc(doc)
    return Outcome(True, {
        "structure": io.enc_structure(d),
        "E_eps": io.enc_E_eps(dc.decompose_E_eps(d)),
        "pi_U": io.enc_pi_U(dc.decompose_pi_U(d)),
    })


def cmd_structure_btransform(doc, args) -> Outcome:
    d, B = io.load_btransform(doc)
    out = dc.b_transform(d, B)
    return Outcome(True, {"result": io.enc_structure(out), "E_eps": io.enc_E_eps(dc.decompose_E_eps(out))})


def cmd_structure_gc_endo(doc, args) -> Outcome:
    d = io.load_structure_doc(doc)
    if not dc.is_generalized_complex(d):
        return Outcome(False, {"generalized_complex": False, "J": None})
    return Outcome(True, {"generalized_complex": True, "J": io.enc_matrix(dc.gc_endomorphism(d))})


def cmd_structure_check(doc, args) -> Outcome:
    s = io.validate(doc, "structure")["structure"]
    if s["kind"] == "basis":
        # checked here rather than in the loader so a non-Lagrangian span reports false, not malformed
        n = s["n"]
        vs = io.matrix(s["vectors"], "structure/vectors", (None, 2 * n))
        sub = Subspace(2 * n, vs.row_list())
        if not dc.is_lagrangian(sub, n):
            return Outcome(False, {"lagrangian": False, "dim": sub.dim, "expected_dim": n})
        d = dc.LinearDirac(n, sub)
    else:
        d = io.structure(s)
    return Outcome(True, {
        "lagrangian": True,
        "real": dc.is_real(d),
        "generalized_complex": dc.is_generalized_complex(d),
        "structure": io.enc_structure(d),
    })


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------


def _predicate_table(p: DiracMapProblem, names) -> dict[str, bool]:
    return {k: PREDICATES[k](p) for k in names}


def _chosen_predicate(doc, args, choices, default) -> str:
    # the flag wins over a "predicate" key in the document
    if args.predicate:
        field, pred = "--predicate", args.predicate
    else:
        field, pred = "predicate", doc.get("predicate", default) if isinstance(doc, dict) else default
    if pred not in choices:
        raise io.InputError(field, f"expected one of {', '.join(choices)}")
    return pred


def cmd_map_dirac(doc, args) -> Outcome:
    p = io.load_map(doc)
    pred = _chosen_predicate(doc, args, DIRAC_CHOICES, "M")
    ok = PREDICATES[pred](p)
    return Outcome(ok, {"predicate": pred, "value": ok, "all_predicates": _predicate_table(p, DIRAC_CHOICES)})


def cmd_map_dual_dirac(doc, args) -> Outcome:
    p = io.load_map(doc)
    pred = _chosen_predicate(doc, args, DUAL_CHOICES, "dual")
    ok = PREDICATES[pred](p)
    return Outcome(ok, {"predicate": pred, "value": ok, "all_predicates": _predicate_table(p, DUAL_CHOICES)})


def cmd_map_abm(doc, args) -> Outcome:
    f, B, d1, d2 = io.load_abm(doc)
    ok = is_abm_dirac(f, B, d1, d2)
    pushed = pushforward(f, dc.b_transform(d1, B))
    return Outcome(ok, {"value": ok, "pushforward": io.enc_structure(pushed)})


# ---------------------------------------------------------------------------
# group data
# ---------------------------------------------------------------------------


def _group(report: GroupReport) -> Outcome:
    return Outcome(report.verdict, _jsonable(report.to_json()) | {"failed": report.failed()})


def cmd_group_dirac(doc, args) -> Outcome:
    return _group(check_dirac_group_datum(io.load_dirac_datum(doc)))


def cmd_group_dual(doc, args) -> Outcome:
    return _group(check_dual_dirac_group_datum(io.load_dual_datum(doc)))


def cmd_group_gc(doc, args) -> Outcome:
    datum = io.load_gc_datum(doc)
    out = _group(check_gc_group_datum(datum))
    if out.ok:
        out.report["lagrangian"] = io.enc_structure(gc_lagrangian(datum.k))
    return out


def cmd_group_twisted(doc, args) -> Outcome:
    return _group(check_twisted_dual_dirac_group_datum(io.load_twisted_datum(doc)))


def cmd_group_cocycle_space(doc, args) -> Outcome:
    g, E = io.load_cocycle_space(doc)
    try:
        dim, basis = invariant_cocycle_space(g, E)
    except ValueError as exc:
        raise io.InputError("E", str(exc)) from None
    return Outcome(True, {"dimension": dim, "basis": [io.enc_matrix(b) for b in basis]})


# ---------------------------------------------------------------------------
# Lie algebra computations
# ---------------------------------------------------------------------------


def cmd_lie_integrable(doc, args) -> Outcome:
    g, d, H = io.load_lie_integrable(doc)
    ok = invariant_integrable(g, d, H)
    return Outcome(ok, {"integrable": ok, "formula": integrability_formula(g, d, H)})


def cmd_lie_bracket(doc, args) -> Outcome:
    g, a, b, H = io.load_lie_bracket(doc)
    c = invariant_courant_bracket(g, a, b, H)
    return Outcome(True, {"x": io.enc_vector(c.x), "xi": io.enc_vector(c.xi)})


def cmd_lie_schouten(doc, args) -> Outcome:
    g, k, P, Q, comp = io.load_lie_schouten(doc)
    try:
        t = schouten_quotient(g, k, P, Q, comp)
    except ValueError as exc:
        raise io.InputError("k", str(exc)) from None
    return Outcome(True, {"bracket": io.enc_table3(t)})


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


COMMANDS: dict[str, dict[str, Callable]] = {
    "structure": {
        "decompose": cmd_structure_decompose,
        "btransform": cmd_structure_btransform,
        "gc-endo": cmd_structure_gc_endo,
        "check": cmd_structure_check,
    },
    "map": {"dirac": cmd_map_dirac, "dual-dirac": cmd_map_dual_dirac, "abm": cmd_map_abm},
    "group": {
        "dirac-datum": cmd_group_dirac,
        "dual-dirac-datum": cmd_group_dual,
        "gc-datum": cmd_group_gc,
        "twisted-datum": cmd_group_twisted,
        "cocycle-space": cmd_group_cocycle_space,
    },
    "lie": {"integrable": cmd_lie_integrable, "bracket": cmd_lie_bracket, "schouten": cmd_lie_schouten},
    # short alias used in docs
    "check": {"map-dirac": cmd_map_dirac},
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise io.InputError("<command line>", message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="add elapsed_ms to the report")

    parser = _Parser(prog="diracgeom", description="Exact checks for linear Dirac geometry.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for group, cmds in COMMANDS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="command", required=True, parser_class=_Parser)
        for name in cmds:
            sp = sub.add_parser(name, parents=[common])
            src = sp.add_mutually_exclusive_group(required=True)
            src.add_argument("--input", metavar="PATH", help="JSON file, or - for stdin")
            src.add_argument("--json", metavar="TEXT", help="inline JSON document")
            if group in ("map", "check"):
                sp.add_argument("--predicate", choices=DIRAC_CHOICES + DUAL_CHOICES)
    sp = groups.add_parser("suite")
    sub = sp.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in SUITES:
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--trials", type=int, default=None, help="override per-check trial counts")
        s.add_argument("--max-dim", type=int, default=3)
    return parser


def _read_input(args) -> Any:
    if args.json is not None:
        text = args.json
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise io.InputError("--input", str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.InputError("<json>", str(exc)) from None


def _text(report: dict, indent: str = "") -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, dict) and v:
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{indent}{k}:")
            for x in v:
                lines.append(f"{indent}  - " + json.dumps(x, sort_keys=True))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v)}")
    return "\n".join(lines)


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "text":
        stream.write(_text(report) + "\n")
    else:
        stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except io.InputError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    fmt = args.format
    start = time.perf_counter()
    try:
        if args.group == "suite":
            for flag in ("trials", "max_dim"):
                v = getattr(args, flag)
                if v is not None and v < 1:
                    raise io.InputError(f"--{flag.replace('_', '-')}", "must be at least 1")
            if args.seed < 0:
                raise io.InputError("--seed", "must be non-negative")
            res = run_suite(args.command, args.seed, args.trials, args.max_dim)
            report = {"config": {"seed": args.seed, "trials": args.trials, "max_dim": args.max_dim}, **res.to_json()}
            ok = res.passed
        else:
            doc = _read_input(args)
            outcome = COMMANDS[args.group][args.command](doc, args)
            report = {"command": f"{args.group} {args.command}", "input": doc, "result": outcome.report}
            report["verdict"] = outcome.ok
            ok = outcome.ok
    except io.InputError as exc:
        stderr.write(f"error: {exc}\n")
        _emit({"error": {"field": exc.field, "message": exc.message}}, fmt, stdout)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        # anything the loaders did not attribute to a field
        stderr.write(f"error: {exc}\n")
        _emit({"error": {"field": "", "message": str(exc)}}, fmt, stdout)
        return EXIT_INPUT
    if args.timing:
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(report, fmt, stdout)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
