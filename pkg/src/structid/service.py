"""Stateless analysis service: one request in, one result out.

run_analysis chains the pipeline stages (validate, edit, build transfer
matrix, process, invariants, renaming, equations, generic solve,
symbolic solve, classify, render), captures the first failure with its
stage name, and reports per stage wall-clock timings. The same inputs
always produce byte-identical canonical JSON; timings are reported but
excluded from the canonical payload so two runs of the same request
compare equal.

The CLI front end exposes the pipeline as `structid analyze` and the
HTTP server as `structid serve`. Exit codes: 0 for a completed analysis
(any of SGI, SLI, SU), 2 when the verdict is "unknown", 1 for input or
usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .algebra import format_poly, format_ratfunc
from .classify import Classification, classify
from .invariants import (
    InvariantSet,
    NoParameterInformation,
    collect_invariants,
    identifiability_eqn_list,
    theta_prime_creation,
)
from .report import build_graph, render_report
from .solver import (
    SolutionSet,
    apply_positivity_filter,
    merge_solutions,
    solve_generic,
    solve_symbolic,
)
from .structures import (
    DesignEdit,
    StructureError,
    StructureSpec,
    apply_edits,
    parse_structure,
    serialize_structure,
    validate_compartmental,
)
from .transfer import build_transfer_matrix, process_matrix

DEFAULT_SYMBOLIC_BUDGET = 60.0


@dataclass(frozen=True)
class AnalysisRequest:
    """Everything a single analysis depends on.

    structure is the JSON text (or an already parsed dict) of the
    structure file format. edits are textual design edits such as
    "C[1][1]=1" or "x0[2]=0", applied in order. layout_hint is an opaque
    string echoed back to the caller (the web UI stores its layout
    choice there); it never influences the analysis.
    """

    structure: Union[str, dict]
    edits: tuple[str, ...] = ()
    canonical_form: bool = True
    naming_mode: str = "caps"
    seeds: Optional[tuple[int, ...]] = None
    positivity_filter: bool = False
    symbolic_timeout: Optional[float] = DEFAULT_SYMBOLIC_BUDGET
    layout_hint: Optional[str] = None


@dataclass
class AnalysisResult:
    ok: bool
    verdict: Optional[str]
    payload: dict
    timings: dict = field(default_factory=dict)
    error: Optional[dict] = None

    def to_dict(self) -> dict:
        out = dict(self.payload)
        out["ok"] = self.ok
        out["verdict"] = self.verdict
        out["error"] = self.error
        out["timings_ms"] = {k: round(v * 1000.0, 3) for k, v in self.timings.items()}
        return out

    def canonical_dict(self) -> dict:
        out = self.to_dict()
        del out["timings_ms"]  # wall clock varies run to run
        return out

    def canonical_json(self) -> str:
        return json.dumps(
            self.canonical_dict(), indent=2, sort_keys=True, ensure_ascii=False
        ) + "\n"


class _StageFailure(Exception):
    def __init__(self, stage: str, cause: Exception) -> None:
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


class _Timer:
    def __init__(self, sink: dict, name: str) -> None:
        self.sink = sink
        self.name = name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        self.sink[self.name] = time.perf_counter() - self.start
        if exc is not None and not isinstance(exc, _StageFailure):
            raise _StageFailure(self.name, exc) from exc
        return False


def _structure_dict(spec: StructureSpec) -> dict:
    return json.loads(serialize_structure(spec))


def _solution_dict(sol: SolutionSet) -> dict:
    branches = None
    if sol.branches is not None:
        branches = [
            {
                "assignments": [
                    [sym.name, format_ratfunc(expr)] for sym, expr in b.assignments
                ],
                "free": [s.name for s in b.free],
            }
            for b in sol.branches
        ]
    positivity = None
    if sol.positivity is not None:
        positivity = {
            "branches_total": sol.positivity.branches_total,
            "branches_nonnegative": sol.positivity.branches_nonnegative,
            "text": sol.positivity.text,
        }
    return {
        "generic_dimension": None if sol.indeterminate else sol.generic_dimension,
        "generic_count": sol.generic_count,
        "free": [s.name for s in sol.free_unknowns],
        "seeds": list(sol.seeds_used),
        "branches": branches,
        "certificates": [format_poly(c) for c in sol.relation_certificates],
        "symbolic_status": sol.symbolic_status,
        "basis": (
            None
            if sol.symbolic_basis is None
            else [format_poly(p) for p in sol.symbolic_basis]
        ),
        "indeterminate": sol.indeterminate,
        "disagreement": sol.disagreement,
        "positivity": positivity,
    }


def _classification_dict(cls: Classification) -> dict:
    return {
        "verdict": cls.verdict,
        "generic_dimension": cls.generic_dimension,
        "generic_count": cls.generic_count,
        "free_parameters": list(cls.free_parameters),
        "per_parameter": dict(cls.per_parameter),
        "positivity": cls.positivity,
    }


def run_analysis(request: AnalysisRequest) -> AnalysisResult:
    """Run the full pipeline; never raises for analysis level problems."""
    timings: dict = {}
    payload: dict = {"layout_hint": request.layout_hint, "edits": list(request.edits)}
    try:
        return _run_stages(request, payload, timings)
    except _StageFailure as failure:
        cause = failure.cause
        return AnalysisResult(
            ok=False,
            verdict=None,
            payload=payload,
            timings=timings,
            error={
                "stage": failure.stage,
                "type": type(cause).__name__,
                "message": str(cause),
            },
        )


def _run_stages(
    request: AnalysisRequest, payload: dict, timings: dict
) -> AnalysisResult:
    with _Timer(timings, "parse"):
        raw = request.structure
        text = json.dumps(raw) if isinstance(raw, dict) else raw
        spec = parse_structure(text)
        payload["structure"] = _structure_dict(spec)
    with _Timer(timings, "edits"):
        if request.edits:
            parsed = [DesignEdit.parse(e, spec.table) for e in request.edits]
            spec = apply_edits(spec, parsed)
        payload["structure_effective"] = _structure_dict(spec)
    with _Timer(timings, "validate"):
        if spec.compartmental:
            report = validate_compartmental(spec)
            payload["validation"] = {
                "violations": [
                    {
                        "constraint": v.constraint,
                        "row": v.row,
                        "col": v.col,
                        "detail": v.detail,
                    }
                    for v in report.violations
                ],
                "checked_numerically": list(report.checked_numerically),
            }
            if not report.passed:
                first = report.violations[0]
                raise StructureError(
                    "structure declared compartmental but "
                    f"{first.constraint}({first.row},{first.col}): {first.detail}"
                )
        else:
            payload["validation"] = None
    with _Timer(timings, "build"):
        tm = build_transfer_matrix(spec)
    with _Timer(timings, "process"):
        tm = process_matrix(tm, canonical_form=request.canonical_form)
        entry_order = (tm.s,) + tuple(tm.sort_order)
        payload["transfer"] = {
            "canonical": tm.canonical,
            "entries": [
                {
                    "num": format_poly(e.num, entry_order),
                    "den": format_poly(e.den, entry_order),
                }
                for e in tm.entries
            ],
        }
    no_information = False
    with _Timer(timings, "invariants"):
        try:
            inv = collect_invariants(tm)
        except NoParameterInformation:
            no_information = True
            inv = None
        payload["invariants"] = {
            "no_parameter_information": no_information,
            "values": (
                []
                if inv is None
                else [format_poly(p, spec.symbol_order()) for p in inv.invariants]
            ),
            "origins": (
                []
                if inv is None
                else [
                    {"entry": o.entry, "part": o.part, "power": o.power}
                    for o in inv.origins
                ]
            ),
        }
    with _Timer(timings, "renaming"):
        renaming = theta_prime_creation(spec.theta, mode=request.naming_mode)
        payload["renaming"] = {
            "mode": renaming.mode,
            "pairs": [[t, p] for t, p in renaming.pairs()],
        }
    with _Timer(timings, "equations"):
        if no_information:
            eqs = identifiability_eqn_list(InvariantSet((), ()), renaming)
        else:
            eqs = identifiability_eqn_list(inv, renaming)
        payload["equations"] = {
            "total": len(eqs.equations),
            "identically_zero": sum(1 for z in eqs.identically_zero if z),
        }
    with _Timer(timings, "solve-generic"):
        generic = solve_generic(eqs, seeds=request.seeds)
    with _Timer(timings, "solve-symbolic"):
        symbolic = solve_symbolic(eqs, timeout=request.symbolic_timeout)
        merged = merge_solutions(generic, symbolic)
        if request.positivity_filter:
            merged = apply_positivity_filter(merged, eqs)
        payload["solution"] = _solution_dict(merged)
    with _Timer(timings, "classify"):
        cls = classify(merged, renaming)
        payload["classification"] = _classification_dict(cls)
    with _Timer(timings, "render"):
        graph = build_graph(spec)
        payload["graph"] = graph.as_dict()
        payload["dot"] = graph.to_dot()
        payload["report"] = render_report(renaming, merged, cls, graph)
    return AnalysisResult(
        ok=True,
        verdict=cls.verdict,
        payload=payload,
        timings=timings,
    )


def _build_cli() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="structid",
        description="Structural identifiability analysis of LTI state space structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", help="analyze a structure file")
    analyze.add_argument(
        "--structure", required=True, help="path to a structure JSON file, or - for stdin"
    )
    analyze.add_argument(
        "--edit",
        action="append",
        default=[],
        metavar="EDIT",
        help='design edit such as "C[1][1]=1" or "x0[2]=0" (repeatable)',
    )
    analyze.add_argument(
        "--no-canonical",
        action="store_true",
        help="skip normalizing transfer denominators to leading coefficient 1",
    )
    analyze.add_argument(
        "--naming",
        choices=("caps", "underscore"),
        default="caps",
        help="replacement parameter naming scheme",
    )
    analyze.add_argument(
        "--seed",
        action="append",
        type=int,
        default=[],
        metavar="N",
        help="seed for the generic evaluation points (repeatable)",
    )
    analyze.add_argument(
        "--positivity",
        action="store_true",
        help="annotate branches with a non-negativity check",
    )
    analyze.add_argument(
        "--timeout",
        type=float,
        default=DEFAULT_SYMBOLIC_BUDGET,
        help="symbolic solve budget in seconds",
    )
    analyze.add_argument("--out", help="write output to this file instead of stdout")
    analyze.add_argument(
        "--format",
        choices=("text", "structured", "graph"),
        default="text",
        help="text report, canonical JSON, or DOT graph",
    )
    serve = sub.add_parser("serve", help="run the HTTP API server")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("STRUCTID_PORT", "8000")),
    )
    return parser


def _cli_analyze(args: argparse.Namespace) -> int:
    if args.structure == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.structure, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read {args.structure}: {exc}", file=sys.stderr)
            return 1
    request = AnalysisRequest(
        structure=text,
        edits=tuple(args.edit),
        canonical_form=not args.no_canonical,
        naming_mode=args.naming,
        seeds=tuple(args.seed) or None,
        positivity_filter=args.positivity,
        symbolic_timeout=args.timeout,
    )
    result = run_analysis(request)
    if not result.ok:
        err = result.error or {}
        print(
            f"error in stage {err.get('stage', '?')}: {err.get('message', '')}",
            file=sys.stderr,
        )
        return 1
    if args.format == "structured":
        output = result.canonical_json()
    elif args.format == "graph":
        output = result.payload["dot"]
    else:
        output = result.payload["report"]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return 2 if result.verdict == "unknown" else 0


def _cli_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_cli()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return _cli_analyze(args)
    return _cli_serve(args)


if __name__ == "__main__":
    sys.exit(cli_main())
