"""Command-line driver.

Subcommands:
  validate    check structure-constant files against the algebra axioms
  cohomology  dimension table of (current) Lie algebra cohomology
  verify      run a verification suite and emit a text + JSON report
  current     write the current Lie algebra of g by s as an algebra file

Exit codes: 0 all checks pass, 1 verification failure, 2 input or validation
error, 3 collapse hypothesis failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path
from random import Random

from . import io_json
from .algebras import InvalidStructure, catalog, catalog_rep, validate_assoc, validate_lie
from .cohomology import CurrentCohomology, HypothesisFailed, cohomology
from .currents import current_algebra
from .io_json import FileFormatError
from .lifts import (
    COMPOSITION_CASES,
    LiftContext,
    eye_base,
    homotopy_chain_map,
    verify_chain_map_lift,
    verify_component_commutation,
    verify_composition_preservation,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_HYPOTHESIS_FAIL = 3

SUITES = ("prop12", "functor", "complexmap", "alpha", "ses", "semisimple", "all")

_PARAM_NAME = re.compile(r"^([a-z_]+?)(\d+)$")


class InputError(Exception):
    pass


def _resolve_lie(spec: str):
    if Path(spec).is_file():
        obj = io_json.load_algebra(spec)
        if not hasattr(obj, "bracket"):
            raise InputError(f"{spec} is not a Lie algebra file")
        return obj
    try:
        if spec in ("sl2", "solvable2", "heisenberg3"):
            return catalog(spec)
        m = _PARAM_NAME.match(spec)
        if m and m.group(1) == "abelian":
            return catalog("abelian", int(m.group(2)))
    except KeyError:
        pass
    raise InputError(f"unknown Lie algebra {spec!r}")


def _resolve_assoc(spec: str):
    if Path(spec).is_file():
        obj = io_json.load_algebra(spec)
        if not hasattr(obj, "product"):
            raise InputError(f"{spec} is not an associative algebra file")
        return obj
    if spec in ("trivial_field", "field"):
        return catalog("trivial_field")
    if spec in ("dual_numbers", "dual2", "d2"):
        return catalog("dual_numbers")
    if spec == "split2":
        return catalog("split2")
    m = _PARAM_NAME.match(spec)
    if m and m.group(1) in ("truncated_poly", "poly"):
        return catalog("truncated_poly", int(m.group(2)))
    raise InputError(f"unknown coefficient algebra {spec!r}")


def _resolve_rep(spec: str, g):
    if Path(spec).is_file():
        return io_json.load_representation(spec, g)
    try:
        return catalog_rep(spec, g)
    except KeyError as exc:
        raise InputError(str(exc)) from exc


def _emit_json(doc: dict, path: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- validate -----------------------------------------------------------------

def cmd_validate(args) -> int:
    all_ok = True
    for path in args.paths:
        try:
            doc = io_json.load_document(path)
            kind = doc["kind"]
            if kind == "lie":
                report = validate_lie(io_json.lie_from_dict(doc))
            elif kind == "assoc":
                s = io_json.assoc_from_dict(doc)
                report = validate_assoc(s)
                if report.ok and s.unit_index != 0:
                    print(f"{path}: warning: unit is basis vector "
                          f"{s.unit_index}; it will be normalized to the front")
            elif kind == "representation":
                algebra = _resolve_lie(args.g) if args.g else None
                if algebra is None:
                    raise InputError(
                        "validating a representation file needs --g"
                    )
                rep = io_json.rep_from_dict(doc, algebra)
                from .algebras import validate_representation

                report = validate_representation(rep)
            else:
                raise FileFormatError(f"{path}: unknown kind {kind!r}")
        except (FileFormatError, InputError, InvalidStructure) as exc:
            print(f"{path}: error: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        print(f"{path}: {report.summary()}")
        all_ok = all_ok and report.ok
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


# -- cohomology ---------------------------------------------------------------

def cmd_cohomology(args) -> int:
    g = _resolve_lie(args.g)
    rep = _resolve_rep(args.rep, g)
    doc = {
        "command": "cohomology",
        "inputs": {"g": io_json.digest(g), "rep": io_json.digest(rep)},
    }
    start = time.perf_counter()
    if args.s:
        s = _resolve_assoc(args.s)
        doc["inputs"]["s"] = io_json.digest(s)
        engine = CurrentCohomology(g, s, rep)
        max_degree = args.max_degree if args.max_degree is not None \
            else engine.max_degree
        dims = [engine.group(p).dim for p in range(max_degree + 1)]
        label = f"H({g.name}(x){s.name}; {rep.name}(x){s.name})"
    else:
        max_degree = args.max_degree if args.max_degree is not None else g.dim
        dims = [cohomology(rep, p).dim for p in range(max_degree + 1)]
        label = f"H({g.name}; {rep.name})"
    doc["dimensions"] = dims
    doc["timing"] = time.perf_counter() - start
    print(label)
    print("  p   : " + "  ".join(f"{p}" for p in range(len(dims))))
    print("  dim : " + "  ".join(f"{d}" for d in dims))
    if args.json:
        _emit_json(doc, args.json)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def _suite_functor(engine: CurrentCohomology, seed: int, trials: int) -> dict:
    ctx = engine.ctx
    dims = (engine.dv, engine.dv, engine.dv)
    out = {}
    for case in COMPOSITION_CASES:
        rep = verify_composition_preservation(
            ctx, case, trials, seed=seed, degrees=(1, 2), module_dims=dims
        )
        out[case] = rep
    return out


def _suite_complexmap(engine: CurrentCohomology, seed: int, trials: int) -> dict:
    rng = Random(seed)
    out = {}
    for scalar in (0, 1, 2):
        fam = {
            p: scalar * eye_base(engine.base.space(p).dim)
            for p in range(engine.g.dim + 1)
        }
        out[f"scalar={scalar}"] = verify_chain_map_lift(engine.setup, fam)
    for t in range(trials):
        fam = homotopy_chain_map(engine.rep, rng, scalar=rng.randint(-2, 2))
        out[f"homotopy trial={t}"] = verify_chain_map_lift(engine.setup, fam)
    return out


def _suite_alpha(engine: CurrentCohomology, seed: int) -> dict:
    out = {
        "diagram": engine.verify_alpha_diagram(),
        "cocycle components": engine.verify_zeta_psi(),
    }
    ident = {
        p: eye_base(engine.base.space(p).dim) for p in range(engine.g.dim + 1)
    }
    out["naturality identity"] = engine.verify_naturality(ident)
    doubled = {p: 2 * m for p, m in ident.items()}
    out["naturality scalar"] = engine.verify_naturality(doubled)
    rng = Random(seed)
    hom = homotopy_chain_map(engine.rep, rng, scalar=0)
    out["naturality null-homotopic"] = engine.verify_naturality(hom)
    return out


def cmd_verify(args) -> int:
    g = _resolve_lie(args.g)
    s = _resolve_assoc(args.s)
    rep = _resolve_rep(args.rep, g)
    doc = {
        "command": "verify",
        "suite": args.suite,
        "seed": args.seed,
        "trials": args.trials,
        "inputs": {
            "g": io_json.digest(g),
            "s": io_json.digest(s),
            "rep": io_json.digest(rep),
        },
        "suites": {},
    }
    engine = CurrentCohomology(g, s, rep)
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    start = time.perf_counter()
    exit_code = EXIT_OK
    for suite in suites:
        try:
            if suite == "prop12":
                reports = {"component commutation":
                           verify_component_commutation(engine.setup)}
            elif suite == "functor":
                reports = _suite_functor(engine, args.seed, args.trials)
            elif suite == "complexmap":
                reports = _suite_complexmap(engine, args.seed, args.trials)
            elif suite == "alpha":
                reports = _suite_alpha(engine, args.seed)
            elif suite == "ses":
                ses = engine.verify_ses()
                print(ses.summary())
                doc["suites"]["ses"] = ses.to_dict()
                if not ses.ok:
                    exit_code = max(exit_code, EXIT_VERIFY_FAIL)
                continue
            elif suite == "semisimple":
                reports = {"collapse": engine.verify_vanishing_collapse()}
        except HypothesisFailed as exc:
            print(f"hypothesis failure: {exc}", file=sys.stderr)
            doc["suites"][suite] = {"hypothesis_failed": str(exc)}
            doc["passed"] = False
            doc["timing"] = time.perf_counter() - start
            if args.json:
                _emit_json(doc, args.json)
            return EXIT_HYPOTHESIS_FAIL
        suite_doc = {}
        for name, rep_obj in reports.items():
            print(rep_obj.summary())
            suite_doc[name] = rep_obj.to_dict()
            if not rep_obj.ok:
                exit_code = max(exit_code, EXIT_VERIFY_FAIL)
        doc["suites"][suite] = suite_doc
    doc["passed"] = exit_code == EXIT_OK
    doc["timing"] = time.perf_counter() - start
    if args.json:
        _emit_json(doc, args.json)
    return exit_code


# -- current ------------------------------------------------------------------

def cmd_current(args) -> int:
    g = _resolve_lie(args.g)
    s = _resolve_assoc(args.s)
    gs = current_algebra(g, s)
    io_json.save(gs, args.output)
    print(f"wrote {args.output}: dim {gs.dim} Lie algebra {gs.name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="currentcoh",
        description="Exact cohomology of current Lie algebras.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="validate structure-constant files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--g", help="Lie algebra for representation files")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="dimension table of cohomology")
    p.add_argument("--g", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--s")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--json", help="write a JSON report to this path")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--g", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--json", help="write a JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("current", help="write the current Lie algebra g (x) s")
    p.add_argument("--g", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_current)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FileFormatError, InvalidStructure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
