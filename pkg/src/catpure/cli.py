"""Command-line surface.

Subcommands:
  verify-paper  run the full check registry (or a subset) and emit a
                JSON suite report;
  limits        compute one (co)limit from a category descriptor and
                morphism literals, printing the witness or the
                none-certificate;
  qe            validate a morphism class against the mono/epi axiom
                systems, retract closure, or the strong characterization.

Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 cap
exceeded.  Reports are deterministic modulo the wall-time fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import checks as checks_mod
from . import colimits as cl
from . import qe as qe_mod
from .errors import CapExceededError, CatpureError, FormatError, UsageError
from .modcat import category_from_descriptor, morphism_from_literal


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno}") from exc


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# --------------------------------------------------------------------------
# verify-paper

def cmd_verify_paper(args) -> int:
    config = {}
    if args.config:
        config = _load_json(args.config)
        if not isinstance(config, dict):
            raise UsageError("config must be a JSON object")
        unknown = set(config) - {"only", "bounds"}
        if unknown:
            raise UsageError(f"unknown config fields: {sorted(unknown)}")
    only = args.only or config.get("only")
    if only:
        missing = [c for c in only if c not in checks_mod.CHECKS]
        if missing:
            raise UsageError(f"unknown check ids: {missing}")
    bounds = dict(config.get("bounds", {}))
    if args.bound is not None:
        bounds["qe-sweep"] = bounds["retract"] = args.bound
    results = checks_mod.run_suite(only=only, bounds=bounds)
    overall = all(r.passed for r in results)
    report = {
        "tool_version": __version__,
        "config": {"only": sorted(only) if only else None, "bounds": bounds},
        "overall_pass": overall,
        "checks": [r.to_json() for r in results],
    }
    _emit(report, args.out)
    return 0 if overall else 1


# --------------------------------------------------------------------------
# limits

_DIAGRAMS = {
    "pushout": (cl.pushout, 2),
    "pullback": (cl.pullback, 2),
    "equalizer": (cl.equalizer, 2),
    "coequalizer": (cl.coequalizer, 2),
    "product": (cl.product, 2),
    "coproduct": (cl.coproduct, 2),
    "cokernel-pair": (None, 1),
    "kernel-pair": (None, 1),
}


def cmd_limits(args) -> int:
    cat = category_from_descriptor(_load_json(args.category))
    if args.diagram not in _DIAGRAMS:
        raise UsageError(f"unknown diagram kind {args.diagram!r}; "
                         f"choose from {sorted(_DIAGRAMS)}")
    fn, arity = _DIAGRAMS[args.diagram]
    literals = [json.loads(s) for s in args.morphism]
    if len(literals) != arity:
        raise UsageError(f"{args.diagram} needs {arity} morphism literal(s), "
                         f"got {len(literals)}")
    ms = [morphism_from_literal(cat, lit) for lit in literals]
    if args.diagram == "cokernel-pair":
        res = cl.pushout(cat, ms[0], ms[0], bound=args.bound)
    elif args.diagram == "kernel-pair":
        res = cl.pullback(cat, ms[0], ms[0], bound=args.bound)
    elif args.diagram in ("product", "coproduct"):
        res = fn(cat, ms[0].dom if args.diagram == "product" else ms[0].cod,
                 ms[1].dom if args.diagram == "product" else ms[1].cod,
                 bound=args.bound)
    else:
        res = fn(cat, ms[0], ms[1], bound=args.bound)
    _emit(res.to_json(), args.out)
    return 0


# --------------------------------------------------------------------------
# qe

_WHICH = ("mono", "epi", "strong-epi", "retract", "characterization")


def _parse_class_flag(raw: str) -> dict:
    """Accept either inline JSON or the shorthand `kind[:param]`."""
    raw = raw.strip()
    if raw.startswith("{"):
        return json.loads(raw)
    kind, _, param = raw.partition(":")
    desc = {"kind": kind}
    if param:
        key = "q" if kind == "coker-div" else "n"
        try:
            desc[key] = int(param)
        except ValueError as exc:
            raise UsageError(f"class parameter must be an integer: {raw!r}") from exc
    return desc


def cmd_qe(args) -> int:
    cat = category_from_descriptor(_load_json(args.category))
    desc = _parse_class_flag(args.cls)
    cls = qe_mod.class_from_descriptor(desc, cat=cat)
    if args.which not in _WHICH:
        raise UsageError(f"--which must be one of {_WHICH}")
    # The literal all-morphisms class cannot satisfy the epi-side axiom
    # systems (non-epis are never coequalizers of their kernel pairs);
    # in epi-oriented modes "all" means "all epimorphisms".
    if cls.name == "all" and args.which in ("epi", "strong-epi",
                                            "characterization"):
        cls = qe_mod.all_epi_class()
    if cls.name == "all" and args.which == "mono":
        cls = qe_mod.all_mono_class()
    if args.which == "mono":
        rep = qe_mod.validate_qe_mono(cat, cls, bound=args.bound)
        passed, payload = rep.passed, rep.to_json()
    elif args.which == "epi":
        rep = qe_mod.validate_qe_epi(cat, cls, bound=args.bound)
        passed, payload = rep.passed, rep.to_json()
    elif args.which == "strong-epi":
        rep = qe_mod.validate_strong_qe_epi(cat, cls, bound=args.bound)
        passed, payload = rep.passed, rep.to_json()
    elif args.which == "retract":
        rep = qe_mod.check_retract_closed(cat, cls, bound=args.bound)
        passed, payload = rep.closed, rep.to_json()
    else:
        rep = qe_mod.check_strong_characterization(cat, cls, bound=args.bound)
        passed, payload = rep.consistent, rep.to_json()
    _emit(payload, args.out)
    if args.expect is not None:
        return 0 if passed == (args.expect == "pass") else 1
    return 0 if passed else 1


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catpure",
        description="finite-category purity and morphism-class workbench")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", help="run the full check suite")
    p.add_argument("--config", help="JSON config: {only: [...], bounds: {...}}")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--only", action="append", metavar="CHECK-ID",
                   help="run only this check (repeatable)")
    p.add_argument("--bound", type=int, help="override enumeration caps")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count (output order is fixed by check id)")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("limits", help="compute one (co)limit with certificate")
    p.add_argument("--category", required=True,
                   help="path to a category descriptor JSON file")
    p.add_argument("--diagram", required=True,
                   help=f"one of {sorted(_DIAGRAMS)}")
    p.add_argument("--morphism", action="append", default=[],
                   metavar="JSON", help="morphism literal (repeatable)")
    p.add_argument("--bound", type=int, help="search cap")
    p.add_argument("--out", help="write the witness JSON here")
    p.set_defaults(fn=cmd_limits)

    p = sub.add_parser("qe", help="validate a morphism class")
    p.add_argument("--category", required=True,
                   help="path to a category descriptor JSON file")
    p.add_argument("--class", dest="cls", required=True,
                   help="class descriptor JSON or shorthand kind[:param]")
    p.add_argument("--which", required=True, choices=_WHICH)
    p.add_argument("--bound", type=int, help="sweep cap")
    p.add_argument("--expect", choices=("pass", "fail"),
                   help="exit 0 iff the verdict matches this expectation")
    p.add_argument("--out", help="write the report JSON here")
    p.set_defaults(fn=cmd_qe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return 0 if exc.code in (0, None) else 2
    try:
        return args.fn(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, FormatError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CatpureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
