"""Command-line front end.

    hopfkit validate TARGET
    hopfkit report TARGET
    hopfkit double TARGET [--out PATH]
    hopfkit check SUITE TARGET [--seed N] [--max-dim N]

TARGET is a builtin address (``name:params@FIELD``) or a JSON file.  The JSON
report goes to stdout (or ``--out``), a human summary to stderr.  Exit codes:
0 all checks pass, 1 a check failed, 2 undecided, 3 invalid input.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import hopfcore as hc
from .reports import PreconditionFailed, Report, Undecided

EXIT_PASS, EXIT_FAIL, EXIT_UNDECIDED, EXIT_INVALID = 0, 1, 2, 3

SUITES = (
    "radford",
    "factorizable-unimodular",
    "delta-braided",
    "trtr",
    "vitia",
    "spherical",
    "comparison",
    "ler-counterexample",
    "canonical-algebra",
    "exactness",
)


class InputError(Exception):
    pass


def _widest(suite: str, n: int) -> int:
    """Rough width of the largest linear system a suite sets up for a dim-n input."""
    return {
        "factorizable-unimodular": n**4,
        "canonical-algebra": n**3,
        "exactness": n**4,
    }.get(suite, n * n)


def _guard(suite: str, n: int, max_dim: int) -> None:
    w = _widest(suite, n)
    if w > max_dim:
        raise InputError(f"suite {suite!r} on a {n}-dimensional input needs about {w} columns (> --max-dim {max_dim})")


def _load(target: str):
    from .serialize import load_target

    return load_target(target)


def cmd_validate(args) -> Report:
    return hc.validate_hopf(_load_unchecked(args.target))


def _load_unchecked(target: str) -> hc.HopfAlgebra:
    """Load without the validation gate (files only; builtins are always gated)."""
    from .serialize import _is_path, _read_json, hopf_from_dict, load_hopf

    if _is_path(target):
        doc = _read_json(target)
        doc = doc["hopf"] if "hopf" in doc and "R" in doc else doc
        return hopf_from_dict(doc, check=False)
    return load_hopf(target)


def cmd_report(args) -> Report:
    H, _R = _load(args.target)
    F = H.field
    rep = Report("report", fmt=F.format)
    rep.witness("name", H.name or args.target)
    rep.witness("field", repr(F))
    rep.witness("dim", H.dim)
    rep.witness("antipode_order", hc.antipode_order(H))
    rep.witness("left_integral", hc.format_vector(H, hc.left_integrals(H)[0].coeffs))
    rep.witness("right_integral", hc.format_vector(H, hc.right_integrals(H)[0].coeffs))
    rep.witness("alpha", hc.distinguished_functional(H).values())
    rep.witness("a", hc.format_vector(H, hc.distinguished_element(H).coeffs))
    rep.witness("unimodular", hc.is_unimodular(H))
    rep.witness("dual_unimodular", hc.dual_unimodular(H))
    rep.witness("semisimple", hc.is_semisimple(H))
    rad = hc.radford_check(H)
    rep.witness("radford", rad.verdict)
    rep.add("radford", rad.passed)
    return rep


def cmd_double(args) -> Report:
    from .serialize import double_to_dict, dumps

    H, _R = _load(args.target)
    _guard("double", H.dim, args.max_dim)
    D, R = hc.drinfeld_double(H)
    rep = Report("double", fmt=H.field.format)
    rep.witness("dim", D.dim)
    rep.include(hc.r_matrix_check(D, R), "r-matrix")
    rep.add("validate_hopf(D)", hc.validate_hopf(D).passed)
    payload = dumps(double_to_dict(D, R)) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        rep.witness("written", args.out)
        args.out = None  # the report itself goes to stdout
    else:
        rep.witness("double", double_to_dict(D, R))
    return rep


def cmd_check(args) -> Report:
    from . import repkit as rk

    suite, seed = args.suite, args.seed
    if suite == "exactness":
        from .modalg import bimodule_of, exactness_verdict, load_algebra
        from .serialize import _is_path, _read_json, algebra_from_dict

        B = algebra_from_dict(_read_json(args.target)) if _is_path(args.target) else load_algebra(args.target)
        _guard(suite, B.dim, args.max_dim)
        _E, M = bimodule_of(B)
        return exactness_verdict(M, seed)
    H, R = _load(args.target)
    _guard(suite, H.dim, args.max_dim)
    if suite == "radford":
        return hc.radford_check(H)
    if suite == "factorizable-unimodular":
        return hc.factorizable_implies_unimodular_check(H)
    if suite == "delta-braided":
        if R is None:
            raise InputError("delta-braided needs a quasitriangular input: use double(...) or a double JSON file")
        return rk.delta_check_braided(H, R, seed=seed)
    if suite == "trtr":
        return rk.trtr_check(H, seed)
    if suite == "vitia":
        return rk.vitia_monstr_check(H, seed)
    if suite == "spherical":
        return rk.spherical_check(H, rng_seed=seed)
    if suite == "comparison":
        return rk.comparison_check(H, seed)
    if suite == "ler-counterexample":
        return rk.ler_counterexample_check(H)
    if suite == "canonical-algebra":
        from .fusionkit import build_canonical_algebra, build_fusion_data, canonical_double_dual_trace

        fd = build_fusion_data(H, seed)
        A = build_canonical_algebra(fd)
        rep = Report("canonical-algebra", fmt=H.field.format)
        rep.include(fd.report(), "fusion data")
        rep.include(A.report, "canonical algebra")
        tr = canonical_double_dual_trace(fd, H)
        rep.witness("double_dual_trace", str(tr))
        rep.witness("global_dimension", str(fd.global_dimension))
        rep.add("trace of A -> A** equals dim(C)", tr == fd.global_dimension)
        return rep
    raise InputError(f"unknown suite {suite!r}")


def _exit_code(rep: Report) -> int:
    if rep.failures:
        return EXIT_FAIL
    if rep.undecided:
        return EXIT_UNDECIDED
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every randomised routine (default 0)")
    common.add_argument("--max-dim", type=int, default=20000, help="refuse inputs whose widest system exceeds this")
    common.add_argument("--out", default=None, help="write the JSON report (or the double) to this path")
    common.add_argument("--format", choices=("json", "text"), default="json", help="stdout format")
    p = argparse.ArgumentParser(prog="hopfkit", description="Exact checks for finite-dimensional Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, hlp in (("validate", "check the Hopf axioms"), ("report", "integrals, distinguished elements, verdicts"),
                      ("double", "build the Drinfeld double and its R-matrix")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("target")
    sp = sub.add_parser("check", parents=[common], help="run a named check suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("target")
    return p


def main(argv=None) -> int:
    from .builtins import BuiltinError
    from .exactfield import FieldError
    from .serialize import dumps

    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"validate": cmd_validate, "report": cmd_report, "double": cmd_double, "check": cmd_check}
    start = time.perf_counter()
    try:
        rep = handlers[args.command](args)
    except Undecided as exc:
        rep = Report(getattr(args, "suite", args.command))
        rep.undecided = True
        rep.note(str(exc))
    except (InputError, BuiltinError, FieldError, PreconditionFailed, hc.InvalidHopf, OSError, ValueError, KeyError) as exc:
        print(f"hopfkit: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = time.perf_counter() - start
    text = dumps(rep.to_dict()) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text if args.format == "json" else rep.summary() + "\n")
    print(rep.summary(), file=sys.stderr)
    print(f"({elapsed:.2f}s)", file=sys.stderr)
    return _exit_code(rep)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
