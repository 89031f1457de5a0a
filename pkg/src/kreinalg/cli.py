"""Command line front end.

Subcommands map onto the library engines: ``indices``, ``decompose``,
``factorize``, ``congruent``, ``phillips``, ``property-suite``.  Input
matrices come from JSON files; ``--machine`` switches the report to a
single JSON document with a schema version field.

Exit codes: 0 success, 1 property violation or numerical failure,
2 input or validation error, 3 mathematical precondition failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bkfact import bk_factorize, bk_verify
from .decomp import decompose, projections, validate
from .densela import Tolerance, spectral_norm
from .errors import (DimensionMismatch, InputError, KreinError,
                     NumericalError, PreconditionError)
from .hermdex import build_congruence, hermitian_indices, is_congruent, \
    transport
from .krein import (KOperator, KreinSpace, hilbert_space, make_space,
                    make_subspace, space_indices)
from .phillips import graph_rep, phillips_extend
from .serial import (dump_json, load_json, matrix_from_obj, matrix_to_obj,
                     problem_from_obj)
from .suite import run_property_suite

__all__ = ["main", "main_entry", "build_parser"]

SCHEMA_VERSION = 1


def _merge_tolerance(args, file_tol: Tolerance | None) -> Tolerance:
    # flag > file > default
    base = file_tol if file_tol is not None else Tolerance()
    rank = args.tol_rank if args.tol_rank is not None else base.rank_tol
    res = args.tol_res if args.tol_res is not None else base.residual_tol
    return Tolerance(rank_tol=rank, residual_tol=res)


def _load_space_flag(args, n: int, tol: Tolerance) -> KreinSpace:
    J = matrix_from_obj(load_json(args.space), "space symmetry")
    if J.shape != (n, n):
        raise DimensionMismatch(
            f"symmetry is {J.shape[0]}x{J.shape[1]}, operator needs {n}x{n}")
    return make_space(J, tol)


def _load_operator(args) -> tuple[KreinSpace, KOperator, Tolerance]:
    obj = load_json(args.input)
    if isinstance(obj, dict) and "operator" in obj:
        J, M, file_tol = problem_from_obj(obj)
    elif isinstance(obj, dict) and "rows" in obj:
        J, M, file_tol = None, matrix_from_obj(obj, "operator"), None
    else:
        raise InputError(
            "input must be a problem file (operator key) or a matrix file")
    tol = _merge_tolerance(args, file_tol)
    n = M.shape[0]
    if args.space is not None:
        space = _load_space_flag(args, n, tol)
    elif J is not None:
        space = make_space(J, tol)
    else:
        space = hilbert_space(n)
    return space, KOperator(space, space, M), tol


def _emit(report: dict, args, render) -> None:
    if args.machine:
        print(dump_json(report))
    else:
        render(report)


def _print_indices_line(label: str, triple) -> None:
    print(f"{label}: h+ = {triple[0]}, h- = {triple[1]}, h0 = {triple[2]}")


def cmd_indices(args) -> int:
    space, C, tol = _load_operator(args)
    idx = hermitian_indices(C, tol)
    ip, im = space_indices(space, tol)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "indices",
        "indices": list(idx),
        "space": {"dim": space.dim, "ind_plus": ip, "ind_minus": im},
    }

    def render(rep):
        _print_indices_line("operator indices", rep["indices"])
        s = rep["space"]
        print(f"space signature: ind+ = {s['ind_plus']}, "
              f"ind- = {s['ind_minus']} (dim {s['dim']})")

    _emit(report, args, render)
    return 0


def cmd_decompose(args) -> int:
    space, C, tol = _load_operator(args)
    dec = decompose(C, tol)
    rep = validate(C, dec, tol)
    P = projections(C, dec, tol)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "bases": {
            "plus": matrix_to_obj(dec.M_plus.basis),
            "minus": matrix_to_obj(dec.M_minus.basis),
            "zero": matrix_to_obj(dec.M_zero.basis),
        },
        "projections": {
            "plus": matrix_to_obj(P.Q_plus.matrix),
            "minus": matrix_to_obj(P.Q_minus.matrix),
            "zero": matrix_to_obj(P.Q_zero.matrix),
        },
        "validation": rep,
    }

    def render(r):
        d = r["validation"]["dims"]
        print(f"part dimensions: plus {d[0]}, minus {d[1]}, zero {d[2]}")
        for key in ("sign_conditions", "pairwise_sums_direct",
                    "pairwise_c_orthogonal", "dimensions_match_indices",
                    "direct_sum"):
            print(f"  {key}: {'ok' if r['validation'][key] else 'FAILED'}")
        print(f"validation passed: {r['validation']['passed']}")

    _emit(report, args, render)
    return 0 if rep["passed"] else 1


def cmd_factorize(args) -> int:
    space, C, tol = _load_operator(args)
    F = bk_factorize(C, tol)
    rep = bk_verify(C, F, tol)
    ip, im = space_indices(F.A_space, tol) if F.A_space.dim else (0, 0)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "factorize",
        "factor_space": {
            "dim": F.A_space.dim,
            "ind_plus": ip,
            "ind_minus": im,
            "J": matrix_to_obj(F.A_space.J),
        },
        "factor": matrix_to_obj(F.A.matrix),
        "verify": rep,
    }
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        _write_json(os.path.join(args.out, "factor_space.json"),
                    matrix_to_obj(F.A_space.J))
        _write_json(os.path.join(args.out, "factor.json"),
                    matrix_to_obj(F.A.matrix))
        _write_json(os.path.join(args.out, "verify.json"), rep)

    def render(r):
        fs = r["factor_space"]
        print(f"factor space: dim {fs['dim']} "
              f"(ind+ = {fs['ind_plus']}, ind- = {fs['ind_minus']})")
        print(f"product residual: {r['verify']['product_residual']:.3e}")
        print(f"injective: {r['verify']['injective']}, "
              f"index equality: {r['verify']['index_equality']}")
        print(f"verified: {r['verify']['passed']}")

    _emit(report, args, render)
    return 0 if rep["passed"] else 1


def _load_pair_operand(path, args, tol_holder: list) -> tuple[KreinSpace, KOperator]:
    obj = load_json(path)
    if isinstance(obj, dict) and "operator" in obj:
        J, M, file_tol = problem_from_obj(obj)
        if file_tol is not None:
            tol_holder.append(file_tol)
    elif isinstance(obj, dict) and "rows" in obj:
        J, M = None, matrix_from_obj(obj, "operator")
    else:
        raise InputError(f"{path}: not a problem or matrix file")
    n = M.shape[0]
    tol = _merge_tolerance(args, tol_holder[0] if tol_holder else None)
    if args.space is not None:
        space = _load_space_flag(args, n, tol)
    elif J is not None:
        space = make_space(J, tol)
    else:
        space = hilbert_space(n)
    return space, KOperator(space, space, M)


def cmd_congruent(args) -> int:
    holder: list = []
    space_a, A = _load_pair_operand(args.input_a, args, holder)
    space_b, B = _load_pair_operand(args.input_b, args, holder)
    tol = _merge_tolerance(args, holder[0] if holder else None)
    verdict = is_congruent(A, B, tol)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "congruent",
        "indices_a": list(hermitian_indices(A, tol)),
        "indices_b": list(hermitian_indices(B, tol)),
        "congruent": bool(verdict),
    }
    if verdict:
        X = build_congruence(A, B, tol)
        resid = spectral_norm(A.matrix - transport(B, X, tol).matrix)
        scale = max(spectral_norm(A.matrix), spectral_norm(B.matrix))
        report["X"] = matrix_to_obj(X.X.matrix)
        report["residual"] = float(resid / scale if scale > 0 else resid)

    def render(r):
        _print_indices_line("indices of A", r["indices_a"])
        _print_indices_line("indices of B", r["indices_b"])
        if r["congruent"]:
            print(f"congruent: yes (residual {r['residual']:.3e})")
        else:
            print("congruent: no")

    _emit(report, args, render)
    return 0


def cmd_phillips(args) -> int:
    tol = _merge_tolerance(args, None)
    Bp = matrix_from_obj(load_json(args.plus), "nonnegative basis")
    Bm = matrix_from_obj(load_json(args.minus), "nonpositive basis")
    n = Bp.shape[0]
    if Bm.shape[0] != n:
        raise DimensionMismatch(
            f"basis row counts differ: {n} vs {Bm.shape[0]}")
    if args.space is not None:
        space = _load_space_flag(args, n, tol)
    else:
        space = hilbert_space(n)
    Sp = make_subspace(space, Bp, tol)
    Sm = make_subspace(space, Bm, tol)
    gp = graph_rep(Sp, "plus", tol)
    gm = graph_rep(Sm, "minus", tol)
    ext = phillips_extend(gp, gm, tol)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "phillips",
        "contraction": matrix_to_obj(ext.G),
        "contraction_norm": float(spectral_norm(ext.G)),
        "maximal_plus": matrix_to_obj(ext.G_tilde_plus.basis),
        "maximal_minus": matrix_to_obj(ext.G_tilde_minus.basis),
        "dims": {"plus": ext.G_tilde_plus.dim, "minus": ext.G_tilde_minus.dim},
    }
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        _write_json(os.path.join(args.out, "contraction.json"),
                    matrix_to_obj(ext.G))
        _write_json(os.path.join(args.out, "maximal_plus.json"),
                    matrix_to_obj(ext.G_tilde_plus.basis))
        _write_json(os.path.join(args.out, "maximal_minus.json"),
                    matrix_to_obj(ext.G_tilde_minus.basis))

    def render(r):
        print(f"contraction norm: {r['contraction_norm']:.6f}")
        print(f"maximal pair dimensions: plus {r['dims']['plus']}, "
              f"minus {r['dims']['minus']}")

    _emit(report, args, render)
    return 0


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("KREIN_SEED")
    if env is None:
        return 0
    try:
        value = int(env, 10)
    except ValueError:
        raise InputError(f"KREIN_SEED is not a decimal integer: {env!r}")
    if not 0 <= value < 2 ** 64:
        raise InputError("KREIN_SEED must fit in an unsigned 64-bit integer")
    return value


def cmd_property_suite(args) -> int:
    tol = _merge_tolerance(args, None)
    seed = _resolve_seed(args)
    count = args.count if args.count is not None else None
    report = run_property_suite(seed, count, args.dim_max, tol)
    report["schema_version"] = SCHEMA_VERSION
    report["command"] = "property-suite"

    def render(r):
        for b in r["batteries"]:
            status = "pass" if b["passed"] else "FAIL"
            print(f"{b['name']}: {b['cases']} cases, "
                  f"{b['failures']} failures [{status}]")
        print(f"suite passed: {r['passed']} (seed {r['seed']})")

    _emit(report, args, render)
    return 0 if report["passed"] else 1


def _write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(obj))
        fh.write("\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--space", metavar="FILE",
                   help="JSON matrix file with the fundamental symmetry J "
                        "(default: identity)")
    p.add_argument("--tol-rank", type=float, default=None, metavar="T",
                   help="rank decision tolerance")
    p.add_argument("--tol-res", type=float, default=None, metavar="T",
                   help="residual tolerance")
    p.add_argument("--machine", action="store_true",
                   help="emit one JSON document instead of text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="krein",
        description="Inertia, congruence, and factorization tools for "
                    "selfadjoint operators on indefinite inner product spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, blurb in (
            ("indices", cmd_indices,
             "hermitian index triple of a selfadjoint operator"),
            ("decompose", cmd_decompose,
             "orthogonal decomposition into sign-definite parts"),
            ("factorize", cmd_factorize,
             "factor C = A A* over a space matching the indices")):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--input", "-i", required=True, metavar="FILE",
                       help="problem or matrix JSON file")
        if name == "factorize":
            p.add_argument("--out", metavar="DIR",
                           help="directory for factor output files")
        _add_common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("congruent", help="decide congruence of two operators")
    p.add_argument("input_a", metavar="FILE_A")
    p.add_argument("input_b", metavar="FILE_B")
    _add_common(p)
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser(
        "phillips",
        help="extend an orthogonal semidefinite pair to a maximal pair")
    p.add_argument("plus", metavar="PLUS_BASIS",
                   help="matrix file, columns span the nonnegative subspace")
    p.add_argument("minus", metavar="MINUS_BASIS",
                   help="matrix file, columns span the nonpositive subspace")
    p.add_argument("--out", metavar="DIR",
                   help="directory for contraction and basis files")
    _add_common(p)
    p.set_defaults(func=cmd_phillips)

    p = sub.add_parser("property-suite",
                       help="run the randomized invariant batteries")
    p.add_argument("--seed", type=int, default=None,
                   help="master seed (default: KREIN_SEED env, then 0)")
    p.add_argument("--count", type=int, default=None,
                   help="cases per battery (default: per-battery sizes)")
    p.add_argument("--dim-max", type=int, default=8,
                   help="largest random dimension (default 8)")
    _add_common(p)
    p.set_defaults(func=cmd_property_suite)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KreinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
