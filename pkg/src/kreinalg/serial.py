"""JSON serialization for matrices and problem files.

Complex entries travel as [re, im] pairs, row-major, so files are
locale-proof and round-trip bit-exactly.  A problem file carries an
operator, an optional space (J defaults to the identity, Hilbert mode),
and optional tolerance overrides.
"""

from __future__ import annotations

import json

import numpy as np

from .densela import Tolerance
from .errors import InputError

__all__ = [
    "matrix_to_obj",
    "matrix_from_obj",
    "problem_from_obj",
    "load_json",
    "dump_json",
]


def matrix_to_obj(M) -> dict:
    A = np.asarray(M, dtype=complex)
    data = [[float(x.real), float(x.imag)] for x in A.reshape(-1)]
    return {"rows": int(A.shape[0]), "cols": int(A.shape[1]), "data": data}


def matrix_from_obj(obj, what: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise InputError(f"{what}: expected an object with rows/cols/data")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise InputError(f"{what}: missing field {exc}") from exc
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 0 or cols < 0:
        raise InputError(f"{what}: rows/cols must be nonnegative integers")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise InputError(f"{what}: data length must be rows*cols = {rows * cols}")
    out = np.zeros(rows * cols, dtype=complex)
    for k, pair in enumerate(data):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)):
            raise InputError(f"{what}: entry {k} is not a [re, im] pair")
        out[k] = complex(pair[0], pair[1])
    if rows * cols and not np.isfinite(out).all():
        raise InputError(f"{what}: entries must be finite")
    return out.reshape(rows, cols)


def problem_from_obj(obj) -> tuple[np.ndarray | None, np.ndarray, Tolerance]:
    """Parse a problem object into (J or None, operator matrix, tolerance)."""
    if not isinstance(obj, dict) or "operator" not in obj:
        raise InputError("problem file must be an object with an 'operator' field")
    op = matrix_from_obj(obj["operator"], "operator")
    if op.shape[0] != op.shape[1]:
        raise InputError("operator must be square")
    J = None
    if obj.get("space") is not None:
        space = obj["space"]
        if not isinstance(space, dict) or "J" not in space:
            raise InputError("space must be an object with a 'J' matrix")
        J = matrix_from_obj(space["J"], "space.J")
        if J.shape[0] != J.shape[1]:
            raise InputError("space.J must be square")
        if J.shape[0] != op.shape[0]:
            raise InputError(
                f"space.J dimension {J.shape[0]} does not match operator "
                f"dimension {op.shape[0]}")
    tol_obj = obj.get("tolerance") or {}
    if not isinstance(tol_obj, dict):
        raise InputError("tolerance must be an object")
    unknown = set(tol_obj) - {"rank_tol", "residual_tol"}
    if unknown:
        raise InputError(f"unknown tolerance fields: {sorted(unknown)}")
    tol = Tolerance(rank_tol=float(tol_obj.get("rank_tol", Tolerance.rank_tol)),
                    residual_tol=float(tol_obj.get("residual_tol", Tolerance.residual_tol)))
    return J, op, tol


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def dump_json(obj) -> str:
    """Canonical single-document rendering: sorted keys, no whitespace drift."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
