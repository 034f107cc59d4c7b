"""JSON encodings for matrices, Jordan specifications, disc maps and points.

Complex numbers are always ``[re, im]`` pairs. Decoding errors are raised as
:class:`~specball.matrix.InputError` so the command line can map them to its
input-error exit code.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .calculus import Blaschke, DiscMap, Mobius, Series
from .fibers import JordanSpec
from .matrix import InputError, as_matrix


def encode_complex(z) -> list:
    z = complex(z)
    # normalise -0.0 so that equal values serialise identically
    return [z.real + 0.0, z.imag + 0.0]


def decode_complex(obj) -> complex:
    if isinstance(obj, bool):
        raise InputError(f"expected a number or [re, im] pair, got {obj!r}")
    if isinstance(obj, (int, float)):
        z = complex(obj)
    elif isinstance(obj, (list, tuple)) and len(obj) == 2:
        re, im = obj
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in (re, im)):
            raise InputError(f"complex pair must hold two numbers, got {obj!r}")
        z = complex(re, im)
    else:
        raise InputError(f"expected a number or [re, im] pair, got {obj!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError("complex value is not finite")
    return z


def encode_vector(v) -> list:
    return [encode_complex(x) for x in np.asarray(v).reshape(-1)]


def decode_vector(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise InputError("expected a non-empty list of complex values")
    return np.array([decode_complex(x) for x in obj], dtype=complex)


def encode_matrix(A) -> dict:
    A = np.asarray(A, dtype=complex)
    return {"n": int(A.shape[0]), "entries": [encode_vector(row) for row in A]}


def decode_matrix(obj) -> np.ndarray:
    """Decode ``{"n": k, "entries": [[[re, im], ...], ...]}`` (row-major)."""
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError('matrix JSON must be an object with an "entries" field')
    rows = obj["entries"]
    if not isinstance(rows, list) or not rows:
        raise InputError("matrix entries must be a non-empty list of rows")
    if not all(isinstance(r, list) for r in rows):
        raise InputError("matrix rows must be lists")
    if len({len(r) for r in rows}) != 1:
        raise InputError("matrix rows have different lengths")
    M = np.array([decode_vector(r) for r in rows], dtype=complex)
    n = obj.get("n", M.shape[0])
    if not isinstance(n, int) or isinstance(n, bool) or n != M.shape[0]:
        raise InputError(f'"n" = {n!r} does not match {M.shape[0]} rows')
    return as_matrix(M)


def encode_spec(spec: JordanSpec) -> list:
    return [{"eig": encode_complex(lam), "sizes": list(sizes)} for lam, sizes in spec.blocks]


def decode_spec(obj) -> JordanSpec:
    """Decode ``[{"eig": [re, im], "sizes": [k1, k2, ...]}, ...]``."""
    if not isinstance(obj, list) or not obj:
        raise InputError("Jordan spec JSON must be a non-empty list")
    blocks = []
    for item in obj:
        if not isinstance(item, dict) or "eig" not in item or "sizes" not in item:
            raise InputError('each Jordan spec entry needs "eig" and "sizes"')
        sizes = item["sizes"]
        if not isinstance(sizes, list) or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in sizes
        ):
            raise InputError("block sizes must be a list of integers")
        blocks.append((decode_complex(item["eig"]), tuple(sizes)))
    return JordanSpec(tuple(blocks))


def encode_map(f: DiscMap) -> dict:
    if isinstance(f, Mobius):
        return {"type": "mobius", "c": encode_complex(f.c), "theta": float(f.theta)}
    if isinstance(f, Blaschke):
        return {"type": "blaschke", "zeros": encode_vector(f.zeros), "theta": float(f.theta)}
    if isinstance(f, Series):
        return {"type": "series", "coeffs": encode_vector(f.coeffs)}
    raise InputError(f"cannot encode map of type {type(f).__name__}")


def decode_map(obj) -> DiscMap:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InputError('map JSON must be an object with a "type" field')
    kind = obj["type"]
    theta = obj.get("theta", 0.0)
    if isinstance(theta, bool) or not isinstance(theta, (int, float)) or not math.isfinite(theta):
        raise InputError('"theta" must be a finite real number')
    if kind == "mobius":
        return Mobius(decode_complex(obj.get("c", 0.0)), float(theta))
    if kind == "blaschke":
        if "zeros" not in obj:
            raise InputError('blaschke map needs "zeros"')
        return Blaschke(tuple(decode_vector(obj["zeros"])), float(theta))
    if kind == "series":
        if "coeffs" not in obj:
            raise InputError('series map needs "coeffs"')
        return Series(tuple(decode_vector(obj["coeffs"])))
    raise InputError(f"unknown map type {kind!r}")


def decode_point(obj) -> tuple:
    """Decode a point of the symmetrized polydisc.

    Accepts ``{"z": [...]}`` (signed characteristic coefficients) or
    ``{"zetas": [...]}`` (the roots). Returns ``(kind, vector)``.
    """
    if isinstance(obj, dict):
        for key in ("z", "zetas"):
            if key in obj:
                return key, decode_vector(obj[key])
    raise InputError('point JSON must be an object with a "z" or "zetas" field')


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dumps(obj, pretty=False) -> str:
    """Deterministic JSON text (sorted keys) for reports and outputs."""
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False, default=_default)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False, default=_default)


def _default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    if isinstance(o, (np.bool_,)):
        return bool(o)
    if isinstance(o, (complex, np.complexfloating)):
        return encode_complex(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")
