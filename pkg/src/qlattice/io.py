"""JSON wire format.

Complex scalars are ``[re, im]`` pairs (plain numbers are read as real),
vectors are lists of scalars and matrices are lists of rows.  Reals are
written with 12 significant digits so reports are byte-stable.

Documents::

    subspace  {"ambient_dim": d, "spanning_vectors": [vector, ...]}
    family    {"ambient_dim": d, "members": [subspace-or-vector-list, ...],
               "labels": [...]}            # members are 0-indexed
    state     {"dim": d, "matrix": matrix}  or  {"dim": d, "state_vector": vector}
    vector    vector  or  {"vector": vector}
"""
from __future__ import annotations

import json
from numbers import Real

import numpy as np

from .exceptions import DimensionMismatch, QLatticeError
from .lattice import Subspace, SubspaceFamily
from .quasiprob import DensityMatrix

SIG_DIGITS = 12


class ParseError(QLatticeError):
    """Input could not be decoded into the expected document shape."""


def _round(x: float) -> float:
    x = float(f"{x:.{SIG_DIGITS}g}")
    return 0.0 if x == 0 else x  # drop negative zero


def encode_complex(z):
    z = complex(z)
    return [_round(z.real), _round(z.imag)]


def encode_vector(v):
    return [encode_complex(z) for z in np.asarray(v).ravel()]


def encode_matrix(m):
    return [encode_vector(row) for row in np.atleast_2d(np.asarray(m))]


def to_jsonable(obj):
    """Recursively convert reports (numpy arrays, floats, tuples) to JSON values."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        if obj.ndim == 1:
            return encode_vector(obj)
        return encode_matrix(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return encode_complex(obj)
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, ensure_ascii=False) + "\n"


def decode_complex(x, where="value"):
    if isinstance(x, bool):
        raise ParseError(f"{where}: expected a number or [re, im], got a boolean")
    if isinstance(x, Real):
        return complex(float(x), 0.0)
    if (
        isinstance(x, list) and len(x) == 2
        and all(isinstance(p, Real) and not isinstance(p, bool) for p in x)
    ):
        return complex(float(x[0]), float(x[1]))
    raise ParseError(f"{where}: expected a number or [re, im], got {x!r}")


def decode_vector(x, where="vector"):
    if isinstance(x, dict):
        if "vector" not in x:
            raise ParseError(f"{where}: object is missing the 'vector' field")
        x = x["vector"]
        where = f"{where}.vector"
    if not isinstance(x, list) or not x:
        raise ParseError(f"{where}: expected a non-empty list of scalars")
    return np.array([decode_complex(z, f"{where}[{i}]") for i, z in enumerate(x)], dtype=complex)


def decode_matrix(x, where="matrix"):
    if not isinstance(x, list) or not x:
        raise ParseError(f"{where}: expected a non-empty list of rows")
    rows = [decode_vector(r, f"{where}[{i}]") for i, r in enumerate(x)]
    if len({len(r) for r in rows}) != 1:
        raise ParseError(f"{where}: rows have different lengths")
    return np.vstack(rows)


def _require(doc, key, where):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if key not in doc:
        raise ParseError(f"{where}: missing field '{key}'")
    return doc[key]


def _ambient(doc, where):
    d = _require(doc, "ambient_dim", where)
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError(f"{where}.ambient_dim: expected a positive integer, got {d!r}")
    return d


def _spanning_vectors(vectors, d, where, tol):
    if not isinstance(vectors, list):
        raise ParseError(f"{where}: expected a list of vectors")
    decoded = [decode_vector(v, f"{where}[{i}]") for i, v in enumerate(vectors)]
    for i, v in enumerate(decoded):
        if len(v) != d:
            raise DimensionMismatch(f"{where}[{i}]: vector has length {len(v)}, ambient_dim is {d}")
    return Subspace.span(decoded, dim=d, tol=tol)


def subspace_from_doc(doc, tol=None, where="subspace") -> Subspace:
    d = _ambient(doc, where)
    vectors = _require(doc, "spanning_vectors", where)
    return _spanning_vectors(vectors, d, f"{where}.spanning_vectors", tol)


def subspace_to_doc(s: Subspace):
    return {
        "ambient_dim": s.ambient_dim,
        "dimension": s.dim,
        "spanning_vectors": [encode_vector(c) for c in s.basis.T],
    }


def family_from_doc(doc, tol=None, where="family") -> SubspaceFamily:
    d = _ambient(doc, where)
    members = _require(doc, "members", where)
    if not isinstance(members, list):
        raise ParseError(f"{where}.members: expected a list")
    subspaces = []
    for i, m in enumerate(members):
        mwhere = f"{where}.members[{i}]"
        if isinstance(m, dict):
            if "ambient_dim" in m and _ambient(m, mwhere) != d:
                raise DimensionMismatch(f"{mwhere}.ambient_dim differs from the family's {d}")
            vectors = _require(m, "spanning_vectors", mwhere)
            subspaces.append(_spanning_vectors(vectors, d, f"{mwhere}.spanning_vectors", tol))
        else:
            subspaces.append(_spanning_vectors(m, d, mwhere, tol))
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(subspaces)):
        raise ParseError(f"{where}.labels: expected one label per member")
    return SubspaceFamily(subspaces, labels=labels)


def family_to_doc(family: SubspaceFamily):
    doc = {
        "ambient_dim": family.ambient_dim,
        "members": [{"spanning_vectors": [encode_vector(c) for c in m.basis.T]} for m in family],
    }
    if family.labels is not None:
        doc["labels"] = list(family.labels)
    return doc


def state_from_doc(doc, tol=None, where="rho") -> DensityMatrix:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if "matrix" in doc:
        m = decode_matrix(doc["matrix"], f"{where}.matrix")
        rho = DensityMatrix(m, tol)
    elif "state_vector" in doc:
        rho = DensityMatrix.pure(decode_vector(doc["state_vector"], f"{where}.state_vector"), tol=tol)
    else:
        raise ParseError(f"{where}: needs a 'matrix' or a 'state_vector' field")
    if "dim" in doc and doc["dim"] != rho.dim:
        raise DimensionMismatch(f"{where}.dim is {doc['dim']!r} but the matrix is {rho.dim}x{rho.dim}")
    return rho


def state_to_doc(rho: DensityMatrix):
    return {"dim": rho.dim, "matrix": encode_matrix(rho.matrix)}


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
