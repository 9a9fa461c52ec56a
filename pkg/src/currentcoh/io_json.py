"""JSON structure-constant files: load, validate, save, digest.

Rationals are serialized as "num/den" strings, never floats, so round-trips
are bit-exact.  Exports are canonical (sorted indices, upper-triangular half
only), which makes export -> load -> export byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import warnings
from fractions import Fraction
from pathlib import Path

from .algebras import (
    CommAssocAlgebra,
    LieAlgebra,
    Representation,
    normalize_unit,
)
from .linalg import zeros


class FileFormatError(ValueError):
    """The file does not parse as a structure-constant file."""


def _coeff_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _parse_coeff(s) -> Fraction | int:
    try:
        f = Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(f"bad rational {s!r}") from exc
    return int(f) if f.denominator == 1 else f


def _constants_to_json(table, dim: int, upper_only: bool, strict: bool) -> list:
    """Canonical constants list; ``strict`` keeps i < j, else i <= j."""
    out = []
    for i in range(dim):
        start = i + 1 if strict else i
        for j in range(start, dim):
            terms = table[i][j]
            if not terms:
                continue
            out.append(
                {
                    "i": i,
                    "j": j,
                    "terms": [
                        {"k": k, "coeff": _coeff_str(terms[k])}
                        for k in sorted(terms)
                    ],
                }
            )
    return out


def lie_to_dict(g: LieAlgebra) -> dict:
    return {
        "kind": "lie",
        "name": g.name,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "constants": _constants_to_json(g.table, g.dim, upper_only=True, strict=True),
    }


def assoc_to_dict(s: CommAssocAlgebra) -> dict:
    return {
        "kind": "assoc",
        "name": s.name,
        "dim": s.dim,
        "basis": list(s.basis_names),
        "unit_index": s.unit_index,
        "constants": _constants_to_json(s.table, s.dim, upper_only=True, strict=False),
    }


def rep_to_dict(rep: Representation) -> dict:
    return {
        "kind": "representation",
        "name": rep.name,
        "algebra": rep.algebra.name,
        "module_dim": rep.module_dim,
        "matrices": [
            [[_coeff_str(mat[i, j]) for j in range(rep.module_dim)]
             for i in range(rep.module_dim)]
            for mat in rep.matrices
        ],
    }


def _read_constants(doc: dict, dim: int) -> dict:
    entries: dict[tuple[int, int], dict] = {}
    for item in doc.get("constants", []):
        i, j = item["i"], item["j"]
        if not (isinstance(i, int) and isinstance(j, int)):
            raise FileFormatError("constant indices must be integers")
        if not (0 <= i < dim and 0 <= j < dim):
            raise FileFormatError(f"constant index ({i},{j}) out of range")
        if (i, j) in entries:
            raise FileFormatError(f"duplicate constants entry for ({i},{j})")
        terms = {}
        for t in item.get("terms", []):
            k = t["k"]
            if not (isinstance(k, int) and 0 <= k < dim):
                raise FileFormatError(f"target index {k} out of range")
            coeff = _parse_coeff(t["coeff"])
            if coeff:
                terms[k] = coeff
        entries[(i, j)] = terms
    return entries


def _complete(entries: dict, dim: int, sign: int) -> dict:
    """Mirror one-sided entries (sign -1 for brackets, +1 for products);
    pairs present in both orientations are kept verbatim for the validator."""
    full = dict(entries)
    for (i, j), terms in entries.items():
        if i != j and (j, i) not in entries:
            full[(j, i)] = {k: sign * v for k, v in terms.items()}
    return full


def lie_from_dict(doc: dict) -> LieAlgebra:
    dim = doc["dim"]
    basis = doc.get("basis") or None
    if basis is not None and len(basis) != dim:
        raise FileFormatError("basis label count differs from dim")
    entries = _complete(_read_constants(doc, dim), dim, sign=-1)
    return LieAlgebra.from_table(dim, entries, basis_names=basis,
                                 name=doc.get("name", ""))


def assoc_from_dict(doc: dict) -> CommAssocAlgebra:
    dim = doc["dim"]
    basis = doc.get("basis") or None
    if basis is not None and len(basis) != dim:
        raise FileFormatError("basis label count differs from dim")
    unit = doc.get("unit_index", 0)
    if not (isinstance(unit, int) and 0 <= unit < dim):
        raise FileFormatError(f"unit_index {unit!r} out of range")
    entries = _complete(_read_constants(doc, dim), dim, sign=1)
    return CommAssocAlgebra.from_table(dim, entries, unit_index=unit,
                                       basis_names=basis, name=doc.get("name", ""))


def rep_from_dict(doc: dict, algebra: LieAlgebra) -> Representation:
    module_dim = doc["module_dim"]
    grids = doc["matrices"]
    if len(grids) != algebra.dim:
        raise FileFormatError("need one matrix per Lie algebra basis vector")
    mats = []
    for grid in grids:
        if len(grid) != module_dim or any(len(row) != module_dim for row in grid):
            raise FileFormatError("representation matrix is not square of module_dim")
        mat = zeros(module_dim, module_dim)
        for i, row in enumerate(grid):
            for j, cell in enumerate(row):
                mat[i, j] = _parse_coeff(cell)
        mats.append(mat)
    return Representation(algebra, mats, name=doc.get("name", ""))


def to_dict(obj) -> dict:
    if isinstance(obj, LieAlgebra):
        return lie_to_dict(obj)
    if isinstance(obj, CommAssocAlgebra):
        return assoc_to_dict(obj)
    if isinstance(obj, Representation):
        return rep_to_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=2, sort_keys=True) + "\n"


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def load_document(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FileFormatError(f"{path}: not a structure-constant file")
    return doc


def load_algebra(path, validate: bool = True):
    """Load a Lie or associative algebra file; eagerly validated by default.

    An associative algebra whose unit is not the first basis vector is
    normalized (with a warning), since all component formulas index the unit
    as the first basis vector.
    """
    doc = load_document(path)
    kind = doc["kind"]
    if kind == "lie":
        g = lie_from_dict(doc)
        return g.validated() if validate else g
    if kind == "assoc":
        s = assoc_from_dict(doc)
        if validate:
            s = s.validated()
            if s.unit_index != 0:
                warnings.warn(
                    f"{path}: unit is basis vector {s.unit_index}; "
                    "normalizing it to the front"
                )
                s, _ = normalize_unit(s)
        return s
    raise FileFormatError(f"{path}: unknown kind {kind!r}")


def load_representation(path, algebra: LieAlgebra, validate: bool = True):
    doc = load_document(path)
    if doc["kind"] != "representation":
        raise FileFormatError(f"{path}: not a representation file")
    rep = rep_from_dict(doc, algebra)
    return rep.validated() if validate else rep


def digest(obj) -> str:
    """Stable content hash of a serializable algebra object."""
    payload = json.dumps(to_dict(obj), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()
