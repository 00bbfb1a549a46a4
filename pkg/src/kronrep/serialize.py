"""File formats: representations, subspaces, splitting types, reports.

A representation file is a single JSON document with the fields ``r``
(integer), ``dim`` ([x, y]) and ``maps`` (list of r row-major matrices
whose entries are strings "p" or "p/q" in lowest terms), in that order;
unknown fields are rejected.  Subspace files carry ``d`` and ``cols``
(r x d columns, same entry syntax).  Reports are plain JSON with a fixed
key layout so that identical invocations produce byte-identical output.
"""

import json

from .linalg import Matrix, format_scalar, parse_scalar, ratio
from .rep import DimVector, KroneckerRep, SubspaceMap


def _parse_entry(e):
    if isinstance(e, str):
        return parse_scalar(e)
    if isinstance(e, int):
        return ratio(e)
    raise ValueError("matrix entries must be integers or 'p'/'p/q' strings, got %r" % (e,))


def _matrix_from_rows(rows, shape):
    want_r, want_c = shape
    if len(rows) != want_r or any(len(r) != want_c for r in rows):
        raise ValueError("matrix has wrong shape: expected %dx%d" % shape)
    return Matrix(want_r, want_c, [[_parse_entry(e) for e in row] for row in rows])


def rep_to_json(rep):
    if rep.p is not None:
        raise ValueError("only rational representations are serialized")
    return {
        "r": rep.r,
        "dim": [rep.dim.x, rep.dim.y],
        "maps": [[[format_scalar(e) for e in row] for row in m.data]
                 for m in rep.maps],
    }


def rep_from_json(doc):
    if not isinstance(doc, dict):
        raise ValueError("representation document must be an object")
    if list(doc.keys()) != ["r", "dim", "maps"]:
        raise ValueError("representation document must carry exactly the fields "
                         "r, dim, maps in this order; got %s" % list(doc.keys()))
    r = doc["r"]
    dim = doc["dim"]
    if not (isinstance(r, int) and r >= 1):
        raise ValueError("field r must be a positive integer")
    if not (isinstance(dim, list) and len(dim) == 2
            and all(isinstance(v, int) and v >= 0 for v in dim)):
        raise ValueError("field dim must be a [x, y] pair of nonnegative integers")
    maps = doc["maps"]
    if not (isinstance(maps, list) and len(maps) == r):
        raise ValueError("field maps must list exactly r matrices")
    x, y = dim
    mats = [_matrix_from_rows(m, (y, x)) for m in maps]
    return KroneckerRep(r, DimVector(x, y), mats)


def subspace_to_json(v):
    return {
        "d": v.d,
        "cols": [[format_scalar(e) for e in row] for row in v.cols.data],
    }


def subspace_from_json(doc):
    if not isinstance(doc, dict) or list(doc.keys()) != ["d", "cols"]:
        raise ValueError("subspace document must carry exactly the fields d, cols")
    d = doc["d"]
    cols = doc["cols"]
    if not (isinstance(d, int) and d >= 1):
        raise ValueError("field d must be a positive integer")
    if not (isinstance(cols, list) and cols and all(len(row) == d for row in cols)):
        raise ValueError("field cols must be an r x d matrix")
    mat = _matrix_from_rows(cols, (len(cols), d))
    return SubspaceMap(len(cols), d, mat)


def parse_subspace_literal(text, r):
    """Semicolon-separated columns, comma-separated entries; "p/q" allowed."""
    columns = []
    for part in text.split(";"):
        entries = [parse_scalar(tok) for tok in part.split(",")]
        if len(entries) != r:
            raise ValueError("column %r must have %d entries" % (part, r))
        columns.append(entries)
    return SubspaceMap.from_columns(r, columns)


def load_rep(path):
    with open(path, encoding="utf-8") as fh:
        return rep_from_json(json.load(fh))


def save_rep(path, rep):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep_to_json(rep), fh, indent=1)
        fh.write("\n")


def load_planes(path):
    """A planes file is a JSON list of subspace documents."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, list) or not doc:
        raise ValueError("planes file must be a non-empty JSON list")
    return [subspace_from_json(item) for item in doc]


def dump_report(report, path=None):
    text = json.dumps(report, indent=1, sort_keys=False) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
