"""JSON encodings of lattices, quivers, representations, tube objects,
category descriptors and reports.

Rationals are written as integers or ``"p/q"`` strings. Every emitted
document carries ``"schema": 1``; parsers accept the field when present and
reject other versions. Parse failures raise :class:`ParseError` naming the
offending position, e.g. ``maps[1][0][2]``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from hercat.classify import ClassificationReport, CurveCat, Descriptor, DirectSum, QuiverCat, TubeCat
from hercat.errors import ParseError
from hercat.klattice import EulerLattice, FractionalCY
from hercat.linalg import IntMatrix
from hercat.quiver import Quiver, Rep
from hercat.tube import TubeObject

SCHEMA = 1
_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def dumps(obj: Any) -> str:
    """Compact, insertion-ordered and therefore byte-stable."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def loads(text: str, path: str = "") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(path or "<json>", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


# -- scalars ------------------------------------------------------------------


def encode_rational(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_int(x, path: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(path, f"expected an integer, got {json.dumps(x)}")
    return x


def parse_count(x, path: str) -> int:
    x = parse_int(x, path)
    if x < 0:
        raise ParseError(path, f"expected a nonnegative integer, got {x}")
    return x


def parse_rational(x, path: str) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(path, "expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        try:
            return Fraction(x.replace(" ", ""))
        except ZeroDivisionError:
            raise ParseError(path, f"zero denominator in {x!r}") from None
    raise ParseError(path, f"expected an integer or a 'p/q' string, got {json.dumps(x)}")


def _list(x, path: str) -> list:
    if not isinstance(x, list):
        raise ParseError(path, f"expected a list, got {type(x).__name__}")
    return x


def _obj(x, path: str) -> dict:
    if not isinstance(x, dict):
        raise ParseError(path, f"expected an object, got {type(x).__name__}")
    if "schema" in x and x["schema"] != SCHEMA:
        raise ParseError(f"{path}.schema" if path else "schema", f"unsupported schema version {x['schema']!r}")
    return x


def _field(d: dict, key: str, path: str):
    if key not in d:
        raise ParseError(path, f"missing field {key!r}")
    return d[key]


def _sub(path: str, key) -> str:
    if isinstance(key, int):
        return f"{path}[{key}]"
    return f"{path}.{key}" if path else key


# -- matrices and vectors -----------------------------------------------------


def parse_int_matrix(x, path: str, square: bool = False) -> IntMatrix:
    rows = _list(x, path)
    parsed = [[parse_int(v, _sub(_sub(path, i), j)) for j, v in enumerate(_list(r, _sub(path, i)))] for i, r in enumerate(rows)]
    cols = len(parsed[0]) if parsed else 0
    for i, r in enumerate(parsed):
        if len(r) != cols:
            raise ParseError(_sub(path, i), f"row has {len(r)} entries, expected {cols}")
    if square and cols != len(parsed):
        raise ParseError(path, f"expected a square matrix, got {len(parsed)}x{cols}")
    return IntMatrix.of(parsed, cols)


def parse_class(x, path: str, rank: int | None = None) -> tuple[int, ...]:
    v = tuple(parse_int(a, _sub(path, i)) for i, a in enumerate(_list(x, path)))
    if rank is not None and len(v) != rank:
        raise ParseError(path, f"class has {len(v)} coordinates, lattice rank is {rank}")
    return v


def parse_class_list(x, path: str, rank: int | None = None) -> list[tuple[int, ...]]:
    return [parse_class(v, _sub(path, i), rank) for i, v in enumerate(_list(x, path))]


# -- lattices -----------------------------------------------------------------


def lattice_to_json(lat: EulerLattice) -> dict:
    out = {"schema": SCHEMA, "rank": lat.rank, "gram": lat.gram.tolist()}
    if lat.labels is not None:
        out["labels"] = list(lat.labels)
    return out


def parse_lattice(x, path: str = "") -> EulerLattice:
    """Accepts a lattice object or a bare Gram matrix."""
    if isinstance(x, list):
        return EulerLattice(parse_int_matrix(x, path or "gram", square=True))
    d = _obj(x, path)
    gram = parse_int_matrix(_field(d, "gram", path), _sub(path, "gram"), square=True)
    if "rank" in d and parse_count(d["rank"], _sub(path, "rank")) != gram.rows:
        raise ParseError(_sub(path, "rank"), f"rank {d['rank']} does not match the {gram.rows}x{gram.rows} Gram matrix")
    labels = d.get("labels")
    if labels is not None:
        labels = _list(labels, _sub(path, "labels"))
        for i, l in enumerate(labels):
            if not isinstance(l, str):
                raise ParseError(_sub(_sub(path, "labels"), i), "labels must be strings")
        if len(labels) != gram.rows:
            raise ParseError(_sub(path, "labels"), f"{len(labels)} labels for rank {gram.rows}")
        labels = tuple(labels)
    return EulerLattice(gram, labels)


def int_matrix_to_json(m: IntMatrix) -> list:
    return m.tolist()


# -- quivers and representations ----------------------------------------------


def quiver_to_json(q: Quiver) -> dict:
    return {"schema": SCHEMA, "vertices": q.vertex_count, "arrows": [list(a) for a in q.arrows]}


def parse_quiver(x, path: str = "") -> Quiver:
    d = _obj(x, path)
    n = parse_count(_field(d, "vertices", path), _sub(path, "vertices"))
    arrows = []
    for k, a in enumerate(_list(d.get("arrows", []), _sub(path, "arrows"))):
        p = _sub(_sub(path, "arrows"), k)
        a = _list(a, p)
        if len(a) != 2:
            raise ParseError(p, "an arrow is a [source, target] pair")
        s, t = parse_int(a[0], _sub(p, 0)), parse_int(a[1], _sub(p, 1))
        for i, v in ((0, s), (1, t)):
            if not 0 <= v < n:
                raise ParseError(_sub(p, i), f"vertex {v} out of range for {n} vertices")
        arrows.append((s, t))
    return Quiver(n, tuple(arrows))


def rep_to_json(m: Rep) -> dict:
    return {
        "schema": SCHEMA,
        "dims": list(m.dims),
        "maps": [[[encode_rational(x) for x in row] for row in mat] for mat in m.maps],
    }


def parse_rep(x, quiver: Quiver, path: str = "") -> Rep:
    d = _obj(x, path)
    dp = _sub(path, "dims")
    dims = [parse_count(v, _sub(dp, i)) for i, v in enumerate(_list(_field(d, "dims", path), dp))]
    if len(dims) != quiver.vertex_count:
        raise ParseError(dp, f"{len(dims)} dimensions for a quiver with {quiver.vertex_count} vertices")
    mp = _sub(path, "maps")
    maps_in = _list(d.get("maps", []), mp)
    if len(maps_in) != len(quiver.arrows):
        raise ParseError(mp, f"{len(maps_in)} maps for {len(quiver.arrows)} arrows")
    maps = []
    for k, (m, (s, t)) in enumerate(zip(maps_in, quiver.arrows)):
        p = _sub(mp, k)
        rows = _list(m, p)
        if dims[s] * dims[t] == 0 and all(r == [] for r in rows):
            # zero-size blocks may be written as [] regardless of shape
            maps.append([[] for _ in range(dims[t])])
            continue
        if len(rows) != dims[t]:
            raise ParseError(p, f"expected {dims[t]} rows (dim at target {t}), got {len(rows)}")
        mat = []
        for i, r in enumerate(rows):
            rp = _sub(p, i)
            r = _list(r, rp)
            if len(r) != dims[s]:
                raise ParseError(rp, f"expected {dims[s]} columns (dim at source {s}), got {len(r)}")
            mat.append([parse_rational(v, _sub(rp, j)) for j, v in enumerate(r)])
        maps.append(mat)
    return Rep(quiver, tuple(dims), tuple(maps))


def parse_rep_list(x, quiver: Quiver, path: str = "") -> list[Rep]:
    return [parse_rep(r, quiver, _sub(path, i)) for i, r in enumerate(_list(x, path))]


# -- tubes --------------------------------------------------------------------


def tube_object_to_json(x: TubeObject) -> dict:
    return {"schema": SCHEMA, "rank": x.rank, "base": x.base, "length": x.length}


def parse_tube_object(x, rank: int | None = None, path: str = "") -> TubeObject:
    d = _obj(x, path)
    if "rank" in d:
        r = parse_count(d["rank"], _sub(path, "rank"))
        if rank is not None and r != rank:
            raise ParseError(_sub(path, "rank"), f"object of rank {r} in a tube of rank {rank}")
        rank = r
    if rank is None or rank < 1:
        raise ParseError(path, "tube rank missing (give --rank or a 'rank' field)")
    base = parse_int(_field(d, "base", path), _sub(path, "base"))
    length = parse_int(_field(d, "length", path), _sub(path, "length"))
    if not 0 <= base < rank:
        raise ParseError(_sub(path, "base"), f"base {base} out of range for rank {rank}")
    if length < 1:
        raise ParseError(_sub(path, "length"), "length must be at least 1")
    return TubeObject(rank, base, length)


# -- descriptors and reports --------------------------------------------------


def descriptor_to_json(d: Descriptor) -> dict:
    if isinstance(d, QuiverCat):
        return {"type": "quiver", "vertices": d.quiver.vertex_count, "arrows": [list(a) for a in d.quiver.arrows]}
    if isinstance(d, TubeCat):
        return {"type": "tube", "rank": d.rank}
    if isinstance(d, CurveCat):
        return {"type": "curve", "genus": d.genus}
    if isinstance(d, DirectSum):
        return {"type": "sum", "parts": [descriptor_to_json(p) for p in d.parts]}
    raise TypeError(f"not a descriptor: {d!r}")


def parse_descriptor(x, path: str = "") -> Descriptor:
    d = _obj(x, path)
    kind = _field(d, "type", path)
    if kind == "quiver":
        q = parse_quiver(d["quiver"], _sub(path, "quiver")) if "quiver" in d else parse_quiver(d, path)
        if not q.acyclic:
            raise ParseError(path, "quiver descriptors must be acyclic (use a tube for cyclic quivers)")
        return QuiverCat(q)
    if kind == "tube":
        r = parse_int(_field(d, "rank", path), _sub(path, "rank"))
        if r < 1:
            raise ParseError(_sub(path, "rank"), "tube rank must be at least 1")
        return TubeCat(r)
    if kind == "curve":
        return CurveCat(parse_count(_field(d, "genus", path), _sub(path, "genus")))
    if kind == "sum":
        key = "parts" if "parts" in d else "summands"
        parts = _list(_field(d, key, path), _sub(path, key))
        if not parts:
            raise ParseError(_sub(path, key), "a direct sum needs at least one part")
        return DirectSum(tuple(parse_descriptor(p, _sub(_sub(path, key), i)) for i, p in enumerate(parts)))
    raise ParseError(_sub(path, "type"), f"unknown descriptor type {kind!r}")


def cy_to_json(cy: FractionalCY | None):
    if cy is None:
        return None
    return {"q": cy.q, "p_parity": cy.p % 2, "sign": cy.sign}


def report_to_json(r: ClassificationReport, top: bool = True) -> dict:
    out = {
        "descriptor": descriptor_to_json(r.descriptor),
        "branch": r.branch,
        "num_rank": r.num_rank,
        "serre_ok": r.serre_ok,
        "coxeter": r.coxeter.tolist(),
        "has_exceptional_class": r.has_exceptional_class,
        "exceptional_witness": list(r.exceptional_witness) if r.exceptional_witness is not None else None,
        "has_spherical_class": r.has_spherical_class,
        "spherical_witness": list(r.spherical_witness) if r.spherical_witness is not None else None,
        "fractional_cy": cy_to_json(r.fractional_cy),
    }
    if r.dynkin_type:
        out["dynkin_type"] = r.dynkin_type
    if r.components:
        out["components"] = [report_to_json(c, top=False) for c in r.components]
    if top:
        out["schema"] = SCHEMA
    return out
