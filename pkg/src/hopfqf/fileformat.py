"""Reading and writing ``.hopf.json`` structure-constant files.

A file is one JSON object.  Scalars are always JSON strings in canonical
form ("3", "-1/2" over Q; a residue in [0, p) over Fp:p) and indices are
JSON integers, 0-based.  Only nonzero entries are listed; anything absent
is zero.  Entry tuples, with the source index first:

    unit     (i, v)        1 = Σ v·e_i
    mult     (i, j, k, v)  e_i·e_j ∋ v·e_k
    comult   (i, j, k, v)  Δ(e_i) ∋ v·e_j⊗e_k
    counit   (i, v)        ε(e_i) = v
    antipode (i, j, v)     S(e_i) ∋ v·e_j
    alpha    (i, b, j, v)  α(e_i) ∋ v·f_b⊗e_j
    map      (i, j, v)     Φ(e_i) ∋ v·f_j

Kinds and their keys:

    algebra   field dim basis unit mult
    hopf      the algebra keys plus comult counit antipode
    family    field source target base alpha
    morphism  field source_dim target map

In a family or morphism the nested blocks (source, target, base) are either
embedded objects or paths relative to the containing file.  Embedded
blocks inherit the field and may omit it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .family import QuantumFamilyData
from .hopf import AlgebraData, HopfAlgebraData
from .linalg import Field, Matrix

SUFFIX = ".hopf.json"

_KEYS = {
    "algebra": ("kind", "field", "dim", "basis", "unit", "mult"),
    "hopf": ("kind", "field", "dim", "basis", "unit", "mult", "comult", "counit", "antipode"),
    "family": ("kind", "field", "source", "target", "base", "alpha"),
    "morphism": ("kind", "field", "source_dim", "target", "map"),
}


class FormatError(ValueError):
    """Malformed file; the message names the file and the offending location."""


@dataclass(frozen=True, eq=False)
class MorphismSpec:
    """A linear map A → B read from a file; bound to a Hopf source later."""

    source_dim: int
    target: AlgebraData
    map: Matrix

    def bind(self, source: HopfAlgebraData):
        from .adjoint import AlgebraMorphism

        if source.dim != self.source_dim:
            raise FormatError(f"morphism source has dim {self.source_dim}, Hopf algebra has dim {source.dim}")
        if source.field != self.target.field:
            raise FormatError(f"morphism over {self.target.field.tag}, Hopf algebra over {source.field.tag}")
        return AlgebraMorphism(source, self.target, self.map)


@dataclass(frozen=True, eq=False)
class HopfFile:
    kind: str
    field: Field
    value: AlgebraData | HopfAlgebraData | QuantumFamilyData | MorphismSpec


# ---------------------------------------------------------------------------
# parsing


class _Ctx:
    def __init__(self, where: str, base_dir: Path, stack: tuple[Path, ...] = ()):
        self.where = where
        self.base_dir = base_dir
        self.stack = stack

    def fail(self, loc: str, msg: str):
        raise FormatError(f"{self.where}: {loc}: {msg}")


def _reject_float(text: str):
    raise ValueError(f"numeric literal {text} (scalars must be strings, indices integers)")


def _load_json(text: str, where: str) -> Any:
    def no_dupes(pairs):
        keys = [k for k, _ in pairs]
        for k in keys:
            if keys.count(k) > 1:
                raise FormatError(f"{where}: duplicate key {k!r}")
        return dict(pairs)

    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float, object_pairs_hook=no_dupes)
    except json.JSONDecodeError as e:
        raise FormatError(f"{where}: line {e.lineno} column {e.colno}: {e.msg}") from None
    except ValueError as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"{where}: {e}") from None


def _is_index(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _entries(ctx: _Ctx, obj: dict, key: str, bounds: tuple[int, ...], field: Field) -> dict[tuple, Any]:
    raw = obj.get(key)
    if not isinstance(raw, list):
        ctx.fail(key, "expected a list of entries")
    out: dict[tuple, Any] = {}
    for n, entry in enumerate(raw):
        loc = f"{key}[{n}] {json.dumps(entry, ensure_ascii=False)}"
        if not isinstance(entry, list) or len(entry) != len(bounds) + 1:
            ctx.fail(loc, f"expected {len(bounds)} indices and a scalar string")
        *idx, v = entry
        for pos, (i, bound) in enumerate(zip(idx, bounds)):
            if not _is_index(i):
                ctx.fail(loc, f"index {pos} is not an integer")
            if not 0 <= i < bound:
                ctx.fail(loc, f"index {i} out of range [0, {bound})")
        if not isinstance(v, str):
            ctx.fail(loc, "scalar must be a string")
        try:
            value = field.parse(v)
        except ValueError as e:
            ctx.fail(loc, str(e))
        if value == 0:
            ctx.fail(loc, "zero entries must be omitted")
        t = tuple(idx)
        if t in out:
            ctx.fail(loc, "duplicate entry")
        out[t] = value
    return out


def _dense(field: Field, shape: tuple[int, int], cells: dict[tuple[int, int], Any]) -> Matrix:
    rows = [[0] * shape[1] for _ in range(shape[0])]
    for (r, c), v in cells.items():
        rows[r][c] = v
    if shape[0] == 0 or shape[1] == 0:
        return Matrix.zeros(field, *shape)
    return Matrix.from_rows(field, rows)


def _check_keys(ctx: _Ctx, obj: dict, kind: str, nested: bool):
    allowed = set(_KEYS[kind])
    for k in obj:
        if k not in allowed:
            ctx.fail(k, f"unknown key for kind {kind!r}")
    for k in _KEYS[kind]:
        if k not in obj and not (nested and k == "field"):
            ctx.fail(k, "missing")


def _field_of(ctx: _Ctx, obj: dict, inherited: Field | None) -> Field:
    if "field" not in obj:
        if inherited is None:
            ctx.fail("field", "missing")
        return inherited
    tag = obj["field"]
    if not isinstance(tag, str):
        ctx.fail("field", "expected a string tag")
    try:
        field = Field.from_tag(tag)
    except ValueError as e:
        ctx.fail("field", str(e))
    if inherited is not None and field != inherited:
        ctx.fail("field", f"{tag} does not match the enclosing field {inherited.tag}")
    return field


def _algebra_block(ctx: _Ctx, obj: dict, field: Field) -> AlgebraData:
    n = obj["dim"]
    if not _is_index(n) or n < 1:
        ctx.fail("dim", "expected a positive integer")
    basis = obj["basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) and b for b in basis):
        ctx.fail("basis", f"expected {n} nonempty names")
    if len(set(basis)) != n:
        ctx.fail("basis", "names must be distinct")
    unit = _entries(ctx, obj, "unit", (n,), field)
    mult = _entries(ctx, obj, "mult", (n, n, n), field)
    return AlgebraData(
        field,
        n,
        tuple(basis),
        _dense(field, (n, n * n), {(k, i * n + j): v for (i, j, k), v in mult.items()}),
        _dense(field, (n, 1), {(i, 0): v for (i,), v in unit.items()}),
    )


def _hopf_block(ctx: _Ctx, obj: dict, field: Field) -> HopfAlgebraData:
    alg = _algebra_block(ctx, obj, field)
    n = alg.dim
    comult = _entries(ctx, obj, "comult", (n, n, n), field)
    counit = _entries(ctx, obj, "counit", (n,), field)
    antipode = _entries(ctx, obj, "antipode", (n, n), field)
    return HopfAlgebraData(
        alg,
        _dense(field, (n * n, n), {(j * n + k, i): v for (i, j, k), v in comult.items()}),
        _dense(field, (1, n), {(0, i): v for (i,), v in counit.items()}),
        _dense(field, (n, n), {(j, i): v for (i, j), v in antipode.items()}),
    )


def _nested(ctx: _Ctx, obj: dict, key: str, want: tuple[str, ...], field: Field):
    ref = obj[key]
    if isinstance(ref, str):
        path = (ctx.base_dir / ref).resolve()
        if path in ctx.stack:
            ctx.fail(key, f"circular reference to {ref}")
        hf = _parse_path(path, ctx.stack)
        if hf.kind not in want:
            ctx.fail(key, f"{ref} has kind {hf.kind!r}, expected {' or '.join(want)}")
        if hf.field != field:
            ctx.fail(key, f"{ref} is over {hf.field.tag}, expected {field.tag}")
        return hf.value
    if not isinstance(ref, dict):
        ctx.fail(key, "expected an embedded object or a relative path")
    sub = _Ctx(f"{ctx.where}: {key}", ctx.base_dir, ctx.stack)
    hf = _parse_obj(sub, ref, field)
    if hf.kind not in want:
        ctx.fail(key, f"embedded block has kind {hf.kind!r}, expected {' or '.join(want)}")
    return hf.value


def _as_algebra(v) -> AlgebraData:
    return v.alg if isinstance(v, HopfAlgebraData) else v


def _parse_obj(ctx: _Ctx, obj: Any, inherited: Field | None = None) -> HopfFile:
    if not isinstance(obj, dict):
        ctx.fail("top level", "expected a JSON object")
    kind = obj.get("kind")
    if kind not in _KEYS:
        ctx.fail("kind", f"expected one of {sorted(_KEYS)}, got {kind!r}")
    _check_keys(ctx, obj, kind, inherited is not None)
    field = _field_of(ctx, obj, inherited)

    if kind == "algebra":
        return HopfFile(kind, field, _algebra_block(ctx, obj, field))
    if kind == "hopf":
        return HopfFile(kind, field, _hopf_block(ctx, obj, field))
    if kind == "family":
        h1 = _nested(ctx, obj, "source", ("hopf",), field)
        h2 = _nested(ctx, obj, "target", ("hopf",), field)
        b = _as_algebra(_nested(ctx, obj, "base", ("algebra", "hopf"), field))
        n1, n2, nb = h1.dim, h2.dim, b.dim
        alpha = _entries(ctx, obj, "alpha", (n1, nb, n2), field)
        mat = _dense(field, (nb * n2, n1), {(bb * n2 + j, i): v for (i, bb, j), v in alpha.items()})
        return HopfFile(kind, field, QuantumFamilyData(h1, h2, b, mat))

    n = obj["source_dim"]
    if not _is_index(n) or n < 1:
        ctx.fail("source_dim", "expected a positive integer")
    target = _as_algebra(_nested(ctx, obj, "target", ("algebra", "hopf"), field))
    cells = _entries(ctx, obj, "map", (n, target.dim), field)
    mat = _dense(field, (target.dim, n), {(j, i): v for (i, j), v in cells.items()})
    return HopfFile(kind, field, MorphismSpec(n, target, mat))


def _parse_path(path: Path, stack: tuple[Path, ...] = ()) -> HopfFile:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"{path}: cannot read: {e.strerror or e}") from None
    ctx = _Ctx(str(path), path.parent, stack + (path.resolve(),))
    return _parse_obj(ctx, _load_json(text, str(path)))


def parse_file(path: str | Path) -> HopfFile:
    return _parse_path(Path(path))


def parse_text(text: str, base_dir: str | Path = ".", name: str = "<text>") -> HopfFile:
    ctx = _Ctx(name, Path(base_dir))
    return _parse_obj(ctx, _load_json(text, name))


# ---------------------------------------------------------------------------
# emission


def _cells(m: Matrix) -> list[tuple[int, int, str]]:
    fmt = m.field.format
    return [(r, c, fmt(m[r, c])) for r, c in m.nonzero()]


def _algebra_entries(a: AlgebraData) -> dict[str, list]:
    n = a.dim
    return {
        "unit": sorted([r, v] for r, _, v in _cells(a.unit)),
        "mult": sorted([c // n, c % n, r, v] for r, c, v in _cells(a.mult)),
    }


def _hopf_entries(h: HopfAlgebraData) -> dict[str, list]:
    n = h.dim
    out = _algebra_entries(h.alg)
    out["comult"] = sorted([c, r // n, r % n, v] for r, c, v in _cells(h.comult))
    out["counit"] = sorted([c, v] for _, c, v in _cells(h.counit))
    out["antipode"] = sorted([c, r, v] for r, c, v in _cells(h.antipode))
    return out


def _block(value, field_tag: str | None) -> dict:
    head: dict[str, Any] = {}
    if isinstance(value, HopfAlgebraData):
        head["kind"] = "hopf"
    else:
        head["kind"] = "algebra"
    if field_tag is not None:
        head["field"] = field_tag
    a = _as_algebra(value)
    head["dim"] = a.dim
    head["basis"] = list(a.basis_names)
    head.update(_hopf_entries(value) if isinstance(value, HopfAlgebraData) else _algebra_entries(value))
    return head


def to_document(value) -> dict:
    """The ordered JSON object for an algebra, Hopf algebra, family or morphism."""
    if isinstance(value, (AlgebraData, HopfAlgebraData)):
        return _block(value, value.field.tag)
    if isinstance(value, QuantumFamilyData):
        n2 = value.h2.dim
        return {
            "kind": "family",
            "field": value.h1.field.tag,
            "source": _block(value.h1, None),
            "target": _block(value.h2, None),
            "base": _block(value.b, None),
            "alpha": sorted([c, r // n2, r % n2, v] for r, c, v in _cells(value.alpha)),
        }
    if isinstance(value, MorphismSpec) or hasattr(value, "source_algebra"):
        source_dim = value.source_dim if isinstance(value, MorphismSpec) else value.source_algebra.dim
        return {
            "kind": "morphism",
            "field": value.target.field.tag,
            "source_dim": source_dim,
            "target": _block(value.target, None),
            "map": sorted([c, r, v] for r, c, v in _cells(value.map)),
        }
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _dump(obj: Any, indent: str) -> str:
    if isinstance(obj, dict):
        inner = indent + "  "
        items = [f"{inner}{json.dumps(k)}: {_dump(v, inner)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + indent + "}"
    if isinstance(obj, list) and obj and all(isinstance(e, list) for e in obj):
        inner = indent + "  "
        return "[\n" + ",\n".join(inner + json.dumps(e, ensure_ascii=False) for e in obj) + "\n" + indent + "]"
    return json.dumps(obj, ensure_ascii=False)


def emit(value) -> str:
    """Canonical text: fixed key order, sorted entries, one entry per line."""
    doc = value if isinstance(value, dict) else to_document(value)
    return _dump(doc, "") + "\n"


def write_file(value, path: str | Path) -> None:
    Path(path).write_text(emit(value), encoding="utf-8")


__all__ = [
    "FormatError",
    "HopfFile",
    "MorphismSpec",
    "SUFFIX",
    "emit",
    "parse_file",
    "parse_text",
    "to_document",
    "write_file",
]
