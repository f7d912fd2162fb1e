"""On-disk formats: algebra spec files (.alg), order-2 tensor files (.tensor),
matched-pair artifacts, and check reports.

All three formats are strict JSON with rational scalars written as strings
("p/q" or "p"; bare integers are accepted on input).  Writing is canonical:
fixed key order, entries sorted by index tuple, scalars in lowest terms, so
identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .linalg import LinMap, Tensor2, format_rational, parse_rational
from .model import (
    AlgebraSpec,
    BilinearForm,
    CoprodTable,
    MulTable,
    Report,
    SpecError,
)

_SPEC_KEYS = {"dim", "basis", "weight", "ops", "coprods", "maps", "forms"}


def _scalar(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise SpecError(f"{where}: scalar must be a rational string or integer")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except Exception as exc:
            raise SpecError(f"{where}: {exc}") from exc
    raise SpecError(f"{where}: scalar must be a rational string or integer, "
                    f"got {type(value).__name__} (floats are not allowed)")


def _index(value, dim: int, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{where}: index must be an integer")
    if not 0 <= value < dim:
        raise SpecError(f"{where}: index {value} out of range for dim {dim}")
    return value


def _entry_table(raw, dim: int, arity: int, where: str):
    if not isinstance(raw, list):
        raise SpecError(f"{where}: expected a list of entries")
    seen = set()
    items = []
    shape = ", ".join(["idx"] * arity) + ", scalar"
    for pos, entry in enumerate(raw):
        ctx = f"{where}[{pos}]"
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise SpecError(f"{ctx}: expected [{shape}]")
        idx = tuple(_index(v, dim, ctx) for v in entry[:arity])
        if idx in seen:
            raise SpecError(f"{ctx}: duplicate entry for indices {idx}")
        seen.add(idx)
        items.append((idx, _scalar(entry[arity], ctx)))
    return items


def spec_from_dict(doc: dict, where: str = "spec") -> AlgebraSpec:
    if not isinstance(doc, dict):
        raise SpecError(f"{where}: document must be an object")
    unknown = set(doc) - _SPEC_KEYS
    if unknown:
        raise SpecError(f"{where}: unknown keys {sorted(unknown)}")
    if "dim" not in doc:
        raise SpecError(f"{where}: missing 'dim'")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim <= 0:
        raise SpecError(f"{where}: 'dim' must be a positive integer")
    basis = None
    if "basis" in doc:
        basis = doc["basis"]
        if (not isinstance(basis, list) or len(basis) != dim
                or not all(isinstance(b, str) for b in basis)):
            raise SpecError(f"{where}: 'basis' must be a list of {dim} labels")
        basis = tuple(basis)
    weight = _scalar(doc.get("weight", "0"), f"{where}.weight")

    def section(key):
        raw = doc.get(key, {})
        if not isinstance(raw, dict):
            raise SpecError(f"{where}.{key}: expected an object of named tables")
        return raw

    ops = {}
    for name, raw in section("ops").items():
        items = _entry_table(raw, dim, 3, f"{where}.ops.{name}")
        ops[name] = MulTable.from_entries(dim, [(i, j, k, v) for (i, j, k), v in items])
    coprods = {}
    for name, raw in section("coprods").items():
        items = _entry_table(raw, dim, 3, f"{where}.coprods.{name}")
        coprods[name] = CoprodTable.from_entries(dim, [(k, i, j, v) for (k, i, j), v in items])
    maps = {}
    for name, raw in section("maps").items():
        items = _entry_table(raw, dim, 2, f"{where}.maps.{name}")
        grid = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), v in items:
            grid[i][j] = v
        maps[name] = LinMap(grid)
    forms = {}
    for name, raw in section("forms").items():
        items = _entry_table(raw, dim, 2, f"{where}.forms.{name}")
        grid = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), v in items:
            grid[i][j] = v
        forms[name] = BilinearForm(grid)
    return AlgebraSpec(dim=dim, ops=ops, coprods=coprods, maps=maps,
                       forms=forms, weight=weight, basis=basis)


def spec_to_dict(spec: AlgebraSpec) -> dict:
    doc: dict = {"dim": spec.dim}
    if spec.basis is not None:
        doc["basis"] = list(spec.basis)
    doc["weight"] = format_rational(spec.weight)
    if spec.ops:
        doc["ops"] = {
            name: [[i, j, k, format_rational(v)] for (i, j, k), v in sorted(t.nonzero())]
            for name, t in sorted(spec.ops.items())
        }
    if spec.coprods:
        doc["coprods"] = {
            name: [[k, i, j, format_rational(v)] for (k, i, j), v in sorted(t.nonzero())]
            for name, t in sorted(spec.coprods.items())
        }
    if spec.maps:
        doc["maps"] = {
            name: [[i, j, format_rational(m.entries[i][j])]
                   for i in range(spec.dim) for j in range(spec.dim)
                   if m.entries[i][j] != 0]
            for name, m in sorted(spec.maps.items())
        }
    if spec.forms:
        doc["forms"] = {
            name: [[i, j, format_rational(f.entries[i][j])]
                   for i in range(spec.dim) for j in range(spec.dim)
                   if f.entries[i][j] != 0]
            for name, f in sorted(spec.forms.items())
        }
    return doc


def _load_json(path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: not valid JSON ({exc})") from exc


def _format_json(obj, indent: int = 0) -> str:
    # entry rows stay on one line so Cayley tables remain hand-readable
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f"{inner}{json.dumps(key)}: {_format_json(val, indent + 2)}"
                for key, val in obj.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return json.dumps(obj)
        rows = [f"{inner}{_format_json(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return json.dumps(obj)


def _dump_json(doc) -> str:
    return _format_json(doc) + "\n"


def parse_spec(path) -> AlgebraSpec:
    return spec_from_dict(_load_json(path), where=str(path))


def write_spec(spec: AlgebraSpec, path) -> None:
    Path(path).write_text(_dump_json(spec_to_dict(spec)))


def parse_tensor(path) -> Tensor2:
    doc = _load_json(path)
    where = str(path)
    if not isinstance(doc, dict) or set(doc) - {"dim", "entries"}:
        raise SpecError(f"{where}: tensor file needs exactly 'dim' and 'entries'")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim <= 0:
        raise SpecError(f"{where}: 'dim' must be a positive integer")
    grid = [[Fraction(0)] * dim for _ in range(dim)]
    for (i, j), v in _entry_table(doc.get("entries", []), dim, 2, f"{where}.entries"):
        grid[i][j] = v
    return Tensor2(grid)


def write_tensor(r: Tensor2, path) -> None:
    doc = {"dim": r.dim,
           "entries": [[i, j, format_rational(v)] for (i, j), v in sorted(r.nonzero())]}
    Path(path).write_text(_dump_json(doc))


def tensor_to_text(r: Tensor2) -> str:
    terms = [f"{format_rational(v)}*e{i + 1}(x)e{j + 1}" for (i, j), v in sorted(r.nonzero())]
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# matched-pair artifacts

def matched_pair_to_dict(mp) -> dict:
    def cube_entries(fam):
        out = []
        for a in range(fam.domain_dim):
            mat = fam.mats[a]
            for j in range(fam.carrier_dim):
                for k in range(fam.carrier_dim):
                    v = mat.entries[k][j]
                    if v != 0:
                        out.append([a, j, k, format_rational(v)])
        return out

    return {
        "specA": spec_to_dict(mp.specA),
        "specB": spec_to_dict(mp.specB),
        "actions": {
            name: cube_entries(getattr(mp, name))
            for name in ("lprecA", "rprecA", "lsuccA", "rsuccA",
                         "lprecB", "rprecB", "lsuccB", "rsuccB")
        },
    }


def matched_pair_from_dict(doc: dict, where: str = "matched-pair"):
    from .model import ActionFamily
    from .constructions import MatchedPairData
    if not isinstance(doc, dict) or set(doc) - {"specA", "specB", "actions"}:
        raise SpecError(f"{where}: needs exactly 'specA', 'specB' and 'actions'")
    specA = spec_from_dict(doc["specA"], f"{where}.specA")
    specB = spec_from_dict(doc["specB"], f"{where}.specB")
    dims = {"A": (specA.dim, specB.dim), "B": (specB.dim, specA.dim)}
    fams = {}
    actions = doc.get("actions", {})
    for name in ("lprecA", "rprecA", "lsuccA", "rsuccA",
                 "lprecB", "rprecB", "lsuccB", "rsuccB"):
        if name not in actions:
            raise SpecError(f"{where}: missing action {name!r}")
        domain, carrier = dims["A" if name.endswith("A") else "B"]
        mats = [[[Fraction(0)] * carrier for _ in range(carrier)] for _ in range(domain)]
        for pos, entry in enumerate(actions[name]):
            ctx = f"{where}.actions.{name}[{pos}]"
            if not isinstance(entry, list) or len(entry) != 4:
                raise SpecError(f"{ctx}: expected [a, j, k, scalar]")
            a = _index(entry[0], domain, ctx)
            j = _index(entry[1], carrier, ctx)
            k = _index(entry[2], carrier, ctx)
            mats[a][k][j] = _scalar(entry[3], ctx)
        fams[name] = ActionFamily([LinMap(m) for m in mats])
    return MatchedPairData(specA=specA, specB=specB, **fams)


def parse_matched_pair(path):
    return matched_pair_from_dict(_load_json(path), where=str(path))


def write_matched_pair(mp, path) -> None:
    Path(path).write_text(_dump_json(matched_pair_to_dict(mp)))


# ---------------------------------------------------------------------------
# reports

def reports_to_dict(reports: Sequence[Report]) -> dict:
    return {
        "aggregate": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [r.to_dict() for r in reports],
    }


def write_reports(reports: Sequence[Report], path) -> None:
    Path(path).write_text(_dump_json(reports_to_dict(reports)))
