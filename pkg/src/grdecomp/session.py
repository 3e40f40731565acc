"""Session files: one algebra, its modules, specializations and towers in JSON.

The format is documented in ``docs/format.md``.  Parsing is eager: every
coefficient string is parsed in its ring and every object is validated, and
errors name the offending field.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    ExpressionSyntaxError,
    GrDecompError,
    InexactDivision,
    SchemaError,
    SessionValidationError,
    UndeclaredVariable,
)
from .exact.rings import fraction_field, ring_from_descriptor
from .graded import GradedAlgebra, GradedModuleRep, validate_algebra, validate_module
from .specialize import make_specialization, make_tower

FORMAT_TAG = "grdecomp-session"
FORMAT_VERSION = 1


@dataclass
class Session:
    name: str
    ring: object
    algebra: GradedAlgebra
    modules: list
    specializations: dict
    towers: dict
    raw_towers: list = field(default_factory=list)
    description: str = ""

    def module(self, name):
        for m in self.modules:
            if m.name == name:
                return m
        raise SchemaError(f"no module named {name!r}; available: {[m.name for m in self.modules]}")

    def specialization(self, name):
        if name not in self.specializations:
            raise SchemaError(f"no specialization named {name!r}; available: {sorted(self.specializations)}")
        return self.specializations[name]

    def tower(self, name):
        if name not in self.towers:
            raise SchemaError(f"no tower named {name!r}; available: {sorted(self.towers)}")
        return self.towers[name]

    def validation_reports(self):
        return [validate_algebra(self.algebra)] + [validate_module(m) for m in self.modules]


def _require(obj, keys, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected a JSON object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(f"{where}: missing required key(s) {missing} (required: {list(keys)})")


def _parse(text, ring, where, allow_division=True):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise SchemaError(f"{where}: coefficient must be a string, got {text!r}")
    try:
        return ring.parse(str(text), allow_division=allow_division)
    except (ExpressionSyntaxError, UndeclaredVariable, InexactDivision) as exc:
        raise type(exc)(f"{where}: {exc}") from None


def _ring(desc, where):
    try:
        return ring_from_descriptor(desc)
    except (ValueError, KeyError, TypeError) as exc:
        raise SchemaError(f"{where}: invalid ring descriptor {desc!r} ({exc})") from None


def _algebra(data, ring):
    where = "algebra"
    _require(data, ["basis", "degrees", "unit", "products"], where)
    basis = data["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
        raise SchemaError(f"{where}.basis: expected a list of nonempty strings")
    if len(set(basis)) != len(basis):
        raise SchemaError(f"{where}.basis: labels must be unique")
    for b in basis:
        if "*" in b:
            raise SchemaError(f"{where}.basis: label {b!r} must not contain '*'")
    degrees = data["degrees"]
    if not isinstance(degrees, list) or len(degrees) != len(basis) or not all(
        isinstance(d, int) and not isinstance(d, bool) for d in degrees
    ):
        raise SchemaError(f"{where}.degrees: expected {len(basis)} integers")
    unit = data["unit"]
    if unit not in basis:
        raise SchemaError(f"{where}.unit: {unit!r} is not a basis label")
    u = basis.index(unit)
    products = data["products"]
    if not isinstance(products, dict):
        raise SchemaError(f"{where}.products: expected an object")
    structure = {}
    for key, vec in products.items():
        parts = key.split("*")
        if len(parts) != 2 or parts[0] not in basis or parts[1] not in basis:
            raise SchemaError(f"{where}.products: key {key!r} must be 'b*c' with basis labels b, c")
        if not isinstance(vec, dict):
            raise SchemaError(f"{where}.products[{key!r}]: expected an object label -> coefficient")
        m, n = basis.index(parts[0]), basis.index(parts[1])
        out = {}
        for label, text in vec.items():
            if label not in basis:
                raise SchemaError(f"{where}.products[{key!r}]: unknown basis label {label!r}")
            out[basis.index(label)] = _parse(text, ring, f"{where}.products[{key!r}][{label!r}]", allow_division=False)
        structure[(m, n)] = out
    one = ring.one()
    for m in range(len(basis)):
        structure.setdefault((u, m), {m: one})
        structure.setdefault((m, u), {m: one})
    return GradedAlgebra(ring, basis, degrees, u, structure, data.get("name", "H"))


def _module(data, alg, K, index):
    where = f"modules[{index}]"
    _require(data, ["name", "degrees", "action"], where)
    name = data["name"]
    where = f"module {name!r}"
    fld = data.get("field", "K")
    fld = K if fld == "K" else _ring(fld, f"{where}.field")
    if not fld.is_field:
        raise SchemaError(f"{where}.field: module coefficients must lie in a field, got {fld}")
    degrees = data["degrees"]
    if not isinstance(degrees, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in degrees):
        raise SchemaError(f"{where}.degrees: expected a list of integers")
    n = len(degrees)
    action = data["action"]
    if not isinstance(action, dict):
        raise SchemaError(f"{where}.action: expected an object label -> matrix")
    for label in action:
        if label not in alg.basis:
            raise SchemaError(f"{where}.action: unknown basis label {label!r}")
    mats = []
    for m, label in enumerate(alg.basis):
        if label not in action:
            if m == alg.unit:
                mats.append([[fld.one() if i == j else fld.zero() for j in range(n)] for i in range(n)])
                continue
            raise SchemaError(f"{where}.action: missing matrix for {label!r}")
        rows = action[label]
        if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise SchemaError(f"{where}.action[{label!r}]: expected a {n}x{n} matrix")
        mats.append(
            [[_parse(x, fld, f"{where}.action[{label!r}][{i + 1}][{j + 1}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]
        )
    return GradedModuleRep(alg, fld, degrees, mats, name)


def _specialization(data, ring, index):
    where = f"specializations[{index}]"
    _require(data, ["name", "target", "assignments"], where)
    target = _ring(data["target"], f"{where}.target")
    assignments = data["assignments"]
    if not isinstance(assignments, dict):
        raise SchemaError(f"{where}.assignments: expected an object var -> expression")
    try:
        return make_specialization(ring, target, assignments, name=data["name"])
    except (ExpressionSyntaxError, UndeclaredVariable, InexactDivision) as exc:
        raise type(exc)(f"specialization {data['name']!r}: {exc}") from None


def _tower(data, specs, alg, index):
    where = f"towers[{index}]"
    _require(data, ["name", "theta", "theta_prime"], where)
    for key in ("theta", "theta_prime"):
        if data[key] not in specs:
            raise SchemaError(f"{where}.{key}: unknown specialization {data[key]!r}")
    B = data.get("B", "integers")
    if isinstance(B, dict):
        B = {"integers": "integers", "rationals": "rationals"}.get(B.get("kind"), "L")
    return make_tower(
        specs[data["theta"]], specs[data["theta_prime"]], B, data.get("phi"), alg, name=data["name"]
    )


def session_from_dict(data, validate=True, source="<session>"):
    """Build a :class:`Session` from decoded JSON."""
    _require(data, ["ring", "algebra", "modules"], source)
    ring = _ring(data["ring"], "ring")
    alg = _algebra(data["algebra"], ring)
    K = fraction_field(ring)
    mods = data["modules"]
    if not isinstance(mods, list):
        raise SchemaError("modules: expected a list")
    modules = [_module(m, alg, K, i) for i, m in enumerate(mods)]
    names = [m.name for m in modules]
    if len(set(names)) != len(names):
        raise SchemaError(f"modules: names must be unique, got {names}")
    specs = {}
    for i, s in enumerate(data.get("specializations", [])):
        sp = _specialization(s, ring, i)
        if sp.name in specs:
            raise SchemaError(f"specializations: duplicate name {sp.name!r}")
        specs[sp.name] = sp
    session = Session(
        data.get("name", source), ring, alg, modules, specs, {}, list(data.get("towers", [])),
        data.get("description", ""),
    )
    if validate:
        reports = session.validation_reports()
        bad = [r for r in reports if not r.ok]
        if bad:
            raise SessionValidationError(f"{source}: {len(bad)} object(s) failed validation", bad)
    towers = {}
    for i, t in enumerate(session.raw_towers):
        tw = _tower(t, specs, alg, i)
        if tw.name in towers:
            raise SchemaError(f"towers: duplicate name {tw.name!r}")
        towers[tw.name] = tw
    session.towers = towers
    return session


def load_session(path, validate=True):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return session_from_dict(data, validate=validate, source=str(path))


parse_session = load_session


def session_to_dict(session):
    """Normalized JSON form (coefficients printed canonically, unit pairs omitted)."""
    alg = session.algebra
    b = alg.basis
    products = {}
    for (m, n), vec in sorted(alg.structure.items()):
        if alg.unit in (m, n) and vec == {n if m == alg.unit else m: alg.ring.one()}:
            continue
        products[f"{b[m]}*{b[n]}"] = {b[r]: str(c) for r, c in sorted(vec.items())}
    K = fraction_field(session.ring)
    mods = []
    for mod in session.modules:
        mods.append(
            {
                "name": mod.name,
                "field": "K" if mod.field == K else mod.field.descriptor(),
                "degrees": list(mod.degrees),
                "action": {
                    b[m]: [[str(x) for x in row] for row in a] for m, a in enumerate(mod.action) if m != alg.unit
                },
            }
        )
    out = {
        "format": FORMAT_TAG,
        "version": FORMAT_VERSION,
        "name": session.name,
        "ring": session.ring.descriptor(),
        "algebra": {
            "name": alg.name,
            "basis": list(b),
            "degrees": list(alg.degrees),
            "unit": b[alg.unit],
            "products": products,
        },
        "modules": mods,
        "specializations": [
            {"name": s.name, "target": s.target.descriptor(), "assignments": {v: str(x) for v, x in s.assignments}}
            for s in session.specializations.values()
        ],
        "towers": session.raw_towers,
    }
    if session.description:
        out["description"] = session.description
    return out


__all__ = ["GrDecompError", "Session", "load_session", "parse_session", "session_from_dict", "session_to_dict"]
