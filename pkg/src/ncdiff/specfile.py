"""JSON spec files: an algebra, optional bimodules and optional operators.

Rationals are written as strings "p/q" (or "p"); numbers over a prime
field as plain integers.  Every error raised while reading carries the
member path of the offending entry and, for malformed JSON, the line.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, zoo, ZOO_NAMES
from .bimodule import Bimodule, regular
from .exactla import Matrix, PrimeField, field_from_name
from .homspace import LinearMap


class SpecError(ValueError):
    def __init__(self, message, path=None, line=None, column=None):
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append("line %d" % line + (", column %d" % column if column else ""))
        if path:
            where.append(path)
        super().__init__("%s: %s" % ("; ".join(where), message) if where else message)


@dataclass
class SpecFile:
    algebra: Algebra
    modules: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)
    source: str | None = None

    def module(self, name: str) -> Bimodule:
        try:
            return self.modules[name]
        except KeyError:
            raise SpecError("unknown module %r" % name) from None

    def operator(self, name: str) -> LinearMap:
        try:
            return self.operators[name]
        except KeyError:
            known = ", ".join(sorted(self.operators)) or "none"
            raise SpecError("unknown operator %r (known: %s)" % (name, known)) from None


_TOP = {"algebra", "modules", "operators"}
_ALGEBRA = {"name", "field", "basis", "unit", "mul"}
_MODULE = {"name", "dim", "left", "right"}
_OPERATOR = {"name", "source", "target", "matrix"}


def _members(obj, allowed, required, path):
    if not isinstance(obj, dict):
        raise SpecError("expected an object", path)
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecError("unknown member %r" % extra[0], _join(path, extra[0]))
    for key in sorted(required):
        if key not in obj:
            raise SpecError("missing member %r" % key, path)


def _join(path, key):
    if isinstance(key, int):
        return "%s[%d]" % (path, key)
    return "%s.%s" % (path, key) if path else key


def _scalar(x, F, path):
    if isinstance(x, bool) or isinstance(x, float):
        raise SpecError("numbers must be integers or 'p/q' strings, got %r" % (x,), path)
    if isinstance(F, PrimeField) and isinstance(x, int):
        return F(x)
    if not isinstance(x, (str, int)):
        raise SpecError("expected a rational, got %r" % (x,), path)
    try:
        return F(x)
    except ZeroDivisionError:
        raise SpecError("zero denominator in %r" % (x,), path) from None
    except (ValueError, TypeError) as exc:
        raise SpecError(str(exc), path) from None


def _array(x, shape, F, path):
    if not shape:
        return _scalar(x, F, path)
    if not isinstance(x, list):
        raise SpecError("expected an array", path)
    if len(x) != shape[0]:
        raise SpecError("expected %d entries, got %d" % (shape[0], len(x)), path)
    return tuple(_array(v, shape[1:], F, _join(path, i)) for i, v in enumerate(x))


def _name(x, path):
    if not isinstance(x, str) or not x:
        raise SpecError("expected a non-empty string", path)
    return x


def parse_algebra(obj, path="algebra") -> Algebra:
    _members(obj, _ALGEBRA, _ALGEBRA - {"name", "field"}, path)
    name = _name(obj.get("name", "A"), _join(path, "name"))
    try:
        F = field_from_name(obj.get("field", "Q"))
    except (ValueError, AttributeError, TypeError) as exc:
        raise SpecError(str(exc), _join(path, "field")) from None
    basis = obj["basis"]
    if not isinstance(basis, list) or not basis:
        raise SpecError("expected a non-empty list of labels", _join(path, "basis"))
    labels = tuple(_name(b, _join(_join(path, "basis"), i)) for i, b in enumerate(basis))
    if len(set(labels)) != len(labels):
        raise SpecError("basis labels are not distinct", _join(path, "basis"))
    n = len(labels)
    unit = _array(obj["unit"], (n,), F, _join(path, "unit"))
    mul = _array(obj["mul"], (n, n, n), F, _join(path, "mul"))
    A = Algebra(name, labels, unit, mul, F)
    rep = A.validate()
    if not rep.ok:
        raise SpecError("not a unital associative algebra: " + rep.violation, path)
    return A


def _action(x, A, dim, path):
    mats = _array(x, (A.dim, dim, dim), A.field, path)
    return tuple(Matrix(rows, dim, A.field) for rows in mats)


def parse_module(obj, A: Algebra, path) -> Bimodule:
    _members(obj, _MODULE, _MODULE, path)
    name = _name(obj["name"], _join(path, "name"))
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise SpecError("dim must be a non-negative integer", _join(path, "dim"))
    M = Bimodule(A, dim, _action(obj["left"], A, dim, _join(path, "left")),
                 _action(obj["right"], A, dim, _join(path, "right")), name=name)
    rep = M.validate()
    if not rep.ok:
        raise SpecError("not a central bimodule: " + rep.violation, path)
    return M


def parse_operator(obj, modules, path) -> LinearMap:
    _members(obj, _OPERATOR, _OPERATOR, path)
    name = _name(obj["name"], _join(path, "name"))
    ends = []
    for key in ("source", "target"):
        m = _name(obj[key], _join(path, key))
        if m not in modules:
            raise SpecError("unknown module %r" % m, _join(path, key))
        ends.append(modules[m])
    P, Q = ends
    rows = _array(obj["matrix"], (Q.dim, P.dim), P.field, _join(path, "matrix"))
    return name, LinearMap(P, Q, Matrix(rows, P.dim, P.field))


def spec_from_obj(obj, source=None) -> SpecFile:
    _members(obj, _TOP, {"algebra"}, "")
    A = parse_algebra(obj["algebra"])
    modules = {"regular": regular(A)}
    mods = obj.get("modules", [])
    if not isinstance(mods, list):
        raise SpecError("expected an array", "modules")
    for i, m in enumerate(mods):
        M = parse_module(m, A, _join("modules", i))
        if M.name in modules:
            raise SpecError("duplicate module name %r" % M.name, _join(_join("modules", i), "name"))
        modules[M.name] = M
    operators = {}
    ops = obj.get("operators", [])
    if not isinstance(ops, list):
        raise SpecError("expected an array", "operators")
    for i, o in enumerate(ops):
        name, D = parse_operator(o, modules, _join("operators", i))
        if name in operators:
            raise SpecError("duplicate operator name %r" % name, _join(_join("operators", i), "name"))
        operators[name] = D
    return SpecFile(A, modules, operators, source)


_WS = re.compile(r"[ \t\n\r]*")
_ATOM = re.compile(r"-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][-+]?\d+)?|true|false|null")


def member_lines(text: str) -> dict:
    """Map each member path of a valid JSON document to the line its value starts on."""
    lines = {}

    def ws(i):
        return _WS.match(text, i).end()

    def value(i, path):
        i = ws(i)
        lines[path] = text.count("\n", 0, i) + 1
        ch = text[i]
        if ch == "{":
            i = ws(i + 1)
            if text[i] == "}":
                return i + 1
            while True:
                key, i = json.decoder.scanstring(text, ws(i) + 1)
                i = ws(i) + 1  # colon
                i = ws(value(i, _join(path, key)))
                if text[i] == "}":
                    return i + 1
                i += 1
        if ch == "[":
            i = ws(i + 1)
            if text[i] == "]":
                return i + 1
            k = 0
            while True:
                i = ws(value(i, _join(path, k)))
                k += 1
                if text[i] == "]":
                    return i + 1
                i += 1
        if ch == '"':
            return json.decoder.scanstring(text, i + 1)[1]
        return _ATOM.match(text, i).end()

    value(0, "")
    return lines


def _line_of(lines, path):
    while path:
        if path in lines:
            return lines[path]
        cut = max(path.rfind("."), path.rfind("["))
        path = path[:cut] if cut > 0 else ""
    return None


def loads(text: str, source=None) -> SpecFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, line=exc.lineno, column=exc.colno) from None
    try:
        return spec_from_obj(obj, source)
    except SpecError as exc:
        if exc.line is None and exc.path:
            line = _line_of(member_lines(text), exc.path)
            raise SpecError(exc.message, exc.path, line) from None
        raise


def parse_spec(path) -> SpecFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError("cannot read %s: %s" % (path, exc.strerror)) from None
    return loads(text, str(path))


def resolve(arg: str) -> SpecFile:
    """A spec argument is a file path or the name of a zoo algebra."""
    if os.path.exists(arg):
        return parse_spec(arg)
    if arg in ZOO_NAMES:
        A = zoo(arg)
        return SpecFile(A, {"regular": regular(A)}, {}, arg)
    raise SpecError("%r is neither a readable file nor a zoo algebra (%s)"
                    % (arg, ", ".join(ZOO_NAMES)))


# ---------------------------------------------------------------------------
# writing


def format_scalar(x, F):
    if isinstance(F, PrimeField):
        return F(x).value
    return str(Fraction(x))


def _fmt(arr, F):
    if isinstance(arr, (tuple, list)):
        return [_fmt(v, F) for v in arr]
    return format_scalar(arr, F)


def _matrix_rows(m: Matrix):
    return [list(r) for r in m.rows]


def algebra_obj(A: Algebra) -> dict:
    return {"name": A.name, "field": A.field.name, "basis": list(A.basis_labels),
            "unit": _fmt(A.unit, A.field), "mul": _fmt(A.mul, A.field)}


def module_obj(M: Bimodule) -> dict:
    F = M.field
    return {"name": M.name, "dim": M.dim,
            "left": [_fmt(_matrix_rows(m), F) for m in M.left],
            "right": [_fmt(_matrix_rows(m), F) for m in M.right]}


def spec_obj(spec: SpecFile) -> dict:
    obj = {"algebra": algebra_obj(spec.algebra)}
    mods = [M for name, M in spec.modules.items() if name != "regular"]
    if mods:
        obj["modules"] = [module_obj(M) for M in mods]
    if spec.operators:
        ops = []
        for name, D in spec.operators.items():
            ops.append({"name": name,
                        "source": _module_name(spec, D.source),
                        "target": _module_name(spec, D.target),
                        "matrix": _fmt(_matrix_rows(D.matrix), spec.algebra.field)})
        obj["operators"] = ops
    return obj


def _module_name(spec, M):
    for name, N in spec.modules.items():
        if N is M or N == M:
            return name
    raise ValueError("operator module is not part of the spec")


def dumps(spec: SpecFile) -> str:
    return json.dumps(spec_obj(spec), indent=2, sort_keys=True) + "\n"


def export_zoo(name: str) -> str:
    A = zoo(name)
    return dumps(SpecFile(A, {"regular": regular(A)}))
