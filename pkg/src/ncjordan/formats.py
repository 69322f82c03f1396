"""JSON file formats for algebras and bimodules, and the catalog name resolver.

Scalars are always strings such as "3/2" so that no float ever enters a file.
Products are stored sparsely::

    {"kind": "algebra", "name": "...", "field": "q", "dim": 4,
     "parity": [0, 0, 1, 1], "basis_names": [...],
     "products": [{"i": 0, "j": 2, "coeffs": {"2": "1"}}, ...]}

A module file names its algebra inline or by catalog expression and gives
either ``left``/``right`` entries or ``rplus`` (plus optional ``rminus``)
entries, each of the form ``{"a": .., "m": .., "coeffs": {..}}``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

import numpy as np

from . import catalog
from .algebra import SuperAlgebra
from .constructions import graded_tensor, mutate, opposite_algebra, symmetrize, unital_hull
from .field import QQ, Field, FieldError, parse_field, parse_rational
from .linalg import ExactArray
from .representations import (SuperBimodule, direct_sum_modules, module_from_rplus_rminus,
                              opposite_module, regular)


class FormatError(ValueError):
    """Malformed file or expression; ``location`` points at the offending part."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


# scalars and fields


def field_token(field: Field) -> str:
    return f"p{field.characteristic}" if field.characteristic else "q"


def _scalar_str(field: Field, x) -> str:
    return field.serialize(x)


def _parse_scalar(field: Field, text: Any, where: str):
    if not isinstance(text, str):
        raise FormatError(f"scalar must be a string like \"3/2\", got {text!r}", where)
    try:
        return field(parse_rational(text))
    except (FieldError, ZeroDivisionError) as exc:
        raise FormatError(str(exc), where) from exc


def _field_of(data: dict, where: str) -> Field:
    try:
        return parse_field(str(data.get("field", "q")))
    except FieldError as exc:
        raise FormatError(str(exc), f"{where}.field") from exc


# algebras


def _sparse_entries(t: ExactArray, keys: tuple[str, str]) -> list[dict]:
    out = []
    vals = t.values()
    for i in range(t.shape[0]):
        for j in range(t.shape[1]):
            nz = [k for k in range(t.shape[2]) if vals[i, j, k] != 0]
            if nz:
                out.append({keys[0]: i, keys[1]: j,
                            "coeffs": {str(k): _scalar_str(t.field, vals[i, j, k]) for k in nz}})
    return out


def algebra_to_dict(A: SuperAlgebra) -> dict:
    return {
        "kind": "algebra",
        "name": A.name,
        "field": field_token(A.field),
        "dim": A.dim,
        "parity": list(A.parity),
        "basis_names": list(A.basis_names),
        "products": _sparse_entries(A.table, ("i", "j")),
    }


def _int_field(data: dict, key: str, where: str, bound: int | None = None) -> int:
    v = data.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0 or (bound is not None and v >= bound):
        limit = f" below {bound}" if bound is not None else ""
        raise FormatError(f"expected a nonnegative integer{limit}, got {v!r}", f"{where}.{key}")
    return v


def _parity_list(data: dict, key: str, dim: int, where: str) -> list[int]:
    p = data.get(key)
    if not isinstance(p, list) or len(p) != dim or any(x not in (0, 1) for x in p):
        raise FormatError(f"expected a list of {dim} entries in {{0, 1}}", f"{where}.{key}")
    return list(p)


def _fill(entries: Any, shape: tuple[int, int, int], keys: tuple[str, str], field: Field,
          parities: tuple[list[int], list[int], list[int]], where: str) -> ExactArray:
    if not isinstance(entries, list):
        raise FormatError("expected a list of entries", where)
    vals = np.empty(shape, dtype=object)
    vals[:] = field(0)
    p0, p1, p2 = parities
    for n, e in enumerate(entries):
        loc = f"{where}[{n}]"
        if not isinstance(e, dict):
            raise FormatError("entry must be an object", loc)
        i = _int_field(e, keys[0], loc, shape[0])
        j = _int_field(e, keys[1], loc, shape[1])
        coeffs = e.get("coeffs")
        if not isinstance(coeffs, dict):
            raise FormatError("coeffs must be an object mapping index to scalar", f"{loc}.coeffs")
        for ks, c in coeffs.items():
            cloc = f"{loc}.coeffs[{ks!r}]"
            try:
                k = int(ks)
            except ValueError:
                raise FormatError("index must be an integer string", cloc) from None
            if not 0 <= k < shape[2]:
                raise FormatError(f"index {k} out of range {shape[2]}", cloc)
            x = _parse_scalar(field, c, cloc)
            if x != 0 and (p0[i] + p1[j] - p2[k]) % 2:
                raise FormatError(f"grading violation at (i, j, k) = ({i}, {j}, {k})", cloc)
            vals[i, j, k] = vals[i, j, k] + x
    return ExactArray.from_values(vals, field)


def algebra_from_dict(data: dict, where: str = "algebra") -> SuperAlgebra:
    if not isinstance(data, dict):
        raise FormatError("expected an object", where)
    if data.get("kind", "algebra") != "algebra":
        raise FormatError(f"kind is {data.get('kind')!r}, expected 'algebra'", f"{where}.kind")
    field = _field_of(data, where)
    n = _int_field(data, "dim", where)
    parity = _parity_list(data, "parity", n, where)
    names = data.get("basis_names")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise FormatError(f"expected {n} basis names", f"{where}.basis_names")
    table = _fill(data.get("products", []), (n, n, n), ("i", "j"), field,
                  (parity, parity, parity), f"{where}.products")
    return SuperAlgebra(table, parity, str(data.get("name", "")), names)


# modules


def module_to_dict(M: SuperBimodule, algebra_ref: str | None = None) -> dict:
    alg: Any = algebra_ref if algebra_ref is not None else algebra_to_dict(M.algebra)
    return {
        "kind": "module",
        "name": M.name,
        "field": field_token(M.field),
        "algebra": alg,
        "mdim": M.dim,
        "mparity": list(M.parity),
        "basis_names": list(M.basis_names),
        "left": _sparse_entries(M.left, ("a", "m")),
        "right": _sparse_entries(M.right, ("m", "a")),
    }


def module_from_dict(data: dict, where: str = "module") -> SuperBimodule:
    if not isinstance(data, dict):
        raise FormatError("expected an object", where)
    if data.get("kind") != "module":
        raise FormatError(f"kind is {data.get('kind')!r}, expected 'module'", f"{where}.kind")
    field = _field_of(data, where)
    ref = data.get("algebra")
    if isinstance(ref, str):
        try:
            A = resolve_algebra(ref, field)
        except FormatError as exc:
            raise FormatError(str(exc), f"{where}.algebra") from exc
    else:
        A = algebra_from_dict(ref, f"{where}.algebra")
    if A.field != field:
        raise FormatError("module and algebra fields differ", f"{where}.field")
    k = _int_field(data, "mdim", where)
    mp = _parity_list(data, "mparity", k, where)
    names = data.get("basis_names")
    if names is not None and (not isinstance(names, list) or len(names) != k):
        raise FormatError(f"expected {k} basis names", f"{where}.basis_names")
    n, pa = A.dim, list(A.parity)
    name = str(data.get("name", ""))
    if "rplus" in data:
        rp = _fill(data["rplus"], (n, k, k), ("a", "m"), field, (pa, mp, mp), f"{where}.rplus")
        rm = _fill(data.get("rminus", []), (n, k, k), ("a", "m"), field, (pa, mp, mp),
                   f"{where}.rminus")
        return module_from_rplus_rminus(A, mp, rp, rm, name, names)
    left = _fill(data.get("left", []), (n, k, k), ("a", "m"), field, (pa, mp, mp), f"{where}.left")
    right = _fill(data.get("right", []), (k, n, k), ("m", "a"), field, (mp, pa, mp),
                  f"{where}.right")
    return SuperBimodule(A, mp, left, right, name, names)


# files


def save(obj: SuperAlgebra | SuperBimodule, path: str | Path, algebra_ref: str | None = None) -> None:
    data = algebra_to_dict(obj) if isinstance(obj, SuperAlgebra) else module_to_dict(obj, algebra_ref)
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def load(path: str | Path) -> SuperAlgebra | SuperBimodule:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc
    if not isinstance(data, dict):
        raise FormatError("top level must be an object", str(path))
    if data.get("kind") == "module":
        return module_from_dict(data)
    return algebra_from_dict(data)


# catalog expressions

_TOKEN = re.compile(r"\s*(?:(-?\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, ident, other = m.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        elif other in "(),":
            out.append((other, other))
        elif other.strip():
            raise FormatError(f"unexpected character {other!r}", f"position {m.start(3)}")
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind: str):
        k, v = self.peek()
        if k != kind:
            raise FormatError(f"expected {kind!r} but found {v!r}", self.text)
        self.i += 1
        return v

    def expr(self):
        k, v = self.peek()
        if k == "num":
            self.i += 1
            return ("num", v)
        name = self.take("id")
        args = []
        if self.peek()[0] == "(":
            self.i += 1
            if self.peek()[0] != ")":
                args.append(self.expr())
                while self.peek()[0] == ",":
                    self.i += 1
                    args.append(self.expr())
            self.take(")")
        return ("call", name, args)

    def parse(self):
        node = self.expr()
        if self.i != len(self.toks):
            raise FormatError(f"trailing input {self.toks[self.i][1]!r}", self.text)
        return node


def _nums(args, field: Field, name: str, lo: int, hi: int) -> list:
    if not lo <= len(args) <= hi:
        raise FormatError(f"{name} takes {lo} to {hi} arguments, got {len(args)}")
    out = []
    for a in args:
        if a[0] != "num":
            raise FormatError(f"{name} expects numeric arguments")
        out.append(parse_rational(a[1]))
    return out


def _ints(args, field: Field, name: str, count: int) -> list[int]:
    vals = _nums(args, field, name, count, count)
    if any(v.denominator != 1 for v in vals):
        raise FormatError(f"{name} expects integer arguments")
    return [int(v) for v in vals]


def _eval(node, field: Field):
    if node[0] == "num":
        raise FormatError(f"a bare number {node[1]} is not an algebra")
    _, name, args = node
    key = name.lower()
    simple = {
        "k10": lambda: catalog.build_K10(field),
        "k9": lambda: catalog.build_K9(field),
        "p2": lambda: catalog.build_P2(field),
    }
    if key in simple:
        if args:
            raise FormatError(f"{name} takes no arguments")
        return simple[key]()
    if key == "dt":
        v = _nums(args, field, name, 1, 4)
        defaults = [None, 1, 0, 0]
        v = v + defaults[len(v):]
        return catalog.build_Dt(*v, field=field)
    if key == "k3":
        from fractions import Fraction
        v = _nums(args, field, name, 0, 3)
        v = v + [Fraction(1, 2), 0, 0][len(v):]
        return catalog.build_K3(*v, field=field)
    if key == "m":
        m, n = _ints(args, field, name, 2)
        return catalog.build_Mmn(m, n, field)
    if key == "mn":
        (n,) = _ints(args, field, name, 1)
        return catalog.build_Mn(n, field)
    if key == "q":
        (n,) = _ints(args, field, name, 1)
        return catalog.build_Q(n, field)
    if key == "jvf":
        d0, d1 = _ints(args, field, name, 2)
        return catalog.build_JVf(d0, d1, field)
    if key == "uvf":
        v = _nums(args, field, name, 0, 1)
        return catalog.build_UVf_cross(*(v or [1]), field=field)
    if key in ("vmod", "vmodnc"):
        v = _nums(args, field, name, 0, 3)
        v = v + [0, 0, 0][len(v):]
        return catalog.build_Vmodule(*v, noncommutative=key == "vmodnc", field=field)
    if key in ("f", "dual", "dualodd", "c2"):
        from . import structure
        if args:
            raise FormatError(f"{name} takes no arguments")
        return {"f": lambda: structure.ground_field(field),
                "dual": lambda: structure.dual_numbers(field),
                "dualodd": lambda: structure.dual_numbers(field, odd=True),
                "c2": lambda: structure.group_algebra_c2(field)}[key]()
    sub = [a for a in args if a[0] == "call"]
    nums = [a for a in args if a[0] == "num"]
    if key in ("hull", "sym", "reg", "op", "der") and (len(sub) != 1 or nums):
        raise FormatError(f"{name} takes one algebra or module argument")
    if key == "hull":
        return unital_hull(_algebra(sub[0], field))
    if key == "sym":
        return symmetrize(_algebra(sub[0], field))
    if key == "der":
        from .structure import derivation_algebra
        return derivation_algebra(_algebra(sub[0], field))
    if key == "reg":
        return regular(_algebra(sub[0], field))
    if key == "op":
        inner = _eval(sub[0], field)
        return opposite_module(inner) if isinstance(inner, SuperBimodule) else opposite_algebra(inner)
    if key == "mut":
        if len(sub) != 1 or len(nums) != 1:
            raise FormatError("Mut takes an algebra and a scalar")
        return mutate(_algebra(sub[0], field), field(parse_rational(nums[0][1])))
    if key == "tensor":
        if len(sub) != 2 or nums:
            raise FormatError("Tensor takes two algebras")
        return graded_tensor(_algebra(sub[0], field), _algebra(sub[1], field))
    if key == "sum":
        if len(sub) != 2 or nums:
            raise FormatError("Sum takes two modules")
        a, b = _eval(sub[0], field), _eval(sub[1], field)
        if not (isinstance(a, SuperBimodule) and isinstance(b, SuperBimodule)):
            raise FormatError("Sum takes two modules")
        return direct_sum_modules(a, b)
    raise FormatError(f"unknown catalog name {name!r}")


def _algebra(node, field: Field) -> SuperAlgebra:
    out = _eval(node, field)
    if not isinstance(out, SuperAlgebra):
        raise FormatError("expected an algebra, got a module")
    return out


def resolve(expr: str, field: Field = QQ) -> SuperAlgebra | SuperBimodule:
    """Evaluate a catalog expression such as ``Dt(2,1/2,0,0)`` or ``Op(Reg(K10))``.

    A suffix ``@p3`` (or ``@q``) overrides the field.
    """
    if "@" in expr:
        expr, _, tok = expr.rpartition("@")
        try:
            field = parse_field(tok)
        except FieldError as exc:
            raise FormatError(str(exc), tok) from exc
    try:
        return _eval(_Parser(expr).parse(), field)
    except catalog.CatalogError as exc:
        raise FormatError(str(exc), expr) from exc
    except FieldError as exc:
        raise FormatError(str(exc), expr) from exc


def resolve_algebra(expr: str, field: Field = QQ) -> SuperAlgebra:
    out = resolve(expr, field)
    if not isinstance(out, SuperAlgebra):
        raise FormatError("expected an algebra, got a module", expr)
    return out


def resolve_module(expr: str, field: Field = QQ) -> SuperBimodule:
    out = resolve(expr, field)
    if not isinstance(out, SuperBimodule):
        raise FormatError("expected a module, got an algebra", expr)
    return out
