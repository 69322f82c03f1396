"""The ``ncj`` command line tool."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import structure as st
from .algebra import SuperAlgebra
from .constructions import graded_tensor, mutate, split_null_extension, symmetrize, unital_hull
from .field import Field, FieldError, parse_field, parse_rational
from .formats import FormatError, algebra_to_dict, load, resolve, save
from .identities import (check_flexible, check_generic_poisson, check_jordan,
                         check_noncommutative_jordan)
from .linalg import ExactArray, Subspace, format_scalar
from .peirce import PeirceError, eigenspace_U1, peirce_decompose, verify_peirce_relations
from .representations import (SuperBimodule, check_ncj_bimodule, check_via_rpm, decompose,
                              find_isomorphism, identify_summands, is_abs_irreducible,
                              opposite_module, regular, submodule_generated)
from .suite import verify_paper_suite


class UsageError(Exception):
    pass


def _rows(S: Subspace) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in S.basis.values().tolist()]


def _vec(v: ExactArray) -> list[str]:
    return [format_scalar(x) for x in v.values().tolist()]


# loading targets


def _field(args) -> Field:
    try:
        return parse_field(args.field)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc


def _load_target(args, expr: str | None = None):
    field = _field(args)
    if expr is not None:
        return resolve(expr, field)
    if args.catalog and args.file:
        raise UsageError("give either --catalog or --file, not both")
    if args.catalog:
        return resolve(args.catalog, field)
    if args.file:
        return load(args.file)
    raise UsageError("a target is required: --catalog NAME or --file PATH")


def _algebra(args, expr: str | None = None) -> SuperAlgebra:
    obj = _load_target(args, expr)
    if not isinstance(obj, SuperAlgebra):
        raise UsageError("this command needs an algebra, not a module")
    return obj


def _module(args, expr: str | None = None) -> SuperBimodule:
    obj = _load_target(args, expr)
    if not isinstance(obj, SuperBimodule):
        raise UsageError("this command needs a module, not an algebra")
    return obj


def _scalar(text: str, field: Field):
    try:
        return field(parse_rational(text))
    except (FieldError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc


def _element(A_dim: int, names, text: str, field: Field) -> ExactArray:
    """A basis name, or comma separated coordinates such as ``1,0,1/2,0``."""
    if text in names:
        return ExactArray.eye(A_dim, field)[list(names).index(text)]
    parts = text.split(",")
    if len(parts) != A_dim:
        raise UsageError(f"expected a basis name or {A_dim} coordinates, got {text!r}")
    return ExactArray.from_values([_scalar(p.strip(), field) for p in parts], field)


def _default_idempotent(A: SuperAlgebra) -> ExactArray:
    for i in range(A.dim):
        v = A.basis_vector(i)
        if A.is_idempotent(v):
            return v
    raise UsageError("no basis idempotent; pass --idempotent")


def _idempotent(A: SuperAlgebra, args) -> ExactArray:
    if args.idempotent:
        return _element(A.dim, A.basis_names, args.idempotent, A.field)
    return _default_idempotent(A)


# commands; each returns (passed, human text, json fragment)


def cmd_check_identity(args):
    A = _algebra(args)
    if args.identity == "poisson":
        if not args.bracket:
            raise UsageError("poisson needs --bracket EXPR naming the bracket algebra")
        B = _algebra(args, args.bracket)
        rep = check_generic_poisson(A, B)
    else:
        fn = {"flexible": check_flexible, "jordan": check_jordan,
              "ncj": check_noncommutative_jordan}[args.identity]
        rep = fn(A)
    return rep.passed, f"{_verdict(rep.passed)} {A.name}: {rep.summary()}", rep.to_dict()


def cmd_peirce(args):
    A = _algebra(args)
    e = _idempotent(A, args)
    P = peirce_decompose(A, e)
    rep = verify_peirce_relations(A, e)
    lines = [f"{_verdict(rep.passed)} Peirce decomposition of {A.name} at {A.format(e)}"]
    for i in (0, 1, 2):
        lines.append(f"  U_{i}: dim {P[i].dim}  " + "; ".join(A.format(v) for v in P[i].vectors()))
    lines.append(f"  {rep.summary()}")
    out = {"dims": list(P.dims()), "components": {str(i): _rows(P[i]) for i in (0, 1, 2)},
           "relations": rep.to_dict()}
    return rep.passed, "\n".join(lines), out


def cmd_eigenspace(args):
    A = _algebra(args)
    e = _idempotent(A, args)
    lam = _scalar(args.lam, A.field)
    S = eigenspace_U1(A, e, lam)
    text = (f"U_1^[{format_scalar(lam)}] of {A.name} at {A.format(e)}: dim {S.dim}  "
            + "; ".join(A.format(v) for v in S.vectors()))
    return True, text, {"lambda": format_scalar(lam), "dim": S.dim, "basis": _rows(S)}


def _emit_algebra(B: SuperAlgebra, args, checks: bool = True):
    if args.out:
        save(B, args.out)
    rep = check_noncommutative_jordan(B)
    text = f"{B.name}: dim {B.even_dim}|{B.odd_dim}; {rep.summary()}"
    if args.out:
        text += f"; written to {args.out}"
    return rep.passed, text, {"algebra": algebra_to_dict(B), "ncj": rep.to_dict()}


def cmd_mutate(args):
    A = _algebra(args)
    return _emit_algebra(mutate(A, _scalar(args.lam, A.field)), args)


def cmd_symmetrize(args):
    B = symmetrize(_algebra(args))
    passed, text, out = _emit_algebra(B, args)
    jr = check_jordan(B)
    return jr.passed, f"{text}; {jr.summary()}", {**out, "jordan": jr.to_dict()}


def cmd_tensor(args):
    A = _algebra(args)
    B = _algebra(args, args.with_)
    return _emit_algebra(graded_tensor(A, B), args)


def cmd_hull(args):
    return _emit_algebra(unital_hull(_algebra(args)), args)


def cmd_sne(args):
    M = _module(args)
    E = split_null_extension(M.algebra, M)
    return _emit_algebra(E, args)


def cmd_module_check(args):
    M = _module(args)
    if args.route == "sne":
        rep = check_ncj_bimodule(M.algebra, M)
    else:
        rep = check_via_rpm(M.algebra, M)
    return rep.passed, f"{_verdict(rep.passed)} {M.name}: {rep.summary()}", rep.to_dict()


def cmd_mod_gen(args):
    M = _module(args)
    v = _element(M.dim, M.basis_names, args.vector, M.field)
    S = submodule_generated(M, v)
    proper = 0 < S.dim < M.dim
    text = f"Mod({args.vector}) in {M.name}: dim {S.dim} of {M.dim}" + (" (proper)" if proper else "")
    return True, text, {"dim": S.dim, "proper": proper, "basis": _rows(S)}


def cmd_irreducible(args):
    M = _module(args)
    v = is_abs_irreducible(M)
    text = f"{M.name}: {v.status} (envelope dim {v.envelope_dim} of {M.dim ** 2})"
    if v.witness is not None:
        text += f"; invariant subspace of dim {v.witness.dim}"
    return v.status == "irreducible", text, v.to_dict()


def cmd_decompose(args):
    M = _module(args)
    D = decompose(M)
    R = regular(M.algebra)
    labels = identify_summands(D, {"Reg": R, "Reg^op": opposite_module(R)})
    lines = [f"{M.name}: {len(D)} summand(s)"]
    for S, status, label in zip(D.summands, D.status, labels):
        lines.append(f"  dim {S.dim} {status}" + (f" = {label}" if label else ""))
    out = {"summands": [{"dim": S.dim, "status": s, "label": lab, "basis": _rows(S)}
                        for S, s, lab in zip(D.summands, D.status, labels)]}
    ok = all(s != "undetected" for s in D.status)
    return ok, "\n".join(lines), out


def cmd_isomorphic(args):
    X = _load_target(args)
    Y = _load_target(args, args.with_)
    if isinstance(X, SuperAlgebra) and isinstance(Y, SuperAlgebra):
        res = st.search_isomorphism(X, Y)
        text = f"{X.name} vs {Y.name}: {res.status}" + (f" ({res.reason})" if res.reason else "")
        out: dict[str, Any] = {"status": res.status}
        if res.map is not None:
            out["map"] = [_vec(r) for r in res.map]
        return bool(res), text, out
    if isinstance(X, SuperBimodule) and isinstance(Y, SuperBimodule):
        for shift in (0, 1):
            iso = find_isomorphism(X, Y, shift)
            if iso is not None:
                return True, f"{X.name} is isomorphic to {Y.name} (parity shift {shift})", \
                    {"status": "found", "parity_shift": shift, "map": [_vec(r) for r in iso.map]}
        return False, f"{X.name} and {Y.name}: no isomorphism", {"status": "none found"}
    raise UsageError("compare two algebras or two modules")


def cmd_ideals(args):
    A = _algebra(args)
    v = _element(A.dim, A.basis_names, args.vector, A.field)
    I = st.ideal_generated(A, [v])
    text = f"ideal generated by {A.format(v)} in {A.name}: dim {I.dim} of {A.dim}"
    return True, text, {"dim": I.dim, "basis": _rows(I)}


def cmd_simple(args):
    A = _algebra(args)
    v = st.is_simple(A)
    text = f"{_verdict(bool(v))} {A.name}: {v.status} ({v.notion})"
    if v.witness is not None:
        text += f"; ideal of dim {v.witness.dim}"
    return bool(v), text, v.to_dict()


def cmd_commutant(args):
    A = _algebra(args)
    if args.subset:
        vecs = [_element(A.dim, A.basis_names, s.strip(), A.field) for s in args.subset.split(";")]
        S = Subspace.span(vecs, A.dim, A.field, A.parity)
        C = st.supercommutant(A, S)
        what = "supercommutant"
    else:
        C = st.commutative_center(A)
        what = "commutative center"
    text = f"{what} of {A.name}: dim {C.dim}  " + "; ".join(A.format(v) for v in C.vectors())
    return True, text, {"dim": C.dim, "basis": _rows(C)}


def cmd_nucleus(args):
    A = _algebra(args)
    N = st.nucleus(A)
    text = f"nucleus of {A.name}: dim {N.dim}  " + "; ".join(A.format(v) for v in N.vectors())
    return True, text, {"dim": N.dim, "basis": _rows(N)}


def cmd_derivations(args):
    A = _algebra(args)
    D = st.derivations(A)
    par = D.row_parities() or ()
    L = st.derivation_algebra(A, D)
    simple = st.is_simple(L) if L.dim else None
    text = f"Der({A.name}): dim {D.dim} ({par.count(0)} even, {par.count(1)} odd)"
    if simple is not None:
        text += f"; {simple.status}"
    out = {"dim": D.dim, "even": par.count(0), "odd": par.count(1),
           "simple": simple.status if simple else None}
    return True, text, out


def cmd_inner(args):
    A = _algebra(args)
    inner = st.inner_derivations(A)
    D = st.derivations(A)
    same = inner.equals(D)
    text = f"{_verdict(same)} {A.name}: inner {inner.dim}, all {D.dim}" + ("; all inner" if same else "")
    return same, text, {"inner": inner.dim, "all": D.dim, "all_inner": same}


def cmd_kronecker(args):
    U = _algebra(args)
    D = _algebra(args, args.factor)
    if args.embed:
        with open(args.embed) as fh:
            rows = json.load(fh)
        embed = ExactArray.from_values([[_scalar(str(x), U.field) for x in r] for r in rows], U.field)
    else:
        embed = _tensor_embedding(U, D)
    res = st.kronecker_factor(U, embed, D)
    text = f"{_verdict(bool(res))} {U.name} over {D.name}"
    if res.Z is not None:
        text += f": Z has dim {res.Z.dim}"
    if res.message:
        text += f"; {res.message}"
    out = {"ok": res.ok, "message": res.message, **res.notes}
    if res.Z is not None:
        out["Z"] = algebra_to_dict(res.Z)
    return res.ok, text, out


def _tensor_embedding(U: SuperAlgebra, D: SuperAlgebra) -> ExactArray:
    """The copy 1 (x) D inside U = Z (x) D, read off from the unit of U."""
    from .constructions import unit_element
    if U.dim % D.dim:
        raise UsageError("dim U is not a multiple of dim D; pass --embed")
    one_U, one_D = unit_element(U), unit_element(D)
    if one_U is None or one_D is None:
        raise UsageError("both algebras need units; pass --embed")
    m = D.dim
    k = next(i for i in range(m) if one_D[i] != 0)
    z = [one_U[i * m + k] / one_D[k] for i in range(U.dim // m)]
    rows = []
    for d in range(m):
        row = [U.field(0)] * U.dim
        for i, c in enumerate(z):
            row[i * m + d] = c
        rows.append(row)
    return ExactArray.from_values(rows, U.field)


def cmd_verify_paper(args):
    def progress(r):
        if not args.json:
            print(f"{r.verdict:5s} {r.id}  {r.anchor}", flush=True)
    field = args.field if args.field_given else None
    rep = verify_paper_suite(args.filter, field, progress)
    c = rep.counts()
    text = " ".join(f"{k} {v}" for k, v in c.items())
    return rep.ok, text, rep.to_dict(args.timings)


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _common(p: argparse.ArgumentParser, target: bool = True):
    if target:
        p.add_argument("--catalog", metavar="NAME", help="catalog expression, e.g. 'Dt(2,1,0,0)'")
        p.add_argument("--file", metavar="PATH", help="algebra or module JSON file")
    p.add_argument("--field", default="q", help="q or p<N> (default q)")
    p.add_argument("--json", action="store_true", help="print the JSON report fragment")


COMMANDS = {
    "check-identity": cmd_check_identity, "peirce": cmd_peirce, "eigenspace": cmd_eigenspace,
    "mutate": cmd_mutate, "symmetrize": cmd_symmetrize, "tensor": cmd_tensor, "hull": cmd_hull,
    "sne": cmd_sne, "module-check": cmd_module_check, "mod-gen": cmd_mod_gen,
    "irreducible": cmd_irreducible, "decompose": cmd_decompose, "isomorphic": cmd_isomorphic,
    "ideals": cmd_ideals, "simple": cmd_simple, "commutant": cmd_commutant,
    "nucleus": cmd_nucleus, "derivations": cmd_derivations, "inner": cmd_inner,
    "kronecker": cmd_kronecker, "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ncj", description="Exact checks for noncommutative Jordan superalgebras.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check-identity", help="test a defining identity")
    p.add_argument("identity", choices=["flexible", "jordan", "ncj", "poisson"])
    p.add_argument("--bracket", metavar="EXPR", help="bracket algebra for the poisson check")
    _common(p)

    p = sub.add_parser("peirce", help="Peirce decomposition and its relations")
    p.add_argument("--idempotent", metavar="ELEM")
    _common(p)
    p = sub.add_parser("eigenspace", help="eigenspace of L_e inside U_1")
    p.add_argument("--idempotent", metavar="ELEM")
    p.add_argument("--lam", required=True, metavar="SCALAR")
    _common(p)

    for name, helptext in (("mutate", "the mutation at --lam"), ("symmetrize", "the circle algebra"),
                           ("tensor", "graded tensor product with --with"),
                           ("hull", "adjoin a unit"), ("sne", "split null extension of a module")):
        p = sub.add_parser(name, help=helptext)
        if name == "mutate":
            p.add_argument("--lam", required=True, metavar="SCALAR")
        if name == "tensor":
            p.add_argument("--with", dest="with_", required=True, metavar="EXPR")
        p.add_argument("--out", metavar="PATH", help="write the result as JSON")
        _common(p)

    p = sub.add_parser("module-check", help="noncommutative Jordan bimodule check")
    p.add_argument("--route", choices=["rpm", "sne"], default="rpm")
    _common(p)
    p = sub.add_parser("mod-gen", help="submodule generated by a vector")
    p.add_argument("--vector", required=True, metavar="ELEM")
    _common(p)
    for name, helptext in (("irreducible", "absolute irreducibility"),
                           ("decompose", "split into indecomposable summands"),
                           ("simple", "simplicity verdict"), ("nucleus", "associative nucleus"),
                           ("derivations", "derivation superalgebra"),
                           ("inner", "are all derivations inner")):
        p = sub.add_parser(name, help=helptext)
        _common(p)
    p = sub.add_parser("isomorphic", help="isomorphism search")
    p.add_argument("--with", dest="with_", required=True, metavar="EXPR")
    _common(p)
    p = sub.add_parser("ideals", help="ideal generated by a vector")
    p.add_argument("--vector", required=True, metavar="ELEM")
    _common(p)
    p = sub.add_parser("commutant", help="supercommutant of a subset (default: center)")
    p.add_argument("--subset", metavar="ELEMS", help="semicolon separated elements")
    _common(p)
    p = sub.add_parser("kronecker", help="factor U as Z (x) D")
    p.add_argument("--factor", required=True, metavar="EXPR", help="the subalgebra D")
    p.add_argument("--embed", metavar="PATH", help="JSON rows giving the image of D in U")
    _common(p)

    p = sub.add_parser("verify-paper", help="run the instance battery")
    p.add_argument("--filter", metavar="PATTERN", help="entry id, id glob or tag")
    p.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    _common(p, target=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    args.field_given = "--field" in argv or any(a.startswith("--field=") for a in argv)
    try:
        passed, text, fragment = COMMANDS[args.command](args)
    except (UsageError, FormatError) as exc:
        print(f"ncj: error: {exc}", file=sys.stderr)
        return 2
    except (PeirceError, st.StructureError, ValueError) as exc:
        print(f"ncj: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"command": args.command, "passed": passed, "result": fragment},
                         indent=1, sort_keys=True))
    else:
        print(text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
