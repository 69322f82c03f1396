"""The verify-paper battery: a data-driven list of instance checks with verdicts.

Each manifest entry names a target (catalog expression), an operation, its
arguments and the expected outcome. Verdicts are PASS, XFAIL (expected to
fail and did), FAIL and XPASS (expected to fail but passed).
"""

from __future__ import annotations

import fnmatch
import json
import time
from dataclasses import dataclass, field as dc_field
from importlib import resources
from typing import Callable

from . import structure as st
from .algebra import SuperAlgebra
from .catalog import build_Dt, build_Q, build_Vmodule
from .constructions import mutate, mutation_compose, symmetrize
from .field import QQ, Field, parse_field, parse_rational
from .formats import resolve, resolve_algebra
from .identities import (check_associative, check_flexible, check_jordan,
                         check_noncommutative_jordan, check_supercommutative)
from .linalg import ExactArray, Subspace, format_scalar
from .peirce import (eigen_decomposition, eigenspace_U1, indicator_matrix_units, indicator_of,
                     peirce_decompose, verify_peirce_relations)
from .representations import (check_ncj_bimodule, check_via_rpm, decompose, direct_sum_modules,
                              dt1_relations, identify_summands, is_abs_irreducible,
                              module_from_rplus_rminus, opposite_module, regular, rminus_candidates,
                              rminus_formulas, sl2_relations)

VERDICTS = ("PASS", "XFAIL", "FAIL", "XPASS")


@dataclass
class SuiteEntry:
    id: str
    op: str
    anchor: str
    tags: list[str]
    target: str | None = None
    args: dict = dc_field(default_factory=dict)
    expect: str = "pass"
    field: str = "q"


@dataclass
class EntryResult:
    id: str
    anchor: str
    tags: list[str]
    verdict: str
    expect: str
    detail: dict
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "tags": self.tags,
               "expect": self.expect, "verdict": self.verdict, "detail": self.detail}
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class SuiteReport:
    results: list[EntryResult]
    filter: str | None = None
    field: str | None = None

    @property
    def ok(self) -> bool:
        return all(r.verdict in ("PASS", "XFAIL") for r in self.results)

    def counts(self) -> dict[str, int]:
        return {v: sum(r.verdict == v for r in self.results) for v in VERDICTS}

    def to_dict(self, timings: bool = False) -> dict:
        return {"suite": "verify-paper", "filter": self.filter, "field": self.field,
                "summary": self.counts(),
                "entries": [r.to_dict(timings) for r in self.results]}

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=1, sort_keys=True)


def load_manifest() -> list[SuiteEntry]:
    text = resources.files("ncjordan").joinpath("data/suite.json").read_text()
    return [SuiteEntry(**e) for e in json.loads(text)["entries"]]


def select(entries: list[SuiteEntry], pattern: str | None, field: str | None) -> list[SuiteEntry]:
    out = []
    for e in entries:
        if field is not None and e.field != field:
            continue
        if pattern:
            hit = (pattern in e.tags or fnmatch.fnmatch(e.id, pattern)
                   or pattern in e.id or any(fnmatch.fnmatch(t, pattern) for t in e.tags))
            if not hit:
                continue
        out.append(e)
    return sorted(out, key=lambda e: e.id)


def run_entry(entry: SuiteEntry) -> EntryResult:
    t0 = time.perf_counter()
    fld = parse_field(entry.field)
    try:
        ok, detail = OPERATIONS[entry.op](entry, fld)
    except Exception as exc:  # a crash is a failed check with the error as witness
        ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    expected = entry.expect == "pass"
    verdict = {(True, True): "PASS", (True, False): "FAIL",
               (False, False): "XFAIL", (False, True): "XPASS"}[(expected, ok)]
    return EntryResult(entry.id, entry.anchor, entry.tags, verdict, entry.expect, detail,
                       time.perf_counter() - t0)


def verify_paper_suite(pattern: str | None = None, field: str | None = None,
                       progress: Callable[[EntryResult], None] | None = None) -> SuiteReport:
    results = []
    for e in select(load_manifest(), pattern, field):
        r = run_entry(e)
        if progress:
            progress(r)
        results.append(r)
    return SuiteReport(results, pattern, field)


# helpers


def _q(text, field: Field = QQ):
    return field(parse_rational(str(text)))


def _target(entry: SuiteEntry, field: Field):
    return resolve(entry.target, field)


def idempotent_vector(A: SuperAlgebra, idem) -> ExactArray:
    if isinstance(idem, dict):
        return A.element({k: _q(v, A.field) for k, v in idem.items()})
    return A.basis_vector(idem)


def _report_detail(rep) -> dict:
    return rep.to_dict()


def _all(d: dict[str, bool]) -> tuple[bool, dict]:
    bad = sorted(k for k, v in d.items() if not v)
    return not bad, {"failed": bad, "checked": len(d)}


# operations


def op_identity(entry, field):
    A = _target(entry, field)
    kind = entry.args["identity"]
    fn = {"flexible": check_flexible, "jordan": check_jordan, "ncj": check_noncommutative_jordan,
          "associative": check_associative, "supercommutative": check_supercommutative}[kind]
    rep = fn(A)
    return rep.passed, _report_detail(rep)


def op_dt_identity_grid(entry, field):
    vals = [_q(v, field) for v in entry.args["values"]]
    fails = []
    n = 0
    for t in entry.args["t"]:
        J = build_Dt(t, _q("1/2", field), 0, 0, field)
        for a in vals:
            for b in vals:
                for g in vals:
                    n += 1
                    A = build_Dt(t, a, b, g, field)
                    if not check_flexible(A):
                        fails.append(f"flexible {A.name}")
                    if not check_noncommutative_jordan(A):
                        fails.append(f"ncj {A.name}")
                    if not symmetrize(A).same_table(J):
                        fails.append(f"symmetrization {A.name}")
    return not fails, {"algebras": n, "failures": fails[:5]}


def op_mutation_laws(entry, field):
    A = _target(entry, field)
    fails = []
    for lam, mu in entry.args["pairs"]:
        lam, mu = _q(lam, field), _q(mu, field)
        lhs = mutate(mutate(A, lam), mu)
        rhs = mutate(A, mutation_compose(lam, mu))
        if not lhs.table.equals(rhs.table):
            fails.append(f"({format_scalar(lam)}, {format_scalar(mu)})")
    half = mutate(A, _q("1/2", field)).table.equals(symmetrize(A).table)
    return not fails and half, {"pairs": len(entry.args["pairs"]), "failures": fails,
                                "half_is_symmetrization": half}


def op_peirce(entry, field):
    A = _target(entry, field)
    out = {}
    ok = True
    for idem in entry.args["idempotents"]:
        e = idempotent_vector(A, idem)
        rep = verify_peirce_relations(A, e)
        label = idem if isinstance(idem, str) else A.format(e)
        out[label] = {"passed": rep.passed, "dims": list(peirce_decompose(A, e).dims())}
        if not rep.passed:
            out[label]["witness"] = rep.to_dict().get("witness")
            ok = False
    return ok, out


def op_dt1_eigenspaces(entry, field):
    A = _target(entry, field)
    e1 = A.basis_vector("e1")
    want = {1: "x", 0: "y"}
    detail = {}
    ok = True
    for lam, name in want.items():
        S = eigenspace_U1(A, e1, field(lam))
        good = S.equals(Subspace.span([A.basis_vector(name)], A.dim, field))
        detail[f"lambda={lam}"] = {"dim": S.dim, "expected": name, "ok": good}
        ok = ok and good
    dec = eigen_decomposition(A, e1)
    detail["complete"] = dec.complete
    return ok and dec.complete, detail


def op_dt1_module(entry, field):
    t = entry.args["t"]
    A = build_Dt(t, 1, 0, 0, field)
    R = regular(A)
    M = direct_sum_modules(R, opposite_module(R))
    ok_rel, rel = _all(dt1_relations(M, t))
    D = decompose(M)
    labels = identify_summands(D, {"Reg": R, "Reg^op": opposite_module(R)})
    ok_dec = (len(D) == 2 and D.status == ["irreducible", "irreducible"]
              and sorted(str(x) for x in labels) == ["Reg", "Reg^op"])
    rel.update({"summands": len(D), "labels": sorted(str(x) for x in labels),
                "status": D.status})
    return ok_rel and ok_dec, rel


def op_dt0_degeneration(entry, field):
    A = build_Dt(0, 1, 0, 0, field)
    M = regular(A)
    v = is_abs_irreducible(M)
    want = Subspace.span([A.basis_vector(n) for n in ("e1", "x", "y")], A.dim, field)
    witness_ok = v.witness is not None and v.witness.equals(want)
    D = decompose(M)
    indecomposable = D.status == ["indecomposable"]
    left = ExactArray.from_values([[[0]], [[1]], [[0]], [[0]]], field)
    right = ExactArray.from_values([[[0], [1], [0], [0]]], field)
    from .representations import SuperBimodule
    one = SuperBimodule(A, (0,), left, right, "e2-line")
    one_ok = check_ncj_bimodule(A, one).passed
    ok = v.status == "reducible" and witness_ok and indecomposable and one_ok
    return ok, {"status": v.status, "witness_dim": v.witness.dim if v.witness else None,
                "witness_is_e1_x_y": witness_ok, "decomposition": D.status[0],
                "e2_line_module": one_ok}


def op_rminus_route(entry, field):
    t = entry.args["t"]
    A = build_Dt(t, _q("1/2", field), _q("1/2", field), 0, field)
    R = regular(A)
    detail = {}
    ok = True
    for name, M in (("Reg", R), ("Reg^op", opposite_module(R))):
        good, d = _all({**rminus_formulas(M, t), **sl2_relations(M, t)})
        detail[name] = d
        ok = ok and good
    return ok, detail


def op_module_check(entry, field):
    M = _target(entry, field)
    route = entry.args.get("route", "rpm")
    rep = check_via_rpm(M.algebra, M) if route == "rpm" else check_ncj_bimodule(M.algebra, M)
    return rep.passed, _report_detail(rep)


def op_vmodule_circle(entry, field):
    fails = []
    for a, b, g in entry.args["triples"]:
        M = build_Vmodule(_q(a, field), _q(b, field), _q(g, field), False, field)
        if not check_ncj_bimodule(M.algebra, M):
            fails.append(M.name)
    return not fails, {"triples": len(entry.args["triples"]), "failures": fails}


def op_derivations_dt(entry, field):
    t = entry.args["t"]
    J = build_Dt(t, _q("1/2", field), 0, 0, field)
    D = st.derivations(J)
    par = D.row_parities()
    named = st.dt_derivation_basis(t, field)
    P = st.DT_DERIVATION_PARITY
    spans = Subspace.span([m.reshape(16) for m in named.values()], 16, field).equals(D)
    bad = []
    for (u, v), exp in st.dt_derivation_table(t, field).items():
        br = st.supercommutator(named[u], named[v], P[u], P[v])
        want = ExactArray.zeros((4, 4), field)
        for k, c in exp.items():
            want = want + named[k].scale(c)
        if not br.equals(want):
            bad.append(f"[{u},{v}]")
    L = st.derivation_algebra(J, D)
    inner = st.all_inner(J)
    simple = st.is_simple(L)
    ok = D.dim == 5 and sorted(par) == [0, 0, 0, 1, 1] and spans and not bad and inner and bool(simple)
    return ok, {"dim": D.dim, "even": par.count(0), "odd": par.count(1), "table_aligned": spans,
                "table_failures": bad, "all_inner": inner, "simple": simple.status}


def op_kronecker(entry, field):
    Z = resolve_algebra(entry.args["z"], field)
    D = resolve_algebra(entry.args["d"], field)
    U = st.graded_tensor(Z, D)
    res = st.kronecker_factor(U, st.standard_embedding(D, Z), D)
    detail = {"message": res.message, **res.notes}
    if not res:
        return False, detail
    found = st.search_isomorphism(res.Z, Z)
    detail["z_recovered"] = found.status
    detail["z_table_equal"] = res.Z.same_table(Z)
    ok = bool(found)
    if entry.args.get("associative"):
        detail["associative"] = check_associative(U).passed
        ok = ok and detail["associative"]
    return ok, detail


def op_q1_alternative(entry, field):
    Q = build_Q(1, field)
    bar = Q.basis_vector("~1")
    sq = Q.multiply(bar, bar).equals(Q.basis_vector("1"))
    M = regular(Q)
    fails = []
    circle = Q.derived_table("circle")
    for kind in ("L", "R"):
        ops = M.operators(kind)
        for a in range(Q.dim):
            for b in range(Q.dim):
                s = -1 if Q.parity[a] * Q.parity[b] else 1
                jordan = (ops[a] @ ops[b] + (ops[b] @ ops[a]).scale(s)).scale(_q("1/2", field))
                lhs = st.einsum("u,uij->ij", circle[a, b], ops)
                if not lhs.equals(jordan):
                    fails.append(f"{kind} {Q.basis_names[a]},{Q.basis_names[b]}")
    return sq and not fails, {"bar_squared_is_one": sq, "failures": fails}


def op_q2_structure(entry, field):
    Q = build_Q(2, field)
    D = build_Dt(-1, 1, 0, 0, field)
    rows = [Q.basis_vector("e11"), Q.basis_vector("e22"), Q.basis_vector("~e12"),
            Q.basis_vector("~e21").scale(2)]
    from .linalg import stack
    emb = stack(rows)
    rep = st.verify_isomorphism(D, Q, emb, require_bijective=False)
    simple = st.is_simple(Q)
    assoc = check_associative(Q).passed
    return bool(rep) and bool(simple) and assoc, {"simple": simple.status, "associative": assoc,
                                                  "embedding": rep.passed}


def op_rminus_candidates(entry, field):
    J = _target(entry, field)
    R = regular(J)
    M = direct_sum_modules(R, opposite_module(R))
    Rp = M.operators("Rplus")
    base = check_via_rpm(J, module_from_rplus_rminus(J, M.parity, Rp)).passed
    out = {"zero_rminus_passes": base}
    ok = base
    for name, Rm in rminus_candidates(M):
        N = module_from_rplus_rminus(J, M.parity, Rp, Rm)
        rep = check_via_rpm(J, N)
        out[name] = "rejected" if not rep.passed else "accepted"
        ok = ok and not rep.passed and not Rm.is_zero()
    return ok, out


def op_kac_vanishing(entry, field):
    J = _target(entry, field)
    ok = True
    out = {}
    for mname, M in (("Reg", regular(J)), ("Reg^op", opposite_module(regular(J)))):
        for a in ("uz", "vz", "uw", "vw"):
            z = M.mult_operator(a, "Rminus").is_zero()
            out[f"{mname} R-_{a} = 0"] = z
            ok = ok and z
    return ok, out


def op_kac_structure(entry, field):
    A = _target(entry, field)
    simple = st.is_simple(A)
    out = {"dim": A.dim, "even": A.even_dim, "odd": A.odd_dim, "simple": simple.status}
    ok = bool(simple)
    for key in ("dim", "even", "odd"):
        if key in entry.args:
            ok = ok and out[key] == entry.args[key]
    return ok, out


def op_isomorphism(entry, field):
    A = _target(entry, field)
    B = resolve_algebra(entry.args["other"], field)
    res = st.search_isomorphism(A, B)
    out = {"status": res.status}
    if res.map is not None:
        out["verified"] = st.verify_isomorphism(A, B, res.map).passed
    if res.reason:
        out["reason"] = res.reason
    return bool(res) and out.get("verified", False), out


def op_indicator(entry, field):
    lam = _q(entry.args["lambda"], field)
    A, es, ws = indicator_matrix_units(3, lam)
    phis = [indicator_of(A, es, w) for w in ws]
    want = lam * (field(1) - lam)
    out = {"phi": [format_scalar(p) for p in phis], "expected": format_scalar(want)}
    ok = all(p == want for p in phis)
    if "property" in entry.args:
        prop = {"associative": check_associative,
                "supercommutative": check_supercommutative}[entry.args["property"]](A).passed
        out[entry.args["property"]] = prop
        ok = ok and prop
    return ok, out


def op_simple(entry, field):
    A = _target(entry, field)
    v = st.is_simple(A)
    want = entry.args.get("status", "simple")
    out = v.to_dict()
    out.pop("witness", None)
    ok = v.status == want
    if "witness_dim" in entry.args:
        ok = ok and v.witness is not None and v.witness.dim == entry.args["witness_dim"]
    return ok, out


def op_derivation_dim(entry, field):
    A = _target(entry, field)
    D = st.derivations(A)
    return D.dim == entry.args["dim"], {"dim": D.dim}


def op_commutative_center(entry, field):
    A = _target(entry, field)
    C = st.commutative_center(A)
    want = Subspace.span([idempotent_vector(A, entry.args["spanned_by"])], A.dim, field)
    return C.equals(want), {"dim": C.dim}


OPERATIONS: dict[str, Callable] = {
    "identity": op_identity,
    "dt_identity_grid": op_dt_identity_grid,
    "mutation_laws": op_mutation_laws,
    "peirce": op_peirce,
    "dt1_eigenspaces": op_dt1_eigenspaces,
    "dt1_module": op_dt1_module,
    "dt0_degeneration": op_dt0_degeneration,
    "rminus_route": op_rminus_route,
    "module_check": op_module_check,
    "vmodule_circle": op_vmodule_circle,
    "derivations_dt": op_derivations_dt,
    "kronecker": op_kronecker,
    "q1_alternative": op_q1_alternative,
    "q2_structure": op_q2_structure,
    "rminus_candidates": op_rminus_candidates,
    "kac_vanishing": op_kac_vanishing,
    "kac_structure": op_kac_structure,
    "isomorphism": op_isomorphism,
    "indicator": op_indicator,
    "simple": op_simple,
    "derivation_dim": op_derivation_dim,
    "commutative_center": op_commutative_center,
}
