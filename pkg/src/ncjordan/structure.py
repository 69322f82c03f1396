"""Ideals, simplicity, commutants, nucleus, derivations, isomorphisms, Kronecker factors."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .algebra import SuperAlgebra, with_signs
from .constructions import ConstructionError, graded_tensor, subalgebra, unit_element
from .field import QQ, Field
from .identities import (CheckReport, Witness, associator_tensor, check_jordan,
                         check_superanticommutative, first_failure)
from .linalg import ExactArray, Subspace, concatenate, einsum, nullspace, rank, stack
from .representations import SuperBimodule, closure, envelope_dim, regular


class StructureError(ValueError):
    pass


# ideals and simplicity


def ideal_generated(A: SuperAlgebra, S) -> Subspace:
    """Least two-sided ideal containing the given vectors."""
    if isinstance(S, Subspace):
        start = S
    else:
        vecs = [v for v in S]
        start = Subspace.span(vecs, A.dim, A.field)
    ops = concatenate([A.operators("Lu"), A.operators("R")])
    return closure(start, ops).with_parity(A.parity)


@dataclass
class SimplicityVerdict:
    """``status`` is simple, not simple or undecided; ``notion`` says which test decided."""

    status: str
    notion: str
    witness: Subspace | None = None
    envelope_dim: int = 0
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "simple"

    def to_dict(self) -> dict:
        out = {"status": self.status, "notion": self.notion, "envelope_dim": self.envelope_dim}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness_dim"] = self.witness.dim
            out["witness"] = [[str(x) for x in row] for row in self.witness.basis.values().tolist()]
        return out


def _graded_ideal_scan(A: SuperAlgebra) -> Subspace | None:
    """Smallest proper ideal generated by a homogeneous scan vector."""
    eye = ExactArray.eye(A.dim, A.field)
    best = None
    cands = [eye[i] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if A.parity[i] == A.parity[j]:
                cands += [eye[i] + eye[j], eye[i] - eye[j]]
    for v in cands:
        I = ideal_generated(A, [v])
        if 0 < I.dim < A.dim and (best is None or I.dim < best.dim):
            best = I
    return best


def is_simple(A: SuperAlgebra) -> SimplicityVerdict:
    """Burnside test on the multiplication algebra of A.

    A full envelope means no invariant subspace at all (absolute simplicity).
    Otherwise the parity operator is added, which leaves exactly the graded
    ideals, and a scan looks for a witness ideal.
    """
    if A.table.is_zero():
        return SimplicityVerdict("not simple", "trivial product", None, 0, "A^2 = 0")
    M = regular(A)
    n = A.dim
    d = envelope_dim(M)
    if d == n * n:
        return SimplicityVerdict("simple", "absolute", None, d)
    W = _graded_ideal_scan(A)
    if W is not None:
        return SimplicityVerdict("not simple", "graded", W, d, f"ideal of dim {W.dim}")
    dg = envelope_dim(M, [M.parity_operator()])
    if dg == n * n:
        return SimplicityVerdict("simple", "graded", None, dg,
                                 "only ungraded invariant subspaces exist")
    return SimplicityVerdict("undecided", "graded", None, dg)


# commutants and nucleus


def _homogeneous_rows(A: SuperAlgebra, S: Subspace) -> list[ExactArray]:
    par = np.array(A.parity)
    out = []
    for v in S.vectors():
        for p in (0, 1):
            mask = par == p
            w = ExactArray(v.num * mask, v.den, v.field)
            if not w.is_zero():
                out.append(w)
    return out


def supercommutant(A: SuperAlgebra, S) -> Subspace:
    """{a : [a, s] = 0 for all s in S}, the kernel of the stacked R^-_s."""
    if not isinstance(S, Subspace):
        S = Subspace(S.reshape(1, -1) if S.ndim == 1 else S)
    rows = _homogeneous_rows(A, S)
    if not rows:
        return Subspace.whole(A.dim, A.field, A.parity)
    ops = [A.mult_operator(s, "Rminus") for s in rows]
    return nullspace(concatenate(ops, axis=1), A.parity)


def commutative_center(A: SuperAlgebra) -> Subspace:
    return supercommutant(A, Subspace.whole(A.dim, A.field, A.parity))


def nucleus(A: SuperAlgebra) -> Subspace:
    """Elements n with (n,A,A) = (A,n,A) = (A,A,n) = 0."""
    n = A.dim
    t = associator_tensor(A)
    maps = [t.reshape(n, n * n * n),
            t.transpose(1, 0, 2, 3).reshape(n, n * n * n),
            t.transpose(2, 0, 1, 3).reshape(n, n * n * n)]
    return nullspace(concatenate(maps, axis=1), A.parity)


# derivations


def _flat_parity(p_src: Sequence[int], p_dst: Sequence[int]) -> list[int]:
    return [(a + b) % 2 for a in p_src for b in p_dst]


def derivations_into(A: SuperAlgebra, M: SuperBimodule) -> Subspace:
    """Graded derivations d: A -> M, flattened row-major as n x k matrices.

    The condition is (ab)d = a(bd) + (-1)^{p(b)p(d)} (ad)b, solved separately
    for even and odd d.
    """
    n, k = A.dim, M.dim
    c = A.table
    eye_k = ExactArray.eye(k, A.field)
    eye_n = ExactArray.eye(n, A.field)
    # variables d[m, l]; equation index (i, j, out)
    term1 = einsum("ijm,lo->mlijo", c, eye_k)
    term2 = einsum("jq,ilo->qlijo", eye_n, M.left)
    term3 = einsum("iq,ljo->qlijo", eye_n, M.right)
    flat_par = _flat_parity(A.parity, M.parity)
    pieces = []
    for dpar in (0, 1):
        s = np.array([1 if (pb * dpar) % 2 == 0 else -1 for pb in A.parity])
        t3 = with_signs(term3, s[None, None, None, :, None])
        system = (term1 - term2 - t3).reshape(n * k, n * n * k)
        allowed = [v for v in range(n * k) if flat_par[v] == dpar]
        if not allowed:
            continue
        K = nullspace(system.take(allowed, axis=0))
        if K.dim == 0:
            continue
        emb = np.zeros((K.dim, n * k), dtype=object)
        vals = K.basis.values()
        for r in range(K.dim):
            for ci, v in enumerate(allowed):
                emb[r, v] = vals[r, ci]
        pieces.append(ExactArray.from_values(emb.tolist(), A.field))
    if not pieces:
        return Subspace.zero(n * k, A.field, flat_par)
    return Subspace(concatenate(pieces), flat_par)


def derivations(A: SuperAlgebra) -> Subspace:
    return derivations_into(A, regular(A))


def derivation_matrices(D: Subspace, n: int, k: int | None = None) -> list[ExactArray]:
    k = n if k is None else k
    return [v.reshape(n, k) for v in D.vectors()]


def supercommutator(X: ExactArray, Y: ExactArray, px: int, py: int) -> ExactArray:
    """[X, Y] = XY - (-1)^{|X||Y|} YX, with XY meaning X first."""
    if px * py % 2:
        return X @ Y + Y @ X
    return X @ Y - Y @ X


def inner_derivations(J: SuperAlgebra) -> Subspace:
    """Span of the operators [R_a, R_b] over basis pairs of a Jordan superalgebra."""
    rep = check_jordan(J)
    if not rep:
        raise StructureError(f"{J.name} is not Jordan: {rep.summary()}")
    n = J.dim
    R = J.operators("R")
    rows = []
    for a in range(n):
        for b in range(a, n):
            rows.append(supercommutator(R[a], R[b], J.parity[a], J.parity[b]).reshape(n * n))
    par = _flat_parity(J.parity, J.parity)
    if not rows:
        return Subspace.zero(n * n, J.field, par)
    return Subspace(stack(rows), par)


def all_inner(J: SuperAlgebra) -> bool:
    return inner_derivations(J).equals(derivations(J))


def derivation_algebra(A: SuperAlgebra, D: Subspace | None = None) -> SuperAlgebra:
    """Der(A) with the supercommutator, in the graded basis of ``derivations(A)``."""
    D = derivations(A) if D is None else D
    n = A.dim
    par = D.row_parities()
    if par is None:
        raise StructureError("derivation basis is not homogeneous")
    mats = derivation_matrices(D, n)
    m = len(mats)
    table = np.zeros((m, m, m), dtype=object)
    table[:] = A.field(0)
    for i in range(m):
        for j in range(m):
            br = supercommutator(mats[i], mats[j], par[i], par[j]).reshape(n * n)
            if not D.contains(br):
                raise StructureError("derivations are not closed under the bracket")
            table[i, j, :] = D.coordinates(br).values()
    names = [f"d{i + 1}" for i in range(m)]
    t = ExactArray.from_values(table.tolist(), A.field) if m else ExactArray.zeros((0, 0, 0), A.field)
    L = SuperAlgebra(t, par, f"Der({A.name})", names)
    rep = check_superanticommutative(L)
    if not rep:
        raise StructureError(f"derivation bracket is not superanticommutative: {rep.summary()}")
    return L


def dt_derivation_basis(t, field: Field = QQ) -> dict[str, ExactArray]:
    """The named derivations e, f, h, a, b of the Jordan superalgebra D_t."""
    t = field(t)
    z = field(0)

    def mat(rows):
        full = [[z] * 4 for _ in range(4)]
        for i, row in rows.items():
            for j, v in row.items():
                full[i][j] = field(v)
        return ExactArray.from_values(full, field)

    e1, e2, x, y = range(4)
    return {
        "e": mat({x: {y: 1}}),
        "f": mat({y: {x: 1}}),
        "h": mat({x: {x: 1}, y: {y: -1}}),
        "a": mat({e1: {x: 1}, e2: {x: -1}, y: {e1: 2, e2: -2 * t}}),
        "b": mat({e1: {y: 1}, e2: {y: -1}, x: {e1: -2, e2: 2 * t}}),
    }


DT_DERIVATION_PARITY = {"e": 0, "f": 0, "h": 0, "a": 1, "b": 1}


def dt_derivation_table(t, field: Field = QQ) -> dict[tuple[str, str], dict[str, object]]:
    """Expected brackets among e, f, h, a, b."""
    s = field(1) + field(t)
    return {
        ("e", "f"): {"h": 1}, ("h", "f"): {"f": -2}, ("h", "e"): {"e": 2},
        ("a", "a"): {"f": 4 * s}, ("a", "b"): {"h": -2 * s}, ("b", "b"): {"e": -4 * s},
        ("e", "a"): {"b": -1}, ("f", "a"): {}, ("h", "a"): {"a": -1},
        ("e", "b"): {}, ("f", "b"): {"a": -1}, ("h", "b"): {"b": 1},
    }


# isomorphisms


def verify_isomorphism(A: SuperAlgebra, B: SuperAlgebra, P: ExactArray,
                       require_bijective: bool = True) -> CheckReport:
    """Row i of P is the image of the i-th basis vector of A, in B's coordinates."""
    if A.field != B.field:
        raise StructureError("algebras live over different fields")
    if P.shape != (A.dim, B.dim) or (require_bijective and A.dim != B.dim):
        raise StructureError(f"map has shape {P.shape}, algebras have dims {A.dim}, {B.dim}")
    for i, k in P.nonzero():
        if A.parity[i] != B.parity[k]:
            w = Witness((i, k), (A.basis_names[i], B.basis_names[k]), (), "even")
            return CheckReport(False, "isomorphism", w)
    r = rank(P)
    if r != A.dim or (require_bijective and r != B.dim):
        return CheckReport(False, "isomorphism", Witness((), (), (), "invertible"),
                           {"rank": r})
    lhs = einsum("ijm,mk->ijk", A.table, P)
    rhs = einsum("ia,jb,abk->ijk", P, P, B.table)
    w = first_failure(lhs - rhs, [A.basis_names, A.basis_names], "multiplicative")
    return CheckReport(w is None, "isomorphism", w)


@dataclass
class IsomorphismSearch:
    """``status``: found, none found, requires field extension or unsupported."""

    status: str
    map: ExactArray | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "found"


def _idempotent_bases(A: SuperAlgebra, even: list[int]) -> list[list[ExactArray]]:
    """Ordered bases of the even part made of pairwise orthogonal idempotents."""
    idems = _even_idempotents(A, even)
    if idems is None:
        return []
    k = len(even)
    out = []
    for combo in permutations(idems, k):
        if any(not A.multiply(a, b).is_zero() for a in combo for b in combo if a is not b):
            continue
        if rank(stack(combo)) == k:
            out.append(list(combo))
    return out


def _even_idempotents(A: SuperAlgebra, even: list[int]) -> list[ExactArray] | None:
    """Nonzero idempotents of the even part, or None when some are irrational."""
    k = len(even)
    sub = A.table.take(even, 0).take(even, 1).take(even, 2)
    sols = _solve_quadratic(
        lambda v: _mul_sym(v, v, sub) - np.array(v, dtype=object), k, A.field)
    if sols is None:
        return None
    out = []
    for s in sols:
        if all(c == 0 for c in s):
            continue
        full = [A.field(0)] * A.dim
        for idx, c in zip(even, s):
            full[idx] = c
        out.append(ExactArray.from_values(full, A.field))
    return out


def _mul_sym(x, y, table: ExactArray):
    vals = table.values()
    n = len(x)
    out = np.zeros(vals.shape[2], dtype=object)
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            out = out + x[i] * y[j] * vals[i, j, :]
    return out


def _solve_quadratic(residual, nvars: int, field: Field) -> list[list] | None:
    """All solutions of residual(vars) = 0 in field^nvars.

    Over Q this uses sympy and returns None when a solution is irrational;
    positive-dimensional families are sampled at small integers. Over F_p the
    search is exhaustive.
    """
    if field.characteristic:
        p = field.characteristic
        if p ** nvars > 20000:
            raise StructureError("search space too large over a prime field")
        sols = []
        for vals in product(range(p), repeat=nvars):
            v = [field(c) for c in vals]
            if all(r == 0 for r in residual(v)):
                sols.append(v)
        return sols
    import sympy
    syms = sympy.symbols(f"s0:{nvars}")
    eqs = [sympy.nsimplify(e) if not isinstance(e, sympy.Expr) else e
           for e in residual(list(syms))]
    eqs = [sympy.expand(e) for e in eqs if e != 0]
    eqs = [e for e in eqs if e != 0]
    raw = sympy.solve(eqs, syms, dict=True) if eqs else [{}]
    out = []
    irrational = False
    for sol in raw:
        free = [s for s in syms if s not in sol]
        for sample in product((1, 2, 0, -1), repeat=len(free)):
            sub = dict(zip(free, sample))
            vals = [sympy.nsimplify(sympy.sympify(sol.get(s, s)).subs(sub)) for s in syms]
            if not all(v.is_Rational for v in vals):
                irrational = True
                break
            out.append([field(Fraction(int(v.p), int(v.q))) for v in vals])
            if len(out) > 64:
                break
    if not out and irrational:
        return None
    return out


def _parity_blocks(A: SuperAlgebra) -> tuple[list[int], list[int]]:
    even = [i for i, p in enumerate(A.parity) if p == 0]
    odd = [i for i, p in enumerate(A.parity) if p == 1]
    return even, odd


def search_isomorphism(A: SuperAlgebra, B: SuperAlgebra) -> IsomorphismSearch:
    """Search for an even algebra isomorphism A -> B of dimension at most 4.

    The even part is matched through bases of orthogonal idempotents when both
    have them; the odd block is then cut down by the linear conditions coming
    from even-odd products and fixed by the quadratic odd-odd conditions.
    Without idempotent bases the whole even block is solved directly.
    """
    if A.dim != B.dim or A.field != B.field:
        raise StructureError("algebras differ in dimension or field")
    if A.dim > 4:
        return IsomorphismSearch("unsupported", None, "dimension above 4")
    if sorted(A.parity) != sorted(B.parity):
        return IsomorphismSearch("none found", None, "even/odd dimensions differ")
    ea, oa = _parity_blocks(A)
    eb, ob = _parity_blocks(B)
    even_maps = _even_block_candidates(A, B, ea, eb)
    extension = even_maps is None
    for E in even_maps or []:
        found, ext = _complete_odd_block(A, B, E, oa, ob)
        extension = extension or ext
        if found is not None:
            return IsomorphismSearch("found", found)
    if extension:
        return IsomorphismSearch("requires field extension", None,
                                 "a square root outside the field is needed")
    return IsomorphismSearch("none found", None)


def search_isomorphism_small(A: SuperAlgebra, B: SuperAlgebra) -> ExactArray | None:
    return search_isomorphism(A, B).map


def _even_block_candidates(A, B, ea, eb) -> list[ExactArray] | None:
    """Candidate maps on the even part, as dim(A) x dim(B) matrices with zero odd rows."""
    F = A.field
    if not ea:
        return [ExactArray.zeros((A.dim, B.dim), F)]
    ba = _idempotent_bases(A, ea)
    bb = _idempotent_bases(B, eb)
    out = []
    if ba and bb:
        src = ba[0]
        coords = solve_rows(stack(src), ea)
        for tgt in bb:
            img = coords @ stack(tgt)      # images of the even basis of A
            out.append(_embed_rows(img, ea, A.dim, B.dim, F))
        return out
    # direct solve for the even block
    k = len(ea)
    ta = A.table.take(ea, 0).take(ea, 1).take(ea, 2).values()
    tb = B.table.take(eb, 0).take(eb, 1).take(eb, 2).values()

    def residual(v):
        P = np.array(v, dtype=object).reshape(k, k)
        lhs = np.einsum("ijm,mk->ijk", ta, P)
        rhs = np.einsum("ia,jb,abk->ijk", P, P, tb)
        return list((lhs - rhs).reshape(-1))

    sols = _solve_quadratic(residual, k * k, F)
    if sols is None:
        return None
    for s in sols:
        img = ExactArray.from_values(np.array(s, dtype=object).reshape(k, k).tolist(), F)
        if rank(img) == k:
            out.append(_embed_rows(img, ea, A.dim, B.dim, F, eb))
    return out


def solve_rows(basis: ExactArray, cols: list[int]) -> ExactArray:
    """Coordinates of the standard basis vectors at ``cols`` in the given row basis."""
    from .constructions import inverse
    sub = basis.take(cols, axis=1)
    return inverse(sub)


def _embed_rows(img: ExactArray, rows: list[int], n: int, m: int, F: Field,
                cols: list[int] | None = None) -> ExactArray:
    full = np.zeros((n, m), dtype=object)
    full[:] = F(0)
    vals = img.values()
    for r, i in enumerate(rows):
        if cols is None:
            full[i, :] = vals[r, :]
        else:
            for c, j in enumerate(cols):
                full[i, j] = vals[r, c]
    return ExactArray.from_values(full.tolist(), F)


def _complete_odd_block(A, B, E: ExactArray, oa, ob) -> tuple[ExactArray | None, bool]:
    F = A.field
    n = A.dim
    if not oa:
        return (E if verify_isomorphism(A, B, E) else None), False
    k = len(oa)
    units = []
    for r in range(k):
        for c in range(k):
            Q = E.values().copy()
            Q[:] = F(0)
            Q[oa[r], ob[c]] = F(1)
            units.append(ExactArray.from_values(Q.tolist(), F))
    even_idx = [i for i in range(n) if i not in oa]
    # linear conditions from products with an even factor
    res_cols = []
    for U in units:
        P = E + U
        lhs = einsum("ijm,mk->ijk", A.table, P)
        rhs = einsum("ia,jb,abk->ijk", P, P, B.table)
        diff = (lhs - rhs).values()
        base = (einsum("ijm,mk->ijk", A.table, E) -
                einsum("ia,jb,abk->ijk", E, E, B.table)).values()
        lin = diff - base
        rows = [lin[i, j, :] for i in range(n) for j in range(n)
                if (i in even_idx) != (j in even_idx)]
        res_cols.append(np.concatenate(rows) if rows else np.zeros(0, dtype=object))
    system = ExactArray.from_values(np.array(res_cols, dtype=object).tolist(), F)
    K = nullspace(system) if system.shape[1] else Subspace.whole(len(units), F)
    if K.dim == 0:
        return None, False
    gens = [sum((U.scale(c) for U, c in zip(units, v.values().tolist())),
                ExactArray.zeros(E.shape, F)) for v in K.vectors()]
    gvals = [g.values() for g in gens]
    ta, tb = A.table.values(), B.table.values()
    evals = E.values()

    def residual(s):
        P = evals.copy()
        for c, g in zip(s, gvals):
            P = P + c * g
        out = []
        for i in oa:
            for j in oa:
                lhs = np.dot(ta[i, j, :], P)
                rhs = np.zeros(B.dim, dtype=object)
                for a in ob:
                    for b in ob:
                        if P[i, a] != 0 and P[j, b] != 0:
                            rhs = rhs + P[i, a] * P[j, b] * tb[a, b, :]
                out.extend(list(lhs - rhs))
        return out

    sols = _solve_quadratic(residual, len(gens), F)
    if sols is None:
        return None, True
    for s in sols:
        P = E
        for c, g in zip(s, gens):
            P = P + g.scale(c)
        if verify_isomorphism(A, B, P):
            return P, False
    return None, False


# Kronecker factorization


@dataclass
class KroneckerResult:
    ok: bool
    Z: SuperAlgebra | None = None
    iso: ExactArray | None = None
    message: str = ""
    notes: dict = dc_field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def image_subspace(U: SuperAlgebra, embed: ExactArray) -> Subspace:
    return Subspace(embed, U.parity)


def kronecker_factor(U: SuperAlgebra, embed: ExactArray, D: SuperAlgebra,
                     idempotent: int | str | None = None) -> KroneckerResult:
    """Factor U as Z (x) D for the supercommutant Z of the embedded copy of D.

    ``embed`` has one row per basis vector of D, giving its image in U. The
    Peirce-restricted commutant with respect to the image of ``idempotent``
    is computed as well and its dimension is reported under ``notes``.
    """
    rep = verify_isomorphism(D, U, embed, require_bijective=False)
    if not rep:
        raise StructureError(f"embedding is not an algebra embedding: {rep.summary()}")
    one_U = unit_element(U)
    one_D = unit_element(D)
    if one_U is None or one_D is None or not (one_D @ embed).equals(one_U):
        raise StructureError("embedding is not unital")
    Z = supercommutant(U, image_subspace(U, embed))
    notes = {"z_dim": Z.dim}
    e = _default_idempotent(D, idempotent)
    if e is not None:
        from .peirce import peirce_decompose
        P = peirce_decompose(U, e @ embed)
        Zp = Z & (P[0] + P[2])
        notes["z_peirce_dim"] = Zp.dim
        notes["z_definitions_agree"] = Zp.dim == Z.dim
    try:
        Zalg = subalgebra(U, Z, name="Z")
    except ConstructionError:
        return KroneckerResult(False, None, None, "Z is not closed under the product", notes)
    T = graded_tensor(Zalg, D)
    rows = []
    for zi in Z.vectors():
        for d in range(D.dim):
            rows.append(U.multiply(zi, embed[d]))
    iso = stack(rows) if rows else ExactArray.zeros((0, U.dim), U.field)
    if T.dim != U.dim:
        return KroneckerResult(False, Zalg, None,
                               f"dim Z * dim D = {T.dim} but dim U = {U.dim}", notes)
    check = verify_isomorphism(T, U, iso)
    if not check:
        return KroneckerResult(False, Zalg, iso, f"evaluation map fails: {check.summary()}", notes)
    return KroneckerResult(True, Zalg, iso, "", notes)


def _default_idempotent(D: SuperAlgebra, idempotent) -> ExactArray | None:
    one = unit_element(D)
    if idempotent is not None:
        return D.basis_vector(idempotent)
    for i in range(D.dim):
        v = D.basis_vector(i)
        if D.is_idempotent(v) and (one is None or not v.equals(one)):
            return v
    return None


def standard_embedding(D: SuperAlgebra, Z: SuperAlgebra) -> ExactArray:
    """Rows 1_Z (x) d inside graded_tensor(Z, D)."""
    one = unit_element(Z)
    if one is None:
        raise StructureError(f"{Z.name} has no unit")
    n, m = Z.dim, D.dim
    rows = []
    for d in range(m):
        v = np.zeros(n * m, dtype=object)
        v[:] = Z.field(0)
        for i, c in enumerate(one.values().tolist()):
            v[i * m + d] = c
        rows.append(v.tolist())
    return ExactArray.from_values(rows, Z.field)


def dual_numbers(field: Field = QQ, odd: bool = False) -> SuperAlgebra:
    """F[s]/(s^2) with s even or odd."""
    return SuperAlgebra.from_products((0, 1 if odd else 0), {(0, 0): {0: 1}, (0, 1): {1: 1},
                                                             (1, 0): {1: 1}},
                                      "F[s]/(s^2)", ("1", "s"), field)


def group_algebra_c2(field: Field = QQ) -> SuperAlgebra:
    return SuperAlgebra.from_products((0, 0), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1},
                                               (1, 1): {0: 1}}, "F[C2]", ("1", "g"), field)


def ground_field(field: Field = QQ) -> SuperAlgebra:
    return SuperAlgebra.from_products((0,), {(0, 0): {0: 1}}, "F", ("1",), field)
