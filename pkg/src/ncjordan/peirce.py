"""Peirce decompositions, L_e-eigenspaces of U_1, and connection witnesses.

For an even idempotent e, ``U_i = {x : ex + xe = i x}`` for i = 0, 1, 2 and
``U_1^[lam] = {x in U_1 : ex = lam x}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import SuperAlgebra
from .field import Scalar
from .identities import CheckReport, Witness
from .linalg import (ExactArray, Subspace, charpoly_factors, concatenate, eigenvalues, einsum, field_sqrt,
                     format_scalar, nullspace, poly_of_matrix)


class PeirceError(ValueError):
    pass


class NotIdempotentError(PeirceError):
    pass


class FieldExtensionRequired(PeirceError):
    pass


@dataclass
class PeirceDecomposition:
    """Peirce spaces U_0, U_1, U_2 and their projections P_0, P_1, P_2."""

    algebra: SuperAlgebra
    idempotent: ExactArray
    components: dict[int, Subspace]
    projections: dict[int, ExactArray]

    def __getitem__(self, i: int) -> Subspace:
        return self.components[i]

    def project(self, x: ExactArray, i: int) -> ExactArray:
        return x @ self.projections[i]

    def dims(self) -> tuple[int, int, int]:
        return tuple(self.components[i].dim for i in (0, 1, 2))


def _require_idempotent(A: SuperAlgebra, e: ExactArray) -> None:
    if not A.is_idempotent(e):
        raise NotIdempotentError(f"{A.format(e)} is not an even idempotent of {A.name}")


def _as_vector(A: SuperAlgebra, e) -> ExactArray:
    if isinstance(e, ExactArray):
        return e
    if isinstance(e, (int, str)):
        return A.basis_vector(e)
    return A.element(e)


def peirce_operator(A: SuperAlgebra, e: ExactArray) -> ExactArray:
    """T = L_e + R_e (e is even, so L_e carries no sign)."""
    return A.mult_operator(e, "L") + A.mult_operator(e, "R")


def peirce_spaces(T: ExactArray, parity, field) -> tuple[dict, dict]:
    """Kernels of T - i (i = 0, 1, 2), cross-checked against the projection polynomials."""
    n = T.shape[0]
    eye = ExactArray.eye(n, field)
    comps = {i: nullspace(T - eye.scale(i), parity) for i in (0, 1, 2)}
    if sum(c.dim for c in comps.values()) != n:
        raise PeirceError("the space does not split into Peirce components")
    h = Fraction(1, 2)
    # P_0 = (T-1)(T-2)/2, P_1 = -T(T-2), P_2 = T(T-1)/2
    polys = {0: [h, -3 * h, 1], 1: [-1, 2, 0], 2: [h, -h, 0]}
    projs = {i: poly_of_matrix([field(c) for c in polys[i]], T) for i in (0, 1, 2)}
    if not (projs[0] + projs[1] + projs[2]).equals(eye):
        raise PeirceError("projections do not sum to the identity")
    for i in (0, 1, 2):
        if n and not Subspace(projs[i], parity).equals(comps[i]):
            raise PeirceError(f"projection P_{i} disagrees with the kernel of T - {i}")
    return comps, projs


def peirce_decompose(A: SuperAlgebra, e) -> PeirceDecomposition:
    """U_i = ker(L_e + R_e - i), with the projections as polynomials in L_e + R_e."""
    e = _as_vector(A, e)
    _require_idempotent(A, e)
    try:
        comps, projs = peirce_spaces(peirce_operator(A, e), A.parity, A.field)
    except PeirceError as exc:
        raise PeirceError(f"{A.name}, idempotent {A.format(e)}: {exc}") from exc
    return PeirceDecomposition(A, e, comps, projs)


def product_space(A: SuperAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of all products uv with u in U, v in V."""
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(A.dim, A.field, A.parity)
    prods = einsum("ai,bj,ijk->abk", U.basis, V.basis, A.table).reshape(U.dim * V.dim, A.dim)
    return Subspace(prods, A.parity)


# several idempotents


@dataclass
class MultiPeirce:
    """Components U_ij (0 <= i <= j <= n) for orthogonal idempotents e_1..e_n."""

    algebra: SuperAlgebra
    idempotents: list[ExactArray]
    components: dict[tuple[int, int], Subspace]

    def __getitem__(self, ij: tuple[int, int]) -> Subspace:
        i, j = ij
        return self.components[(min(i, j), max(i, j))]


def peirce_multi(A: SuperAlgebra, idempotents: Sequence) -> MultiPeirce:
    es = [_as_vector(A, e) for e in idempotents]
    for e in es:
        _require_idempotent(A, e)
    for a in range(len(es)):
        for b in range(len(es)):
            if a != b and not A.multiply(es[a], es[b]).is_zero():
                raise PeirceError("idempotents are not orthogonal")
    n, k = A.dim, len(es)
    eye = ExactArray.eye(n, A.field)
    L = [A.mult_operator(e, "L") for e in es]
    R = [A.mult_operator(e, "R") for e in es]
    T = [L[i] + R[i] for i in range(k)]

    def kernel(ops: list[ExactArray]) -> Subspace:
        return nullspace(concatenate(ops, axis=1), A.parity)

    comps: dict[tuple[int, int], Subspace] = {}
    comps[(0, 0)] = kernel(L + R)
    for i in range(1, k + 1):
        others = [m for j in range(k) if j != i - 1 for m in (L[j], R[j])]
        comps[(i, i)] = kernel([L[i - 1] - eye, R[i - 1] - eye] + others)
        comps[(0, i)] = kernel([T[i - 1] - eye] + [T[j] for j in range(k) if j != i - 1])
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            rest = [T[m] for m in range(k) if m not in (i - 1, j - 1)]
            comps[(i, j)] = kernel([T[i - 1] - eye, T[j - 1] - eye] + rest)
    if sum(c.dim for c in comps.values()) != n:
        raise PeirceError("the algebra is not the direct sum of the components U_ij")
    return MultiPeirce(A, es, comps)


def _multi_target(a: tuple[int, int], b: tuple[int, int]) -> list[tuple[int, int]]:
    """Components that may contain U_a U_b + U_b U_a."""
    (i, j), (k, l) = a, b
    if i == j and k == l:
        return [(i, i)] if i == k else []
    if i == j or k == l:
        d, (p, q) = (i, (k, l)) if i == j else (k, (i, j))
        return [(min(p, q), max(p, q))] if d in (p, q) else []
    if (i, j) == (k, l):
        return [(i, i), (i, j), (j, j)]
    common = {i, j} & {k, l}
    if len(common) == 1:
        c = common.pop()
        x, y = ({i, j} - {c}).pop(), ({k, l} - {c}).pop()
        return [(min(x, y), max(x, y))]
    return []


def verify_multi_peirce(P: MultiPeirce) -> CheckReport:
    """The product rules between the components U_ij."""
    A = P.algebra
    keys = sorted(P.components)
    for a, b in combinations_with_replacement(keys, 2):
        prod = product_space(A, P.components[a], P.components[b]) + \
            product_space(A, P.components[b], P.components[a])
        target = Subspace.zero(A.dim, A.field, A.parity)
        for t in _multi_target(a, b):
            target = target + P[t]
        if not target.contains(prod):
            bad = target.reduce(prod.basis)
            row = next(r for r in range(bad.shape[0]) if not bad[r].is_zero())
            w = Witness((), (f"U{a[0]}{a[1]}", f"U{b[0]}{b[1]}"),
                        tuple(bad[row].values().tolist()), "component_products")
            return CheckReport(False, "multi_peirce", w)
    return CheckReport(True, "multi_peirce")


# eigenspaces of L_e on U_1


def restricted_operator(S: Subspace, op: ExactArray) -> ExactArray:
    """Matrix of an operator preserving S, in the RREF basis of S."""
    img = S.basis @ op
    if S.dim and not S.reduce(img).is_zero():
        raise PeirceError("operator does not preserve the subspace")
    return img.take(S.pivots, axis=1)


def left_spectrum(A: SuperAlgebra, e) -> list[Scalar]:
    """Eigenvalues in the base field of L_e restricted to U_1(e)."""
    e = _as_vector(A, e)
    P = peirce_decompose(A, e)
    U1 = P[1]
    if U1.dim == 0:
        return []
    return eigenvalues(restricted_operator(U1, A.mult_operator(e, "L")))


def eigenspace_U1(A: SuperAlgebra, e, lam) -> Subspace:
    """U_1^[lam] = {x in U_1 : ex = lam x}."""
    e = _as_vector(A, e)
    P = peirce_decompose(A, e)
    lam = A.field(lam)
    op = A.mult_operator(e, "L") - ExactArray.eye(A.dim, A.field).scale(lam)
    return P[1] & nullspace(op, A.parity)


@dataclass
class EigenDecomposition:
    eigenspaces: dict
    complete: bool
    needs_extension: bool


def eigen_decomposition(A: SuperAlgebra, e) -> EigenDecomposition:
    """All U_1^[lam] with lam in the field; flags whether they exhaust U_1."""
    e = _as_vector(A, e)
    P = peirce_decompose(A, e)
    U1 = P[1]
    if U1.dim == 0:
        return EigenDecomposition({}, True, False)
    op = restricted_operator(U1, A.mult_operator(e, "L"))
    factors = charpoly_factors(op)
    spaces = {}
    total = Subspace.zero(A.dim, A.field, A.parity)
    for lam in eigenvalues(op):
        S = eigenspace_U1(A, e, lam)
        spaces[lam] = S
        total = total + S
    return EigenDecomposition(spaces, total.dim == U1.dim, any(len(f) > 2 for f, _ in factors))


def lambdas_for(phi, field) -> tuple[Scalar, Scalar]:
    """The roots of lam (1 - lam) = phi, or FieldExtensionRequired."""
    phi = field(phi)
    disc = field(1) - 4 * phi
    r = field_sqrt(disc, field)
    if r is None:
        raise FieldExtensionRequired(f"lam(1-lam) = {format_scalar(phi)} requires field extension")
    half = field(Fraction(1, 2))
    return (field(1) - r) * half, (field(1) + r) * half


def s_phi(A: SuperAlgebra, e, phi) -> Subspace:
    """S_1^[phi](e) = U_1^[lam] + U_1^[1 - lam] where phi = lam (1 - lam)."""
    lam, mu = lambdas_for(phi, A.field)
    S = eigenspace_U1(A, e, lam)
    return S if lam == mu else S + eigenspace_U1(A, e, mu)


# relation battery for one idempotent


@dataclass
class _Battery:
    A: SuperAlgebra
    P: PeirceDecomposition
    failures: list = field(default_factory=list)

    def fail(self, name: str, labels: tuple, residual: ExactArray):
        self.failures.append(Witness((), tuple(labels), tuple(residual.values().tolist()), name))

    def eq(self, name: str, labels: tuple, lhs: ExactArray, rhs: ExactArray) -> bool:
        d = lhs - rhs
        if d.is_zero():
            return True
        self.fail(name, labels, d.reshape(-1))
        return False


def _basis(S: Subspace, tag: str) -> list[tuple[str, ExactArray]]:
    return [(f"{tag}[{k}]", S.basis[k]) for k in range(S.dim)]


def verify_peirce_relations(A: SuperAlgebra, e, stop_at_first: bool = True) -> CheckReport:
    """Check the Peirce relations and the derived product rules for one idempotent."""
    e = _as_vector(A, e)
    try:
        P = peirce_decompose(A, e)
    except NotIdempotentError:
        raise
    except PeirceError as exc:
        return CheckReport(False, "peirce_relations",
                           Witness((), (), (), f"direct_sum: {exc}"))
    B = _Battery(A, P)
    mul, bul, cir = A.multiply, (lambda x, y: A.derived_product(x, y, "bullet")), \
        (lambda x, y: A.derived_product(x, y, "circle"))
    U0, U1, U2 = P[0], P[1], P[2]
    pr = P.projections
    b0, b1, b2 = _basis(U0, "U0"), _basis(U1, "U1"), _basis(U2, "U2")
    half = A.field(Fraction(1, 2))
    par = A.parity_of

    def contained(name, S: Subspace, labels, x: ExactArray):
        r = S.reduce(x)
        if not r.is_zero():
            B.fail(name, labels, r)

    checks = []

    def products_in_peirce():
        U02 = U0 + U2
        U01 = U0 + U1
        U12 = U1 + U2
        zero = Subspace.zero(A.dim, A.field, A.parity)
        rules = [(b0, b0, U0), (b2, b2, U2), (b0, b1, U1), (b1, b0, U1), (b2, b1, U1),
                 (b1, b2, U1), (b0, b2, zero), (b2, b0, zero)]
        for X, Y, target in rules:
            for lx, x in X:
                for ly, y in Y:
                    contained("peirce_products", target, (lx, ly), mul(x, y))
        for lx, x in b0 + b2:
            i = 0 if lx.startswith("U0") else 2
            B.eq("peirce_half_action", (lx,), mul(x, e), x.scale(half * i))
            B.eq("peirce_half_action", (lx,), mul(e, x), x.scale(half * i))
        for lx, x in b1:
            for ly, y in b1:
                contained("peirce_circle_u1", U02, (lx, ly), cir(x, y))
        del U01, U12
    checks.append(products_in_peirce)

    ops = {k: A.mult_operator(e, k) for k in ("L", "R")}

    def commuting():
        for lx, x in b0 + b2:
            for E in ("L", "R"):
                Ex = A.mult_operator(x, E)
                for F in ("L", "R"):
                    Fe = ops[F]
                    B.eq("commuting_operators", (lx, E, F), Ex @ Fe, Fe @ Ex)
                for i in (0, 1, 2):
                    B.eq("commuting_projections", (lx, E, f"P{i}"), Ex @ pr[i], pr[i] @ Ex)
    checks.append(commuting)

    def restore_products():
        for lz, z in b1:
            ez, ze = mul(e, z), mul(z, e)
            for ly, y in b0:
                B.eq("u0_products", (lz, ly), mul(e, bul(z, y)), mul(z, y))
                B.eq("u0_products", (lz, ly), bul(ez, y), mul(z, y))
                B.eq("u0_products", (lz, ly), mul(bul(y, z), e), mul(y, z))
                B.eq("u0_products", (lz, ly), bul(y, ze), mul(y, z))
            for lu, u in b2:
                B.eq("u2_products", (lz, lu), mul(e, bul(u, z)), mul(u, z))
                B.eq("u2_products", (lz, lu), bul(u, ez), mul(u, z))
                B.eq("u2_products", (lz, lu), mul(bul(z, u), e), mul(z, u))
                B.eq("u2_products", (lz, lu), bul(ze, u), mul(z, u))
            for lw, w in b1:
                we = mul(w, e)
                zw = mul(z, w)
                B.eq("projected_products", (lz, lw), bul(ez, w) @ pr[2], zw @ pr[2])
                B.eq("projected_products", (lz, lw), bul(z, we) @ pr[2], zw @ pr[2])
                wz = mul(w, z)
                B.eq("projected_products", (lz, lw), bul(w, ez) @ pr[0], wz @ pr[0])
                B.eq("projected_products", (lz, lw), bul(we, z) @ pr[0], wz @ pr[0])
                for lu, u in b0 + b2:
                    s = -1 if par(w) == 1 and par(u) == 1 else 1
                    lhs = bul(zw @ pr[1], u)
                    B.eq("p1_bullet", (lz, lw, lu), lhs, mul(z, bul(w, u)) @ pr[1])
                    B.eq("p1_bullet", (lz, lw, lu), lhs, (mul(bul(z, u), w) @ pr[1]).scale(s))
    checks.append(restore_products)

    def circle_cycle():
        for lx, x in b1:
            for ly, y in b1:
                for lz, z in b1:
                    px, py, pz = par(x), par(y), par(z)
                    s = -1 if (px * (py + pz)) % 2 else 1
                    lhs = cir(x, mul(y, z) @ pr[1])
                    B.eq("p1_circle_cycle", (lx, ly, lz), lhs, cir(mul(x, y) @ pr[1], z))
                    B.eq("p1_circle_cycle", (lx, ly, lz), lhs, cir(y, mul(z, x) @ pr[1]).scale(s))
        U02 = U0 + U2
        for lx, x in b1:
            for ly, y in b1:
                if not U02.contains(mul(x, y)):
                    continue
                Ry_Ly = A.mult_operator(y, "R") + A.mult_operator(y, "L")
                zero = ExactArray.zeros((A.dim, A.dim), A.field)
                for E in ("L", "R"):
                    op = pr[1] @ A.mult_operator(x, E) @ pr[1] @ Ry_Ly
                    B.eq("p1_operator_vanishing", (lx, ly, E), op, zero)
    checks.append(circle_cycle)

    def u1_operator_identities():
        if U1.dim == 0:
            return
        B1 = U1.basis
        for blk in (b0, b2):
            for la, a in blk:
                for lb, b in blk:
                    s = -1 if par(a) == 1 and par(b) == 1 else 1
                    ab = mul(a, b)
                    Ra, Rb, La, Lb = (A.mult_operator(a, "R"), A.mult_operator(b, "R"),
                                      A.mult_operator(a, "L"), A.mult_operator(b, "L"))
                    Rab, Lab = A.mult_operator(ab, "R"), A.mult_operator(ab, "L")
                    lbl = (la, lb)
                    B.eq("u1_operator_identities", lbl, B1 @ Rab, B1 @ (Ra @ Rb + (Lb @ Ra).scale(s)))
                    B.eq("u1_operator_identities", lbl, B1 @ Rab, B1 @ (Ra @ Rb + (Rb @ La).scale(s)))
                    B.eq("u1_operator_identities", lbl, B1 @ Lab, B1 @ ((Lb @ La).scale(s) + La @ Rb))
                    B.eq("u1_operator_identities", lbl, B1 @ Lab, B1 @ ((Lb @ La).scale(s) + Ra @ Lb))
    checks.append(u1_operator_identities)

    def eigenspaces():
        if U1.dim == 0:
            return
        lams = eigenvalues(restricted_operator(U1, ops["L"]))
        spaces = {lam: eigenspace_U1(A, e, lam) for lam in lams}
        for lam, S in spaces.items():
            tag = f"U1[{format_scalar(lam)}]"
            for lx, x in b0 + b2:
                for ls, s in _basis(S, tag):
                    contained("eigenspace_invariance", S, (lx, ls), mul(x, s))
                    contained("eigenspace_invariance", S, (ls, lx), mul(s, x))
        zero = Subspace.zero(A.dim, A.field, A.parity)
        one = A.field(1)
        z0 = spaces.get(A.field(0), zero)
        z1 = spaces.get(one, zero)
        for ls, s in _basis(z0, "U1[0]"):
            for lx, x in b0:
                contained("eigenspace_annihilation", zero, (ls, lx), mul(s, x))
            for lx, x in b2:
                contained("eigenspace_annihilation", zero, (lx, ls), mul(x, s))
        for ls, s in _basis(z1, "U1[1]"):
            for lx, x in b0:
                contained("eigenspace_annihilation", zero, (lx, ls), mul(x, s))
            for lx, x in b2:
                contained("eigenspace_annihilation", zero, (ls, lx), mul(s, x))
        U01, U12 = U0 + U1, U1 + U2
        for ls, s in _basis(z0, "U1[0]"):
            for lx, x in b1:
                contained("eigenspace_products", U01, (ls, lx), mul(s, x))
                contained("eigenspace_products", U12, (lx, ls), mul(x, s))
        for ls, s in _basis(z1, "U1[1]"):
            for lx, x in b1:
                contained("eigenspace_products", U12, (ls, lx), mul(s, x))
                contained("eigenspace_products", U01, (lx, ls), mul(x, s))
    checks.append(eigenspaces)

    for check in checks:
        check()
        if B.failures and stop_at_first:
            break
    if B.failures:
        return CheckReport(False, "peirce_relations", B.failures[0],
                           {"failures": len(B.failures)})
    return CheckReport(True, "peirce_relations", notes={"dims": list(P.dims())})


# connection witnesses


@dataclass(frozen=True)
class ConnectionWitness:
    """Elements u, v connecting e_i and e_j (1-based indices into the idempotent list)."""

    i: int
    j: int
    u: ExactArray
    v: ExactArray
    kind: str = "even"
    phi: object = None


def _candidate_phis(A: SuperAlgebra, e: ExactArray) -> list:
    out = []
    for lam in left_spectrum(A, e):
        phi = lam * (A.field(1) - lam)
        if phi not in out:
            out.append(phi)
    return out


def _s_of(A: SuperAlgebra, e: ExactArray, phi) -> Subspace:
    try:
        return s_phi(A, e, phi)
    except FieldExtensionRequired:
        return Subspace.zero(A.dim, A.field, A.parity)


def verify_connection(A: SuperAlgebra, idempotents: Sequence, w: ConnectionWitness) -> CheckReport:
    es = [_as_vector(A, e) for e in idempotents]
    for e in es:
        _require_idempotent(A, e)
    ei, ej = es[w.i - 1], es[w.j - 1]
    name = "connection"
    want = 0 if w.kind == "even" else 1
    for tag, x in (("u", w.u), ("v", w.v)):
        if A.parity_of(x) != want:
            return CheckReport(False, name, Witness((), (tag,), tuple(x.values().tolist()), "parity"))
    phis = [w.phi] if w.phi is not None else _candidate_phis(A, ei)
    found = None
    for phi in phis:
        S = _s_of(A, ei, phi) & _s_of(A, ej, phi)
        if S.contains(w.u) and S.contains(w.v):
            found = A.field(phi)
            break
    if found is None:
        return CheckReport(False, name, Witness((), ("u", "v"), tuple(w.u.values().tolist()),
                                                "eigenspace_membership"))
    vu, uv = A.multiply(w.v, w.u), A.multiply(w.u, w.v)
    if w.kind == "even":
        target_vu = target_uv = ei + ej
    else:
        target_vu, target_uv = ei - ej, ej - ei
    for tag, got, want_v in (("vu", vu, target_vu), ("uv", uv, target_uv)):
        d = got - want_v
        if not d.is_zero():
            return CheckReport(False, name, Witness((), (tag,), tuple(d.values().tolist()),
                                                    "connecting_products"))
    return CheckReport(True, name, notes={"phi": format_scalar(found)})


def indicator_of(A: SuperAlgebra, idempotents: Sequence, w: ConnectionWitness):
    """The indicator phi = lam (1 - lam) of a verified connection witness."""
    report = verify_connection(A, idempotents, w)
    if not report.passed:
        raise PeirceError(f"connection witness does not verify: {report.summary()}")
    from .field import parse_rational
    val = report.notes["phi"]
    return A.field(parse_rational(val)) if A.field.characteristic == 0 else A.field(int(val))


def common_indicator(A: SuperAlgebra, idempotents: Sequence,
                     witnesses: Sequence[ConnectionWitness]) -> CheckReport:
    """All witnessed pairs share a single indicator."""
    phis = {}
    for w in witnesses:
        phis[(w.i, w.j)] = indicator_of(A, idempotents, w)
    values = set(phis.values())
    notes = {f"{i}{j}": format_scalar(v) for (i, j), v in sorted(phis.items())}
    if len(values) <= 1:
        return CheckReport(True, "common_indicator", notes=notes)
    return CheckReport(False, "common_indicator",
                       Witness((), tuple(notes), tuple(phis.values()), "distinct_indicators"),
                       notes)


def indicator_matrix_units(n: int, lam=None) -> tuple[SuperAlgebra, list, list[ConnectionWitness]]:
    """M_n (optionally mutated) with its diagonal idempotents and e_1 connected to each e_j."""
    from .catalog import build_Mn
    from .constructions import mutate
    A = build_Mn(n)
    if lam is not None:
        A = mutate(A, lam)
    es = [A.basis_vector(f"e{i}{i}") for i in range(1, n + 1)]
    ws = []
    for j in range(2, n + 1):
        u = A.basis_vector(f"e1{j}") + A.basis_vector(f"e{j}1")
        ws.append(ConnectionWitness(1, j, u, u, "even"))
    return A, es, ws


def indicator_label(A: SuperAlgebra, e) -> str:
    return ", ".join(format_scalar(x) for x in left_spectrum(A, e))


def k_set_implies_closure(A: SuperAlgebra, e, K: Sequence[ExactArray]) -> CheckReport:
    """If K in U_1 has K U_1 in U_0 + U_2 and no nonzero circle-annihilator in U_1,
    then U_1 U_1 lies in U_0 + U_2.  Reports whether the hypotheses hold and the
    conclusion follows."""
    e = _as_vector(A, e)
    P = peirce_decompose(A, e)
    U1, U02 = P[1], P[0] + P[2]
    for k in K:
        if not U1.contains(k):
            raise PeirceError("K must lie in U_1")
    if not U02.contains(Subspace(product_space(A, Subspace.span(K, A.dim, A.field), U1).basis)):
        return CheckReport(True, "k_set", notes={"hypotheses": False})
    if U1.dim:
        circ = [U1.basis @ A.mult_operator(k, "Rplus") for k in K]
        annihilator = nullspace(concatenate(circ, axis=1)) if circ else Subspace.whole(U1.dim, A.field)
        if annihilator.dim:
            return CheckReport(True, "k_set", notes={"hypotheses": False})
    prod = product_space(A, U1, U1)
    if U02.contains(prod):
        return CheckReport(True, "k_set", notes={"hypotheses": True})
    bad = U02.reduce(prod.basis)
    row = next(r for r in range(bad.shape[0]) if not bad[r].is_zero())
    return CheckReport(False, "k_set", Witness((), ("U1", "U1"), tuple(bad[row].values().tolist()),
                                               "u1_square"), {"hypotheses": True})
