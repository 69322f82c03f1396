"""Identity checkers for superalgebras.

Every operator identity is evaluated on all basis tuples at once; a failing
check reports the lexicographically first basis tuple (with the row vector the
operator was applied to appended last) and the nonzero residual vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import SuperAlgebra, sign_matrix, with_signs
from .linalg import ExactArray, einsum, format_scalar


class ConsistencyError(RuntimeError):
    """Two independent routes to the same verdict disagreed."""


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    labels: tuple[str, ...]
    residual: tuple
    relation: str = ""

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "indices": list(self.indices),
            "labels": list(self.labels),
            "residual": [format_scalar(x) for x in self.residual],
        }


@dataclass
class CheckReport:
    passed: bool
    identity_name: str
    witness: Witness | None = None
    notes: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"passed": self.passed, "identity": self.identity_name}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.notes:
            out["notes"] = {k: v for k, v in sorted(self.notes.items())}
        return out

    def summary(self) -> str:
        head = f"{self.identity_name}: {'pass' if self.passed else 'FAIL'}"
        if self.witness is None:
            return head
        w = self.witness
        rel = f" [{w.relation}]" if w.relation else ""
        res = ", ".join(format_scalar(x) for x in w.residual)
        return f"{head}{rel} at ({', '.join(w.labels)}) residual ({res})"


def first_failure(residual: ExactArray, axis_names: Sequence[Sequence[str]],
                  relation: str = "") -> Witness | None:
    """Lexicographically first index tuple whose residual vector is nonzero.

    ``residual`` has shape ``(k_1, ..., k_m, n)``; the last axis is the vector.
    """
    if residual.ndim == 1:
        if residual.is_zero():
            return None
        return Witness((), (), tuple(residual.values().tolist()), relation)
    mask = np.any(residual.num != 0, axis=-1)
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    idx = tuple(int(i) for i in hits[0])
    labels = tuple(axis_names[k][i] for k, i in enumerate(idx))
    return Witness(idx, labels, tuple(residual[idx].values().tolist()), relation)


def _report(name: str, witness: Witness | None, **notes) -> CheckReport:
    return CheckReport(witness is None, name, witness, dict(notes))


def _par(A: SuperAlgebra) -> np.ndarray:
    return np.array(A.parity, dtype=np.int64)


# elementary properties


def check_supercommutative(A: SuperAlgebra) -> CheckReport:
    s = sign_matrix(A.parity)[:, :, None]
    res = A.table - with_signs(A.table.transpose(1, 0, 2), s)
    names = A.basis_names
    return _report("supercommutative", first_failure(res, [names, names]))


def check_superanticommutative(A: SuperAlgebra) -> CheckReport:
    s = sign_matrix(A.parity)[:, :, None]
    res = A.table + with_signs(A.table.transpose(1, 0, 2), s)
    names = A.basis_names
    return _report("superanticommutative", first_failure(res, [names, names]))


def associator_tensor(A: SuperAlgebra) -> ExactArray:
    c = A.table
    return einsum("xym,mzk->xyzk", c, c) - einsum("yzm,xmk->xyzk", c, c)


def check_associative(A: SuperAlgebra) -> CheckReport:
    names = A.basis_names
    return _report("associative", first_failure(associator_tensor(A), [names] * 3))


def check_super_jacobi(A: SuperAlgebra) -> CheckReport:
    """Super Jacobi identity [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]] for the product."""
    c = A.table
    p = _par(A)
    lhs = einsum("yzm,xmk->xyzk", c, c)
    t1 = einsum("xym,mzk->xyzk", c, c)
    t2 = einsum("xzm,ymk->xyzk", c, c)
    s = sign_matrix(p)[:, :, None, None]
    res = lhs - t1 - with_signs(t2, s)
    names = A.basis_names
    return _report("super_jacobi", first_failure(res, [names] * 3))


# flexibility


def _flex_operator(A: SuperAlgebra) -> ExactArray:
    R, L = A.operators("R"), A.operators("L")
    s = sign_matrix(A.parity)[:, :, None, None]
    rl = einsum("aij,bjk->abik", R, L)
    lb_ra = einsum("bij,ajk->abik", L, R)
    lr = einsum("aij,bjk->abik", L, R)
    rb_la = einsum("bij,ajk->abik", R, L)
    return rl - with_signs(lb_ra, s) - lr + with_signs(rb_la, s)


def _flex_one(A: SuperAlgebra) -> ExactArray:
    R, L, c = A.operators("R"), A.operators("L"), A.table
    s = sign_matrix(A.parity)[:, :, None, None]
    l_ab = with_signs(einsum("abm,mik->abik", c, L), s)
    lb_la = einsum("bij,ajk->abik", L, L)
    r_ba = einsum("bam,mik->abik", c, R)
    rb_ra = einsum("bij,ajk->abik", R, R)
    return l_ab - lb_la - r_ba + rb_ra


def _flex_two(A: SuperAlgebra) -> ExactArray:
    p = _par(A)
    asc = associator_tensor(A)
    e = (np.outer(p, p)[:, :, None] + p[:, None, None] * p[None, None, :]
         + p[None, :, None] * p[None, None, :]) % 2
    s = np.where(e == 1, -1, 1)[:, :, :, None]
    return asc + with_signs(asc.transpose(2, 1, 0, 3), s)


def check_flexible(A: SuperAlgebra, form: str = "operator") -> CheckReport:
    """Flexibility in one of three equivalent forms.

    * ``operator``: [R_a, L_b] = [L_a, R_b] (super commutators)
    * ``flex1``: (-1)^{ab} L_{ab} - L_b L_a = R_{ba} - R_b R_a
    * ``flex2``: (x, y, z) = -(-1)^{xy+xz+yz} (z, y, x)
    """
    names = A.basis_names
    if form == "operator":
        res, axes = _flex_operator(A), [names, names, names]
    elif form == "flex1":
        res, axes = _flex_one(A), [names, names, names]
    elif form == "flex2":
        res, axes = _flex_two(A), [names, names, names]
    else:
        raise ValueError(f"unknown flexibility form {form!r}")
    return _report("flexible", first_failure(res, axes, form), form=form)


# Jordan


def _jordan_operator_witness(A: SuperAlgebra) -> Witness | None:
    R, c = A.operators("R"), A.table
    p = _par(A)
    n = A.dim
    names = A.basis_names
    rr = einsum("bij,cjk->bcik", R, R)
    r_prod = einsum("bcm,mik->bcik", c, R)
    s_bc = sign_matrix(p)
    for a in range(n):
        ra = R[a]
        t1 = einsum("ij,bcjk->bcik", ra, rr)
        t2 = einsum("cbij,jk->bcik", rr, ra)
        q = einsum("cm,mbk->cbk", c[a], c)
        t3 = einsum("cbm,mik->bcik", q, R)
        t4 = einsum("ij,bcjk->bcik", ra, r_prod)
        r_ba = einsum("bm,mik->bik", c[:, a, :], R)
        t5 = einsum("cij,bjk->bcik", R, r_ba)
        r_ac = einsum("cm,mik->cik", c[a], R)
        t6 = einsum("bij,cjk->bcik", R, r_ac)
        e3 = (p[a] * p[:, None] + p[a] * p[None, :] + np.outer(p, p)) % 2
        s3 = np.where(e3 == 1, -1, 1)[:, :, None, None]
        s_ab = np.where(p[a] * p % 2 == 1, -1, 1)[:, None, None, None]
        res = (t1 + with_signs(t2, s3) + with_signs(t3, s_bc[:, :, None, None])
               - t4 - with_signs(t5, s3) - with_signs(t6, s_ab))
        w = first_failure(res, [names, names, names])
        if w is not None:
            return Witness((a,) + w.indices, (names[a],) + w.labels, w.residual, "jordan_operator")
    return None


def check_jordan(A: SuperAlgebra) -> CheckReport:
    """Supercommutativity plus the linearised Jordan operator identity."""
    sc = check_supercommutative(A)
    if not sc.passed:
        w = sc.witness
        return _report("jordan", Witness(w.indices, w.labels, w.residual, "supercommutative"))
    return _report("jordan", _jordan_operator_witness(A))


# noncommutative Jordan


def _ncj_witness(A: SuperAlgebra) -> Witness | None:
    R, L = A.operators("R"), A.operators("L")
    S = A.derived_table("circle")
    p = _par(A)
    n = A.dim
    names = A.basis_names
    s_uc = sign_matrix(p)[:, :, None, None]
    g = einsum("uij,cjk->ucik", R, L) - with_signs(einsum("cij,ujk->ucik", L, R), s_uc)
    for a in range(n):
        t1 = einsum("bu,ucik->bcik", S[a], g)
        t2 = einsum("bcu,uik->bcik", S, g[:, a])
        t3 = einsum("cu,ubik->bcik", S[:, a, :], g)
        e2 = (p[a] * (p[:, None] + p[None, :])) % 2
        e3 = (p[None, :] * (p[a] + p[:, None])) % 2
        s2 = np.where(e2 == 1, -1, 1)[:, :, None, None]
        s3 = np.where(e3 == 1, -1, 1)[:, :, None, None]
        res = t1 + with_signs(t2, s2) + with_signs(t3, s3)
        w = first_failure(res, [names, names, names])
        if w is not None:
            return Witness((a,) + w.indices, (names[a],) + w.labels, w.residual, "ncj_operator")
    return None


def symmetrized(A: SuperAlgebra) -> SuperAlgebra:
    return SuperAlgebra(A.derived_table("circle"), A.parity, f"{A.name}^(+)", A.basis_names)


def check_noncommutative_jordan(A: SuperAlgebra, cross_check: bool = True) -> CheckReport:
    """Flexibility plus the noncommutative Jordan operator identity.

    With ``cross_check`` the verdict is compared against the independent route
    "flexible and the symmetrized algebra is Jordan"; a disagreement raises
    :class:`ConsistencyError`.
    """
    flex = check_flexible(A)
    witness = flex.witness
    if witness is None:
        witness = _ncj_witness(A)
    report = _report("noncommutative_jordan", witness)
    if cross_check:
        other = flex.passed and check_jordan(symmetrized(A)).passed
        if other != report.passed:
            raise ConsistencyError(
                f"{A.name}: operator route says {report.passed}, symmetrization route says {other}")
        report.notes["routes_agree"] = True
    return report


# generic Poisson


def check_generic_poisson(J: SuperAlgebra, bracket: ExactArray | SuperAlgebra) -> CheckReport:
    """Leibniz rule {a b, c} = (-1)^{bc} {a, c} b + a {b, c} for J's product."""
    br = bracket.table if isinstance(bracket, SuperAlgebra) else bracket
    c = J.table
    p = _par(J)
    lhs = einsum("abm,mck->abck", c, br)
    t1 = einsum("acm,mbk->abck", br, c)
    t2 = einsum("bcm,amk->abck", br, c)
    s = sign_matrix(p)[None, :, :, None]
    res = lhs - with_signs(t1, s) - t2
    names = J.basis_names
    return _report("generic_poisson", first_failure(res, [names] * 3))


def from_circle_and_bracket(J: SuperAlgebra, bracket: ExactArray, name: str = "") -> SuperAlgebra:
    """The algebra with ab = a o b + [a, b] / 2."""
    return SuperAlgebra(J.table + bracket.scale("1/2"), J.parity, name, J.basis_names)
