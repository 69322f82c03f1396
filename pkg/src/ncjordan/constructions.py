"""Constructions producing new superalgebras from old ones."""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

import numpy as np

from .algebra import SuperAlgebra, sign_matrix, with_signs
from .linalg import ExactArray, Subspace, concatenate, einsum

if TYPE_CHECKING:
    from .representations import SuperBimodule


class ConstructionError(ValueError):
    pass


def mutate(A: SuperAlgebra, lam) -> SuperAlgebra:
    """The mutation x *_lam y = lam xy + (-1)^{xy} (1 - lam) yx."""
    lam = A.field(lam)
    s = sign_matrix(A.parity)[:, :, None]
    swapped = with_signs(A.table.transpose(1, 0, 2), s)
    table = A.table.scale(lam) + swapped.scale(A.field(1) - lam)
    return SuperAlgebra(table, A.parity, f"{A.name}^({lam})", A.basis_names)


def mutation_compose(lam, mu):
    """Parameter of the mutation of a lam-mutation by mu."""
    return 2 * lam * mu - lam - mu + 1


def inverse_mutation(lam):
    """The mu with mutation_compose(lam, mu) == 1, so A^(lam)^(mu) = A."""
    denom = 2 * lam - 1
    if denom == 0:
        raise ConstructionError("the mutation at 1/2 is not invertible")
    return lam / denom


def symmetrize(A: SuperAlgebra) -> SuperAlgebra:
    """The algebra with the circle product x o y = (xy + (-1)^{xy} yx) / 2."""
    return SuperAlgebra(A.derived_table("circle"), A.parity, f"{A.name}^(+)", A.basis_names)


def bracket_algebra(A: SuperAlgebra) -> SuperAlgebra:
    """The algebra with the super commutator as its product."""
    return SuperAlgebra(A.derived_table("bracket"), A.parity, f"{A.name}^(-)", A.basis_names)


def opposite_algebra(A: SuperAlgebra) -> SuperAlgebra:
    """x *_op y = (-1)^{xy} yx, which is the mutation at 0."""
    return mutate(A, 0).with_name(f"{A.name}^op")


def graded_tensor(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """(a x b)(a' x b') = (-1)^{p(a') p(b)} aa' x bb', with a x b at index a*dim(B) + b."""
    if A.field != B.field:
        raise ConstructionError("tensor factors live over different fields")
    m, n = A.dim, B.dim
    t = einsum("aAk,bBl->abABkl", A.table, B.table)
    t = with_signs(t, _tensor_signs(A.parity, B.parity))
    table = t.reshape(m * n, m * n, m * n)
    parity = [(pa + pb) % 2 for pa in A.parity for pb in B.parity]
    names = [f"{a}(x){b}" for a in A.basis_names for b in B.basis_names]
    return SuperAlgebra(table, parity, f"({A.name})(x)({B.name})", names)


def _tensor_signs(pa: Sequence[int], pb: Sequence[int]) -> np.ndarray:
    # axes (a, b, A, B, k, l): sign depends on p(A) p(b)
    s = sign_matrix(pb, pa)  # s[b, A] = (-1)^{p(b) p(A)}
    return s[None, :, :, None, None, None]


def unital_hull(A: SuperAlgebra) -> SuperAlgebra:
    """A with an adjoined unit at index 0."""
    n = A.dim
    num = np.zeros((n + 1, n + 1, n + 1), dtype=A.table.num.dtype)
    num[1:, 1:, 1:] = A.table.num
    d = A.table.den
    num[0, 0, 0] = d
    for i in range(n):
        num[0, i + 1, i + 1] = d
        num[i + 1, 0, i + 1] = d
    table = ExactArray(num, d, A.field)
    return SuperAlgebra(table, (0,) + A.parity, f"{A.name}^#", ("1",) + A.basis_names)


def split_null_extension(A: SuperAlgebra, M: "SuperBimodule") -> SuperAlgebra:
    """E = A + M with M^2 = 0, the algebra acting on M through the module actions."""
    if M.algebra.dim != A.dim or M.algebra.field != A.field:
        raise ConstructionError("module is over a different algebra")
    n, k = A.dim, M.dim
    N = n + k
    den = 1
    for arr in (A.table, M.left, M.right):
        den = den * arr.den // np.gcd(den, arr.den)
    dtype = object if any(x.num.dtype == object for x in (A.table, M.left, M.right)) else np.int64
    num = np.zeros((N, N, N), dtype=dtype)
    num[:n, :n, :n] = A.table.num * (den // A.table.den)
    num[:n, n:, n:] = M.left.num * (den // M.left.den)
    num[n:, :n, n:] = M.right.num * (den // M.right.den)
    table = ExactArray(num, den, A.field)
    names = tuple(A.basis_names) + tuple(f"{m}'" for m in M.basis_names)
    return SuperAlgebra(table, A.parity + M.parity, f"{A.name}+{M.name}", names)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    if A.field != B.field:
        raise ConstructionError("summands live over different fields")
    n, m = A.dim, B.dim
    N = n + m
    den = A.table.den * B.table.den // np.gcd(A.table.den, B.table.den)
    num = np.zeros((N, N, N), dtype=object)
    num[:] = 0
    num[:n, :n, :n] = A.table.num * (den // A.table.den)
    num[n:, n:, n:] = B.table.num * (den // B.table.den)
    return SuperAlgebra(ExactArray(num, den, A.field), A.parity + B.parity,
                        f"{A.name}+{B.name}", A.basis_names + B.basis_names)


def change_basis(A: SuperAlgebra, P: ExactArray, names: Sequence[str] | None = None,
                 name: str = "") -> SuperAlgebra:
    """Structure constants of A in the basis given by the rows of the invertible P."""
    from .linalg import rank
    n = A.dim
    if P.shape != (n, n) or rank(P) != n:
        raise ConstructionError("change of basis must be invertible")
    parity = _row_parities(A, P)
    inv = _inverse(P)
    t = einsum("ai,bj,ijk,kc->abc", P, P, A.table, inv)
    return SuperAlgebra(t, parity, name or A.name, names)


def subalgebra(A: SuperAlgebra, S: Subspace, names: Sequence[str] | None = None,
               name: str = "") -> SuperAlgebra:
    """Structure constants of a subalgebra on the rows of its RREF basis."""
    B = S.basis
    k = S.dim
    parity = _row_parities(A, B)
    prods = einsum("ai,bj,ijk->abk", B, B, A.table).reshape(k * k, A.dim)
    coords = prods.take(S.pivots, axis=1)
    back = coords @ B
    if not (back - prods).is_zero():
        raise ConstructionError("subspace is not closed under multiplication")
    table = coords.reshape(k, k, k)
    return SuperAlgebra(table, parity, name or f"sub({A.name})", names)


def _row_parities(A: SuperAlgebra, B: ExactArray) -> tuple[int, ...]:
    out = []
    for i in range(B.shape[0]):
        ps = {A.parity[j] for (j,) in B[i].nonzero()}
        if len(ps) != 1:
            raise ConstructionError("basis vectors must be homogeneous and nonzero")
        out.append(ps.pop())
    return tuple(out)


def _inverse(P: ExactArray) -> ExactArray:
    from .linalg import rref
    n = P.shape[0]
    aug = concatenate([P, ExactArray.eye(n, P.field)], axis=1)
    r, piv = rref(aug)
    if tuple(piv[:n]) != tuple(range(n)) or len(piv) != n:
        raise ConstructionError("matrix is singular")
    return r.take(range(n, 2 * n), axis=1)


def inverse(P: ExactArray) -> ExactArray:
    return _inverse(P)


def unit_element(A: SuperAlgebra) -> ExactArray | None:
    """The two-sided unit of A, or None."""
    n = A.dim
    left = A.table.reshape(n, n * n)                      # u e_j = sum_i u_i c[i, j, :]
    right = A.table.transpose(1, 0, 2).reshape(n, n * n)  # e_j u = sum_i u_i c[j, i, :]
    target = ExactArray.eye(n, A.field).reshape(n * n)
    from .linalg import solve_linear
    u = solve_linear(concatenate([left, right], axis=1), concatenate([target, target]))
    return u
