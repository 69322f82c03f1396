"""Superbimodules: construction, axiom checks, submodules, intertwiners, decomposition.

A bimodule over A stores ``left[a, m, k]`` (coefficient of m_k in a.m) and
``right[m, a, k]`` (coefficient of m_k in m.a).  Operators follow the algebra
conventions: ``m R_a = m.a`` and ``m L_a = (-1)^{p(a) p(m)} a.m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import GradingError, SuperAlgebra, sign_matrix, with_signs
from .constructions import split_null_extension, symmetrize
from .identities import (CheckReport, ConsistencyError, Witness, check_jordan,
                         check_noncommutative_jordan, first_failure)
from .linalg import (ExactArray, Subspace, charpoly_factors, concatenate, einsum, nullspace,
                     poly_of_matrix, rank)
from .peirce import PeirceDecomposition, peirce_spaces


class ModuleError(ValueError):
    pass


class SuperBimodule:
    """A graded bimodule over a superalgebra, given by its action tensors."""

    __slots__ = ("algebra", "parity", "left", "right", "name", "basis_names", "_cache")

    def __init__(self, algebra: SuperAlgebra, parity: Sequence[int], left: ExactArray,
                 right: ExactArray, name: str = "", basis_names: Sequence[str] | None = None):
        n, k = algebra.dim, len(parity)
        if left.shape != (n, k, k) or right.shape != (k, n, k):
            raise ModuleError(f"action tensors have shapes {left.shape}, {right.shape}; "
                              f"expected {(n, k, k)} and {(k, n, k)}")
        if left.field != algebra.field or right.field != algebra.field:
            raise ModuleError("actions live over a different field")
        self.algebra = algebra
        self.parity = tuple(int(p) for p in parity)
        self.left = left
        self.right = right
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"m{i}" for i in range(k))
        self._cache: dict = {}
        self._validate_grading()

    def _validate_grading(self):
        pa, pm = np.array(self.algebra.parity), np.array(self.parity)
        an, mn = self.algebra.basis_names, self.basis_names
        for a, m, k in zip(*np.nonzero(self.left.num)):
            if (pa[a] + pm[m] - pm[k]) % 2:
                raise GradingError(f"left action {an[a]}.{mn[m]} has a component on {mn[k]} "
                                   "of the wrong parity")
        for m, a, k in zip(*np.nonzero(self.right.num)):
            if (pa[a] + pm[m] - pm[k]) % 2:
                raise GradingError(f"right action {mn[m]}.{an[a]} has a component on {mn[k]} "
                                   "of the wrong parity")

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def field(self):
        return self.algebra.field

    def __repr__(self):
        return f"<{self.name or 'SuperBimodule'}: dim {self.parity.count(0)}|{self.parity.count(1)}" \
               f" over {self.algebra.name}>"

    def operators(self, kind: str) -> ExactArray:
        """Tensor ``op[a]`` of action operators (kinds as for algebras)."""
        if kind in self._cache:
            return self._cache[kind]
        if kind == "R":
            out = self.right.transpose(1, 0, 2)
        elif kind == "Lu":
            out = self.left
        elif kind == "L":
            out = with_signs(self.left, sign_matrix(self.algebra.parity, self.parity)[:, :, None])
        elif kind == "Rplus":
            out = (self.operators("R") + self.operators("L")).scale(Fraction(1, 2))
        elif kind == "Rminus":
            out = (self.operators("R") - self.operators("L")).scale(Fraction(1, 2))
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
        self._cache[kind] = out
        return out

    def mult_operator(self, a, kind: str = "R") -> ExactArray:
        if isinstance(a, (int, str)):
            a = self.algebra.basis_vector(a)
        return einsum("a,aij->ij", a, self.operators(kind))

    def basis_vector(self, i: int | str) -> ExactArray:
        if isinstance(i, str):
            i = self.basis_names.index(i)
        return ExactArray.eye(self.dim, self.field)[i]

    def parity_operator(self) -> ExactArray:
        return ExactArray.from_ints(np.diag([(-1) ** p for p in self.parity]), self.field)

    def same_actions(self, other: "SuperBimodule") -> bool:
        return (self.parity == other.parity and self.algebra.same_table(other.algebra)
                and self.left.equals(other.left) and self.right.equals(other.right))

    def with_name(self, name: str) -> "SuperBimodule":
        return SuperBimodule(self.algebra, self.parity, self.left, self.right, name, self.basis_names)


# constructions


def regular(A: SuperAlgebra) -> SuperBimodule:
    return SuperBimodule(A, A.parity, A.table, A.table, f"Reg({A.name})", A.basis_names)


def opposite_module(M: SuperBimodule) -> SuperBimodule:
    """Parities flipped, left action kept, right action twisted by (-1)^{p(a)}."""
    parity = tuple(1 - p for p in M.parity)
    twist = np.array([(-1) ** p for p in M.algebra.parity], dtype=np.int64)[None, :, None]
    right = with_signs(M.right, twist)
    names = tuple(f"{n}^" for n in M.basis_names)
    return SuperBimodule(M.algebra, parity, M.left, right, f"{M.name}^op", names)


def direct_sum_modules(M: SuperBimodule, N: SuperBimodule, name: str = "") -> SuperBimodule:
    if not M.algebra.same_table(N.algebra):
        raise ModuleError("summands are modules over different algebras")
    n, k, l = M.algebra.dim, M.dim, N.dim
    lnum = np.zeros((n, k + l, k + l), dtype=object)
    rnum = np.zeros((k + l, n, k + l), dtype=object)
    lnum[:], rnum[:] = 0, 0
    den = int(np.lcm.reduce([M.left.den, M.right.den, N.left.den, N.right.den]))
    lnum[:, :k, :k] = M.left.num * (den // M.left.den)
    lnum[:, k:, k:] = N.left.num * (den // N.left.den)
    rnum[:k, :, :k] = M.right.num * (den // M.right.den)
    rnum[k:, :, k:] = N.right.num * (den // N.right.den)
    left = ExactArray(lnum, den, M.field)
    right = ExactArray(rnum, den, M.field)
    names = M.basis_names + tuple(n + "+" if n in M.basis_names else n for n in N.basis_names)
    return SuperBimodule(M.algebra, M.parity + N.parity, left, right,
                         name or f"{M.name}+{N.name}", names)


def _row_parities(M: SuperBimodule, S: Subspace) -> tuple[int, ...]:
    ps = S.with_parity(M.parity).row_parities()
    if ps is None:
        raise ModuleError("subspace is not graded")
    return ps


def restrict_module(M: SuperBimodule, S: Subspace, name: str = "") -> SuperBimodule:
    """The submodule on the RREF basis of an invariant graded subspace S."""
    B = S.basis
    k = S.dim
    parity = _row_parities(M, S)
    imgs = {}
    for kind in ("Lu", "R"):
        img = einsum("ki,aij->akj", B, M.operators(kind))
        flat = img.reshape(-1, M.dim)
        if not S.reduce(flat).is_zero():
            raise ModuleError("subspace is not invariant under the actions")
        imgs[kind] = img.take(S.pivots, axis=2)
    left = imgs["Lu"]
    right = imgs["R"].transpose(1, 0, 2)
    return SuperBimodule(M.algebra, parity, left, right, name or f"sub({M.name})",
                         [f"s{i}" for i in range(k)])


def quotient_module(M: SuperBimodule, S: Subspace, name: str = "") -> SuperBimodule:
    """M / S on representatives completing the RREF basis of S."""
    whole = Subspace.whole(M.dim, M.field)
    Q = Subspace(whole.quotient_basis(S))
    parity = _row_parities(M, Q)
    B = Q.basis
    k = Q.dim
    imgs = {}
    stacked = concatenate([S.basis, B]) if S.dim else B
    for kind in ("Lu", "R"):
        img = einsum("ki,aij->akj", B, M.operators(kind)).reshape(-1, M.dim)
        # coordinates with respect to (S basis, Q basis); keep the Q part
        coords = []
        for r in range(img.shape[0]):
            x = _solve_rows(stacked, img[r])
            coords.append(x.take(range(S.dim, S.dim + k)))
        arr = ExactArray.from_values([c.values().tolist() for c in coords], M.field) if coords \
            else ExactArray.zeros((0, k), M.field)
        imgs[kind] = arr.reshape(M.algebra.dim, k, k)
    return SuperBimodule(M.algebra, parity, imgs["Lu"], imgs["R"].transpose(1, 0, 2),
                         name or f"{M.name}/sub", [f"q{i}" for i in range(k)])


def _solve_rows(rows: ExactArray, v: ExactArray) -> ExactArray:
    from .linalg import solve_linear
    x = solve_linear(rows, v)
    if x is None:
        raise ModuleError("vector outside the span")
    return x


def module_from_rplus_rminus(A: SuperAlgebra, parity: Sequence[int], rplus: ExactArray,
                             rminus: ExactArray | None = None, name: str = "",
                             basis_names: Sequence[str] | None = None) -> SuperBimodule:
    """Bimodule with R_a = R+_a + R-_a and L_a = R+_a - R-_a (operator tensors op[a][m, k])."""
    if rminus is None:
        rminus = ExactArray.zeros(rplus.shape, rplus.field)
    R = rplus + rminus
    L = rplus - rminus
    left = with_signs(L, sign_matrix(A.parity, parity)[:, :, None])
    return SuperBimodule(A, parity, left, R.transpose(1, 0, 2), name, basis_names)


def zero_module(A: SuperAlgebra, parity: Sequence[int], name: str = "0") -> SuperBimodule:
    k = len(parity)
    z = ExactArray.zeros((A.dim, k, k), A.field)
    return SuperBimodule(A, parity, z, z.transpose(1, 0, 2), name)


# axiom checks


def check_ncj_bimodule(A: SuperAlgebra, M: SuperBimodule, cross_check: bool = True) -> CheckReport:
    """M is a noncommutative Jordan bimodule iff its split null extension is noncommutative Jordan."""
    if not A.same_table(M.algebra):
        raise ModuleError("module is over a different algebra")
    E = split_null_extension(A, M)
    report = check_noncommutative_jordan(E, cross_check=cross_check)
    report.identity_name = "ncj_bimodule"
    return report


def _rpm_witness(A: SuperAlgebra, M: SuperBimodule) -> Witness | None:
    # the cheap R- relations run first; the Jordan check on R+ is the expensive one
    Rp, Rm = M.operators("Rplus"), M.operators("Rminus")
    pa = np.array(A.parity)
    s_ab = sign_matrix(pa)[:, :, None, None]
    names = A.basis_names
    rows = [M.basis_names]
    # [R+_a, R-_b] = R+_{[a,b]} / 2
    comm = einsum("aij,bjk->abik", Rp, Rm) - with_signs(einsum("bij,ajk->abik", Rm, Rp), s_ab)
    br = einsum("abu,uik->abik", A.derived_table("bracket"), Rp).scale(Fraction(1, 2))
    w = first_failure(comm - br, [names, names] + rows, "rplus_rminus_commutator")
    if w is not None:
        return w
    # R-_a R+_b + (-1)^{ab} R-_b R+_a = R-_{a o b}
    lhs = einsum("aij,bjk->abik", Rm, Rp) + with_signs(einsum("bij,ajk->abik", Rm, Rp), s_ab)
    rhs = einsum("abu,uik->abik", A.derived_table("circle"), Rm)
    w = first_failure(lhs - rhs, [names, names] + rows, "rminus_rplus_circle")
    if w is not None:
        return w
    J = symmetrize(A)
    plus = module_from_rplus_rminus(J, M.parity, Rp, None, f"{M.name}^(+)", M.basis_names)
    jr = check_jordan(split_null_extension(J, plus))
    if not jr.passed:
        w = jr.witness
        return Witness(w.indices, w.labels, w.residual, "jordan_rplus")
    return None


def check_via_rpm(A: SuperAlgebra, M: SuperBimodule, cross_check: bool = True) -> CheckReport:
    """R+, R- satisfy [R+_a, R-_b] = R+_{[a,b]}/2 and
    R-_a R+_b + (-1)^{ab} R-_b R+_a = R-_{a o b}, and R+ is a Jordan
    representation of the symmetrized algebra.

    With ``cross_check`` the verdict must match :func:`check_ncj_bimodule`.
    """
    if not A.same_table(M.algebra):
        raise ModuleError("module is over a different algebra")
    w = _rpm_witness(A, M)
    report = CheckReport(w is None, "rplus_rminus_representation", w)
    if cross_check:
        other = check_ncj_bimodule(A, M, cross_check=False)
        if other.passed != report.passed:
            raise ConsistencyError(f"{M.name}: R+/R- route says {report.passed}, "
                                   f"split null extension route says {other.passed}")
        report.notes["routes_agree"] = True
    return report


def check_unital(M: SuperBimodule, unit: ExactArray) -> bool:
    eye = ExactArray.eye(M.dim, M.field)
    return M.mult_operator(unit, "R").equals(eye) and M.mult_operator(unit, "L").equals(eye)


# submodules and envelopes


def _action_generators(M: SuperBimodule) -> ExactArray:
    """Plain left and right actions, stacked as (2 dim A, k, k)."""
    return concatenate([M.operators("Lu"), M.operators("R")])


def closure(start: Subspace, ops: ExactArray) -> Subspace:
    """Smallest subspace containing ``start`` and invariant under every ops[g]."""
    S = start
    frontier = S.basis
    while frontier.shape[0]:
        img = einsum("ki,gij->gkj", frontier, ops).reshape(-1, S.ambient)
        new = S.reduce(img)
        if new.is_zero():
            break
        frontier = Subspace(new).basis
        S = S + Subspace(new)
    return S


def submodule_generated(M: SuperBimodule, m) -> Subspace:
    """Mod(m): the least subspace containing m (a vector or list of vectors) closed
    under all actions."""
    if isinstance(m, ExactArray) and m.ndim == 1:
        m = m.reshape(1, -1)
    elif isinstance(m, (list, tuple)):
        m = ExactArray.from_values([v.values().tolist() for v in m], M.field) if m \
            else ExactArray.zeros((0, M.dim), M.field)
    S = closure(Subspace(m), _action_generators(M))
    return S.with_parity(M.parity)


def _matrix_closure(gens: list[ExactArray], n: int, field) -> Subspace:
    """Span of the identity and all words in gens, as flattened n x n matrices."""
    eye = ExactArray.eye(n, field).reshape(1, n * n)
    if not gens:
        return Subspace(eye)
    G = concatenate([g.reshape(1, n, n) for g in gens])
    # right multiplication by a generator, as a linear map on flattened matrices
    eye_n = ExactArray.eye(n, field)
    ops = einsum("ac,gbd->gabcd", eye_n, G).reshape(len(gens), n * n, n * n)
    start = Subspace(concatenate([eye, G.reshape(len(gens), n * n)]))
    return closure(start, ops)


def envelope(M: SuperBimodule, extra: Sequence[ExactArray] = ()) -> list[ExactArray]:
    """Basis of the associative algebra generated by the identity, all R_a and L_a
    (and any ``extra`` operators)."""
    return [b.reshape(M.dim, M.dim) for b in _envelope_space(M, extra).vectors()]


def _envelope_space(M: SuperBimodule, extra: Sequence[ExactArray] = ()) -> Subspace:
    key = ("envelope", len(extra))
    if not extra and key in M._cache:
        return M._cache[key]
    gens = [M.operators("R")[a] for a in range(M.algebra.dim)] + \
           [M.operators("L")[a] for a in range(M.algebra.dim)] + list(extra)
    gens = [g for g in gens if not g.is_zero()]
    S = _matrix_closure(gens, M.dim, M.field)
    if not extra:
        M._cache[key] = S
    return S


def envelope_dim(M: SuperBimodule, extra: Sequence[ExactArray] = ()) -> int:
    return _envelope_space(M, extra).dim


@dataclass
class IrreducibilityVerdict:
    """Absolute irreducibility verdict; ``witness`` is a proper invariant subspace."""

    status: str
    witness: Subspace | None = None
    envelope_dim: int = 0
    notion: str = "absolute"

    def __bool__(self) -> bool:
        return self.status == "irreducible"

    def to_dict(self) -> dict:
        out = {"status": self.status, "notion": self.notion, "envelope_dim": self.envelope_dim}
        if self.witness is not None:
            out["witness_dim"] = self.witness.dim
            out["witness"] = [[str(x) for x in row] for row in self.witness.basis.values().tolist()]
        return out


def scan_vectors(n: int, field) -> list[ExactArray]:
    """Basis vectors, then e_i + e_j and e_i - e_j for i < j."""
    eye = ExactArray.eye(n, field)
    out = [eye[i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            out.append(eye[i] + eye[j])
            out.append(eye[i] - eye[j])
    return out


def find_proper_submodule(M: SuperBimodule) -> Subspace | None:
    """Smallest proper nonzero Mod(m) over the deterministic scan, then kernels and
    images of commutant elements."""
    best = None
    seen = []
    for v in scan_vectors(M.dim, M.field):
        S = submodule_generated(M, v)
        if 0 < S.dim < M.dim and (best is None or S.dim < best.dim):
            best = S
        if best is not None and best.dim == 1:
            break
        seen.append(S)
        if len(seen) > 4 * M.dim and best is not None:
            break
    if best is not None:
        return best
    C = intertwiners(M, M, 0)
    eye = ExactArray.eye(M.dim, M.field)
    for T in C.maps():
        for lam in _eigen_candidates(T):
            K = nullspace(T - eye.scale(lam), M.parity)
            if 0 < K.dim < M.dim:
                return submodule_generated(M, K.vectors())
    return None


def _eigen_candidates(T: ExactArray) -> list:
    from .linalg import eigenvalues
    return eigenvalues(T)


def is_abs_irreducible(M: SuperBimodule) -> IrreducibilityVerdict:
    """Burnside test on the multiplication envelope; a proper submodule otherwise."""
    if M.dim == 0:
        return IrreducibilityVerdict("reducible", None, 0)
    d = envelope_dim(M)
    if d == M.dim ** 2:
        return IrreducibilityVerdict("irreducible", None, d)
    W = find_proper_submodule(M)
    if W is not None:
        return IrreducibilityVerdict("reducible", W, d)
    return IrreducibilityVerdict("undecided", None, d)


# intertwiners


@dataclass
class Intertwiner:
    source: SuperBimodule
    target: SuperBimodule
    map: ExactArray
    parity_shift: int = 0


@dataclass
class IntertwinerSpace:
    """All T with R^M_a T = T R^N_a and L^M_a T = T L^N_a, shifting parity by ``shift``."""

    source: SuperBimodule
    target: SuperBimodule
    shift: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[ExactArray]:
        k, l = self.source.dim, self.target.dim
        return [v.reshape(k, l) for v in self.space.vectors()]


def intertwiners(M: SuperBimodule, N: SuperBimodule, parity_shift: int = 0) -> IntertwinerSpace:
    if not M.algebra.same_table(N.algebra):
        raise ModuleError("modules are over different algebras")
    k, l = M.dim, N.dim
    F = M.field
    eye_k, eye_l = ExactArray.eye(k, F), ExactArray.eye(l, F)
    blocks = []
    for kind in ("R", "L"):
        A, B = M.operators(kind), N.operators(kind)
        # T -> A_g T - T B_g on the elementary matrix E_ij
        t1 = einsum("gri,jc->ijgrc", A, eye_l)
        t2 = einsum("ir,gjc->ijgrc", eye_k, B)
        blocks.append((t1 - t2).reshape(k * l, -1))
    allowed = [i * l + j for i in range(k) for j in range(l)
               if (M.parity[i] + parity_shift - N.parity[j]) % 2 == 0]
    forbidden = [u for u in range(k * l) if u not in set(allowed)]
    sel = ExactArray.zeros((k * l, len(forbidden)), F)
    if forbidden:
        snum = np.zeros((k * l, len(forbidden)), dtype=np.int64)
        for c, u in enumerate(forbidden):
            snum[u, c] = 1
        sel = ExactArray(snum, 1, F)
        blocks.append(sel)
    system = concatenate(blocks, axis=1)
    return IntertwinerSpace(M, N, parity_shift, nullspace(system))


def _invertible_in(maps: list[ExactArray]) -> ExactArray | None:
    if not maps:
        return None
    n = maps[0].shape[0]
    if maps[0].shape[1] != n:
        return None
    candidates = list(maps)
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            candidates += [maps[i] + maps[j], maps[i] - maps[j], maps[i] + maps[j].scale(2)]
    generic = maps[0]
    for c, T in enumerate(maps[1:], start=2):
        generic = generic + T.scale(c)
    candidates.append(generic)
    for T in candidates:
        if rank(T) == n:
            return T
    return None


def find_isomorphism(M: SuperBimodule, N: SuperBimodule, parity_shift: int = 0) -> Intertwiner | None:
    if M.dim != N.dim:
        return None
    space = intertwiners(M, N, parity_shift)
    T = _invertible_in(space.maps())
    return None if T is None else Intertwiner(M, N, T, parity_shift)


def modules_isomorphic(M: SuperBimodule, N: SuperBimodule, parity_shift: int = 0) -> bool:
    return find_isomorphism(M, N, parity_shift) is not None


# decomposition


@dataclass
class Decomposition:
    summands: list[Subspace]
    status: list[str]
    modules: list[SuperBimodule] = field(default_factory=list)

    def __len__(self):
        return len(self.summands)


def _local_commutant(maps: list[ExactArray], n: int, field) -> bool:
    """True when every map is scalar plus nilpotent and the nilpotent parts span a
    nilpotent subalgebra (so the commutant is local)."""
    eye = ExactArray.eye(n, field)
    nil = []
    for T in maps:
        facs = charpoly_factors(T)
        if len(facs) != 1 or len(facs[0][0]) != 2:
            return False
        lam = -facs[0][0][1]
        N = T - eye.scale(lam)
        if not N.is_zero():
            nil.append(N)
    if not nil:
        return True
    flat = Subspace(concatenate([x.reshape(1, n * n) for x in nil]))
    # the span must be closed and nilpotent: its k-th power vanishes for some k <= n
    power = flat
    for _ in range(n + 1):
        prods = [einsum("ij,jk->ik", a.reshape(n, n), b.reshape(n, n)).reshape(1, n * n)
                 for a in power.vectors() for b in flat.vectors()]
        if not prods:
            return True
        nxt = Subspace(concatenate(prods))
        if power is flat and not flat.contains(nxt):
            return False
        if nxt.dim == 0:
            return True
        power = nxt
    return False


def _split(M: SuperBimodule) -> list[Subspace] | None:
    """Invariant direct summands from the primary decomposition of a commutant element."""
    maps = intertwiners(M, M, 0).maps()
    cands = list(maps)
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            cands.append(maps[i] + maps[j])
    for T in cands:
        facs = charpoly_factors(T)
        if len(facs) < 2:
            continue
        parts = []
        for coeffs, mult in facs:
            P = poly_of_matrix(coeffs, T)
            Q = P
            for _ in range(mult - 1):
                Q = Q @ P
            parts.append(nullspace(Q, M.parity))
        if sum(p.dim for p in parts) == M.dim:
            return parts
    return None


def decompose(M: SuperBimodule) -> Decomposition:
    """Split M into indecomposable summands using the even commutant."""
    if M.dim == 0:
        return Decomposition([], [])
    parts = _split(M)
    if parts is None:
        maps = intertwiners(M, M, 0).maps()
        irr = is_abs_irreducible(M)
        if irr.status == "irreducible":
            status = "irreducible"
        elif _local_commutant(maps, M.dim, M.field):
            status = "indecomposable"
        else:
            status = "undetected"
        whole = Subspace.whole(M.dim, M.field, M.parity)
        return Decomposition([whole], [status], [M])
    summands, status, mods = [], [], []
    for S in parts:
        S = S.with_parity(M.parity)
        sub = restrict_module(M, S)
        inner = decompose(sub)
        for T, st, mod in zip(inner.summands, inner.status, inner.modules):
            summands.append(Subspace(T.basis @ S.basis, M.parity))
            status.append(st)
            mods.append(mod)
    return Decomposition(summands, status, mods)


def identify_summands(D: Decomposition, candidates: dict[str, SuperBimodule]) -> list[str | None]:
    """Name of the first candidate each summand is (evenly) isomorphic to."""
    out = []
    for mod in D.modules:
        name = None
        for label, N in candidates.items():
            if N.dim == mod.dim and modules_isomorphic(mod, N, 0):
                name = label
                break
        out.append(name)
    return out


# Peirce decomposition of a module


def module_peirce(M: SuperBimodule, e) -> PeirceDecomposition:
    A = M.algebra
    if not isinstance(e, ExactArray):
        e = A.basis_vector(e)
    if not A.is_idempotent(e):
        raise ModuleError(f"{A.format(e)} is not an even idempotent")
    T = M.mult_operator(e, "L") + M.mult_operator(e, "R")
    comps, projs = peirce_spaces(T, M.parity, M.field)
    return PeirceDecomposition(A, e, comps, projs)


def unital_components(M: SuperBimodule, unit: ExactArray) -> dict[str, int]:
    """Dimensions of the zero, half and unital parts relative to the unit of A."""
    P = module_peirce(M, unit)
    return {"zero": P[0].dim, "half": P[1].dim, "unital": P[2].dim}


# operator relation batteries


def _eq(a: ExactArray, b: ExactArray) -> bool:
    return (a - b).is_zero()


def dt1_relations(M: SuperBimodule, t) -> dict[str, bool]:
    """Operator identities forced on any noncommutative Jordan D_t(1)-bimodule."""
    F = M.field
    t = F(t)
    P = module_peirce(M, "e1").projections
    R = {n: M.mult_operator(n, "R") for n in ("e1", "x", "y")}
    L = {n: M.mult_operator(n, "L") for n in ("e1", "x", "y")}
    two = F(2)
    out = {
        "P0 R_x = 0": P[0] @ R["x"],
        "P2 L_x = 0": P[2] @ L["x"],
        "P2 R_x R_y = 2 P2": P[2] @ R["x"] @ R["y"] - P[2].scale(two),
        "P0 L_x L_y = 2t P0": P[0] @ L["x"] @ L["y"] - P[0].scale(two * t),
        "2(1-t) P1 L_e1 = P1 (R_y P2 R_x - L_y P0 L_x)":
            P[1] @ L["e1"].scale(two * (F(1) - t))
            - P[1] @ (R["y"] @ P[2] @ R["x"] - L["y"] @ P[0] @ L["x"]),
        "m R_x L_y L_x = 2t m R_x on M2": P[2] @ R["x"] @ L["y"] @ L["x"] - P[2] @ R["x"].scale(two * t),
    }
    return {k: v.is_zero() for k, v in out.items()}


def rminus_formulas(M: SuperBimodule, t) -> dict[str, bool]:
    """On a D_t(1/2,1/2,0)-bimodule the R- operators are fixed polynomials in R+."""
    F = M.field
    t = F(t)
    P = module_peirce(M, "e1").projections
    Rp = {n: M.mult_operator(n, "Rplus") for n in ("e1", "e2", "x", "y")}
    Rm = {n: M.mult_operator(n, "Rminus") for n in ("e1", "e2", "x", "y")}
    rx = -(P[0] @ Rp["y"]) + P[1] @ Rp["y"] @ (P[0] - P[2]) + P[2] @ Rp["y"]
    re1 = (P[1] @ Rp["y"] @ (P[0] - P[2]) @ Rp["y"]).scale(F(1) / (F(1) - t))
    return {
        "R-_x = -P0 R+_y + P1 R+_y (P0 - P2) + P2 R+_y": _eq(Rm["x"], rx),
        "R-_e1 = P1 R+_y (P0 - P2) R+_y / (1 - t)": _eq(Rm["e1"], re1),
        "R-_e2 = -R-_e1": _eq(Rm["e2"], -Rm["e1"]),
        "R-_y = 0": Rm["y"].is_zero(),
    }


def sl2_operators(M: SuperBimodule, t) -> tuple[ExactArray, ExactArray, ExactArray]:
    F = M.field
    c = F(2) / (F(1) + F(t))
    X, Y = M.mult_operator("x", "Rplus"), M.mult_operator("y", "Rplus")
    return (X @ X).scale(c), (Y @ Y).scale(c), (X @ Y + Y @ X).scale(c)


def sl2_relations(M: SuperBimodule, t) -> dict[str, bool]:
    E, F_, H = sl2_operators(M, t)

    def br(a, b):
        return a @ b - b @ a
    return {
        "[E,H] = 2E": _eq(br(E, H), E.scale(2)),
        "[F,H] = -2F": _eq(br(F_, H), F_.scale(-2)),
        "[E,F] = H": _eq(br(E, F_), H),
    }


def rminus_candidates(M: SuperBimodule) -> list[tuple[str, ExactArray]]:
    """A fixed list of nonzero even maps a -> R-_a used to probe Jordan algebras."""
    A = M.algebra
    n, k = A.dim, M.dim
    F = M.field
    Rp = M.operators("Rplus")
    out = [("R+", Rp)]
    odd_mask = np.array([p for p in A.parity], dtype=np.int64)
    out.append(("R+ on odd elements", ExactArray(Rp.num * odd_mask[:, None, None], Rp.den, F)))
    Pi = M.parity_operator()
    out.append(("R+ then parity", einsum("aij,jk->aik", Rp, Pi)))
    num = np.zeros((n, k, k), dtype=np.int64)
    a0 = next((a for a in range(n) if A.parity[a] == 1), 0)
    pa = A.parity[a0]
    pair = next(((i, j) for i in range(k) for j in range(k)
                 if (M.parity[i] + pa - M.parity[j]) % 2 == 0 and i != j), (0, 0))
    num[a0, pair[0], pair[1]] = 1
    out.append(("single matrix unit", ExactArray(num, 1, F)))
    b0 = 0
    Rb = Rp[b0]
    comm = einsum("aij,jk->aik", Rp, Rb) - einsum("ij,ajk->aik", Rb, Rp)
    if comm.is_zero():
        comm = einsum("aij,jk->aik", Rp, Rp[b0]).scale(2)
    out.append(("commutator with R+ of the first basis element", comm))
    return out
