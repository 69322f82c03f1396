"""Exact dense arrays over a field, elimination, kernels and subspace algebra.

An :class:`ExactArray` stores ``num / den`` with an integer numpy array ``num``
and one positive integer ``den`` (always 1 over GF(p), where ``num`` holds
residues).  Contractions run on the integer numerators; when a worst-case bound
on every partial sum fits in a double mantissa the product is done in float64
(which is then exact), otherwise in int64 or Python integers.

Vectors are rows and matrices act on the right: ``v @ M``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from sympy import GF as SymGF
from sympy import QQ as SymQQ
from sympy.polys.matrices import DomainMatrix

from .field import QQ, Field, PrimeField, Residue, Scalar

_FLOAT_EXACT = 2**52
_INT64_SAFE = 2**62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return int(max(abs(int(x)) for x in a.flat))
    return int(np.abs(a).max())


def _fit(a: np.ndarray, bound: int | None = None) -> np.ndarray:
    """Store in int64 when safe, otherwise as Python integers."""
    if bound is None:
        bound = _maxabs(a)
    if bound < _INT64_SAFE:
        return a.astype(np.int64) if a.dtype != np.int64 else a
    return a.astype(object) if a.dtype != object else a


def _contracted_size(subscripts: str, shapes: Sequence[tuple]) -> int:
    ins, out = subscripts.replace(" ", "").split("->")
    sizes: dict[str, int] = {}
    for term, shape in zip(ins.split(","), shapes):
        for ch, n in zip(term, shape):
            sizes[ch] = n
    k = 1
    for ch, n in sizes.items():
        if ch not in out:
            k *= n
    return k


def _int_einsum(subscripts: str, a: np.ndarray, b: np.ndarray, modulus: int | None) -> np.ndarray:
    k = _contracted_size(subscripts, (a.shape, b.shape))
    bound = _maxabs(a) * _maxabs(b) * max(k, 1)
    if bound < _FLOAT_EXACT:
        out = np.einsum(subscripts, a.astype(np.float64), b.astype(np.float64), optimize=True)
        out = np.rint(out).astype(np.int64)
    elif bound < _INT64_SAFE:
        out = np.einsum(subscripts, a.astype(np.int64), b.astype(np.int64))
    else:
        out = np.einsum(subscripts, a.astype(object), b.astype(object))
    out = np.asarray(out)
    if modulus is not None:
        return _fit(out % modulus)
    return _fit(out, bound)


class ExactArray:
    """Dense array of field elements (see module docstring for the encoding)."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num: np.ndarray, den: int, field: Field, *, normalized: bool = False):
        self.field = field
        if isinstance(field, PrimeField):
            num = np.asarray(num)
            if den != 1:
                num = num * pow(den, -1, field.p)
            self.num = _fit(np.asarray(num % field.p))
            self.den = 1
            return
        num = np.asarray(num)
        if num.dtype.kind == "f":
            raise TypeError("floating point data cannot enter an ExactArray")
        if normalized:
            self.num, self.den = num, den
            return
        if den < 0:
            num, den = -num, -den
        g = den
        if num.size:
            nz = num[num != 0]
            if nz.size == 0:
                g = den
                den = 1
            else:
                gg = int(np.gcd.reduce(nz.astype(object) if nz.dtype == object else nz))
                g = math.gcd(gg, den)
        if g > 1 and den != 1:
            num = num // g
            den //= g
        self.num = _fit(num)
        self.den = den

    # construction

    @classmethod
    def from_values(cls, values, field: Field = QQ) -> "ExactArray":
        arr = np.asarray(values, dtype=object)
        if isinstance(field, PrimeField):
            flat = [field.to_int(x) for x in arr.flat]
            return cls(np.array(flat, dtype=object).reshape(arr.shape), 1, field)
        fr = [QQ(x) for x in arr.flat]
        den = 1
        for x in fr:
            den = den * x.denominator // math.gcd(den, x.denominator)
        flat = [x.numerator * (den // x.denominator) for x in fr]
        return cls(np.array(flat, dtype=object).reshape(arr.shape), den, field)

    @classmethod
    def zeros(cls, shape, field: Field = QQ) -> "ExactArray":
        return cls(np.zeros(shape, dtype=np.int64), 1, field, normalized=True)

    @classmethod
    def eye(cls, n: int, field: Field = QQ) -> "ExactArray":
        return cls(np.eye(n, dtype=np.int64), 1, field, normalized=True)

    @classmethod
    def from_ints(cls, num, field: Field = QQ, den: int = 1) -> "ExactArray":
        return cls(np.asarray(num), den, field)

    # basic properties

    @property
    def shape(self) -> tuple:
        return self.num.shape

    @property
    def ndim(self) -> int:
        return self.num.ndim

    @property
    def modulus(self) -> int | None:
        return self.field.p if isinstance(self.field, PrimeField) else None

    def _scalar(self, n) -> Scalar:
        if isinstance(self.field, PrimeField):
            return Residue(int(n), self.field.p)
        return Fraction(int(n), self.den)

    def values(self) -> np.ndarray:
        """Object array of field scalars."""
        out = np.empty(self.shape, dtype=object)
        for idx, n in np.ndenumerate(self.num):
            out[idx] = self._scalar(n)
        return out

    def tolist(self):
        return self.values().tolist()

    def __getitem__(self, key):
        sub = self.num[key]
        if np.ndim(sub) == 0:
            return self._scalar(sub)
        return ExactArray(np.array(sub), self.den, self.field)

    def __setitem__(self, key, value):
        raise TypeError("ExactArray is immutable; build a new array instead")

    def __len__(self):
        return self.shape[0]

    def __iter__(self):
        for i in range(self.shape[0]):
            yield self[i]

    def __repr__(self):
        return f"ExactArray({self.tolist()!r}, field={self.field.token})"

    # structural operations

    def reshape(self, *shape) -> "ExactArray":
        return ExactArray(self.num.reshape(*shape), self.den, self.field, normalized=True)

    def transpose(self, *axes) -> "ExactArray":
        return ExactArray(self.num.transpose(*axes), self.den, self.field, normalized=True)

    @property
    def T(self) -> "ExactArray":
        return self.transpose()

    def take(self, indices, axis: int = 0) -> "ExactArray":
        return ExactArray(np.take(self.num, list(indices), axis=axis), self.den, self.field)

    # arithmetic

    def _common(self, other: "ExactArray") -> tuple[np.ndarray, np.ndarray, int]:
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field.token} vs {other.field.token}")
        if self.den == other.den:
            return self.num, other.num, self.den
        L = self.den * other.den // math.gcd(self.den, other.den)
        fa, fb = L // self.den, L // other.den
        bound = _maxabs(self.num) * fa + _maxabs(other.num) * fb
        a = self.num.astype(object) if bound >= _INT64_SAFE else self.num
        b = other.num.astype(object) if bound >= _INT64_SAFE else other.num
        return a * fa, b * fb, L

    def _widen_for_add(self, a, b):
        if _maxabs(a) + _maxabs(b) >= _INT64_SAFE:
            return a.astype(object), b.astype(object)
        return a, b

    def __add__(self, other: "ExactArray") -> "ExactArray":
        a, b, d = self._common(other)
        a, b = self._widen_for_add(a, b)
        return ExactArray(a + b, d, self.field)

    def __sub__(self, other: "ExactArray") -> "ExactArray":
        a, b, d = self._common(other)
        a, b = self._widen_for_add(a, b)
        return ExactArray(a - b, d, self.field)

    def __neg__(self) -> "ExactArray":
        return ExactArray(-self.num, self.den, self.field, normalized=True) if self.modulus is None \
            else ExactArray(-self.num, 1, self.field)

    def scale(self, c) -> "ExactArray":
        """Multiply by a field scalar (int, Fraction, string or residue)."""
        if isinstance(self.field, PrimeField):
            k = self.field.to_int(c)
            return ExactArray(self.num.astype(object) * k, 1, self.field)
        c = QQ(c)
        num = self.num
        if _maxabs(num) * abs(c.numerator) >= _INT64_SAFE:
            num = num.astype(object)
        return ExactArray(num * c.numerator, self.den * c.denominator, self.field)

    def __mul__(self, c) -> "ExactArray":
        if isinstance(c, ExactArray):
            a, b, d = self._common(c)
            if _maxabs(a) * _maxabs(b) >= _INT64_SAFE:
                a, b = a.astype(object), b.astype(object)
            return ExactArray(a * b, d * d, self.field)
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactArray") -> "ExactArray":
        if self.ndim == 1 and other.ndim == 2:
            return einsum("j,jk->k", self, other)
        if self.ndim == 2 and other.ndim == 1:
            return einsum("ij,j->i", self, other)
        if self.ndim == 2 and other.ndim == 2:
            return einsum("ij,jk->ik", self, other)
        return einsum("...ij,...jk->...ik", self, other)

    # predicates

    def is_zero(self) -> bool:
        return not np.any(self.num != 0)

    def equals(self, other: "ExactArray") -> bool:
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def nonzero(self) -> list[tuple]:
        return [tuple(int(i) for i in idx) for idx in zip(*np.nonzero(self.num))]


def einsum(subscripts: str, *arrays: ExactArray) -> ExactArray:
    """Exact einsum, contracting operands pairwise from the left."""
    subscripts = subscripts.replace(" ", "")
    if "..." in subscripts:
        return _einsum_ellipsis(subscripts, *arrays)
    ins, out = subscripts.split("->")
    terms = ins.split(",")
    if len(terms) != len(arrays):
        raise ValueError("operand count does not match subscripts")
    field = arrays[0].field
    modulus = arrays[0].modulus
    acc_num, acc_den, acc_term = arrays[0].num, arrays[0].den, terms[0]
    for k in range(1, len(arrays)):
        if arrays[k].field != field:
            raise ValueError("field mismatch in einsum")
        remaining = "".join(terms[k + 1:]) + out
        keep = "".join(dict.fromkeys(ch for ch in acc_term + terms[k] if ch in remaining))
        acc_num = _int_einsum(f"{acc_term},{terms[k]}->{keep}", acc_num, arrays[k].num, modulus)
        acc_den *= arrays[k].den
        acc_term = keep
    if acc_term != out:
        acc_num = np.einsum(f"{acc_term}->{out}", acc_num.astype(object)) if len(arrays) == 1 \
            else np.transpose(acc_num, [acc_term.index(ch) for ch in out])
    return ExactArray(np.asarray(acc_num), acc_den, field)


def _einsum_ellipsis(subscripts: str, *arrays: ExactArray) -> ExactArray:
    ins, out = subscripts.split("->")
    terms = ins.split(",")
    nd = max(a.ndim - len(t.replace("...", "")) for a, t in zip(arrays, terms))
    spare = "".join(ch for ch in "ABCDEFGHIJKLMNOPQRSTUVWXYZ" if ch not in subscripts)[:nd]
    new_terms = []
    for a, t in zip(arrays, terms):
        k = a.ndim - len(t.replace("...", ""))
        new_terms.append(t.replace("...", spare[nd - k:]))
    return einsum(",".join(new_terms) + "->" + out.replace("...", spare), *arrays)


def stack(arrays: Sequence[ExactArray], axis: int = 0) -> ExactArray:
    field = arrays[0].field
    acc = arrays[0]
    for a in arrays[1:]:
        if a.field != field:
            raise ValueError("field mismatch in stack")
    den = 1
    for a in arrays:
        den = den * a.den // math.gcd(den, a.den)
    nums = [a.num * (den // a.den) for a in arrays]
    if any(n.dtype == object for n in nums) or den > 1 and any(_maxabs(n) >= _INT64_SAFE for n in nums):
        nums = [n.astype(object) for n in nums]
    del acc
    return ExactArray(np.stack(nums, axis=axis), den, field)


def concatenate(arrays: Sequence[ExactArray], axis: int = 0) -> ExactArray:
    arrays = [a for a in arrays if a.shape[axis] > 0] or list(arrays[:1])
    field = arrays[0].field
    den = 1
    for a in arrays:
        den = den * a.den // math.gcd(den, a.den)
    nums = [a.num * (den // a.den) for a in arrays]
    if any(n.dtype == object for n in nums):
        nums = [n.astype(object) for n in nums]
    return ExactArray(np.concatenate(nums, axis=axis), den, field)


def block_diag(a: ExactArray, b: ExactArray) -> ExactArray:
    m, n = a.shape
    p, q = b.shape
    top = concatenate([a, ExactArray.zeros((m, q), a.field)], axis=1)
    bottom = concatenate([ExactArray.zeros((p, n), a.field), b], axis=1)
    return concatenate([top, bottom], axis=0)


def vector(values, field: Field = QQ) -> ExactArray:
    return ExactArray.from_values(list(values), field)


def matrix(rows, field: Field = QQ) -> ExactArray:
    return ExactArray.from_values([list(r) for r in rows], field)


def unit_vector(n: int, i: int, field: Field = QQ) -> ExactArray:
    num = np.zeros(n, dtype=np.int64)
    num[i] = 1
    return ExactArray(num, 1, field, normalized=True)


# elimination


def _sym_domain(field: Field):
    return SymQQ if field.characteristic == 0 else SymGF(field.characteristic)


def _to_domain_matrix(a: ExactArray) -> DomainMatrix:
    dom = _sym_domain(a.field)
    rows, cols = a.shape
    data: dict[int, dict[int, object]] = {}
    for i, j in zip(*np.nonzero(a.num)):
        data.setdefault(int(i), {})[int(j)] = dom(int(a.num[i, j]))
    return DomainMatrix(data, (rows, cols), dom)


def _domain_rows_to_exact(rows: list[dict[int, object]], ncols: int, field: Field) -> ExactArray:
    if field.characteristic:
        p = field.characteristic
        num = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, x in row.items():
                num[i, j] = int(x) % p
        return ExactArray(num, 1, field)
    den = 1
    for row in rows:
        for x in row.values():
            d = int(x.denominator)
            den = den * d // math.gcd(den, d)
    num = np.zeros((len(rows), ncols), dtype=object)
    num[:] = 0
    for i, row in enumerate(rows):
        for j, x in row.items():
            num[i, j] = int(x.numerator) * (den // int(x.denominator))
    return ExactArray(num, den, field)


def rref(a: ExactArray) -> tuple[ExactArray, tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    rows, cols = a.shape
    if rows == 0 or a.is_zero():
        return ExactArray.zeros((0, cols), a.field), ()
    dm = _to_domain_matrix(a).to_sparse()
    r, pivots = dm.rref()
    sdm = r.rep.to_sdm() if hasattr(r.rep, "to_sdm") else r.rep
    out = [dict(sdm.get(i, {})) for i in range(len(pivots))]
    return _domain_rows_to_exact(out, cols, a.field), tuple(int(p) for p in pivots)


def rank(a: ExactArray) -> int:
    return len(rref(a)[1])


def right_kernel_basis(a: ExactArray) -> ExactArray:
    """Basis (as rows) of {x : a x = 0}."""
    rows, cols = a.shape
    r, pivots = rref(a)
    free = [j for j in range(cols) if j not in set(pivots)]
    if not free:
        return ExactArray.zeros((0, cols), a.field)
    vals = r.values() if len(pivots) else None
    out = np.empty((len(free), cols), dtype=object)
    zero = a.field.zero
    out[:] = zero
    for k, f in enumerate(free):
        out[k, f] = a.field.one
        for i, p in enumerate(pivots):
            out[k, p] = -vals[i, f]
    return ExactArray.from_values(out, a.field)


def nullspace(a: ExactArray, parity: Sequence[int] | None = None) -> "Subspace":
    """Left kernel {v : v a = 0} as a subspace of the row space."""
    return Subspace(right_kernel_basis(a.T), parity=parity)


def solve_linear(a: ExactArray, b: ExactArray) -> ExactArray | None:
    """A row vector x with ``x @ a == b``, or None when inconsistent."""
    m, n = a.shape
    aug = concatenate([a.T, b.reshape(n, 1)], axis=1)
    r, pivots = rref(aug)
    if m in pivots:
        return None
    vals = r.values()
    out = [a.field.zero] * m
    for i, p in enumerate(pivots):
        out[p] = vals[i, m]
    return ExactArray.from_values(out, a.field)


class Subspace:
    """A subspace of F^n given by an RREF basis, optionally with ambient parities."""

    __slots__ = ("basis", "pivots", "ambient", "field", "parity")

    def __init__(self, vectors: ExactArray, parity: Sequence[int] | None = None):
        if vectors.ndim != 2:
            raise ValueError("subspace generators must be a 2-D array of row vectors")
        self.ambient = vectors.shape[1]
        self.field = vectors.field
        self.basis, self.pivots = rref(vectors)
        self.parity = tuple(parity) if parity is not None else None

    @classmethod
    def span(cls, vectors: Iterable, ambient: int, field: Field = QQ,
             parity: Sequence[int] | None = None) -> "Subspace":
        rows = [v.values().tolist() if isinstance(v, ExactArray) else list(v) for v in vectors]
        if not rows:
            return cls(ExactArray.zeros((0, ambient), field), parity)
        return cls(ExactArray.from_values(rows, field), parity)

    @classmethod
    def zero(cls, ambient: int, field: Field = QQ, parity=None) -> "Subspace":
        return cls(ExactArray.zeros((0, ambient), field), parity)

    @classmethod
    def whole(cls, ambient: int, field: Field = QQ, parity=None) -> "Subspace":
        return cls(ExactArray.eye(ambient, field), parity)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, basis={self.basis.tolist()})"

    def _check(self, other: "Subspace"):
        if other.ambient != self.ambient or other.field != self.field:
            raise ValueError("subspaces live in different ambient spaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(concatenate([self.basis, other.basis]), self.parity or other.parity)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.field, self.parity)
        stacked = concatenate([self.basis, other.basis])
        coeffs = right_kernel_basis(stacked.T)
        if coeffs.shape[0] == 0:
            return Subspace.zero(self.ambient, self.field, self.parity)
        a = coeffs.take(range(self.dim), axis=1)
        return Subspace(a @ self.basis, self.parity or other.parity)

    __and__ = intersect

    def reduce(self, v: ExactArray) -> ExactArray:
        """Remainder of v (vector or stacked rows) modulo this subspace."""
        if self.dim == 0:
            return v
        if v.ndim == 1:
            return v - v.take(self.pivots) @ self.basis
        return v - v.take(self.pivots, axis=1) @ self.basis

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return v.dim == 0 or self.reduce(v.basis).is_zero()
        if not isinstance(v, ExactArray):
            v = vector(v, self.field)
        return self.reduce(v).is_zero()

    __contains__ = contains

    def equals(self, other: "Subspace") -> bool:
        return self.ambient == other.ambient and self.dim == other.dim and self.contains(other)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.equals(other)

    __hash__ = None

    def coordinates(self, v: ExactArray) -> ExactArray:
        """Coefficients of v in the RREF basis; raises if v is outside."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return v.take(self.pivots) if v.ndim == 1 else v.take(self.pivots, axis=1)

    def quotient_basis(self, sub: "Subspace") -> ExactArray:
        """Rows completing a basis of ``sub`` to one of ``self``."""
        if not self.contains(sub):
            raise ValueError("not a subspace of this space")
        if self.dim == 0:
            return self.basis
        rest = sub.reduce(self.basis)
        r, _ = rref(rest)
        return r

    def vectors(self) -> list[ExactArray]:
        return [self.basis[i] for i in range(self.dim)]

    # grading

    def with_parity(self, parity: Sequence[int]) -> "Subspace":
        s = Subspace.__new__(Subspace)
        s.ambient, s.field, s.basis, s.pivots = self.ambient, self.field, self.basis, self.pivots
        s.parity = tuple(parity)
        return s

    def row_parities(self) -> tuple[int, ...] | None:
        """Parity of each basis row, or None if some row is inhomogeneous."""
        if self.parity is None:
            return None
        par = np.array(self.parity)
        out = []
        for i in range(self.dim):
            ps = set(par[np.nonzero(self.basis.num[i])[0]].tolist())
            if len(ps) != 1:
                return None
            out.append(ps.pop())
        return tuple(out)

    def is_graded(self) -> bool:
        return self.row_parities() is not None

    def homogeneous_part(self, parity: int) -> "Subspace":
        if self.parity is None:
            raise ValueError("subspace carries no parity information")
        mask = np.array([p == parity for p in self.parity])
        proj = ExactArray(self.basis.num * mask, self.basis.den, self.field)
        return Subspace(proj, self.parity) & self


def as_subspace(obj, ambient: int, field: Field = QQ, parity=None) -> Subspace:
    if isinstance(obj, Subspace):
        return obj
    if isinstance(obj, ExactArray):
        return Subspace(obj.reshape(1, -1) if obj.ndim == 1 else obj, parity)
    return Subspace.span(obj, ambient, field, parity)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


# characteristic polynomials and eigenvalues


def _sym_poly(coeffs, field: Field):
    from sympy import Poly, symbols
    x = symbols("x")
    if field.characteristic:
        return Poly([int(c) for c in coeffs], x, modulus=field.characteristic)
    return Poly([SymQQ(int(c.numerator), int(c.denominator)) for c in coeffs], x, domain=SymQQ)


def _from_sym_coeff(c, field: Field) -> Scalar:
    if field.characteristic:
        return field(int(c))
    return Fraction(int(c.numerator), int(c.denominator))


def charpoly(m: ExactArray) -> list[Scalar]:
    """Characteristic polynomial coefficients, highest degree first."""
    n = m.shape[0]
    if n == 0:
        return [m.field.one]
    cp = _to_domain_matrix(m).to_dense().charpoly()
    # the domain matrix holds den * m, so rescale the coefficient of x^(n-k) by den^-k
    den = m.field(m.den)
    out, scale = [], m.field.one
    for c in cp:
        out.append(_from_sym_coeff(c, m.field) / scale)
        scale = scale * den
    return out


def charpoly_factors(m: ExactArray) -> list[tuple[list[Scalar], int]]:
    """Monic irreducible factors of the characteristic polynomial with multiplicities."""
    if m.shape[0] == 0:
        return []
    poly = _sym_poly(charpoly(m), m.field)
    _, factors = poly.factor_list()
    out = []
    for f, k in factors:
        coeffs = [_from_sym_coeff(c, m.field) for c in f.all_coeffs()]
        lead = coeffs[0]
        out.append(([c / lead for c in coeffs], int(k)))
    out.sort(key=lambda fk: (len(fk[0]), [_sort_key(c) for c in fk[0]]))
    return out


def _sort_key(x: Scalar):
    return x.value if isinstance(x, Residue) else x


def eigenvalues(m: ExactArray) -> list[Scalar]:
    """Eigenvalues lying in the base field, in increasing order."""
    roots = [-f[1] for f, _ in charpoly_factors(m) if len(f) == 2]
    return sorted(roots, key=_sort_key)


def poly_of_matrix(coeffs: Sequence[Scalar], m: ExactArray) -> ExactArray:
    """Evaluate a polynomial (highest degree first) at a square matrix."""
    n = m.shape[0]
    eye = ExactArray.eye(n, m.field)
    acc = ExactArray.zeros((n, n), m.field)
    for c in coeffs:
        acc = acc @ m + eye.scale(c)
    return acc


def field_sqrt(x: Scalar, field: Field) -> Scalar | None:
    """A square root of x in the field, or None."""
    if field.characteristic:
        from sympy.ntheory import sqrt_mod
        r = sqrt_mod(field.to_int(x), field.characteristic)
        return None if r is None else field(r)
    x = Fraction(x)
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None
