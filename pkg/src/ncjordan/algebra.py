"""Finite-dimensional superalgebras given by structure constants.

``table[i, j, k]`` is the coefficient of basis vector k in ``e_i e_j``.
Multiplication operators act on row vectors from the right:

* ``y R_x = y x``
* ``y L_x = (-1)^{p(x) p(y)} x y``
* ``R^+ = (R + L) / 2`` and ``R^- = (R - L) / 2``, so ``y R^+_x = y o x`` and
  ``y R^-_x = [y, x] / 2``.

A product of operators ``A B`` means "apply A, then B", which is the matrix
product ``A @ B`` on row vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .field import QQ, Field
from .linalg import ExactArray, einsum, unit_vector, vector


class GradingError(ValueError):
    pass


def sign_matrix(p: Sequence[int], q: Sequence[int] | None = None) -> np.ndarray:
    """``(-1)^{p_i q_j}`` as an int64 array."""
    p = np.asarray(p, dtype=np.int64)
    q = p if q is None else np.asarray(q, dtype=np.int64)
    return np.where(np.outer(p, q) % 2 == 1, -1, 1).astype(np.int64)


def with_signs(x: ExactArray, signs: np.ndarray) -> ExactArray:
    """Entrywise product with a broadcastable array of +-1."""
    return ExactArray(x.num * signs, x.den, x.field)


class SuperAlgebra:
    """An immutable Z/2-graded algebra with a fixed homogeneous basis."""

    __slots__ = ("table", "parity", "name", "basis_names", "_cache")

    def __init__(self, table, parity: Sequence[int], name: str = "",
                 basis_names: Sequence[str] | None = None, field: Field | None = None):
        if not isinstance(table, ExactArray):
            table = ExactArray.from_values(table, field or QQ)
        elif field is not None and table.field != field:
            raise ValueError("table field does not match the requested field")
        n = len(parity)
        if table.shape != (n, n, n):
            raise ValueError(f"table shape {table.shape} does not match dimension {n}")
        if any(p not in (0, 1) for p in parity):
            raise GradingError("parities must be 0 or 1")
        self.table = table
        self.parity = tuple(int(p) for p in parity)
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(n))
        if len(self.basis_names) != n:
            raise ValueError("basis_names has the wrong length")
        self._cache: dict = {}
        self._validate_grading()

    def _validate_grading(self):
        p = np.array(self.parity)
        for i, j, k in zip(*np.nonzero(self.table.num)):
            if (p[i] + p[j] - p[k]) % 2:
                raise GradingError(
                    f"product {self.basis_names[i]}*{self.basis_names[j]} has a component on "
                    f"{self.basis_names[k]} of the wrong parity")

    @classmethod
    def from_products(cls, parity: Sequence[int], products: Mapping[tuple[int, int], Mapping[int, object]],
                      name: str = "", basis_names: Sequence[str] | None = None,
                      field: Field = QQ) -> "SuperAlgebra":
        """Build from sparse entries ``{(i, j): {k: coeff}}``; missing products are zero."""
        n = len(parity)
        vals = np.empty((n, n, n), dtype=object)
        vals[:] = 0
        for (i, j), row in products.items():
            for k, c in row.items():
                vals[i, j, k] = c
        return cls(ExactArray.from_values(vals, field), parity, name, basis_names, field)

    # basics

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def field(self) -> Field:
        return self.table.field

    @property
    def even_dim(self) -> int:
        return self.parity.count(0)

    @property
    def odd_dim(self) -> int:
        return self.parity.count(1)

    def __repr__(self):
        label = self.name or "SuperAlgebra"
        return f"<{label}: dim {self.even_dim}|{self.odd_dim} over {self.field.token}>"

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def basis_vector(self, i: int | str) -> ExactArray:
        if isinstance(i, str):
            i = self.index(i)
        return unit_vector(self.dim, i, self.field)

    def element(self, coeffs: Mapping[str | int, object] | Sequence) -> ExactArray:
        """Element from a name->coefficient mapping or a full coefficient list."""
        if isinstance(coeffs, Mapping):
            vals = [0] * self.dim
            for key, c in coeffs.items():
                vals[self.index(key) if isinstance(key, str) else key] = c
            return vector(vals, self.field)
        return vector(coeffs, self.field)

    def parity_of(self, x: ExactArray) -> int | None:
        """Parity of a homogeneous nonzero element (None if inhomogeneous or zero)."""
        ps = {self.parity[i] for (i,) in x.nonzero()}
        return ps.pop() if len(ps) == 1 else None

    def same_table(self, other: "SuperAlgebra") -> bool:
        return (self.parity == other.parity and self.field == other.field
                and self.table.equals(other.table))

    # products

    def multiply(self, x: ExactArray, y: ExactArray) -> ExactArray:
        return einsum("i,j,ijk->k", x, y, self.table)

    def associator(self, x: ExactArray, y: ExactArray, z: ExactArray) -> ExactArray:
        return self.multiply(self.multiply(x, y), z) - self.multiply(x, self.multiply(y, z))

    def derived_table(self, kind: str) -> ExactArray:
        """Structure constants of the circle, bracket or bullet product."""
        key = ("derived", kind)
        if key in self._cache:
            return self._cache[key]
        s = sign_matrix(self.parity)[:, :, None]
        swapped = with_signs(self.table.transpose(1, 0, 2), s)
        if kind == "circle":
            out = (self.table + swapped).scale(Fraction(1, 2))
        elif kind == "bullet":
            out = self.table + swapped
        elif kind == "bracket":
            out = self.table - swapped
        else:
            raise ValueError(f"unknown product {kind!r}; expected circle, bracket or bullet")
        self._cache[key] = out
        return out

    def derived_product(self, x: ExactArray, y: ExactArray, kind: str) -> ExactArray:
        return einsum("i,j,ijk->k", x, y, self.derived_table(kind))

    def is_idempotent(self, e: ExactArray) -> bool:
        return self.parity_of(e) == 0 and self.multiply(e, e).equals(e)

    # operators

    def operators(self, kind: str) -> ExactArray:
        """Tensor ``op[a]`` of the basis operators of the given kind.

        Kinds: ``R``, ``L`` (signed), ``Rplus``, ``Rminus`` and ``Lu`` (plain
        left multiplication, no sign).
        """
        if kind in self._cache:
            return self._cache[kind]
        if kind == "R":
            out = self.table.transpose(1, 0, 2)
        elif kind == "Lu":
            out = self.table
        elif kind == "L":
            out = with_signs(self.table, sign_matrix(self.parity)[:, :, None])
        elif kind == "Rplus":
            out = (self.operators("R") + self.operators("L")).scale(Fraction(1, 2))
        elif kind == "Rminus":
            out = (self.operators("R") - self.operators("L")).scale(Fraction(1, 2))
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
        self._cache[kind] = out
        return out

    def mult_operator(self, x: ExactArray | int | str, kind: str = "R") -> ExactArray:
        if isinstance(x, (int, str)):
            x = self.basis_vector(x)
        return einsum("a,aij->ij", x, self.operators(kind))

    # convenience

    def format(self, x: ExactArray) -> str:
        terms = []
        for (i,), c in zip(x.nonzero(), [x[i] for (i,) in x.nonzero()]):
            name = self.basis_names[i]
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"({c})*{name}")
        return " + ".join(terms) if terms else "0"

    def with_name(self, name: str, basis_names: Sequence[str] | None = None) -> "SuperAlgebra":
        return SuperAlgebra(self.table, self.parity, name, basis_names or self.basis_names)
