"""Builders for the standard families of superalgebras and modules.

Basis orderings are part of the file-format contract:

* ``Dt``: (e1, e2, x, y) with parities (0, 0, 1, 1)
* ``K3``: (e, z, w) with parities (0, 1, 1)
* ``M(m,n)``: matrix units E_ij in row-major order; parity of E_ij is |i| + |j|
  with |i| = 0 for i < m
* ``Q(n)``: e_ij row-major, then the barred copies
* ``P2``: (e1, e2, a, b, e, f, c, d)
* ``K10``: (e1, uz, vz, uw, vw, e2, u, v, w, z); ``K9`` drops e2
* ``U(V,f,star)``: (1, v_1, ..., v_d)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import GradingError, SuperAlgebra, sign_matrix
from .field import QQ, Field, PrimeField
from .linalg import ExactArray, rank


class CatalogError(ValueError):
    pass


def _half(field: Field):
    return field(Fraction(1, 2))


def build_Dt(t=1, alpha=1, beta=0, gamma=0, field: Field = QQ) -> SuperAlgebra:
    """The four-dimensional superalgebra D_t(alpha, beta, gamma)."""
    t, a, b, g = (field(v) for v in (t, alpha, beta, gamma))
    one = field(1)
    e1, e2, x, y = range(4)
    products = {
        (e1, e1): {e1: one},
        (e2, e2): {e2: one},
        (e1, x): {x: a, y: b},
        (x, e2): {x: a, y: b},
        (x, e1): {x: one - a, y: -b},
        (e2, x): {x: one - a, y: -b},
        (e1, y): {x: g, y: one - a},
        (y, e2): {x: g, y: one - a},
        (y, e1): {x: -g, y: a},
        (e2, y): {x: -g, y: a},
        (x, y): {e1: 2 * a, e2: 2 * (one - a) * t},
        (y, x): {e1: -2 * (one - a), e2: -2 * a * t},
        (x, x): {e1: -2 * b, e2: 2 * b * t},
        (y, y): {e1: 2 * g, e2: -2 * g * t},
    }
    name = f"D_{t}({alpha},{beta},{gamma})"
    return SuperAlgebra.from_products((0, 0, 1, 1), products, name, ("e1", "e2", "x", "y"), field)


def build_K3(alpha=Fraction(1, 2), beta=0, gamma=0, field: Field = QQ) -> SuperAlgebra:
    """The three-dimensional superalgebra K_3(alpha, beta, gamma)."""
    a, b, g = (field(v) for v in (alpha, beta, gamma))
    one = field(1)
    e, z, w = range(3)
    products = {
        (e, e): {e: one},
        (e, z): {z: a, w: b},
        (e, w): {z: g, w: one - a},
        (z, e): {z: one - a, w: -b},
        (z, z): {e: -2 * b},
        (z, w): {e: 2 * a},
        (w, e): {w: a, z: -g},
        (w, z): {e: -2 * (one - a)},
        (w, w): {e: 2 * g},
    }
    name = f"K_3({alpha},{beta},{gamma})"
    return SuperAlgebra.from_products((0, 1, 1), products, name, ("e", "z", "w"), field)


def build_Mmn(m: int, n: int, field: Field = QQ) -> SuperAlgebra:
    """The matrix superalgebra M_{m,n} with block grading."""
    if m < 0 or n < 0 or m + n < 1:
        raise CatalogError("M(m,n) needs m + n >= 1")
    N = m + n
    deg = [0] * m + [1] * n
    idx = {(i, j): i * N + j for i in range(N) for j in range(N)}
    parity = [(deg[i] + deg[j]) % 2 for i in range(N) for j in range(N)]
    products = {}
    for i in range(N):
        for j in range(N):
            for l in range(N):
                products[(idx[i, j], idx[j, l])] = {idx[i, l]: 1}
    names = [f"E{i + 1}{j + 1}" for i in range(N) for j in range(N)]
    return SuperAlgebra.from_products(parity, products, f"M_{m},{n}", names, field)


def build_Mn(n: int, field: Field = QQ) -> SuperAlgebra:
    """The ordinary matrix algebra M_n, purely even."""
    A = build_Mmn(n, 0, field)
    return A.with_name(f"M_{n}", [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)])


def build_Q(n: int, field: Field = QQ) -> SuperAlgebra:
    """Q(n) = M_n plus an odd copy, with bar(a) b = a bar(b) = bar(ab) and bar(a) bar(b) = ab."""
    if n < 1:
        raise CatalogError("Q(n) needs n >= 1")
    k = n * n
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    products = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                a, b, ab = idx[i, j], idx[j, l], idx[i, l]
                products[(a, b)] = {ab: 1}
                products[(a + k, b)] = {ab + k: 1}
                products[(a, b + k)] = {ab + k: 1}
                products[(a + k, b + k)] = {ab: 1}
    names = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    names += [f"~e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    if n == 1:
        names = ["1", "~1"]
    return SuperAlgebra.from_products([0] * k + [1] * k, products, f"Q({n})", names, field)


def build_P2(field: Field = QQ) -> SuperAlgebra:
    """The eight-dimensional Jordan superalgebra P(2), from its circle table."""
    h = _half(field)
    e1, e2, a, b, e, f, c, d = range(8)
    sym = {
        (e1, e1): {e1: 1}, (e2, e2): {e2: 1},
        (e1, e): {e: 1}, (e2, f): {f: 1},
        (a, b): {e1: h, e2: h},
        (e, a): {d: h}, (f, b): {d: h},
        (a, d): {f: 1}, (b, d): {e: 1},
    }
    for m in (a, b, c, d):
        sym[(e1, m)] = {m: h}
        sym[(e2, m)] = {m: h}
    skew = {
        (e, c): {b: h},
        (f, c): {a: -h},
        (c, d): {e1: h, e2: -h},
    }
    products: dict = {}
    for (i, j), row in sym.items():
        products[(i, j)] = dict(row)
        products[(j, i)] = dict(row)
    parity = (0, 0, 0, 0, 1, 1, 1, 1)
    for (i, j), row in skew.items():
        products[(i, j)] = dict(row)
        products[(j, i)] = {k: -v for k, v in row.items()}
    return SuperAlgebra.from_products(parity, products, "P(2)",
                                      ("e1", "e2", "a", "b", "e", "f", "c", "d"), field)


def build_P2_from_strp(field: Field = QQ) -> tuple[SuperAlgebra, ExactArray]:
    """Symmetric elements of M_{2,2} under the transpose superinvolution.

    Returns the Jordan superalgebra M_{2,2}^(+) and the 8 x 16 matrix whose
    rows are the P(2) basis elements (e1, e2, a, b, e, f, c, d) written in
    matrix units, so the two constructions can be compared.
    """
    from .constructions import symmetrize

    M = symmetrize(build_Mmn(2, 2, field))
    N = 4

    def unit(i, j, s=1):
        v = [0] * (N * N)
        v[(i - 1) * N + (j - 1)] = s
        return v

    def add(*vs):
        return [sum(x) for x in zip(*vs)]

    rows = [
        add(unit(1, 1), unit(3, 3)),
        add(unit(2, 2), unit(4, 4)),
        add(unit(1, 2), unit(4, 3)),
        add(unit(2, 1), unit(3, 4)),
        unit(3, 1),
        unit(4, 2),
        add(unit(1, 4), unit(2, 3, -1)),
        add(unit(3, 2), unit(4, 1)),
    ]
    return M, ExactArray.from_values(rows, field)


# Kac superalgebra

_K10_NAMES = ("e1", "uz", "vz", "uw", "vw", "e2", "u", "v", "w", "z")
_K10_PARITY = (0, 0, 0, 0, 0, 0, 1, 1, 1, 1)


def _k10_table() -> dict[tuple[str, str], dict[str, Fraction]]:
    """Expand the seed products under the symmetries of the table.

    The seed products are closed under three signed basis maps, each an
    automorphism of the table: z -> w, w -> -z; u -> v, v -> -u; and the swap
    z <-> u, w <-> v.  Supercommutativity supplies the reversed products.
    """
    half = Fraction(1, 2)
    seed: dict[tuple[str, str], dict[str, Fraction]] = {
        ("u", "z"): {"uz": 1}, ("u", "w"): {"uw": 1},
        ("v", "z"): {"vz": 1}, ("v", "w"): {"vw": 1},
        ("z", "w"): {"e1": 1, "e2": -3},
        ("uz", "w"): {"u": -1}, ("vz", "w"): {"v": -1},
        ("uz", "vw"): {"e1": 2},
        ("e1", "e1"): {"e1": 1}, ("e2", "e2"): {"e2": 1},
    }
    for a in ("uz", "vz", "uw", "vw"):
        seed[("e1", a)] = {a: 1}
    for m in ("u", "v", "w", "z"):
        seed[("e1", m)] = {m: half}
        seed[("e2", m)] = {m: half}

    def signed(mapping: dict[str, tuple[int, str]]):
        def apply(name: str) -> tuple[int, str]:
            return mapping.get(name, (1, name))
        return apply

    maps = [
        signed({"z": (1, "w"), "w": (-1, "z"), "uz": (1, "uw"), "uw": (-1, "uz"),
                "vz": (1, "vw"), "vw": (-1, "vz")}),
        signed({"u": (1, "v"), "v": (-1, "u"), "uz": (1, "vz"), "vz": (-1, "uz"),
                "uw": (1, "vw"), "vw": (-1, "uw")}),
        signed({"z": (1, "u"), "u": (1, "z"), "w": (1, "v"), "v": (1, "w"),
                "uz": (-1, "uz"), "uw": (-1, "vz"), "vz": (-1, "uw"), "vw": (-1, "vw")}),
    ]
    par = dict(zip(_K10_NAMES, _K10_PARITY))
    table = dict(seed)

    def put(key, row):
        row = {k: v for k, v in row.items() if v != 0}
        old = table.get(key)
        if old is not None and old != row:
            raise CatalogError(f"inconsistent K10 expansion at {key}: {old} vs {row}")
        if old is None:
            table[key] = row
            return True
        return False

    changed = True
    while changed:
        changed = False
        for (x, y), row in list(table.items()):
            s = -1 if par[x] * par[y] else 1
            changed |= put((y, x), {k: s * v for k, v in row.items()})
            for f in maps:
                sx, fx = f(x)
                sy, fy = f(y)
                image: dict[str, Fraction] = {}
                for k, v in row.items():
                    sk, fk = f(k)
                    image[fk] = image.get(fk, 0) + sx * sy * sk * Fraction(v)
                changed |= put((fx, fy), image)
    return table


def build_K10(field: Field = QQ) -> SuperAlgebra:
    """The ten-dimensional Kac superalgebra."""
    table = _k10_table()
    idx = {n: i for i, n in enumerate(_K10_NAMES)}
    products = {(idx[x], idx[y]): {idx[k]: v for k, v in row.items()} for (x, y), row in table.items()}
    return SuperAlgebra.from_products(_K10_PARITY, products, "K_10", _K10_NAMES, field)


def build_K9(field: Field) -> SuperAlgebra:
    """A_1 + M inside K_10 in characteristic 3."""
    if not isinstance(field, PrimeField) or field.characteristic != 3:
        raise CatalogError("K_9 exists only in characteristic 3")
    K = build_K10(field)
    keep = [i for i, n in enumerate(K.basis_names) if n != "e2"]
    sub = K.table.num[np.ix_(keep, keep, keep)]
    dropped = K.table.num[np.ix_(keep, keep, [K.index("e2")])]
    if np.any(dropped % 3 != 0):
        raise CatalogError("A_1 + M is not closed in this characteristic")
    return SuperAlgebra(ExactArray(sub, 1, field), [K.parity[i] for i in keep], "K_9",
                        [K.basis_names[i] for i in keep])


# algebras of a bilinear form


def build_UVf_star(parity: Sequence[int], form, star=None, field: Field = QQ,
                   name: str = "") -> SuperAlgebra:
    """U(V, f, star) = F1 + V with (a + x)(b + y) = (ab + f(x,y)) + (ay + bx + x star y).

    ``form`` is the d x d Gram matrix of f; ``star`` a d x d x d tensor (None for
    the Jordan case J(V, f)).
    """
    d = len(parity)
    f = form if isinstance(form, ExactArray) else ExactArray.from_values(form, field)
    if f.shape != (d, d):
        raise CatalogError("form has the wrong shape")
    p = np.array(parity)
    if star is None:
        st = ExactArray.zeros((d, d, d), field)
    else:
        st = star if isinstance(star, ExactArray) else ExactArray.from_values(star, field)
    s = sign_matrix(parity)
    fv = f.values()
    for i in range(d):
        for j in range(d):
            if fv[i, j] != 0 and p[i] != p[j]:
                raise CatalogError("the form must vanish between even and odd vectors")
            if fv[i, j] != s[i, j] * fv[j, i]:
                raise CatalogError("the form is not supersymmetric")
    if rank(f) != d:
        raise CatalogError("the form is degenerate")
    sym = ExactArray(st.num + st.num.transpose(1, 0, 2) * s[:, :, None], st.den, field)
    if not sym.is_zero():
        raise CatalogError("star is not superanticommutative")
    from .linalg import einsum
    inv = einsum("ijk,kl->ijl", st, f) - einsum("ik,jlk->ijl", f, st)
    if not inv.is_zero():
        raise CatalogError("f is not invariant under star")
    n = d + 1
    vals = np.empty((n, n, n), dtype=object)
    vals[:] = field(0)
    one = field(1)
    vals[0, 0, 0] = one
    sv = st.values()
    for i in range(d):
        vals[0, i + 1, i + 1] = one
        vals[i + 1, 0, i + 1] = one
        for j in range(d):
            vals[i + 1, j + 1, 0] = fv[i, j]
            for k in range(d):
                vals[i + 1, j + 1, k + 1] = sv[i, j, k]
    names = ["1"] + [f"v{i + 1}" for i in range(d)]
    try:
        return SuperAlgebra(ExactArray.from_values(vals, field), (0,) + tuple(parity),
                            name or ("J(V,f)" if star is None else "U(V,f,*)"), names)
    except GradingError as exc:
        raise CatalogError(str(exc)) from exc


def standard_form(d0: int, d1: int, field: Field = QQ) -> list[list]:
    """Identity Gram matrix on the even part, symplectic pairs on the odd part."""
    if d1 % 2:
        raise CatalogError("the odd part of a nondegenerate even form has even dimension")
    d = d0 + d1
    f = [[0] * d for _ in range(d)]
    for i in range(d0):
        f[i][i] = 1
    for k in range(d1 // 2):
        i, j = d0 + 2 * k, d0 + 2 * k + 1
        f[i][j] = 1
        f[j][i] = -1
    return f


def build_JVf(d0: int, d1: int, field: Field = QQ) -> SuperAlgebra:
    """J(V, f) for the standard form on a d0|d1 dimensional space."""
    parity = [0] * d0 + [1] * d1
    return build_UVf_star(parity, standard_form(d0, d1, field), None, field, f"J({d0}|{d1})")


def build_UVf_cross(s=1, field: Field = QQ) -> SuperAlgebra:
    """U(V, f, star) with V = F^3, f the dot product and star = s times the cross product."""
    s = field(s)
    star = np.empty((3, 3, 3), dtype=object)
    star[:] = field(0)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        star[i, j, k] = s
        star[j, i, k] = -s
    return build_UVf_star([0, 0, 0], standard_form(3, 0, field), star, field, f"U(3,cross*{s})")


# modules


def build_Vmodule(alpha=0, beta=0, gamma=0, noncommutative: bool = False, field: Field = QQ):
    """The 2|2-dimensional bimodule V(alpha, beta, gamma) with basis (v, w, z, t).

    Without ``noncommutative`` it is the circle-product bimodule over the Jordan
    superalgebra D_{-1}.  With it, the module is over D_{-1}(1/2, 1/2, 0) and
    carries the bracket action
    w R-_x = (gamma+1) t, v R-_x = t, z R-_x = (w - (gamma+1) v)/2,
    z R-_e1 = -z R-_e2 = -(gamma+1) t/2.
    """
    from .representations import module_from_rplus_rminus

    a, b, g = (field(c) for c in (alpha, beta, gamma))
    one, h = field(1), _half(field)
    A = build_Dt(-1, Fraction(1, 2), Fraction(1, 2) if noncommutative else 0, 0, field)
    e1, e2, x, y = range(4)
    v, w, z, t = range(4)
    plus = {
        (e1, v): {v: one}, (e1, z): {z: h}, (e1, t): {t: h},
        (e2, w): {w: one}, (e2, z): {z: h}, (e2, t): {t: h},
        (x, v): {z: one}, (x, w): {z: g - one, t: -2 * a}, (x, z): {v: a},
        (x, t): {v: h * (g - one), w: -h},
        (y, v): {t: one}, (y, w): {z: 2 * b, t: -(g + one)}, (y, z): {v: h * (g + one), w: h},
        (y, t): {v: b},
    }
    minus = {}
    if noncommutative:
        minus = {
            (x, w): {t: g + one}, (x, v): {t: one}, (x, z): {w: h, v: -h * (g + one)},
            (e1, z): {t: -h * (g + one)}, (e2, z): {t: h * (g + one)},
        }

    def tensor(entries):
        vals = np.empty((4, 4, 4), dtype=object)
        vals[:] = field(0)
        for (i, m), row in entries.items():
            for k, c in row.items():
                vals[i, m, k] = c
        return ExactArray.from_values(vals, field)

    kind = "V" if noncommutative else "V+"
    return module_from_rplus_rminus(A, (0, 0, 1, 1), tensor(plus), tensor(minus),
                                    f"{kind}({alpha},{beta},{gamma})", ("v", "w", "z", "t"))


# idempotents used for Peirce checks, keyed by catalog expression; an entry is a
# basis name or a mapping from basis names to coefficients
LISTED_IDEMPOTENTS: list[tuple[str, list]] = [
    ("Dt(2,1,0,0)", ["e1", "e2"]),
    ("Dt(-2,1,0,0)", ["e1"]),
    ("Dt(3,1/3,1/5,1/7)", ["e1", "e2"]),
    ("Dt(2,1/2,1/2,0)", ["e1"]),
    ("Dt(-1,1,0,0)", ["e1"]),
    ("K3(1/3,1/5,1/7)", ["e"]),
    ("Hull(K3(1/2,0,0))", ["e"]),
    ("M(1,1)", ["E11", "E22"]),
    ("Mn(3)", ["e11", "e22"]),
    ("Q(1)", ["1"]),
    ("Q(2)", ["e11", "e22"]),
    ("JVf(2,2)", [{"1": "1/2", "v1": "1/2"}]),
    ("UVf(1)", [{"1": "1/2", "v1": "1/2"}]),
    ("P2", ["e1", "e2"]),
    ("K10", ["e1", "e2"]),
    ("K9@p3", ["e1"]),
]
