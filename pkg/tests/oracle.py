"""Independent brute-force reference computations used by the tests.

Nothing here calls into the package's linear algebra or identity checkers:
products are computed with plain Fractions (or ints mod p) and linear algebra
goes through sympy.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy


def plain_table(A) -> list:
    """The structure constants of A as nested lists of Fractions or ints mod p."""
    out = []
    for row in A.table.tolist():
        out.append([[_plain(c) for c in vec] for vec in row])
    return out


def _plain(c):
    if hasattr(c, "value"):
        return c.value
    return Fraction(c)


def mul(T, x, y, p=None):
    n = len(T)
    z = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            c = x[i] * y[j]
            for k, t in enumerate(T[i][j]):
                if t:
                    z[k] += c * t
    if p is not None:
        z = [v % p for v in z]
    return z


def dt_product(t, a, b, g, u, v):
    """Product in D_t(a, b, g) written out by hand; u, v are (e1, e2, x, y) coordinates."""
    t, a, b, g = (Fraction(s) for s in (t, a, b, g))
    e1 = (1, 0, 0, 0)
    e2 = (0, 1, 0, 0)
    x = (0, 0, 1, 0)
    y = (0, 0, 0, 1)

    def comb(*terms):
        out = [Fraction(0)] * 4
        for c, vec in terms:
            for k in range(4):
                out[k] += c * vec[k]
        return out

    table = {
        (0, 0): comb((1, e1)),
        (1, 1): comb((1, e2)),
        (0, 1): comb(), (1, 0): comb(),
        (0, 2): comb((a, x), (b, y)), (2, 1): comb((a, x), (b, y)),
        (2, 0): comb((1 - a, x), (-b, y)), (1, 2): comb((1 - a, x), (-b, y)),
        (0, 3): comb((g, x), (1 - a, y)), (3, 1): comb((g, x), (1 - a, y)),
        (3, 0): comb((-g, x), (a, y)), (1, 3): comb((-g, x), (a, y)),
        (2, 3): comb((2 * a, e1), (2 * (1 - a) * t, e2)),
        (3, 2): comb((-2 * (1 - a), e1), (-2 * a * t, e2)),
        (2, 2): comb((-2 * b, e1), (2 * b * t, e2)),
        (3, 3): comb((2 * g, e1), (-2 * g * t, e2)),
    }
    out = [Fraction(0)] * 4
    for i in range(4):
        for j in range(4):
            c = Fraction(u[i]) * Fraction(v[j])
            if c:
                for k in range(4):
                    out[k] += c * table[i, j][k]
    return out


# Grassmann envelopes: A is an NCJ (resp. Jordan) superalgebra iff
# A_0 (x) G_0 + A_1 (x) G_1 is an NCJ (resp. Jordan) algebra.


def g_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if set(ma) & set(mb):
                continue
            merged = ma + mb
            inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged))
                      if merged[i] > merged[j])
            key = tuple(sorted(merged))
            out[key] = out.get(key, 0) + (-1 if inv % 2 else 1) * ca * cb
    return {k: v for k, v in out.items() if v}


def g_add(a: dict, b: dict, s=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


def env_mul(T, X, Y):
    n = len(T)
    Z = [{} for _ in range(n)]
    for i in range(n):
        if not X[i]:
            continue
        for j in range(n):
            if not Y[j]:
                continue
            prod = None
            for k, t in enumerate(T[i][j]):
                if t:
                    if prod is None:
                        prod = g_mul(X[i], Y[j])
                    Z[k] = g_add(Z[k], {m: t * c for m, c in prod.items()})
    return Z


def env_sub(X, Y):
    return [g_add(a, b, -1) for a, b in zip(X, Y)]


def env_is_zero(X) -> bool:
    return all(not a for a in X)


def random_envelope_element(parity, rng: random.Random, ngens: int = 10):
    """A random element of the Grassmann envelope with small integer coefficients."""
    X = []
    for p in parity:
        comp: dict = {}
        for _ in range(2):
            size = rng.choice([0, 2]) if p == 0 else rng.choice([1, 3])
            mono = tuple(sorted(rng.sample(range(ngens), size)))
            comp[mono] = comp.get(mono, 0) + rng.choice([1, 2, -1, 3])
        X.append({k: v for k, v in comp.items() if v})
    return X


def envelope_ncj(T, parity, seed=0, trials=4) -> tuple[bool, bool]:
    """(flexible, x^2 y x = x^2 (y x)) on random envelope elements."""
    rng = random.Random(seed)
    flex = jor = True
    for _ in range(trials):
        X = random_envelope_element(parity, rng)
        Y = random_envelope_element(parity, rng)
        xy = env_mul(T, X, Y)
        if not env_is_zero(env_sub(env_mul(T, xy, X), env_mul(T, X, env_mul(T, Y, X)))):
            flex = False
        x2 = env_mul(T, X, X)
        if not env_is_zero(env_sub(env_mul(T, env_mul(T, x2, Y), X),
                                   env_mul(T, x2, env_mul(T, Y, X)))):
            jor = False
    return flex, jor


def envelope_commutative(T, parity, seed=0, trials=4) -> bool:
    rng = random.Random(seed)
    for _ in range(trials):
        X = random_envelope_element(parity, rng)
        Y = random_envelope_element(parity, rng)
        if not env_is_zero(env_sub(env_mul(T, X, Y), env_mul(T, Y, X))):
            return False
    return True


# linear algebra through sympy


def derivation_dim(T, parity) -> int:
    """dim Der(A) by solving d(ab) = d(a) b + (-1)^{|d||a|} a d(b) per parity of d."""
    n = len(T)
    total = 0
    for pd in (0, 1):
        cells = [(i, k) for i in range(n) for k in range(n) if (parity[i] + parity[k]) % 2 == pd]
        syms = sympy.symbols(f"d0:{len(cells)}")
        D = [[0] * n for _ in range(n)]
        for s, (i, k) in zip(syms, cells):
            D[i][k] = s
        eqs = []
        for a in range(n):
            for b in range(n):
                ab = T[a][b]
                sign = -1 if pd and parity[a] else 1
                for m in range(n):
                    lhs = sum(ab[k] * D[k][m] for k in range(n))
                    rhs = sum(D[a][k] * T[k][b][m] for k in range(n))
                    rhs += sign * sum(D[b][k] * T[a][k][m] for k in range(n))
                    eqs.append(sympy.expand(lhs - rhs))
        eqs = [e for e in eqs if e != 0]
        if not cells:
            continue
        if not eqs:
            total += len(cells)
            continue
        M = sympy.Matrix([[sympy.diff(e, s) for s in syms] for e in eqs])
        total += len(cells) - M.rank()
    return total


def peirce_dims(T, e) -> tuple[int, int, int]:
    """Dimensions of the 0, 1/2, 1 eigenspaces of L_e + R_e, via sympy."""
    n = len(T)
    rows = []
    for i in range(n):
        basis = [1 if k == i else 0 for k in range(n)]
        rows.append([a + b for a, b in zip(mul(T, e, basis), mul(T, basis, e))])
    M = sympy.Matrix(rows).T
    out = []
    for lam in (0, 1, 2):
        out.append(n - (M - lam * sympy.eye(n)).rank())
    return tuple(out)


def ideal_dim(T, seeds) -> int:
    """Dimension of the two-sided ideal generated by seeds, by naive closure."""
    n = len(T)
    basis = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    span = [list(s) for s in seeds]
    while True:
        cand = list(span)
        for v in span:
            for b in basis:
                cand.append(mul(T, v, b))
                cand.append(mul(T, b, v))
        M = sympy.Matrix(cand)
        r = M.rank()
        if r == sympy.Matrix(span).rank():
            return r
        span = [list(row) for row in M.rref()[0].tolist()[:r]]


def is_homomorphism(TA, TB, P, p=None) -> bool:
    """P[i] is the image of the i-th basis vector of A, in coordinates of B."""
    n = len(TA)
    for i in range(n):
        for j in range(n):
            lhs = [0] * len(TB)
            for k, c in enumerate(TA[i][j]):
                if c:
                    lhs = [u + c * w for u, w in zip(lhs, P[k])]
            rhs = mul(TB, P[i], P[j], p)
            if p is not None:
                lhs = [u % p for u in lhs]
            if lhs != rhs:
                return False
    return True


def count_dt_isomorphisms_mod_p(TA, TB, p: int) -> int:
    """Count the isomorphisms D -> D' over GF(p) that fix the even idempotent set.

    The even part of both algebras is F e1 + F e2, whose only idempotent
    bases are (e1, e2) and (e2, e1), so the even block is the identity or the
    swap and only the 2 x 2 odd block is searched.
    """
    count = 0
    for swap in (False, True):
        ev = [[0, 1, 0, 0], [1, 0, 0, 0]] if swap else [[1, 0, 0, 0], [0, 1, 0, 0]]
        for a, b, c, d in itertools.product(range(p), repeat=4):
            if (a * d - b * c) % p == 0:
                continue
            P = ev + [[0, 0, a, b], [0, 0, c, d]]
            if is_homomorphism(TA, TB, P, p):
                count += 1
    return count
