from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

import oracle
from ncjordan.algebra import GradingError, SuperAlgebra
from ncjordan.catalog import build_Dt, build_K3, build_Q, build_Vmodule
from ncjordan.constructions import split_null_extension
from ncjordan.identities import check_noncommutative_jordan
from ncjordan.linalg import ExactArray, Subspace
from ncjordan.representations import (ModuleError, SuperBimodule, check_ncj_bimodule,
                                      check_via_rpm, decompose, direct_sum_modules, dt1_relations,
                                      envelope_dim, find_isomorphism, identify_summands,
                                      is_abs_irreducible, module_peirce, modules_isomorphic,
                                      opposite_module, regular, restrict_module,
                                      submodule_generated, zero_module)

HALF = Fraction(1, 2)


def span(M, *names):
    return Subspace.span([M.basis_vector(n) for n in names], M.dim, M.field)


def test_regular_module_actions_follow_the_table():
    A = build_Dt(2, 1, 0, 0)
    R = regular(A)
    e1 = A.basis_vector("e1")
    for i in range(A.dim):
        m = R.basis_vector(i)
        assert (m @ R.mult_operator("e1", "R")).equals(A.multiply(A.basis_vector(i), e1))
        assert (m @ R.mult_operator("e1", "L")).equals(A.multiply(e1, A.basis_vector(i)))


def test_regular_module_of_zero_algebra_has_zero_actions():
    Z = SuperAlgebra.from_products((0,), {}, "zero", ("a",))
    R = regular(Z)
    assert R.left.is_zero() and R.right.is_zero()


def test_action_shape_and_grading_validated():
    A = build_Dt(2, 1, 0, 0)
    with pytest.raises(ModuleError):
        SuperBimodule(A, (0,), ExactArray.zeros((4, 2, 2)), ExactArray.zeros((1, 4, 1)))
    left = ExactArray.zeros((4, 1, 1))
    right = ExactArray.from_values([[[0], [0], [1], [0]]])
    with pytest.raises(GradingError):
        SuperBimodule(A, (0,), left, right)


def test_opposite_module_twice_is_original():
    for A in (build_Dt(2, 1, 0, 0), build_Q(1), build_K3(Fraction(1, 3), 1, 2)):
        R = regular(A)
        back = opposite_module(opposite_module(R))
        assert back.parity == R.parity
        assert back.left.equals(R.left) and back.right.equals(R.right)


def test_opposite_of_regular_q1_right_action():
    Q = build_Q(1)
    Op = opposite_module(regular(Q))
    assert Op.parity == (1, 0)
    # m = 1 (odd in Op) times bar: sign twist relative to the regular action
    bar = Q.basis_vector("~1")
    got = Op.basis_vector(0) @ Op.mult_operator(bar, "R")
    reg = regular(Q).basis_vector(0) @ regular(Q).mult_operator(bar, "R")
    assert got.equals(reg.scale(-1))


@pytest.mark.parametrize("A", [build_Dt(2, 1, 0, 0), build_Dt(-2, HALF, HALF, 0), build_Q(2),
                               build_K3(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7))],
                         ids=lambda A: A.name)
def test_regular_and_opposite_pass_both_routes(A):
    for M in (regular(A), opposite_module(regular(A))):
        assert check_ncj_bimodule(A, M).passed
        assert check_via_rpm(A, M).passed


def test_split_null_extension_matches_envelope_oracle():
    A = build_Dt(3, 1, 0, 0)
    E = split_null_extension(A, opposite_module(regular(A)))
    T = oracle.plain_table(E)
    assert oracle.envelope_ncj(T, E.parity) == (True, True)


def test_vmodules():
    for a in (0, 1, 2):
        M = build_Vmodule(a, 0, 0, True)
        assert check_ncj_bimodule(M.algebra, M).passed
        assert check_via_rpm(M.algebra, M).passed
    bad = build_Vmodule(0, 1, 0, True)
    rep = check_via_rpm(bad.algebra, bad)
    assert not rep.passed
    assert rep.witness.relation == "rplus_rminus_commutator"
    assert not check_ncj_bimodule(bad.algebra, bad).passed


def test_vmodule_peirce():
    M = build_Vmodule(1, 0, 0, True)
    P = module_peirce(M, "e1")
    assert P[0].equals(span(M, "w"))
    assert P[1].equals(span(M, "z", "t"))
    assert P[2].equals(span(M, "v"))


def test_circle_only_vmodules_are_jordan():
    for a, b, g in [(0, 0, 0), (1, 2, 3), (HALF, 1, 0), (-1, 0, 5), (2, Fraction(1, 3), -1)]:
        M = build_Vmodule(a, b, g, False)
        assert check_ncj_bimodule(M.algebra, M).passed


def test_jordan_bimodule_without_rminus_passes_rpm():
    J = build_Dt(2, HALF, 0, 0)
    assert check_via_rpm(J, regular(J)).passed


def test_m1_only_unital_module_fails():
    A = build_Dt(2, 1, 0, 0)
    half = [[[HALF]], [[HALF]], [[0]], [[0]]]
    M = SuperBimodule(A, (0,), ExactArray.from_values(half),
                      ExactArray.from_values([[[HALF], [HALF], [0], [0]]]), "M1")
    assert not check_ncj_bimodule(A, M).passed


def test_dt1_relations_on_reg_plus_op():
    for t in (2, -2, 3):
        A = build_Dt(t, 1, 0, 0)
        M = direct_sum_modules(regular(A), opposite_module(regular(A)))
        assert all(dt1_relations(M, t).values())


def test_submodule_generated():
    A = build_Dt(2, 1, 0, 0)
    R = regular(A)
    assert submodule_generated(R, R.basis_vector("e1")).dim == 4
    R0 = regular(build_Dt(0, 1, 0, 0))
    assert submodule_generated(R0, R0.basis_vector("e1")).equals(span(R0, "e1", "x", "y"))
    assert submodule_generated(R, ExactArray.zeros(4)).dim == 0


def test_envelope_dimensions():
    A = build_Dt(2, 1, 0, 0)
    assert envelope_dim(zero_module(A, (0, 0))) == 1
    assert envelope_dim(regular(A)) == 16
    assert envelope_dim(regular(build_Dt(0, 1, 0, 0))) < 16


def test_envelope_dimension_oracle():
    # brute-force span of words of length <= 4 in the R and L matrices, via sympy
    A = build_Dt(0, 1, 0, 0)
    R = regular(A)
    mats = []
    for kind in ("R", "L"):
        for a in range(4):
            mats.append(sympy.Matrix([[Fraction(c) for c in row] for row in
                                      R.mult_operator(a, kind).tolist()]))
    words = [sympy.eye(4)]
    frontier = [sympy.eye(4)]
    for _ in range(4):
        frontier = [w * m for w in frontier for m in mats]
        words.extend(frontier)
    dim = sympy.Matrix([list(w) for w in words]).rank()
    assert dim == envelope_dim(R) == 13


def test_irreducibility():
    assert is_abs_irreducible(regular(build_Dt(2, 1, 0, 0))).status == "irreducible"
    v = is_abs_irreducible(regular(build_Dt(0, 1, 0, 0)))
    assert v.status == "reducible"
    R0 = regular(build_Dt(0, 1, 0, 0))
    assert v.witness.equals(span(R0, "e1", "x", "y"))
    one = SuperBimodule(build_Dt(2, 1, 0, 0), (0,), ExactArray.from_values([[[1]], [[0]], [[0]], [[0]]]),
                        ExactArray.from_values([[[1], [0], [0], [0]]]))
    assert is_abs_irreducible(one).status == "irreducible"


def test_intertwiners_and_parity_shift():
    A = build_Dt(2, 1, 0, 0)
    R = regular(A)
    assert modules_isomorphic(R, R)
    Op = opposite_module(R)
    assert not modules_isomorphic(R, Op, 0)
    assert modules_isomorphic(R, Op, 1)
    iso = find_isomorphism(R, Op, 1)
    assert iso is not None


def test_cyclic_submodule_of_two_copies_is_regular():
    A = build_Dt(2, 1, 0, 0)
    R = regular(A)
    M = direct_sum_modules(R, R)
    S = submodule_generated(M, M.basis_vector(0))
    assert S.dim == 4
    assert modules_isomorphic(restrict_module(M, S), R)


def test_decompositions():
    A = build_Dt(2, 1, 0, 0)
    R = regular(A)
    D = decompose(direct_sum_modules(R, opposite_module(R)))
    assert D.status == ["irreducible", "irreducible"]
    assert sorted(identify_summands(D, {"Reg": R, "Reg^op": opposite_module(R)})) == ["Reg", "Reg^op"]
    assert len(decompose(R)) == 1
    D0 = decompose(regular(build_Dt(0, 1, 0, 0)))
    assert D0.status == ["indecomposable"]
