from __future__ import annotations

from fractions import Fraction

from ncjordan.algebra import SuperAlgebra
from ncjordan.catalog import build_Dt, build_K3, build_Mmn, build_Q
from ncjordan.constructions import bracket_algebra, mutate, symmetrize
from ncjordan.field import GF
from ncjordan.identities import (check_associative, check_flexible, check_generic_poisson,
                                 check_jordan, check_noncommutative_jordan, check_super_jacobi,
                                 check_supercommutative, from_circle_and_bracket)
from ncjordan.linalg import ExactArray

HALF = Fraction(1, 2)


def test_flexible_forms_agree():
    for A in (build_Dt(2, Fraction(1, 3), 1, 2), build_K3(1, 2, 3), build_Mmn(2, 2)):
        assert check_flexible(A, "operator").passed
        assert check_flexible(A, "flex1").passed
        assert check_flexible(A, "flex2").passed


def test_ncj_catalog_and_mutations():
    for A in (build_Q(1), build_Q(2), mutate(build_Q(2), Fraction(1, 3)), build_K3(1, 0, 0)):
        assert check_noncommutative_jordan(A).passed


def test_ncj_routes_agree_note():
    rep = check_noncommutative_jordan(build_Dt(2, 1, 0, 0))
    assert rep.notes.get("routes_agree") is True


def test_jordan_failure_has_residual_witness():
    A = mutate(build_Dt(2, 1, 0, 0), Fraction(1, 3))
    rep = check_jordan(A)
    assert not rep.passed
    w = rep.to_dict()["witness"]
    assert w["relation"] == "supercommutative"
    assert any(r != "0" for r in w["residual"])


def test_generic_poisson():
    J = build_Dt(2, HALF, 0, 0)
    assert check_generic_poisson(J, bracket_algebra(build_Dt(2, 1, 0, 0))).passed
    zero = ExactArray.zeros((4, 4, 4))
    assert check_generic_poisson(J, zero).passed
    assert not check_generic_poisson(J, J).passed


def test_algebra_rebuilt_from_circle_and_bracket():
    A = build_Dt(3, Fraction(1, 3), Fraction(1, 5), Fraction(1, 7))
    B = from_circle_and_bracket(symmetrize(A), bracket_algebra(A).table)
    assert B.same_table(A)


def test_supercommutator_of_associative_superalgebra_is_lie():
    assert check_super_jacobi(bracket_algebra(build_Mmn(1, 1))).passed


def test_bracket_of_dt1_is_not_lie():
    # by hand: [x, x] = 0 while [x, [x, y]] = [x, 2e1 - 2t e2] = -2(1 + t) x
    rep = check_super_jacobi(bracket_algebra(build_Dt(2, 1, 0, 0)))
    assert not rep.passed
    assert rep.witness.labels == ("x", "x", "y")
    assert [Fraction(c) for c in rep.witness.residual] == [0, 0, -12, 0]


def test_super_jacobi_fails_for_plain_matrix_product():
    assert not check_super_jacobi(build_Mmn(2, 0)).passed


def test_associative_failure_witness_labels():
    rep = check_associative(build_Dt(2, 1, 0, 0))
    assert not rep.passed and len(rep.witness.labels) == 3


def test_supercommutative_with_odd_signs():
    # odd square-zero element: x * x = 0 is consistent with supercommutativity
    A = SuperAlgebra.from_products((0, 1), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
                                   "F[x]", ("1", "x"))
    assert check_supercommutative(A).passed
    assert check_jordan(A).passed


def test_checks_work_over_prime_fields():
    A = build_Dt(3, 1, 0, 0, GF(5))
    assert check_noncommutative_jordan(A).passed
    assert not check_jordan(A).passed
