from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncjordan.catalog import build_Dt, build_K3, build_K9, build_K10, build_Vmodule
from ncjordan.constructions import unital_hull
from ncjordan.field import GF
from ncjordan.formats import (FormatError, algebra_from_dict, algebra_to_dict, load,
                              module_from_dict, module_to_dict, resolve, resolve_algebra,
                              resolve_module, save)
from ncjordan.representations import SuperBimodule, opposite_module, regular

params = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def test_algebra_round_trip(tmp_path):
    A = build_Dt(2, 1, 0, 0)
    path = tmp_path / "dt.json"
    save(A, path)
    B = load(path)
    assert B.same_table(A) and B.parity == A.parity and B.basis_names == A.basis_names
    assert B.name == A.name


@settings(max_examples=20, deadline=None)
@given(params, params, params)
def test_round_trip_through_dict(a, b, g):
    A = build_K3(a, b, g)
    B = algebra_from_dict(json.loads(json.dumps(algebra_to_dict(A))))
    assert B.same_table(A)


def test_prime_field_round_trip(tmp_path):
    A = build_K9(GF(3))
    save(A, tmp_path / "k9.json")
    B = load(tmp_path / "k9.json")
    assert B.field == GF(3) and B.same_table(A)


def test_no_floats_in_files(tmp_path):
    save(build_Dt(3, Fraction(1, 3), Fraction(2, 5), 0), tmp_path / "a.json")
    text = (tmp_path / "a.json").read_text()
    assert "1/3" in text

    def walk(x):
        if isinstance(x, float):
            raise AssertionError("float in file")
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
    walk(json.loads(text))


def test_module_round_trip_with_catalog_reference(tmp_path):
    M = build_Vmodule(1, 0, 0, True)
    save(M, tmp_path / "v.json", algebra_ref="Dt(-1,1/2,1/2,0)")
    data = json.loads((tmp_path / "v.json").read_text())
    assert data["algebra"] == "Dt(-1,1/2,1/2,0)"
    N = load(tmp_path / "v.json")
    assert isinstance(N, SuperBimodule) and N.same_actions(M)


def test_module_round_trip_inline_algebra():
    R = opposite_module(regular(build_Dt(2, 1, 0, 0)))
    N = module_from_dict(json.loads(json.dumps(module_to_dict(R))))
    assert N.same_actions(R)


def test_module_catalog_reference_k10():
    K = build_K10()
    data = module_to_dict(regular(K), algebra_ref="K10")
    M = module_from_dict(data)
    assert M.algebra.same_table(K)


def test_grading_violation_reports_indices():
    data = algebra_to_dict(build_Dt(2, 1, 0, 0))
    data["products"].append({"i": 0, "j": 2, "coeffs": {"0": "1"}})
    with pytest.raises(FormatError) as exc:
        algebra_from_dict(data)
    assert "(0, 2, 0)" in str(exc.value)
    assert exc.value.location.startswith("algebra.products[")


def test_bad_scalar_and_index_locations():
    data = algebra_to_dict(build_Dt(2, 1, 0, 0))
    data["products"][0]["coeffs"] = {"0": "1.5"}
    with pytest.raises(FormatError) as exc:
        algebra_from_dict(data)
    assert "products[0]" in exc.value.location
    data = algebra_to_dict(build_Dt(2, 1, 0, 0))
    data["products"][0]["i"] = 9
    with pytest.raises(FormatError):
        algebra_from_dict(data)


def test_float_scalar_rejected():
    data = algebra_to_dict(build_Dt(2, 1, 0, 0))
    data["products"][0]["coeffs"] = {"0": 1.0}
    with pytest.raises(FormatError):
        algebra_from_dict(data)


def test_bad_field_characteristic():
    data = algebra_to_dict(build_Dt(2, 1, 0, 0))
    data["field"] = "p2"
    with pytest.raises(FormatError):
        algebra_from_dict(data)


def test_json_syntax_error_has_line_and_column(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "algebra",\n "dim": 2,,}')
    with pytest.raises(FormatError) as exc:
        load(p)
    assert f"{p}:2:" in str(exc.value)


def test_resolver_catalog_names():
    assert resolve_algebra("Dt(2,1,0,0)").same_table(build_Dt(2, 1, 0, 0))
    assert resolve_algebra("dt(2)").same_table(build_Dt(2, 1, 0, 0))
    assert resolve_algebra("K10").same_table(build_K10())
    assert resolve_algebra("K9@p3").field == GF(3)
    assert resolve_algebra("Hull(K3(1/2,0,0))").same_table(unital_hull(build_K3()))
    M = resolve_module("Op(Reg(Dt(2,1,0,0)))")
    assert M.same_actions(opposite_module(regular(build_Dt(2, 1, 0, 0))))
    assert isinstance(resolve("Vmod(1,0,0)"), SuperBimodule)


def test_resolver_errors():
    for bad in ("Foo(1)", "Dt(1,2", "Dt(a)", "Mut(Dt(2))"):
        with pytest.raises(FormatError):
            resolve(bad)
    with pytest.raises(FormatError):
        resolve_module("Dt(2,1,0,0)")
