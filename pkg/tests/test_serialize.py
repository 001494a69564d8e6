import json

import pytest

from rankhull.codes import Flavor, RankCode, hull, random_code
from rankhull.construct import GabidulinSpec, power_basis, scaled_self_dual_basis
from rankhull.gf import standard_tower
from rankhull.hullvary import vary_hull
from rankhull.oracle import hull_spectrum
from rankhull.serialize import (
    basis_from_json,
    basis_to_json,
    code_from_json,
    code_to_json,
    flavor_from_str,
    gabidulin_spec_from_json,
    gabidulin_spec_to_json,
    hull_report_to_json,
    spectrum_to_json,
    tower_from_json,
    tower_to_json,
    trace_to_json,
)


def test_field_config_shape(f16):
    assert tower_to_json(f16) == {"p": 2, "e": 1, "m": 2, "base_modulus": None, "top_modulus": [1, 1, 0, 0, 1]}
    assert tower_from_json(json.loads(json.dumps(tower_to_json(f16)))) == f16


@pytest.mark.parametrize("q,m", [(2, 2), (3, 1), (4, 1)])
def test_code_roundtrip(q, m):
    T = standard_tower(q, m)
    C = random_code(T, 4, 2, seed=1)
    d = json.loads(json.dumps(code_to_json(C)))
    assert set(d) == {"field", "n", "k", "G"}
    assert code_from_json(d).G == C.G


def test_code_accepts_coefficient_arrays(f9):
    d = {"field": tower_to_json(f9), "n": 2, "k": 1, "G": [[[0, 1], [1, 2]]]}
    C = code_from_json(d)
    assert C.G.tolist() == [[f9.omega, f9.sub(1, f9.omega)]]


def test_code_rejects_mismatched_k(f9):
    with pytest.raises(ValueError):
        code_from_json({"field": tower_to_json(f9), "n": 2, "k": 2, "G": [[1, 0]]})


def test_reports_serialize(f4):
    C = RankCode.from_rows(f4, [[1, f4.omega]])
    d = hull_report_to_json(hull(C))
    assert d["h"] == 1 and d["flavor"] == "hermitian"
    s = spectrum_to_json(hull_spectrum(C))
    assert s["histogram"] == [[1, 6]] and s["attained"] == [1]
    T = standard_tower(3, 1)
    C = random_code(T, 4, 2, seed=0, min_hull=2)
    _, trace = vary_hull(C, 0)
    t = json.loads(json.dumps(trace_to_json(trace)))
    assert [s["h_after"] for s in t["steps"]] == [1, 0]


def test_basis_and_spec_roundtrip(f9):
    b = scaled_self_dual_basis(f9)
    assert basis_from_json(basis_to_json(b), f9) == b
    spec = GabidulinSpec(f9, power_basis(f9), 1, 1)
    assert gabidulin_spec_from_json(gabidulin_spec_to_json(spec), f9) == spec


def test_flavor_from_str():
    assert flavor_from_str("Euclidean") is Flavor.EUCLIDEAN
    with pytest.raises(ValueError):
        flavor_from_str("symplectic")
