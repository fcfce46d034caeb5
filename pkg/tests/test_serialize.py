import json

from helpers import twist_endo

from magnus import alexander as ax
from magnus import serialize as ser
from magnus.cobordism import compile_heegaard, mapping_cylinder_data
from magnus.freegroup import PhiValuation
from magnus.functor import mag_kernel
from magnus.linalg import Matrix
from magnus.ring import LaurentPoly, RingFrac

t = LaurentPoly.gen(0, 1)


def test_matrix_round_trip():
    M = Matrix([[t - 1, RingFrac(t, t + 1)], [0, t.involute() * 3]], 1)
    data = ser.matrix_to_json(M)
    assert ser.matrix_from_json(json.loads(json.dumps(data)), 1) == M


def test_dumps_is_deterministic_and_versioned():
    a = ser.dumps("x", {"b": 1, "a": [1, 2]})
    assert a == ser.dumps("x", {"a": [1, 2], "b": 1})
    doc = json.loads(a)
    assert doc["schema"] == ser.SCHEMA and doc["kind"] == "x"


def test_relation_and_graded_payloads():
    phi = PhiValuation([(0,), (1,)], 1)
    c = compile_heegaard(mapping_cylinder_data(twist_endo(), phi))
    rel = mag_kernel(c)
    js = ser.relation_to_json(rel)
    assert js["dim"] == 2 and js["source"]["genus"] == 1 and js["target"]["phi"] == ["1", "t1"]
    G, _ = ax.alex_morphism(c)
    gj = ser.graded_to_json(G)
    assert [b["degree"] for b in gj["blocks"]] == [0, 1, 2]
    assert gj["blocks"][2]["columns"] == ["a1^b1"]


def test_bad_matrix_json():
    import pytest
    with pytest.raises(ValueError):
        ser.matrix_from_json([[1], [1, 2]], 0)
    with pytest.raises(ValueError):
        ser.matrix_from_json("nope", 0)
