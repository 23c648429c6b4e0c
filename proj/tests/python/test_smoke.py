import pytest

import gable

SPHERE = {
    "vertices": ["0", "1", "2", "3"],
    "simplices": [["0", "1", "2"], ["0", "1", "3"], ["0", "2", "3"], ["1", "2", "3"]],
}

SPHERE_CYCLE = {
    "dim": 2,
    "terms": [
        {"coef": 1, "vertices": ["1", "2", "3"]},
        {"coef": -1, "vertices": ["0", "2", "3"]},
        {"coef": 1, "vertices": ["0", "1", "3"]},
        {"coef": -1, "vertices": ["0", "1", "2"]},
    ],
}


def test_commands_listed():
    assert "homology" in gable.commands()
    assert "verify" in gable.commands()


def test_sphere_homology():
    groups = [h["group"]["text"] for h in gable.homology(SPHERE)["homology"]]
    assert groups == ["Z", "0", "Z"]


def test_relative_homology_of_edge():
    edge = {"simplices": [["u", "v"]]}
    result = gable.homology(edge, k=1, sub={"simplices": [["u"], ["v"]]})
    assert result["homology"][0]["group"]["text"] == "Z"


def test_cross_of_edges_has_two_cells():
    a = {"dim": 1, "terms": [{"coef": 1, "vertices": ["a", "b"]}]}
    b = {"dim": 1, "terms": [{"coef": 1, "vertices": ["x", "y"]}]}
    result = gable.cross(a, b)
    assert len(result["cross"]["terms"]) == 2
    assert sorted(t["coef"] for t in result["cross"]["terms"]) == [-1, 1]


def test_roof_boundary_touches_diagonal():
    result = gable.roof(SPHERE_CYCLE)
    assert result["boundary_touches_diagonal"]
    assert result["boundary_terms"] == 36


def test_odd_roof_raises():
    odd = {"dim": 1, "terms": [{"coef": 1, "vertices": ["a", "b"]}]}
    with pytest.raises(gable.GableError) as info:
        gable.roof(odd)
    assert info.value.args[0] == "odd-dimension"


def test_nerve_of_arcs_is_a_circle():
    cover = {
        "sets": {"U1": ["p0", "p1", "p2"], "U2": ["p2", "p3", "p4"], "U3": ["p4", "p5", "p0"]},
        "relative": [],
    }
    groups = [h["group"]["text"] for h in gable.nerve(cover)["homology"]]
    assert groups == ["Z", "Z"]


def test_limit_of_chain():
    system = {
        "poset": {"elements": ["a", "b"], "leq": [["a", "b"]]},
        "groups": {"a": {"gens": 1, "relations": [[2]]}, "b": {"gens": 1, "relations": [[4]]}},
        "maps": {"a<=b": [[1]]},
    }
    assert gable.limit(system)["group"]["text"] == "Z/4"


def test_verify_is_deterministic():
    first = gable.verify("shuffle-parity", seed=5)
    second = gable.verify("shuffle-parity", seed=5, jobs=3)
    assert first["pass"]
    assert first == second
