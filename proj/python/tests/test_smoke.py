import json
from fractions import Fraction

import pytest

import hopoly


def test_root_system_info():
    info = hopoly.root_system_info("G2")
    assert info["rank"] == 2
    assert info["w0_order"] == 12
    assert len(info["positive_roots"]) == 6
    assert info["beta"] == [2, 1]


def test_sl2_next_to_highest():
    for n in range(2, 13):
        assert hopoly.multiplicity("A1", [n - 1], [n - 3]) == 1


def test_character_matches_freudenthal():
    chi = hopoly.character("A2", [1, 1])
    assert chi[(0, 0)] == 2
    assert sum(chi.values()) == 8 == hopoly.weyl_dimension("A2", [1, 1])
    dominant = {w: m for w, m in chi.items() if all(c >= 0 for c in w)}
    assert dominant == hopoly.freudenthal("A2", [1, 1])


def test_epoly_and_heckman_opdam():
    assert hopoly.epoly("A1", [2], k=1) == {(2,): 1, (0,): Fraction(1, 2)}
    assert hopoly.epoly("A1", [2], k=Fraction(7, 3)) == {(2,): 1, (0,): Fraction(7, 10)}
    p = hopoly.heckman_opdam("B2", [1, 1], k=(Fraction(1, 2), 2))
    assert p[(1, 1)] == 1
    assert p == hopoly.heckman_opdam("B2", [1, 1], k=(Fraction(1, 2), 2), threads=3)


def test_reduce_and_subset_sum():
    r = hopoly.reduce("A1", [2])
    assert r["word"] == [0]
    assert r["lambda_bar"] == (0,)
    assert r["d"] == ["1 + k_s"]
    s = hopoly.subset_sum("A1", [2], [0])
    assert s["value"] == 1
    assert s["orbit_ratio"] == 2
    assert s["terms"] == [((1,), Fraction(1, 2))]


def test_positivity():
    rep = hopoly.positivity("A1", [2])
    assert rep["passed"]
    assert rep["c_lambda"] == "1 + k_s"
    assert rep["c_lambda_P"] == {(-2,): "1 + k_s", (0,): "2*k_s", (2,): "1 + k_s"}


def test_verify_is_deterministic():
    a = hopoly.verify("A2", seed=3, cases=3)
    assert a == hopoly.verify("A2", seed=3, cases=3)
    assert all(s["failures"] == 0 for s in a)


def test_errors():
    with pytest.raises(hopoly.ConstructionError):
        hopoly.root_system_info("B1")
    with pytest.raises(hopoly.ParseError):
        hopoly.multiplicity("A2", [1], [0, 0])
    with pytest.raises(hopoly.DomainError):
        hopoly.character("A2", [-1, 0])
    with pytest.raises(hopoly.SingularParameterError):
        hopoly.epoly("A1", [2], k=-1)
    with pytest.raises(hopoly.ResourceError):
        hopoly.character("E8", [1, 0, 0, 0, 0, 0, 0, 0])
    assert issubclass(hopoly.ParseError, hopoly.HopolyError)


def test_cli_entry_point():
    code, out, err = hopoly.run_cli(["reduce", "--type", "A1", "--highest", "2", "--format", "json"])
    assert code == 0 and err == ""
    assert json.loads(out)["result"]["c"] == ["k_s/(1 + k_s)"]
    code, out, err = hopoly.run_cli(["character", "--type", "B1", "--highest", "1", "--format", "json"])
    assert code == 1
    assert json.loads(err)["exit_code"] == 1
