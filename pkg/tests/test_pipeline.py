import pytest

from bokit.certify.families import BO, X2, X3, X18
from bokit.certify.pipeline import certify_family, exit_code, first_inductive_a, replay_samples


def test_samples():
    assert replay_samples(BO) == [(1093, 1092), (1093, 1093), (2182, 3), (2183, 2)]
    assert replay_samples(X3) == [(15, 1), (15, 2), (15, 14), (15, 15)]


def test_first_inductive():
    assert first_inductive_a(BO) == 1093
    assert first_inductive_a(X2) == 15
    assert first_inductive_a(X2, 30) == 16
    assert first_inductive_a(X18) == 29


def test_bo_certified():
    r = certify_family("bo", amax=3000)
    assert r["certified"] and r["proof_closes"] and exit_code(r) == 0


def test_x3():
    r = certify_family("x3", tail=True)
    ids = {c["id"]: c["status"] for c in r["claims"]}
    assert ids["threshold"] == "confirmed" and ids["P8(3)"] == "confirmed"
    assert ids["early-threshold"] == "discrepancy"
    assert r["proof_closes"]


def test_x2_discrepancy():
    r = certify_family("x2", tail=True)
    assert not r["certified"] and exit_code(r) == 1
    assert r["closure"]["required_N0"] == 30
    assert r["threshold"]["minimal"] == 40


@pytest.mark.slow
def test_x18():
    r = certify_family("x18", amax=200)
    ids = {c["id"]: c["status"] for c in r["claims"]}
    assert ids["threshold"] == "confirmed"
    assert ids["P15(9/5)"] == ids["450(1+ln30)"] == ids["R31-constant"] == "confirmed"
    assert ids["replay(29,1):R31*"] == "discrepancy"
    assert r["proof_closes"]
