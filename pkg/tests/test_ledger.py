import random
from fractions import Fraction

import pytest

from bokit.certify.families import BO, X2, X3, X18
from bokit.certify.ledger import CertificateFailure, k0, replay_step
from bokit.exactnum import DomainError


def test_k0_examples():
    assert k0(BO, 20, 2) == 13
    assert k0(BO, 20, 9) == 19
    with pytest.raises(DomainError):
        k0(BO, 5, 1)
    with pytest.raises(DomainError):
        k0(BO, 3, 4)


def test_bo_spec_example():
    led = replay_step(BO, 1200, 1000)
    assert led.passed and led.final_sign == 1


def test_bo_threshold_step():
    led = replay_step(BO, 1093, 1093)
    assert led.final_sign == 1
    assert led.term("identity").verdict


@pytest.mark.parametrize("seed", [0, 1])
def test_identity_exact(seed):
    rng = random.Random(seed)
    V = BO.values(3000)
    for _ in range(3):
        n = rng.randint(2185, 3000)
        b = rng.randint(2, n // 2)
        led = replay_step(BO, n - b, b, values=V)
        assert led.term("identity").enclosure.is_point()


def test_x2_chain_breaks():
    with pytest.raises(CertificateFailure) as e:
        replay_step(X2, 15, 14)
    names = {t.name for t in e.value.ledger.failed()}
    assert "bracket" in names


def test_x2_passes_late():
    assert replay_step(X2, 40, 1).passed
    assert replay_step(X2, 45, 40).passed


def test_x18_spec_example():
    led = replay_step(X18, 16, 1)
    assert led.term("R31").verdict
    assert not led.inductive  # inside the 28 x 28 base square


def test_x18_stated_intermediate_fails_but_chain_holds():
    led = replay_step(X18, 29, 1, raise_on_failure=False)
    assert led.passed
    assert [t.name for t in led.discrepancies()] == ["R31*"]
    assert led.term("R31**").verdict


def test_x3_steps():
    for a, b in [(15, 1), (15, 15), (30, 7)]:
        led = replay_step(X3, a, b)
        assert led.term("R3").verdict and led.term("R33").verdict


def test_r2_strictness_recorded():
    led = replay_step(X2, 45, 10)
    assert led.term("R2").strict in (True, False)
    assert led.term("R2").relation == ">="


def test_ledger_dict():
    d = replay_step(BO, 2183, 2).as_dict()
    assert d["passed"] and d["k0"] == 2183 - 8 + 1
    assert all(isinstance(t["value"], str) for t in d["terms"])
