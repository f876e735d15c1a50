from fractions import Fraction

import pytest

from bokit.certify.families import BO, X2, X3, X18
from bokit.certify.sweeps import base_case_sweep, exceptional_root, theorem_sweep
from bokit.exactnum import DomainError


def test_base_bo():
    r = base_case_sweep(BO)
    assert r.passed and r.exceptions == []
    assert r.checked == sum(n - 3 for n in range(10, 2185))


def test_base_x2_table2():
    r = base_case_sweep(X2)
    assert r.passed and r.details["table2_match"]


def test_base_x3_boundary_root():
    r = base_case_sweep(X3)
    assert r.passed and r.details["zero_at_x"] == [(1, 1)]


def test_base_x18_only_small_pairs():
    r = base_case_sweep(X18, workers=2)
    assert r.passed
    assert all(a + b <= 4 for a, b in r.exceptions)


def test_t11():
    r = theorem_sweep("t1.1", nmax=9)
    assert not r.matches
    assert [2, 2] in r.notes["below_scope_failures"]
    r = theorem_sweep("t1.1", nmax=60)
    assert r.matches and r.notes["symmetric"]


def test_t12():
    r = theorem_sweep("t1.2", kmax=5, nmax=100)
    assert r.exceptions == sorted([(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 3, 2), (3, 1, 2), (1, 1, 3)])
    assert r.matches


def test_t13_and_t16():
    assert theorem_sweep("t1.3", xs=[2, Fraction(5, 2)], nmax=40).matches
    assert theorem_sweep("t1.6", xs=[Fraction(181, 100), 2], nmax=40).matches
    with pytest.raises(DomainError):
        theorem_sweep("t1.6", xs=[Fraction(9, 5)])
    with pytest.raises(DomainError):
        theorem_sweep("t1.3", xs=[1])


def test_t13_x2_small_failures_excluded():
    # at x = 2, P_1 P_1 = P_2 - 1 fails; the statement needs a+b > 4
    r = theorem_sweep("t1.3", xs=[2], nmax=20)
    assert r.exceptions == []


def test_c14():
    r = theorem_sweep("c1.4", kmax=5, nmax=100)
    assert r.exceptions == [(2, 6, 4)] and r.matches


def test_c15():
    r = theorem_sweep("c1.5", xs=[2], amax=50)
    assert r.matches and r.exceptions == [(6, 4, Fraction(2))]
    assert r.notes["b0_failures"]
    hi = theorem_sweep("c1.5", xs=[Fraction(21, 10), 3], amax=30)
    assert hi.exceptions == [] and hi.matches


def test_x64():
    r = exceptional_root()
    assert r.width <= Fraction(1, 10**4)
    assert 2 < r.lo < r.hi < Fraction(21, 10)


def test_unknown():
    with pytest.raises(DomainError):
        theorem_sweep("t9.9")
