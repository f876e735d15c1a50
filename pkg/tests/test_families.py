from fractions import Fraction

import pytest

from bokit.certify.families import BO, X2, X3, X18, derived_constant, get_family, r3_weight, r31_constant_x18


def test_constants():
    assert (BO.A, BO.B, BO.N0, BO.final_constant, BO.m, BO.x) == (2, 10, 2184, 48, 5, 1)
    assert (X3.A, X3.N0, X3.final_constant, X3.m, X3.x) == (1, 14, 2, 6, 3)
    assert (X2.A, X2.B, X2.N0, X2.final_constant, X2.m, X2.x) == (1, 5, 28, 3, 5, 2)
    assert (X18.B, X18.N0, X18.final_constant, X18.m, X18.x) == (5, 28, Fraction(19, 5), 9, Fraction(9, 5))


@pytest.mark.parametrize("fam", [BO, X3, X2, X18])
def test_derived_constant_matches(fam):
    assert derived_constant(fam) == fam.final_constant


def test_bo_constant_decomposition():
    assert r3_weight(BO) == Fraction(1 + 45, 2)
    assert 2 * (1 + Fraction(1 + 45, 2)) == 48


def test_r31_x18_exact():
    assert r31_constant_x18() == Fraction(978, 625) == Fraction("1.5648")
    assert r3_weight(X18) == Fraction(9, 10)


def test_values_types():
    assert all(isinstance(v, int) for v in BO.values(20))
    assert all(isinstance(v, Fraction) for v in X18.values(5))
    assert X3.values(8)[8] == 810


def test_lookup():
    assert get_family("BO") is BO and get_family("x18") is X18
    with pytest.raises(KeyError):
        get_family("x5")
