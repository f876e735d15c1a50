from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bokit.exactnum import (
    DomainError,
    RationalInterval,
    Sign,
    UndecidedSign,
    as_fraction,
    enclose,
    ln,
    ln_enclosure,
    sign_of,
)

positive = st.fractions(min_value=Fraction(1, 10**6), max_value=10**9).filter(lambda q: q > 0)


def mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


class TestInterval:
    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            RationalInterval(1, 0)

    def test_arithmetic(self):
        a = RationalInterval(1, 2)
        b = RationalInterval(-3, 1)
        assert a + b == RationalInterval(-2, 3)
        assert a - b == RationalInterval(0, 5)
        assert a * b == RationalInterval(-6, 2)
        assert -a == RationalInterval(-2, -1)
        assert a * -2 == RationalInterval(-4, -2)
        assert 1 - a == RationalInterval(-1, 0)

    def test_sign(self):
        assert RationalInterval(1, 2).sign() == 1
        assert RationalInterval(-2, -1).sign() == -1
        assert RationalInterval.point(0).sign() == 0
        assert RationalInterval(-1, 1).sign() is None

    def test_contains_and_width(self):
        iv = RationalInterval(Fraction(1, 3), Fraction(1, 2))
        assert Fraction(2, 5) in iv
        assert iv.width == Fraction(1, 6)
        assert iv.midpoint == Fraction(5, 12)

    @given(st.fractions(-100, 100), st.fractions(-100, 100), st.fractions(-100, 100), st.fractions(-100, 100))
    def test_mul_encloses_products(self, a, b, c, d):
        x = RationalInterval(min(a, b), max(a, b))
        y = RationalInterval(min(c, d), max(c, d))
        z = x * y
        for u in (x.lo, x.hi, x.midpoint):
            for v in (y.lo, y.hi, y.midpoint):
                assert u * v in z


class TestLn:
    def test_one_is_exact_zero(self):
        assert ln_enclosure(1, 64) == RationalInterval.point(0)

    def test_domain(self):
        with pytest.raises(DomainError):
            ln(0)
        with pytest.raises(DomainError):
            ln_enclosure(Fraction(-1, 2), 32)

    def test_not_float(self):
        with pytest.raises(TypeError):
            as_fraction(0.5)

    @pytest.mark.parametrize("bits", [32, 128, 1000])
    def test_ln2_against_mpmath(self, bits):
        iv = ln_enclosure(2, bits)
        assert iv.width <= Fraction(1, 2**bits)
        with mpmath.workdps(bits // 3 + 40):
            v = mpmath.log(2)
            assert mp(iv.lo) <= v <= mp(iv.hi)

    @given(positive, st.sampled_from([24, 64, 200]))
    def test_encloses_mpmath(self, q, bits):
        iv = ln_enclosure(q, bits)
        assert iv.width <= Fraction(1, 2**bits)
        with mpmath.workdps(bits // 3 + 60):
            v = mpmath.log(mp(q))
            assert mp(iv.lo) <= v <= mp(iv.hi)

    @given(positive, positive)
    def test_monotone(self, p, q):
        if p < q:
            assert ln_enclosure(p, 40).lo <= ln_enclosure(q, 40).hi

    @given(positive)
    def test_nested_refinement(self, q):
        lo, hi = ln_enclosure(q, 32), ln_enclosure(q, 96)
        assert lo.lo <= hi.hi and hi.lo <= lo.hi  # overlapping enclosures of one value


class TestSign:
    def test_rational(self):
        assert sign_of(Fraction(-1, 3)) == Sign.NEGATIVE
        assert sign_of(0) == Sign.ZERO
        assert sign_of(5) == Sign.POSITIVE

    def test_close_comparison_refines(self):
        # ln 2 vs 0.6931471805599453 (double nearest) differ at ~1e-17
        e = ln(2) - Fraction("0.6931471805599453")
        assert sign_of(e) == Sign.POSITIVE

    def test_undecided_zero(self):
        with pytest.raises(UndecidedSign):
            sign_of(ln(2) - ln(2), max_bits=128)

    def test_ln_identity_sign(self):
        # 2 ln 3 = ln 9 exactly: refinement cannot settle it
        with pytest.raises(UndecidedSign):
            sign_of(2 * ln(3) - ln(9), max_bits=64)

    @given(positive, positive)
    def test_consistent_with_order(self, p, q):
        if p != q:
            expected = Sign.POSITIVE if p > q else Sign.NEGATIVE
            assert sign_of(ln(p) - ln(q)) == expected

    def test_enclose_helper(self):
        iv = enclose(1 + ln(20), 40)
        with mpmath.workdps(40):
            assert mp(iv.lo) <= 1 + mpmath.log(20) <= mp(iv.hi)

    def test_logarithm_comparisons(self):
        assert sign_of(800 - 200 * (1 + ln(20))) == Sign.POSITIVE
        assert sign_of(2000 - 450 * (1 + ln(30))) == Sign.POSITIVE
