from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeckblocks.fibcore import PHI, GoldenNumber, fib, golden_cmp, phi_pow

golden_numbers = st.builds(GoldenNumber, st.integers(-50, 50), st.integers(-50, 50))


def test_fib_base_cases():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(2) == 1
    assert fib(10) == 55


def test_fib_recurrence():
    for n in range(2, 400):
        assert fib(n) == fib(n - 1) + fib(n - 2)


def test_fib_is_arbitrary_precision():
    assert fib(93) > 2**63
    assert fib(1000).bit_length() > 690


def test_fib_rejects_negative_index():
    with pytest.raises(ValueError):
        fib(-1)


def test_fibonacci_product_identity():
    # F(m)F(n) + F(m+1)F(n+1) = F(m+n+1)
    for m in range(1, 61):
        for n in range(1, 61):
            assert fib(m) * fib(n) + fib(m + 1) * fib(n + 1) == fib(m + n + 1)


def test_phi_pow_coefficients():
    assert phi_pow(0) == GoldenNumber(1, 0)
    for m in range(1, 201):
        assert phi_pow(m) == GoldenNumber(fib(m - 1), fib(m))


def test_phi_pow_examples():
    assert phi_pow(1) == GoldenNumber(0, 1)
    assert phi_pow(3) == GoldenNumber(1, 2)
    inv = phi_pow(-1)
    assert inv == GoldenNumber(-1, 1)
    assert inv * PHI == GoldenNumber(1, 0)


def test_phi_pow_inverse_law():
    one = GoldenNumber(1, 0)
    for m in range(-50, 51):
        assert phi_pow(m) * phi_pow(-m) == one


def test_phi_defining_relation():
    assert PHI * PHI == GoldenNumber(1, 1)


@given(golden_numbers, golden_numbers, golden_numbers)
def test_ring_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + GoldenNumber(0, 0) == x
    assert x * GoldenNumber(1, 0) == x
    assert x - x == GoldenNumber(0, 0)


@given(golden_numbers, st.integers(-20, 20))
def test_integer_scalars(x, k):
    assert x * k == x * GoldenNumber(k, 0)
    assert k * x == x * k
    assert x + k == x + GoldenNumber(k, 0)


def test_golden_cmp_examples():
    assert golden_cmp(PHI, Fraction(8, 5)) == 1
    assert golden_cmp(PHI, Fraction(13, 8)) == -1
    assert golden_cmp(GoldenNumber(2, 0), 2) == 0
    assert golden_cmp(GoldenNumber(-1, 1), Fraction(61803, 100000)) == 1
    assert golden_cmp(GoldenNumber(-1, 1), Fraction(61804, 100000)) == -1
    assert golden_cmp(GoldenNumber(0, -1), -2) == 1


# phi lies strictly between these convergents, so they bound a + b*phi from
# both sides; golden_cmp must agree whenever the rational is outside the gap.
_BELOW = Fraction(fib(88), fib(87))
_ABOVE = Fraction(fib(87), fib(86))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.fractions(min_value=-10**7, max_value=10**7))
def test_golden_cmp_against_convergent_bounds(a, b, q):
    x = GoldenNumber(a, b)
    lo, hi = sorted((a + b * _BELOW, a + b * _ABOVE))
    if q < lo:
        assert golden_cmp(x, q) == 1
    elif q > hi:
        assert golden_cmp(x, q) == -1


def test_ordering_operators():
    assert phi_pow(-1) < phi_pow(0) < phi_pow(1) < phi_pow(2)
    assert PHI > 1
    assert PHI < 2
    assert GoldenNumber(0, 3) >= GoldenNumber(1, 2)  # 3phi vs 1 + 2phi
    values = [phi_pow(m) for m in range(-6, 7)]
    assert sorted(values) == values


def test_str_rendering():
    assert str(GoldenNumber(15, -9)) == "15 - 9*phi"
    assert str(GoldenNumber(0, 1)) == "phi"
    assert str(GoldenNumber(-1, 1)) == "-1 + phi"
    assert str(GoldenNumber(7, 0)) == "7"
    assert str(GoldenNumber(0, -1)) == "-phi"


def test_float_is_display_only_but_sane():
    assert abs(float(PHI) - 1.618033988749895) < 1e-12
