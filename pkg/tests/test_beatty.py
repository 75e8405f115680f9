import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeckblocks.beatty import GBS, OccurrenceSet, OverlapError, wythoff_A, wythoff_B
from zeckblocks.fibcore import fib


def floor_n_phi(n: int) -> int:
    """Independent evaluation of floor(n*phi) from two convergents that
    straddle phi; both quotients agree whenever n is far smaller than the
    denominators, which pins the floor."""
    lo = n * fib(88) // fib(87)
    hi = n * fib(87) // fib(86)
    assert lo == hi, f"convergent gap too wide for n={n}"
    return lo


def test_lower_wythoff_prefix():
    assert [wythoff_A(n) for n in range(1, 8)] == [1, 3, 4, 6, 8, 9, 11]


def test_upper_wythoff_prefix():
    assert [wythoff_B(n) for n in range(1, 7)] == [2, 5, 7, 10, 13, 15]


def test_wythoff_A_against_convergent_oracle():
    assert wythoff_A(10**6) == floor_n_phi(10**6)
    for n in range(1, 3000):
        assert wythoff_A(n) == floor_n_phi(n)


@given(st.integers(1, 10**12))
def test_wythoff_A_large(n):
    assert wythoff_A(n) == floor_n_phi(n)


def test_B_is_A_plus_id():
    for n in range(1, 10_001):
        assert wythoff_B(n) == wythoff_A(n) + n


def test_index_starts_at_one():
    with pytest.raises(ValueError):
        wythoff_A(0)


def test_beatty_partition():
    n = 10_000
    a_vals = {wythoff_A(i) for i in range(1, n + 1)}
    b_vals = {wythoff_B(i) for i in range(1, n + 1)}
    assert not a_vals & b_vals
    top = wythoff_A(n)
    assert {v for v in a_vals | b_vals if v <= top} == set(range(1, top + 1))


def test_gbs_eval():
    a = GBS(1, 0, 0)
    for n in (1, 5, 999):
        assert a(n) == wythoff_A(n)
    assert GBS(2, 1, -1)(1) == 2
    # A(3) = 4, so 4 + 3 - 2
    assert GBS(1, 1, -2)(3) == 5


def test_compose_formulas():
    assert GBS(1, 0, 0).compose_A() == GBS(1, 1, -1)
    assert GBS(1, 0, 0).compose_B() == GBS(2, 1, 0)
    for n in range(1, 1001):
        assert GBS(2, 1, 0)(n) == wythoff_A(wythoff_B(n))


@given(st.integers(-10, 10), st.integers(-10, 10), st.integers(-10, 10),
       st.integers(1, 1000))
def test_compose_pointwise(p, q, r, n):
    v = GBS(p, q, r)
    assert v.compose_A()(n) == v(wythoff_A(n))
    assert v.compose_B()(n) == v(wythoff_B(n))


def test_gbs_terms_and_increase():
    v = GBS(3, 2, -5)
    assert v.terms(3) == [0, 8, 13]
    assert v.is_increasing()
    assert not GBS(3, -4, 0).is_increasing()
    assert not GBS(0, 0, 7).is_increasing()


def test_gbs_rendering():
    assert str(GBS(3, 2, -5)) == "3A+2Id-5"
    assert str(GBS(1, 0, -1)) == "A-1"
    assert str(GBS(1, 1, -2)) == "A+Id-2"
    assert str(GBS(0, 1, -1)) == "Id-1"
    assert str(GBS(2, 1, 0)) == "2A+Id"
    assert str(GBS(0, 0, 0)) == "0"
    assert str(GBS(-1, 2, 3)) == "-A+2Id+3"


def test_union_of_worked_example_branches():
    occ = OccurrenceSet((GBS(3, 2, -5), GBS(3, 2, -4), GBS(3, 2, -3)))
    assert occ.terms(9) == [0, 1, 2, 8, 9, 10, 13, 14, 15]
    assert occ.terms_below(14) == [0, 1, 2, 8, 9, 10, 13]


def test_union_single_branch_is_the_plain_stream():
    v = GBS(2, 1, -1)
    occ = OccurrenceSet((v,))
    assert occ.terms(20) == v.terms(20)


def test_union_of_A_and_B_is_all_naturals():
    occ = OccurrenceSet((GBS(1, 0, 0), GBS(1, 1, 0)))
    assert occ.terms(5) == [1, 2, 3, 4, 5]
    assert occ.terms(200) == list(range(1, 201))


def test_union_detects_overlap():
    occ = OccurrenceSet((GBS(1, 0, 0), GBS(1, 0, 0)))
    with pytest.raises(OverlapError):
        occ.terms(3)


def test_union_rejects_non_increasing_branch():
    with pytest.raises(ValueError):
        OccurrenceSet((GBS(3, -4, 0),))
    with pytest.raises(ValueError):
        OccurrenceSet(())
