import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goodstein.errors import DigitOutOfRange, DomainError, InvalidBase, Underflow
from goodstein.numerals import (
    Ordering,
    decrement_in_base,
    from_digits,
    lex_compare,
    power_predecessor,
    render,
    to_digits,
)


def digits_by_divmod(value, base):
    """Independent digit oracle: collect remainders, least significant first."""
    out = []
    while value:
        value, r = divmod(value, base)
        out.append(r)
    return tuple(reversed(out))


# --- to_digits ---------------------------------------------------------------

def test_to_digits_25_base_2():
    assert to_digits(25, 2) == (1, 1, 0, 0, 1)


def test_to_digits_zero_is_empty():
    assert to_digits(0, 7) == ()


def test_to_digits_large_base_3_value():
    # 2*3**18 + 3**2 + 1; frozen from the divmod oracle
    expected = (2,) + (0,) * 15 + (1, 0, 1)
    assert 2 * 3**18 + 3**2 + 1 == 774840988
    assert digits_by_divmod(774840988, 3) == expected
    assert to_digits(774840988, 3) == expected


@pytest.mark.parametrize("base", [1, 0, -3])
def test_to_digits_rejects_bad_base(base):
    with pytest.raises(InvalidBase):
        to_digits(5, base)


def test_to_digits_rejects_negative_value():
    with pytest.raises(DomainError):
        to_digits(-1, 2)


# --- from_digits --------------------------------------------------------------

@pytest.mark.parametrize(
    "digits, base, expected",
    [
        ((1, 1, 0, 0, 1), 2, 25),
        ((1, 1, 0, 0, 1), 3, 109),
        ((), 5, 0),
    ],
)
def test_from_digits(digits, base, expected):
    assert from_digits(digits, base) == expected


def test_from_digits_rejects_digit_out_of_range():
    with pytest.raises(DigitOutOfRange) as excinfo:
        from_digits((1, 3, 0), 3)
    assert excinfo.value.index == 1
    assert excinfo.value.digit == 3


def test_from_digits_rejects_negative_digit():
    with pytest.raises(DigitOutOfRange):
        from_digits((1, -1), 10)


def test_round_trip_exhaustive_small():
    for base in range(2, 17):
        for value in range(10_000):
            digits = to_digits(value, base)
            assert from_digits(digits, base) == value
            assert all(0 <= d < base for d in digits)
            if value > 0:
                assert digits[0] != 0


@given(value=st.integers(0, 10**60), base=st.integers(2, 1000))
def test_round_trip_hypothesis(value, base):
    digits = to_digits(value, base)
    assert digits == digits_by_divmod(value, base)
    assert from_digits(digits, base) == value


# --- decrement_in_base ---------------------------------------------------------

def test_decrement_borrow_base_2():
    assert decrement_in_base((1, 1, 0, 0, 0), 2) == (1, 0, 1, 1, 1)


def test_decrement_borrow_base_3():
    assert decrement_in_base((1, 1, 0, 0, 0), 3) == (1, 0, 2, 2, 2)


@pytest.mark.parametrize("base", range(2, 8))
def test_decrement_one_gives_empty(base):
    assert decrement_in_base((1,), base) == ()


def test_decrement_of_empty_underflows():
    with pytest.raises(Underflow):
        decrement_in_base((), 2)


def test_decrement_of_zero_valued_sequence_underflows():
    with pytest.raises(Underflow):
        decrement_in_base((0, 0), 2)


def test_decrement_matches_value_oracle_exhaustive():
    for base in range(2, 11):
        for value in range(1, 10_000):
            digits = to_digits(value, base)
            decremented = decrement_in_base(digits, base)
            assert decremented == to_digits(value - 1, base)
            assert len(decremented) <= len(digits)


@given(value=st.integers(1, 10**40), base=st.integers(2, 100))
def test_decrement_matches_value_oracle_hypothesis(value, base):
    digits = to_digits(value, base)
    assert decrement_in_base(digits, base) == to_digits(value - 1, base)


def test_decrement_strips_leading_zeros_from_noncanonical_input():
    # (0, 0, 5) spells 5; the result must spell 4 canonically
    assert decrement_in_base((0, 0, 5), 10) == (4,)


# --- lex_compare ----------------------------------------------------------------

@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((2, 2, 2), (1, 0, 0, 0), Ordering.LESS),
        ((1, 0, 2, 2, 2), (1, 1, 0, 0, 0), Ordering.LESS),
        ((5,), (5,), Ordering.EQUAL),
        ((1, 0, 0, 0), (2, 2, 2), Ordering.GREATER),
        ((), (1,), Ordering.LESS),
    ],
)
def test_lex_compare_cases(a, b, expected):
    assert lex_compare(a, b) is expected


def _all_sequences(max_digit, max_len):
    """Every leading-nonzero sequence with digits <= max_digit, length <= max_len."""
    seqs = [()]
    frontier = [(d,) for d in range(1, max_digit + 1)]
    for _ in range(max_len):
        seqs.extend(frontier)
        frontier = [s + (d,) for s in frontier for d in range(max_digit + 1)]
    return seqs


def test_lex_compare_is_total_order_exhaustive():
    seqs = _all_sequences(max_digit=3, max_len=4)
    n = len(seqs)
    assert n == 256
    cmp = [[lex_compare(a, b).value for b in seqs] for a in seqs]
    # every sequence here is distinct, so EQUAL appears on the diagonal only
    for i in range(n):
        for j in range(n):
            assert cmp[i][j] == -cmp[j][i]
            assert (cmp[i][j] == 0) == (i == j)
    # transitivity over all triples: whenever i < j, everything j is below,
    # i is below too; the bitmask subset test covers every k at once
    less_mask = [0] * n
    for i in range(n):
        for k in range(n):
            if cmp[i][k] < 0:
                less_mask[i] |= 1 << k
    for i in range(n):
        for j in range(n):
            if cmp[i][j] < 0:
                assert less_mask[j] & ~less_mask[i] == 0


@given(
    a=st.lists(st.integers(0, 6), max_size=6).map(tuple),
    b=st.lists(st.integers(0, 6), max_size=6).map(tuple),
)
def test_lex_compare_matches_length_first_key(a, b):
    key_a, key_b = (len(a), a), (len(b), b)
    expected = Ordering.LESS if key_a < key_b else Ordering.GREATER if key_a > key_b else Ordering.EQUAL
    assert lex_compare(a, b) is expected


# --- base independence ------------------------------------------------------------

def test_digit_sequences_carry_no_base():
    from_base_2 = to_digits(25, 2)
    from_base_3 = to_digits(109, 3)
    assert from_base_2 == from_base_3
    assert lex_compare(from_base_2, from_base_3) is Ordering.EQUAL
    assert not hasattr(from_base_2, "base")


# --- render ------------------------------------------------------------------------

@pytest.mark.parametrize(
    "digits, base, expected",
    [
        ((2, 0, 11), 12, "20(11)_12"),
        ((), 9, "0_9"),
        ((1, 23, 23), 24, "1(23)(23)_24"),
        ((1, 0, 0, 0), 2, "1000_2"),
    ],
)
def test_render(digits, base, expected):
    numeral = render(digits, base)
    assert numeral.text == expected
    assert numeral.base == base


# --- power_predecessor ----------------------------------------------------------------

@pytest.mark.parametrize("x, n, expected", [(2, 3, 7), (3, 3, 26), (1, 5, 0)])
def test_power_predecessor_cases(x, n, expected):
    assert power_predecessor(x, n) == expected


def test_power_predecessor_identity_exhaustive():
    for x in range(1, 11):
        for n in range(1, 13):
            assert power_predecessor(x, n) == x**n - 1


@given(x=st.integers(1, 50), n=st.integers(1, 40))
def test_power_predecessor_identity_hypothesis(x, n):
    assert power_predecessor(x, n) == x**n - 1


@pytest.mark.parametrize("x, n", [(0, 3), (2, 0), (0, 0)])
def test_power_predecessor_domain(x, n):
    with pytest.raises(DomainError):
        power_predecessor(x, n)
