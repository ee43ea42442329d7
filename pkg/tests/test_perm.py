import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from derivant import (DegreeMismatchError, ParseError, Permutation, commutator, compose, format_cycles,
                      identity, inverse, parse_cycles)
from derivant.perm import MAX_DEGREE, conjugate, cycle_lengths, power


@st.composite
def perms(draw, max_n=9, n=None):
    n = n or draw(st.integers(1, max_n))
    images = draw(st.permutations(list(range(n))))
    return Permutation.from_array(images)


@st.composite
def perm_pairs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return draw(perms(n=n)), draw(perms(n=n))


def _t(p):
    return tuple(int(x) for x in p.array)


def test_compose_involution_squared():
    t = parse_cycles("(1 2)", 4)
    assert compose(t, t) == identity(4)


def test_compose_identity_law():
    p = parse_cycles("(1 3 2)(4 5)", 6)
    assert compose(identity(6), p) == p
    assert compose(p, identity(6)) == p


def test_compose_is_left_to_right():
    # (i)(pq) = ((i)p)q
    p = parse_cycles("(1 2 3 4)", 4)
    q = parse_cycles("(1 3)", 4)
    pq = compose(p, q)
    for i in range(1, 5):
        assert pq(i) == q(p(i))
    assert format_cycles(pq) == "(1 2)(3 4)"


def test_compose_exhaustive_degree4_against_table():
    # every pair in S4 against the tuple oracle
    elems = [Permutation.from_array(a) for a in itertools.permutations(range(4))]
    for p in elems:
        for q in elems:
            assert _t(compose(p, q)) == oracles.mul(_t(p), _t(q))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))
    with pytest.raises(DegreeMismatchError):
        commutator(identity(3), identity(4))


def test_commutator_in_d8():
    r = parse_cycles("(1 2 3 4)", 4)
    s = parse_cycles("(1 3)", 4)
    c = commutator(r, s)
    assert c == parse_cycles("(1 3)(2 4)", 4)
    assert c == r ** 2
    assert _t(c) == oracles.comm(_t(r), _t(s))


def test_commutator_trivial_cases():
    x = parse_cycles("(1 2 3)(4 5)", 5)
    assert commutator(x, identity(5)).is_identity()
    y = parse_cycles("(1 3 2)", 5)  # a power of the 3-cycle part, commutes with x
    assert commutator(x, y).is_identity()


@given(perm_pairs())
def test_commutator_matches_definition(pq):
    x, y = pq
    assert commutator(x, y) == inverse(x) * inverse(y) * x * y
    assert _t(commutator(x, y)) == oracles.comm(_t(x), _t(y))


@given(perms())
def test_inverse_laws(p):
    n = p.degree
    assert compose(p, inverse(p)) == identity(n)
    assert inverse(inverse(p)) == p


@given(perms())
def test_cycle_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p


@given(perms(), st.integers(-7, 7))
def test_power_agrees_with_repeated_product(p, k):
    q = identity(p.degree)
    base = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        q = q * base
    assert power(p, k) == q


@given(perm_pairs())
def test_conjugate_is_y_inverse_x_y(pq):
    x, y = pq
    assert conjugate(x, y) == inverse(y) * x * y


def test_parse_examples():
    assert parse_cycles("(1 2 3)", 4).images == (2, 3, 1, 4)
    assert parse_cycles("()", 5) == identity(5)
    assert parse_cycles("(1,2)(3,4)", 4) == parse_cycles("(1 2)(3 4)", 4)


@pytest.mark.parametrize("text, fragment", [
    ("(1 2)(2 3)", "repeated point"),
    ("(1 2", "malformed"),
    ("(1 x)", "malformed point"),
    ("(1 9)", "outside"),
    ("", "empty"),
    ("1 2", "malformed"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_cycles(text, 4)


def test_parse_error_reports_column():
    with pytest.raises(ParseError) as info:
        parse_cycles("(1 2) (2 3)", 4)
    assert info.value.column == 8


def test_degree_cap():
    assert MAX_DEGREE == 2**16 - 1
    with pytest.raises(ValueError):
        identity(MAX_DEGREE + 1)
    with pytest.raises(ValueError):
        identity(0)


def test_images_are_one_based_and_order():
    p = Permutation([2, 3, 1, 5, 4])
    assert p(1) == 2 and p(3) == 1
    assert p.order() == 6
    assert sorted(cycle_lengths(p)) == [2, 3]
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
