import pytest
from hypothesis import given
from hypothesis import strategies as st

from codegrees.perm import Permutation, cycle_string, parse_cycle_string

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(range(n)))


def test_identity():
    e = Permutation.identity(4)
    assert e.images == (0, 1, 2, 3)
    assert e.is_identity()
    assert e.order() == 1


def test_composition_applies_right_factor_first():
    p = Permutation((1, 0, 2))   # swap 0,1
    q = Permutation((0, 2, 1))   # swap 1,2
    assert (p * q)(1) == p(q(1)) == p(2) == 2


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 3))


def test_pow_and_order():
    c = Permutation((1, 2, 3, 0))
    assert c.order() == 4
    assert (c ** 4).is_identity()
    assert c ** -1 == c.inverse()


@given(perms)
def test_inverse_roundtrip(images):
    p = Permutation(images)
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)),
                        st.permutations(range(n)))))
def test_associativity(triple):
    a, b, c = (Permutation(t) for t in triple)
    assert (a * b) * c == a * (b * c)


@given(perms)
def test_cycle_notation_roundtrip(images):
    p = Permutation(images)
    assert parse_cycle_string(cycle_string(p), p.degree) == p


def test_parse_cycles():
    p = parse_cycle_string("(1,2)(3,4)", 4)
    assert p.images == (1, 0, 3, 2)
    assert parse_cycle_string("()", 3).is_identity()
    with pytest.raises(ValueError):
        parse_cycle_string("(1,5)", 4)
    with pytest.raises(ValueError):
        parse_cycle_string("(1,1)", 4)
