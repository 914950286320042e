from hypothesis import given
from hypothesis import strategies as st

from codegrees.cyclotomic import CyclotomicInt, cyclotomic_polynomial, euler_phi

conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12])


def elements(e):
    return st.lists(
        st.tuples(st.integers(min_value=0, max_value=e - 1),
                  st.integers(min_value=-5, max_value=5)),
        max_size=4,
    ).map(lambda pairs: CyclotomicInt.from_exponents(e, dict(pairs)))


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1


def test_sum_of_all_roots_vanishes():
    for e in (2, 3, 4, 6, 8, 12, 15):
        total = CyclotomicInt.from_exponents(e, {k: 1 for k in range(e)})
        assert total.is_zero()
        assert total == 0


def test_root_powers():
    i = CyclotomicInt.zeta(4)
    assert i * i == -1
    z = CyclotomicInt.zeta(6)
    assert z * z * z == -1
    for e in (3, 5, 8, 12):
        z = CyclotomicInt.zeta(e)
        acc = CyclotomicInt.integer(e, 1)
        for _ in range(e):
            acc = acc * z
        assert acc == 1


def test_integer_detection():
    z = CyclotomicInt.zeta(5)
    s = z + z * z + z * z * z + CyclotomicInt.from_exponents(5, {4: 1})
    assert s.as_int() == -1           # sum of non-trivial 5th roots
    assert CyclotomicInt.zeta(8).as_int() is None
    assert CyclotomicInt.integer(8, 7).as_int() == 7


def test_conjugation():
    for e in (3, 4, 5, 8, 12):
        z = CyclotomicInt.zeta(e)
        assert z.conj() * z == 1
        assert z.conj().conj() == z


def test_conductor_raising():
    m1 = CyclotomicInt.zeta(2)       # -1
    assert m1.raise_conductor(6) == CyclotomicInt.integer(6, -1)
    z3 = CyclotomicInt.zeta(3)
    z6 = CyclotomicInt.zeta(6)
    assert z3.raise_conductor(6) == z6 * z6


def test_str_and_repr_are_stable():
    v = CyclotomicInt.from_exponents(12, {0: 2, 1: 1, 5: -3})
    assert "z12" in str(v)
    assert eval(repr(v), {"CyclotomicInt": CyclotomicInt}) == v


@given(conductors.flatmap(lambda e: st.tuples(elements(e), elements(e), elements(e))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a * 1 == a
    assert a * 0 == 0


@given(conductors.flatmap(lambda e: st.tuples(elements(e), elements(e))))
def test_conjugation_is_ring_automorphism(pair):
    a, b = pair
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()


@given(conductors.flatmap(lambda e: elements(e)))
def test_norm_is_nonnegative(a):
    n = (a * a.conj())
    # a * conj(a) is totally nonnegative; at least its rational part is
    if n.as_int() is not None:
        assert n.as_int() >= 0
