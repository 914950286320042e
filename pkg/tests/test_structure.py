import pytest

from codegrees.groups import normal_subgroups, sylow_subgroup, as_group
from codegrees.structure import (
    frobenius_kernel,
    is_cyclic,
    is_elementary_abelian,
    is_generalized_quaternion,
    is_nilpotent,
    is_quaternion8,
    is_solvable,
    two_frobenius,
)

from conftest import get_group


def test_is_cyclic():
    assert is_cyclic(get_group("c6"))
    assert not is_cyclic(get_group("v4"))
    assert not is_cyclic(get_group("s3"))


def test_is_elementary_abelian():
    assert is_elementary_abelian(get_group("v4")) == (True, 2, 2)
    assert is_elementary_abelian(get_group("c9"))[0] is False
    assert is_elementary_abelian(get_group("c1")) == (True, None, 0)
    assert is_elementary_abelian(get_group("s3"))[0] is False


def test_is_quaternion8():
    assert is_quaternion8(get_group("q8"))
    assert not is_quaternion8(get_group("d4"))      # dihedral of order 8: 5 involutions
    assert not is_quaternion8(get_group("c8"))
    assert not is_quaternion8(get_group("q16"))


def test_is_generalized_quaternion():
    assert is_generalized_quaternion(get_group("q8"))
    assert is_generalized_quaternion(get_group("q16"))
    assert not is_generalized_quaternion(get_group("d4"))
    assert not is_generalized_quaternion(get_group("c8"))


def test_is_nilpotent():
    assert is_nilpotent(get_group("c3xq8"))
    assert not is_nilpotent(get_group("s4"))
    assert is_nilpotent(get_group("q16"))           # a 2-group
    assert is_nilpotent(get_group("c6"))


def test_is_solvable():
    assert is_solvable(get_group("s4"))
    assert not is_solvable(get_group("a5"))
    assert not is_solvable(get_group("s5"))
    assert is_solvable(get_group("c6"))
    assert is_solvable(get_group("d15"))


def test_frobenius_kernel_examples():
    w = frobenius_kernel(get_group("a4"))
    assert w is not None
    assert w.kernel.order == 4 and w.complement_order == 3

    assert frobenius_kernel(get_group("s4")) is None
    assert frobenius_kernel(get_group("c6")) is None       # abelian
    assert frobenius_kernel(get_group("q16")) is None      # 2-group

    wd = frobenius_kernel(get_group("d15"))
    assert wd is not None and wd.kernel.order == 15

    wc = frobenius_kernel(get_group("c7c3"))
    assert wc is not None and wc.kernel.order == 7 and wc.complement_order == 3


def test_frobenius_kernel_coprime():
    for key in ("a4", "d5", "d15", "c7c3", "f20", "cpk3"):
        w = frobenius_kernel(get_group(key))
        assert w is not None
        from math import gcd
        assert gcd(w.kernel.order, w.complement_order) == 1
        # every Sylow subgroup lies inside the kernel or meets it trivially
        G = get_group(key)
        from codegrees.groups import prime_factors
        for p in prime_factors(G.order):
            P = sylow_subgroup(G, p)
            inter = len(P.member_set & w.kernel.member_set)
            assert inter == P.order or inter == 1


def test_two_frobenius_examples():
    tw = two_frobenius(get_group("s4"))
    assert tw is not None
    assert (tw.K.order, tw.H.order, tw.p, tw.R_order) == (4, 12, 3, 2)

    assert two_frobenius(get_group("a4")) is None
    assert two_frobenius(get_group("cpk3")) is None


def test_two_frobenius_on_file_groups():
    tw = two_frobenius(get_group("g160"))
    assert tw is not None
    assert (tw.K.order, tw.H.order, tw.p, tw.R_order) == (16, 80, 5, 2)

    tw = two_frobenius(get_group("g320"))
    assert tw is not None
    assert (tw.K.order, tw.H.order, tw.p, tw.R_order) == (16, 80, 5, 4)


@pytest.mark.parametrize("key", ["s3", "s4", "a4", "a5", "d5", "d15", "q8", "q16",
                                 "c6", "cpk3", "c7c3", "f20", "g160", "g320"])
def test_frobenius_and_two_frobenius_exclusive(key):
    G = get_group(key)
    assert not (frobenius_kernel(G) is not None and two_frobenius(G) is not None)


@pytest.mark.parametrize("key", ["s3", "s4", "a4", "q8", "c6", "d15", "c3xq8"])
def test_nilpotent_implies_solvable(key):
    G = get_group(key)
    if is_nilpotent(G):
        assert is_solvable(G)
