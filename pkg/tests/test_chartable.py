import numpy as np
import pytest

from codegrees.chartable import (
    character_kernel,
    character_table,
    check_column_orthogonality,
    check_degree_squares,
    check_row_orthogonality,
    inertia_group,
    restriction_inner_product,
)
from codegrees.cyclotomic import CyclotomicInt
from codegrees.groups import (
    as_group,
    derived_subgroup,
    is_normal,
    normal_subgroups,
)
from codegrees.structure import frobenius_kernel, is_cyclic

from conftest import get_group
from oracles import enumerate_rational_table, float_character_table

_tables = {}


def table(key):
    if key not in _tables:
        _tables[key] = character_table(get_group(key))
    return _tables[key]


def as_int_rows(T):
    rows = set()
    for i in range(T.num_rows):
        vals = tuple(v.as_int() for v in T.values[i])
        if any(v is None for v in vals):
            return None
        rows.add(vals)
    return rows


# -- spec examples ---------------------------------------------------------

def test_s3_against_enumeration_oracle():
    T = table("s3")
    assert sorted(T.degrees) == [1, 1, 2]
    G = get_group("s3")
    expected = enumerate_rational_table(G.order, [c.size for c in G.classes])
    assert as_int_rows(T) == expected


def test_q8_against_enumeration_oracle():
    T = table("q8")
    assert sorted(T.degrees) == [1, 1, 1, 1, 2]
    G = get_group("q8")
    expected = enumerate_rational_table(G.order, [c.size for c in G.classes])
    assert as_int_rows(T) == expected


def test_s4_against_enumeration_oracle():
    T = table("s4")
    assert sorted(T.degrees) == [1, 1, 2, 3, 3]
    G = get_group("s4")
    expected = enumerate_rational_table(G.order, [c.size for c in G.classes])
    assert as_int_rows(T) == expected


def test_cyclic_table_is_roots_of_unity():
    T = table("c6")
    G = get_group("c6")
    assert T.num_rows == 6
    assert all(d == 1 for d in T.degrees)
    z = CyclotomicInt.zeta(6)
    gen_class = next(j for j, c in enumerate(G.classes) if c.rep_order == 6)
    vals = {T.values[i][gen_class] for i in range(6)}
    expected = set()
    acc = CyclotomicInt.integer(6, 1)
    for _ in range(6):
        expected.add(acc)
        acc = acc * z
    assert vals == expected


# -- float-oracle cross checks ---------------------------------------------

@pytest.mark.parametrize("key", ["d5", "a5", "s5", "q16", "cpk3", "c7c3"])
def test_degrees_match_float_oracle(key):
    T = table(key)
    degs, values = float_character_table(get_group(key))
    assert sorted(T.degrees) == degs
    # every exact row appears among the float rows
    G = get_group(key)
    e = T.exponent
    import numpy as np
    zs = np.exp(2j * np.pi * np.arange(e) / e)
    exact = np.array([[complex(sum(int(c) * zs[m] for m, c in enumerate(T.coeff_tensor[i, j])))
                       for j in range(T.num_rows)] for i in range(T.num_rows)])
    unmatched = list(range(values.shape[0]))
    for i in range(exact.shape[0]):
        hit = next(t for t in unmatched
                   if np.max(np.abs(values[t] - exact[i])) < 1e-6)
        unmatched.remove(hit)
    assert not unmatched


# -- invariants -------------------------------------------------------------

@pytest.mark.parametrize("key", ["s3", "s4", "s5", "a4", "a5", "q8", "q16",
                                 "d5", "d15", "c6", "cpk3", "c7c3", "f20",
                                 "c3xq8", "g160"])
def test_table_invariants(key):
    T = table(key)
    G = get_group(key)
    assert check_degree_squares(T)
    assert check_row_orthogonality(T)
    assert check_column_orthogonality(T)
    assert T.num_rows == len(G.classes)
    # row 0 is principal
    assert T.degrees[0] == 1 and all(v == 1 for v in T.values[0])
    # first column equals the degree
    for i in range(T.num_rows):
        assert T.values[i][0] == T.degrees[i]
    # number of linear rows = index of the derived subgroup
    D = derived_subgroup(G)
    assert T.linear_row_count() == G.order // D.order
    # kernels are normal
    for k in T.kernels:
        assert is_normal(G, k)


def test_row_orthogonality_matches_scalar_arithmetic():
    # the fast modular check must agree with direct CyclotomicInt sums
    T = table("s4")
    G = get_group("s4")
    e = T.exponent
    for i in range(T.num_rows):
        for j in range(T.num_rows):
            acc = CyclotomicInt.integer(e, 0)
            for k, c in enumerate(G.classes):
                acc = acc + T.values[i][k] * T.values[j][k].conj() * c.size
            assert acc == (G.order if i == j else 0)


def test_kernel_examples():
    T = table("s4")
    assert character_kernel(T, 0).order == 24
    deg2 = next(i for i, d in enumerate(T.degrees) if d == 2)
    assert character_kernel(T, deg2).order == 4

    TQ = table("q8")
    faithful = next(i for i, d in enumerate(TQ.degrees) if d == 2)
    assert character_kernel(TQ, faithful).order == 1


def test_inertia_examples():
    G = get_group("a4")
    V4 = next(n for n in normal_subgroups(G) if n.order == 4)
    T_N = character_table(as_group(V4))
    assert inertia_group(G, V4, T_N, 0).order == G.order  # principal
    for row in range(1, T_N.num_rows):
        I = inertia_group(G, V4, T_N, row)
        assert I.order == 4  # A4 Frobenius: trivial stabilizer above V4

    S = get_group("s4")
    V4s = next(n for n in normal_subgroups(S) if n.order == 4)
    T_Ns = character_table(as_group(V4s))
    orders = sorted(inertia_group(S, V4s, T_Ns, r).order for r in range(1, T_Ns.num_rows))
    assert orders == [8, 8, 8]


def test_inertia_matches_centralizers_on_elementary_abelian_normal():
    # multiset {|C_G(x)| : 1 != x in N} equals {|I_G(lam)| : lam nonprincipal}
    from codegrees.groups import centralizer
    for key in ("a4", "s4"):
        G = get_group(key)
        N = next(n for n in normal_subgroups(G) if n.order == 4)
        T_N = character_table(as_group(N))
        cents = sorted(centralizer(G, x).order for x in N.member_indices if x != 0)
        inert = sorted(inertia_group(G, N, T_N, r).order for r in range(1, T_N.num_rows))
        assert cents == inert


def test_frobenius_inertia_is_kernel():
    # for Frobenius G with kernel N, every nonprincipal lambda has I = N
    G = get_group("cpk3")
    w = frobenius_kernel(G)
    T_N = character_table(as_group(w.kernel))
    for row in range(1, T_N.num_rows):
        assert inertia_group(G, w.kernel, T_N, row).member_set == w.kernel.member_set


def test_restriction_inner_product():
    G = get_group("s4")
    T = table("s4")
    A4 = next(n for n in normal_subgroups(G) if n.order == 12)
    T_M = character_table(as_group(A4))
    # restriction of the principal character is the principal character
    assert restriction_inner_product(T, A4, T_M, 0, 0) == 1
    # degree-3 rows of S4 restrict irreducibly to the degree-3 row of A4
    i3 = next(i for i, d in enumerate(T.degrees) if d == 3)
    j3 = next(j for j, d in enumerate(T_M.degrees) if d == 3)
    assert restriction_inner_product(T, A4, T_M, i3, j3) == 1
    # total: <chi|_M, chi|_M> = sum over rows of multiplicities^2
    total = sum(restriction_inner_product(T, A4, T_M, i3, j) ** 2
                for j in range(T_M.num_rows))
    assert total == 1


def test_trivial_group_table():
    T = table("c1")
    assert T.degrees == (1,)
    assert T.values[0][0] == 1
    assert check_row_orthogonality(T)


def test_c5xs3_has_conductor_15_values():
    T = table("c5xs3")
    assert T.exponent == 30
    assert check_row_orthogonality(T)
    assert check_column_orthogonality(T)
