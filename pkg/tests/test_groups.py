import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codegrees.groups import (
    DegreeMismatch,
    NotNormal,
    NotPrime,
    OrderBoundExceeded,
    as_group,
    build_group,
    centralizer,
    count_sylow,
    derived_subgroup,
    is_normal,
    normal_subgroups,
    prime_factors,
    quotient_group,
    subgroup_closure,
    subgroup_from_members,
    sylow_subgroup,
    trivial_subgroup,
)
from codegrees.perm import Permutation

from conftest import get_group


def test_build_s4():
    G = get_group("s4")
    assert G.order == 24
    assert sorted(c.size for c in G.classes) == [1, 3, 6, 6, 8]
    assert G.classes[0].size == 1 and G.classes[0].representative == 0


def test_build_identity_group():
    G = build_group([Permutation((0, 1, 2))])
    assert G.order == 1
    assert len(G.classes) == 1


def test_build_q8_regular_action():
    G = get_group("q8")
    assert G.order == 8
    assert G.degree == 8
    assert sorted(c.size for c in G.classes) == [1, 1, 2, 2, 2]


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        build_group([Permutation((1, 0)), Permutation((1, 2, 0))])


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        build_group([Permutation((1, 0, 2, 3)), Permutation((1, 2, 3, 0))], bound=10)


def test_element_ordering_is_lexicographic():
    G = get_group("s4")
    rows = [G.row(i).tolist() for i in range(G.order)]
    assert rows == sorted(rows)
    assert rows[0] == [0, 1, 2, 3]


def test_centralizer_examples():
    G = get_group("s4")
    x = G.index_of(Permutation((1, 0, 3, 2)))  # (0 1)(2 3)
    C = centralizer(G, x)
    assert C.order == 8
    # brute-force recount
    count = sum(1 for g in range(G.order)
                if G.mul_idx(g, x) == G.mul_idx(x, g))
    assert count == 8
    assert centralizer(G, 0).order == G.order

    Q = get_group("q8")
    i4 = next(i for i in range(Q.order) if Q.element_orders[i] == 4)
    CQ = centralizer(Q, i4)
    assert CQ.order == 4
    assert any(Q.element_orders[m] == 4 for m in CQ.member_indices)  # cyclic C4


def test_derived_subgroup_examples():
    G = get_group("s4")
    D = derived_subgroup(G)
    assert D.order == 12
    # independent oracle: closure of all commutators over all element pairs
    comms = set()
    for a in range(G.order):
        for b in range(G.order):
            c = G.mul_idx(G.mul_idx(G.inv_idx(a), G.inv_idx(b)), G.mul_idx(a, b))
            comms.add(c)
    assert comms <= D.member_set
    assert subgroup_closure(G, comms) == set(D.member_indices)

    C6 = get_group("c6")
    assert derived_subgroup(C6).order == 1

    Q = get_group("q8")
    DQ = derived_subgroup(Q)
    assert DQ.order == 2  # the center


def test_normal_subgroups_examples():
    G = get_group("s4")
    ns = normal_subgroups(G)
    assert [n.order for n in ns] == [1, 4, 12, 24]
    minimal = [n for n in ns if n.minimal_normal]
    assert len(minimal) == 1 and minimal[0].order == 4

    A5 = get_group("a5")
    assert [n.order for n in normal_subgroups(A5)] == [1, 60]

    C6 = get_group("c6")
    assert [n.order for n in normal_subgroups(C6)] == [1, 2, 3, 6]


def test_normal_subgroups_are_conjugation_closed():
    for key in ("s4", "a4", "q16", "d15"):
        G = get_group(key)
        for N in normal_subgroups(G):
            assert is_normal(G, N)


def test_quotient_examples():
    G = get_group("s4")
    ns = normal_subgroups(G)
    V4 = next(n for n in ns if n.order == 4)
    Q = quotient_group(G, V4)
    assert Q.order == 6
    assert not Q.is_abelian()          # S4 / V4 is S3
    A4 = next(n for n in ns if n.order == 12)
    assert quotient_group(G, A4).order == 2

    triv = trivial_subgroup(G)
    Qt = quotient_group(G, triv)
    assert Qt.order == G.order
    assert sorted(c.size for c in Qt.classes) == sorted(c.size for c in G.classes)


def test_quotient_map_is_homomorphism():
    G = get_group("s4")
    V4 = next(n for n in normal_subgroups(G) if n.order == 4)
    Q = quotient_group(G, V4)
    cmap = Q.coset_map
    for a in range(0, G.order, 5):
        for b in range(0, G.order, 7):
            assert cmap[G.mul_idx(a, b)] == Q.mul_idx(int(cmap[a]), int(cmap[b]))


def test_quotient_rejects_non_normal():
    G = get_group("s4")
    x = G.index_of(Permutation((1, 0, 2, 3)))
    S = subgroup_from_members(G, [0, x])
    with pytest.raises(NotNormal):
        quotient_group(G, S)


def test_sylow_examples():
    G = get_group("s4")
    assert sylow_subgroup(G, 2).order == 8
    assert sylow_subgroup(G, 3).order == 3
    C6 = get_group("c6")
    assert sylow_subgroup(C6, 5).order == 1
    with pytest.raises(NotPrime):
        sylow_subgroup(G, 6)


def test_count_sylow_examples():
    G = get_group("s4")
    assert count_sylow(G, 3) == 4
    assert count_sylow(G, 2) == 3
    C6 = get_group("c6")
    assert count_sylow(C6, 2) == 1 and count_sylow(C6, 3) == 1
    with pytest.raises(NotPrime):
        count_sylow(G, 4)


@pytest.mark.parametrize("key", ["s3", "s4", "a4", "a5", "q8", "q16", "d15", "c7c3"])
def test_group_invariants(key):
    G = get_group(key)
    assert sum(c.size for c in G.classes) == G.order
    assert all(G.order % c.size == 0 for c in G.classes)
    assert G.classes[0].size == 1
    # Sylow counting theorem cross-check
    for p in prime_factors(G.order):
        n_p = count_sylow(G, p)
        assert n_p % p == 1
        assert G.order % n_p == 0
    # derived subgroup trivial iff abelian
    assert (derived_subgroup(G).order == 1) == all(c.size == 1 for c in G.classes)
    # quotient order for every normal subgroup
    for N in normal_subgroups(G):
        assert quotient_group(G, N).order * N.order == G.order


def test_subgroup_from_members_rejects_non_closed():
    G = get_group("s4")
    x = G.index_of(Permutation((1, 2, 3, 0)))  # a 4-cycle
    with pytest.raises(ValueError):
        subgroup_from_members(G, [0, x])


def test_as_group_preserves_structure():
    G = get_group("s4")
    V4 = next(n for n in normal_subgroups(G) if n.order == 4)
    H = as_group(V4)
    assert H.order == 4
    assert all(c.size == 1 for c in H.classes)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.permutations(range(4)), min_size=1, max_size=2))
def test_random_small_groups_satisfy_lagrange(gen_images):
    G = build_group([Permutation(t) for t in gen_images])
    assert 24 % G.order == 0
    assert sum(c.size for c in G.classes) == G.order
    for i in range(G.order):
        assert G.mul_idx(i, G.inv_idx(i)) == 0
        assert G.order % int(G.element_orders[i]) == 0
    for N in normal_subgroups(G):
        assert G.order % N.order == 0
        assert quotient_group(G, N).order == G.order // N.order
