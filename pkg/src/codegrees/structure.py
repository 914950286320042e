"""Structural predicates: cyclic / elementary abelian / nilpotent / solvable
tests, Q8 identification, and Frobenius / 2-Frobenius recognition.

The Frobenius test uses the centralizer characterization: a proper
nontrivial normal subgroup N is the Frobenius kernel iff C_G(x) <= N for
every non-identity x in N.  Coprimality of |N| and |G:N| then holds
automatically and is asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .groups import (
    GroupHandle,
    SubgroupHandle,
    as_group,
    centralizer_mask,
    derived_subgroup,
    full_subgroup,
    is_prime,
    normal_subgroups,
    parent_index_map,
    prime_factors,
    quotient_group,
    sylow_subgroup,
    is_normal,
)


@dataclass(frozen=True)
class FrobeniusWitness:
    kernel: SubgroupHandle
    complement_order: int


@dataclass(frozen=True)
class TwoFrobeniusWitness:
    K: SubgroupHandle
    H: SubgroupHandle
    p: int | None       # |H/K| when prime
    R_order: int        # |G : H|


def _handle(S: GroupHandle | SubgroupHandle) -> GroupHandle:
    if isinstance(S, SubgroupHandle):
        return as_group(S)
    return S


def is_cyclic(S: GroupHandle | SubgroupHandle) -> bool:
    G = _handle(S)
    return bool(np.any(G.element_orders == G.order))


def is_elementary_abelian(S: GroupHandle | SubgroupHandle) -> tuple[bool, int | None, int | None]:
    """(flag, p, k) for S isomorphic to C_p^k; the trivial group gives (True, None, 0)."""
    G = _handle(S)
    if G.order == 1:
        return (True, None, 0)
    if not G.is_abelian():
        return (False, None, None)
    orders = set(int(o) for o in G.element_orders) - {1}
    if len(orders) != 1:
        return (False, None, None)
    p = orders.pop()
    if not is_prime(p):
        return (False, None, None)
    k = 0
    n = G.order
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        return (False, None, None)
    return (True, p, k)


def is_quaternion8(S: GroupHandle | SubgroupHandle) -> bool:
    G = _handle(S)
    if G.order != 8 or G.is_abelian():
        return False
    return int(np.count_nonzero(G.element_orders == 2)) == 1


def is_generalized_quaternion(S: GroupHandle | SubgroupHandle) -> bool:
    """Nonabelian 2-group with a unique involution (characterizes Q_{2^k})."""
    G = _handle(S)
    n = G.order
    if n < 8 or n & (n - 1):
        return False
    if G.is_abelian():
        return False
    return int(np.count_nonzero(G.element_orders == 2)) == 1


def is_nilpotent(G: GroupHandle) -> bool:
    """Every Sylow subgroup normal."""
    for p in prime_factors(G.order):
        if not is_normal(G, sylow_subgroup(G, p)):
            return False
    return True


def is_solvable(G: GroupHandle) -> bool:
    current = G
    while current.order > 1:
        D = derived_subgroup(current)
        if D.order == current.order:
            return False
        current = as_group(D)
    return True


def _centralizers_inside(G: GroupHandle, members) -> bool:
    """True iff C_G(x) is contained in `members` for every non-identity x in it."""
    mset = set(members)
    marr = np.zeros(G.order, dtype=bool)
    marr[list(mset)] = True
    for x in members:
        if x == 0:
            continue
        cmask = centralizer_mask(G, x)
        if not np.all(marr[np.nonzero(cmask)[0]]):
            return False
    return True


def frobenius_kernel(G: GroupHandle) -> FrobeniusWitness | None:
    """The Frobenius kernel witness, or None when G is not Frobenius.

    Scans proper nontrivial normal subgroups for the centralizer
    condition; at most one subgroup can pass, which is asserted.
    """
    hits = []
    for N in normal_subgroups(G):
        if not (1 < N.order < G.order):
            continue
        if _centralizers_inside(G, N.member_indices):
            hits.append(N)
    if not hits:
        return None
    assert len(hits) == 1, "Frobenius kernel is not unique"
    N = hits[0]
    m = G.order // N.order
    assert gcd(N.order, m) == 1, "kernel order not coprime to its index"
    return FrobeniusWitness(kernel=N, complement_order=m)


def two_frobenius(G: GroupHandle) -> TwoFrobeniusWitness | None:
    """First (K, H) pair making G a 2-Frobenius group, or None.

    Requires H Frobenius with kernel K and G/K Frobenius with kernel H/K.
    Normal subgroups are scanned by ascending order, pairs lexicographically.
    """
    normals = [n for n in normal_subgroups(G) if 1 < n.order < G.order]
    for K in normals:
        inner = None
        for H in normals:
            if not (K.order < H.order and K.member_set < H.member_set):
                continue
            Hgrp = as_group(H)
            pmap = parent_index_map(H)
            back = {p: i for i, p in enumerate(pmap)}
            K_in_H = [back[m] for m in K.member_indices]
            if not _centralizers_inside(Hgrp, K_in_H):
                continue
            Q = quotient_group(G, K)
            h_image = sorted(set(int(Q.coset_map[m]) for m in H.member_indices))
            if len(h_image) == Q.order:
                continue
            if _centralizers_inside(Q, h_image):
                inner = H
                break
        if inner is not None:
            hk = inner.order // K.order
            return TwoFrobeniusWitness(
                K=K, H=inner,
                p=hk if is_prime(hk) else None,
                R_order=G.order // inner.order,
            )
    return None
