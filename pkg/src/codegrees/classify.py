"""Classification of groups whose non-linear character codegrees are
pairwise coprime, with structural witnesses, plus a battery of
falsification oracles for the structural facts the classifier rests on.

A group is a "star group" here when cod(G|G') has more than one element
and its elements are pairwise coprime.  Every such group must be either
a Frobenius group C_p^k x| Q8 or a 2-Frobenius group satisfying four
structural conditions together with the value identity
cod(G|G') = {p, |K|*|R0|}; ``classify`` verifies one branch and reports
any mismatch as data (the falsification channel), never as an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .chartable import CharacterTable, NonIntegral
from .codegree import cod_relative, codegree, kernel_contains, prime_set
from .groups import (
    GroupHandle,
    SubgroupHandle,
    as_group,
    centralizer,
    derived_subgroup,
    is_normal,
    is_prime,
    normal_subgroups,
    p_part,
    parent_index_map,
    prime_factors,
    quotient_group,
    subgroup_centralizer,
    subgroup_closure,
    subgroup_from_members,
    sylow_subgroup,
    count_sylow,
    trivial_subgroup,
)
from .structure import (
    FrobeniusWitness,
    TwoFrobeniusWitness,
    frobenius_kernel,
    is_cyclic,
    is_elementary_abelian,
    is_quaternion8,
    is_solvable,
    two_frobenius,
)

BRANCH_FROBENIUS = "FROBENIUS_CPK_Q8"
BRANCH_TWO_FROBENIUS = "TWO_FROBENIUS"
BRANCH_NOT_STAR = "NOT_STAR"


@dataclass(frozen=True)
class Certificate:
    group_name: str
    is_star: bool
    branch: str
    cod_nonlinear: tuple[int, ...]
    not_star_reason: str | None = None          # ABELIAN / COD_SINGLETON / NONCOPRIME_PAIR
    noncoprime_pair: tuple[int, int] | None = None
    frobenius_witness: tuple[int, int] | None = None          # (p, k)
    two_frobenius_witness: dict | None = field(default=None)  # K/H/R orders, p, R0, cod pair
    failure_reason: str | None = None           # set only on a Theorem-A violation


def is_star_group(T: CharacterTable, derived: SubgroupHandle | None = None) -> bool:
    """|cod(G|G')| > 1 with all pairs coprime; False for abelian G."""
    d = derived if derived is not None else derived_subgroup(T.group)
    if d.order == 1:
        return False
    cods = cod_relative(T, d)
    if len(cods) <= 1:
        return False
    return _first_noncoprime_pair(cods) is None


def _first_noncoprime_pair(values) -> tuple[int, int] | None:
    vals = sorted(values)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if gcd(vals[i], vals[j]) != 1:
                return (vals[i], vals[j])
    return None


def find_complement(G: GroupHandle, N: SubgroupHandle) -> SubgroupHandle | None:
    """A subgroup of order |G:N| meeting N trivially (Schur-Zassenhaus search).

    For prime-power index q^a with q not dividing |N| a Sylow q-subgroup
    works outright; otherwise subgroups generated by one, two or three
    elements of order dividing the index are enumerated with the closure
    capped at the target order.
    """
    m = G.order // N.order
    if m == 1:
        return trivial_subgroup(G)
    ps = prime_factors(m)
    if len(ps) == 1 and N.order % ps[0]:
        q = ps[0]
        if p_part(G.order, q) == m:
            P = sylow_subgroup(G, q)
            if len(P.member_set & N.member_set) == 1:
                return P
    candidates = [i for i in range(1, G.order)
                  if m % int(G.element_orders[i]) == 0 and i not in N.member_set]

    def try_gens(gens) -> SubgroupHandle | None:
        members = subgroup_closure(G, gens, cap=m)
        if members is None or len(members) != m:
            return None
        if len(members & N.member_set) != 1:
            return None
        return subgroup_from_members(G, members)

    for a in candidates:
        got = try_gens([a])
        if got is not None:
            return got
    for i, a in enumerate(candidates):
        for b in candidates[i + 1:]:
            got = try_gens([a, b])
            if got is not None:
                return got
    for i, a in enumerate(candidates):
        for j, b in enumerate(candidates[i + 1:], start=i + 1):
            for c in candidates[j + 1:]:
                got = try_gens([a, b, c])
                if got is not None:
                    return got
    return None


def _not_star_certificate(name: str, cods: tuple[int, ...], reason: str,
                          pair: tuple[int, int] | None = None) -> Certificate:
    return Certificate(group_name=name, is_star=False, branch=BRANCH_NOT_STAR,
                       cod_nonlinear=cods, not_star_reason=reason, noncoprime_pair=pair)


def classify(G: GroupHandle, T: CharacterTable | None = None) -> Certificate:
    """Decide the star predicate and verify the matching structural branch.

    Violations are returned as data in ``failure_reason``; on valid input
    that field is always None.
    """
    from .chartable import character_table

    name = G.name or f"group of order {G.order}"
    if T is None:
        T = character_table(G)
    d = derived_subgroup(G)
    if d.order == 1:
        return _not_star_certificate(name, (), "ABELIAN")
    cods = cod_relative(T, d)
    if len(cods) <= 1:
        return _not_star_certificate(name, cods, "COD_SINGLETON")
    pair = _first_noncoprime_pair(cods)
    if pair is not None:
        return _not_star_certificate(name, cods, "NONCOPRIME_PAIR", pair)

    fw = frobenius_kernel(G)
    if fw is not None:
        reason, witness = _verify_frobenius_branch(G, fw, cods)
        return Certificate(group_name=name, is_star=True,
                           branch=BRANCH_FROBENIUS if reason is None else BRANCH_FROBENIUS,
                           cod_nonlinear=cods, frobenius_witness=witness,
                           failure_reason=reason)

    tw = two_frobenius(G)
    if tw is not None:
        reason, witness = _verify_two_frobenius_branch(G, tw, cods)
        return Certificate(group_name=name, is_star=True, branch=BRANCH_TWO_FROBENIUS,
                           cod_nonlinear=cods, two_frobenius_witness=witness,
                           failure_reason=reason)

    return Certificate(group_name=name, is_star=True, branch=BRANCH_NOT_STAR,
                       cod_nonlinear=cods,
                       failure_reason="NOT_FROBENIUS_OR_2FROBENIUS")


def _verify_frobenius_branch(G: GroupHandle, fw: FrobeniusWitness,
                             cods) -> tuple[str | None, tuple[int, int] | None]:
    flag, p, k = is_elementary_abelian(fw.kernel)
    if not flag or p is None:
        return ("KERNEL_NOT_ELEMENTARY_ABELIAN", None)
    if k < 2:
        # the sharper in-text bound; a rank-1 witness would be flagged, not accepted
        return ("KERNEL_RANK_TOO_SMALL", (p, k))
    comp = find_complement(G, fw.kernel)
    if comp is None:
        return ("COMPLEMENT_NOT_FOUND", (p, k))
    if not is_quaternion8(comp):
        return ("COMPLEMENT_NOT_Q8", (p, k))
    if tuple(sorted(cods)) != tuple(sorted({4, p ** k})):
        return ("COD_SET_MISMATCH", (p, k))
    return (None, (p, k))


def _verify_two_frobenius_branch(G: GroupHandle, tw: TwoFrobeniusWitness,
                                 cods) -> tuple[str | None, dict]:
    witness: dict = {
        "K_order": tw.K.order,
        "H_order": tw.H.order,
        "R_order": tw.R_order,
        "p": tw.p,
    }
    R = quotient_group(G, tw.H)
    if not is_cyclic(R):
        return ("R_NOT_CYCLIC", witness)
    p = tw.H.order // tw.K.order
    if not is_prime(p):
        return ("HK_NOT_PRIME_ORDER", witness)
    witness["p"] = p
    J = _complement_of_prime_index(G, tw.K, tw.H, p)
    if J is None:
        return ("J_NOT_FOUND", witness)
    mins = [n for n in normal_subgroups(G) if n.minimal_normal]
    if len(mins) != 1 or mins[0].member_set != tw.K.member_set:
        return ("K_NOT_UNIQUE_MINIMAL", witness)
    r0_order: int | None = None
    for x in tw.K.member_indices:
        if x == 0:
            continue
        C = centralizer(G, x)
        if not tw.K.member_set <= C.member_set:
            return ("K_NOT_CENTRALIZED", witness)
        CmodK = quotient_group(as_group(C), _subgroup_in(C, tw.K))
        if not is_cyclic(CmodK):
            return ("CENTRALIZER_QUOTIENT_NOT_CYCLIC", witness)
        if r0_order is None:
            r0_order = CmodK.order
        elif r0_order != CmodK.order:
            return ("R0_ORDER_NOT_CONSTANT", witness)
    assert r0_order is not None
    witness["R0_order"] = r0_order
    if tw.R_order % r0_order:
        return ("R0_NOT_DIVIDING_R", witness)
    if prime_set(r0_order) != prime_set(tw.R_order):
        return ("R0_PRIME_SET_MISMATCH", witness)
    expected = tuple(sorted({p, tw.K.order * r0_order}))
    witness["cod_pair"] = expected
    if tuple(sorted(cods)) != expected:
        return ("COD_SET_MISMATCH", witness)
    return (None, witness)


def _subgroup_in(C: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    """K viewed as a subgroup of as_group(C); requires K <= C."""
    H = as_group(C)
    pmap = parent_index_map(C)
    back = {pidx: i for i, pidx in enumerate(pmap)}
    return subgroup_from_members(H, [back[m] for m in K.member_indices])


def _complement_of_prime_index(G: GroupHandle, K: SubgroupHandle,
                               H: SubgroupHandle, p: int) -> SubgroupHandle | None:
    """A subgroup J of H with |J| = p and J meeting K trivially."""
    for x in H.member_indices:
        if x == 0 or x in K.member_set:
            continue
        if int(G.element_orders[x]) == p:
            members = subgroup_closure(G, [x])
            if len(members & K.member_set) == 1:
                return subgroup_from_members(G, members)
    return None


# -- lemma / theorem oracles ------------------------------------------------

def oracle_sylow_frobenius_action(T: CharacterTable,
                                  derived: SubgroupHandle | None = None) -> list[tuple[int, bool]]:
    """For each prime p | |G| dividing no element of cod(G|G'): a Sylow
    p-subgroup must act without fixed points on the derived subgroup."""
    G = T.group
    d = derived if derived is not None else derived_subgroup(G)
    if d.order == 1:
        return []
    cods = cod_relative(T, d)
    out: list[tuple[int, bool]] = []
    for p in prime_factors(G.order):
        if any(c % p == 0 for c in cods):
            continue
        P = sylow_subgroup(G, p)
        ok = True
        for y in P.member_indices:
            if y == 0:
                continue
            # C_{G'}(y) must be trivial
            for x in d.member_indices:
                if x == 0:
                    continue
                if G.mul_idx(x, y) == G.mul_idx(y, x):
                    ok = False
                    break
            if not ok:
                break
        out.append((p, ok))
    return out


def oracle_nq_count(G: GroupHandle, M: SubgroupHandle, q: int) -> str:
    """Test the N_q condition for the conjugation module M and verify the
    Sylow-counting identity (|M|-1)/(|C_M(Q)|-1) = n_q(G) when it holds.

    Returns 'pass', 'fail' (identity violated: a falsification), or
    'not_applicable' (N_q does not hold).
    """
    flag, _, _ = is_elementary_abelian(M)
    if not (flag and M.order > 1 and is_normal(G, M)):
        raise ValueError("M must be a nontrivial normal elementary abelian subgroup")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    CGM = subgroup_centralizer(G, M)
    if (G.order // CGM.order) % q:
        raise ValueError("q must divide |G / C_G(M)|")
    full_q = p_part(G.order, q)
    for v in M.member_indices:
        if v == 0:
            continue
        C = centralizer(G, v)
        if p_part(C.order, q) != full_q:
            return "not_applicable"  # no Sylow q-subgroup of G inside C_G(v)
        Cgrp = as_group(C)
        Q_in_C = sylow_subgroup(Cgrp, q)
        if not is_normal(Cgrp, Q_in_C):
            return "not_applicable"
    Q = sylow_subgroup(G, q)
    fixed = [m for m in M.member_indices
             if all(G.mul_idx(m, s) == G.mul_idx(s, m) for s in Q.generator_indices)]
    denom = len(fixed) - 1
    if denom <= 0:
        return "fail"
    lhs, rem = divmod(M.order - 1, denom)
    if rem or lhs != count_sylow(G, q):
        return "fail"
    return "pass"


def oracle_solvability(T: CharacterTable,
                       derived: SubgroupHandle | None = None) -> bool:
    """|cod(G|G')| <= 2 must force solvability; vacuously true otherwise."""
    G = T.group
    d = derived if derived is not None else derived_subgroup(G)
    if d.order == 1:
        return True
    if len(cod_relative(T, d)) > 2:
        return True
    return is_solvable(G)


def oracle_subnormal_divisibility(T: CharacterTable, M: SubgroupHandle,
                                  T_M: CharacterTable) -> list[tuple[int, int]]:
    """For normal M and every constituent psi of chi restricted to M:
    cod(psi) must divide cod(chi).  Returns violating (row, row_M) pairs.

    A linear chi restricts to an irreducible character of M, so its one
    constituent is located by exact pointwise comparison; the general
    case computes the exact cyclotomic inner product.
    """
    from math import lcm as _lcm

    G = T.group
    H = as_group(M)
    pmap = parent_index_map(M)
    L = _lcm(T.exponent, T_M.exponent)
    # values of chi_i at the classes of M, and of psi_j, in the common conductor
    restricted = [
        tuple(T.values[i][int(G.class_of[pmap[c.representative]])].raise_conductor(L)
              for c in H.classes)
        for i in range(T.num_rows)
    ]
    m_rows = [tuple(v.raise_conductor(L) for v in T_M.values[j])
              for j in range(T_M.num_rows)]
    m_sizes = [c.size for c in H.classes]

    violations = []
    for i in range(T.num_rows):
        ci = codegree(T, i)
        if T.degrees[i] == 1:
            hits = [j for j in range(T_M.num_rows) if m_rows[j] == restricted[i]]
            assert len(hits) == 1, "linear restriction must match one row of Irr(M)"
            constituents = hits
        else:
            constituents = []
            for j in range(T_M.num_rows):
                acc = None
                for s, chi_v, psi_v in zip(m_sizes, restricted[i], m_rows[j]):
                    term = chi_v * psi_v.conj() * s
                    acc = term if acc is None else acc + term
                total = acc.as_int()
                if total is None or total % M.order or total < 0:
                    raise NonIntegral("character inner product is not a nonnegative integer")
                if total:
                    constituents.append(j)
        for j in constituents:
            if ci % codegree(T_M, j):
                violations.append((i, j))
    return violations


def oracle_abelian_kernel_divisibility(T: CharacterTable,
                                       normals: list[SubgroupHandle]) -> list[tuple[int, int]]:
    """For abelian normal K and chi with ker(chi) and K meeting trivially:
    |K| must divide cod(chi).  Returns violating (row, K order) pairs."""
    violations = []
    abelian_normals = [N for N in normals
                       if 1 < N.order and as_group(N).is_abelian()]
    for i in range(T.num_rows):
        ker = T.kernels[i].member_set
        ci = codegree(T, i)
        for K in abelian_normals:
            if len(ker & K.member_set) == 1 and ci % K.order:
                violations.append((i, K.order))
    return violations


def oracle_direct_product_scaling(T: CharacterTable, p: int,
                                  derived: SubgroupHandle | None = None) -> bool:
    """For G = C_p x L with L a nonabelian p'-group, cod(G|G') must contain
    a pair with cod(psi) = p * cod(chi)."""
    d = derived if derived is not None else derived_subgroup(T.group)
    if d.order == 1:
        return False
    cods = cod_relative(T, d)
    return any(a * p in cods for a in cods)
