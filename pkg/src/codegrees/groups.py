"""Concrete finite groups via exhaustive permutation enumeration.

Groups are built by BFS closure of their generators (desk scale, default
bound 20000 elements), stored as one int32 array of image rows in
lexicographic order, so element 0 is always the identity.  All structural
computations (classes, centralizers, normal subgroups, quotients, Sylow
subgroups) are plain exhaustive algorithms over element indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

import numpy as np

from .perm import Permutation

DEFAULT_ORDER_BOUND = 20_000
_DTYPE = np.int32


class GroupError(Exception):
    pass


class DegreeMismatch(GroupError):
    pass


class OrderBoundExceeded(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotPrime(GroupError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, increasing."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ConjClass:
    representative: int
    member_indices: tuple[int, ...]
    size: int
    rep_order: int


class GroupHandle:
    """A fully enumerated finite permutation group.

    Elements are referred to by index into the lexicographically sorted
    element list; index 0 is the identity.  Handles are immutable after
    construction and safe to share across workers.
    """

    def __init__(self, arr: np.ndarray, gen_indices: tuple[int, ...], name: str | None = None,
                 parent: "GroupHandle | None" = None, coset_map: np.ndarray | None = None):
        self._arr = arr
        self._arr.setflags(write=False)
        self.degree = arr.shape[1]
        self.order = arr.shape[0]
        self.name = name
        self.parent = parent          # set for quotient groups
        self.coset_map = coset_map    # parent element index -> element index here
        self._index = {arr[i].tobytes(): i for i in range(self.order)}
        self.generator_indices = gen_indices
        self.inverse_of = self._compute_inverses()
        self.element_orders = self._compute_orders()
        self.classes, self.class_of = self._compute_classes()
        self._elements_cache: list[Permutation] | None = None
        self._exponent: int | None = None

    # -- construction helpers -----------------------------------------

    def _compute_inverses(self) -> np.ndarray:
        inv_rows = np.argsort(self._arr, axis=1).astype(_DTYPE)
        return np.array([self._index[inv_rows[i].tobytes()] for i in range(self.order)],
                        dtype=np.int64)

    def _compute_orders(self) -> np.ndarray:
        orders = np.empty(self.order, dtype=np.int64)
        for i in range(self.order):
            row = self._arr[i]
            seen = np.zeros(self.degree, dtype=bool)
            o = 1
            for start in range(self.degree):
                if seen[start]:
                    continue
                length = 1
                p = row[start]
                seen[start] = True
                while p != start:
                    seen[p] = True
                    p = row[p]
                    length += 1
                o = lcm(o, length)
            orders[i] = o
        return orders

    def _compute_classes(self) -> tuple[list[ConjClass], np.ndarray]:
        arr = self._arr
        class_of = np.full(self.order, -1, dtype=np.int64)
        gen_rows = [arr[g] for g in self.generator_indices]
        geninv_rows = [arr[self.inverse_of[g]] for g in self.generator_indices]
        classes = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            cid = len(classes)
            class_of[start] = cid
            members = [start]
            frontier = [start]
            while frontier:
                rows = arr[np.array(frontier, dtype=np.int64)]
                frontier = []
                for g, ginv in zip(gen_rows, geninv_rows):
                    conj = ginv[rows[:, g]]  # g^-1 * y * g for each y
                    for row in conj:
                        idx = self._index[row.tobytes()]
                        if class_of[idx] < 0:
                            class_of[idx] = cid
                            members.append(idx)
                            frontier.append(idx)
            members.sort()
            classes.append(ConjClass(
                representative=members[0],
                member_indices=tuple(members),
                size=len(members),
                rep_order=int(self.element_orders[members[0]]),
            ))
        return classes, class_of

    # -- basic access ---------------------------------------------------

    @property
    def generators(self) -> list[Permutation]:
        return [self.element(i) for i in self.generator_indices]

    @property
    def elements(self) -> list[Permutation]:
        if self._elements_cache is None:
            self._elements_cache = [Permutation(self._arr[i]) for i in range(self.order)]
        return self._elements_cache

    def element(self, i: int) -> Permutation:
        return Permutation(self._arr[i])

    def index_of(self, p: Permutation) -> int:
        key = np.asarray(p.images, dtype=_DTYPE).tobytes()
        if key not in self._index:
            raise KeyError("permutation is not an element of this group")
        return self._index[key]

    def row(self, i: int) -> np.ndarray:
        return self._arr[i]

    def mul_idx(self, i: int, j: int) -> int:
        return self._index[self._arr[i][self._arr[j]].tobytes()]

    def inv_idx(self, i: int) -> int:
        return int(self.inverse_of[i])

    def conj_idx(self, g: int, x: int) -> int:
        """Index of g x g^-1."""
        gx = self._arr[g][self._arr[x]]
        return self._index[gx[self._arr[self.inverse_of[g]]].tobytes()]

    def power_idx(self, i: int, n: int) -> int:
        if n < 0:
            return self.power_idx(self.inv_idx(i), -n)
        acc, base = 0, i
        while n:
            if n & 1:
                acc = self.mul_idx(acc, base)
            base = self.mul_idx(base, base)
            n >>= 1
        return acc

    def exponent(self) -> int:
        if self._exponent is None:
            e = 1
            for o in self.element_orders:
                e = lcm(e, int(o))
            self._exponent = e
        return self._exponent

    def is_abelian(self) -> bool:
        return all(c.size == 1 for c in self.classes)

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"GroupHandle({label}, degree={self.degree})"


@dataclass(eq=False)
class SubgroupHandle:
    parent: GroupHandle
    member_indices: tuple[int, ...]
    order: int
    generator_indices: tuple[int, ...]
    minimal_normal: bool | None = field(default=None, compare=False)
    _member_set: frozenset | None = field(default=None, repr=False, compare=False)
    _group_cache: GroupHandle | None = field(default=None, repr=False, compare=False)
    _parent_map: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    @property
    def member_set(self) -> frozenset:
        if self._member_set is None:
            self._member_set = frozenset(self.member_indices)
        return self._member_set

    def contains(self, idx: int) -> bool:
        return idx in self.member_set

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_proper(self) -> bool:
        return self.order < self.parent.order

    def __repr__(self):
        return f"SubgroupHandle(order={self.order} in {self.parent!r})"


# -- group construction ------------------------------------------------

def _bfs_closure(gen_rows: np.ndarray, bound: int) -> np.ndarray:
    degree = gen_rows.shape[1]
    ident = np.arange(degree, dtype=_DTYPE)
    index = {ident.tobytes(): 0}
    rows = [ident]
    frontier = [ident]
    while frontier:
        batch = np.vstack(frontier)
        frontier = []
        for g in gen_rows:
            prods = batch[:, g]
            for row in prods:
                key = row.tobytes()
                if key not in index:
                    if len(rows) >= bound:
                        raise OrderBoundExceeded(
                            f"closure exceeds the enumeration bound {bound}")
                    index[key] = len(rows)
                    row = row.copy()
                    rows.append(row)
                    frontier.append(row)
    return np.vstack(rows)


def build_group(generators: list[Permutation], name: str | None = None,
                bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    """Enumerate the group generated by the given permutations."""
    if not generators:
        raise ValueError("at least one generator is required")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise DegreeMismatch("generators act on different numbers of points")
    gen_rows = np.array([g.images for g in generators], dtype=_DTYPE)
    arr = _bfs_closure(gen_rows, bound)
    arr = arr[np.lexsort(arr.T[::-1])]
    handle = GroupHandle.__new__(GroupHandle)
    GroupHandle.__init__(handle, arr,
                         tuple(_lookup_rows(arr, gen_rows)), name=name)
    return handle


def _lookup_rows(arr: np.ndarray, rows: np.ndarray) -> list[int]:
    index = {arr[i].tobytes(): i for i in range(arr.shape[0])}
    return [index[np.asarray(r, dtype=_DTYPE).tobytes()] for r in rows]


def _group_from_rows(rows: np.ndarray, gen_rows: np.ndarray, name: str | None = None,
                     parent: GroupHandle | None = None,
                     coset_map: np.ndarray | None = None) -> GroupHandle:
    """Internal: rows already form a group; sort and wrap without re-closure."""
    arr = rows[np.lexsort(rows.T[::-1])]
    handle = GroupHandle.__new__(GroupHandle)
    GroupHandle.__init__(handle, arr, tuple(_lookup_rows(arr, gen_rows)),
                         name=name, parent=parent, coset_map=coset_map)
    return handle


# -- subgroups ----------------------------------------------------------

def subgroup_closure(G: GroupHandle, gen_indices, cap: int | None = None) -> set[int] | None:
    """Element indices of the subgroup generated by gen_indices.

    With a cap, returns None as soon as the closure exceeds it.
    """
    current = {0}
    frontier = [0]
    gens = [g for g in gen_indices if g != 0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul_idx(x, g)
                if y not in current:
                    if cap is not None and len(current) >= cap:
                        return None
                    current.add(y)
                    nxt.append(y)
        frontier = nxt
    return current


def subgroup_from_generators(G: GroupHandle, gen_indices, name_hint: str | None = None) -> SubgroupHandle:
    members = subgroup_closure(G, gen_indices)
    gens = tuple(sorted(set(g for g in gen_indices if g != 0)))
    return SubgroupHandle(G, tuple(sorted(members)), len(members), gens)


def subgroup_from_members(G: GroupHandle, members) -> SubgroupHandle:
    """Wrap a member set as a subgroup, verifying closure exactly.

    A small generating set is extracted incrementally; the subgroup it
    generates must equal the given set, otherwise the set is not closed.
    """
    member_list = sorted(set(int(m) for m in members))
    if not member_list or member_list[0] != 0:
        raise ValueError("subgroup members must include the identity (index 0)")
    gens: list[int] = []
    current: set[int] = {0}
    for m in member_list:
        if m not in current:
            gens.append(m)
            current = subgroup_closure(G, gens)
    if len(current) != len(member_list) or current != set(member_list):
        raise ValueError("member set is not closed under multiplication")
    return SubgroupHandle(G, tuple(member_list), len(member_list), tuple(gens))


def trivial_subgroup(G: GroupHandle) -> SubgroupHandle:
    return SubgroupHandle(G, (0,), 1, ())


def full_subgroup(G: GroupHandle) -> SubgroupHandle:
    return SubgroupHandle(G, tuple(range(G.order)), G.order, G.generator_indices)


def as_group(S: SubgroupHandle, name: str | None = None) -> GroupHandle:
    """A SubgroupHandle as a standalone GroupHandle (same permutation degree).

    The result's ``coset_map`` is unused; ``parent_element_of`` gives the
    index map back into the parent (see ``parent_index_map``).
    """
    if S._group_cache is not None:
        return S._group_cache
    parent = S.parent
    rows = parent._arr[np.array(S.member_indices, dtype=np.int64)]
    gen_rows = parent._arr[np.array(S.generator_indices, dtype=np.int64)] \
        if S.generator_indices else rows[:1]
    H = _group_from_rows(rows.copy(), np.asarray(gen_rows, dtype=_DTYPE), name=name)
    pmap = tuple(parent._index[H._arr[i].tobytes()] for i in range(H.order))
    S._group_cache = H
    S._parent_map = pmap
    return H


def parent_index_map(S: SubgroupHandle) -> tuple[int, ...]:
    """For H = as_group(S): map from H element index to parent element index."""
    as_group(S)
    return S._parent_map  # type: ignore[return-value]


def is_normal(G: GroupHandle, S: SubgroupHandle) -> bool:
    mset = S.member_set
    for g in G.generator_indices:
        for m in S.generator_indices:
            if G.conj_idx(g, m) not in mset:
                return False
    return True


# -- named structural operations ----------------------------------------

def centralizer(G: GroupHandle, x: int) -> SubgroupHandle:
    """The subgroup of all elements commuting with element x."""
    mask = centralizer_mask(G, x)
    members = np.nonzero(mask)[0]
    return subgroup_from_members(G, members.tolist())


def centralizer_mask(G: GroupHandle, x: int) -> np.ndarray:
    arr = G._arr
    gx = arr[:, arr[x]]     # rows of g * x
    xg = arr[x][arr]        # rows of x * g
    return np.all(gx == xg, axis=1)


def subgroup_centralizer(G: GroupHandle, S: SubgroupHandle) -> SubgroupHandle:
    """Pointwise centralizer C_G(S)."""
    mask = np.ones(G.order, dtype=bool)
    for s in (S.generator_indices or ()):
        mask &= centralizer_mask(G, s)
    members = np.nonzero(mask)[0]
    return subgroup_from_members(G, members.tolist())


def center(G: GroupHandle) -> SubgroupHandle:
    return subgroup_centralizer(G, full_subgroup(G))


def derived_subgroup(G: GroupHandle) -> SubgroupHandle:
    """The commutator subgroup, as the normal closure of generator commutators."""
    gens: set[int] = set()
    for a in G.generator_indices:
        for b in G.generator_indices:
            ainv, binv = G.inv_idx(a), G.inv_idx(b)
            c = G.mul_idx(G.mul_idx(ainv, binv), G.mul_idx(a, b))
            if c != 0:
                gens.add(c)
    if not gens:
        return trivial_subgroup(G)
    # close the generating set under conjugation, then take the closure
    members = subgroup_closure(G, gens)
    while True:
        extra = set()
        for g in G.generator_indices:
            for m in list(gens):
                c = G.conj_idx(g, m)
                if c not in members:
                    extra.add(c)
        if not extra:
            break
        gens |= extra
        members = subgroup_closure(G, gens)
    return subgroup_from_members(G, members)


def normal_subgroups(G: GroupHandle) -> list[SubgroupHandle]:
    """All normal subgroups, sorted by (order, member tuple).

    Candidates are closures of unions of conjugacy classes; a generating
    set that is a union of classes is conjugation-invariant, so each
    closure is automatically normal.  Minimal normal subgroups are
    flagged via ``minimal_normal``.
    """
    class_members = [set(c.member_indices) for c in G.classes]
    found: dict[frozenset, set[int]] = {frozenset({0}): {0}}
    queue = [frozenset({0})]
    while queue:
        key = queue.pop()
        base = found[key]
        for cm in class_members:
            if len(cm) == 1 and 0 in cm:
                continue
            if cm <= base:
                continue
            members = subgroup_closure(G, set(base) | cm - {0})
            fkey = frozenset(members)
            if fkey not in found:
                found[fkey] = members
                queue.append(fkey)
    handles = [subgroup_from_members(G, m) for m in found.values()]
    handles.sort(key=lambda s: (s.order, s.member_indices))
    proper = [h for h in handles if 1 < h.order]
    for h in handles:
        if 1 < h.order:
            h.minimal_normal = not any(
                1 < other.order < h.order and other.member_set < h.member_set
                for other in proper)
        else:
            h.minimal_normal = False
    return handles


def minimal_normal_subgroups(G: GroupHandle) -> list[SubgroupHandle]:
    return [n for n in normal_subgroups(G) if n.minimal_normal]


def quotient_group(G: GroupHandle, N: SubgroupHandle, name: str | None = None) -> GroupHandle:
    """G acting on the left cosets of a normal subgroup N.

    The result carries ``coset_map`` sending each parent element index to
    its image's element index in the quotient.
    """
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    arr = G._arr
    n_members = np.array(N.member_indices, dtype=np.int64)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(i)
        rows = arr[i][arr[n_members]]  # i * n for n in N
        for row in rows:
            coset_of[G._index[row.tobytes()]] = cid
    k = len(reps)
    rep_arr = np.array(reps, dtype=np.int64)

    def action_row(g: int) -> np.ndarray:
        rows = arr[g][arr[rep_arr]]
        return np.array([coset_of[G._index[r.tobytes()]] for r in rows], dtype=_DTYPE)

    qgens = np.vstack([action_row(g) for g in G.generator_indices]) if k > 1 \
        else np.zeros((1, 1), dtype=_DTYPE)
    rows = _bfs_closure(qgens, bound=k + 1)
    if rows.shape[0] != k:
        raise GroupError("coset action has wrong order; N is not normal?")
    Q = _group_from_rows(rows, qgens, name=name, parent=G)
    cmap = np.empty(G.order, dtype=np.int64)
    for i in range(G.order):
        img = np.array([coset_of[G._index[(arr[i][arr[r]]).tobytes()]] for r in reps],
                       dtype=_DTYPE)
        cmap[i] = Q._index[img.tobytes()]
    Q.coset_map = cmap
    return Q


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def sylow_subgroup(G: GroupHandle, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup (trivial when p does not divide the order)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    p_elems = [i for i in range(1, G.order)
               if p_part(int(G.element_orders[i]), p) == int(G.element_orders[i])]
    current = trivial_subgroup(G)
    while current.order < target:
        progressed = False
        for i in p_elems:
            if i in current.member_set:
                continue
            # i must normalize the current subgroup
            if all(G.conj_idx(i, m) in current.member_set
                   for m in current.generator_indices):
                gens = list(current.generator_indices) + [i]
                members = subgroup_closure(G, gens)
                current = subgroup_from_members(G, members)
                progressed = True
                break
        if not progressed:
            raise GroupError("Sylow subgroup search stalled")  # cannot happen
    return current


def count_sylow(G: GroupHandle, q: int) -> int:
    """The number of Sylow q-subgroups."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    P = sylow_subgroup(G, q)
    start = frozenset(P.member_indices)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in G.generator_indices:
                conj = frozenset(G.conj_idx(g, m) for m in s)
                if conj not in seen:
                    seen.add(conj)
                    nxt.append(conj)
        frontier = nxt
    return len(seen)
