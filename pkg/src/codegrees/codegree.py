"""Codegrees, the sets cod(G), cod(G|N), and the prime graph on codegree sets.

The codegree of an irreducible character chi is |G : ker chi| / chi(1),
always a positive integer.  cod(G|N) collects the codegrees of the rows
whose kernel does not contain the normal subgroup N; with N the derived
subgroup this is the non-linear character codegree set.

In the prime graph of an integer set, vertices are the primes dividing
some member and two primes p, q are adjacent when pq divides a member.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartable import CharacterTable, NonIntegral
from .groups import GroupHandle, SubgroupHandle, is_normal, prime_factors


def prime_set(n: int) -> set[int]:
    """The set of prime divisors of n."""
    if n < 1:
        raise ValueError("argument must be a positive integer")
    return set(prime_factors(n))


def p_part(n: int, p: int) -> int:
    """The exact p-part of n (largest power of p dividing n)."""
    if n < 1:
        raise ValueError("argument must be a positive integer")
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def codegree(T: CharacterTable, row: int) -> int:
    """|G : ker chi| / chi(1), exact."""
    index = T.group.order // T.kernels[row].order
    d = T.degrees[row]
    if index % d:
        raise NonIntegral(f"codegree of row {row} is not an integer")
    return index // d


def kernel_contains(T: CharacterTable, row: int, N: SubgroupHandle) -> bool:
    ker = T.kernels[row].member_set
    return all(m in ker for m in N.member_indices)


def cod_set(T: CharacterTable) -> tuple[int, ...]:
    """Sorted set of all codegrees, including 1 for the principal character."""
    return tuple(sorted({codegree(T, i) for i in range(T.num_rows)}))


def cod_relative(T: CharacterTable, N: SubgroupHandle) -> tuple[int, ...]:
    """Sorted cod(G|N): codegrees of rows whose kernel does not contain N.

    N must be a nontrivial normal subgroup; a trivial N is rejected
    rather than silently producing the empty set.
    """
    if N.order == 1:
        raise ValueError("cod(G|N) requires a nontrivial N")
    if not is_normal(T.group, N):
        from .groups import NotNormal
        raise NotNormal("N is not normal")
    return tuple(sorted({codegree(T, i) for i in range(T.num_rows)
                         if not kernel_contains(T, i, N)}))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    def are_adjacent(self, p: int, q: int) -> bool:
        return tuple(sorted((p, q))) in set(self.edges)


def prime_graph(values) -> PrimeGraph:
    """The prime graph of a nonempty set of positive integers."""
    vals = sorted(set(int(v) for v in values))
    if not vals:
        raise ValueError("prime_graph requires a nonempty set")
    if any(v < 1 for v in vals):
        raise ValueError("prime_graph entries must be >= 1")
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for v in vals:
        ps = sorted(prime_set(v)) if v > 1 else []
        verts.update(ps)
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                edges.add((ps[i], ps[j]))
    uf = _UnionFind(verts)
    for p, q in edges:
        uf.union(p, q)
    comps: dict[int, list[int]] = {}
    for p in sorted(verts):
        comps.setdefault(uf.find(p), []).append(p)
    components = tuple(tuple(c) for _, c in sorted(comps.items()))
    return PrimeGraph(vertices=tuple(sorted(verts)),
                      edges=tuple(sorted(edges)),
                      components=components)


@dataclass(frozen=True)
class CodegreeReport:
    """Per-character codegree data plus the collapsed sets."""

    group_name: str
    group_order: int
    per_character: tuple[tuple[int, int, int], ...]  # (degree, kernel order, codegree)
    cod_all: tuple[int, ...]
    cod_rel: dict[str, tuple[int, ...]] = field(default_factory=dict)


def codegree_report(T: CharacterTable, derived: SubgroupHandle | None = None,
                    extra: dict[str, SubgroupHandle] | None = None) -> CodegreeReport:
    rows = tuple((T.degrees[i], T.kernels[i].order, codegree(T, i))
                 for i in range(T.num_rows))
    for d, ko, c in rows:
        assert c * d * ko == T.group.order, "codegree fails the defining identity"
    rel: dict[str, tuple[int, ...]] = {}
    if derived is not None and derived.order > 1:
        rel["GPRIME"] = cod_relative(T, derived)
    for label, N in (extra or {}).items():
        rel[label] = cod_relative(T, N)
    name = T.group.name or f"group of order {T.group.order}"
    return CodegreeReport(group_name=name, group_order=T.group.order,
                          per_character=rows, cod_all=cod_set(T), cod_rel=rel)
