"""Concrete group constructors, GroupSpec parsing, and the default corpus.

Manifest syntax (one spec per line, ``#`` comments):

    cyclic 6
    dihedral 15                 # symmetries of the 15-gon, order 30
    symmetric 4
    alternating 5
    quaternion 16               # generalized quaternion of order 16
    cpk_q8 3 2 builtin          # C_3^2 x| Q8 via the builtin SL2 embedding
    semidirect 7 1 (cyclic 3) [[[2]]]   # C_7^1 x| C3, matrix per actor generator
    product (cyclic 3) (quaternion 8)
    file data/sg480_1188.gens   # builtin: prefix resolves to packaged data
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from math import gcd

import numpy as np

from .gens_io import read_generators
from .groups import (
    DEFAULT_ORDER_BOUND,
    GroupError,
    GroupHandle,
    build_group,
    is_prime,
)
from .perm import Permutation


class InvalidAction(GroupError):
    """A semidirect-product action map is not an automorphism action."""


class SpecError(ValueError):
    """Malformed GroupSpec / manifest input."""


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple
    name: str

    def describe(self) -> str:
        return spec_to_line(self)


# -- raw constructors -----------------------------------------------------

def cyclic_group(n: int, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    if n < 1:
        raise SpecError("cyclic order must be >= 1")
    if n == 1:
        return build_group([Permutation((0,))], name="C1", bound=bound)
    images = tuple(list(range(1, n)) + [0])
    return build_group([Permutation(images)], name=f"C{n}", bound=bound)


def dihedral_group(n: int, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise SpecError("dihedral parameter must be >= 3")
    rot = Permutation(tuple(list(range(1, n)) + [0]))
    refl = Permutation(tuple((n - i) % n for i in range(n)))
    return build_group([rot, refl], name=f"D{n}", bound=bound)


def symmetric_group(n: int, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    if n < 1:
        raise SpecError("symmetric degree must be >= 1")
    if n == 1:
        return build_group([Permutation((0,))], name="S1", bound=bound)
    swap = Permutation((1, 0) + tuple(range(2, n)))
    if n == 2:
        return build_group([swap], name="S2", bound=bound)
    cycle = Permutation(tuple(list(range(1, n)) + [0]))
    return build_group([swap, cycle], name=f"S{n}", bound=bound)


def alternating_group(n: int, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    if n < 3:
        raise SpecError("alternating degree must be >= 3")
    gens = []
    for i in range(n - 2):
        cyc = list(range(n))
        cyc[i], cyc[i + 1], cyc[i + 2] = cyc[i + 1], cyc[i + 2], cyc[i]
        gens.append(Permutation(cyc))
    return build_group(gens, name=f"A{n}", bound=bound)


def generalized_quaternion_group(order: int, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    """Q_{2^k} of the given order 2^k >= 8, via its regular action."""
    if order < 8 or order & (order - 1):
        raise SpecError("generalized quaternion order must be a power of 2, at least 8")
    m = order // 2
    elems = [(i, j) for j in (0, 1) for i in range(m)]
    index = {e: k for k, e in enumerate(elems)}

    def mult(x, y):
        i1, j1 = x
        i2, j2 = y
        i = (i1 + (i2 if j1 == 0 else -i2)) % m
        j = j1 + j2
        if j == 2:
            return ((i + m // 2) % m, 0)
        return (i, j)

    def left_perm(g):
        return Permutation(tuple(index[mult(g, x)] for x in elems))

    return build_group([left_perm((1, 0)), left_perm((0, 1))],
                       name=f"Q{order}", bound=bound)


def direct_product(G: GroupHandle, H: GroupHandle, name: str | None = None,
                   bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    dg, dh = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(tuple(g.images) + tuple(dg + i for i in range(dh))))
    for h in H.generators:
        gens.append(Permutation(tuple(range(dg)) + tuple(dg + i for i in h.images)))
    label = name or f"{G.name or '?'} x {H.name or '?'}"
    P = build_group(gens, name=label, bound=bound)
    if P.order != G.order * H.order:
        raise GroupError("direct product has unexpected order")
    return P


def _matrix_mod(M, q: int, k: int) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) % q for x in row) for row in M)
    if len(rows) != k or any(len(r) != k for r in rows):
        raise InvalidAction(f"action matrices must be {k}x{k}")
    return rows


def _mat_mul(A, B, q: int):
    k = len(A)
    return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(k)) % q for j in range(k))
                 for i in range(k))


def _mat_vec(A, v, q: int):
    k = len(A)
    return tuple(sum(A[i][t] * v[t] for t in range(k)) % q for i in range(k))


def vector_semidirect(q: int, k: int, actor: GroupHandle, matrices,
                      name: str | None = None,
                      bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    """C_q^k x| actor, the action given by one GL_k(F_q) matrix per actor generator.

    The generator assignment must extend to a homomorphism on the whole
    actor (verified by walking the Cayley graph); otherwise InvalidAction.
    Acts on the q^k vectors when the action is faithful, with the actor's
    regular action appended otherwise.
    """
    if not is_prime(q):
        raise SpecError(f"{q} is not prime")
    if k < 1:
        raise SpecError("rank must be >= 1")
    mats = [_matrix_mod(M, q, k) for M in matrices]
    if len(mats) != len(actor.generator_indices):
        raise InvalidAction("need exactly one matrix per actor generator")
    ident = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    assigned: dict[int, tuple] = {0: ident}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, M in zip(actor.generator_indices, mats):
                y = actor.mul_idx(x, g)
                prod = _mat_mul(assigned[x], M, q)
                if y in assigned:
                    if assigned[y] != prod:
                        raise InvalidAction("matrix assignment is not a homomorphism")
                else:
                    assigned[y] = prod
                    nxt.append(y)
        frontier = nxt
    if assigned[0] != ident:
        raise InvalidAction("matrix assignment is not a homomorphism")

    vectors = list(_all_vectors(q, k))
    vindex = {v: i for i, v in enumerate(vectors)}
    nvec = len(vectors)
    for M in mats:
        images = {_mat_vec(M, v, q) for v in vectors}
        if len(images) != nvec:
            raise InvalidAction("action matrix is singular")

    faithful = len(set(assigned.values())) == actor.order
    extra = 0 if faithful else actor.order
    degree = nvec + extra

    gens: list[Permutation] = []
    for b in range(k):
        e_b = tuple(1 if i == b else 0 for i in range(k))
        images = [vindex[tuple((v[i] + e_b[i]) % q for i in range(k))] for v in vectors]
        gens.append(Permutation(images + list(range(nvec, degree))))
    for g, M in zip(actor.generator_indices, mats):
        images = [vindex[_mat_vec(M, v, q)] for v in vectors]
        if extra:
            grow = actor.row(g)
            images += [nvec + int(grow[t]) for t in range(actor.order)]
        else:
            images += list(range(nvec, degree))
        gens.append(Permutation(images))
    label = name or f"C{q}^{k}:{actor.name or '?'}"
    G = build_group(gens, name=label, bound=bound)
    if G.order != (q ** k) * actor.order:
        raise InvalidAction("semidirect product has unexpected order")
    return G


def _all_vectors(q: int, k: int):
    v = [0] * k
    while True:
        yield tuple(v)
        i = k - 1
        while i >= 0:
            v[i] += 1
            if v[i] < q:
                break
            v[i] = 0
            i -= 1
        if i < 0:
            return


def _builtin_q8_matrices(p: int, k: int) -> list:
    """Q8 inside GL_2(F_p) for odd p: i = [[0,-1],[1,0]], j = [[b,c],[c,-b]]
    with b^2 + c^2 = -1 (mod p); the action is fixed-point-free."""
    if k != 2:
        raise SpecError("builtin Q8 matrices exist only for rank 2")
    if p == 2 or not is_prime(p):
        raise SpecError("builtin Q8 action requires an odd prime")
    for b in range(p):
        rhs = (-1 - b * b) % p
        for c in range(p):
            if (c * c) % p == rhs:
                return [[[0, -1], [1, 0]], [[b, c], [c, -b]]]
    raise SpecError("no Q8 embedding found (unreachable for odd p)")


def cpk_q8_group(p: int, k: int, matrices="builtin",
                 bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    """C_p^k x| Q8; validates that the matrices generate a Q8 copy acting
    fixed-point-freely, which makes the result a Frobenius group."""
    if matrices == "builtin":
        matrices = _builtin_q8_matrices(p, k)
    actor = generalized_quaternion_group(8, bound=bound)
    mats = [_matrix_mod(M, p, k) for M in matrices]
    ident = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    matgroup = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for A in frontier:
            for M in mats:
                B = _mat_mul(A, M, p)
                if B not in matgroup:
                    if len(matgroup) > 8:
                        raise InvalidAction("matrices do not generate a group of order 8")
                    matgroup.add(B)
                    nxt.append(B)
        frontier = nxt
    if len(matgroup) != 8:
        raise InvalidAction("matrices do not generate a group of order 8")
    involutions = [A for A in matgroup if A != ident and _mat_mul(A, A, p) == ident]
    if len(involutions) != 1:
        raise InvalidAction("matrix group is not Q8 (involution count)")
    if all(_mat_mul(A, B, p) == _mat_mul(B, A, p) for A in matgroup for B in matgroup):
        raise InvalidAction("matrix group is abelian, not Q8")
    for A in matgroup:
        if A == ident:
            continue
        for v in _all_vectors(p, k):
            if any(v) and _mat_vec(A, v, p) == v:
                raise InvalidAction("action is not fixed-point-free")
    return vector_semidirect(p, k, actor, matrices,
                             name=f"C{p}^{k}:Q8", bound=bound)


def group_from_file(path: str | os.PathLike, name: str | None = None,
                    bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    gens = read_generators(resolve_data_path(path))
    label = name or f"file:{os.path.splitext(os.path.basename(str(path)))[0]}"
    return build_group(gens, name=label, bound=bound)


def resolve_data_path(path: str | os.PathLike) -> str | os.PathLike:
    text = str(path)
    if text.startswith("builtin:"):
        return str(resources.files("codegrees").joinpath("data").joinpath(text[len("builtin:"):]))
    return path


# -- GroupSpec construction and parsing ------------------------------------

def build_from_spec(spec: GroupSpec, bound: int = DEFAULT_ORDER_BOUND) -> GroupHandle:
    kind = spec.kind
    if kind == "cyclic":
        return cyclic_group(spec.params[0], bound)
    if kind == "dihedral":
        return dihedral_group(spec.params[0], bound)
    if kind == "symmetric":
        return symmetric_group(spec.params[0], bound)
    if kind == "alternating":
        return alternating_group(spec.params[0], bound)
    if kind == "quaternion":
        return generalized_quaternion_group(spec.params[0], bound)
    if kind == "cpk_q8":
        p, k, mats = spec.params
        return cpk_q8_group(p, k, mats, bound)
    if kind == "semidirect":
        q, k, actor_spec, mats = spec.params
        actor = build_from_spec(actor_spec, bound)
        return vector_semidirect(q, k, actor, mats, name=spec.name, bound=bound)
    if kind == "product":
        a, b = spec.params
        return direct_product(build_from_spec(a, bound), build_from_spec(b, bound),
                              name=spec.name, bound=bound)
    if kind == "file":
        return group_from_file(spec.params[0], name=spec.name, bound=bound)
    raise SpecError(f"unknown spec kind {kind!r}")


def _split_parenthesized(text: str) -> tuple[str, str]:
    """Return (inside, rest) for text starting with a balanced '(...)'."""
    if not text.startswith("("):
        raise SpecError(f"expected '(' in {text!r}")
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return text[1:i], text[i + 1:].strip()
    raise SpecError(f"unbalanced parentheses in {text!r}")


def parse_spec_line(line: str, base_dir: str | None = None) -> GroupSpec:
    text = line.split("#", 1)[0].strip()
    if not text:
        raise SpecError("empty spec")
    head, _, rest = text.partition(" ")
    rest = rest.strip()
    kind = head.lower()
    if kind in ("cyclic", "dihedral", "symmetric", "alternating", "quaternion"):
        try:
            n = int(rest)
        except ValueError as exc:
            raise SpecError(f"bad parameter in {line!r}") from exc
        prefix = {"cyclic": "C", "dihedral": "D", "symmetric": "S",
                  "alternating": "A", "quaternion": "Q"}[kind]
        return GroupSpec(kind, (n,), f"{prefix}{n}")
    if kind == "cpk_q8":
        parts = rest.split(None, 2)
        if len(parts) < 2:
            raise SpecError(f"cpk_q8 needs 'p k [builtin|json]': {line!r}")
        p, k = int(parts[0]), int(parts[1])
        mats = "builtin"
        if len(parts) == 3 and parts[2] != "builtin":
            mats = json.loads(parts[2])
        return GroupSpec(kind, (p, k, mats), f"C{p}^{k}:Q8")
    if kind == "semidirect":
        parts = rest.split(None, 2)
        if len(parts) != 3:
            raise SpecError(f"semidirect needs 'q k (<actor>) <matrices>': {line!r}")
        q, k = int(parts[0]), int(parts[1])
        inner, tail = _split_parenthesized(parts[2])
        actor_spec = parse_spec_line(inner, base_dir)
        if not tail:
            raise SpecError(f"semidirect is missing its matrix list: {line!r}")
        try:
            mats = json.loads(tail)
        except json.JSONDecodeError as exc:
            raise SpecError(f"bad matrix JSON in {line!r}") from exc
        name = f"C{q}^{k}:{actor_spec.name}"
        return GroupSpec(kind, (q, k, actor_spec, _freeze(mats)), name)
    if kind == "product":
        inner_a, tail = _split_parenthesized(rest)
        inner_b, tail2 = _split_parenthesized(tail)
        if tail2:
            raise SpecError(f"trailing input after product spec: {line!r}")
        a = parse_spec_line(inner_a, base_dir)
        b = parse_spec_line(inner_b, base_dir)
        return GroupSpec(kind, (a, b), f"{a.name} x {b.name}")
    if kind == "file":
        if not rest:
            raise SpecError(f"file spec needs a path: {line!r}")
        path = rest
        if base_dir is not None and not path.startswith("builtin:") and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        stem = os.path.splitext(os.path.basename(rest.removeprefix("builtin:")))[0]
        return GroupSpec(kind, (path,), f"file:{stem}")
    raise SpecError(f"unknown group kind {head!r}")


def _freeze(obj):
    if isinstance(obj, list):
        return tuple(_freeze(x) for x in obj)
    return obj


def spec_to_line(spec: GroupSpec) -> str:
    if spec.kind in ("cyclic", "dihedral", "symmetric", "alternating", "quaternion"):
        return f"{spec.kind} {spec.params[0]}"
    if spec.kind == "cpk_q8":
        p, k, mats = spec.params
        tail = "builtin" if mats == "builtin" else json.dumps(_thaw(mats))
        return f"cpk_q8 {p} {k} {tail}"
    if spec.kind == "semidirect":
        q, k, actor, mats = spec.params
        return f"semidirect {q} {k} ({spec_to_line(actor)}) {json.dumps(_thaw(mats))}"
    if spec.kind == "product":
        a, b = spec.params
        return f"product ({spec_to_line(a)}) ({spec_to_line(b)})"
    if spec.kind == "file":
        return f"file {spec.params[0]}"
    raise SpecError(f"unknown spec kind {spec.kind!r}")


def _thaw(obj):
    if isinstance(obj, tuple):
        return [_thaw(x) for x in obj]
    return obj


def parse_manifest_text(text: str, base_dir: str | None = None) -> list[GroupSpec]:
    specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            specs.append(parse_spec_line(line, base_dir))
        except SpecError as exc:
            raise SpecError(f"manifest line {lineno}: {exc}") from exc
    if not specs:
        raise SpecError("manifest contains no group specs")
    return specs


def read_manifest(path: str | os.PathLike) -> list[GroupSpec]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_manifest_text(text, base_dir=os.path.dirname(os.path.abspath(path)))


DEFAULT_MANIFEST_TEXT = """\
# default verification corpus
cyclic 1
cyclic 2
cyclic 6
cyclic 12
cyclic 24
cyclic 60
cyclic 120
product (cyclic 2) (cyclic 2)
dihedral 3
dihedral 4
dihedral 5
dihedral 6
dihedral 10
dihedral 15
symmetric 3
symmetric 4
symmetric 5
alternating 4
alternating 5
quaternion 8
quaternion 16
quaternion 32
quaternion 64
cpk_q8 3 2 builtin
cpk_q8 5 2 builtin
cpk_q8 7 2 builtin
semidirect 7 1 (cyclic 3) [[[2]]]
semidirect 5 1 (cyclic 4) [[[2]]]
product (cyclic 3) (quaternion 8)
product (cyclic 5) (symmetric 3)
product (cyclic 2) (quaternion 8)
file builtin:two_frob_160.gens
file builtin:two_frob_320.gens
file builtin:sg480_1188.gens
"""


def default_manifest() -> list[GroupSpec]:
    return parse_manifest_text(DEFAULT_MANIFEST_TEXT)


def lemma_nil_prime(spec: GroupSpec) -> int | None:
    """For product specs C_p x L with p prime not dividing |L| and L
    nonabelian, the prime p; None when the shape does not apply."""
    if spec.kind != "product":
        return None
    a, _ = spec.params
    if a.kind != "cyclic":
        return None
    p = a.params[0]
    if not is_prime(p):
        return None
    return p
