"""Independent oracles used to cross-check the exact character table code.

Two routes that share nothing with the modular splitting pipeline:

* ``enumerate_rational_table`` finds integer class functions of norm one
  by exhaustive search and assembles the unique pairwise-orthogonal
  family of full size; for groups with rational tables that family IS
  the character table.

* ``float_character_table`` diagonalizes a fixed linear combination of
  class matrices in complex floating point and reads degrees and values
  off the eigenvectors (Burnside's central-character route).
"""

from __future__ import annotations

from math import isqrt

import numpy as np


def enumerate_rational_table(order: int, class_sizes: list[int]) -> set[tuple[int, ...]]:
    """The full set of irreducible characters as integer value tuples.

    Only valid for groups all of whose character values are rational
    integers; the caller asserts that this matches the exact table.
    """
    r = len(class_sizes)
    assert class_sizes[0] == 1
    bounds = [isqrt(order // s) for s in class_sizes]

    candidates: list[tuple[int, ...]] = []

    def extend(pos: int, acc: list[int], norm: int) -> None:
        if norm > order:
            return
        if pos == r:
            if norm == order:
                candidates.append(tuple(acc))
            return
        lo = 1 if pos == 0 else -bounds[pos]
        for v in range(lo, bounds[pos] + 1):
            acc.append(v)
            extend(pos + 1, acc, norm + class_sizes[pos] * v * v)
            acc.pop()

    extend(0, [], 0)

    def orthogonal(f, h) -> bool:
        return sum(s * a * b for s, a, b in zip(class_sizes, f, h)) == 0

    solutions: set[frozenset] = set()

    def search(chosen: list[tuple[int, ...]], start: int) -> None:
        if len(chosen) == r:
            solutions.add(frozenset(chosen))
            return
        for i in range(start, len(candidates)):
            cand = candidates[i]
            if all(orthogonal(cand, c) for c in chosen):
                search(chosen + [cand], i + 1)

    search([], 0)
    assert len(solutions) == 1, f"expected a unique orthogonal family, got {len(solutions)}"
    return set(next(iter(solutions)))


def float_character_table(G) -> tuple[list[int], np.ndarray]:
    """(sorted degrees, value matrix) from complex-float diagonalization."""
    r = len(G.classes)
    sizes = np.array([c.size for c in G.classes], dtype=float)
    A = np.zeros((r, r, r))
    inv = G.inverse_of
    cls = G.class_of
    for k, ck in enumerate(G.classes):
        gk = ck.representative
        for x in range(G.order):
            y = G.mul_idx(int(inv[x]), gk)
            A[cls[x], cls[y], k] += 1.0

    weights_pool = [
        [float(w) for w in range(1, r + 1)],
        [float(3 * i + 1) ** 1.5 for i in range(r)],
        [float(7 * i + 2) ** 1.1 for i in range(r)],
    ]
    for weights in weights_pool:
        M = sum(w * A[i] for i, w in enumerate(weights))
        _, vecs = np.linalg.eig(M)
        ok = True
        rows = []
        for t in range(r):
            v = vecs[:, t]
            if abs(v[0]) < 1e-9:
                ok = False
                break
            w = v / v[0]
            for i in range(r):
                Mi_w = A[i] @ w
                lam = Mi_w[np.argmax(np.abs(w))] / w[np.argmax(np.abs(w))]
                if np.max(np.abs(Mi_w - lam * w)) > 1e-6 * max(1.0, np.max(np.abs(Mi_w))):
                    ok = False
                    break
            if not ok:
                break
            denom = np.sum(np.abs(w) ** 2 / sizes)
            d = np.sqrt(G.order / denom)
            rows.append(d * w / sizes)
        if ok and len(rows) == r:
            degs = sorted(int(round(row[0].real)) for row in rows)
            assert sum(d * d for d in degs) == G.order
            return degs, np.array(rows)
    raise RuntimeError("float oracle failed to separate eigenvectors")


def float_cod_sets(G, values: np.ndarray, derived_members: set[int]) -> tuple[set[int], set[int]]:
    """(cod(G), cod(G|G')) from float values: kernels by |chi(g) - chi(1)| < tol."""
    r = values.shape[0]
    cods, rel = set(), set()
    for i in range(r):
        d = values[i, 0].real
        kernel_elements = 0
        kernel_members: set[int] = set()
        for j, c in enumerate(G.classes):
            if abs(values[i, j] - d) < 1e-6:
                kernel_elements += c.size
                kernel_members.update(c.member_indices)
        cod = round(G.order / kernel_elements / d)
        cods.add(cod)
        if not derived_members <= kernel_members:
            rel.add(cod)
    return cods, rel
