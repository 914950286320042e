"""Exact complex character tables via the modular splitting method.

The pipeline, for a group with r classes and exponent e:

  1. compute the class-algebra structure constants a_ijk by brute-force
     product counting over class members;
  2. pick the smallest prime L = 1 (mod e) with L > 2*sqrt(|G|), L > r
     and L not dividing |G|, so the class algebra splits completely
     over the field with L elements;
  3. split the common eigenspaces of the (commuting) class matrices by
     iterated restriction / characteristic-polynomial root finding,
     processing matrices in ascending class-size order with
     deterministic pivoting;
  4. each one-dimensional common eigenspace, scaled so its identity-class
     coordinate is 1, is the vector of central character values mod L;
     degrees follow from the orthogonality relation, and the exact value
     chi(g) = sum_m c_m zeta_e^m is recovered by an inverse discrete
     Fourier sum over the classes of the powers g^s, which yields the
     exact root-of-unity multiplicities c_m.

Everything downstream of step 4 is exact integer / cyclotomic
arithmetic; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .cyclotomic import CyclotomicInt, euler_phi, reduction_rows
from .groups import (
    GroupHandle,
    NotNormal,
    SubgroupHandle,
    as_group,
    full_subgroup,
    is_normal,
    is_prime,
    parent_index_map,
    subgroup_from_members,
)


class ModularSplitFailure(Exception):
    """Internal: the chosen prime failed to split the class algebra."""


class NonIntegral(Exception):
    """A codegree or inner product failed an exactness assertion."""


# -- modular linear algebra (dense, deterministic pivoting) ---------------

def _inv_mod(a: int, p: int) -> int:
    return pow(a % p, p - 2, p)


def _rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = (M % p).astype(np.int64)
    nrows, ncols = A.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(A[row:, col])[0]
        if nz.size == 0:
            continue
        i = row + int(nz[0])
        if i != row:
            A[[row, i]] = A[[i, row]]
        A[row] = (A[row] * _inv_mod(int(A[row, col]), p)) % p
        factors = A[:, col].copy()
        factors[row] = 0
        A = (A - np.outer(factors, A[row])) % p
        pivots.append(col)
        row += 1
    return A, pivots


def _nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right nullspace of M over F_p."""
    n = M.shape[1]
    R, pivots = _rref(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, c in enumerate(pivots):
            basis[c, k] = (-int(R[i, f])) % p
    return basis


def _det(M: np.ndarray, p: int) -> int:
    A = (M % p).astype(np.int64)
    n = A.shape[0]
    det = 1
    for col in range(n):
        nz = np.nonzero(A[col:, col])[0]
        if nz.size == 0:
            return 0
        i = col + int(nz[0])
        if i != col:
            A[[col, i]] = A[[i, col]]
            det = -det
        det = (det * int(A[col, col])) % p
        inv = _inv_mod(int(A[col, col]), p)
        A[col] = (A[col] * inv) % p
        if col + 1 < n:
            factors = A[col + 1:, col].copy()
            A[col + 1:] = (A[col + 1:] - np.outer(factors, A[col])) % p
    return det % p


def _charpoly(A: np.ndarray, p: int) -> list[int]:
    """Monic characteristic polynomial det(xI - A), coefficients low to high."""
    d = A.shape[0]
    if d + 1 > p:
        raise ModularSplitFailure("field too small to interpolate")
    xs = list(range(d + 1))
    ys = [_det((x * np.eye(d, dtype=np.int64) - A) % p, p) for x in xs]
    # Lagrange interpolation: full product once, then synthetic division
    full = [1]
    for x in xs:
        full = _poly_mul(full, [(-x) % p, 1], p)
    coeffs = [0] * (d + 1)
    for x, y in zip(xs, ys):
        q = _poly_divmod_linear(full, x, p)
        denom = 1
        for xj in xs:
            if xj != x:
                denom = denom * (x - xj) % p
        scale = y * _inv_mod(denom, p) % p
        for i in range(d + 1):
            coeffs[i] = (coeffs[i] + scale * q[i]) % p
    if coeffs[d] != 1:
        raise ModularSplitFailure("characteristic polynomial not monic")
    return coeffs


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divmod_linear(poly: list[int], root: int, p: int) -> list[int]:
    """poly / (x - root), exact (root is a root of poly)."""
    n = len(poly) - 1
    q = [0] * n
    carry = 0
    for i in range(n - 1, -1, -1):
        carry = (poly[i + 1] + carry * root) % p
        q[i] = carry
    return q


def _poly_roots(coeffs: list[int], p: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        vals = (vals * xs + c) % p
    return [int(x) for x in np.nonzero(vals == 0)[0]]


# -- prime and root selection --------------------------------------------

def _primitive_root(p: int) -> int:
    from .groups import prime_factors
    factors = prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
        g += 1


def _prime_candidates(order: int, exponent: int, r: int):
    lower = max(2 * isqrt(order) + 1, r, 3)
    ell = exponent + 1
    while True:
        if ell > lower and is_prime(ell) and order % ell:
            yield ell
        ell += exponent if exponent > 1 else 1


# -- character table -------------------------------------------------------

@dataclass(eq=False)
class CharacterTable:
    """Exact irreducible characters of ``group`` over its conjugacy classes.

    Row 0 is the principal character; rows are sorted by degree and then
    by canonical value order.  Values are CyclotomicInt with conductor
    equal to the group exponent.  ``coeff_tensor[i, j, m]`` holds the
    multiplicity of zeta_e^m in chi_i(g_j) before canonical reduction
    (entries are the nonnegative eigenvalue multiplicities, summing to
    the degree); the fast exactness checks work on this tensor.
    """

    group: GroupHandle
    exponent: int
    degrees: tuple[int, ...]
    values: tuple[tuple[CyclotomicInt, ...], ...]
    kernels: tuple[SubgroupHandle, ...]
    coeff_tensor: np.ndarray
    prime: int

    @property
    def num_rows(self) -> int:
        return len(self.degrees)

    def value(self, row: int, class_index: int) -> CyclotomicInt:
        return self.values[row][class_index]

    def value_at_element(self, row: int, element_index: int) -> CyclotomicInt:
        return self.values[row][int(self.group.class_of[element_index])]

    def linear_row_count(self) -> int:
        return sum(1 for d in self.degrees if d == 1)


def class_structure_matrices(G: GroupHandle) -> np.ndarray:
    """A[i, j, k] = #{(x, y) in C_i x C_j : x*y = rep_k}, by product counting."""
    r = len(G.classes)
    A = np.zeros((r, r, r), dtype=np.int64)
    inv = G.inverse_of
    cls = G.class_of
    for k, ck in enumerate(G.classes):
        gk = ck.representative
        for x in range(G.order):
            y = G.mul_idx(int(inv[x]), gk)
            A[cls[x], cls[y], k] += 1
    return A


def _split_common_eigenvectors(mats: list[np.ndarray], order_key: list[int],
                               r: int, p: int) -> list[np.ndarray]:
    """One-dimensional common eigenspaces of the commuting matrices mod p."""
    spaces: list[np.ndarray] = [np.eye(r, dtype=np.int64)]
    for mi in order_key:
        if all(B.shape[1] == 1 for B in spaces):
            break
        M = mats[mi] % p
        new_spaces: list[np.ndarray] = []
        for B in spaces:
            d = B.shape[1]
            if d == 1:
                new_spaces.append(B)
                continue
            MB = (M @ B) % p
            aug = np.concatenate([B, MB], axis=1)
            R, pivots = _rref(aug, p)
            if pivots[:d] != list(range(d)) or len(pivots) != d:
                raise ModularSplitFailure("subspace not invariant")
            A = R[:d, d:]
            roots = _poly_roots(_charpoly(A, p), p)
            total = 0
            for lam in sorted(roots):
                NB = _nullspace((A - lam * np.eye(d, dtype=np.int64)) % p, p)
                if NB.shape[1] == 0:
                    continue
                new_spaces.append((B @ NB) % p)
                total += NB.shape[1]
            if total != d:
                raise ModularSplitFailure("class matrix not diagonalizable mod p")
        spaces = new_spaces
    if any(B.shape[1] != 1 for B in spaces) or len(spaces) != r:
        raise ModularSplitFailure("common eigenspaces did not fully split")
    return [B[:, 0] % p for B in spaces]


def _power_class_map(G: GroupHandle, e: int) -> np.ndarray:
    """pm[j, s] = class index of rep_j ** s."""
    r = len(G.classes)
    pm = np.zeros((r, e), dtype=np.int64)
    for j, c in enumerate(G.classes):
        idx = 0
        for s in range(e):
            pm[j, s] = G.class_of[idx]
            idx = G.mul_idx(idx, c.representative)
    return pm


def _dixon(G: GroupHandle, p: int) -> CharacterTable:
    r = len(G.classes)
    e = G.exponent()
    n = G.order
    sizes = np.array([c.size for c in G.classes], dtype=np.int64)
    A = class_structure_matrices(G)
    mats = [A[i] for i in range(r)]
    matrix_order = sorted(range(1, r), key=lambda i: (int(sizes[i]), i))

    vecs = _split_common_eigenvectors(mats, matrix_order, r, p)

    inv_class = np.array([int(G.class_of[G.inv_idx(c.representative)])
                          for c in G.classes], dtype=np.int64)
    inv_sizes = np.array([_inv_mod(int(s), p) for s in sizes], dtype=np.int64)

    degrees: list[int] = []
    fvals: list[np.ndarray] = []
    max_d = isqrt(n)
    for w in vecs:
        if w[0] % p == 0:
            raise ModularSplitFailure("eigenvector vanishes on the identity class")
        w = (w * _inv_mod(int(w[0]), p)) % p
        t = int(np.sum(w * w[inv_class] % p * inv_sizes % p) % p)
        if t == 0:
            raise ModularSplitFailure("degree denominator vanished")
        d2 = n * _inv_mod(t, p) % p
        ds = [d for d in range(1, max_d + 1) if d * d % p == d2]
        if len(ds) != 1:
            raise ModularSplitFailure("degree not uniquely recoverable")
        d = ds[0]
        degrees.append(d)
        fvals.append(d * w % p * inv_sizes % p)
    if sum(d * d for d in degrees) != n:
        raise ModularSplitFailure("degree squares do not sum to the group order")

    # lift each modular value to exact root-of-unity multiplicities
    z = pow(_primitive_root(p), (p - 1) // e, p)
    zpow = np.array([pow(z, k, p) for k in range(e)], dtype=np.int64)
    idx = (-(np.arange(e)[:, None] * np.arange(e)[None, :])) % e
    Zneg = zpow[idx]
    inv_e = _inv_mod(e, p)
    pm = _power_class_map(G, e)

    tensor = np.zeros((r, r, e), dtype=np.int64)
    for i in range(r):
        F = fvals[i][pm]                      # (r, e): chi(g_j^s) mod p
        C = (F @ Zneg) % p * inv_e % p        # (r, e): multiplicities of zeta^m
        if C.max() > degrees[i] or not np.all(C.sum(axis=1) == degrees[i]):
            raise ModularSplitFailure("lifted multiplicities inconsistent")
        tensor[i] = C

    values = [tuple(CyclotomicInt.from_exponents(e, tensor[i, j]) for j in range(r))
              for i in range(r)]

    # deterministic row order: principal first, then by (degree, canonical values)
    principal = [i for i in range(r)
                 if degrees[i] == 1 and all(v == 1 for v in values[i])]
    assert len(principal) == 1
    rest = sorted((i for i in range(r) if i != principal[0]),
                  key=lambda i: (degrees[i], [values[i][j].sort_key() for j in range(r)]))
    perm = principal + rest

    degrees_s = tuple(degrees[i] for i in perm)
    values_s = tuple(tuple(values[i]) for i in perm)
    tensor_s = tensor[perm]

    kernels = []
    for i in range(len(perm)):
        members: list[int] = []
        for j, c in enumerate(G.classes):
            if values_s[i][j] == degrees_s[i]:
                members.extend(c.member_indices)
        ker = subgroup_from_members(G, members)
        assert is_normal(G, ker), "character kernel is not normal"
        kernels.append(ker)

    return CharacterTable(group=G, exponent=e, degrees=degrees_s, values=values_s,
                          kernels=tuple(kernels), coeff_tensor=tensor_s, prime=p)


def character_table(G: GroupHandle) -> CharacterTable:
    """The exact character table, satisfying all invariants checked below."""
    if G.order == 1:
        one = CyclotomicInt.integer(1, 1)
        return CharacterTable(group=G, exponent=1, degrees=(1,), values=((one,),),
                              kernels=(full_subgroup(G),),
                              coeff_tensor=np.ones((1, 1, 1), dtype=np.int64), prime=2)
    last_error: Exception | None = None
    for attempt, p in enumerate(_prime_candidates(G.order, G.exponent(), len(G.classes))):
        if attempt >= 8:
            break
        try:
            return _dixon(G, p)
        except ModularSplitFailure as exc:
            last_error = exc
    raise ModularSplitFailure(f"no usable prime found: {last_error}")


def character_kernel(T: CharacterTable, row: int) -> SubgroupHandle:
    """Union of classes where chi equals its degree (a normal subgroup)."""
    return T.kernels[row]


def inertia_group(G: GroupHandle, N: SubgroupHandle, T_N: CharacterTable,
                  row: int) -> SubgroupHandle:
    """Stabilizer in G of the given character of a normal subgroup N.

    g fixes lambda iff lambda(g^-1 x g) = lambda(x) for every class
    representative x of N; the result always contains N.
    """
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    H = as_group(N)
    if T_N.group is not H:
        raise ValueError("T_N must be the character table of as_group(N)")
    pmap = parent_index_map(N)
    back = {pidx: i for i, pidx in enumerate(pmap)}
    reps = [c.representative for c in H.classes]
    lam = [T_N.values[row][j] for j in range(len(reps))]
    members = []
    for g in range(G.order):
        ginv = G.inv_idx(g)
        ok = True
        for j, x in enumerate(reps):
            y = G.mul_idx(G.mul_idx(ginv, pmap[x]), g)
            if lam[int(H.class_of[back[y]])] != lam[j]:
                ok = False
                break
        if ok:
            members.append(g)
    I = subgroup_from_members(G, members)
    assert all(m in I.member_set for m in N.member_indices)
    return I


# -- exact verification ----------------------------------------------------

def _verify_modulus(e: int, bound: int) -> int:
    """Smallest prime P = 1 (mod e) with P > 2*bound, for exact convolution."""
    P = (2 * bound // e + 1) * e + 1 if e > 1 else 2 * bound + 1
    while True:
        if P > 2 * bound and is_prime(P):
            return P
        P += e if e > 1 else 1


def _ntt_tables(e: int, P: int) -> tuple[np.ndarray, np.ndarray, int]:
    z = pow(_primitive_root(P), (P - 1) // e, P)
    zpow = np.array([pow(z, k, P) for k in range(e)], dtype=np.int64)
    idx = (np.arange(e)[:, None] * np.arange(e)[None, :]) % e
    W = zpow[idx]
    Winv = zpow[(-idx) % e]
    return W, Winv, _inv_mod(e, P)


def _chunked_pair_sum(A: np.ndarray, B: np.ndarray, spec: str, P: int) -> np.ndarray:
    """einsum over the shared middle axis with modular reduction between chunks."""
    r = A.shape[1] if spec == "ijt,kjt->ikt" else A.shape[0]
    chunk = max(1, (1 << 62) // (P * P) // max(r, 1))
    chunk = max(1, min(chunk, r))
    out = None
    if spec == "ijt,kjt->ikt":
        for s in range(0, r, chunk):
            part = np.einsum("ijt,kjt->ikt", A[:, s:s + chunk], B[:, s:s + chunk]) % P
            out = part if out is None else (out + part) % P
    else:  # "ijt,ilt->jlt"
        for s in range(0, r, chunk):
            part = np.einsum("ijt,ilt->jlt", A[s:s + chunk], B[s:s + chunk]) % P
            out = part if out is None else (out + part) % P
    return out


def _reduce_and_compare(S: np.ndarray, P: int, e: int, bound: int,
                        expected: np.ndarray) -> bool:
    """Center residues, reduce mod Phi_e, compare with expected integers."""
    S = S % P
    S = np.where(S > P // 2, S - P, S)
    if np.abs(S).max() > bound:
        raise NonIntegral("certified bound exceeded in exact check")
    phi = euler_phi(e)
    RED = np.array(reduction_rows(e)[:e], dtype=np.int64)  # (e, phi)
    maxred = max(1, int(np.abs(RED).max()))
    if bound * maxred * e < (1 << 62):
        red = S @ RED
    else:
        red = S.astype(object) @ RED.astype(object)
    target = np.zeros_like(red)
    target[..., 0] = expected
    return bool(np.array_equal(red, target))


def check_row_orthogonality(T: CharacterTable) -> bool:
    """sum_k |C_k| chi_i(g_k) conj(chi_j(g_k)) == |G| delta_ij, exactly."""
    G, e, r = T.group, T.exponent, T.num_rows
    sizes = np.array([c.size for c in G.classes], dtype=np.int64)
    bound = G.order * G.order
    P = _verify_modulus(e, bound)
    W, Winv, inv_e = _ntt_tables(e, P)
    That = T.coeff_tensor.reshape(r * r, e) @ W % P
    That = That.reshape(r, r, e)
    rev = (-np.arange(e)) % e
    A = That * sizes[None, :, None] % P
    B = That[:, :, rev]
    Shat = _chunked_pair_sum(A, B, "ijt,kjt->ikt", P)
    S = (Shat.reshape(r * r, e) @ Winv) % P * inv_e % P
    expected = (np.eye(r, dtype=np.int64) * G.order).reshape(r * r)
    return _reduce_and_compare(S.reshape(r * r, e), P, e, bound, expected)


def check_column_orthogonality(T: CharacterTable) -> bool:
    """sum_i chi_i(g_k) conj(chi_i(g_l)) == delta_kl |C_G(g_k)|, exactly."""
    G, e, r = T.group, T.exponent, T.num_rows
    sizes = np.array([c.size for c in G.classes], dtype=np.int64)
    bound = G.order * G.order
    P = _verify_modulus(e, bound)
    W, Winv, inv_e = _ntt_tables(e, P)
    That = T.coeff_tensor.reshape(r * r, e) @ W % P
    That = That.reshape(r, r, e)
    rev = (-np.arange(e)) % e
    B = That[:, :, rev]
    Shat = _chunked_pair_sum(That, B, "ijt,ilt->jlt", P)
    S = (Shat.reshape(r * r, e) @ Winv) % P * inv_e % P
    cents = G.order // sizes
    expected = (np.diag(cents)).reshape(r * r)
    return _reduce_and_compare(S.reshape(r * r, e), P, e, bound, expected)


def check_degree_squares(T: CharacterTable) -> bool:
    return sum(d * d for d in T.degrees) == T.group.order


def restriction_inner_product(T: CharacterTable, M: SubgroupHandle,
                              T_M: CharacterTable, row_g: int, row_m: int) -> int:
    """<chi|_M, psi> over exact cyclotomic arithmetic; always a nonnegative integer."""
    G = T.group
    H = as_group(M)
    if T_M.group is not H:
        raise ValueError("T_M must be the character table of as_group(M)")
    pmap = parent_index_map(M)
    e = T.exponent
    eM = T_M.exponent
    L = e * eM // __import__("math").gcd(e, eM)
    acc = CyclotomicInt.integer(L, 0)
    for j, c in enumerate(H.classes):
        x_parent = pmap[c.representative]
        chi_val = T.values[row_g][int(G.class_of[x_parent])].raise_conductor(L)
        psi_val = T_M.values[row_m][j].conj().raise_conductor(L)
        acc = acc + chi_val * psi_val * c.size
    total = acc.as_int()
    if total is None or total % M.order:
        raise NonIntegral("inner product of characters is not a nonnegative integer")
    value = total // M.order
    if value < 0:
        raise NonIntegral("negative character inner product")
    return value
