"""Exact arithmetic in rings of cyclotomic integers Z[zeta_e].

Values are stored in canonical form: an integer polynomial in zeta_e of
degree < phi(e), i.e. reduced modulo the e-th cyclotomic polynomial.
Equality of canonical forms decides equality of values, and a value is a
rational integer exactly when all non-constant coefficients vanish.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials (coefficients low to high), exact division."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        quot[k - dd] = q
        for i, dc in enumerate(den):
            num[k - dd + i] -= q * dc
    if any(num):
        raise ArithmeticError("non-zero remainder in exact division")
    return quot


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {1: (-1, 1)}


def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, low to high, monic."""
    if e in _CYCLO_CACHE:
        return _CYCLO_CACHE[e]
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1  # x^e - 1
    poly = num
    for d in divisors(e):
        if d < e:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    out = tuple(poly)
    _CYCLO_CACHE[e] = out
    return out


class _Ring:
    """Per-conductor tables: phi(e) and the rows x^k mod Phi_e."""

    __slots__ = ("e", "phi", "cyclo", "rows")

    def __init__(self, e: int):
        self.e = e
        self.cyclo = cyclotomic_polynomial(e)
        self.phi = len(self.cyclo) - 1
        limit = max(e - 1, 2 * self.phi - 2)
        rows: list[tuple[int, ...]] = []
        for k in range(self.phi):
            rows.append(tuple(1 if i == k else 0 for i in range(self.phi)))
        for k in range(self.phi, limit + 1):
            prev = rows[k - 1]
            lead = prev[-1]
            shifted = (0,) + prev[:-1]
            rows.append(tuple(shifted[i] - lead * self.cyclo[i] for i in range(self.phi)))
        self.rows = rows


_RING_CACHE: dict[int, _Ring] = {}


def _ring(e: int) -> _Ring:
    r = _RING_CACHE.get(e)
    if r is None:
        r = _Ring(e)
        _RING_CACHE[e] = r
    return r


def reduction_rows(e: int) -> list[tuple[int, ...]]:
    """Rows x^k mod Phi_e for k = 0..max(e-1, 2*phi-2); used by fast checks."""
    return _ring(e).rows


def euler_phi(e: int) -> int:
    return _ring(e).phi


class CyclotomicInt:
    """An element of Z[zeta_e] in canonical reduced form."""

    __slots__ = ("e", "c")

    def __init__(self, e: int, canonical: tuple[int, ...]):
        # canonical must already be reduced; use the constructors below.
        self.e = e
        self.c = canonical

    # -- constructors -------------------------------------------------

    @staticmethod
    def integer(e: int, n: int) -> "CyclotomicInt":
        phi = _ring(e).phi
        return CyclotomicInt(e, (n,) + (0,) * (phi - 1))

    @staticmethod
    def zeta(e: int, k: int = 1) -> "CyclotomicInt":
        return CyclotomicInt.from_exponents(e, {k: 1})

    @staticmethod
    def from_exponents(e: int, coeffs) -> "CyclotomicInt":
        """Build sum of coeffs[k] * zeta_e^k; coeffs is a mapping or a sequence."""
        ring = _ring(e)
        acc = [0] * ring.phi
        items: Iterable[tuple[int, int]]
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        for k, a in items:
            if a == 0:
                continue
            row = ring.rows[k % e]
            for i in range(ring.phi):
                acc[i] += a * row[i]
        return CyclotomicInt(e, tuple(acc))

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "CyclotomicInt":
        if isinstance(other, CyclotomicInt):
            if other.e != self.e:
                raise ValueError(f"conductor mismatch: {self.e} vs {other.e}")
            return other
        if isinstance(other, int):
            return CyclotomicInt.integer(self.e, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CyclotomicInt(self.e, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.e, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CyclotomicInt(self.e, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        ring = _ring(self.e)
        phi = ring.phi
        conv = [0] * (2 * phi - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                if b:
                    conv[i + j] += a * b
        acc = list(conv[:phi]) + [0] * max(0, phi - len(conv))
        for k in range(phi, len(conv)):
            a = conv[k]
            if a == 0:
                continue
            row = ring.rows[k]
            for i in range(phi):
                acc[i] += a * row[i]
        return CyclotomicInt(self.e, tuple(acc[:phi]))

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicInt":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return CyclotomicInt.from_exponents(
            self.e, {(-k) % self.e: a for k, a in enumerate(self.c) if a}
        )

    def raise_conductor(self, m: int) -> "CyclotomicInt":
        if m % self.e:
            raise ValueError("new conductor must be a multiple of the old one")
        step = m // self.e
        return CyclotomicInt.from_exponents(
            m, {k * step: a for k, a in enumerate(self.c) if a}
        )

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def as_int(self) -> int | None:
        """The value as a rational integer, or None if it is not one."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.as_int() == other
        if isinstance(other, CyclotomicInt):
            return self.e == other.e and self.c == other.c
        return NotImplemented

    def __hash__(self):
        n = self.as_int()
        if n is not None:
            return hash(n)
        return hash((self.e, self.c))

    def sort_key(self) -> tuple[int, ...]:
        return self.c

    def __repr__(self):
        return f"CyclotomicInt({self.e}, {self.c})"

    def __str__(self):
        n = self.as_int()
        if n is not None:
            return str(n)
        parts = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            if k == 0:
                parts.append(str(a))
                continue
            z = f"z{self.e}" if k == 1 else f"z{self.e}^{k}"
            if a == 1:
                parts.append(z)
            elif a == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{a}*{z}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
