#!/usr/bin/env python3
"""Regenerate the committed generator files in src/codegrees/data/.

All three groups live inside the affine semilinear group of the field
with 16 elements, acting faithfully on its 16 points:

  two_frob_160.gens  F16 x| <mult by a^3, x -> x^4>      (order 160)
  two_frob_320.gens  F16 x| <mult by a^3, x -> x^2>      (order 320)
  sg480_1188.gens    F16 x| <mult by a,   x -> x^4>      (order 480)

F16 = F2[a] / (a^4 + a + 1); points are 0..15 read as bit vectors, so
point 2 is the primitive element a.  The order-480 group is the one
whose non-linear codegree set is {5, 15, 32} while the full codegree
set adds {2, 3, 6}; the test suite validates the file against exactly
those sets, so a wrong export fails loudly.

Run from the repository root:  python3 scripts/make_gens.py
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from codegrees.gens_io import write_generators  # noqa: E402
from codegrees.perm import Permutation  # noqa: E402


def gf16_mul(x: int, y: int) -> int:
    r = 0
    for bit in range(4):
        if (y >> bit) & 1:
            r ^= x << bit
    for k in (7, 6, 5, 4):
        if (r >> k) & 1:
            r ^= 0b10011 << (k - 4)
    return r


def translation() -> Permutation:
    return Permutation(tuple(x ^ 1 for x in range(16)))


def multiplication(c: int) -> Permutation:
    return Permutation(tuple(gf16_mul(c, x) for x in range(16)))


def frobenius_power(e: int) -> Permutation:
    def power(x: int, n: int) -> int:
        r = 1
        for _ in range(n):
            r = gf16_mul(r, x)
        return r

    return Permutation(tuple(power(x, e) for x in range(16)))


def main() -> None:
    data_dir = os.path.join(os.path.dirname(__file__), "..", "src", "codegrees", "data")
    os.makedirs(data_dir, exist_ok=True)
    t = translation()
    files = {
        "two_frob_160.gens": (
            [t, multiplication(8), frobenius_power(4)],
            "order 160: translations of F16, multiplication by a^3, x -> x^4",
        ),
        "two_frob_320.gens": (
            [t, multiplication(8), frobenius_power(2)],
            "order 320: translations of F16, multiplication by a^3, x -> x^2",
        ),
        "sg480_1188.gens": (
            [t, multiplication(2), frobenius_power(4)],
            "order 480: translations of F16, multiplication by a, x -> x^4",
        ),
    }
    for fname, (gens, comment) in files.items():
        path = os.path.join(data_dir, fname)
        write_generators(path, gens, comment=comment)
        print("wrote", os.path.normpath(path))


if __name__ == "__main__":
    main()
