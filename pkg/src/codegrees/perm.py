"""Permutations of {0, ..., n-1} with disjoint-cycle notation helpers."""

from __future__ import annotations

from math import lcm


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as the tuple of images.

    The product ``p * q`` is the composition "apply q first, then p", so
    ``(p * q)(x) == p(q(x))``.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        seen = [False] * n
        for i in imgs:
            if not 0 <= i < n or seen[i]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {imgs}")
            seen[i] = True
        self.images = imgs

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles of 0-based points."""
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if images[a] != a:
                    raise ValueError("cycles are not disjoint")
                images[a] = b
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()), 1)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.images})"

    def __str__(self):
        return cycle_string(self)


def cycle_string(p: Permutation) -> str:
    """Disjoint-cycle notation with 1-based points; identity prints as ``()``."""
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycs)


def parse_cycle_string(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation, e.g. ``(1,2)(3,4)`` or ``()``."""
    s = text.strip().replace(" ", "")
    if s == "()":
        return Permutation.identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        if not chunk:
            raise ValueError(f"empty cycle in {text!r}")
        points = []
        for tok in chunk.split(","):
            v = int(tok)
            if not 1 <= v <= degree:
                raise ValueError(f"point {v} out of range 1..{degree}")
            points.append(v - 1)
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {chunk!r}")
        cycles.append(points)
    return Permutation.from_cycles(degree, cycles)
