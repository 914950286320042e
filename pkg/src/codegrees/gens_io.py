"""Reading and writing permutation generator files.

Format: first non-comment line is ``degree <n>``; every following
non-comment line is one permutation in disjoint-cycle notation with
1-based points, e.g. ``(1,2)(3,4)``; the identity is written ``()``.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import os
from .perm import Permutation, cycle_string, parse_cycle_string


class GensFormatError(ValueError):
    pass


def parse_generators(text: str) -> list[Permutation]:
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GensFormatError(f"line {lineno}: expected 'degree <n>', got {raw!r}")
            degree = int(parts[1])
            if degree < 1:
                raise GensFormatError(f"line {lineno}: degree must be positive")
            continue
        try:
            gens.append(parse_cycle_string(line, degree))
        except ValueError as exc:
            raise GensFormatError(f"line {lineno}: {exc}") from exc
    if degree is None:
        raise GensFormatError("missing 'degree <n>' header")
    if not gens:
        raise GensFormatError("no generators in file")
    return gens


def read_generators(path: str | os.PathLike) -> list[Permutation]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generators(fh.read())


def format_generators(gens: list[Permutation], comment: str | None = None) -> str:
    if not gens:
        raise ValueError("no generators to write")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators have mixed degrees")
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"degree {degree}")
    lines.extend(cycle_string(g) for g in gens)
    return "\n".join(lines) + "\n"


def write_generators(path: str | os.PathLike, gens: list[Permutation], comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_generators(gens, comment))
