import pytest

from codegrees.gens_io import (
    GensFormatError,
    format_generators,
    parse_generators,
    read_generators,
    write_generators,
)
from codegrees.groups import build_group
from codegrees.perm import Permutation


def test_parse_basic():
    text = "# a comment\ndegree 4\n(1,2)(3,4)\n()\n(1,2,3,4)  # trailing comment\n"
    gens = parse_generators(text)
    assert [g.images for g in gens] == [(1, 0, 3, 2), (0, 1, 2, 3), (1, 2, 3, 0)]


def test_missing_header():
    with pytest.raises(GensFormatError):
        parse_generators("(1,2)\n")


def test_empty_file():
    with pytest.raises(GensFormatError):
        parse_generators("degree 3\n# nothing\n")


def test_point_out_of_range():
    with pytest.raises(GensFormatError):
        parse_generators("degree 3\n(1,4)\n")


def test_roundtrip_through_file(tmp_path):
    gens = [Permutation((1, 0, 2, 3)), Permutation((1, 2, 3, 0))]
    path = tmp_path / "s4.gens"
    write_generators(path, gens, comment="symmetric group on 4 points")
    back = read_generators(path)
    assert back == gens
    # round-trip at the group level: same order and class sizes
    G1 = build_group(gens)
    G2 = build_group(back)
    assert G1.order == G2.order
    assert sorted(c.size for c in G1.classes) == sorted(c.size for c in G2.classes)


def test_format_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        format_generators([Permutation((1, 0)), Permutation((0, 1, 2))])
