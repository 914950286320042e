import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from codegrees.constructions import build_from_spec, parse_spec_line


_SPEC_LINES = {
    "c1": "cyclic 1",
    "c2": "cyclic 2",
    "c6": "cyclic 6",
    "c9": "cyclic 9",
    "c8": "cyclic 8",
    "v4": "product (cyclic 2) (cyclic 2)",
    "s3": "symmetric 3",
    "s4": "symmetric 4",
    "s5": "symmetric 5",
    "a4": "alternating 4",
    "a5": "alternating 5",
    "d4": "dihedral 4",
    "d5": "dihedral 5",
    "d15": "dihedral 15",
    "q8": "quaternion 8",
    "q16": "quaternion 16",
    "c3xq8": "product (cyclic 3) (quaternion 8)",
    "c5xs3": "product (cyclic 5) (symmetric 3)",
    "cpk3": "cpk_q8 3 2 builtin",
    "c7c3": "semidirect 7 1 (cyclic 3) [[[2]]]",
    "f20": "semidirect 5 1 (cyclic 4) [[[2]]]",
    "g160": "file builtin:two_frob_160.gens",
    "g320": "file builtin:two_frob_320.gens",
    "sg480": "file builtin:sg480_1188.gens",
}

_cache: dict[str, object] = {}


def get_group(key: str):
    if key not in _cache:
        _cache[key] = build_from_spec(parse_spec_line(_SPEC_LINES[key]))
    return _cache[key]


def _make_fixture(key):
    @pytest.fixture(scope="session", name=key)
    def fixture():
        return get_group(key)
    return fixture


for _key in _SPEC_LINES:
    globals()[_key] = _make_fixture(_key)
