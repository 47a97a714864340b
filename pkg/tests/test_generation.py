import os
import subprocess
import sys

import numpy as np
import pytest

from necklace_bound import _kernels
from necklace_bound.core import InputError, is_lyndon, is_necklace, parse_word
from necklace_bound.counting import count_lyndon, count_necklaces
from necklace_bound.generation import (
    GenKind,
    Stability,
    classify,
    count_stable,
    generate,
    generate_blocks,
    partition_necklaces,
)
from necklace_bound.oracle import brute_lyndon, brute_necklaces, brute_prenecklaces
from necklace_bound.verify import contents


def words(*texts):
    return [parse_word(t) for t in texts]


@pytest.mark.parametrize(
    "c, kind, expected",
    [
        ((3, 3), "necklace", ["000111", "001011", "001101", "010101"]),
        ((2, 2), "lyndon", ["0011"]),
        ((1, 1, 1), "necklace", ["012", "021"]),
        ((1, 0), "lyndon", ["0"]),
        ((0, 2), "necklace", ["11"]),
        ((0, 2), "lyndon", []),
        ((2, 1), "prenecklace", ["001", "010"]),
    ],
)
def test_generate_examples(c, kind, expected):
    assert list(generate(c, kind)) == words(*expected)


def test_generate_rejects_empty_content():
    with pytest.raises(InputError):
        list(generate((0, 0), "necklace"))
    with pytest.raises(InputError):
        list(generate((1, -1), "necklace"))
    with pytest.raises(InputError):
        list(generate((1, 1), "bracelet"))


@pytest.mark.parametrize("k, max_n", [(2, 12), (3, 9), (4, 7)])
def test_generate_matches_oracle(k, max_n):
    oracles = {
        GenKind.NECKLACE: brute_necklaces,
        GenKind.LYNDON: brute_lyndon,
        GenKind.PRENECKLACE: brute_prenecklaces,
    }
    for c in contents(max_n, k):
        for kind, oracle in oracles.items():
            out = list(generate(c, kind))
            assert all(u < v for u, v in zip(out, out[1:])), (c, kind)
            assert set(out) == oracle(c), (c, kind)


@pytest.mark.parametrize("c", [(3, 3), (2, 2, 2), (4, 3, 1), (5, 0, 2)])
def test_python_kernel_matches_jit(c):
    for kind in GenKind:
        assert list(generate(c, kind, jit=False)) == list(generate(c, kind))


def test_blocks_resume_across_boundaries():
    c = (6, 6)
    whole = np.concatenate(list(generate_blocks(c, GenKind.NECKLACE)))
    for size in (1, 3, 7):
        parts = np.concatenate(list(generate_blocks(c, GenKind.NECKLACE, block=size)))
        assert np.array_equal(parts, whole)
    assert len(whole) == count_necklaces(c)


def test_stream_is_lazy():
    stream = generate((20, 20), GenKind.LYNDON)
    first = next(stream)
    assert first == (0,) * 20 + (1,) * 20


def test_prefix_lyn_kernel():
    blk = np.array([parse_word("001011"), parse_word("010101"), parse_word("001001")])
    assert _kernels.prefix_lyn_block(blk).tolist() == [5, 2, 3]


@pytest.mark.parametrize(
    "w, expected",
    [("001011", Stability.STABLE), ("0101", Stability.UNSTABLE), ("001001", Stability.UNSTABLE), ("01", Stability.STABLE)],
)
def test_classify(w, expected):
    assert classify(parse_word(w)) is expected


@pytest.mark.parametrize("w", ["0110", "0", "10"])
def test_classify_rejects(w):
    with pytest.raises(InputError):
        classify(parse_word(w))


@pytest.mark.parametrize(
    "c, stable, unstable",
    [
        # 001101 is unstable: its prefix 00110 has the smaller rotation 00011
        ((3, 3), ["000111", "001011"], ["001101", "010101"]),
        ((2, 2), ["0011"], ["0101"]),
        ((1, 1), ["01"], []),
    ],
)
def test_partition(c, stable, unstable):
    s, u = partition_necklaces(c)
    assert s == words(*stable)
    assert u == words(*unstable)


def test_partition_requires_positive_content():
    with pytest.raises(InputError):
        partition_necklaces((3, 0))


@pytest.mark.parametrize("k, max_n", [(2, 14), (3, 12), (4, 10)])
def test_stable_count_and_cover(k, max_n):
    for c in contents(max_n, k, min_count=1):
        s, u = partition_necklaces(c)
        assert len(s) == count_stable(c), c
        assert len(s) + len(u) == count_necklaces(c), c
        assert not set(s) & set(u)


def test_stable_round_trip():
    """Stable necklaces minus their last symbol are exactly the Lyndon words
    starting with 0, extended by each non-zero symbol."""
    for k in (2, 3):
        for c in contents(12 if k == 2 else 10, k, min_count=1):
            s, _ = partition_necklaces(c)
            rebuilt = set()
            for b in range(1, k):
                d = list(c)
                d[b] -= 1
                for w in generate(d, GenKind.LYNDON):
                    assert w[0] == 0
                    ext = w + (b,)
                    assert is_lyndon(ext)
                    rebuilt.add(ext)
            assert rebuilt == set(s), c
            for w in s:
                assert is_lyndon(w[:-1]) and is_necklace(w)


def test_lyndon_stream_count_matches_formula_large():
    c = (9, 9, 2)
    assert sum(len(b) for b in generate_blocks(c, GenKind.LYNDON)) == count_lyndon(c)


def test_env_flag_selects_python_kernel():
    code = (
        "import necklace_bound as nb\n"
        "from necklace_bound import _kernels\n"
        "from necklace_bound.generation import generate\n"
        "assert not nb.JIT_ENABLED\n"
        "assert _kernels.fill_block is _kernels.fill_block.py_func\n"
        "print(len(list(generate((4, 4), 'necklace'))))\n"
    )
    env = dict(os.environ, NECKLACE_BOUND_DISABLE_JIT="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "10"
