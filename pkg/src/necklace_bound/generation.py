"""Lexicographic generation of fixed-content prenecklaces, necklaces and Lyndon words.

Words are produced by depth-first extension of prenecklaces: a prefix
``a_1 ... a_{t-1}`` with ``p = lyn`` may be extended by any ``b >= a_{t-p}``
whose remaining count is positive, and lyn becomes ``p`` if ``b == a_{t-p}``
and ``t`` otherwise.  At full length, ``p | n`` marks a necklace and
``p == n`` a Lyndon word.  The search runs in :mod:`._kernels` and is pulled
lazily in blocks.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence

import numpy as np

from . import _kernels
from .core import InputError, Word, is_lyndon, is_necklace
from .counting import count_lyndon

__all__ = [
    "GenKind",
    "Stability",
    "generate",
    "generate_blocks",
    "classify",
    "partition_necklaces",
    "count_stable",
]

DEFAULT_BLOCK = 4096


class GenKind(enum.Enum):
    PRENECKLACE = _kernels.KIND_PRENECKLACE
    NECKLACE = _kernels.KIND_NECKLACE
    LYNDON = _kernels.KIND_LYNDON

    @classmethod
    def parse(cls, name: str | GenKind) -> GenKind:
        if isinstance(name, cls):
            return name
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise InputError(f"unknown kind {name!r}") from None


class Stability(enum.Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"


def _content_array(c: Sequence[int]) -> np.ndarray:
    if len(c) < 2:
        raise InputError("content needs k >= 2 entries")
    arr = np.asarray(c, dtype=np.int64)
    if (arr < 0).any():
        raise InputError("content entries must be non-negative")
    if arr.sum() < 1:
        raise InputError("content must have total length n >= 1")
    return arr


def generate_blocks(
    c: Sequence[int], kind: GenKind | str, block: int = DEFAULT_BLOCK, *, jit: bool = True
) -> Iterator[np.ndarray]:
    """Yield 2-D int64 arrays whose rows are consecutive generated words.

    ``jit=False`` runs the undecorated kernel even when numba is active.
    """
    kind = GenKind.parse(kind)
    arr = _content_array(c)
    state = _kernels.init_state(arr)
    fill = _kernels.fill_block if jit else _kernels.fill_block.py_func
    out = np.empty((block, int(arr.sum())), dtype=np.int64)
    pos = state[-1]
    while pos[0] > 0:
        m = fill(*state, kind.value, out)
        if m:
            yield out[:m].copy()


def generate(c: Sequence[int], kind: GenKind | str, *, jit: bool = True) -> Iterator[Word]:
    """Stream the words of the requested set in increasing lexicographic order."""
    for blk in generate_blocks(c, kind, jit=jit):
        yield from map(tuple, blk.tolist())


def classify(w: Sequence[int]) -> Stability:
    """A necklace is stable when dropping its last symbol leaves a Lyndon word."""
    if len(w) < 2:
        raise InputError("classify needs a word of length >= 2")
    if not is_necklace(w):
        raise InputError(f"{tuple(w)} is not a necklace")
    return Stability.STABLE if is_lyndon(w[:-1]) else Stability.UNSTABLE


def partition_necklaces(c: Sequence[int]) -> tuple[list[Word], list[Word]]:
    """Split the necklaces with content ``c`` into (stable, unstable) lists."""
    if any(x < 1 for x in c):
        raise InputError("partition needs every content entry >= 1")
    stable: list[Word] = []
    unstable: list[Word] = []
    n = sum(c)
    for blk in generate_blocks(c, GenKind.NECKLACE):
        is_stable = _kernels.prefix_lyn_block(blk) == n - 1
        for w, s in zip(blk.tolist(), is_stable.tolist()):
            (stable if s else unstable).append(tuple(w))
    return stable, unstable


def count_stable(c: Sequence[int]) -> int:
    """Predicted number of stable necklaces: Lyndon counts with one non-zero
    symbol removed, summed over symbols ``1 .. k-1`` (symbol 0 excluded)."""
    if any(x < 1 for x in c):
        raise InputError("needs every content entry >= 1")
    total = 0
    for i in range(1, len(c)):
        d = list(c)
        d[i] -= 1
        total += count_lyndon(d)
    return total
