"""Brute-force reference sets, built straight from the definitions.

Nothing here reuses :mod:`.core` or the generator: the point is to catch bugs
in them.  Every multiset permutation of the content is materialised, encoded
as a base-``k`` integer with ``a_1`` most significant, so that for equal
lengths lexicographic order is numeric order and rotating by ``r`` is
``(x mod k^(n-r)) * k^r + x div k^(n-r)``.  Sizes are capped.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .core import InputError

DEFAULT_CAP = 14


def _check(c: Sequence[int], cap: int) -> tuple[int, int]:
    n, k = sum(c), len(c)
    if n < 1:
        raise InputError("content must have total length n >= 1")
    if n > cap:
        raise InputError(f"oracle refuses n = {n} > cap {cap}")
    if k**n >= 2**62:
        raise InputError(f"k^n too large for the integer encoding (k={k}, n={n})")
    return n, k


def word_codes(c: Sequence[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Sorted base-k codes of all words with content ``c``."""
    n, k = _check(c, cap)
    codes = np.zeros(1, dtype=np.int64)
    rem = np.asarray([c], dtype=np.int64)
    for _ in range(n):
        parts, rems = [], []
        for s in range(k):
            mask = rem[:, s] > 0
            if not mask.any():
                continue
            parts.append(codes[mask] * k + s)
            r = rem[mask].copy()
            r[:, s] -= 1
            rems.append(r)
        codes = np.concatenate(parts)
        rem = np.concatenate(rems)
    codes.sort()
    return codes


def _rotations(codes: np.ndarray, n: int, k: int):
    for r in range(1, n):
        hi = k ** (n - r)
        yield (codes % hi) * k**r + codes // hi


def necklace_codes(c: Sequence[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Codes of words no larger than any of their rotations."""
    n, k = _check(c, cap)
    codes = word_codes(c, cap)
    keep = np.ones(codes.shape, dtype=bool)
    for rot in _rotations(codes, n, k):
        keep &= codes <= rot
    return codes[keep]


def lyndon_codes(c: Sequence[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Codes of words strictly smaller than every non-trivial rotation."""
    n, k = _check(c, cap)
    codes = word_codes(c, cap)
    keep = np.ones(codes.shape, dtype=bool)
    for rot in _rotations(codes, n, k):
        keep &= codes < rot
    return codes[keep]


def prenecklace_codes(c: Sequence[int], cap: int = DEFAULT_CAP) -> np.ndarray:
    """Codes of words that are prefixes of some necklace.

    Uses the suffix test: ``w`` is a prefix of a necklace iff every proper
    suffix of ``w`` is at least the prefix of ``w`` of the same length.
    """
    n, k = _check(c, cap)
    codes = word_codes(c, cap)
    keep = np.ones(codes.shape, dtype=bool)
    for i in range(1, n):
        suffix = codes % k ** (n - i)
        prefix = codes // k**i
        keep &= suffix >= prefix
    return codes[keep]


def decode(codes: np.ndarray, n: int, k: int) -> set[tuple[int, ...]]:
    digits = np.empty((codes.shape[0], n), dtype=np.int64)
    x = codes.copy()
    for t in range(n - 1, -1, -1):
        digits[:, t] = x % k
        x //= k
    return set(map(tuple, digits.tolist()))


def encode(words: np.ndarray, k: int) -> np.ndarray:
    """Codes for the rows of a 2-D symbol array (the inverse of :func:`decode`)."""
    n = words.shape[1]
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return words.astype(np.int64) @ weights


def brute_words(c: Sequence[int], cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """All words with content ``c``."""
    return decode(word_codes(c, cap), sum(c), len(c))


def brute_necklaces(c: Sequence[int], cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    return decode(necklace_codes(c, cap), sum(c), len(c))


def brute_lyndon(c: Sequence[int], cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    return decode(lyndon_codes(c, cap), sum(c), len(c))


def brute_prenecklaces(c: Sequence[int], cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    return decode(prenecklace_codes(c, cap), sum(c), len(c))
