"""Array kernels for fixed-content generation.

The depth-first search over prenecklaces is written iteratively with its whole
state in small integer arrays, so a call can stop when the output block is
full and a later call resumes exactly where it left off.

State layout (``n`` = word length, ``k`` = alphabet size):

``a``     int64[n + 1]  ``a[1..n]`` is the current prefix, ``a[0]`` the first symbol
``rem``   int64[k]      symbols still to place
``ps``    int64[n + 2]  ``ps[t]`` is lyn of ``a[1..t-1]``
``cur``   int64[n + 2]  symbol currently placed at depth ``t``, -1 if none
``pos``   int64[1]      current depth ``t``; 0 once the search is exhausted
"""

from __future__ import annotations

import numpy as np

from ._accel import njit

KIND_PRENECKLACE = 0
KIND_NECKLACE = 1
KIND_LYNDON = 2


def init_state(content: np.ndarray):
    """Allocate search state for ``content`` (int64 array, total >= 1)."""
    k = content.shape[0]
    n = int(content.sum())
    a = np.zeros(n + 1, dtype=np.int64)
    rem = content.astype(np.int64).copy()
    ps = np.ones(n + 2, dtype=np.int64)
    cur = np.full(n + 2, -1, dtype=np.int64)
    pos = np.ones(1, dtype=np.int64)
    first = 0
    while first < k and rem[first] == 0:
        first += 1
    # every later symbol of a prenecklace is >= its first one
    a[0] = first
    return a, rem, ps, cur, pos


@njit
def fill_block(a, rem, ps, cur, pos, kind, out):
    """Write up to ``out.shape[0]`` accepted words into ``out``; return how many."""
    n = a.shape[0] - 1
    k = rem.shape[0]
    cap = out.shape[0]
    count = 0
    t = pos[0]
    while t > 0:
        if t > n:
            p = ps[t]
            if kind == 0 or (kind == 1 and n % p == 0) or (kind == 2 and p == n):
                for s in range(n):
                    out[count, s] = a[s + 1]
                count += 1
            t -= 1
            if count == cap:
                break
            continue
        p = ps[t]
        ref = a[t - p]
        if cur[t] >= 0:
            rem[cur[t]] += 1
            b = cur[t] + 1
        else:
            b = ref
        hi = k - 1
        if t == 1:
            hi = a[0]
        while b <= hi and rem[b] == 0:
            b += 1
        if b > hi:
            cur[t] = -1
            t -= 1
            continue
        cur[t] = b
        a[t] = b
        rem[b] -= 1
        if b == ref:
            ps[t + 1] = p
        else:
            ps[t + 1] = t
        cur[t + 1] = -1
        t += 1
    pos[0] = t
    return count


@njit
def prefix_lyn_block(words):
    """lyn of ``w[:-1]`` for every row ``w`` of ``words`` (rows are prenecklaces)."""
    m, n = words.shape
    out = np.empty(m, dtype=np.int64)
    for r in range(m):
        p = 1
        for t in range(1, n - 1):
            if words[r, t] != words[r, t - p]:
                p = t + 1
        out[r] = p
    return out
