"""Words over ``{0, ..., k-1}``: ordering, rotation, and the necklace predicates.

Words are plain tuples (or any int sequence) of symbols, stored 0-based.  The
alphabet size ``k`` travels alongside a word as a separate argument wherever
it matters (content vectors, text encoding).  Positions reported to users are
1-based, so ``a_1`` is ``w[0]``.

Every predicate comes in two flavours: a definitional rotation scan
(``*_bruteforce``) and a linear single pass driven by the extension rule for
prenecklaces.  The public names use the linear pass.
"""

from __future__ import annotations

from collections.abc import Sequence

Word = tuple[int, ...]

__all__ = [
    "InputError",
    "InvariantError",
    "Word",
    "lex_compare",
    "rotate",
    "is_necklace",
    "is_lyndon",
    "is_prenecklace",
    "lyn",
    "lyn_profile",
    "is_necklace_bruteforce",
    "is_lyndon_bruteforce",
    "lyn_bruteforce",
    "content_of",
    "parse_word",
    "format_word",
    "parse_content",
]


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class InvariantError(AssertionError):
    """An internal consistency check failed; this indicates a bug."""


def _check_nonempty(w: Sequence[int]) -> None:
    if len(w) == 0:
        raise InputError("empty word")


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``.

    A proper prefix sorts before its extensions.
    """
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def rotate(w: Sequence[int], r: int) -> Word:
    """Rotate left by ``r``: ``a_{r+1} ... a_n a_1 ... a_r``."""
    n = len(w)
    if not 0 <= r < max(1, n):
        raise InputError(f"rotation offset {r} out of range for length {n}")
    w = tuple(w)
    return w[r:] + w[:r]


# -- definitional versions ---------------------------------------------------


def is_necklace_bruteforce(w: Sequence[int]) -> bool:
    _check_nonempty(w)
    w = tuple(w)
    return all(w <= rotate(w, r) for r in range(1, len(w)))


def is_lyndon_bruteforce(w: Sequence[int]) -> bool:
    _check_nonempty(w)
    w = tuple(w)
    return all(w < rotate(w, r) for r in range(1, len(w)))


def lyn_bruteforce(w: Sequence[int]) -> int:
    _check_nonempty(w)
    w = tuple(w)
    return max(p for p in range(1, len(w) + 1) if is_lyndon_bruteforce(w[:p]))


# -- linear versions ----------------------------------------------------------


def _scan(w: Sequence[int]) -> tuple[int, int]:
    """Run the prenecklace extension rule over ``w``.

    Returns ``(m, p)`` where ``a_1 ... a_m`` is the longest prenecklace prefix
    and ``p = lyn(a_1 ... a_m)``.
    """
    p = 1
    for t in range(1, len(w)):
        b, ref = w[t], w[t - p]
        if b < ref:
            return t, p
        if b > ref:
            p = t + 1
    return len(w), p


def lyn(w: Sequence[int]) -> int:
    """Length of the longest prefix of ``w`` that is a Lyndon word.

    Any Lyndon prefix is a prenecklace, so the answer is the ``lyn`` value of
    the longest prenecklace prefix, which the incremental scan tracks.
    """
    _check_nonempty(w)
    return _scan(w)[1]


def lyn_profile(w: Sequence[int]) -> list[int]:
    """``lyn`` of every prefix ``a_1 ... a_t`` of a prenecklace, for t = 1..n."""
    _check_nonempty(w)
    out = [1]
    p = 1
    for t in range(1, len(w)):
        b, ref = w[t], w[t - p]
        if b < ref:
            raise InputError("not a prenecklace")
        if b > ref:
            p = t + 1
        out.append(p)
    return out


def is_prenecklace(w: Sequence[int]) -> bool:
    _check_nonempty(w)
    return _scan(w)[0] == len(w)


def is_necklace(w: Sequence[int]) -> bool:
    _check_nonempty(w)
    m, p = _scan(w)
    return m == len(w) and m % p == 0


def is_lyndon(w: Sequence[int]) -> bool:
    _check_nonempty(w)
    m, p = _scan(w)
    return m == len(w) and p == m


# -- content and text encoding --------------------------------------------


def content_of(w: Sequence[int], k: int) -> tuple[int, ...]:
    """Multiplicity vector ``(n_0, ..., n_{k-1})`` of ``w``."""
    if k < 2:
        raise InputError(f"alphabet size must be at least 2, got {k}")
    counts = [0] * k
    for a in w:
        if not 0 <= a < k:
            raise InputError(f"symbol {a} outside alphabet of size {k}")
        counts[a] += 1
    return tuple(counts)


def format_word(w: Sequence[int], k: int) -> str:
    """Digits for ``k <= 10``, comma-separated values otherwise."""
    if k <= 10:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_word(text: str, k: int | None = None) -> Word:
    """Inverse of :func:`format_word`.

    With ``k > 10``, or when the string contains a comma, it is read as
    comma-separated symbols; otherwise each character is one decimal digit.
    When ``k`` is given, symbols are range-checked against it.
    """
    text = text.strip()
    try:
        if "," in text or (k is not None and k > 10):
            w = tuple(int(s) for s in text.split(","))
        else:
            w = tuple(int(ch) for ch in text)
    except ValueError:
        raise InputError(f"cannot parse word {text!r}") from None
    if any(a < 0 for a in w):
        raise InputError(f"negative symbol in {text!r}")
    if k is not None and any(a >= k for a in w):
        raise InputError(f"word {text!r} has a symbol outside alphabet of size {k}")
    return w


def parse_content(text: str) -> tuple[int, ...]:
    """Parse ``"3,2,1"`` into a content vector; arity gives ``k``."""
    try:
        c = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse content {text!r}") from None
    if len(c) < 2:
        raise InputError("content needs at least two entries (k >= 2)")
    if any(x < 0 for x in c):
        raise InputError("content entries must be non-negative")
    return c
