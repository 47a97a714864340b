"""The injection from unstable necklaces into Lyndon words with one fewer 0,
and the witness words showing where it misses.

An unstable necklace ``w = a_1 ... a_n`` (all symbols present) is written as

    w = (a_1 ... a_p)^j  a_1 ... a_i  x,     p = lyn(a_1 ... a_{n-1}),

with ``j >= 1``, ``1 <= i <= p``.  With ``z`` the last position ``<= i``
holding a 0, the map sends ``w`` to

    (a_1 ... a_p)^j a_1 ... a_{z-1} x                                  (z == i)
    (a_1 ... a_p)^j x a_i a_{i-1} ... a_{z+2} a_1 ... a_{z-1} a_{z+1}  (z <  i)

All positions here are 1-based.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .core import InputError, InvariantError, Word, content_of, is_lyndon, is_necklace, lyn
from .counting import bound_rhs, lyndon_binary, necklaces_binary
from .generation import GenKind, generate, partition_necklaces

__all__ = [
    "UnstableDecomposition",
    "EqualityStatus",
    "decompose",
    "apply_f",
    "image_of_f",
    "nonsurjectivity_witness",
    "strict_witness",
    "equality_status",
    "equality_by_formula",
    "in_equality_set",
    "SPORADIC_EQUALITY",
]

SPORADIC_EQUALITY = frozenset({(6, 3), (7, 3), (7, 4), (8, 4), (9, 3), (9, 6)})

# runtime cross-check of the classification against the formulas
_CROSSCHECK_MAX_N = 64


@dataclass(frozen=True)
class UnstableDecomposition:
    p: int
    j: int
    i: int
    z: int
    x: int

    @property
    def branch(self) -> str:
        return "z=i" if self.z == self.i else "z<i"


@dataclass(frozen=True)
class EqualityStatus:
    """Outcome of comparing ``N(n,d)`` with ``L(n-1,d) + L(n-1,d-1)``.

    When strict and a constructive witness exists, ``witness`` is a binary
    Lyndon word of length ``n-1`` with ``witness_density`` ones that the
    injection misses for ``(n, witness_density)``; by density symmetry this
    density may be ``n - d`` rather than ``d``.
    """

    n: int
    d: int
    equality: bool
    witness: Word | None = None
    witness_density: int | None = None

    @property
    def strict(self) -> bool:
        return not self.equality


def _infer_k(w: Sequence[int], k: int | None) -> int:
    if k is None:
        k = max(w) + 1
    return max(k, 2)


def decompose(w: Sequence[int], k: int | None = None) -> UnstableDecomposition:
    """Split an unstable necklace into ``(p, j, i, z, x)``.

    ``k`` defaults to ``max(w) + 1``; every symbol below ``k`` must occur in ``w``.
    """
    w = tuple(w)
    k = _infer_k(w, k)
    n = len(w)
    if n < 2:
        raise InputError("word must have length >= 2")
    c = content_of(w, k)
    if min(c) < 1:
        raise InputError(f"every symbol 0..{k - 1} must occur in the word")
    if not is_necklace(w):
        raise InputError("not a necklace")
    head = w[:-1]
    if is_lyndon(head):
        raise InputError("stable necklace: the first n-1 symbols form a Lyndon word")
    m = n - 1
    p = lyn(head)
    j, i = divmod(m, p)
    if i == 0:
        j, i = j - 1, p
    if j < 1 or head != w[:p] * j + w[:i]:
        raise InvariantError(f"periodic decomposition failed for {w}")
    z = max(t for t in range(1, i + 1) if w[t - 1] == 0)
    return UnstableDecomposition(p=p, j=j, i=i, z=z, x=w[-1])


def apply_f(w: Sequence[int], k: int | None = None) -> Word:
    """Image of an unstable necklace under the injection."""
    w = tuple(w)
    dec = decompose(w, k)
    p, j, i, z, x = dec.p, dec.j, dec.i, dec.z, dec.x
    a = (None,) + w  # a[t] is the 1-based symbol a_t
    body = w[:p] * j
    if z == i:
        image = body + w[: z - 1] + (x,)
    else:
        # a_i down to a_{z+2}; empty when i == z + 1
        tail = tuple(a[t] for t in range(i, z + 1, -1))
        image = body + (x,) + tail + w[: z - 1] + (a[z + 1],)
    if len(image) != len(w) - 1 or not is_lyndon(image):
        raise InvariantError(f"f{w} = {image} is not a Lyndon word of length n-1")
    k = _infer_k(w, k)
    expected = list(content_of(w, k))
    expected[0] -= 1
    if content_of(image, k) != tuple(expected):
        raise InvariantError(f"f{w} = {image} has the wrong content")
    return image


def image_of_f(c: Sequence[int]) -> set[Word]:
    """Images of all unstable necklaces with content ``c``.

    Raises :class:`InvariantError` if two necklaces collide.
    """
    if any(x < 1 for x in c):
        raise InputError("every content entry must be >= 1")
    k = len(c)
    _, unstable = partition_necklaces(c)
    image = {apply_f(w, k) for w in unstable}
    if len(image) != len(unstable):
        raise InvariantError(f"f is not injective on content {tuple(c)}")
    return image


def nonsurjectivity_witness(c: Sequence[int]) -> Word | None:
    """A Lyndon word with content ``c`` minus one 0 that the injection misses.

    Returns ``None`` for a binary alphabet, where no such word is claimed.
    """
    k = len(c)
    if any(x < 1 for x in c):
        raise InputError("every content entry must be >= 1")
    if k <= 2:
        return None
    n0 = c[0]
    if n0 == 1:
        # no unstable necklaces at all, so any target word is missed
        target = (0,) + tuple(c[1:])
        return next(generate(target, GenKind.LYNDON))
    if n0 == 2:
        w = [0]
        for s in range(k - 1, 0, -1):
            w += [s] * c[s]
        return tuple(w)
    h = n0 // 2
    if n0 % 2:
        w = [0] * h
        for s in range(1, k):
            w += [s] * (c[s] - (s == k - 1))
        w += [0] * h + [k - 1]
        return tuple(w)
    w = [0] * h
    for s in range(k - 1, 0, -1):
        w += [s] * (c[s] - (s == 1))
    w += [0] * (h - 1) + [1]
    return tuple(w)


def strict_witness(n: int, d: int) -> Word | None:
    """A binary Lyndon word of length ``n-1`` with ``d`` ones outside the image.

    Applies when ``n > 10`` and the number of zeros ``z = n - d`` satisfies
    ``2 < z <= n/2``; returns ``None`` otherwise.
    """
    z = n - d
    if n <= 10 or not (2 < z and 2 * z <= n):
        return None

    def ones(e: int) -> list[int]:
        return [1] * e

    if z == 3:
        # 0 1^a 0 1^(a+s), total length 2a + 2 + s = n - 1
        for s in (1, 2):
            a, r = divmod(n - 3 - s, 2)
            if r == 0 and a >= 3:
                return tuple([0] + ones(a) + [0] + ones(a + s))
    elif z == 4:
        # 0 1^a 0 1^(a+s) 0 1^(a+t), total length 3a + 3 + s + t = n - 1
        for s, t in ((0, 1), (1, 1), (1, 2)):
            a, r = divmod(n - 4 - s - t, 3)
            if r == 0 and a >= 2:
                return tuple([0] + ones(a) + [0] + ones(a + s) + [0] + ones(a + t))
    else:
        # 0 0 1 1^a 0 1 (0 1)^b with z - 1 zeros and length n - 1
        b = z - 4
        a = n - 2 * z + 2
        if a >= 1:
            return tuple([0, 0, 1] + ones(a) + [0, 1] + [0, 1] * b)
    raise InvariantError(f"no witness template fits (n, d) = ({n}, {d})")


def in_equality_set(n: int, d: int) -> bool:
    """Classification of the pairs where the Pascal-like bound is tight."""
    if not 0 < d < n:
        raise InputError(f"need 0 < d < n, got (n, d) = ({n}, {d})")
    if d in (1, 2, n - 2, n - 1):
        return (n, d) != (2, 1)
    return (n, d) in SPORADIC_EQUALITY


def equality_by_formula(n: int, d: int) -> bool:
    return necklaces_binary(n, d) == lyndon_binary(n - 1, d) + lyndon_binary(n - 1, d - 1)


def equality_status(n: int, d: int) -> EqualityStatus:
    eq = in_equality_set(n, d)
    if n <= _CROSSCHECK_MAX_N:
        if eq != (necklaces_binary(n, d) == bound_rhs((n - d, d))):
            raise InvariantError(f"equality classification disagrees with formulas at ({n}, {d})")
    if eq:
        return EqualityStatus(n, d, True)
    dd = d if 2 * (n - d) <= n else n - d
    witness = strict_witness(n, dd)
    return EqualityStatus(n, d, False, witness, dd if witness is not None else None)
