"""Exhaustive verification sweeps.

Each sweep returns a :class:`VerificationReport`; failures are recorded as
``(input, expected, actual)`` triples instead of raised, so a sweep always
runs to completion.
"""

from __future__ import annotations

import time
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product
from typing import Any

import numpy as np

from .core import InvariantError
from .counting import bound_rhs, count_lyndon, count_necklaces, lyndon_binary, multinomial, necklaces_binary
from .generation import GenKind, count_stable, generate, generate_blocks, partition_necklaces
from .mapping import (
    equality_by_formula,
    equality_status,
    image_of_f,
    in_equality_set,
    nonsurjectivity_witness,
    strict_witness,
)
from .oracle import DEFAULT_CAP, encode, lyndon_codes, necklace_codes, prenecklace_codes, word_codes

SUITES = ("bound", "injectivity", "equality", "witnesses", "oracle")


@dataclass
class VerificationReport:
    scope: str
    checked: int = 0
    failures: list[tuple[Any, Any, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, instance: Any, expected: Any, actual: Any) -> bool:
        self.checked += 1
        if expected != actual:
            self.failures.append((instance, expected, actual))
            return False
        return True

    def to_record(self) -> dict:
        return {
            "scope": self.scope,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": [[repr(i), repr(e), repr(a)] for i, e, a in self.failures],
            "elapsed": round(self.elapsed, 6),
            "notes": self.notes,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.scope}: {self.checked} checks, {len(self.failures)} failures, {self.elapsed:.2f}s"
        return "\n".join([line] + [f"  {n}" for n in self.notes])


def contents(max_n: int, k: int, *, min_count: int = 0, min_n: int = 1) -> Iterator[tuple[int, ...]]:
    """All length-``k`` content vectors with entries >= ``min_count`` and
    ``min_n <= sum <= max_n``, in lexicographic order."""
    lo = max(min_n, k * min_count)
    for c in product(range(min_count, max_n + 1), repeat=k):
        if lo <= sum(c) <= max_n:
            yield c


def _timed(fn):
    def wrapper(*args, **kwargs) -> VerificationReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def verify_bound(max_n: int = 64) -> VerificationReport:
    """N(n,d) <= L(n-1,d) + L(n-1,d-1) for 0 < d < n <= max_n, from the formulas."""
    rep = VerificationReport(f"bound n<={max_n}")
    for n in range(2, max_n + 1):
        for d in range(1, n):
            lhs = necklaces_binary(n, d)
            rhs = lyndon_binary(n - 1, d) + lyndon_binary(n - 1, d - 1)
            rep.check((n, d), True, lhs <= rhs)
    return rep


@_timed
def verify_strict_formula(max_n: int, k: int = 3) -> VerificationReport:
    """N_k(c) < bound_rhs(c) for all contents with positive entries, k > 2."""
    rep = VerificationReport(f"strict bound by formula k={k} n<={max_n}")
    for c in contents(max_n, k, min_count=1):
        rep.check(c, True, count_necklaces(c) < bound_rhs(c))
    return rep


def _check_partition(rep: VerificationReport, c: tuple[int, ...], strict: bool) -> None:
    stable, unstable = partition_necklaces(c)
    rep.check((c, "|S| formula"), count_stable(c), len(stable))
    rep.check((c, "|S|+|U|=N"), count_necklaces(c), len(stable) + len(unstable))
    # dropping the last symbol of a stable necklace leaves a Lyndon word
    prefixes: dict[int, set] = {}
    for w in stable:
        last = w[-1]
        if last not in prefixes:
            d = list(c)
            d[last] -= 1
            prefixes[last] = set(generate(d, GenKind.LYNDON))
        if not rep.check((c, w, "stable prefix"), True, w[:-1] in prefixes[last]):
            break
    try:
        image = image_of_f(c)
    except InvariantError as exc:
        rep.check((c, "injective"), "injective", str(exc))
        return
    rep.check((c, "|image|=|U|"), len(unstable), len(image))
    target = list(c)
    target[0] -= 1
    lyn_target = set(generate(target, GenKind.LYNDON))
    rep.check((c, "image subset"), True, image <= lyn_target)
    if strict:
        rep.check((c, "not surjective"), True, len(image) < count_lyndon(target))


@_timed
def verify_injectivity(max_n: int = 12, k: int = 2) -> VerificationReport:
    """Partition sizes, injectivity and image containment of f, exhaustively.

    For ``k > 2`` also checks that f misses part of its target set.
    """
    rep = VerificationReport(f"injectivity k={k} n<={max_n}")
    for c in contents(max_n, k, min_count=1):
        _check_partition(rep, c, strict=k > 2)
    return rep


@_timed
def verify_equality(max_n: int = 30) -> VerificationReport:
    """Equality classification versus direct formula comparison."""
    rep = VerificationReport(f"equality n<={max_n}")
    sporadic = []
    for n in range(2, max_n + 1):
        for d in range(1, n):
            eq = equality_by_formula(n, d)
            rep.check((n, d), eq, in_equality_set(n, d))
            try:
                rep.check((n, d, "status"), eq, equality_status(n, d).equality)
            except InvariantError as exc:
                rep.check((n, d, "status"), eq, str(exc))
            if eq and 2 < d < n - 2:
                sporadic.append((n, d))
    rep.notes.append(f"equality pairs with 2 < d < n-2: {sporadic}")
    return rep


@_timed
def verify_witnesses(max_n: int = 10, strict_max_n: int = 14) -> VerificationReport:
    """Witness words are Lyndon, have the target content, and avoid the image."""
    rep = VerificationReport(f"witnesses k=3 n<={max_n}, strict 11<=n<={strict_max_n}")
    for c in contents(max_n, 3, min_count=1):
        w = nonsurjectivity_witness(c)
        _check_witness(rep, c, w)
    for n in range(11, strict_max_n + 1):
        for d in range(1, n):
            w = strict_witness(n, d)
            if w is None:
                continue
            _check_witness(rep, (n - d, d), w)
    return rep


def _check_witness(rep: VerificationReport, c: tuple[int, ...], w) -> None:
    target = list(c)
    target[0] -= 1
    if not rep.check((c, "witness exists"), True, w is not None):
        return
    counts = tuple(w.count(s) for s in range(len(c)))
    rep.check((c, w, "content"), tuple(target), counts)
    rep.check((c, w, "lyndon"), True, w in set(generate(target, GenKind.LYNDON)))
    rep.check((c, w, "outside image"), True, w not in image_of_f(c))


def _generated_codes(c: tuple[int, ...], kind: GenKind) -> np.ndarray:
    blocks = [encode(blk, len(c)) for blk in generate_blocks(c, kind)]
    return np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.int64)


@_timed
def verify_oracle(max_n: int = 12, k: int = 2, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Generator, counting formulas and brute-force oracle agree pairwise.

    Sets are compared as arrays of base-k codes; generator output must be
    strictly increasing, which also rules out repeats.
    """
    rep = VerificationReport(f"oracle k={k} n<={max_n}")
    brute = {
        GenKind.NECKLACE: necklace_codes,
        GenKind.LYNDON: lyndon_codes,
        GenKind.PRENECKLACE: prenecklace_codes,
    }
    formula = {GenKind.NECKLACE: count_necklaces, GenKind.LYNDON: count_lyndon}
    for c in contents(max_n, k):
        rep.check((c, "|words|=multinomial"), multinomial(c), len(word_codes(c, cap)))
        for kind, oracle in brute.items():
            gen = _generated_codes(c, kind)
            ref = oracle(c, cap)
            rep.check((c, kind.name, "increasing"), True, bool((np.diff(gen) > 0).all()))
            rep.check((c, kind.name, "gen=oracle"), True, np.array_equal(gen, ref))
            if kind in formula:
                f = formula[kind](c)
                rep.check((c, kind.name, "formula=oracle"), len(ref), f)
                rep.check((c, kind.name, "formula=gen"), len(gen), f)
    return rep


def run_suite(name: str, max_n: int | None = None, k: int | None = None) -> VerificationReport:
    if name == "bound":
        return verify_bound(max_n or 64)
    if name == "injectivity":
        return verify_injectivity(max_n or 12, k or 2)
    if name == "equality":
        return verify_equality(max_n or 30)
    if name == "witnesses":
        return verify_witnesses(max_n or 10)
    if name == "oracle":
        return verify_oracle(max_n or 12, k or 2)
    raise ValueError(f"unknown suite {name!r}")
