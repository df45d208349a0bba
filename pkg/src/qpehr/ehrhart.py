"""Ehrhart polynomials of quasi-posets and related counts.

A weakly order-preserving surjection ``P -> [k]`` is the same thing as a
strictly increasing chain of ``k`` down-sets ending at the whole set; the
strict version additionally asks each step to be an antichain of the
quotient.  Chains are counted by a dynamic programme over down-sets, so the
cost depends on the size of the down-set lattice only.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import CapacityError, InputError
from .poly import Polynomial, hilbert, l_operator
from .qposet import QuasiPoset, bits, canonical_form, open_masks, restrict_mask
from .words import PackedWord

BRUTE_FORCE_LIMIT = 2_000_000


class CountMode(enum.Enum):
    WEAK = "weak"
    STRICT = "strict"


@dataclass(frozen=True)
class HeapStats:
    mu: int
    p_factorial: int
    lambda_value: Fraction


# -- quotient helpers ---------------------------------------------------------------

def _quotient_order(P: QuasiPoset) -> tuple[int, tuple[int, ...]]:
    """Class count and strict up-masks of the quotient poset."""
    Q = P.quotient
    return Q.cl, Q.above


@lru_cache(maxsize=None)
def _down_sets(cl: int, above: tuple[int, ...]) -> tuple[int, ...]:
    below = [0] * cl
    for a in range(cl):
        for b in bits(above[a]):
            below[b] |= 1 << a
    return tuple(m for m in range(1 << cl)
                 if all(below[c] & ~m == 0 for c in bits(m)))


def _is_antichain(above: tuple[int, ...], mask: int) -> bool:
    return all(above[c] & mask == 0 for c in bits(mask))


def _steps(cl: int, above: tuple[int, ...], mode: CountMode) -> dict[int, list[int]]:
    downs = _down_sets(cl, above)
    nxt: dict[int, list[int]] = {}
    for D in downs:
        nxt[D] = [E for E in downs if E != D and E & D == D
                  and (mode is CountMode.WEAK or _is_antichain(above, E & ~D))]
    return nxt


@lru_cache(maxsize=None)
def _surjection_counts(cl: int, above: tuple[int, ...], mode: CountMode) -> tuple[int, ...]:
    full = (1 << cl) - 1
    nxt = _steps(cl, above, mode)
    counts = [1 if cl == 0 else 0]
    layer = {0: 1}
    for _ in range(cl):
        new: dict[int, int] = {}
        for D, c in layer.items():
            for E in nxt[D]:
                new[E] = new.get(E, 0) + c
        layer = new
        counts.append(layer.get(full, 0))
    return tuple(counts)


def surjection_counts(P: QuasiPoset, mode: CountMode = CountMode.WEAK) -> list[int]:
    """``[|W(0)|, |W(1)|, ..., |W(cl)|]``."""
    cl, above = _quotient_order(P)
    return list(_surjection_counts(cl, above, mode))


def _chains(cl: int, above: tuple[int, ...], mode: CountMode):
    full = (1 << cl) - 1
    nxt = _steps(cl, above, mode)

    def walk(D: int, path: list[int]):
        if D == full:
            yield list(path)
            return
        for E in nxt[D]:
            path.append(E)
            yield from walk(E, path)
            path.pop()
    yield from walk(0, [])


def surjection_words(P: QuasiPoset, mode: CountMode = CountMode.WEAK) -> dict[int, set[PackedWord]]:
    """Surjective order-preserving words, grouped by their maximum letter."""
    Q = P.quotient
    cls_of = [0] * P.n
    for c, members in enumerate(Q.classes):
        for v in members:
            cls_of[v] = c
    out: dict[int, set[PackedWord]] = {i: set() for i in range(1, P.n + 1)}
    if P.n == 0:
        return {0: {PackedWord()}}
    for chain in _chains(Q.cl, Q.above, mode):
        level = [0] * Q.cl
        prev = 0
        for t, D in enumerate(chain, 1):
            for c in bits(D & ~prev):
                level[c] = t
            prev = D
        out[len(chain)].add(PackedWord(level[cls_of[v]] for v in range(P.n)))
    return out


def all_surjection_words(P: QuasiPoset, mode: CountMode = CountMode.WEAK) -> set[PackedWord]:
    return set().union(*surjection_words(P, mode).values())


# -- polynomials ------------------------------------------------------------------

def ehr_polynomial(P: QuasiPoset, mode: CountMode = CountMode.WEAK) -> Polynomial:
    acc = Polynomial()
    for i, c in enumerate(surjection_counts(P, mode)):
        if c:
            acc = acc + hilbert(i) * c
    return acc


@lru_cache(maxsize=None)
def _ehr_recursive_canon(P: QuasiPoset, mode: CountMode) -> Polynomial:
    if P.n == 0:
        return Polynomial([1])
    full = (1 << P.n) - 1
    acc = Polynomial()
    for O in open_masks(P):
        if O == 0:
            continue
        if mode is CountMode.STRICT and not restrict_mask(P, O).is_discrete():
            continue
        acc = acc + ehr_recursive(restrict_mask(P, full & ~O), mode)
    return l_operator(acc)


def ehr_recursive(P: QuasiPoset, mode: CountMode = CountMode.WEAK) -> Polynomial:
    """Same polynomial as :func:`ehr_polynomial`, computed by peeling off the top level."""
    return _ehr_recursive_canon(canonical_form(P)[1], mode)


def ehr_classical(P: QuasiPoset) -> Polynomial:
    return ehr_polynomial(P, CountMode.WEAK).shift(1)


def is_order_preserving(P: QuasiPoset, f, mode: CountMode = CountMode.WEAK) -> bool:
    for i in range(P.n):
        for j in bits(P.up[i]):
            if f[i] > f[j]:
                return False
            if mode is CountMode.STRICT and not P.le(j, i) and f[i] == f[j]:
                return False
    return True


def count_maps(P: QuasiPoset, k: int, mode: CountMode = CountMode.WEAK) -> int:
    """Brute-force count of order-preserving maps to ``{1..k}``."""
    if k < 0:
        raise InputError("k must be non-negative")
    if k ** P.n > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"{k}^{P.n} maps exceed the brute-force limit")
    return sum(1 for f in itertools.product(range(1, k + 1), repeat=P.n)
               if is_order_preserving(P, f, mode))


# -- heap orderings ----------------------------------------------------------------

def heap_stats(P: QuasiPoset) -> HeapStats:
    cl, above = _quotient_order(P)
    downs = set(_down_sets(cl, above))
    ways = {0: 1}
    for D in sorted(downs, key=int.bit_count):
        c = ways.get(D, 0)
        if not c:
            continue
        for v in range(cl):
            E = D | 1 << v
            if E != D and E in downs:
                ways[E] = ways.get(E, 0) + c
    mu = ways.get((1 << cl) - 1, 0)
    pf = 1
    for a in range(cl):
        pf *= above[a].bit_count() + 1
    return HeapStats(mu, pf, Fraction(mu, factorial(cl)))


def linear_extensions(P: QuasiPoset) -> set[PackedWord]:
    """Strict surjective words whose fibres are exactly the equivalence classes."""
    return set(surjection_words(P, CountMode.STRICT).get(P.cl, set()))


def reconstruct_order(words: Iterable[Sequence[int]], n: int) -> QuasiPoset:
    words = list(words)
    if not words:
        raise InputError("need at least one word")
    if any(len(w) != n for w in words):
        raise InputError(f"all words must have length {n}")
    up = [sum(1 << j for j in range(n) if all(w[i] <= w[j] for w in words))
          for i in range(n)]
    return QuasiPoset(n, tuple(up))


# -- Bernoulli numbers ---------------------------------------------------------------

def corolla(k: int) -> QuasiPoset:
    """One root below ``k`` pairwise incomparable leaves."""
    if k < 0:
        raise InputError("k must be non-negative")
    return QuasiPoset(k + 1, ((1 << (k + 1)) - 1,) + tuple(1 << i for i in range(1, k + 1)))


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """``b_k`` with ``b_1 = -1/2``, read off the strict polynomial of a corolla."""
    if k < 0:
        raise InputError("k must be non-negative")
    return ehr_polynomial(corolla(k), CountMode.STRICT).derivative()(0)


def faulhaber(k: int) -> Polynomial:
    """``S_k`` with ``S_k(n) = 1^k + ... + (n-1)^k``."""
    if k < 0:
        raise InputError("k must be non-negative")
    if k == 0:
        return Polynomial([-1, 1])
    coeffs = [Fraction(0)] * (k + 2)
    for i in range(k + 1):
        coeffs[k - i + 1] += comb(k, i) * bernoulli(i) / (k - i + 1)
    return Polynomial(coeffs)
