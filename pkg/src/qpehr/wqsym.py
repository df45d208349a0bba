"""The Hopf algebra of packed words and its maps from quasi-posets.

Products merge the value axes of the two words (quasi-shuffles of
``1..max(u)`` with ``1..max(v)``); the coproduct cuts the alphabet.
``ehr_morphism`` sends a labeled quasi-poset to the sum of its surjective
order-preserving words.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .ehrhart import CountMode, all_surjection_words
from .errors import InputError
from .linear import LinComb, as_lincomb, bilinear
from .poly import Polynomial, hilbert
from .qposet import QuasiPoset
from .words import PackedWord, pack, parse_word

__all__ = [
    "PackedWord", "pack", "parse_word", "Ordinal", "restrict_letters", "product",
    "coproduct", "internal_coproduct", "ordinal_product", "ehr_morphism",
    "phi_automorphism", "h_morphism", "word_leq", "poset_from_word", "packed_words",
    "counit", "internal_counit", "triangular_solve", "compositions", "compose",
]


class Ordinal(enum.Enum):
    DOWN = "down"
    STAR = "star"
    LIGHTNING = "lightning"


def _word(w) -> PackedWord:
    return w if isinstance(w, PackedWord) else PackedWord(w)


def restrict_letters(w: Sequence[int], letters) -> tuple[int, ...]:
    """Subword of the letters lying in ``letters`` (not repacked)."""
    keep = set(letters)
    return tuple(x for x in w if x in keep)


def compose(sigma: Sequence[int], w: Sequence[int]) -> PackedWord:
    """Letter substitution ``i -> sigma(i)``; ``sigma`` is 1-indexed by letter."""
    return PackedWord(sigma[x - 1] for x in w)


# -- product and coproducts ----------------------------------------------------------

def _quasi_shuffles(p: int, q: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Increasing maps f: [p] -> [m], g: [q] -> [m] whose images cover [m]."""
    def rec(i, j, f, g, m):
        if i == p and j == q:
            yield tuple(f), tuple(g)
            return
        if i < p:
            f.append(m + 1)
            yield from rec(i + 1, j, f, g, m + 1)
            f.pop()
        if j < q:
            g.append(m + 1)
            yield from rec(i, j + 1, f, g, m + 1)
            g.pop()
        if i < p and j < q:
            f.append(m + 1)
            g.append(m + 1)
            yield from rec(i + 1, j + 1, f, g, m + 1)
            f.pop()
            g.pop()
    yield from rec(0, 0, [], [], 0)


@lru_cache(maxsize=None)
def _product_basis(u: PackedWord, v: PackedWord) -> LinComb:
    return LinComb((PackedWord(tuple(f[x - 1] for x in u) + tuple(g[x - 1] for x in v)), 1)
                   for f, g in _quasi_shuffles(u.max, v.max))


def product(x, y) -> LinComb:
    return bilinear(lambda u, v: _product_basis(_word(u), _word(v)), x, y)


def tensor_product(x, y) -> LinComb:
    def mul(s, t):
        legs = [_product_basis(_word(a), _word(b)) for a, b in zip(s, t)]
        out = LinComb.basis(())
        for leg in legs:
            out = out.map(lambda pre, leg=leg: LinComb((pre + (b,), c) for b, c in leg.items()))
        return out
    return bilinear(mul, x, y)


@lru_cache(maxsize=None)
def _coproduct_basis(w: PackedWord) -> LinComb:
    m = w.max
    return LinComb(((PackedWord(restrict_letters(w, range(1, k + 1))),
                     pack(restrict_letters(w, range(k + 1, m + 1)))), 1)
                   for k in range(m + 1))


def coproduct(x) -> LinComb:
    return as_lincomb(x).map(lambda w: _coproduct_basis(_word(w)))


def compositions(m: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing surjections ``[m] -> [l]`` as words, for every ``l``."""
    if m == 0:
        yield ()
        return
    for cuts in itertools.product((0, 1), repeat=m - 1):
        s = [1]
        for c in cuts:
            s.append(s[-1] + c)
        yield tuple(s)


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple[PackedWord, ...]:
    out = set()
    for w in itertools.product(range(1, n + 1), repeat=n):
        if set(w) == set(range(1, max(w, default=0) + 1)):
            out.add(PackedWord(w))
    return tuple(sorted(out, key=PackedWord.sort_key))


@lru_cache(maxsize=None)
def _internal_basis(w: PackedWord) -> LinComb:
    m = w.max
    acc: dict = {}
    for sigma in compositions(m):
        for tau in packed_words(m):
            if all(tau[i] < tau[j] for i in range(m) for j in range(i + 1, m)
                   if sigma[i] == sigma[j]):
                key = (compose(sigma, w), compose(tau, w))
                acc[key] = acc.get(key, 0) + 1
    return LinComb(acc)


def internal_coproduct(x) -> LinComb:
    return as_lincomb(x).map(lambda w: _internal_basis(_word(w)))


def counit(x) -> Fraction:
    return as_lincomb(x).evaluate(lambda w: 1 if len(w) == 0 else 0)


def internal_counit(x) -> Fraction:
    """1 on constant words ``(1...1)`` (and on the empty word), 0 elsewhere."""
    return as_lincomb(x).evaluate(lambda w: 1 if _word(w).max <= 1 else 0)


def _shift(v: PackedWord, s: int) -> tuple[int, ...]:
    return tuple(x + s for x in v)


def ordinal_product(x, y, mode: Ordinal = Ordinal.DOWN) -> LinComb:
    """``DOWN`` shifts ``v`` by ``max(u)``, ``STAR`` by ``max(u) - 1``, ``LIGHTNING`` is their sum.

    ``STAR`` vanishes when either factor is the empty word.
    """
    def basis(u, v):
        u, v = _word(u), _word(v)
        down = LinComb.basis(PackedWord(tuple(u) + _shift(v, u.max)))
        star = LinComb() if not u or not v else LinComb.basis(
            PackedWord(tuple(u) + _shift(v, u.max - 1)))
        if mode is Ordinal.DOWN:
            return down
        if mode is Ordinal.STAR:
            return star
        return down + star
    return bilinear(basis, x, y)


# -- morphisms ------------------------------------------------------------------------

def ehr_morphism(x, mode: CountMode = CountMode.WEAK) -> LinComb:
    """Each quasi-poset goes to the sum of its surjective order-preserving words."""
    def f(P: QuasiPoset) -> LinComb:
        return LinComb((w, 1) for w in all_surjection_words(P, mode))
    return as_lincomb(x).map(f)


def phi_automorphism(x, lam) -> LinComb:
    """``w -> sum_sigma prod_blocks H_{|block|}(lam) sigma o w`` over compositions ``sigma``."""
    lam = Fraction(lam)

    def f(w) -> LinComb:
        w = _word(w)
        acc: dict = {}
        for sigma in compositions(w.max):
            coeff = Fraction(1)
            for _, grp in itertools.groupby(sigma):
                coeff *= hilbert(len(list(grp)))(lam)
            if coeff:
                key = compose(sigma, w)
                acc[key] = acc.get(key, 0) + coeff
        return LinComb(acc)
    return as_lincomb(x).map(f)


def h_morphism(x) -> Polynomial:
    acc = Polynomial()
    for w, c in as_lincomb(x).items():
        acc = acc + hilbert(_word(w).max) * c
    return acc


# -- order on words -----------------------------------------------------------------------

def word_leq(w: Sequence[int], w2: Sequence[int]) -> bool:
    """``w(i) < w(j)`` must imply ``w2(i) < w2(j)``."""
    if len(w) != len(w2):
        raise InputError("words must have equal length")
    n = len(w)
    return all(w2[i] < w2[j] for i in range(n) for j in range(n) if w[i] < w[j])


def poset_from_word(w: Sequence[int]) -> QuasiPoset:
    n = len(w)
    return QuasiPoset(n, tuple(sum(1 << j for j in range(n) if i == j or w[i] < w[j])
                               for i in range(n)))


def triangular_solve(w) -> LinComb:
    """A combination ``x`` of quasi-posets with ``EHR^str(x) = w``.

    ``EHR^str`` of the poset built from ``u`` is ``u`` plus words strictly
    above ``u``, so peeling off a minimal word of the residual terminates.
    """
    target = as_lincomb(_word(w))
    residual, out = target, LinComb()
    while residual:
        support = list(residual)
        u = next(a for a in sorted(support, key=PackedWord.sort_key)
                 if not any(b != a and word_leq(b, a) for b in support))
        c = residual[u]
        P = poset_from_word(u)
        out = out + LinComb.basis(P, c)
        residual = residual - ehr_morphism(P, CountMode.STRICT) * c
    return out
