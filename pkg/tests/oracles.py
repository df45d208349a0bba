"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from hypothesis import strategies as st

from qpehr.qposet import QuasiPoset


def rel(P: QuasiPoset) -> list[list[bool]]:
    return [[P.le(i, j) for j in range(P.n)] for i in range(P.n)]


def relabel(P: QuasiPoset, perm) -> QuasiPoset:
    """Vertex ``i`` of ``P`` becomes vertex ``perm[i]``."""
    m = [[False] * P.n for _ in range(P.n)]
    for i in range(P.n):
        for j in range(P.n):
            m[perm[i]][perm[j]] = P.le(i, j)
    return QuasiPoset.from_matrix(m)


def brute_canon(P: QuasiPoset) -> tuple:
    """Least row-major relation bit string over all relabelings."""
    best = None
    for perm in itertools.permutations(range(P.n)):
        code = tuple(P.le(perm[i], perm[j]) for i in range(P.n) for j in range(P.n))
        if best is None or code < best:
            best = code
    return (P.n, best)


def brute_isomorphic(P: QuasiPoset, Q: QuasiPoset) -> bool:
    if P.n != Q.n:
        return False
    return any(all(P.le(i, j) == Q.le(p[i], p[j]) for i in range(P.n) for j in range(P.n))
               for p in itertools.permutations(range(P.n)))


def brute_closure(n: int, pairs) -> set:
    r = {(i, i) for i in range(n)} | set(pairs)
    while True:
        extra = {(a, d) for a, b in r for c, d in r if b == c} - r
        if not extra:
            return r
        r |= extra


def all_relations(n: int):
    """Every preorder on ``range(n)`` by filtering all relations (n <= 3)."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in itertools.product((0, 1), repeat=len(cells)):
        r = {c for c, b in zip(cells, bits) if b} | {(i, i) for i in range(n)}
        if all((a, d) in r for a, b in r for c, d in r if b == c):
            out.append(r)
    return out


def monotone_words(P: QuasiPoset, k: int, strict: bool):
    for f in itertools.product(range(1, k + 1), repeat=P.n):
        ok = True
        for i in range(P.n):
            for j in range(P.n):
                if P.le(i, j):
                    if f[i] > f[j]:
                        ok = False
                    elif strict and not P.le(j, i) and f[i] == f[j]:
                        ok = False
        if ok:
            yield f


def surjective_words(P: QuasiPoset, strict: bool) -> set[tuple]:
    out = set()
    for k in range(P.n + 1):
        for f in monotone_words(P, k, strict):
            if set(f) == set(range(1, k + 1)):
                out.add(f)
    return out


def count_linear_extensions(P: QuasiPoset) -> int:
    """Orderings of the quotient classes compatible with the order."""
    classes = []
    for i in range(P.n):
        c = frozenset(j for j in range(P.n) if P.le(i, j) and P.le(j, i))
        if c not in classes:
            classes.append(c)
    reps = [min(c) for c in classes]
    return sum(1 for perm in itertools.permutations(range(len(reps)))
               if all(perm[a] < perm[b] for a in range(len(reps)) for b in range(len(reps))
                      if a != b and P.le(reps[a], reps[b])))


def bernoulli_recurrence(m: int) -> Fraction:
    """``b_m`` from ``sum_{j<=m} C(m+1, j) b_j = 0`` with ``b_0 = 1``."""
    b = [Fraction(1)]
    for k in range(1, m + 1):
        b.append(-sum(comb(k + 1, j) * b[j] for j in range(k)) / (k + 1))
    return b[m]


def pack(word) -> tuple:
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[x] for x in word)


def is_packed(word) -> bool:
    return set(word) == set(range(1, len(set(word)) + 1))


def product_by_definition(u, v) -> dict:
    """Scan all words of length |u|+|v| and keep those whose two halves pack to u and v."""
    k, l = len(u), len(v)
    out = {}
    for w in itertools.product(range(1, k + l + 1), repeat=k + l):
        if is_packed(w) and pack(w[:k]) == tuple(u) and pack(w[k:]) == tuple(v):
            out[w] = out.get(w, 0) + 1
    return out


@st.composite
def quasi_posets(draw, max_n: int = 5, min_n: int = 0):
    """Closure of a short random list of generators; sparse lists keep the shapes varied."""
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return QuasiPoset.empty()
    vertex = st.integers(0, n - 1)
    gens = draw(st.lists(st.tuples(vertex, vertex), max_size=n + 1))
    m = [[i == j or (i, j) in gens for j in range(n)] for i in range(n)]
    return QuasiPoset.from_matrix(m)
