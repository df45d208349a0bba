"""Finite quasi-posets (preorders) and their structural operations.

A quasi-poset on ``n`` points is stored as its reflexive-transitive closure:
``up[i]`` is the bitmask of all ``j`` with ``i <= j``.  Vertices are
``0 .. n-1`` in the Python API and ``1 .. n`` in the text grammar
``"3: 1<2 1<3"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError, ParseError

LE = "<"
EQUIV = "~"

# exhaustive enumeration limits
MAX_LABELED_N = 6
MAX_ISO_N = 7


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _close(up: Sequence[int]) -> tuple[int, ...]:
    n = len(up)
    up = [u | (1 << i) for i, u in enumerate(up)]
    for k in range(n):
        bk, uk = 1 << k, up[k]
        for i in range(n):
            if up[i] & bk:
                up[i] |= uk
    return tuple(up)


@dataclass(frozen=True)
class QuotientView:
    """The poset of ``~`` classes of a quasi-poset.

    ``classes`` are sorted by their smallest vertex; ``above[a]`` is the
    bitmask of class indices strictly above class ``a``.
    """

    classes: tuple[frozenset, ...]
    above: tuple[int, ...]
    cc: int

    @property
    def cl(self) -> int:
        return len(self.classes)

    def less(self, a: int, b: int) -> bool:
        return bool(self.above[a] >> b & 1)

    @cached_property
    def below(self) -> tuple[int, ...]:
        below = [0] * self.cl
        for a, m in enumerate(self.above):
            for b in bits(m):
                below[b] |= 1 << a
        return tuple(below)

    def as_poset(self) -> QuasiPoset:
        return QuasiPoset(self.cl, tuple(m | (1 << a) for a, m in enumerate(self.above)))


@dataclass(frozen=True, order=True)
class QuasiPoset:
    """A reflexive-transitive relation on ``{0, ..., n-1}``.

    The constructor trusts that ``up`` is already closed; use
    :meth:`from_generators` or :meth:`from_matrix` for raw input.
    """

    n: int
    up: tuple[int, ...]

    @classmethod
    def empty(cls) -> QuasiPoset:
        return cls(0, ())

    @classmethod
    def point(cls) -> QuasiPoset:
        return cls(1, (1,))

    @classmethod
    def from_generators(cls, n: int, rels: Iterable[tuple[int, int, str]] = ()) -> QuasiPoset:
        """Smallest preorder on ``range(n)`` containing the generators.

        Each generator is ``(i, j, kind)`` with ``kind`` either ``LE``
        (``i <= j``) or ``EQUIV`` (``i <= j`` and ``j <= i``).
        """
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        up = [0] * n
        for i, j, kind in rels:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"vertex out of range in ({i}, {j}) for n={n}")
            up[i] |= 1 << j
            if kind == EQUIV:
                up[j] |= 1 << i
            elif kind != LE:
                raise InputError(f"unknown relation kind {kind!r}")
        return cls(n, _close(up))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> QuasiPoset:
        n = len(matrix)
        up = [mask_of(j for j, x in enumerate(row) if x) for row in matrix]
        return cls(n, _close(up))

    @classmethod
    def chain(cls, n: int) -> QuasiPoset:
        return cls(n, tuple(((1 << n) - 1) ^ ((1 << i) - 1) for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> QuasiPoset:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def single_class(cls, n: int) -> QuasiPoset:
        """The quasi-poset with all ``n`` points equivalent."""
        return cls(n, ((1 << n) - 1,) * n)

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.le(i, j) for j in range(self.n)] for i in range(self.n)]

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for i, m in enumerate(self.up):
            for j in bits(m):
                down[j] |= 1 << i
        return tuple(down)

    def class_mask(self, i: int) -> int:
        return self.up[i] & self.down[i]

    @cached_property
    def quotient(self) -> QuotientView:
        index = [-1] * self.n
        masks = []
        for i in range(self.n):
            if index[i] < 0:
                m = self.class_mask(i)
                for j in bits(m):
                    index[j] = len(masks)
                masks.append(m)
        above = []
        for a, m in enumerate(masks):
            rep = m & -m
            strict = self.up[rep.bit_length() - 1] & ~m
            above.append(mask_of({index[j] for j in bits(strict)}))
        return QuotientView(
            tuple(frozenset(bits(m)) for m in masks), tuple(above), len(self.components()))

    @property
    def cl(self) -> int:
        return self.quotient.cl

    @property
    def cc(self) -> int:
        return self.quotient.cc

    def components(self) -> list[int]:
        """Vertex masks of the connected components, by smallest vertex."""
        seen, comps = 0, []
        for i in range(self.n):
            if seen >> i & 1:
                continue
            comp, frontier = 0, 1 << i
            while frontier:
                comp |= frontier
                nxt = 0
                for j in bits(frontier):
                    nxt |= self.up[j] | self.down[j]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_discrete(self) -> bool:
        """True when ``<=`` coincides with ``~`` (the quotient is an antichain)."""
        return all(u == self.class_mask(i) for i, u in enumerate(self.up))

    def is_poset(self) -> bool:
        return all(self.class_mask(i) == 1 << i for i in range(self.n))

    def opposite(self) -> QuasiPoset:
        return QuasiPoset(self.n, self.down)

    def __str__(self) -> str:
        return to_text(self)

    def term_text(self) -> str:
        return "1" if self.n == 0 else f"[{to_text(self)}]"

    def to_json(self) -> str:
        return to_text(self)


@dataclass(frozen=True, order=True)
class IsoClass:
    """Isomorphism class of a quasi-poset, ordered and compared by key."""

    key: bytes
    rep: QuasiPoset = field(compare=False)

    @property
    def n(self) -> int:
        return self.rep.n

    def __str__(self) -> str:
        return to_text(self.rep)

    def term_text(self) -> str:
        return self.rep.term_text()

    def to_json(self) -> str:
        return to_text(self.rep)


# -- structural operations ---------------------------------------------------

def restrict_mask(P: QuasiPoset, mask: int) -> QuasiPoset:
    verts = list(bits(mask))
    pos = {v: k for k, v in enumerate(verts)}
    up = []
    for v in verts:
        m = 0
        for j in bits(P.up[v] & mask):
            m |= 1 << pos[j]
        up.append(m)
    return QuasiPoset(len(verts), tuple(up))


def restrict(P: QuasiPoset, vertices: Iterable[int]) -> QuasiPoset:
    """Standardized restriction of ``P`` to a vertex subset."""
    m = mask_of(vertices)
    if m >> P.n:
        raise InputError(f"vertex subset not contained in range({P.n})")
    return restrict_mask(P, m)


def product_disjoint(P: QuasiPoset, Q: QuasiPoset) -> QuasiPoset:
    k = P.n
    return QuasiPoset(k + Q.n, P.up + tuple(u << k for u in Q.up))


def product_ordinal(P: QuasiPoset, Q: QuasiPoset) -> QuasiPoset:
    """``P`` placed entirely below ``Q``."""
    k = P.n
    top = ((1 << Q.n) - 1) << k
    return QuasiPoset(k + Q.n, tuple(u | top for u in P.up) + tuple(u << k for u in Q.up))


def open_masks(P: QuasiPoset) -> list[int]:
    """Up-closed vertex masks, smallest first then lexicographic."""
    Q = P.quotient
    result = []
    for sub in range(1 << Q.cl):
        if all(Q.above[a] & ~sub == 0 for a in bits(sub)):
            result.append(mask_of(v for a in bits(sub) for v in Q.classes[a]))
    result.sort(key=lambda m: (bin(m).count("1"), tuple(bits(m))))
    return result


def open_sets(P: QuasiPoset) -> list[frozenset]:
    return [frozenset(bits(m)) for m in open_masks(P)]


def down_masks(P: QuasiPoset) -> list[int]:
    full = (1 << P.n) - 1
    return [full ^ m for m in open_masks(P)]


# -- canonical forms -----------------------------------------------------------

def _refined_colors(P: QuasiPoset) -> list[int]:
    n = P.n
    colors = [
        (bin(P.class_mask(i)).count("1"), bin(P.down[i]).count("1"), bin(P.up[i]).count("1"))
        for i in range(n)
    ]
    ranks = _rank(colors)
    while True:
        sigs = [
            (ranks[i],
             tuple(sorted(ranks[j] for j in bits(P.up[i] & ~(1 << i)))),
             tuple(sorted(ranks[j] for j in bits(P.down[i] & ~(1 << i)))))
            for i in range(n)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(ranks)):
            return new
        ranks = new


def _rank(items: list) -> list[int]:
    order = {v: r for r, v in enumerate(sorted(set(items)))}
    return [order[x] for x in items]


def _twin_roots(P: QuasiPoset) -> list[int]:
    # u, v are twins when swapping them is an automorphism
    n = P.n
    root = list(range(n))
    for u in range(n):
        if root[u] != u:
            continue
        for v in range(u + 1, n):
            if root[v] != v or P.le(u, v) != P.le(v, u):
                continue
            others = ((1 << n) - 1) & ~(1 << u) & ~(1 << v)
            if (P.up[u] ^ P.up[v]) & others == 0 and (P.down[u] ^ P.down[v]) & others == 0:
                root[v] = u
    return root


def _chunk(P: QuasiPoset, perm: list[int], v: int) -> int:
    c = 0
    for p in perm:
        c = (c << 2) | (P.le(v, p) << 1) | P.le(p, v)
    return c


@lru_cache(maxsize=None)
def canonical_form(P: QuasiPoset) -> tuple[bytes, QuasiPoset]:
    """Canonical key and representative of the isomorphism class of ``P``.

    Vertices are first split into cells by an iterated degree refinement;
    among orderings compatible with the cells, the one whose growing-square
    relation code is lexicographically least is chosen.  Interchangeable
    vertices (twins) are tried only once.
    """
    n = P.n
    colors = _refined_colors(P)
    slots = sorted(colors)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    twin = _twin_roots(P)
    best: list[int] | None = None
    best_perm: list[int] = []

    def search(perm: list[int], code: list[int], used: int) -> None:
        nonlocal best, best_perm
        k = len(perm)
        if k == n:
            if best is None or code < best:
                best, best_perm = list(code), list(perm)
            return
        tried = set()
        cands = []
        for v in cells[slots[k]]:
            if used >> v & 1 or twin[v] in tried:
                continue
            tried.add(twin[v])
            cands.append((_chunk(P, perm, v), v))
        cands.sort()
        for chunk, v in cands:
            if best is not None:
                here, ref = code + [chunk], best[:k + 1]
                if here > ref:
                    break
            perm.append(v)
            code.append(chunk)
            search(perm, code, used | (1 << v))
            perm.pop()
            code.pop()

    search([], [], 0)
    pos = {v: k for k, v in enumerate(best_perm)}
    up = tuple(mask_of(pos[j] for j in bits(P.up[v])) for v in best_perm)
    rep = QuasiPoset(n, up)
    flat = 0
    for row in up:
        flat = (flat << n) | row
    key = bytes([n]) + flat.to_bytes((n * n + 7) // 8, "big")
    return key, rep


def iso(P: QuasiPoset) -> IsoClass:
    key, rep = canonical_form(P)
    return IsoClass(key, rep)


def iso_from_key(key: bytes) -> IsoClass:
    n = key[0]
    flat = int.from_bytes(key[1:], "big")
    full = (1 << n) - 1
    up = tuple((flat >> (n * (n - 1 - i))) & full for i in range(n))
    return IsoClass(key, QuasiPoset(n, up))


def iso_product(a: IsoClass, b: IsoClass) -> IsoClass:
    return iso(product_disjoint(a.rep, b.rep))


def connected_factors(P: QuasiPoset) -> list[IsoClass]:
    return sorted(iso(restrict_mask(P, c)) for c in P.components())


def is_isomorphic(P: QuasiPoset, Q: QuasiPoset) -> bool:
    return canonical_form(P)[0] == canonical_form(Q)[0]


# -- enumeration ---------------------------------------------------------------

def extensions(P: QuasiPoset) -> Iterator[QuasiPoset]:
    """All quasi-posets on ``n+1`` points whose restriction to the first ``n`` is ``P``."""
    n = P.n
    v = 1 << n
    ups = open_masks(P)
    downs = down_masks(P)
    for D in downs:
        for U in ups:
            if any(U & ~P.up[d] for d in bits(D)):
                continue
            up = [u | U | v if D >> i & 1 else u for i, u in enumerate(P.up)]
            up.append(U | v)
            yield QuasiPoset(n + 1, _close(up))


def enumerate_qp(n: int, labeled: bool = True, posets_only: bool = False) -> list:
    """All quasi-posets on ``n`` points.

    Labeled mode returns ``QuasiPoset`` values; iso mode returns one
    ``IsoClass`` per isomorphism class, sorted by key.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if labeled and n > MAX_LABELED_N:
        raise CapacityError(f"labeled enumeration supported up to n={MAX_LABELED_N}")
    if not labeled and n > MAX_ISO_N:
        raise CapacityError(f"iso enumeration supported up to n={MAX_ISO_N}")
    if labeled:
        level = [QuasiPoset.empty()]
        for _ in range(n):
            level = [Q for P in level for Q in extensions(P) if not posets_only or Q.is_poset()]
        return sorted(level)
    return list(_iso_level(n, posets_only))


@lru_cache(maxsize=None)
def _iso_level(n: int, posets_only: bool) -> tuple[IsoClass, ...]:
    if n == 0:
        return (iso(QuasiPoset.empty()),)
    found = {}
    for c in _iso_level(n - 1, posets_only):
        for Q in extensions(c.rep):
            if posets_only and not Q.is_poset():
                continue
            k = iso(Q)
            found.setdefault(k.key, k)
    return tuple(sorted(found.values()))


def connected_iso_classes(max_n: int, posets_only: bool = False, min_n: int = 1) -> list[IsoClass]:
    return [c for n in range(min_n, max_n + 1)
            for c in enumerate_qp(n, labeled=False, posets_only=posets_only)
            if c.rep.is_connected()]


# -- text grammar ----------------------------------------------------------------

_HEADER = re.compile(r"\s*(\d+)\s*:")
_REL = re.compile(r"\s*(\d+)\s*([<~])\s*(\d+)")


def parse_qp(text: str) -> QuasiPoset:
    """Parse ``"n: i<j i~j ..."`` with vertices numbered from 1."""
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected '<n>:'", text, 0)
    n = int(m.group(1))
    pos = m.end()
    rels = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        r = _REL.match(text, pos)
        if not r:
            raise ParseError("expected relation 'i<j' or 'i~j'", text, pos)
        i, j = int(r.group(1)), int(r.group(3))
        for v, at in ((i, r.start(1)), (j, r.start(3))):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} out of range 1..{n}", text, at)
        rels.append((i - 1, j - 1, LE if r.group(2) == "<" else EQUIV))
        pos = r.end()
    return QuasiPoset.from_generators(n, rels)


def to_text(P: QuasiPoset) -> str:
    """Covering relations of the quotient plus a chain of ``~`` per class."""
    Q = P.quotient
    reps = [min(c) for c in Q.classes]
    rels = []
    for c in Q.classes:
        members = sorted(c)
        rels += [(a, b, EQUIV) for a, b in zip(members, members[1:])]
    for a in range(Q.cl):
        for b in bits(Q.above[a]):
            # covering: nothing strictly between
            if not any(Q.above[a] >> c & 1 and Q.above[c] >> b & 1 for c in range(Q.cl)):
                rels.append((reps[a], reps[b], LE))
    rels.sort()
    body = " ".join(f"{i + 1}{k}{j + 1}" for i, j, k in rels)
    return f"{P.n}: {body}".rstrip()
