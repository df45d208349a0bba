"""The two coproducts on quasi-posets and the maps built from them.

``delta_coproduct`` cuts along open sets (the topology coproduct);
``internal_coproduct`` contracts and extracts along compatible
equivalences.  Both act on :class:`LinComb` over labeled quasi-posets;
``canonicalize`` sends anything to the isomorphism-class basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .errors import InputError
from .linear import LinComb, as_lincomb, bilinear
from .qposet import (IsoClass, QuasiPoset, _close, bits, iso, iso_product, open_masks,
                     product_disjoint, product_ordinal, restrict_mask)


class Grading(enum.Enum):
    VERTICES = "vertices"
    CLASSES = "classes"


class Counit(enum.Enum):
    EPS = "eps"
    EPS_PRIME = "eps'"


@dataclass(frozen=True, order=True)
class Equivalence:
    """A set partition of ``range(n)``, blocks as bitmasks ordered by least element."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        seen = 0
        for b in self.blocks:
            if not b or b & seen:
                raise InputError("blocks must be non-empty and disjoint")
            seen |= b
        if seen != full:
            raise InputError("blocks must cover every vertex")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> Equivalence:
        masks = [sum(1 << v for v in b) for b in blocks]
        return cls(n, tuple(sorted(masks, key=lambda m: m & -m)))

    @classmethod
    def discrete(cls, n: int) -> Equivalence:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def whole(cls, n: int) -> Equivalence:
        return cls(n, ((1 << n) - 1,) if n else ())

    @property
    def cl(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> int:
        for b in self.blocks:
            if b >> i & 1:
                return b
        raise InputError(f"vertex {i} not covered")

    def as_sets(self) -> list[frozenset]:
        return [frozenset(bits(b)) for b in self.blocks]

    def __str__(self) -> str:
        return "".join("{" + ",".join(str(v + 1) for v in bits(b)) + "}" for b in self.blocks)


def set_partitions(n: int) -> Iterator[Equivalence]:
    """All set partitions of ``range(n)`` via restricted growth strings."""
    def grow(i: int, blocks: list[int]):
        if i == n:
            yield Equivalence(n, tuple(blocks))
            return
        for k in range(len(blocks)):
            blocks[k] |= 1 << i
            yield from grow(i + 1, blocks)
            blocks[k] &= ~(1 << i)
        blocks.append(1 << i)
        yield from grow(i + 1, blocks)
        blocks.pop()
    yield from grow(0, [])


def contract(P: QuasiPoset, eq: Equivalence) -> QuasiPoset:
    """``P/~``: closure of ``<=`` together with ``~``, on the same vertices."""
    return QuasiPoset(P.n, _close([u | eq.block_of(i) for i, u in enumerate(P.up)]))


def restrict_by_eq(P: QuasiPoset, eq: Equivalence) -> QuasiPoset:
    """``P|~``: keep only the relations inside a block."""
    return QuasiPoset(P.n, tuple(u & eq.block_of(i) for i, u in enumerate(P.up)))


def _connected_on(P: QuasiPoset, mask: int) -> bool:
    start = mask & -mask
    comp, frontier = 0, start
    while frontier:
        comp |= frontier
        nxt = 0
        for j in bits(frontier):
            nxt |= (P.up[j] | P.down[j]) & mask
        frontier = nxt & ~comp
    return comp == mask


@lru_cache(maxsize=None)
def compatible_equivalences(P: QuasiPoset) -> tuple[Equivalence, ...]:
    out = []
    for eq in set_partitions(P.n):
        if not all(_connected_on(P, b) for b in eq.blocks):
            continue
        Q = contract(P, eq)
        if all(Q.class_mask(i) == eq.block_of(i) for i in range(P.n)):
            out.append(eq)
    return tuple(out)


# -- coproducts -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_basis(P: QuasiPoset) -> LinComb:
    full = (1 << P.n) - 1
    return LinComb(((restrict_mask(P, full & ~O), restrict_mask(P, O)), 1)
                   for O in open_masks(P))


def _lift(f: Callable) -> Callable:
    def g(b):
        if isinstance(b, IsoClass):
            return canonicalize(f(b.rep))
        return f(b)
    return g


def delta_coproduct(x) -> LinComb:
    """Topology coproduct: complement of each open set on the left, the open set on the right."""
    return as_lincomb(x).map(_lift(_delta_basis))


@lru_cache(maxsize=None)
def _internal_basis(P: QuasiPoset) -> LinComb:
    return LinComb(((contract(P, eq), restrict_by_eq(P, eq)), 1)
                   for eq in compatible_equivalences(P))


def internal_coproduct(x) -> LinComb:
    """Extraction-contraction coproduct ``P -> sum P/~ (x) P|~``."""
    return as_lincomb(x).map(_lift(_internal_basis))


def coaction(x) -> LinComb:
    """Internal coproduct with the right leg sent to its isomorphism class."""
    return internal_coproduct(x).map_basis(lambda t: (t[0], iso(t[1])))


def _rep(b) -> QuasiPoset:
    return b.rep if isinstance(b, IsoClass) else b


def counit(x, mode: Counit = Counit.EPS) -> Fraction:
    x = as_lincomb(x)
    if mode is Counit.EPS:
        return x.evaluate(lambda b: 1 if _rep(b).n == 0 else 0)
    return x.evaluate(lambda b: 1 if _rep(b).is_discrete() else 0)


def eps_prime(P) -> int:
    return 1 if _rep(P).is_discrete() else 0


# -- products ---------------------------------------------------------------------

def _mul_basis(a, b):
    if isinstance(a, IsoClass) and isinstance(b, IsoClass):
        return iso_product(a, b)
    return product_disjoint(_rep(a), _rep(b))


def product(x, y) -> LinComb:
    return bilinear(_mul_basis, x, y)


def ordinal(x, y) -> LinComb:
    return bilinear(lambda a, b: product_ordinal(_rep(a), _rep(b)), x, y)


def tensor_product(x: LinComb, y: LinComb) -> LinComb:
    """Product in the tensor-square algebra, leg by leg."""
    def mul(s, t):
        return LinComb.basis(tuple(_mul_basis(a, b) for a, b in zip(s, t)))
    return bilinear(mul, x, y)


def unit(iso_basis: bool = False):
    e = QuasiPoset.empty()
    return iso(e) if iso_basis else e


# -- antipode ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_basis(P: QuasiPoset) -> LinComb:
    if P.n == 0:
        return LinComb.basis(P)
    full = (1 << P.n) - 1
    acc = LinComb.basis(P, -1)
    for O in open_masks(P):
        if O == 0 or O == full:
            continue
        left = _antipode_basis(restrict_mask(P, full & ~O))
        acc = acc - product(left, restrict_mask(P, O))
    return acc


def antipode(x) -> LinComb:
    return as_lincomb(x).map(_lift(_antipode_basis))


# -- endomorphisms ------------------------------------------------------------------

def phi_endomorphism(x, chi: Callable[[QuasiPoset], object]) -> LinComb:
    """``P -> sum chi(P|~) P/~`` over compatible equivalences."""
    def f(P: QuasiPoset) -> LinComb:
        return LinComb((contract(P, eq), chi(restrict_by_eq(P, eq)))
                       for eq in compatible_equivalences(P))
    return as_lincomb(x).map(_lift(f))


def theta(x) -> LinComb:
    return phi_endomorphism(x, lambda Q: 1)


def theta_inverse(x) -> LinComb:
    def f(P: QuasiPoset) -> LinComb:
        return LinComb((contract(P, eq), (-1) ** ((P.cl + eq.cl) % 2))
                       for eq in compatible_equivalences(P))
    return as_lincomb(x).map(_lift(f))


def psi(x) -> LinComb:
    return as_lincomb(x).map(lambda b: LinComb.basis(b, (-1) ** (_rep(b).cl % 2)))


# -- canonicalization and grading ------------------------------------------------------

def _canon_basis(b):
    if type(b) is tuple:
        return tuple(_canon_basis(x) for x in b)
    if isinstance(b, QuasiPoset):
        return iso(b)
    return b


def canonicalize(x) -> LinComb:
    return as_lincomb(x).map_basis(_canon_basis)


def degree(b, mode: Grading = Grading.VERTICES) -> int:
    P = _rep(b)
    return P.n if mode is Grading.VERTICES else P.cl


def homogeneous_component(x, d: int, mode: Grading = Grading.VERTICES) -> LinComb:
    return LinComb((b, c) for b, c in as_lincomb(x).items() if degree(b, mode) == d)
