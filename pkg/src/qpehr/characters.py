"""Characters of the isomorphism-class bialgebra with the internal coproduct.

A character is multiplicative for the disjoint product, so it is stored by
its values on connected isomorphism classes only.  Convolution uses the
extraction-contraction coproduct; the unit is ``EPS_PRIME``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable

from .ehrhart import CountMode, ehr_polynomial, heap_stats
from .errors import NotInvertibleError
from .hopf import compatible_equivalences, contract, restrict_by_eq
from .poly import Polynomial
from .qposet import IsoClass, QuasiPoset, connected_iso_classes, iso, restrict_mask
from .cache import ValueCache

DEFAULT_BOUND = 6

_persistent: ValueCache | None = None


def attach_cache(cache: ValueCache | None) -> None:
    """Back the memo tables of named characters with ``cache``."""
    global _persistent
    _persistent = cache


class Character:
    """Multiplicative functional on quasi-posets, memoized on connected classes.

    ``on_connected`` receives the canonical representative of a connected
    isomorphism class.
    """

    def __init__(self, on_connected: Callable[[QuasiPoset], object], name: str | None = None,
                 persist: bool = False):
        self.name = name
        self._f = on_connected
        self._memo: dict[bytes, Fraction] = {}
        self._lock = threading.Lock()
        self._persist = persist and name is not None

    def connected_value(self, c: IsoClass) -> Fraction:
        v = self._memo.get(c.key)
        if v is not None:
            return v
        if self._persist and _persistent is not None:
            v = _persistent.get(self.name, c.key)
        if v is None:
            v = Fraction(self._f(c.rep))
            if self._persist and _persistent is not None:
                _persistent.put(self.name, c.key, v)
        with self._lock:
            self._memo.setdefault(c.key, v)
        return v

    def __call__(self, P) -> Fraction:
        if isinstance(P, IsoClass):
            P = P.rep
        out = Fraction(1)
        for comp in P.components():
            out *= self.connected_value(iso(restrict_mask(P, comp)))
            if not out:
                break
        return out

    def __mul__(self, other: Character) -> Character:
        return convolve(self, other)

    def __repr__(self) -> str:
        return f"Character({self.name or '?'})"


EPS_PRIME = Character(lambda P: 1 if P.cl == 1 else 0, "eps'")
IOTA = Character(lambda P: 1, "iota")
LAMBDA = Character(lambda P: heap_stats(P).lambda_value, "lambda", persist=True)
ALPHA = Character(lambda P: ehr_polynomial(P, CountMode.WEAK).derivative()(0), "alpha",
                  persist=True)
ALPHA_STR = Character(lambda P: ehr_polynomial(P, CountMode.STRICT).derivative()(0),
                      "alpha-str", persist=True)
BETA = Character(lambda P: (-1) ** ((P.cl + 1) % 2) * heap_stats(P).lambda_value, "beta")

BUILTIN = {c.name: c for c in (EPS_PRIME, IOTA, LAMBDA, ALPHA, ALPHA_STR, BETA)}


def builtin_character(name: str) -> Character:
    return BUILTIN[name]


def convolve(a: Character, b: Character) -> Character:
    """``(a*b)(P) = sum a(P/~) b(P|~)`` over compatible equivalences."""
    def f(P: QuasiPoset) -> Fraction:
        return sum((a(contract(P, eq)) * b(restrict_by_eq(P, eq))
                    for eq in compatible_equivalences(P)), Fraction(0))
    name = f"{a.name}*{b.name}" if a.name and b.name else None
    return Character(f, name)


def inverse(a: Character, bound: int = DEFAULT_BOUND) -> Character:
    """Right inverse for convolution, which is also a left inverse.

    Solved by induction: for connected ``P`` on ``n`` points the only term
    of ``(a*b)(P)`` that involves ``b(P)`` is the one-block equivalence,
    whose contraction is the single class on ``n`` points.
    """
    for k in range(1, bound + 1):
        if a(QuasiPoset.single_class(k)) == 0:
            raise NotInvertibleError(f"{a!r} vanishes on the single class of size {k}")

    def f(P: QuasiPoset) -> Fraction:
        pivot = a(QuasiPoset.single_class(P.n))
        if pivot == 0:
            raise NotInvertibleError(f"{a!r} vanishes on the single class of size {P.n}")
        acc = Fraction(1 if P.cl == 1 else 0)
        for eq in compatible_equivalences(P):
            if eq.cl == 1:
                continue
            acc -= a(contract(P, eq)) * b(restrict_by_eq(P, eq))
        return acc / pivot

    b = Character(f, f"{a.name}^-1" if a.name else None)
    return b


def morphism_from_character(P, chi: Character) -> Polynomial:
    """``sum lambda(P/~) chi(P|~) X^{cl(~)}``: the polynomial morphism attached to ``chi``."""
    if isinstance(P, IsoClass):
        P = P.rep
    coeffs: dict[int, Fraction] = {}
    for eq in compatible_equivalences(P):
        c = LAMBDA(contract(P, eq)) * chi(restrict_by_eq(P, eq))
        if c:
            coeffs[eq.cl] = coeffs.get(eq.cl, 0) + c
    top = max(coeffs, default=0)
    return Polynomial(coeffs.get(i, 0) for i in range(top + 1))


def characters_equal(a: Character, b: Character, max_n: int = 4) -> bool:
    return all(a.connected_value(c) == b.connected_value(c)
               for c in connected_iso_classes(max_n))


def first_difference(a: Character, b: Character, max_n: int = 4):
    for c in connected_iso_classes(max_n):
        if a.connected_value(c) != b.connected_value(c):
            return c, a.connected_value(c), b.connected_value(c)
    return None
