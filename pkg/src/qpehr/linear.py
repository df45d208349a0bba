"""Formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping


def sort_key(b: Any):
    # plain basis elements sort before tensors, tensors by arity then legwise
    if type(b) is tuple:
        return (1, len(b), tuple(sort_key(x) for x in b))
    key = getattr(b, "sort_key", None)
    return (0, key() if callable(key) else b)


class LinComb:
    """A finitely supported map from basis elements to non-zero rationals.

    Basis elements are any hashable values; tensors are represented by
    tuples of basis elements.  Values are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            acc[b] = acc.get(b, 0) + c
        self._terms = {b: Fraction(c) for b, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, b, coeff=1) -> LinComb:
        return cls({b: coeff})

    @classmethod
    def zero(cls) -> LinComb:
        return cls()

    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda t: sort_key(t[0]))

    def coefficient(self, b) -> Fraction:
        return self._terms.get(b, Fraction(0))

    __getitem__ = coefficient

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LinComb) -> LinComb:
        acc = dict(self._terms)
        for b, c in other._terms.items():
            acc[b] = acc.get(b, 0) + c
        return LinComb(acc)

    def __neg__(self) -> LinComb:
        return LinComb({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def __mul__(self, scalar) -> LinComb:
        if isinstance(scalar, LinComb):
            return NotImplemented
        return LinComb({b: c * scalar for b, c in self._terms.items()})

    __rmul__ = __mul__

    def map(self, f: Callable[[Any], LinComb]) -> LinComb:
        """Linear extension of ``f`` from basis elements to combinations."""
        acc: dict = {}
        for b, c in self._terms.items():
            for b2, c2 in f(b).items():
                acc[b2] = acc.get(b2, 0) + c * c2
        return LinComb(acc)

    def map_basis(self, f: Callable[[Any], Any]) -> LinComb:
        acc: dict = {}
        for b, c in self._terms.items():
            b2 = f(b)
            acc[b2] = acc.get(b2, 0) + c
        return LinComb(acc)

    def evaluate(self, f: Callable[[Any], Any]):
        """Apply a scalar-valued linear form."""
        return sum((c * f(b) for b, c in self._terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"LinComb({render_text(self)})"


def as_lincomb(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.basis(x)


def bilinear(f: Callable[[Any, Any], LinComb], x, y) -> LinComb:
    x, y = as_lincomb(x), as_lincomb(y)
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for t, ct in as_lincomb(f(a, b)).items():
                acc[t] = acc.get(t, 0) + ca * cb * ct
    return LinComb(acc)


def tensor(*xs) -> LinComb:
    """Tensor product: basis elements become tuples."""
    acc = {(): Fraction(1)}
    for x in xs:
        nxt: dict = {}
        for t, c in acc.items():
            for b, cb in as_lincomb(x).items():
                k = t + (b,)
                nxt[k] = nxt.get(k, 0) + c * cb
        acc = nxt
    return LinComb(acc)


def apply_legs(x: LinComb, *fs: Callable[[Any], Any]) -> LinComb:
    """``(f1 (x) f2 (x) ...)`` applied to a tensor; each ``fi`` returns a basis element or LinComb."""
    return x.map(lambda t: tensor(*(f(b) for f, b in zip(fs, t))))


def identity(b):
    return b


# -- rendering ---------------------------------------------------------------------

def _basis_text(b) -> str:
    if type(b) is tuple:
        return " ⊗ ".join(_basis_text(x) for x in b)
    text = getattr(b, "term_text", None)
    return text() if callable(text) else str(b)


def render_text(x: LinComb) -> str:
    if not x:
        return "0"
    parts = []
    for b, c in x.sorted_items():
        body = _basis_text(b)
        if c == 1:
            term = body
        elif c == -1:
            term = f"-{body}"
        else:
            term = f"{c}*{body}"
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _basis_json(b):
    if type(b) is tuple:
        return [_basis_json(x) for x in b]
    js = getattr(b, "to_json", None)
    return js() if callable(js) else str(b)


def to_json(x: LinComb) -> list:
    return [{"c": str(c), "b": _basis_json(b)} for b, c in x.sorted_items()]


def from_json(data: list, decode: Callable[[Any], Any]) -> LinComb:
    """Inverse of :func:`to_json`; ``decode`` turns one leg's JSON into a basis element."""
    def leg(v):
        if isinstance(v, list) and v and isinstance(v[0], (list, str)) and not all(
                isinstance(t, int) for t in v):
            return tuple(decode(t) for t in v)
        return decode(v)
    return LinComb((leg(t["b"]), Fraction(t["c"])) for t in data)
