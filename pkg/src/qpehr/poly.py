"""Exact univariate polynomials over the rationals and the binomial basis.

``H_k(X) = X(X-1)...(X-k+1)/k!``.  Coordinates in this basis are the
forward differences of the polynomial at 0 (Newton interpolation), which
is how the basis change is computed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class Polynomial:
    """Dense polynomial in ``X``; ``coeffs[i]`` is the coefficient of ``X^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _lift(other) -> Polynomial:
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other) -> Polynomial:
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other) -> Polynomial:
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Polynomial:
        return Polynomial(c / Fraction(scalar) for c in self.coeffs)

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        # Horner; works for any ring element supporting + and *
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, Polynomial) else Fraction(acc)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, q: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def reflect(self) -> Polynomial:
        """``p(X) -> p(-X)``."""
        return Polynomial(-c if i % 2 else c for i, c in enumerate(self.coeffs))

    def shift(self, a) -> Polynomial:
        """``p(X) -> p(X + a)``."""
        return self.compose(Polynomial([a, 1]))

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        return cls(Fraction(c) for c in data["coeffs"])


X = Polynomial.x()


@lru_cache(maxsize=None)
def hilbert(k: int) -> Polynomial:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Polynomial([1])
    return hilbert(k - 1) * Polynomial([Fraction(-(k - 1), k), Fraction(1, k)])


def to_hilbert_basis(p: Polynomial) -> list[Fraction]:
    """Coordinates ``c`` with ``p = sum c[k] H_k``."""
    vals = [p(i) for i in range(len(p.coeffs))]
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    while out and out[-1] == 0:
        out.pop()
    return out


def from_hilbert_basis(coords: Sequence) -> Polynomial:
    acc = Polynomial()
    for k, c in enumerate(coords):
        if c:
            acc = acc + hilbert(k) * Fraction(c)
    return acc


def l_operator(p: Polynomial) -> Polynomial:
    """The linear map ``H_k -> H_{k+1}``; ``L(p)(n+1) = p(0) + ... + p(n)``."""
    return from_hilbert_basis([0] + to_hilbert_basis(p))


def evaluate_at(p: Polynomial, x) -> Fraction:
    return p(Fraction(x))


def reflect_negate(p: Polynomial) -> Polynomial:
    return p.reflect()
