import warnings
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from oracles import count_linear_extensions, monotone_words, quasi_posets
from qpehr import characters as ch
from qpehr.cache import HEADER, ValueCache
from qpehr.ehrhart import CountMode, corolla, ehr_polynomial
from qpehr.errors import NotInvertibleError
from qpehr.hopf import eps_prime
from qpehr.poly import X
from qpehr.qposet import QuasiPoset, connected_iso_classes, enumerate_qp, iso, product_disjoint

CONNECTED_4 = connected_iso_classes(4)


def brute_alpha(P, strict):
    """Derivative at 0 of the interpolant through brute map counts at 0..n."""
    n = P.n
    ys = [sum(1 for _ in monotone_words(P, k, strict)) for k in range(n + 1)]
    # Lagrange basis derivative at 0
    total = Fraction(0)
    for i in range(n + 1):
        others = [j for j in range(n + 1) if j != i]
        denom = 1
        for j in others:
            denom *= i - j
        deriv = Fraction(0)
        for skip in others:
            term = 1
            for j in others:
                if j != skip:
                    term *= -j
            deriv += term
        total += ys[i] * deriv / denom
    return total


def test_table_values(named):
    assert ch.LAMBDA(named["C2"]) == Fraction(1, 2)
    assert ch.LAMBDA(named["V"]) == Fraction(1, 3) == ch.LAMBDA(named["Lam"])
    assert ch.LAMBDA(named["C3"]) == Fraction(1, 6)
    assert ch.ALPHA(named["C3"]) == Fraction(1, 3)
    assert ch.ALPHA(named["V"]) == Fraction(1, 6)
    assert ch.ALPHA(corolla(3)) == 0
    assert ch.EPS_PRIME(named["C2"]) == 0 and ch.IOTA(named["C2"]) == 1


@pytest.mark.parametrize("c", CONNECTED_4, ids=str)
def test_builtins_against_brute_force(c):
    P = c.rep
    assert ch.LAMBDA(P) == Fraction(count_linear_extensions(P), factorial(P.cl))
    assert ch.ALPHA(P) == brute_alpha(P, strict=False)
    assert ch.ALPHA_STR(P) == brute_alpha(P, strict=True)
    assert ch.EPS_PRIME(P) == eps_prime(P)


@given(quasi_posets(3), quasi_posets(3))
def test_multiplicative(P, Q):
    for chi in (ch.LAMBDA, ch.ALPHA, ch.ALPHA_STR, ch.BETA, ch.EPS_PRIME):
        assert chi(product_disjoint(P, Q)) == chi(P) * chi(Q)
        assert chi(QuasiPoset.empty()) == 1


def test_small_convolutions(named):
    assert (ch.LAMBDA * ch.ALPHA_STR)(named["C2"]) == 0
    for c in enumerate_qp(4, labeled=False):
        assert (ch.LAMBDA * ch.ALPHA)(c) == 1


def test_monoid_laws():
    chars = (ch.LAMBDA, ch.ALPHA, ch.BETA)
    for a in chars:
        assert ch.characters_equal(ch.EPS_PRIME * a, a)
        assert ch.characters_equal(a * ch.EPS_PRIME, a)
    a, b, c = chars
    assert ch.characters_equal((a * b) * c, a * (b * c))


def test_lambda_inverse_is_alpha_str():
    assert ch.characters_equal(ch.LAMBDA * ch.ALPHA_STR, ch.EPS_PRIME, 5)
    assert ch.characters_equal(ch.ALPHA_STR * ch.LAMBDA, ch.EPS_PRIME, 5)
    inv = ch.inverse(ch.LAMBDA)
    assert inv(QuasiPoset.chain(2)) == Fraction(-1, 2)
    assert ch.characters_equal(inv, ch.ALPHA_STR, 5)


def test_alpha_inverse_is_beta(named):
    inv = ch.inverse(ch.ALPHA)
    assert inv(named["C3"]) == Fraction(1, 6) == ch.BETA(named["C3"])
    assert ch.characters_equal(inv, ch.BETA, 4)
    for c in enumerate_qp(4, labeled=False):
        P = c.rep
        assert ch.BETA(P) == (-1) ** ((P.cl + P.cc) % 2) * ch.LAMBDA(P)
        assert ch.ALPHA(P) == (-1) ** ((P.cl + P.cc) % 2) * ch.ALPHA_STR(P)


def test_inverse_of_unit():
    assert ch.characters_equal(ch.inverse(ch.EPS_PRIME), ch.EPS_PRIME)


def test_non_invertible_raises():
    zero_on_pairs = ch.Character(lambda P: 0 if P.n == 2 and P.cl == 1 else 1)
    with pytest.raises(NotInvertibleError):
        ch.inverse(zero_on_pairs)
    late = ch.Character(lambda P: 0 if P.n == 3 and P.cl == 1 else 1)
    inv = ch.inverse(late, bound=2)
    with pytest.raises(NotInvertibleError):
        inv(QuasiPoset.chain(3))


def test_first_difference_reports_smallest_class():
    diff = ch.first_difference(ch.LAMBDA, ch.ALPHA_STR)
    assert diff is not None
    c, a, b = diff
    assert c.rep.n == 2 and a != b
    assert ch.first_difference(ch.LAMBDA, ch.LAMBDA) is None


@pytest.mark.parametrize("c", enumerate_qp(4, labeled=False), ids=str)
def test_morphism_from_character(c):
    P = c.rep
    assert ch.morphism_from_character(P, ch.ALPHA) == ehr_polynomial(P)
    assert ch.morphism_from_character(P, ch.ALPHA_STR) == ehr_polynomial(P, CountMode.STRICT)
    assert ch.morphism_from_character(P, ch.ALPHA)(1) == 1
    assert ch.morphism_from_character(P, ch.ALPHA_STR)(1) == eps_prime(P)


def test_morphism_examples(named):
    assert ch.morphism_from_character(named["C2"], ch.EPS_PRIME) == X * X / 2
    assert ch.morphism_from_character(named["V"], ch.ALPHA_STR) == \
        X * (X - 1) * (2 * X - 1) / 6


@pytest.mark.parametrize("c", enumerate_qp(4, labeled=False), ids=str)
def test_lambda_invariances(c):
    P = c.rep
    assert ch.LAMBDA(P) == ch.LAMBDA(P.quotient.as_poset())
    assert ch.LAMBDA(P) == ch.LAMBDA(P.opposite())


def test_cache_round_trip(tmp_path):
    path = tmp_path / "values.tsv"
    cache = ValueCache(path)
    cache.put("lambda", b"\x01\x02", Fraction(-3, 7))
    cache.save()
    text = path.read_text().splitlines()
    assert text == [HEADER, "lambda\t0102\t-3/7"]
    assert ValueCache(path).get("lambda", b"\x01\x02") == Fraction(-3, 7)
    assert ValueCache(tmp_path / "missing.tsv").get("lambda", b"") is None


def test_corrupt_cache_is_discarded(tmp_path):
    path = tmp_path / "values.tsv"
    path.write_text("garbage\n")
    cache = ValueCache(path)
    with pytest.warns(UserWarning):
        assert cache.get("lambda", b"\x00") is None
    cache.save()
    assert path.read_text() == HEADER + "\n"


def test_character_uses_attached_cache(tmp_path):
    cache = ValueCache(tmp_path / "values.tsv")
    calls = []

    def f(P):
        calls.append(P)
        return P.n

    chi = ch.Character(f, "probe", persist=True)
    ch.attach_cache(cache)
    try:
        assert chi(QuasiPoset.chain(3)) == 3
        cache.save()
        key = iso(QuasiPoset.chain(3)).key
        assert ValueCache(tmp_path / "values.tsv").get("probe", key) == 3
        fresh = ch.Character(lambda P: 99, "probe", persist=True)
        ch.attach_cache(ValueCache(tmp_path / "values.tsv"))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert fresh(QuasiPoset.chain(3)) == 3
    finally:
        ch.attach_cache(None)
    assert len(calls) == 1
