import random
from fractions import Fraction
from math import comb

import pytest

from hadamard_spaces.poly import SparsePoly, monomials_of_degree, proportional


def x(i, n=2):
    return SparsePoly.variable(n, i)


def test_difference_of_squares():
    f = (x(0) + x(1)) * (x(0) - x(1))
    assert f == x(0) * x(0) - x(1) * x(1)


def test_eval():
    f = x(0) * x(0) - x(1) * x(1)
    assert f.eval([3, 2]) == 5


def test_mul_by_zero_empties_terms():
    f = x(0) + x(1)
    z = f * SparsePoly.zero(2)
    assert z.is_zero() and z.terms == {}


def test_zero_iff_empty_term_map():
    assert SparsePoly(3, {(0, 0, 0): 0}).is_zero()
    assert not SparsePoly(3, {(1, 0, 0): "1/2"}).is_zero()


def random_poly(rng, nvars=3, nterms=4, deg=3):
    terms = {}
    for _ in range(nterms):
        expo = tuple(rng.randint(0, deg) for _ in range(nvars))
        terms[expo] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return SparsePoly(nvars, terms)


def test_ring_axioms_randomized():
    rng = random.Random(11)
    for _ in range(30):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f
        assert f * g == g * f
        assert (f - f).is_zero()


def test_eval_is_ring_hom():
    rng = random.Random(12)
    for _ in range(20):
        f, g = random_poly(rng), random_poly(rng)
        pt = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)]
        assert (f * g).eval(pt) == f.eval(pt) * g.eval(pt)
        assert (f + g).eval(pt) == f.eval(pt) + g.eval(pt)


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        SparsePoly.variable(2, 0) + SparsePoly.variable(3, 0)
    with pytest.raises(ValueError):
        SparsePoly.variable(2, 0).eval([1, 2, 3])


def test_primitive():
    f = SparsePoly(2, {(1, 0): "-2/3", (0, 1): "-4/3"})
    g = f.primitive()
    assert g.terms == {(1, 0): Fraction(1), (0, 1): Fraction(2)}
    assert proportional(f, g)
    assert SparsePoly.zero(2).primitive().is_zero()


def test_proportional():
    f = SparsePoly(2, {(1, 0): 2, (0, 1): 4})
    g = SparsePoly(2, {(1, 0): -1, (0, 1): -2})
    h = SparsePoly(2, {(1, 0): 1, (0, 1): 3})
    assert proportional(f, g)
    assert not proportional(f, h)
    assert proportional(SparsePoly.zero(2), SparsePoly.zero(2))
    assert not proportional(f, SparsePoly.zero(2))


def test_monomials_of_degree():
    for n, d in [(1, 3), (3, 2), (4, 3), (6, 3)]:
        monos = monomials_of_degree(n, d)
        assert len(monos) == comb(n + d - 1, d)
        assert len(set(monos)) == len(monos)
        assert all(sum(m) == d for m in monos)


def test_json_round_trip():
    f = SparsePoly(3, {(2, 0, 1): "7/2", (0, 1, 0): -3})
    assert SparsePoly.from_json(3, f.to_json()) == f


def test_str():
    f = SparsePoly(3, {(2, 0, 0): 9, (0, 0, 1): -1})
    assert str(f) == "9*x0^2 - x2"
