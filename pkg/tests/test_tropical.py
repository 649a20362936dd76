import random
import warnings
from fractions import Fraction
from math import comb, factorial

import pytest

from hadamard_spaces.linalg import PreconditionError
from hadamard_spaces.tropical import (NonGenericVector, SignedCone, SignedConeFan,
                                      _fm_feasible, cone_pair_meets,
                                      degree_linear_products,
                                      degree_with_reciprocals,
                                      draw_generic_vector, fan_degree_pipeline,
                                      genericity_bound, lattice_index,
                                      minkowski_sum, negate_fan,
                                      stable_mult_origin, stable_mult_origin_auto,
                                      standard_tls)


def test_standard_tls_cone_counts():
    assert len(standard_tls(0, 4).cones) == 1
    assert standard_tls(0, 4).dim == 0
    assert len(standard_tls(1, 3).cones) == 4
    fan = standard_tls(2, 3)
    assert len(fan.cones) == 6
    assert all(c.mult == 1 for c in fan.cones)
    with pytest.raises(PreconditionError):
        standard_tls(4, 3)


def test_negate_fan():
    fan = standard_tls(1, 3)
    neg = negate_fan(fan)
    assert all(not c.plus and len(c.minus) == 1 for c in neg.cones)
    assert negate_fan(neg) == fan
    zero = standard_tls(0, 3)
    assert negate_fan(zero) == zero


def test_signed_cone_validation():
    with pytest.raises(ValueError):
        SignedCone(frozenset([1]), frozenset([1]))
    with pytest.raises(ValueError):
        SignedCone(frozenset([1]), frozenset(), 0)


def test_lattice_index_basics():
    n = 4
    a = SignedCone(frozenset([0, 1]), frozenset())
    b = SignedCone(frozenset([2]), frozenset([3]))
    assert lattice_index([a], n) == 1
    assert lattice_index([a, b], n) == 1
    overlapping = SignedCone(frozenset([1, 2]), frozenset())
    with pytest.raises(PreconditionError):
        lattice_index([a, overlapping], n)


def test_minkowski_two_lines():
    fan = minkowski_sum([standard_tls(1, 3), standard_tls(1, 3)])
    assert fan.dim == 2
    assert len(fan.cones) == comb(4, 2)
    assert all(c.mult == 2 for c in fan.cones)
    assert fan.global_weight == 1


def test_minkowski_power_with_delta():
    r = 3
    fans = [standard_tls(1, 4) for _ in range(r)]
    fan = minkowski_sum(fans, delta=factorial(r))
    assert all(c.mult == factorial(r) for c in fan.cones)
    assert fan.global_weight == Fraction(1, factorial(r))
    # effective multiplicity r!/r! = 1
    assert all(c.mult * fan.global_weight == 1 for c in fan.cones)


def test_minkowski_plane_squares():
    fan = minkowski_sum([standard_tls(2, 5), standard_tls(2, 5)], delta=2)
    assert all(c.mult == comb(4, 2) for c in fan.cones)
    assert all(c.mult * fan.global_weight == 3 for c in fan.cones)


def test_minkowski_mixed_signs_skips_clashes():
    fan = minkowski_sum([standard_tls(1, 2), negate_fan(standard_tls(1, 2))])
    # cones pos(e_i) + neg(e_j) with i != j only
    assert len(fan.cones) == 6
    assert all(c.plus != c.minus and len(c.plus) == len(c.minus) == 1 for c in fan.cones)


def test_minkowski_dimension_overflow():
    with pytest.raises(PreconditionError):
        minkowski_sum([standard_tls(2, 3), standard_tls(2, 3)])


def test_balancing_of_produced_fans():
    assert standard_tls(2, 4).is_balanced()
    assert negate_fan(standard_tls(2, 4)).is_balanced()
    assert minkowski_sum([standard_tls(1, 4), standard_tls(1, 4)]).is_balanced()
    assert minkowski_sum([standard_tls(1, 4), negate_fan(standard_tls(1, 4))]).is_balanced()


def test_balancing_detects_bad_weights():
    cones = [SignedCone(frozenset([i]), frozenset(), 2 if i == 0 else 1) for i in range(3)]
    fan = SignedConeFan(2, 1, cones)
    assert not fan.is_balanced()


def test_fm_feasibility_basics():
    f = Fraction
    assert _fm_feasible([], [([f(1)], f(1), False)], 1)
    assert not _fm_feasible([], [([f(1)], f(1), False), ([f(-1)], f(-2), False)], 1)
    assert not _fm_feasible([([f(1)], f(3))], [([f(1)], f(1), False)], 1)
    assert _fm_feasible([([f(1)], f(3))], [([f(1)], f(5), False)], 1)
    assert not _fm_feasible([], [([f(1)], f(0), True), ([f(-1)], f(0), False)], 1)
    assert _fm_feasible([], [([f(1), f(1)], f(2), False), ([f(-1), f(0)], f(0), False)], 2)


def test_cone_pair_meets_shifted():
    n = 2
    v = (Fraction(5), Fraction(2), Fraction(0))
    up = SignedCone(frozenset([0]), frozenset())
    down = SignedCone(frozenset([2]), frozenset())
    # v - v_2 has positive 0-coordinate: pos(e0) meets pos(e2)+v via x = w0*e0.
    assert cone_pair_meets(up, down, v, n)
    # but pos(e1) cannot reach: would need the 0- and 2-coordinates equal
    mid = SignedCone(frozenset([1]), frozenset())
    assert not cone_pair_meets(mid, down, v, n)


def test_stable_mult_standard_complements():
    rng = random.Random(61)
    for m, n in [(1, 2), (1, 3), (2, 4), (2, 5), (0, 3)]:
        value = stable_mult_origin_auto(standard_tls(m, n), standard_tls(n - m, n), rng)
        assert value == 1


def test_stable_mult_respects_weights():
    rng = random.Random(62)
    fan = minkowski_sum([standard_tls(1, 4), standard_tls(1, 4)])  # weight-2 cones
    assert stable_mult_origin_auto(fan, standard_tls(2, 4), rng) == 2


def test_stable_mult_validation():
    rng = random.Random(63)
    with pytest.raises(PreconditionError):
        stable_mult_origin(standard_tls(1, 3), standard_tls(1, 3),
                           draw_generic_vector(3, rng))
    bad_v = (Fraction(1), Fraction(1), Fraction(2), Fraction(3))
    with pytest.raises(NonGenericVector):
        stable_mult_origin(standard_tls(1, 3), standard_tls(2, 3), bad_v)


def test_draw_generic_vector_distinct():
    rng = random.Random(64)
    for n in (2, 5, 8):
        v = draw_generic_vector(n, rng)
        assert len(set(v)) == n + 1


def test_degree_linear_products_values():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert degree_linear_products([(1, 1), (1, 1)], 3) == (2, 2)
        assert degree_linear_products([(2, 2)], 5) == (4, 3)
        assert degree_linear_products([(1, 1), (1, 1), (1, 1)], 8) == (3, 6)
        for r in (1, 2, 3, 5):
            assert degree_linear_products([(1, r)], 8) == (r, 1)


def test_degree_warning_below_bound():
    assert genericity_bound([(2, 2)]) == 5
    with pytest.warns(UserWarning):
        degree_linear_products([(2, 2)], 4)


def test_degree_with_reciprocals_values():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n in (2, 3, 4, 6):
            assert degree_with_reciprocals([], [(1, 1)], n) == (1, n)
        assert degree_with_reciprocals([], [(2, 1)], 3) == (2, 3)
        assert degree_with_reciprocals([(1, 1)], [(1, 1)], 3) == (2, 2)
    with pytest.raises(PreconditionError):
        degree_with_reciprocals([(2, 1)], [(2, 1)], 3)


def test_fan_pipeline_matches_closed_form_small_grid():
    rng = random.Random(65)
    cases = [
        ([(1, 2)], [], 4),
        ([(1, 1), (2, 1)], [], 5),
        ([(3, 1)], [], 6),
        ([(1, 1)], [(1, 1)], 4),
        ([], [(1, 2)], 5),
        ([(2, 1)], [(1, 1)], 6),
    ]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for plain, recip, n in cases:
            result = fan_degree_pipeline(plain, recip, n, rng)
            if recip:
                dim, degree = degree_with_reciprocals(plain, recip, n)
            else:
                dim, degree = degree_linear_products(plain, n)
            assert result["dim"] == dim
            assert result["degree"] == degree


def test_lattice_indices_always_one_regression():
    rng = random.Random(66)
    record = {}
    fan = minkowski_sum([standard_tls(1, 5), negate_fan(standard_tls(2, 5))])
    stable_mult_origin_auto(fan, standard_tls(2, 5), rng, record=record)
    assert record["pairs"]
    assert all(idx == 1 for _, _, idx in record["pairs"])
