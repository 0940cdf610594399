"""Composite-derivative polynomials, the dual-path expansion, and umbral shifts."""

from fractions import Fraction
from random import Random

import pytest

from formalcalc import qpoly
from formalcalc.checks import random_qpoly, verify_composition
from formalcalc.faadibruno import (
    FdbPoly,
    compose_expansion,
    compose_series_direct,
    compose_series_from_table,
    derivative_tower,
    substitute_weights,
    taylor_coefficients,
    umbral_shift,
)


def y(i):
    return FdbPoly.outer_symbol(i)


def x(j):
    return FdbPoly.inner_symbol(j)


def test_first_derivatives():
    tower = derivative_tower(3)
    assert tower[0] == y(0)
    assert tower[1] == y(1) * x(1)
    assert tower[2] == y(2) * x(1) ** 2 + y(1) * x(2)
    assert tower[3] == y(3) * x(1) ** 3 + 3 * y(2) * x(1) * x(2) + y(1) * x(3)


def test_derive_step():
    assert y(0).derive() == y(1) * x(1)
    assert x(2).derive() == x(3)
    assert (y(1) * x(2)).derive() == y(2) * x(1) * x(2) + y(1) * x(3)


def test_monomial_counts_are_partition_numbers():
    partitions = [1, 1, 2, 3, 5, 7, 11]
    tower = derivative_tower(6)
    for n, want in enumerate(partitions):
        assert len(tower[n].sorted_terms()) == want, n


def test_taylor_coefficients_divide_by_factorials():
    coeffs = taylor_coefficients(4)
    tower = derivative_tower(4)
    assert coeffs[3] == tower[3] * Fraction(1, 6)
    assert coeffs[4] == tower[4] * Fraction(1, 24)


def test_fdbpoly_arithmetic():
    p = y(1) * x(1) + 2
    q = p - 2
    assert q == y(1) * x(1)
    assert (p * 0) == FdbPoly.zero()
    assert p ** 2 == p * p
    with pytest.raises(ValueError):
        p ** -1


def test_fdbpoly_string():
    assert str(derivative_tower(2)[2]) == "y_2*x_1^2 + y_1*x_2"
    assert str(FdbPoly.zero()) == "0"


def test_substitute_weights_strict():
    p = y(1) * x(3)
    with pytest.raises(ValueError):
        substitute_weights(p, (1, 2))
    # x_3 carries one inner symbol, so it lands on weight_3 * x
    assert substitute_weights(p, (1, 2, 5)) == qpoly.from_coeffs([0, 5])
    # x_1^2 * x_2 carries three, landing on w1^2 w2 x^3
    assert substitute_weights(x(1) ** 2 * x(2), (2, 3)) == qpoly.from_coeffs([0, 0, 0, 12])


def test_compose_specific_pair():
    """f(z) = z^2, g(x) = x + x^2: coefficients of f(g(x+y)) in y."""
    f = qpoly.from_coeffs([0, 0, 1])
    g = qpoly.from_coeffs([0, 1, 1])
    direct = compose_series_direct(f, g, 3)
    table = compose_series_from_table(f, g, 3)
    assert direct == table
    # order 0: (x + x^2)^2
    assert direct[0] == qpoly.from_coeffs([0, 0, 1, 2, 1])
    # derivative path: coefficient of y is d/dx (x+x^2)^2 = 2(x+x^2)(1+2x)
    assert direct[1] == qpoly.from_coeffs([0, 2, 6, 4])


def test_compose_derivative_consistency():
    """Order-k coefficient equals the k-th derivative over k!."""
    rng = Random(21)
    for _ in range(10):
        f = random_qpoly(rng, 4)
        g = random_qpoly(rng, 4)
        series = compose_expansion(f, g, 5)
        composed = qpoly.compose(f, g)
        expected = composed
        fact = 1
        for k in range(6):
            assert series[k] == qpoly.scale(expected, Fraction(1, fact)), k
            expected = qpoly.derivative(expected)
            fact *= k + 1


def test_verify_composition_report():
    report = verify_composition(trials=20, max_degree=5, order=6, seed=3)
    assert report.passed, report.summary()
    assert report.cases == 20


def test_umbral_multiplication_by_x():
    shift = umbral_shift((1,), 5)
    assert shift.depth == 5
    for k in range(5):
        assert shift.image_of_power(k) == qpoly.x_power(k + 1)


def test_umbral_small_example():
    """Weights (1, 1): the first three images, solved by hand."""
    shift = umbral_shift((1, 1), 3)
    assert shift.image_of_power(0) == qpoly.from_coeffs([0, 1])
    assert shift.image_of_power(1) == qpoly.from_coeffs([0, 1, 1])
    assert shift.image_of_power(2) == qpoly.from_coeffs([0, -1, 2, 1])


def test_umbral_apply_linear():
    shift = umbral_shift((1, 1), 4)
    p = qpoly.from_coeffs([2, 0, 3])  # 3x^2 + 2
    want = qpoly.add(
        qpoly.scale(shift.image_of_power(2), 3),
        qpoly.scale(shift.image_of_power(0), 2),
    )
    assert shift.apply(p) == want


def test_umbral_apply_degree_guard():
    shift = umbral_shift((1, 1), 3)
    with pytest.raises(ValueError):
        shift.apply(qpoly.x_power(3))


def test_umbral_rejects_zero_leading_weight():
    with pytest.raises(ValueError):
        umbral_shift((0, 1), 3)


def test_umbral_random_weights_solve():
    """The triangular solve self-checks; construction succeeding is the test."""
    rng = Random(77)
    for _ in range(10):
        weights = [Fraction(rng.randrange(-3, 4)) for _ in range(rng.randrange(1, 5))]
        weights[0] = Fraction(rng.choice([1, -1, 2, -2, 3]))
        shift = umbral_shift(weights, 6)
        assert shift.depth == 6


def test_compose_expansion_returns_common_value():
    f = qpoly.from_coeffs([1, 2, 0, 1])
    g = qpoly.from_coeffs([0, 1, 0, -1])
    series = compose_expansion(f, g, 4)
    assert series == compose_series_direct(f, g, 4)
    assert series == compose_series_from_table(f, g, 4)
