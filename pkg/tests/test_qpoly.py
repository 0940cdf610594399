"""Dense rational polynomials in one variable."""

from fractions import Fraction
from random import Random

from formalcalc import qpoly
from formalcalc.checks import random_qpoly


def test_normalize_strips_zeros():
    assert qpoly.normalize([Fraction(1), Fraction(0), Fraction(0)]) == [Fraction(1)]
    assert qpoly.normalize([Fraction(0)]) == []
    assert qpoly.degree([]) == -1
    assert qpoly.degree(qpoly.x_power(3)) == 3


def test_arithmetic():
    p = qpoly.from_coeffs([1, 2])      # 2x + 1
    q = qpoly.from_coeffs([-1, 2])     # 2x - 1
    assert qpoly.mul(p, q) == qpoly.from_coeffs([-1, 0, 4])
    assert qpoly.add(p, qpoly.neg(p)) == []
    assert qpoly.sub(p, q) == qpoly.from_coeffs([2])
    assert qpoly.power(p, 2) == qpoly.mul(p, p)
    assert qpoly.scale(p, Fraction(1, 2)) == qpoly.from_coeffs([Fraction(1, 2), 1])


def test_compose_and_derivative():
    outer = qpoly.from_coeffs([0, 0, 1])   # z^2
    inner = qpoly.from_coeffs([1, 1])      # x + 1
    assert qpoly.compose(outer, inner) == qpoly.from_coeffs([1, 2, 1])
    assert qpoly.derivative(qpoly.from_coeffs([5, 0, 3])) == qpoly.from_coeffs([0, 6])
    assert qpoly.derivative([]) == []


def test_eval_at():
    p = qpoly.from_coeffs([1, -1, 1])
    assert qpoly.eval_at(p, 2) == 3
    assert qpoly.eval_at(p, Fraction(1, 2)) == Fraction(3, 4)
    assert qpoly.eval_at([], 9) == 0


def test_composition_is_associative():
    rng = Random(19)
    for _ in range(15):
        a = random_qpoly(rng, 3)
        b = random_qpoly(rng, 3)
        c = random_qpoly(rng, 3)
        assert qpoly.compose(qpoly.compose(a, b), c) == qpoly.compose(a, qpoly.compose(b, c))


def test_to_string():
    assert qpoly.to_string([]) == "0"
    assert qpoly.to_string(qpoly.from_coeffs([0, -1, 2, 1])) == "x^3 + 2*x^2 - x"
    assert qpoly.to_string(qpoly.from_coeffs([Fraction(1, 2)])) == "1/2"
    assert qpoly.to_string(qpoly.from_coeffs([0, 1]), var="t") == "t"
