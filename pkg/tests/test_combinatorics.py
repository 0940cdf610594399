"""Stirling cycle numbers, signed symmetric sums, and the chain recursion."""

from math import factorial

import pytest

from formalcalc.combinatorics import (
    signed_esym,
    stirling1,
    stirling1_by_recurrence,
    stirling_chain,
    stirling_rows,
    verify_chain_product,
    verify_lubell,
)


def test_stirling_triangle():
    assert stirling_rows(5) == [
        [1],
        [0, 1],
        [0, 1, 1],
        [0, 2, 3, 1],
        [0, 6, 11, 6, 1],
        [0, 24, 50, 35, 10, 1],
    ]


def test_stirling_edges():
    assert stirling1(0, 0) == 1
    assert stirling1(4, 0) == 0
    assert stirling1(3, 5) == 0
    assert stirling1(7, 7) == 1
    with pytest.raises(ValueError):
        stirling1(-1, 0)


def test_composition_sum_equals_recurrence():
    """The harmonic composition sum and the additive recurrence agree."""
    for k in range(10):
        for j in range(10):
            assert stirling1(k, j) == stirling1_by_recurrence(k, j), (k, j)


def test_row_sums_are_factorials():
    for k in range(8):
        assert sum(stirling1(k, j) for j in range(k + 1)) == factorial(k)


def test_signed_esym_values():
    # (0; n) is the empty product
    assert signed_esym(0, 0) == 1
    assert signed_esym(0, 5) == 1
    # m indices drawn from {0,...,m-1} always include 0
    assert signed_esym(1, 0) == 0
    assert signed_esym(3, 0) == 0
    # small hand values: e_1(0,1) = 1, e_2(0,1,2) = 2, e_1(0,1,2) = 3
    assert signed_esym(1, 1) == -1
    assert signed_esym(2, 1) == 2
    assert signed_esym(1, 2) == -3
    assert signed_esym(2, 2) == 11
    assert signed_esym(3, 1) == -6


def test_signed_esym_lubell_identity():
    """(m; n) = (-1)^m [m+n over n] at a few corners."""
    for m in range(6):
        for n in range(6):
            assert signed_esym(m, n) == (-1) ** m * stirling1(m + n, n), (m, n)


def test_chain_hand_values():
    assert stirling_chain((1,)) == 1
    assert stirling_chain((3,)) == 1
    assert stirling_chain((1, 2)) == 1
    assert stirling_chain((2, 2)) == 1
    assert stirling_chain((1, 3)) == 2
    assert stirling_chain((1, 4)) == 6
    assert stirling_chain((2, 3)) == 3
    # non-monotone chains vanish
    assert stirling_chain((2, 1, 2)) == 0
    assert stirling_chain((3, 1)) == 0


def test_chain_edge_inputs():
    with pytest.raises(ValueError):
        stirling_chain(())
    # entries below 1 fall outside the triangle and contribute nothing
    assert stirling_chain((0, 1)) == 0
    assert stirling_chain((2, 0)) == 0


def test_chain_equals_bracket_products():
    """S(j_n,...,j_0) is a product of Stirling cycle numbers along the chain."""
    report = verify_chain_product(max_k=5, max_n=3)
    assert report.passed, report.summary()
    assert report.cases > 0


def test_chain_two_level_closed_form():
    # S(j_1, j_0) = [j_0 over j_1] directly
    for j0 in range(1, 7):
        for j1 in range(1, j0 + 1):
            assert stirling_chain((j1, j0)) == stirling1(j0, j1), (j1, j0)


def test_verify_lubell_report():
    report = verify_lubell(8)
    assert report.passed, report.summary()
    assert report.cases == 101
