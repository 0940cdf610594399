"""Closed-form formal Taylor expansions, independent of the derivation engine.

Each function here evaluates a known closed formula for a shifted power —
``(x+y)^e``, ``log(x+y)``, ``(log(x+y))^e``, or the iterated-log power
``l_n(x+y)^e`` — directly from its combinatorial description.  The results
are cross-checked in the tests against ``exp_series`` of d/dx applied to
the corresponding generator power; the two routes share no code beyond the
algebra itself.

``iterated_log_series`` offers the three equivalent summation formulas:

* ``"stirling"`` — a sum over all weakly descending tuples
  j_0 >= j_1 >= ... >= j_n >= 0 with Stirling-product weight
  prod stirling1(j_i, j_{i+1}) and sign (-1)^(j_0+j_n); contributes to y^{j_0}.
* ``"chain"`` — a sum over chains 1 <= j_n <= ... <= j_1 <= j_0 = k
  weighted by the chain recursion stirling_chain(j_n, ..., j_0).
* ``"symmetric"`` — a sum over compositions j_0 + ... + j_n = k with
  signed-elementary-symmetric weights signed_esym(j_i, a_{i+1}), where
  a_i is the suffix sum j_i + ... + j_n.

That these agree (and agree with the engine) is the point of the
combinatorial identities; the tests treat any disagreement as an error.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterator

from .algebra import Element, Exponent, Monomial, YSeries, binom
from .combinatorics import signed_esym, stirling1, stirling_chain
from .params import ParamPoly, Scalar

FORMS = ("stirling", "chain", "symmetric")


def binomial_series(exponent: "Exponent | Scalar", order: int) -> YSeries:
    """(x+y)^e truncated at y-order N: sum_n binom(e,n) x^(e-n) y^n."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    e = Exponent.of(exponent)
    return YSeries(
        [Element({Monomial.gen(0, e - n): binom(e, n)}) for n in range(order + 1)]
    )


def log_series(order: int) -> YSeries:
    """log(x+y) truncated at y-order N: log x + sum (-1)^(i-1) x^-i y^i / i."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Element.gen(1)]
    for i in range(1, order + 1):
        coeffs.append(
            Element({Monomial.gen(0, -i): ParamPoly.const(Fraction((-1) ** (i - 1), i))})
        )
    return YSeries(coeffs)


def log_power_series(exponent: "Exponent | Scalar", order: int) -> YSeries:
    """(log(x+y))^e via the outer binomial over log(1 + y/x).

    log(x+y) = log x + L with L = log(1+y/x) of y-valuation 1, so
    (log(x+y))^e = sum_{j<=N} binom(e,j) (log x)^(e-j) L^j exactly
    through y-order N.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    e = Exponent.of(exponent)
    inner = log_series(order) - Element.gen(1)  # L = log(1+y/x), valuation 1
    out = YSeries.zero(order)
    lpower = YSeries.of_element(Element.one(), order)
    for j in range(order + 1):
        term = lpower * Element({Monomial.gen(1, e - j): binom(e, j)})
        out = out + term
        lpower = lpower * inner
    return out


def _descending_from(top: int, count: int, floor: int) -> Iterator[tuple[int, ...]]:
    """Weakly descending tuples of length ``count`` starting at <= top, >= floor."""
    if count == 0:
        yield ()
        return
    for j in range(floor, top + 1):
        for rest in _descending_from(j, count - 1, floor):
            yield (j,) + rest


def _compositions_nonneg(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_nonneg(total - first, parts - 1):
            yield (first,) + rest


def _tower_monomial(n: int, e: Exponent, drops: tuple[int, ...]) -> Monomial:
    """l_n^(e - drops[n]) * prod_{i<n} l_i^(-drops[i])."""
    powers: list[tuple[int, Exponent]] = [(n, e - drops[n])]
    powers.extend((i, Exponent(-drops[i])) for i in range(n))
    return Monomial(tuple(powers))


def iterated_log_series(
    n: int, exponent: "Exponent | Scalar", order: int, form: str = "stirling"
) -> YSeries:
    """l_n(x+y)^e by one of the three closed summation formulas."""
    if n < 1:
        raise ValueError("tower index must be >= 1 (use binomial_series for x itself)")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if form not in FORMS:
        raise ValueError(f"unknown formula {form!r}; choose from {FORMS}")
    e = Exponent.of(exponent)
    coeffs = [Element.zero() for _ in range(order + 1)]

    if form == "stirling":
        for j0 in range(order + 1):
            # descending tuples (j_0, ..., j_n); a drop to 0 kills the bracket
            # unless everything after it is 0 too, so enumerate with floor 0
            # and skip zero products.
            for js in _descending_from(j0, n, 0):
                tup = (j0,) + js
                weight = prod(stirling1(tup[i], tup[i + 1]) for i in range(n))
                if weight == 0:
                    continue
                jn = tup[n]
                scale = (
                    Fraction(factorial(jn), factorial(j0))
                    * (-1) ** (j0 + jn)
                    * weight
                )
                coeff = binom(e, jn) * scale
                coeffs[j0] = coeffs[j0] + Element({_tower_monomial(n, e, tup): coeff})

    elif form == "chain":
        coeffs[0] = Element.gen(n, e)
        for k in range(1, order + 1):
            for js in _descending_from(k, n, 1):
                tup = (k,) + js  # (j_0=k, j_1, ..., j_n), all >= 1
                jn = tup[n]
                s_value = stirling_chain(tuple(reversed(tup)))
                if s_value == 0:
                    continue
                scale = (
                    Fraction(factorial(jn), factorial(k))
                    * (-1) ** (k + jn)
                    * s_value
                )
                coeff = binom(e, jn) * scale
                coeffs[k] = coeffs[k] + Element({_tower_monomial(n, e, tup): coeff})

    else:  # symmetric
        for k in range(order + 1):
            for js in _compositions_nonneg(k, n + 1):
                suffix = [0] * (n + 2)
                for i in range(n, -1, -1):
                    suffix[i] = suffix[i + 1] + js[i]
                weight = prod(signed_esym(js[i], suffix[i + 1]) for i in range(n))
                if weight == 0:
                    continue
                jn = js[n]
                scale = Fraction(factorial(jn), factorial(k)) * weight
                coeff = binom(e, jn) * scale
                mono = _tower_monomial(n, e, tuple(suffix[: n + 1]))
                coeffs[k] = coeffs[k] + Element({mono: coeff})

    return YSeries(coeffs)


def closed_form_series(a: Element, order: int, form: str = "stirling") -> YSeries:
    """Expand a sum of products of nonnegative-index generator powers.

    This is the closed-form route behind the CLI: each generator power is
    replaced by its closed-form series and the results are multiplied out.
    Negative tower indices have no printed closed form and are rejected.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = YSeries.zero(order)
    for mono, coeff in a.items():
        term = YSeries.of_element(Element.const(coeff), order)
        for index, e in mono.powers:
            if index < 0:
                raise ValueError(
                    f"no closed-form expansion for {Monomial.gen(index, e)}; "
                    "negative tower indices are engine-only"
                )
            factor = (
                binomial_series(e, order)
                if index == 0
                else iterated_log_series(index, e, order, form)
            )
            term = term * factor
        out = out + term
    return out
