"""Stirling-cycle numbers, signed symmetric sums, and the chain recursion.

Three interlocking combinatorial families drive the closed-form expansions:

* ``stirling1(k, j)`` — unsigned Stirling numbers of the first kind,
  computed from the composition-sum definition
  (k!/j!) * sum 1/(i_1*...*i_j) over positive i_1+...+i_j = k.
  ``stirling1_by_recurrence`` is the classical independent cross-check
  c(k, j) = c(k-1, j-1) + (k-1)*c(k-1, j).

* ``signed_esym(m, n)`` — (-1)^m times the m-th elementary symmetric
  function of 0, 1, ..., m+n-1; equals (-1)^m * stirling1(m+n, n).

* ``stirling_chain(j_n, ..., j_0)`` — the chain-indexed recursion whose
  value factors as the product of stirling1(j_i, j_{i+1}) down the chain
  (and vanishes unless j_n <= ... <= j_0).  Two-entry chains recover
  plain Stirling numbers, which is the Lubell-style triple identity
  checked by ``verify_lubell``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Iterator, Sequence

from .report import VerifyReport

_STIRLING: dict[tuple[int, int], int] = {}
_CHAIN: dict[tuple[int, ...], int] = {}


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def stirling1(k: int, j: int) -> int:
    """Unsigned Stirling number of the first kind, by the composition sum."""
    if k < 0 or j < 0:
        raise ValueError("stirling1 arguments must be nonnegative")
    if j > k:
        return 0
    if (k, j) not in _STIRLING:
        total = sum(
            Fraction(1, prod(c)) for c in _compositions(k, j)
        ) if k else Fraction(j == 0)
        value = Fraction(factorial(k), factorial(j)) * total
        assert value.denominator == 1
        _STIRLING[(k, j)] = int(value)
    return _STIRLING[(k, j)]


def stirling1_by_recurrence(k: int, j: int) -> int:
    """The same numbers from c(k,j) = c(k-1,j-1) + (k-1)c(k-1,j); test oracle."""
    if k < 0 or j < 0:
        raise ValueError("stirling1 arguments must be nonnegative")
    row = [1]  # k = 0
    for kk in range(1, k + 1):
        row = [0] + row
        row = [
            row[jj] + (kk - 1) * (row[jj + 1] if jj + 1 < len(row) else 0)
            for jj in range(len(row))
        ]
    return row[j] if j < len(row) else 0


def stirling_rows(max_k: int) -> list[list[int]]:
    """Rows k = 0..max_k of stirling1(k, j) for j = 0..k."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    return [[stirling1(k, j) for j in range(k + 1)] for k in range(max_k + 1)]


def signed_esym(m: int, n: int) -> int:
    """(-1)^m times the elementary symmetric sum e_m(0, 1, ..., m+n-1)."""
    if m < 0 or n < 0:
        raise ValueError("signed_esym arguments must be nonnegative")
    total = sum(prod(c) for c in combinations(range(m + n), m))
    return (-1) ** m * total


def stirling_chain(chain: Sequence[int]) -> int:
    """The chain recursion S(j_n, ..., j_0), deepest index first.

    Base row: if j_0 == 1 the value is 1 when every entry is 1 and 0
    otherwise.  Any entry < 1 gives 0.  Otherwise

        S(j_n, .., j_0) = S(j_n - 1, .., j_0 - 1)
                          + sum_p (j_p - 1) * S(.., j_p - 1, .., j_0 - 1)

    where the p-th summand decrements only the last p+1 entries
    (positions p down to 0, counting from the right).
    """
    js = tuple(chain)
    if not js:
        raise ValueError("chain must be nonempty")
    if min(js) < 1:
        return 0
    if js[-1] == 1:
        return 1 if all(j == 1 for j in js) else 0
    if js not in _CHAIN:
        total = stirling_chain(tuple(j - 1 for j in js))
        n = len(js) - 1
        for p in range(n):
            # decrement positions p..0 from the right; weight j_p - 1
            jp = js[n - p]
            if jp > 1:
                decremented = js[: n - p] + tuple(j - 1 for j in js[n - p :])
                total += (jp - 1) * stirling_chain(decremented)
        _CHAIN[js] = total
    return _CHAIN[js]


def _descending_chains(length: int, max_top: int) -> Iterator[tuple[int, ...]]:
    """All (j_0 >= j_1 >= ... >= j_n >= 1) with j_0 <= max_top, n+1 = length."""
    if length == 0:
        yield ()
        return
    for top in range(1, max_top + 1):
        for rest in _descending_chains(length - 1, top):
            yield (top,) + rest


def verify_chain_product(max_k: int = 6, max_n: int = 3) -> VerifyReport:
    """Check S(j_n..j_0) = prod stirling1(j_i, j_{i+1}) on all chains.

    Covers every descending chain with j_0 <= max_k and 1..max_n links,
    plus a sweep of non-monotone tuples, which must give 0.
    """
    cases = 0
    for n in range(1, max_n + 1):
        for desc in _descending_chains(n + 1, max_k):
            votes = prod(stirling1(desc[i], desc[i + 1]) for i in range(n))
            got = stirling_chain(tuple(reversed(desc)))
            cases += 1
            if got != votes:
                return VerifyReport(
                    "chain-product", False, cases,
                    f"chain {tuple(reversed(desc))}: recursion {got} != product {votes}",
                )
        # non-chains: any tuple that violates monotonicity must vanish
        for j0 in range(1, max_k + 1):
            for j1 in range(j0 + 1, max_k + 2):
                bad = (j1,) + (1,) * (n - 1) + (j0,)
                cases += 1
                if stirling_chain(bad) != 0:
                    return VerifyReport(
                        "chain-product", False, cases,
                        f"non-monotone chain {bad} gave nonzero",
                    )
    return VerifyReport("chain-product", True, cases)


def verify_lubell(max_n: int = 8, max_pair_sum: int | None = None) -> VerifyReport:
    """Check the triple identity S(m,n) = stirling1(n,m) = e-sym sum.

    For 1 <= m <= n <= max_n: the two-entry chain value, the Stirling
    number, and the elementary symmetric sum over n-m indices drawn from
    {0, ..., n-1} must coincide.  Also checks the bracket form of the
    signed symmetric sums, (m;n) = (-1)^m stirling1(m+n, n), for
    m + n <= max_pair_sum (default max_n + 2).
    """
    if max_pair_sum is None:
        max_pair_sum = max_n + 2
    cases = 0
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            chain = stirling_chain((m, n))
            bracket = stirling1(n, m)
            esym = sum(prod(c) for c in combinations(range(n), n - m))
            cases += 1
            if not chain == bracket == esym:
                return VerifyReport(
                    "lubell", False, cases,
                    f"(m,n)=({m},{n}): chain {chain}, stirling {bracket}, esym {esym}",
                )
    for m in range(0, max_pair_sum + 1):
        for n in range(0, max_pair_sum - m + 1):
            if m + n == 0:
                continue
            cases += 1
            lhs = signed_esym(m, n)
            rhs = (-1) ** m * stirling1(m + n, n)
            if lhs != rhs:
                return VerifyReport(
                    "lubell", False, cases,
                    f"(m;n)=({m};{n}): signed esym {lhs} != signed stirling {rhs}",
                )
    return VerifyReport("lubell", True, cases)
