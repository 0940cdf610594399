"""Index-shift substitution maps and the transport of Taylor expansions.

The algebra map sending every generator l_n to l_{n+k} intertwines the two
derivations of interest: shifting up by one turns d/dx into x*d/dx.  That
makes the exponential of x*d/dx computable from the exponential of d/dx:

    exp(y x d/dx) a  =  shift(1) exp(y d/dx) shift(-1) a,

which is ``lifted_exp`` below.  ``verify_intertwining`` checks the two
operator identities on a window of generators and on random products.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .algebra import Element, Monomial, YSeries
from .derivations import d_dx, x_d_dx
from .report import VerifyReport


@dataclass(frozen=True)
class IndexShift:
    """The algebra map l_n -> l_{n+offset}, applied to whole elements."""

    offset: int

    def __call__(self, a: Element) -> Element:
        return Element.from_terms(
            (mono.shift(self.offset), coeff) for mono, coeff in a.items()
        )

    def on_series(self, series: YSeries) -> YSeries:
        return YSeries([self(c) for c in series.coefficients()])

    def inverse(self) -> IndexShift:
        return IndexShift(-self.offset)


def lifted_exp(a: Element, order: int) -> YSeries:
    """exp(y x d/dx) applied to ``a``, computed through the index shift.

    Conjugating by the shift reduces to the plain d/dx exponential:
    shift down, expand, shift back up.  Agrees with running x*d/dx
    directly (that equality is what the tests assert).
    """
    up, down = IndexShift(1), IndexShift(-1)
    return up.on_series(d_dx().exp_series(down(a), order))


def _random_product(rng: Random, max_index: int) -> Element:
    """A small random product of generator powers (nonzero by construction)."""
    factors = rng.randrange(1, 4)
    mono = Monomial.one()
    for _ in range(factors):
        index = rng.randrange(-max_index, max_index + 1)
        exponent = rng.choice([-2, -1, 1, 2, 3])
        mono = mono * Monomial.gen(index, exponent)
    scale = rng.choice([1, -1, 2])
    return Element.const(scale) * Element({mono: 1})


def verify_intertwining(
    max_index: int = 6, product_trials: int = 20, seed: int = 7
) -> VerifyReport:
    """Check shift(1) d/dx = (x d/dx) shift(1) and its inverse twin.

    Both identities are checked on every generator with |index| <=
    max_index and on ``product_trials`` random products of generator
    powers drawn from the same window.
    """
    up, down = IndexShift(1), IndexShift(-1)
    ddx, xddx = d_dx(), x_d_dx()
    cases = 0

    def both_hold(a: Element, label: str) -> VerifyReport | None:
        nonlocal cases
        cases += 1
        if up(ddx.apply(a)) != xddx.apply(up(a)):
            return VerifyReport(
                "intertwine", False, cases,
                f"shift(1) d/dx != (x d/dx) shift(1) on {label}",
            )
        cases += 1
        if down(xddx.apply(a)) != ddx.apply(down(a)):
            return VerifyReport(
                "intertwine", False, cases,
                f"shift(-1) (x d/dx) != d/dx shift(-1) on {label}",
            )
        return None

    for index in range(-max_index, max_index + 1):
        failure = both_hold(Element.gen(index), f"generator l_{index}")
        if failure:
            return failure
    rng = Random(seed)
    for _ in range(product_trials):
        a = _random_product(rng, max_index)
        failure = both_hold(a, str(a))
        if failure:
            return failure
    return VerifyReport("intertwine", True, cases)
