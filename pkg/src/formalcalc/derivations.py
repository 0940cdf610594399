"""Derivations on the generator algebra and their exponentials.

A derivation is determined by its images on the generators and extended by
linearity, the Leibniz rule, and the power rule
D(g^e) = e * g^(e-1) * D(g), which holds for symbolic exponents as well.
Images may be supplied as a plain table or generated by a rule; the two
built-in families are d/dx and x*d/dx on the iterated-log tower:

    d/dx x         = 1
    d/dx l_n(x)    = 1 / (x * log(x) * ... * l_{n-1}(x))        (n > 0)
    d/dx l_{-n}(x) = exp(x) * exp(exp(x)) * ... * l_{-n}(x)     (n > 0)

and (x*d/dx) g = x * (d/dx g).

``exp_series(a, order)`` computes sum_k y^k/k! * D^k(a) as a YSeries.
Before any differentiation the engine eagerly checks that every generator
reachable from the argument has an image (closure); a missing image raises
ClosureError up front rather than failing midway through a power.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from .algebra import Element, Monomial, YSeries, gen_name
from .params import ParamPoly


class ClosureError(ValueError):
    """A derivation was applied to an element it is not closed over."""

    def __init__(self, index: int, name: str = "derivation"):
        self.index = index
        super().__init__(f"{name} has no image for generator {gen_name(index)}")


class Derivation:
    """A derivation given by generator images, extended by Leibniz + power rule."""

    def __init__(
        self,
        name: str,
        images: Mapping[int, Element] | None = None,
        rule: Callable[[int], Element | None] | None = None,
    ):
        self.name = name
        self._images: dict[int, Element] = dict(images or {})
        self._rule = rule
        self._mono_images: dict[Monomial, Element] = {}

    def image(self, index: int) -> Element:
        """D applied to the generator with this index."""
        if index in self._images:
            return self._images[index]
        if self._rule is not None:
            img = self._rule(index)
            if img is not None:
                self._images[index] = img
                return img
        raise ClosureError(index, self.name)

    def has_image(self, index: int) -> bool:
        try:
            self.image(index)
        except ClosureError:
            return False
        return True

    def check_closure(self, a: Element) -> None:
        """Verify every generator reachable from ``a`` has an image.

        Walks the set of generator indices appearing in ``a`` and, for each,
        in its image, transitively.  The built-in rule families only ever
        introduce indices between existing ones and 0 (or -1), so this
        terminates; a finite image table either closes up or raises.
        """
        seen: set[int] = set()
        frontier = set(a.generator_indices())
        while frontier:
            index = frontier.pop()
            if index in seen:
                continue
            seen.add(index)
            img = self.image(index)  # raises ClosureError if missing
            frontier.update(img.generator_indices() - seen)

    def apply(self, a: Element) -> Element:
        """One application of the derivation."""
        acc: dict[Monomial, ParamPoly] = {}
        memo = self._mono_images
        for mono, coeff in a.items():
            img = memo.get(mono)
            if img is None:
                img = self._derive_monomial(mono)
                memo[mono] = img
            for im_mono, im_coeff in img.items():
                term = coeff * im_coeff
                prior = acc.get(im_mono)
                total = term if prior is None else prior + term
                if total:
                    acc[im_mono] = total
                elif prior is not None:
                    del acc[im_mono]
        return Element(acc)

    def _derive_monomial(self, mono: Monomial) -> Element:
        acc: dict[Monomial, ParamPoly] = {}
        powers = mono.powers
        for pos, (index, e) in enumerate(powers):
            # derivative of gen^e -> e * gen^(e-1) * image, times the rest
            scale = e.to_parampoly()
            if not scale:
                continue
            dec = e.decremented()
            if dec.is_zero:
                lowered = Monomial._from_canonical(powers[:pos] + powers[pos + 1 :])
            else:
                lowered = Monomial._from_canonical(
                    powers[:pos] + ((index, dec),) + powers[pos + 1 :]
                )
            for im_mono, im_coeff in self.image(index).items():
                key = lowered * im_mono
                term = scale * im_coeff
                prior = acc.get(key)
                total = term if prior is None else prior + term
                if total:
                    acc[key] = total
                elif prior is not None:
                    del acc[key]
        return Element(acc)

    def exp_series(self, a: Element, order: int) -> YSeries:
        """The truncated exponential sum_{k<=order} y^k/k! D^k(a)."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.check_closure(a)
        coeffs = [a]
        current = a
        for k in range(1, order + 1):
            current = self.apply(current)
            coeffs.append(current * Fraction(1, factorial(k)))
        return YSeries(coeffs)

    def __repr__(self) -> str:
        return f"Derivation({self.name})"


def _ddx_image(index: int) -> Element:
    if index == 0:
        return Element.one()
    if index > 0:
        out = Element.one()
        for i in range(index):
            out = out * Element.gen(i, -1)
        return out
    out = Element.one()
    for i in range(-1, index - 1, -1):
        out = out * Element.gen(i)
    return out


def d_dx() -> Derivation:
    """The derivation d/dx, defined on the whole generator tower."""
    return Derivation("d/dx", rule=_ddx_image)


def x_d_dx() -> Derivation:
    """The derivation x*d/dx (the image of d/dx under the index shift)."""
    return Derivation("x*d/dx", rule=lambda i: Element.gen(0) * _ddx_image(i))
