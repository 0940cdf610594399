"""Exact polynomials in named symbolic parameters over the rationals.

These are the coefficients of everything else in the package.  When a power
like ``x^r`` is expanded, the coefficient of each term is a polynomial in
``r`` with rational coefficients (e.g. ``1/2*r^2 - 1/2*r``); keeping those
polynomials exact is what lets identities be checked by equality instead of
by numerical comparison.

Representation: a dict mapping a parameter monomial to its coefficient.  A
parameter monomial is a tuple of ``(name, power)`` pairs sorted by name with
all powers >= 1; the empty tuple is the constant monomial.  Zero
coefficients are never stored, so two polynomials are equal exactly when
their dicts are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

Scalar = int | Fraction

# ((name, power), ...) sorted by name, powers >= 1; () is the constant term.
ParamKey = tuple[tuple[str, int], ...]


def _merge_keys(a: ParamKey, b: ParamKey) -> ParamKey:
    powers = dict(a)
    for name, p in b:
        powers[name] = powers.get(name, 0) + p
    return tuple(sorted((n, p) for n, p in powers.items() if p))


def _key_degree(key: ParamKey) -> int:
    return sum(p for _, p in key)


class ParamPoly:
    """Polynomial in symbolic parameters with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ParamKey, Scalar] | None = None):
        self._terms: dict[ParamKey, Fraction] = {}
        if terms:
            for key, value in terms.items():
                if type(value) is not Fraction:
                    value = Fraction(value)
                if value:
                    self._terms[key] = value

    @classmethod
    def zero(cls) -> ParamPoly:
        return cls()

    @classmethod
    def one(cls) -> ParamPoly:
        return cls.const(1)

    @classmethod
    def const(cls, value: Scalar) -> ParamPoly:
        return cls({(): Fraction(value)})

    @classmethod
    def param(cls, name: str) -> ParamPoly:
        if not name:
            raise ValueError("parameter name must be nonempty")
        return cls({((name, 1),): Fraction(1)})

    @staticmethod
    def _coerce(value: object) -> ParamPoly | None:
        if isinstance(value, ParamPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return ParamPoly.const(value)
        return None

    def items(self) -> Iterator[tuple[ParamKey, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[ParamKey, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (-_key_degree(kv[0]), kv[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __add__(self, other: object) -> ParamPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for key, v in o._terms.items():
            s = out.get(key, Fraction(0)) + v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: object) -> ParamPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> ParamPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def _scaled(self, c: Fraction) -> ParamPoly:
        if not c:
            return ParamPoly()
        return ParamPoly({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: object) -> ParamPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # constant factors are by far the common case; skip the key merge
        a, b = self._terms, o._terms
        if len(a) == 1 and () in a:
            return o._scaled(a[()])
        if len(b) == 1 and () in b:
            return self._scaled(b[()])
        out: dict[ParamKey, Fraction] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                key = _merge_keys(ka, kb)
                s = out.get(key, Fraction(0)) + va * vb
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ParamPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("ParamPoly powers must be nonnegative integers")
        out = ParamPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def parameters(self) -> set[str]:
        return {name for key in self._terms for name, _ in key}

    def is_constant(self) -> bool:
        return all(key == () for key in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if parameters remain."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms[()]

    def substitute(self, name: str, value: Scalar) -> ParamPoly:
        """Replace a parameter by an exact rational value."""
        v = Fraction(value)
        out: dict[ParamKey, Fraction] = {}
        for key, coeff in self._terms.items():
            power = dict(key).get(name, 0)
            rest = tuple(pair for pair in key if pair[0] != name)
            s = out.get(rest, Fraction(0)) + coeff * v**power
            if s:
                out[rest] = s
            elif rest in out:
                del out[rest]
        return ParamPoly(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key, coeff in self.sorted_items():
            mono = "*".join(n if p == 1 else f"{n}^{p}" for n, p in key)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"
