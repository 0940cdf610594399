"""The generator algebra: formal powers of x, log x, exp x and their iterates.

Elements live in the commutative algebra generated by a two-sided tower of
symbols indexed by the integers: index 0 is x itself, positive indices are
iterated logarithms (1 = log x, 2 = log log x, ...), negative indices are
iterated exponentials (-1 = exp x, ...).  Generators carry exponents that
may be integers, rationals, or affine expressions in symbolic parameters
such as ``r`` or ``2*r+s-1`` (integer coefficients on the parameters,
rational constant part).

An Element is a finite sum  sum_m  c_m * prod_i  gen(i)^{e_i}  with the
coefficients c_m exact parameter polynomials (see params).  A YSeries is a
polynomial in a central variable y of bounded degree with Element
coefficients; it is the truncation type for exponential-of-derivation
series, and arithmetic on series truncates to the smaller order.

Also here: ``binom(e, n)``, the algebraic binomial coefficient
e*(e-1)*...*(e-n+1)/n!, which is a parameter polynomial when e is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .params import ParamPoly, Scalar


# Interned constant exponents; the derivative loop decrements exponents
# constantly and small integers dominate.
_INT_EXPONENTS: "dict[int, Exponent]" = {}


@dataclass(frozen=True)
class Exponent:
    """An exponent: rational constant plus integer multiples of parameters.

    ``Exponent(2)`` is the plain exponent 2; ``Exponent(-1, {"r": 2})`` is
    2r - 1.  Instances are canonical (linear part sorted, zero coefficients
    dropped) and hashable, so they can sit inside monomial keys.
    """

    const: Fraction = Fraction(0)
    linear: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if type(self.const) is not Fraction:
            object.__setattr__(self, "const", Fraction(self.const))
        if self.linear:
            lin = dict(self.linear)
            object.__setattr__(
                self, "linear", tuple(sorted((n, int(m)) for n, m in lin.items() if m))
            )

    def __hash__(self) -> int:
        # Fraction hashing is expensive (modular inverse); cache per instance.
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.const, self.linear))
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Exponent):
            return NotImplemented
        if self.__hash__() != other.__hash__():
            return False
        return self.const == other.const and self.linear == other.linear

    @classmethod
    def of(cls, value: "Exponent | Scalar") -> Exponent:
        if isinstance(value, Exponent):
            return value
        if isinstance(value, int) and -64 <= value <= 64:
            cached = _INT_EXPONENTS.get(value)
            if cached is None:
                cached = cls(Fraction(value))
                _INT_EXPONENTS[value] = cached
            return cached
        return cls(Fraction(value))

    @classmethod
    def param(cls, name: str, coeff: int = 1, const: Scalar = 0) -> Exponent:
        return cls(Fraction(const), ((name, coeff),))

    @property
    def is_zero(self) -> bool:
        return not self.linear and self.const == 0

    @property
    def is_constant(self) -> bool:
        return not self.linear

    def as_integer(self) -> int | None:
        """The exponent as a plain int, or None if symbolic or fractional."""
        if self.linear or self.const.denominator != 1:
            return None
        return int(self.const)

    def _combine(self, other: object, sign: int) -> Exponent:
        if isinstance(other, (int, Fraction)):
            const = self.const + sign * other
            if not self.linear:
                return _constant_exponent(const)
            return Exponent(const, self.linear)
        if not isinstance(other, Exponent):
            return NotImplemented
        const = self.const + sign * other.const
        if not other.linear:
            if not self.linear:
                return _constant_exponent(const)
            return Exponent(const, self.linear)
        lin = dict(self.linear)
        for name, m in other.linear:
            lin[name] = lin.get(name, 0) + sign * m
        return Exponent(const, tuple(lin.items()))

    def __add__(self, other: object) -> Exponent:
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: object) -> Exponent:
        return self._combine(other, -1)

    def decremented(self) -> Exponent:
        """Cached ``self - 1``; the derivation loop asks for it constantly."""
        d = self.__dict__.get("_dec")
        if d is None:
            if self.linear:
                d = Exponent(self.const - 1, self.linear)
            else:
                d = _constant_exponent(self.const - 1)
            object.__setattr__(self, "_dec", d)
        return d

    def __neg__(self) -> Exponent:
        return Exponent(-self.const, tuple((n, -m) for n, m in self.linear))

    def __mul__(self, other: object) -> Exponent:
        """Scale by an integer (rationals allowed only when there is no linear part)."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        c = Fraction(other)
        if self.linear and c.denominator != 1:
            raise ValueError("parameter coefficients in exponents must stay integral")
        scale = int(c) if self.linear else c
        return Exponent(self.const * c, tuple((n, m * int(scale)) for n, m in self.linear))

    __rmul__ = __mul__

    def to_parampoly(self) -> ParamPoly:
        cached = self.__dict__.get("_poly")
        if cached is None:
            cached = ParamPoly.const(self.const)
            for name, m in self.linear:
                cached = cached + m * ParamPoly.param(name)
            object.__setattr__(self, "_poly", cached)
        return cached

    def substitute(self, name: str, value: Scalar) -> Exponent:
        v = Fraction(value)
        lin = dict(self.linear)
        m = lin.pop(name, 0)
        return Exponent(self.const + m * v, tuple(lin.items()))

    def sort_key(self) -> tuple:
        return (self.linear, self.const)

    def __str__(self) -> str:
        parts: list[str] = []
        for name, m in self.linear:
            if not parts:
                lead = "" if m == 1 else "-" if m == -1 else f"{m}*"
                parts.append(f"{lead}{name}")
            else:
                op = " + " if m > 0 else " - "
                mag = "" if abs(m) == 1 else f"{abs(m)}*"
                parts.append(f"{op}{mag}{name}")
        if self.const or not parts:
            if not parts:
                parts.append(str(self.const))
            else:
                op = " + " if self.const > 0 else " - "
                parts.append(f"{op}{abs(self.const)}")
        return "".join(parts)


def _constant_exponent(const: Fraction) -> Exponent:
    """Constant exponent, interned when it is a small integer."""
    if const.denominator == 1:
        n = const.numerator
        if -64 <= n <= 64:
            cached = _INT_EXPONENTS.get(n)
            if cached is None:
                cached = Exponent(const)
                _INT_EXPONENTS[n] = cached
            return cached
    return Exponent(const)


def binom(exponent: "Exponent | Scalar", n: int) -> ParamPoly:
    """Algebraic binomial coefficient e*(e-1)*...*(e-n+1) / n!.

    Defined for every exponent (symbolic, rational, negative); the result is
    a parameter polynomial.  binom(e, 0) = 1.
    """
    if n < 0:
        raise ValueError("binom order must be nonnegative")
    e = Exponent.of(exponent).to_parampoly()
    out = ParamPoly.one()
    for i in range(n):
        out = out * (e - i)
    return out * Fraction(1, factorial(n))


_MONO_CACHE: "dict[tuple, Monomial]" = {}


@dataclass(frozen=True)
class Monomial:
    """A product of generator powers, e.g. x^r * log(x)^-2.

    ``powers`` maps generator index to exponent as sorted pairs; indices
    with zero exponent are dropped, so the empty monomial is 1.
    """

    powers: tuple[tuple[int, Exponent], ...] = ()

    def __post_init__(self) -> None:
        acc: dict[int, Exponent] = {}
        for index, e in self.powers:
            e = Exponent.of(e)
            acc[index] = acc[index] + e if index in acc else e
        object.__setattr__(
            self,
            "powers",
            tuple(sorted((i, e) for i, e in acc.items() if not e.is_zero)),
        )

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.powers)
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.__hash__() != other.__hash__():
            return False
        return self.powers == other.powers

    @classmethod
    def _from_canonical(cls, powers: tuple[tuple[int, Exponent], ...]) -> Monomial:
        """Construct from pairs already sorted, merged, and nonzero.

        Results are interned, so monomials built on the arithmetic fast
        paths compare by identity in dictionary lookups.
        """
        mono = _MONO_CACHE.get(powers)
        if mono is None:
            mono = object.__new__(cls)
            object.__setattr__(mono, "powers", powers)
            object.__setattr__(mono, "_hash", hash(powers))
            _MONO_CACHE[powers] = mono
        return mono

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @classmethod
    def gen(cls, index: int, exponent: "Exponent | Scalar" = 1) -> Monomial:
        return cls(((index, Exponent.of(exponent)),))

    @property
    def is_one(self) -> bool:
        return not self.powers

    def __mul__(self, other: "Monomial") -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other.powers:
            return self
        if not self.powers:
            return other
        acc = dict(self.powers)
        for index, e in other.powers:
            cur = acc.get(index)
            acc[index] = e if cur is None else cur + e
        return Monomial._from_canonical(
            tuple(sorted((i, e) for i, e in acc.items() if not e.is_zero))
        )

    def exponent_of(self, index: int) -> Exponent:
        for i, e in self.powers:
            if i == index:
                return e
        return Exponent()

    def indices(self) -> list[int]:
        return [i for i, _ in self.powers]

    def shift(self, offset: int) -> Monomial:
        return Monomial(tuple((i + offset, e) for i, e in self.powers))

    def substitute(self, name: str, value: Scalar) -> Monomial:
        return Monomial(tuple((i, e.substitute(name, value)) for i, e in self.powers))

    def sort_key(self) -> tuple:
        return tuple((i, e.sort_key()) for i, e in self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(_gen_power_str(i, e) for i, e in self.powers)


def gen_name(index: int) -> str:
    """Printable name of a generator: x, log(x), or l_<k>(x)."""
    if index == 0:
        return "x"
    if index == 1:
        return "log(x)"
    if index == -1:
        return "exp(x)"
    return f"l_{index}(x)"


def _exponent_str(e: Exponent) -> str:
    """Exponent as printed after '^': bare when simple, parenthesized otherwise."""
    s = str(e)
    if e.is_constant and e.const.denominator == 1 and e.const >= 0:
        return s
    if not e.const and len(e.linear) == 1 and e.linear[0][1] == 1:
        return s  # a bare parameter like r
    return f"({s})"


def _gen_power_str(index: int, e: Exponent) -> str:
    base = gen_name(index)
    if e.is_constant and e.const == 1:
        return base
    return f"{base}^{_exponent_str(e)}"


class Element:
    """A finite sum of generator monomials with parameter-polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, "ParamPoly | Scalar"] | None = None):
        self._terms: dict[Monomial, ParamPoly] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(coeff, ParamPoly):
                coeff = ParamPoly.const(coeff)
            if coeff:
                self._terms[mono] = coeff

    @classmethod
    def zero(cls) -> Element:
        return cls()

    @classmethod
    def one(cls) -> Element:
        return cls.const(1)

    @classmethod
    def const(cls, value: "Scalar | ParamPoly") -> Element:
        c = value if isinstance(value, ParamPoly) else ParamPoly.const(value)
        return cls({Monomial.one(): c})

    @classmethod
    def gen(cls, index: int, exponent: "Exponent | Scalar" = 1) -> Element:
        return cls({Monomial.gen(index, exponent): ParamPoly.one()})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Monomial, ParamPoly]]) -> Element:
        acc: dict[Monomial, ParamPoly] = {}
        for mono, coeff in pairs:
            if mono in acc:
                acc[mono] = acc[mono] + coeff
            else:
                acc[mono] = coeff
        return cls(acc)

    @staticmethod
    def _coerce(value: object) -> "Element | None":
        if isinstance(value, Element):
            return value
        if isinstance(value, (int, Fraction, ParamPoly)):
            return Element.const(value)
        return None

    def items(self) -> Iterator[tuple[Monomial, ParamPoly]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Monomial, ParamPoly]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: Monomial) -> ParamPoly:
        return self._terms.get(mono, ParamPoly.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __add__(self, other: object) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in o._terms.items():
            s = out.get(mono, ParamPoly.zero()) + c
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return Element(out)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Monomial, ParamPoly] = {}
        for ma, ca in self._terms.items():
            for mb, cb in o._terms.items():
                mono = ma * mb
                term = ca * cb
                prior = out.get(mono)
                total = term if prior is None else prior + term
                if total:
                    out[mono] = total
                elif prior is not None:
                    del out[mono]
        return Element(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Element:
        if not isinstance(n, int) or n < 0:
            raise ValueError("Element powers must be nonnegative integers")
        out = Element.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def generator_indices(self) -> set[int]:
        return {i for mono in self._terms for i in mono.indices()}

    def substitute_param(self, name: str, value: Scalar) -> Element:
        """Specialize a parameter to an exact rational everywhere it occurs."""
        return Element.from_terms(
            (mono.substitute(name, value), coeff.substitute(name, value))
            for mono, coeff in self._terms.items()
        )

    def __str__(self) -> str:
        return _join_terms(
            _term_text(mono, coeff) for mono, coeff in self.sorted_terms()
        ) or "0"

    def __repr__(self) -> str:
        return f"Element({self})"


def _term_text(mono: Monomial, coeff: ParamPoly, ypower: int = 0) -> tuple[int, str]:
    """Render one term as (sign, body) for sign-aware joining."""
    items = coeff.sorted_items()
    factors: list[str] = []
    sign = 1
    if len(items) == 1:
        key, value = items[0]
        if value < 0:
            sign = -1
            value = -value
        single = ParamPoly({key: value})
        if not (single == 1):
            factors.append(str(single))
    else:
        factors.append(f"({coeff})")
    if not mono.is_one:
        factors.append(str(mono))
    if ypower == 1:
        factors.append("y")
    elif ypower > 1:
        factors.append(f"y^{ypower}")
    return sign, "*".join(factors) if factors else "1"


def _join_terms(parts: Iterable[tuple[int, str]]) -> str:
    out: list[str] = []
    for sign, body in parts:
        if not out:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


class YSeries:
    """A polynomial of bounded degree in y with Element coefficients.

    The order is fixed at construction; binary operations truncate to the
    smaller operand order, mirroring how exponential-derivation series are
    only meaningful through their computed order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Element]):
        if not coeffs:
            raise ValueError("a series needs at least its order-0 coefficient")
        self._coeffs = [c if isinstance(c, Element) else Element.const(c) for c in coeffs]

    @classmethod
    def zero(cls, order: int) -> YSeries:
        return cls([Element.zero() for _ in range(order + 1)])

    @classmethod
    def of_element(cls, a: "Element | Scalar", order: int) -> YSeries:
        base = a if isinstance(a, Element) else Element.const(a)
        return cls([base] + [Element.zero() for _ in range(order)])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Element:
        if not 0 <= k <= self.order:
            raise IndexError(f"series has order {self.order}; no y^{k} coefficient")
        return self._coeffs[k]

    def coefficients(self) -> list[Element]:
        return list(self._coeffs)

    def truncate(self, order: int) -> YSeries:
        if order < 0:
            raise ValueError("order must be nonnegative")
        if order >= self.order:
            return YSeries(self._coeffs)
        return YSeries(self._coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __add__(self, other: object) -> YSeries:
        if not isinstance(other, YSeries):
            o = Element._coerce(other)
            if o is None:
                return NotImplemented
            other = YSeries.of_element(o, self.order)
        n = min(self.order, other.order)
        return YSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> YSeries:
        return YSeries([-c for c in self._coeffs])

    def __sub__(self, other: object) -> YSeries:
        if isinstance(other, YSeries):
            return self + (-other)
        o = Element._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other: object) -> YSeries:
        if isinstance(other, YSeries):
            n = min(self.order, other.order)
            out = [Element.zero() for _ in range(n + 1)]
            for i, a in enumerate(self._coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return YSeries(out)
        o = Element._coerce(other)
        if o is None:
            return NotImplemented
        return YSeries([c * o for c in self._coeffs])

    __rmul__ = __mul__

    def substitute_param(self, name: str, value: Scalar) -> YSeries:
        return YSeries([c.substitute_param(name, value) for c in self._coeffs])

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __str__(self) -> str:
        parts: list[tuple[int, str]] = []
        for k, elem in enumerate(self._coeffs):
            for mono, coeff in elem.sorted_terms():
                parts.append(_term_text(mono, coeff, ypower=k))
        return _join_terms(parts) or "0"

    def __repr__(self) -> str:
        return f"YSeries(order={self.order}: {self})"
