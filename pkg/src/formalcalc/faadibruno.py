"""Higher derivatives of composite functions, done with a formal alphabet.

Work in the polynomial algebra on two symbol families: ``y_i`` (i >= 0),
standing for the i-th derivative of an outer function evaluated at an inner
one, and ``x_j`` (j >= 1), standing for the j-th derivative of the inner
function.  The derivation

    D y_i = y_{i+1} * x_1,      D x_j = x_{j+1}

then computes composite-function derivatives symbolically: D^n y_0 is the
n-th Bell/Faa di Bruno polynomial, with one monomial per partition of n.

``compose_expansion`` runs the resulting composition formula against a
direct polynomial-composition expansion and insists they agree — a dual
path that exercises the whole derivation from both ends.

The same alphabet drives the umbral-shift solver: given a weight sequence
B with B_1 != 0, the substitution ``substitute_weights`` (y_j -> 1,
x_i -> B_i * x) turns D^n y_0 into a polynomial p_n(x), and there is a
unique linear operator on polynomials with  shift^n(1) = p_n  for all n.
``umbral_shift`` solves for its images on the power basis recursively and
re-verifies the defining property before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from . import qpoly
from .qpoly import QPoly

# A symbol-power table: ((index, exponent), ...) sorted, exponents >= 1.
SymKey = tuple[tuple[int, int], ...]
TermKey = tuple[SymKey, SymKey]  # (outer powers, inner powers)


class ConsistencyError(RuntimeError):
    """The two composition routes disagreed; indicates an engine bug."""


def _merge(a: SymKey, b: SymKey) -> SymKey:
    acc = dict(a)
    for i, e in b:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted((i, e) for i, e in acc.items() if e))


class FdbPoly:
    """Polynomial in the composite-derivative alphabet y_0, y_1, ..., x_1, x_2, ..."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[TermKey, Fraction | int] | None = None):
        self._terms: dict[TermKey, Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self._terms[key] = c

    @classmethod
    def zero(cls) -> FdbPoly:
        return cls()

    @classmethod
    def const(cls, c: Fraction | int) -> FdbPoly:
        return cls({((), ()): Fraction(c)})

    @classmethod
    def outer_symbol(cls, i: int) -> FdbPoly:
        """y_i, the i-th outer-derivative symbol."""
        if i < 0:
            raise ValueError("outer symbols are indexed from 0")
        return cls({(((i, 1),), ()): Fraction(1)})

    @classmethod
    def inner_symbol(cls, j: int) -> FdbPoly:
        """x_j, the j-th inner-derivative symbol."""
        if j < 1:
            raise ValueError("inner symbols are indexed from 1")
        return cls({((), ((j, 1),)): Fraction(1)})

    def items(self) -> Iterable[tuple[TermKey, Fraction]]:
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[TermKey, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        """Number of monomials."""
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FdbPoly.const(other)
        if not isinstance(other, FdbPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "FdbPoly | Fraction | int") -> FdbPoly:
        if isinstance(other, (int, Fraction)):
            other = FdbPoly.const(other)
        if not isinstance(other, FdbPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return FdbPoly(out)

    __radd__ = __add__

    def __neg__(self) -> FdbPoly:
        return FdbPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FdbPoly | Fraction | int") -> FdbPoly:
        return self + (-(other if isinstance(other, FdbPoly) else FdbPoly.const(other)))

    def __mul__(self, other: "FdbPoly | Fraction | int") -> FdbPoly:
        if isinstance(other, (int, Fraction)):
            return FdbPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, FdbPoly):
            return NotImplemented
        out: dict[TermKey, Fraction] = {}
        for (ya, xa), ca in self._terms.items():
            for (yb, xb), cb in other._terms.items():
                key = (_merge(ya, yb), _merge(xa, xb))
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return FdbPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> FdbPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("FdbPoly powers must be nonnegative integers")
        out = FdbPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derive(self) -> FdbPoly:
        """Apply D (y_i -> y_{i+1} x_1, x_j -> x_{j+1}) by the Leibniz rule."""
        out = FdbPoly.zero()
        for (ys, xs), c in self._terms.items():
            for pos, (i, e) in enumerate(ys):
                lowered = ys[:pos] + ((i, e - 1),) + ys[pos + 1 :] if e > 1 else (
                    ys[:pos] + ys[pos + 1 :]
                )
                bumped = (_merge(lowered, ((i + 1, 1),)), _merge(xs, ((1, 1),)))
                out = out + FdbPoly({bumped: c * e})
            for pos, (j, e) in enumerate(xs):
                lowered = xs[:pos] + ((j, e - 1),) + xs[pos + 1 :] if e > 1 else (
                    xs[:pos] + xs[pos + 1 :]
                )
                bumped = (ys, _merge(lowered, ((j + 1, 1),)))
                out = out + FdbPoly({bumped: c * e})
        return out

    def substitute_weights(self, weights: Sequence[Fraction | int]) -> QPoly:
        """Send every y_j to 1 and every x_i to weights[i-1] * x.

        The result is a polynomial in x whose degree records how many inner
        symbols each monomial carried.  Referencing x_i beyond the end of
        the sequence is an error (the substitution is undefined there).
        """
        w = [Fraction(v) for v in weights]
        out: list[Fraction] = []
        for (_ys, xs), c in self._terms.items():
            total = c
            deg = 0
            for j, e in xs:
                if j > len(w):
                    raise ValueError(
                        f"inner symbol x_{j} has no weight; sequence has length {len(w)}"
                    )
                total *= w[j - 1] ** e
                deg += e
            while len(out) <= deg:
                out.append(Fraction(0))
            out[deg] += total
        return qpoly.normalize(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (ys, xs), c in self.sorted_terms():
            factors = [f"y_{i}" if e == 1 else f"y_{i}^{e}" for i, e in ys]
            factors += [f"x_{j}" if e == 1 else f"x_{j}^{e}" for j, e in xs]
            body = "*".join(factors)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FdbPoly({self})"


def derivative_tower(order: int) -> list[FdbPoly]:
    """[D^0 y_0, D^1 y_0, ..., D^order y_0], undivided."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    tower = [FdbPoly.outer_symbol(0)]
    for _ in range(order):
        tower.append(tower[-1].derive())
    return tower


def taylor_coefficients(order: int) -> list[FdbPoly]:
    """Coefficients D^n y_0 / n! of the exponentiated derivation, n = 0..order."""
    return [
        p * Fraction(1, factorial(n)) for n, p in enumerate(derivative_tower(order))
    ]


def substitute_weights(poly: FdbPoly, weights: Sequence[Fraction | int]) -> QPoly:
    return poly.substitute_weights(weights)


def compose_series_direct(
    f: Sequence[Fraction | int], g: Sequence[Fraction | int], order: int
) -> list[QPoly]:
    """y-coefficients of f(g(x+y)) by straight bivariate expansion.

    Expands g(x+y) with the binomial theorem, substitutes into f by
    Horner's scheme over polynomials-in-x per y-power, truncating y-degree
    at ``order`` throughout.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    fq, gq = qpoly.from_coeffs(f), qpoly.from_coeffs(g)
    # g(x+y) as y-coefficient list of x-polynomials
    gxy: list[QPoly] = [[] for _ in range(order + 1)]
    for m, c in enumerate(gq):
        if not c:
            continue
        for i in range(min(m, order) + 1):
            gxy[i] = qpoly.add(gxy[i], qpoly.scale(qpoly.x_power(m - i), c * comb(m, i)))

    def bi_mul(a: list[QPoly], b: list[QPoly]) -> list[QPoly]:
        out: list[QPoly] = [[] for _ in range(order + 1)]
        for i, pa in enumerate(a):
            if not pa:
                continue
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] = qpoly.add(out[i + j], qpoly.mul(pa, b[j]))
        return out

    result: list[QPoly] = [[] for _ in range(order + 1)]
    for c in reversed(fq):
        result = bi_mul(result, gxy)
        result[0] = qpoly.add(result[0], qpoly.const(c))
    return result


def compose_series_from_table(
    f: Sequence[Fraction | int], g: Sequence[Fraction | int], order: int
) -> list[QPoly]:
    """y-coefficients of f(g(x+y)) through the composite-derivative table.

    Substitutes y_i -> f^(i)(g(x)) and x_j -> g^(j)(x) into D^n y_0 / n!.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    fq, gq = qpoly.from_coeffs(f), qpoly.from_coeffs(g)
    outer_at_g: list[QPoly] = []
    d = fq
    for _ in range(order + 1):
        outer_at_g.append(qpoly.compose(d, gq))
        d = qpoly.derivative(d)
    inner: list[QPoly] = [gq]
    for _ in range(order):
        inner.append(qpoly.derivative(inner[-1]))

    out: list[QPoly] = []
    for n, dpoly in enumerate(derivative_tower(order)):
        acc: QPoly = []
        for (ys, xs), c in dpoly.items():
            prod = qpoly.const(c)
            for i, e in ys:
                prod = qpoly.mul(prod, qpoly.power(outer_at_g[i], e))
            for j, e in xs:
                prod = qpoly.mul(prod, qpoly.power(inner[j], e))
            acc = qpoly.add(acc, prod)
        out.append(qpoly.scale(acc, Fraction(1, factorial(n))))
    return out


def compose_expansion(
    f: Sequence[Fraction | int], g: Sequence[Fraction | int], order: int
) -> list[QPoly]:
    """Both composition routes, asserted equal; returns the coefficients.

    Raises ConsistencyError with the first differing y-power if the direct
    expansion and the derivative-table substitution ever disagree.
    """
    direct = compose_series_direct(f, g, order)
    tabled = compose_series_from_table(f, g, order)
    for k, (a, b) in enumerate(zip(direct, tabled)):
        if a != b:
            raise ConsistencyError(
                f"composition routes differ at y^{k}: "
                f"direct {qpoly.to_string(a)} vs table {qpoly.to_string(b)}"
            )
    return direct


@dataclass
class UmbralShift:
    """The linear operator solved from a weight sequence.

    ``images[k]`` is the image of x^k; every image has degree k+1 with
    leading coefficient weights[0].
    """

    weights: tuple[Fraction, ...]
    images: list[QPoly]

    @property
    def depth(self) -> int:
        return len(self.images)

    def image_of_power(self, k: int) -> QPoly:
        if not 0 <= k < len(self.images):
            raise ValueError(f"operator solved only for powers below {len(self.images)}")
        return list(self.images[k])

    def apply(self, p: Sequence[Fraction | int]) -> QPoly:
        """Apply to a polynomial written in the power basis."""
        pq = qpoly.from_coeffs(p)
        if len(pq) > len(self.images):
            raise ValueError(
                f"operator solved only for degree < {len(self.images)}; "
                f"got degree {len(pq) - 1}"
            )
        out: QPoly = []
        for k, c in enumerate(pq):
            if c:
                out = qpoly.add(out, qpoly.scale(self.images[k], c))
        return out


def umbral_shift(weights: Sequence[Fraction | int], depth: int) -> UmbralShift:
    """Solve for the operator with shift^n(1) = p_n, n = 1..depth.

    Here p_n is D^n y_0 under the weight substitution.  Weights beyond the
    given sequence are taken to be zero; the first weight must be nonzero
    (it is the leading coefficient of every image, so the triangular solve
    pivots on it).  The defining property is re-checked for all n <= depth
    before the operator is returned.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    w = [Fraction(v) for v in weights]
    if not w or not w[0]:
        raise ValueError("first weight must be nonzero; the recursion pivots on it")
    w += [Fraction(0)] * max(0, depth - len(w))

    targets = [p.substitute_weights(w) for p in derivative_tower(depth)]
    images: list[QPoly] = []
    for m in range(1, depth + 1):
        # solve  shift(p_{m-1}) = p_m  for the image of x^{m-1}
        prev, target = targets[m - 1], targets[m]
        residue = target
        for k in range(m - 1):
            residue = qpoly.sub(residue, qpoly.scale(images[k], qpoly.coeff(prev, k)))
        lead = qpoly.coeff(prev, m - 1)  # = w[0]^(m-1), nonzero
        images.append(qpoly.scale(residue, 1 / lead))

    shift = UmbralShift(tuple(w), images)
    state: QPoly = qpoly.const(1)
    for m in range(1, depth + 1):
        state = shift.apply(state)
        if state != targets[m]:
            raise ConsistencyError(
                f"umbral recursion failed self-check at depth {m}: "
                f"{qpoly.to_string(state)} != {qpoly.to_string(targets[m])}"
            )
    return shift
