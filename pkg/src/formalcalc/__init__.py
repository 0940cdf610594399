"""Exact formal calculus on the iterated-logarithm generator tower.

The package computes with finite sums of generator powers — x, log x,
exp x, and their iterates in both directions — over exact rational
coefficients that may involve symbolic parameters.  Derivations defined on
the generators extend by the Leibniz and power rules, and their truncated
exponentials give formal Taylor expansions that can be cross-checked, term
by term, against closed summation formulas built from Stirling-cycle
combinatorics.  A second alphabet handles composite-function derivatives
and the weight-sequence shift operators they induce.

Everything is exact: no floats, no tolerances — identities either hold
structurally or the verifiers report the first counterexample.
"""

from .algebra import Element, Exponent, Monomial, YSeries, binom
from .checks import (
    random_element,
    random_exponent,
    random_qpoly,
    verify_automorphism,
    verify_composition,
)
from .combinatorics import (
    signed_esym,
    stirling1,
    stirling1_by_recurrence,
    stirling_chain,
    stirling_rows,
    verify_chain_product,
    verify_lubell,
)
from .derivations import ClosureError, Derivation, d_dx, x_d_dx
from .diffrep import IndexShift, lifted_exp, verify_intertwining
from .expansions import (
    FORMS,
    binomial_series,
    closed_form_series,
    iterated_log_series,
    log_power_series,
    log_series,
)
from .faadibruno import (
    ConsistencyError,
    FdbPoly,
    UmbralShift,
    compose_expansion,
    compose_series_direct,
    compose_series_from_table,
    derivative_tower,
    substitute_weights,
    taylor_coefficients,
    umbral_shift,
)
from .params import ParamPoly
from .parser import ParseError, parse, parse_element, parse_fdb, to_element, to_exponent
from .report import VerifyReport

__version__ = "0.1.0"

__all__ = [
    "Element",
    "Exponent",
    "Monomial",
    "YSeries",
    "ParamPoly",
    "binom",
    "Derivation",
    "ClosureError",
    "d_dx",
    "x_d_dx",
    "IndexShift",
    "lifted_exp",
    "verify_intertwining",
    "FORMS",
    "binomial_series",
    "log_series",
    "log_power_series",
    "iterated_log_series",
    "closed_form_series",
    "stirling1",
    "stirling1_by_recurrence",
    "stirling_rows",
    "signed_esym",
    "stirling_chain",
    "verify_chain_product",
    "verify_lubell",
    "FdbPoly",
    "ConsistencyError",
    "derivative_tower",
    "taylor_coefficients",
    "substitute_weights",
    "compose_series_direct",
    "compose_series_from_table",
    "compose_expansion",
    "UmbralShift",
    "umbral_shift",
    "VerifyReport",
    "verify_automorphism",
    "verify_composition",
    "random_element",
    "random_exponent",
    "random_qpoly",
    "ParseError",
    "parse",
    "parse_element",
    "parse_fdb",
    "to_element",
    "to_exponent",
    "__version__",
]
