"""JSON encoding/decoding for the algebra types and CLI payloads.

Rationals are strings like ``"-3/2"`` (exactness survives any JSON
round-trip; floats never appear).  The document shapes produced by the CLI
are described by ``schema/cli-output.schema.json``, shipped inside the
package; ``load_schema`` returns it as a dict.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any

from .algebra import Element, Exponent, Monomial, YSeries
from .faadibruno import FdbPoly, UmbralShift
from .params import ParamPoly
from .qpoly import QPoly
from .report import VerifyReport


def fraction_to_json(q: Fraction) -> str:
    return str(q)


def fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


def parampoly_to_json(p: ParamPoly) -> list[dict[str, Any]]:
    return [
        {"coeff": str(c), "powers": {name: power for name, power in key}}
        for key, c in p.sorted_items()
    ]


def parampoly_from_json(data: list[dict[str, Any]]) -> ParamPoly:
    out = ParamPoly.zero()
    for term in data:
        key = tuple(sorted((str(n), int(p)) for n, p in term["powers"].items()))
        out = out + ParamPoly({key: Fraction(term["coeff"])})
    return out


def exponent_to_json(e: Exponent) -> dict[str, Any]:
    return {"const": str(e.const), "linear": {n: m for n, m in e.linear}}


def exponent_from_json(data: dict[str, Any]) -> Exponent:
    return Exponent(
        Fraction(data["const"]),
        tuple((str(n), int(m)) for n, m in data["linear"].items()),
    )


def element_to_json(a: Element) -> list[dict[str, Any]]:
    return [
        {
            "monomial": [
                {"gen": index, "exp": exponent_to_json(e)} for index, e in mono.powers
            ],
            "coeff": parampoly_to_json(coeff),
        }
        for mono, coeff in a.sorted_terms()
    ]


def element_from_json(data: list[dict[str, Any]]) -> Element:
    out = Element.zero()
    for term in data:
        mono = Monomial(
            tuple(
                (int(p["gen"]), exponent_from_json(p["exp"]))
                for p in term["monomial"]
            )
        )
        out = out + Element({mono: parampoly_from_json(term["coeff"])})
    return out


def yseries_to_json(s: YSeries) -> dict[str, Any]:
    return {
        "order": s.order,
        "coeffs": [element_to_json(c) for c in s.coefficients()],
    }


def yseries_from_json(data: dict[str, Any]) -> YSeries:
    coeffs = [element_from_json(c) for c in data["coeffs"]]
    if len(coeffs) != int(data["order"]) + 1:
        raise ValueError("series order disagrees with coefficient count")
    return YSeries(coeffs)


def qpoly_to_json(p: QPoly) -> list[str]:
    return [str(c) for c in p]


def qpoly_from_json(data: list[str]) -> QPoly:
    return [Fraction(c) for c in data]


def fdbpoly_to_json(p: FdbPoly) -> list[dict[str, Any]]:
    return [
        {
            "coeff": str(c),
            "outer": {str(i): e for i, e in ys},
            "inner": {str(j): e for j, e in xs},
        }
        for (ys, xs), c in p.sorted_terms()
    ]


def fdbpoly_from_json(data: list[dict[str, Any]]) -> FdbPoly:
    out = FdbPoly.zero()
    for term in data:
        ys = tuple(sorted((int(i), int(e)) for i, e in term["outer"].items()))
        xs = tuple(sorted((int(j), int(e)) for j, e in term["inner"].items()))
        out = out + FdbPoly({(ys, xs): Fraction(term["coeff"])})
    return out


def report_to_json(r: VerifyReport) -> dict[str, Any]:
    return {
        "kind": "verify",
        "check": r.check,
        "passed": r.passed,
        "cases": r.cases,
        "counterexample": r.counterexample,
    }


def series_doc(command: str, expr: str, series: YSeries) -> dict[str, Any]:
    return {
        "kind": "series",
        "command": command,
        "expr": expr,
        "series": yseries_to_json(series),
    }


def table_doc(max_k: int, rows: list[list[int]]) -> dict[str, Any]:
    return {"kind": "stirling-table", "max": max_k, "rows": rows}


def fdb_doc(order: int, coefficients: list[FdbPoly]) -> dict[str, Any]:
    return {
        "kind": "faa-di-bruno",
        "order": order,
        "coefficients": [fdbpoly_to_json(p) for p in coefficients],
    }


def umbral_doc(shift: UmbralShift) -> dict[str, Any]:
    return {
        "kind": "umbral",
        "weights": [str(w) for w in shift.weights],
        "rows": [
            {"power": k, "image": qpoly_to_json(img)}
            for k, img in enumerate(shift.images)
        ],
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def load_schema() -> dict[str, Any]:
    text = (
        resources.files("formalcalc") / "schema" / "cli-output.schema.json"
    ).read_text()
    return json.loads(text)
