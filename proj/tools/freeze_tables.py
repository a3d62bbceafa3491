#!/usr/bin/env python3
"""Regenerate data/tables.json from the printed table rows.

Expanded forms are computed here with sympy, independently of the C++
polynomial code, and frozen into the data file. The C++ side re-multiplies
the factored forms and checks that both agree.
"""
import json
import pathlib
import re

import sympy as sp
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication, parse_expr,
                                        standard_transformations)

TRANSFORMS = standard_transformations + (implicit_multiplication, convert_xor)

q = sp.Symbol("q")

CLASS_ROWS = [
    ("1A", 1, "(q^3 - 20q^2 + 119q - 175)(q - 3)(q - 5)(q - 7)"),
    ("2A", 2, "(q^4 - 11q^3 + 43q^2 - 60q + 5)(q - 1)(q - 3)"),
    ("2B", 2, "(q^4 - 3q^3 - 13q^2 + 16q + 41)(q - 3)(q - 5)"),
    ("2C", 2, "(q^3 - 4q^2 - q + 5)(q + 1)(q - 1)(q - 3)"),
    ("2D", 2, "(q^5 - 2q^4 - 8q^3 + 11q^2 + 17q - 7)(q - 1)"),
    ("3A", 3, "(q^2 - 3q + 5)(q + 1)(q - 1)(q - 2)q"),
    ("3B", 3, "(q^2 + 2q + 3)(q + 2)(q + 1)(q - 2)^2"),
    ("3C", 3, "q^6 - 2q^5 - 2q^4 - 8q^3 + 16q^2 + 10q + 21"),
    ("4A", 4, "(q^5 - 2q^3 - 3q^2 - 3q + 3)(q + 1)"),
    ("4B", 4, "(q^3 - 4q^2 + 3q + 3)(q + 1)(q - 1)^2"),
    ("4C", 4, "(q^4 - q^3 - q^2 - 3)(q + 1)(q - 1)"),
    ("4D", 4, "q^6 - 3q^5 - 2q^4 + 7q^3 - 6q^2 + 16q + 11"),
    ("4E", 4, "(q^4 - q^3 - q^2 - 3)(q + 1)(q - 1)"),
    ("5A", 5, "(q^2 + 1)(q + 1)(q - 1)q^2"),
    ("6A", 6, "(q^2 - q - 1)(q + 1)(q - 1)(q - 2)q"),
    ("6B", 6, "(q^2 - q - 1)(q + 2)(q + 1)(q - 1)q"),
    ("6C", 6, "(q^4 - q^2 - 2q - 4)(q + 1)q"),
    ("6D", 6, "(q^3 - q^2 - q + 2)(q + 1)(q - 1)q"),
    ("6E", 6, "(q^5 + q^4 + q^3 - 3q^2 - q - 3)(q - 1)"),
    ("6F", 6, "(q^5 - q^4 + q^3 - 5q^2 + q - 3)(q - 1)"),
    ("6G", 6, "(q^2 + q + 1)^2(q - 1)^2"),
    ("7A", 7, "(q^2 - q + 1)(q + 1)q^3"),
    ("8A", 8, "(q^3 - q + 1)(q^2 + 1)(q + 1)"),
    ("8B", 8, "(q^3 - q - 1)(q^2 + 1)(q - 1)"),
    ("9A", 9, "(q^2 + q + 1)(q^2 - q + 1)(q + 1)q"),
    ("10A", 10, "(q^2 + 1)(q + 1)(q - 1)q^2"),
    ("12A", 12, "(q^2 + q + 1)(q + 1)(q - 1)q^2"),
    ("12B", 12, "(q^2 - q - 1)(q + 1)(q - 1)q^2"),
    ("12C", 12, "(q^2 + 1)(q + 1)q^3"),
    ("15A", 15, "(q^2 + 1)(q + 1)(q - 1)q^2"),
]

P0 = "722883q^6 - 78225q^5 + 132510q^4 - 333375q^3 + 301602q^2 + 116760q + 1330245"
TRACE_ROWS = [
    (-6, "(q^3 - 20q^2 + 119q - 175)(q - 3)(q - 5)(q - 7)"),
    (-4, "63(q^4 - 11q^3 + 43q^2 - 60q + 5)(q - 1)(q - 3)"),
    (-3, "672(q^2 - 3q + 5)(q + 1)(q - 1)(q - 2)q"),
    (-2, "945(13q^5 - 24q^4 + 10q^3 - 7q^2 - 59q + 51)(q + 1)"),
    (-1, "896(169q^5 - 99q^4 + 19q^3 - 159q^2 - 80q + 60)(q + 1)"),
    (0, P0),
    (1, "1728(653q^4 - 618q^3 + 548q^2 + 7q - 70)(q + 1)q"),
    (2, P0),
    (3, "896(169q^5 - 99q^4 + 19q^3 - 159q^2 - 80q + 60)(q + 1)"),
    (4, "945(13q^5 - 24q^4 + 10q^3 - 7q^2 - 59q + 51)(q + 1)"),
    (5, "672(q^2 - 3q + 5)(q + 1)(q - 1)(q - 2)q"),
    (6, "63(q^4 - 11q^3 + 43q^2 - 60q + 5)(q - 1)(q - 3)"),
    (8, "(q^3 - 20q^2 + 119q - 175)(q - 3)(q - 5)(q - 7)"),
]

CLASS_EXCEPTIONS = [
    {"class": "1A", "q": [3, 5, 7]},
    {"class": "2A", "q": [3]},
    {"class": "2B", "q": [3, 5]},
]
TRACE_EXCEPTIONS = [
    {"trace": -6, "q": [3, 5, 7]},
    {"trace": 8, "q": [3, 5, 7]},
    {"trace": -4, "q": [3]},
    {"trace": 6, "q": [3]},
]

def to_sympy(text):
    return parse_expr(text, local_dict={"q": q}, transformations=TRANSFORMS)


def split_factors(text):
    """Split a printed row into (scale, [(factor_text, multiplicity)])."""
    scale_match = re.match(r"^(\d+)\(", text)
    scale = 1
    if scale_match:
        scale = int(scale_match.group(1))
        text = text[len(scale_match.group(1)):]
    factors = []
    i = 0
    while i < len(text):
        if text[i] == "(":
            j = text.index(")", i)
            body = text[i + 1:j]
            i = j + 1
        elif text[i] == "q":
            body = "q"
            i += 1
        else:
            # bare polynomial row (no parentheses)
            return scale, [(text, 1)]
        mult = 1
        m = re.match(r"\^(\d+)", text[i:])
        if m:
            mult = int(m.group(1))
            i += len(m.group(0))
        factors.append((body, mult))
    return scale, factors


def coeffs(expr):
    poly = sp.Poly(sp.expand(expr), q)
    return [int(c) for c in reversed(poly.all_coeffs())]


def encode(text):
    scale, parts = split_factors(text)
    factors = [{"coeffs": coeffs(to_sympy(body)), "multiplicity": mult}
               for body, mult in parts]
    expanded = coeffs(scale * to_sympy(text if scale == 1 else text[len(str(scale)):]))
    assert sp.expand(to_sympy(text) - sum(c * q**i for i, c in enumerate(expanded))) == 0
    return {"printed": text, "scale": scale, "factors": factors, "expanded": expanded}


def main():
    out = {
        "version": 1,
        "classes": [dict(name=n, order=o, **encode(t)) for n, o, t in CLASS_ROWS],
        "traces": [dict(trace=a, **encode(t)) for a, t in TRACE_ROWS],
        "class_exceptions": CLASS_EXCEPTIONS,
        "trace_exceptions": TRACE_EXCEPTIONS,
    }
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "tables.json"
    path.write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
