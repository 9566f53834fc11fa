"""Loading of the embedded verification fixtures.

Fixture files carry reference tables verbatim so that resolving a
suspected misprint is a data change, not a code change.  The directory
can be overridden through the CAYLEY_FIXTURES environment variable.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from pathlib import Path

from .exact import HomogPoly, poly_mul

_DEFAULT_DIR = Path(__file__).parent / "fixtures"


def fixtures_dir() -> Path:
    override = os.environ.get("CAYLEY_FIXTURES")
    if override:
        return Path(override)
    return _DEFAULT_DIR


def load_fixture(name: str):
    path = fixtures_dir() / f"{name}.json"
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# tiny evaluator for the polynomial expressions printed in the reference
# figures, e.g. "4g(g-b)", "2(b-g)^2", "-3bg", "b(4b-g)"
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[abg()+^-]|\*)")

_VARS = {
    "a": HomogPoly.linear(1, 0),
    "b": HomogPoly.linear(0, 1),
    "g": HomogPoly.linear(-1, -1),
}


def _tokenize(expr):
    out, pos = [], 0
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise ValueError(f"bad form expression {expr!r} at {pos}")
        tok = m.group(1)
        if tok != "*":
            out.append(tok)
        pos = m.end()
    return out


def parse_form(expr: str) -> HomogPoly:
    """Evaluate a printed polynomial expression into a canonical form.

    Supports integers, the three characters a, b, g (with g = -a-b),
    parentheses, +, -, ^ and implicit multiplication by adjacency.
    """
    tokens = _tokenize(expr)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def parse_sum():
        nonlocal pos
        sign = 1
        while peek() in ("+", "-"):
            if tokens[pos] == "-":
                sign = -sign
            pos += 1
        total = parse_product().scale(sign)
        while peek() in ("+", "-"):
            sign = 1
            while peek() in ("+", "-"):
                if tokens[pos] == "-":
                    sign = -sign
                pos += 1
            total = total + parse_product().scale(sign)
        return total

    def parse_product():
        nonlocal pos
        out = parse_power()
        while peek() is not None and (peek() == "(" or peek() in _VARS or peek().isdigit()):
            out = poly_mul(out, parse_power())
        return out

    def parse_power():
        nonlocal pos
        base = parse_atom()
        if peek() == "^":
            pos += 1
            exp = int(tokens[pos])
            pos += 1
            out = HomogPoly.constant(1)
            for _ in range(exp):
                out = poly_mul(out, base)
            return out
        return base

    def parse_atom():
        nonlocal pos
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            inner = parse_sum()
            if peek() != ")":
                raise ValueError(f"unbalanced parentheses in {expr!r}")
            pos += 1
            return inner
        if tok in _VARS:
            pos += 1
            return _VARS[tok]
        if tok.isdigit():
            pos += 1
            return HomogPoly.constant(Fraction(int(tok)))
        raise ValueError(f"unexpected token {tok!r} in {expr!r}")

    result = parse_sum()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {expr!r}")
    return result
