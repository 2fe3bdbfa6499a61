"""Plain-text polynomial notation for the CLI.

Grammar: integer coefficients, variables x0..x9, `*` for products, `^` for
powers, `+`/`-` between terms.  Example: ``x0^2 + 3*x0*x1 + 2``.  The printer
emits canonical form (terms sorted by descending exponent tuple, coefficients
as canonical ring integers) and parse/format round-trip exactly.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(\d+|x[0-9]|\^|\*|\+|-)")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad polynomial syntax at: {text[pos:pos+12]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_terms(text: str, nvars: int) -> dict[tuple[int, ...], int]:
    """Parse into {exponent tuple: integer coefficient}.

    Coefficients are raw integers; map them into a ring afterwards.  Exponent
    tuples have length `nvars`; using a variable at or past x{nvars} is an
    error.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial")
    terms: dict[tuple[int, ...], int] = {}
    i = 0

    def parse_term(i: int, sign: int):
        coeff = None
        exps = [0] * nvars
        saw_factor = False
        expect_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-" and not expect_factor:
                break
            if tok == "*":
                if expect_factor:
                    raise ValueError("misplaced '*'")
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                raise ValueError(f"missing operator before {tok!r}")
            if tok.isdigit():
                coeff = (coeff if coeff is not None else 1) * int(tok)
                i += 1
            elif tok.startswith("x"):
                v = int(tok[1])
                if v >= nvars:
                    raise ValueError(f"variable {tok} out of range for {nvars} variables")
                e = 1
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                        raise ValueError("'^' must be followed by an integer")
                    e = int(tokens[i + 1])
                    i += 2
                exps[v] += e
            else:
                raise ValueError(f"unexpected token {tok!r}")
            saw_factor = True
            expect_factor = False
        if not saw_factor:
            raise ValueError("empty term")
        c = sign * (1 if coeff is None else coeff)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
        return i

    pending_sign: int | None = None
    after_term = False
    while i < len(tokens):
        tok = tokens[i]
        if tok in "+-":
            if pending_sign is not None:
                raise ValueError("consecutive signs")
            pending_sign = -1 if tok == "-" else 1
            after_term = False
            i += 1
        else:
            if after_term:
                raise ValueError(f"missing '+' or '-' before {tok!r}")
            i = parse_term(i, 1 if pending_sign is None else pending_sign)
            pending_sign = None
            after_term = True
    if pending_sign is not None:
        raise ValueError("dangling sign at end of polynomial")
    return {e: c for e, c in terms.items() if c != 0}


def format_terms(terms: dict[tuple[int, ...], int], nvars: int,
                 var_offset: int = 0) -> str:
    """Canonical text form; inverse of parse_terms.  Negative coefficients
    print through a ' - ' separator.  var_offset shifts variable names, for
    polynomials living in a tail of the variable list (eliminants)."""
    live = {tuple(e): int(c) for e, c in terms.items() if c != 0}
    if not live:
        return "0"
    out = ""
    for e in sorted(live, reverse=True):
        c = live[e]
        factors = []
        for v, exp in enumerate(e):
            if exp == 1:
                factors.append(f"x{v + var_offset}")
            elif exp > 1:
                factors.append(f"x{v + var_offset}^{exp}")
        if not factors or abs(c) != 1:
            factors.insert(0, str(abs(c)))
        term = "*".join(factors)
        if not out:
            out = ("-" if c < 0 else "") + term
        else:
            out += (" - " if c < 0 else " + ") + term
    return out
