"""Text form of polynomials.

Grammar (whitespace-insensitive)::

    poly   := '0' | [sign] term (sign term)*
    term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor := var ['^' nat]
    var    := 'x[' nat ',' nat ']' | 't'
    coeff  := nat ['/' nat]

Printing with :meth:`Polynomial.to_text` and parsing back is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .algebra import AlgebraError, Polynomial, Ring, VarRef

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(t)|([\[\],*^+\-/]))")


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            mt = _TOKEN.match(text, pos)
            if not mt:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise self._err(f"unexpected character {text[start]!r}", start)
            kind = "int" if mt.group(1) else "x" if mt.group(2) else "t" if mt.group(3) else "sym"
            start = mt.end() - len(mt.group(mt.lastindex))
            self.toks.append((kind, mt.group(mt.lastindex), start))
            pos = mt.end()
        self.i = 0

    def _err(self, msg: str, pos: int) -> ParseError:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return ParseError(msg, line, col)

    def error(self, msg: str) -> ParseError:
        pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        return self._err(msg, pos)

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            got = "end of input" if tok[0] is None else repr(tok[1])
            raise self.error(f"expected {want!r}, found {got}")
        self.i += 1
        return tok


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse one polynomial; errors carry one-based line and column."""
    tk = _Tokens(text)
    if not tk.toks:
        raise tk.error("empty polynomial")
    total: dict = {}
    first = True
    fs = ring.field
    while tk.peek()[0] is not None:
        sign = 1
        kind, val, _ = tk.peek()
        if kind == "sym" and val in "+-":
            tk.take()
            sign = -1 if val == "-" else 1
        elif not first:
            raise tk.error(f"expected '+' or '-', found {val!r}")
        first = False
        coeff, exps = _term(tk, ring)
        e = tuple(exps)
        total[e] = fs.norm(total.get(e, 0) + fs.coerce(coeff * sign))
    return Polynomial(ring, total)


def _term(tk: _Tokens, ring: Ring):
    exps = [0] * ring.nvars
    coeff: Fraction = Fraction(1)
    kind, val, _ = tk.peek()
    need_factor = True
    if kind == "int":
        num = int(tk.take("int")[1])
        if tk.peek()[1] == "/":
            tk.take()
            if tk.peek()[0] != "int":
                raise tk.error("division is only allowed between integers in a coefficient")
            if int(tk.peek()[1]) == 0:
                raise tk.error("zero denominator")
            den = int(tk.take("int")[1])
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        if tk.peek()[1] == "*":
            tk.take()
        else:
            need_factor = False
    while need_factor:
        _factor(tk, ring, exps)
        nxt = tk.peek()[1]
        if nxt == "*":
            tk.take()
            continue
        if nxt == "/":
            raise tk.error("division is only allowed between integers in a coefficient")
        break
    return coeff, exps


def _factor(tk: _Tokens, ring: Ring, exps: list):
    kind, val, _ = tk.peek()
    if kind == "x":
        start = tk.i
        tk.take()
        tk.take("sym", "[")
        i = int(tk.take("int")[1])
        tk.take("sym", ",")
        j = int(tk.take("int")[1])
        tk.take("sym", "]")
        if not (1 <= i <= ring.m and 1 <= j <= ring.n):
            tk.i = start
            raise tk.error(f"x[{i},{j}] is outside a {ring.m}x{ring.n} matrix")
        idx = ring.index(VarRef.matrix(i, j))
    elif kind == "t":
        tk.take()
        idx = ring.t_index
    elif kind == "int":
        raise tk.error("a coefficient must come first in a term")
    else:
        raise tk.error(f"expected a variable, found {'end of input' if kind is None else repr(val)}")
    power = 1
    if tk.peek()[1] == "^":
        tk.take()
        power = int(tk.take("int")[1])
    exps[idx] += power


def parse_poly_list(text: str, ring: Ring) -> List[Polynomial]:
    """One polynomial per line; blank lines and ``#`` comments are ignored."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_poly(line, ring))
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[1], lineno, exc.col) from None
    return out
