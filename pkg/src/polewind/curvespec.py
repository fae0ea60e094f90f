"""Curve-spec text format: parsing and printing.

Expression form
---------------
A spec is a sequence of statements separated by newlines or semicolons::

    name = lemniscate
    x = (t + t^3) / (1 + t^4)
    y = (t - t^3) / (1 + t^4)

Grammar (EBNF)::

    spec      = { statement , { ";" | NEWLINE } } ;
    statement = "x" "=" expr | "y" "=" expr | "name" "=" TEXT
              | TOLKEY "=" FLOAT ;
    expr      = term , { ("+" | "-") , term } ;
    term      = factor , { ("*" | "/") , factor } ;
    factor    = { "+" | "-" } , power ;
    power     = atom , [ "^" , [ "+" | "-" ] , INTEGER ] ;
    atom      = NUMBER | "t" | "(" , expr , ")" ;
    NUMBER    = INTEGER | INTEGER "." DIGITS ;
    TOLKEY    = "tol_residual" | "tol_cluster" | "tol_reality" | "tol_sign" ;

``#`` starts a comment.  All arithmetic is exact over the rationals; every
expression must reduce to a ratio of polynomials in ``t`` (so ``t`` may not
appear in an exponent).  The two coordinate functions are combined over a
common denominator with an exact polynomial gcd, and coefficients convert to
floating point only at the very end.

Coefficient form
----------------
A fenced block bypasses the expression parser; coefficients ascend and may
be integers, decimals or fractions::

    ```coeffs
    p1 = 1 0 1/10 0 -1
    p2 = 0 2 0 -2
    q  = 1 0 2 0 1
    ```
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError

_TOL_KEYS = ("tol_residual", "tol_cluster", "tol_reality", "tol_sign")


# ---------------------------------------------------------------------------
# exact polynomial helpers over Fraction coefficient tuples (ascending)
# ---------------------------------------------------------------------------

def _ptrim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if not c:
        return (Fraction(0),)
    return tuple(c)


def _pzero(c):
    return len(c) == 1 and c[0] == 0


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                        for i in range(n)))


def _pneg(a):
    return tuple(-v for v in a)


def _pmul(a, b):
    if _pzero(a) or _pzero(b):
        return (Fraction(0),)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(tuple(out))


def _pdivmod(a, b):
    """Exact polynomial division with remainder over the rationals."""
    if _pzero(b):
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and not (len(a) == 1 and a[0] == 0):
        k = len(a) - len(b)
        f = a[-1] / lead
        quo[k] = f
        for i, bi in enumerate(b):
            a[k + i] -= f * bi
        a.pop()
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if _pzero(tuple(a)):
            break
    return _ptrim(tuple(quo)), _ptrim(tuple(a))


def _pgcd(a, b):
    """Monic gcd over the rationals (Euclid)."""
    a, b = _ptrim(a), _ptrim(b)
    while not _pzero(b):
        _, r = _pdivmod(a, b)
        a, b = b, r
    if _pzero(a):
        return (Fraction(0),)
    return tuple(v / a[-1] for v in a)


@dataclass(frozen=True)
class _RatFunc:
    """Rational function num/den over exact rationals, gcd-reduced."""

    num: tuple
    den: tuple

    @staticmethod
    def make(num, den):
        num, den = _ptrim(num), _ptrim(den)
        if _pzero(den):
            raise ZeroDivisionError("division by a zero expression")
        if _pzero(num):
            return _RatFunc((Fraction(0),), (Fraction(1),))
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        lead = den[-1]
        num = tuple(v / lead for v in num)
        den = tuple(v / lead for v in den)
        return _RatFunc(num, den)

    @staticmethod
    def const(v):
        return _RatFunc((Fraction(v),), (Fraction(1),))

    def __add__(self, o):
        return _RatFunc.make(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den))

    def __sub__(self, o):
        return self + _RatFunc(_pneg(o.num), o.den)

    def __mul__(self, o):
        return _RatFunc.make(_pmul(self.num, o.num), _pmul(self.den, o.den))

    def __truediv__(self, o):
        return _RatFunc.make(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __neg__(self):
        return _RatFunc(_pneg(self.num), self.den)

    def pow(self, k: int):
        if k == 0:
            return _RatFunc.const(1)
        base = self if k > 0 else _RatFunc.make(self.den, self.num)
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out


# ---------------------------------------------------------------------------
# tokenizer / parser
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str   # num ident op eol end
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch == ";":
                tokens.append(_Token("eol", ";", ln, col))
                i += 1
            elif ch.isdigit() or (ch == "." and i + 1 < len(line)
                                  and line[i + 1].isdigit()):
                j = i
                seen_dot = False
                while j < len(line) and (line[j].isdigit()
                                         or (line[j] == "." and not seen_dot)):
                    seen_dot = seen_dot or line[j] == "."
                    j += 1
                tokens.append(_Token("num", line[i:j], ln, col))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(line) and (line[j].isalnum() or line[j] == "_"):
                    j += 1
                tokens.append(_Token("ident", line[i:j], ln, col))
                i = j
            elif ch in "+-*/^()=":
                tokens.append(_Token("op", ch, ln, col))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", ln, col)
        tokens.append(_Token("eol", "\n", ln, len(line) + 1))
    tokens.append(_Token("end", "", len(text.splitlines()) + 1, 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, text):
        tok = self.take()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}",
                             tok.line, tok.col)
        return tok

    def expr(self):
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            rhs = self.term()
            node = node + rhs if op.text == "+" else node - rhs
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take()
            rhs = self.factor()
            try:
                node = node * rhs if op.text == "*" else node / rhs
            except ZeroDivisionError:
                raise ParseError("division by a zero expression",
                                 op.line, op.col)
        return node

    def factor(self):
        sign = 1
        while self.peek().kind == "op" and self.peek().text in "+-":
            if self.take().text == "-":
                sign = -sign
        node = self.power()
        return node if sign > 0 else -node

    def power(self):
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            caret = self.take()
            esign = 1
            while self.peek().kind == "op" and self.peek().text in "+-":
                if self.take().text == "-":
                    esign = -esign
            tok = self.take()
            if tok.kind != "num" or "." in tok.text:
                raise ParseError("exponent must be an integer literal",
                                 tok.line, tok.col)
            try:
                node = node.pow(esign * int(tok.text))
            except ZeroDivisionError:
                raise ParseError("zero raised to a negative power",
                                 caret.line, caret.col)
            if self.peek().kind == "op" and self.peek().text == "^":
                nxt = self.peek()
                raise ParseError("chained exponent; parenthesize",
                                 nxt.line, nxt.col)
        return node

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return _RatFunc.const(Fraction(tok.text))
        if tok.kind == "ident":
            if tok.text == "t":
                return _RatFunc((Fraction(0), Fraction(1)), (Fraction(1),))
            raise ParseError(f"unknown symbol {tok.text!r} (only 't' may "
                             "appear in expressions)", tok.line, tok.col)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.col)


# ---------------------------------------------------------------------------
# spec assembly
# ---------------------------------------------------------------------------

@dataclass
class CurveSpec:
    """Either-form curve description with exact rational coefficients."""

    p1: tuple
    p2: tuple
    q: tuple
    name: str | None = None
    tol_overrides: dict = field(default_factory=dict)

    def float_triple(self):
        return ([float(v) for v in self.p1], [float(v) for v in self.p2],
                [float(v) for v in self.q])

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name = {self.name}")
        for key, val in sorted(self.tol_overrides.items()):
            lines.append(f"{key} = {val!r}")
        lines.append("```coeffs")
        for label, coeffs in (("p1", self.p1), ("p2", self.p2), ("q", self.q)):
            lines.append(f"{label} = " + " ".join(str(v) for v in coeffs))
        lines.append("```")
        return "\n".join(lines) + "\n"


def _parse_fraction(text: str, line: int, col: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {text!r}", line, col)


def _extract_coeff_block(lines, start):
    """Parse a ```coeffs fenced block starting at ``lines[start]``."""
    rows = {}
    k = start + 1
    while k < len(lines):
        raw = lines[k].strip()
        if raw.startswith("```"):
            break
        if raw and not raw.startswith("#"):
            if "=" not in raw:
                raise ParseError("coefficient line needs 'label = values'",
                                 k + 1, 1)
            label, _, rest = raw.partition("=")
            label = label.strip()
            if label not in ("p1", "p2", "q"):
                raise ParseError(f"unknown coefficient label {label!r}",
                                 k + 1, 1)
            vals = tuple(_parse_fraction(v, k + 1, 1) for v in rest.split())
            if not vals:
                raise ParseError("empty coefficient list", k + 1, 1)
            rows[label] = vals
        k += 1
    else:
        raise ParseError("unterminated ```coeffs block", start + 1, 1)
    missing = {"p1", "p2", "q"} - set(rows)
    if missing:
        raise ParseError(f"coefficient block missing {sorted(missing)}",
                         start + 1, 1)
    return rows, k


def parse_curve_spec(text: str) -> CurveSpec:
    """Parse curve-spec text (expression form or fenced coefficient form)."""
    lines = text.splitlines()
    name = None
    tols = {}

    # fenced coefficient block takes precedence
    for idx, raw in enumerate(lines):
        if raw.strip().startswith("```") and "coeffs" in raw:
            rows, endk = _extract_coeff_block(lines, idx)
            outside = lines[:idx] + lines[endk + 1:]
            name, tols = _scan_plain_keys(outside)
            return CurveSpec(rows["p1"], rows["p2"], rows["q"], name, tols)

    tokens = _tokenize(text)
    parser = _Parser(tokens)
    funcs: dict[str, _RatFunc] = {}
    while parser.peek().kind != "end":
        tok = parser.peek()
        if tok.kind == "eol":
            parser.take()
            continue
        if tok.kind != "ident":
            raise ParseError(f"expected an assignment, found {tok.text!r}",
                             tok.line, tok.col)
        target = parser.take()
        parser.expect_op("=")
        if target.text in ("x", "y"):
            if target.text in funcs:
                raise ParseError(f"{target.text!r} assigned twice",
                                 target.line, target.col)
            funcs[target.text] = parser.expr()
            nxt = parser.peek()
            if nxt.kind not in ("eol", "end"):
                raise ParseError(f"unexpected token {nxt.text!r} after "
                                 "expression", nxt.line, nxt.col)
        elif target.text == "name":
            parts = []
            while parser.peek().kind not in ("eol", "end"):
                parts.append(parser.take().text)
            name = " ".join(parts) or None
        elif target.text in _TOL_KEYS:
            tok = parser.take()
            if tok.kind != "num":
                # allow scientific notation written as 1e-12 (ident-ish)
                raise ParseError("tolerance override needs a number",
                                 tok.line, tok.col)
            tols[target.text] = float(Fraction(tok.text))
        else:
            raise ParseError(f"unknown statement {target.text!r}",
                             target.line, target.col)
    if "x" not in funcs or "y" not in funcs:
        raise ParseError("spec must define both x and y", len(lines) or 1, 1)
    p1, p2, q = _common_denominator(funcs["x"], funcs["y"])
    spec = CurveSpec(p1, p2, q, name, tols)
    return spec


def _scan_plain_keys(lines):
    name = None
    tols = {}
    for ln, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ParseError("expected 'key = value'", ln, 1)
        key, _, rest = stripped.partition("=")
        key, rest = key.strip(), rest.strip()
        if key == "name":
            name = rest or None
        elif key in _TOL_KEYS:
            try:
                tols[key] = float(rest)
            except ValueError:
                raise ParseError(f"bad tolerance value {rest!r}", ln, 1)
        else:
            raise ParseError(f"unknown statement {key!r}", ln, 1)
    return name, tols


def _common_denominator(fx: _RatFunc, fy: _RatFunc):
    """Assemble (p1, p2, q) over the least common denominator, with integer
    primitive normalization."""
    g = _pgcd(fx.den, fy.den)
    cof_y, _ = _pdivmod(fy.den, g)   # fy.den / g
    cof_x, _ = _pdivmod(fx.den, g)
    q = _pmul(fx.den, cof_y)
    p1 = _pmul(fx.num, cof_y)
    p2 = _pmul(fy.num, cof_x)

    # clear rational content: scale by lcm of denominators over gcd of numerators
    from math import gcd, lcm
    dens = [v.denominator for v in (*p1, *p2, *q) if v != 0]
    nums = [abs(v.numerator) for v in (*p1, *p2, *q) if v != 0]
    scale = Fraction(lcm(*dens) if dens else 1, gcd(*nums) if nums else 1)
    p1 = tuple(v * scale for v in p1)
    p2 = tuple(v * scale for v in p2)
    q = tuple(v * scale for v in q)
    if q[-1] < 0:
        p1, p2, q = _pneg(p1), _pneg(p2), _pneg(q)
    return _ptrim(p1), _ptrim(p2), _ptrim(q)
