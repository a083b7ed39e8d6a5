"""Text grammar for Clifford-valued polynomials.

::

    poly   := ['-'] term (('+' | '-') term)*
    term   := (coeff ('*'? factor)*) | (factor ('*'? factor)*)
    coeff  := int | int '/' posint
    factor := 'x' posint ('^' posint)? | 'e' '[' posint (',' posint)* ']'

Whitespace between tokens is ignored. A sign directly after ``+``/``-`` is
accepted, so ``x1 + -x1`` parses (to zero). Factors in one term multiply in
reading order: variables commute, blades multiply in Cl(0, n).
"""

import re

from .clifford import blade_indices, blade_mask, mul_masks
from .poly import CliffPoly, term_sort_key
from .rational import ONE, ZERO, rational


class PolyParseError(ValueError):
    """Malformed polynomial text. ``position`` is 1-based."""

    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"parse error at position {position}: {message}")


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xe\[\],^/*+\-]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = pos
            while text[bad].isspace():
                bad += 1
            raise PolyParseError(f"unexpected character {text[bad]!r}", bad + 1, text)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1) + 1))
        else:
            tokens.append((m.group(2), m.group(2), m.start(2) + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, expected):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolyParseError(f"expected {expected}, found {found}", tok[2], self.text)
        self.i += 1
        return tok

    def posint(self, what):
        tok = self.take("int", what)
        value = int(tok[1])
        if value < 1:
            raise PolyParseError(f"expected {what} >= 1, found {tok[1]}", tok[2], self.text)
        return value, tok[2]

    def parse(self):
        terms = {}
        sign = 1
        if self.peek()[0] == "-":
            self.i += 1
            sign = -1
        self.term(sign, terms)
        while self.peek()[0] in "+-":
            sign = 1 if self.take(self.peek()[0], "'+' or '-'")[0] == "+" else -1
            while self.peek()[0] in "+-":
                if self.take(self.peek()[0], "sign")[0] == "-":
                    sign = -sign
            self.term(sign, terms)
        tok = self.peek()
        if tok[0] != "end":
            raise PolyParseError(f"expected '+', '-' or end of input, found {tok[1]!r}", tok[2], self.text)
        return CliffPoly._raw(self.n, {k: v for k, v in terms.items() if v})

    def term(self, sign, terms):
        coeff = ONE
        factors = []
        tok = self.peek()
        if tok[0] == "int":
            self.i += 1
            coeff = rational(int(tok[1]))
            if self.peek()[0] == "/":
                self.i += 1
                den, _ = self.posint("positive denominator")
                coeff = coeff / den
        else:
            factors.append(self.factor("coefficient or factor"))
        while True:
            nxt = self.peek()[0]
            if nxt == "*":
                self.i += 1
                factors.append(self.factor("factor after '*'"))
            elif nxt in ("x", "e"):
                factors.append(self.factor("factor"))
            else:
                break
        alpha = [0] * self.n
        mask = 0
        for f in factors:
            if f[0] == "x":
                alpha[f[1] - 1] += f[2]
            else:
                s, mask = mul_masks(mask, f[1])
                sign *= s
        key = (tuple(alpha), mask)
        terms[key] = terms.get(key, ZERO) + (coeff if sign > 0 else -coeff)

    def factor(self, expected):
        tok = self.peek()
        if tok[0] == "x":
            self.i += 1
            j, jpos = self.posint("variable index")
            if j > self.n:
                raise PolyParseError(f"variable x{j} exceeds n={self.n}", jpos, self.text)
            power = 1
            if self.peek()[0] == "^":
                self.i += 1
                power, _ = self.posint("positive exponent")
            return ("x", j, power)
        if tok[0] != "e":
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolyParseError(f"expected {expected}, found {found}", tok[2], self.text)
        self.i += 1
        self.take("[", "'['")
        idx = []
        while True:
            k, kpos = self.posint("blade index")
            if k > self.n:
                raise PolyParseError(f"blade index {k} exceeds n={self.n}", kpos, self.text)
            if idx and k <= idx[-1]:
                raise PolyParseError("blade indices must be strictly increasing", kpos, self.text)
            idx.append(k)
            if self.peek()[0] == ",":
                self.i += 1
                continue
            self.take("]", "',' or ']'")
            return ("e", blade_mask(idx, self.n))


def parse_poly(text, n):
    """Parse polynomial text in ``n`` variables.

    >>> str(parse_poly("3/2 x1^2 x2 e[1,3]", 3))
    '3/2 x1^2 x2 e[1,3]'
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return _Parser(text, n).parse()


def _monomial_text(alpha):
    out = []
    for j, a in enumerate(alpha, start=1):
        if a == 1:
            out.append(f"x{j}")
        elif a > 1:
            out.append(f"x{j}^{a}")
    return out


def print_poly(p):
    """Canonical text: descending graded-lex monomials, then blades by (grade, lex)."""
    if p.is_zero():
        return "0"
    pieces = []
    for key in sorted(p._c, key=term_sort_key):
        alpha, mask = key
        c = p._c[key]
        factors = _monomial_text(alpha)
        if mask:
            factors.append("e[" + ",".join(map(str, blade_indices(mask))) + "]")
        mag = abs(c)
        body = factors if (mag == 1 and factors) else [str(mag)] + factors
        text = " ".join(body)
        if not pieces:
            pieces.append(text if c > 0 else "-" + text)
        else:
            pieces.append(("+ " if c > 0 else "- ") + text)
    return " ".join(pieces)
