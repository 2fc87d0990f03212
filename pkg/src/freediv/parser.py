"""Polynomial expression parser.

Grammar (no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

'/' is accepted only when the divisor is a nonzero constant, so that
rational coefficients printed as "3/2*x" read back in.
"""

import re

from .poly import Polynomial


class ParseError(ValueError):
    def __init__(self, msg, pos, text=""):
        self.pos = pos
        self.text = text
        super().__init__("%s at position %d" % (msg, pos))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            p = pos
            while p < n and text[p].isspace():
                p += 1
            raise ParseError("unexpected character %r" % text[p], p, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            if t[0] in ("name", "int") or t[1] == "(":
                self.error("unexpected %r (implicit multiplication is not allowed)" % (t[1],))
            self.error("unexpected %r" % (t[1],))
        return e

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    self.error("division only by a nonzero constant", tok)
                acc = acc.scale(1 / rhs.constant_value())
        return acc

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.peek()
            if t[0] != "int":
                self.error("exponent must be a non-negative integer literal")
            self.take()
            base = base ** t[1]
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses")
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return Polynomial.constant(self.ring, t[1])
        if t[0] == "name":
            if t[1] not in self.ring.index:
                raise ParseError("unknown identifier %r" % t[1], t[2], self.text)
            return Polynomial.variable(self.ring, t[1])
        if t[0] == "op" and t[1] == "(":
            e = self.expr()
            if self.peek()[1] != ")" or self.peek()[0] != "op":
                self.error("expected ')'")
            self.take()
            return e
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2], self.text)
        raise ParseError("unexpected %r" % (t[1],), t[2], self.text)


def parse_expression(text, ring):
    return _Parser(text, ring).parse()
