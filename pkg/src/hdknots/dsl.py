"""Recursive-descent parsers for the projection and immersed-sphere expressions.

Grammars (whitespace and ``#`` comments are ignored between tokens)::

    PROJ ::= base(kummer[,mu=INT]) | stack(PROJ{,PROJ}) | double(PROJ)
           | mirror(PROJ) | spin(PROJ)
    IMM  ::= giller | embedded(INT) | spin(IMM) | connsum(IMM,IMM)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import projection as pj
from .errors import ParseError, ValidationError

MAX_DEPTH = 200

_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r\n\f\v]+|#[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)|(?P<punct>[(),=])")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "punct" or "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str, expected=(), tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, expected)

    def describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def expect(self, text: str) -> Token:
        tok = self.tok
        if tok.text != text or tok.kind == "eof":
            self.fail(f"expected {text!r}, found {self.describe(tok)}", {text})
        self.i += 1
        return tok

    def keyword(self, choices: tuple[str, ...]) -> Token:
        tok = self.tok
        if tok.kind != "ident" or tok.text not in choices:
            self.fail(f"expected an expression, found {self.describe(tok)}", choices)
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "int":
            self.fail(f"expected an integer, found {self.describe(tok)}", {"INT"})
        self.i += 1
        try:
            return int(tok.text)
        except ValueError:
            self.fail("integer literal too long", tok=tok)

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail(f"expression nested deeper than {MAX_DEPTH} levels")

    def finish(self, value):
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.describe(self.tok)} after the expression", {"end of input"})
        return value

    def build(self, tok: Token, make):
        try:
            return make()
        except ValidationError as exc:
            self.fail(f"invalid {tok.text}: {exc}", tok=tok)


_PROJ_WORDS = ("base", "stack", "double", "mirror", "spin")
_IMM_WORDS = ("giller", "embedded", "spin", "connsum")


class _ProjParser(_Parser):
    def __init__(self, text: str, default_mu: int):
        super().__init__(text)
        self.default_mu = default_mu

    def expr(self) -> pj.ProjectionExpr:
        self.enter()
        head = self.keyword(_PROJ_WORDS)
        self.expect("(")
        if head.text == "base":
            tmpl = self.tok
            if tmpl.kind != "ident" or tmpl.text != "kummer":
                self.fail(f"unknown template {self.describe(tmpl)}", {"kummer"})
            self.i += 1
            mu = self.default_mu
            if self.tok.text == ",":
                self.i += 1
                key = self.tok
                if key.kind != "ident" or key.text != "mu":
                    self.fail(f"expected 'mu', found {self.describe(key)}", {"mu"})
                self.i += 1
                self.expect("=")
                mu = self.integer()
            self.expect(")")
            result = self.build(head, lambda: pj.Base(mu))
        elif head.text == "stack":
            parts = [self.expr()]
            while self.tok.text == ",":
                self.i += 1
                parts.append(self.expr())
            self.expect(")")
            result = self.build(head, lambda: pj.Stack(tuple(parts)))
        else:
            inner = self.expr()
            self.expect(")")
            result = {"double": pj.Double, "mirror": pj.Mirror, "spin": pj.Spin}[head.text](inner)
        self.depth -= 1
        return result


class _ImmParser(_Parser):
    def expr(self) -> pj.ImmersedSphereExpr:
        self.enter()
        head = self.keyword(_IMM_WORDS)
        if head.text == "giller":
            result = pj.Giller()
        elif head.text == "embedded":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            result = self.build(head, lambda: pj.Embedded(n))
        elif head.text == "spin":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            result = pj.SpinI(inner)
        else:
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            result = self.build(head, lambda: pj.ConnSum(left, right))
        self.depth -= 1
        return result


def parse_proj(text: str, default_mu: int = pj.DEFAULT_MU) -> pj.ProjectionExpr:
    p = _ProjParser(text, default_mu)
    return p.finish(p.expr())


def parse_imm(text: str) -> pj.ImmersedSphereExpr:
    p = _ImmParser(text)
    return p.finish(p.expr())
