"""Tokenizer and recursive-descent parser for polynomial text.

Grammar::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ['^' INT]
    base   := INT | NAME | '(' expr ')'

Division is only allowed by a nonzero constant, so ``1/2*x`` and ``x/3`` parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from sabar.algebra.poly import MultiPoly
from sabar.errors import ParseError

TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op><=|>=|!=|[-+*/^()<>=&|!]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at {pos}")
        kind = match.lastgroup
        assert kind is not None
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list shared by the polynomial and formula parsers."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def at(self, *texts: str) -> bool:
        tok = self.current
        return tok.kind == "op" and tok.text in texts

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != "end":
            self.index += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message: str) -> None:
        tok = self.current
        found = tok.text or "end of input"
        raise ParseError(f"{message} at position {tok.pos} (found {found!r}) in {self.text!r}")

    def expect_end(self) -> None:
        if self.current.kind != "end":
            self.fail("unexpected trailing input")


class PolyParser:
    def __init__(self, stream: TokenStream) -> None:
        self.stream = stream

    def expr(self) -> MultiPoly:
        s = self.stream
        negate = False
        if s.at("+", "-"):
            negate = s.advance().text == "-"
        result = self.term()
        if negate:
            result = -result
        while s.at("+", "-"):
            op = s.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        s = self.stream
        result = self.factor()
        while s.at("*", "/"):
            op = s.advance().text
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    s.fail("division only by a nonzero constant")
                result = result.scale(1 / rhs.constant_value())
        return result

    def factor(self) -> MultiPoly:
        s = self.stream
        if s.at("-"):
            s.advance()
            return -self.factor()
        base = self.base()
        if s.at("^"):
            s.advance()
            tok = s.current
            if tok.kind != "num":
                s.fail("expected integer exponent")
            s.advance()
            base = base ** int(tok.text)
        return base

    def base(self) -> MultiPoly:
        s = self.stream
        tok = s.current
        if tok.kind == "num":
            s.advance()
            return MultiPoly.constant(int(tok.text))
        if tok.kind == "name":
            s.advance()
            return MultiPoly.var(tok.text)
        if s.at("("):
            s.advance()
            inner = self.expr()
            s.expect(")")
            return inner
        s.fail("expected a number, variable or '('")
        raise AssertionError("unreachable")


def parse_poly(text: str) -> MultiPoly:
    """Parse a polynomial; the printed form of any MultiPoly parses back to itself."""
    stream = TokenStream(text)
    result = PolyParser(stream).expr()
    stream.expect_end()
    return result
