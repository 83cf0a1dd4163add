"""Formula text: atoms ``(<poly> <op> 0)`` joined by ``&``, ``|`` and ``!``.

``&`` binds tighter than ``|``. Atoms may compare two polynomials; they are
normalized to ``lhs - rhs <op> 0``.
"""

from __future__ import annotations

from sabar.algebra.parser import PolyParser, TokenStream
from sabar.errors import ParseError
from sabar.formulas.ast import And, Atom, Formula, Not, Or, Relation

_RELATIONS = {r.value: r for r in Relation}


class FormulaParser:
    def __init__(self, text: str) -> None:
        self.stream = TokenStream(text)
        self.polys = PolyParser(self.stream)

    def parse(self) -> Formula:
        phi = self.disjunction()
        self.stream.expect_end()
        return phi

    def disjunction(self) -> Formula:
        children = [self.conjunction()]
        while self.stream.at("|"):
            self.stream.advance()
            children.append(self.conjunction())
        return children[0] if len(children) == 1 else Or(tuple(children))

    def conjunction(self) -> Formula:
        children = [self.primary()]
        while self.stream.at("&"):
            self.stream.advance()
            children.append(self.primary())
        return children[0] if len(children) == 1 else And(tuple(children))

    def primary(self) -> Formula:
        s = self.stream
        if s.at("!"):
            s.advance()
            return Not(self.primary())
        if s.at("("):
            # either a polynomial starting with "(" or a parenthesized formula
            save = s.index
            try:
                return self.comparison()
            except ParseError:
                s.index = save
            s.advance()
            inner = self.disjunction()
            s.expect(")")
            return inner
        return self.comparison()

    def comparison(self) -> Atom:
        s = self.stream
        lhs = self.polys.expr()
        if not s.at(*_RELATIONS):
            s.fail("expected a relation")
        rel = _RELATIONS[s.advance().text]
        rhs = self.polys.expr()
        diff = lhs - rhs
        if diff.is_zero():
            raise ParseError(f"atom compares identical polynomials in {s.text!r}")
        return Atom(diff, rel)


def parse_formula(text: str) -> Formula:
    return FormulaParser(text).parse()
