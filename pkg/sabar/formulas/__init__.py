"""Quantifier-free formulas, univariate realizations and closed forms."""

from sabar.formulas.ast import (
    FALSE,
    TRUE,
    And,
    Atom,
    ClosedFormula,
    Formula,
    Not,
    Or,
    Relation,
    evaluate,
    format_formula,
    to_dnf,
)
from sabar.formulas.closure import make_closed, weaken
from sabar.formulas.parser import parse_formula
from sabar.formulas.realization import (
    Interval,
    Point,
    SignCondition,
    UnivariateRealization,
    WeakSignCondition,
    realizable_sign_conditions,
    realize_univariate,
)

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Atom",
    "ClosedFormula",
    "Formula",
    "Interval",
    "Not",
    "Or",
    "Point",
    "Relation",
    "SignCondition",
    "UnivariateRealization",
    "WeakSignCondition",
    "evaluate",
    "format_formula",
    "make_closed",
    "parse_formula",
    "realizable_sign_conditions",
    "realize_univariate",
    "to_dnf",
    "weaken",
]
