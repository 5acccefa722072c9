# -*- coding: utf-8 -*-
"""
Catalog Expression Parser
=========================
Grammar (whitespace insignificant, `+` left-associative):

    expr  := term ( "+" term )*
    term  := "A(" int "|" int ")"
           | "H(" int "," int ")"
           | "Hodd(" int ")"
           | "F2(" int "," int ";" int "|" int [ ";" "seed=" int ] ")"

F2 terms without an explicit seed use the configured supertensor.seed.
"""

import logging

from pyparsing import (
    Keyword,
    Optional,
    ParseBaseException,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
)

from ..config import get_param
from ..exceptions import ParseError, SuperTensorError
from ..models.catalog_key import CatalogKey
from ..models.graded import GradedDim

_logger = logging.getLogger(__name__)


def _grammar():
    integer = Word(nums).setParseAction(lambda t: int(t[0]))
    LP, RP, COMMA, BAR, SEMI, EQ = map(Suppress, "(),|;=")

    abelian = Keyword("A") + LP + integer + BAR + integer + RP
    heisenberg = Keyword("H") + LP + integer + COMMA + integer + RP
    heisenberg_odd = Keyword("Hodd") + LP + integer + RP
    seed = Optional(SEMI + Suppress(Keyword("seed")) + EQ + integer)
    free = Keyword("F2") + LP + integer + COMMA + integer + SEMI + integer + BAR + integer + seed + RP

    for element in (abelian, heisenberg, heisenberg_odd, free):
        element.setParseAction(lambda t: [tuple(t)])
    term = heisenberg_odd | free | abelian | heisenberg
    return term + ZeroOrMore(Suppress("+") + term) + StringEnd()


_GRAMMAR = _grammar()


def _to_key(term, default_seed):
    head, *args = term
    if head == "A":
        return CatalogKey.abelian(*args)
    if head == "H":
        return CatalogKey.heisenberg_even(*args)
    if head == "Hodd":
        return CatalogKey.heisenberg_odd(*args)
    p, q, r, s = args[:4]
    seed = args[4] if len(args) > 4 else default_seed
    return CatalogKey.free_quotient(p, q, GradedDim(r, s), seed)


def parse_expression(text, default_seed=None):
    """Catalog expression → CatalogKey."""
    if default_seed is None:
        default_seed = int(get_param("supertensor.seed"))
    try:
        terms = _GRAMMAR.parseString(text, parseAll=True)
    except ParseBaseException as e:
        raise ParseError(f"Cannot parse algebra expression {text!r}: {e}") from e
    try:
        keys = [_to_key(t, default_seed) for t in terms]
    except SuperTensorError as e:
        raise ParseError(f"Invalid algebra expression {text!r}: {e}") from e
    key = keys[0]
    for nxt in keys[1:]:
        key = CatalogKey.sum(key, nxt)
    _logger.debug(f"Parsed {text!r} as {key}")
    return key
