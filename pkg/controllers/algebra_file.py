# -*- coding: utf-8 -*-
"""
Algebra File Format
===================
Line-oriented UTF-8 structure-constants files:

    format_version: 1
    field: Q
    basis: x1 even
    basis: x2 even
    basis: z even
    bracket: x1 x2 = 1/1 z
    bracket: y1 y1 = 1/1 z + -1/2 x1

Unlisted brackets are zero; `#` starts a comment; even basis lines come first.
"""

import logging

from ..exceptions import InvalidAlgebra, ParseError
from ..models.graded import Parity
from ..models.superalgebra import LieSuperAlgebra
from ..services import exact_linalg as la

_logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"
FIELD = "Q"


# ── Writing ───────────────────────────────────────────────────────────────────


def dumps(L):
    lines = [f"format_version: {FORMAT_VERSION}", f"field: {FIELD}"]
    lines += [f"basis: {name} {p.label}" for name, p in zip(L.names, L.parities)]
    for i, j, terms in L.structure:
        value = " + ".join(f"{la.scalar_text(c)} {L.names[k]}" for k, c in terms)
        lines.append(f"bracket: {L.names[i]} {L.names[j]} = {value}")
    return "\n".join(lines) + "\n"


def write_algebra(L, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(L))
    _logger.info(f"Wrote algebra file {path}")


# ── Reading ───────────────────────────────────────────────────────────────────


def _split(line, lineno):
    key, sep, value = line.partition(":")
    if not sep:
        raise ParseError(f"line {lineno}: expected 'key: value', got {line!r}")
    return key.strip(), value.strip()


def _parse_terms(text, lineno):
    terms = []
    for chunk in text.split("+"):
        parts = chunk.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: bracket term must be 'coeff name', got {chunk.strip()!r}")
        terms.append((la.to_scalar(parts[0]), parts[1]))
    return terms


def loads(text):
    header = {}
    basis = []
    raw_brackets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, value = _split(line, lineno)
        if key in ("format_version", "field"):
            header[key] = value
        elif key == "basis":
            parts = value.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: basis line needs 'name parity'")
            basis.append((parts[0], Parity.from_label(parts[1])))
        elif key == "bracket":
            left_side, sep, right_side = value.partition("=")
            names = left_side.split()
            if not sep or len(names) != 2:
                raise ParseError(f"line {lineno}: bracket line needs 'left right = terms'")
            raw_brackets.append((names[0], names[1], _parse_terms(right_side, lineno), lineno))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")

    if header.get("format_version") != FORMAT_VERSION:
        raise ParseError(f"Unsupported or missing format_version (expected {FORMAT_VERSION})")
    if header.get("field", FIELD) != FIELD:
        raise ParseError(f"Only the field {FIELD} is supported, got {header['field']!r}")

    index = {}
    for pos, (name, _) in enumerate(basis):
        if name in index:
            raise ParseError(f"Duplicate basis name {name!r}")
        index[name] = pos

    def resolve(name, lineno):
        if name not in index:
            raise ParseError(f"line {lineno}: unknown basis element {name!r}")
        return index[name]

    brackets = {}
    for left, right, terms, lineno in raw_brackets:
        i, j = resolve(left, lineno), resolve(right, lineno)
        if (i, j) in brackets or (j, i) in brackets:
            raise ParseError(f"line {lineno}: bracket [{left},{right}] given twice")
        brackets[(i, j)] = {resolve(name, lineno): c for c, name in terms}
    try:
        return LieSuperAlgebra.build(basis, brackets)
    except InvalidAlgebra as e:
        raise ParseError(str(e)) from e


def read_algebra(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ParseError(f"Cannot read algebra file {path}: {e}") from e
    return loads(text)
