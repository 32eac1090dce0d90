"""Text grammar for group recipes.

    spec := atom ("x" atom)*
    atom := "C" int | "D" int | "SD(" k "," l ";" t ")"
          | "SDZ2(" n ";" s ")" | "Hol(" spec ")" | "A4"

Whitespace-insensitive.  Product chains are canonically left-associated,
and ``canonical_text`` of a parsed spec parses back to an identical spec.
Syntax errors carry position and expected-token information; parameter
problems (e.g. a twist that is not a unit) raise SpecSemanticError
instead.
"""

from __future__ import annotations

import re

from .errors import SpecSyntaxError
from .factory import (
    Alternating4,
    Cyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    Holomorph,
    SemidirectCC,
    SemidirectZ2,
    validate_spec,
)

_TOKEN_RE = re.compile(r"(SDZ2|SD|Hol|A4|C|D|x|\(|\)|,|;|\d+)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise SpecSyntaxError(f"unrecognized input {text[pos]!r}", pos)
        tokens.append((m.group(1), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return (None, len(self.text))

    def _advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _expect(self, kind: str):
        tok, pos = self._peek()
        if tok != kind:
            raise SpecSyntaxError(
                f"found {tok!r}" if tok else "unexpected end of input",
                pos,
                expected=repr(kind),
            )
        self._advance()

    def _int(self) -> int:
        tok, pos = self._peek()
        if tok is None or not tok.isdigit():
            raise SpecSyntaxError(
                f"found {tok!r}" if tok else "unexpected end of input",
                pos,
                expected="integer",
            )
        self._advance()
        return int(tok)

    def parse(self) -> GroupSpec:
        spec = self._product()
        tok, pos = self._peek()
        if tok is not None:
            raise SpecSyntaxError(f"trailing input {tok!r}", pos, expected="end of input")
        return spec

    def _product(self) -> GroupSpec:
        spec = self._atom()
        while True:
            tok, _ = self._peek()
            if tok != "x":
                return spec
            self._advance()
            spec = DirectProduct(spec, self._atom())

    def _atom(self) -> GroupSpec:
        tok, pos = self._peek()
        if tok == "C":
            self._advance()
            return Cyclic(self._int())
        if tok == "D":
            self._advance()
            return Dihedral(self._int())
        if tok == "SD":
            self._advance()
            self._expect("(")
            k = self._int()
            self._expect(",")
            l = self._int()
            self._expect(";")
            t = self._int()
            self._expect(")")
            return SemidirectCC(k, l, t)
        if tok == "SDZ2":
            self._advance()
            self._expect("(")
            n = self._int()
            self._expect(";")
            s = self._int()
            self._expect(")")
            return SemidirectZ2(n, s)
        if tok == "Hol":
            self._advance()
            self._expect("(")
            inner = self._product()
            self._expect(")")
            return Holomorph(inner)
        if tok == "A4":
            self._advance()
            return Alternating4()
        raise SpecSyntaxError(
            f"found {tok!r}" if tok else "unexpected end of input",
            pos,
            expected="one of C, D, SD, SDZ2, Hol, A4",
        )


def parse_group_spec(text: str) -> GroupSpec:
    """Parse and semantically validate a group recipe."""
    spec = _Parser(text).parse()
    validate_spec(spec)
    return spec


def canonical_text(spec: GroupSpec) -> str:
    return spec.text()
