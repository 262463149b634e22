"""Parser for the textual ontology format.

The format is a strict subset of the OWL functional-style syntax:

    Ontology := { AxiomLine }
    AxiomLine := "SubClassOf(" C C ")" | "SubObjectPropertyOf(" Name Name ")"
    C := Name | "owl:Thing" | "owl:Nothing"
       | "ObjectIntersectionOf(" C C {C} ")" | "ObjectUnionOf(" C C {C} ")"
       | "ObjectComplementOf(" C ")"
       | "ObjectSomeValuesFrom(" Name C ")" | "ObjectAllValuesFrom(" Name C ")"

Whitespace-insensitive; `#` starts a comment running to end of line.
Errors carry 1-based line/column positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateAxiomError, ParseError
from .syntax import (
    BOTTOM, TOP, Atomic, Axiom, ConceptExpr, ConceptInclusion, ConceptName,
    Not, Ontology, RoleInclusion, RoleName, Signature, conj, disj, exists,
    forall,
)

_CONSTRUCTORS = {
    "ObjectIntersectionOf", "ObjectUnionOf", "ObjectComplementOf",
    "ObjectSomeValuesFrom", "ObjectAllValuesFrom",
    "SubClassOf", "SubObjectPropertyOf",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'name', 'lparen', 'rparen', 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "(":
            tokens.append(_Token("lparen", "(", line, col))
            i += 1
            col += 1
            continue
        if ch == ")":
            tokens.append(_Token("rparen", ")", line, col))
            i += 1
            col += 1
            continue
        if ch.isalnum() or ch == "_":
            start = i
            start_col = col
            while i < n and (text[i].isalnum() or text[i] in "_.-:"):
                i += 1
                col += 1
            tokens.append(_Token("name", text[start:i], line, start_col))
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col,
                         expected=["axiom", "name"])
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {what}, found {tok.text or 'end of input'!r}",
                tok.line, tok.col, expected=[what])
        return self.advance()

    def parse_ontology(self, name="ontology") -> Ontology:
        axioms = []
        seen = {}
        while self.peek().kind != "eof":
            tok = self.peek()
            axiom = self.parse_axiom()
            if axiom in seen:
                raise DuplicateAxiomError(axiom, tok.line, tok.col)
            seen[axiom] = True
            axioms.append(axiom)
        return Ontology(axioms, name=name)

    def parse_axiom(self) -> Axiom:
        tok = self.expect("name", "axiom")
        if tok.text == "SubClassOf":
            self.expect("lparen", "'('")
            args = self.parse_concept_list()
            if len(args) != 2:
                raise ParseError(
                    f"SubClassOf expects exactly 2 class expressions, got {len(args)}",
                    tok.line, tok.col, expected=["2 class expressions"])
            return ConceptInclusion(args[0], args[1])
        if tok.text == "SubObjectPropertyOf":
            self.expect("lparen", "'('")
            sub = self.parse_role_name()
            sup = self.parse_role_name()
            self.expect("rparen", "')'")
            return RoleInclusion(sub, sup)
        raise ParseError(
            f"expected SubClassOf or SubObjectPropertyOf, found {tok.text!r}",
            tok.line, tok.col, expected=["SubClassOf", "SubObjectPropertyOf"])

    def parse_concept_list(self):
        """Concepts up to the closing paren; length checked by the caller."""
        args = []
        while True:
            tok = self.peek()
            if tok.kind == "rparen":
                self.advance()
                return args
            if tok.kind == "eof":
                raise ParseError("unexpected end of input",
                                 tok.line, tok.col,
                                 expected=["ConceptExpr", "')'"])
            args.append(self.parse_concept())

    def parse_concept(self) -> ConceptExpr:
        tok = self.expect("name", "ConceptExpr")
        text = tok.text
        if text == "owl:Thing":
            return TOP
        if text == "owl:Nothing":
            return BOTTOM
        if text == "ObjectIntersectionOf" or text == "ObjectUnionOf":
            self.expect("lparen", "'('")
            args = self.parse_concept_list()
            if len(args) < 2:
                raise ParseError(
                    f"{text} expects at least 2 class expressions, got {len(args)}",
                    tok.line, tok.col, expected=["2 or more class expressions"])
            return conj(args) if text == "ObjectIntersectionOf" else disj(args)
        if text == "ObjectComplementOf":
            self.expect("lparen", "'('")
            inner = self.parse_concept()
            self.expect("rparen", "')'")
            return Not(inner)
        if text == "ObjectSomeValuesFrom" or text == "ObjectAllValuesFrom":
            self.expect("lparen", "'('")
            role = self.parse_role_name()
            filler = self.parse_concept()
            self.expect("rparen", "')'")
            return (exists(role, filler) if text == "ObjectSomeValuesFrom"
                    else forall(role, filler))
        if text in _CONSTRUCTORS:
            raise ParseError(f"{text} is not a class expression here",
                             tok.line, tok.col, expected=["ConceptExpr"])
        try:
            return Atomic(ConceptName(text))
        except ValueError:
            raise ParseError(f"invalid name {text!r}", tok.line, tok.col,
                             expected=["ConceptExpr"]) from None

    def parse_role_name(self) -> RoleName:
        tok = self.expect("name", "role name")
        try:
            return RoleName(tok.text)
        except ValueError:
            raise ParseError(f"invalid role name {tok.text!r}",
                             tok.line, tok.col,
                             expected=["role name"]) from None


def parse_ontology(text: str, name: str = "ontology") -> Ontology:
    """Parse ontology text into its canonical form."""
    return _Parser(text).parse_ontology(name=name)


def parse_axiom(text: str) -> Axiom:
    """Parse a single axiom; trailing input is an error."""
    parser = _Parser(text)
    axiom = parser.parse_axiom()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col,
                         expected=["end of input"])
    return axiom


def parse_signature(text: str) -> Signature:
    """Signature files: one name per line with a `concept:`/`role:` prefix."""
    concepts, roles = set(), set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("concept:"):
            concepts.add(ConceptName(line[len("concept:"):].strip()))
        elif line.startswith("role:"):
            roles.add(RoleName(line[len("role:"):].strip()))
        else:
            raise ParseError(
                "signature line needs a 'concept:' or 'role:' prefix",
                lineno, 1, expected=["concept:<name>", "role:<name>"])
    return Signature(frozenset(concepts), frozenset(roles))
