"""Grammar acceptance, error positions, signature files."""

import pytest

from dlproof.errors import DuplicateAxiomError, ParseError
from dlproof.parsing import parse_axiom, parse_ontology, parse_signature
from dlproof.syntax import (
    And, Atomic, ConceptInclusion, RoleInclusion, render_axiom,
)


def test_single_production():
    o = parse_ontology("SubClassOf(A B)")
    assert len(o) == 1
    a = o.axioms[0]
    assert isinstance(a, ConceptInclusion)
    assert a.lhs == Atomic("A") and a.rhs == Atomic("B")


def test_intersection_sorted_canonically():
    o = parse_ontology("SubClassOf(A ObjectIntersectionOf(C B))")
    rhs = o.axioms[0].rhs
    assert isinstance(rhs, And)
    assert [x.name for x in rhs.args] == ["B", "C"]


def test_unbalanced_input_position():
    with pytest.raises(ParseError) as err:
        parse_ontology("SubClassOf(A")
    assert err.value.line == 1
    assert err.value.col == 13
    assert "ConceptExpr" in err.value.expected
    assert "')'" in err.value.expected


def test_error_positions_multiline():
    text = "SubClassOf(A B)\n# a comment\nSubClassOf(C ObjectSomeValuesFrom(r)\n"
    with pytest.raises(ParseError) as err:
        parse_ontology(text)
    assert err.value.line == 3


def test_wrong_arity_reported():
    with pytest.raises(ParseError) as err:
        parse_ontology("SubClassOf(A B C)")
    assert "exactly 2" in err.value.message


def test_duplicate_axiom_rejected():
    with pytest.raises(DuplicateAxiomError):
        parse_ontology("SubClassOf(A B)\nSubClassOf(A B)")


def test_comments_and_whitespace():
    text = """
    # chain ontology
    SubClassOf( A   B )  # trailing note
      SubClassOf(B
        C)
    SubObjectPropertyOf(r s)
    """
    o = parse_ontology(text)
    assert len(o) == 3
    assert isinstance(o.axioms[2], RoleInclusion)


def test_top_bottom_keywords():
    o = parse_ontology("SubClassOf(owl:Thing A)\nSubClassOf(B owl:Nothing)")
    assert render_axiom(o.axioms[0], "pretty") == "⊤ ⊑ A"
    assert render_axiom(o.axioms[1], "pretty") == "B ⊑ ⊥"


def test_all_constructors_parse():
    text = ("SubClassOf(A ObjectUnionOf(B ObjectComplementOf(C)))\n"
            "SubClassOf(ObjectAllValuesFrom(r D) ObjectSomeValuesFrom(s owl:Thing))")
    o = parse_ontology(text)
    assert len(o) == 2


def test_invalid_tokens():
    with pytest.raises(ParseError):
        parse_ontology("SubClassOf(A; B)")
    with pytest.raises(ParseError):
        parse_ontology("Equivalent(A B)")
    with pytest.raises(ParseError):
        parse_axiom("SubClassOf(A B) SubClassOf(B C)")


def test_signature_file():
    s = parse_signature("concept:A\nrole:r\n# comment\n\nconcept:B\n")
    assert s.concept_names == frozenset({"A", "B"})
    assert s.role_names == frozenset({"r"})
    with pytest.raises(ParseError) as err:
        parse_signature("A\n")
    assert err.value.line == 1
