"""Syntax tree, canonical form, signatures, rendering."""

import pytest
from hypothesis import given, settings, strategies as st

from dlproof.errors import DuplicateAxiomError
from dlproof.parsing import parse_axiom, parse_ontology
from dlproof.syntax import (
    And, BOTTOM, ConceptName, Fragment, Not, Ontology, RoleName, TOP, atom,
    axiom_weight, ci, conj, exists, nnf, render_axiom, render_ontology, ri,
    role_closure, signature_of,
)

from gen import rand_elh_ontology, rand_alch_ontology
from random import Random


def test_names_are_interned():
    assert ConceptName("A") is ConceptName("A")
    assert RoleName("r") is RoleName("r")
    assert ConceptName("A") == "A"


def test_name_validation():
    with pytest.raises(ValueError):
        ConceptName("not a name")
    with pytest.raises(ValueError):
        ConceptName("")
    assert ConceptName("A_b-c.d") == "A_b-c.d"


def test_conj_canonicalizes():
    c = conj([atom("C"), atom("B"), atom("C")])
    assert isinstance(c, And)
    assert [a.name for a in c.args] == ["B", "C"]
    # nested conjunction flattens
    c2 = conj([atom("A"), conj([atom("B"), atom("C")])])
    assert [a.name for a in c2.args] == ["A", "B", "C"]
    # unit collapses
    assert conj([atom("A"), atom("A")]) == atom("A")


def test_nary_invariants_enforced():
    with pytest.raises(ValueError):
        And((atom("A"),))
    with pytest.raises(ValueError):
        And((atom("B"), atom("A")))  # not sorted
    with pytest.raises(ValueError):
        And((atom("A"), And((atom("B"), atom("C")))))  # nested


def test_atomic_ci_predicate():
    assert ci(atom("A"), atom("B")).is_atomic_ci
    assert not ci(atom("A"), exists("r", atom("B"))).is_atomic_ci
    assert not ri("r", "s").is_atomic_ci


def test_ontology_rejects_duplicates():
    a = ci(atom("A"), atom("B"))
    with pytest.raises(DuplicateAxiomError):
        Ontology([a, a])
    # canonicalization makes syntactic variants collide
    t1 = parse_axiom("SubClassOf(A ObjectIntersectionOf(B C))")
    t2 = parse_axiom("SubClassOf(A ObjectIntersectionOf(C B))")
    with pytest.raises(DuplicateAxiomError):
        Ontology([t1, t2])


def test_fragment_classification():
    assert parse_ontology("SubClassOf(A B)").fragment() == Fragment.ELH
    assert parse_ontology("SubClassOf(A ObjectSomeValuesFrom(r B))").fragment() == Fragment.ELH
    assert parse_ontology("SubClassOf(A ObjectComplementOf(B))").fragment() == Fragment.ALCH
    assert parse_ontology("SubClassOf(A ObjectAllValuesFrom(r B))").fragment() == Fragment.ALCH
    assert parse_ontology("SubClassOf(A ObjectUnionOf(B C))").fragment() == Fragment.ALCH


def test_every_elh_ontology_is_alch():
    # randomized check: ELH generator output always classifies as ELH,
    # and adding an ALCH construct flips the classification
    rng = Random(7)
    for _ in range(25):
        o = rand_elh_ontology(rng, n_axioms=8)
        assert o.fragment() == Fragment.ELH
        widened = Ontology(list(o.axioms) + [ci(atom("Zq"), Not(atom("Zr")))])
        assert widened.fragment() == Fragment.ALCH


def test_signature_of():
    a = ci(atom("A"), exists("r", atom("B")))
    s = signature_of(a)
    assert s.concept_names == frozenset({"A", "B"})
    assert s.role_names == frozenset({"r"})
    assert len(signature_of(ci(TOP, TOP))) == 0
    o = Ontology([ci(atom("A"), atom("B")), ri("r", "s")])
    so = signature_of(o)
    assert so.concept_names == frozenset({"A", "B"})
    assert so.role_names == frozenset({"r", "s"})


def test_render_pretty():
    assert render_axiom(ci(atom("A"), exists("r", atom("B"))), "pretty") == "A ⊑ ∃r.B"
    assert render_axiom(ri("r", "s"), "pretty") == "r ⊑ s"
    assert render_axiom(ci(atom("A"), conj([atom("B"), atom("C")])), "pretty") == \
        "A ⊑ B ⊓ C"
    assert render_axiom(ci(BOTTOM, TOP), "pretty") == "⊥ ⊑ ⊤"


def test_render_functional_round_trip():
    a = ci(atom("A"), exists("r", atom("B")))
    assert render_axiom(a, "functional") == "SubClassOf(A ObjectSomeValuesFrom(r B))"
    assert parse_axiom(render_axiom(a, "functional")) == a


def test_axiom_weight():
    assert axiom_weight(ci(atom("A"), atom("B"))) == 3
    assert axiom_weight(ci(atom("A"), exists("r", atom("B")))) == 5
    assert axiom_weight(ri("r", "s")) == 3
    assert axiom_weight(ci(atom("A"), conj([atom("B"), atom("C")]))) == 5


def test_nnf():
    e = Not(conj([atom("A"), exists("r", atom("B"))]))
    n = nnf(e)
    # canonical argument order follows the functional serialization
    assert render_axiom(ci(atom("X"), n), "pretty") == \
        "X ⊑ ∀r.¬B ⊔ ¬A"
    assert nnf(Not(Not(atom("A")))) == atom("A")
    assert nnf(Not(TOP)) == BOTTOM


def test_role_closure():
    o = parse_ontology("SubObjectPropertyOf(r s)\nSubObjectPropertyOf(s t)\nSubClassOf(A B)")
    closure = role_closure(o)
    assert closure[RoleName("r")] == frozenset({"r", "s", "t"})
    assert closure[RoleName("s")] == frozenset({"s", "t"})
    assert closure[RoleName("t")] == frozenset({"t"})


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_parse_render_round_trip_random(seed):
    rng = Random(seed)
    o = rand_elh_ontology(rng, n_axioms=rng.randint(1, 12)) if seed % 2 == 0 \
        else rand_alch_ontology(rng, n_axioms=rng.randint(1, 12))
    text = render_ontology(o, "functional")
    assert parse_ontology(text) == o
