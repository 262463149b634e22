"""Justification extraction: validity, minimality, determinism."""

from random import Random

import pytest

from dlproof.errors import NotEntailedError
from dlproof.justify import one_justification
from dlproof.parsing import parse_axiom, parse_ontology
from dlproof.syntax import Atomic, ConceptInclusion, Ontology, signature_of
from dlproof.tableau import entails

from gen import rand_elh_ontology
from oracles import all_minimal_justifications


def test_direct_axiom_survives_deletion_order():
    o = parse_ontology(
        "SubClassOf(A B)\nSubClassOf(B C)\nSubClassOf(A C)\nSubClassOf(D E)")
    goal = parse_axiom("SubClassOf(A C)")
    j = one_justification(o, goal)
    assert list(j.axioms) == [parse_axiom("SubClassOf(A C)")]
    # the oracle confirms {A⊑C} is among the minimal justifications
    minimal = all_minimal_justifications(o, goal, entails)
    assert (parse_axiom("SubClassOf(A C)"),) in [tuple(m) for m in minimal]


def test_singleton():
    o = parse_ontology("SubClassOf(A B)")
    j = one_justification(o, parse_axiom("SubClassOf(A B)"))
    assert list(j.axioms) == list(o.axioms)


def test_both_axioms_necessary():
    o = parse_ontology("SubClassOf(A B)\nSubClassOf(B C)")
    j = one_justification(o, parse_axiom("SubClassOf(A C)"))
    assert set(j.axioms) == set(o.axioms)


def test_not_entailed_raises():
    o = parse_ontology("SubClassOf(A B)")
    with pytest.raises(NotEntailedError):
        one_justification(o, parse_axiom("SubClassOf(B A)"))


@pytest.mark.parametrize("seed", range(25))
def test_minimality_validity_determinism(seed):
    rng = Random(40 + seed)
    o = rand_elh_ontology(rng, n_axioms=rng.randint(2, 10))
    names = sorted(signature_of(o).concept_names)
    goals = []
    for a in names[:4]:
        for b in names[:4]:
            if a != b:
                goal = ConceptInclusion(Atomic(a), Atomic(b))
                if entails(o, goal):
                    goals.append(goal)
    for goal in goals[:3]:
        j1 = one_justification(o, goal)
        j2 = one_justification(o, goal)
        assert j1.axioms == j2.axioms  # determinism
        sub = Ontology(j1.axioms, name="j")
        assert entails(sub, goal)      # validity
        for axiom in j1.axioms:        # subset-minimality
            assert not entails(sub.without(axiom), goal)


@pytest.mark.parametrize("seed", range(8))
def test_result_is_a_minimal_justification_per_oracle(seed):
    rng = Random(90 + seed)
    o = rand_elh_ontology(rng, n_axioms=rng.randint(2, 6))
    names = sorted(signature_of(o).concept_names)
    for a in names[:3]:
        for b in names[:3]:
            if a == b:
                continue
            goal = ConceptInclusion(Atomic(a), Atomic(b))
            if not entails(o, goal):
                continue
            j = one_justification(o, goal)
            minimal = [frozenset(m)
                       for m in all_minimal_justifications(o, goal, entails)]
            assert frozenset(j.axioms) in minimal
            return
