"""ALCH tableau: fixed examples, agreement with saturation, countermodels."""

from random import Random

import pytest

from dlproof.elh import entailed_atomic_cis
from dlproof.errors import ResourceExhaustedError
from dlproof.parsing import parse_axiom, parse_ontology
from dlproof.syntax import Atomic, ConceptInclusion, Ontology, signature_of
from dlproof.tableau import TableauConfig, entails, is_consistent

from gen import rand_alch_ontology, rand_elh_ontology
from oracles import find_countermodel


def test_transitivity():
    o = parse_ontology("SubClassOf(A B)\nSubClassOf(B C)")
    assert entails(o, parse_axiom("SubClassOf(A C)"))
    assert not entails(o, parse_axiom("SubClassOf(C A)"))


def test_clash_under_role_fixture():
    o = parse_ontology(
        "SubClassOf(C ObjectSomeValuesFrom(r D))\n"
        "SubClassOf(C ObjectAllValuesFrom(r ObjectComplementOf(D)))")
    assert entails(o, parse_axiom("SubClassOf(C owl:Nothing)"))


def test_disjunction_not_entailed():
    o = parse_ontology("SubClassOf(A ObjectUnionOf(B C))")
    goal = parse_axiom("SubClassOf(A B)")
    assert not entails(o, goal)
    # explicit countermodel: an A-instance satisfying C but not B
    model = find_countermodel(o, goal, max_size=2)
    assert model is not None


def test_disjunction_cases_entailed():
    o = parse_ontology(
        "SubClassOf(A ObjectUnionOf(B C))\nSubClassOf(B D)\nSubClassOf(C D)")
    assert entails(o, parse_axiom("SubClassOf(A D)"))


def test_role_inclusion_goals():
    o = parse_ontology("SubObjectPropertyOf(r s)\nSubObjectPropertyOf(s t)")
    assert entails(o, parse_axiom("SubObjectPropertyOf(r t)"))
    assert entails(o, parse_axiom("SubObjectPropertyOf(r r)"))
    assert not entails(o, parse_axiom("SubObjectPropertyOf(t r)"))
    # inconsistent ontologies entail every role inclusion
    o2 = parse_ontology("SubClassOf(owl:Thing owl:Nothing)")
    assert entails(o2, parse_axiom("SubObjectPropertyOf(r s)"))


def test_forall_propagation_with_hierarchy():
    o = parse_ontology(
        "SubObjectPropertyOf(r s)\n"
        "SubClassOf(A ObjectSomeValuesFrom(r B))\n"
        "SubClassOf(A ObjectAllValuesFrom(s C))")
    assert entails(o, parse_axiom(
        "SubClassOf(A ObjectSomeValuesFrom(r ObjectIntersectionOf(B C)))"))


def test_consistency():
    assert is_consistent(parse_ontology("SubClassOf(A B)"))
    assert not is_consistent(parse_ontology("SubClassOf(owl:Thing owl:Nothing)"))
    assert not is_consistent(parse_ontology(
        "SubClassOf(owl:Thing ObjectSomeValuesFrom(r A))\nSubClassOf(A owl:Nothing)"))


def test_blocking_terminates_cycles():
    # B forces an r-successor chain of B's; blocking must end the expansion
    o = parse_ontology("SubClassOf(B ObjectSomeValuesFrom(r B))")
    assert not entails(o, parse_axiom("SubClassOf(B owl:Nothing)"))
    assert is_consistent(o)


def test_resource_exhausted_is_distinct():
    o = parse_ontology(
        "SubClassOf(A ObjectSomeValuesFrom(r A))\n"
        "SubClassOf(A ObjectSomeValuesFrom(s A))")
    with pytest.raises(ResourceExhaustedError):
        entails(o, parse_axiom("SubClassOf(A B)"), TableauConfig(max_nodes=1))


@pytest.mark.parametrize("seed", range(40))
def test_agreement_with_saturation_on_elh(seed):
    rng = Random(seed)
    o = rand_elh_ontology(rng, n_axioms=rng.randint(1, 15),
                          allow_bottom=(seed % 5 == 0))
    names = sorted(signature_of(o).concept_names)
    derived = entailed_atomic_cis(o)
    for a in names[:4]:
        for b in names[:4]:
            if a == b:
                continue
            goal = ConceptInclusion(Atomic(a), Atomic(b))
            assert entails(o, goal) == (goal in derived), goal.key()


@pytest.mark.parametrize("seed", range(20))
def test_monotone_under_extension(seed):
    rng = Random(300 + seed)
    o = rand_alch_ontology(rng, n_axioms=rng.randint(1, 8))
    extra = rand_alch_ontology(rng, n_axioms=3)
    names = sorted(signature_of(o).concept_names)
    if len(names) < 2:
        return
    goal = ConceptInclusion(Atomic(names[0]), Atomic(names[1]))
    if entails(o, goal):
        merged = Ontology(list(o.axioms) +
                          [a for a in extra.axioms if a not in o],
                          name="merged")
        assert entails(merged, goal)


@pytest.mark.parametrize("seed", range(12))
def test_non_entailments_have_countermodels(seed):
    rng = Random(7000 + seed)
    names = [Atomic("A").name, Atomic("B").name, Atomic("C").name]
    from dlproof.syntax import ConceptName, RoleName
    o = rand_alch_ontology(rng, n_axioms=rng.randint(1, 4),
                           names=[ConceptName(c) for c in "ABC"],
                           roles=[RoleName("r")])
    goal = ConceptInclusion(Atomic("A"), Atomic("B"))
    verdict = entails(o, goal)
    model = find_countermodel(o, goal, max_size=2)
    if model is not None:
        assert not verdict, "tableau claims entailment but a countermodel exists"
