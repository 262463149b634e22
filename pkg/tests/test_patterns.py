"""Canonical patterns: equality exactly under bijective renaming."""

from random import Random

import pytest

from dlproof.parsing import parse_axiom, parse_ontology
from dlproof.patterns import canonical_pattern
from dlproof.syntax import ConceptName, RoleName, signature_of

from gen import rand_alch_ontology, rand_elh_ontology
from oracles import renaming_exists, rename_axiom


def pattern(goal_text, ontology_text):
    o = parse_ontology(ontology_text)
    return canonical_pattern(parse_axiom(goal_text), o.axioms)


def test_renamed_copy_equal():
    p1 = pattern("SubClassOf(A B)", "SubClassOf(A B)")
    p2 = pattern("SubClassOf(X Y)", "SubClassOf(X Y)")
    assert p1 == p2


def test_different_axiom_counts_distinct():
    p1 = pattern("SubClassOf(A B)", "SubClassOf(A B)")
    p2 = pattern("SubClassOf(A C)", "SubClassOf(A B)\nSubClassOf(B C)")
    assert p1 != p2


def test_self_loop_vs_two_names_distinct():
    # {A ⊑ ∃r.A} with goal A ⊑ A versus {A ⊑ ∃r.B} with goal A ⊑ A:
    # no bijection exists (checked exhaustively by the oracle)
    g1 = parse_axiom("SubClassOf(A A)")
    o1 = parse_ontology("SubClassOf(A ObjectSomeValuesFrom(r A))")
    o2 = parse_ontology("SubClassOf(A ObjectSomeValuesFrom(r B))")
    assert not renaming_exists((g1, o1.axioms), (g1, o2.axioms))
    assert canonical_pattern(g1, o1.axioms) != canonical_pattern(g1, o2.axioms)


def test_goal_position_matters():
    # same axiom set, different goal positions: mapping the goal A⊑B onto
    # B⊑C forces A→B, B→C, and then the axiom set cannot map onto itself
    o = parse_ontology("SubClassOf(A B)\nSubClassOf(B C)")
    g1 = parse_axiom("SubClassOf(A B)")
    g2 = parse_axiom("SubClassOf(B C)")
    g3 = parse_axiom("SubClassOf(A C)")
    assert not renaming_exists((g1, o.axioms), (g2, o.axioms))
    assert pattern("SubClassOf(A B)", "SubClassOf(A B)\nSubClassOf(B C)") != \
        pattern("SubClassOf(B C)", "SubClassOf(A B)\nSubClassOf(B C)")
    assert canonical_pattern(g1, o.axioms) != canonical_pattern(g3, o.axioms)


def test_conjunction_order_irrelevant():
    p1 = pattern("SubClassOf(A D)", "SubClassOf(A ObjectIntersectionOf(B C))\nSubClassOf(B D)")
    p2 = pattern("SubClassOf(X D)", "SubClassOf(X ObjectIntersectionOf(Q P))\nSubClassOf(Q D)")
    assert p1 == p2


def _random_renaming(rng, o, goal):
    s = signature_of(o) | signature_of(goal)
    concepts = sorted(s.concept_names)
    roles = sorted(s.role_names)
    fresh_c = [f"N{i}" for i in range(len(concepts))]
    fresh_r = [f"q{i}" for i in range(len(roles))]
    rng.shuffle(fresh_c)
    rng.shuffle(fresh_r)
    cmap = dict(zip(concepts, fresh_c))
    rmap = dict(zip(roles, fresh_r))
    return cmap, rmap


@pytest.mark.parametrize("seed", range(40))
def test_invariant_under_random_renaming(seed):
    rng = Random(seed)
    o = rand_alch_ontology(rng, n_axioms=rng.randint(1, 5),
                           names=[ConceptName(c) for c in "ABCD"],
                           roles=[RoleName(r) for r in ("r", "s")])
    goals = [a for a in o if a.is_atomic_ci]
    goal = goals[0] if goals else parse_axiom("SubClassOf(A B)")
    cmap, rmap = _random_renaming(rng, o, goal)
    renamed_axioms = [rename_axiom(a, cmap, rmap) for a in o]
    renamed_goal = rename_axiom(goal, cmap, rmap)
    assert canonical_pattern(goal, o.axioms) == \
        canonical_pattern(renamed_goal, renamed_axioms)


@pytest.mark.parametrize("seed", range(25))
def test_agrees_with_exhaustive_bijection_search(seed):
    rng = Random(1000 + seed)
    names = [ConceptName(c) for c in "ABC"]
    roles = [RoleName("r")]
    o1 = rand_elh_ontology(rng, n_axioms=rng.randint(1, 3), names=names,
                           roles=roles, ri_prob=0)
    o2 = rand_elh_ontology(rng, n_axioms=rng.randint(1, 3), names=names,
                           roles=roles, ri_prob=0)
    goal = parse_axiom("SubClassOf(A B)")
    eq = canonical_pattern(goal, o1.axioms) == canonical_pattern(goal, o2.axioms)
    oracle = renaming_exists((goal, o1.axioms), (goal, o2.axioms))
    assert eq == oracle
