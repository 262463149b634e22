"""Hand-built ALCH proof tasks: ontology text plus an entailed atomic goal.

Spread across the reasoning styles the workbench must handle: told chains,
conjunction composition and decomposition, disjunctive case splits,
value-restriction propagation (with and without role hierarchies),
unsatisfiable subconcepts, double negation, and noise axioms.
"""

from dlproof.parsing import parse_axiom, parse_ontology

ALCH_TASKS = [
    ("chain2",
     "SubClassOf(A X)\nSubClassOf(X B)",
     "SubClassOf(A B)"),
    ("chain3",
     "SubClassOf(A X)\nSubClassOf(X Y)\nSubClassOf(Y B)",
     "SubClassOf(A B)"),
    ("direct",
     "SubClassOf(A B)",
     "SubClassOf(A B)"),
    ("conj-split",
     "SubClassOf(A ObjectIntersectionOf(X Y))\nSubClassOf(X B)",
     "SubClassOf(A B)"),
    ("conj-make",
     "SubClassOf(A X)\nSubClassOf(A Y)\nSubClassOf(ObjectIntersectionOf(X Y) B)",
     "SubClassOf(A B)"),
    ("disj-cases",
     "SubClassOf(A ObjectUnionOf(X Y))\nSubClassOf(X B)\nSubClassOf(Y B)",
     "SubClassOf(A B)"),
    ("contradiction",
     "SubClassOf(A X)\nSubClassOf(A ObjectComplementOf(X))",
     "SubClassOf(A B)"),
    ("exists-chain",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\nSubClassOf(ObjectSomeValuesFrom(r X) B)",
     "SubClassOf(A B)"),
    ("exists-filler",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\nSubClassOf(X Y)\n"
     "SubClassOf(ObjectSomeValuesFrom(r Y) B)",
     "SubClassOf(A B)"),
    ("forall-prop",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\nSubClassOf(A ObjectAllValuesFrom(r Y))\n"
     "SubClassOf(ObjectSomeValuesFrom(r ObjectIntersectionOf(X Y)) B)",
     "SubClassOf(A B)"),
    ("clash-under-role",
     "SubClassOf(C ObjectSomeValuesFrom(r D))\nSubClassOf(C ObjectAllValuesFrom(r ObjectComplementOf(D)))",
     "SubClassOf(C E)"),
    ("role-hier",
     "SubObjectPropertyOf(r s)\nSubClassOf(A ObjectSomeValuesFrom(r X))\n"
     "SubClassOf(ObjectSomeValuesFrom(s X) B)",
     "SubClassOf(A B)"),
    ("forall-hier",
     "SubObjectPropertyOf(r s)\nSubClassOf(A ObjectAllValuesFrom(s X))\n"
     "SubClassOf(A ObjectSomeValuesFrom(r Y))\n"
     "SubClassOf(ObjectSomeValuesFrom(r ObjectIntersectionOf(X Y)) B)",
     "SubClassOf(A B)"),
    ("univ-chain",
     "SubClassOf(A ObjectSomeValuesFrom(r owl:Thing))\nSubClassOf(A ObjectAllValuesFrom(r X))\n"
     "SubClassOf(ObjectSomeValuesFrom(r X) B)",
     "SubClassOf(A B)"),
    ("bottom-prop",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\nSubClassOf(X owl:Nothing)",
     "SubClassOf(A B)"),
    ("neg-disj",
     "SubClassOf(A ObjectUnionOf(B ObjectComplementOf(X)))\nSubClassOf(A X)",
     "SubClassOf(A B)"),
    ("double-neg",
     "SubClassOf(A ObjectComplementOf(ObjectComplementOf(X)))\nSubClassOf(X B)",
     "SubClassOf(A B)"),
    ("deep-exists",
     "SubClassOf(A ObjectSomeValuesFrom(r Y))\nSubClassOf(Y ObjectSomeValuesFrom(s X))\n"
     "SubClassOf(ObjectSomeValuesFrom(s X) Z)\nSubClassOf(ObjectSomeValuesFrom(r Z) B)",
     "SubClassOf(A B)"),
    ("conj-flat",
     "SubClassOf(A ObjectIntersectionOf(X ObjectIntersectionOf(Y Z)))\nSubClassOf(Y B)",
     "SubClassOf(A B)"),
    ("disj-direct",
     "SubClassOf(A ObjectUnionOf(X B))\nSubClassOf(X B)",
     "SubClassOf(A B)"),
    ("univ-bot",
     "SubClassOf(A ObjectAllValuesFrom(r owl:Nothing))\n"
     "SubClassOf(A ObjectSomeValuesFrom(r owl:Thing))",
     "SubClassOf(A B)"),
    ("hier-two-step",
     "SubObjectPropertyOf(r s)\nSubObjectPropertyOf(s t)\n"
     "SubClassOf(A ObjectSomeValuesFrom(r X))\nSubClassOf(ObjectSomeValuesFrom(t X) B)",
     "SubClassOf(A B)"),
    ("conj-under-exists",
     "SubClassOf(A ObjectSomeValuesFrom(r ObjectIntersectionOf(X Y)))\n"
     "SubClassOf(ObjectSomeValuesFrom(r X) B)",
     "SubClassOf(A B)"),
    ("neg-intermediate",
     "SubClassOf(A ObjectComplementOf(X))\nSubClassOf(ObjectComplementOf(X) B)",
     "SubClassOf(A B)"),
    ("disj-conj",
     "SubClassOf(A ObjectUnionOf(X ObjectIntersectionOf(Y Z)))\n"
     "SubClassOf(X B)\nSubClassOf(Y B)",
     "SubClassOf(A B)"),
    ("forall-resolve",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\n"
     "SubClassOf(A ObjectAllValuesFrom(r ObjectUnionOf(Y ObjectComplementOf(X))))\n"
     "SubClassOf(ObjectSomeValuesFrom(r Y) B)",
     "SubClassOf(A B)"),
    ("forall-exists-nest",
     "SubClassOf(A ObjectSomeValuesFrom(r X))\n"
     "SubClassOf(A ObjectAllValuesFrom(r ObjectSomeValuesFrom(s Y)))\n"
     "SubClassOf(ObjectSomeValuesFrom(r ObjectSomeValuesFrom(s Y)) B)",
     "SubClassOf(A B)"),
    ("noise",
     "SubClassOf(A B)\nSubClassOf(X Y)\nSubClassOf(Y ObjectComplementOf(Z))",
     "SubClassOf(A B)"),
    ("two-routes",
     "SubClassOf(A X)\nSubClassOf(X B)\nSubClassOf(A Y)\nSubClassOf(Y B)",
     "SubClassOf(A B)"),
    ("conj-noise",
     "SubClassOf(A ObjectIntersectionOf(X Y Z))\nSubClassOf(Z B)",
     "SubClassOf(A B)"),
    ("neg-exists",
     "SubClassOf(A ObjectComplementOf(ObjectSomeValuesFrom(r X)))\n"
     "SubClassOf(A ObjectSomeValuesFrom(r X))",
     "SubClassOf(A B)"),
    ("top-level",
     "SubClassOf(owl:Thing X)\nSubClassOf(X B)",
     "SubClassOf(A B)"),
    ("taut-noise",
     "SubClassOf(A X)\nSubClassOf(X B)\nSubClassOf(owl:Nothing Y)",
     "SubClassOf(A B)"),
    ("hier-disj",
     "SubObjectPropertyOf(r s)\nSubClassOf(A ObjectSomeValuesFrom(r ObjectUnionOf(X Y)))\n"
     "SubClassOf(X Z)\nSubClassOf(Y Z)\nSubClassOf(ObjectSomeValuesFrom(s Z) B)",
     "SubClassOf(A B)"),
]


def load_tasks():
    out = []
    for name, text, goal in ALCH_TASKS:
        out.append((name, parse_ontology(text, name=name), parse_axiom(goal)))
    return out
