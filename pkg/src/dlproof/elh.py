"""Consequence-based saturation for ELH ontologies.

`saturate` closes the input under a fixed rule set over the subexpressions
of the ontology and records every rule application as a hyperedge, yielding
the full derivation structure that proof extraction searches. Inclusions
with an unsatisfiable left side are handled by two dedicated bottom rules,
so classification stays complete when the bottom concept occurs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import rules
from .errors import FragmentError
from .syntax import (
    And, Atomic, Axiom, BOTTOM, Bottom, ConceptInclusion, Exists, Fragment,
    Ontology, RoleInclusion, TOP, Top, role_closure, signature_of,
    subexpressions,
)


@dataclass(frozen=True)
class Hyperedge:
    premises: frozenset
    conclusion: Axiom
    rule: rules.Rule


@dataclass(frozen=True)
class DerivationStructure:
    vertices: frozenset
    edges: frozenset
    ontology: Ontology

    def edges_concluding(self, axiom):
        return [e for e in self.edges if e.conclusion == axiom]


def saturate(o: Ontology) -> DerivationStructure:
    """Close o under the calculus and record all inferences."""
    if o.fragment() != Fragment.ELH:
        raise FragmentError(f"saturation requires an ELH ontology, got {o.fragment().value}")

    concepts = {TOP} | {c for c in subexpressions(o)}
    closure = role_closure(o)
    told_cis = [a for a in o if isinstance(a, ConceptInclusion)]
    told_by_lhs = {}
    for a in told_cis:
        told_by_lhs.setdefault(a.lhs, []).append(a)
    # told axioms whose left side is an existential, grouped by filler
    told_exists_by_filler = {}
    for a in told_cis:
        if isinstance(a.lhs, Exists):
            told_exists_by_filler.setdefault(a.lhs.filler, []).append(a)

    edges = set()
    derived = set()           # ConceptInclusion vertices
    by_lhs = {}               # C -> set of rhs
    by_exists_rhs = {}        # filler D -> list of (lhs C, role r)
    and_members = {}          # conjunct -> list of relevant And concepts
    for c in concepts:
        if isinstance(c, And):
            for a in c.args:
                and_members.setdefault(a, []).append(c)

    # role-hierarchy vertices for every non-reflexive closure pair
    role_vertices = {}
    told_ris = [a for a in o if isinstance(a, RoleInclusion)]
    told_ri_set = {(a.sub, a.sup) for a in told_ris}
    for a in told_ris:
        role_vertices[(a.sub, a.sup)] = RoleInclusion(a.sub, a.sup)
        edges.add(Hyperedge(frozenset(), a, rules.ASSERTED))
    # derive composite role inclusions present in the closure
    changed = True
    while changed:
        changed = False
        for (r, s) in sorted(role_vertices):
            for t in sorted(closure.get(s, ())):
                if t == s or (s, t) not in told_ri_set:
                    continue
                pair = (r, t)
                if r == t or pair in role_vertices:
                    continue
                conclusion = RoleInclusion(r, t)
                role_vertices[pair] = conclusion
                edges.add(Hyperedge(
                    frozenset({role_vertices[(r, s)], RoleInclusion(s, t)}),
                    conclusion, rules.ROLE_HIER))
                changed = True

    def role_premises(r, s):
        if r == s:
            return ()
        return (role_vertices[(r, s)],)

    queue = []

    def add(conclusion, premises, rule):
        if conclusion in premises:
            return
        edge = Hyperedge(frozenset(premises), conclusion, rule)
        if edge not in edges:
            edges.add(edge)
        if conclusion not in derived:
            derived.add(conclusion)
            queue.append(conclusion)

    # seeds: asserted axioms, reflexivity and top for every relevant concept
    for a in told_cis:
        add(a, (), rules.ASSERTED)
    for c in sorted(concepts, key=lambda x: x.key()):
        add(ConceptInclusion(c, c), (), rules.REFLEXIVITY)
        add(ConceptInclusion(c, TOP), (), rules.TOP_SUPERCLASS)

    sorted_concepts = sorted(concepts, key=lambda x: x.key())

    def trigger_exists(ci_premise, c, r, d, e):
        """c ⊑ ∃r.d with filler inclusion d ⊑ e; match told ∃s.e ⊑ f."""
        for told in told_exists_by_filler.get(e, ()):
            s = told.lhs.role
            if s in closure.get(r, {r}):
                premises = [ci_premise, told]
                if e != d:
                    premises.append(ConceptInclusion(d, e))
                premises.extend(role_premises(r, s))
                add(ConceptInclusion(c, told.rhs), premises, rules.EXISTS_PROP)

    def trigger_exists_intro(ci_premise, c, r, d, e):
        """c ⊑ ∃r.d with d ⊑ e; weaken to any relevant ∃s.e with r ⊑* s."""
        for s in sorted(closure.get(r, {r})):
            if s == r and e == d:
                continue
            target = Exists(s, e)
            if target not in concepts:
                continue
            premises = [ci_premise]
            if e != d:
                premises.append(ConceptInclusion(d, e))
            premises.extend(role_premises(r, s))
            add(ConceptInclusion(c, target), premises, rules.EXISTS_INTRO)

    while queue:
        ax = queue.pop()
        c, d = ax.lhs, ax.rhs
        by_lhs.setdefault(c, set()).add(d)

        # R-Hier: compose with told inclusions whose lhs is d
        if c != d:
            for told in told_by_lhs.get(d, ()):
                add(ConceptInclusion(c, told.rhs), [ax, told], rules.HIERARCHY)

        # R-AndMinus
        if isinstance(d, And):
            for arg in d.args:
                add(ConceptInclusion(c, arg), [ax], rules.AND_MINUS)

        # R-AndPlus: d completes some relevant conjunction for c
        for whole in and_members.get(d, ()):
            have = by_lhs.get(c, ())
            if all(a in have for a in whole.args) and whole != c:
                premises = [ConceptInclusion(c, a) for a in whole.args]
                add(ConceptInclusion(c, whole), premises, rules.AND_PLUS)

        # R-Exists / R-ExistsIntro with ax as the existential premise
        if isinstance(d, Exists):
            by_exists_rhs.setdefault(d.filler, []).append((c, d.role))
            filler = d.filler
            trigger_exists(ax, c, d.role, filler, filler)
            trigger_exists_intro(ax, c, d.role, filler, filler)
            for e in by_lhs.get(filler, ()):
                if e != filler:
                    trigger_exists(ax, c, d.role, filler, e)
                    trigger_exists_intro(ax, c, d.role, filler, e)
            # R-BotExists
            if BOTTOM in by_lhs.get(filler, ()):
                add(ConceptInclusion(c, BOTTOM),
                    [ax, ConceptInclusion(filler, BOTTOM)], rules.BOTTOM_EXISTS)

        # R-Exists / R-ExistsIntro with ax as the filler inclusion premise
        if c != d:
            for (c2, r2) in by_exists_rhs.get(c, ()):
                premise = ConceptInclusion(c2, Exists(r2, c))
                trigger_exists(premise, c2, r2, c, d)
                trigger_exists_intro(premise, c2, r2, c, d)

        # R-BotExists with ax as the bottom premise
        if isinstance(d, Bottom) and c != d:
            for (c2, r2) in by_exists_rhs.get(c, ()):
                add(ConceptInclusion(c2, BOTTOM),
                    [ConceptInclusion(c2, Exists(r2, c)), ax],
                    rules.BOTTOM_EXISTS)
            # R-Bot: an unsatisfiable concept is subsumed by everything
            for e in sorted_concepts:
                if not isinstance(e, (Bottom, Top)) and e != c:
                    add(ConceptInclusion(c, e), [ax], rules.BOTTOM_SUBCLASS)

    vertices = set(derived) | set(role_vertices.values())
    return DerivationStructure(frozenset(vertices), frozenset(edges), o)


def entailed_atomic_cis(o: Ontology, include_tautologies: bool = False,
                        structure: DerivationStructure = None) -> set:
    """All entailed inclusions between concept names of o."""
    d = structure if structure is not None else saturate(o)
    names = signature_of(o).concept_names
    out = set()
    for v in d.vertices:
        if (isinstance(v, ConceptInclusion)
                and isinstance(v.lhs, Atomic) and isinstance(v.rhs, Atomic)
                and v.lhs.name in names and v.rhs.name in names):
            if v.lhs == v.rhs and not include_tautologies:
                continue
            out.add(v)
    return out
