"""Inference rule metadata.

Rule identity is the `rule_id` string; the forgetting rule is parametric
in the eliminated name and renders as e.g. ``Forget(B)``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Rule:
    rule_id: str
    display_name: str
    description: str
    schematic_premises: tuple
    schematic_conclusion: str

    def __repr__(self):
        return f"Rule({self.rule_id})"


ASSERTED = Rule(
    "Asserted", "Asserted axiom",
    "The axiom is stated in the ontology.",
    (), "α ∈ O")

KNOWN = Rule(
    "Known", "Known axiom",
    "The axiom uses only terms from the known signature and needs no proof.",
    (), "α with sig(α) ⊆ Σ")

REFLEXIVITY = Rule(
    "R0-Refl", "Reflexivity",
    "Every concept is subsumed by itself.",
    (), "C ⊑ C")

TOP_SUPERCLASS = Rule(
    "R-Top", "Top superclass",
    "Every concept is subsumed by the top concept.",
    (), "C ⊑ ⊤")

HIERARCHY = Rule(
    "R-Hier", "Told inclusion",
    "Compose a derived inclusion with a stated inclusion on its right side.",
    ("C ⊑ D", "D ⊑ E"), "C ⊑ E")

AND_MINUS = Rule(
    "R-AndMinus", "Conjunction decomposition",
    "A conjunction subsumer yields each of its conjuncts.",
    ("C ⊑ D₁ ⊓ … ⊓ Dₙ",), "C ⊑ Dᵢ")

AND_PLUS = Rule(
    "R-AndPlus", "Conjunction composition",
    "Subsumption by every conjunct yields subsumption by the conjunction.",
    ("C ⊑ D₁", "…", "C ⊑ Dₙ"),
    "C ⊑ D₁ ⊓ … ⊓ Dₙ")

EXISTS_PROP = Rule(
    "R-Exists", "Existential propagation",
    "Propagate a filler inclusion through an existential restriction and a "
    "stated inclusion whose left side is an existential over a super-role.",
    ("C ⊑ ∃r.D", "D ⊑ E", "∃s.E ⊑ F", "r ⊑* s"),
    "C ⊑ F")

EXISTS_INTRO = Rule(
    "R-ExistsIntro", "Existential monotonicity",
    "Weaken an existential restriction to a super-role and a filler "
    "superconcept.",
    ("C ⊑ ∃r.D", "D ⊑ E", "r ⊑* s"),
    "C ⊑ ∃s.E")

ROLE_HIER = Rule(
    "R-RoleHier", "Role hierarchy",
    "Role inclusions compose transitively.",
    ("r ⊑ s", "s ⊑ t"), "r ⊑ t")

BOTTOM_EXISTS = Rule(
    "R-BotExists", "Unsatisfiable filler",
    "An existential restriction over an unsatisfiable filler is itself "
    "unsatisfiable.",
    ("C ⊑ ∃r.D", "D ⊑ ⊥"), "C ⊑ ⊥")

BOTTOM_SUBCLASS = Rule(
    "R-Bot", "Unsatisfiable subclass",
    "An unsatisfiable concept is subsumed by every concept.",
    ("C ⊑ ⊥",), "C ⊑ D")

FORGET_FINAL_ID = "Forget"


def forget_rule(name=None) -> Rule:
    """Inference step of a forgetting-based proof.

    `name` is the eliminated predicate name; None marks the final step that
    derives the goal from axioms over the remaining vocabulary.
    """
    if name is None:
        return Rule(
            FORGET_FINAL_ID, "Consequence",
            "The conclusion follows from the premises over the remaining "
            "vocabulary.",
            ("α₁", "…", "αₙ"), "goal")
    return Rule(
        f"Forget({name})", f"Forget {name}",
        f"The conclusion follows from the premises by inferences on "
        f"{name}; it no longer mentions {name}.",
        ("α₁", "…", "αₙ"),
        f"β ∈ premises^(-{name})")


_FIXED = {r.rule_id: r for r in (
    ASSERTED, KNOWN, REFLEXIVITY, TOP_SUPERCLASS, HIERARCHY, AND_MINUS,
    AND_PLUS, EXISTS_PROP, EXISTS_INTRO, ROLE_HIER, BOTTOM_EXISTS,
    BOTTOM_SUBCLASS,
)}


def rule_by_id(rule_id: str):
    """Look up a rule card; understands parametric Forget(...) ids."""
    if rule_id in _FIXED:
        return _FIXED[rule_id]
    if rule_id == FORGET_FINAL_ID:
        return forget_rule(None)
    if rule_id.startswith("Forget(") and rule_id.endswith(")"):
        return forget_rule(rule_id[len("Forget("):-1])
    return None


def all_rules():
    return dict(_FIXED)
