"""Black-box extraction of one subset-minimal justification.

A single linear deletion pass over the axioms in their stable ontology
order: an axiom is dropped whenever the remainder still entails the goal.
Candidates are scanned in ontology order, so the selection is
deterministic and the result is subset-minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import NotEntailedError
from .syntax import Axiom, Ontology
from . import tableau


EntailmentOracle = Callable[[Ontology, Axiom], bool]


def default_oracle(o: Ontology, goal: Axiom) -> bool:
    return tableau.entails(o, goal)


@dataclass(frozen=True)
class Justification:
    axioms: tuple
    goal: Axiom

    def __iter__(self):
        return iter(self.axioms)

    def __len__(self):
        return len(self.axioms)


def one_justification(o: Ontology, goal: Axiom,
                      entailer: EntailmentOracle = default_oracle) -> Justification:
    """One subset-minimal subset of o entailing the goal."""
    if not entailer(o, goal):
        raise NotEntailedError(
            f"ontology does not entail {goal.key()}")
    kept = list(o.axioms)
    for axiom in o.axioms:
        remaining = [a for a in kept if a != axiom]
        if entailer(Ontology(remaining, name=o.name), goal):
            kept = remaining
    return Justification(tuple(kept), goal)
