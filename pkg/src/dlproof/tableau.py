"""Tableau-based entailment decisions for ALCH.

Entailment is decided by refutation: O entails C subsumed-by D iff
C and-not D is unsatisfiable with respect to the TBox. The tableau works
on negation normal form. Axioms whose left side is a concept name or a
conjunction of names are absorbed and fire lazily once the names sit in a
node label; every other axiom is internalized as a disjunctive constraint
present in every node label. Disjunctions branch semantically (picking
the most constrained one first) with chronological backtracking and unit
propagation, value restrictions propagate along the told role hierarchy,
and anywhere-older subset blocking guarantees termination without inverse
roles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceExhaustedError
from .syntax import (
    And, Atomic, Axiom, BOTTOM, Bottom, ConceptInclusion, Exists, Forall,
    Not, Ontology, Or, RoleInclusion, TOP, Top, disj, negate, nnf,
    role_closure, simplify_concept,
)


@dataclass(frozen=True)
class TableauConfig:
    max_nodes: int = 100_000

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")


DEFAULT_CONFIG = TableauConfig()


class _Deadline:
    """Optional cooperative deadline shared with callers (e.g. forgetting)."""

    def check(self):
        pass


_NO_DEADLINE = _Deadline()


def entails(o: Ontology, goal: Axiom, cfg: TableauConfig = DEFAULT_CONFIG,
            deadline=_NO_DEADLINE) -> bool:
    """True iff o entails the goal axiom."""
    if isinstance(goal, RoleInclusion):
        closure = role_closure(o)
        if goal.sup in closure.get(goal.sub, {goal.sub}):
            return True
        # an inconsistent ontology entails every axiom
        return not _satisfiable([TOP], o, cfg, deadline)
    if isinstance(goal, ConceptInclusion):
        seed = [nnf(goal.lhs), negate(goal.rhs)]
        return not _satisfiable(seed, o, cfg, deadline)
    raise TypeError(f"not an axiom: {goal!r}")


def is_consistent(o: Ontology, cfg: TableauConfig = DEFAULT_CONFIG) -> bool:
    return _satisfiable([TOP], o, cfg, _NO_DEADLINE)


def concept_satisfiable(concept, o: Ontology,
                        cfg: TableauConfig = DEFAULT_CONFIG,
                        deadline=_NO_DEADLINE) -> bool:
    return _satisfiable([nnf(concept)], o, cfg, deadline)


def _absorbable(lhs):
    """Name set for left sides that fire exactly from label membership."""
    if isinstance(lhs, Atomic):
        return (lhs,)
    if isinstance(lhs, And) and all(isinstance(a, Atomic) for a in lhs.args):
        return lhs.args
    return None


class _State:
    __slots__ = ("labels", "edges", "parent", "done_exists")

    def __init__(self, labels, edges, parent, done_exists):
        self.labels = labels          # node -> set of NNF concepts
        self.edges = edges            # list of (src, role, dst)
        self.parent = parent
        self.done_exists = done_exists

    def copy(self):
        return _State({k: set(v) for k, v in self.labels.items()},
                      list(self.edges), dict(self.parent),
                      {k: set(v) for k, v in self.done_exists.items()})


class _Tableau:
    def __init__(self, o, cfg, deadline):
        self.cfg = cfg
        self.deadline = deadline
        self.closure = role_closure(o)
        self.created = 0
        self.absorbed = []        # (needed name tuple, nnf rhs)
        self.constraints = []     # internalized disjunctions
        for a in o:
            if not isinstance(a, ConceptInclusion):
                continue
            lhs = simplify_concept(nnf(a.lhs))
            rhs = simplify_concept(nnf(a.rhs))
            if isinstance(rhs, Top) or isinstance(lhs, Bottom):
                continue
            needed = _absorbable(lhs)
            if needed is not None:
                self.absorbed.append((needed, rhs))
                continue
            constraint = _simplify_disjunction(
                simplify_concept(disj([negate(lhs), rhs])))
            if constraint is not None:
                self.constraints.append(constraint)

    def run(self, root_concepts) -> bool:
        state = _State({}, [], {}, {})
        self.fresh_node(state, root_concepts, parent=None)
        return self.expand(state)

    def fresh_node(self, state, concepts, parent):
        self.created += 1
        if self.created > self.cfg.max_nodes:
            raise ResourceExhaustedError(
                f"tableau exceeded {self.cfg.max_nodes} nodes")
        node = self.created
        label = set(concepts)
        label.update(self.constraints)
        state.labels[node] = label
        state.parent[node] = parent
        state.done_exists[node] = set()
        return node

    def expand(self, state) -> bool:
        self.deadline.check()
        while True:
            if not self.propagate(state):
                return False
            if self.apply_exists(state):
                continue
            branch = self.pick_disjunction(state)
            if branch is None:
                return True
            node, disjunction, open_args = branch
            if not open_args:
                return False  # every disjunct contradicted
            # the disjunction stays in the label so subset blocking is
            # unaffected; the satisfied-check skips it from now on
            if len(open_args) == 1:
                state.labels[node].add(open_args[0])
                continue
            first = open_args[0]
            rest = open_args[1:]
            left = state.copy()
            left.labels[node].add(first)
            if self.expand(left):
                return True
            self.deadline.check()
            state.labels[node].add(negate(first))
            state.labels[node].add(
                rest[0] if len(rest) == 1
                else Or(tuple(sorted(rest, key=lambda x: x.key()))))

    def propagate(self, state) -> bool:
        """Non-branching rules to fixpoint; False on clash."""
        changed = True
        while changed:
            changed = False
            for node, label in state.labels.items():
                adds = []
                for c in label:
                    if isinstance(c, And):
                        adds.extend(a for a in c.args if a not in label)
                for (needed, rhs) in self.absorbed:
                    if rhs not in label and all(n in label for n in needed):
                        adds.append(rhs)
                if adds:
                    label.update(adds)
                    changed = True
            for (src, role, dst) in state.edges:
                sups = self.closure.get(role, {role})
                dst_label = state.labels[dst]
                adds = [c.filler for c in state.labels[src]
                        if isinstance(c, Forall) and c.role in sups
                        and c.filler not in dst_label]
                if adds:
                    dst_label.update(adds)
                    changed = True
        for label in state.labels.values():
            if BOTTOM in label:
                return False
            for c in label:
                if isinstance(c, Not) and c.inner in label:
                    return False
        return True

    def pick_disjunction(self, state):
        best = None
        for node in sorted(state.labels):
            if self.blocked(state, node):
                # satisfied at the blocker, whose label is a superset
                continue
            label = state.labels[node]
            for c in sorted((x for x in label if isinstance(x, Or)),
                            key=lambda x: x.key()):
                if any(a in label for a in c.args):
                    continue
                open_args = [a for a in sorted(c.args, key=_branch_order)
                             if negate(a) not in label]
                key = (len(open_args), node, c.key())
                if best is None or key < best[0]:
                    best = (key, node, c, open_args)
                    if len(open_args) <= 1:
                        return best[1], best[2], best[3]
        if best is None:
            return None
        return best[1], best[2], best[3]

    def apply_exists(self, state) -> bool:
        made = False
        for node in sorted(state.labels):
            if self.blocked(state, node):
                continue
            label = state.labels[node]
            pending = sorted((c for c in label if isinstance(c, Exists)
                              and c not in state.done_exists[node]),
                             key=lambda c: c.key())
            for ex in pending:
                state.done_exists[node].add(ex)
                concepts = [ex.filler]
                sups = self.closure.get(ex.role, {ex.role})
                for c in label:
                    if isinstance(c, Forall) and c.role in sups:
                        concepts.append(c.filler)
                child = self.fresh_node(state, concepts, parent=node)
                state.edges.append((node, ex.role, child))
                made = True
        return made

    def blocked(self, state, node) -> bool:
        # anywhere-older subset blocking; sound without inverse roles, the
        # id order breaks mutual-blocking cycles
        label = state.labels[node]
        for other in state.labels:
            if other < node and label <= state.labels[other]:
                return True
        return False


def _branch_order(c):
    """Try non-generative disjuncts first; existentials spawn nodes."""
    if isinstance(c, Exists):
        rank = 3
    elif isinstance(c, (And, Or)):
        rank = 2
    elif isinstance(c, Forall):
        rank = 0
    else:
        rank = 1
    return (rank, c.key())


def _satisfiable(seed_concepts, o, cfg, deadline) -> bool:
    tableau = _Tableau(o, cfg, deadline)
    return tableau.run(seed_concepts)


def _simplify_disjunction(c):
    """Drop bottom disjuncts; None for (syntactically) tautological constraints."""
    if isinstance(c, Top):
        return None
    if not isinstance(c, Or):
        return c
    args = [a for a in c.args if not isinstance(a, Bottom)]
    if any(isinstance(a, Top) for a in args):
        return None
    pos = {a for a in args if not isinstance(a, Not)}
    if any(isinstance(a, Not) and a.inner in pos for a in args):
        return None
    if not args:
        return BOTTOM
    return disj(args)
