"""Forgetting a single predicate name from an ontology.

Concept names are eliminated by a clause-level resolution procedure in the
style of resolution-based uniform interpolation: axioms are structurally
transformed into flat clauses whose role fillers are fresh definer names,
the clause set is saturated under resolution on the target name, role
propagation (combining an existential and a value restriction over
compatible roles into an existential over a conjunction definer) and
elimination of existentials over unsatisfiable definers, then all clauses
mentioning the target are dropped and definers are translated back into
concept expressions. Definers whose back-translation is cyclic would need
a fixpoint operator, which the concept language lacks; such calls fail
with reason ``inexpressible``.

Role names are eliminated only in restricted patterns (rewriting along the
told role hierarchy); anything else fails with ``inexpressible``. Both
operations run under a cooperative deadline and report ``timeout`` when it
elapses. Failures are values, not exceptions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import tableau
from .errors import ResourceExhaustedError
from .syntax import (
    And, Atomic, BOTTOM, Bottom, ConceptInclusion, ConceptName,
    Exists, Forall, Not, Ontology, Or, RoleInclusion, RoleName, TOP, Top,
    conj, disj, negate, nnf, ontology, role_closure, signature_of,
    simplify_concept,
)

TIMEOUT = "timeout"
INEXPRESSIBLE = "inexpressible"


class DeadlineExceeded(Exception):
    pass


class Deadline(tableau._Deadline):
    """Cooperative deadline; cheap to check, never interrupts mid-step."""

    def __init__(self, budget_ms):
        self.start = time.monotonic()
        self.budget_ms = budget_ms

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.start) * 1000.0

    def check(self):
        if self.elapsed_ms() > self.budget_ms:
            raise DeadlineExceeded()


@dataclass(frozen=True)
class ForgettingResult:
    ontology: Ontology = None
    failure: str = None          # TIMEOUT or INEXPRESSIBLE
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure is None


# --- syntactic simplification ------------------------------------------------


def simplify(o: Ontology) -> Ontology:
    """Simplified, logically equivalent ontology; tautologies dropped."""
    out = []
    for a in o:
        if isinstance(a, ConceptInclusion):
            lhs = simplify_concept(a.lhs)
            rhs = simplify_concept(a.rhs)
            if isinstance(rhs, Top) or isinstance(lhs, Bottom) or lhs == rhs:
                continue
            out.append(ConceptInclusion(lhs, rhs))
        elif isinstance(a, RoleInclusion):
            if a.sub == a.sup:
                continue
            out.append(a)
    return ontology(out, name=o.name)


# --- clause representation ---------------------------------------------------
#
# Literals are tuples:
#   ('+', name) / ('-', name)   positive / negative concept-name literal
#   ('D-', key)                 negative definer literal
#   ('E', role, key)            existential restriction over a definer
#   ('A', role, key)            value restriction over a definer
# where `key` is a frozenset of base-definer ids; unions arise from role
# propagation. Clauses are frozensets of literals.


def _lit_sort_key(lit):
    if lit[0] in ("+", "-"):
        return (0, lit[0], lit[1], "")
    if lit[0] == "D-":
        return (1, "", "", tuple(sorted(lit[1])))
    return (2, lit[0], lit[1], tuple(sorted(lit[2])))


def _clause_sort_key(clause):
    return tuple(sorted(_lit_sort_key(l) for l in clause))


def _neg_keys(clause):
    return frozenset(l[1] for l in clause if l[0] == "D-")


def _is_tautology(clause):
    pos = {l[1] for l in clause if l[0] == "+"}
    return any(l[0] == "-" and l[1] in pos for l in clause)


class _ClauseSet:
    """Clause store with subsumption and definer-combination inheritance."""

    def __init__(self, deadline):
        self.clauses = set()
        self.combos = set()
        self.deadline = deadline

    def ensure_combo(self, key):
        if key in self.combos:
            return
        self.combos.add(key)
        for c in sorted(self.clauses, key=_clause_sort_key):
            self._inherit(c, key)

    def _inherit(self, clause, key):
        nk = _neg_keys(clause)
        if not nk or nk == frozenset({key}):
            return
        base = frozenset().union(*nk)
        if base <= key:
            rewritten = frozenset(l for l in clause if l[0] != "D-") | {("D-", key)}
            self.add(rewritten)

    def add(self, clause) -> bool:
        self.deadline.check()
        if _is_tautology(clause):
            return False
        if any(c <= clause for c in self.clauses):
            return False
        for c in [c for c in self.clauses if clause < c]:
            self.clauses.discard(c)
        self.clauses.add(clause)
        for key in sorted(self.combos, key=lambda k: tuple(sorted(k))):
            self._inherit(clause, key)
        return True


class _Clausifier:
    def __init__(self, store):
        self.store = store
        self.definers = {}        # filler expr -> key
        self.next_id = 0

    def definer_for(self, filler):
        key = self.definers.get(filler)
        if key is not None:
            return key
        key = frozenset({self.next_id})
        self.next_id += 1
        self.definers[filler] = key
        self.store.ensure_combo(key)
        for disjuncts in _cnf(filler):
            self.emit(disjuncts, extra=(("D-", key),))
        return key

    def add_ci(self, axiom):
        formula = disj([negate(axiom.lhs), nnf(axiom.rhs)])
        for disjuncts in _cnf(formula):
            self.emit(disjuncts)

    def emit(self, disjuncts, extra=()):
        lits = set(extra)
        for d in disjuncts:
            if isinstance(d, Top):
                return  # tautological clause
            if isinstance(d, Bottom):
                continue
            if isinstance(d, Atomic):
                lits.add(("+", d.name))
            elif isinstance(d, Not):
                lits.add(("-", d.inner.name))
            elif isinstance(d, Exists):
                lits.add(("E", d.role, self.definer_for(d.filler)))
            elif isinstance(d, Forall):
                lits.add(("A", d.role, self.definer_for(d.filler)))
            else:
                raise TypeError(f"unexpected literal concept: {d!r}")
        self.store.add(frozenset(lits))


def _cnf(e):
    """Clausal form of an NNF concept; role restrictions stay opaque."""
    if isinstance(e, And):
        out = []
        for a in e.args:
            out.extend(_cnf(a))
        return out
    if isinstance(e, Or):
        parts = [_cnf(a) for a in e.args]
        out = [[]]
        for clauses in parts:
            out = [merged + c for merged in out for c in clauses]
        return out
    return [[e]]


# --- concept-name forgetting ---------------------------------------------------


def forget_concept_name(o: Ontology, name, timeout_ms: float = 2000) -> ForgettingResult:
    x = ConceptName(name)
    deadline = Deadline(timeout_ms)
    try:
        deadline.check()
        if x not in signature_of(o).concept_names:
            return ForgettingResult(ontology=o, elapsed_ms=deadline.elapsed_ms())

        store = _ClauseSet(deadline)
        clausifier = _Clausifier(store)
        role_axioms = []
        for a in o:
            if isinstance(a, ConceptInclusion):
                clausifier.add_ci(a)
            else:
                role_axioms.append(a)

        closure = role_closure(o)
        tainted = _tainted_keys(store.clauses, x)
        _saturate_on(store, x, closure, tainted)

        kept = {c for c in store.clauses
                if not any(l[0] in ("+", "-") and l[1] == x for l in c)}
        axioms, cyclic = _translate(kept)
        if cyclic:
            return ForgettingResult(failure=INEXPRESSIBLE,
                                    elapsed_ms=deadline.elapsed_ms())
        result = simplify(ontology(axioms + role_axioms, name=o.name))
        result = _prune_redundant(result, deadline)
        return ForgettingResult(ontology=result, elapsed_ms=deadline.elapsed_ms())
    except DeadlineExceeded:
        return ForgettingResult(failure=TIMEOUT, elapsed_ms=deadline.elapsed_ms())


def _tainted_keys(clauses, x):
    """Definer keys whose constraints (transitively) mention x."""
    tainted = set()
    changed = True
    while changed:
        changed = False
        for c in clauses:
            nk = _neg_keys(c)
            if not nk:
                continue
            mentions = any(l[0] in ("+", "-") and l[1] == x for l in c) or \
                any(l[0] in ("E", "A") and l[2] in tainted for l in c)
            if mentions:
                for k in nk:
                    if k not in tainted:
                        tainted.add(k)
                        changed = True
    return tainted


def _saturate_on(store, x, closure, tainted):
    """Close the clause set under inferences on x."""
    changed = True
    while changed:
        store.deadline.check()
        changed = False
        snapshot = sorted(store.clauses, key=_clause_sort_key)

        pos = [c for c in snapshot if ("+", x) in c]
        neg = [c for c in snapshot if ("-", x) in c]
        for c1 in pos:
            for c2 in neg:
                resolvent = (c1 - {("+", x)}) | (c2 - {("-", x)})
                if store.add(resolvent):
                    changed = True

        exi = [(c, l) for c in snapshot for l in sorted(c, key=_lit_sort_key)
               if l[0] == "E"]
        uni = [(c, l) for c in snapshot for l in sorted(c, key=_lit_sort_key)
               if l[0] == "A"]
        for (c1, le) in exi:
            for (c2, la) in uni:
                if la[1] not in closure.get(le[1], {le[1]}):
                    continue
                if le[2] not in tainted and la[2] not in tainted:
                    continue
                union = le[2] | la[2]
                tainted.add(union)
                store.ensure_combo(union)
                resolvent = (c1 - {le}) | (c2 - {la}) | {("E", le[1], union)}
                if store.add(resolvent):
                    changed = True

        bottoms = {next(iter(_neg_keys(c))) for c in snapshot
                   if len(c) == 1 and next(iter(c))[0] == "D-"}
        if bottoms:
            for c in snapshot:
                for l in sorted(c, key=_lit_sort_key):
                    if l[0] == "E" and l[2] in bottoms:
                        if store.add(c - {l}):
                            changed = True


def _translate(clauses):
    """Back-translate clauses to axioms; True flag reports definer cycles."""
    tops = [c for c in clauses if not _neg_keys(c)]
    bodies = {}
    for c in clauses:
        nk = _neg_keys(c)
        if len(nk) == 1:
            bodies.setdefault(next(iter(nk)), []).append(
                frozenset(l for l in c if l[0] != "D-"))

    # reachable definers and cycle check
    reached = set()
    stack = []
    for c in tops:
        stack.extend(l[2] for l in c if l[0] in ("E", "A"))
    while stack:
        k = stack.pop()
        if k in reached:
            continue
        reached.add(k)
        for body in bodies.get(k, ()):
            stack.extend(l[2] for l in body if l[0] in ("E", "A"))

    visiting, done = set(), set()

    def cyclic(k):
        if k in done:
            return False
        if k in visiting:
            return True
        visiting.add(k)
        for body in bodies.get(k, ()):
            for l in body:
                if l[0] in ("E", "A") and cyclic(l[2]):
                    return True
        visiting.discard(k)
        done.add(k)
        return False

    if any(cyclic(k) for k in sorted(reached, key=lambda k: tuple(sorted(k)))):
        return [], True

    memo = {}

    def concept_of(k):
        if k in memo:
            return memo[k]
        parts = [_clause_concept(body, concept_of) for body in
                 sorted(bodies.get(k, []), key=_clause_sort_key)]
        memo[k] = conj(parts) if parts else TOP
        return memo[k]

    axioms = []
    for c in sorted(tops, key=_clause_sort_key):
        lhs_parts, rhs_parts = [], []
        for l in sorted(c, key=_lit_sort_key):
            if l[0] == "-":
                lhs_parts.append(Atomic(l[1]))
            elif l[0] == "+":
                rhs_parts.append(Atomic(l[1]))
            elif l[0] == "E":
                rhs_parts.append(Exists(l[1], concept_of(l[2])))
            elif l[0] == "A":
                rhs_parts.append(Forall(l[1], concept_of(l[2])))
        lhs = conj(lhs_parts) if lhs_parts else TOP
        rhs = disj(rhs_parts) if rhs_parts else BOTTOM
        axioms.append(ConceptInclusion(lhs, rhs))
    return axioms, False


def _clause_concept(body, concept_of):
    parts = []
    for l in sorted(body, key=_lit_sort_key):
        if l[0] == "+":
            parts.append(Atomic(l[1]))
        elif l[0] == "-":
            parts.append(Not(Atomic(l[1])))
        elif l[0] == "E":
            parts.append(Exists(l[1], concept_of(l[2])))
        elif l[0] == "A":
            parts.append(Forall(l[1], concept_of(l[2])))
    return disj(parts) if parts else BOTTOM


def _prune_redundant(o: Ontology, deadline) -> Ontology:
    """Drop axioms entailed by the remaining ones; deterministic scan order."""
    kept = list(o.axioms)
    for a in list(kept):
        if len(kept) == 1:
            break
        rest = Ontology([b for b in kept if b != a], name=o.name)
        try:
            if tableau.entails(rest, a, deadline=deadline):
                kept = list(rest.axioms)
        except ResourceExhaustedError:
            pass
    return Ontology(kept, name=o.name)


# --- role-name forgetting ------------------------------------------------------


def forget_role_name(o: Ontology, name, timeout_ms: float = 2000) -> ForgettingResult:
    """Eliminate a role name in the rewritable patterns.

    Existential uses are pushed to the told direct super-roles, universal
    uses to the told direct sub-roles; role inclusions through the target
    are composed. When the target carries both existential and universal
    uses itself, the successor pairing cannot be expressed without the
    role, and the call fails as inexpressible.
    """
    r = RoleName(name)
    deadline = Deadline(timeout_ms)
    try:
        deadline.check()
        if r not in signature_of(o).role_names:
            return ForgettingResult(ontology=o, elapsed_ms=deadline.elapsed_ms())
        o1 = simplify(o)
        if r not in signature_of(o1).role_names:
            return ForgettingResult(ontology=o1, elapsed_ms=deadline.elapsed_ms())

        uses = set()
        for a in o1:
            if isinstance(a, ConceptInclusion):
                _role_uses(a.lhs, r, -1, uses)
                _role_uses(a.rhs, r, +1, uses)
        if "existential" in uses and "universal" in uses:
            return ForgettingResult(failure=INEXPRESSIBLE,
                                    elapsed_ms=deadline.elapsed_ms())

        direct_subs = sorted({a.sub for a in o1 if isinstance(a, RoleInclusion)
                              and a.sup == r and a.sub != r})
        direct_sups = sorted({a.sup for a in o1 if isinstance(a, RoleInclusion)
                              and a.sub == r and a.sup != r})

        rewriter = _RoleRewriter(o1, r, direct_subs, direct_sups, deadline)
        out = []
        for a in o1:
            if isinstance(a, RoleInclusion):
                if r not in (a.sub, a.sup):
                    out.append(a)
                continue
            out.append(ConceptInclusion(rewriter.rewrite(a.lhs, -1),
                                        rewriter.rewrite(a.rhs, +1)))
        for sub in direct_subs:
            for sup in direct_sups:
                if sub != sup:
                    out.append(RoleInclusion(sub, sup))

        result = simplify(ontology(out, name=o.name))
        result = _prune_redundant(result, deadline)
        return ForgettingResult(ontology=result, elapsed_ms=deadline.elapsed_ms())
    except DeadlineExceeded:
        return ForgettingResult(failure=TIMEOUT, elapsed_ms=deadline.elapsed_ms())


def _role_uses(e, r, polarity, uses):
    """Classify occurrences of r: 'existential' demands successors, 'universal'
    constrains them (polarity-aware)."""
    if isinstance(e, Not):
        _role_uses(e.inner, r, -polarity, uses)
    elif isinstance(e, (And, Or)):
        for a in e.args:
            _role_uses(a, r, polarity, uses)
    elif isinstance(e, Exists):
        if e.role == r:
            uses.add("existential" if polarity > 0 else "universal")
        _role_uses(e.filler, r, polarity, uses)
    elif isinstance(e, Forall):
        if e.role == r:
            uses.add("universal" if polarity > 0 else "existential")
        _role_uses(e.filler, r, polarity, uses)


class _RoleRewriter:
    def __init__(self, o, r, direct_subs, direct_sups, deadline):
        self.o = o
        self.r = r
        self.subs = direct_subs
        self.sups = direct_sups
        self.deadline = deadline

    def rewrite(self, e, polarity):
        if isinstance(e, (Top, Bottom, Atomic)):
            return e
        if isinstance(e, Not):
            return Not(self.rewrite(e.inner, -polarity))
        if isinstance(e, And):
            return conj([self.rewrite(a, polarity) for a in e.args])
        if isinstance(e, Or):
            return disj([self.rewrite(a, polarity) for a in e.args])
        if isinstance(e, Exists):
            filler = self.rewrite(e.filler, polarity)
            if e.role != self.r:
                return Exists(e.role, filler)
            if polarity > 0:
                if self.sups:
                    return conj([Exists(s, filler) for s in self.sups])
                return BOTTOM if self._unsatisfiable(filler) else TOP
            if self.subs:
                return disj([Exists(t, filler) for t in self.subs])
            return BOTTOM
        if isinstance(e, Forall):
            filler = self.rewrite(e.filler, polarity)
            if e.role != self.r:
                return Forall(e.role, filler)
            if polarity > 0:
                if self.subs:
                    return conj([Forall(t, filler) for t in self.subs])
                return TOP
            if self.sups:
                return disj([Forall(s, filler) for s in self.sups])
            return TOP if self._unsatisfiable(negate(filler)) else BOTTOM
        raise TypeError(f"not a concept: {e!r}")

    def _unsatisfiable(self, concept) -> bool:
        try:
            return not tableau.concept_satisfiable(concept, self.o,
                                                   deadline=self.deadline)
        except ResourceExhaustedError:
            raise DeadlineExceeded() from None
