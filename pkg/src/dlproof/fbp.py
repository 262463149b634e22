"""Forgetting-based proof generation.

Three strategies build proofs whose steps are inferences on eliminated
predicate names:

* ``heur`` forgets names one by one, always picking the name with the
  fewest occurrences in the current justification, and skips names whose
  elimination fails. Fast, no optimality guarantee.
* ``symb`` searches over elimination orders of concept names, depth-first
  with branch-and-bound on the number of names successfully forgotten, and
  finishes the proof with the heuristic pass.
* ``size`` runs the recursive bounded search over forgetting results and
  keeps the proof with the smallest measure (tree size, or weighted size
  for the weighted variant).

Justification selection is deterministic throughout, and forgetting
results are cached per task, keyed by the axiom set and the name.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import forgetting, tableau
from .errors import (
    BudgetExceededError, NoProofWithinBoundError, NotEntailedError,
)
from .justify import one_justification
from .proofs import (
    Proof, ProofNode, TREE_SIZE, WEIGHTED_SIZE, as_root, leaf, step,
)
from .rules import forget_rule
from .syntax import (
    And, Atomic, ConceptInclusion, Exists, Forall, Not, Ontology, Or,
    RoleInclusion, axiom_weight, ontology, signature_of,
)

HEUR = "heur"
SYMB = "symb"
SIZE = "size"
SIZE_WEIGHTED = "size-weighted"


@dataclass
class FbpTask:
    ontology: Ontology
    goal: ConceptInclusion
    method: str = HEUR
    per_forget_timeout_ms: float = 2000
    overall_budget_ms: float = 300_000
    size_bound: int = 10**9


@dataclass
class TraceStep:
    forgotten: tuple          # (kind, name) or None for the final inference
    justification_before: tuple
    result_after: tuple
    skipped: bool = False


@dataclass
class FbpTrace:
    steps: list = field(default_factory=list)
    forgetting_calls: int = 0
    failures: int = 0
    elapsed_ms: float = 0.0


class _Budget(forgetting.Deadline):
    def check(self):
        if self.elapsed_ms() > self.budget_ms:
            raise BudgetExceededError(
                f"proof search budget of {self.budget_ms} ms exceeded")


class _Session:
    """Per-task state: budget, cache and counters."""

    def __init__(self, task: FbpTask):
        self.task = task
        self.budget = _Budget(task.overall_budget_ms)
        self.cache = {}
        self.trace = FbpTrace()

    def forget(self, o: Ontology, name):
        kind, text = name
        key = (frozenset(o.axioms), name)
        if key in self.cache:
            return self.cache[key]
        self.budget.check()
        timeout = min(self.task.per_forget_timeout_ms,
                      max(0.0, self.task.overall_budget_ms - self.budget.elapsed_ms()))
        if kind == "concept":
            res = forgetting.forget_concept_name(o, text, timeout_ms=timeout)
        else:
            res = forgetting.forget_role_name(o, text, timeout_ms=timeout)
        self.trace.forgetting_calls += 1
        if not res.ok:
            self.trace.failures += 1
        self.cache[key] = res
        return res


def _goal_names(goal: ConceptInclusion):
    if not goal.is_atomic_ci:
        raise ValueError("forgetting-based proofs need an atomic goal")
    return {("concept", goal.lhs.name), ("concept", goal.rhs.name)}


def _tagged_names(x) -> set:
    return signature_of(x).tagged()


def _occurrences(o: Ontology, name) -> int:
    kind, text = name
    total = 0
    for a in o:
        total += _count(a, kind, text)
    return total


def _count(x, kind, text) -> int:
    if isinstance(x, ConceptInclusion):
        return _count(x.lhs, kind, text) + _count(x.rhs, kind, text)
    if isinstance(x, RoleInclusion):
        return (kind == "role") * ((x.sub == text) + (x.sup == text))
    if isinstance(x, Atomic):
        return 1 if kind == "concept" and x.name == text else 0
    if isinstance(x, Not):
        return _count(x.inner, kind, text)
    if isinstance(x, (And, Or)):
        return sum(_count(a, kind, text) for a in x.args)
    if isinstance(x, (Exists, Forall)):
        own = 1 if kind == "role" and x.role == text else 0
        return own + _count(x.filler, kind, text)
    return 0


def _verify_entailed(o: Ontology, goal):
    if not tableau.entails(o, goal):
        raise NotEntailedError(f"ontology does not entail {goal.key()}")


def _justify(o: Ontology, goal) -> Ontology:
    j = one_justification(o, goal)
    return ontology(j.axioms, name=o.name)


# --- proof assembly from elimination layers ----------------------------------


def _proof_from_layers(origin: Ontology, initial: Ontology, layers, goal) -> Proof:
    """Unravel the elimination sequence into a tree proof.

    ``layers`` is a list of (name, before, after) with after = justification
    of the goal in before^(-name). Premises of each step are a deterministic
    justification of the conclusion in the preceding layer.
    """
    js = [initial] + [after for (_, _, after) in layers]

    def proof_for(beta, i) -> ProofNode:
        if beta in origin:
            return leaf(beta)
        j = i
        while j > 0 and not (beta in js[j] and beta not in js[j - 1]):
            j -= 1
        if j == 0:
            raise AssertionError(f"axiom without origin: {beta.key()}")
        name, before, _ = layers[j - 1]
        premises = _justify(before, beta)
        rule = forget_rule(name[1])
        return step(beta, rule, [proof_for(p, j - 1) for p in premises])

    last = js[-1]
    if goal in last:
        root = proof_for(goal, len(layers))
    else:
        premises = _justify(last, goal)
        root = step(goal, forget_rule(None),
                    [proof_for(p, len(layers)) for p in premises])
    return Proof(as_root(root), goal)


# --- the heuristic method -----------------------------------------------------


def heur_proof(task: FbpTask):
    session = _Session(task)
    proof = _heur(session, task.ontology, task.goal, session.trace)
    session.trace.elapsed_ms = session.budget.elapsed_ms()
    return proof, session.trace


def _heur(session, o, goal, trace, start_j=None, layers=None):
    session.budget.check()
    goal_names = _goal_names(goal)
    if start_j is None:
        _verify_entailed(o, goal)
        j = _justify(o, goal)
    else:
        j = start_j
    layers = list(layers or [])
    sigma = set(_tagged_names(o)) - goal_names

    while True:
        session.budget.check()
        candidates = sorted(n for n in sigma if n in _tagged_names(j))
        if not candidates:
            break
        name = min(candidates, key=lambda n: (_occurrences(j, n), n))
        sigma.discard(name)
        res = session.forget(j, name)
        if not res.ok:
            trace.steps.append(TraceStep(name, j.axioms, j.axioms, skipped=True))
            continue
        try:
            j_next = _justify(res.ontology, goal)
        except NotEntailedError:
            trace.steps.append(TraceStep(name, j.axioms, j.axioms, skipped=True))
            continue
        trace.steps.append(TraceStep(name, j.axioms, j_next.axioms))
        layers.append((name, j, j_next))
        j = j_next

    return _proof_from_layers(task_origin(session), _initial_layer(layers, j),
                              layers, goal)


def task_origin(session) -> Ontology:
    return session.task.ontology


def _initial_layer(layers, current_j) -> Ontology:
    return layers[0][1] if layers else current_j


# --- the symbol-minimizing method ----------------------------------------------


def symb_proof(task: FbpTask):
    session = _Session(task)
    o, goal = task.ontology, task.goal
    session.budget.check()
    _verify_entailed(o, goal)
    goal_names = _goal_names(goal)
    j0 = _justify(o, goal)

    best = {"count": None, "layers": None, "final": None}

    def dfs(j, layers):
        session.budget.check()
        if best["count"] is not None and len(layers) >= best["count"]:
            return
        candidates = sorted(
            n for n in _tagged_names(j) - goal_names if n[0] == "concept")
        successors = []
        for name in candidates:
            res = session.forget(j, name)
            if not res.ok:
                continue
            try:
                j_next = _justify(res.ontology, goal)
            except NotEntailedError:
                continue
            successors.append((name, j_next))
        if not successors:
            if best["count"] is None or len(layers) < best["count"]:
                best.update(count=len(layers), layers=list(layers), final=j)
            return
        successors.sort(key=lambda it: (len(_tagged_names(it[1])), it[0]))
        for name, j_next in successors:
            dfs(j_next, layers + [(name, j, j_next)])

    dfs(j0, [])
    if best["count"] is None:
        raise BudgetExceededError("symbol-minimizing search found no terminal state")

    layers = best["layers"]
    for (name, before, after) in layers:
        session.trace.steps.append(TraceStep(name, before.axioms, after.axioms))
    # heuristic completion handles remaining (role) names
    proof = _heur(session, task.ontology, goal, session.trace,
                  start_j=best["final"],
                  layers=layers)
    session.trace.elapsed_ms = session.budget.elapsed_ms()
    return proof, session.trace


def count_forgotten(trace: FbpTrace) -> int:
    return sum(1 for s in trace.steps if not s.skipped and s.forgotten is not None)


# --- the (weighted) size-optimizing method --------------------------------------


def size_proof(task: FbpTask):
    session = _Session(task)
    o, goal = task.ontology, task.goal
    measure = WEIGHTED_SIZE if task.method == SIZE_WEIGHTED else TREE_SIZE
    session.budget.check()
    _verify_entailed(o, goal)
    goal_names = _goal_names(goal)
    j0 = _justify(o, goal)

    def removal_cost(j, jx):
        gone = [a for a in j if a not in jx]
        if measure is WEIGHTED_SIZE:
            return sum(axiom_weight(a) for a in gone)
        return len(gone)

    def extend(node: ProofNode, j: Ontology, name) -> ProofNode:
        if node.is_leaf():
            if node.axiom in j:
                return node
            premises = _justify(j, node.axiom)
            return step(node.axiom, forget_rule(name[1]),
                        [leaf(p) for p in premises])
        return ProofNode(node.axiom, node.kind, node.rule,
                         tuple(extend(c, j, name) for c in node.children))

    def prove(j: Ontology, bound):
        session.budget.check()
        if bound <= 0:
            return None, None
        if goal in j:
            return leaf(goal), []
        candidates = sorted(
            n for n in _tagged_names(j) - goal_names if n[0] == "concept")
        if not candidates:
            premises = _justify(j, goal)
            node = step(goal, forget_rule(None), [leaf(p) for p in premises])
            if measure.evaluate(node) <= bound:
                return node, []
            return None, None
        options = []
        for name in candidates:
            res = session.forget(j, name)
            if res.ok:
                options.append((name, res.ontology))
        options.sort(key=lambda it: (
            len(it[1].axioms) * len(_tagged_names(it[1])), it[0]))
        best_node, best_layers, best_size = None, None, None
        for name, jx in options:
            sub, sub_layers = prove(jx, bound - removal_cost(j, jx))
            if sub is None:
                continue
            full = extend(sub, j, name)
            size = measure.evaluate(full)
            if best_size is None or size < best_size:
                best_node, best_size = full, size
                best_layers = [(name, j, jx)] + sub_layers
                bound = min(bound, size)
        return best_node, best_layers

    node, layers = prove(j0, task.size_bound)
    if node is None:
        raise NoProofWithinBoundError(
            f"no proof of measure at most {task.size_bound}")
    for (name, before, after) in layers:
        session.trace.steps.append(TraceStep(name, before.axioms, after.axioms))
    proof = Proof(as_root(node), goal)
    session.trace.elapsed_ms = session.budget.elapsed_ms()
    return proof, session.trace


def generate(task: FbpTask):
    """Dispatch on the task's method."""
    if task.method == HEUR:
        return heur_proof(task)
    if task.method == SYMB:
        return symb_proof(task)
    if task.method in (SIZE, SIZE_WEIGHTED):
        return size_proof(task)
    raise ValueError(f"unknown method: {task.method}")
