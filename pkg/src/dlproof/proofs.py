"""Proof trees, monotone recursive measures and optimal proof extraction.

Proofs are trees of axiom-labeled vertices; inference steps connect child
premises to their conclusion. Extraction searches the derivation structure
with a priority queue in the style of Dijkstra's algorithm generalized to
hypergraphs: a hyperedge fires once all its premises have final costs, and
any monotone recursive measure yields globally optimal trees. Axioms
covered by a known signature start out with the cost of a bare vertex, so
condensation falls out of the same search.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from itertools import count

from . import rules
from .elh import DerivationStructure
from .errors import NotDerivableError
from .syntax import (
    Axiom, Signature, axiom_weight, render_axiom, signature_of,
)


@dataclass(frozen=True)
class ProofNode:
    axiom: Axiom
    kind: str                  # 'asserted' | 'inferred' | 'known' | 'conclusion'
    rule: rules.Rule = None    # None on leaves
    children: tuple = ()

    def is_leaf(self):
        return not self.children


@dataclass(frozen=True)
class Proof:
    root: ProofNode
    goal: Axiom

    def nodes(self):
        """Preorder traversal."""
        out = []
        stack = [self.root]
        while stack:
            n = stack.pop()
            out.append(n)
            stack.extend(reversed(n.children))
        return out

    def steps(self):
        return [n for n in self.nodes() if n.children]


def leaf(axiom: Axiom, kind: str = "asserted") -> ProofNode:
    return ProofNode(axiom, kind)


def step(axiom: Axiom, rule, children, kind: str = "inferred") -> ProofNode:
    return ProofNode(axiom, kind, rule, tuple(children))


def as_root(node: ProofNode) -> ProofNode:
    """Mark the root vertex; known leaves keep their kind."""
    if node.kind == "known":
        return node
    return ProofNode(node.axiom, "conclusion", node.rule, node.children)


class Measure:
    """Monotone recursive proof measure."""

    def __init__(self, name, leaf_cost, combine):
        self.name = name
        self._leaf_cost = leaf_cost
        self._combine = combine

    def leaf_cost(self, axiom):
        return self._leaf_cost(axiom)

    def combine(self, axiom, child_costs):
        return self._combine(axiom, child_costs)

    def evaluate(self, proof) -> int:
        def rec(node):
            if node.is_leaf():
                return self._leaf_cost(node.axiom)
            return self._combine(node.axiom, [rec(c) for c in node.children])
        root = proof.root if isinstance(proof, Proof) else proof
        return rec(root)

    def __repr__(self):
        return f"Measure({self.name})"


TREE_SIZE = Measure("tree-size",
                    lambda ax: 1,
                    lambda ax, cs: 1 + sum(cs))
DEPTH = Measure("depth",
                lambda ax: 0,
                lambda ax, cs: 1 + max(cs))
WEIGHTED_SIZE = Measure("weighted-size",
                        axiom_weight,
                        lambda ax, cs: axiom_weight(ax) + sum(cs))

MEASURES = {"size": TREE_SIZE, "depth": DEPTH, "weighted": WEIGHTED_SIZE}


def evaluate_measure(proof: Proof, measure: Measure):
    return measure.evaluate(proof)


def extract_optimal_proof(d: DerivationStructure, goal: Axiom,
                          measure: Measure = TREE_SIZE,
                          known: Signature = Signature.EMPTY) -> Proof:
    """Measure-minimal tree proof of goal embeddable in d."""
    if goal not in d.vertices:
        raise NotDerivableError(f"goal is not a vertex: {goal.key()}")

    leaf_choice = {}   # vertex -> kind of its base-cost option
    for v in d.vertices:
        if known and signature_of(v).tagged() <= known.tagged():
            leaf_choice[v] = "known"

    edges_by_premise = {}
    zero_premise = {}
    for e in d.edges:
        if not e.premises:
            prev = zero_premise.get(e.conclusion)
            # asserted beats other zero-premise rules, then rule id for ties
            key = (e.rule.rule_id != rules.ASSERTED.rule_id, e.rule.rule_id)
            if prev is None or key < prev[0]:
                zero_premise[e.conclusion] = (key, e)
            continue
        for p in e.premises:
            edges_by_premise.setdefault(p, []).append(e)

    for v, (key, e) in zero_premise.items():
        if e.rule.rule_id == rules.ASSERTED.rule_id:
            # asserted leaves win cost ties against known ones
            leaf_choice[v] = "asserted"
        elif v not in leaf_choice:
            leaf_choice[v] = ("rule", e)

    best = {}      # vertex -> (cost, choice); choice: ('leaf', kind) | ('edge', e)
    final = set()
    heap = []
    tick = count()

    def offer(v, cost, choice, choice_key):
        cur = best.get(v)
        if cur is None or cost < cur[0] or (cost == cur[0] and choice_key < cur[2]):
            best[v] = (cost, choice, choice_key)
            heapq.heappush(heap, (cost, v.key(), next(tick), v))

    for v, kind in leaf_choice.items():
        if isinstance(kind, tuple):
            _, e = kind
            offer(v, measure.leaf_cost(v), ("edge", e), (1, e.rule.rule_id))
        else:
            offer(v, measure.leaf_cost(v), ("leaf", kind), (0, kind))

    remaining = {e: len(e.premises) for e in d.edges if e.premises}
    waiting = {}
    for e, n in remaining.items():
        for p in e.premises:
            waiting.setdefault(p, []).append(e)

    while heap:
        cost, _, _, v = heapq.heappop(heap)
        if v in final:
            continue
        if cost != best[v][0]:
            continue
        final.add(v)
        for e in waiting.get(v, ()):
            remaining[e] -= 1
            if remaining[e] == 0:
                child_costs = [best[p][0] for p in e.premises]
                new_cost = measure.combine(e.conclusion, child_costs)
                ckey = (2, e.rule.rule_id,
                        tuple(sorted(p.key() for p in e.premises)))
                offer(e.conclusion, new_cost, ("edge", e), ckey)

    if goal not in final:
        raise NotDerivableError(f"goal not derivable: {goal.key()}")

    def build(v):
        _, choice, _ = best[v]
        if choice[0] == "leaf":
            return ProofNode(v, choice[1])
        e = choice[1]
        if not e.premises:
            return ProofNode(v, "inferred", e.rule, ())
        children = tuple(build(p) for p in
                         sorted(e.premises, key=lambda p: p.key()))
        return ProofNode(v, "inferred", e.rule, children)

    return Proof(as_root(build(goal)), goal)


def proof_signature(proof: Proof) -> Signature:
    sig = Signature.EMPTY
    for n in proof.nodes():
        sig = sig | signature_of(n.axiom)
    return sig


def signature_coverage(proof: Proof, s: Signature) -> float:
    """|sig(p) ∩ s| / |sig(p)|; 1.0 for an empty proof signature."""
    psig = proof_signature(proof).tagged()
    if not psig:
        return 1.0
    return len(psig & s.tagged()) / len(psig)


def condense_by_signature(proof: Proof, known: Signature) -> Proof:
    """Replace subtrees whose root axiom is covered by the signature."""
    if not known:
        return proof

    def rec(node):
        if signature_of(node.axiom).tagged() <= known.tagged():
            return ProofNode(node.axiom, "known")
        if node.is_leaf():
            return node
        return ProofNode(node.axiom, node.kind, node.rule,
                         tuple(rec(c) for c in node.children))

    return Proof(as_root(rec(proof.root)), proof.goal)


def validate_proof(proof: Proof, source: "Ontology" = None,
                   known: Signature = Signature.EMPTY, oracle=None) -> list:
    """Structural (and optionally semantic) proof checks; returns problems."""
    problems = []
    if proof.root.axiom != proof.goal:
        problems.append("root label differs from goal")
    from .syntax import ontology as _mk
    for n in proof.nodes():
        if n.is_leaf():
            if n is proof.root:
                continue
            if n.kind == "known":
                if known is not None and not signature_of(n.axiom).tagged() <= known.tagged():
                    problems.append(f"known leaf outside signature: {n.axiom.key()}")
            elif n.kind == "asserted":
                if source is not None and n.axiom not in source:
                    problems.append(f"leaf not in ontology: {n.axiom.key()}")
            elif n.kind == "inferred" and n.rule is not None:
                # zero-premise rule application (a calculus tautology)
                if oracle is not None and not oracle(_mk([], name="empty"), n.axiom):
                    problems.append(f"unsound tautology leaf: {n.axiom.key()}")
            else:
                problems.append(f"leaf with kind {n.kind}: {n.axiom.key()}")
        else:
            if n.rule is None:
                problems.append(f"step without rule: {n.axiom.key()}")
            if oracle is not None:
                premises = _mk([c.axiom for c in n.children], name="premises")
                if not oracle(premises, n.axiom):
                    problems.append(
                        f"unsound step: {[c.axiom.key() for c in n.children]}"
                        f" => {n.axiom.key()}")
    return problems


# --- JSON serialization -------------------------------------------------------


def proof_to_json(proof: Proof, proof_id: str, method: str,
                  coverage_pct: float = None,
                  known: Signature = None) -> dict:
    nodes = []
    inferences = []
    ids = {}
    ordered = proof.nodes()
    for i, n in enumerate(ordered):
        ids[id(n)] = f"n{i}"
        nodes.append({
            "id": f"n{i}",
            "axiom": render_axiom(n.axiom, "functional"),
            "pretty": render_axiom(n.axiom, "pretty"),
            "kind": n.kind,
        })
    j = 0
    for n in ordered:
        if n.children:
            inferences.append({
                "id": f"i{j}",
                "rule": n.rule.rule_id,
                "premises": [ids[id(c)] for c in n.children],
                "conclusion": ids[id(n)],
            })
            j += 1
    doc = {
        "id": proof_id,
        "goal": render_axiom(proof.goal, "functional"),
        "method": method,
        "measures": {
            "treeSize": TREE_SIZE.evaluate(proof),
            "depth": DEPTH.evaluate(proof),
            "weightedSize": WEIGHTED_SIZE.evaluate(proof),
        },
        "coveragePct": coverage_pct if coverage_pct is not None else 0.0,
        "nodes": nodes,
        "inferences": inferences,
    }
    if known is not None:
        doc["knownSignature"] = sorted(
            [f"concept:{n}" for n in known.concept_names]
            + [f"role:{n}" for n in known.role_names])
    return doc


def validate_proof_json(doc) -> list:
    """Check a serialized proof against the wire schema; returns problems."""
    problems = []
    for field, typ in (("id", str), ("goal", str), ("method", str),
                       ("measures", dict), ("coveragePct", (int, float)),
                       ("nodes", list), ("inferences", list)):
        if field not in doc:
            problems.append(f"missing field {field}")
        elif not isinstance(doc[field], typ):
            problems.append(f"field {field} has wrong type")
    if problems:
        return problems
    for m in ("treeSize", "depth", "weightedSize"):
        if not isinstance(doc["measures"].get(m), (int, float)):
            problems.append(f"missing measure {m}")
    node_ids = set()
    for n in doc["nodes"]:
        if not isinstance(n, dict):
            problems.append("node is not an object")
            continue
        for field in ("id", "axiom", "pretty", "kind"):
            if not isinstance(n.get(field), str):
                problems.append(f"node missing {field}")
        if n.get("kind") not in ("asserted", "inferred", "known", "conclusion"):
            problems.append(f"bad node kind {n.get('kind')!r}")
        node_ids.add(n.get("id"))
    conclusions = set()
    for inf in doc["inferences"]:
        if not isinstance(inf, dict):
            problems.append("inference is not an object")
            continue
        if not isinstance(inf.get("id"), str) or not isinstance(inf.get("rule"), str):
            problems.append("inference missing id/rule")
        if inf.get("conclusion") not in node_ids:
            problems.append("inference conclusion is not a node")
        if not isinstance(inf.get("premises"), list) or \
                not all(p in node_ids for p in inf.get("premises", [])):
            problems.append("inference premises are not nodes")
        if inf.get("conclusion") in conclusions:
            problems.append("vertex concluded by multiple inferences")
        conclusions.add(inf.get("conclusion"))
    return problems


def proof_json_bytes(doc) -> bytes:
    return json.dumps(doc, sort_keys=True, indent=2).encode("utf-8") + b"\n"
