"""Experiment harness: task extraction, pattern mining, condensation and
strategy comparisons, with deterministic CSV output.

The CSV schema is fixed: one header row, UTF-8, LF line endings, columns
``task_id,method,status,original_size,condensed_size,size_ratio,depth,
weighted_size,coverage_pct,elapsed_ms``. Fields that do not apply to a row
kind stay empty. Timing is injectable so that seeded runs are reproducible
byte for byte.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from random import Random

from . import elh, fbp, tableau
from .errors import (
    BudgetExceededError, DlProofError, FragmentError, ResourceExhaustedError,
)
from .justify import one_justification
from .patterns import CanonicalPattern, canonical_pattern
from .proofs import (
    DEPTH, TREE_SIZE, WEIGHTED_SIZE, extract_optimal_proof,
    signature_coverage,
)
from .syntax import (
    Atomic, ConceptInclusion, Fragment, Ontology, Signature, ontology,
    signature_of,
)

CSV_HEADER = ("task_id,method,status,original_size,condensed_size,"
              "size_ratio,depth,weighted_size,coverage_pct,elapsed_ms")


@dataclass(frozen=True)
class ProofTask:
    task_id: str
    goal: ConceptInclusion
    ontology_ref: str = ""
    signature_ref: str = ""


@dataclass
class ResultRow:
    task_id: str
    method: str
    status: str                    # 'ok' | 'timeout' | 'failed'
    original_size: int = None
    condensed_size: int = None
    size_ratio: float = None
    depth: int = None
    weighted_size: int = None
    coverage_pct: float = None
    elapsed_ms: int = None

    def csv(self) -> str:
        def num(v, fmt="{}"):
            return "" if v is None else fmt.format(v)
        return ",".join([
            self.task_id, self.method, self.status,
            num(self.original_size), num(self.condensed_size),
            num(self.size_ratio, "{:.4f}"), num(self.depth),
            num(self.weighted_size), num(self.coverage_pct, "{:.1f}"),
            num(self.elapsed_ms),
        ])


def write_csv(rows, path):
    data = CSV_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(data)
    return data


def _now_ms_factory(clock):
    if clock is not None:
        return clock
    return lambda: time.monotonic() * 1000.0


# --- task extraction ------------------------------------------------------------


def extract_tasks(o: Ontology, s: Signature = None, min_symbols: int = 5,
                  sample_size: int = 500, seed: int = 0,
                  ontology_ref: str = "") -> list:
    """Entailed nontrivial atomic inclusions as proof tasks.

    With a signature, only tasks whose minimal proof uses at least
    ``min_symbols`` of its symbols are kept. Sampling is uniform and
    deterministic in the seed.
    """
    if o.fragment() != Fragment.ELH:
        raise FragmentError("task extraction runs on ELH ontologies")
    structure = elh.saturate(o)
    goals = sorted(elh.entailed_atomic_cis(o, structure=structure),
                   key=lambda a: a.key())
    tasks = []
    for goal in goals:
        if s is not None and min_symbols > 0:
            proof = extract_optimal_proof(structure, goal, TREE_SIZE)
            used = signature_of_proof_tagged(proof) & s.tagged()
            if len(used) < min_symbols:
                continue
        tasks.append(goal)
    if len(tasks) > sample_size:
        tasks = Random(seed).sample(tasks, sample_size)
    return [ProofTask(f"t{i:04d}", goal, ontology_ref=ontology_ref)
            for i, goal in enumerate(tasks)]


def signature_of_proof_tagged(proof):
    from .proofs import proof_signature
    return proof_signature(proof).tagged()


# --- condensation experiment ------------------------------------------------------


def run_condensation(o: Ontology, tasks, s: Signature, out_csv=None,
                     clock=None) -> list:
    """Minimal proofs with and without the known signature, per task."""
    now = _now_ms_factory(clock)
    structure = elh.saturate(o)
    rows = []
    for task in tasks:
        start = now()
        try:
            original = extract_optimal_proof(structure, task.goal, TREE_SIZE)
            condensed = extract_optimal_proof(structure, task.goal, TREE_SIZE,
                                              known=s)
            osize = TREE_SIZE.evaluate(original)
            csize = TREE_SIZE.evaluate(condensed)
            rows.append(ResultRow(
                task_id=task.task_id, method="condense", status="ok",
                original_size=osize, condensed_size=csize,
                size_ratio=csize / osize,
                depth=DEPTH.evaluate(original),
                weighted_size=WEIGHTED_SIZE.evaluate(original),
                coverage_pct=100.0 * signature_coverage(original, s),
                elapsed_ms=int(now() - start)))
        except DlProofError:
            rows.append(ResultRow(task_id=task.task_id, method="condense",
                                  status="failed", elapsed_ms=int(now() - start)))
    if out_csv:
        write_csv(rows, out_csv)
    return rows


# --- pattern mining ----------------------------------------------------------------


@dataclass(frozen=True)
class MinedPattern:
    pattern: CanonicalPattern
    goal: ConceptInclusion
    axioms: tuple
    frequency: int


def mine_patterns(o: Ontology, non_elh_only: bool = False,
                  max_restarts: int = 3,
                  cfg: tableau.TableauConfig = tableau.DEFAULT_CONFIG) -> list:
    """Group entailments by the renaming-invariant form of their
    justification union.

    The union of all justifications is approximated by restarting the
    black-box extraction with single axioms removed, up to
    ``max_restarts`` rounds of growth.
    """
    names = sorted(signature_of(o).concept_names)
    tasks = []
    exhausted = 0
    for a, b in combinations(names, 2):
        for lhs, rhs in ((a, b), (b, a)):
            goal = ConceptInclusion(Atomic(lhs), Atomic(rhs))
            if goal in o:
                continue
            try:
                if tableau.entails(o, goal, cfg):
                    tasks.append(goal)
            except ResourceExhaustedError:
                exhausted += 1
    groups = {}
    for goal in tasks:
        try:
            union = _justification_union(o, goal, max_restarts, cfg)
        except ResourceExhaustedError:
            exhausted += 1
            continue
        if non_elh_only and not any(_is_non_elh_axiom(a) for a in union):
            continue
        pattern = canonical_pattern(goal, union)
        groups.setdefault(pattern, []).append((goal, union))
    mined = []
    for pattern in sorted(groups, key=lambda p: p.key):
        goal, union = groups[pattern][0]
        mined.append(MinedPattern(pattern, goal, tuple(union),
                                  frequency=len(groups[pattern])))
    mined.sort(key=lambda m: (-m.frequency, m.pattern.key))
    return mined


def _justification_union(o, goal, max_restarts, cfg):
    entail = lambda oo, gg: tableau.entails(oo, gg, cfg)
    base = one_justification(o, goal, entail)
    union = set(base.axioms)
    frontier = list(base.axioms)
    for _ in range(max_restarts):
        grew = False
        for axiom in list(frontier):
            reduced = o.without(axiom)
            if not entail(reduced, goal):
                continue
            alt = one_justification(reduced, goal, entail)
            new = [a for a in alt.axioms if a not in union]
            if new:
                union.update(new)
                frontier.extend(new)
                grew = True
        if not grew:
            break
    return [a for a in o if a in union]


def _is_non_elh_axiom(a) -> bool:
    from .syntax import _has_non_elh
    if isinstance(a, ConceptInclusion):
        return _has_non_elh(a.lhs) or _has_non_elh(a.rhs)
    return False


# --- strategy comparison --------------------------------------------------------------


def run_fbp_comparison(patterns, methods, out_csv=None,
                       budget_ms: float = 300_000,
                       per_forget_timeout_ms: float = 2000,
                       clock=None) -> list:
    """Run each method on each pattern task; timeouts score size 0."""
    now = _now_ms_factory(clock)
    rows = []
    for i, mined in enumerate(patterns):
        task_ont = ontology(mined.axioms, name=f"pattern{i}")
        task_id = f"p{i:04d}"
        for method in methods:
            start = now()
            task = fbp.FbpTask(task_ont, mined.goal, method=method,
                               per_forget_timeout_ms=per_forget_timeout_ms,
                               overall_budget_ms=budget_ms)
            try:
                proof, _trace = fbp.generate(task)
                rows.append(ResultRow(
                    task_id=task_id, method=method, status="ok",
                    original_size=TREE_SIZE.evaluate(proof),
                    depth=DEPTH.evaluate(proof),
                    weighted_size=WEIGHTED_SIZE.evaluate(proof),
                    elapsed_ms=int(now() - start)))
            except BudgetExceededError:
                rows.append(ResultRow(
                    task_id=task_id, method=method, status="timeout",
                    original_size=0, elapsed_ms=int(now() - start)))
            except (DlProofError, ValueError):
                rows.append(ResultRow(
                    task_id=task_id, method=method, status="failed",
                    elapsed_ms=int(now() - start)))
    if out_csv:
        write_csv(rows, out_csv)
    return rows
