"""Proof workbench for ELH/ALCH description logic ontologies.

Generates, minimizes, condenses and serves machine-checkable proofs of
concept-inclusion entailments: consequence-based saturation for ELH with
optimal proof extraction over the recorded inference hypergraph, a tableau
entailment oracle for ALCH, black-box justifications, forgetting of
predicate names, and three forgetting-based proof search strategies.
"""

from .errors import (
    BudgetExceededError, DlProofError, DuplicateAxiomError, FragmentError,
    NoProofWithinBoundError, NotDerivableError, NotEntailedError, ParseError,
    ResourceExhaustedError,
)
from .syntax import (
    And, Atomic, Axiom, BOTTOM, Bottom, ConceptExpr, ConceptInclusion,
    ConceptName, Exists, Forall, Fragment, Not, Ontology, Or, RoleInclusion,
    RoleName, Signature, TOP, Top, atom, axiom_weight, ci, conj, disj,
    exists, forall, nnf, ontology, render_axiom, render_concept, ri, sig,
    signature_of,
)
from .parsing import parse_axiom, parse_ontology, parse_signature
from .patterns import CanonicalPattern, canonical_pattern
from .elh import DerivationStructure, Hyperedge, entailed_atomic_cis, saturate
from .tableau import TableauConfig, entails, is_consistent
from .justify import Justification, one_justification
from .forgetting import (
    ForgettingResult, forget_concept_name, forget_role_name, simplify,
)
from .proofs import (
    DEPTH, MEASURES, Measure, Proof, ProofNode, TREE_SIZE, WEIGHTED_SIZE,
    condense_by_signature, evaluate_measure, extract_optimal_proof,
    proof_to_json, signature_coverage, validate_proof, validate_proof_json,
)
from .fbp import FbpTask, FbpTrace, heur_proof, size_proof, symb_proof
from .bench import (
    ProofTask, ResultRow, extract_tasks, mine_patterns, run_condensation,
    run_fbp_comparison,
)

__version__ = "0.1.0"
