"""HTTP facade: project management, entailment listing, proof generation.

In-memory store, JSON over HTTP via the standard library server. Proof
records are serialized once and served as stored bytes, so repeated reads
are byte-identical. Per-project locks keep concurrent proof requests from
corrupting the saturation cache.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import elh, fbp, rules
from .errors import (
    BudgetExceededError, DlProofError, DuplicateAxiomError,
    NoProofWithinBoundError, NotDerivableError, NotEntailedError, ParseError,
    ResourceExhaustedError,
)
from .parsing import parse_axiom, parse_ontology
from .proofs import (
    MEASURES, condense_by_signature, extract_optimal_proof,
    proof_json_bytes, proof_to_json, signature_coverage,
)
from .syntax import (
    ConceptName, Fragment, Ontology, RoleName, Signature, render_axiom,
    signature_of,
)

ELK_MINIMAL = "elk-minimal"
FBP_METHODS = {fbp.HEUR, fbp.SYMB, fbp.SIZE, fbp.SIZE_WEIGHTED}


class ApiError(Exception):
    def __init__(self, status, payload):
        super().__init__(str(payload))
        self.status = status
        self.payload = payload


@dataclass
class Project:
    project_id: str
    name: str
    ontology: Ontology
    lock: threading.RLock = field(default_factory=threading.RLock)
    saturation: object = None
    proofs: dict = field(default_factory=dict)      # pid -> (record, bytes)
    proof_counter: int = 0


class ProjectStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._projects = {}
        self._counter = 0

    def create(self, name: str, ontology_text: str) -> Project:
        try:
            parsed = parse_ontology(ontology_text, name=name or "ontology")
        except ParseError as exc:
            raise ApiError(400, {
                "error": "SyntaxError", "message": exc.message,
                "line": exc.line, "col": exc.col, "expected": exc.expected,
            }) from None
        except DuplicateAxiomError as exc:
            raise ApiError(400, {
                "error": "DuplicateAxiom", "message": str(exc),
                "line": exc.line, "col": exc.col,
            }) from None
        with self._lock:
            self._counter += 1
            project = Project(f"p{self._counter}", name, parsed)
            self._projects[project.project_id] = project
        return project

    def get(self, project_id: str) -> Project:
        with self._lock:
            project = self._projects.get(project_id)
        if project is None:
            raise ApiError(404, {"error": "UnknownProject", "id": project_id})
        return project


def project_summary(project: Project) -> dict:
    return {
        "id": project.project_id,
        "name": project.name,
        "fragment": project.ontology.fragment().value,
        "axiomCount": len(project.ontology),
    }


def _saturation(project: Project):
    with project.lock:
        if project.saturation is None:
            project.saturation = elh.saturate(project.ontology)
        return project.saturation


def list_entailments(project: Project) -> list:
    if project.ontology.fragment() != Fragment.ELH:
        raise ApiError(422, {
            "error": "FragmentError",
            "message": "entailment listing needs an ELH ontology; use a "
                       "forgetting-based method with an explicit goal",
        })
    structure = _saturation(project)
    goals = sorted(elh.entailed_atomic_cis(project.ontology, structure=structure),
                   key=lambda a: a.key())
    return [{"functional": render_axiom(a, "functional"),
             "pretty": render_axiom(a, "pretty")} for a in goals]


def _parse_known_signature(names, o: Ontology) -> Signature:
    if not names:
        return Signature.EMPTY
    osig = signature_of(o)
    concepts, roles = set(), set()
    for raw in names:
        if raw.startswith("concept:"):
            concepts.add(ConceptName(raw[len("concept:"):]))
        elif raw.startswith("role:"):
            roles.add(RoleName(raw[len("role:"):]))
        else:
            if raw in osig.concept_names:
                concepts.add(ConceptName(raw))
            if raw in osig.role_names:
                roles.add(RoleName(raw))
            if raw not in osig.concept_names and raw not in osig.role_names:
                concepts.add(ConceptName(raw))
    return Signature(frozenset(concepts), frozenset(roles))


def generate_proof(project: Project, request: dict) -> dict:
    goal_text = request.get("goal")
    if not goal_text:
        raise ApiError(400, {"error": "BadRequest", "message": "goal is required"})
    try:
        goal = parse_axiom(goal_text)
    except ParseError as exc:
        raise ApiError(400, {
            "error": "SyntaxError", "message": exc.message,
            "line": exc.line, "col": exc.col, "expected": exc.expected,
        }) from None

    method = request.get("method", ELK_MINIMAL)
    measure_name = request.get("measure", "size")
    if measure_name not in MEASURES:
        raise ApiError(400, {"error": "BadRequest",
                             "message": f"unknown measure {measure_name!r}"})
    known = _parse_known_signature(request.get("knownSignature"), project.ontology)
    budget_ms = request.get("budgetMs", 300_000)

    if method == ELK_MINIMAL:
        if project.ontology.fragment() != Fragment.ELH:
            raise ApiError(422, {
                "error": "FragmentError",
                "message": "elk-minimal needs an ELH ontology"})
        structure = _saturation(project)
        try:
            proof = extract_optimal_proof(structure, goal,
                                          MEASURES[measure_name], known=known)
        except NotDerivableError as exc:
            raise ApiError(409, {"error": "NotEntailed", "message": str(exc)}) from None
    elif method in FBP_METHODS:
        if not (hasattr(goal, "is_atomic_ci") and goal.is_atomic_ci):
            raise ApiError(422, {
                "error": "MethodMismatch",
                "message": "forgetting-based methods need an atomic concept "
                           "inclusion goal"})
        task = fbp.FbpTask(project.ontology, goal, method=method,
                           overall_budget_ms=budget_ms)
        try:
            proof, _trace = fbp.generate(task)
        except NotEntailedError as exc:
            raise ApiError(409, {"error": "NotEntailed", "message": str(exc)}) from None
        except BudgetExceededError as exc:
            raise ApiError(504, {"error": "BudgetExceeded", "message": str(exc)}) from None
        except (NoProofWithinBoundError, ResourceExhaustedError) as exc:
            raise ApiError(422, {"error": "NoProof", "message": str(exc)}) from None
        if known:
            proof = condense_by_signature(proof, known)
    else:
        raise ApiError(422, {"error": "MethodMismatch",
                             "message": f"unknown method {method!r}"})

    coverage = 100.0 * signature_coverage(proof, known) if known else 0.0
    with project.lock:
        project.proof_counter += 1
        pid = f"proof{project.proof_counter}"
        record = proof_to_json(proof, pid, method, coverage_pct=coverage,
                               known=known if known else None)
        data = proof_json_bytes(record)
        project.proofs[pid] = (record, data)
    return record


def get_proof_bytes(project: Project, proof_id: str) -> bytes:
    with project.lock:
        entry = project.proofs.get(proof_id)
    if entry is None:
        raise ApiError(404, {"error": "UnknownProof", "id": proof_id})
    return entry[1]


def rule_card(rule_id: str) -> dict:
    rule = rules.rule_by_id(rule_id)
    if rule is None:
        raise ApiError(404, {"error": "UnknownRule", "id": rule_id})
    return {
        "displayName": rule.display_name,
        "description": rule.description,
        "schematicPremises": list(rule.schematic_premises),
        "schematicConclusion": rule.schematic_conclusion,
    }


# --- HTTP plumbing -----------------------------------------------------------


_ROUTES = [
    ("POST", re.compile(r"^/api/projects$"), "create_project"),
    ("GET", re.compile(r"^/api/projects/([^/]+)/entailments$"), "entailments"),
    ("POST", re.compile(r"^/api/projects/([^/]+)/proofs$"), "new_proof"),
    ("GET", re.compile(r"^/api/projects/([^/]+)/proofs/([^/]+)$"), "get_proof"),
    ("GET", re.compile(r"^/api/rules/([^/]+)$"), "rule"),
]

_CONTENT_TYPES = {
    ".html": "text/html", ".js": "application/javascript",
    ".css": "text/css", ".json": "application/json",
    ".svg": "image/svg+xml", ".png": "image/png", ".ico": "image/x-icon",
}


def make_handler(store: ProjectStore, static_dir=None):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):
            pass

        def _send(self, status, data: bytes, content_type="application/json"):
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def _send_json(self, status, payload):
            self._send(status, json.dumps(payload, sort_keys=True).encode("utf-8"))

        def _body(self):
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            try:
                return json.loads(raw.decode("utf-8"))
            except (ValueError, UnicodeDecodeError):
                raise ApiError(400, {"error": "BadRequest",
                                     "message": "body is not valid JSON"}) from None

        def _dispatch(self, verb):
            for (method, pattern, name) in _ROUTES:
                if method != verb:
                    continue
                m = pattern.match(self.path)
                if m:
                    try:
                        getattr(self, name)(*m.groups())
                    except ApiError as exc:
                        self._send_json(exc.status, exc.payload)
                    except DlProofError as exc:
                        self._send_json(500, {"error": type(exc).__name__,
                                              "message": str(exc)})
                    return
            if verb == "GET" and static_dir is not None:
                self._static()
                return
            self._send_json(404, {"error": "NotFound", "path": self.path})

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        def create_project(self):
            body = self._body()
            project = store.create(body.get("name", ""), body.get("ontologyText", ""))
            self._send_json(201, project_summary(project))

        def entailments(self, project_id):
            project = store.get(project_id)
            self._send_json(200, list_entailments(project))

        def new_proof(self, project_id):
            project = store.get(project_id)
            record = generate_proof(project, self._body())
            self._send_json(201, record)

        def get_proof(self, project_id, proof_id):
            project = store.get(project_id)
            self._send(200, get_proof_bytes(project, proof_id))

        def rule(self, rule_id):
            self._send_json(200, rule_card(rule_id))

        def _static(self):
            root = Path(static_dir).resolve()
            rel = self.path.lstrip("/") or "index.html"
            target = (root / rel).resolve()
            if root not in target.parents and target != root:
                self._send_json(404, {"error": "NotFound", "path": self.path})
                return
            if target.is_dir():
                target = target / "index.html"
            if not target.is_file():
                self._send_json(404, {"error": "NotFound", "path": self.path})
                return
            ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
            self._send(200, target.read_bytes(), content_type=ctype)

    return Handler


def make_server(port: int = 0, static_dir=None, store: ProjectStore = None):
    store = store if store is not None else ProjectStore()
    handler = make_handler(store, static_dir=static_dir)
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.store = store
    return server


def serve(port: int, static_dir=None):
    server = make_server(port=port, static_dir=static_dir)
    host, actual_port = server.server_address
    print(f"serving on http://{host}:{actual_port}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return server
