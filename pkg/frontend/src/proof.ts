/**
 * Types for the proof documents served by the back end, plus a tree index.
 *
 * A proof is tree-shaped: every node is the conclusion of at most one
 * inference and the premise of at most one, a single root carries the
 * goal, and leaves are asserted or known axioms.
 */

export type NodeKind = "asserted" | "inferred" | "known" | "conclusion";

export interface ProofNodeDoc {
  id: string;
  axiom: string;
  pretty: string;
  kind: NodeKind;
}

export interface InferenceDoc {
  id: string;
  rule: string;
  premises: string[];
  conclusion: string;
}

export interface ProofDoc {
  id: string;
  goal: string;
  method: string;
  measures: { treeSize: number; depth: number; weightedSize: number };
  coveragePct: number;
  nodes: ProofNodeDoc[];
  inferences: InferenceDoc[];
}

export class ProofIndex {
  readonly doc: ProofDoc;
  readonly nodeById = new Map<string, ProofNodeDoc>();
  readonly inferenceById = new Map<string, InferenceDoc>();
  /** inference concluding a node (absent for leaves) */
  readonly concluding = new Map<string, InferenceDoc>();
  /** inference using a node as premise (absent for the root) */
  readonly parentStep = new Map<string, InferenceDoc>();
  readonly rootId: string;
  readonly leafIds: string[];

  constructor(doc: ProofDoc) {
    this.doc = doc;
    const problems = validateProofDoc(doc);
    if (problems.length) {
      throw new Error(`invalid proof document: ${problems.join("; ")}`);
    }
    for (const n of doc.nodes) this.nodeById.set(n.id, n);
    for (const inf of doc.inferences) {
      this.inferenceById.set(inf.id, inf);
      this.concluding.set(inf.conclusion, inf);
      for (const p of inf.premises) this.parentStep.set(p, inf);
    }
    const roots = doc.nodes.filter((n) => !this.parentStep.has(n.id));
    if (roots.length !== 1) {
      throw new Error(`proof must have exactly one root, found ${roots.length}`);
    }
    this.rootId = roots[0].id;
    this.leafIds = doc.nodes
      .filter((n) => !this.concluding.has(n.id))
      .map((n) => n.id);
  }

  isLeaf(nodeId: string): boolean {
    return !this.concluding.has(nodeId);
  }

  /** all strict descendants (premises, their premises, ...) of a node */
  descendants(nodeId: string): string[] {
    const out: string[] = [];
    const stack = [...(this.concluding.get(nodeId)?.premises ?? [])];
    while (stack.length) {
      const id = stack.pop()!;
      out.push(id);
      const step = this.concluding.get(id);
      if (step) stack.push(...step.premises);
    }
    return out;
  }
}

export function validateProofDoc(doc: ProofDoc): string[] {
  const problems: string[] = [];
  if (!Array.isArray(doc.nodes) || doc.nodes.length === 0) {
    problems.push("no nodes");
    return problems;
  }
  const ids = new Set<string>();
  for (const n of doc.nodes) {
    if (ids.has(n.id)) problems.push(`duplicate node id ${n.id}`);
    ids.add(n.id);
    if (!["asserted", "inferred", "known", "conclusion"].includes(n.kind)) {
      problems.push(`bad kind ${n.kind} on ${n.id}`);
    }
  }
  const concluded = new Set<string>();
  const usedAsPremise = new Set<string>();
  for (const inf of doc.inferences ?? []) {
    if (!ids.has(inf.conclusion)) problems.push(`unknown conclusion ${inf.conclusion}`);
    if (concluded.has(inf.conclusion)) {
      problems.push(`node ${inf.conclusion} concluded twice`);
    }
    concluded.add(inf.conclusion);
    for (const p of inf.premises) {
      if (!ids.has(p)) problems.push(`unknown premise ${p}`);
      if (usedAsPremise.has(p)) problems.push(`node ${p} is premise of two inferences`);
      usedAsPremise.add(p);
    }
  }
  return problems;
}
