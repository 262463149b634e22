/** Thin typed client for the proof service REST API. */

import { ProofDoc } from "./proof.js";
import { RuleCard } from "./rulecards.js";

export interface ProjectSummary {
  id: string;
  name: string;
  fragment: "ELH" | "ALCH" | "OTHER";
  axiomCount: number;
}

export interface EntailmentDoc {
  functional: string;
  pretty: string;
}

export interface ProofRequest {
  goal: string;
  method: "elk-minimal" | "heur" | "symb" | "size" | "size-weighted";
  measure?: "size" | "depth" | "weighted";
  knownSignature?: string[];
  budgetMs?: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly payload: unknown) {
    super(`API error ${status}`);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, body);
  }
  return body as T;
}

export function createProject(name: string, ontologyText: string): Promise<ProjectSummary> {
  return request("/api/projects", {
    method: "POST",
    body: JSON.stringify({ name, ontologyText }),
  });
}

export function listEntailments(projectId: string): Promise<EntailmentDoc[]> {
  return request(`/api/projects/${projectId}/entailments`);
}

export function generateProof(projectId: string, req: ProofRequest): Promise<ProofDoc> {
  return request(`/api/projects/${projectId}/proofs`, {
    method: "POST",
    body: JSON.stringify(req),
  });
}

export function getProof(projectId: string, proofId: string): Promise<ProofDoc> {
  return request(`/api/projects/${projectId}/proofs/${proofId}`);
}

export function getRule(ruleId: string): Promise<RuleCard> {
  return request(`/api/rules/${encodeURIComponent(ruleId)}`);
}
