import fs from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { ProofDoc, ProofIndex } from "../src/proof.js";
import { ViewState } from "../src/viewstate.js";

const here = path.dirname(fileURLToPath(import.meta.url));

export function loadFixture(name: string): ProofIndex {
  const raw = fs.readFileSync(path.join(here, "fixtures", name), "utf-8");
  return new ProofIndex(JSON.parse(raw) as ProofDoc);
}

export const FIXTURES = ["chain-proof.json", "gland-proof.json", "forget-proof.json"];

export function stateFingerprint(state: ViewState): string {
  return JSON.stringify({
    visible: [...state.visible].sort(),
    hiddenSteps: [...state.hiddenSteps].sort(),
    magic: state.magicGroups,
  });
}

export function singleNodeDoc(): ProofDoc {
  return {
    id: "single",
    goal: "SubClassOf(A B)",
    method: "elk-minimal",
    measures: { treeSize: 1, depth: 0, weightedSize: 3 },
    coveragePct: 100.0,
    nodes: [{ id: "n0", axiom: "SubClassOf(A B)", pretty: "A ⊑ B", kind: "known" }],
    inferences: [],
  };
}
