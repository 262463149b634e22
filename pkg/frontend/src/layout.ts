/**
 * Scene construction: pure functions from (proof, view state) to a
 * positioned scene graph, one per layout.
 *
 * - tree: axiom vertices with gray inference vertices between premises
 *   and conclusion; collapsed regions appear as magic vertices.
 * - vertical: visible axioms stacked in one column, inferences drawn as
 *   side edges without inference vertices; the order is improved by
 *   adjacent swaps to reduce the total premise/conclusion index distance.
 * - bidirectional: like tree, starting fully collapsed; magic vertices
 *   link conclusions straight to their justification leaves.
 */

import { ProofIndex } from "./proof.js";
import { ViewState, shownInferences } from "./viewstate.js";
import { displayLabel } from "./labels.js";

export type SceneNodeType = "axiom" | "inference" | "magic";

export interface SceneNode {
  id: string;
  type: SceneNodeType;
  label: string;
  kind?: string;        // axiom nodes: asserted | inferred | known | conclusion
  rule?: string;        // inference nodes
  x: number;
  y: number;
}

export interface SceneEdge {
  from: string;
  to: string;
  type: "premise" | "conclusion" | "magic" | "side";
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  width: number;
  height: number;
}

const X_STEP = 180;
const Y_STEP = 90;

export function renderScene(index: ProofIndex, state: ViewState): Scene {
  if (state.layout === "vertical") {
    return verticalScene(index, state);
  }
  return treeScene(index, state);
}

interface VisibleTree {
  children: Map<string, { via: "inference" | "magic"; id: string; premises: string[] }>;
}

function visibleStructure(index: ProofIndex, state: ViewState): VisibleTree {
  const children = new Map<string, { via: "inference" | "magic"; id: string; premises: string[] }>();
  for (const inf of shownInferences(index, state)) {
    children.set(inf.conclusion, { via: "inference", id: inf.id, premises: inf.premises });
  }
  for (const g of state.magicGroups) {
    children.set(g.conclusionId, {
      via: "magic", id: `magic-${g.conclusionId}`, premises: g.leafIds,
    });
  }
  return { children };
}

function label(index: ProofIndex, state: ViewState, nodeId: string): string {
  const node = index.nodeById.get(nodeId)!;
  return displayLabel(node.pretty, state.labelMode, state.labelOverrides.get(nodeId));
}

function treeScene(index: ProofIndex, state: ViewState): Scene {
  const structure = visibleStructure(index, state);
  const nodes: SceneNode[] = [];
  const edges: SceneEdge[] = [];
  let nextLeafX = 0;
  let maxDepth = 0;

  const place = (nodeId: string, depth: number): number => {
    maxDepth = Math.max(maxDepth, depth);
    const entry = structure.children.get(nodeId);
    const doc = index.nodeById.get(nodeId)!;
    let x: number;
    if (!entry || entry.premises.length === 0) {
      x = nextLeafX * X_STEP;
      nextLeafX += 1;
    } else {
      const childXs = entry.premises.map((p) => place(p, depth + 2));
      x = (Math.min(...childXs) + Math.max(...childXs)) / 2;
      const connectorY = (depth + 1) * Y_STEP;
      nodes.push({
        id: entry.id,
        type: entry.via === "magic" ? "magic" : "inference",
        label: entry.via === "magic" ? "…" :
          index.inferenceById.get(entry.id)!.rule,
        rule: entry.via === "magic" ? undefined :
          index.inferenceById.get(entry.id)!.rule,
        x,
        y: connectorY,
      });
      for (const p of entry.premises) {
        edges.push({ from: p, to: entry.id, type: entry.via === "magic" ? "magic" : "premise" });
      }
      edges.push({ from: entry.id, to: nodeId, type: entry.via === "magic" ? "magic" : "conclusion" });
    }
    nodes.push({
      id: nodeId, type: "axiom", label: label(index, state, nodeId),
      kind: doc.kind, x, y: depth * Y_STEP,
    });
    return x;
  };

  place(index.rootId, 0);
  // flip so leaves sit on top and the conclusion at the bottom
  const height = (maxDepth + 1) * Y_STEP;
  for (const n of nodes) n.y = height - Y_STEP - n.y;
  return {
    nodes, edges,
    width: Math.max(1, nextLeafX) * X_STEP,
    height,
  };
}

export function verticalOrder(index: ProofIndex, state: ViewState): string[] {
  const structure = visibleStructure(index, state);
  const order: string[] = [];
  const walk = (nodeId: string) => {
    const entry = structure.children.get(nodeId);
    if (entry) for (const p of entry.premises) walk(p);
    order.push(nodeId);
  };
  walk(index.rootId);
  return improveOrder(order, structure);
}

export function orderCost(
  order: string[],
  structure: { children: Map<string, { premises: string[] }> },
): number {
  const pos = new Map(order.map((id, i) => [id, i]));
  let cost = 0;
  for (const [conclusion, entry] of structure.children) {
    const c = pos.get(conclusion);
    if (c === undefined) continue;
    for (const p of entry.premises) {
      const i = pos.get(p);
      if (i !== undefined) cost += Math.abs(i - c);
    }
  }
  return cost;
}

function improveOrder(order: string[], structure: VisibleTree): string[] {
  const out = [...order];
  let improved = true;
  let best = orderCost(out, structure);
  while (improved) {
    improved = false;
    for (let i = 0; i + 1 < out.length; i++) {
      [out[i], out[i + 1]] = [out[i + 1], out[i]];
      const cost = orderCost(out, structure);
      if (cost < best) {
        best = cost;
        improved = true;
      } else {
        [out[i], out[i + 1]] = [out[i + 1], out[i]];
      }
    }
  }
  return out;
}

function verticalScene(index: ProofIndex, state: ViewState): Scene {
  const structure = visibleStructure(index, state);
  const order = verticalOrder(index, state);
  const nodes: SceneNode[] = order.map((id, i) => ({
    id, type: "axiom" as const,
    label: label(index, state, id),
    kind: index.nodeById.get(id)!.kind,
    x: 0, y: i * Y_STEP,
  }));
  const edges: SceneEdge[] = [];
  for (const [conclusion, entry] of structure.children) {
    for (const p of entry.premises) {
      edges.push({ from: p, to: conclusion, type: entry.via === "magic" ? "magic" : "side" });
    }
  }
  return { nodes, edges, width: X_STEP * 3, height: order.length * Y_STEP };
}
