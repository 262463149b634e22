/**
 * Pure view-state machine for proof exploration.
 *
 * The primitive state is the set of collapsed (hidden) inferences; node
 * visibility is derived from it: the root is always visible, leaves are
 * pinned in the bidirectional layout, and every premise or conclusion of
 * a revealed inference is visible. Magic groups aggregate each maximal
 * hidden region under a visible conclusion into one vertex that links the
 * conclusion straight to its visible frontier.
 *
 * Pull reveals exactly one inference, push collapses exactly one, guarded
 * so the clicked node stays visible afterwards; the two gestures are
 * exact inverses wherever both are defined, and undefined gestures return
 * the state unchanged.
 */

import { InferenceDoc, ProofIndex } from "./proof.js";

export type Layout = "tree" | "vertical" | "bidirectional";
export type LabelMode = "full" | "fixedWidth" | "initials";
export type Direction = "up" | "down";

export interface MagicGroup {
  conclusionId: string;
  leafIds: string[];
  hiddenIds: string[];
}

export interface Transform {
  zoom: number;
  panX: number;
  panY: number;
}

export interface ViewState {
  layout: Layout;
  visible: ReadonlySet<string>;
  hiddenSteps: ReadonlySet<string>;
  magicGroups: MagicGroup[];
  labelMode: LabelMode;
  labelOverrides: ReadonlyMap<string, LabelMode>;
  transform: Transform;
}

export const IDENTITY_TRANSFORM: Transform = { zoom: 1, panX: 0, panY: 0 };

export function deriveVisible(
  index: ProofIndex, layout: Layout, hiddenSteps: ReadonlySet<string>,
): Set<string> {
  const visible = new Set<string>([index.rootId]);
  if (layout === "bidirectional") {
    for (const leaf of index.leafIds) visible.add(leaf);
  }
  for (const inf of index.doc.inferences) {
    if (hiddenSteps.has(inf.id)) continue;
    visible.add(inf.conclusion);
    for (const p of inf.premises) visible.add(p);
  }
  return visible;
}

function freeze(index: ProofIndex, state: Omit<ViewState, "magicGroups" | "visible">): ViewState {
  const visible = deriveVisible(index, state.layout, state.hiddenSteps);
  return {
    ...state,
    visible,
    magicGroups: computeMagicGroups(index, visible, state.hiddenSteps),
  };
}

export function initialState(index: ProofIndex, layout: Layout): ViewState {
  const hiddenSteps = layout === "bidirectional"
    ? new Set(index.doc.inferences.map((i) => i.id))
    : new Set<string>();
  return freeze(index, {
    layout, hiddenSteps,
    labelMode: "full", labelOverrides: new Map(),
    transform: IDENTITY_TRANSFORM,
  });
}

function stepFor(index: ProofIndex, nodeId: string, dir: Direction): InferenceDoc | undefined {
  return dir === "down" ? index.concluding.get(nodeId) : index.parentStep.get(nodeId);
}

/** the node stays visible even if the given step is hidden */
function anchoredWithout(
  index: ProofIndex, layout: Layout, hiddenSteps: ReadonlySet<string>,
  nodeId: string, stepId: string,
): boolean {
  if (nodeId === index.rootId) return true;
  if (layout === "bidirectional" && index.isLeaf(nodeId)) return true;
  for (const inf of [index.concluding.get(nodeId), index.parentStep.get(nodeId)]) {
    if (inf && inf.id !== stepId && !hiddenSteps.has(inf.id)) return true;
  }
  return false;
}

export function pull(index: ProofIndex, state: ViewState, nodeId: string, dir: Direction): ViewState {
  if (!state.visible.has(nodeId)) return state;
  const step = stepFor(index, nodeId, dir);
  if (!step || !state.hiddenSteps.has(step.id)) return state;
  const hiddenSteps = new Set(state.hiddenSteps);
  hiddenSteps.delete(step.id);
  return freeze(index, { ...state, hiddenSteps });
}

export function push(index: ProofIndex, state: ViewState, nodeId: string, dir: Direction): ViewState {
  if (!state.visible.has(nodeId)) return state;
  const step = stepFor(index, nodeId, dir);
  if (!step || state.hiddenSteps.has(step.id)) return state;
  if (!anchoredWithout(index, state.layout, state.hiddenSteps, nodeId, step.id)) {
    return state;
  }
  const hiddenSteps = new Set(state.hiddenSteps);
  hiddenSteps.add(step.id);
  return freeze(index, { ...state, hiddenSteps });
}

export function hideSubproof(index: ProofIndex, state: ViewState, nodeId: string): ViewState {
  if (!state.visible.has(nodeId) || !index.concluding.has(nodeId)) return state;
  const hiddenSteps = new Set(state.hiddenSteps);
  hiddenSteps.add(index.concluding.get(nodeId)!.id);
  for (const id of index.descendants(nodeId)) {
    const below = index.concluding.get(id);
    if (below) hiddenSteps.add(below.id);
  }
  return freeze(index, { ...state, hiddenSteps });
}

export function showSubproof(index: ProofIndex, state: ViewState, nodeId: string): ViewState {
  if (!state.visible.has(nodeId) || !index.concluding.has(nodeId)) return state;
  const hiddenSteps = new Set(state.hiddenSteps);
  hiddenSteps.delete(index.concluding.get(nodeId)!.id);
  for (const id of index.descendants(nodeId)) {
    const below = index.concluding.get(id);
    if (below) hiddenSteps.delete(below.id);
  }
  return freeze(index, { ...state, hiddenSteps });
}

export function showAll(index: ProofIndex, state: ViewState): ViewState {
  return freeze(index, { ...state, hiddenSteps: new Set() });
}

export function computeMagicGroups(
  index: ProofIndex,
  visible: ReadonlySet<string>,
  hiddenSteps: ReadonlySet<string>,
): MagicGroup[] {
  const groups: MagicGroup[] = [];
  for (const node of index.doc.nodes) {
    if (!visible.has(node.id)) continue;
    const step = index.concluding.get(node.id);
    if (!step || !hiddenSteps.has(step.id)) continue;
    const leafIds: string[] = [];
    const hiddenIds: string[] = [];
    const walk = (inf: InferenceDoc) => {
      for (const p of inf.premises) {
        if (visible.has(p)) {
          leafIds.push(p);
          continue;
        }
        hiddenIds.push(p);
        const below = index.concluding.get(p);
        if (below) walk(below);
      }
    };
    walk(step);
    groups.push({
      conclusionId: node.id,
      leafIds: [...new Set(leafIds)].sort(),
      hiddenIds: [...new Set(hiddenIds)].sort(),
    });
  }
  groups.sort((a, b) => a.conclusionId.localeCompare(b.conclusionId));
  return groups;
}

export function shownInferences(index: ProofIndex, state: ViewState): InferenceDoc[] {
  return index.doc.inferences.filter((inf) => !state.hiddenSteps.has(inf.id));
}

/**
 * The structural invariant checked after every interaction: the stored
 * visibility matches the derivation from the hidden-step set, the root is
 * visible, every revealed inference has its conclusion and premises
 * visible, magic edges connect visible vertices only, and (in the
 * bidirectional layout) leaves stay pinned and every hidden node belongs
 * to exactly one magic region.
 */
export function closureProblems(index: ProofIndex, state: ViewState): string[] {
  const problems: string[] = [];
  if (!state.visible.has(index.rootId)) problems.push("root hidden");
  const derived = deriveVisible(index, state.layout, state.hiddenSteps);
  if (derived.size !== state.visible.size
    || [...derived].some((id) => !state.visible.has(id))) {
    problems.push("visible set out of sync with hidden steps");
  }
  for (const inf of index.doc.inferences) {
    if (state.hiddenSteps.has(inf.id)) continue;
    if (!state.visible.has(inf.conclusion)) {
      problems.push(`shown inference ${inf.id} with hidden conclusion`);
    }
    for (const p of inf.premises) {
      if (!state.visible.has(p)) {
        problems.push(`shown inference ${inf.id} with hidden premise ${p}`);
      }
    }
  }
  const covered = new Map<string, number>();
  for (const g of state.magicGroups) {
    for (const h of g.hiddenIds) covered.set(h, (covered.get(h) ?? 0) + 1);
    for (const leaf of g.leafIds) {
      if (!state.visible.has(leaf)) problems.push(`magic leaf ${leaf} hidden`);
    }
    if (!state.visible.has(g.conclusionId)) {
      problems.push(`magic conclusion ${g.conclusionId} hidden`);
    }
  }
  for (const n of index.doc.nodes) {
    if (state.visible.has(n.id)) continue;
    const count = covered.get(n.id) ?? 0;
    if (count > 1) problems.push(`hidden node ${n.id} in ${count} magic groups`);
    if (count === 0 && state.layout === "bidirectional") {
      problems.push(`hidden node ${n.id} not in any magic group`);
    }
  }
  if (state.layout === "bidirectional") {
    for (const leaf of index.leafIds) {
      if (!state.visible.has(leaf)) problems.push(`leaf ${leaf} hidden`);
    }
  }
  return problems;
}

// --- zoom / pan / minimap -----------------------------------------------------

export function zoomBy(t: Transform, factor: number): Transform {
  return { ...t, zoom: t.zoom * factor };
}

export function panBy(t: Transform, dx: number, dy: number): Transform {
  return { ...t, panX: t.panX + dx, panY: t.panY + dy };
}

export function setLabelMode(state: ViewState, mode: LabelMode): ViewState {
  return { ...state, labelMode: mode, labelOverrides: new Map() };
}

export function restoreLabel(state: ViewState, nodeId: string): ViewState {
  const overrides = new Map(state.labelOverrides);
  overrides.set(nodeId, "full");
  return { ...state, labelOverrides: overrides };
}

/** viewport rectangle of the main view inside minimap coordinates */
export function minimapViewport(
  t: Transform, viewW: number, viewH: number, sceneW: number, sceneH: number, scale: number,
): { x: number; y: number; w: number; h: number } {
  return {
    x: (-t.panX / t.zoom) * scale,
    y: (-t.panY / t.zoom) * scale,
    w: (viewW / t.zoom) * scale,
    h: (viewH / t.zoom) * scale,
  };
}
