/**
 * Browser entry point: wires the pure view-state machine and layouts to an
 * SVG rendering, with a minimap, zooming, panning, label controls and rule
 * explanation cards. All state transitions go through viewstate.ts.
 */

import { createProject, generateProof, getRule, listEntailments } from "./api.js";
import { renderScene, Scene } from "./layout.js";
import { ProofDoc, ProofIndex } from "./proof.js";
import { explainInference, fallbackCard } from "./rulecards.js";
import {
  IDENTITY_TRANSFORM, Layout, ViewState, hideSubproof, initialState, panBy,
  pull, push, restoreLabel, setLabelMode, showSubproof, zoomBy,
} from "./viewstate.js";

const COLORS: Record<string, string> = {
  asserted: "#7cb342",
  inferred: "#42a5f5",
  conclusion: "#ab47bc",
  known: "#bdbdbd",
};

const SVG_NS = "http://www.w3.org/2000/svg";

interface App {
  projectId?: string;
  index?: ProofIndex;
  state?: ViewState;
}

const app: App = {};

function el<K extends keyof HTMLElementTagNameMap>(tag: K, attrs: Record<string, string> = {},
                                                   text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

function byId(id: string): HTMLElement {
  return document.getElementById(id)!;
}

async function onCreateProject() {
  const name = (byId("project-name") as HTMLInputElement).value || "project";
  const text = (byId("ontology-text") as HTMLTextAreaElement).value;
  try {
    const summary = await createProject(name, text);
    app.projectId = summary.id;
    byId("project-info").textContent =
      `${summary.id}: ${summary.fragment}, ${summary.axiomCount} axioms`;
    const goals = summary.fragment === "ELH"
      ? await listEntailments(summary.id) : [];
    const select = byId("goal-select") as HTMLSelectElement;
    select.innerHTML = "";
    for (const g of goals) {
      const option = el("option", { value: g.functional });
      option.textContent = g.pretty;
      select.appendChild(option);
    }
  } catch (err) {
    byId("project-info").textContent = String((err as Error).message ?? err);
  }
}

async function onGenerateProof() {
  if (!app.projectId) return;
  const select = byId("goal-select") as HTMLSelectElement;
  const manual = (byId("goal-manual") as HTMLInputElement).value.trim();
  const goal = manual || select.value;
  const method = (byId("method-select") as HTMLSelectElement).value as
    "elk-minimal" | "heur" | "symb" | "size" | "size-weighted";
  const measure = (byId("measure-select") as HTMLSelectElement).value as
    "size" | "depth" | "weighted";
  const known = (byId("known-signature") as HTMLInputElement).value
    .split(/[\s,]+/).filter(Boolean);
  try {
    const doc: ProofDoc = await generateProof(app.projectId, {
      goal, method, measure, knownSignature: known,
    });
    app.index = new ProofIndex(doc);
    const layout = (byId("layout-select") as HTMLSelectElement).value as Layout;
    app.state = initialState(app.index, layout);
    byId("proof-info").textContent =
      `size ${doc.measures.treeSize}, depth ${doc.measures.depth}, ` +
      `weighted ${doc.measures.weightedSize}, coverage ${doc.coveragePct.toFixed(1)}%`;
    draw();
  } catch (err) {
    byId("proof-info").textContent = String((err as Error).message ?? err);
  }
}

function transition(next: ViewState | undefined) {
  if (!next || !app.index) return;
  app.state = next;
  draw();
}

function nodeButtons(group: SVGElement, nodeId: string, x: number, y: number) {
  const state = app.state!;
  const index = app.index!;
  const mk = (label: string, dx: number, dy: number, handler: () => void) => {
    const btn = svgEl("text", {
      x: x + dx, y: y + dy, class: "gesture", "font-size": 12,
    });
    btn.textContent = label;
    btn.addEventListener("click", (ev) => {
      ev.stopPropagation();
      handler();
    });
    group.appendChild(btn);
  };
  if (state.layout === "bidirectional") {
    mk("▴", 62, -12, () => transition(pull(index, state, nodeId, "up")));
    mk("▾", 62, 2, () => transition(push(index, state, nodeId, "up")));
    mk("▴", 74, -12, () => transition(push(index, state, nodeId, "down")));
    mk("▾", 74, 2, () => transition(pull(index, state, nodeId, "down")));
  } else if (state.layout === "tree") {
    mk("−", 62, -12, () => transition(hideSubproof(index, state, nodeId)));
    mk("+", 74, -12, () => transition(showSubproof(index, state, nodeId)));
  }
}

function draw() {
  if (!app.index || !app.state) return;
  const scene = renderScene(app.index, app.state);
  drawScene(byId("canvas") as unknown as SVGSVGElement, scene, true);
  drawScene(byId("minimap") as unknown as SVGSVGElement, scene, false);
}

function drawScene(svg: SVGSVGElement, scene: Scene, interactive: boolean) {
  svg.innerHTML = "";
  const state = app.state!;
  const root = svgEl("g", interactive ? {
    transform: `translate(${state.transform.panX},${state.transform.panY}) ` +
      `scale(${state.transform.zoom})`,
  } : {
    transform: `scale(${Math.min(1, 160 / Math.max(scene.width, scene.height, 1))})`,
  });
  svg.appendChild(root);
  const positions = new Map(scene.nodes.map((n) => [n.id, n]));
  for (const edge of scene.edges) {
    const from = positions.get(edge.from)!;
    const to = positions.get(edge.to)!;
    root.appendChild(svgEl("line", {
      x1: from.x + 60, y1: from.y + 16, x2: to.x + 60, y2: to.y + 16,
      class: `edge edge-${edge.type}`,
    }));
  }
  for (const node of scene.nodes) {
    const group = svgEl("g", { class: `node node-${node.type}` });
    if (node.type === "axiom") {
      group.appendChild(svgEl("rect", {
        x: node.x, y: node.y, rx: 6, width: 120, height: 32,
        fill: COLORS[node.kind ?? "inferred"] ?? "#90a4ae",
      }));
    } else if (node.type === "inference") {
      group.appendChild(svgEl("rect", {
        x: node.x + 20, y: node.y + 4, rx: 12, width: 80, height: 24,
        fill: "#9e9e9e",
      }));
    } else {
      group.appendChild(svgEl("rect", {
        x: node.x + 30, y: node.y + 4, rx: 12, width: 60, height: 24,
        fill: "#616161",
      }));
    }
    const text = svgEl("text", {
      x: node.x + 60, y: node.y + 24, "text-anchor": "middle", "font-size": 13,
    });
    text.textContent = node.label;
    group.appendChild(text);
    if (interactive) {
      if (node.type === "axiom") {
        nodeButtons(group, node.id, node.x, node.y + 16);
        group.addEventListener("dblclick", () =>
          transition(restoreLabel(app.state!, node.id)));
      }
      if (node.type === "inference") {
        group.addEventListener("click", () => showRuleCard(node.id));
      }
    }
    root.appendChild(group);
  }
}

async function showRuleCard(inferenceId: string) {
  const index = app.index!;
  const inf = index.inferenceById.get(inferenceId);
  if (!inf) return;
  let card;
  try {
    card = await getRule(inf.rule);
  } catch {
    card = fallbackCard(inf.rule);
  }
  const full = explainInference(index, inferenceId, card)!;
  const panel = byId("rule-card");
  panel.innerHTML = "";
  panel.appendChild(el("h3", {}, full.displayName));
  panel.appendChild(el("p", {}, full.description));
  panel.appendChild(el("p", {},
    `${full.schematicPremises.join(", ")} ⊢ ${full.schematicConclusion}`));
  const list = el("ul", {});
  for (const p of full.premises) list.appendChild(el("li", {}, p));
  panel.appendChild(list);
  panel.appendChild(el("p", {}, `⊢ ${full.conclusion}`));
}

function wireControls() {
  byId("create-project").addEventListener("click", onCreateProject);
  byId("generate-proof").addEventListener("click", onGenerateProof);
  byId("layout-select").addEventListener("change", () => {
    if (!app.index) return;
    const layout = (byId("layout-select") as HTMLSelectElement).value as Layout;
    app.state = initialState(app.index, layout);
    draw();
  });
  byId("label-select").addEventListener("change", () => {
    if (!app.state) return;
    const mode = (byId("label-select") as HTMLSelectElement).value as
      "full" | "fixedWidth" | "initials";
    transition(setLabelMode(app.state, mode));
  });
  byId("zoom-in").addEventListener("click", () => {
    if (!app.state) return;
    transition({ ...app.state, transform: zoomBy(app.state.transform, 1.25) });
  });
  byId("zoom-out").addEventListener("click", () => {
    if (!app.state) return;
    transition({ ...app.state, transform: zoomBy(app.state.transform, 0.8) });
  });
  byId("reset-view").addEventListener("click", () => {
    if (!app.state) return;
    transition({ ...app.state, transform: IDENTITY_TRANSFORM });
  });
  let dragging = false;
  let last = { x: 0, y: 0 };
  const canvas = byId("canvas");
  canvas.addEventListener("mousedown", (ev) => {
    dragging = true;
    last = { x: ev.clientX, y: ev.clientY };
  });
  window.addEventListener("mouseup", () => { dragging = false; });
  window.addEventListener("mousemove", (ev) => {
    if (!dragging || !app.state) return;
    const dx = ev.clientX - last.x;
    const dy = ev.clientY - last.y;
    last = { x: ev.clientX, y: ev.clientY };
    transition({ ...app.state, transform: panBy(app.state.transform, dx, dy) });
  });
}

if (typeof document !== "undefined") {
  wireControls();
}
