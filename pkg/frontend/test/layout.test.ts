import { describe, expect, it } from "vitest";

import { orderCost, renderScene, verticalOrder } from "../src/layout.js";
import { ProofIndex } from "../src/proof.js";
import { initialState, pull, showAll, shownInferences } from "../src/viewstate.js";
import { loadFixture, singleNodeDoc } from "./helpers.js";

describe("tree layout", () => {
  it("shows axiom and inference vertices for the expanded chain", () => {
    const index = loadFixture("chain-proof.json");
    const state = initialState(index, "tree");
    const scene = renderScene(index, state);
    expect(scene.nodes.filter((n) => n.type === "axiom")).toHaveLength(3);
    expect(scene.nodes.filter((n) => n.type === "inference")).toHaveLength(1);
    expect(scene.nodes.filter((n) => n.type === "magic")).toHaveLength(0);
    const kinds = new Map(scene.nodes
      .filter((n) => n.type === "axiom").map((n) => [n.id, n.kind]));
    expect(kinds.get(index.rootId)).toBe("conclusion");
  });

  it("renders a single marked node without edges for a known proof", () => {
    const index = new ProofIndex(singleNodeDoc());
    const scene = renderScene(index, initialState(index, "tree"));
    expect(scene.nodes).toHaveLength(1);
    expect(scene.nodes[0].kind).toBe("known");
    expect(scene.edges).toHaveLength(0);
  });

  it("is a pure function of proof and state", () => {
    const index = loadFixture("gland-proof.json");
    const state = initialState(index, "tree");
    expect(renderScene(index, state)).toEqual(renderScene(index, state));
  });
});

describe("bidirectional layout", () => {
  it("starts as one magic vertex linking leaves to the conclusion", () => {
    const index = loadFixture("chain-proof.json");
    const state = initialState(index, "bidirectional");
    const scene = renderScene(index, state);
    const magic = scene.nodes.filter((n) => n.type === "magic");
    expect(magic).toHaveLength(1);
    const magicEdges = scene.edges.filter((e) => e.type === "magic");
    // two leaf-to-magic edges plus magic-to-conclusion
    expect(magicEdges).toHaveLength(3);
    expect(scene.nodes.filter((n) => n.type === "inference")).toHaveLength(0);
  });

  it("pulling down on the root reveals the final inference", () => {
    const index = loadFixture("gland-proof.json");
    const state = pull(index, initialState(index, "bidirectional"),
                       index.rootId, "down");
    const scene = renderScene(index, state);
    expect(scene.nodes.filter((n) => n.type === "inference")).toHaveLength(1);
    expect(shownInferences(index, state)).toHaveLength(1);
  });
});

describe("vertical layout", () => {
  it("stacks axioms without inference vertices and uses side edges", () => {
    const index = loadFixture("gland-proof.json");
    const state = initialState(index, "vertical");
    const scene = renderScene(index, state);
    expect(scene.nodes.every((n) => n.type === "axiom")).toBe(true);
    expect(scene.edges.every((e) => e.type === "side" || e.type === "magic")).toBe(true);
    const xs = new Set(scene.nodes.map((n) => n.x));
    expect(xs.size).toBe(1);
  });

  it("reordering does not increase the premise distance cost", () => {
    const index = loadFixture("gland-proof.json");
    const state = showAll(index, initialState(index, "vertical"));
    const structure = {
      children: new Map(
        shownInferences(index, state)
          .map((inf) => [inf.conclusion, { premises: inf.premises }]),
      ),
    };
    const improved = verticalOrder(index, state);
    // depth-first baseline: premises directly before their conclusion
    const dfs: string[] = [];
    const walk = (id: string) => {
      const inf = index.concluding.get(id);
      if (inf) for (const p of inf.premises) walk(p);
      dfs.push(id);
    };
    walk(index.rootId);
    expect(orderCost(improved, structure)).toBeLessThanOrEqual(
      orderCost(dfs, structure));
    expect(verticalOrder(index, state)).toEqual(improved);
  });
});
