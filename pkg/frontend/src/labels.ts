/**
 * Axiom label shortening: fixed-width truncation or abbreviating names to
 * their capital letters, with per-node restore to the full label.
 */

import { LabelMode } from "./viewstate.js";

// display tokenization only: the dot separating a role from its filler
// must split tokens, even though names may legally contain dots
const NAME_TOKEN = /[A-Za-z_][A-Za-z0-9_-]*/g;
const FIXED_WIDTH = 24;

export function abbreviateName(name: string): string {
  const capitals = name.match(/[A-Z]/g);
  if (capitals && capitals.length >= 2) {
    return capitals.join("");
  }
  return name;
}

export function displayLabel(pretty: string, mode: LabelMode,
                             override?: LabelMode): string {
  const effective = override ?? mode;
  if (effective === "full") {
    return pretty;
  }
  if (effective === "initials") {
    return pretty.replace(NAME_TOKEN, (token) => abbreviateName(token));
  }
  if (pretty.length <= FIXED_WIDTH) {
    return pretty;
  }
  return pretty.slice(0, FIXED_WIDTH - 1) + "…";
}
