/**
 * Rule explanation cards: fetched from the service, with local fallbacks
 * for the parametric forgetting rule and unknown rule ids.
 */

import { InferenceDoc, ProofIndex } from "./proof.js";

export interface RuleCard {
  displayName: string;
  description: string;
  schematicPremises: string[];
  schematicConclusion: string;
}

export interface InferenceCard extends RuleCard {
  premises: string[];
  conclusion: string;
}

export function fallbackCard(ruleId: string): RuleCard {
  const forget = /^Forget\((.*)\)$/.exec(ruleId);
  if (forget) {
    return {
      displayName: `Forget ${forget[1]}`,
      description: `The conclusion follows from the premises by inferences `
        + `on ${forget[1]}; it no longer mentions ${forget[1]}.`,
      schematicPremises: ["α₁", "…", "αₙ"],
      schematicConclusion: `β without ${forget[1]}`,
    };
  }
  return {
    displayName: ruleId,
    description: "The premises entail the conclusion.",
    schematicPremises: ["α₁", "…", "αₙ"],
    schematicConclusion: "β",
  };
}

export function explainInference(
  index: ProofIndex,
  inferenceId: string,
  ruleCard: RuleCard | null,
): InferenceCard | null {
  const inf: InferenceDoc | undefined = index.inferenceById.get(inferenceId);
  if (!inf) return null;
  const card = ruleCard ?? fallbackCard(inf.rule);
  return {
    ...card,
    premises: inf.premises.map((p) => index.nodeById.get(p)!.pretty),
    conclusion: index.nodeById.get(inf.conclusion)!.pretty,
  };
}
