// Composer-to-service contract: every string the composer can emit must
// parse on the service without error. Each candidate is submitted as real
// feedback to a fresh step of a live session; only parser rejections fail
// the contract.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { reachableStrings, type ComposerVocab } from "../src/composer.js";
import { startService, type RunningService } from "./service.js";

const VOCAB: ComposerVocab = {
  shapes: ["square", "circle", "triangle"],
  adverbs: { slowly: "speed", quickly: "speed", gently: "energy", firmly: "energy" },
  knownColours: ["red", "green", "blue"],
};

let service: RunningService;

beforeAll(async () => {
  service = await startService(8931);
});

afterAll(async () => {
  await service.stop();
});

describe("composer contract", () => {
  it("every reachable string parses on the service", async () => {
    const strings = reachableStrings(VOCAB);
    expect(strings.length).toBeGreaterThan(100);

    const create = await fetch(`${service.baseUrl}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ strategy: "full", mode: "human" }),
    });
    const { id } = (await create.json()) as { id: string };

    const rejected: string[] = [];
    for (const utterance of strings) {
      const step = await fetch(`${service.baseUrl}/sessions/${id}/step`, {
        method: "POST",
      });
      expect(step.status).toBe(200);
      const feedback = await fetch(`${service.baseUrl}/sessions/${id}/feedback`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ utterance }),
      });
      if (feedback.status !== 200) {
        const body = (await feedback.json()) as { detail?: string };
        rejected.push(`${utterance} -> ${feedback.status} ${body.detail ?? ""}`);
      }
    }
    expect(rejected).toEqual([]);
  }, 120000);
});
