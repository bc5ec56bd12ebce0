import { describe, expect, it } from "vitest";

import {
  composeFeedback,
  reachableStrings,
  validColourWord,
  type ComposerVocab,
} from "../src/composer.js";

const VOCAB: ComposerVocab = {
  shapes: ["square", "circle", "triangle"],
  adverbs: { slowly: "speed", quickly: "speed", gently: "energy", firmly: "energy" },
  knownColours: ["red"],
};

describe("composeFeedback", () => {
  it("renders assent", () => {
    expect(composeFeedback({ kind: "yes" }, VOCAB)).toBe("yes");
  });

  it("renders a partial correction", () => {
    expect(composeFeedback({ kind: "partial", adverbs: ["quickly"] }, VOCAB)).toBe(
      "no, do it quickly",
    );
  });

  it("renders the canonical full correction", () => {
    expect(
      composeFeedback(
        { kind: "full", colour: "red", shape: "square", adverbs: ["gently", "slowly"] },
        VOCAB,
      ),
    ).toBe("no, when you see red squares do it gently and slowly");
  });

  it("renders colour-only and shape-only bodies", () => {
    expect(
      composeFeedback({ kind: "full", colour: "blue", shape: null, adverbs: ["quickly"] }, VOCAB),
    ).toBe("no, when you see blue things do it quickly");
    expect(
      composeFeedback({ kind: "full", colour: null, shape: "circle", adverbs: ["firmly"] }, VOCAB),
    ).toBe("no, when you see circles do it firmly");
  });

  it("rejects same-dimension adverb pairs", () => {
    expect(() =>
      composeFeedback({ kind: "partial", adverbs: ["slowly", "quickly"] }, VOCAB),
    ).toThrow(/distinct dimensions/);
  });

  it("rejects empty adverb lists and empty bodies", () => {
    expect(() => composeFeedback({ kind: "partial", adverbs: [] }, VOCAB)).toThrow();
    expect(() =>
      composeFeedback({ kind: "full", colour: null, shape: null, adverbs: ["gently"] }, VOCAB),
    ).toThrow(/colour or a shape/);
  });

  it("rejects free text that could not be a colour word", () => {
    expect(validColourWord("teal")).toBe(true);
    for (const bad of ["", "light blue", "Thing5", "and", "things", "no"]) {
      expect(validColourWord(bad)).toBe(false);
    }
  });
});

describe("reachableStrings", () => {
  it("covers assent, partial and full forms", () => {
    const strings = reachableStrings(VOCAB);
    expect(strings).toContain("yes");
    expect(strings).toContain("no, do it gently and quickly");
    expect(strings).toContain("no, when you see red squares do it gently");
    expect(strings).toContain("no, when you see ochre things do it firmly and slowly");
    expect(strings).toContain("no, when you see triangles do it quickly");
  });

  it("never emits duplicate dimensions", () => {
    for (const text of reachableStrings(VOCAB)) {
      expect(text).not.toMatch(/slowly and quickly|quickly and slowly/);
      expect(text).not.toMatch(/gently and firmly|firmly and gently/);
    }
  });
});
