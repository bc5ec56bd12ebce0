// @vitest-environment jsdom
import { describe, expect, it } from "vitest";

import { bezierDots, cssColour, layoutDots, renderCurveView } from "../src/curve.js";
import type { CurveSpec } from "../src/types.js";

// Fixtures pinned to the service's curve contract: dot count round(5 + 45s),
// colour (139,0,0) -> (255,255,0) in energy, control point (0.5, direction).
const FIXTURES: Array<{ label: string; spec: CurveSpec }> = [
  {
    label: "slow gentle midline",
    spec: {
      dotCount: 5,
      dotColour: [139, 0, 0],
      controlPoint: [0.5, 0.5],
      dots: bezierDots(0.5, 5),
    },
  },
  {
    label: "fast strong midline",
    spec: {
      dotCount: 50,
      dotColour: [255, 255, 0],
      controlPoint: [0.5, 0.5],
      dots: bezierDots(0.5, 50),
    },
  },
  {
    label: "halfway rounded",
    spec: {
      dotCount: 28,
      dotColour: [197, 128, 0],
      controlPoint: [0.5, 0.0],
      dots: bezierDots(0.0, 28),
    },
  },
];

describe("bezierDots", () => {
  it("starts at (0, 0) and ends at (1, 0)", () => {
    const dots = bezierDots(0.7, 12);
    expect(dots[0]).toEqual([0, 0]);
    expect(dots[dots.length - 1]).toEqual([1, 0]);
  });

  it("peaks at half the control height at the midpoint", () => {
    const dots = bezierDots(0.8, 21);
    const [x, y] = dots[10];
    expect(x).toBeCloseTo(0.5, 12);
    expect(y).toBeCloseTo(0.4, 12);
  });

  it("matches the quadratic formula at every parameter", () => {
    const controlY = 0.35;
    const count = 17;
    const dots = bezierDots(controlY, count);
    for (let i = 0; i < count; i++) {
      const t = i / (count - 1);
      expect(dots[i][0]).toBeCloseTo(2 * (1 - t) * t * 0.5 + t * t, 12);
      expect(dots[i][1]).toBeCloseTo(2 * (1 - t) * t * controlY, 12);
    }
  });
});

describe("renderCurveView", () => {
  it.each(FIXTURES)("draws exactly the service's dots: $label", ({ spec }) => {
    const container = document.createElement("div");
    const svg = renderCurveView(container, spec);
    const circles = svg.querySelectorAll("circle");
    expect(circles.length).toBe(spec.dotCount);
    const layout = layoutDots(spec, 360, 220);
    circles.forEach((circle, i) => {
      expect(Number(circle.getAttribute("cx"))).toBeCloseTo(layout[i].cx, 3);
      expect(Number(circle.getAttribute("cy"))).toBeCloseTo(layout[i].cy, 3);
      expect(circle.getAttribute("fill")).toBe(cssColour(spec.dotColour));
    });
  });

  it("replaces previous renders instead of stacking them", () => {
    const container = document.createElement("div");
    renderCurveView(container, FIXTURES[0].spec);
    renderCurveView(container, FIXTURES[1].spec);
    expect(container.querySelectorAll("svg").length).toBe(1);
    expect(container.querySelectorAll("circle").length).toBe(50);
  });
});
