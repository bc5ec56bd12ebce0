// Behaviour-curve view: draws exactly the dots the service specifies.

import type { CurveSpec } from "./types.js";

/** Quadratic Bezier from (0,0) to (1,0) through (0.5, controlY). */
export function bezierDots(controlY: number, count: number): Array<[number, number]> {
  const dots: Array<[number, number]> = [];
  for (let i = 0; i < count; i++) {
    const t = count === 1 ? 0 : i / (count - 1);
    const x = 2 * (1 - t) * t * 0.5 + t * t;
    const y = 2 * (1 - t) * t * controlY;
    dots.push([x, y]);
  }
  return dots;
}

export function cssColour([r, g, b]: [number, number, number]): string {
  return `rgb(${r}, ${g}, ${b})`;
}

export interface DrawnDot {
  cx: number;
  cy: number;
  fill: string;
}

/**
 * Lay out the spec's dots in a width x height viewport with the given
 * margin. The y axis is flipped so direction 1 bows the curve upward.
 */
export function layoutDots(
  spec: CurveSpec,
  width: number,
  height: number,
  margin = 16,
): DrawnDot[] {
  const spanX = width - 2 * margin;
  const spanY = height - 2 * margin;
  const fill = cssColour(spec.dotColour);
  return spec.dots.map(([x, y]) => ({
    cx: margin + x * spanX,
    cy: height - margin - y * spanY,
    fill,
  }));
}

const SVG_NS = "http://www.w3.org/2000/svg";

/** Render the curve into a container as an SVG of dotCount circles. */
export function renderCurveView(container: HTMLElement, spec: CurveSpec): SVGSVGElement {
  const width = 360;
  const height = 220;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "curve-view");
  for (const dot of layoutDots(spec, width, height)) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", dot.cx.toFixed(3));
    circle.setAttribute("cy", dot.cy.toFixed(3));
    circle.setAttribute("r", "4");
    circle.setAttribute("fill", dot.fill);
    svg.appendChild(circle);
  }
  container.replaceChildren(svg);
  return svg;
}
