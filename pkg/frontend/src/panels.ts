// Belief dashboard panels. Everything rendered here comes verbatim from the
// service's beliefs/history payloads; the UI adds no interpretation.

import type { BeliefsPayload, HistoryPayload, SituationPayload } from "./types.js";
import { cssColour } from "./curve.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderSituation(container: HTMLElement, situation: SituationPayload): void {
  container.replaceChildren();
  const swatch = el("div", "situation-swatch");
  swatch.classList.add(`shape-${situation.shape}`);
  swatch.style.background = cssColour(situation.rgb);
  swatch.dataset.shape = situation.shape;
  const label = el("div", "situation-label", `${situation.shape} rgb(${situation.rgb.join(", ")})`);
  container.append(swatch, label);
}

export function renderRuleTable(container: HTMLElement, beliefs: BeliefsPayload): void {
  container.replaceChildren();
  const table = el("table", "rule-table");
  const head = el("tr");
  for (const title of ["rule", "belief", "evidence"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const rule of beliefs.rules) {
    const row = el("tr", "rule-row");
    row.dataset.rule = rule.rule;
    row.dataset.confirmed = String(rule.confirmed);
    row.appendChild(el("td", "rule-name", rule.rule));
    const beliefCell = el("td", "rule-belief", rule.belief.toFixed(3));
    if (rule.confirmed) beliefCell.classList.add("confirmed");
    row.appendChild(beliefCell);
    const bar = el("td", "rule-evidence");
    const alpha = el("span", "alpha-bar");
    alpha.style.width = `${Math.min(100, rule.alpha * 10)}px`;
    alpha.title = `alpha ${rule.alpha.toFixed(2)}`;
    const beta = el("span", "beta-bar");
    beta.style.width = `${Math.min(100, rule.beta * 10)}px`;
    beta.title = `beta ${rule.beta.toFixed(2)}`;
    bar.append(alpha, beta);
    row.appendChild(bar);
    table.appendChild(row);
  }
  container.appendChild(table);
}

export function renderColourPanel(container: HTMLElement, beliefs: BeliefsPayload): void {
  container.replaceChildren();
  for (const colour of beliefs.colours) {
    const chip = el("span", "colour-chip", `${colour.name} (${colour.exemplars})`);
    chip.dataset.colour = colour.name;
    container.appendChild(chip);
  }
}

export function renderAdverbPanel(container: HTMLElement, beliefs: BeliefsPayload): void {
  container.replaceChildren();
  for (const adverb of beliefs.adverbs) {
    const row = el("div", "adverb-row");
    row.dataset.adverb = adverb.name;
    row.appendChild(
      el(
        "span",
        "adverb-label",
        `${adverb.name} on ${adverb.dimension} (+${adverb.positives}/-${adverb.negatives})`,
      ),
    );
    // Interval plot: mu +/- sigma on a [0, 1] strip.
    const strip = el("span", "adverb-strip");
    const band = el("span", "adverb-band");
    const low = Math.max(0, adverb.mu - adverb.sigma);
    const high = Math.min(1, adverb.mu + adverb.sigma);
    band.style.left = `${(low * 100).toFixed(1)}%`;
    band.style.width = `${((high - low) * 100).toFixed(1)}%`;
    const mark = el("span", "adverb-mu");
    mark.style.left = `${(adverb.mu * 100).toFixed(1)}%`;
    strip.append(band, mark);
    row.appendChild(strip);
    container.appendChild(row);
  }
}

export function renderNetPanel(container: HTMLElement, beliefs: BeliefsPayload): void {
  container.replaceChildren();
  const nodes = el("div", "net-nodes");
  for (const node of beliefs.net.nodes) {
    const chip = el("span", `net-node net-${node.kind}`, node.id);
    chip.dataset.node = node.id;
    nodes.appendChild(chip);
  }
  const edges = el("div", "net-edges");
  for (const edge of beliefs.net.edges) {
    edges.appendChild(el("span", "net-edge", `${edge.from} → ${edge.to}`));
  }
  container.append(nodes, edges);
}

export function renderRegretSparkline(container: HTMLElement, history: HistoryPayload): void {
  container.replaceChildren();
  const values = history.steps.map((s) => s.cumulativeRegret);
  const svgNs = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNs, "svg");
  const width = 240;
  const height = 48;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "regret-sparkline");
  if (values.length > 0) {
    const max = Math.max(1, ...values);
    const points = values
      .map((v, i) => {
        const x = values.length === 1 ? 0 : (i / (values.length - 1)) * width;
        const y = height - (v / max) * (height - 4) - 2;
        return `${x.toFixed(1)},${y.toFixed(1)}`;
      })
      .join(" ");
    const line = document.createElementNS(svgNs, "polyline");
    line.setAttribute("points", points);
    line.setAttribute("fill", "none");
    line.setAttribute("stroke", "#b33");
    svg.appendChild(line);
  }
  const label = el("span", "regret-label", `regret ${history.cumulativeRegret}`);
  container.append(svg, label);
}
