// Application controller: wires the session client to the DOM panels.
// The UI is stateless with respect to learning; every render reads the
// service's responses, so a page reload reproduces the identical view.

import { ApiError, SessionClient } from "./api.js";
import { composeFeedback, type ComposerState, type ComposerVocab } from "./composer.js";
import { renderCurveView } from "./curve.js";
import {
  renderAdverbPanel,
  renderColourPanel,
  renderNetPanel,
  renderRegretSparkline,
  renderRuleTable,
  renderSituation,
} from "./panels.js";
import type { BeliefsPayload, StepPayload } from "./types.js";

export interface AppElements {
  situation: HTMLElement;
  curve: HTMLElement;
  rules: HTMLElement;
  colours: HTMLElement;
  adverbs: HTMLElement;
  net: HTMLElement;
  regret: HTMLElement;
  status: HTMLElement;
}

export class AppController {
  readonly client: SessionClient;
  private currentStep: StepPayload | null = null;
  private lastBeliefs: BeliefsPayload | null = null;
  private awaitingFeedback = false;

  constructor(
    baseUrl: string,
    private readonly elements: AppElements,
  ) {
    this.client = new SessionClient(baseUrl);
  }

  get beliefs(): BeliefsPayload | null {
    return this.lastBeliefs;
  }

  get pendingStep(): StepPayload | null {
    return this.awaitingFeedback ? this.currentStep : null;
  }

  async createSession(strategy = "full"): Promise<string> {
    const info = await this.client.createSession(strategy, "human");
    this.setStatus(`session ${info.id.slice(0, 8)} (${info.strategy}, ${info.mode})`);
    await this.refresh();
    return info.id;
  }

  /** Advance to the next situation; the learner acts and shows its curve. */
  async nextStep(): Promise<StepPayload> {
    const payload = await this.client.step();
    this.currentStep = payload;
    this.awaitingFeedback = true;
    renderSituation(this.elements.situation, payload.situation);
    renderCurveView(this.elements.curve, payload.curve);
    this.setStatus(`step ${payload.step}: award feedback`);
    return payload;
  }

  /** Vocabulary the composer may draw from right now. */
  composerVocab(): ComposerVocab {
    const adverbs: Record<string, string> = {};
    for (const entry of this.lastBeliefs?.adverbs ?? []) {
      adverbs[entry.name] = entry.dimension;
    }
    return {
      // Coherent full corrections describe the situation actually shown.
      shapes: this.currentStep ? [this.currentStep.situation.shape] : [],
      adverbs,
      knownColours: (this.lastBeliefs?.colours ?? []).map((c) => c.name),
    };
  }

  /** Compose, send, and re-render; returns the parser diagnostic on 400. */
  async submitFeedback(state: ComposerState): Promise<string | null> {
    let utterance: string;
    try {
      utterance = composeFeedback(state, this.composerVocab());
    } catch (error) {
      const message = error instanceof Error ? error.message : String(error);
      this.setStatus(`cannot compose: ${message}`);
      return message;
    }
    return this.submitUtterance(utterance);
  }

  /** Send a raw utterance string (the composer's output is exactly this). */
  async submitUtterance(utterance: string): Promise<string | null> {
    try {
      const result = await this.client.sendFeedback(utterance);
      this.awaitingFeedback = false;
      this.setStatus(result.corrected ? `corrected: "${utterance}"` : "assent recorded");
    } catch (error) {
      if (error instanceof ApiError && error.status === 400) {
        this.setStatus(error.detail);
        return error.detail;
      }
      throw error;
    }
    await this.refresh();
    return null;
  }

  /** Re-fetch beliefs and history; safe to call any time (e.g. on reload). */
  async refresh(): Promise<void> {
    if (this.client.sessionId === null) {
      return;
    }
    const [beliefs, history] = await Promise.all([
      this.client.beliefs(),
      this.client.history(),
    ]);
    this.lastBeliefs = beliefs;
    renderRuleTable(this.elements.rules, beliefs);
    renderColourPanel(this.elements.colours, beliefs);
    renderAdverbPanel(this.elements.adverbs, beliefs);
    renderNetPanel(this.elements.net, beliefs);
    renderRegretSparkline(this.elements.regret, history);
  }

  private setStatus(text: string): void {
    this.elements.status.textContent = text;
  }
}

/** Locate the standard panel elements inside a mounted document. */
export function bindElements(root: Document | HTMLElement): AppElements {
  const find = (id: string): HTMLElement => {
    const node = root.querySelector<HTMLElement>(`#${id}`);
    if (node === null) {
      throw new Error(`missing element #${id}`);
    }
    return node;
  };
  return {
    situation: find("situation"),
    curve: find("curve"),
    rules: find("rules"),
    colours: find("colours"),
    adverbs: find("adverbs"),
    net: find("net"),
    regret: find("regret"),
    status: find("status"),
  };
}
