// Wire types for the teaching-session service. These mirror the service's
// JSON payloads exactly; the UI performs no inference of its own.

export interface CurveSpec {
  dotCount: number;
  dotColour: [number, number, number];
  controlPoint: [number, number];
  dots: Array<[number, number]>;
}

export interface SituationPayload {
  shape: string;
  rgb: [number, number, number];
}

export interface PointPayload {
  speed: number;
  energy: number;
  direction: number;
}

export interface StepPayload {
  step: number;
  situation: SituationPayload;
  point: PointPayload;
  curve: CurveSpec;
  simulatedFeedback?: string;
}

export interface RuleBelief {
  rule: string;
  alpha: number;
  beta: number;
  confirmed: boolean;
  belief: number;
}

export interface ColourEntry {
  name: string;
  exemplars: number;
}

export interface AdverbEntry {
  name: string;
  dimension: string;
  mu: number;
  sigma: number;
  positives: number;
  negatives: number;
}

export interface NetNode {
  id: string;
  kind: "observed" | "colour" | "manner" | "behaviour";
}

export interface NetEdge {
  from: string;
  to: string;
}

export interface BeliefsPayload {
  rules: RuleBelief[];
  colours: ColourEntry[];
  adverbs: AdverbEntry[];
  net: { nodes: NetNode[]; edges: NetEdge[] };
}

export interface HistoryStep {
  step: number;
  situation: SituationPayload;
  point: PointPayload;
  feedback: string | null;
  corrected: boolean | null;
  cumulativeRegret: number;
}

export interface HistoryPayload {
  steps: HistoryStep[];
  cumulativeRegret: number;
}

export interface SessionInfo {
  id: string;
  mode: string;
  strategy: string;
}

export interface FeedbackResult {
  evidenceApplied: unknown;
  corrected: boolean;
}
