// Browser entry point: composer controls and session buttons.

import { AppController, bindElements } from "./app.js";
import type { ComposerState } from "./composer.js";

function radioValue(name: string): string {
  const checked = document.querySelector<HTMLInputElement>(`input[name=${name}]:checked`);
  return checked?.value ?? "yes";
}

function rebuildAdverbChoices(app: AppController): void {
  const box = document.querySelector<HTMLElement>("#adverb-choices");
  if (!box) return;
  box.replaceChildren();
  for (const [adverb, dimension] of Object.entries(app.composerVocab().adverbs)) {
    const label = document.createElement("label");
    const input = document.createElement("input");
    input.type = "checkbox";
    input.value = adverb;
    input.dataset.dimension = dimension;
    input.addEventListener("change", () => {
      if (!input.checked) return;
      // Keep at most one adverb per dimension checked.
      box
        .querySelectorAll<HTMLInputElement>(
          `input[data-dimension=${dimension}]:checked`,
        )
        .forEach((other) => {
          if (other !== input) other.checked = false;
        });
    });
    label.append(input, ` ${adverb}`);
    box.appendChild(label);
  }
}

function rebuildColourChoices(app: AppController): void {
  const select = document.querySelector<HTMLSelectElement>("#colour-select");
  if (!select) return;
  select.replaceChildren();
  select.append(new Option("(new colour)", ""));
  for (const colour of app.composerVocab().knownColours) {
    select.append(new Option(colour, colour));
  }
}

function composerState(app: AppController): ComposerState {
  const kind = radioValue("feedback-kind");
  if (kind === "yes") {
    return { kind: "yes" };
  }
  const adverbs = Array.from(
    document.querySelectorAll<HTMLInputElement>("#adverb-choices input:checked"),
  ).map((input) => input.value);
  if (kind === "partial") {
    return { kind: "partial", adverbs };
  }
  const selected = document.querySelector<HTMLSelectElement>("#colour-select")?.value ?? "";
  const typed = document.querySelector<HTMLInputElement>("#colour-text")?.value.trim() ?? "";
  const colour = selected || typed.toLowerCase() || null;
  const includeShape =
    document.querySelector<HTMLInputElement>("#include-shape")?.checked ?? true;
  const shape = includeShape ? (app.pendingStep?.situation.shape ?? null) : null;
  return { kind: "full", colour, shape, adverbs };
}

export function start(baseUrl = ""): AppController {
  const app = new AppController(baseUrl, bindElements(document));
  document.querySelector("#new-session")?.addEventListener("click", () => {
    const strategy =
      document.querySelector<HTMLSelectElement>("#strategy-select")?.value ?? "full";
    void app.createSession(strategy).then(() => {
      rebuildAdverbChoices(app);
      rebuildColourChoices(app);
    });
  });
  document.querySelector("#next-step")?.addEventListener("click", () => {
    void app.nextStep();
  });
  document.querySelector("#send-feedback")?.addEventListener("click", () => {
    void app.submitFeedback(composerState(app)).then((diagnostic) => {
      const note = document.querySelector<HTMLElement>("#composer-note");
      if (note) note.textContent = diagnostic ?? "";
      rebuildAdverbChoices(app);
      rebuildColourChoices(app);
    });
  });
  return app;
}

declare global {
  interface Window {
    teachUi?: AppController;
  }
}

if (typeof document !== "undefined" && document.querySelector("#teach-ui")) {
  window.teachUi = start("");
}
