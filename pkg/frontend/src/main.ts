/** DOM wiring for the explorer page.
 *
 * mountApp builds the whole control surface inside a root element and
 * returns handles the tests drive directly. The page boot at the bottom
 * only runs in a real browser.
 */

import { HttpClient, ServiceError, apiBaseFromLocation, type AnalyzeClient } from "./api.js";
import { drawScene, type Frame, hitSegment, type Viewport } from "./diagram.js";
import {
  type EditableInputs,
  inputsFromScenario,
  parseScenarioDoc,
  scenarioFromInputs,
} from "./scenario.js";
import { Session, type Snapshot } from "./state.js";
import type { ApiResponse, SceneDict, Verdicts } from "./types.js";
import {
  fmt,
  fmtInterval,
  intervalFields,
  numberFields,
  sliderBounds,
  verdictLamps,
} from "./viewmodel.js";

/** Worked base pair: A(4, 20 shares, risk 4), B(2, 10 shares, risk 3). */
export const DEFAULT_INPUTS: EditableInputs = {
  a: { price: 4, shares: 20, risk_per_share: 4 },
  b: { price: 2, shares: 10, risk_per_share: 3 },
  mode: "synergy",
  s: 20,
  v: 16,
  mu_m: 120,
  rho_m: 94,
  r: 0.5,
};

const SLIDER_KEYS = ["s", "v", "mu_m", "rho_m", "r"] as const;
type SliderKey = (typeof SLIDER_KEYS)[number];

const COMPANY_FIELDS = ["price", "shares", "risk_per_share"] as const;

function esc(text: string): string {
  const table: Record<string, string> = {
    "&": "&amp;",
    "<": "&lt;",
    ">": "&gt;",
    '"': "&quot;",
  };
  return text.replace(/[&<>"]/g, (ch) => table[ch] ?? ch);
}

function sliderRow(key: SliderKey, label: string): string {
  return `<div class="slider-row" data-row="${key}">
    <label>${label}</label>
    <input type="range" data-slider="${key}">
    <input type="number" data-number="${key}">
  </div>`;
}

function companyFields(which: "a" | "b"): string {
  const inputs = COMPANY_FIELDS.map(
    (field) =>
      `<label>${field.replace(/_/g, " ")}
        <input type="number" step="any" data-input="${which}.${field}"></label>`,
  ).join("");
  return `<fieldset data-company="${which}">
    <legend>company ${which.toUpperCase()}</legend>${inputs}
  </fieldset>`;
}

function shell(): string {
  const lamps = verdictLamps(null)
    .map(
      (lamp) =>
        `<div class="lamp" data-lamp="${lamp.key}" data-state="off">
          <span class="dot"></span><span>${lamp.label}</span>
        </div>`,
    )
    .join("");
  return `
<header class="bar">
  <h1>Exchange-ratio explorer</h1>
  <div class="actions">
    <button type="button" data-action="pin">pin proposal</button>
    <button type="button" data-action="export">export scenario</button>
    <button type="button" data-action="import">import scenario</button>
    <input type="file" data-action="import-file" accept=".json,application/json" hidden>
  </div>
</header>
<div class="layout">
  <section class="panel" data-panel="inputs">
    <h2>Scenario</h2>
    ${companyFields("a")}
    ${companyFields("b")}
    <div class="mode">
      <label><input type="radio" name="outcome-mode" value="synergy"> synergy (s, v)</label>
      <label><input type="radio" name="outcome-mode" value="direct"> outcome (mu_M, rho_M)</label>
    </div>
    ${sliderRow("s", "synergy s")}
    ${sliderRow("v", "risk reduction v")}
    ${sliderRow("mu_m", "mu_M")}
    ${sliderRow("rho_m", "rho_M")}
    <hr>
    ${sliderRow("r", "candidate r")}
    <div class="error" data-field="error" hidden></div>
  </section>
  <section class="panel" data-panel="diagram">
    <h2>Midpoint-radius diagram</h2>
    <canvas width="680" height="500"></canvas>
    <div class="banner" data-field="banner" hidden></div>
    <div class="hover" data-field="hover">hover the result segment to read off the interval</div>
    <div class="annotations" data-field="annotations"></div>
  </section>
  <section class="panel" data-panel="verdicts">
    <h2>Verdicts</h2>
    <div class="lamps">${lamps}</div>
    <dl class="readouts" data-field="readouts"></dl>
    <h2>Pinned proposals</h2>
    <ol class="pins" data-field="pins"></ol>
  </section>
</div>
<footer class="bar small" data-field="api-base"></footer>`;
}

function context2d(canvas: HTMLCanvasElement): CanvasRenderingContext2D | null {
  // test DOMs have no drawing backend; geometry is covered separately
  try {
    const ctx = canvas.getContext("2d");
    return ctx !== null && typeof ctx.beginPath === "function" ? ctx : null;
  } catch {
    return null;
  }
}

export interface AppOptions {
  client: AnalyzeClient;
  initial?: EditableInputs;
  debounceMs?: number;
  apiLabel?: string;
}

export interface AppHandle {
  session: Session;
  ready: Promise<void>;
  render(response: ApiResponse): void;
  exportScenarioText(): string;
  importScenarioText(text: string): void;
}

export function mountApp(root: HTMLElement, opts: AppOptions): AppHandle {
  root.innerHTML = shell();
  const find = <T extends Element>(selector: string): T => {
    const el = root.querySelector(selector);
    if (el === null) throw new Error(`explorer shell is missing ${selector}`);
    return el as T;
  };

  const canvas = find<HTMLCanvasElement>("canvas");
  const viewport: Viewport = { width: canvas.width, height: canvas.height, margin: 44 };
  const readoutsEl = find<HTMLElement>('[data-field="readouts"]');
  const bannerEl = find<HTMLElement>('[data-field="banner"]');
  const hoverEl = find<HTMLElement>('[data-field="hover"]');
  const annotationsEl = find<HTMLElement>('[data-field="annotations"]');
  const errorEl = find<HTMLElement>('[data-field="error"]');
  const pinsEl = find<HTMLElement>('[data-field="pins"]');
  const fileEl = find<HTMLInputElement>('[data-action="import-file"]');
  const sliders = {} as Record<SliderKey, HTMLInputElement>;
  const numbers = {} as Record<SliderKey, HTMLInputElement>;
  for (const key of SLIDER_KEYS) {
    sliders[key] = find<HTMLInputElement>(`[data-slider="${key}"]`);
    numbers[key] = find<HTMLInputElement>(`[data-number="${key}"]`);
  }
  find<HTMLElement>('[data-field="api-base"]').textContent = opts.apiLabel ?? "";

  let lastScene: SceneDict | null = null;
  let lastFrame: Frame | null = null;

  const session = new Session(
    opts.client,
    { onResponse: render, onError: showError },
    opts.initial ?? DEFAULT_INPUTS,
    opts.debounceMs,
  );

  function showError(error: unknown): void {
    errorEl.hidden = false;
    errorEl.textContent =
      error instanceof ServiceError ? error.message : `request failed: ${String(error)}`;
  }

  function readoutRow(path: string, label: string, text: string): string {
    return `<div class="readout"><dt>${esc(label)}</dt>` +
      `<dd data-field="${esc(path)}">${esc(text)}</dd></div>`;
  }

  function renderReadouts(resp: ApiResponse): void {
    const rows = [
      readoutRow("report.case", "case", resp.report.case + (resp.report.tie ? " (tie)" : "")),
    ];
    for (const field of intervalFields(resp)) {
      rows.push(readoutRow(field.path, field.label, fmtInterval(field.value)));
    }
    for (const field of numberFields(resp)) {
      rows.push(readoutRow(field.path, field.label, fmt(field.value)));
    }
    readoutsEl.innerHTML = rows.join("");
  }

  function setSliderRange(key: SliderKey, min: number, max: number, step: number): void {
    const el = sliders[key];
    el.min = String(min);
    el.max = String(max);
    el.step = String(step);
  }

  function applyBounds(resp: ApiResponse): void {
    const b = sliderBounds(resp);
    setSliderRange("s", b.sMin, b.sMax, b.sStep);
    setSliderRange("v", b.vMin, b.vMax, b.vStep);
    setSliderRange("mu_m", b.muMin, b.muMax, b.muStep);
    setSliderRange("rho_m", b.rhoMin, b.rhoMax, b.rhoStep);
    setSliderRange("r", b.rMin, b.rMax, b.rStep);
  }

  function setPairValue(key: SliderKey): void {
    const text = String(session.inputs[key]);
    sliders[key].value = text;
    numbers[key].value = text;
  }

  // The response echoes the implied coordinates of the inactive outcome
  // form, so switching modes starts from equivalent values.
  function syncOutcomeEcho(resp: ApiResponse): void {
    if (session.inputs.mode === "synergy") {
      session.inputs.mu_m = resp.inputs.mu_m;
      session.inputs.rho_m = resp.inputs.rho_m;
      setPairValue("mu_m");
      setPairValue("rho_m");
    } else {
      session.inputs.s = resp.inputs.s;
      session.inputs.v = resp.inputs.v;
      setPairValue("s");
      setPairValue("v");
    }
  }

  function render(resp: ApiResponse): void {
    errorEl.hidden = true;
    for (const lamp of verdictLamps(resp)) {
      find<HTMLElement>(`[data-lamp="${lamp.key}"]`).setAttribute("data-state", lamp.state);
    }
    renderReadouts(resp);
    const empty = resp.report.interval === null;
    bannerEl.hidden = !empty;
    bannerEl.textContent = empty ? `empty region (${resp.report.case})` : "";
    annotationsEl.innerHTML = resp.scene.annotations
      .map((note) => `<div>${esc(note)}</div>`)
      .join("");
    applyBounds(resp);
    syncOutcomeEcho(resp);
    lastScene = resp.scene;
    const ctx = context2d(canvas);
    if (ctx !== null) {
      lastFrame = drawScene(ctx, resp.scene, viewport);
    }
  }

  function verdictDots(verdicts: Verdicts | null): string {
    if (verdicts === null) return "";
    return verdictLamps(null)
      .map((lamp) => `<span class="mini ${verdicts[lamp.key] ? "green" : "red"}"></span>`)
      .join("");
  }

  function renderPins(): void {
    pinsEl.innerHTML = session.pinned
      .map((pin, index) => {
        const buttons = ["load", "export", "remove"]
          .map(
            (action) =>
              `<button type="button" data-pin-action="${action}" data-pin-index="${index}">${action}</button>`,
          )
          .join("");
        return `<li>
          <span class="pin-label">${esc(pin.label)}</span>
          <span>${esc(pin.caseLabel)}</span>
          <span>${esc(fmtInterval(pin.interval))}</span>
          <span>r = ${esc(fmt(pin.r))}</span>
          ${verdictDots(pin.verdicts)}
          ${buttons}
        </li>`;
      })
      .join("");
  }

  function updateModeRows(): void {
    const synergy = session.inputs.mode === "synergy";
    find<HTMLElement>('[data-row="s"]').hidden = !synergy;
    find<HTMLElement>('[data-row="v"]').hidden = !synergy;
    find<HTMLElement>('[data-row="mu_m"]').hidden = synergy;
    find<HTMLElement>('[data-row="rho_m"]').hidden = synergy;
  }

  function syncControls(): void {
    for (const which of ["a", "b"] as const) {
      for (const field of COMPANY_FIELDS) {
        find<HTMLInputElement>(`[data-input="${which}.${field}"]`).value = String(
          session.inputs[which][field],
        );
      }
    }
    for (const key of SLIDER_KEYS) setPairValue(key);
    for (const radio of root.querySelectorAll<HTMLInputElement>('input[name="outcome-mode"]')) {
      radio.checked = radio.value === session.inputs.mode;
    }
    updateModeRows();
  }

  function exportScenarioText(): string {
    return JSON.stringify(scenarioFromInputs(session.inputs), null, 2) + "\n";
  }

  function importScenarioText(text: string): void {
    let doc;
    try {
      doc = parseScenarioDoc(JSON.parse(text));
    } catch (error) {
      showError(error);
      return;
    }
    session.inputs = inputsFromScenario(doc, session.inputs.r);
    syncControls();
    void session.fire();
  }

  function download(name: string, text: string): void {
    try {
      const url = URL.createObjectURL(new Blob([text], { type: "application/json" }));
      const link = document.createElement("a");
      link.href = url;
      link.download = name;
      link.click();
      URL.revokeObjectURL(url);
    } catch (error) {
      showError(error);
    }
  }

  // --- events -----------------------------------------------------------

  for (const key of SLIDER_KEYS) {
    const apply = (raw: string, mirror: HTMLInputElement) => {
      const value = Number(raw);
      if (!Number.isFinite(value)) return;
      mirror.value = raw;
      session.update({ [key]: value } as Partial<EditableInputs>);
    };
    sliders[key].addEventListener("input", () => apply(sliders[key].value, numbers[key]));
    numbers[key].addEventListener("input", () => apply(numbers[key].value, sliders[key]));
  }

  for (const which of ["a", "b"] as const) {
    for (const field of COMPANY_FIELDS) {
      const el = find<HTMLInputElement>(`[data-input="${which}.${field}"]`);
      el.addEventListener("input", () => {
        const value = Number(el.value);
        if (!Number.isFinite(value)) return;
        session.update({ [which]: { ...session.inputs[which], [field]: value } });
      });
    }
  }

  for (const radio of root.querySelectorAll<HTMLInputElement>('input[name="outcome-mode"]')) {
    radio.addEventListener("change", () => {
      if (!radio.checked) return;
      session.inputs.mode = radio.value as EditableInputs["mode"];
      updateModeRows();
      session.schedule();
    });
  }

  find<HTMLElement>('[data-action="pin"]').addEventListener("click", () => {
    if (session.pin() !== null) renderPins();
  });
  find<HTMLElement>('[data-action="export"]').addEventListener("click", () => {
    download("scenario.json", exportScenarioText());
  });
  find<HTMLElement>('[data-action="import"]').addEventListener("click", () => fileEl.click());
  fileEl.addEventListener("change", () => {
    const file = fileEl.files?.[0];
    if (file === undefined) return;
    file
      .text()
      .then((text) => importScenarioText(text))
      .catch((error) => showError(error));
    fileEl.value = "";
  });

  pinsEl.addEventListener("click", (event) => {
    const button = (event.target as Element).closest("[data-pin-action]");
    if (button === null) return;
    const index = Number(button.getAttribute("data-pin-index"));
    const snapshot: Snapshot | undefined = session.pinned[index];
    if (snapshot === undefined) return;
    const action = button.getAttribute("data-pin-action");
    if (action === "load") {
      session.restore(snapshot);
      syncControls();
    } else if (action === "export") {
      const name = `${snapshot.label.replace(/\s+/g, "_")}.json`;
      download(name, JSON.stringify(scenarioFromInputs(snapshot.inputs), null, 2) + "\n");
    } else if (action === "remove") {
      session.unpin(index);
      renderPins();
    }
  });

  canvas.addEventListener("mousemove", (event) => {
    if (lastScene === null || lastFrame === null) return;
    const rect = canvas.getBoundingClientRect();
    const hit = hitSegment(
      lastScene,
      lastFrame,
      event.clientX - rect.left,
      event.clientY - rect.top,
    );
    hoverEl.textContent =
      hit === null
        ? "hover the result segment to read off the interval"
        : `r in [${fmt(hit[0])}, ${fmt(hit[1])}]`;
  });

  syncControls();
  const ready = session.fire();
  return { session, ready, render, exportScenarioText, importScenarioText };
}

const bootRoot = typeof document === "undefined" ? null : document.getElementById("app");
if (bootRoot !== null) {
  const base = apiBaseFromLocation(window.location);
  mountApp(bootRoot, { client: new HttpClient(base), apiLabel: `service: ${base}` });
}
