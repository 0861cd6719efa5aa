import { ApiClient } from "./api.js";
import { LAYOUTS } from "./layout.js";
import { renderDiagram, renderParameters, renderSolution, renderVerdict } from "./panels.js";
import { DashboardController, type DashboardState } from "./state.js";
import type { AnalysisResponse } from "./types.js";

export interface DashboardOptions {
  apiBase?: string;
  debounceMs?: number;
  symbolicTimeout?: number;
}

export interface DashboardHandle {
  controller: DashboardController;
  client: ApiClient;
  ready: Promise<void>;
}

const MAX_LOG_LINES = 500;

function buildHTML(): string {
  const layoutOptions = LAYOUTS.map((l) => `<option value="${l.name}">${l.name}</option>`).join("");
  return `
  <header class="topbar">
    <h1>compartmental identifiability explorer</h1>
    <span id="app-version" class="version"></span>
  </header>
  <div id="error-banner" class="error-banner hidden">
    <span id="error-message"></span>
    <button id="retry-btn" type="button">retry</button>
  </div>
  <section class="controls">
    <label>structure
      <select id="example-select"></select>
    </label>
    <label>naming
      <select id="naming-select">
        <option value="caps">caps (k01 &rarr; K01)</option>
        <option value="underscore">underscore (k01 &rarr; k01_)</option>
      </select>
    </label>
    <label>layout
      <select id="layout-select">${layoutOptions}</select>
    </label>
    <button id="reset-btn" type="button">reset edits</button>
    <span id="busy" class="busy hidden">analyzing&hellip;</span>
  </section>
  <section class="edits">
    <h3>observation gains and initial conditions</h3>
    <div id="edit-fields" class="edit-fields"></div>
  </section>
  <main class="panels">
    <section class="panel" id="panel-parameters-box">
      <h3>parameters &theta; / &theta;&prime;</h3>
      <div id="panel-parameters"></div>
    </section>
    <section class="panel" id="panel-solution-box">
      <h3>solution set</h3>
      <div id="panel-solution"></div>
    </section>
    <section class="panel" id="panel-diagram-box">
      <h3>diagram</h3>
      <div id="panel-diagram"></div>
    </section>
    <section class="panel panel-wide" id="panel-verdict-box">
      <h3>verdict</h3>
      <div id="panel-verdict"></div>
    </section>
  </main>
  <details id="debug-log" class="debug-log">
    <summary>trace log</summary>
    <div id="debug-lines"></div>
  </details>`;
}

export function initDashboard(root: HTMLElement, opts: DashboardOptions = {}): DashboardHandle {
  root.innerHTML = buildHTML();

  const get = <T extends HTMLElement>(id: string): T => {
    const node = root.querySelector(`#${id}`);
    if (!node) throw new Error(`missing dashboard element #${id}`);
    return node as T;
  };

  const exampleSelect = get<HTMLSelectElement>("example-select");
  const namingSelect = get<HTMLSelectElement>("naming-select");
  const layoutSelect = get<HTMLSelectElement>("layout-select");
  const resetBtn = get<HTMLButtonElement>("reset-btn");
  const busy = get<HTMLElement>("busy");
  const banner = get<HTMLElement>("error-banner");
  const bannerMessage = get<HTMLElement>("error-message");
  const retryBtn = get<HTMLButtonElement>("retry-btn");
  const editFields = get<HTMLElement>("edit-fields");
  const debugLines = get<HTMLElement>("debug-lines");

  const trace = (line: string): void => {
    const entry = document.createElement("div");
    entry.textContent = line;
    debugLines.appendChild(entry);
    while (debugLines.childElementCount > MAX_LOG_LINES) {
      debugLines.firstElementChild?.remove();
    }
  };

  const client = new ApiClient(opts.apiBase ?? "");
  const inputs = new Map<string, HTMLInputElement>();
  const errorSpans = new Map<string, HTMLElement>();
  let renderedKeys = "";
  let lastResult: AnalysisResponse | null = null;
  let lastLayout = "";

  const rebuildFields = (state: DashboardState): void => {
    editFields.replaceChildren();
    inputs.clear();
    errorSpans.clear();
    for (const field of state.fields) {
      const wrap = document.createElement("label");
      wrap.className = "edit-field";
      const caption = document.createElement("span");
      caption.className = "edit-caption";
      caption.textContent = field.label;
      const input = document.createElement("input");
      input.type = "text";
      input.value = field.text;
      input.dataset.field = field.key;
      input.spellcheck = false;
      const error = document.createElement("span");
      error.className = "field-error";
      wrap.append(caption, input, error);
      editFields.appendChild(wrap);
      inputs.set(field.key, input);
      errorSpans.set(field.key, error);
    }
  };

  const render = (state: DashboardState): void => {
    const keys = state.fields.map((f) => f.key).join("|");
    if (keys !== renderedKeys) {
      rebuildFields(state);
      renderedKeys = keys;
    }
    for (const field of state.fields) {
      const input = inputs.get(field.key);
      if (input && input.value !== field.text) input.value = field.text;
      const error = errorSpans.get(field.key);
      if (error) error.textContent = field.error ?? "";
      input?.classList.toggle("invalid", field.error !== null);
    }
    busy.classList.toggle("hidden", !state.inFlight);
    banner.classList.toggle("hidden", state.networkError === null);
    bannerMessage.textContent = state.networkError ?? "";

    if (state.result !== lastResult || state.layoutName !== lastLayout) {
      lastResult = state.result;
      lastLayout = state.layoutName;
      if (state.result) {
        trace(`render: verdict ${state.result.verdict} after request ${controller.requestCount}`);
      }
      renderParameters(get("panel-parameters"), state.result);
      renderSolution(get("panel-solution"), state.result);
      renderDiagram(get("panel-diagram"), state.result, state.layoutName, trace);
      renderVerdict(get("panel-verdict"), state.result);
    }
  };

  const controller = new DashboardController({
    client,
    onChange: render,
    debounceMs: opts.debounceMs,
    symbolicTimeout: opts.symbolicTimeout,
  });

  editFields.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement | null;
    const key = target?.dataset?.field;
    if (key && target) controller.setField(key, target.value);
  });
  namingSelect.addEventListener("change", () => {
    controller.setNaming(namingSelect.value === "underscore" ? "underscore" : "caps");
  });
  layoutSelect.addEventListener("change", () => {
    controller.setLayout(layoutSelect.value);
  });
  resetBtn.addEventListener("click", () => controller.resetFields());
  retryBtn.addEventListener("click", () => controller.retry());

  const ready = (async () => {
    try {
      const examples = await client.examples();
      exampleSelect.replaceChildren();
      for (const example of examples) {
        const option = document.createElement("option");
        option.value = example.id;
        option.textContent = example.title;
        exampleSelect.appendChild(option);
      }
      exampleSelect.addEventListener("change", () => {
        const chosen = examples.find((e) => e.id === exampleSelect.value);
        if (chosen) controller.loadExample(chosen);
      });
      const first = examples.find((e) => e.id === "parent") ?? examples[0];
      if (first) {
        exampleSelect.value = first.id;
        controller.loadExample(first);
      }
    } catch (err) {
      controller.state.networkError = err instanceof Error ? err.message : String(err);
      render(controller.state);
      throw err;
    }
  })();
  ready.catch(() => {
    // surfaced through the banner; keep the promise rejection observed
  });

  void client
    .health()
    .then((info) => {
      get("app-version").textContent = `v${info.version}`;
    })
    .catch(() => {
      // version label is cosmetic; the banner covers real connectivity issues
    });

  return { controller, client, ready };
}
