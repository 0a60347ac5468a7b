/** Browser shell: wires the workbench state to the DOM.
 *
 * Layout: matrix editor on the left, ranking + heatmap + scenarios on
 * the right. All numbers shown at two decimals with the exact value in
 * the hover title.
 */

import { ApiError, DecisionClient } from "./api.js";
import { fullPrecision, rankDelta, round2 } from "./format.js";
import { aggregateHeatmap, criterionHeatmap, type HeatCell } from "./heatmap.js";
import { isPhfCell, massIndicator, validateEdit, type CellEdit } from "./matrix.js";
import {
  LAMBDA_MAX,
  LAMBDA_MIN,
  WorkbenchState,
  compareScenarios,
} from "./state.js";
import type { Cell, ProblemDocument } from "./types.js";

const EXAMPLE_URL = "./case_study_phf.todim.json";

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

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node as T;
}

class Shell {
  private readonly state: WorkbenchState;
  private drilldown = -1; // -1 renders the aggregate matrix

  constructor(client: DecisionClient) {
    this.state = new WorkbenchState(client, { onChange: () => this.render() });
  }

  start(): void {
    byId<HTMLButtonElement>("load-example").addEventListener("click", () => {
      void this.loadExample();
    });
    byId<HTMLButtonElement>("evaluate").addEventListener("click", () => {
      void this.state.commit().catch((error) => this.toast(error));
    });
    byId<HTMLInputElement>("lambda-slider").addEventListener("input", (event) => {
      const value = Number((event.target as HTMLInputElement).value);
      this.state.setLambda(value);
    });
    byId<HTMLInputElement>("lambda-slider").addEventListener("change", () => {
      this.state.flushLambda();
    });
    byId<HTMLSelectElement>("drilldown").addEventListener("change", (event) => {
      this.drilldown = Number((event.target as HTMLSelectElement).value);
      this.render();
    });
    byId<HTMLButtonElement>("snapshot").addEventListener("click", () => {
      const name = byId<HTMLInputElement>("snapshot-name").value.trim() || "scenario";
      try {
        this.state.snapshotScenario(name);
      } catch (error) {
        this.toast(error);
      }
    });
    byId<HTMLButtonElement>("snapshot-stripped").addEventListener("click", () => {
      void this.state
        .snapshotStrippedTwin("probability-free twin")
        .catch((error) => this.toast(error));
    });
    byId<HTMLInputElement>("open-file").addEventListener("change", (event) => {
      const input = event.target as HTMLInputElement;
      const file = input.files?.[0];
      if (file) void this.openFile(file);
      input.value = "";
    });
    byId<HTMLButtonElement>("save-file").addEventListener("click", () => this.saveFile());
    byId<HTMLButtonElement>("toast-retry").addEventListener("click", () => {
      void this.state.retryLambda();
      this.hideToast();
    });
    byId<HTMLButtonElement>("toast-dismiss").addEventListener("click", () => this.hideToast());
    this.render();
  }

  private async loadExample(): Promise<void> {
    try {
      const response = await fetch(EXAMPLE_URL);
      if (!response.ok) throw new Error(`example fetch failed (${response.status})`);
      this.state.loadDocument((await response.json()) as ProblemDocument);
      await this.state.commit();
    } catch (error) {
      this.toast(error);
    }
  }

  private async openFile(file: File): Promise<void> {
    try {
      this.state.loadDocument(JSON.parse(await file.text()) as ProblemDocument);
      await this.state.commit();
    } catch (error) {
      this.toast(error);
    }
  }

  private saveFile(): void {
    if (this.state.draft === null) return;
    const blob = new Blob([JSON.stringify(this.state.draft, null, 2) + "\n"], {
      type: "application/json",
    });
    const link = el("a");
    link.href = URL.createObjectURL(blob);
    link.download = "problem.todim.json";
    link.click();
    URL.revokeObjectURL(link.href);
  }

  private toast(error: unknown): void {
    const message =
      error instanceof ApiError
        ? `${error.kind}: ${error.message}${error.path ? ` (${error.path})` : ""}`
        : error instanceof Error
          ? error.message
          : String(error);
    byId("toast-message").textContent = message;
    byId("toast").classList.remove("hidden");
  }

  private hideToast(): void {
    byId("toast").classList.add("hidden");
  }

  private render(): void {
    this.renderMatrix();
    this.renderRanking();
    this.renderHeatmap();
    this.renderScenarios();
    const slider = byId<HTMLInputElement>("lambda-slider");
    slider.min = String(LAMBDA_MIN);
    slider.max = String(LAMBDA_MAX);
    slider.value = String(this.state.lambdaValue);
    byId("lambda-value").textContent = round2(this.state.lambdaValue);
    const preview = this.state.lambdaPreview;
    byId("lambda-preview").textContent = preview
      ? `order at lambda ${round2(preview.lambda)}: ${preview.order.join(" > ")}`
      : "";
    byId<HTMLButtonElement>("evaluate").disabled =
      this.state.draft === null || this.state.commitBlocked();
    byId("error-line").textContent = this.state.lastError ?? "";
  }

  private renderMatrix(): void {
    const host = byId("matrix");
    host.textContent = "";
    const draft = this.state.draft;
    if (draft === null) {
      host.append(el("p", "hint", "Load the example or open a *.todim.json file."));
      return;
    }
    const table = el("table", "matrix-table");
    const head = el("tr");
    head.append(el("th", undefined, draft.metadata?.title ?? draft.mode));
    for (const criterion of draft.criteria) {
      head.append(el("th", undefined, `${criterion.name} (${criterion.kind})`));
    }
    table.append(head);
    draft.assessments.forEach((row, i) => {
      const tr = el("tr");
      tr.append(el("th", undefined, draft.alternatives[i]));
      row.forEach((cell, j) => {
        tr.append(this.renderCell(cell, i, j));
      });
      table.append(tr);
    });
    host.append(table);
  }

  private renderCell(cell: Cell, row: number, column: number): HTMLTableCellElement {
    const td = el("td", "cell");
    const entries = typeof cell === "number" ? [cell] : cell;
    entries.forEach((entry, index) => {
      const chip = el("span", "chip");
      if (typeof entry === "object") {
        chip.append(this.entryInput(row, column, index, "d", entry.d));
        chip.append(el("span", "at", "@"));
        chip.append(this.entryInput(row, column, index, "p", entry.p));
      } else {
        chip.append(this.entryInput(row, column, index, "d", entry));
      }
      td.append(chip);
    });
    if (isPhfCell(cell)) {
      const indicator = massIndicator(cell);
      const chip = el("span", `mass mass-${indicator.status}`, round2(indicator.mass));
      chip.title = indicator.message;
      td.append(chip);
    }
    return td;
  }

  private entryInput(
    row: number,
    column: number,
    entry: number,
    field: "d" | "p",
    value: number,
  ): HTMLInputElement {
    const input = el("input", `num ${field}`);
    input.type = "number";
    input.step = "any";
    input.value = String(value);
    input.title = fullPrecision(value);
    input.addEventListener("change", () => {
      const edit: CellEdit = { row, column, entry, field, value: Number(input.value) };
      const draft = this.state.draft;
      const complaint = draft === null ? "no document" : validateEdit(draft, edit);
      if (complaint !== null) {
        input.setCustomValidity(complaint);
        input.reportValidity();
        return;
      }
      input.setCustomValidity("");
      this.state.edit(edit);
    });
    return input;
  }

  private renderRanking(): void {
    const host = byId("ranking");
    host.textContent = "";
    const response = this.state.lastResponse;
    if (response === null) {
      host.append(el("p", "hint", "No evaluation yet."));
      return;
    }
    if (this.state.pendingEdit) {
      host.append(el("p", "stale", "edits pending: showing the last evaluated draft"));
    }
    host.append(el("p", "order", `ranking: ${response.order.join(" > ")}`));
    const table = el("table", "ranking-table");
    const head = el("tr");
    for (const label of ["alternative", "overall", "rank"]) head.append(el("th", undefined, label));
    table.append(head);
    response.alternatives.forEach((name, i) => {
      const tr = el("tr");
      tr.append(el("td", undefined, name));
      const overall = el("td", undefined, round2(response.overall[i]));
      overall.title = fullPrecision(response.overall[i]);
      tr.append(overall);
      tr.append(el("td", undefined, String(response.ranks[i])));
      table.append(tr);
    });
    host.append(table);
    for (const note of response.footnotes) {
      host.append(el("p", "footnote", note));
    }
  }

  private renderHeatmap(): void {
    const host = byId("heatmap");
    host.textContent = "";
    const response = this.state.lastResponse;
    const select = byId<HTMLSelectElement>("drilldown");
    if (response === null) {
      select.textContent = "";
      return;
    }
    if (select.options.length !== response.criteria.length + 1) {
      select.textContent = "";
      const aggregate = el("option", undefined, "aggregate");
      aggregate.value = "-1";
      select.append(aggregate);
      response.criteria.forEach((criterion, j) => {
        const option = el("option", undefined, criterion.name);
        option.value = String(j);
        select.append(option);
      });
      select.value = String(this.drilldown);
    }
    const cells: HeatCell[][] =
      this.drilldown >= 0
        ? criterionHeatmap(response, this.drilldown)
        : aggregateHeatmap(response);
    const table = el("table", "heat-table");
    const head = el("tr");
    head.append(el("th"));
    for (const name of response.alternatives) head.append(el("th", undefined, name));
    table.append(head);
    cells.forEach((rowCells, i) => {
      const tr = el("tr");
      tr.append(el("th", undefined, response.alternatives[i]));
      for (const cell of rowCells) {
        const td = el("td", `heat heat-${cell.tone}`, cell.display);
        td.title = cell.title;
        td.style.setProperty("--intensity", cell.intensity.toFixed(3));
        tr.append(td);
      }
      table.append(tr);
    });
    host.append(table);
  }

  private renderScenarios(): void {
    const host = byId("scenarios");
    host.textContent = "";
    const scenarios = this.state.scenarios;
    if (scenarios.length === 0) {
      host.append(el("p", "hint", "Snapshot an evaluation to compare scenarios."));
      return;
    }
    const list = el("ul", "scenario-list");
    for (const scenario of scenarios) {
      list.append(
        el(
          "li",
          undefined,
          `${scenario.name} [${scenario.method}]: ${scenario.response.order.join(" > ")}`,
        ),
      );
    }
    host.append(list);
    if (scenarios.length >= 2) {
      const left = scenarios[scenarios.length - 2];
      const right = scenarios[scenarios.length - 1];
      const table = el("table", "compare-table");
      const head = el("tr");
      for (const label of ["alternative", left.name, right.name, "delta"]) {
        head.append(el("th", undefined, label));
      }
      table.append(head);
      for (const row of compareScenarios(left, right)) {
        const tr = el("tr");
        tr.append(el("td", undefined, row.alternative));
        tr.append(el("td", undefined, String(row.leftRank)));
        tr.append(el("td", undefined, String(row.rightRank)));
        tr.append(el("td", undefined, rankDelta(row.leftRank, row.rightRank)));
        table.append(tr);
      }
      host.append(table);
    }
  }
}

function serviceBase(): string {
  const override = new URLSearchParams(window.location.search).get("service");
  return override ?? window.location.origin;
}

window.addEventListener("DOMContentLoaded", () => {
  new Shell(new DecisionClient(serviceBase())).start();
});
