/** DOM rendering and interaction for the Generator form.
 *
 * Field-level feedback: validation runs on demand (button) and debounced
 * after edits; violations land next to the control whose (node, path) they
 * name. In-flight validations are superseded by newer ones via AbortController.
 */

import { ApiClient } from "./api";
import { DraftRecord, FieldModel, FormModel, SectionModel } from "./model";
import type { RdfFormat, ValidationReportJson } from "./types";
import { FORMAT_EXTENSIONS } from "./types";

const DEBOUNCE_MS = 400;

export class GeneratorView {
  readonly draft: DraftRecord;
  private inflight: AbortController | null = null;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  lastReport: ValidationReportJson | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    readonly form: FormModel,
  ) {
    this.draft = new DraftRecord(form);
  }

  render(): void {
    this.root.innerHTML = "";
    const heading = document.createElement("p");
    heading.className = "profile-heading";
    heading.textContent = `Profile ${this.form.profileId} (version ${this.form.version})`;
    this.root.appendChild(heading);

    const banner = document.createElement("div");
    banner.id = "status-banner";
    banner.className = "banner";
    this.root.appendChild(banner);

    for (const section of this.form.sections) {
      this.root.appendChild(this.renderSection(section));
    }

    const controls = document.createElement("div");
    controls.className = "actions";
    const validateButton = document.createElement("button");
    validateButton.id = "validate-button";
    validateButton.textContent = "Validate";
    validateButton.addEventListener("click", () => void this.validateNow());
    controls.appendChild(validateButton);

    for (const format of ["turtle", "ntriples", "jsonld"] as RdfFormat[]) {
      const button = document.createElement("button");
      button.id = `download-${format}`;
      button.textContent = `Download ${FORMAT_EXTENSIONS[format]}`;
      button.disabled = true;
      button.addEventListener("click", () => void this.triggerDownload(format));
      controls.appendChild(button);
    }
    this.root.appendChild(controls);
  }

  private renderSection(section: SectionModel): HTMLElement {
    const box = document.createElement("fieldset");
    box.dataset.classIri = section.classIri;

    const legend = document.createElement("legend");
    legend.textContent = section.label;
    box.appendChild(legend);

    const idRow = document.createElement("div");
    idRow.className = "field node-id";
    const idLabel = document.createElement("label");
    idLabel.textContent = "Resource IRI";
    const idInput = document.createElement("input");
    idInput.type = "text";
    idInput.value = section.defaultNodeId;
    idInput.addEventListener("change", () => {
      this.draft.setNodeId(section.classIri, idInput.value.trim());
      this.scheduleValidation();
    });
    idRow.append(idLabel, idInput);
    box.appendChild(idRow);

    for (const field of section.fields) {
      box.appendChild(this.renderField(section, field));
    }
    return box;
  }

  private renderField(section: SectionModel, field: FieldModel): HTMLElement {
    const container = document.createElement("div");
    container.className = "field";
    container.dataset.classIri = section.classIri;
    container.dataset.path = field.property.propertyIri;

    const label = document.createElement("label");
    label.textContent = field.label;
    if (field.mandatory) {
      const badge = document.createElement("span");
      badge.className = "badge mandatory";
      badge.textContent = "mandatory";
      label.appendChild(badge);
    } else {
      const badge = document.createElement("span");
      badge.className = `badge ${field.property.obligation}`;
      badge.textContent = field.property.obligation;
      label.appendChild(badge);
    }
    container.appendChild(label);

    const rows = document.createElement("div");
    rows.className = "rows";
    container.appendChild(rows);
    this.appendValueRow(rows, section, field);

    if (field.repeatable) {
      const add = document.createElement("button");
      add.type = "button";
      add.className = "add-another";
      add.textContent = "+ add another";
      add.addEventListener("click", () => this.appendValueRow(rows, section, field));
      container.appendChild(add);
    }

    const violations = document.createElement("div");
    violations.className = "violations";
    container.appendChild(violations);
    return container;
  }

  private appendValueRow(
    rows: HTMLElement,
    section: SectionModel,
    field: FieldModel,
  ): void {
    const row = document.createElement("div");
    row.className = "row";

    let input: HTMLInputElement | HTMLSelectElement;
    if (field.kind === "concept") {
      const select = document.createElement("select");
      const empty = document.createElement("option");
      empty.value = "";
      empty.textContent = "— choose —";
      select.appendChild(empty);
      for (const option of field.options) {
        const el = document.createElement("option");
        el.value = option.iri;
        el.textContent = option.label;
        select.appendChild(el);
      }
      input = select;
    } else {
      input = document.createElement("input");
      input.type = "text";
      if (field.kind === "iri") input.placeholder = "https://…";
    }
    input.className = "value-input";
    row.appendChild(input);

    let langInput: HTMLInputElement | null = null;
    if (field.kind === "langtext") {
      langInput = document.createElement("input");
      langInput.className = "lang-input";
      langInput.type = "text";
      langInput.value = "en";
      langInput.size = 3;
      row.appendChild(langInput);
    }

    const sync = () => {
      this.syncField(rows, section, field);
      this.scheduleValidation();
    };
    input.addEventListener("change", sync);
    input.addEventListener("blur", sync);
    langInput?.addEventListener("change", sync);

    rows.appendChild(row);
  }

  private syncField(rows: HTMLElement, section: SectionModel, field: FieldModel): void {
    const values = [];
    for (const row of Array.from(rows.children)) {
      const input = row.querySelector<HTMLInputElement | HTMLSelectElement>(".value-input");
      if (!input || !input.value.trim()) continue;
      const lang = row.querySelector<HTMLInputElement>(".lang-input")?.value.trim();
      values.push({ text: input.value.trim(), language: lang || undefined });
    }
    this.draft.setValues(section.classIri, field.property.propertyIri, values);
  }

  /** Re-read every control; used before validation and downloads. */
  syncAll(): void {
    for (const sectionEl of Array.from(
      this.root.querySelectorAll<HTMLElement>("fieldset[data-class-iri]"),
    )) {
      const classIri = sectionEl.dataset.classIri!;
      const section = this.form.sections.find((s) => s.classIri === classIri);
      if (!section) continue;
      for (const fieldEl of Array.from(
        sectionEl.querySelectorAll<HTMLElement>(".field[data-path]"),
      )) {
        const field = section.fields.find(
          (f) => f.property.propertyIri === fieldEl.dataset.path,
        );
        const rows = fieldEl.querySelector<HTMLElement>(".rows");
        if (field && rows) this.syncField(rows, section, field);
      }
    }
  }

  scheduleValidation(): void {
    if (this.debounceTimer) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => void this.validateNow(), DEBOUNCE_MS);
  }

  async validateNow(): Promise<ValidationReportJson | null> {
    if (this.debounceTimer) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    this.syncAll();
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    if (this.draft.isEmpty()) {
      this.lastReport = null;
      this.setBanner("info", "Nothing to validate yet.");
      this.setDownloadsEnabled(false);
      this.renderInlineResults({ conforms: true, results: [] });
      return null;
    }
    try {
      const report = await this.api.validateDraft(this.draft.toNodes(), controller.signal);
      if (controller.signal.aborted) return null;
      this.lastReport = report;
      this.renderInlineResults(report);
      const violations = report.results.filter((r) => r.severity === "Violation");
      if (report.conforms) {
        this.setBanner("ok", "conforms");
      } else {
        this.setBanner("error", `${violations.length} violation(s)`);
      }
      this.setDownloadsEnabled(true);
      return report;
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") return null;
      this.setBanner("error", `Service error: ${String(err)}`);
      this.setDownloadsEnabled(false);
      return null;
    }
  }

  private renderInlineResults(report: ValidationReportJson): void {
    for (const box of Array.from(this.root.querySelectorAll(".violations"))) {
      box.innerHTML = "";
    }
    for (const result of report.results) {
      const section = this.form.sections.find(
        (s) => this.draft.nodeId(s.classIri) === result.focusNode,
      );
      if (!section || !result.path) continue;
      const selector = `.field[data-path="${result.path}"]`;
      const sectionEl = this.root.querySelector(
        `fieldset[data-class-iri="${section.classIri}"]`,
      );
      const fieldEl = sectionEl?.querySelector(selector);
      const box = fieldEl?.querySelector(".violations");
      if (!box) continue;
      const line = document.createElement("p");
      line.className = `inline-result ${result.severity.toLowerCase()}`;
      line.textContent = `${result.severity}: ${result.message}`;
      box.appendChild(line);
    }
  }

  private setBanner(kind: "ok" | "error" | "info", text: string): void {
    const banner = this.root.querySelector<HTMLElement>("#status-banner");
    if (!banner) return;
    banner.className = `banner ${kind}`;
    banner.textContent = text;
  }

  private setDownloadsEnabled(enabled: boolean): void {
    for (const format of ["turtle", "ntriples", "jsonld"]) {
      const button = this.root.querySelector<HTMLButtonElement>(`#download-${format}`);
      if (button) button.disabled = !enabled || this.draft.isEmpty();
    }
  }

  /** Bytes exactly as the service produced them; null while the draft is empty. */
  async downloadRecord(
    format: RdfFormat,
  ): Promise<{ filename: string; content: string } | null> {
    this.syncAll();
    if (this.draft.isEmpty()) return null;
    const content = await this.api.serialize(this.draft.toNodes(), format);
    return { filename: `record${FORMAT_EXTENSIONS[format]}`, content };
  }

  private async triggerDownload(format: RdfFormat): Promise<void> {
    const download = await this.downloadRecord(format);
    if (!download) return;
    const blob = new Blob([download.content], { type: "text/plain;charset=utf-8" });
    const anchor = document.createElement("a");
    anchor.href = URL.createObjectURL(blob);
    anchor.download = download.filename;
    anchor.click();
    URL.revokeObjectURL(anchor.href);
  }
}
