// The single-page authoring workspace: editor on the left, reference guide
// on the right, explicit convert-and-download. Everything lives on one page;
// drafts autosave to browser storage and survive reloads.

import {
  convertDraft,
  fetchGuide,
  type ConvertOptions,
  type FetchLike,
  type Issue,
  type Manifest,
} from "./api.js";
import { downloadArtifact } from "./download.js";
import {
  createAutosaver,
  createDraftStore,
  pickNewer,
  type Autosaver,
  type DraftStore,
} from "./storage.js";

export interface WorkspaceDeps {
  fetchImpl?: FetchLike;
  storage?: Storage;
  now?: () => number;
}

export interface Workspace {
  editor: HTMLTextAreaElement;
  convertButton: HTMLButtonElement;
  store: DraftStore;
  autosaver: Autosaver;
  lastManifest: Manifest | null;
}

const FORMAT_IDS = ["xml", "md", "student", "key"];

export function initWorkspace(doc: Document, deps: WorkspaceDeps = {}): Workspace {
  const fetchImpl: FetchLike =
    deps.fetchImpl ?? ((input, init) => globalThis.fetch(input, init));
  const now = deps.now ?? (() => Date.now());
  const store = createDraftStore(deps.storage ?? globalThis.localStorage);

  const editor = mustFind<HTMLTextAreaElement>(doc, "#editor");
  const convertButton = mustFind<HTMLButtonElement>(doc, "#convert");
  const savedIndicator = mustFind<HTMLElement>(doc, "#saved-indicator");
  const issuesPane = mustFind<HTMLElement>(doc, "#issues");
  const artifactsPane = mustFind<HTMLElement>(doc, "#artifacts");
  const guidePane = mustFind<HTMLElement>(doc, "#guide-pane");
  const guideContent = mustFind<HTMLElement>(doc, "#guide-content");
  const guideToggle = mustFind<HTMLButtonElement>(doc, "#guide-toggle");
  const banner = mustFind<HTMLElement>(doc, "#storage-banner");

  const workspace: Workspace = {
    editor,
    convertButton,
    store,
    autosaver: null as unknown as Autosaver,
    lastManifest: null,
  };

  // --- storage availability -------------------------------------------------
  if (!store.available) {
    banner.hidden = false; // editing stays permitted, only persistence is off
  }

  // --- restore draft (newest timestamp wins) --------------------------------
  const restored = pickNewer(store.load(), "", 0);
  editor.value = restored.draft;
  if (restored.savedAt > 0) {
    showSaved(restored.savedAt, "restored");
  }

  // --- autosave --------------------------------------------------------------
  const autosaver = createAutosaver(store, now, (savedAt) => showSaved(savedAt, "saved"));
  workspace.autosaver = autosaver;
  editor.addEventListener("input", () => {
    autosaver.onEdit(editor.value);
    syncConvertEnabled();
  });

  // --- convert & download ----------------------------------------------------
  convertButton.addEventListener("click", () => {
    void runConvert();
  });
  syncConvertEnabled();

  // --- guide pane ------------------------------------------------------------
  if (store.loadCollapsed()) {
    guidePane.classList.add("collapsed");
  }
  guideToggle.addEventListener("click", () => {
    const collapsed = guidePane.classList.toggle("collapsed");
    store.saveCollapsed(collapsed);
  });
  void fetchGuide(fetchImpl).then((text) => {
    guideContent.textContent = text;
  });

  return workspace;

  // ---------------------------------------------------------------------------

  function showSaved(savedAt: number, verb: string): void {
    const stamp = new Date(savedAt).toLocaleTimeString();
    savedIndicator.textContent = `Draft ${verb} at ${stamp}`;
  }

  function syncConvertEnabled(): void {
    convertButton.disabled = editor.value.trim() === "";
  }

  function chosenOptions(): ConvertOptions {
    const formats = FORMAT_IDS.filter((id) => {
      const box = doc.querySelector<HTMLInputElement>(`#fmt-${id}`);
      return box === null || box.checked;
    });
    const select = doc.querySelector<HTMLSelectElement>("#doc-format");
    return {
      formats: formats.length > 0 ? formats : FORMAT_IDS,
      docFormat: select?.value ?? "md",
    };
  }

  async function runConvert(): Promise<void> {
    const draft = editor.value;
    clearPane(issuesPane);
    clearPane(artifactsPane);
    convertButton.disabled = true;
    try {
      const result = await convertDraft(fetchImpl, draft, chosenOptions());
      if (result.ok) {
        workspace.lastManifest = result.manifest;
        renderIssues(result.manifest.issues);
        renderArtifacts(result.manifest);
      } else {
        renderIssues(result.issues);
        steerToFirstError(result.issues);
      }
    } catch {
      renderNetworkFailure(draft);
    } finally {
      syncConvertEnabled();
    }
  }

  function renderIssues(issues: Issue[]): void {
    for (const issue of issues) {
      const item = doc.createElement("div");
      item.className = `issue issue-${issue.severity}`;
      item.dataset.line = String(issue.line);
      item.dataset.kind = issue.kind;
      item.textContent = `${issue.line}:${issue.column} ${issue.severity}: ${issue.kind}: ${issue.message}`;
      item.addEventListener("click", () => highlightLine(issue.line));
      issuesPane.appendChild(item);
    }
  }

  function steerToFirstError(issues: Issue[]): void {
    const first = issues.find((issue) => issue.severity === "error") ?? issues[0];
    if (first !== undefined) {
      highlightLine(first.line);
    }
  }

  function highlightLine(line: number): void {
    const lines = editor.value.split("\n");
    const bounded = Math.min(Math.max(line, 1), lines.length);
    let start = 0;
    for (let i = 0; i < bounded - 1; i += 1) {
      start += lines[i].length + 1;
    }
    const end = start + lines[bounded - 1].length;
    editor.focus();
    editor.setSelectionRange(start, end);
    editor.dataset.highlightedLine = String(bounded);
    // Rough scroll: place the selected line near the middle of the viewport.
    const lineHeight = editor.scrollHeight / Math.max(lines.length, 1);
    editor.scrollTop = Math.max(0, (bounded - 1) * lineHeight - editor.clientHeight / 2);
  }

  function renderArtifacts(manifest: Manifest): void {
    const heading = doc.createElement("div");
    heading.className = "artifacts-heading";
    heading.textContent = `${manifest.artifacts.length} file(s) in ${manifest.duration_ms} ms`;
    artifactsPane.appendChild(heading);
    for (const artifact of manifest.artifacts) {
      const row = doc.createElement("div");
      row.className = "artifact";
      const label = doc.createElement("span");
      label.textContent = `${artifact.file_name} (${artifact.byte_length} bytes)`;
      const button = doc.createElement("button");
      button.textContent = "Download";
      button.dataset.fileName = artifact.file_name;
      button.addEventListener("click", () =>
        downloadArtifact(doc, artifact.file_name, artifact.content),
      );
      row.append(label, " ", button);
      artifactsPane.appendChild(row);
    }
  }

  function renderNetworkFailure(draft: string): void {
    const note = doc.createElement("div");
    note.className = "issue issue-network";
    note.textContent = "Could not reach the conversion service. The draft is untouched.";
    const retry = doc.createElement("button");
    retry.id = "retry";
    retry.textContent = "Retry";
    retry.addEventListener("click", () => {
      editor.value = draft; // belt and braces: retry exactly what was submitted
      void runConvert();
    });
    note.append(" ", retry);
    issuesPane.appendChild(note);
  }

  function clearPane(pane: HTMLElement): void {
    while (pane.firstChild) {
      pane.firstChild.remove();
    }
  }
}

function mustFind<T extends Element>(doc: Document, selector: string): T {
  const element = doc.querySelector<T>(selector);
  if (element === null) {
    throw new Error(`workspace markup is missing ${selector}`);
  }
  return element;
}
