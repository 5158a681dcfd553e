// Draft persistence: versioned localStorage key, debounced writes,
// newest-timestamp-wins restore, "keep draft, drop rest" migration.

export const STORAGE_VERSION = "v1";
export const DRAFT_KEY = `mdquiz.${STORAGE_VERSION}.draft`;
export const COLLAPSE_KEY = `mdquiz.${STORAGE_VERSION}.guideCollapsed`;

// Older namespaces we know how to lift a draft out of.
const PREVIOUS_DRAFT_KEYS = ["mdquiz.v0.draft", "mdquiz.draft"];

export interface SavedDraft {
  draft: string;
  savedAt: number; // epoch ms
}

export interface DraftStore {
  available: boolean;
  load(): SavedDraft | null;
  save(draft: string, savedAt: number): void;
  loadCollapsed(): boolean;
  saveCollapsed(collapsed: boolean): void;
}

function probe(storage: Storage): boolean {
  try {
    const key = `mdquiz.${STORAGE_VERSION}.probe`;
    storage.setItem(key, "1");
    storage.removeItem(key);
    return true;
  } catch {
    return false;
  }
}

export function createDraftStore(storage: Storage): DraftStore {
  const available = probe(storage);
  if (available) {
    migrate(storage);
  }
  return {
    available,
    load(): SavedDraft | null {
      if (!available) return null;
      const raw = storage.getItem(DRAFT_KEY);
      if (raw === null) return null;
      try {
        const parsed = JSON.parse(raw);
        if (typeof parsed.draft === "string" && typeof parsed.savedAt === "number") {
          return { draft: parsed.draft, savedAt: parsed.savedAt };
        }
      } catch {
        // corrupt state: treat as absent rather than failing the workspace
      }
      return null;
    },
    save(draft: string, savedAt: number): void {
      if (!available) return;
      storage.setItem(DRAFT_KEY, JSON.stringify({ draft, savedAt }));
    },
    loadCollapsed(): boolean {
      if (!available) return false;
      return storage.getItem(COLLAPSE_KEY) === "true";
    },
    saveCollapsed(collapsed: boolean): void {
      if (!available) return;
      storage.setItem(COLLAPSE_KEY, String(collapsed));
    },
  };
}

// Lift the draft (and only the draft) out of an older version's keys.
function migrate(storage: Storage): void {
  if (storage.getItem(DRAFT_KEY) !== null) return;
  for (const key of PREVIOUS_DRAFT_KEYS) {
    const raw = storage.getItem(key);
    if (raw === null) continue;
    let draft: string | null = null;
    try {
      const parsed = JSON.parse(raw);
      if (typeof parsed === "string") draft = parsed;
      else if (parsed && typeof parsed.draft === "string") draft = parsed.draft;
    } catch {
      draft = raw; // oldest format stored the bare text
    }
    storage.removeItem(key);
    if (draft !== null) {
      storage.setItem(DRAFT_KEY, JSON.stringify({ draft, savedAt: 0 }));
      return;
    }
  }
}

export const AUTOSAVE_DEBOUNCE_MS = 1000; // must stay under the 2 s promise

export interface Autosaver {
  onEdit(draft: string): void;
  flush(): void;
}

// Debounced autosave; `onSaved` feeds the "last saved" indicator.
export function createAutosaver(
  store: DraftStore,
  now: () => number,
  onSaved: (savedAt: number) => void,
  schedule: (fn: () => void, ms: number) => number = (fn, ms) =>
    setTimeout(fn, ms) as unknown as number,
  cancel: (id: number) => void = (id) => clearTimeout(id),
): Autosaver {
  let pending: number | null = null;
  let latest: string | null = null;

  const write = () => {
    pending = null;
    if (latest === null) return;
    const savedAt = now();
    store.save(latest, savedAt);
    latest = null;
    onSaved(savedAt);
  };

  return {
    onEdit(draft: string): void {
      latest = draft;
      if (pending !== null) cancel(pending);
      pending = schedule(write, AUTOSAVE_DEBOUNCE_MS);
    },
    flush(): void {
      if (pending !== null) {
        cancel(pending);
        write();
      }
    },
  };
}

// Restore rule: the stored draft wins only if it is not older than what the
// caller already has (two tabs: newer timestamp wins).
export function pickNewer(
  stored: SavedDraft | null,
  currentDraft: string,
  currentSavedAt: number,
): SavedDraft {
  if (stored !== null && stored.savedAt >= currentSavedAt) {
    return stored;
  }
  return { draft: currentDraft, savedAt: currentSavedAt };
}
