import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import {
  AUTOSAVE_DEBOUNCE_MS,
  COLLAPSE_KEY,
  DRAFT_KEY,
  createAutosaver,
  createDraftStore,
  pickNewer,
} from "../src/storage.js";

beforeEach(() => {
  localStorage.clear();
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("draft store", () => {
  it("saves and loads drafts with timestamps", () => {
    const store = createDraftStore(localStorage);
    store.save("# Quiz\n", 1234);
    expect(store.load()).toEqual({ draft: "# Quiz\n", savedAt: 1234 });
  });

  it("reports availability and survives corrupt state", () => {
    const store = createDraftStore(localStorage);
    expect(store.available).toBe(true);
    localStorage.setItem(DRAFT_KEY, "{nonsense");
    expect(store.load()).toBeNull();
  });

  it("marks storage unavailable when it throws", () => {
    const broken = {
      setItem: () => {
        throw new Error("quota");
      },
      getItem: () => null,
      removeItem: () => {},
    } as unknown as Storage;
    const store = createDraftStore(broken);
    expect(store.available).toBe(false);
    expect(store.load()).toBeNull();
    store.save("ignored", 1); // must not throw
  });

  it("migrates an old-version draft and drops the rest", () => {
    localStorage.setItem(
      "mdquiz.v0.draft",
      JSON.stringify({ draft: "old text", theme: "dark" }),
    );
    const store = createDraftStore(localStorage);
    expect(store.load()).toEqual({ draft: "old text", savedAt: 0 });
    expect(localStorage.getItem("mdquiz.v0.draft")).toBeNull();
  });

  it("keeps the current draft over older namespaces", () => {
    localStorage.setItem(DRAFT_KEY, JSON.stringify({ draft: "new", savedAt: 9 }));
    localStorage.setItem("mdquiz.v0.draft", JSON.stringify({ draft: "old" }));
    const store = createDraftStore(localStorage);
    expect(store.load()).toEqual({ draft: "new", savedAt: 9 });
  });

  it("persists the guide collapse preference", () => {
    const store = createDraftStore(localStorage);
    expect(store.loadCollapsed()).toBe(false);
    store.saveCollapsed(true);
    expect(localStorage.getItem(COLLAPSE_KEY)).toBe("true");
    expect(store.loadCollapsed()).toBe(true);
  });
});

describe("autosaver", () => {
  it("debounces and writes within the promised window", () => {
    const store = createDraftStore(localStorage);
    let clock = 1000;
    const saved: number[] = [];
    const saver = createAutosaver(store, () => clock, (at) => saved.push(at));

    saver.onEdit("a");
    vi.advanceTimersByTime(400);
    saver.onEdit("ab");
    vi.advanceTimersByTime(400);
    expect(store.load()).toBeNull(); // still inside the debounce window

    clock = 2000;
    vi.advanceTimersByTime(AUTOSAVE_DEBOUNCE_MS);
    expect(store.load()).toEqual({ draft: "ab", savedAt: 2000 });
    expect(saved).toEqual([2000]);
    expect(AUTOSAVE_DEBOUNCE_MS).toBeLessThan(2000);
  });

  it("flush persists a pending edit immediately", () => {
    const store = createDraftStore(localStorage);
    const saver = createAutosaver(store, () => 5, () => {});
    saver.onEdit("pending");
    saver.flush();
    expect(store.load()).toEqual({ draft: "pending", savedAt: 5 });
  });
});

describe("restore policy", () => {
  it("never overwrites a newer draft with an older one", () => {
    const stored = { draft: "older tab", savedAt: 100 };
    expect(pickNewer(stored, "newer tab", 200)).toEqual({
      draft: "newer tab",
      savedAt: 200,
    });
  });

  it("prefers the stored draft when it is newer (two tabs)", () => {
    // tab A saved at t=100, tab B saved later at t=300: B wins on restore
    const store = createDraftStore(localStorage);
    store.save("tab A text", 100);
    store.save("tab B text", 300);
    const restored = pickNewer(store.load(), "tab A text", 100);
    expect(restored).toEqual({ draft: "tab B text", savedAt: 300 });
  });
});
