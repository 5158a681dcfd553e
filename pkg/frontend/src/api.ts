// Thin client for the conversion service.

import { GUIDE_FALLBACK } from "./guide-fallback.js";

export interface ArtifactEntry {
  file_name: string;
  kind: string;
  byte_length: number;
  content: string;
}

export interface Issue {
  severity: "error" | "warning";
  line: number;
  column: number;
  kind: string;
  message: string;
}

export interface Manifest {
  artifacts: ArtifactEntry[];
  issues: Issue[];
  duration_ms: number;
}

export type ConvertResult =
  | { ok: true; manifest: Manifest }
  | { ok: false; issues: Issue[] };

export interface ConvertOptions {
  formats: string[];
  docFormat: string;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export async function convertDraft(
  fetchImpl: FetchLike,
  source: string,
  options: ConvertOptions,
): Promise<ConvertResult> {
  const response = await fetchImpl("/convert", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({
      source,
      formats: options.formats,
      doc_format: options.docFormat,
    }),
  });
  const body = await response.json();
  if (response.status === 422) {
    return { ok: false, issues: (body.issues ?? []) as Issue[] };
  }
  if (!response.ok) {
    throw new Error(`convert failed with status ${response.status}`);
  }
  return { ok: true, manifest: body as Manifest };
}

export async function fetchGuide(fetchImpl: FetchLike): Promise<string> {
  try {
    const response = await fetchImpl("/guide");
    if (response.ok) {
      return await response.text();
    }
  } catch {
    // fall through to the bundled copy
  }
  return GUIDE_FALLBACK;
}
