// Save an in-memory artifact as a local file via a Blob object URL.

const MIME_BY_EXTENSION: Record<string, string> = {
  xml: "application/xml",
  md: "text/markdown",
  html: "text/html",
  doc: "application/msword",
};

export function mimeFor(fileName: string): string {
  const extension = fileName.split(".").pop() ?? "";
  return MIME_BY_EXTENSION[extension] ?? "application/octet-stream";
}

export function downloadArtifact(doc: Document, fileName: string, content: string): void {
  const blob = new Blob([content], { type: `${mimeFor(fileName)};charset=utf-8` });
  const url = URL.createObjectURL(blob);
  const anchor = doc.createElement("a");
  anchor.href = url;
  anchor.download = fileName;
  doc.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}
