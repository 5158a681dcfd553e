"""One-shot conversion: parse, complete weights, emit every requested format.

A request with any fatal parse issue produces no artifacts at all (and in
CLI mode writes no files). Warnings always travel with the manifest.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from .canonical import render_markdown
from .model import ParseIssue, QuizDocument
from .moodle_xml import section_to_xml
from .parser import ParseError, parse_document
from .questionnaire import DocFormat, render_answer_key, render_student_doc
from .weights import WeightPolicy, assign_weights

CANONICAL_MARKDOWN_NAME = "document.md"


class OutputKind(Enum):
    XML = "xml"
    MARKDOWN = "md"
    STUDENT = "student"
    ANSWER_KEY = "key"


ALL_KINDS = frozenset(OutputKind)


@dataclass(frozen=True)
class ConversionRequest:
    source: str
    formats: frozenset[OutputKind] = ALL_KINDS
    policy: WeightPolicy = WeightPolicy.NONE
    doc_format: DocFormat = DocFormat.MARKDOWN
    out_dir: Path | None = None  # set in CLI mode; service mode keeps contents inline


@dataclass(frozen=True)
class ManifestEntry:
    file_name: str
    kind: str
    byte_length: int
    content: str | None = None  # service mode
    path: str | None = None  # CLI mode


@dataclass(frozen=True)
class OutputManifest:
    artifacts: tuple[ManifestEntry, ...]
    issues: tuple[ParseIssue, ...]
    duration_ms: int


def convert(request: ConversionRequest) -> OutputManifest:
    """Run the whole pipeline for one request.

    Raises ParseError on fatal issues (before anything is written) and
    OSError if CLI-mode file writing fails.
    """
    if not request.formats:
        raise ValueError("request selects no output formats")
    started = time.perf_counter()
    doc = parse_document(request.source)
    completed = assign_weights(doc, request.policy)

    entries: list[ManifestEntry] = []
    if OutputKind.MARKDOWN in request.formats:
        entries.append(_entry(CANONICAL_MARKDOWN_NAME, OutputKind.MARKDOWN, render_markdown(doc)))
    for section in completed.sections:
        if OutputKind.XML in request.formats:
            artifact = section_to_xml(section)
            entries.append(_entry(artifact.file_name, OutputKind.XML, artifact.content))
        if OutputKind.STUDENT in request.formats:
            student = render_student_doc(section, request.doc_format)
            entries.append(_entry(student.file_name, OutputKind.STUDENT, student.content))
        if OutputKind.ANSWER_KEY in request.formats:
            key = render_answer_key(section, request.doc_format)
            entries.append(_entry(key.file_name, OutputKind.ANSWER_KEY, key.content))

    names = [entry.file_name for entry in entries]
    if len(set(names)) != len(names):
        raise RuntimeError(f"artifact name collision: {sorted(names)}")

    if request.out_dir is not None:
        entries = _write_all(entries, request.out_dir)

    duration_ms = int((time.perf_counter() - started) * 1000)
    return OutputManifest(
        artifacts=tuple(entries), issues=doc.issues, duration_ms=duration_ms
    )


def _entry(file_name: str, kind: OutputKind, content: str) -> ManifestEntry:
    return ManifestEntry(
        file_name=file_name,
        kind=kind.value,
        byte_length=len(content.encode("utf-8")),
        content=content,
    )


def _write_all(entries: list[ManifestEntry], out_dir: Path) -> list[ManifestEntry]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[ManifestEntry] = []
    for entry in entries:
        target = out_dir / entry.file_name
        assert entry.content is not None
        target.write_text(entry.content, encoding="utf-8", newline="")
        written.append(replace(entry, content=None, path=str(target)))
    return written


def manifest_to_dict(manifest: OutputManifest) -> dict:
    """JSON-ready mapping with the manifest's exact field names."""
    artifacts = []
    for entry in manifest.artifacts:
        item: dict = {
            "file_name": entry.file_name,
            "kind": entry.kind,
            "byte_length": entry.byte_length,
        }
        if entry.path is not None:
            item["path"] = entry.path
        else:
            item["content"] = entry.content
        artifacts.append(item)
    return {
        "artifacts": artifacts,
        "issues": [issue_to_dict(issue) for issue in manifest.issues],
        "duration_ms": manifest.duration_ms,
    }


def issue_to_dict(issue: ParseIssue) -> dict:
    return {
        "severity": issue.severity.value,
        "line": issue.line,
        "column": issue.column,
        "kind": issue.kind.value,
        "message": issue.message,
    }
