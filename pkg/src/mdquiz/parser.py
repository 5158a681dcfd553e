"""Line-based parser for the quiz Markdown dialect.

The grammar, line by line:

* ``#`` at column 1 opens a section; the text after the hashes (any heading
  level) is the section name.
* ``* `` (asterisk + space) at column 1 adds an option to the current
  question. A trailing ``(ans)`` or ``(correct)``, case-insensitive, marks
  the option correct and is stripped from its body.
* Any other non-blank line starts a question stem, or continues one when the
  previous line was also stem text; consecutive stem lines join with a
  single space.
* A blank line after options closes the question.

Within stems and option bodies, ``$...$`` spans are formulas (kept verbatim,
delimiters included) and ``![alt](url)`` is an image reference.

Parsing is total: any text yields either a document or a ParseError carrying
Error-severity issues; malformed inline syntax degrades to plain text with a
warning. A leading UTF-8 BOM is tolerated and stripped; issue positions are
relative to the BOM-stripped text.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass, field

from .model import (
    Formula,
    Image,
    InlineElement,
    IssueKind,
    Option,
    ParseIssue,
    Question,
    QuizDocument,
    Section,
    Severity,
    Text,
    slugify,
)

_HEADING_RE = re.compile(r"^(#+)[ \t]*(.*)$")
_CORRECT_MARKER_RE = re.compile(r"[ \t]*\((?:ans|correct)\)[ \t]*$", re.IGNORECASE)
_FORMULA_RE = re.compile(r"\$[^$]+\$")
_IMAGE_RE = re.compile(r"!\[([^\]]*)\]\(([^)\s]+)\)")

_OPTION_PREFIX = "* "
_UNTITLED = "Untitled"


class ParseError(Exception):
    """Fatal parse failure; ``issues`` holds every issue found, in source order."""

    def __init__(self, issues: tuple[ParseIssue, ...]):
        self.issues = issues
        errors = sum(1 for i in issues if i.severity is Severity.ERROR)
        super().__init__(f"{errors} fatal parse issue(s)")


def scan_inline(text: str, line: int) -> tuple[list[InlineElement], list[ParseIssue]]:
    """Split one logical stem or option body into inline elements.

    Concatenating the sources of the returned elements reproduces ``text``
    exactly. Issue columns are 1-based offsets into ``text``.
    """
    return _scan(text, lambda offset: (line, offset + 1))


def _scan(
    text: str, position_of: Callable[[int], tuple[int, int]]
) -> tuple[list[InlineElement], list[ParseIssue]]:
    elements: list[InlineElement] = []
    issues: list[ParseIssue] = []
    run: list[str] = []

    def flush() -> None:
        if run:
            elements.append(Text("".join(run)))
            run.clear()

    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "$":
            match = _FORMULA_RE.match(text, i)
            if match:
                flush()
                elements.append(Formula(match.group(0)))
                i = match.end()
                continue
            line, column = position_of(i)
            issues.append(
                ParseIssue(
                    Severity.WARNING,
                    line,
                    column,
                    IssueKind.UNCLOSED_FORMULA,
                    "unclosed $ formula; kept as plain text",
                )
            )
            run.append(text[i:])
            break
        if ch == "!" and i + 1 < n and text[i + 1] == "[":
            match = _IMAGE_RE.match(text, i)
            if match:
                flush()
                elements.append(Image(url=match.group(2), alt=match.group(1)))
                i = match.end()
                continue
            line, column = position_of(i)
            issues.append(
                ParseIssue(
                    Severity.WARNING,
                    line,
                    column,
                    IssueKind.MALFORMED_IMAGE,
                    "malformed image reference; kept as plain text",
                )
            )
            run.append("![")
            i += 2
            continue
        run.append(ch)
        i += 1
    flush()
    return elements, issues


@dataclass
class _RawOption:
    body: str
    line: int
    column: int  # 1-based column where the body starts
    correct: bool


@dataclass
class _RawSection:
    name: str
    line: int
    heading_level: int
    questions: list[Question] = field(default_factory=list)


class _DocumentBuilder:
    """Single-pass line classifier accumulating sections, questions and issues."""

    def __init__(self) -> None:
        self.issues: list[ParseIssue] = []
        self.sections: list[_RawSection] = []
        self.current_section: _RawSection | None = None
        self.stem_segments: list[tuple[str, int]] = []  # (text, line number)
        self.options: list[_RawOption] = []
        self.question_open = False
        self.question_line = 0
        self.prev_was_stem = False
        self.saw_content = False

    def warn(self, line: int, column: int, kind: IssueKind, message: str) -> None:
        self.issues.append(ParseIssue(Severity.WARNING, line, column, kind, message))

    def error(self, line: int, column: int, kind: IssueKind, message: str) -> None:
        self.issues.append(ParseIssue(Severity.ERROR, line, column, kind, message))

    def feed(self, line: str, line_no: int) -> None:
        if not line.strip():
            if self.question_open and self.options:
                self.close_question()
            self.prev_was_stem = False
            return
        self.saw_content = True
        if line.startswith("#"):
            self.handle_heading(line, line_no)
        elif line.startswith(_OPTION_PREFIX):
            self.handle_option(line, line_no)
        else:
            self.handle_stem(line, line_no)

    def handle_heading(self, line: str, line_no: int) -> None:
        self.close_question()
        match = _HEADING_RE.match(line)
        assert match is not None
        name = match.group(2).strip()
        if not name:
            self.warn(
                line_no,
                1,
                IssueKind.EMPTY_SECTION_NAME,
                f'heading has no name; using "{_UNTITLED}"',
            )
            name = _UNTITLED
        self.current_section = _RawSection(name, line_no, len(match.group(1)))
        self.sections.append(self.current_section)
        self.prev_was_stem = False

    def handle_option(self, line: str, line_no: int) -> None:
        if not self.question_open:
            self.error(
                line_no,
                1,
                IssueKind.ORPHAN_OPTION,
                "option line with no preceding question stem",
            )
            self.prev_was_stem = False
            return
        body = line[len(_OPTION_PREFIX):]
        marker = _CORRECT_MARKER_RE.search(body)
        correct = marker is not None
        if marker:
            body = body[: marker.start()]
        self.options.append(_RawOption(body, line_no, len(_OPTION_PREFIX) + 1, correct))
        self.prev_was_stem = False

    def handle_stem(self, line: str, line_no: int) -> None:
        if self.question_open and self.prev_was_stem and not self.options:
            self.stem_segments.append((line.rstrip(), line_no))
            return
        self.close_question()
        self.ensure_section(line_no)
        self.question_open = True
        self.question_line = line_no
        self.stem_segments = [(line.rstrip(), line_no)]
        self.options = []
        self.prev_was_stem = True

    def ensure_section(self, line_no: int) -> None:
        if self.current_section is None:
            self.warn(
                line_no,
                1,
                IssueKind.EMPTY_SECTION_NAME,
                f'content before the first section heading; collected into "{_UNTITLED}"',
            )
            self.current_section = _RawSection(_UNTITLED, line_no, 1)
            self.sections.append(self.current_section)

    def close_question(self) -> None:
        if not self.question_open:
            return
        assert self.current_section is not None
        stem, stem_issues = _scan_stem(self.stem_segments)
        self.issues.extend(stem_issues)
        options: list[Option] = []
        for raw in self.options:
            column = raw.column
            elements, option_issues = _scan(
                raw.body, lambda offset, ln=raw.line, col=column: (ln, col + offset)
            )
            self.issues.extend(option_issues)
            options.append(Option(tuple(elements), raw.correct))
        if len(options) < 2:
            self.error(
                self.question_line,
                1,
                IssueKind.NO_OPTIONS,
                f"question needs at least 2 options, found {len(options)}",
            )
        if options and not any(opt.correct for opt in options):
            self.error(
                self.question_line,
                1,
                IssueKind.NO_CORRECT_ANSWER,
                "question has no option marked (ans) or (correct)",
            )
        ordinal = len(self.current_section.questions) + 1
        self.current_section.questions.append(Question(tuple(stem), tuple(options), ordinal))
        self.question_open = False
        self.stem_segments = []
        self.options = []

    def finish(self) -> QuizDocument:
        self.close_question()
        if not self.saw_content:
            self.error(1, 1, IssueKind.EMPTY_DOCUMENT, "document contains no content")
            raise ParseError(tuple(self.issues))
        sections = self.dedupe_sections()
        for raw in self.sections:
            if not raw.questions:
                self.warn(
                    raw.line,
                    1,
                    IssueKind.EMPTY_SECTION,
                    f'section "{raw.name}" has no questions',
                )
        if any(issue.severity is Severity.ERROR for issue in self.issues):
            raise ParseError(tuple(self.issues))
        return QuizDocument(sections=sections, issues=tuple(self.issues))

    def dedupe_sections(self) -> tuple[Section, ...]:
        used: set[str] = set()
        result: list[Section] = []
        for raw in self.sections:
            name = raw.name
            slug = slugify(name)
            if slug in used:
                suffix = 1
                while True:
                    suffix += 1
                    candidate = f"{raw.name}-{suffix}"
                    if slugify(candidate) not in used:
                        break
                self.warn(
                    raw.line,
                    1,
                    IssueKind.DUPLICATE_SECTION_NAME,
                    f'duplicate section name "{raw.name}"; renamed to "{candidate}"',
                )
                name = candidate
                slug = slugify(candidate)
            used.add(slug)
            raw.name = name
            result.append(
                Section(
                    name=name,
                    questions=tuple(raw.questions),
                    heading_level=raw.heading_level,
                )
            )
        return tuple(result)


def _scan_stem(
    segments: list[tuple[str, int]]
) -> tuple[list[InlineElement], list[ParseIssue]]:
    """Scan a stem joined from one or more physical lines.

    Issue positions map back through the join to the originating line and
    column, so diagnostics stay anchored in the source.
    """
    joined = " ".join(text for text, _ in segments)
    positions: list[tuple[int, int]] = []
    for index, (text, line_no) in enumerate(segments):
        if index:
            prev_text, prev_line = segments[index - 1]
            positions.append((prev_line, max(len(prev_text), 1)))
        positions.extend((line_no, col) for col in range(1, len(text) + 1))
    return _scan(joined, lambda offset: positions[offset])


def parse_document(source: str) -> QuizDocument:
    """Parse dialect text into a document, or raise ParseError on fatal issues.

    The returned document carries warnings only; the exception carries the
    full issue list (errors and warnings) in source order.
    """
    if source.startswith("﻿"):
        source = source[1:]
    builder = _DocumentBuilder()
    for line_no, raw_line in enumerate(source.split("\n"), start=1):
        line = raw_line[:-1] if raw_line.endswith("\r") else raw_line
        builder.feed(line, line_no)
    return builder.finish()
