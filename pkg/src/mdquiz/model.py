"""Document model for the quiz Markdown dialect.

Everything here is immutable after construction: parsing and all the
emitters are pure functions over these types, so documents can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


class IssueKind(Enum):
    """Closed set of machine-readable issue codes."""

    NO_OPTIONS = "NoOptions"
    NO_CORRECT_ANSWER = "NoCorrectAnswer"
    ORPHAN_OPTION = "OrphanOption"
    EMPTY_SECTION_NAME = "EmptySectionName"
    UNCLOSED_FORMULA = "UnclosedFormula"
    MALFORMED_IMAGE = "MalformedImage"
    DUPLICATE_SECTION_NAME = "DuplicateSectionName"
    EMPTY_DOCUMENT = "EmptyDocument"
    EMPTY_SECTION = "EmptySection"


@dataclass(frozen=True)
class ParseIssue:
    """A line/column-anchored diagnostic. Positions are 1-based."""

    severity: Severity
    line: int
    column: int
    kind: IssueKind
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity.value}: {self.kind.value}: {self.message}"


@dataclass(frozen=True)
class Text:
    content: str

    @property
    def source(self) -> str:
        return self.content


@dataclass(frozen=True)
class Formula:
    """An inline formula, delimiters included (``$...$``), passed through verbatim."""

    source: str


@dataclass(frozen=True)
class Image:
    """An image reference by URL; the URL is never fetched or validated."""

    url: str
    alt: str

    @property
    def source(self) -> str:
        return f"![{self.alt}]({self.url})"


InlineElement = Text | Formula | Image


def inline_source(elements: tuple[InlineElement, ...]) -> str:
    """Concatenated sources; equals the scanned text byte-for-byte."""
    return "".join(el.source for el in elements)


def inline_plain_text(elements: tuple[InlineElement, ...]) -> str:
    """Display text: formulas verbatim, images reduced to their alt text."""
    parts = []
    for el in elements:
        if isinstance(el, Image):
            parts.append(el.alt)
        else:
            parts.append(el.source)
    return "".join(parts)


@dataclass(frozen=True)
class Option:
    """One answer option; ``weight`` stays None until weight completion runs."""

    body: tuple[InlineElement, ...]
    correct: bool
    weight: str | None = None


@dataclass(frozen=True)
class Question:
    stem: tuple[InlineElement, ...]
    options: tuple[Option, ...]
    ordinal: int  # 1-based position within its section

    @property
    def correct_count(self) -> int:
        return sum(1 for opt in self.options if opt.correct)

    @property
    def single(self) -> bool:
        return self.correct_count == 1


@dataclass(frozen=True)
class Section:
    """A named test session; becomes exactly one XML file."""

    name: str
    questions: tuple[Question, ...] = ()
    heading_level: int = 1

    @property
    def slug(self) -> str:
        return slugify(self.name)


@dataclass(frozen=True)
class QuizDocument:
    """Root of the pipeline; ``issues`` carries warnings only."""

    sections: tuple[Section, ...] = ()
    issues: tuple[ParseIssue, ...] = ()


def slugify(name: str) -> str:
    """Filename-safe slug: lowercase, non-alphanumeric runs collapsed to ``-``."""
    parts: list[str] = []
    pending_dash = False
    for ch in name.lower():
        if ch.isalnum():
            if pending_dash and parts:
                parts.append("-")
            pending_dash = False
            parts.append(ch)
        else:
            pending_dash = True
    slug = "".join(parts)
    return slug or "section"
