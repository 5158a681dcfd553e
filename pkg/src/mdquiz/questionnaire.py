"""Printable questionnaires: a student paper and a teacher answer key.

Both audiences share one fixed layout (numbered questions, lettered options)
so the teacher copy is exactly the student copy plus a check mark on each
correct option and an ``Answer:`` line per question. The student copy never
carries any correctness signal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from xml.sax.saxutils import escape

from .model import Question, Section, inline_source
from .moodle_xml import html_of_inline

CHECK_MARK = "✓"


class Audience(Enum):
    STUDENT = "student"
    TEACHER = "teacher"


class DocFormat(Enum):
    MARKDOWN = "md"
    HTML = "html"
    DOC = "doc"  # HTML content written with a .doc extension


@dataclass(frozen=True)
class DocArtifact:
    section_name: str
    audience: Audience
    format: DocFormat
    file_name: str
    content: str


def option_letter(index: int) -> str:
    """0-based index to a, b, ... z, aa, ab, ..."""
    letters = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        letters = chr(ord("a") + rem) + letters
    return letters


def render_student_doc(section: Section, fmt: DocFormat = DocFormat.MARKDOWN) -> DocArtifact:
    """Questionnaire with no correctness markers and no weights."""
    return _render(section, Audience.STUDENT, fmt)


def render_answer_key(section: Section, fmt: DocFormat = DocFormat.MARKDOWN) -> DocArtifact:
    """Student layout plus check marks and per-question answer lines.

    Requires a completed section (weights present) to keep one pipeline order.
    """
    for question in section.questions:
        for option in question.options:
            if option.weight is None:
                raise ValueError(
                    f'section "{section.name}" is not completed; '
                    "run weight completion before rendering the answer key"
                )
    return _render(section, Audience.TEACHER, fmt)


def _render(section: Section, audience: Audience, fmt: DocFormat) -> DocArtifact:
    with_key = audience is Audience.TEACHER
    if fmt is DocFormat.MARKDOWN:
        content = _markdown_doc(section, with_key)
        extension = "md"
    else:
        content = _html_doc(section, with_key)
        extension = fmt.value  # html, or the .doc alias carrying HTML
    kind = "student" if audience is Audience.STUDENT else "key"
    return DocArtifact(
        section_name=section.name,
        audience=audience,
        format=fmt,
        file_name=f"{section.slug}.{kind}.{extension}",
        content=content,
    )


def _correct_letters(question: Question) -> list[str]:
    return [option_letter(i) for i, opt in enumerate(question.options) if opt.correct]


def _markdown_doc(section: Section, with_key: bool) -> str:
    blocks = [f"## {section.name}"]
    for question in section.questions:
        lines = [f"{question.ordinal}. {inline_source(question.stem)}"]
        for index, option in enumerate(question.options):
            line = f"   {option_letter(index)}. {inline_source(option.body)}"
            if with_key and option.correct:
                line += f" {CHECK_MARK}"
            lines.append(line)
        if with_key:
            lines.append(f"   Answer: {', '.join(_correct_letters(question))}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


_HTML_STYLE = """\
body { font-family: Georgia, 'Times New Roman', serif; max-width: 42em; margin: 2em auto; }
h2 { border-bottom: 1px solid #444; padding-bottom: 0.3em; }
p.stem { margin: 1em 0 0.2em 0; font-weight: bold; }
p.option { margin: 0.1em 0 0.1em 2em; }
p.answer { margin: 0.3em 0 0.3em 2em; font-style: italic; }
@media print { body { margin: 1cm auto; } }"""


def _html_doc(section: Section, with_key: bool) -> str:
    title = escape(section.name)
    lines = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8"/>',
        f"<title>{title}</title>",
        "<style>",
        _HTML_STYLE,
        "</style>",
        "</head>",
        "<body>",
        f"<h2>{title}</h2>",
    ]
    for question in section.questions:
        lines.append(
            f'<p class="stem">{question.ordinal}. {html_of_inline(question.stem)}</p>'
        )
        for index, option in enumerate(question.options):
            body = f"{option_letter(index)}. {html_of_inline(option.body)}"
            if with_key and option.correct:
                body += f" {CHECK_MARK}"
            lines.append(f'<p class="option">{body}</p>')
        if with_key:
            lines.append(
                f'<p class="answer">Answer: {", ".join(_correct_letters(question))}</p>'
            )
    lines.extend(["</body>", "</html>"])
    return "\n".join(lines) + "\n"
