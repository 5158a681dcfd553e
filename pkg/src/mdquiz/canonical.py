"""Canonical serialization of a document back to dialect Markdown.

The canonical form: one blank line between blocks (heading, stem, option
group), ``* `` option prefix, `` (ans)`` as the only emitted correct marker,
LF line endings, single trailing newline. Re-parsing the output yields a
structurally identical document.
"""

from __future__ import annotations

from .model import QuizDocument, inline_source


def render_markdown(doc: QuizDocument) -> str:
    blocks: list[str] = []
    for section in doc.sections:
        blocks.append(f"{'#' * section.heading_level} {section.name}")
        for question in section.questions:
            blocks.append(inline_source(question.stem))
            option_lines = []
            for option in question.options:
                line = f"* {inline_source(option.body)}"
                if option.correct:
                    line += " (ans)"
                option_lines.append(line)
            if option_lines:
                blocks.append("\n".join(option_lines))
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"
