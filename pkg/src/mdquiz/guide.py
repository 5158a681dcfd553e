"""The authoring reference guide.

One source of truth: the CLI ``--print-guide`` flag and the service's
``GET /guide`` both return this text byte-for-byte, and the workspace UI
renders it in its side pane.
"""

GUIDE_TEXT = """\
# Quiz Markdown Reference

Write whole test sessions as plain text. Each session becomes one
Moodle-importable XML file, plus printable student and answer-key papers.

## Symbols

    #   `# Session name` at the start of a line opens a test session.
        Every question that follows belongs to it. `##`, `###`, ... work too.
    *   `* Option text` at the start of a line adds an answer option
        to the current question (asterisk, then a space).
    $   `$...$` wraps a formula. It is passed to Moodle exactly as typed,
        dollar signs included, for Moodle's formula filter to render.
    !   `![caption](url)` embeds an image by URL. Use a full, reachable
        URL: the image is fetched by Moodle when the quiz runs, not here.

## Questions and options

Any other non-blank line starts a question. Consecutive lines of text are
joined into one question, separated by single spaces. List the options
right after the question, one per line:

    What is 2+2?
    * 3
    * 4 (ans)

Mark a correct option by ending its line with `(ans)` or `(correct)` --
either word, any capitalization. A question may have several correct
options; each is then worth an equal share of 100%. Written anywhere else
in a line, `(ans)` and `(correct)` are ordinary text.

## Rules

- Every question needs at least 2 options and at least 1 correct option.
- A blank line after the options ends the question.
- Text before the first `# ...` heading lands in a session named
  "Untitled".
- Duplicate session names get `-2`, `-3`, ... suffixes so each session
  keeps its own output file.
- A lone `$` (for example a price) stays plain text; you'll get a warning
  in case a formula was intended.

## Example

    # Algebra Quiz
    Solve $x^2 = 4$ for positive x.
    * 1
    * 2 (ans)
    * 4

    # Geography Quiz
    Which flag is this? ![flag](http://example.org/flag.png)
    * France (correct)
    * Italy
"""


def reference_guide() -> str:
    """The dialect rules shown beside the editor and printed by the CLI."""
    return GUIDE_TEXT
