// Bundled copy of the authoring guide, shown when GET /guide is unreachable.
// Kept in sync with the server guide; tests/test_guide_fallback.py checks it.
export const GUIDE_FALLBACK: string = JSON.parse(
  "\"# Quiz Markdown Reference\\n\\nWrite whole test sessions as plain text. Each session becomes one\\nMoodle-importable XML file, plus printable student and answer-key papers.\\n\\n## Symbols\\n\\n    #   `# Session name` at the start of a line opens a test session.\\n        Every question that follows belongs to it. `##`, `###`, ... work too.\\n    *   `* Option text` at the start of a line adds an answer option\\n        to the current question (asterisk, then a space).\\n    $   `$...$` wraps a formula. It is passed to Moodle exactly as typed,\\n        dollar signs included, for Moodle's formula filter to render.\\n    !   `![caption](url)` embeds an image by URL. Use a full, reachable\\n        URL: the image is fetched by Moodle when the quiz runs, not here.\\n\\n## Questions and options\\n\\nAny other non-blank line starts a question. Consecutive lines of text are\\njoined into one question, separated by single spaces. List the options\\nright after the question, one per line:\\n\\n    What is 2+2?\\n    * 3\\n    * 4 (ans)\\n\\nMark a correct option by ending its line with `(ans)` or `(correct)` --\\neither word, any capitalization. A question may have several correct\\noptions; each is then worth an equal share of 100%. Written anywhere else\\nin a line, `(ans)` and `(correct)` are ordinary text.\\n\\n## Rules\\n\\n- Every question needs at least 2 options and at least 1 correct option.\\n- A blank line after the options ends the question.\\n- Text before the first `# ...` heading lands in a session named\\n  \\\"Untitled\\\".\\n- Duplicate session names get `-2`, `-3`, ... suffixes so each session\\n  keeps its own output file.\\n- A lone `$` (for example a price) stays plain text; you'll get a warning\\n  in case a formula was intended.\\n\\n## Example\\n\\n    # Algebra Quiz\\n    Solve $x^2 = 4$ for positive x.\\n    * 1\\n    * 2 (ans)\\n    * 4\\n\\n    # Geography Quiz\\n    Which flag is this? ![flag](http://example.org/flag.png)\\n    * France (correct)\\n    * Italy\\n\"",
);
