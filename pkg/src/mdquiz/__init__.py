"""Quiz authoring toolkit: a small Markdown dialect in, Moodle XML and
printable questionnaires out."""

from .canonical import render_markdown
from .guide import reference_guide
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
    inline_plain_text,
    inline_source,
    slugify,
)
from .moodle_xml import XmlArtifact, html_of_inline, section_to_xml
from .parser import ParseError, parse_document, scan_inline
from .pipeline import (
    ALL_KINDS,
    ConversionRequest,
    ManifestEntry,
    OutputKind,
    OutputManifest,
    convert,
)
from .questionnaire import (
    Audience,
    DocArtifact,
    DocFormat,
    render_answer_key,
    render_student_doc,
)
from .weights import WeightPolicy, assign_weights, format_weight

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "Audience",
    "ConversionRequest",
    "DocArtifact",
    "DocFormat",
    "Formula",
    "Image",
    "InlineElement",
    "IssueKind",
    "ManifestEntry",
    "Option",
    "OutputKind",
    "OutputManifest",
    "ParseError",
    "ParseIssue",
    "Question",
    "QuizDocument",
    "Section",
    "Severity",
    "Text",
    "XmlArtifact",
    "WeightPolicy",
    "assign_weights",
    "convert",
    "format_weight",
    "html_of_inline",
    "inline_plain_text",
    "inline_source",
    "parse_document",
    "reference_guide",
    "render_answer_key",
    "render_markdown",
    "render_student_doc",
    "scan_inline",
    "section_to_xml",
    "slugify",
    "__version__",
]
