from __future__ import annotations

import pytest

from mdquiz import (
    ALL_KINDS,
    ConversionRequest,
    DocFormat,
    OutputKind,
    ParseError,
    WeightPolicy,
    convert,
)

BASIC = "# Quiz A\nWhat is 2+2?\n* 3\n* 4 (ans)\n"
TWO_SECTIONS = BASIC + "\n# Quiz B\nColor of snow?\n* white (ans)\n* green\n"


def test_single_section_all_formats_yields_four_artifacts():
    manifest = convert(ConversionRequest(source=BASIC))
    names = [entry.file_name for entry in manifest.artifacts]
    assert names == [
        "document.md",
        "quiz-a.xml",
        "quiz-a.student.md",
        "quiz-a.key.md",
    ]
    kinds = [entry.kind for entry in manifest.artifacts]
    assert kinds == ["md", "xml", "student", "key"]
    assert manifest.duration_ms >= 0
    assert manifest.issues == ()


def test_two_sections_multiply_per_section_artifacts():
    manifest = convert(ConversionRequest(source=TWO_SECTIONS))
    names = [entry.file_name for entry in manifest.artifacts]
    assert names == [
        "document.md",
        "quiz-a.xml",
        "quiz-a.student.md",
        "quiz-a.key.md",
        "quiz-b.xml",
        "quiz-b.student.md",
        "quiz-b.key.md",
    ]


def test_format_selection():
    manifest = convert(
        ConversionRequest(source=BASIC, formats=frozenset({OutputKind.XML}))
    )
    assert [entry.file_name for entry in manifest.artifacts] == ["quiz-a.xml"]


def test_doc_format_flows_to_file_names():
    manifest = convert(
        ConversionRequest(
            source=BASIC,
            formats=frozenset({OutputKind.STUDENT, OutputKind.ANSWER_KEY}),
            doc_format=DocFormat.HTML,
        )
    )
    assert [entry.file_name for entry in manifest.artifacts] == [
        "quiz-a.student.html",
        "quiz-a.key.html",
    ]


def test_policy_reaches_the_xml():
    manifest = convert(
        ConversionRequest(
            source="# S\nQ?\n* a (ans)\n* b (ans)\n* c\n",
            formats=frozenset({OutputKind.XML}),
            policy=WeightPolicy.BALANCED,
        )
    )
    assert 'fraction="-50.0000000"' in manifest.artifacts[0].content


def test_empty_formats_rejected():
    with pytest.raises(ValueError):
        convert(ConversionRequest(source=BASIC, formats=frozenset()))


def test_service_mode_inlines_content():
    manifest = convert(ConversionRequest(source=BASIC))
    for entry in manifest.artifacts:
        assert entry.content is not None
        assert entry.path is None
        assert entry.byte_length == len(entry.content.encode("utf-8"))


def test_cli_mode_writes_files(tmp_path):
    out_dir = tmp_path / "nested" / "out"
    manifest = convert(ConversionRequest(source=TWO_SECTIONS, out_dir=out_dir))
    assert len(manifest.artifacts) == 7
    for entry in manifest.artifacts:
        assert entry.content is None
        assert entry.path is not None
        data = (out_dir / entry.file_name).read_bytes()
        assert len(data) == entry.byte_length


def test_fatal_issues_write_nothing(tmp_path):
    out_dir = tmp_path / "out"
    with pytest.raises(ParseError):
        convert(ConversionRequest(source="* orphan\n", out_dir=out_dir))
    assert not out_dir.exists()


def test_warnings_propagate():
    manifest = convert(ConversionRequest(source="Loose?\n* a\n* b (ans)\n"))
    assert [issue.kind.value for issue in manifest.issues] == ["EmptySectionName"]


def test_ten_item_section_converts():
    blocks = "\n\n".join(f"Question {i}?\n* a\n* b (ans)" for i in range(1, 11))
    manifest = convert(
        ConversionRequest(
            source=f"# Set 1\n{blocks}\n", formats=frozenset({OutputKind.XML})
        )
    )
    assert manifest.artifacts[0].content.count('<question type="multichoice">') == 10


def test_all_kinds_is_the_default():
    assert ConversionRequest(source=BASIC).formats == ALL_KINDS
