from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from mdquiz import reference_guide
from mdquiz.cli import EXIT_IO, EXIT_OK, EXIT_PARSE, main

BASIC = "# Quiz A\nWhat is 2+2?\n* 3\n* 4 (ans)\n"


def run_cli(argv, stdin_text=None, monkeypatch=None):
    stdout, stderr = io.StringIO(), io.StringIO()
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(argv)
    return code, stdout.getvalue(), stderr.getvalue()


def test_converts_a_file(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text(BASIC, encoding="utf-8")
    out_dir = tmp_path / "out"
    code, stdout, stderr = run_cli([str(source), "-o", str(out_dir)])
    assert code == EXIT_OK
    assert stderr == ""
    written = sorted(p.name for p in out_dir.iterdir())
    assert written == [
        "document.md",
        "quiz-a.key.md",
        "quiz-a.student.md",
        "quiz-a.xml",
    ]
    assert "4 file(s)" in stdout


def test_reads_stdin_with_dash(tmp_path, monkeypatch):
    out_dir = tmp_path / "out"
    code, stdout, _ = run_cli(
        ["-", "-o", str(out_dir), "--emit", "xml"], stdin_text=BASIC, monkeypatch=monkeypatch
    )
    assert code == EXIT_OK
    assert (out_dir / "quiz-a.xml").is_file()


def test_emit_selects_kinds(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text(BASIC, encoding="utf-8")
    out_dir = tmp_path / "out"
    code, _, _ = run_cli([str(source), "-o", str(out_dir), "--emit", "student,key"])
    assert code == EXIT_OK
    assert sorted(p.name for p in out_dir.iterdir()) == [
        "quiz-a.key.md",
        "quiz-a.student.md",
    ]


def test_doc_format_doc_writes_html_in_doc_files(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text(BASIC, encoding="utf-8")
    out_dir = tmp_path / "out"
    code, _, _ = run_cli(
        [str(source), "-o", str(out_dir), "--emit", "student", "--doc-format", "doc"]
    )
    assert code == EXIT_OK
    content = (out_dir / "quiz-a.student.doc").read_text(encoding="utf-8")
    assert content.startswith("<!DOCTYPE html>")


def test_penalty_balanced(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text("# S\nQ?\n* a (ans)\n* b (ans)\n* c\n", encoding="utf-8")
    out_dir = tmp_path / "out"
    code, _, _ = run_cli(
        [str(source), "-o", str(out_dir), "--emit", "xml", "--penalty", "balanced"]
    )
    assert code == EXIT_OK
    assert 'fraction="-50.0000000"' in (out_dir / "s.xml").read_text(encoding="utf-8")


def test_fatal_parse_issues_exit_1_and_write_nothing(tmp_path):
    source = tmp_path / "bad.md"
    source.write_text("# S\n* orphan\n", encoding="utf-8")
    out_dir = tmp_path / "out"
    code, stdout, stderr = run_cli([str(source), "-o", str(out_dir)])
    assert code == EXIT_PARSE
    assert "OrphanOption" in stderr
    assert "2:1" in stderr
    assert not out_dir.exists()
    assert stdout == ""


def test_warnings_go_to_stderr_on_success(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text("Loose?\n* a\n* b (ans)\n", encoding="utf-8")
    code, _, stderr = run_cli([str(source), "-o", str(tmp_path / "out")])
    assert code == EXIT_OK
    assert "EmptySectionName" in stderr


def test_missing_input_file_exits_2(tmp_path):
    code, _, stderr = run_cli([str(tmp_path / "absent.md")])
    assert code == EXIT_IO
    assert "cannot read" in stderr


def test_no_input_argument_exits_2():
    code, _, stderr = run_cli([])
    assert code == EXIT_IO
    assert "required" in stderr


def test_print_guide_matches_library_text():
    code, stdout, _ = run_cli(["--print-guide"])
    assert code == EXIT_OK
    assert stdout == reference_guide()


def test_unknown_emit_token_fails_fast(tmp_path):
    source = tmp_path / "quiz.md"
    source.write_text(BASIC, encoding="utf-8")
    with pytest.raises(SystemExit):
        main([str(source), "--emit", "pdf"])
