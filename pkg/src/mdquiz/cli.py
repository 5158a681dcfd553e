"""Command-line front end.

Exit codes: 0 on success, 1 on fatal parse issues, 2 on I/O or bind failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .guide import reference_guide
from .parser import ParseError
from .pipeline import ALL_KINDS, ConversionRequest, OutputKind, convert
from .questionnaire import DocFormat
from .weights import WeightPolicy

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_IO = 2


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdquiz",
        description=(
            "Convert quiz Markdown into Moodle XML, canonical Markdown and "
            "printable questionnaires."
        ),
    )
    parser.add_argument(
        "input",
        nargs="?",
        help="input file, or - for stdin",
    )
    parser.add_argument(
        "-o",
        "--out-dir",
        default=".",
        help="directory for generated files (created if missing; default: current directory)",
    )
    parser.add_argument(
        "--emit",
        default="xml,md,student,key",
        help="comma-separated output kinds: xml, md, student, key (default: all)",
    )
    parser.add_argument(
        "--doc-format",
        choices=[fmt.value for fmt in DocFormat],
        default="md",
        help="format of the student/key questionnaires (doc = HTML in a .doc file)",
    )
    parser.add_argument(
        "--penalty",
        choices=[policy.value for policy in WeightPolicy],
        default="none",
        help="weight of wrong options: none = 0, balanced = -100/k",
    )
    parser.add_argument(
        "--print-guide",
        action="store_true",
        help="print the authoring reference guide and exit",
    )
    parser.add_argument(
        "--serve",
        action="store_true",
        help="run the local conversion service and workspace UI",
    )
    parser.add_argument("--host", default="127.0.0.1", help="service bind address")
    parser.add_argument("--port", type=int, default=8000, help="service port")
    return parser


def _parse_emit(raw: str) -> frozenset[OutputKind]:
    tokens = [token.strip() for token in raw.split(",") if token.strip()]
    try:
        kinds = frozenset(OutputKind(token) for token in tokens)
    except ValueError:
        valid = ", ".join(kind.value for kind in OutputKind)
        raise SystemExit(f"mdquiz: unknown --emit value in {raw!r} (valid: {valid})")
    return kinds or ALL_KINDS


def _read_source(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    return Path(spec).read_text(encoding="utf-8")


def _serve(host: str, port: int) -> int:
    import uvicorn

    from .service import create_app, default_ui_dir

    app = create_app(default_ui_dir())
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    except OSError as exc:
        print(f"mdquiz: failed to serve on {host}:{port}: {exc}", file=sys.stderr)
        return EXIT_IO
    except SystemExit:  # uvicorn exits itself on startup failure
        print(f"mdquiz: failed to serve on {host}:{port}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)

    if args.print_guide:
        sys.stdout.write(reference_guide())
        return EXIT_OK
    if args.serve:
        return _serve(args.host, args.port)
    if args.input is None:
        build_arg_parser().print_usage(sys.stderr)
        print("mdquiz: an input file (or -) is required", file=sys.stderr)
        return EXIT_IO

    try:
        source = _read_source(args.input)
    except OSError as exc:
        print(f"mdquiz: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_IO

    request = ConversionRequest(
        source=source,
        formats=_parse_emit(args.emit),
        policy=WeightPolicy(args.penalty),
        doc_format=DocFormat(args.doc_format),
        out_dir=Path(args.out_dir),
    )
    try:
        manifest = convert(request)
    except ParseError as exc:
        for issue in exc.issues:
            print(str(issue), file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        target = getattr(exc, "filename", None) or args.out_dir
        print(f"mdquiz: cannot write {target}: {exc}", file=sys.stderr)
        return EXIT_IO

    for issue in manifest.issues:
        print(str(issue), file=sys.stderr)
    for entry in manifest.artifacts:
        print(f"wrote {entry.path} ({entry.byte_length} bytes)")
    print(f"{len(manifest.artifacts)} file(s) in {manifest.duration_ms} ms")
    return EXIT_OK


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
