"""Each golden/NAME.expr holds one canonical expression, optionally preceded by a
`# key=value ...` line of session settings; golden/NAME.out holds its printed value."""
from pathlib import Path

import pytest

from tc_algebra.config import SessionConfig
from tc_algebra.output_formatter import format_value
from tc_algebra.parser import Evaluator, format_expr, parse

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted(GOLDEN.glob("*.expr"))


def _read_case(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    settings = {}
    if lines and lines[0].startswith("#"):
        for item in lines[0][1:].split():
            key, value = item.split("=")
            settings[key] = int(value) if value.isdigit() else value
        lines = lines[1:]
    expected = path.with_suffix(".out").read_text(encoding="utf-8").strip()
    return "\n".join(lines).strip(), SessionConfig(**settings), expected


def test_corpus_is_present():
    assert len(CASES) >= 20


@pytest.mark.parametrize("path", CASES, ids=lambda path: path.stem)
def test_golden_expression(path):
    source, session, expected = _read_case(path)
    node = parse(source, session)
    assert format_expr(node) == source
    assert format_value(Evaluator(session).evaluate(node)) == expected
