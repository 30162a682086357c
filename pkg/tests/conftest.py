import json
from pathlib import Path

import pytest

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


@pytest.fixture(scope="session")
def schema():
    jsonschema = pytest.importorskip("jsonschema")

    def check(name: str, doc) -> None:
        jsonschema.validate(doc, json.loads((SCHEMAS / f"{name}.json").read_text()))

    return check


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, summary_lines
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
