from __future__ import annotations

from pathlib import Path

import pytest

from bifib.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process and return (exit_code, stdout, stderr)."""

    def _run(argv: list[str]) -> tuple[int, str, str]:
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse usage errors
            code = exc.code if isinstance(exc.code, int) else 0
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
