"""
Run the documentation example and check what it prints.
"""

from __future__ import annotations

from contextlib import redirect_stdout
from io import StringIO
from pathlib import Path
from runpy import run_path


def main() -> None:
    output = StringIO()
    with redirect_stdout(output):
        run_path(str(Path(__file__).parent / "docs/codeexamples/bridges.py"))
    lines = output.getvalue().splitlines()
    assert lines[0] == "optimal: True", lines
    assert lines[3] == "back: True", lines
    assert lines[4].endswith("True"), lines
    print("\n".join(lines))


if __name__ == "__main__":
    main()
