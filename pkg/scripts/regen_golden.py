"""Rewrite tests/golden/*.txt from the current CLI output.

Each file holds the exit code, stdout and stderr of one argv in
tests/golden_cases.py.  Review the git diff before committing.
"""
import io
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from golden_cases import CASES  # noqa: E402
from orbidim.cli import run  # noqa: E402


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return f"exit: {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


def main():
    os.environ["COLUMNS"] = "80"
    target = ROOT / "tests" / "golden"
    target.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        (target / f"{name}.txt").write_text(capture(argv))
        print(f"wrote {name}.txt")


if __name__ == "__main__":
    main()
