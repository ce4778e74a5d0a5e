"""Shared registry for the acceptance criteria's pass/fail lines.

Each criterion records exactly one line; the conftest terminal-summary hook
re-emits all recorded lines at the end of the run so they are visible even
under captured output.
"""

LINES: list[str] = []


def record(line: str) -> None:
    LINES.append(line)
    print(line, flush=True)
