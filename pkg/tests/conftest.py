import random

import pytest

from baton import AnchorPoint, Pattern, Point2, Role

_CRITERION_PREFIX = "tests/test_acceptance.py::"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, printed every run."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in report.nodeid:
                name = report.nodeid.split("::")[-1].removeprefix("test_")
                label = name.replace("_", " ")
                lines.append((name, "PASS" if outcome == "passed" else "FAIL", label))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for _, status, label in sorted(lines):
            terminalreporter.write_line(f"{status}  {label}")


def make_random_pattern(rng: random.Random, beats: int | None = None) -> Pattern:
    """Structurally valid pattern with random geometry.

    Heights are offset by role so the result usually passes validation too,
    but geometry tests only rely on structure.
    """
    if beats is None:
        beats = rng.choice([1, 2, 3, 4, 5, 6])
    anchors = []
    for i in range(2 * beats):
        role = Role.PREPARATION if i % 2 == 0 else Role.ICTUS
        base = 2.0 if role is Role.PREPARATION else 0.0
        anchors.append(
            AnchorPoint(
                role=role,
                position=Point2(rng.uniform(-3.0, 3.0), base + rng.uniform(-0.5, 0.5)),
                roundness=rng.uniform(-2.5, 2.5),
            )
        )
    return Pattern(beats=beats, anchors=tuple(anchors))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBA70)
