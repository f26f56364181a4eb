"""
Plain-text format for fuzzy sets.

One ``x<TAB>mu`` pair per line in ascending x. Blank lines and lines starting
with ``#`` are ignored.
"""

from pathlib import Path
from typing import Iterable

from .exceptions import FuzzySetError, MalformedSetFile
from .sets import FuzzySet, MembershipPoint


def parse_fuzzy_set(lines: Iterable[str], label="") -> FuzzySet:
    points = []
    line_no = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedSetFile(line_no, f"expected 'x<TAB>mu', got {line!r}")
        try:
            x, mu = float(fields[0]), float(fields[1])
        except ValueError:
            raise MalformedSetFile(line_no, f"non-numeric value in {line!r}")
        if points and x <= points[-1].x:
            raise MalformedSetFile(line_no, f"x={x:g} does not ascend")
        try:
            points.append(MembershipPoint.clamped(x, mu))
        except FuzzySetError as exc:
            raise MalformedSetFile(line_no, str(exc)) from exc
    if len(points) < 2:
        raise MalformedSetFile(line_no, "a fuzzy set needs at least 2 points")
    return FuzzySet(tuple(points), label)


def load_fuzzy_set(path) -> FuzzySet:
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        return parse_fuzzy_set(handle, label=path.stem)


def dumps_fuzzy_set(fuzzy_set: FuzzySet) -> str:
    lines = [f"# {fuzzy_set.label}"] if fuzzy_set.label else []
    lines.extend(f"{point.x!r}\t{point.mu!r}" for point in fuzzy_set.points)
    return "\n".join(lines) + "\n"
