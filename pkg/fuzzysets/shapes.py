"""Piecewise-linear constructors and the fixed demonstration sets."""

from .exceptions import InvalidMembership
from .sets import FuzzySet


def triangular(a, b, c, label="", height=1.0) -> FuzzySet:
    if not a < b < c:
        raise InvalidMembership(f"triangle needs a < b < c, got ({a}, {b}, {c})")
    return FuzzySet.from_pairs([(a, 0.0), (b, height), (c, 0.0)], label)


def trapezoidal(a, b, c, d, label="", height=1.0) -> FuzzySet:
    if not a < b < c < d:
        raise InvalidMembership(f"trapezoid needs a < b < c < d, got ({a}, {b}, {c}, {d})")
    return FuzzySet.from_pairs([(a, 0.0), (b, height), (c, height), (d, 0.0)], label)


def demonstration_sets() -> dict[str, FuzzySet]:
    """
    Five normal convex sets for the synthetic comparison table.

    B and C are A moved right by 3 and 6; D keeps A's support but peaks
    further right; E is wider and peaks half a unit right of A.
    """
    a = triangular(1.0, 3.0, 5.0, "A")
    return {
        "A": a,
        "B": a.shifted(3.0).with_label("B"),
        "C": a.shifted(6.0).with_label("C"),
        "D": triangular(1.0, 4.0, 5.0, "D"),
        "E": triangular(1.5, 3.5, 6.5, "E"),
    }


def concavity_family(steps=5) -> tuple[list[FuzzySet], FuzzySet]:
    """
    Sets that turn from flat-topped to bimodal, plus a convex reference.

    Member ``i`` has its centre membership lowered to ``1 - 0.5 * i / (steps - 1)``,
    so the first member is a trapezoid and the last has two humps. The
    reference sits entirely to the right with a wide top, so the right-end
    difference dominates at every level.
    """
    family = []
    for i in range(steps):
        centre = 1.0 - 0.5 * i / (steps - 1)
        label = chr(ord("a") + i)
        family.append(FuzzySet.from_pairs(
            [(1.0, 0.0), (2.0, 1.0), (3.0, centre), (4.0, 1.0), (5.0, 0.0)], label
        ))
    reference = trapezoidal(6.0, 8.0, 14.0, 16.0, "B")
    return family, reference
