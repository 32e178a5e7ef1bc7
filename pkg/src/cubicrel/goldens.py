"""Reference decompositions of the surface classes, stored as LaTeX displays.

``DISPLAYS`` holds the reference text verbatim. ``MISPRINTS`` lists the
entries whose reference text disagrees with the exact computation, with a
corrected display; :func:`expected` prefers the correction.
"""
from __future__ import annotations

from .charring import Decomposition, parse_display

__all__ = ["DISPLAYS", "MISPRINTS", "printed", "expected", "misprinted_degrees", "HILB_NAMES",
           "FOURFOLD_DISPLAYS"]

DISPLAYS: dict[str, str] = {
    "S": r"1 + ( 1+\chi_3 )\L + \L^2",
    "S^2": r"1 + (2 + 2\X_3 )\L^1 + (4 + 2\X_3 + \X_9 + \X_10 )\L^2 + (2 + 2\X_3 )\L^3 +\L^4",
    "S^(2)": r"\One + (\One + \X_3 )\L + (3 + \X_3 + \X_10 )\L^2 + (\One + \X_3 )\L^3 + \L^4",
    "S^[2]": r"1 + (2 + \chi_3 ) \L^1 + (4 + 2\chi_3 + \chi_{10} ) \L^2 + (2 + \X_3 ) \L^3 + \L^4",
    "F": r"1 + \chi_3 + \chi_{10}",
    "Z": r"1 + \X_3 + \X_8 + \X_10 + \X_16",
    "V": r"1 + \chi_3",
    "S^(3)": r"""1 + (1 + \X_3 )\L + (3 + \X_3 + \X_10 )\L^2 + (3 + 3\X_3 + 2\X_10 + \X_16 )\L^3 +\\
        &+ (3 + \X_3 + \X_10 )\L^4 + (1 + \X_3 )\L^5 + \L^6""",
    "S x S^(2)": r"""1 + (2 + 2\X_3 )\L^1 + (6 + 3\X_3 + \X_9 + 2\X_10 )\L^2 +\\
        &+ (6 + 7\X_3 + \X_9 + 3\X_10 + \X_16 + \X_20 )\L^3 + \\
        &+ (6 + 3\X_3 + \X_9 + 2\X_10 )\L^4 + (2 + 2\X_3 )\L^5 + \L^6""",
    "S^3": r"""1 + (3 + 3\X_3 )\L + (9 + 6\X_3 + 3\X_9 + 3\X_10 )\L^2 +\\
        &+(10 + 12\X_3 + 3\X_9 + 4\X_10 + \X_12 + \X_16 + 2\X_20 )\L^3 + \\
        &+ (9 + 6\X_3 + 3\X_9 + 3\X_10 )\L^4 + (1 + \X_3 )\L^5 + \L^6""",
    "S^(4)": r"""1 + (1 + \X_3  )\L + (3 + \X_3 + \X_10 )\L^2 + (3 + 3\X_3 + 2\X_10 + \X_16 )\L^3 +\\
        &+  (6 + 4\X_3 + \X_8 + 5\X_10 + \X_16 + \X_20 )\L^4 +
        (3 + 3\X_3 + 2\X_10 + \X_16 )\L^5 +\nonumber\\&+ (3 + \X_3 + \X_10 )\L^6 + (1 + \X_3 )\L^7 +\L^8""",
    "S x S^(3)": r"""1 + (2 + 2\X_3 )\L + (6 + 3\X_3 + \X_9 + 2\X_10 )\L^2 +\\
        &+ (8 + 9\X_3 + \X_9 + 5\X_10 + 2\X_16 + \X_20 )\L^3 +\nonumber\\
        &+ (12 + 10\X_3 + \X_8 + 3\X_9 + 10\X_10 + 3\X_16 + 3\X_20 + \X_23 )\L^4 +\nonumber\\
        &+ (8 + 9\X_3 + \X_9 + 5\X_10 + 2\X_16 + \X_20 )\L^5 +\nonumber\\
        &+ (6 + 3\X_3 + \X_9 + 2\X_10 )\L^6 + (2 + 2\X_3 )\L^7 + \L^8""",
    "S^4": r"""1 + (4\X_3 + 4 )\L + (12\X_3 + 6\X_9 + 6\X_10 + 16 )\L^2 +\\
        &+ (36\X_3 + 12\X_9 + 16\X_10 + 4\X_12 + 4\X_16 + 8\X_20 + 28 )\L^3 +\nonumber\\
        &+ (41\X_3 + \X_7 + \X_8 + 24\X_9 + 29\X_10 + 4\X_12 + 2\X_13 + 7\X_16 + 2\X_17 + 12\X_20 +\nonumber\\
        &+ 3\X_23 + 3\X_25 + 40 )\L^4 +\nonumber\\
        &+ (36\X_3 + 12\X_9 + 16\X_10 + 4\X_12 + 4\X_16 + 8\X_20 + 28 )\L^5 +\nonumber\\
        &+ (12\X_3 + 6\X_9 + 6\X_10 + 16 )\L^6 + (4\X_3 + 4 )\L^7 + \L^8""",
    "S^(2) x S^(2)": r"""1 + (2\X_3 + 2 )\L + (4\X_3 + \X_9 + 3\X_10 + 8 )\L^2 +\\
        &+ (12\X_3 + 2\X_9 + 6\X_10 + 2\X_16 + 2\X_20 + 10 )\L^3 +\nonumber\\
        &+ (13\X_3 + \X_8 + 4\X_9 + 13\X_10 + \X_13 + 3\X_16 + \X_17 + 4\X_20 + \X_23 + 17 )\L^4 +\nonumber\\
        &+ (12\X_3 + 2\X_9 + 6\X_10 + 2\X_16 + 2\X_20 + 10 )\L^5 +\nonumber\\
        &+ (4\X_3 + \X_9 + 3\X_10 + 8 )\L^6 + (2\X_3 + 2 )\L^7 + \L^8""",
    "S^2 x S^(2)": r"""1 + (3\X_3 + 3 )\L + (7\X_3 + 3\X_9 + 4\X_10 + 11 )\L^2 +\\
        &+ (21\X_3 + 5\X_9 + 10\X_10 + \X_12 + 3\X_16 + 4\X_20 + 17 )\L^3 +\nonumber\\
        &+ (23\X_3 + \X_8 + 11\X_9 + 19\X_10 + \X_12 + \X_13 + 5\X_16 + \X_17 + 7\X_20 +\nonumber\\
        &+ 2\X_23 + \X_25 + 25 )\L^4 +\nonumber\\
        &+ (21\X_3 + 5\X_9 + 10\X_10 + \X_12 + 3\X_16 + 4\X_20 + 17 )\L^5 +\nonumber\\
        &+ (7\X_3 + 3\X_9 + 4\X_10 + 11 )\L^6 + (3\X_3 + 3 )\L^7 + \L^8""",
    "S^[3]": r"""1 + (2 + \X_3 ) \L^1 + (5 + 3\X_3 + \X_10 ) \L^2
        + (7 + 5\X_3 + \X_9 + 3\X_10 + \X_16 ) \L^3 + \\
        &+ (5 + 3\X_3 + \X_10 ) \L^4 + (2 + \X_3 ) \L^5 + \L^6""",
    "S^[4]": r"""1 + (2 + \X_3 ) \L^1 + (6 + 3\X_3 + \X_10 ) \L^2
        + (10 + 7\X_3 + \X_9 + 4\X_10 + \X_16 ) \L^3 + \\
        &+ (15 + 12\X_3 + \X_8 + \X_9 + 9\X_10 + 2\X_16 + 2\X_20 ) \L^4
        + (10 + 7\X_3 + \X_9 + 4\X_10 + \\ &+ \X_16 ) \L^5
        + (6 + 3\X_3 + \X_10 ) \L^6 + (2 + \X_3 ) \L^7 + \L^8""",
    "S x S^[2]": r"""1 + (3 + 2\X_3 ) \L^1 + (8 + 5\X_3 + \X_9 + 2\X_10 ) \L^2 + \\
        &+ (10 + 9\X_3 + 2\X_9 + 4\X_10 + \X_16 + \X_20 ) \L^3 + \\
        &+ (8 + 5\X_3 + \X_9 + 2\X_10 ) \L^4 + (3 + 2\X_3 ) \L^5 + \L^6""",
}

HILB_NAMES = ["S^[2]", "S^[3]", "S^[4]", "S x S^[2]"]

# Entries whose printed text disagrees with the exact computation, with the
# full corrected display. Only the listed L-degrees change.
MISPRINTS: dict[str, tuple[tuple[int, ...], str]] = {
    "S^3": ((5,), r"""1 + (3 + 3\X_3 )\L + (9 + 6\X_3 + 3\X_9 + 3\X_10 )\L^2
        + (10 + 12\X_3 + 3\X_9 + 4\X_10 + \X_12 + \X_16 + 2\X_20 )\L^3
        + (9 + 6\X_3 + 3\X_9 + 3\X_10 )\L^4 + (3 + 3\X_3 )\L^5 + \L^6"""),
    "S^[3]": ((2, 3, 4), r"""1 + (2 + \X_3 ) \L + (6 + 3\X_3 + \X_10 ) \L^2
        + (8 + 6\X_3 + \X_9 + 3\X_10 + \X_16 ) \L^3
        + (6 + 3\X_3 + \X_10 ) \L^4 + (2 + \X_3 ) \L^5 + \L^6"""),
    "S^[4]": ((2, 3, 4, 5, 6), r"""1 + (2 + \X_3 ) \L + (7 + 3\X_3 + \X_10 ) \L^2
        + (13 + 9\X_3 + \X_9 + 4\X_10 + \X_16 ) \L^3
        + (20 + 15\X_3 + \X_8 + 2\X_9 + 10\X_10 + 2\X_16 + 2\X_20 ) \L^4
        + (13 + 9\X_3 + \X_9 + 4\X_10 + \X_16 ) \L^5
        + (7 + 3\X_3 + \X_10 ) \L^6 + (2 + \X_3 ) \L^7 + \L^8"""),
}


def printed(name: str) -> Decomposition:
    """The reference display parsed as it stands."""
    return parse_display(DISPLAYS[name])


def expected(name: str) -> Decomposition:
    """The reference display with the listed misprints replaced."""
    if name in MISPRINTS:
        return parse_display(MISPRINTS[name][1])
    return printed(name)


def misprinted_degrees(name: str) -> tuple[int, ...]:
    return MISPRINTS.get(name, ((), ""))[0]


# Fourfold expansions: k-monomial (sorted indices of k_n) -> polynomial in L.
FOURFOLD_DISPLAYS: dict[str, dict[tuple[int, ...], str]] = {
    "Y^(2)": {
        (2,): "L^2",
        (1,): "L^5 + L^3 + L",
        (): "L^8 + L^6 + 2L^4 + L^2 + 1",
    },
    "Y^2": {
        (1, 1): "L^2",
        (1,): "2L^5 + 2L^3 + 2L",
        (): "L^8 + 2L^6 + 3L^4 + 2L^2 + 1",
    },
    "Y^(3)": {
        (3,): "L^3",
        (2,): "L^6 + L^4 + L^2",
        (1,): "L^9 + L^7 + 2L^5 + L^3 + L",
        (): "L^12 + L^10 + 2L^8 + 2L^6 + 2L^4 + L^2 + 1",
    },
    "Y x Y^(2)": {
        (1, 2): "L^3",
        (2,): "L^6 + L^4 + L^2",
        (1, 1): "L^6 + L^4 + L^2",
        (1,): "2L^9 + 3L^7 + 5L^5 + 3L^3 + 2L",
        (): "L^12 + 2L^10 + 4L^8 + 4L^6 + 4L^4 + 2L^2 + 1",
    },
    "Y^(4)": {
        (4,): "L^4",
        (3,): "L^7 + L^5 + L^3",
        (2,): "L^10 + L^8 + 2L^6 + L^4 + L^2",
        (1,): "L^13 + L^11 + 2L^9 + 2L^7 + 2L^5 + L^3 + L",
        (): "L^16 + L^14 + 2L^12 + 2L^10 + 3L^8 + 2L^6 + 2L^4 + L^2 + 1",
    },
}
