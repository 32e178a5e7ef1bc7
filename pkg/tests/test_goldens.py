import pytest

from cubicrel.charring import decompose
from cubicrel.goldens import DISPLAYS, HILB_NAMES, MISPRINTS, expected, misprinted_degrees, printed
from cubicrel.motives import named


@pytest.mark.parametrize("name", sorted(DISPLAYS))
def test_every_reference_parses(name):
    assert printed(name)


@pytest.mark.parametrize("name", sorted(DISPLAYS))
def test_expected_matches_computation(name):
    assert decompose(named(name).value) == expected(name)


@pytest.mark.parametrize("name", sorted(MISPRINTS))
def test_misprints_touch_only_listed_degrees(name):
    lit, fixed = printed(name), expected(name)
    changed = tuple(d for d in sorted(set(lit) | set(fixed)) if lit.get(d) != fixed.get(d))
    assert changed == misprinted_degrees(name)


def test_hilb_names_are_displayed():
    assert set(HILB_NAMES) <= set(DISPLAYS)
