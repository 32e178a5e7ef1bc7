"""Acceptance criteria 1-12.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the
terminal summary prints one PASS/FAIL line per criterion. Tests marked
``literal`` compare against reference text that disagrees with the exact
computation; they are strict xfails and turn the criterion line into a FAIL
that names them.
"""
from __future__ import annotations

import sys

import pytest

from cubicrel.suite import run_criterion

pytestmark = pytest.mark.acceptance

_cache: dict[int, dict] = {}


def report(n: int) -> dict:
    if n not in _cache:
        _cache[n] = run_criterion(n)
    return _cache[n]


def assert_all_pass(n: int) -> None:
    bad = [f"{r['check']}: {r['detail']}" for r in report(n)["checks"] if not r["passed"]]
    assert not bad, "\n".join(bad)
    assert report(n)["checks"], "criterion produced no checks"


@pytest.mark.criterion(1)
def test_character_tables_and_group_orders():
    assert_all_pass(1)


@pytest.mark.criterion(2)
def test_lines_roots_classes_and_power_maps():
    assert_all_pass(2)


@pytest.mark.criterion(3)
def test_decompositions_match_corrected_goldens():
    assert_all_pass(3)


def _literal_decomposition(name: str) -> bool:
    from cubicrel.charring import decompose
    from cubicrel.goldens import printed
    from cubicrel.motives import named

    return decompose(named(name).value) == printed(name)


@pytest.mark.criterion(3)
@pytest.mark.parametrize(
    "name",
    ["S", "S^2", "S^(2)", "S^[2]", "F", "Z", "S^(3)", "S x S^(2)", "S^(4)", "S x S^(3)",
     "S^4", "S^(2) x S^(2)", "S^2 x S^(2)", "S x S^[2]"],
)
def test_reference_display_reproduced_exactly(name):
    assert _literal_decomposition(name)


@pytest.mark.criterion(3)
@pytest.mark.literal
@pytest.mark.xfail(strict=True, reason="reference display disagrees with the exact decomposition")
@pytest.mark.parametrize("name", ["S^3", "S^[3]", "S^[4]"])
def test_misprinted_display_literal(name):
    assert _literal_decomposition(name)


@pytest.mark.criterion(4)
def test_no_relations_in_low_degree():
    assert_all_pass(4)


@pytest.mark.criterion(5)
def test_unique_minimal_relation_with_z():
    assert_all_pass(5)


@pytest.mark.criterion(6)
def test_degree5_relation_corrected():
    assert_all_pass(6)


@pytest.mark.criterion(6)
@pytest.mark.literal
@pytest.mark.xfail(strict=True, reason="the reference degree-5 relation has [S^(2)] where [S^2] belongs")
def test_degree5_relation_literal():
    from cubicrel.relfind import REGISTERED_PRINTED, verify_relation

    assert verify_relation(REGISTERED_PRINTED["deg5"]).is_zero()


@pytest.mark.criterion(7)
def test_motivic_sums_balance_corrected():
    assert_all_pass(7)


@pytest.mark.criterion(7)
@pytest.mark.literal
@pytest.mark.xfail(strict=True, reason="the reference twists on [S] and [S^[3]] do not balance")
def test_motivic_sums_literal():
    from cubicrel.charring import decompose
    from cubicrel.relfind import MOTIVIC_LHS_PRINTED, MOTIVIC_RHS_PRINTED, motive_sum

    assert decompose(motive_sum(MOTIVIC_LHS_PRINTED)) == decompose(motive_sum(MOTIVIC_RHS_PRINTED))


@pytest.mark.criterion(8)
def test_a1_burnside_suite():
    assert_all_pass(8)


@pytest.mark.criterion(9)
def test_a2_burnside_suite_corrected():
    assert_all_pass(9)


@pytest.mark.criterion(9)
@pytest.mark.literal
@pytest.mark.xfail(strict=True, reason="the reference character of Z omits the trivial summand off the identity")
def test_a2_char_z_literal():
    from cubicrel.burnside import A2_CHAR_Z_PRINTED, a2_class_reps, burn_char, roots_mod_subsystem
    from cubicrel.chartable import a2_table

    got = burn_char(roots_mod_subsystem("a2"), a2_table(), a2_class_reps()).as_ints()
    assert tuple(got) == A2_CHAR_Z_PRINTED


@pytest.mark.criterion(10)
def test_fourfold_suite():
    assert_all_pass(10)


@pytest.mark.criterion(11)
def test_mod_l_obstructions():
    assert_all_pass(11)


@pytest.mark.criterion(12)
def test_seeded_property_samples():
    assert_all_pass(12)


@pytest.mark.criterion(12)
def test_hypothesis_property_suites_present():
    """The hypothesis suites (>= 100 examples each) live in test_properties.py."""
    import importlib.util
    from pathlib import Path

    path = Path(__file__).with_name("test_properties.py")
    spec = importlib.util.spec_from_file_location("props", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.EXAMPLES >= 100
    for name in ("test_sum_axiom_charring", "test_lefschetz_scaling_charring", "test_sum_axiom_free",
                 "test_lefschetz_scaling_free", "test_decompose_round_trip", "test_burn_char_additive",
                 "test_burn_char_multiplicative", "test_json_reproducible"):
        assert hasattr(mod, name), name


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
