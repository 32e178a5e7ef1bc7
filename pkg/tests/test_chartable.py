from fractions import Fraction

import pytest

from cubicrel.chartable import (CharacterTable, UnsupportedExponent, a2_table, derive_class_sizes,
                                load_e6_table, power_class, tables_json, validate_table)


def test_e6_shape_and_order(e6):
    assert e6.n == 25
    assert e6.group_order == 51840
    assert sum(e6.dim(i) ** 2 for i in range(1, 26)) == 51840
    assert sum(e6.class_sizes) == 51840


def test_e6_dimensions(e6):
    assert [e6.dim(i) for i in (1, 2, 3, 10, 25)] == [1, 1, 6, 20, 90]


@pytest.mark.parametrize("table", ["e6", "a2"])
def test_all_consistency_checks_pass(table, e6):
    t = e6 if table == "e6" else a2_table()
    failures = [(name, detail) for name, ok, detail in validate_table(t) if not ok]
    assert not failures


def test_a2_table():
    t = a2_table()
    assert t.group_order == 72
    assert t.class_sizes == (1, 6, 4, 9, 12, 4, 6, 18, 12)
    assert [t.dim(i) for i in range(1, 10)] == [1, 1, 1, 1, 2, 4, 4, 4, 4]


def test_class_sizes_derived_from_orthogonality():
    raw = load_e6_table()
    assert not raw.class_sizes
    assert derive_class_sizes(raw).class_sizes[1] == 36


def test_power_class_basics(e6):
    assert power_class(e6, 1, 7) == 1
    for c in range(1, 26):
        assert power_class(e6, c, e6.orders[c - 1]) == 1
        assert power_class(e6, c, 1) == c


def test_power_class_rejects_nonpositive(e6):
    with pytest.raises(UnsupportedExponent):
        power_class(e6, 2, 0)


def test_broken_table_is_detected(e6):
    vals = [list(r) for r in e6.values]
    vals[2][1] += 1
    bad = CharacterTable(e6.name, e6.orders, tuple(map(tuple, vals)), e6.power_maps,
                         e6.class_sizes, e6.group_order)
    assert not all(ok for _, ok, _ in validate_table(bad))


def test_class_function_arithmetic(e6):
    chi = e6.chi(3)
    assert (chi + chi - chi).values == chi.values
    assert (chi * 2).values[0] == Fraction(12)
    assert e6.trivial().as_ints() == (1,) * 25


def test_tables_json_is_deterministic(e6):
    assert tables_json([e6, a2_table()]) == tables_json([e6, a2_table()])
