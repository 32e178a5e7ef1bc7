import numpy as np
import pytest

from cubicrel import rootsys
from cubicrel.rootsys import (SIMPLE_ROOTS, NotARoot, build_lattice, enumerate_lines,
                              enumerate_roots, lattice_character, permutation_character,
                              reflect, reflection, roots_action)

LAT = build_lattice()


def test_roots_are_orthogonal_to_canonical_class():
    roots = enumerate_roots(LAT)
    assert len(roots) == 72
    for r in roots:
        assert LAT.pairing(r, r) == -2
        assert LAT.pairing(r, LAT.canonical) == 0


def test_lines_are_exceptional_curves():
    lines = enumerate_lines(LAT)
    assert len(lines) == 27
    for l in lines:
        assert LAT.pairing(l, l) == -1
        assert LAT.pairing(l, LAT.canonical) == -1


def test_each_line_meets_ten_others():
    lines = enumerate_lines(LAT)
    for l in lines:
        assert sum(1 for m in lines if m != l and LAT.pairing(l, m) == 1) == 10


def test_reflection_is_an_isometric_involution():
    roots = enumerate_roots(LAT)
    a = SIMPLE_ROOTS[5]
    for b in roots[:10]:
        rb = reflect(LAT, a, b)
        assert reflect(LAT, a, rb) == tuple(b)
        assert LAT.pairing(rb, rb) == LAT.pairing(b, b)
    assert reflect(LAT, a, a) == tuple(-x for x in a)


def test_reflection_rejects_non_root():
    with pytest.raises(NotARoot):
        reflection(LAT, (1, 0, 0, 0, 0, 0, 0))


def test_generated_group(weyl):
    assert len(weyl) == 51840
    assert len(weyl.class_reps) == 25
    assert sorted(weyl.matching.values()) == list(range(1, 26))
    assert np.array_equal(weyl.elements[0], np.arange(72))


def test_simple_reflections_are_involutions(weyl):
    for s in weyl.generators:
        assert np.array_equal(s[s], np.arange(72))


def test_class_sizes_match_table(weyl, e6):
    for c, col in weyl.matching.items():
        assert weyl.class_sizes[c] == e6.class_sizes[col - 1]
        assert weyl.class_orders[c] == e6.orders[col - 1]


def test_permutation_characters(weyl, e6):
    chi = permutation_character(weyl, roots_action(weyl))
    assert chi.values[0] == 72
    V = lattice_character(weyl)
    assert V.values[0] == 7


def test_power_maps_against_group(weyl, e6):
    from cubicrel.chartable import power_class

    for col, g in weyl.column_reps().items():
        for m in (2, 3, 5, 7):
            assert weyl.column_of(weyl.lookup(weyl.power(g, m))) == power_class(e6, col, m)


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(rootsys.CACHE_ENV, str(tmp_path))
    first = rootsys._cached_weyl(51840)
    files = list(tmp_path.glob("weyl-e6-*.npy"))
    assert len(files) == 1
    second = rootsys._cached_weyl(51840)
    assert np.array_equal(first.elements, second.elements)
    assert second.index == first.index


def test_disk_cache_ignores_malformed_file(tmp_path, monkeypatch):
    monkeypatch.setenv(rootsys.CACHE_ENV, str(tmp_path))
    key = rootsys._root_hash(enumerate_roots(LAT))
    np.save(tmp_path / f"weyl-e6-{key}.npy", np.zeros((3, 72), dtype=np.uint8))
    W = rootsys._cached_weyl(51840)
    assert len(W) == 51840
