from fractions import Fraction
from math import comb

import pytest

from cubicrel.charring import (GradedCharacter, adams, constant, decompose, evaluate,
                               format_decomposition, from_irreps, lefschetz, parse_display,
                               reconstruct, sym_power)
from cubicrel.rootsys import NonIntegralDecomposition


def test_S_decomposition(S):
    assert decompose(S) == {0: {1: 1}, 1: {1: 1, 3: 1}, 2: {1: 1}}
    assert format_decomposition(decompose(S)) == "1 + (1 + χ3) L + L^2"


def test_sym_zero_and_one(S, e6):
    assert sym_power(S, 0) == constant(e6)
    assert sym_power(S, 1) == S


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sym_dimension_is_multiset_count(S, n):
    assert evaluate(sym_power(S, n), "dimension") == comb(9 + n - 1, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sym_is_palindromic(S, n):
    dec = decompose(sym_power(S, n))
    assert all(dec[d] == dec[2 * n - d] for d in dec)


def test_sym_of_lefschetz(e6):
    assert sym_power(lefschetz(e6, 2), 3) == lefschetz(e6, 6)


def test_adams_on_trivial_is_identity(e6):
    assert adams(constant(e6), 5) == constant(e6)
    assert adams(lefschetz(e6, 1), 3) == lefschetz(e6, 3)


def test_evaluations(S):
    assert evaluate(S, "dimension") == 9
    assert evaluate(S, "mod_L").values == (Fraction(1),) * 25
    assert evaluate(S, "L_to_1").values[0] == 9
    with pytest.raises(ValueError):
        evaluate(S, "bogus")


def test_effective_flag_catches_non_characters(e6):
    bad = GradedCharacter.build(e6, {0: (1,) + (0,) * 24}, effective=True)
    with pytest.raises(NonIntegralDecomposition):
        decompose(bad)


def test_virtual_classes_may_be_negative(e6):
    x = from_irreps(e6, {0: {3: -2}})
    assert not x.effective
    assert decompose(x) == {0: {3: -2}}


def test_parse_display_handles_latex_markup():
    text = r"\One + (\One + \X_3 )\L + (3 + \X_3 + \chi_{10} )\L^2 +\\ &+ \L^4"
    assert parse_display(text) == {0: {1: 1}, 1: {1: 1, 3: 1}, 2: {1: 3, 3: 1, 10: 1}, 4: {1: 1}}


def test_format_parse_round_trip(S, e6):
    for n in (2, 3):
        dec = decompose(sym_power(S, n))
        text = format_decomposition(dec, chi=r"\X_", lvar=r"\L")
        assert parse_display(text) == dec
        assert reconstruct(e6, dec) == sym_power(S, n)


def test_shift_and_product(S):
    assert (S * S).shift(1) == S.shift(1) * S
    assert (S - S).is_zero()
