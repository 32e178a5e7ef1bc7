import pytest

from cubicrel.charring import decompose, evaluate, sym_power
from cubicrel.motives import (build_F, build_V, build_Z, hilb_class, monomial_name, monomials, named,
                              parse_name, product_class, sym_class)


def test_F_Z_V():
    assert decompose(build_F().value) == {0: {1: 1, 3: 1, 10: 1}}
    assert decompose(build_Z().value) == {0: {1: 1, 3: 1, 8: 1, 10: 1, 16: 1}}
    assert decompose(build_V().value) == {0: {1: 1, 3: 1}}
    assert evaluate(build_F().value, "dimension") == 27
    assert evaluate(build_Z().value, "dimension") == 72


def goettsche_betti(n: int, b=(1, 7, 1)) -> list[int]:
    """Betti numbers of the Hilbert scheme of n points from the product formula.

    prod_k prod_i (1 - t^(2k-2+2i) q^k)^(-b_2i), expanded in q up to q^n.
    """
    series = {(0, 0): 1}
    for k in range(1, n + 1):
        for i, bi in enumerate(b):
            for _ in range(bi):
                t_step = 2 * k - 2 + 2 * i
                new = {}
                for (qd, td), c in series.items():
                    j = 0
                    while qd + j * k <= n:
                        key = (qd + j * k, td + j * t_step)
                        new[key] = new.get(key, 0) + c
                        j += 1
                series = new
    # odd t-powers never occur; index by L-degree = t-degree / 2
    return [series.get((n, 2 * d), 0) for d in range(2 * n + 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hilb_matches_goettsche_betti_numbers(n):
    x = hilb_class(n).value
    assert [int(x.coefficient(d).values[0]) for d in range(2 * n + 1)] == goettsche_betti(n)


def test_hilb_two_is_sym_two_plus_L_S():
    S = named("S").value
    assert hilb_class(2).value == sym_class(2).value + S.shift(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hilb_is_palindromic(n):
    dec = decompose(hilb_class(n).value)
    assert all(dec[d] == dec[2 * n - d] for d in dec)


def test_degrees():
    assert named("S x S^(3)").degree == 4
    assert named("S^2 x S^(2)").degree == 4
    assert named("Z").degree == 0
    assert named("1").degree == 0


def test_names_round_trip():
    for parts in monomials(4):
        name = monomial_name(parts)
        assert parse_name(name) == ("sym", parts) or name == "1"
    assert parse_name("S x S^[2]") == ("hilb", (1, 2))


def test_mixed_factors_rejected():
    with pytest.raises(ValueError):
        parse_name("S^(2) x S^[2]")
    with pytest.raises(ValueError):
        named("T")


def test_products_multiply():
    assert product_class((1, 2)).value == named("S").value * sym_class(2).value
    assert named("S^2").value == named("S").value ** 2


def test_degree5_classes_available():
    assert evaluate(sym_class(5).value, "dimension") == 1287
    with pytest.raises(ValueError):
        sym_class(6)


def test_monomials_count():
    # partitions of 0..4 into positive parts: 1 + 1 + 2 + 3 + 5
    assert len(monomials(4)) == 12
