import pytest

from cubicrel.lpoly import LPoly
from cubicrel.relfind import (REGISTERED, CertificateUnavailable, RelationVector, find_relations,
                              homogeneous_classes, minimize, min_valuation, modL_obstruction,
                              nonexistence_certificate, parse_lpoly, relation, verify_relation)


def test_parse_lpoly():
    assert parse_lpoly("L - 2L^2 + 3") == LPoly([3, 1, -2])
    assert parse_lpoly("-L^4") == LPoly.monomial(4, -1)
    assert parse_lpoly("0") == LPoly()


def test_relation_is_lhs_minus_rhs():
    r = relation({"Z": "L^4"}, {"S": "L"})
    assert r["Z"] == LPoly.monomial(4)
    assert r["S"] == LPoly.monomial(1, -1)
    assert r["F"] == LPoly()


def test_relation_vector_algebra():
    r = relation({"S": "1"}, {"F": "L"})
    assert (r + (-r)).coeffs == ()
    assert r.scale(LPoly([0, 1]))["S"] == LPoly.monomial(1)
    assert r.max_degree() == 1


def test_minimize_removes_polynomial_factor():
    r = relation({"S": "L + L^2"}, {"F": "2L + 2L^2"})
    m = minimize(r, "S")
    assert m["S"] == LPoly([1]) and m["F"] == LPoly([-2])


@pytest.mark.parametrize("key", sorted(REGISTERED))
def test_registered_relations_hold(key):
    assert verify_relation(REGISTERED[key]).is_zero()


def test_wrong_relation_leaves_residual():
    r = relation({"S^(2)": "1"}, {"S": "1 + L^2", "F": "L"})
    assert not verify_relation(r).is_zero()


def test_degree_two_with_F_gives_yfy():
    space = find_relations(homogeneous_classes(2) + ["F"])
    assert space.field_dimension == 1
    assert minimize(space.field_basis[0]) == minimize(REGISTERED["yfy-sym"])
    # raw Q-basis: the same relation times 1, L, ..., L^6 fits under degree 8
    assert space.nullity == 7


def test_raw_nullity_grows_with_degree_bound():
    classes = homogeneous_classes(2) + ["F"]
    assert find_relations(classes, max_coeff_degree=2).nullity == 1
    assert find_relations(classes, max_coeff_degree=1).nullity == 0


def test_no_relation_in_degree_two():
    assert find_relations(homogeneous_classes(2)).nullity == 0


def test_szs_is_found_with_Z_and_minimal():
    space = find_relations(homogeneous_classes(4) + ["Z"], distinguished="Z")
    assert space.field_dimension == 1
    rel = space.field_basis[0]
    assert rel == REGISTERED["szs-sym"]
    assert rel["Z"] == LPoly.monomial(4)


def test_certificate_blocks_and_reports_residual():
    cert = nonexistence_certificate(homogeneous_classes(3) + ["F", "Z"], allow_residual=True)
    assert cert["blocking"]["Z"] == 8
    assert cert["blocking"]["S^3"] == 12
    assert set(cert["residual"]) == {"1", "S", "S^(2)", "F"}


def test_certificate_raises_without_residual_mode():
    with pytest.raises(CertificateUnavailable):
        nonexistence_certificate(homogeneous_classes(2) + ["F"])


def test_prescribed_blocking_irreducible():
    cert = nonexistence_certificate(["S^3", "1"], blocking_irreps={"S^3": 12})
    assert ("S^3", 12) in cert["steps"]


def test_min_valuation():
    assert min_valuation(homogeneous_classes(4), 8) == 4
    assert min_valuation(["Z"], 8) == 0
    assert min_valuation(["S"], 8) is None


def test_mod_l_reductions():
    ob = modL_obstruction(REGISTERED["szs-sym"])
    assert ob["congruence"] == "[S^(4)] ≡ [S^(3)] (mod L)"
    assert ob["pointed"] == ["S^(3)"] and ob["flagged"]
    assert not modL_obstruction(REGISTERED["yfy-sym"])["flagged"]
    hilb = modL_obstruction(REGISTERED["szs-hilb"])
    assert hilb["congruence"] == "[S^[4]] ≡ [S^[3]] (mod L)" and hilb["flagged"]


def test_unknown_symbol_suppresses_flag():
    r = relation({"S^(3)": "1", "Q": "1"}, {"S": "1"})
    assert not modL_obstruction(r)["flagged"]


def test_json_is_sorted_and_stable():
    r = REGISTERED["deg5"]
    assert list(r.to_json()) == sorted(r.to_json())
    assert isinstance(RelationVector.from_mapping(r.as_dict()), RelationVector)
