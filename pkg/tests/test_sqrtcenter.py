"""Tests for square roots of the centre: membership, catalogs, branches."""

import pytest

from hecke import (
    LaurentPoly,
    NotCentralError,
    catalog,
    catalog_h3,
    commutator,
    eigen_search,
    even_word_centrality,
    h3_constraint_check,
    in_sqrt_centre,
    is_central,
    parse_element,
    parse_scalar,
    sample_sqrt_h3,
    span_in_sqrt,
    sqrt_h3_from_coeffs,
    t_longest,
    verify_xbar_ybar_squares,
    x_elem,
    xbar,
    ybar,
)
from hecke.sqrtcenter import catalog_checks_h3, catalog_checks_h4

SAMPLER_SEEDS = 25


def _coords(report):
    return {tuple(p): c for p, c in report.square_in_gamma.items()}


def test_membership_report_for_strict_roots(ctx3, gb3):
    for name, el in catalog_h3().items():
        rep = in_sqrt_centre(el, gb3, label=name)
        assert rep.label == name
        assert rep.in_sqrt, name
        assert not rep.in_centre, name
        assert rep.square_in_gamma is not None


def test_membership_report_for_central_input(ctx3, gb3):
    rep = in_sqrt_centre(x_elem(ctx3), gb3)
    assert rep.in_sqrt and rep.in_centre


def test_membership_report_negative(gb3):
    # (T_1 + T_s)^2 = (q+1)(T_1 + T_s) is visibly not central
    rep = in_sqrt_centre(parse_element("T[] + T[1]", 3), gb3)
    assert not rep.in_sqrt
    assert not rep.in_centre
    assert rep.square_in_gamma is None


def test_r4_square_expansion(gb3):
    rep = in_sqrt_centre(catalog_h3()["R4"], gb3)
    assert _coords(rep) == {
        (1, 1, 1): parse_scalar("2*q"),
        (2, 1): parse_scalar("q - 1"),
        (3,): parse_scalar("-1"),
    }


def test_r5_square_is_minus_q_times_r4_square():
    cat = catalog_h3()
    r4, r5 = cat["R4"], cat["R5"]
    assert r5 * r5 == (r4 * r4).scale(parse_scalar("-q"))


def test_degree_three_catalog_fixtures(ctx3):
    cat = catalog_h3()
    assert set(cat) == {"xbar", "ybar", "Twn", "R4", "R5"}
    assert cat["xbar"] == xbar(ctx3)
    assert cat["Twn"] == t_longest(ctx3)
    assert cat["R4"] == parse_element("T[1] - T[2]", 3)
    assert cat["R5"] == parse_element("T[1,2] - T[2,1]", 3)
    # the catalog ybar is the unit-rescaled form of y - T_w
    assert cat["ybar"] == ybar(ctx3).scale(parse_scalar("-q^-3"))


def test_eigenvalue_table(gb3):
    q_minus_one = parse_scalar("q - 1")
    minus_q = parse_scalar("-q")
    for r in (catalog_h3()["R4"], catalog_h3()["R5"]):
        assert gb3[(2, 1)] * r == r.scale(q_minus_one)
        assert gb3[(3,)] * r == r.scale(minus_q)
        assert gb3[(1, 1, 1)] * r == r


def test_eigen_search_recovers_the_table(ctx3, gb3):
    vectors = eigen_search(ctx3, gb3[(2, 1)], parse_scalar("q - 1"))
    assert len(vectors) == 4
    cat = catalog_h3()
    q_minus_one = parse_scalar("q - 1")
    for v in vectors:
        assert gb3[(2, 1)] * v == v.scale(q_minus_one)
    # R4 and R5 solve the same eigenvalue problem
    for r in (cat["R4"], cat["R5"]):
        assert gb3[(2, 1)] * r == r.scale(q_minus_one)


def test_eigen_search_rejects_noncentral_operator(ctx3):
    with pytest.raises(NotCentralError):
        eigen_search(ctx3, parse_element("T[1]", 3), parse_scalar("q"))


def test_degree_three_catalog_checks(gb3):
    checks = catalog_checks_h3(gb3)
    failed = [k for k, ok in checks.items() if not ok]
    assert failed == []


def test_degree_four_catalog_checks():
    checks = catalog_checks_h4()
    failed = [k for k, ok in checks.items() if not ok]
    assert failed == []


def test_catalog_dispatch(ctx3):
    assert set(catalog(3)) == set(catalog_h3())
    assert set(catalog(4)) == {"xbar", "ybar", "Twn", "R4", "R5", "R6"}
    with pytest.raises(ValueError):
        catalog(5)


def test_span_of_catalog_is_in_sqrt():
    assert span_in_sqrt(list(catalog_h3().values()))
    assert not span_in_sqrt([parse_element("T[] + T[1]", 3)])


def test_sum_and_difference_structure(ctx3):
    # xbar - ybar is central while xbar + ybar is a strict square root
    assert is_central(xbar(ctx3) - ybar(ctx3))
    assert not is_central(xbar(ctx3) + ybar(ctx3))
    rep = in_sqrt_centre(xbar(ctx3) + ybar(ctx3))
    assert rep.in_sqrt


def test_mixed_combinations_leave_sqrt(ctx3, gb3):
    mixed = xbar(ctx3) + ybar(ctx3) * t_longest(ctx3)
    assert not in_sqrt_centre(mixed, gb3).in_sqrt
    for el in catalog_h3().values():
        shifted = el + el * el
        assert not in_sqrt_centre(shifted, gb3).in_sqrt


def test_r4_r5_anticommute():
    cat = catalog_h3()
    r4, r5 = cat["R4"], cat["R5"]
    assert not commutator(r4, r5).is_zero()
    assert (r4 * r5 + r5 * r4).is_zero()


def test_parity_law_for_monomials(ctx3):
    gens = (xbar(ctx3), ybar(ctx3), t_longest(ctx3))
    assert even_word_centrality(gens, 4)


def test_closed_forms_for_xbar_ybar_squares(ctx3, gb3):
    out = verify_xbar_ybar_squares(ctx3, gb3)
    assert out == {
        "xbar_gamma": True,
        "xbar_esym": True,
        "ybar_gamma": True,
        "ybar_esym": True,
    }


def test_branch_classification(gb3, ctx3):
    assert h3_constraint_check(catalog_h3()["R4"]) == "sqrt-branch"
    assert h3_constraint_check(catalog_h3()["R5"]) == "sqrt-branch"
    assert h3_constraint_check(gb3[(2, 1)]) == "central-branch"
    assert h3_constraint_check(x_elem(ctx3)) == "central-branch"
    assert h3_constraint_check(parse_element("T[] + T[1]", 3)) == "neither"


def test_sqrt_constructor_recovers_r4():
    one = LaurentPoly(1)
    zero = LaurentPoly(0)
    built = sqrt_h3_from_coeffs(one, -one, zero, zero, zero)
    assert built == catalog_h3()["R4"]


def test_sqrt_constructor_output_is_always_in_branch():
    q = parse_scalar("q")
    cases = [
        (q, LaurentPoly(0), LaurentPoly(0), LaurentPoly(0), LaurentPoly(0)),
        (q, q - LaurentPoly(1), LaurentPoly(2), LaurentPoly(0), LaurentPoly(1)),
        (LaurentPoly(0), LaurentPoly(0), LaurentPoly(1), LaurentPoly(0), LaurentPoly(0)),
    ]
    for coeffs in cases:
        built = sqrt_h3_from_coeffs(*coeffs)
        assert h3_constraint_check(built) == "sqrt-branch"
        assert in_sqrt_centre(built).in_sqrt


def test_sampler_is_deterministic_and_lands_in_sqrt(gb3):
    for seed in range(SAMPLER_SEEDS):
        h = sample_sqrt_h3(seed)
        assert h == sample_sqrt_h3(seed)
        assert h3_constraint_check(h) in ("sqrt-branch", "central-branch")
        assert in_sqrt_centre(h, gb3).in_sqrt
    assert sample_sqrt_h3(0) != sample_sqrt_h3(1)


def test_strict_roots_commute_pairwise(ctx3):
    els = [xbar(ctx3), ybar(ctx3), t_longest(ctx3)]
    for a in els:
        for b in els:
            assert commutator(a, b).is_zero()
