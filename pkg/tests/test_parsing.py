"""Tests for the element grammar, the scalar grammar, and JSON interchange."""

import random

import pytest

from hecke import (
    FormatError,
    HeckeElement,
    LaurentPoly,
    ParseError,
    ResourceCapError,
    all_permutations,
    element_from_json,
    element_to_json,
    format_element,
    murphy,
    parse_element,
    parse_scalar,
    t_longest,
    v_power,
    x_elem,
)

ROUNDTRIP_TRIALS = 300


def _random_element(rng, n):
    perms = all_permutations(n)
    out = HeckeElement.zero(n)
    for _ in range(rng.randint(1, 4)):
        terms = {rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(rng.randint(1, 3))}
        out = out + HeckeElement.basis(n, rng.choice(perms)).scale(LaurentPoly(terms))
    return out


def test_scalar_grammar():
    q = LaurentPoly({2: 1})
    assert parse_scalar("q") == q
    assert parse_scalar("v^2") == q
    assert parse_scalar("xi") == v_power(1) - v_power(-1)
    assert parse_scalar("-3") == LaurentPoly(-3)
    assert parse_scalar("(q - 1)^2") == (q - LaurentPoly(1)) ** 2
    assert parse_scalar("q^-2") == LaurentPoly({-4: 1})
    assert parse_scalar("2*q + q^-1*(1 - q)") == (
        2 * q + LaurentPoly({-2: 1}) * (LaurentPoly(1) - q)
    )
    assert parse_scalar("0") == LaurentPoly(0)


def test_element_grammar():
    assert parse_element("T[]", 3) == HeckeElement.one(3)
    assert parse_element("3*T[1]", 3) == HeckeElement.generator(3, 1).scale(LaurentPoly(3))
    assert parse_element("-T[1]", 3) == HeckeElement.generator(3, 1).scale(LaurentPoly(-1))
    assert parse_element("T[2,1]", 4) == HeckeElement.from_word(4, [2, 1])
    assert parse_element(" q * T[1]  +  T[] ", 3) == (
        HeckeElement.generator(3, 1).scale(LaurentPoly({2: 1})) + HeckeElement.one(3)
    )


def test_unreduced_words_multiply_out():
    t1 = HeckeElement.generator(3, 1)
    assert parse_element("T[1,1]", 3) == t1 * t1
    assert parse_element("T[1,2,1]", 3) == parse_element("T[2,1,2]", 3)


def test_references_resolve(ctx3, gb3):
    assert parse_element("@x", 3) == x_elem(ctx3)
    assert parse_element("@Twn", 3) == t_longest(ctx3)
    assert parse_element("@L:3", 3) == murphy(ctx3, 3)
    assert parse_element("@gamma:2,1", 3) == gb3[(2, 1)]
    assert parse_element("@catalog:R4", 3) == parse_element("T[1] - T[2]", 3)
    assert parse_element("q*@gamma:3 + T[]", 3) == (
        gb3[(3,)].scale(LaurentPoly({2: 1})) + HeckeElement.one(3)
    )


def test_parse_errors_carry_positions():
    cases = {
        "T[5]": 2,
        "T[0]": 2,
        "q*": 2,
        "T[1": 3,
        "": 0,
        "q q": 2,
        "T[1]]": 4,
        "^2": 0,
        "q^v": 2,
        "q**2": 2,
        "@nosuchname": 1,
        "@gamma:2,2": 1,
        "@catalog:nope": 1,
    }
    for text, pos in cases.items():
        with pytest.raises(ParseError) as err:
            parse_element(text, 3)
        assert err.value.pos == pos, text


def test_fractional_power_needs_a_unit_base():
    assert parse_scalar("v^-3") == v_power(-3)
    with pytest.raises(ParseError):
        parse_scalar("(q + 1)^-1")


def test_scalar_parser_rejects_elements():
    with pytest.raises(ParseError):
        parse_scalar("T[1]")


def test_reference_respects_resource_caps():
    with pytest.raises(ResourceCapError):
        parse_element("@x", 8)


def test_format_fixtures(ctx3):
    assert format_element(HeckeElement.zero(3)) == "0*T[]"
    assert format_element(HeckeElement.one(3)) == "T[]"
    assert format_element(x_elem(ctx3)) == (
        "T[] + T[2] + T[1] + T[1,2] + T[2,1] + T[1,2,1]"
    )
    # negative leading coefficients are factored out, not left inline
    assert format_element(parse_element("(1-q)*T[1]", 3)) == "-(q - 1)*T[1]"
    assert format_element(parse_element("(1-q)*T[1] + T[2]", 3)) == (
        "T[2] - (q - 1)*T[1]"
    )
    assert format_element(parse_element("-2*T[]", 3)) == "-2*T[]"


def test_format_parse_roundtrip():
    rng = random.Random(13)
    for _ in range(ROUNDTRIP_TRIALS):
        n = rng.choice((2, 3, 4))
        h = _random_element(rng, n)
        assert parse_element(format_element(h), n) == h


def test_json_roundtrip_both_bases():
    rng = random.Random(29)
    for _ in range(60):
        h = _random_element(rng, 3)
        for basis in ("T", "Ttilde"):
            doc = element_to_json(h, basis=basis)
            assert element_from_json(doc) == h


def test_json_document_shape(ctx3):
    doc = element_to_json(parse_element("q*T[1] + T[]", 3))
    assert doc == {
        "n": 3,
        "basis": "T",
        "terms": [
            {"perm": [1, 2, 3], "coeff": [[0, "1"]]},
            {"perm": [2, 1, 3], "coeff": [[2, "1"]]},
        ],
    }
    tilde = element_to_json(parse_element("q*T[1] + T[]", 3), basis="Ttilde")
    assert tilde["terms"][1] == {"perm": [2, 1, 3], "coeff": [[3, "1"]]}


def test_json_validation_rejects_malformed_documents():
    good_term = {"perm": [2, 1, 3], "coeff": [[0, "1"]]}
    bad_docs = [
        {"n": 3, "basis": "T"},
        {"n": 3, "basis": "TT", "terms": []},
        {"n": 0, "basis": "T", "terms": []},
        {"n": 3, "basis": "T", "terms": [{"perm": [1, 2, 3]}]},
        {"n": 3, "basis": "T", "terms": [dict(good_term, extra=1)]},
        {"n": 3, "basis": "T", "terms": [{"perm": "12", "coeff": [[0, "1"]]}]},
        {"n": 3, "basis": "T", "terms": [good_term, dict(good_term)]},
        {"n": 2, "basis": "T", "terms": [good_term]},
        {"n": 3, "basis": "T", "terms": [{"perm": [1, 1, 2], "coeff": [[0, "1"]]}]},
        "not a dict",
    ]
    for doc in bad_docs:
        with pytest.raises(FormatError):
            element_from_json(doc)


def test_json_drops_zero_terms():
    doc = {
        "n": 3,
        "basis": "T",
        "terms": [{"perm": [2, 1, 3], "coeff": []}],
    }
    assert element_from_json(doc).is_zero()
