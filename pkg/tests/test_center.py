"""Tests for the centre: minimal basis, coordinates, membership, caching."""

import os

import pytest

from hecke import (
    HeckeElement,
    NotCentralError,
    Partition,
    as_context,
    centre_basis,
    elem_sym,
    express_in_gamma,
    gamma_basis,
    is_central,
    minimal_class_elements,
    parse_element,
    parse_scalar,
    partitions_of,
    t_longest,
    verify_gamma_invariants,
    x_elem,
    y_elem,
)


def _coords(z, gb):
    return {tuple(p): c for p, c in express_in_gamma(z, gb).items()}


def test_degree_three_basis_fixtures(gb3):
    assert gb3[(1, 1, 1)] == parse_element("T[]", 3)
    assert gb3[(2, 1)] == parse_element("T[1] + T[2] + q^-1*T[1,2,1]", 3)
    assert gb3[(3,)] == parse_element(
        "T[1,2] + T[2,1] + (1 - q^-1)*T[1,2,1]", 3
    )


def test_basis_is_indexed_by_partitions(gb3, gb4):
    assert {tuple(p) for p, _ in gb3} == {tuple(p) for p in partitions_of(3)}
    assert len(list(gb4)) == 5
    assert len(gb4.elements) == 5


def test_every_basis_element_is_central(gb3, gb4):
    for gb in (gb3, gb4):
        for _, z in gb:
            assert is_central(z)


def test_minimal_length_pinning(gb3, gb4):
    # coefficient 1 on the short elements of the matching class, 0 on the
    # short elements of every other class, nothing below the minimal length
    for gb in (gb3, gb4):
        n = gb.n
        for lam, z in gb:
            for mu in partitions_of(n):
                want = 1 if mu == lam else 0
                for w in minimal_class_elements(n, mu):
                    assert z.coeff(w) == parse_scalar(str(want))
            for w in z.support():
                assert w.length() >= lam.min_length()


def test_coordinates_of_x(ctx3, gb3, ctx4, gb4):
    one = parse_scalar("1")
    for ctx, gb in ((ctx3, gb3), (ctx4, gb4)):
        coords = express_in_gamma(x_elem(ctx), gb)
        assert set(coords.values()) == {one}
        assert len(coords) == len(list(gb))


def test_coordinates_of_y(ctx3, gb3):
    # y has coordinate (-q)^(ell - l) on the class with l short transpositions
    assert _coords(y_elem(ctx3), gb3) == {
        (1, 1, 1): parse_scalar("-q^3"),
        (2, 1): parse_scalar("q^2"),
        (3,): parse_scalar("-q"),
    }


def test_coordinates_of_longest_word_square(ctx3, gb3):
    tw = t_longest(ctx3)
    assert _coords(tw * tw, gb3) == {
        (1, 1, 1): parse_scalar("q^3"),
        (2, 1): parse_scalar("q^2*(q - 1)"),
        (3,): parse_scalar("q*(q - 1)^2"),
    }


def test_symmetric_sums_decompose_by_minimal_length(ctx3, gb3, ctx4, gb4):
    zero = parse_scalar("0")
    one = parse_scalar("1")
    for ctx, gb in ((ctx3, gb3), (ctx4, gb4)):
        for i in range(0, ctx.n):
            coords = express_in_gamma(elem_sym(ctx, i), gb)
            for lam, c in coords.items():
                assert c == (one if lam.min_length() == i else zero)


def test_express_rejects_noncentral_input(gb3):
    with pytest.raises(NotCentralError):
        express_in_gamma(parse_element("T[1]", 3), gb3)


def test_express_is_linear(gb3):
    q = parse_scalar("q")
    z = gb3[(2, 1)].scale(q) + gb3[(3,)]
    coords = _coords(z, gb3)
    assert coords == {
        (1, 1, 1): parse_scalar("0"),
        (2, 1): q,
        (3,): parse_scalar("1"),
    }


def test_gamma_invariants_hold(gb3, gb4):
    verify_gamma_invariants(gb3)
    verify_gamma_invariants(gb4)


def test_coefficients_avoid_odd_powers(gb3, gb4):
    # every coordinate lives in Z[q, q^-1]: only even exponents of v
    for gb in (gb3, gb4):
        for _, z in gb:
            for _, c in z.items():
                assert c.has_even_exponents()


def test_centre_membership(ctx3, gb3):
    cb = centre_basis(ctx3)
    assert cb.contains(x_elem(ctx3))
    assert cb.contains(y_elem(ctx3))
    for _, z in gb3:
        assert cb.contains(z)
    assert not cb.contains(parse_element("T[1]", 3))
    assert not cb.contains(t_longest(ctx3))
    assert len(cb.vectors) == 3


def test_cache_roundtrip(tmp_path, monkeypatch):
    import hecke.center as center

    from hecke import FormatError

    # the in-process memo would otherwise bypass the file cache entirely
    monkeypatch.setattr(center, "_GAMMA_MEMO", {})
    ctx = as_context(3)
    first = gamma_basis(ctx, cache_dir=str(tmp_path))
    files = os.listdir(tmp_path)
    assert files, "expected a cache file to be written"

    monkeypatch.setattr(center, "_GAMMA_MEMO", {})
    second = gamma_basis(ctx, cache_dir=str(tmp_path))
    assert first.elements == second.elements

    # a corrupted cache file must be rejected, not silently trusted
    path = os.path.join(tmp_path, files[0])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{not json")
    monkeypatch.setattr(center, "_GAMMA_MEMO", {})
    with pytest.raises(FormatError):
        gamma_basis(ctx, cache_dir=str(tmp_path))


def test_identity_is_the_all_fixed_class(gb4):
    assert gb4[(1, 1, 1, 1)] == HeckeElement.one(4)
    assert gb4[Partition((1, 1, 1, 1))] == HeckeElement.one(4)
