"""Tests for the special elements: Murphy family, symmetric sums, x, y, twists."""

import itertools

from hecke import (
    HeckeElement,
    as_context,
    braid_murphy,
    commutator,
    dual_murphy,
    elem_sym,
    elem_sym_normalized,
    full_twist_product,
    is_central,
    murphy,
    murphy_normalized,
    parse_element,
    parse_scalar,
    poincare,
    q_power,
    t_longest,
    v_power,
    x_elem,
    xbar,
    y_elem,
    ybar,
)

XI = parse_scalar("xi")


def test_murphy_fixtures(ctx3):
    assert murphy(ctx3, 2) == parse_element("T[1]", 3)
    assert murphy(ctx3, 3) == parse_element("T[2] + q^-1*T[1,2,1]", 3)


def test_murphy_normalization(ctx3, ctx4):
    for ctx in (ctx3, ctx4):
        for i in range(2, ctx.n + 1):
            scaled = murphy(ctx, i).scale(v_power(-1))
            assert murphy_normalized(ctx, i) == scaled
    assert murphy_normalized(ctx3, 3) == parse_element(
        "v^-1*T[2] + v^-3*T[1,2,1]", 3
    )


def test_murphy_elements_commute():
    for n in range(3, 6):
        ctx = as_context(n)
        family = [murphy(ctx, i) for i in range(2, n + 1)]
        for a, b in itertools.combinations(family, 2):
            assert commutator(a, b).is_zero()


def test_dual_murphy_fixtures(ctx3, ctx4):
    assert dual_murphy(ctx3, 3, 3) == parse_element(
        "v^-1*T[1] + v^-3*T[1,2,1]", 3
    )
    assert dual_murphy(ctx4, 4, 3) == parse_element(
        "v^-1*T[2] + v^-3*T[2,3,2]", 4
    )


def test_dual_murphy_is_the_flipped_murphy(ctx3, ctx4):
    for ctx in (ctx3, ctx4):
        for i in range(2, ctx.n + 1):
            flipped = murphy_normalized(ctx, i).apply_diagram_flip()
            assert dual_murphy(ctx, ctx.n, i) == flipped


def test_cycle_pair_product_gives_dual_murphy():
    # Tt_{s1..sn} Tt_{sn..s1} = Tt_1 + xi Mt_{n+1,n+1}, checked in degree n+1
    for n in range(2, 5):
        m = n + 1
        ctx = as_context(m)
        up = HeckeElement.from_word(m, list(range(1, m))).scale(v_power(-n))
        down = HeckeElement.from_word(m, list(range(n, 0, -1))).scale(v_power(-n))
        expected = HeckeElement.one(m) + dual_murphy(ctx, m, m).scale(XI)
        assert up * down == expected


def test_braid_murphy_is_affine_in_murphy(ctx3, ctx4):
    for ctx in (ctx3, ctx4):
        for i in range(2, ctx.n + 1):
            expected = murphy_normalized(ctx, i).scale(XI) + HeckeElement.one(ctx.n)
            assert braid_murphy(ctx, i) == expected
    assert braid_murphy(ctx3, 2) == parse_element("T[] + (1 - q^-1)*T[1]", 3)


def test_elem_sym_fixtures(ctx3):
    assert elem_sym(ctx3, 0) == HeckeElement.one(3)
    assert elem_sym(ctx3, 1) == parse_element("T[2] + T[1] + q^-1*T[1,2,1]", 3)
    assert elem_sym(ctx3, 2) == parse_element(
        "T[1,2] + T[2,1] + (1 - q^-1)*T[1,2,1]", 3
    )


def test_elem_sym_against_subset_product_oracle(ctx3, ctx4):
    """The i-th symmetric sum equals the sum over i-subsets of the family."""
    for ctx in (ctx3, ctx4):
        n = ctx.n
        family = [murphy_normalized(ctx, i) for i in range(2, n + 1)]
        for i in range(0, n):
            total = HeckeElement.zero(n)
            for subset in itertools.combinations(family, i):
                prod = HeckeElement.one(n)
                for f in subset:
                    prod = prod * f
                total = total + prod
            assert elem_sym_normalized(ctx, i) == total
            assert elem_sym(ctx, i) == total.scale(v_power(i))


def test_elem_sym_is_central_and_flip_invariant(ctx3, ctx4):
    for ctx in (ctx3, ctx4):
        for i in range(0, ctx.n):
            e = elem_sym(ctx, i)
            assert is_central(e)
            assert e.apply_diagram_flip() == e


def test_longest_word_square_normalized_closed_forms(ctx3, ctx4):
    # Tt_{w}^2 = sum_i xi^i et_i, and also the ordered product of the
    # affine Murphy factors
    for ctx in (ctx3, ctx4):
        n = ctx.n
        tw = t_longest(ctx)
        ell = n * (n - 1) // 2
        lhs = (tw * tw).scale(v_power(-2 * ell))
        rhs = HeckeElement.zero(n)
        for i in range(0, n):
            rhs = rhs + elem_sym_normalized(ctx, i).scale(XI ** i)
        assert lhs == rhs
        prod = HeckeElement.one(n)
        for i in range(2, n + 1):
            prod = prod * braid_murphy(ctx, i)
        assert lhs == prod
        assert full_twist_product(ctx) == prod


def test_poincare_series():
    assert poincare(3) == parse_scalar("q^3 + 2*q^2 + 2*q + 1")
    assert poincare(4) == parse_scalar(
        "q^6 + 3*q^5 + 5*q^4 + 6*q^3 + 5*q^2 + 3*q + 1"
    )
    # evaluating at q = 1 (v = 1) counts the group
    assert poincare(5).evaluate(1) == 120


def test_x_and_y_fixtures(ctx3):
    assert x_elem(ctx3) == parse_element(
        "T[] + T[1] + T[2] + T[1,2] + T[2,1] + T[1,2,1]", 3
    )
    assert y_elem(ctx3) == parse_element(
        "-q^3*T[] + q^2*T[1] + q^2*T[2] - q*T[1,2] - q*T[2,1] + T[1,2,1]", 3
    )
    assert xbar(ctx3) == x_elem(ctx3) - t_longest(ctx3)
    assert ybar(ctx3) == y_elem(ctx3) - t_longest(ctx3)


def test_x_and_y_contraction_identities(ctx3, ctx4):
    q = q_power(1)
    minus_one = parse_scalar("-1")
    for ctx in (ctx3, ctx4):
        x = x_elem(ctx)
        y = y_elem(ctx)
        ell = ctx.n * (ctx.n - 1) // 2
        for i in range(1, ctx.n):
            t = HeckeElement.generator(ctx.n, i)
            assert t * x == x.scale(q)
            assert x * t == x.scale(q)
            assert t * y == y.scale(minus_one)
            assert y * t == y.scale(minus_one)
        assert (x * y).is_zero()
        assert x * x == x.scale(poincare(ctx))
        assert y * y == y.scale(poincare(ctx) * (minus_one ** ell))
        assert is_central(x)
        assert is_central(y)


def test_t_longest(ctx3, ctx4):
    assert t_longest(ctx3) == parse_element("T[1,2,1]", 3)
    assert t_longest(ctx4) == HeckeElement.from_word(4, [1, 2, 1, 3, 2, 1])
