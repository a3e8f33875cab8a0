"""Constructors for the distinguished elements of the Hecke algebra.

Everything here is a pure function of (degree, index); results are memoized,
so repeated identity checks do not recompute the towers.  All elements are
returned in the standard T-basis; callers who want the rescaled basis apply
``to_normalized`` at the boundary.

The families:

* ``murphy(n, i)``: the Jucys-Murphy element, a sum of transpositions
  ``(k i)`` for k < i, weighted by descending powers of q^-1.
* ``dual_murphy``: the image of the normalized Murphy element under the
  diagram flip, optionally embedded in a larger algebra.
* ``braid_murphy(n, i)``: the positive braid conjugate
  Tt_{s_{i-1}} ... Tt_{s_1} Tt_{s_1} ... Tt_{s_{i-1}}.
* ``elem_sym(n, i)``: the i-th elementary symmetric function in the Murphy
  elements, built by the one-variable-at-a-time recursion.
* ``x_elem/y_elem``: the two one-dimensional idempotent directions (up to
  scale), plus their truncations ``xbar/ybar`` and the longest basis element.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import HeckeElement, as_context
from .laurent import LaurentPoly, ONE, q_power, v_power
from .permutations import Permutation, all_permutations


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise IndexError(f"{what} index {i} not in [{lo}, {hi}]")


# -- Murphy elements -------------------------------------------------------

@lru_cache(maxsize=None)
def _murphy(n: int, i: int) -> HeckeElement:
    terms = {}
    for k in range(1, i):
        w = Permutation.transposition(n, k, i)
        terms[w] = q_power(-(i - 1 - k))
    return HeckeElement._raw(n, terms)


def murphy(ctx, i: int) -> HeckeElement:
    """The i-th Murphy element of H_n: sum of q^-(i-1-k) T_(k i), k < i.

    The first one is zero by convention.

    >>> from hecke.algebra import HeckeElement
    >>> murphy(3, 1).is_zero()
    True
    >>> murphy(3, 3).num_terms()
    2
    """
    c = as_context(ctx)
    _check_index(i, 1, c.n, "Murphy")
    return _murphy(c.n, i)


@lru_cache(maxsize=None)
def _murphy_tilde(n: int, i: int) -> HeckeElement:
    el = HeckeElement.zero(n)
    for k in range(1, i):
        el = el + HeckeElement.basis_normalized(
            n, Permutation.transposition(n, k, i))
    return el


def murphy_normalized(ctx, i: int) -> HeckeElement:
    """Sum of Tt_(k i) over k < i; equals v^-1 times ``murphy(ctx, i)``."""
    c = as_context(ctx)
    _check_index(i, 1, c.n, "Murphy")
    return _murphy_tilde(c.n, i)


def dual_murphy(ctx, m: int, i: int) -> HeckeElement:
    """The flipped Murphy element of H_m, embedded in the ambient H_n.

    Sum of Tt_(j, m-i+1) over m-i+2 <= j <= m.  For m equal to the ambient
    degree this is the diagram flip of ``murphy_normalized(ctx, i)``; smaller
    m gives the element of the subalgebra generated by the first m-1 simple
    reflections.  The first one (i = 1) is zero.
    """
    c = as_context(ctx)
    if not 1 <= i <= m <= c.n:
        raise IndexError(f"dual Murphy indices (m={m}, i={i}) need 1 <= i <= m <= {c.n}")
    el = HeckeElement.zero(c.n)
    for j in range(m - i + 2, m + 1):
        el = el + HeckeElement.basis_normalized(
            c.n, Permutation.transposition(c.n, m - i + 1, j))
    return el


@lru_cache(maxsize=None)
def _braid_murphy(n: int, i: int) -> HeckeElement:
    if i == 1:
        return HeckeElement.one(n)
    t = HeckeElement.basis_normalized(n, Permutation.simple(n, i - 1))
    return t * _braid_murphy(n, i - 1) * t


def braid_murphy(ctx, i: int) -> HeckeElement:
    """The braid form of the Murphy element: conjugating the identity by
    the positive lift of s_{i-1} ... s_1.

    Satisfies braid_murphy(n, i) = xi * murphy_normalized(n, i) + 1.
    """
    c = as_context(ctx)
    _check_index(i, 1, c.n, "braid Murphy")
    return _braid_murphy(c.n, i)


# -- elementary symmetric functions in the Murphy elements ------------------

@lru_cache(maxsize=None)
def _esym_tilde(n: int, i: int) -> HeckeElement:
    # Convention: the 0-th is the identity and everything of index >= n
    # vanishes, which makes the recursion below total.
    if i == 0:
        return HeckeElement.one(n)
    if i >= n:
        return HeckeElement.zero(n)
    prev_low = _esym_tilde(n - 1, i - 1).embed(n)
    prev_same = _esym_tilde(n - 1, i).embed(n)
    return _murphy_tilde(n, n) * prev_low + prev_same


def elem_sym_normalized(ctx, i: int) -> HeckeElement:
    """The i-th elementary symmetric function of the normalized Murphy
    elements of H_n, 0 <= i <= n-1.

    Computed by adding one Murphy element at a time, so building the top one
    costs n-1 products of elements already in hand.
    """
    c = as_context(ctx)
    _check_index(i, 0, c.n - 1, "elementary symmetric")
    return _esym_tilde(c.n, i)


def elem_sym(ctx, i: int) -> HeckeElement:
    """The i-th elementary symmetric function of the Murphy elements.

    Equals v^i times the normalized variant, since each Murphy factor
    carries one power of v.
    """
    c = as_context(ctx)
    _check_index(i, 0, c.n - 1, "elementary symmetric")
    return _esym_tilde(c.n, i).scale(v_power(i))


# -- the sign and trivial directions ----------------------------------------

def _longest_length(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def _x_elem(n: int) -> HeckeElement:
    return HeckeElement._raw(n, {w: ONE for w in all_permutations(n, cap=n)})


def x_elem(ctx) -> HeckeElement:
    """Sum of T_w over all of S_n."""
    c = as_context(ctx)
    c.check_enum()
    return _x_elem(c.n)


@lru_cache(maxsize=None)
def _y_elem(n: int) -> HeckeElement:
    ell = _longest_length(n)
    terms = {}
    for w in all_permutations(n, cap=n):
        d = ell - w.length()
        # (-q)^d as a Laurent polynomial in v
        terms[w] = LaurentPoly({2 * d: 1 if d % 2 == 0 else -1})
    return HeckeElement._raw(n, terms)


def y_elem(ctx) -> HeckeElement:
    """Sum of (-q)^(l(w_n) - l(w)) T_w over all of S_n."""
    c = as_context(ctx)
    c.check_enum()
    return _y_elem(c.n)


def t_longest(ctx) -> HeckeElement:
    """The basis element at the longest permutation."""
    c = as_context(ctx)
    return HeckeElement.basis(c.n, Permutation.longest(c.n))


def xbar(ctx) -> HeckeElement:
    """x with its top term removed."""
    c = as_context(ctx)
    return x_elem(c) - t_longest(c)


def ybar(ctx) -> HeckeElement:
    """y with its top term removed."""
    c = as_context(ctx)
    return y_elem(c) - t_longest(c)


def poincare(ctx) -> LaurentPoly:
    """Sum of q^l(w) over S_n, via the product formula (1)(1+q)(1+q+q^2)...

    >>> print(poincare(2))
    q + 1
    """
    c = as_context(ctx)
    out = ONE
    for i in range(2, c.n + 1):
        out = out * LaurentPoly({2 * k: 1 for k in range(i)})
    return out


@lru_cache(maxsize=None)
def _full_twist_product(n: int) -> HeckeElement:
    out = HeckeElement.one(n)
    for i in range(1, n + 1):
        out = out * _braid_murphy(n, i)
    return out


def full_twist_product(ctx) -> HeckeElement:
    """The product of all braid Murphy elements, smallest index first.

    Equals the square of the normalized longest basis element.
    """
    c = as_context(ctx)
    return _full_twist_product(c.n)


# -- name table for the CLI and the @ref syntax -----------------------------

INDEXED_KINDS = ("L", "Lt", "calL", "Mt", "e", "et")
PLAIN_KINDS = ("x", "y", "xbar", "ybar", "Twn", "fulltwist")


def named_element(kind: str, ctx, i: int | None = None) -> HeckeElement:
    """Resolve a named-element reference like ('L', 4, 2) to the element."""
    c = as_context(ctx)
    if kind in INDEXED_KINDS:
        if i is None:
            raise ValueError(f"named element {kind!r} needs an index")
        if kind == "L":
            return murphy(c, i)
        if kind == "Lt":
            return murphy_normalized(c, i)
        if kind == "calL":
            return braid_murphy(c, i)
        if kind == "Mt":
            return dual_murphy(c, c.n, i)
        if kind == "e":
            return elem_sym(c, i)
        return elem_sym_normalized(c, i)
    if kind in PLAIN_KINDS:
        if i is not None:
            raise ValueError(f"named element {kind!r} takes no index")
        if kind == "x":
            return x_elem(c)
        if kind == "y":
            return y_elem(c)
        if kind == "xbar":
            return xbar(c)
        if kind == "ybar":
            return ybar(c)
        if kind == "Twn":
            return t_longest(c)
        return full_twist_product(c)
    raise ValueError(f"unknown named element kind {kind!r}")
