"""Exact scalar arithmetic: Laurent polynomials over Z and their fractions.

Every scalar in this package lives in Z[v, v^-1], the ring of Laurent
polynomials with integer coefficients in a single variable v.  The Hecke
parameter is q = v^2, so half-integral powers of q are honest monomials
and the normalised presentation (whose quadratic relation involves
xi = v - v^-1) never forces us out of the ring.

A polynomial is stored sparsely as {exponent: coefficient} with zero
coefficients stripped, so structural equality coincides with equality in
the ring.  Coefficients are Python ints and never overflow.

RationalFn is a reduced fraction num/den of two LaurentPoly values.  It
only appears at the boundary of the exact linear algebra; the reduction
uses a content-and-primitive-part gcd, and the canonical form fixes the
denominator to have minimal v-exponent zero and positive leading
coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class LaurentPoly:
    """An element of Z[v, v^-1] in canonical sparse form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | int = 0):
        if isinstance(terms, int):
            self._terms = {0: terms} if terms else {}
        else:
            self._terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # internal: terms already canonical, not shared with callers
        p = object.__new__(cls)
        p._terms = terms
        return p

    # -- queries ---------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """Term list sorted by ascending exponent."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_unit(self) -> bool:
        """Units of Z[v, v^-1] are +-v^k."""
        if len(self._terms) != 1:
            return False
        c = next(iter(self._terms.values()))
        return c in (1, -1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def num_terms(self) -> int:
        return len(self._terms)

    def leading_coeff(self) -> int:
        """Coefficient of the highest power of v."""
        return self._terms[self.max_exp()]

    def has_even_exponents(self) -> bool:
        """True iff the scalar lies in Z[q, q^-1], q = v^2."""
        return all(e % 2 == 0 for e in self._terms)

    def content(self) -> int:
        """Non-negative gcd of the integer coefficients (0 for the zero poly)."""
        g = 0
        for c in self._terms.values():
            g = _igcd(g, c)
            if g == 1:
                return 1
        return g

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({ea + e: ca * c for e, c in b.items()})
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = get(e, 0) + ca * cb
                out[e] = s
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise ArithmeticError("negative power of a non-unit scalar")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({-e: c}) ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def divide_int(self, k: int) -> "LaurentPoly":
        """Exact division by a nonzero integer."""
        if k == 0:
            raise ZeroDivisionError("division of a scalar by zero")
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError("inexact integer division of scalar")
            out[e] = q
        return LaurentPoly._raw(out)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in Z[v, v^-1]; raises if the division is inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division of a scalar by zero")
        if self.is_zero():
            return ZERO
        if len(other._terms) == 1:
            (eb, cb), = other._terms.items()
            out = {}
            for e, c in self._terms.items():
                q, r = divmod(c, cb)
                if r:
                    raise ArithmeticError("inexact scalar division")
                out[e - eb] = q
            return LaurentPoly._raw(out)
        sa, sb = self.min_exp(), other.min_exp()
        rem = {e - sa: c for e, c in self._terms.items()}
        db = other.max_exp() - sb
        bterms = {e - sb: c for e, c in other._terms.items()}
        lb = bterms[db]
        quot: dict[int, int] = {}
        while rem:
            da = max(rem)
            if da < db:
                raise ArithmeticError("inexact scalar division")
            qc, r = divmod(rem[da], lb)
            if r:
                raise ArithmeticError("inexact scalar division")
            shift = da - db
            quot[shift] = qc
            for e, c in bterms.items():
                ne = e + shift
                s = rem.get(ne, 0) - qc * c
                if s:
                    rem[ne] = s
                else:
                    rem.pop(ne, None)
        return LaurentPoly._raw({e + sa - sb: c for e, c in quot.items()})

    # -- evaluation and display -------------------------------------------

    def evaluate(self, v0) -> Fraction:
        """Evaluate at a nonzero rational point v = v0."""
        v0 = Fraction(v0)
        if v0 == 0:
            raise ZeroDivisionError("evaluation of a Laurent polynomial at v = 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * v0 ** e
        return total

    @staticmethod
    def _power_token(e: int) -> str:
        if e == 0:
            return ""
        if e % 2 == 0:
            h = e // 2
            return "q" if h == 1 else f"q^{h}"
        return "v" if e == 1 else f"v^{e}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items(), reverse=True):
            power = self._power_token(e)
            mag = abs(c)
            if not power:
                body = str(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{mag}*{power}"
            pieces.append((c < 0, body))
        first_neg, first_body = pieces[0]
        out = ("-" if first_neg else "") + first_body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"

    # -- serialisation ------------------------------------------------------

    def to_pairs(self) -> list[list]:
        """JSON form: ascending [exponent, coefficient-as-string] pairs."""
        return [[e, str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        terms: dict[int, int] = {}
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError(f"malformed scalar pair {pair!r}")
            e, c = int(pair[0]), int(pair[1])
            if e in terms:
                raise ValueError(f"duplicate exponent {e} in scalar")
            if c:
                terms[e] = c
        return cls._raw(terms)


# Shared constants.  LaurentPoly is immutable by convention, so these are
# safe to reuse everywhere.
ZERO = LaurentPoly()
ONE = LaurentPoly(1)
TWO = LaurentPoly(2)
V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})
Q = LaurentPoly({2: 1})
Q_INV = LaurentPoly({-2: 1})
Q_MINUS_1 = LaurentPoly({2: 1, 0: -1})
XI = LaurentPoly({1: 1, -1: -1})


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: 1})


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly._raw({2 * k: 1})


def from_int(c: int) -> LaurentPoly:
    return LaurentPoly(c)


# -- gcd machinery -----------------------------------------------------------
#
# Pseudo-remainder sequences on the sparse representation.  Primitive parts
# are taken in the Laurent sense: strip the integer content and the common
# power of v, keeping the sign of the leading coefficient.


def _strip(terms: dict[int, int]) -> dict[int, int]:
    """Divide by content and v^(min exponent); {} stays {}."""
    if not terms:
        return {}
    g = 0
    for c in terms.values():
        g = _igcd(g, c)
        if g == 1:
            break
    m = min(terms)
    if g == 1 and m == 0:
        return dict(terms)
    return {e - m: c // g for e, c in terms.items()}


def _prem(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Pseudo-remainder of a by b (deg a >= deg b >= 0, min exps 0)."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        shift = dr - db
        nr = {e: lb * c for e, c in r.items()}
        for e, c in b.items():
            ne = e + shift
            s = nr.get(ne, 0) - lr * c
            if s:
                nr[ne] = s
            else:
                nr.pop(ne, None)
        r = nr
    return r


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A gcd in Z[v, v^-1], canonicalised: min exponent 0, leading coeff > 0.

    The gcd of Laurent polynomials is only defined up to a unit +-v^k;
    this canonical choice makes the function deterministic.  Integer
    content is included: lp_gcd(2, 2q) = 2.
    """
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero() or b.is_zero():
        p = b if a.is_zero() else a
        t = {e - p.min_exp(): c for e, c in p._terms.items()}
        if t[max(t)] < 0:
            t = {e: -c for e, c in t.items()}
        return LaurentPoly._raw(t)
    ca, cb = a.content(), b.content()
    c = _igcd(ca, cb)
    pa = _strip(dict(a._terms))
    pb = _strip(dict(b._terms))
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while pb:
        r = _prem(pa, pb)
        pa, pb = pb, _strip(r)
    if pa[max(pa)] < 0:
        pa = {e: -k for e, k in pa.items()}
    return LaurentPoly._raw({e: k * c for e, k in pa.items()})


def lp_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero() or b.is_zero():
        return ZERO
    return (a * b).divexact(lp_gcd(a, b))


class RationalFn:
    """A reduced fraction of Laurent polynomials.

    Canonical form: num and den share no factor (content and primitive
    part both reduced), den has minimal v-exponent zero and positive
    leading coefficient.  Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        if isinstance(num, int):
            num = LaurentPoly(num)
        if isinstance(den, int):
            den = LaurentPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        s = -den.min_exp()
        num = num.shift(s)
        den = den.shift(s)
        g = lp_gcd(num, den)
        if not g.is_one():
            num = num.divexact(g)
            den = den.divexact(g)
        s = -den.min_exp()
        if s:
            num = num.shift(s)
            den = den.shift(s)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        r = object.__new__(cls)
        r.num, r.den = p, ONE
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (LaurentPoly, int)):
            other = RationalFn(other if isinstance(other, LaurentPoly)
                               else LaurentPoly(other))
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> "RationalFn":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        r = object.__new__(RationalFn)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other) -> "RationalFn":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __rsub__(self, other) -> "RationalFn":
        return (-self) + other

    def __mul__(self, other) -> "RationalFn":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division of rational functions by zero")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFn":
        return _as_rf(other) / self

    def inverse(self) -> "RationalFn":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFn(self.den, self.num)

    def evaluate(self, v0) -> Fraction:
        d = self.den.evaluate(v0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at v = {v0}")
        return self.num.evaluate(v0) / d

    def as_laurent(self) -> LaurentPoly:
        """The underlying Laurent polynomial, if the denominator is a unit."""
        if self.den.is_one():
            return self.num
        if self.den.is_unit():
            (e, c), = self.den._terms.items()
            return self.num * LaurentPoly._raw({-e: c})
        raise ArithmeticError(f"not a Laurent polynomial: denominator {self.den}")

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"


def _as_rf(x) -> "RationalFn":
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFn.from_poly(x)
    if isinstance(x, int):
        return RationalFn.from_poly(LaurentPoly(x))
    return NotImplemented


RF_ZERO = RationalFn.from_poly(ZERO)
RF_ONE = RationalFn.from_poly(ONE)
