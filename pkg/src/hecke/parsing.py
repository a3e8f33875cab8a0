"""Text and JSON forms for scalars and algebra elements.

Scalar grammar (whitespace-insensitive):

    sum     := ['-'] product (('+'|'-') product)*
    product := power ('*' power)*
    power   := atom ['^' ['-'] INT]
    atom    := INT | 'q' | 'v' | 'xi' | '(' sum ')'

Negative powers need a unit base (a single term with coefficient +-1).

Element grammar:

    elem  := ['-'] term (('+'|'-') term)*
    term  := [product ['*']] part | part
    part  := 'T' '[' [INT (',' INT)*] ']' | '@' ref

T[i1,...,ik] is the product of the generators with those indices; the word
need not be reduced, so T[1,1] parses to q*T[] + (q-1)*T[1].  A term-level
scalar is a product, not a sum: sums need parentheses, as in (q+1)*T[2].

References (degree comes from the parse call): @x @y @xbar @ybar @Twn
@fulltwist; @L:i @Lt:i @calL:i @Mt:i @e:i @et:i; @catalog:NAME;
@gamma:p1,p2,... for a minimal-basis element by partition.
"""

from __future__ import annotations

from .algebra import AlgebraContext, Caps, DEFAULT_CAPS, HeckeElement
from .elements import INDEXED_KINDS, PLAIN_KINDS, named_element
from .errors import FormatError, ParseError
from .laurent import LaurentPoly, ONE, Q, XI, v_power
from .permutations import Permutation

_V = v_power(1)
_SYMBOLS = "+-*^()[],@:"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int | None = None,
                 caps: Caps = DEFAULT_CAPS):
        self.tokens = _tokenize(text)
        self.k = 0
        self.n = n
        self.caps = caps

    def peek(self, ahead: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.k + ahead, len(self.tokens) - 1)]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.k]
        if tok[0] != "EOF":
            self.k += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}",
                             tok[2])
        return tok

    def at_end(self) -> bool:
        return self.peek()[0] == "EOF"

    # -- scalars -------------------------------------------------------------

    def _starts_part(self, ahead: int = 0) -> bool:
        kind, val, _ = self.peek(ahead)
        return (kind == "NAME" and val == "T"
                and self.peek(ahead + 1)[0] == "[") or kind == "@"

    def scalar_sum(self) -> LaurentPoly:
        negate = False
        if self.peek()[0] == "-":
            self.next()
            negate = True
        out = self.scalar_product()
        if negate:
            out = -out
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.scalar_product()
            out = out + rhs if op == "+" else out - rhs
        return out

    def scalar_product(self, stop_at_part: bool = False) -> LaurentPoly:
        out = self.scalar_power()
        while True:
            if self.peek()[0] == "*":
                if stop_at_part and self._starts_part(1):
                    return out
                self.next()
                out = out * self.scalar_power()
            else:
                return out

    def scalar_power(self) -> LaurentPoly:
        base = self.scalar_atom()
        if self.peek()[0] != "^":
            return base
        self.next()
        neg = False
        if self.peek()[0] == "-":
            self.next()
            neg = True
        tok = self.expect("INT")
        exp = int(tok[1])
        if not neg:
            return base ** exp
        if not base.is_unit():
            raise ParseError("negative power of a non-unit scalar", tok[2])
        (e, c), = base.items()
        return LaurentPoly({-e: c}) ** exp

    def scalar_atom(self) -> LaurentPoly:
        kind, val, pos = self.next()
        if kind == "INT":
            return LaurentPoly(int(val))
        if kind == "NAME":
            if val == "q":
                return Q
            if val == "v":
                return _V
            if val == "xi":
                return XI
            raise ParseError(f"unknown scalar name {val!r}", pos)
        if kind == "(":
            inner = self.scalar_sum()
            self.expect(")")
            return inner
        raise ParseError(f"expected a scalar, found {val or 'end of input'!r}", pos)

    # -- elements ------------------------------------------------------------

    def element(self) -> HeckeElement:
        negate = self.peek()[0] == "-"
        if negate:
            self.next()
        out = self.term()
        if negate:
            out = -out
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> HeckeElement:
        if self._starts_part():
            return self.part()
        scalar = self.scalar_product(stop_at_part=True)
        if self.peek()[0] == "*":
            self.next()
        if not self._starts_part():
            tok = self.peek()
            raise ParseError("expected T[...] or an @reference after the scalar",
                             tok[2])
        return self.part().scale(scalar)

    def part(self) -> HeckeElement:
        kind, val, pos = self.next()
        if kind == "NAME" and val == "T":
            self.expect("[")
            word = []
            if self.peek()[0] != "]":
                while True:
                    tok = self.expect("INT")
                    i = int(tok[1])
                    if not 1 <= i <= self.n - 1:
                        raise ParseError(
                            f"generator index {i} out of range for degree {self.n}",
                            tok[2])
                    word.append(i)
                    if self.peek()[0] != ",":
                        break
                    self.next()
            self.expect("]")
            return HeckeElement.from_word(self.n, word)
        if kind == "@":
            return self.reference()
        raise ParseError(f"expected T[...] or an @reference, found "
                         f"{val or 'end of input'!r}", pos)

    def reference(self) -> HeckeElement:
        name_tok = self.expect("NAME")
        ref, pos = name_tok[1], name_tok[2]
        args: list[str] = []
        if self.peek()[0] == ":":
            self.next()
            while True:
                tok = self.next()
                if tok[0] not in ("INT", "NAME"):
                    raise ParseError("expected a reference argument", tok[2])
                args.append(tok[1])
                if self.peek()[0] != ",":
                    break
                self.next()
        try:
            return _resolve_reference(ref, args, self.n, self.caps)
        except (ValueError, KeyError, IndexError) as exc:
            raise ParseError(str(exc), pos) from exc


def _resolve_reference(ref: str, args: list[str], n: int,
                       caps: Caps) -> HeckeElement:
    ctx = AlgebraContext(n, caps)
    if ref == "catalog":
        if len(args) != 1:
            raise ValueError("@catalog takes one name, e.g. @catalog:R4")
        from .sqrtcenter import catalog
        table = catalog(n)
        if args[0] not in table:
            raise ValueError(f"unknown catalog element {args[0]!r} at degree {n}; "
                             f"names: {', '.join(sorted(table))}")
        return table[args[0]]
    if ref == "gamma":
        from .center import gamma_basis
        parts = tuple(int(a) for a in args)
        if sum(parts) != n:
            raise ValueError(f"{parts} is not a partition of {n}")
        return gamma_basis(ctx)[parts]
    if ref in INDEXED_KINDS:
        if len(args) != 1:
            raise ValueError(f"@{ref} takes one index, e.g. @{ref}:2")
        return named_element(ref, ctx, int(args[0]))
    if ref in PLAIN_KINDS:
        if args:
            raise ValueError(f"@{ref} takes no arguments")
        return named_element(ref, ctx)
    raise ValueError(f"unknown element reference @{ref}")


def parse_scalar(text: str) -> LaurentPoly:
    """Parse a scalar expression over Z[v, v^-1]."""
    p = _Parser(text)
    out = p.scalar_sum()
    if not p.at_end():
        tok = p.peek()
        raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
    return out


def parse_element(text: str, n: int, caps: Caps = DEFAULT_CAPS) -> HeckeElement:
    """Parse an element expression at the given degree."""
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    p = _Parser(text, n, caps)
    out = p.element()
    if not p.at_end():
        tok = p.peek()
        raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
    return out


def format_scalar(p: LaurentPoly) -> str:
    """Canonical text for a scalar; parse_scalar round-trips it."""
    return str(p)


def format_element(el: HeckeElement) -> str:
    """Canonical text for an element; parse_element round-trips it.

    Terms are ordered by (length, one-line notation) of the basis
    permutation; coefficients print bare when they are single terms and
    parenthesized otherwise.
    """
    if el.is_zero():
        return "0*T[]"
    pieces = []
    for w, c in el.items():
        t_part = "T[" + ",".join(str(i) for i in w.reduced_word()) + "]"
        if c.is_one():
            pieces.append((False, t_part))
            continue
        if c == -ONE:
            pieces.append((True, t_part))
            continue
        if c.num_terms() == 1:
            body = str(c)
            neg = body.startswith("-")
            pieces.append((neg, f"{body.lstrip('-')}*{t_part}"))
        elif c.leading_coeff() < 0:
            pieces.append((True, f"({-c})*{t_part}"))
        else:
            pieces.append((False, f"({c})*{t_part}"))
    neg0, body0 = pieces[0]
    out = ("-" if neg0 else "") + body0
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- JSON --------------------------------------------------------------------

def element_to_json(el: HeckeElement, basis: str = "T") -> dict:
    """JSON document for an element, in T or normalized-T coordinates."""
    if basis not in ("T", "Ttilde"):
        raise ValueError(f"basis must be 'T' or 'Ttilde', got {basis!r}")
    terms = []
    for w, c in el.items():
        if basis == "Ttilde":
            c = c * v_power(w.length())
        terms.append({"perm": list(w), "coeff": c.to_pairs()})
    return {"n": el.n, "basis": basis, "terms": terms}


def element_from_json(doc) -> HeckeElement:
    """Rebuild an element from its JSON document, validating as it goes."""
    if not isinstance(doc, dict):
        raise FormatError("element document must be an object")
    missing = {"n", "basis", "terms"} - set(doc)
    if missing:
        raise FormatError(f"element document missing keys {sorted(missing)}")
    try:
        n = int(doc["n"])
    except (TypeError, ValueError):
        raise FormatError(f"bad degree {doc['n']!r}")
    if n < 1:
        raise FormatError(f"bad degree {n}")
    basis = doc["basis"]
    if basis not in ("T", "Ttilde"):
        raise FormatError(f"unknown basis {basis!r}")
    if not isinstance(doc["terms"], list):
        raise FormatError("terms must be a list")
    terms: dict[Permutation, LaurentPoly] = {}
    for entry in doc["terms"]:
        if not isinstance(entry, dict) or set(entry) != {"perm", "coeff"}:
            raise FormatError(f"malformed term entry {entry!r}")
        if not isinstance(entry["perm"], (list, tuple)):
            raise FormatError(f"permutation must be a list, got {entry['perm']!r}")
        try:
            w = Permutation(tuple(int(x) for x in entry["perm"]))
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad permutation {entry['perm']!r}: {exc}")
        if w.n != n:
            raise FormatError(f"permutation {entry['perm']!r} has wrong degree")
        if w in terms:
            raise FormatError(f"duplicate permutation {entry['perm']!r}")
        try:
            c = LaurentPoly.from_pairs(entry["coeff"])
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad coefficient for {entry['perm']!r}: {exc}")
        if basis == "Ttilde":
            c = c * v_power(-w.length())
        if c:
            terms[w] = c
    return HeckeElement._raw(n, terms)
