"""The centre of the Hecke algebra and its minimal basis.

Two views of the centre are computed, both by exact linear algebra over the
Laurent ring:

* ``centre_basis``: a spanning set over the rational-function field, read off
  the nullspace of the stacked commutators-with-generators system.
* ``gamma_basis``: the distinguished basis indexed by partitions.  The basis
  element for a partition is the unique central element whose coefficient is
  1 on every minimal-length permutation of that cycle type and 0 on the
  minimal-length permutations of every other cycle type.  Those constraints
  are fed to the solver together with the centrality equations, so
  correctness is by construction; four independent invariants are still
  checked on every result (and on every cache hit).

A gamma basis is expensive enough at degree 5 to be worth caching, so
``gamma_basis`` accepts an optional directory and stores one JSON file per
degree there (plus an in-process memo either way).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .algebra import (HeckeElement, as_context, is_central,
                      _lmul_gen, _rmul_gen)
from .errors import (DegreeMismatchError, FormatError, MismatchError,
                     NotCentralError)
from .laurent import LaurentPoly, ZERO, ONE
from .linalg import SparseSystem, sparse_rank
from .permutations import (Partition, Permutation, all_permutations,
                           conjugacy_class, minimal_class_elements,
                           partitions_of)

CACHE_FORMAT = 1


def _commutator_rows(n: int):
    """Rows of the system 'commutes with every generator'.

    Columns are indexed by S_n in lexicographic order; one row per
    (generator, basis permutation) pair that actually occurs.
    """
    perms = all_permutations(n, cap=n)
    rows: dict[tuple[int, Permutation], dict[int, LaurentPoly]] = {}
    for i in range(1, n):
        for j, w in enumerate(perms):
            base = {w: ONE}
            diff = _lmul_gen(base, i)
            for u, c in _rmul_gen(base, i).items():
                cur = diff.get(u, ZERO) - c
                if cur:
                    diff[u] = cur
                else:
                    diff.pop(u, None)
            for u, c in diff.items():
                rows.setdefault((i, u), {})[j] = c
    index = {w: j for j, w in enumerate(perms)}
    ordered = sorted(rows, key=lambda k: (k[0], index[k[1]]))
    return perms, [rows[k] for k in ordered]


@dataclass(frozen=True)
class CentreBasis:
    """A basis of the centre over the rational-function field."""

    n: int
    vectors: tuple[HeckeElement, ...]

    def contains(self, z: HeckeElement) -> bool:
        """Membership in the span, decided by elimination."""
        if z.n != self.n:
            raise DegreeMismatchError(
                f"element of degree {z.n} against a basis for degree {self.n}")
        perms = all_permutations(self.n, cap=self.n)
        index = {w: j for j, w in enumerate(perms)}
        base = [{index[w]: c for w, c in v.items()} for v in self.vectors]
        r0 = sparse_rank(base, len(perms))
        if z.is_zero():
            return True
        row = {index[w]: c for w, c in z.items()}
        return sparse_rank(base + [row], len(perms)) == r0


def centre_basis(ctx) -> CentreBasis:
    """Solve for everything that commutes with all the generators."""
    c = as_context(ctx)
    c.check_linalg()
    perms, rows = _commutator_rows(c.n)
    system = SparseSystem(len(perms), num_rhs=0)
    system.add_rows([(r, []) for r in rows])
    vectors = []
    for vec in system.nullspace():
        terms = {perms[j]: vec[j] for j in range(len(perms)) if vec[j]}
        vectors.append(HeckeElement._raw(c.n, terms))
    return CentreBasis(c.n, tuple(vectors))


@dataclass(frozen=True)
class GammaBasis:
    """The minimal basis of the centre, one element per partition."""

    n: int
    elements: dict[Partition, HeckeElement]

    def __iter__(self):
        return iter(self.elements.items())

    def __getitem__(self, shape) -> HeckeElement:
        return self.elements[Partition(tuple(shape))]


def _solve_gamma(n: int) -> GammaBasis:
    perms, rows = _commutator_rows(n)
    index = {w: j for j, w in enumerate(perms)}
    parts = partitions_of(n)
    k = len(parts)
    sys_rows = [(r, [ZERO] * k) for r in rows]
    for mu in parts:
        rhs = [ONE if lam == mu else ZERO for lam in parts]
        for w in minimal_class_elements(n, mu, cap=n):
            sys_rows.append(({index[w]: ONE}, list(rhs)))
    system = SparseSystem(len(perms), num_rhs=k)
    system.add_rows(sys_rows)
    solutions = system.solve_unique()
    elements = {}
    for a, lam in enumerate(parts):
        vec = solutions[a]
        terms = {}
        for j, w in enumerate(perms):
            if vec[j]:
                terms[w] = vec[j].as_laurent()
        elements[lam] = HeckeElement._raw(n, terms)
    return GammaBasis(n, elements)


def verify_gamma_invariants(gb: GammaBasis) -> None:
    """Check the four defining properties; raise MismatchError on any failure.

    1. every element is central;
    2. at q = 1 each element collapses to the plain conjugacy-class sum;
    3. the minimal-length coefficients are exactly the Kronecker delta;
    4. every coefficient lies in Z[q, q^-1] (no odd powers of v).
    """
    n = gb.n
    parts = partitions_of(n)
    if set(gb.elements) != set(parts):
        raise MismatchError(f"basis for degree {n} has wrong index set")
    minimals = {mu: minimal_class_elements(n, mu, cap=n) for mu in parts}
    for lam, g in gb.elements.items():
        if not is_central(g):
            raise MismatchError(f"basis element for {lam} is not central")
        expected = {w: 1 for w in conjugacy_class(n, lam, cap=n)}
        if g.specialize_group_algebra() != expected:
            raise MismatchError(
                f"basis element for {lam} is not the class sum at q = 1")
        for mu in parts:
            want = ONE if mu == lam else ZERO
            for w in minimals[mu]:
                if g.coeff(w) != want:
                    raise MismatchError(
                        f"basis element for {lam} has coefficient "
                        f"{g.coeff(w)} on a minimal element of {mu}")
        for _, cf in g.items():
            if not cf.has_even_exponents():
                raise MismatchError(
                    f"basis element for {lam} has a coefficient {cf} "
                    f"outside Z[q, q^-1]")


_GAMMA_MEMO: dict[int, GammaBasis] = {}


def _cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"gamma_n{n}.json")


def _gamma_to_json(gb: GammaBasis) -> dict:
    data = []
    for lam, g in gb.elements.items():
        terms = [[list(w), g.coeff(w).to_pairs()] for w in g.support()]
        data.append({"partition": list(lam), "terms": terms})
    return {"format": CACHE_FORMAT, "n": gb.n, "gamma": data}


def _gamma_from_json(obj: dict, n: int) -> GammaBasis:
    if not isinstance(obj, dict) or obj.get("format") != CACHE_FORMAT:
        raise FormatError("unrecognised cache format")
    if obj.get("n") != n:
        raise FormatError(f"cache file is for degree {obj.get('n')}, not {n}")
    elements = {}
    for entry in obj["gamma"]:
        lam = Partition(tuple(int(p) for p in entry["partition"]))
        terms = {}
        for one_line, pairs in entry["terms"]:
            w = Permutation(tuple(int(a) for a in one_line))
            terms[w] = LaurentPoly.from_pairs(pairs)
        elements[lam] = HeckeElement(n, terms)
    return GammaBasis(n, elements)


def gamma_basis(ctx, cache_dir: str | None = None) -> GammaBasis:
    """The minimal basis of the centre, solved from the pinned system.

    With a cache directory, results are stored per degree and re-verified
    against the basis invariants when loaded back, so a stale or tampered
    file is rejected rather than trusted.
    """
    c = as_context(ctx)
    c.check_linalg()
    n = c.n
    if n in _GAMMA_MEMO:
        return _GAMMA_MEMO[n]
    gb = None
    path = None
    if cache_dir is not None:
        path = _cache_path(cache_dir, n)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                gb = _gamma_from_json(json.load(fh), n)
        except FileNotFoundError:
            gb = None
        except (FormatError, ValueError, KeyError, TypeError) as exc:
            raise FormatError(f"bad cache file {path}: {exc}") from exc
    if gb is None:
        gb = _solve_gamma(n)
        verify_gamma_invariants(gb)
        if path is not None:
            os.makedirs(cache_dir, exist_ok=True)
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(_gamma_to_json(gb), fh)
            os.replace(tmp, path)
    else:
        verify_gamma_invariants(gb)
    _GAMMA_MEMO[n] = gb
    return gb


def express_in_gamma(z: HeckeElement,
                     gb: GammaBasis) -> dict[Partition, LaurentPoly]:
    """Coordinates of a central element in the minimal basis.

    Read off the minimal-length coefficients class by class, then confirm
    the expansion reproduces the element exactly.
    """
    if z.n != gb.n:
        raise DegreeMismatchError(
            f"element of degree {z.n} against a basis for degree {gb.n}")
    if not is_central(z):
        raise NotCentralError("element is not central")
    coeffs: dict[Partition, LaurentPoly] = {}
    residual = z
    for lam in partitions_of(gb.n):
        minimals = minimal_class_elements(gb.n, lam, cap=gb.n)
        c0 = z.coeff(minimals[0])
        for w in minimals[1:]:
            if z.coeff(w) != c0:
                raise MismatchError(
                    f"coefficients differ across minimal elements of {lam}: "
                    f"{c0} vs {z.coeff(w)}")
        coeffs[lam] = c0
        if c0:
            residual = residual - gb.elements[lam].scale(c0)
    if not residual.is_zero():
        raise MismatchError(
            "element is central but is not an R-combination of the basis "
            f"(residual has {residual.num_terms()} terms)")
    return coeffs
