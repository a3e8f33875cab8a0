"""Command-line interface.

Exit codes: 0 success (and "true" for the predicate verbs), 1 mathematical
false or a failed verification, 2 usage or input errors, 3 a resource cap.

Element expressions follow the grammar in `parsing`; the degree always
comes from --n.  The cache directory for minimal-basis solves comes from
--cache or the HECKE_CACHE_DIR environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import AlgebraContext, Caps, is_central
from .center import express_in_gamma, gamma_basis
from .errors import (DegreeMismatchError, FormatError, HeckeError,
                     MismatchError, NotCentralError, ParseError,
                     ResourceCapError)
from .parsing import (element_from_json, element_to_json, format_element,
                      format_scalar, parse_element, parse_scalar)
from .permutations import Partition
from .sqrtcenter import (catalog, eigen_search, h3_constraint_check,
                         in_sqrt_centre, sample_sqrt_h3)
from .verify import run_verify, statement_ids


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--enum-max", type=int, default=7,
                   help="cap for operations that walk all of S_n (default 7)")
    p.add_argument("--linalg-max", type=int, default=5,
                   help="cap for n!-sized linear algebra (default 5)")


def _add_cache(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", default=None, metavar="DIR",
                   help="cache directory for minimal-basis solves "
                        "(default: $HECKE_CACHE_DIR)")


def _caps(args) -> Caps:
    return Caps(enum_max=args.enum_max, linalg_max=args.linalg_max)


def _cache_dir(args) -> str | None:
    return args.cache or os.environ.get("HECKE_CACHE_DIR") or None


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ParseError(f"bad partition {text!r}; expected e.g. 2,1,1")


def _shape_key(lam) -> str:
    return ",".join(str(p) for p in lam)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hecke",
        description="Exact computations in the Hecke algebra of the "
                    "symmetric group over Z[v, v^-1] (q = v^2).")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mul", help="multiply two elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("square", help="square an element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("central", help="test centrality (exit 0 iff central)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("sqrt-check",
                       help="test whether the square is central "
                            "(exit 0 iff it is)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("gamma", help="minimal basis of the centre")
    p.add_argument("n", type=int)
    p.add_argument("--lambda", dest="shape", default=None, metavar="PARTS",
                   help="one partition, e.g. 2,1,1; omit for the whole basis")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    _add_cache(p)

    p = sub.add_parser("express",
                       help="coordinates of a central element over the "
                            "minimal basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    _add_cache(p)

    p = sub.add_parser("eigen",
                       help="eigenvectors of multiplication by a "
                            "minimal-basis element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", required=True, metavar="PARTS",
                   help="partition naming the central element, e.g. 2,1")
    p.add_argument("--k", required=True, metavar="SCALAR",
                   help="candidate eigenvalue, e.g. 'q-1' or '-q'")
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    _add_cache(p)

    p = sub.add_parser("catalog", help="known square roots at a degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("sample-h3",
                       help="random degree-3 element whose square is central")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("verify",
                       help="run the statement registry (exit 0 iff no "
                            "failures)")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock times (not byte-deterministic)")
    p.add_argument("--only", default=None, metavar="IDS",
                   help="comma-separated statement ids to run")
    p.add_argument("--list", action="store_true",
                   help="list statement ids without running")
    p.add_argument("--workers", type=int, default=1)
    _add_caps(p)
    _add_cache(p)

    p = sub.add_parser("export", help="write an element as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a")
    p.add_argument("--out", required=True, metavar="FILE",
                   help="output path, or - for stdout")
    p.add_argument("--basis", choices=("T", "Ttilde"), default="T")
    _add_caps(p)

    p = sub.add_parser("import", help="read an element JSON and print it")
    p.add_argument("file", metavar="FILE", help="input path, or - for stdin")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    return ap


def _print_element(el, as_json: bool) -> None:
    if as_json:
        print(json.dumps(element_to_json(el), sort_keys=True))
    else:
        print(format_element(el))


def _cmd_mul(args) -> int:
    caps = _caps(args)
    a = parse_element(args.a, args.n, caps)
    b = parse_element(args.b, args.n, caps)
    _print_element(a * b, args.json)
    return 0


def _cmd_square(args) -> int:
    a = parse_element(args.a, args.n, _caps(args))
    _print_element(a * a, args.json)
    return 0


def _cmd_central(args) -> int:
    a = parse_element(args.a, args.n, _caps(args))
    ok = is_central(a)
    if args.json:
        print(json.dumps({"n": args.n, "central": ok}))
    else:
        print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_sqrt_check(args) -> int:
    a = parse_element(args.a, args.n, _caps(args))
    rep = in_sqrt_centre(a, label=args.a)
    if args.json:
        doc = {"n": args.n, "in_sqrt": rep.in_sqrt, "in_centre": rep.in_centre}
        if rep.square_in_gamma is not None:
            doc["square_in_gamma"] = {
                _shape_key(lam): format_scalar(c)
                for lam, c in rep.square_in_gamma.items()}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"in_sqrt: {'true' if rep.in_sqrt else 'false'}")
        print(f"in_centre: {'true' if rep.in_centre else 'false'}")
        if rep.square_in_gamma is not None:
            for lam, c in rep.square_in_gamma.items():
                print(f"  square[{_shape_key(lam)}] = {format_scalar(c)}")
    return 0 if rep.in_sqrt else 1


def _cmd_gamma(args) -> int:
    ctx = AlgebraContext(args.n, _caps(args))
    gb = gamma_basis(ctx, cache_dir=_cache_dir(args))
    if args.shape is not None:
        lam = Partition(_parse_shape(args.shape))
        if lam.n != args.n:
            raise DegreeMismatchError(
                f"{args.shape} is not a partition of {args.n}")
        _print_element(gb[tuple(lam)], args.json)
        return 0
    if args.json:
        doc = {_shape_key(lam): element_to_json(g) for lam, g in gb}
        print(json.dumps(doc, sort_keys=True))
    else:
        for lam, g in gb:
            print(f"{_shape_key(lam)}: {format_element(g)}")
    return 0


def _cmd_express(args) -> int:
    ctx = AlgebraContext(args.n, _caps(args))
    a = parse_element(args.a, args.n, ctx.caps)
    gb = gamma_basis(ctx, cache_dir=_cache_dir(args))
    coords = express_in_gamma(a, gb)
    if args.json:
        print(json.dumps({_shape_key(lam): format_scalar(c)
                          for lam, c in coords.items()}, sort_keys=True))
    else:
        for lam, c in coords.items():
            print(f"{_shape_key(lam)}: {format_scalar(c)}")
    return 0


def _cmd_eigen(args) -> int:
    ctx = AlgebraContext(args.n, _caps(args))
    lam = Partition(_parse_shape(args.gamma))
    if lam.n != args.n:
        raise DegreeMismatchError(f"{args.gamma} is not a partition of {args.n}")
    gb = gamma_basis(ctx, cache_dir=_cache_dir(args))
    k = parse_scalar(args.k)
    vecs = eigen_search(ctx, gb[tuple(lam)], k)
    if args.json:
        print(json.dumps({"count": len(vecs),
                          "vectors": [element_to_json(v) for v in vecs]},
                         sort_keys=True))
    else:
        print(f"count: {len(vecs)}")
        for v in vecs:
            print(format_element(v))
    return 0


def _cmd_catalog(args) -> int:
    table = catalog(args.n)
    if args.json:
        print(json.dumps({name: element_to_json(el)
                          for name, el in table.items()}, sort_keys=True))
    else:
        for name, el in table.items():
            print(f"{name}: {format_element(el)}")
    return 0


def _cmd_sample_h3(args) -> int:
    h = sample_sqrt_h3(args.seed)
    branch = h3_constraint_check(h)
    if args.json:
        doc = element_to_json(h)
        doc["branch"] = branch
        print(json.dumps(doc, sort_keys=True))
    else:
        print(format_element(h))
        print(f"branch: {branch}")
    return 0


def _cmd_verify(args) -> int:
    caps = _caps(args)
    if args.list:
        for item_id in statement_ids(args.n_max, caps):
            print(item_id)
        return 0
    only = args.only.split(",") if args.only else None
    rep = run_verify(n_max=args.n_max, seed=args.seed, caps=caps,
                     cache_dir=_cache_dir(args), only=only,
                     workers=args.workers)
    if args.json:
        sys.stdout.write(rep.to_json(timings=args.timings))
    else:
        sys.stdout.write(rep.to_text(timings=args.timings))
    return 0 if rep.passed else 1


def _cmd_export(args) -> int:
    a = parse_element(args.a, args.n, _caps(args))
    text = json.dumps(element_to_json(a, basis=args.basis), indent=2,
                      sort_keys=True) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_import(args) -> int:
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}")
    el = element_from_json(doc)
    _print_element(el, args.json)
    return 0


_DISPATCH = {
    "mul": _cmd_mul,
    "square": _cmd_square,
    "central": _cmd_central,
    "sqrt-check": _cmd_sqrt_check,
    "gamma": _cmd_gamma,
    "express": _cmd_express,
    "eigen": _cmd_eigen,
    "catalog": _cmd_catalog,
    "sample-h3": _cmd_sample_h3,
    "verify": _cmd_verify,
    "export": _cmd_export,
    "import": _cmd_import,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotCentralError, MismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, FormatError, DegreeMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HeckeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
