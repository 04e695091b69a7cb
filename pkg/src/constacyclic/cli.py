"""Command-line front end.

    constacyclic distance --p 3 --s 2 --i 4
    constacyclic table --p 3 --s 1 --family two
    constacyclic verify --p 7 --negacyclic --s 1 --max-dim 6

JSON is the default output; ``--output text`` prints a readable rendering of
the same data.  Exit status: 0 success, 1 a verification disagreed, 2 bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional

from .codes import build_negacyclic, build_single, build_two_factor, x2_plus_1_irreducible
from .distance import (
    certificate_for,
    distance_single,
    distance_two_factor,
    negacyclic_distance,
)
from .errors import CodingError, OutOfRange
from .finite_field import ff_construct
from .oracle import (
    DEFAULT_ORACLE_CAP,
    DEFAULT_SEARCH_BUDGET,
    sweep_lemma_bound,
    sweep_product_weight,
    sweep_weight_retaining,
    verify_code,
)
from .padic import Beta, TauK, class_range, classify_exponent, padic_expansion, weight_of_power
from .polynomial import Polynomial

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


def _emit(obj, args, text: Optional[str] = None) -> None:
    if args.output == "json":
        print(json.dumps(obj))
    else:
        print(text if text is not None else _as_text(obj))


def _as_text(obj) -> str:
    if isinstance(obj, dict):
        return "  ".join(f"{k}={_as_text(v)}" for k, v in obj.items())
    if isinstance(obj, list):
        return "[" + " ".join(_as_text(v) for v in obj) + "]"
    return "-" if obj is None else str(obj)


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _natural(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def _cap(value: str) -> Optional[int]:
    return None if value.lower() == "none" else _positive(value)


# -- code construction from flags --------------------------------------------


def _family(args) -> str:
    if getattr(args, "negacyclic", False):
        return "negacyclic"
    fam = getattr(args, "family", None)
    if fam:
        return fam
    return "two" if getattr(args, "j", None) is not None else "single"


def _build(args, family: str, i: int, j: Optional[int]):
    if family == "negacyclic":
        return build_negacyclic(args.p, args.a, args.s, i, j)
    ctx = ff_construct(args.p, args.a)
    if family == "single":
        gamma = ctx.parse(args.gamma) if args.gamma is not None else -ctx.one
        return build_single(args.p, args.a, args.n, args.s, gamma, i)
    xi = ctx.parse(args.xi) if args.xi is not None else ctx.one
    return build_two_factor(args.p, args.a, args.n, args.s, xi, i, j)


# -- subcommands -------------------------------------------------------------


def cmd_distance(args) -> int:
    family = _family(args)
    if family == "negacyclic":
        result = negacyclic_distance(args.p, args.a, args.s, args.i, args.j)
    elif family == "two":
        if args.j is None:
            raise OutOfRange("the two-factor family needs --j")
        result = distance_two_factor(args.p, args.s, args.i, args.j)
    else:
        if args.j is not None:
            raise OutOfRange("--j is only meaningful for the two-factor family")
        result = distance_single(args.p, args.s, args.i)
    out = result.to_dict()
    if family == "negacyclic":
        out["negacyclic"] = True
    if args.certificate and result.value is not None:
        code = _build(args, family, args.i, args.j)
        out["certificate"] = [code.ctx.format(v) for v in certificate_for(code, result).coeffs]
    text = f"d = {_as_text(result.value)}  case {result.case}" + ("  (swapped)" if result.swapped else "")
    _emit(out, args, text)
    return EXIT_OK


def table_data(p: int, s: int, family: str) -> list:
    ps = p**s
    if family == "single":
        return [distance_single(p, s, i).value for i in range(ps + 1)]
    return [[distance_two_factor(p, s, i, j).value for j in range(ps + 1)] for i in range(ps + 1)]


def cmd_table(args) -> int:
    data = table_data(args.p, args.s, args.family)
    if args.family == "single":
        text = " ".join(_as_text(v) for v in data)
    else:
        width = max(len(_as_text(v)) for row in data for v in row)
        text = "\n".join(" ".join(_as_text(v).rjust(width) for v in row) for row in data)
    _emit({"family": args.family, "p": args.p, "s": args.s, "distances": data}, args, text)
    return EXIT_OK


def _grid(args, family: str) -> Iterable[tuple[int, Optional[int]]]:
    ps = args.p**args.s
    i_values = [args.i] if args.i is not None else range(ps + 1)
    two = family == "two" or (family == "negacyclic" and not x2_plus_1_irreducible(args.p, args.a))
    for i in i_values:
        if not two:
            yield i, None
        else:
            for j in [args.j] if args.j is not None else range(ps + 1):
                yield i, j


def cmd_verify(args) -> int:
    family = _family(args)
    status = EXIT_OK
    for i, j in _grid(args, family):
        code = _build(args, family, i, j)
        report = verify_code(code, cap=args.cap, max_dim=args.max_dim, budget=args.budget)
        row = report.to_dict(timing=args.timing)
        if args.output == "json":
            print(json.dumps(row))
        else:
            print(
                f"i={i} j={_as_text(j)} dim={code.dimension} formula={_as_text(report.formula_distance)} "
                f"oracle={_as_text(report.oracle_distance)} {report.method} agree={report.agree}"
            )
        if not report.agree:
            status = EXIT_DISAGREE
    if args.properties:
        sweeps = [
            ("weight_retaining", sweep_weight_retaining, 500),
            ("product_weight", sweep_product_weight, 200),
            ("lemma_bound_two_factor", sweep_lemma_bound, 200),
        ]
        for name, fn, samples in sweeps:
            bad = fn(args.seed, samples)
            _emit({"property": name, "seed": args.seed, "samples": samples, "violations": len(bad)}, args)
            if bad:
                status = EXIT_DISAGREE
    return status


def cmd_classify(args) -> int:
    cls = classify_exponent(args.i, args.p, args.s)
    lo, hi = class_range(cls, args.p, args.s)
    out = {"p": args.p, "s": args.s, "i": args.i, "class": cls.name}
    if isinstance(cls, Beta):
        out["beta"] = cls.beta
    elif isinstance(cls, TauK):
        out["k"], out["tau"] = cls.k, cls.tau
    out["range"] = [lo, hi]
    _emit(out, args)
    return EXIT_OK


def cmd_weight(args) -> int:
    if args.N < 0:
        raise OutOfRange("N must be non-negative")
    ff_construct(args.p)  # validates p
    digits = list(padic_expansion(args.N, args.p).digits)
    _emit({"p": args.p, "N": args.N, "digits": digits, "weight": weight_of_power(args.N, args.p)}, args)
    return EXIT_OK


def cmd_factor(args) -> int:
    ctx = ff_construct(args.p, args.a)
    if args.negacyclic:
        n, xi = 1, ctx.sqrt(-ctx.one)
        out = {"p": args.p, "a": args.a, "polynomial": "x^2 + 1", "irreducible": x2_plus_1_irreducible(args.p, args.a)}
        if xi is None:
            _emit(out, args)
            return EXIT_OK
    else:
        n, xi = args.n, ctx.parse(args.xi) if args.xi is not None else ctx.one
        out = {"p": args.p, "a": args.a, "n": n, "psi": str(xi * xi)}
    u, v = Polynomial.binomial(ctx, n, -xi), Polynomial.binomial(ctx, n, xi)
    out["xi"] = str(xi)
    out["factors"] = [str(u), str(v)]
    out["factors_irreducible"] = [u.is_irreducible(), v.is_irreducible()]
    _emit(out, args)
    return EXIT_OK


def cmd_build(args) -> int:
    family = _family(args)
    code = _build(args, family, args.i, args.j)
    _emit(code.descriptor(), args)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_code_flags(sp, need_i: bool = True) -> None:
    sp.add_argument("--p", type=_positive, required=True, help="field characteristic")
    sp.add_argument("--a", type=_positive, default=1, help="extension degree, q = p^a")
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--s", type=_positive, required=True)
    sp.add_argument("--i", type=_natural, required=need_i)
    sp.add_argument("--j", type=_natural)
    sp.add_argument("--gamma", help="single-factor constant, element text (default -1)")
    sp.add_argument("--xi", help="two-factor constant, element text (default 1)")
    sp.add_argument("--negacyclic", action="store_true", help="route through the negacyclic family")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    parser = argparse.ArgumentParser(prog="constacyclic", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("distance", parents=[common], help="closed-form minimum distance")
    _add_code_flags(sp)
    sp.add_argument("--family", choices=("single", "two"))
    sp.add_argument("--certificate", action="store_true", help="also print a minimum-weight codeword")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("table", parents=[common], help="distance for every exponent")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--s", type=_positive, required=True)
    sp.add_argument("--family", choices=("single", "two"), default="single")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", parents=[common], help="formula against exhaustive search, one JSON line per code")
    _add_code_flags(sp, need_i=False)
    sp.add_argument("--family", choices=("single", "two"))
    sp.add_argument("--cap", type=_cap, default=DEFAULT_ORACLE_CAP, help="max codewords to enumerate ('none' for no cap)")
    sp.add_argument("--max-dim", type=_natural, help="fall back to bounds above this dimension")
    sp.add_argument("--budget", type=_cap, default=DEFAULT_SEARCH_BUDGET, help="support-search candidate budget")
    sp.add_argument("--properties", action="store_true", help="also run the seeded inequality sweeps")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds (breaks byte-stable output)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", parents=[common], help="partition class of an exponent")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--s", type=_positive, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("weight", parents=[common], help="weight of (x^n + c)^N from the digits of N")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=cmd_weight)

    sp = sub.add_parser("factor", parents=[common], help="x^(2n) - xi^2 = (x^n - xi)(x^n + xi)")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--a", type=_positive, default=1)
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--xi")
    sp.add_argument("--negacyclic", action="store_true", help="factor x^2 + 1 instead")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("build", parents=[common], help="print a code descriptor")
    _add_code_flags(sp)
    sp.add_argument("--family", choices=("single", "two"))
    sp.set_defaults(func=cmd_build)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodingError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
