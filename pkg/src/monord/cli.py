"""Command-line interface.

Exit codes: 0 success, 64 usage error, 65 data error, 69 resource/budget
error.  ``compare`` exits 10/11/12 for less/equal/greater so shell
pipelines can branch without parsing output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chains, hilbert, orderings
from .errors import (BudgetExceeded, DataError, MonordError, ParseError,
                     WindowExhausted)
from .ideal import (MonomialIdeal, cone, direct_sum, generator_word,
                    irreducible_decomposition, components_by_support,
                    normalize, zero_ideal, unit_ideal)
from .monom import DEGLEX, LEX, TermOrder
from .ordinal import format_ordinal, nat_prod, nat_sum, parse_ordinal

EX_OK = 0
EX_USAGE = 64
EX_DATA = 65
EX_RESOURCE = 69


def parse_point(text, dim, line=None):
    """A generator spec: either `2 0 1` or `x1^2*x3`."""
    text = text.strip()
    if not text:
        raise ParseError("empty generator", line=line)
    if text[0] == "x":
        v = [0] * dim
        for col, factor in enumerate(text.split("*")):
            factor = factor.strip()
            base, _, exp = factor.partition("^")
            if not base.startswith("x") or not base[1:].isdigit():
                raise ParseError(f"bad factor {factor!r}", line=line)
            i = int(base[1:])
            if not 1 <= i <= dim:
                raise ParseError(f"variable x{i} outside dim {dim}",
                                 line=line)
            e = 1
            if _:
                if not exp.isdigit():
                    raise ParseError(f"bad exponent in {factor!r}", line=line)
                e = int(exp)
            v[i - 1] += e
        return tuple(v)
    parts = text.split()
    try:
        v = tuple(int(x) for x in parts)
    except ValueError:
        raise ParseError(f"bad tuple {text!r}", line=line)
    if len(v) != dim or any(x < 0 for x in v):
        raise ParseError(f"expected {dim} naturals, got {text!r}", line=line)
    return v


def parse_ideal_text(text):
    """Parse the ideal file format (or its JSON mirror)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            dim = data["dim"]
            gens = [tuple(g) for g in data["gens"]]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON ideal: {exc}")
        return normalize(dim, gens)
    dim = None
    gens = []
    special = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
                raise ParseError("expected 'dim m' header", line=lineno)
            dim = int(parts[1])
            if dim < 1:
                raise ParseError("dimension must be >= 1", line=lineno)
            continue
        if line in ("zero", "unit"):
            special = line
            continue
        gens.append(parse_point(line, dim, line=lineno))
    if dim is None:
        raise ParseError("missing 'dim m' header", line=1)
    if special == "zero":
        if gens:
            raise ParseError("'zero' cannot be mixed with generators")
        return zero_ideal(dim)
    if special == "unit":
        return unit_ideal(dim)
    return normalize(dim, gens)


def load_ideal(path):
    try:
        with open(path) as fh:
            return parse_ideal_text(fh.read())
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}")


def format_ideal(e):
    lines = [f"dim {e.dim}"]
    if e.is_zero():
        lines.append("zero")
    elif e.is_unit():
        lines.append("unit")
    else:
        lines.extend(" ".join(str(x) for x in g) for g in e.gens)
    return "\n".join(lines) + "\n"


def ideal_json(e):
    return {"dim": e.dim, "gens": [list(g) for g in e.gens]}


def parse_term_order(spec):
    if spec == "deglex":
        return DEGLEX
    if spec == "lex":
        return LEX
    if spec.startswith("matrix:"):
        path = spec[len("matrix:"):]
        try:
            with open(path) as fh:
                rows = [tuple(int(x) for x in line.split())
                        for line in fh if line.strip()]
        except OSError as exc:
            raise DataError(f"cannot read {path}: {exc}")
        except ValueError:
            raise DataError(f"non-integer entry in matrix file {path}")
        return TermOrder("matrix", tuple(rows))
    raise DataError(f"unknown term order {spec!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monord",
        description="Exact invariants and well-orderings of monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        return p

    p = add("normalize", "canonicalize an ideal file")
    p.add_argument("file")

    p = add("contains", "membership test for one monomial")
    p.add_argument("file")
    p.add_argument("point", help="tuple '2 0 1' or monomial 'x1^2*x3'")

    p = add("compare", "compare two ideals under a well-ordering")
    p.add_argument("--order", choices=("kb", "triangle", "mintype"),
                   required=True)
    p.add_argument("--term-order", default="deglex",
                   help="deglex | lex | matrix:FILE (kb only)")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = add("hilbert", "Hilbert data, psi, height, n0")
    p.add_argument("file")

    p = add("decompose", "irreducible decomposition")
    p.add_argument("file")

    p = add("lexify", "lex segment with the same Hilbert function")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)

    p = add("cone", "extend by one variable")
    p.add_argument("file")

    p = add("directsum", "direct sum of two ideals")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = add("chainbound", "chain length bound ell / t_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--affine", required=True, metavar="p,q",
                   help="bound f(i) = p + i*q")
    p.add_argument("--tm", action="store_true",
                   help="compute t_m(f) instead of ell(m, f)")
    p.add_argument("--budget", type=int, default=None)

    p = add("bounds", "ordinal bound constants for dimension m")
    p.add_argument("m", type=int)

    p = add("ordinal-eval", "parse, combine and reprint ordinals")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--op", choices=("sum", "prod"), default=None)

    return parser


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_normalize(args):
    e = load_ideal(args.file)
    _emit(args, ideal_json(e), format_ideal(e))
    return EX_OK


def cmd_contains(args):
    e = load_ideal(args.file)
    v = parse_point(args.point, e.dim)
    ans = e.contains(v)
    _emit(args, {"contains": ans}, "true" if ans else "false")
    return EX_OK


def cmd_compare(args):
    a = load_ideal(args.file_a)
    b = load_ideal(args.file_b)
    trace = {"order": args.order}
    if args.order == "kb":
        order = parse_term_order(args.term_order)
        c = orderings.kb_cmp(a, b, order)
        u, v = generator_word(a, order), generator_word(b, order)
        idx = next((i for i, (x, y) in enumerate(zip(u, v)) if x != y), None)
        trace["deciding_generator"] = idx
    elif args.order == "triangle":
        c = orderings.triangle_cmp(a, b)
        idx = None
        if a.dim >= 2 and c != 0:
            from .ideal import slice_last
            bound = max((g[-1] for g in a.gens + b.gens), default=0)
            idx = next(j for j in range(bound + 1)
                       if orderings.triangle_cmp(slice_last(a, j),
                                                 slice_last(b, j)) != 0)
        trace["deciding_slice"] = idx
    else:
        c = orderings.min_type_cmp(a, b)
        pa, _ = hilbert.hilbert_samuel_poly(a)
        pb, _ = hilbert.hilbert_samuel_poly(b)
        trace["deciding_key"] = "polynomial" if pa != pb else "triangle"
    word = {-1: "less", 0: "equal", 1: "greater"}[c]
    trace["result"] = word
    print(json.dumps(trace, sort_keys=True))
    return {-1: 10, 0: 11, 1: 12}[c]


def cmd_hilbert(args):
    e = load_ideal(args.file)
    p, t = hilbert.hilbert_samuel_poly(e)
    window = t + 2 * e.dim
    hs = [hilbert.hilbert_fn(e, n) for n in range(window + 1)]
    cum = [hilbert.hilbert_samuel_fn(e, s) for s in range(window + 1)]
    prof = hilbert.hilbert_profile(e)
    payload = {
        "H": hs,
        "h": cum,
        "p": list(p.coeffs),
        "threshold": t,
        "c": list(prof.c) if prof.c is not None else None,
        "psi": format_ordinal(prof.psi),
        "phi": prof.phi,
        "n0": prof.n0,
        "height": format_ordinal(hilbert.height(e)),
    }
    text = (f"p = {p}\nthreshold = {t}\nH = {hs}\nh = {cum}\n"
            f"c = {payload['c']}\npsi = {payload['psi']}\n"
            f"phi = {payload['phi']}\nn0 = {payload['n0']}\n"
            f"height = {payload['height']}\n")
    _emit(args, payload, text)
    return EX_OK


def cmd_decompose(args):
    e = load_ideal(args.file)
    comps = irreducible_decomposition(e)
    by_support = components_by_support(e)
    payload = {
        "components": [list(nu) for nu in comps],
        "by_support": {
            ",".join(str(i + 1) for i in s): [list(v) for v in vs]
            for s, vs in by_support.items()},
    }
    text = "\n".join(" ".join(str(x) for x in nu) for nu in comps) + "\n"
    _emit(args, payload, text)
    return EX_OK


def cmd_lexify(args):
    e = load_ideal(args.file)
    out = hilbert.lex_segment_ideal(e, args.degree)
    _emit(args, ideal_json(out), format_ideal(out))
    return EX_OK


def cmd_cone(args):
    out = cone(load_ideal(args.file))
    _emit(args, ideal_json(out), format_ideal(out))
    return EX_OK


def cmd_directsum(args):
    out = direct_sum(load_ideal(args.file_a), load_ideal(args.file_b))
    _emit(args, ideal_json(out), format_ideal(out))
    return EX_OK


def cmd_chainbound(args):
    try:
        p, q = (int(x) for x in args.affine.split(","))
    except ValueError:
        raise DataError(f"--affine expects 'p,q', got {args.affine!r}")
    f = chains.BoundFn.affine(p, q)
    try:
        if args.tm:
            value = chains.t_bound(args.m, f, budget=args.budget)
        else:
            value = chains.ell(args.m, f, budget=args.budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded at depth {exc.spent}")
        return EX_RESOURCE
    _emit(args, {"value": str(value)}, str(value))
    return EX_OK


def cmd_bounds(args):
    report = orderings.bounds_report(args.m)
    payload = {k: format_ordinal(v) for k, v in report.items()}
    text = "".join(f"{k} = {v}\n" for k, v in payload.items())
    _emit(args, payload, text)
    return EX_OK


def cmd_ordinal_eval(args):
    vals = [parse_ordinal(x) for x in args.exprs]
    if args.op is None:
        out = [format_ordinal(v) for v in vals]
        _emit(args, {"ordinals": out}, "\n".join(out) + "\n")
        return EX_OK
    acc = vals[0]
    for v in vals[1:]:
        acc = nat_sum(acc, v) if args.op == "sum" else nat_prod(acc, v)
    _emit(args, {"ordinal": format_ordinal(acc)}, format_ordinal(acc))
    return EX_OK


COMMANDS = {
    "normalize": cmd_normalize,
    "contains": cmd_contains,
    "compare": cmd_compare,
    "hilbert": cmd_hilbert,
    "decompose": cmd_decompose,
    "lexify": cmd_lexify,
    "cone": cmd_cone,
    "directsum": cmd_directsum,
    "chainbound": cmd_chainbound,
    "bounds": cmd_bounds,
    "ordinal-eval": cmd_ordinal_eval,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else EX_OK
    try:
        return COMMANDS[args.command](args)
    except (BudgetExceeded, WindowExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_RESOURCE
    except MonordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
