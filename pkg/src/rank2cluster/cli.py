"""Command-line interface: ``rank2cluster <subcommand> ...``.

Exit status is 0 on success or PASS, 1 on NOT_POSITIVE or FAIL, and 2 on a
usage or input error.  Numbers in JSON output are decimal strings, except
exponents, indices and lattice coordinates.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canonical, deform, verify
from .cluster import ClusterChart, expand
from .errors import ClusterError
from .expr import parse
from .ring import newton_polygon
from .roots import CartanParams, coxeter_number, delta, denominator_vector, positive_real_roots

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _params(args) -> CartanParams:
    return CartanParams(args.b, args.c)


def _chart(args) -> ClusterChart:
    return ClusterChart(_params(args), args.base)


def _laurent_out(args, a, chart) -> int:
    _emit(args, a.to_json(), a.to_text(chart.variable_names))
    return EXIT_OK


# -- handlers ----------------------------------------------------------------

def cmd_gen(args):
    ch = _chart(args)
    return _laurent_out(args, ch.variable(args.m), ch)


def cmd_expr_expand(args):
    ch = _chart(args)
    return _laurent_out(args, expand(ch, parse(args.expr)), ch)


def cmd_z(args):
    ch = _chart(args)
    return _laurent_out(args, ch.z_n(args.n), ch)


def cmd_roots(args):
    P = _params(args)
    h = coxeter_number(P)
    roots = positive_real_roots(P, args.height)
    payload = {
        "params": [P.b, P.c],
        "kind": P.kind.value,
        "coxeter_number": str(h),
        "real_roots": [list(r) for r in roots],
    }
    lines = [f"type {P} ({P.kind.value}), Coxeter number {h}",
             "positive real roots: " + " ".join(f"({a},{b})" for a, b in roots)]
    if P.is_affine:
        payload["delta"] = list(delta(P))
        lines.append(f"delta = {delta(P)}")
    if args.m is not None:
        lo, hi = args.m
        alphas = {m: denominator_vector(m, P) for m in range(lo, hi + 1)}
        payload["denominators"] = [{"m": m, "alpha": list(a)} for m, a in alphas.items()]
        lines += [f"alpha({m}) = {a}" for m, a in alphas.items()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_newton(args):
    ch = _chart(args)
    P = ch.params
    if args.expr is not None:
        a = expand(ch, parse(args.expr))
    elif args.real is not None:
        a = canonical.basis_element(ch, canonical.Real(tuple(args.real)))
    elif args.imaginary is not None:
        a = canonical.basis_element(ch, canonical.Imaginary(args.imaginary))
    else:
        raise _UsageError("newton needs one of --expr, --real, --imaginary")
    poly = newton_polygon(a)
    if args.format == "svg":
        sys.stdout.write(poly.to_svg())
    else:
        text = " ".join(f"({x},{y})" for x, y in poly.vertices)
        _emit(args, poly.to_json(), f"Newton polygon in chart ({', '.join(ch.variable_names)}) of {P}: {text}")
    return EXIT_OK


def _decomposition_text(d) -> str:
    if not d:
        return "0"
    return "\n".join(f"{lab}: {d[lab]}" for lab in d.labels())


def cmd_decompose(args):
    ch = _chart(args)
    d = canonical.decompose(ch, expand(ch, parse(args.expr)))
    _emit(args, d.to_json(), _decomposition_text(d))
    return EXIT_OK


def cmd_positivity(args):
    ch = _chart(args)
    a = expand(ch, parse(args.expr))
    r = canonical.is_positive(ch, a, tuple(args.window))
    lines = [r.verdict, "certificate:", _decomposition_text(r.certificate)]
    if not r.positive:
        if r.negative_label is not None:
            lines.append(f"witness {r.negative_label}: {r.negative_coeff}")
        if r.witness_chart is not None:
            lines.append(f"chart base {r.witness_chart}: coefficient {r.witness_coeff} "
                         f"at exponent {list(r.witness_exponent)}")
    _emit(args, r.to_json(), "\n".join(lines))
    return EXIT_OK if r.positive else EXIT_FAIL


def _report_out(args, report) -> int:
    _emit(args, report.to_json(), report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args):
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; choose from all, " + ", ".join(verify.SUITES))
    params = None
    if args.b is not None or args.c is not None:
        if args.b is None or args.c is None:
            raise _UsageError("give both --b and --c to filter by type")
        params = (args.b, args.c)
    return _report_out(args, verify.run_suite(args.suite, params))


def cmd_deform_gen(args):
    ch = deform.DeformedChart(args.base)
    a = ch.Z_n(args.z) if args.z is not None else ch.variable(args.m)
    names = tuple(f"Y{k}" if k >= 0 else f"Y[{k}]" for k in (args.base, args.base + 1))
    _emit(args, a.to_json(), a.to_text(names))
    return EXIT_OK


def cmd_deform_verify(args):
    if args.suite == "lemma":
        report = verify.run_suite("lemma", nmax=args.nmax, mmax=args.mmax)
    else:
        report = verify.run_suite("specialization")
    return _report_out(args, report)


# -- parser ------------------------------------------------------------------

def _add_type(p, required=True):
    p.add_argument("--b", type=int, required=required)
    p.add_argument("--c", type=int, required=required)


def _add_common(p, formats=("text", "json")):
    p.add_argument("--format", choices=formats, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rank2cluster", description="Exact computations in rank-2 cluster algebras A(b, c).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("gen", help="expand the cluster variable y_m")
    _add_type(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--base", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("expr-expand", help="expand a generator expression")
    _add_type(p)
    p.add_argument("--base", type=int, default=1)
    p.add_argument("--expr", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_expr_expand)

    p = sub.add_parser("z", help="expand z_n (affine types)")
    _add_type(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--base", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_z)

    p = sub.add_parser("roots", help="root system data")
    _add_type(p)
    p.add_argument("--height", type=int, default=10)
    p.add_argument("--m", type=int, nargs=2, metavar=("LO", "HI"), help="also list alpha(m) for LO <= m <= HI")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("newton", help="Newton polygon of an expression or basis element")
    _add_type(p)
    p.add_argument("--base", type=int, default=1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--expr")
    g.add_argument("--real", type=int, nargs=2, metavar=("A1", "A2"))
    g.add_argument("--imaginary", type=int, metavar="N")
    _add_common(p, ("text", "json", "svg"))
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("decompose", help="canonical-basis decomposition")
    _add_type(p)
    p.add_argument("--base", type=int, default=1)
    p.add_argument("--expr", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("positivity", help="positivity verdict with certificate")
    _add_type(p)
    p.add_argument("--base", type=int, default=1)
    p.add_argument("--expr", required=True)
    p.add_argument("--window", type=int, nargs=2, default=[-8, 8], metavar=("LO", "HI"),
                   help="chart bases searched for a negative coefficient")
    _add_common(p)
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", required=True)
    _add_type(p, required=False)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("deform-gen", help="expand Y_m (or Z_n) of the deformed algebra")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--z", type=int, metavar="N")
    p.add_argument("--base", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_deform_gen)

    p = sub.add_parser("deform-verify", help="check the deformed relations")
    p.add_argument("--suite", choices=("lemma", "specialization"), default="lemma")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--mmax", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=cmd_deform_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise _UsageError("missing subcommand")
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (ClusterError, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
