"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a sigma image that is not
Laurent), 2 usage or I/O error, 3 resource limit exceeded.
"""
import argparse
import csv
import io
import json
import sys

from qgreedy.expand import expand_in_greedy
from qgreedy.greedy import classical_greedy, compute
from qgreedy.pointed import VARIANTS, PointedElement, region
from qgreedy.symmetry import NotLaurent, sigma_apply
from qgreedy.torus import (AlgebraParams, Limits, ResourceLimitError, TorusElement,
                           cluster_monomial, cluster_variable)
from qgreedy.verify import SweepConfig, dumps, run, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(args):
    return AlgebraParams(args.b, args.c)


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def load_element(path):
    """A torus element from torus JSON (``coeffs``) or pointed JSON (``grid``)."""
    data = _read_json(path)
    try:
        if "grid" in data:
            return PointedElement.from_json(data).to_torus()
        return TorusElement.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path} is not an element file: {exc}") from None


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc.strerror}") from None


def _render_pointed(P, fmt):
    if fmt == "json":
        return dumps(P.to_json())
    if fmt == "table":
        lines = [f"# b={P.params.b} c={P.params.c} base=({P.base[0]}, {P.base[1]})",
                 "p\tq\te(p,q)"]
        lines += [f"{p}\t{q}\t{poly.to_text()}" for (p, q), poly in P.items()]
        return "\n".join(lines) + "\n"
    terms = []
    for (p, q), poly in P.items():
        e1, e2 = P.phi(p, q)
        terms.append(f"\\left({poly.to_tex()}\\right) X^{{({e1},{e2})}}")
    return f"X[{P.base[0]},{P.base[1]}] = " + " + ".join(terms) + "\n"


def cmd_compute(args):
    P = compute((args.a1, args.a2), _params(args), args.variant)
    _emit(_render_pointed(P, args.format), args.output)
    return EXIT_OK


def cmd_classical(args):
    C = classical_greedy((args.a1, args.a2), _params(args))
    data = {
        "b": args.b, "c": args.c, "a1": args.a1, "a2": args.a2,
        "grid": [{"p": p, "q": q, "coeff": n} for (p, q), n in sorted(C.grid.items())],
    }
    _emit(dumps(data), args.output)
    return EXIT_OK


def cmd_specialize(args):
    params = _params(args)
    quantum = compute((args.a1, args.a2), params, args.variant).eval_at_one()
    classical = {k: n for k, n in classical_greedy((args.a1, args.a2), params).grid.items() if n}
    match = quantum == classical
    data = {
        "b": args.b, "c": args.c, "a1": args.a1, "a2": args.a2, "variant": args.variant,
        "match": match,
        "grid": [{"p": p, "q": q, "coeff": n} for (p, q), n in sorted(quantum.items())],
    }
    _emit(dumps(data), args.output)
    return EXIT_OK if match else EXIT_FAIL


def cmd_sigma(args):
    A = load_element(args.input)
    try:
        image = sigma_apply(args.ell, A)
    except NotLaurent as exc:
        sys.stderr.write(f"not Laurent: {exc}\n")
        return EXIT_FAIL
    if not A.is_bar_invariant():
        # sigma bars coefficients; an unbarred substitution would give a different image
        sys.stderr.write("note: input coefficients are not bar-invariant\n")
    _emit(dumps(image.to_json()), args.output)
    return EXIT_OK


def cmd_mul(args):
    A, B = load_element(args.left), load_element(args.right)
    if A.params != B.params:
        raise UsageError("the two elements live in different algebras")
    _emit(dumps((A * B).to_json()), args.output)
    return EXIT_OK


def cmd_expand(args):
    result = expand_in_greedy(load_element(args.input), args.max_iterations)
    _emit(dumps(result.to_json()), args.output)
    return EXIT_OK if result.succeeded else EXIT_FAIL


def cmd_cluster_var(args):
    params = _params(args)
    limits = Limits(max_index_distance=args.max_index_distance)
    if args.n1 is None and args.n2 is None:
        elem = cluster_variable(args.m, params, limits)
    else:
        elem = cluster_monomial(args.m, args.n1 or 0, args.n2 or 0, params, limits)
    _emit(dumps(elem.to_json()), args.output)
    return EXIT_OK


def cmd_region(args):
    R = region((args.a1, args.a2), _params(args), args.variant)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "label", "p", "q", "inside"])
    for label, (p, q) in R.vertices.items():
        writer.writerow(["vertex", label, p, q, int(R.contains(p, q))])
    pmax, qmax = R.bounding_box()
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            writer.writerow(["lattice", "", p, q, int(R.contains(p, q))])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def cmd_verify(args):
    data = _read_json(args.config) if args.config else {}
    try:
        cfg = SweepConfig.from_json(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad sweep config: {exc}") from None
    passed, rows = run(cfg)
    _emit(dumps({"passed": passed, "checks": summarize(rows), "rows": rows}), args.output)
    return EXIT_OK if passed else EXIT_FAIL


def _add_params(p, base=True):
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    if base:
        p.add_argument("--a1", type=int, required=True)
        p.add_argument("--a2", type=int, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qgreedy",
        description="Quantum greedy elements in rank-2 quantum cluster algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="greedy or quasi-greedy element")
    _add_params(p)
    p.add_argument("--variant", choices=VARIANTS, default="greedy")
    p.add_argument("--format", choices=("json", "table", "tex"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classical", help="commutative greedy element (v = 1)")
    _add_params(p)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("specialize", help="compare v = 1 against the classical recurrence")
    _add_params(p)
    p.add_argument("--variant", choices=VARIANTS, default="greedy")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("sigma", help="apply the automorphism sigma_ell")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("mul", help="product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("expand", help="expansion in the greedy basis")
    p.add_argument("--input", required=True)
    p.add_argument("--max-iterations", type=int, default=10**4)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("cluster-var", help="cluster variable or cluster monomial")
    _add_params(p, base=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--max-index-distance", type=int, default=Limits().max_index_distance)
    p.set_defaults(func=cmd_cluster_var)

    p = sub.add_parser("region", help="support region as CSV")
    _add_params(p)
    p.add_argument("--variant", choices=VARIANTS, default="greedy")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="run the verification sweep")
    p.add_argument("--config", help="sweep configuration JSON (defaults if omitted)")
    p.set_defaults(func=cmd_verify)

    for p in sub.choices.values():
        p.add_argument("--output", help="write here instead of stdout")
    return parser


def run_command(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_LIMIT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
