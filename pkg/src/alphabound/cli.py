"""Command-line interface.

Subcommands: gen (write a graph as canonical JSON), bound (evaluate a
named bound on a graph file), table (the closed-form bound table for a
list of prime powers), alpha (exact maximum independent set), certify
(equality-case analysis).

Exit codes: 0 on success, 2 for malformed input or invalid parameters,
3 when a mathematical precondition of the requested method is violated
(for example, asking for the loopless ratio bound on a graph that has
loops).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from . import bounds as bnd
from . import certify as cert
from .exact import max_independent_set
from .families import complete_bipartite, xm_graph
from .galois import NotAPrimePower
from .geometry import LOOP_MODES, er_graph, incidence_graph_with_polarity
from .graphcore import Graph, GraphError, from_json, laplacian, set_params, to_json
from .spectra import eigenvalues, extreme_eigs

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

BOUND_METHODS = (
    "hoffman",
    "abound",
    "abound1",
    "abound2",
    "lbound",
    "lbound2",
    "sarnak",
    "sarnak2",
    "ratio-cert",
)


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _round2(x: float) -> str:
    """Two decimals, halves rounded away from zero."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            return from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read graph file: {exc}") from exc
    except (GraphError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed graph file {path}: {exc}") from exc


def _load_set(path: str, g: Graph) -> list[int]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read set file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed set file {path}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise InputError(f"set file {path} must hold a JSON list of integers")
    if any(not (0 <= v < g.n) for v in data):
        raise InputError(f"set file {path} has vertices out of range for n={g.n}")
    return sorted(set(data))


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def _json_value(value: float | None):
    if value is None or value == math.inf:
        return None
    return value


def _require_loopless(g: Graph, what: str) -> None:
    if g.loops:
        raise PreconditionError(f"{what} requires a loopless graph ({len(g.loops)} loops present)")


def _require_regular(g: Graph, what: str) -> int:
    degs = set(g.degrees)
    if len(degs) != 1:
        raise PreconditionError(f"{what} requires a regular graph (degrees {sorted(degs)})")
    return degs.pop()


def _k_s_input(g: Graph, subset, use_delta: bool, method: str) -> float:
    """k_S from a set, or its minimum-degree lower bound (still a valid
    upper bound downstream, since the bound decreases in k_S)."""
    if subset is not None:
        return float(set_params(g, subset).k_s)
    if use_delta:
        mean = sum(g.degrees) / g.n
        return min(g.degrees) * 2 - mean
    raise InputError(f"{method} needs --set to compute k_S (or --delta)")


def cmd_gen(args) -> int:
    try:
        if args.family == "er":
            g = er_graph(args.q, args.loops)
        elif args.family == "incidence":
            g, _ = incidence_graph_with_polarity(args.q)
        elif args.family == "kab":
            if not args.a < args.b:
                raise InputError(f"kab requires a < b, got a={args.a}, b={args.b}")
            g = complete_bipartite(args.a, args.b)
        else:
            if args.m <= 1:
                raise InputError(f"xm requires m > 1, got m={args.m}")
            g = xm_graph(args.m)
    except NotAPrimePower:
        raise InputError(f"{args.q} is not a prime power")
    text = to_json(g) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def _bound_report(args) -> dict:
    g = _load_graph(args.graph)
    subset = _load_set(args.set, g) if args.set else None
    method = args.method

    if method == "ratio-cert":
        a = g.adjacency_matrix()
        if args.b_matrix == "tau":
            tau = eigenvalues(a).least
            b = a - tau * np.eye(g.n)
        else:
            lap = laplacian(g)
            mu = eigenvalues(lap).largest
            b = mu * np.eye(g.n) - lap
        c = bnd.ratio_certificate(b, g)
        return {
            "method": method,
            "value": _json_value(c.value),
            "informative": c.value is not None,
            "params": {
                "t": c.t,
                "r": c.r,
                "psd": c.psd,
                "sign_pattern": c.sign_pattern,
                "row_sum_const": c.row_sum_const,
                "diag_const": c.diag_const,
            },
        }

    if method in ("hoffman", "abound"):
        _require_loopless(g, method)
    if method in ("sarnak", "sarnak2"):
        _require_loopless(g, method)

    if method == "hoffman":
        k = _require_regular(g, method)
        tau = eigenvalues(g.adjacency_matrix()).least
        report = bnd.hoffman(g.n, k, tau)
    elif method == "abound":
        tau = eigenvalues(g.adjacency_matrix()).least
        report = bnd.abound(g.n, _k_s_input(g, subset, args.delta, method), tau)
    elif method == "abound1":
        k = _require_regular(g, method)
        tau = eigenvalues(g.adjacency_matrix()).least
        s1 = len([v for v in subset if v in g.loop_set]) if subset else len(g.loops)
        report = bnd.abound1(g.n, k, tau, s1)
    elif method == "abound2":
        tau = eigenvalues(g.adjacency_matrix()).least
        s1 = (
            len([v for v in subset if v in g.loop_set])
            if subset is not None
            else len(g.loops)
        )
        report = bnd.abound2(g.n, _k_s_input(g, subset, args.delta, method), tau, s1)
    elif method == "lbound":
        mu = eigenvalues(laplacian(g)).largest
        if subset is not None:
            mean_degree = float(set_params(g.strip_loops(), subset).mean_degree)
        elif args.delta:
            mean_degree = float(min(g.strip_loops().degrees))
        else:
            raise InputError("lbound needs --set (or --delta for the minimum-degree form)")
        report = bnd.lbound(g.n, mu, mean_degree)
    elif method == "lbound2":
        mu = eigenvalues(laplacian(g)).largest
        report = bnd.lbound2(g.n, mu, float(min(g.strip_loops().degrees)))
    else:  # sarnak / sarnak2
        k = _require_regular(g, method)
        lam = extreme_eigs(g.adjacency_matrix()).lam
        fn = bnd.sarnak if method == "sarnak" else bnd.sarnak_improved
        report = fn(g.n, k, lam)

    return {
        "method": method,
        "value": _json_value(report.value),
        "informative": report.informative,
        "params": report.params,
    }


def cmd_bound(args) -> int:
    _emit(_bound_report(args))
    return EXIT_OK


def _parse_q_list(text: str) -> list[int]:
    try:
        qs = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"bad q list {text!r}") from exc
    if not qs:
        raise InputError("empty q list")
    return qs


def cmd_table(args) -> int:
    qs = _parse_q_list(args.q)
    rows = []
    for q in qs:
        try:
            reports = bnd.er_bounds(q)
        except NotAPrimePower:
            raise InputError(f"{q} is not a prime power")
        row = {"q": q}
        if args.with_alpha:
            result = max_independent_set(er_graph(q, "keep"), time_budget=args.alpha_budget)
            row["alpha"] = result.alpha
            row["alpha_optimal"] = result.optimal
        for name in bnd.ER_BOUND_NAMES:
            row[name] = reports[name].value
        rows.append(row)

    if args.format == "json":
        print(json.dumps(rows))
        return EXIT_OK

    header = ["q"] + (["alpha"] if args.with_alpha else []) + list(bnd.ER_BOUND_NAMES)
    print(",".join(header))
    for row in rows:
        cells = [str(row["q"])]
        if args.with_alpha:
            mark = "" if row["alpha_optimal"] else ">="
            cells.append(f"{mark}{row['alpha']}")
        cells += [_round2(row[name]) for name in bnd.ER_BOUND_NAMES]
        print(",".join(cells))
    return EXIT_OK


def cmd_alpha(args) -> int:
    g = _load_graph(args.graph)
    result = max_independent_set(g, time_budget=args.budget)
    _emit(
        {
            "alpha": result.alpha,
            "optimal": result.optimal,
            "witness": list(result.witness),
            "nodes": result.nodes,
            "elapsed": result.elapsed,
        }
    )
    return EXIT_OK


def cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    subset = _load_set(args.set, g)
    try:
        if args.which == "hoffman":
            c = cert.hoffman_equality_certify(g, subset)
            flags = {
                "equality": c.equality,
                "semiregular": c.semiregular,
                "equitable": c.equitable,
                "eigvec_membership": c.eigvec_membership,
            }
        elif args.which == "laplacian":
            c = cert.laplacian_equality_certify(g, subset)
            flags = {
                "equality": c.equality,
                "semiregular": c.semiregular,
                "eigvec_membership": c.eigvec_membership,
            }
        elif args.which == "gentight":
            tau = eigenvalues(g.adjacency_matrix()).least
            # T = -tau*I; keep the entry exact when tau is an integer so
            # the check can compare rationals instead of floats.
            t_val = -tau
            t_entry = round(t_val) if abs(t_val - round(t_val)) <= 1e-9 else t_val
            cond_a, cond_b = cert.gentight_check(g, [t_entry] * g.n, subset)
            flags = {"cond_a": cond_a, "cond_b": cond_b}
        else:
            flags = {"coprime_complete_bipartite": cert.coprime_complete_bipartite_check(g, subset)}
    except (cert.NotRegular, cert.HasLoops, cert.PreconditionFailed, bnd.NotIndependent, bnd.NotPSD) as exc:
        raise PreconditionError(str(exc)) from exc
    _emit({"which": args.which, "flags": flags})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphabound",
        description="Eigenvalue bounds on independence numbers of loop-aware graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph family as canonical JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_er = gen_sub.add_parser("er", help="polarity graph of the projective plane")
    g_er.add_argument("--q", type=int, required=True)
    g_er.add_argument("--loops", choices=LOOP_MODES, default="keep")
    g_inc = gen_sub.add_parser("incidence", help="point/line incidence graph")
    g_inc.add_argument("--q", type=int, required=True)
    g_kab = gen_sub.add_parser("kab", help="complete bipartite K_{a,b}, a < b")
    g_kab.add_argument("--a", type=int, required=True)
    g_kab.add_argument("--b", type=int, required=True)
    g_xm = gen_sub.add_parser("xm", help="edgeless part joined to an odd cycle")
    g_xm.add_argument("--m", type=int, required=True)
    for p in (g_er, g_inc, g_kab, g_xm):
        p.add_argument("--out", default="-", help="output path (default: stdout)")
        p.set_defaults(func=cmd_gen)

    bound = sub.add_parser("bound", help="evaluate a bound on a graph file")
    bound.add_argument("method", choices=BOUND_METHODS)
    bound.add_argument("--graph", required=True)
    bound.add_argument("--set", help="JSON list of vertices for set-dependent bounds")
    bound.add_argument(
        "--delta", action="store_true", help="use the minimum degree instead of a set"
    )
    bound.add_argument(
        "--b-matrix",
        choices=("tau", "lap"),
        default="tau",
        help="ratio-cert matrix: adjacency shift A - tau*I or Laplacian shift mu*I - L",
    )
    bound.set_defaults(func=cmd_bound)

    table = sub.add_parser("table", help="closed-form bound table for prime powers")
    table.add_argument("--q", required=True, help="comma-separated prime powers")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--with-alpha", action="store_true")
    table.add_argument("--alpha-budget", type=float, default=60.0)
    table.set_defaults(func=cmd_table)

    alpha = sub.add_parser("alpha", help="exact maximum independent set")
    alpha.add_argument("--graph", required=True)
    alpha.add_argument("--budget", type=float, default=60.0)
    alpha.set_defaults(func=cmd_alpha)

    certify = sub.add_parser("certify", help="equality-case certification")
    certify.add_argument("which", choices=("hoffman", "laplacian", "gentight", "coprime"))
    certify.add_argument("--graph", required=True)
    certify.add_argument("--set", required=True)
    certify.set_defaults(func=cmd_certify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
