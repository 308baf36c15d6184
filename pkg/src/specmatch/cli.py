"""Command-line interface: analyze / construct / verify / hunt / oracle.

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success or
consistent, 1 violation or oracle disagreement, 2 parse or parameter error,
3 I/O error, 4 over a brute-force cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional

from . import matching, theorems
from .errors import (
    ConstructionFailed,
    HypothesisUnmet,
    InvalidParameter,
    ParseError,
    TooLarge,
)
from .graph_core import (
    BiregularFamilySpec,
    Graph,
    bipartition,
    construct_biregular_family,
    construct_clique_apex,
    construct_join_exception,
    degree_stats,
    is_connected,
    make_family,
    parse_edge_list_text,
    parse_graph6,
    to_graph6,
)
from .spectral import graph_eigenvalues
from .theorems import (
    DEFAULT_EPSILON,
    HuntConfig,
    Verdict,
    half_str,
    hunt as run_hunt_sequential,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_CAPACITY = 4

_PARAM_ERRORS = (
    InvalidParameter,
    ConstructionFailed,
    HypothesisUnmet,
    ValueError,  # covers the remaining ValueError-derived library errors
)


def _epsilon(args) -> float:
    if args.epsilon is not None:
        return args.epsilon
    env = os.environ.get("SPECMATCH_EPSILON")
    return float(env) if env else DEFAULT_EPSILON


def _brute_cap(args) -> int:
    if args.brute_cap is not None:
        return args.brute_cap
    env = os.environ.get("SPECMATCH_BRUTE_CAP")
    return int(env) if env else matching.DEFICIENCY_CAP


def build_family(spec: str) -> Graph:
    """Family spec grammar: kind:arg1,arg2,...

    Kinds: complete:N empty:N cycle:N path:N complete-bipartite:A,B
    biregular:DELTA,K,Y clique-apex:T exception:DELTA,COREKIND where
    COREKIND is one of complete/empty/cycle/path (of order DELTA).
    """
    if ":" not in spec:
        raise InvalidParameter(f"family spec needs kind:args, got {spec!r}")
    kind, _, argstr = spec.partition(":")
    kind = kind.strip().replace("_", "-").lower()
    args = [a.strip() for a in argstr.split(",") if a.strip()]
    if kind in ("complete", "empty", "cycle", "path", "complete-bipartite"):
        return make_family(kind, *[int(a) for a in args])
    if kind == "biregular":
        if len(args) != 3:
            raise InvalidParameter("biregular takes delta,k,y")
        delta, k, y = (int(a) for a in args)
        if y <= 0 or (y + k) * delta % y:
            raise InvalidParameter(
                f"no integer Y-degree for delta={delta}, k={k}, y={y}"
            )
        return construct_biregular_family(
            BiregularFamilySpec(delta, k, y, (y + k) * delta // y)
        )
    if kind == "clique-apex":
        if len(args) != 1:
            raise InvalidParameter("clique-apex takes a single t")
        return construct_clique_apex(int(args[0]))
    if kind == "exception":
        if len(args) != 2:
            raise InvalidParameter("exception takes delta,corekind")
        delta = int(args[0])
        core = make_family(args[1], delta)
        return construct_join_exception(delta, core)
    raise InvalidParameter(f"unknown family kind {kind!r}")


def load_graph(args) -> Graph:
    """Resolve --construct / positional input (file path or inline graph6)."""
    if getattr(args, "construct", None):
        return build_family(args.construct)
    if not getattr(args, "input", None):
        raise InvalidParameter("no input: pass a graph6 string, a file, or --construct")
    text = args.input
    if os.path.exists(text):
        with open(text, "r", encoding="ascii") as fh:
            text = fh.read()
    # digits can never start a graph6 byte (range 63..126), so the first
    # payload character disambiguates the two text formats
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            if line[0].isdigit():
                return parse_edge_list_text(text)
            break
    return parse_graph6(text)


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        _print_pretty(payload)
    else:
        print(json.dumps(payload, sort_keys=True))


def _print_pretty(payload: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _print_pretty(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{pad}{key}: [{len(value)} items]")
            for item in value:
                _print_pretty(item, indent + 1)
                print()
        else:
            print(f"{pad}{key}: {value}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = load_graph(args)
    eps = _epsilon(args)
    cap = _brute_cap(args)
    delta, dbar, big = degree_stats(g)
    alpha = matching.fractional_matching_number(g)
    spectrum = graph_eigenvalues(g)
    report = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "min_degree": delta,
        "average_degree": str(dbar),
        "max_degree": big,
        "connected": is_connected(g),
        "bipartite": bipartition(g) is not None,
        "q1": spectrum.radius,
        "fractional_matching_number": half_str(alpha),
        "has_fractional_perfect_matching": 2 * alpha == g.n,
        "epsilon": eps,
    }
    if args.spectrum:
        report["spectrum"] = list(spectrum.eigenvalues)
    if g.n <= cap:
        w = matching.brute_force_deficiency(g, cap=cap)
        report["deficiency_witness"] = {
            "set": list(w.vertices),
            "size": w.size,
            "isolated": w.isolated,
            "crossing_edges": w.crossing_edges,
            "deficiency": w.deficiency,
        }
    else:
        report["deficiency_witness"] = None
    member = theorems.recognize_biregular_family(g)
    report["biregular_family"] = (
        None
        if member is None
        else {"delta": member.delta, "k": member.k, "d_y": member.d_y}
    )
    report["join_exception_delta"] = theorems.recognize_join_exception(g)
    if args.oracle:
        code, oracle = _oracle_payload(g, cap)
        report["oracle"] = oracle
        if code:
            _emit(report, args.pretty)
            return code
    if is_connected(g) and g.n >= 3:
        checks = [
            theorems.check_degree_bounds(g, eps),
            theorems.check_ratio_bound(g, eps),
            theorems.check_fm_lower(g, 1, eps),
            theorems.check_fpm_radius(g, eps),
            theorems.check_fpm_complement(g, eps),
            theorems.check_fpm_complement_refined(g, eps),
        ]
        report["theorems"] = [r.to_json_obj() for r in checks]
    else:
        report["theorems"] = []
        report["theorems_skipped"] = "checkers need a connected graph of order >= 3"
    _emit(report, args.pretty)
    return EXIT_OK


def cmd_construct(args) -> int:
    print(to_graph6(build_family(args.family)))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args)
    report = theorems.run_named_check(g, args.theorem, k=args.k, eps=_epsilon(args))
    _emit(report.to_json_obj(), args.pretty)
    return EXIT_FINDING if report.verdict is Verdict.VIOLATION else EXIT_OK


def _oracle_payload(g: Graph, cap: int) -> tuple[int, dict]:
    if g.n > cap:
        print(f"n={g.n} exceeds deficiency brute-force cap {cap}", file=sys.stderr)
        return EXIT_CAPACITY, {"error": f"n={g.n} over cap {cap}"}
    alpha = matching.fractional_matching_number(g)
    w = matching.brute_force_deficiency(g, cap=cap)
    from_deficiency = Fraction(g.n - w.deficiency, 2)
    payload = {
        "alpha_star": half_str(alpha),
        "alpha_star_from_deficiency": half_str(from_deficiency),
        "deficiency_witness": {
            "set": list(w.vertices),
            "size": w.size,
            "isolated": w.isolated,
            "crossing_edges": w.crossing_edges,
            "deficiency": w.deficiency,
        },
        "agreement": alpha == from_deficiency,
    }
    if g.n <= matching.MATCHING_CAP:
        brute_alpha = matching.brute_force_matching_number(g)
        payload["brute_matching_number"] = brute_alpha
        payload["matching_bound_ok"] = brute_alpha <= alpha
        payload["agreement"] = payload["agreement"] and brute_alpha <= alpha
    return EXIT_OK, payload


def cmd_oracle(args) -> int:
    g = load_graph(args)
    code, payload = _oracle_payload(g, _brute_cap(args))
    _emit(payload, args.pretty)
    if code:
        return code
    return EXIT_OK if payload["agreement"] else EXIT_FINDING


def _hunt_worker(item: tuple[str, float]) -> list[dict]:
    g6, eps = item
    g = parse_graph6(g6)
    return [
        r.to_json_obj()
        for r in theorems.run_all_checks(g, eps=eps)
        if r.verdict is Verdict.VIOLATION
    ]


def cmd_hunt(args) -> int:
    try:
        n_min, _, n_max = args.n.partition("..")
        config = HuntConfig(
            n_min=int(n_min),
            n_max=int(n_max) if n_max else int(n_min),
            edge_probability=args.p,
            min_degree=args.min_degree,
            count=args.count,
            seed=args.seed,
            epsilon=_epsilon(args),
        )
    except ValueError:
        raise InvalidParameter(f"bad --n range {args.n!r}; expected MIN..MAX") from None
    if args.jobs > 1:
        # graphs are generated sequentially (seeded), checked in parallel,
        # and merged in generation order, so the report is still deterministic
        graphs = theorems.generate_hunt_graphs(config)
        items = [(to_graph6(g), config.epsilon) for g in graphs]
        with Pool(args.jobs) as pool:
            violation_lists = pool.map(_hunt_worker, items)
        payload = {
            "violations": [v for lst in violation_lists for v in lst],
            "graphs_checked": len(graphs),
            "reports_total": None,
            "config": {
                "n_min": config.n_min,
                "n_max": config.n_max,
                "edge_probability": config.edge_probability,
                "min_degree": config.min_degree,
                "count": config.count,
                "seed": config.seed,
                "epsilon": config.epsilon,
            },
        }
        n_violations = len(payload["violations"])
    else:
        result = run_hunt_sequential(config)
        payload = result.to_json_obj()
        n_violations = len(result.violations)
    _emit(payload, args.pretty)
    print(
        f"{n_violations} violations over {payload['graphs_checked']} graphs",
        file=sys.stderr,
    )
    return EXIT_FINDING if n_violations else EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("input", nargs="?", help="graph6 string or file path")
        p.add_argument(
            "--construct", metavar="SPEC", help="build a named family instead of reading input"
        )
    p.add_argument("--epsilon", type=float, default=None, help="comparison tolerance")
    p.add_argument("--brute-cap", type=int, default=None, help="deficiency brute-force cap")
    p.add_argument("--pretty", action="store_true", help="human summary instead of JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specmatch",
        description="Signless Laplacian spectral radii, fractional matchings, "
        "and machine-checked bounds relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for one graph")
    _add_common(p)
    p.add_argument("--spectrum", action="store_true", help="include the full spectrum")
    p.add_argument("--oracle", action="store_true", help="embed brute-force cross-checks")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="print a named family as graph6")
    p.add_argument("family", help=build_family.__doc__)
    p.set_defaults(func=cmd_construct, pretty=False)

    p = sub.add_parser("verify", help="run one named checker")
    _add_common(p)
    p.add_argument(
        "--theorem", required=True, choices=theorems.checker_names(), help="checker id"
    )
    p.add_argument("--k", default=None, help="k for fm-lower (int, decimal, or p/q)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="random search for violations")
    _add_common(p, with_input=False)
    p.add_argument("--n", default="4..10", help="order range MIN..MAX")
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--count", type=int, default=100, help="connected graphs to test")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--min-degree", type=int, default=1, help="minimum-degree floor")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("oracle", help="brute-force cross-check of alpha'*")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"over capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except _PARAM_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
