import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from bounds import to_decimal, to_pq
from colorings import blow_up, load_coloring, save_coloring
from config import get_settings
from errors import exit_code_for
from graphs import copies_in_complete, load_graph
from rainbow import color_degree_profile, count_rainbow_copies
from reports import (
    baseline_certificate,
    blowup_coef_certificate,
    complete_certificate,
    dense1_certificate,
    dense2_certificate,
    maclaurin_certificate,
    monotone_verdict,
    monte_carlo_fraction,
    recolor_certificate,
    recurrence_certificate,
    render_text,
    report_row,
    star_upper_certificate,
    stars_certificate,
    table_rows,
    write_csv,
)
from schemas import CertificateResponse, CountResponse, MonteCarloReport, SearchParams, TableReport
from search import convergence_table, exact_rb, local_search

logger = logging.getLogger(__name__)


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err


def _str_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _emit_certificate(cert: CertificateResponse, as_json: bool) -> None:
    print(cert.model_dump_json() if as_json else cert.summary)


def _cmd_count(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    coloring = load_coloring(args.coloring)
    logger.info("CLI count: graph=%s coloring=%s n=%s r=%s", args.graph, args.coloring, coloring.n, coloring.r)
    count = count_rainbow_copies(graph, coloring, workers=args.workers)
    fraction = Fraction(count, copies_in_complete(graph, coloring.n))
    response = CountResponse(
        graph=args.graph,
        n=coloring.n,
        r=coloring.r,
        count=count,
        fraction_exact=to_pq(fraction),
        fraction_decimal=to_decimal(fraction),
    )
    profile = color_degree_profile(coloring, args.profile) if args.profile else None
    if args.json:
        payload = response.model_dump()
        if profile is not None:
            payload["profile"] = profile.model_dump()
        print(json.dumps(payload))
        return 0
    print(f"{count}  fraction={response.fraction_exact}")
    if profile is not None:
        print(f"profile centers={list(profile.center_set)} q={list(profile.q)}")
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    _emit_certificate(baseline_certificate(args.edges, args.colors), args.json)
    return 0


def _emit_row(args: argparse.Namespace, graph, result) -> None:
    if args.out:
        save_coloring(result.witness, args.out)
    row = report_row(args.graph, graph, args.n, args.colors, result)
    print(row.model_dump_json() if args.json else render_text([row]))


def _cmd_brute(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    logger.info("CLI brute: graph=%s n=%s r=%s prune=%s", args.graph, args.n, args.colors, not args.no_prune)
    result = exact_rb(graph, args.n, args.colors, prune=not args.no_prune, budget=args.budget)
    _emit_row(args, graph, result)
    return 0


def _search_params(args: argparse.Namespace) -> SearchParams:
    return SearchParams.from_settings(
        seed=args.seed,
        restarts=args.restarts,
        iterations=args.iters,
        acceptance=args.acceptance,
        temperature=args.temperature,
        cooling=args.cooling,
    )


def _cmd_search(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    params = _search_params(args)
    warm = load_coloring(args.warm) if args.warm else None
    logger.info("CLI search: graph=%s n=%s r=%s seed=%s", args.graph, args.n, args.colors, params.seed)
    result = local_search(graph, args.n, args.colors, params=params, warm=warm, workers=args.workers)
    _emit_row(args, graph, result)
    return 0


def _cmd_blowup(args: argparse.Namespace) -> int:
    base = load_coloring(args.base)
    coloring = blow_up(base, args.n)
    save_coloring(coloring, args.out)
    if args.json:
        print(json.dumps({"base": args.base, "n": coloring.n, "r": coloring.r, "out": args.out}))
    else:
        print(f"{args.out}  n={coloring.n} r={coloring.r}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    builders: Dict[str, Callable[[argparse.Namespace], CertificateResponse]] = {
        "complete": lambda a: complete_certificate(a.a),
        "dense1": lambda a: dense1_certificate(a.m, a.e, a.c),
        "dense2": lambda a: dense2_certificate(a.m, a.e),
        "recolor": lambda a: recolor_certificate(a.rb, a.r, a.e),
        "blowup-coef": lambda a: blowup_coef_certificate(a.a, a.t, a.m),
        "recurrence": lambda a: recurrence_certificate(a.a, a.t, a.m, a.k, a.aut),
        "stars": lambda a: stars_certificate(a.parts, a.r, a.n),
        "star-upper": lambda a: star_upper_certificate(a.n, a.m, a.r),
        "maclaurin": lambda a: maclaurin_certificate(a.xs, a.d),
    }
    logger.info("CLI bounds %s", args.criterion)
    _emit_certificate(builders[args.criterion](args), args.json)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    params = _search_params(args)
    table = convergence_table(
        graph, args.colors, range(args.n_min, args.n_max + 1), mode=args.mode, params=params, budget=args.budget
    )
    rows = table_rows(args.graph, table)
    if args.csv:
        write_csv(rows, args.csv)
        logger.info("Wrote %s rows to %s", len(rows), args.csv)
    if args.json:
        report = TableReport(graph=args.graph, r=args.colors, monotone=table.monotone, rows=rows)
        print(report.model_dump_json())
    else:
        print(render_text(rows))
        print(f"monotonicity: {monotone_verdict(table)}")
    return 0


def _cmd_mc(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    estimate = monte_carlo_fraction(graph, args.n, args.colors, seed=args.seed, samples=args.samples)
    report = MonteCarloReport(
        graph=args.graph,
        n=args.n,
        r=args.colors,
        seed=args.seed,
        samples=estimate.samples,
        mean=estimate.mean,
        stderr=estimate.stderr,
        baseline_exact=to_pq(estimate.baseline),
        baseline_decimal=to_decimal(estimate.baseline),
    )
    if args.json:
        print(report.model_dump_json())
    else:
        print(
            f"mean={report.mean:.6f}  stderr={report.stderr:.6f}  "
            f"baseline={report.baseline_exact} ≈ {to_decimal(estimate.baseline, 4)}  samples={report.samples}"
        )
    return 0


def _add_search_flags(parser: argparse.ArgumentParser, seed_required: bool = False) -> None:
    parser.add_argument("--seed", type=int, required=seed_required, default=None, help="PCG64 seed")
    parser.add_argument("--restarts", type=int, default=None, help="Independent restarts")
    parser.add_argument("--iters", type=int, default=None, help="Moves examined per restart")
    parser.add_argument("--acceptance", choices=["greedy", "anneal"], default=None)
    parser.add_argument("--temperature", type=float, default=None, help="Initial annealing temperature")
    parser.add_argument("--cooling", type=float, default=None, help="Geometric cooling factor in (0, 1)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit one JSON object instead of text")

    parser = argparse.ArgumentParser(prog="rainbow", description="Anti-Ramsey multiplicity tools")
    parser.add_argument("--log-level", dest="log_level", default=None, help="Override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    count_parser = subparsers.add_parser("count", parents=[common], help="Count rainbow copies in a coloring")
    count_parser.add_argument("--graph", required=True, help="Graph descriptor or graph JSON file")
    count_parser.add_argument("--coloring", required=True, help="Coloring file or builtin name")
    count_parser.add_argument("--profile", type=_int_list, default=None, help="Center set, e.g. 0,1")
    count_parser.add_argument("--workers", type=int, default=None)
    count_parser.set_defaults(handler=_cmd_count)

    baseline_parser = subparsers.add_parser("baseline", parents=[common], help="Random-coloring baseline")
    baseline_parser.add_argument("--edges", type=int, required=True)
    baseline_parser.add_argument("--colors", type=int, required=True)
    baseline_parser.set_defaults(handler=_cmd_baseline)

    brute_parser = subparsers.add_parser("brute", parents=[common], help="Exact rb by exhaustive search")
    brute_parser.add_argument("--graph", required=True)
    brute_parser.add_argument("--n", type=int, required=True)
    brute_parser.add_argument("--colors", type=int, required=True)
    brute_parser.add_argument("--budget", type=int, default=None, help="Leaf budget")
    brute_parser.add_argument("--no-prune", dest="no_prune", action="store_true", help="Disable color-symmetry pruning")
    brute_parser.add_argument("--out", default=None, help="Write the witness coloring here")
    brute_parser.set_defaults(handler=_cmd_brute)

    search_parser = subparsers.add_parser("search", parents=[common], help="Heuristic lower bound on rb")
    search_parser.add_argument("--graph", required=True)
    search_parser.add_argument("--n", type=int, required=True)
    search_parser.add_argument("--colors", type=int, required=True)
    _add_search_flags(search_parser, seed_required=True)
    search_parser.add_argument("--warm", default=None, help="Warm-start coloring file or builtin name")
    search_parser.add_argument("--workers", type=int, default=None)
    search_parser.add_argument("--out", default=None, help="Write the witness coloring here")
    search_parser.set_defaults(handler=_cmd_search)

    blowup_parser = subparsers.add_parser("blowup", parents=[common], help="Blow a base coloring up to K_n")
    blowup_parser.add_argument("--base", required=True, help="Coloring file or builtin name")
    blowup_parser.add_argument("--n", type=int, required=True)
    blowup_parser.add_argument("--out", required=True)
    blowup_parser.set_defaults(handler=_cmd_blowup)

    bounds_parser = subparsers.add_parser("bounds", help="Bound and criterion certificates")
    criteria = bounds_parser.add_subparsers(dest="criterion", required=True)
    complete = criteria.add_parser("complete", parents=[common])
    complete.add_argument("--a", type=int, required=True)
    dense1 = criteria.add_parser("dense1", parents=[common])
    dense1.add_argument("--m", type=int, required=True)
    dense1.add_argument("--e", type=int, required=True)
    dense1.add_argument("--c", default=None, help="Density parameter; defaults to 2/sqrt(m-1)")
    dense2 = criteria.add_parser("dense2", parents=[common])
    dense2.add_argument("--m", type=int, required=True)
    dense2.add_argument("--e", type=int, required=True)
    recolor = criteria.add_parser("recolor", parents=[common])
    recolor.add_argument("--rb", type=int, required=True, help="rb value with one more color")
    recolor.add_argument("--r", type=int, required=True)
    recolor.add_argument("--e", type=int, required=True)
    coef = criteria.add_parser("blowup-coef", parents=[common])
    coef.add_argument("--a", type=int, required=True)
    coef.add_argument("--t", type=int, required=True)
    coef.add_argument("--m", type=int, required=True)
    recurrence = criteria.add_parser("recurrence", parents=[common])
    recurrence.add_argument("--a", type=int, required=True)
    recurrence.add_argument("--t", type=int, required=True)
    recurrence.add_argument("--m", type=int, required=True)
    recurrence.add_argument("--k", type=int, required=True)
    recurrence.add_argument("--aut", type=int, default=None, help="|Aut(H)| for the limit density")
    stars = criteria.add_parser("stars", parents=[common])
    stars.add_argument("--parts", type=_int_list, required=True)
    stars.add_argument("--r", type=int, required=True)
    stars.add_argument("--n", type=int, required=True)
    star_upper = criteria.add_parser("star-upper", parents=[common])
    star_upper.add_argument("--n", type=int, required=True)
    star_upper.add_argument("--m", type=int, required=True)
    star_upper.add_argument("--r", type=int, required=True)
    maclaurin = criteria.add_parser("maclaurin", parents=[common])
    maclaurin.add_argument("--xs", type=_str_list, required=True, help="Positive rationals, e.g. 1,2,3/2")
    maclaurin.add_argument("--d", type=int, required=True)
    bounds_parser.set_defaults(handler=_cmd_bounds)

    table_parser = subparsers.add_parser("table", parents=[common], help="Convergence table over n")
    table_parser.add_argument("--graph", required=True)
    table_parser.add_argument("--colors", type=int, required=True)
    table_parser.add_argument("--n-min", dest="n_min", type=int, required=True)
    table_parser.add_argument("--n-max", dest="n_max", type=int, required=True)
    table_parser.add_argument("--mode", choices=["exact", "search", "auto"], default="exact")
    table_parser.add_argument("--budget", type=int, default=None)
    table_parser.add_argument("--csv", default=None, help="Write CSV rows to this file")
    _add_search_flags(table_parser)
    table_parser.set_defaults(handler=_cmd_table)

    mc_parser = subparsers.add_parser("mc", parents=[common], help="Monte Carlo random-coloring estimate")
    mc_parser.add_argument("--graph", required=True)
    mc_parser.add_argument("--n", type=int, required=True)
    mc_parser.add_argument("--colors", type=int, required=True)
    mc_parser.add_argument("--seed", type=int, required=True)
    mc_parser.add_argument("--samples", type=int, required=True)
    mc_parser.set_defaults(handler=_cmd_mc)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    logging.basicConfig(
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s %(name)s %(levelname)-5s %(message)s",
    )
    try:
        return args.handler(args)
    except ValidationError as err:
        logger.warning("CLI %s: invalid parameters: %s", args.command, err)
        print(f"error: {err.errors()[0]['loc'][0]}: {err.errors()[0]['msg']}", file=sys.stderr)
        return 2
    except OSError as err:
        logger.error("CLI %s: I/O failure: %s", args.command, err)
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, ArithmeticError, TypeError) as err:
        logger.warning("CLI %s failed: %s", args.command, err)
        print(f"error: {err}", file=sys.stderr)
        return exit_code_for(err)


if __name__ == "__main__":
    raise SystemExit(main())
