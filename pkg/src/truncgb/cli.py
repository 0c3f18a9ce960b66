"""Command-line front end.

    truncgb gb SYSTEM [--order order1|order2]
    truncgb convert SYSTEM [--strategy S] [--trace] [--autocomplete-source] [--max-iter N]
    truncgb verify SYSTEM [--basis "f1, f2, ..."] [--order order1|order2]
    truncgb sweep SYSTEM [--budget N] [--jobs N]
    truncgb scenario ID

SYSTEM is a system file, ``-`` for stdin, or a built-in scenario id.

Exit status: 0 success (or the basis is a Groebner basis), 2 usage or
precondition error, 3 the conversion output (or the checked basis) is not a
Groebner basis.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import os
import sys

from .buchberger import (
    DEFAULT_MAX_PAIRS,
    PairLimitError,
    PairStrategy,
    ScheduleError,
    parse_strategy,
    reduced_groebner_basis,
)
from .hkconvert import SourceNotGroebnerError, hk_convert
from .parsing import ParseError, parse_polynomial_list, parse_system
from .scenarios import SCENARIOS, get_scenario
from .verify import is_groebner_basis

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_GB = 3


class UsageError(Exception):
    pass


def load_system(source):
    """Return (SystemFile, Scenario or None)."""
    if source == "-":
        return parse_system(sys.stdin.read()), None
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_system(fh.read()), None
    if source in SCENARIOS:
        sc = SCENARIOS[source]
        return sc.system(), sc
    raise UsageError(f"no such file or scenario: {source!r}")


def _strategy(args, scenario):
    if args.strategy is not None:
        return parse_strategy(args.strategy)
    if scenario is not None:
        return scenario.pair_strategy()
    return PairStrategy.min_lcm()


def format_verdict(verdict, order) -> str:
    if verdict.is_gb:
        return "Groebner basis: yes"
    w = verdict.witness
    return (f"NOT a Groebner basis; witness pair ({w.i + 1},{w.j + 1}), "
            f"remainder {w.remainder.format(order)}")


def cmd_gb(system, order_sel="order2", strategy=None, out=sys.stdout) -> int:
    order = system.order(order_sel)
    G = reduced_groebner_basis(system.generators, order, strategy or PairStrategy())
    print("; ".join(g.format(order) for g in G), file=out)
    return EXIT_OK


def cmd_convert(system, strategy, *, trace=False, autocomplete_source=False, max_iter=100,
                max_pairs=DEFAULT_MAX_PAIRS, out=sys.stdout) -> int:
    result = hk_convert(system.generators, system.order1, system.order2, strategy, max_iter,
                        autocomplete_source=autocomplete_source, max_pairs=max_pairs)
    o2 = system.order2
    if trace:
        out.write(result.trace.format())
    print(f"strategy: {strategy}", file=out)
    print(f"status: {result.status} after {len(result.trace.iterations)} iterations", file=out)
    print("output:", file=out)
    for g in result.basis:
        print(f"  {g.format(o2)}", file=out)
    print(format_verdict(result.verdict, o2), file=out)
    return EXIT_OK if result.is_target_gb else EXIT_NOT_GB


def cmd_verify(system, basis_text=None, order_sel="order2", out=sys.stdout) -> int:
    order = system.order(order_sel)
    if basis_text is None:
        basis = list(system.generators)
    else:
        basis = parse_polynomial_list(basis_text, system.ring)
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        raise UsageError("empty basis")
    verdict = is_groebner_basis(basis, order)
    print(format_verdict(verdict, order), file=out)
    return EXIT_OK if verdict.is_gb else EXIT_NOT_GB


def _sweep_one(job):
    text, strategy, autocomplete, max_iter, max_pairs = job
    system = parse_system(text)
    strat = parse_strategy(strategy)
    try:
        r = hk_convert(system.generators, system.order1, system.order2, strat, max_iter,
                       autocomplete_source=autocomplete, max_pairs=max_pairs)
    except PairLimitError as e:
        return strategy, None, "error", 0, str(e)
    return strategy, r.is_target_gb, r.status, len(r.trace.iterations), ""


def sweep(system, budget, *, autocomplete_source=False, max_iter=100,
          max_pairs=DEFAULT_MAX_PAIRS, jobs=1):
    """Run the conversion under minlcm, fifo and ``budget`` random seeds.

    Returns a dict strategy-text -> (is_gb, status, iterations, error).
    """
    if budget < 1:
        raise UsageError("budget must be at least 1")
    names = ["minlcm", "fifo"] + [f"random:{k}" for k in range(budget)]
    text = system.format()
    work = [(text, n, autocomplete_source, max_iter, max_pairs) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_one, work))
    else:
        rows = [_sweep_one(w) for w in work]
    return {name: rest for name, *rest in rows}


def cmd_sweep(system, budget, *, autocomplete_source=False, max_iter=100,
              max_pairs=DEFAULT_MAX_PAIRS, jobs=1, out=sys.stdout) -> int:
    report = sweep(system, budget, autocomplete_source=autocomplete_source,
                   max_iter=max_iter, max_pairs=max_pairs, jobs=jobs)
    correct = 0
    for name, (is_gb, status, iters, err) in report.items():
        if err:
            verdict = f"error: {err}"
        else:
            verdict = "GB" if is_gb else "NOT GB"
        correct += bool(is_gb)
        print(f"{name}: {verdict} ({status}, {iters} iterations)", file=out)
    print(f"correct: {correct}/{len(report)}", file=out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="truncgb",
                                description="Truncation-based Groebner basis conversion and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("system", help="system file, '-' for stdin, or a scenario id")

    sp = sub.add_parser("gb", help="print the reduced Groebner basis")
    common(sp)
    sp.add_argument("--order", default="order2", choices=("order1", "order2"))
    sp.add_argument("--strategy", default=None)

    sp = sub.add_parser("convert", help="run the truncation conversion from order1 to order2")
    common(sp)
    sp.add_argument("--strategy", default=None,
                    help="minlcm | fifo | schedule:<rounds>[+minlcm] | random:<seed>")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--autocomplete-source", action="store_true",
                    help="replace the input by its reduced order1 basis instead of rejecting it")
    sp.add_argument("--max-iter", type=int, default=100)
    sp.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    sp = sub.add_parser("verify", help="check whether a basis is a Groebner basis")
    common(sp)
    sp.add_argument("--basis", default=None, help="comma-separated polynomials (default: gens)")
    sp.add_argument("--order", default="order2", choices=("order1", "order2"))

    sp = sub.add_parser("sweep", help="run the conversion under many pair schedules")
    common(sp)
    sp.add_argument("--budget", type=int, default=50)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--autocomplete-source", action="store_true")
    sp.add_argument("--max-iter", type=int, default=100)
    sp.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    sp = sub.add_parser("scenario", help="print a built-in system")
    sp.add_argument("id", nargs="?", help=", ".join(SCENARIOS))
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scenario":
            if args.id is None:
                for sc in SCENARIOS.values():
                    print(f"{sc.id}: {sc.description}", file=out)
                return EXIT_OK
            sc = get_scenario(args.id)
            print(f"# strategy: {sc.strategy}", file=out)
            if sc.autocomplete_source:
                print("# convert with --autocomplete-source", file=out)
            out.write(sc.system().format())
            return EXIT_OK

        system, scenario = load_system(args.system)
        auto = getattr(args, "autocomplete_source", False) or bool(
            scenario and scenario.autocomplete_source)
        if args.command == "gb":
            strat = parse_strategy(args.strategy) if args.strategy else None
            return cmd_gb(system, args.order, strat, out=out)
        if args.command == "convert":
            return cmd_convert(system, _strategy(args, scenario), trace=args.trace,
                               autocomplete_source=auto, max_iter=args.max_iter,
                               max_pairs=args.max_pairs, out=out)
        if args.command == "verify":
            return cmd_verify(system, args.basis, args.order, out=out)
        if args.command == "sweep":
            return cmd_sweep(system, args.budget, autocomplete_source=auto,
                             max_iter=args.max_iter, max_pairs=args.max_pairs,
                             jobs=args.jobs, out=out)
    except SourceNotGroebnerError as e:
        w = e.verdict.witness
        print(f"error: {e} (pair ({w.i + 1},{w.j + 1}) leaves a nonzero remainder); "
              f"use --autocomplete-source", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParseError, ScheduleError, PairLimitError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
