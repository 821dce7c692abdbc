"""Command line front end: ``python -m tietze {simplify,bench,uglify,check}``.

Exit status: 0 ok, 1 usage, 2 parse error, 3 verification failure,
4 cycle limit reached, 5 I/O error.
"""
from __future__ import annotations

import argparse
import sys
import time

from .corpus import standard_corpus, uglify
from .driver import (ReplayError, SimplifyOptions, Strategy, VerificationError, replay,
                     simplify)
from .presentation import abelian_invariants, total_length
from .signatures import SigConfig
from .textio import ParseError, format_log, parse, serialize, write_stats

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY, EXIT_CYCLES, EXIT_IO = range(6)

# published pair-search savings over naive searching, for comparison
REFERENCE_SAVINGS = {"sig": 0.81, "flags": 0.93, "both": 0.98}

STRATEGY_ORDER = ("naive", "sig", "flags", "both")


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _options(args) -> SimplifyOptions:
    return SimplifyOptions(max_cycles=args.max_cycles, verify=getattr(args, "verify", False),
                           sig=SigConfig(args.sig_bits))


def cmd_simplify(args) -> int:
    p = parse(_read(args.inp))
    res = simplify(p, Strategy(args.strategy), _options(args))
    out = res.presentation
    _write(args.out, serialize(out, "compact" if args.compact else "explicit")
           + ("" if args.compact else "\n"))
    if args.log:
        _write(args.log, format_log(res.log, p.generators))
    if args.stats:
        with open(args.stats, "w", encoding="utf-8", newline="") as f:
            write_stats(f, [(args.strategy, res.stats)])
    if args.verify and replay(p, res.log) != out:
        print("log replay does not reproduce the output", file=sys.stderr)
        return EXIT_VERIFY
    t = res.stats.totals()
    print(f"generators {p.num_live} -> {out.num_live}, relators {len(p.relators)} -> "
          f"{len(out.relators)}, length {total_length(p)} -> {total_length(out)}; "
          f"searched {t['searched']} of {t['pairs_considered']} pairs, "
          f"{t['matches']} replacements", file=sys.stderr)
    if not res.converged:
        print(f"stopped after {res.cycles} cycles without converging", file=sys.stderr)
        return EXIT_CYCLES
    return EXIT_OK


def bench_one(p, options: SimplifyOptions):
    """Run all strategies on ``p``; returns ``({strategy: result}, {strategy: seconds})``."""
    results, times = {}, {}
    for s in STRATEGY_ORDER:
        t0 = time.perf_counter()
        results[s] = simplify(p, Strategy(s), options)
        times[s] = time.perf_counter() - t0
    return results, times


def _bench_table(name: str, results, times) -> str:
    naive = results["naive"].stats.searched
    lines = [f"{name}:",
             f"  {'strategy':8} {'considered':>10} {'skip_flag':>9} {'skip_sig':>9} "
             f"{'searched':>9} {'matches':>8} {'saving':>7} {'ref':>5} {'seconds':>8}"]
    for s in STRATEGY_ORDER:
        t = results[s].stats.totals()
        saving = 1 - t["searched"] / naive if naive else 0.0
        ref = f"{REFERENCE_SAVINGS[s]:.0%}" if s in REFERENCE_SAVINGS else "-"
        lines.append(f"  {s:8} {t['pairs_considered']:>10} {t['skipped_by_flags']:>9} "
                     f"{t['skipped_by_signature']:>9} {t['searched']:>9} {t['matches']:>8} "
                     f"{saving:>7.1%} {ref:>5} {times[s]:>8.3f}")
    return "\n".join(lines)


def cmd_bench(args) -> int:
    if args.corpus:
        items = [(name, ug) for name, _, ug in standard_corpus()]
    elif args.inp:
        items = [(args.inp, parse(_read(args.inp)))]
    else:
        raise _Usage("bench: give --in FILE or --corpus")
    reports = []
    status = EXIT_OK
    for name, p in items:
        results, times = bench_one(p, _options(args))
        ref = results["naive"]
        for s in STRATEGY_ORDER[1:]:
            if results[s].presentation != ref.presentation or results[s].log != ref.log:
                print(f"{name}: strategy {s} diverges from naive", file=sys.stderr)
                status = EXIT_VERIFY
        if not ref.converged and status == EXIT_OK:
            status = EXIT_CYCLES
        print(_bench_table(name, results, times))
        reports += [(s if len(items) == 1 else f"{s}:{name}", results[s].stats)
                    for s in STRATEGY_ORDER]
    if args.stats:
        with open(args.stats, "w", encoding="utf-8", newline="") as f:
            write_stats(f, reports)
    return status


def cmd_uglify(args) -> int:
    if args.ops < 1:
        raise _Usage("uglify: --ops must be at least 1")
    p = parse(_read(args.inp))
    q = uglify(p, args.seed, args.ops)
    _write(args.out, serialize(q, "compact" if args.compact else "explicit")
           + ("" if args.compact else "\n"))
    return EXIT_OK


def cmd_check(args) -> int:
    a = abelian_invariants(parse(_read(args.a)))
    print(f"{args.a}: {a}")
    if args.b is None:
        return EXIT_OK
    b = abelian_invariants(parse(_read(args.b)))
    print(f"{args.b}: {b}")
    if a != b:
        print("abelian invariants differ", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tietze", description="Simplify finite group presentations.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def search_opts(sp):
        sp.add_argument("--sig-bits", type=int, choices=(32, 64), default=32)
        sp.add_argument("--max-cycles", type=int, default=1000)

    sp = sub.add_parser("simplify", help="simplify one presentation")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out")
    sp.add_argument("--stats", help="write per-pass search statistics (CSV)")
    sp.add_argument("--log", help="write the transformation log")
    sp.add_argument("--strategy", choices=STRATEGY_ORDER, default="both")
    sp.add_argument("--verify", action="store_true",
                    help="check abelian invariants after every move and replay the log")
    sp.add_argument("--compact", action="store_true", help="write compact letter format")
    search_opts(sp)
    sp.set_defaults(func=cmd_simplify)

    sp = sub.add_parser("bench", help="compare all search strategies")
    sp.add_argument("--in", dest="inp")
    sp.add_argument("--corpus", action="store_true", help="use the built-in seeded corpus")
    sp.add_argument("--stats", help="write the comparative statistics (CSV)")
    search_opts(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("uglify", help="make a presentation worse, reproducibly")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--ops", type=int, default=20)
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=cmd_uglify)

    sp = sub.add_parser("check", help="print or compare abelian invariants")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b")
    sp.set_defaults(func=cmd_check)
    return ap


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (VerificationError, ReplayError) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(run_cli())
