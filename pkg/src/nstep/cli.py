"""Command-line front end for the sequence engine.

Subcommands cover term listings (seq, table), fast evaluation (term),
identity checking (check), generating functions (gf), weighted partial
sums (sum), benchmarking (bench) and b-file verification (verify-bfile).

Output is tab-separated rows by default; --format json wraps the same
rows in {"command", "params", "rows"} with every cell rendered as a
decimal string.  Exit status: 0 on success, 1 when a verification
fails, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .bfile import BFileFormatError, parse_bfile
from .engine import (Family, OrderError, SeedError, SEQUENCE_NAMES,
                     TermCache, make_spec)
from .fasteval import Ring, RingError, matrix_power_oracle, term_at
from .identities import (GridConfig, REGISTRY, adjudicate, check,
                         registry_table, run_grid)
from .series import (generating_function, partial_sum_closed,
                     weighted_partial_sum)

# exact values above this index get astronomically large; require --mod
EXACT_INDEX_LIMIT = 10 ** 6
# the naive evaluator walks every index up to r
NAIVE_WALK_LIMIT = 10 ** 7


def parse_index_list(text: str) -> list[int]:
    """Expand 'a..b' spans (inclusive) and comma lists into integers."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ValueError("empty element in %r" % (text,))
        if ".." in part:
            lo_text, hi_text = part.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if lo > hi:
                raise ValueError("span %s..%s runs backwards" % (lo, hi))
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    return out


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def format_coeffs(poly) -> str:
    """Polynomial as space-separated coefficients, constant term first."""
    return " ".join(format_rational(c) for c in poly.coeffs)


def _emit(args, command: str, params: dict, rows) -> None:
    if args.format == "json":
        payload = {
            "command": command,
            "params": {key: str(val) for key, val in params.items()},
            "rows": [[str(cell) for cell in row] for row in rows],
        }
        print(json.dumps(payload))
    else:
        for row in rows:
            print("\t".join(str(cell) for cell in row))


def _spec_from(args, n=None):
    seeds = None
    if args.seeds is not None:
        seeds = tuple(parse_index_list(args.seeds))
    if n is None:
        n = args.n
    if n is None:
        raise ValueError("--n is required")
    return make_spec(args.family, n, seeds)


def _require_spec(args, n=None):
    try:
        return _spec_from(args, n)
    except (OrderError, SeedError, ValueError) as exc:
        args._parser.error(str(exc))


def _ring_from(args) -> Ring:
    try:
        return Ring(args.mod)
    except RingError as exc:
        args._parser.error(str(exc))


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_seq(args) -> int:
    spec = _require_spec(args)
    if args.from_index > args.to_index:
        args._parser.error("--from %d exceeds --to %d"
                           % (args.from_index, args.to_index))
    cache = TermCache(spec)
    rows = [[r, cache.term(r)]
            for r in range(args.from_index, args.to_index + 1)]
    _emit(args, "seq",
          {"sequence": spec.label(), "from": args.from_index,
           "to": args.to_index}, rows)
    return 0


def _cmd_table(args) -> int:
    try:
        orders = parse_index_list(args.n)
    except ValueError as exc:
        args._parser.error(str(exc))
    rows = []
    for n in orders:
        for family in (Family.U, Family.V):
            try:
                spec = make_spec(family, n)
            except OrderError as exc:
                args._parser.error(str(exc))
            names = SEQUENCE_NAMES.get(n)
            name = names[0 if family is Family.U else 1] if names \
                else spec.label()
            rows.append([n, name] + TermCache(spec).terms(-4, 10))
    _emit(args, "table", {"n": args.n, "range": "-4..10"}, rows)
    return 0


def _cmd_term(args) -> int:
    spec = _require_spec(args)
    ring = _ring_from(args)
    if ring.modulus is None and abs(args.r) > EXACT_INDEX_LIMIT:
        args._parser.error(
            "exact evaluation is limited to |r| <= %d; pass --mod"
            % EXACT_INDEX_LIMIT)
    value = term_at(spec, args.r, ring)
    if args.oracle:
        other = matrix_power_oracle(spec, args.r, Ring(args.mod))
        if other != value:
            print("oracle mismatch at r=%d: %d vs %d"
                  % (args.r, value, other), file=sys.stderr)
            return 1
    params = {"sequence": spec.label(), "r": args.r}
    if args.mod is not None:
        params["mod"] = args.mod
    _emit(args, "term", params, [[args.r, value]])
    return 0


def _cmd_gf(args) -> int:
    spec = _require_spec(args)
    rf = generating_function(spec)
    if args.reduce:
        rf = rf.reduce()
    rows = [["function", rf.text()],
            ["num", format_coeffs(rf.num)],
            ["den", format_coeffs(rf.den)]]
    if args.terms:
        rows.extend(["coeff", j, c] for j, c in enumerate(rf.series(args.terms)))
    _emit(args, "gf", {"sequence": spec.label(), "reduced": args.reduce},
          rows)
    return 0


def _cmd_sum(args) -> int:
    spec = _require_spec(args)
    if args.k < 0:
        args._parser.error("--k must be nonnegative")
    try:
        x = parse_rational(args.x)
    except (ValueError, ZeroDivisionError):
        args._parser.error("cannot parse %r as a rational" % (args.x,))
    cache = TermCache(spec)
    try:
        closed = partial_sum_closed(cache, x, args.k)
    except ArithmeticError as exc:
        print("closed form failed: %s" % exc, file=sys.stderr)
        return 1
    direct = weighted_partial_sum(cache, x, args.k)
    _emit(args, "sum", {"sequence": spec.label(), "x": args.x, "k": args.k},
          [[format_rational(x), args.k, format_rational(closed),
            format_rational(direct)]])
    if closed != direct:
        print("closed form %s disagrees with direct sum %s"
              % (format_rational(closed), format_rational(direct)),
              file=sys.stderr)
        return 1
    return 0


def _cmd_check(args) -> int:
    if args.list:
        print(registry_table())
        return 0
    if args.adjudicate:
        return _check_adjudicate(args)
    if args.all:
        return _check_grid(args)
    if args.id is None:
        args._parser.error("pass --id, --all, --list or --adjudicate")
    return _check_single(args)


def _parse_values(args, text):
    try:
        return parse_index_list(text)
    except ValueError as exc:
        args._parser.error(str(exc))


def _check_single(args) -> int:
    desc = REGISTRY.get(args.id)
    if desc is None:
        args._parser.error("unknown identity id %r" % (args.id,))
    if args.n is None:
        args._parser.error("identity checks need --n")
    pools = []
    for name in desc.params:
        given = getattr(args, name)
        if given is None:
            args._parser.error("identity %s needs --%s" % (desc.id, name))
        pools.append([(name, v) for v in _parse_values(args, given)])
    for name in ("r", "s", "k"):
        if name not in desc.params and getattr(args, name) is not None:
            args._parser.error("identity %s does not take --%s"
                               % (desc.id, name))
    rows = []
    failures = 0
    for n in _parse_values(args, args.n):
        spec = _require_spec(args, n)
        grid = [{}]
        for pool in pools:
            grid = [dict(point, **{k: v}) for point in grid for k, v in pool]
        for params in grid:
            try:
                result = check(args.id, spec, params)
            except ValueError as exc:
                args._parser.error(str(exc))
            shown = " ".join("%s=%d" % (p, params[p])
                             for p in desc.params) or "-"
            sides = "%s %s %s" % (result.lhs,
                                  "=" if result.passed else "!=", result.rhs)
            rows.append([args.id, result.sequence, shown, sides,
                         "PASS" if result.passed else "FAIL"])
            failures += 0 if result.passed else 1
    _emit(args, "check", {"id": args.id, "points": len(rows)}, rows)
    return 0 if failures == 0 else 1


def _grid_config(args) -> GridConfig:
    return GridConfig(
        n_values=tuple(_parse_values(args, args.n or "2..6")),
        r_values=tuple(_parse_values(args, args.r or "-10..10")),
        s_values=tuple(_parse_values(args, args.s or "-10..10")),
        k_values=tuple(_parse_values(args, args.k or "0..8")),
        seed_sets=args.seed_sets,
        rng_seed=args.rng_seed,
        include_zero=not args.no_zero_seq)


def _check_grid(args) -> int:
    cfg = _grid_config(args)
    reports = run_grid(cfg=cfg, jobs=args.jobs)
    rows = [[rep.identity_id, rep.points, len(rep.failures),
             "ok" if rep.ok else "FAIL"] for rep in reports]
    _emit(args, "check-all",
          {"identities": len(reports),
           "points": sum(rep.points for rep in reports)}, rows)
    bad = [rep for rep in reports if not rep.ok]
    for rep in bad:
        first = rep.failures[0]
        print("%s: %s %s: %s != %s"
              % (rep.identity_id, first["sequence"], first["params"],
                 first["lhs"], first["rhs"]), file=sys.stderr)
    return 1 if bad else 0


def _check_adjudicate(args) -> int:
    n_values = tuple(_parse_values(args, args.n or "2..6"))
    rows = []
    for row in adjudicate(n_values=n_values):
        example = ""
        if row.example is not None:
            example = "%s %s: %s != %s" % (
                row.example["sequence"], row.example["params"],
                row.example["lhs"], row.example["rhs"])
        rows.append([row.topic, row.identity_id, row.reading, row.n,
                     row.points, row.failures, example])
    _emit(args, "adjudicate", {"n": args.n or "2..6"}, rows)
    return 0


def _bench_one(label, func, repeat):
    best = None
    value = None
    mults = None
    for _ in range(max(1, repeat)):
        start = time.perf_counter()
        value, mults = func()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return [label, "%.3f" % (best * 1000.0),
            "-" if mults is None else mults], value


def _cmd_bench(args) -> int:
    spec = _require_spec(args)
    algos = ("doubling", "matrix", "naive") if args.algo == "all" \
        else (args.algo,)
    if args.mod is None and abs(args.r) > EXACT_INDEX_LIMIT:
        args._parser.error(
            "exact benchmarking is limited to |r| <= %d; pass --mod"
            % EXACT_INDEX_LIMIT)
    if args.algo == "naive" and abs(args.r) > NAIVE_WALK_LIMIT:
        args._parser.error(
            "the naive evaluator walks every term; |r| <= %d only"
            % NAIVE_WALK_LIMIT)

    def run_doubling():
        ring = _ring_from(args)
        return term_at(spec, args.r, ring), ring.mult_count

    def run_matrix():
        ring = _ring_from(args)
        return matrix_power_oracle(spec, args.r, ring), ring.mult_count

    def run_naive():
        value = TermCache(spec).term(args.r)
        if args.mod is not None:
            value %= args.mod
        return value, None

    runners = {"doubling": run_doubling, "matrix": run_matrix,
               "naive": run_naive}
    rows = []
    values = {}
    doubling_mults = None
    for algo in algos:
        if algo == "naive" and abs(args.r) > NAIVE_WALK_LIMIT:
            print("skipping naive: |r| > %d" % NAIVE_WALK_LIMIT,
                  file=sys.stderr)
            continue
        row, value = _bench_one(algo, runners[algo], args.repeat)
        values[algo] = value
        if algo == "doubling":
            doubling_mults = row[2]
        rows.append(row)
    agree = len(set(values.values())) <= 1
    ok = agree
    if doubling_mults is not None:
        bound = 4 * spec.n * spec.n * (max(abs(args.r), 2) - 1).bit_length()
        within = doubling_mults <= bound
        rows.append(["bound", "-", bound])
        rows.append(["within_bound", "-", "yes" if within else "no"])
        ok = ok and within
    rows.append(["values_agree", "-", "yes" if agree else "no"])
    params = {"sequence": spec.label(), "r": args.r, "algo": args.algo,
              "repeat": args.repeat}
    if args.mod is not None:
        params["mod"] = args.mod
    _emit(args, "bench", params, rows)
    return 0 if ok else 1


def _cmd_verify_bfile(args) -> int:
    spec = _require_spec(args)
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print("cannot read %s: %s" % (args.file, exc), file=sys.stderr)
        return 2
    try:
        entries = parse_bfile(text)
    except BFileFormatError as exc:
        print("%s: %s" % (args.file, exc), file=sys.stderr)
        return 2
    cache = TermCache(spec)
    rows = []
    mismatches = 0
    for entry in entries:
        expected = cache.term(entry.index + args.offset)
        good = entry.value == expected
        mismatches += 0 if good else 1
        rows.append([entry.index, entry.value, expected,
                     "ok" if good else "FAIL"])
    _emit(args, "verify-bfile",
          {"sequence": spec.label(), "file": args.file,
           "offset": args.offset, "entries": len(entries),
           "mismatches": mismatches}, rows)
    if mismatches:
        print("%s: %d of %d values disagree with the engine"
              % (args.file, mismatches, len(entries)), file=sys.stderr)
    return 0 if mismatches == 0 else 1


# ---------------------------------------------------------------------------
# parser assembly


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv",
                        help="output style (default tsv)")


def _add_sequence(parser, n_required: bool = True) -> None:
    parser.add_argument("--family", choices=("U", "V", "W"), default="U",
                        help="seed convention (default U)")
    parser.add_argument("--n", type=int, required=n_required,
                        help="recurrence order, at least 2")
    parser.add_argument("--seeds",
                        help="comma list of n seed values (family W only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nstep",
        description="Exact arithmetic for n-step recurrence sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="list terms over an inclusive index range")
    _add_sequence(p)
    p.add_argument("--from", dest="from_index", type=int, required=True,
                   help="first index")
    p.add_argument("--to", dest="to_index", type=int, required=True,
                   help="last index")
    _add_format(p)
    p.set_defaults(handler=_cmd_seq, _parser=p)

    p = sub.add_parser("table",
                       help="U and V rows at r = -4..10 for chosen orders")
    p.add_argument("--n", default="2,3,4,5",
                   help="orders, comma list or a..b (default 2,3,4,5)")
    _add_format(p)
    p.set_defaults(handler=_cmd_table, _parser=p)

    p = sub.add_parser("term", help="evaluate one term by index doubling")
    _add_sequence(p)
    p.add_argument("--r", type=int, required=True, help="term index")
    p.add_argument("--mod", type=int, help="reduce modulo this value")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the matrix power oracle")
    _add_format(p)
    p.set_defaults(handler=_cmd_term, _parser=p)

    p = sub.add_parser("check", help="verify identities from the registry")
    p.add_argument("--family", choices=("U", "V", "W"), default="U",
                   help="seed convention for single checks (default U)")
    p.add_argument("--seeds",
                   help="comma list of n seed values (family W only)")
    p.add_argument("--id", help="identity id (see --list)")
    p.add_argument("--n", help="orders: value, comma list or a..b")
    p.add_argument("--r", help="index values: value, comma list or a..b")
    p.add_argument("--s", help="shift values: value, comma list or a..b")
    p.add_argument("--k", help="length values: value, comma list or a..b")
    p.add_argument("--all", action="store_true",
                   help="run every identity over the parameter grid")
    p.add_argument("--list", action="store_true",
                   help="print the identity registry and exit")
    p.add_argument("--adjudicate", action="store_true",
                   help="compare disputed readings against amended forms")
    p.add_argument("--seed-sets", type=int, default=5,
                   help="random W seed tuples per order (default 5)")
    p.add_argument("--rng-seed", type=int, default=31415)
    p.add_argument("--no-zero-seq", action="store_true",
                   help="drop the all-zero W sequence from the roster")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for --all (default 1)")
    _add_format(p)
    p.set_defaults(handler=_cmd_check, _parser=p)

    p = sub.add_parser("gf", help="print the generating function")
    _add_sequence(p)
    p.add_argument("--terms", type=int, default=0,
                   help="also expand this many series coefficients")
    p.add_argument("--reduce", action="store_true",
                   help="cancel common polynomial factors first")
    _add_format(p)
    p.set_defaults(handler=_cmd_gf, _parser=p)

    p = sub.add_parser("sum", help="weighted partial sum, closed and direct")
    _add_sequence(p)
    p.add_argument("--x", required=True,
                   help="weight: integer, p/q or decimal")
    p.add_argument("--k", type=int, required=True,
                   help="sum runs over indices 0..k")
    _add_format(p)
    p.set_defaults(handler=_cmd_sum, _parser=p)

    p = sub.add_parser("bench", help="time the term evaluators")
    _add_sequence(p)
    p.add_argument("--r", type=int, required=True, help="term index")
    p.add_argument("--mod", type=int, help="reduce modulo this value")
    p.add_argument("--algo", choices=("all", "doubling", "matrix", "naive"),
                   default="all", help="which evaluators to run")
    p.add_argument("--repeat", type=int, default=3,
                   help="timing repetitions, best is kept (default 3)")
    _add_format(p)
    p.set_defaults(handler=_cmd_bench, _parser=p)

    p = sub.add_parser("verify-bfile",
                       help="check a b-file against the engine")
    _add_sequence(p)
    p.add_argument("--file", required=True, help="path to the b-file")
    p.add_argument("--offset", type=int, default=0,
                   help="sequence index = file index + offset")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify_bfile, _parser=p)

    return parser


# flags whose values can begin with a dash (ranges, rationals, seeds);
# argparse only recognizes bare negative integers, so fold the value in
_DASH_VALUE_FLAGS = ("--r", "--s", "--k", "--n", "--x", "--seeds")


def _merge_dash_values(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _DASH_VALUE_FLAGS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and not nxt.startswith("--"):
                out.append(token + "=" + nxt)
                i += 2
                continue
        out.append(token)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_dash_values(list(argv)))
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
