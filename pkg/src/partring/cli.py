"""Command line entry point: ``partring <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 failed internal check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys

from partring import factorization as fz
from partring import graphs, modular
from partring.expr import ExprSyntaxError, eval_expr
from partring.numtheory import sigma_pentagonal_table, sigma_table
from partring.partition import Partition, add, format_partition, mul, partitions_of
from partring.partition_count import (
    ENGINES,
    ConsistencyError,
    first_disagreement,
    hardy_ramanujan,
    p_pentagonal,
    partition_table,
)
from partring.viz import render_svg

EXIT_USAGE = 1
EXIT_CHECK = 2


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """Raised after output is produced when a command's self-check fails."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(args, command: str, rows: list[dict], meta: dict | None = None) -> None:
    if args.format == "json":
        doc = {"command": command, **(meta or {}), "rows": rows}
        _emit(args, json.dumps(doc, indent=2))
        return
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    _emit(args, buf.getvalue())


def _partition_arg(text: str) -> Partition:
    try:
        return eval_expr(text)
    except ExprSyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def cmd_pcount(args) -> None:
    if args.engine == "all":
        tables = [partition_table(args.n_max, e) for e in ENGINES]
        bad = first_disagreement(tables)
        table = tables[0]
        check = "OK" if bad is None else f"disagreement at n={bad}"
    else:
        table = partition_table(args.n_max, args.engine)
        bad, check = None, None
    rows = [{"n": n, "p": v} for n, v in enumerate(table.values)]
    meta = {"engine": args.engine}
    if check:
        meta["check"] = check
    _table(args, "pcount", rows, meta)
    if check:
        print(check, file=sys.stderr)
    if bad is not None:
        raise CheckFailed(f"engines disagree at n={bad}")


def cmd_sigma(args) -> None:
    if args.n_max < 1:
        raise UsageError("n_max must be >= 1")
    direct = sigma_table(args.n_max)
    pent = sigma_pentagonal_table(args.n_max)
    rows = [
        {"n": n, "sigma": direct[n], "sigma_pentagonal": pent[n]}
        for n in range(1, args.n_max + 1)
    ]
    _table(args, "sigma", rows)
    bad = [r["n"] for r in rows if r["sigma"] != r["sigma_pentagonal"]]
    if bad:
        raise CheckFailed(f"pentagonal recursion disagrees with divisor sum at n={bad[0]}")


def cmd_eval(args) -> None:
    value = _partition_arg(args.expression)
    if args.format == "json":
        _emit(args, json.dumps({"expression": args.expression, "value": list(value.parts)}))
    else:
        _emit(args, format_partition(value))


def _prime_verdict(a: Partition) -> tuple[str, dict]:
    if not a.parts or fz.is_unit(a):
        raise UsageError(f"primality is undefined for {format_partition(a)}")
    wit = fz.factor_search(a)
    covered = fz.sufficient_condition(a)
    info = {
        "partition": list(a.parts),
        "prime": wit is None,
        "sufficient_condition": covered,
        "witness": None if wit is None else [list(wit.left.parts), list(wit.right.parts)],
    }
    if wit is not None:
        text = f"composite: {format_partition(wit.left)}*{format_partition(wit.right)}"
    elif covered:
        text = "prime (sufficient condition)"
    else:
        text = "prime (not covered by sufficient condition)"
    return text, info


def cmd_prime(args) -> None:
    text, info = _prime_verdict(_partition_arg(args.partition))
    _emit(args, json.dumps(info) if args.format == "json" else text)


def cmd_factor(args) -> None:
    a = _partition_arg(args.partition)
    text, info = _prime_verdict(a)
    if args.format == "json":
        _emit(args, json.dumps(info))
    elif info["witness"] is None:
        _emit(args, "irreducible")
    else:
        _emit(args, text.split(": ", 1)[1])


def cmd_gcd(args) -> None:
    a, b = _partition_arg(args.a), _partition_arg(args.b)
    if not a.parts or not b.parts:
        raise UsageError("common divisors need nonempty partitions")
    cd = fz.common_divisors(a, b)
    maximal = sorted(cd.maximal)
    if args.format == "json":
        _emit(args, json.dumps({
            "representative": list(cd.representative.parts),
            "maximal": [list(d.parts) for d in maximal],
            "common": [list(d.parts) for d in sorted(cd.all)],
        }))
    else:
        lines = [
            format_partition(cd.representative),
            "maximal: " + " ".join(format_partition(d) for d in maximal),
            "common: " + " ".join(format_partition(d) for d in sorted(cd.all)),
        ]
        _emit(args, "\n".join(lines))


def cmd_census(args) -> None:
    if args.max_weight < 1:
        raise UsageError("max_weight must be >= 1")
    if args.max_weight > 18:
        print(f"warning: census to weight {args.max_weight} may be slow", file=sys.stderr)
    rows = [vars(r) for r in fz.census(args.max_weight)]
    _table(args, "census", rows)
    fails = fz.sufficient_condition_failures(args.max_weight)
    if fails:
        a, wit = fails[0]
        print(
            f"note: {len(fails)} partitions meet the prime norm/length test yet factor, "
            f"e.g. {format_partition(a)} = {format_partition(wit.left)}*{format_partition(wit.right)}",
            file=sys.stderr,
        )


def random_partition(rng: random.Random, max_norm: int) -> Partition:
    w = rng.randint(0, max_norm)
    return rng.choice(list(partitions_of(w)))


def graphcheck(trials: int, seed: int, max_norm: int = 8) -> tuple[int, list[str]]:
    """Check join/product functoriality on random pairs; return (passed, failure notes)."""
    rng = random.Random(seed)
    passed, failures = 0, []
    for _ in range(trials):
        a, b = random_partition(rng, max_norm), random_partition(rng, max_norm)
        ga, gb = graphs.graph_of(a), graphs.graph_of(b)
        ok_add = graphs.recover(graphs.zykov_join(ga, gb)) == add(a, b)
        ok_mul = graphs.recover(graphs.sabidussi_product(ga, gb)) == mul(a, b)
        if ok_add and ok_mul:
            passed += 1
        else:
            failures.append(f"{format_partition(a)}, {format_partition(b)}")
    return passed, failures


def cmd_graphcheck(args) -> None:
    passed, failures = graphcheck(args.trials, args.seed)
    _emit(args, f"{passed}/{args.trials} OK")
    if failures:
        raise CheckFailed("functoriality fails for " + "; ".join(failures[:5]))


def cmd_asymptotics(args) -> None:
    ns = args.n
    if any(n < 1 for n in ns):
        raise UsageError("n must be >= 1")
    table = p_pentagonal(max(ns))
    rows = []
    for n in ns:
        rep = hardy_ramanujan(n, table)
        rows.append({
            "n": n,
            "p": rep.p_of_n,
            "hr_estimate": rep.hr_estimate,
            "ratio": rep.ratio,
            "nth_root": rep.nth_root,
            "root_bound": math.exp(math.pi * math.sqrt(2 / (3 * n))),
        })
    _table(args, "asymptotics", rows)


def _mod_element(text: str, params: modular.ModRingParams) -> modular.ModPartition:
    return modular.project(_partition_arg(text), params)


def _mod_text(x: modular.ModPartition) -> str:
    return "{" + ", ".join(f"{r}:{c}" for r, c in x.coeffs) + "}"


def cmd_modring(args) -> None:
    try:
        params = modular.ModRingParams(args.N, args.M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.action == "rho":
        rep = modular.rho_experiment(params, args.trials, args.seed)
        rows = [
            {"trial": i, "tail": t, "cycle": c}
            for i, (t, c) in enumerate(zip(rep.tails, rep.cycles))
        ]
        summary = rep.to_dict()
        del summary["tails"], summary["cycles"]
        if args.format == "csv":
            _table(args, "modring-rho", rows)
        else:
            _emit(args, json.dumps({"command": "modring-rho", **summary, "rows": rows}, indent=2))
        return
    if args.action == "project":
        x = _mod_element(args.operands[0], params)
    elif args.action in ("add", "mul"):
        if len(args.operands) != 2:
            raise UsageError(f"{args.action} takes two partitions")
        u, v = (_mod_element(t, params) for t in args.operands)
        x = modular.mod_add(u, v) if args.action == "add" else modular.mod_mul(u, v)
    else:  # pow
        if len(args.operands) != 2 or not args.operands[1].isdigit():
            raise UsageError("pow takes a partition and a nonnegative exponent")
        x = modular.mod_pow(_mod_element(args.operands[0], params), int(args.operands[1]))
    if args.format == "json":
        _emit(args, json.dumps({"N": args.N, "M": args.M, "coeffs": {str(r): c for r, c in x.coeffs}}))
    else:
        _emit(args, _mod_text(x))


def cmd_viz(args) -> None:
    if not 1 <= args.n <= 30:
        raise UsageError("viz needs 1 <= n <= 30")
    _emit(args, render_svg(args.n))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="partring", description="Partition semiring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("pcount", cmd_pcount, "table of p(0..n_max)")
    p.add_argument("n_max", type=int)
    p.add_argument("--engine", choices=[*ENGINES, "all"], default="pent")

    p = add("sigma", cmd_sigma, "divisor sums, directly and by the pentagonal recursion")
    p.add_argument("n_max", type=int)

    p = add("eval", cmd_eval, "evaluate a partition expression")
    p.add_argument("expression")

    p = add("prime", cmd_prime, "multiplicative primality of a partition")
    p.add_argument("partition")

    p = add("factor", cmd_factor, "factor a partition into two non-units")
    p.add_argument("partition")

    p = add("gcd", cmd_gcd, "maximal common divisors of two partitions")
    p.add_argument("a")
    p.add_argument("b")

    p = add("census", cmd_census, "count multiplicative primes per weight")
    p.add_argument("max_weight", type=int, nargs="?", default=18)

    p = add("graphcheck", cmd_graphcheck, "verify join/product functoriality on random pairs")
    p.add_argument("trials", type=int)

    p = add("asymptotics", cmd_asymptotics, "Hardy-Ramanujan ratio and n-th root of p(n)")
    p.add_argument("n", type=int, nargs="+")

    p = add("modring", cmd_modring, "finite quotient ring R(N, M)")
    p.add_argument("N", type=int)
    p.add_argument("M", type=int)
    p.add_argument("action", choices=["project", "add", "mul", "pow", "rho"])
    p.add_argument("operands", nargs="*")
    p.add_argument("--trials", type=int, default=100)

    p = add("viz", cmd_viz, "SVG pile of all partitions of n")
    p.add_argument("n", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "modring" and args.action != "rho" and not args.operands:
            parser.error(f"modring {args.action} needs operands")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CheckFailed, ConsistencyError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    return 0


if __name__ == "__main__":
    sys.exit(main())
