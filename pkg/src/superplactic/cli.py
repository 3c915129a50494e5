"""Command-line front end.

Every output command takes ``--format text|json``.  Usage errors exit with
status 2, failed checks with status 1.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys

from .alphabet import AlphabetError, WordParseError, load_alphabet, parse_alphabet
from .columns import (
    StepLimitExceeded,
    check_confluence,
    critical_branchings,
    enumerate_columns,
    format_column_word,
    gamma_rule,
    normal_form,
    parse_column_word,
    precolumn_rules,
)
from .insertion import insert_left, insert_right, p_symbol_left, p_symbol_right
from .knuth import ClassSizeExceeded, OracleMismatch, are_congruent, knuth_rules
from .syzygy import DiagramMismatch, build_diagram, reduced_family, sphere_factorizations
from .tableau import TableauError, columns_of, from_json, read_col, read_row, render, to_json
from .verify import SUITES, BoundsTooLarge, run_suite

log = logging.getLogger("superplactic")


class UsageError(Exception):
    pass


def _alphabet(arg):
    # a path, or an inline JSON object for quick use
    try:
        if arg.lstrip().startswith("{"):
            return parse_alphabet(arg)
        return load_alphabet(arg)
    except (OSError, json.JSONDecodeError, AlphabetError) as exc:
        raise UsageError(f"bad alphabet {arg!r}: {exc}") from None


def _word(alpha, text):
    try:
        return alpha.parse_word(text)
    except WordParseError as exc:
        raise UsageError(str(exc)) from None


def _letter(alpha, text):
    w = _word(alpha, text)
    if len(w) != 1:
        raise UsageError(f"expected a single letter, got {text!r}")
    return w[0]


def _emit(obj):
    print(json.dumps(obj, ensure_ascii=False))


def _tableau_doc(alpha, t):
    return {
        "tableau": to_json(alpha, t),
        "shape": list(t.shape),
        "read_row": alpha.format_word(read_row(t)),
        "read_col": alpha.format_word(read_col(t)),
    }


def _print_tableau(args, alpha, t, extra):
    doc = dict(extra, **_tableau_doc(alpha, t))
    if args.format == "json":
        _emit(doc)
    else:
        print(render(alpha, t) if t.rows else "(empty)")
        print(json.dumps(doc["tableau"], ensure_ascii=False))
    if getattr(args, "plot", None):
        from .plots import plot_tableau

        plot_tableau(alpha, t, args.plot, title=extra.get("word"))


# --- subcommands -------------------------------------------------------------


def cmd_psymbol(args):
    alpha = _alphabet(args.alphabet)
    w = _word(alpha, args.word)
    t = p_symbol_left(alpha, w) if args.direction == "left" else p_symbol_right(alpha, w)
    _print_tableau(args, alpha, t, {"word": alpha.format_word(w), "direction": args.direction})
    return 0


def cmd_insert(args):
    alpha = _alphabet(args.alphabet)
    try:
        t = from_json(alpha, args.tableau)
    except (json.JSONDecodeError, KeyError, TypeError, WordParseError, TableauError) as exc:
        raise UsageError(f"bad tableau: {exc}") from None
    x = _letter(alpha, args.letter)
    out = insert_left(alpha, x, t) if args.side == "left" else insert_right(alpha, t, x)
    _print_tableau(args, alpha, out, {"letter": alpha.names[x], "side": args.side})
    return 0


def cmd_congruent(args):
    alpha = _alphabet(args.alphabet)
    w1, w2 = _word(alpha, args.w1), _word(alpha, args.w2)
    try:
        same = are_congruent(alpha, w1, w2, method=args.method)
    except OracleMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ClassSizeExceeded as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit({"w1": args.w1, "w2": args.w2, "method": args.method, "congruent": same})
    else:
        print("congruent" if same else "not congruent")
    return 0 if same else 1


def cmd_nf(args):
    alpha = _alphabet(args.alphabet)
    try:
        cw = parse_column_word(alpha, args.column_word)
    except (ValueError, WordParseError) as exc:
        raise UsageError(str(exc)) from None
    try:
        nf, path = normal_form(alpha, cw, args.strategy, seed=args.seed)
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    fmt = lambda c: format_column_word(alpha, c)
    steps = []
    for (pos, rule), word in zip(path.steps, path.words()[1:]):
        steps.append({"position": pos, "rule": rule.format(alpha), "word": fmt(word)})
    if args.format == "json":
        doc = {"start": fmt(path.start), "normal_form": fmt(nf), "strategy": args.strategy}
        if args.trace:
            doc["steps"] = steps
        _emit(doc)
        return 0
    if args.trace:
        print(fmt(path.start))
        for s in steps:
            print(f"  [{s['position']}] {s['rule']}  ->  {s['word']}")
    print(fmt(nf))
    return 0


def _rule_list(alpha, kind, max_len):
    fmt = lambda c: format_column_word(alpha, c)
    if kind == "knuth":
        return [
            {"kind": r.kind, "lhs": alpha.format_word(r.lhs), "rhs": alpha.format_word(r.rhs)}
            for r in knuth_rules(alpha)
        ]
    if kind == "gamma":
        out = []
        cols = enumerate_columns(alpha, max_len)
        for u in cols:
            for v in cols:
                r = gamma_rule(alpha, u, v)
                if r is not None:
                    out.append({"kind": "T" + r.subtype.value, "lhs": fmt(r.lhs), "rhs": fmt(r.rhs)})
        return out
    return [
        {"kind": "merge" if len(rhs) == 1 else "two-column", "lhs": fmt(lhs), "rhs": fmt(rhs)}
        for lhs, rhs in precolumn_rules(alpha, max_len).items()
    ]


def cmd_rules(args):
    alpha = _alphabet(args.alphabet)
    rules = _rule_list(alpha, args.kind, args.max_col_len)
    if args.format == "json":
        _emit({"kind": args.kind, "rules": rules})
    else:
        for r in rules:
            print(f"{r['lhs']} => {r['rhs']}")
    return 0


def _triple(alpha, u, v, t):
    return format_column_word(alpha, (u, v, t))


def cmd_branchings(args):
    alpha = _alphabet(args.alphabet)
    status = 0
    for u, v, t in critical_branchings(alpha, args.max_col_len):
        p1, p2, ok = check_confluence(alpha, u, v, t)
        if args.check:
            ok = ok and p1.end == tuple(columns_of(p_symbol_right(alpha, u + v + t)))
        if not ok:
            status = 1
        nf = format_column_word(alpha, p1.end)
        if args.format == "json":
            _emit({"triple": _triple(alpha, u, v, t), "confluent": ok, "nf": nf,
                   "steps": [len(p1), len(p2)]})
        else:
            print(f"{_triple(alpha, u, v, t)}  confluent={ok}  nf={nf}")
    return status if args.check else 0


def cmd_syzygies(args):
    alpha = _alphabet(args.alphabet)
    triples = critical_branchings(alpha, args.max_col_len)
    if args.reduced:
        triples = reduced_family(alpha, args.max_col_len, triples)
    status = 0
    for u, v, t in triples:
        rec = {"triple": _triple(alpha, u, v, t)}
        try:
            d = build_diagram(alpha, u, v, t)
            rec["form"], rec["commutes"] = d.form.tag, d.commutes
        except DiagramMismatch as exc:
            print(f"error: {exc}", file=sys.stderr)
            rec["form"], rec["commutes"] = "?", False
        ok = rec["commutes"]
        if args.spheres and len(u) >= 2:
            report = sphere_factorizations(alpha, u[0], u[1:], v, t, strict=False)
            rec["spheres"] = report.failures
            ok = ok and report.passed
        status |= not ok
        if args.format == "json":
            _emit(rec)
        else:
            line = f"{rec['triple']}  form={rec['form']}  commutes={rec['commutes']}"
            if "spheres" in rec:
                line += "  spheres=" + (",".join(rec["spheres"]) or "ok")
            print(line)
    return int(status)


def _suite_names(args):
    names = args.suite or ["all"]
    if "all" in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)} or 'all'")
    return names


def _run_suites(args):
    reports = []
    overrides = {
        "alphabet_size": args.alphabet_size,
        "all_parities": args.all_parities,
        "max_word_len": args.max_word_len,
        "max_col_len": args.max_col_len,
        "max_generators": args.max_generators,
        "seed": args.seed,
    }
    for name in _suite_names(args):
        try:
            reports.append(run_suite(name, force=args.force, **overrides))
        except BoundsTooLarge as exc:
            raise UsageError(str(exc)) from None
    return reports


def cmd_verify(args):
    reports = _run_suites(args)
    for r in reports:
        if args.format == "json":
            _emit(r.to_json(timing=args.timing))
        else:
            line = r.summary()
            if args.timing:
                line += f" ({r.wall_time:.1f}s)"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def cmd_report(args):
    from .plots import plot_form_counts, plot_suite_summary, plot_tableau

    reports = _run_suites(args)
    os.makedirs(args.out, exist_ok=True)
    tsv = os.path.join(args.out, "summary.tsv")
    with open(tsv, "w", newline="", encoding="utf-8") as fh:
        out = csv.writer(fh, delimiter="\t", lineterminator="\n")
        out.writerow(["suite", "passed", "cases", "failures", "alphabets"])
        for r in reports:
            out.writerow([r.suite, r.passed, r.cases, r.failure_count, len(r.alphabets)])
    written = [tsv]
    with open(os.path.join(args.out, "reports.json"), "w", encoding="utf-8") as fh:
        json.dump([r.to_json() for r in reports], fh, indent=1, ensure_ascii=False)
        fh.write("\n")
    written.append(fh.name)
    written.append(plot_suite_summary(reports, os.path.join(args.out, "suites.png")))
    for r in reports:
        if r.suite == "syzygy_forms" and r.details.get("forms"):
            written.append(plot_form_counts(r.details["forms"], os.path.join(args.out, "forms.png")))
    if args.alphabet and args.word:
        alpha = _alphabet(args.alphabet)
        w = _word(alpha, args.word)
        written.append(
            plot_tableau(alpha, p_symbol_right(alpha, w), os.path.join(args.out, "tableau.png"),
                         title=alpha.format_word(w))
        )
    for path in written:
        print(path)
    return 0 if all(r.passed for r in reports) else 1


# --- parser ------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="superplactic", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log every failing case")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, alphabet=True):
        sp = sub.add_parser(name, help=help)
        if alphabet:
            sp.add_argument("--alphabet", required=True, help="alphabet JSON file (or inline JSON)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=fn)
        return sp

    sp = add("psymbol", cmd_psymbol, "P-symbol of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--direction", choices=("left", "right"), default="right")
    sp.add_argument("--plot", metavar="PNG", help="also draw the tableau")

    sp = add("insert", cmd_insert, "insert one letter into a tableau")
    sp.add_argument("--tableau", required=True, help='tableau JSON, e.g. {"rows": [["1","2"]]}')
    sp.add_argument("--letter", required=True)
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp.add_argument("--plot", metavar="PNG")

    sp = add("congruent", cmd_congruent, "decide the super plactic congruence")
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp.add_argument("--method", choices=("cross_section", "bfs", "both"), default="cross_section")

    sp = add("nf", cmd_nf, "normal form of a column word")
    sp.add_argument("--column-word", required=True, help='columns separated by "|"')
    sp.add_argument("--strategy", choices=("leftmost", "rightmost", "random"), default="leftmost")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trace", action="store_true")

    sp = add("rules", cmd_rules, "list rewriting rules")
    sp.add_argument("--kind", choices=("knuth", "gamma", "precolumn"), default="knuth")
    sp.add_argument("--max-col-len", type=int, default=2)

    sp = add("branchings", cmd_branchings, "critical branchings of the column system")
    sp.add_argument("--max-col-len", type=int, default=2)
    sp.add_argument("--check", action="store_true", help="exit 1 unless every branching closes on the P-symbol")

    sp = add("syzygies", cmd_syzygies, "classify confluence diagrams")
    sp.add_argument("--max-col-len", type=int, default=2)
    sp.add_argument("--reduced", action="store_true", help="only branchings with a one-letter first column")
    sp.add_argument("--spheres", action="store_true", help="also check the factorization identities")

    for name, fn, help in (
        ("verify", cmd_verify, "run exhaustive verification suites"),
        ("report", cmd_report, "run suites and write summary.tsv plus figures"),
    ):
        sp = add(name, fn, help, alphabet=False)
        sp.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} or 'all' (repeatable)")
        sp.add_argument("--alphabet-size", type=int)
        sp.add_argument("--all-parities", action=argparse.BooleanOptionalAction, default=None)
        sp.add_argument("--max-word-len", type=int)
        sp.add_argument("--max-col-len", type=int)
        sp.add_argument("--max-generators", type=int)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--force", "--yes-i-mean-it", action="store_true", help="lift the case-count limit")
        sp.add_argument("--timing", action="store_true", help="include wall time (not reproducible)")
        if name == "report":
            sp.add_argument("--out", required=True, help="output directory")
            sp.add_argument("--alphabet", help="with --word, also draw that P-symbol")
            sp.add_argument("--word")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
