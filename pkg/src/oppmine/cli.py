"""Command-line frontend.

Subcommands: ``mine`` (frequent patterns), ``rules`` (strong rules), ``bench``
(all variants side by side, plot-ready CSV), ``features`` (per-sequence
support matrix), ``cluster`` (k-means plus NMI/homogeneity against manifest
labels).  Exit codes: 0 success, 1 usage, 2 I/O, 3 parse.  Set ``OPR_LOG`` to
a logging level name for verbosity.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from . import io as opio
from .baselines import opr_all_rules
from .features import feature_matrix, homogeneity, kmeans, nmi, rule_patterns, top_k_patterns
from .miner import VARIANTS, MinerConfig, mine_dataset, opr_mine_dataset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_PARSE = 3

log = logging.getLogger("oppmine")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract reserves 2 for
    # I/O failures, so route usage problems to exit code 1 instead
    def error(self, message: str):
        raise _UsageError(message)


def _add_input_flags(p: argparse.ArgumentParser, *, manifest_only: bool = False) -> None:
    if not manifest_only:
        p.add_argument("--input", help="single series file")
    p.add_argument("--manifest", help="JSON dataset manifest")
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.add_argument("--column", help="CSV column name to read")


def _add_miner_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--minsup", type=int, required=True, help="minimum occurrence count")
    p.add_argument("--variant", default="efo-miner",
                   choices=sorted({v.replace("_", "-") for v in VARIANTS}))
    p.add_argument("--max-len", type=int, default=None, help="pattern length cap")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output here instead of stdout")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report output")
    fmt.add_argument("--csv", action="store_true", help="CSV table output")
    p.add_argument("--emit-occurrences", action="store_true",
                   help="include occurrence end positions in reports")
    p.add_argument("--timings", action="store_true",
                   help="embed measured wall time (reports stop being byte-reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oppmine",
                     description="Mine order-preserving patterns and rules from time series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine frequent patterns")
    _add_input_flags(p_mine)
    _add_miner_flags(p_mine)
    _add_output_flags(p_mine)

    p_rules = sub.add_parser("rules", help="mine strong rules")
    _add_input_flags(p_rules)
    _add_miner_flags(p_rules)
    p_rules.add_argument("--minconf", type=float, required=True)
    p_rules.add_argument("--all-rules", action="store_true",
                         help="also list every rule with no confidence filter")
    _add_output_flags(p_rules)

    p_bench = sub.add_parser("bench", help="run every variant on the same input")
    _add_input_flags(p_bench)
    p_bench.add_argument("--minsup", type=int, required=True)
    p_bench.add_argument("--max-len", type=int, default=None)
    p_bench.add_argument("--out", help="write output here instead of stdout")
    p_bench.add_argument("--json", action="store_true", help="JSON instead of CSV")

    p_feat = sub.add_parser("features", help="emit a per-sequence support matrix")
    _add_input_flags(p_feat)
    p_feat.add_argument("--minsup", type=int, required=True)
    p_feat.add_argument("--max-len", type=int, default=None)
    p_feat.add_argument("--features", choices=["rules", "topk"], default="rules")
    p_feat.add_argument("--minconf", type=float, default=0.5)
    p_feat.add_argument("--top-k", type=int, default=None)
    p_feat.add_argument("--out", help="write output here instead of stdout")

    p_clu = sub.add_parser("cluster", help="cluster sequences and score against labels")
    _add_input_flags(p_clu, manifest_only=True)
    p_clu.add_argument("--minsup", type=int, required=True)
    p_clu.add_argument("--max-len", type=int, default=None)
    p_clu.add_argument("--features", choices=["rules", "topk"], default="rules")
    p_clu.add_argument("--minconf", type=float, default=0.5)
    p_clu.add_argument("--top-k", type=int, default=None)
    p_clu.add_argument("--k", type=int, required=True, help="number of clusters")
    p_clu.add_argument("--seed", type=int, default=0)
    p_clu.add_argument("--out", help="write output here instead of stdout")
    return parser


def _load_inputs(args) -> tuple[list[list[float]], list[str] | None, dict]:
    if getattr(args, "input", None) and getattr(args, "manifest", None):
        raise _UsageError("--input and --manifest are mutually exclusive")
    if getattr(args, "input", None):
        series = opio.load_series(args.input, args.format, args.column)
        return [series], None, {"input": args.input, "format": args.format}
    if getattr(args, "manifest", None):
        manifest = opio.load_manifest(args.manifest)
        dataset, labels = opio.load_dataset(manifest, args.column)
        return dataset, labels, {"manifest": args.manifest, "format": manifest.format}
    raise _UsageError("one of --input or --manifest is required")


def _make_config(args, minconf: float | None = None) -> MinerConfig:
    try:
        return MinerConfig(
            minsup=args.minsup,
            minconf=minconf if minconf is not None else 0.5,
            variant=getattr(args, "variant", "efo_miner"),
            max_pattern_len=getattr(args, "max_len", None),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_mine(args) -> int:
    dataset, _, echo = _load_inputs(args)
    cfg = _make_config(args)
    result = mine_dataset(dataset, cfg)
    if args.csv:
        _write(opio.frequent_csv(result, emit_occurrences=args.emit_occurrences), args.out)
    else:
        report = opio.build_report(cfg, result, emit_occurrences=args.emit_occurrences,
                                   include_timing=args.timings, input_echo=echo)
        _write(opio.report_json(report), args.out)
    return EXIT_OK


def _cmd_rules(args) -> int:
    dataset, _, echo = _load_inputs(args)
    cfg = _make_config(args, minconf=args.minconf)
    result, rules = opr_mine_dataset(dataset, cfg)
    if args.all_rules:
        rules = opr_all_rules(result)
    if args.csv:
        _write(opio.rules_csv(rules), args.out)
    else:
        report = opio.build_report(cfg, result, rules=rules,
                                   emit_occurrences=args.emit_occurrences,
                                   include_timing=args.timings, input_echo=echo)
        _write(opio.report_json(report), args.out)
    return EXIT_OK


def _cmd_bench(args) -> int:
    dataset, _, _ = _load_inputs(args)
    rows = []
    for variant in VARIANTS:
        cfg = MinerConfig(minsup=args.minsup, variant=variant, max_pattern_len=args.max_len)
        result = mine_dataset(dataset, cfg)
        rows.append({
            "variant": variant.replace("_", "-"),
            "frequent_patterns": len(result.frequent),
            "candidates_checked": result.stats.candidates_checked,
            "element_comparisons": result.stats.element_comparisons,
            "wall_time_ms": round(result.stats.wall_time_ms, 3),
        })
    if args.json:
        _write(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        buf = _stdio.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
        _write(buf.getvalue(), args.out)
    return EXIT_OK


def _select_patterns(args, dataset):
    cfg = _make_config(args, minconf=args.minconf)
    if args.features == "rules":
        _, rules = opr_mine_dataset(dataset, cfg)
        patterns = rule_patterns(rules)
    else:
        if args.top_k is None:
            raise _UsageError("--top-k is required with --features topk")
        result = mine_dataset(dataset, cfg)
        patterns = top_k_patterns(result, args.top_k)
    if not patterns:
        raise _UsageError("no patterns selected; lower --minsup or --minconf")
    return cfg, patterns


def _cmd_features(args) -> int:
    dataset, labels, _ = _load_inputs(args)
    _, patterns = _select_patterns(args, dataset)
    matrix = feature_matrix(dataset, patterns, labels)
    _write(opio.feature_matrix_csv(matrix), args.out)
    return EXIT_OK


def _cmd_cluster(args) -> int:
    dataset, labels, echo = _load_inputs(args)
    if labels is None:
        raise _UsageError("cluster requires a manifest with labels on every entry")
    cfg, patterns = _select_patterns(args, dataset)
    matrix = feature_matrix(dataset, patterns, labels)
    try:
        assignments = kmeans(matrix, args.k, seed=args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    label_ids = {name: i for i, name in enumerate(dict.fromkeys(labels))}
    truth = [label_ids[name] for name in labels]
    metrics = {
        "nmi": nmi(truth, assignments),
        "homogeneity": homogeneity(truth, assignments),
    }
    doc = {
        "schema": opio.REPORT_SCHEMA,
        "config": {"minsup": cfg.minsup, "minconf": cfg.minconf,
                   "features": args.features, "k": args.k, "seed": args.seed, **echo},
        "patterns": [opio.format_pattern(p) for p in patterns],
        "assignments": [int(a) for a in assignments],
        "metrics": metrics,
    }
    _write(opio.report_json(doc), args.out)
    return EXIT_OK


_COMMANDS = {
    "mine": _cmd_mine,
    "rules": _cmd_rules,
    "bench": _cmd_bench,
    "features": _cmd_features,
    "cluster": _cmd_cluster,
}


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get("OPR_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (opio.ParseError, opio.EmptySeries) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
