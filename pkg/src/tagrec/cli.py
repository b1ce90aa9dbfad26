"""Command-line interface: ``tagrec ingest | recommend | stats | evaluate``."""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from . import evaluation, ingest, metrics, store
from .model import Folksonomy, build_folksonomy
from .ranking import VECTOR_MODES, RankingConfig, Scorer

log = logging.getLogger("tagrec")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DATA = 0, 1, 2, 3
OUTPUTS = ("table", "json", "tsv")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


# -- rendering ------------------------------------------------------------

def _render(rows: list[dict], columns: list[str], output: str, payload=None) -> str:
    if output == "json":
        return json.dumps(payload if payload is not None else rows, indent=2, sort_keys=True) + "\n"
    if output == "tsv":
        lines = ["\t".join(columns)]
        lines += ["\t".join(_cell(r.get(c), full=True) for c in columns) for r in rows]
        return "\n".join(lines) + "\n"
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(v.rjust(w) if _numeric(v) else v.ljust(w)
                               for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cell(value, full: bool = False) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return repr(value) if full else f"{value:.4f}"
    return str(value)


def _numeric(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


# -- config ---------------------------------------------------------------

def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--repr-mode", choices=metrics.REPR_MODES)
    p.add_argument("--vector-mode", choices=VECTOR_MODES)
    p.add_argument("--pref-threshold", type=float)
    p.add_argument("--symmetric", action="store_true", default=None)


def _config(args, base: RankingConfig | None = None) -> RankingConfig:
    base = base or RankingConfig()
    overrides = {
        "repr_mode": args.repr_mode,
        "vector_mode": args.vector_mode,
        "pref_threshold": args.pref_threshold,
        "symmetric": args.symmetric,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    try:
        return dataclasses.replace(base, **overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands -------------------------------------------------------------

def cmd_ingest(args) -> int:
    cfg = _config(args)
    assignments, report = ingest.load_corpus(args.input, args.format)
    f = build_folksonomy(assignments)
    store.save_index(args.index, f, cfg)

    report_json = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if args.report:
        Path(args.report).write_text(report_json, encoding="utf-8")
    else:
        sys.stderr.write(report_json)
    if len(f) == 0:
        log.warning("corpus is empty; index written with no assignments")

    summary = {
        "records": report.records,
        "malformed": len(report.malformed),
        "rejected_tags": len(report.rejected_tags),
        **store.corpus_stats(f),
    }
    rows = [{"stat": k, "value": v} for k, v in summary.items()]
    sys.stdout.write(_render(rows, ["stat", "value"], args.output, summary))
    return EXIT_OK


def recommendation_rows(f: Folksonomy, cfg: RankingConfig, user: str, k: int) -> list[dict]:
    result = Scorer(f, cfg).recommend(user, k)
    rows = []
    for rank, item in enumerate(result.items, start=1):
        fac = item.factors
        rows.append({
            "rank": rank,
            "resource": item.candidate,
            "score": item.score,
            "anchor": item.anchor,
            "ds_anchor": fac.ds_anchor,
            "ds_candidate": fac.ds_candidate,
            "cosine": fac.cosine,
            "boost_tag": fac.boost_tag,
            "boost": fac.boost,
        })
    return rows


def cmd_recommend(args) -> int:
    if args.top_k < 1:
        raise UsageError("--top-k must be >= 1")
    f, stored = store.load_index(args.index)
    cfg = _config(args, stored)
    if not f.resources_of_user(args.user):
        log.warning("user %r has no bookmarks in the index; nothing to recommend", args.user)
    rows = recommendation_rows(f, cfg, args.user, args.top_k)
    columns = ["rank", "resource", "score", "anchor"]
    if args.explain:
        columns += ["ds_anchor", "ds_candidate", "cosine", "boost_tag", "boost"]
    else:
        rows = [{c: r[c] for c in columns} for r in rows]
    payload = {
        "user": args.user,
        "k": args.top_k,
        "config": dataclasses.asdict(cfg),
        "items": rows,
    }
    sys.stdout.write(_render(rows, columns, args.output, payload))
    return EXIT_OK


def popularity_buckets(f: Folksonomy, bins: int = 10) -> dict[str, int]:
    """Count tags per popularity interval (i/bins, (i+1)/bins]."""
    out = {f"{i / bins:.1f}-{(i + 1) / bins:.1f}": 0 for i in range(bins)}
    labels = list(out)
    n = f.resource_count
    for tag in f.vocabulary:
        carrying = len(f.resources_of_tag(tag))
        # integer ceiling keeps bucket edges exact
        out[labels[(carrying * bins + n - 1) // n - 1]] += 1
    return out


def corpus_statistics(f: Folksonomy, top: int = 10) -> dict:
    stats = store.corpus_stats(f)
    top_tags = []
    if f.resource_count:
        ranked = sorted(f.vocabulary, key=lambda t: (-len(f.resources_of_tag(t)), t))
        top_tags = [{"tag": t, "popularity": metrics.popularity(t, f)} for t in ranked[:top]]
    stats["top_tags"] = top_tags
    stats["popularity_histogram"] = popularity_buckets(f) if f.resource_count else {}
    return stats


def cmd_stats(args) -> int:
    f, _ = store.load_index(args.index)
    stats = corpus_statistics(f)
    if args.output == "json":
        sys.stdout.write(json.dumps(stats, indent=2, sort_keys=True) + "\n")
    else:
        rows = [{"stat": k, "value": stats[k]} for k in ("users", "resources", "tags", "assignments")]
        out = _render(rows, ["stat", "value"], args.output)
        if stats["top_tags"]:
            out += "\n" + _render(stats["top_tags"], ["tag", "popularity"], args.output)
        sys.stdout.write(out)
    if args.plot_dir and stats["popularity_histogram"]:
        from .plotting import render_popularity

        path = render_popularity(stats["popularity_histogram"], args.plot_dir, args.plot_format)
        log.info("wrote %s", path)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    if args.set_size < 1:
        raise UsageError("--set-size must be >= 1")
    sample = evaluation.load_acceptances(args.acceptances, args.set_size)
    report = evaluation.compute_report(sample)
    d = report.to_dict()
    if args.output == "json":
        sys.stdout.write(json.dumps(d, indent=2, sort_keys=True) + "\n")
    else:
        keys = ["n", "set_size", "mean", "sample_std_dev", "standard_error", "acceptance_rate",
                "above_threshold", "above_threshold_fraction", "verdict"]
        out = _render([{"stat": k, "value": d[k]} for k in keys], ["stat", "value"], args.output)
        hist = [{"accepted": k, "participants": v} for k, v in report.histogram.items()]
        out += "\n" + _render(hist, ["accepted", "participants"], args.output)
        sys.stdout.write(out)
    if args.plot_dir:
        from .plotting import render_evaluation

        for path in render_evaluation(sample, report, args.plot_dir, args.plot_format):
            log.info("wrote %s", path)
    return EXIT_OK


# -- entry point ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tagrec", description="Tag-based personalized bookmark recommendation.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="parse a bookmark file into an index")
    p.add_argument("input")
    p.add_argument("--format", choices=ingest.FORMATS, default="jsonl")
    p.add_argument("--index", required=True, help="index file to write")
    p.add_argument("--report", help="write the ingest report here instead of stderr")
    p.add_argument("--output", choices=OUTPUTS, default="table")
    _add_config_flags(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("recommend", help="top-k recommendations for one user")
    p.add_argument("--index", required=True)
    p.add_argument("--user", required=True)
    p.add_argument("--top-k", type=int, default=5)
    p.add_argument("--explain", action="store_true")
    p.add_argument("--output", choices=OUTPUTS, default="table")
    _add_config_flags(p)
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--index", required=True)
    p.add_argument("--output", choices=OUTPUTS, default="table")
    p.add_argument("--plot-dir", help="also render the tag popularity histogram here")
    p.add_argument("--plot-format", choices=("png", "pdf", "svg"), default="png")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("evaluate", help="acceptance statistics from a judgement file")
    p.add_argument("acceptances")
    p.add_argument("--set-size", type=int, default=5)
    p.add_argument("--output", choices=OUTPUTS, default="table")
    p.add_argument("--plot-dir", help="also render per-participant, histogram and summary figures here")
    p.add_argument("--plot-format", choices=("png", "pdf", "svg"), default="png")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tagrec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tagrec: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:  # format, range and schema errors
        print(f"tagrec: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
