"""Figure rendering for evaluation and corpus reports.  Writes files, never shows windows."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .evaluation import EvaluationReport, EvaluationSample  # noqa: E402

RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}

EVALUATION_FIGURES = ("acceptance_per_participant", "acceptance_histogram", "final_results")


# blank out timestamps and version strings so repeated renders are byte-identical
_STABLE_METADATA = {
    "png": {"Software": None},
    "svg": {"Date": None, "Creator": None},
    "pdf": {"Creator": None, "Producer": None, "CreationDate": None},
}


def _save(fig, outdir: Path, name: str, fmt: str) -> Path:
    path = outdir / f"{name}.{fmt}"
    fig.savefig(path, format=fmt, metadata=_STABLE_METADATA.get(fmt))
    plt.close(fig)
    return path


def render_evaluation(sample: EvaluationSample, report: EvaluationReport, outdir,
                      fmt: str = "png") -> list[Path]:
    """Per-participant bars, the count histogram, and the two summary pies."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(7, 3))
        xs = range(1, report.n + 1)
        ax.bar(xs, sample.accepted_counts, color="0.35", width=0.7)
        ax.axhline(report.mean, color="C3", lw=1, ls="--", label=f"mean {report.mean:.3f}")
        ax.set_xlabel("participant")
        ax.set_ylabel("recommendations accepted")
        ax.set_ylim(0, report.set_size + 0.5)
        ax.set_xlim(0.3, report.n + 0.7)
        ax.legend(frameon=False, loc="upper right")
        paths.append(_save(fig, outdir, EVALUATION_FIGURES[0], fmt))

        fig, ax = plt.subplots(figsize=(4, 3))
        keys = sorted(report.histogram)
        ax.bar(keys, [report.histogram[k] for k in keys], color="0.35", width=0.7)
        ax.set_xticks(keys)
        ax.set_xlabel("recommendations accepted")
        ax.set_ylabel("participants")
        paths.append(_save(fig, outdir, EVALUATION_FIGURES[1], fmt))

        fig, (left, right) = plt.subplots(1, 2, figsize=(7.5, 3))
        above = report.above_threshold_fraction
        left.pie([above, 1 - above], labels=["above mean", "below mean"],
                 autopct="%1.0f%%", colors=["0.45", "0.8"], startangle=90)
        left.set_title("participants")
        rate = report.acceptance_rate
        right.pie([rate, 1 - rate], labels=["accepted", "rejected"],
                  autopct="%1.0f%%", colors=["0.45", "0.8"], startangle=90)
        right.set_title("recommendations")
        paths.append(_save(fig, outdir, EVALUATION_FIGURES[2], fmt))
    return paths


def render_popularity(buckets: dict[str, int], outdir, fmt: str = "png") -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5, 3))
        labels = list(buckets)
        ax.bar(range(len(labels)), list(buckets.values()), color="0.35")
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=45, ha="right")
        ax.set_xlabel("tag popularity")
        ax.set_ylabel("tags")
        ax.set_yscale("symlog")
        return _save(fig, outdir, "tag_popularity", fmt)
