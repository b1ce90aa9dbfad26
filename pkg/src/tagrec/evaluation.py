"""Acceptance statistics for a replayed recommendation study.

Each participant receives ``set_size`` recommendations and accepts some
number of them.  The report gives the mean acceptance, its standard error,
the overall acceptance rate, and a verdict.
"""

from __future__ import annotations

import math
import statistics
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

EXCELLENT_RATE = 0.80
SATISFACTORY_RATE = 0.50


class AcceptanceFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class EvaluationSample:
    accepted_counts: tuple[int, ...]
    set_size: int = 5

    def __post_init__(self):
        object.__setattr__(self, "accepted_counts", tuple(self.accepted_counts))
        if self.set_size < 1:
            raise ValueError(f"set_size must be >= 1, got {self.set_size}")
        for i, c in enumerate(self.accepted_counts):
            if not 0 <= c <= self.set_size:
                raise ValueError(f"participant {i}: count {c} outside 0..{self.set_size}")


@dataclass(frozen=True)
class EvaluationReport:
    n: int
    set_size: int
    mean: float
    sample_std_dev: float
    standard_error: float
    acceptance_rate: float
    histogram: dict[int, int]
    above_threshold: int
    above_threshold_fraction: float
    verdict: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["histogram"] = {str(k): v for k, v in self.histogram.items()}
        return d


def verdict_for(rate: float) -> str:
    if rate >= EXCELLENT_RATE:
        return "excellent"
    if rate >= SATISFACTORY_RATE:
        return "satisfactory"
    return "needs-review"


def compute_report(sample: EvaluationSample) -> EvaluationReport:
    counts = sample.accepted_counts
    n = len(counts)
    if n == 0:
        raise ValueError("cannot evaluate an empty sample")
    mean = statistics.fmean(counts)
    s = statistics.stdev(counts) if n > 1 else 0.0
    se = s / math.sqrt(n)
    rate = sum(counts) / (n * sample.set_size)
    tally = Counter(counts)
    histogram = {v: tally.get(v, 0) for v in range(sample.set_size + 1)}
    # the mean is the threshold; counts strictly above it are "above threshold"
    above = sum(1 for c in counts if c > mean)
    return EvaluationReport(
        n=n,
        set_size=sample.set_size,
        mean=mean,
        sample_std_dev=s,
        standard_error=se,
        acceptance_rate=rate,
        histogram=histogram,
        above_threshold=above,
        above_threshold_fraction=above / n,
        verdict=verdict_for(rate),
    )


def parse_acceptances(lines, set_size: int = 5) -> EvaluationSample:
    """Parse one count per line, or ``participant,count`` CSV rows.

    A non-numeric first CSV row is taken as a header.
    """
    counts = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        field = line.rsplit(",", 1)[-1].strip() if "," in line else line
        try:
            c = int(field)
        except ValueError:
            if "," in line and not counts and lineno == 1:
                continue
            raise AcceptanceFileError(lineno, f"not an integer: {field!r}") from None
        if not 0 <= c <= set_size:
            raise AcceptanceFileError(lineno, f"count {c} outside 0..{set_size}")
        counts.append(c)
    return EvaluationSample(tuple(counts), set_size)


def load_acceptances(path, set_size: int = 5) -> EvaluationSample:
    with Path(path).open(encoding="utf-8") as fh:
        return parse_acceptances(fh, set_size)
