"""Bookmark corpus parsing (JSON-lines and TSV) and tag normalization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .model import TagAssignment

FORMATS = ("jsonl", "tsv")


class TagRejectedError(ValueError):
    """Raised when a raw tag normalizes to nothing."""


def normalize_tag(raw: str) -> str:
    """Lowercase, trim, and join internal whitespace runs with a hyphen.

    >>> normalize_tag("  Web 2.0 ")
    'web-2.0'
    """
    tag = "-".join(raw.lower().split())
    if not tag:
        raise TagRejectedError(f"empty tag: {raw!r}")
    return tag


@dataclass
class BookmarkRecord:
    user: str
    uri: str
    tags: list[str]
    timestamp: str | None = None


@dataclass
class IngestReport:
    records: int = 0
    assignments: int = 0
    raw_tags: int = 0
    malformed: list[dict] = field(default_factory=list)
    rejected_tags: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "records": self.records,
            "assignments": self.assignments,
            "raw_tags": self.raw_tags,
            "malformed": self.malformed,
            "rejected_tags": self.rejected_tags,
        }


def _parse_jsonl(line: str) -> BookmarkRecord:
    obj = json.loads(line)
    if not isinstance(obj, dict):
        raise ValueError("record is not a JSON object")
    tags = obj.get("tags")
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ValueError("tags must be a list of strings")
    user, uri = obj.get("user"), obj.get("uri")
    if not isinstance(user, str) or not isinstance(uri, str):
        raise ValueError("user and uri must be strings")
    ts = obj.get("timestamp")
    return BookmarkRecord(user, uri, tags, None if ts is None else str(ts))


def _parse_tsv(line: str) -> BookmarkRecord:
    cols = line.split("\t")
    if len(cols) not in (3, 4):
        raise ValueError(f"expected 3 or 4 tab-separated columns, got {len(cols)}")
    tags = cols[2].split(",") if cols[2].strip() else []
    return BookmarkRecord(cols[0], cols[1], tags, cols[3] if len(cols) == 4 else None)


_PARSERS = {"jsonl": _parse_jsonl, "tsv": _parse_tsv}


def _validate(record: BookmarkRecord) -> None:
    if not record.user.strip():
        raise ValueError("empty user")
    if not record.uri.strip():
        raise ValueError("empty uri")
    if not record.tags:
        raise ValueError("empty tags list")


def parse_lines(lines, fmt: str = "jsonl") -> tuple[list[TagAssignment], IngestReport]:
    """Expand bookmark lines into assignments; bad lines are reported and skipped."""
    try:
        parse = _PARSERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}") from None

    report = IngestReport()
    out: list[TagAssignment] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            record = parse(line)
            _validate(record)
        except ValueError as exc:  # JSONDecodeError is a ValueError
            report.malformed.append({"line": lineno, "reason": str(exc)})
            continue

        report.records += 1
        user, uri = record.user.strip(), record.uri.strip()
        for raw in record.tags:
            report.raw_tags += 1
            try:
                tag = normalize_tag(raw)
            except TagRejectedError:
                report.rejected_tags.append({"line": lineno, "tag": raw})
                continue
            out.append(TagAssignment(user, tag, uri))
    report.assignments = len(out)
    return out, report


def load_corpus(path, fmt: str = "jsonl") -> tuple[list[TagAssignment], IngestReport]:
    """Read a bookmark file.  I/O errors propagate; malformed lines do not."""
    with Path(path).open(encoding="utf-8") as fh:
        return parse_lines(fh, fmt)
