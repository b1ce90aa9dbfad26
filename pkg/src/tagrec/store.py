"""Versioned JSON index persistence."""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from .model import Folksonomy, TagAssignment, build_folksonomy
from .ranking import RankingConfig

SCHEMA_VERSION = 1


class IndexFormatError(ValueError):
    """The index file is corrupt or written by an incompatible version."""


def corpus_stats(f: Folksonomy) -> dict:
    return {
        "users": f.user_count,
        "resources": f.resource_count,
        "tags": len(f.vocabulary),
        "assignments": len(f),
    }


def dump_index(f: Folksonomy, cfg: RankingConfig | None = None) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": asdict(cfg or RankingConfig()),
        "stats": corpus_stats(f),
        "assignments": [
            {"user": a.user, "resource": a.resource, "tag": a.tag} for a in f.assignments
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def save_index(path, f: Folksonomy, cfg: RankingConfig | None = None) -> None:
    Path(path).write_text(dump_index(f, cfg), encoding="utf-8")


def parse_index(text: str) -> tuple[Folksonomy, RankingConfig]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IndexFormatError(f"index is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise IndexFormatError("index root must be an object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise IndexFormatError(f"schema_version {version!r} not supported (expected {SCHEMA_VERSION})")
    try:
        cfg = RankingConfig(**doc["config"])
        assignments = [TagAssignment(a["user"], a["tag"], a["resource"]) for a in doc["assignments"]]
        f = build_folksonomy(assignments)
    except (KeyError, TypeError, ValueError) as exc:
        raise IndexFormatError(f"malformed index: {exc}") from None
    if doc.get("stats") not in (None, corpus_stats(f)):
        raise IndexFormatError("stored stats disagree with stored assignments")
    return f, cfg


def load_index(path) -> tuple[Folksonomy, RankingConfig]:
    return parse_index(Path(path).read_text(encoding="utf-8"))
