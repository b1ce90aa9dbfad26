"""Tag popularity, tag representativeness, document score, user-tag affinity,
and the per-user preference set.

Every sum iterates tags in lexicographic order so scores are reproducible
bit-for-bit across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .model import Folksonomy, ResourceId, Tag, UserId

REPR_MODES = ("raw", "tf")
DEFAULT_PREF_THRESHOLD = 0.7


class EmptyCorpusError(ValueError):
    """Popularity (and anything built on it) is undefined without resources."""


class NoAffinityError(LookupError):
    """The user has no tag assignments, so affinity has no denominator."""


@dataclass(frozen=True)
class DocumentScore:
    resource: ResourceId
    score: float


@dataclass(frozen=True)
class UserProfile:
    user: UserId
    tag_counts: Mapping[Tag, int]
    distinct_tag_count: int
    preference_set: frozenset[Tag]


def popularity(tag: Tag, f: Folksonomy) -> float:
    """Fraction of resources carrying ``tag``."""
    if f.resource_count == 0:
        raise EmptyCorpusError("popularity is undefined on an empty corpus")
    return len(f.resources_of_tag(tag)) / f.resource_count


def representativeness(tag: Tag, resource: ResourceId, f: Folksonomy, mode: str = "raw") -> float:
    """How strongly ``tag`` characterizes ``resource``.

    ``raw`` is the number of users who put the tag on the resource; ``tf``
    divides that by the resource's total assignment count.
    """
    counts = f.tags_of(resource)
    c = counts.get(tag, 0)
    if mode == "raw":
        return float(c)
    if mode == "tf":
        total = sum(counts.values())
        return c / total if total else 0.0
    raise ValueError(f"unknown representativeness mode {mode!r}")


def document_score(resource: ResourceId, f: Folksonomy, mode: str = "raw") -> DocumentScore:
    """(sum of tag popularities) x (sum of tag representativeness) over the resource's tags."""
    if f.resource_count == 0:
        raise EmptyCorpusError("document score is undefined on an empty corpus")
    pop_sum = 0.0
    rep_sum = 0.0
    for tag in f.tags_of(resource):
        pop_sum += popularity(tag, f)
        rep_sum += representativeness(tag, resource, f, mode)
    return DocumentScore(resource, pop_sum * rep_sum)


def affinity(user: UserId, tag: Tag, f: Folksonomy) -> float:
    counts = f.tags_of_user(user)
    if not counts:
        raise NoAffinityError(f"user {user!r} has no tag assignments")
    return counts.get(tag, 0) / len(counts)


def preference_set(user: UserId, f: Folksonomy, threshold: float = DEFAULT_PREF_THRESHOLD) -> frozenset[Tag]:
    """Tags used at least ``threshold`` times as often as the user's top tag."""
    if not 0 < threshold <= 1:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    counts = f.tags_of_user(user)
    if not counts:
        return frozenset()
    cutoff = threshold * max(counts.values())
    return frozenset(t for t, c in counts.items() if c >= cutoff)


def user_profile(user: UserId, f: Folksonomy, threshold: float = DEFAULT_PREF_THRESHOLD) -> UserProfile:
    counts = f.tags_of_user(user)
    return UserProfile(user, counts, len(counts), preference_set(user, f, threshold))
