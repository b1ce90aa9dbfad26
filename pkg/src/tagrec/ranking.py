"""Tag vectors, cosine similarity, the combined personalized score, and top-k recommendation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from . import metrics
from .model import Folksonomy, ResourceId, Tag, UserId

VECTOR_MODES = ("count", "binary")


@dataclass(frozen=True)
class RankingConfig:
    repr_mode: str = "raw"
    vector_mode: str = "count"
    pref_threshold: float = metrics.DEFAULT_PREF_THRESHOLD
    symmetric: bool = False

    def __post_init__(self):
        if self.repr_mode not in metrics.REPR_MODES:
            raise ValueError(f"repr_mode must be one of {metrics.REPR_MODES}")
        if self.vector_mode not in VECTOR_MODES:
            raise ValueError(f"vector_mode must be one of {VECTOR_MODES}")
        if not 0 < self.pref_threshold <= 1:
            raise ValueError("pref_threshold must be in (0, 1]")


@dataclass(frozen=True)
class TagVector:
    resource: ResourceId
    entries: Mapping[Tag, float]

    @property
    def norm(self) -> float:
        sq = 0.0
        for w in self.entries.values():
            sq += w * w
        return math.sqrt(sq)

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True)
class Factors:
    ds_anchor: float
    ds_candidate: float
    cosine: float
    boost_tag: Tag | None
    boost: float

    def combine(self, symmetric: bool = False) -> float:
        if symmetric:
            bracket = (self.ds_anchor + self.ds_candidate) * self.cosine
        else:
            bracket = self.ds_anchor + self.ds_candidate * self.cosine
        return bracket * self.boost


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: ResourceId
    anchor: ResourceId
    score: float
    factors: Factors


@dataclass
class RecommendationList:
    user: UserId
    k: int
    items: list[ScoredCandidate] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def tag_vector(resource: ResourceId, f: Folksonomy, vmode: str = "count") -> TagVector:
    counts = f.tags_of(resource)
    if vmode == "count":
        entries = {t: float(c) for t, c in counts.items()}
    elif vmode == "binary":
        entries = {t: 1.0 for t in counts}
    else:
        raise ValueError(f"unknown vector mode {vmode!r}")
    return TagVector(resource, entries)


def cosine(a: TagVector, b: TagVector) -> float:
    """Cosine of the angle between two tag vectors; 0 if either is empty."""
    if not a or not b:
        return 0.0
    small, large = (a.entries, b.entries) if len(a.entries) <= len(b.entries) else (b.entries, a.entries)
    dot = 0.0
    for t in sorted(small.keys() & large.keys()):
        dot += a.entries[t] * b.entries[t]
    return min(1.0, dot / (a.norm * b.norm))


class Scorer:
    """Caches per-resource and per-user quantities for one corpus and config.

    ``document_scores`` overrides the computed document scores; any resource
    missing from it scores 0.
    """

    def __init__(self, f: Folksonomy, cfg: RankingConfig | None = None,
                 document_scores: Mapping[ResourceId, float] | None = None):
        self.f = f
        self.cfg = cfg or RankingConfig()
        self._ds: dict[ResourceId, float] = {}
        if document_scores is not None:
            self._ds.update(document_scores)
            self._ds_fixed = True
        else:
            self._ds_fixed = False
        self._vectors: dict[ResourceId, TagVector] = {}
        self._norms: dict[ResourceId, float] = {}
        self._boosts: dict[UserId, tuple[frozenset, dict]] = {}

    def ds(self, resource: ResourceId) -> float:
        try:
            return self._ds[resource]
        except KeyError:
            if self._ds_fixed:
                return 0.0
            score = metrics.document_score(resource, self.f, self.cfg.repr_mode).score
            self._ds[resource] = score
            return score

    def vector(self, resource: ResourceId) -> TagVector:
        v = self._vectors.get(resource)
        if v is None:
            v = self._vectors[resource] = tag_vector(resource, self.f, self.cfg.vector_mode)
            self._norms[resource] = v.norm
        return v

    def cosine(self, a: ResourceId, b: ResourceId) -> float:
        va, vb = self.vector(a), self.vector(b)
        if not va or not vb:
            return 0.0
        ea, eb = va.entries, vb.entries
        shared = ea.keys() & eb.keys()
        if not shared:
            return 0.0
        dot = 0.0
        for t in sorted(shared):
            dot += ea[t] * eb[t]
        # rounding can push parallel vectors a hair past 1
        return min(1.0, dot / (self._norms[a] * self._norms[b]))

    def _user_prefs(self, user: UserId) -> tuple[frozenset, dict]:
        cached = self._boosts.get(user)
        if cached is None:
            prefs = metrics.preference_set(user, self.f, self.cfg.pref_threshold)
            cached = self._boosts[user] = (prefs, {})
        return cached

    def boost(self, user: UserId, candidate: ResourceId) -> tuple[float, Tag | None]:
        """1 + affinity of the user's best preference tag on ``candidate``, else 1."""
        prefs, memo = self._user_prefs(user)
        if candidate in memo:
            return memo[candidate]
        result: tuple[float, Tag | None] = (1.0, None)
        if prefs:
            best_tag, best_aff = None, -1.0
            for t in self.f.tags_of(candidate):  # sorted, so strict > keeps the smallest tag on ties
                if t in prefs:
                    a = metrics.affinity(user, t, self.f)
                    if a > best_aff:
                        best_tag, best_aff = t, a
            if best_tag is not None:
                result = (1.0 + best_aff, best_tag)
        memo[candidate] = result
        return result

    def score(self, anchor: ResourceId, candidate: ResourceId, user: UserId) -> ScoredCandidate:
        if anchor == candidate:
            raise ValueError(f"cannot score resource {anchor!r} against itself")
        b, tag = self.boost(user, candidate)
        factors = Factors(self.ds(anchor), self.ds(candidate), self.cosine(anchor, candidate), tag, b)
        return ScoredCandidate(candidate, anchor, factors.combine(self.cfg.symmetric), factors)

    def recommend(self, user: UserId, k: int = 5) -> RecommendationList:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        out = RecommendationList(user, k)
        anchors = sorted(self.f.resources_of_user(user))
        if not anchors:
            return out
        owned = set(anchors)
        best: list[ScoredCandidate] = []
        for cand in self.f.resources:
            if cand in owned:
                continue
            top = None
            for anchor in anchors:
                sc = self.score(anchor, cand, user)
                if top is None or sc.score > top.score:
                    top = sc
            best.append(top)
        best.sort(key=lambda sc: (-sc.score, sc.candidate))
        out.items = best[:k]
        return out


def combined_similarity(anchor: ResourceId, candidate: ResourceId, user: UserId,
                        f: Folksonomy, cfg: RankingConfig | None = None) -> ScoredCandidate:
    return Scorer(f, cfg).score(anchor, candidate, user)


def recommend(user: UserId, f: Folksonomy, k: int = 5, cfg: RankingConfig | None = None) -> RecommendationList:
    """Top-k unseen resources for ``user``, each scored against its best-matching bookmark.

    Ties are broken by resource id ascending.
    """
    return Scorer(f, cfg).recommend(user, k)
