import math
import random
from fractions import Fraction

import pytest
from hypothesis import given

from corpora import random_triples, to_assignments, triples_strategy
from oracle import Oracle
from tagrec import metrics
from tagrec.metrics import (
    EmptyCorpusError,
    NoAffinityError,
    affinity,
    document_score,
    popularity,
    preference_set,
    representativeness,
    user_profile,
)
from tagrec.model import TagAssignment, build_folksonomy


@pytest.mark.parametrize("tag, expected", [("web", 1.0), ("ajax", 2 / 3), ("nope", 0.0)])
def test_popularity(fig1, tag, expected):
    assert popularity(tag, fig1) == pytest.approx(expected, rel=1e-12)


def test_popularity_empty_corpus():
    with pytest.raises(EmptyCorpusError):
        popularity("web", build_folksonomy([]))


@pytest.mark.parametrize("tag, res, mode, expected", [
    ("web", "SW", "raw", 1.0),
    ("web", "SW", "tf", 0.5),
    ("java", "SW", "raw", 0.0),
    ("java", "nope", "tf", 0.0),
])
def test_representativeness(fig1, tag, res, mode, expected):
    assert representativeness(tag, res, fig1, mode) == expected


def test_representativeness_counts_taggers():
    f = build_folksonomy([TagAssignment(u, "web", "X") for u in "abc"] + [TagAssignment("a", "k", "X")])
    assert representativeness("web", "X", f, "raw") == 3
    assert representativeness("web", "X", f, "tf") == 0.75


def test_document_score_fixture(fig1):
    # hand computation with exact fractions
    gw = (Fraction(2, 3) + Fraction(1, 3) + Fraction(2, 3) + 1) * 4
    assert gw == Fraction(32, 3)
    assert document_score("GW", fig1).score == pytest.approx(float(gw), rel=1e-12)
    assert document_score("SW", fig1).score == pytest.approx(8 / 3, rel=1e-12)
    assert document_score("nope", fig1).score == 0.0


@pytest.mark.parametrize("user, tag, expected", [
    ("bob", "web", 0.25),
    ("bob", "mail", 0.0),
    ("carol", "web", 0.5),
])
def test_affinity(fig1, user, tag, expected):
    assert affinity(user, tag, fig1) == expected


def test_affinity_unknown_user(fig1):
    with pytest.raises(NoAffinityError):
        affinity("dave", "web", fig1)


def test_preference_set_fixture(fig1):
    assert preference_set("bob", fig1, 0.7) == {"ajax", "programming", "web", "java"}
    assert preference_set("dave", fig1) == frozenset()


def test_preference_set_ratio_rule():
    triples = [("u", "a", f"r{i}") for i in range(10)]
    triples += [("u", "b", f"r{i}") for i in range(7)]
    triples += [("u", "c", f"r{i}") for i in range(6)]
    f = build_folksonomy(to_assignments(triples))
    assert dict(f.tags_of_user("u")) == {"a": 10, "b": 7, "c": 6}
    assert preference_set("u", f, 0.7) == {"a", "b"}


@pytest.mark.parametrize("threshold", [0.0, -0.1, 1.5])
def test_preference_threshold_bounds(fig1, threshold):
    with pytest.raises(ValueError):
        preference_set("bob", fig1, threshold)


def test_user_profile(fig1):
    p = user_profile("carol", fig1)
    assert p.distinct_tag_count == 2
    assert p.preference_set == {"web", "mail"}


# -- invariants -------------------------------------------------------------

@given(triples_strategy)
def test_factor_invariants(triples):
    f = build_folksonomy(to_assignments(triples))
    for t in f.vocabulary:
        p = popularity(t, f)
        assert 0 < p <= 1
        assert (p == 1.0) == (len(f.resources_of_tag(t)) == f.resource_count)
    for r in f.resources:
        total = sum(representativeness(t, r, f, "tf") for t in f.tags_of(r))
        assert math.isclose(total, 1.0, rel_tol=1e-12)
        assert document_score(r, f).score > 0
    for u in f.users:
        counts = f.tags_of_user(u)
        affs = [affinity(u, t, f) for t in counts]
        assert all(0 <= a <= len(f.resources_of_user(u)) for a in affs)
        pairs = len({(t, r) for uu, t, r in set(triples) if uu == u})
        assert math.isclose(sum(affs), pairs / len(counts), rel_tol=1e-12)
        top = max(counts, key=counts.get)
        for threshold in (1.0, 0.7, 0.01):
            prefs = preference_set(u, f, threshold)
            assert top in prefs and prefs <= set(counts)


@given(triples_strategy, triples_strategy)
def test_document_score_monotone_in_raw_mode(triples, extra):
    # adding an assignment to r never lowers Ds(r); popularity of r's tags can only rise
    # when the resource set is unchanged, so keep extras on existing resources
    f = build_folksonomy(to_assignments(triples))
    resources = f.resources
    grown = triples + [(u, t, resources[i % len(resources)]) for i, (u, t, _) in enumerate(extra)]
    g = build_folksonomy(to_assignments(grown))
    for r in resources:
        assert document_score(r, g).score >= document_score(r, f).score


@pytest.mark.parametrize("seed", range(200))
def test_metrics_match_oracle(seed):
    triples = random_triples(random.Random(seed))
    f = build_folksonomy(to_assignments(triples))
    o = Oracle(triples)
    for t in f.vocabulary + ("absent",):
        assert popularity(t, f) == o.popularity(t)
        for r in f.resources:
            for mode in metrics.REPR_MODES:
                assert representativeness(t, r, f, mode) == o.representativeness(t, r, mode)
    for r in f.resources:
        for mode in metrics.REPR_MODES:
            assert document_score(r, f, mode).score == o.document_score(r, mode)
    for u in f.users:
        assert preference_set(u, f) == o.preference_set(u)
        for t in f.vocabulary:
            assert affinity(u, t, f) == o.affinity(u, t)
