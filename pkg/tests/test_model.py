import random

import pytest
from hypothesis import given

from corpora import FIGURE1, to_assignments, triples_strategy
from tagrec.model import Folksonomy, InvalidAssignmentError, TagAssignment, build_folksonomy


def test_empty_corpus():
    f = build_folksonomy([])
    assert f.resource_count == 0
    assert f.vocabulary == ()
    assert len(f) == 0


def test_duplicates_collapse():
    a = TagAssignment("alice", "web", "GW")
    f = build_folksonomy([a, a])
    assert len(f) == 1
    assert f.resources_of_tag("web") == {"GW"}


def test_figure1_vocabulary(fig1):
    assert list(fig1.vocabulary) == ["ajax", "google", "java", "mail", "programming", "web"]
    assert fig1.resource_count == 3
    assert fig1.user_count == 3


def test_tags_of(fig1):
    assert dict(fig1.tags_of("GW")) == {"ajax": 1, "programming": 1, "web": 1, "google": 1}
    assert dict(fig1.tags_of("SW")) == {"web": 1, "mail": 1}
    assert dict(fig1.tags_of("nope")) == {}


@pytest.mark.parametrize("user, tag, expected", [
    ("bob", "web", 1),
    ("bob", "mail", 0),
    ("alice", "google", 1),
])
def test_user_tag_document_count(fig1, user, tag, expected):
    assert fig1.user_tag_document_count(user, tag) == expected


@pytest.mark.parametrize("bad, field", [
    (TagAssignment("", "web", "GW"), "user"),
    (TagAssignment("alice", "  ", "GW"), "tag"),
    (TagAssignment("alice", "web", ""), "resource"),
])
def test_rejects_empty_fields_with_position(bad, field):
    good = TagAssignment("alice", "web", "GW")
    with pytest.raises(InvalidAssignmentError) as info:
        build_folksonomy([good, good, bad])
    assert info.value.position == 2
    assert info.value.field == field


def test_views_are_read_only(fig1):
    with pytest.raises(TypeError):
        fig1.tags_of("GW")["web"] = 5


@given(triples_strategy)
def test_indexes_agree_with_source(triples):
    f = build_folksonomy(to_assignments(triples))
    unique = set(triples)
    for tag in f.vocabulary:
        assert f.resources_of_tag(tag) == {r for r in f.resources if f.tags_of(r).get(tag, 0) > 0}
    assert sum(sum(f.tags_of(r).values()) for r in f.resources) == len(unique)
    for u in f.users:
        assert f.resources_of_user(u) == {r for uu, _, r in unique if uu == u}
        for t, c in f.tags_of_user(u).items():
            assert c == len({r for uu, tt, r in unique if uu == u and tt == t})


@given(triples_strategy)
def test_build_is_order_independent(triples):
    shuffled = list(triples)
    random.Random(len(triples)).shuffle(shuffled)
    a = build_folksonomy(to_assignments(triples))
    b = build_folksonomy(to_assignments(shuffled + triples[:3]))
    assert a == b
    assert a.vocabulary == b.vocabulary
    assert a.assignments == b.assignments


def test_rebuild_from_assignments_is_identical(fig1):
    assert Folksonomy(fig1.assignments) == fig1
