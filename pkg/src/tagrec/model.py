"""Folksonomy data model: users tag resources, and the corpus indexes those triples."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

UserId = str
ResourceId = str
Tag = str


class InvalidAssignmentError(ValueError):
    """An assignment with an empty field was handed to the corpus builder."""

    def __init__(self, position: int, field: str):
        super().__init__(f"assignment {position}: empty {field}")
        self.position = position
        self.field = field


@dataclass(frozen=True, order=True)
class TagAssignment:
    """One (user, tag, resource) triple."""

    user: UserId
    tag: Tag
    resource: ResourceId

    def empty_field(self) -> str | None:
        for name in ("user", "tag", "resource"):
            value = getattr(self, name)
            if not isinstance(value, str) or not value.strip():
                return name
        return None


_EMPTY: Mapping = MappingProxyType({})


class Folksonomy:
    """Immutable, indexed corpus of tag assignments.

    Duplicate triples collapse on construction.  All lookups for unknown
    keys return empty views rather than raising.
    """

    __slots__ = (
        "_assignments",
        "_tags_of_resource",
        "_resources_of_tag",
        "_tags_of_user",
        "_resources_of_user",
        "_vocabulary",
    )

    def __init__(self, assignments: Iterable[TagAssignment]):
        unique = frozenset(assignments)
        tags_of_resource: dict = defaultdict(lambda: defaultdict(int))
        resources_of_tag: dict = defaultdict(set)
        tags_of_user: dict = defaultdict(lambda: defaultdict(int))
        resources_of_user: dict = defaultdict(set)
        for a in unique:
            tags_of_resource[a.resource][a.tag] += 1
            resources_of_tag[a.tag].add(a.resource)
            # triples are unique, so each one is a distinct (tag, resource) for this user
            tags_of_user[a.user][a.tag] += 1
            resources_of_user[a.user].add(a.resource)

        self._assignments = tuple(sorted(unique, key=lambda a: (a.user, a.resource, a.tag)))
        self._tags_of_resource = _freeze_counts(tags_of_resource)
        self._resources_of_tag = _freeze_sets(resources_of_tag)
        self._tags_of_user = _freeze_counts(tags_of_user)
        self._resources_of_user = _freeze_sets(resources_of_user)
        self._vocabulary = tuple(sorted(resources_of_tag))

    @property
    def assignments(self) -> tuple[TagAssignment, ...]:
        """Deduplicated assignments sorted by (user, resource, tag)."""
        return self._assignments

    @property
    def vocabulary(self) -> tuple[Tag, ...]:
        return self._vocabulary

    @property
    def resources(self) -> tuple[ResourceId, ...]:
        return tuple(sorted(self._tags_of_resource))

    @property
    def users(self) -> tuple[UserId, ...]:
        return tuple(sorted(self._tags_of_user))

    @property
    def resource_count(self) -> int:
        return len(self._tags_of_resource)

    @property
    def user_count(self) -> int:
        return len(self._tags_of_user)

    def tags_of(self, resource: ResourceId) -> Mapping[Tag, int]:
        """Assignment count per tag on ``resource``."""
        return self._tags_of_resource.get(resource, _EMPTY)

    def resources_of_tag(self, tag: Tag) -> frozenset[ResourceId]:
        return self._resources_of_tag.get(tag, frozenset())

    def tags_of_user(self, user: UserId) -> Mapping[Tag, int]:
        """Distinct-resource usage count per tag for ``user``."""
        return self._tags_of_user.get(user, _EMPTY)

    def resources_of_user(self, user: UserId) -> frozenset[ResourceId]:
        return self._resources_of_user.get(user, frozenset())

    def user_tag_document_count(self, user: UserId, tag: Tag) -> int:
        return self.tags_of_user(user).get(tag, 0)

    def __len__(self) -> int:
        return len(self._assignments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Folksonomy):
            return NotImplemented
        return self._assignments == other._assignments

    def __hash__(self) -> int:
        return hash(self._assignments)

    def __repr__(self) -> str:
        return (
            f"Folksonomy(users={self.user_count}, resources={self.resource_count}, "
            f"tags={len(self._vocabulary)}, assignments={len(self._assignments)})"
        )


def _freeze_counts(index: dict) -> Mapping:
    return MappingProxyType(
        {key: MappingProxyType(dict(sorted(inner.items()))) for key, inner in index.items()}
    )


def _freeze_sets(index: dict) -> Mapping:
    return MappingProxyType({key: frozenset(values) for key, values in index.items()})


def build_folksonomy(assignments: Iterable[TagAssignment]) -> Folksonomy:
    """Validate ``assignments`` and build the indexed corpus.

    Raises InvalidAssignmentError naming the first offending position.
    """
    checked = []
    for position, a in enumerate(assignments):
        bad = a.empty_field()
        if bad is not None:
            raise InvalidAssignmentError(position, bad)
        checked.append(a)
    return Folksonomy(checked)


def tags_of(resource: ResourceId, f: Folksonomy) -> Mapping[Tag, int]:
    return f.tags_of(resource)


def user_tag_document_count(user: UserId, tag: Tag, f: Folksonomy) -> int:
    return f.user_tag_document_count(user, tag)
