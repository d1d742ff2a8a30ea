"""Cons-style lists over indexed families, with the index vector tracked at runtime.

A ``DepList`` stores elements drawn from a single indexed family and keeps the
sequence of their indices observable via :meth:`DepList.indices`.  Every list
operation transforms the index vector by the matching plain-list operation,
which is the invariant the test-suite pins down.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterator, Optional, Sequence, Tuple


class EmptyList(Exception):
    """head/tail applied to an empty list."""


class IndexMismatch(Exception):
    """A (index, element) pair whose stated index disagrees with index_of."""

    def __init__(self, position: int, stated: Any, actual: Any):
        self.position = position
        self.stated = stated
        self.actual = actual
        super().__init__(
            "pair %d: stated index %r but element has index %r"
            % (position, stated, actual)
        )


@dataclass(frozen=True)
class IndexedFamily:
    """A family of element shapes indexed by a finite, equality-comparable domain.

    ``index_of`` must be total and deterministic: the same element always maps
    to the same index.
    """

    name: str
    index_domain: Tuple[Any, ...]
    index_of: Callable[[Any], Any]


@dataclass(frozen=True)
class NonEmptyWitness:
    """Evidence that a particular list has length >= 1.

    Only obtainable from a non-empty list (via ``non_empty``), so passing one
    back to head/tail can never trip :class:`EmptyList`.
    """

    source: Any


@dataclass(frozen=True)
class DepList:
    """Immutable list whose elements all come from one indexed family.

    The index vector is recomputed from ``family.index_of`` on demand; by the
    coherence invariant this is observably identical to storing it.
    """

    family: IndexedFamily
    elems: Tuple[Any, ...] = ()

    @classmethod
    def nil(cls, family: IndexedFamily) -> "DepList":
        return cls(family)

    @classmethod
    def of(cls, family: IndexedFamily, elems: Sequence[Any]) -> "DepList":
        """Build a list from front to back (``elems[0]`` becomes the head)."""
        return cls(family, tuple(elems))

    @classmethod
    def from_pairs(cls, family: IndexedFamily, pairs: Sequence[Tuple[Any, Any]]) -> "DepList":
        """Rebuild a list from the dependent-pair representation.

        Each pair's first component must equal ``index_of`` of its second.
        """
        for k, (stated, elem) in enumerate(pairs):
            actual = family.index_of(elem)
            if stated != actual:
                raise IndexMismatch(k, stated, actual)
        return cls(family, tuple(elem for _, elem in pairs))

    def cons(self, elem: Any) -> "DepList":
        return DepList(self.family, (elem,) + self.elems)

    def head(self, ok: Optional[NonEmptyWitness] = None) -> Any:
        self._check_non_empty(ok)
        return self.elems[0]

    def tail(self, ok: Optional[NonEmptyWitness] = None) -> "DepList":
        self._check_non_empty(ok)
        return DepList(self.family, self.elems[1:])

    def take(self, n: int) -> "DepList":
        return DepList(self.family, self.elems[:n])

    def drop(self, n: int) -> "DepList":
        return DepList(self.family, self.elems[n:])

    def append(self, other: "DepList") -> "DepList":
        return DepList(self.family, self.elems + other.elems)

    def indices(self) -> Tuple[Any, ...]:
        return tuple(self.family.index_of(e) for e in self.elems)

    def to_pairs(self) -> Tuple[Tuple[Any, Any], ...]:
        return tuple((self.family.index_of(e), e) for e in self.elems)

    def non_empty(self) -> Optional[NonEmptyWitness]:
        return NonEmptyWitness(self) if self.elems else None

    def _check_non_empty(self, ok: Optional[NonEmptyWitness]) -> None:
        if ok is not None:
            if ok.source is not self:
                raise ValueError("non-emptiness witness belongs to a different list")
            return
        if not self.elems:
            raise EmptyList("empty list")

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.elems)

    def __getitem__(self, k: int) -> Any:
        return self.elems[k]


# --- reference family: a TODO list -----------------------------------------


class TodoStatus(Enum):
    TODO = "TODO"
    STARTED = "STARTED"
    DONE = "DONE"


@dataclass(frozen=True)
class TodoItem:
    state: TodoStatus
    title: str


def make_item(state: TodoStatus, title: str) -> TodoItem:
    return TodoItem(state, title)


TODO_FAMILY = IndexedFamily("todo", tuple(TodoStatus), lambda item: item.state)
