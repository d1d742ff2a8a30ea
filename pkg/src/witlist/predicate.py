"""Decidable predicates over indices, and lists whose elements all carry proof.

A ``Predicate`` pairs a ``decide`` function (runtime stand-in for automatic
proof search) with a ``holds`` check for validating a witness against an
index.  ``PredList`` keeps a witness vector in lockstep with the element and
index vectors: every element's index is provably inside the predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional, Sequence, Tuple, Union

from .core import (
    DepList,
    EmptyList,
    IndexedFamily,
    NonEmptyWitness,
    TodoStatus,
)


class PredicateViolation(Exception):
    """An index the predicate rejects (decide returned nothing)."""

    def __init__(self, index: Any, position: Optional[int] = None):
        self.index = index
        self.position = position
        where = "" if position is None else " at position %d" % position
        super().__init__("index %r does not satisfy the predicate%s" % (index, where))


class InvalidWitness(Exception):
    """An explicitly supplied witness that holds() rejects for the index."""

    def __init__(self, index: Any):
        self.index = index
        super().__init__("witness is not valid for index %r" % (index,))


@dataclass(frozen=True)
class Predicate:
    """A decidable property over index values.

    Contract: ``decide(i)`` returns a witness ``w`` with ``holds(w, i)`` true,
    or ``None`` when no witness exists (soundness and completeness).  Both
    functions must be pure.
    """

    name: str
    decide: Callable[[Any], Optional[Any]]
    holds: Callable[[Any, Any], bool]


@dataclass(frozen=True)
class PredList:
    """A DepList plus a parallel vector of predicate witnesses.

    Invariant: ``len(proofs) == len(elems)`` and every ``proofs[k]`` holds for
    the index of ``elems[k]``.  Witnesses are proof-irrelevant: equality
    compares elements only.
    """

    family: IndexedFamily
    predicate: Predicate
    elems: Tuple[Any, ...] = ()
    proofs: Tuple[Any, ...] = ()

    @classmethod
    def nil(cls, family: IndexedFamily, predicate: Predicate) -> "PredList":
        return cls(family, predicate)

    @classmethod
    def from_deplist(cls, xs: DepList, predicate: Predicate) -> "PredList":
        """Run proof search over a whole DepList; fail on the first bad index."""
        proofs = []
        for k, elem in enumerate(xs.elems):
            idx = xs.family.index_of(elem)
            w = predicate.decide(idx)
            if w is None:
                raise PredicateViolation(idx, position=k)
            proofs.append(w)
        return cls(xs.family, predicate, xs.elems, tuple(proofs))

    def add(self, elem: Any) -> "PredList":
        """Prepend, searching for the proof; the runtime analogue of auto prf."""
        idx = self.family.index_of(elem)
        w = self.predicate.decide(idx)
        if w is None:
            raise PredicateViolation(idx)
        return PredList(
            self.family, self.predicate, (elem,) + self.elems, (w,) + self.proofs
        )

    def cons_with_witness(self, elem: Any, witness: Any) -> "PredList":
        """Prepend with a caller-supplied witness, validated by holds()."""
        idx = self.family.index_of(elem)
        if not self.predicate.holds(witness, idx):
            raise InvalidWitness(idx)
        return PredList(
            self.family, self.predicate, (elem,) + self.elems, (witness,) + self.proofs
        )

    def head(self, ok: Optional[NonEmptyWitness] = None) -> Any:
        self._check_non_empty(ok)
        return self.elems[0]

    def tail(self, ok: Optional[NonEmptyWitness] = None) -> "PredList":
        self._check_non_empty(ok)
        return PredList(self.family, self.predicate, self.elems[1:], self.proofs[1:])

    def take(self, n: int) -> "PredList":
        return PredList(self.family, self.predicate, self.elems[:n], self.proofs[:n])

    def drop(self, n: int) -> "PredList":
        return PredList(self.family, self.predicate, self.elems[n:], self.proofs[n:])

    def indices(self) -> Tuple[Any, ...]:
        return tuple(self.family.index_of(e) for e in self.elems)

    def witnesses(self) -> Tuple[Any, ...]:
        return self.proofs

    def forget(self) -> DepList:
        """Erase the proof vector, keeping elements and indices."""
        return DepList(self.family, self.elems)

    def non_empty(self) -> Optional[NonEmptyWitness]:
        return NonEmptyWitness(self) if self.elems else None

    def _check_non_empty(self, ok: Optional[NonEmptyWitness]) -> None:
        if ok is not None:
            if ok.source is not self:
                raise ValueError("non-emptiness witness belongs to a different list")
            return
        if not self.elems:
            raise EmptyList("empty list")

    def __eq__(self, other: object) -> bool:
        # Proofs are irrelevant: both lists are coherent, so witnesses for the
        # same index are holds-equivalent by construction.
        if not isinstance(other, PredList):
            return NotImplemented
        return (
            self.family == other.family
            and self.predicate == other.predicate
            and self.elems == other.elems
        )

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.elems)


def non_empty(xs: Union[DepList, PredList]) -> Optional[NonEmptyWitness]:
    return xs.non_empty()


# --- reference predicate: completed TODO items ------------------------------


@dataclass(frozen=True)
class IsDone:
    """The sole witness of completion; valid only for DONE."""


IS_DONE = IsDone()

IS_COMPLETE = Predicate(
    "IsComplete",
    decide=lambda s: IS_DONE if s is TodoStatus.DONE else None,
    holds=lambda w, s: isinstance(w, IsDone) and s is TodoStatus.DONE,
)
