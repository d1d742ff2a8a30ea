"""A structurally constrained JSON document model.

The AST is indexed by :class:`JTy`.  Composite nodes hold their children in a
:class:`~witlist.predicate.PredList` under :data:`JPRED`, which admits MAP,
ARRAY, and VALUE but has no witness for DOC, so a document node can only ever
appear at the root.  ``jdoc`` additionally forces the root body to be a map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple, Union

from .core import IndexedFamily
from .predicate import Predicate, PredicateViolation, PredList


class JTy(Enum):
    DOC = "DOC"
    ARRAY = "ARRAY"
    MAP = "MAP"
    VALUE = "VALUE"


class RootNotMap(Exception):
    """jdoc applied to a body whose index is not MAP."""

    def __init__(self, actual: JTy):
        self.actual = actual
        super().__init__("document root must be a map, got %s" % actual.value)


class NotAMap(Exception):
    """A map accessor applied to a non-MAP node."""


@dataclass(frozen=True)
class JStr:
    text: str


@dataclass(frozen=True)
class JNum:
    value: float


@dataclass(frozen=True)
class JBool:
    value: bool


@dataclass(frozen=True)
class JNull:
    pass


JNULL = JNull()


@dataclass(frozen=True)
class JArray:
    children: PredList


@dataclass(frozen=True)
class JMap:
    entries: PredList  # elements are (key, JsonDoc) pairs


@dataclass(frozen=True)
class JDoc:
    body: JMap


JsonDoc = Union[JStr, JNum, JBool, JNull, JArray, JMap, JDoc]


def jty_of(d: JsonDoc) -> JTy:
    if isinstance(d, (JStr, JNum, JBool, JNull)):
        return JTy.VALUE
    if isinstance(d, JArray):
        return JTy.ARRAY
    if isinstance(d, JMap):
        return JTy.MAP
    if isinstance(d, JDoc):
        return JTy.DOC
    raise TypeError("not a JSON document node: %r" % (d,))


class JWitness(Enum):
    """Witnesses that an index is allowed below a composite node."""

    JMapW = JTy.MAP
    JArrW = JTy.ARRAY
    JValW = JTy.VALUE


_DECIDE = {JTy.MAP: JWitness.JMapW, JTy.ARRAY: JWitness.JArrW, JTy.VALUE: JWitness.JValW}

JPRED = Predicate(
    "JPred",
    decide=_DECIDE.get,
    holds=lambda w, ty: isinstance(w, JWitness) and w.value is ty,
)

JSON_FAMILY = IndexedFamily("json", tuple(JTy), jty_of)

# Map entries track the index of the value component; the key plays no part.
JSON_ENTRY_FAMILY = IndexedFamily("json-entry", tuple(JTy), lambda pair: jty_of(pair[1]))


def _build_plist(family: IndexedFamily, items: Sequence[Any]) -> PredList:
    for k, item in enumerate(items):
        idx = family.index_of(item)
        if JPRED.decide(idx) is None:
            raise PredicateViolation(idx, position=k)
    xs = PredList.nil(family, JPRED)
    for item in reversed(items):
        xs = xs.add(item)
    return xs


def jarray(children: Sequence[JsonDoc]) -> JArray:
    """Build an array node; rejects DOC children."""
    return JArray(_build_plist(JSON_FAMILY, list(children)))


def jmap(entries: Sequence[Tuple[str, JsonDoc]]) -> JMap:
    """Build a map node preserving entry order and duplicate keys."""
    return JMap(_build_plist(JSON_ENTRY_FAMILY, [tuple(e) for e in entries]))


def jdoc(root: JsonDoc) -> JDoc:
    """Wrap a map node as a complete document; any other index is rejected."""
    actual = jty_of(root)
    if actual is not JTy.MAP:
        raise RootNotMap(actual)
    return JDoc(root)


def get(m: JsonDoc, key: str) -> Optional[JsonDoc]:
    """First entry with a matching key, in insertion order; None if absent."""
    if jty_of(m) is not JTy.MAP:
        raise NotAMap("get() requires a MAP node, got %s" % jty_of(m).value)
    for k, v in m.entries:
        if k == key:
            return v
    return None


def _children(d: JsonDoc) -> Tuple[JsonDoc, ...]:
    if isinstance(d, JArray):
        return tuple(d.children)
    if isinstance(d, JMap):
        return tuple(v for _, v in d.entries)
    if isinstance(d, JDoc):
        return (d.body,)
    return ()


def count_nodes(d: JsonDoc) -> int:
    """Number of constructor occurrences, the document wrapper included."""
    return 1 + sum(count_nodes(c) for c in _children(d))


def max_depth(d: JsonDoc) -> int:
    """Nesting depth; a lone VALUE leaf has depth 1."""
    kids = _children(d)
    return 1 + (max(max_depth(c) for c in kids) if kids else 0)


def jty_counts(d: JsonDoc) -> Dict[JTy, int]:
    """Per-index node counts over the whole tree."""
    counts = {ty: 0 for ty in JTy}
    stack = [d]
    while stack:
        node = stack.pop()
        counts[jty_of(node)] += 1
        stack.extend(_children(node))
    return counts
