"""Shared generators and independent oracles used across the suite."""

from __future__ import annotations

import itertools
import random

from witlist import (
    DepList,
    JArray,
    JBool,
    JDoc,
    JMap,
    JNull,
    JNum,
    JStr,
    TODO_FAMILY,
    TodoStatus,
    jarray,
    jdoc,
    jmap,
    make_item,
)


def items_from_statuses(statuses):
    """One TodoItem per status, titles distinct so element equality is sharp."""
    return [make_item(s, "task-%d" % k) for k, s in enumerate(statuses)]


def deplist_of(statuses):
    return DepList.of(TODO_FAMILY, items_from_statuses(statuses))


def all_status_sequences(max_len=5):
    """Every status sequence of length <= max_len (364 of them for 5)."""
    for n in range(max_len + 1):
        yield from itertools.product(tuple(TodoStatus), repeat=n)


# --- random constrained documents -------------------------------------------

_STRINGS = ["", "a", "key", "with \"quote\"", "tab\there", "line\nbreak", "\\slash", "été"]


def _random_value(rng: random.Random):
    pick = rng.randrange(4)
    if pick == 0:
        return JStr(rng.choice(_STRINGS))
    if pick == 1:
        return JNum(float(rng.choice([0, 1, -1, 42, 1.5, -2.25, 1e10, 3.141592653589793])))
    if pick == 2:
        return JBool(rng.random() < 0.5)
    return JNull()


def _random_node(rng: random.Random, budget: int, fanout: int):
    if budget <= 1 or rng.random() < 0.4:
        return _random_value(rng)
    width = rng.randrange(fanout + 1)
    if rng.random() < 0.5:
        return jarray([_random_node(rng, budget - 1, fanout) for _ in range(width)])
    return jmap(
        [("k%d" % i, _random_node(rng, budget - 1, fanout)) for i in range(width)]
    )


def random_document(rng: random.Random, max_depth: int = 5, fanout: int = 4) -> JDoc:
    """A random DOC value of depth <= max_depth and fanout <= fanout."""
    width = rng.randrange(fanout + 1)
    body = jmap(
        [("k%d" % i, _random_node(rng, max_depth - 2, fanout)) for i in range(width)]
    )
    return jdoc(body)


# --- independent traversal oracles ------------------------------------------


def walk(d):
    """Yield every node, independently of the library's own traversal."""
    yield d
    if isinstance(d, JDoc):
        yield from walk(d.body)
    elif isinstance(d, JArray):
        for child in d.children:
            yield from walk(child)
    elif isinstance(d, JMap):
        for _, value in d.entries:
            yield from walk(value)


def naive_count(d) -> int:
    return sum(1 for _ in walk(d))


def naive_depth(d) -> int:
    if isinstance(d, JDoc):
        return 1 + naive_depth(d.body)
    if isinstance(d, JArray):
        return 1 + max((naive_depth(c) for c in d.children), default=0)
    if isinstance(d, JMap):
        return 1 + max((naive_depth(v) for _, v in d.entries), default=0)
    return 1
