import itertools

import pytest
from hypothesis import given, strategies as st

from witlist import (
    DepList,
    EmptyList,
    IndexMismatch,
    TODO_FAMILY,
    TodoStatus,
    make_item,
)

from conftest import all_status_sequences, deplist_of, items_from_statuses

statuses = st.lists(st.sampled_from(list(TodoStatus)), max_size=5)


def section3_items():
    return (
        DepList.nil(TODO_FAMILY)
        .cons(make_item(TodoStatus.TODO, "Write Introduction"))
        .cons(make_item(TodoStatus.STARTED, "Write Paper"))
    )


def test_nil():
    xs = DepList.nil(TODO_FAMILY)
    assert xs.elems == ()
    assert len(xs) == 0
    assert xs.indices() == ()


def test_cons_collects_indices():
    xs = section3_items()
    assert xs.indices() == (TodoStatus.STARTED, TodoStatus.TODO)


def test_cons_singleton():
    e = make_item(TodoStatus.DONE, "t")
    xs = DepList.nil(TODO_FAMILY).cons(e)
    assert xs.indices() == (TodoStatus.DONE,)


@pytest.mark.parametrize("seq", list(all_status_sequences(4)))
def test_fold_cons_mirrors_index_of(seq):
    xs = DepList.nil(TODO_FAMILY)
    items = items_from_statuses(seq)
    for item in reversed(items):
        xs = xs.cons(item)
    assert xs.indices() == tuple(seq)


def test_head():
    xs = section3_items()
    assert xs.head() == make_item(TodoStatus.STARTED, "Write Paper")


def test_head_empty():
    with pytest.raises(EmptyList):
        DepList.nil(TODO_FAMILY).head()


def test_tail():
    xs = section3_items()
    expected = DepList.of(TODO_FAMILY, [make_item(TodoStatus.TODO, "Write Introduction")])
    assert xs.tail() == expected
    assert xs.tail().indices() == (TodoStatus.TODO,)


def test_tail_empty():
    with pytest.raises(EmptyList):
        DepList.nil(TODO_FAMILY).tail()


@pytest.mark.parametrize("seq", list(all_status_sequences(4)))
def test_head_tail_invert_cons(seq):
    xs = deplist_of(seq)
    e = make_item(TodoStatus.STARTED, "new")
    assert xs.cons(e).head() == e
    assert xs.cons(e).tail() == xs


def test_take_zero_and_overlong():
    xs = section3_items()
    assert xs.take(0) == DepList.nil(TODO_FAMILY)
    assert DepList.nil(TODO_FAMILY).take(5) == DepList.nil(TODO_FAMILY)


def test_drop_zero_and_overlong():
    xs = section3_items()
    assert xs.drop(0) == xs
    assert DepList.nil(TODO_FAMILY).drop(3) == DepList.nil(TODO_FAMILY)


@given(statuses, st.integers(min_value=0, max_value=6))
def test_take_drop_mirror_plain_lists(seq, n):
    xs = deplist_of(seq)
    assert xs.take(n).indices() == tuple(seq[:n])
    assert xs.drop(n).indices() == tuple(seq[n:])
    assert xs.take(n).append(xs.drop(n)) == xs


@given(statuses, statuses)
def test_append_mirrors_concat(left, right):
    xs, ys = deplist_of(left), deplist_of(right)
    assert xs.append(ys).indices() == xs.indices() + ys.indices()


def test_append_identities():
    xs = section3_items()
    empty = DepList.nil(TODO_FAMILY)
    assert empty.append(xs) == xs
    assert xs.append(empty) == xs


@given(statuses)
def test_indices_recompute_index_of(seq):
    xs = deplist_of(seq)
    assert xs.indices() == tuple(TODO_FAMILY.index_of(e) for e in xs.elems)


def test_to_pairs_section1():
    xs = section3_items()
    assert xs.to_pairs() == (
        (TodoStatus.STARTED, make_item(TodoStatus.STARTED, "Write Paper")),
        (TodoStatus.TODO, make_item(TodoStatus.TODO, "Write Introduction")),
    )


def test_from_pairs_empty():
    assert DepList.from_pairs(TODO_FAMILY, []) == DepList.nil(TODO_FAMILY)


@given(statuses)
def test_pairs_round_trip(seq):
    xs = deplist_of(seq)
    assert DepList.from_pairs(TODO_FAMILY, xs.to_pairs()) == xs


def test_from_pairs_rejects_mismatch():
    pairs = [(TodoStatus.DONE, make_item(TodoStatus.TODO, "t"))]
    with pytest.raises(IndexMismatch) as excinfo:
        DepList.from_pairs(TODO_FAMILY, pairs)
    assert excinfo.value.position == 0


def test_operations_do_not_mutate():
    xs = section3_items()
    before = xs.elems
    xs.cons(make_item(TodoStatus.DONE, "x"))
    xs.take(1)
    xs.drop(1)
    xs.tail()
    assert xs.elems == before


def test_non_empty_witness_discharges_head():
    xs = section3_items()
    ok = xs.non_empty()
    assert ok is not None
    assert xs.head(ok) == xs.head()
    assert DepList.nil(TODO_FAMILY).non_empty() is None


def test_non_empty_witness_rejected_for_other_list():
    xs = section3_items()
    ys = deplist_of([TodoStatus.DONE])
    with pytest.raises(ValueError):
        ys.head(xs.non_empty())
