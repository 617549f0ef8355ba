import numpy as np
import pytest
from math import comb

from pascal_pyramid.hpt import (
    CapacityError,
    HptKind,
    HptTable,
    generate_rows,
    grow_row,
    is_palindrome,
    promote_labels,
    row_census,
    row_value_sum,
)


def labelled(row):
    return [f"{lab}{'w' if k == HptKind.WINGER else HptKind(k).name}" for k, lab in zip(row.kinds, row.label_list())]


def test_q5_first_rows():
    rows = generate_rows(5, 4)
    assert labelled(rows[1]) == ["1w", "1w"]
    assert labelled(rows[2]) == ["1w", "2A", "1w"]
    assert labelled(rows[3]) == ["1w", "3A", "2B", "3A", "1w"]
    assert labelled(rows[4]) == ["1w", "4A", "3B", "5A", "2B", "2B", "5A", "3B", "4A", "1w"]


def test_q4_is_pascal_triangle():
    for row in generate_rows(4, 12):
        assert row.label_list() == [comb(row.index, i) for i in range(row.index + 1)]
        assert HptKind.B not in set(row.kinds.tolist())


@pytest.mark.parametrize("q,n,expected", [(5, 4, (4, 4)), (5, 1, (0, 0)), (6, 3, (2, 2))])
def test_row_census(q, n, expected):
    assert row_census(generate_rows(q, n)[n]) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (2, 4), (3, 10)])
def test_row_value_sum(n, expected):
    assert row_value_sum(generate_rows(5, n)[n]) == expected


@pytest.mark.parametrize("q", [5, 6, 7, 9])
def test_census_recurrence_and_palindrome(q):
    rows = generate_rows(q, 9)
    for prev, row in zip(rows[1:], rows[2:]):
        a, b = row_census(prev)
        assert row_census(row) == (a + b + 1, (q - 4) * a + (q - 3) * b)
    assert all(is_palindrome(r) for r in rows)


@pytest.mark.parametrize("q", [5, 7])
def test_label_conservation(q):
    rows = generate_rows(q, 8)
    for prev, row in zip(rows, rows[1:]):
        for i, entry in enumerate(row.entries):
            asc = row.ascendants_of(i)
            if entry.kind == HptKind.WINGER:
                assert entry.label == 1
            else:
                assert entry.label == sum(prev.label_list()[j] for j in asc)
            expected_asc = 2 if entry.kind == HptKind.A else 1
            assert len(asc) == expected_asc


def test_capacity_refusal():
    rows = generate_rows(9, 5)
    with pytest.raises(CapacityError):
        grow_row(rows[-1], 9, cap=100)


def test_rejects_small_q():
    with pytest.raises(ValueError):
        generate_rows(3, 2)


def test_table_global_indexing():
    t = HptTable(5, 4)
    assert len(t) == 1 + 2 + 3 + 5 + 10
    assert list(t.offsets) == [0, 1, 3, 6, 11, 21]
    # second entry of row 3 is the A child of row-2 entries 0 and 1
    g = t.offsets[3] + 1
    assert sorted(p for p in t.parents[g] if p >= 0) == [t.offsets[2], t.offsets[2] + 1]
    mir = t.mirror(len(t))
    assert np.array_equal(t.labels, t.labels[mir])


def test_labels_switch_to_exact_objects():
    small = np.array([1, 2, 3], dtype=np.int64)
    assert promote_labels(small).dtype == np.int64
    big = np.array([1, 2**62, 3], dtype=np.int64)
    promoted = promote_labels(big)
    assert promoted.dtype == object
    assert int(promoted[1] + promoted[1]) == 2**63
