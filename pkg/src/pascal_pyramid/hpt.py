"""Hyperbolic Pascal triangle for the squared mosaic {4, q}.

Rows are stored column-wise in numpy arrays. Labels live in ``int64`` while
they are provably small and switch to Python ints (``dtype=object``) before
any sum could overflow, so results are always exact.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

import numpy as np

DEFAULT_CAP = 10**7
CAP_ENV_VAR = "PASCAL_PYRAMID_CAP"

# a child label is at most 3x its largest parent, so this keeps int64 exact
_INT64_SAFE = 2**61


class CapacityError(RuntimeError):
    """Raised instead of silently truncating an oversized row or level."""


class HptKind(IntEnum):
    WINGER = 0
    A = 1
    B = 2


@dataclass(frozen=True)
class HptEntry:
    kind: HptKind
    label: int


def default_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


def check_q(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise TypeError(f"q must be an integer, got {q!r}")
    if q < 4:
        raise ValueError(f"q must be >= 4 (q=4 is the Euclidean case), got {q}")
    return int(q)


def promote_labels(labels: np.ndarray) -> np.ndarray:
    """Switch to arbitrary precision once values approach the int64 limit."""
    if labels.dtype != object and len(labels) and int(labels.max()) > _INT64_SAFE:
        return labels.astype(object)
    return labels


@dataclass(frozen=True, eq=False)
class HptRow:
    """Row ``index`` of the triangle.

    ``ascendants[i]`` holds the positions in the previous row feeding entry
    ``i``; the second column is ``-1`` when there is a single ascendant.
    """

    index: int
    kinds: np.ndarray
    labels: np.ndarray
    ascendants: np.ndarray

    def __len__(self) -> int:
        return len(self.kinds)

    @property
    def entries(self) -> list[HptEntry]:
        return [HptEntry(HptKind(int(k)), int(v)) for k, v in zip(self.kinds, self.labels)]

    def ascendants_of(self, i: int) -> tuple[int, ...]:
        return tuple(int(j) for j in self.ascendants[i] if j >= 0)

    def label_list(self) -> list[int]:
        return [int(v) for v in self.labels]

    def kind_string(self) -> str:
        return "".join("wAB"[k] for k in self.kinds)


def base_row() -> HptRow:
    return HptRow(
        index=0,
        kinds=np.array([HptKind.WINGER], dtype=np.int8),
        labels=np.array([1], dtype=np.int64),
        ascendants=np.array([[-1, -1]], dtype=np.int64),
    )


def grow_row(prev: HptRow, q: int, cap: int | None = None) -> HptRow:
    """Next row of the triangle.

    Layout: left winger; then for each parent left to right, the A-child
    shared with its left neighbour followed by the parent's own B-children
    (q-4 for an A parent, q-3 for a B parent); right winger last.
    """
    q = check_q(q)
    cap = default_cap() if cap is None else cap
    kinds, labels = prev.kinds, promote_labels(prev.labels)
    n_prev = len(kinds)

    n_b = np.where(kinds == HptKind.A, q - 4, np.where(kinds == HptKind.B, q - 3, 0)).astype(np.int64)
    block = n_b.copy()
    block[1:] += 1  # A-child between parents j-1 and j
    size = int(block.sum()) + 2
    if size > cap:
        raise CapacityError(f"row {prev.index + 1} for q={q} has {size} entries, cap is {cap}")

    parent = np.repeat(np.arange(n_prev, dtype=np.int64), block)
    starts = np.cumsum(block) - block
    offset = np.arange(len(parent), dtype=np.int64) - np.repeat(starts, block)
    is_a = (offset == 0) & (parent > 0)

    inner_kinds = np.where(is_a, HptKind.A, HptKind.B).astype(np.int8)
    left = np.where(is_a, parent - 1, parent)
    right = np.where(is_a, parent, -1)
    inner_labels = labels[left].copy()
    if is_a.any():
        inner_labels[is_a] = inner_labels[is_a] + labels[parent[is_a]]

    one = np.array([1], dtype=labels.dtype)
    return HptRow(
        index=prev.index + 1,
        kinds=np.concatenate(([HptKind.WINGER], inner_kinds, [HptKind.WINGER])).astype(np.int8),
        labels=np.concatenate((one, inner_labels, one)),
        ascendants=np.concatenate(
            (
                [[0, -1]],
                np.stack((left, right), axis=1).reshape(-1, 2),
                [[n_prev - 1, -1]],
            )
        ).astype(np.int64),
    )


def iter_rows(q: int, cap: int | None = None) -> Iterator[HptRow]:
    row = base_row()
    while True:
        yield row
        row = grow_row(row, q, cap)


def generate_rows(q: int, n: int, cap: int | None = None) -> list[HptRow]:
    """Rows ``0..n`` inclusive."""
    rows = []
    for row in iter_rows(q, cap):
        rows.append(row)
        if row.index == n:
            return rows
    raise AssertionError("unreachable")


def row_census(row: HptRow) -> tuple[int, int]:
    """Number of type A and type B entries."""
    return int(np.count_nonzero(row.kinds == HptKind.A)), int(np.count_nonzero(row.kinds == HptKind.B))


def row_value_sum(row: HptRow) -> int:
    return int(sum(int(v) for v in row.labels)) if row.labels.dtype == object else int(row.labels.sum())


def is_palindrome(row: HptRow) -> bool:
    return bool(
        np.array_equal(row.kinds, row.kinds[::-1]) and all(row.labels == row.labels[::-1])
    )


class HptTable:
    """Rows ``0..n`` concatenated into flat arrays with global ascendant indices.

    Global position ``offsets[m] + i`` addresses entry ``i`` of row ``m``.
    Pyramid levels reuse this indexing directly.
    """

    def __init__(self, q: int, n: int, cap: int | None = None):
        self.q = check_q(q)
        self.rows = generate_rows(self.q, n, cap)
        lengths = np.array([len(r) for r in self.rows], dtype=np.int64)
        self.offsets = np.concatenate(([0], np.cumsum(lengths)))
        self.row_of = np.repeat(np.arange(len(self.rows), dtype=np.int64), lengths)
        self.index_in_row = np.arange(self.offsets[-1], dtype=np.int64) - self.offsets[self.row_of]
        self.kinds = np.concatenate([r.kinds for r in self.rows])
        labels = [r.labels for r in self.rows]
        if any(lab.dtype == object for lab in labels):
            labels = [lab.astype(object) for lab in labels]
        self.labels = np.concatenate(labels)

        asc = np.concatenate([r.ascendants for r in self.rows])
        prev_offset = np.concatenate(([0], self.offsets[:-2]))[self.row_of]
        self.parents = np.where(asc >= 0, asc + prev_offset[:, None], -1)
        self.parents[0] = -1

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def __len__(self) -> int:
        return int(self.offsets[-1])

    def mirror(self, size: int) -> np.ndarray:
        """Global index of the mirror image of each of the first ``size`` entries."""
        m = self.row_of[:size]
        length = self.offsets[m + 1] - self.offsets[m]
        return self.offsets[m] + length - 1 - self.index_in_row[:size]
