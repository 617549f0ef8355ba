"""Levels of the Pascal pyramid PP(4, q) as an explicit layered digraph.

A vertex is a triple ``(row, index, height)``: entry ``index`` of triangle
row ``row`` lifted ``height`` planes up. Its level is ``row + height``. The
ascendants of ``(m, i, k)`` are the triangle ascendants of ``(m, i)`` at the
same height plus ``(m, i, k-1)`` when ``k >= 1``.

Within level ``n`` vertices are ordered by height descending, then index,
which is the same as concatenating triangle rows ``0..n``. So the vertex
``(m, i, n-m)`` sits at position ``offsets[m] + i`` in every level that
contains it, and ascendant positions point into the previous level with no
remapping.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from math import comb
from typing import Iterator

import numpy as np

from .hpt import CapacityError, HptKind, HptTable, check_q, default_cap, promote_labels
from .sequences import CountVector, SumVector


class VertexKind(IntEnum):
    ONE = 0
    A = 1
    B = 2
    C = 3
    D = 4
    E = 5

    @property
    def symbol(self) -> str:
        return "1" if self is VertexKind.ONE else self.name


@dataclass(frozen=True)
class PyramidVertex:
    row: int
    index: int
    height: int
    kind: VertexKind
    label: int
    on_hpt: bool = False  # type-1 vertex lying in the triangle face ("1_h")

    @property
    def level(self) -> int:
        return self.row + self.height


def exact_sum(values: np.ndarray) -> int:
    if len(values) == 0:
        return 0
    if values.dtype == object:
        return int(sum(values))
    if int(values.max()) * len(values) < 2**62:
        return int(values.sum())
    return int(sum(values.astype(object)))


def _kind_table(q: int) -> np.ndarray:
    """Kind lookup indexed by ``hpt_kind + 3*on_plane + 6*(row == 0)``."""
    a_on_plane = VertexKind.C if q == 4 else VertexKind.A
    lifted = [VertexKind.C, VertexKind.D, VertexKind.E]
    plane = [VertexKind.ONE, a_on_plane, VertexKind.B]
    apex = [VertexKind.ONE] * 3
    return np.array(lifted + plane + apex + plane, dtype=np.int8)


def classify(table: HptTable, n: int) -> np.ndarray:
    """Vertex kinds of level ``n`` from position: triangle kind and height.

    On the plane (height 0) the triangle kind carries over, wingers becoming
    type 1. Above it the apex line is type 1, lifted wingers are C, lifted
    A are D and lifted B are E.
    """
    size = int(table.offsets[n + 1])
    rows = table.row_of[:size]
    key = table.kinds[:size].astype(np.int8)
    key += 3 * (rows == n).astype(np.int8)
    key[0] += 6
    return _kind_table(table.q)[key]


class LevelGraph:
    """All vertices of one level with their labels.

    Ascendant links are implicit in the triangle table; :meth:`ascendants`
    and :meth:`edges` materialize them.
    """

    def __init__(self, table: HptTable, level: int, labels: np.ndarray):
        self.table = table
        self.level = level
        self.labels = labels

    @property
    def q(self) -> int:
        return self.table.q

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def rows(self) -> np.ndarray:
        return self.table.row_of[: len(self)]

    @property
    def indices(self) -> np.ndarray:
        return self.table.index_in_row[: len(self)]

    @property
    def heights(self) -> np.ndarray:
        return self.level - self.rows

    @cached_property
    def kinds(self) -> np.ndarray:
        return classify(self.table, self.level)

    def ascendants(self, j: int) -> tuple[int, ...]:
        """Positions in level ``level-1`` feeding vertex ``j``, ascending."""
        if self.level == 0:
            return ()
        out = [int(p) for p in self.table.parents[j] if p >= 0]
        if self.table.row_of[j] < self.level:
            out.append(j)
        return tuple(out)

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """``(src, dst)``: src indexes level ``level-1``, dst this level."""
        if self.level == 0:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        size = len(self)
        below = int(self.table.offsets[self.level])
        parents = self.table.parents[:size]
        j = np.arange(size, dtype=np.int64)
        src = [parents[1:, 0], parents[:, 1][parents[:, 1] >= 0], j[:below]]
        dst = [j[1:], j[parents[:, 1] >= 0], j[:below]]
        return np.concatenate(src), np.concatenate(dst)

    def in_degrees(self) -> np.ndarray:
        if self.level == 0:
            return np.zeros(1, dtype=np.int64)
        parents = self.table.parents[: len(self)]
        deg = (parents >= 0).sum(axis=1)
        deg[: int(self.table.offsets[self.level])] += 1
        return deg

    def vertex(self, j: int) -> PyramidVertex:
        kind = VertexKind(int(self.kinds[j]))
        height = int(self.heights[j])
        return PyramidVertex(
            row=int(self.rows[j]),
            index=int(self.indices[j]),
            height=height,
            kind=kind,
            label=int(self.labels[j]),
            on_hpt=kind is VertexKind.ONE and height == 0,
        )

    def vertices(self) -> Iterator[PyramidVertex]:
        for j in range(len(self)):
            yield self.vertex(j)

    def census(self) -> CountVector:
        counts = np.bincount(self.kinds, minlength=len(VertexKind))
        a, b, c, d, e = (int(counts[k]) for k in (VertexKind.A, VertexKind.B, VertexKind.C, VertexKind.D, VertexKind.E))
        return CountVector(self.level, a, b, c, d, e, len(self))

    def one_count(self) -> int:
        return int(np.count_nonzero(self.kinds == VertexKind.ONE))

    def value_sums(self) -> SumVector:
        labels, kinds = self.labels, self.kinds
        if labels.dtype != object and len(labels) and int(labels.max()) < 2**52:
            # float bincount is exact while every partial sum stays below 2**53
            lo, hi = labels & (2**26 - 1), labels >> 26
            k = len(VertexKind)
            lo_s = np.bincount(kinds, weights=lo, minlength=k)
            hi_s = np.bincount(kinds, weights=hi, minlength=k)
            if len(labels) < 2**26:
                parts = [int(lo_s[i]) + (int(hi_s[i]) << 26) for i in range(k)]
                v, a, b, c, d, e = parts
                return SumVector(self.level, a, b, c, d, e, v, sum(parts))
        parts = [exact_sum(labels[kinds == kind]) for kind in VertexKind]
        v, a, b, c, d, e = parts
        return SumVector(self.level, a, b, c, d, e, v, sum(parts))

    def oracle_labels(self) -> np.ndarray:
        """Labels from the closed product rule ``L_hpt(m, i) * C(n, k)``."""
        n = self.level
        binoms = [comb(n, n - m) for m in range(n + 1)]
        hpt_labels = self.table.labels[: len(self)]
        if hpt_labels.dtype == object or max(binoms) * int(hpt_labels.max()) >= 2**62:
            return hpt_labels.astype(object) * np.array(binoms, dtype=object)[self.rows]
        return hpt_labels * np.array(binoms, dtype=np.int64)[self.rows]

    def mirror(self) -> np.ndarray:
        return self.table.mirror(len(self))


def oracle_label(hpt_label: int, row: int, height: int) -> int:
    """Shortest-path count of ``(row, i, height)`` given the triangle label of ``(row, i)``.

    A shortest path is a shortest triangle path with ``height`` vertical steps
    interleaved anywhere, hence the binomial factor.
    """
    return hpt_label * comb(row + height, height)


def level_sizes(table: HptTable) -> list[int]:
    return [int(x) for x in table.offsets[1:]]


class PascalPyramid:
    """Levels ``0..n_max`` of PP(4, q), built by summing ascendant labels."""

    def __init__(self, q: int, n_max: int, cap: int | None = None):
        self.q = check_q(q)
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        self.cap = default_cap() if cap is None else cap
        self.n_max = n_max
        self.table = HptTable(self.q, n_max, self.cap)
        size = int(self.table.offsets[-1])
        if size > self.cap:
            raise CapacityError(f"level {n_max} for q={q} has {size} vertices, cap is {self.cap}")
        self._levels: list[LevelGraph] = [LevelGraph(self.table, 0, np.array([1], dtype=np.int64))]

    def level(self, n: int) -> LevelGraph:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"level {n} outside 0..{self.n_max}")
        while len(self._levels) <= n:
            self._levels.append(self._grow(self._levels[-1]))
        return self._levels[n]

    def levels(self) -> Iterator[LevelGraph]:
        for n in range(self.n_max + 1):
            yield self.level(n)

    def _grow(self, prev: LevelGraph) -> LevelGraph:
        n = prev.level + 1
        size = int(self.table.offsets[n + 1])
        below = len(prev)
        lab_prev = promote_labels(prev.labels)
        parents = self.table.parents[:size]

        labels = np.zeros(size, dtype=lab_prev.dtype)
        labels[:below] = lab_prev  # vertical edges
        labels[1:] = labels[1:] + lab_prev[parents[1:, 0]]
        two = np.nonzero(parents[:, 1] >= 0)[0]
        labels[two] = labels[two] + lab_prev[parents[two, 1]]
        return LevelGraph(self.table, n, labels)


def build_level(q: int, n: int, cap: int | None = None) -> LevelGraph:
    return PascalPyramid(q, n, cap).level(n)


def level_census(g: LevelGraph) -> CountVector:
    return g.census()


def level_value_sums(g: LevelGraph) -> SumVector:
    return g.value_sums()


def kinds_by_indegree(g: LevelGraph) -> np.ndarray:
    """Second typing route: ascendant count plus whether the vertex is on a face.

    On the triangle plane: 2 ascendants is A (C when q=4), one ascendant is
    B unless the vertex is a border winger. Above it: 3 is D, 1 is the apex
    line, 2 is C on a Euclidean face and E inside.
    """
    deg = g.in_degrees()
    idx = g.indices
    length = g.table.offsets[g.rows + 1] - g.table.offsets[g.rows]
    border = (idx == 0) | (idx == length - 1)
    plane = np.where(
        deg == 2,
        VertexKind.C if g.q == 4 else VertexKind.A,
        np.where(border, VertexKind.ONE, VertexKind.B),
    )
    lifted = np.select(
        [deg == 3, deg == 1, border],
        [VertexKind.D, VertexKind.ONE, VertexKind.C],
        default=VertexKind.E,
    )
    kinds = np.where(g.heights == 0, plane, lifted).astype(np.int8)
    if g.level == 0:
        kinds[:] = VertexKind.ONE
    return kinds


def out_edge_profiles(parent: LevelGraph, child: LevelGraph) -> dict[VertexKind, set[tuple[int, ...]]]:
    """For each parent kind, the distinct per-vertex counts of children by kind.

    A profile is a 6-tuple indexed by :class:`VertexKind`.
    """
    if child.level != parent.level + 1:
        raise ValueError("child must be the next level")
    src, dst = child.edges()
    k = len(VertexKind)
    flat = np.bincount(src * k + child.kinds[dst], minlength=len(parent) * k)
    per_vertex = flat.reshape(len(parent), k)
    out: dict[VertexKind, set[tuple[int, ...]]] = {}
    for kind in VertexKind:
        rows = per_vertex[parent.kinds == kind]
        if len(rows):
            out[kind] = {tuple(int(x) for x in r) for r in np.unique(rows, axis=0)}
    return out


def transition_counts(parent: LevelGraph, child: LevelGraph) -> np.ndarray:
    """6x6 matrix: edges from parent kind (row) to child kind (column)."""
    src, dst = child.edges()
    k = len(VertexKind)
    return np.bincount(parent.kinds[src] * k + child.kinds[dst], minlength=k * k).reshape(k, k)


def label_flow(parent: LevelGraph, child: LevelGraph) -> np.ndarray:
    """6x6 matrix: total parent label carried along edges from parent kind to child kind."""
    src, dst = child.edges()
    k = len(VertexKind)
    keys = parent.kinds[src].astype(np.int64) * k + child.kinds[dst]
    values = parent.labels[src]
    if values.dtype == object or (len(values) and int(values.max()) * len(values) >= 2**62):
        out = np.zeros(k * k, dtype=object)
        np.add.at(out, keys, values.astype(object))
    else:
        out = np.zeros(k * k, dtype=np.int64)
        np.add.at(out, keys, values)
    return out.reshape(k, k)


def face_value_sums(g: LevelGraph) -> tuple[int, int]:
    """Label sums of the two Euclidean faces (left and right wingers plus apex)."""
    idx, rows = g.indices, g.rows
    length = g.table.offsets[rows + 1] - g.table.offsets[rows]
    left = exact_sum(g.labels[idx == 0])
    right = exact_sum(g.labels[idx == length - 1])
    return left, right
