from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pascal_pyramid.hpt import CapacityError
from pascal_pyramid.pyramid import (
    LevelGraph,
    PascalPyramid,
    VertexKind,
    build_level,
    face_value_sums,
    kinds_by_indegree,
    label_flow,
    level_census,
    level_value_sums,
    oracle_label,
    out_edge_profiles,
    transition_counts,
)
from pascal_pyramid.sequences import CountVector

VK = VertexKind


@pytest.fixture(scope="module")
def q5():
    return PascalPyramid(5, 10)


def test_level_zero(q5):
    g = q5.level(0)
    assert len(g) == 1 and int(g.labels[0]) == 1
    v = g.vertex(0)
    assert v.kind is VK.ONE and v.level == 0 and v.on_hpt


def test_level_two_labels(q5):
    g = q5.level(2)
    assert sorted(int(x) for x in g.labels) == [1, 1, 1, 2, 2, 2]
    assert level_value_sums(g).s == 9
    assert len(g) == 6
    kinds = {(v.row, v.index, v.height): v.kind for v in g.vertices()}
    assert kinds[(2, 1, 0)] is VK.A
    assert kinds[(1, 0, 1)] is VK.C and kinds[(1, 1, 1)] is VK.C
    assert kinds[(0, 0, 2)] is VK.ONE


def test_level_four_census(q5):
    assert level_census(q5.level(4)) == CountVector(4, 4, 4, 6, 3, 1, 21)


def test_level_ten_census(q5):
    assert level_census(q5.level(10)) == CountVector(10, 988, 1596, 18, 617, 979, 4201)


def test_level_three_sums(q5):
    sv = level_value_sums(q5.level(3))
    assert (sv.a, sv.b, sv.c, sv.d, sv.e, sv.s) == (6, 2, 12, 6, 0, 29)
    assert level_value_sums(q5.level(10)).s == 583665


def test_other_q_censuses():
    assert build_level(6, 4).census() == CountVector(4, 5, 10, 6, 3, 2, 29)
    cv = build_level(7, 3).census()
    assert (cv.a, cv.b, cv.c, cv.d, cv.e, cv.s) == (2, 3, 4, 1, 0, 13)


def test_oracle_examples(q5):
    assert oracle_label(1, 0, 7) == 1
    assert oracle_label(1, 2, 1) == 3
    g = q5.level(4)
    center = [v for v in g.vertices() if (v.row, v.index, v.height) == (2, 1, 2)][0]
    assert center.label == oracle_label(2, 2, 2) == 12


@pytest.mark.parametrize("q", [4, 5, 6, 7])
def test_labels_equal_product_oracle(q):
    pyr = PascalPyramid(q, 8)
    for g in pyr.levels():
        assert np.array_equal(g.labels, g.oracle_labels())


def test_edges_match_ascendants(q5):
    g = q5.level(4)
    src, dst = g.edges()
    listed = sorted(zip(src.tolist(), dst.tolist()))
    from_asc = sorted((a, j) for j in range(len(g)) for a in g.ascendants(j))
    assert listed == from_asc
    assert len(listed) == int(g.in_degrees().sum()) == 38


def test_ascendant_labels_sum(q5):
    prev, g = q5.level(5), q5.level(6)
    for j in range(len(g)):
        asc = g.ascendants(j)
        assert int(g.labels[j]) == sum(int(prev.labels[a]) for a in asc)


@settings(max_examples=25, deadline=None)
@given(q=st.sampled_from([5, 6, 7]), n=st.integers(min_value=1, max_value=9))
def test_typing_routes_and_indegree(q, n):
    g = build_level(q, n)
    assert np.array_equal(kinds_by_indegree(g), g.kinds)
    deg = g.in_degrees()
    rule = {VK.ONE: 1, VK.A: 2, VK.B: 1, VK.C: 2, VK.D: 3, VK.E: 2}
    for kind, d in rule.items():
        assert set(deg[g.kinds == kind].tolist()) <= {d}
    cv = g.census()
    assert cv.c == 2 * (n - 1)
    assert g.one_count() == 3
    mir = g.mirror()
    assert np.array_equal(g.kinds, g.kinds[mir]) and np.array_equal(g.labels, g.labels[mir])


@pytest.mark.parametrize("q", [5, 6, 7])
def test_out_edge_profiles(q):
    pyr = PascalPyramid(q, 7)
    want = {
        VK.A: {(0, 2, q - 4, 0, 1, 0)},
        VK.B: {(0, 2, q - 3, 0, 0, 1)},
        VK.C: {(0, 0, 0, 2, 1, 0)},
        VK.D: {(0, 0, 0, 0, 3, q - 4)},
        VK.E: {(0, 0, 0, 0, 2, q - 2)},
    }
    for n in range(1, 7):
        prof = out_edge_profiles(pyr.level(n), pyr.level(n + 1))
        for kind, profiles in prof.items():
            if kind is not VK.ONE:
                assert profiles == want[kind]


def test_label_flow_reproduces_next_sums(q5):
    for n in range(1, 9):
        g, h = q5.level(n), q5.level(n + 1)
        flow = label_flow(g, h)
        sv = h.value_sums()
        assert [int(x) for x in flow.sum(axis=0)] == [sv.v, sv.a, sv.b, sv.c, sv.d, sv.e]
        assert int(transition_counts(g, h).sum()) == int(h.in_degrees().sum())


def test_euclidean_faces(q5):
    for g in q5.levels():
        assert face_value_sums(g) == (2**g.level, 2**g.level)


def test_q4_levels():
    pyr = PascalPyramid(4, 8)
    for g in pyr.levels():
        assert len(g) == (g.level + 1) * (g.level + 2) // 2
        assert g.value_sums().s == 3**g.level
        assert g.census().a == g.census().b == g.census().e == 0


def test_exact_labels_past_int64():
    pyr = PascalPyramid(5, 6)
    scale = 2**62
    pyr._levels[0] = LevelGraph(pyr.table, 0, np.array([scale], dtype=object))
    g = pyr.level(6)
    assert g.labels.dtype == object
    plain = build_level(5, 6)
    assert [int(x) for x in g.labels] == [scale * int(x) for x in plain.labels]
    assert g.value_sums().s == scale * plain.value_sums().s
    assert int(label_flow(pyr.level(5), g).sum()) == scale * plain.value_sums().s


def test_capacity_refusal():
    with pytest.raises(CapacityError):
        PascalPyramid(9, 8, cap=1000)


def test_level_out_of_range(q5):
    with pytest.raises(ValueError):
        q5.level(11)
