"""Cross-method verification and the erratum report behind ``pascal-pyramid verify``.

Every check compares two or more independent computations exactly. Errata
record printed statements that disagree with the computations; they are
reported but do not fail the run.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Sequence

import numpy as np

from . import analytic, closed_forms as cf, sequences as seq
from .algebra import charpoly, mat_vec, normalize_int
from .hpt import default_cap, is_palindrome
from .pyramid import (
    LevelGraph,
    PascalPyramid,
    VertexKind,
    face_value_sums,
    kinds_by_indegree,
    label_flow,
    out_edge_profiles,
    transition_counts,
)
from .reference import COUNTS_Q5, REFERENCE_Q, SUMS_Q5

VK = VertexKind


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    mismatches: list[dict] = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class Finding:
    """A printed statement compared with what the computations give."""

    name: str
    statement: str
    disagrees: bool
    evidence: dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    q: int
    n_max: int
    graph_levels: int
    checks: list[Check] = field(default_factory=list)
    errata: list[Finding] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        if not timing:
            d.pop("seconds")
            for c in d["checks"]:
                c.pop("seconds")
        return _jsonable(d)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        # decimal strings once values leave the exactly representable range
        return int(obj) if abs(int(obj)) < 2**53 else str(int(obj))
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def compare(name: str, expected: Sequence, got: Sequence, offset: int = 0) -> list[dict]:
    out = []
    for i, (x, y) in enumerate(zip(expected, got)):
        if x != y:
            out.append({"sequence": name, "n": offset + i, "expected": x, "got": y})
    if len(expected) != len(got):
        out.append({"sequence": name, "n": None, "expected": len(expected), "got": len(got)})
    return out


class _Runner:
    def __init__(self, report: Report):
        self.report = report

    def run(self, name: str, fn: Callable[[], list[dict] | tuple[list[dict], str]]) -> Check:
        t0 = time.perf_counter()
        try:
            result = fn()
        except Exception as exc:  # a crashing check is a failing check
            check = Check(name, False, f"{type(exc).__name__}: {exc}")
        else:
            mismatches, detail = result if isinstance(result, tuple) else (result, "")
            check = Check(name, not mismatches, detail, mismatches)
        check.seconds = round(time.perf_counter() - t0, 6)
        self.report.checks.append(check)
        return check


def graph_level_limit(q: int, n_max: int, cap: int) -> int:
    """Largest level ``<= n_max`` whose cumulative triangle table fits the cap (-1 if none)."""
    if q == 4:
        sizes = [(n + 1) * (n + 2) // 2 for n in range(n_max + 1)]
    else:
        sizes = [cv.s for cv in seq.counts_by_recurrence(q, n_max)]
    limit = -1
    for n, s in enumerate(sizes):
        if s > cap:
            break
        limit = n
    return limit


def enumerate_path_counts(levels: Sequence[LevelGraph]) -> list[int]:
    """Number of shortest paths to each vertex of the last level, by listing every path.

    Walks backwards through ascendant links one path at a time; deliberately
    exponential, for small levels only.
    """
    top = len(levels) - 1
    counts = []
    for j in range(len(levels[top])):
        total = 0
        stack = [(top, j)]
        while stack:
            lvl, v = stack.pop()
            if lvl == 0:
                total += 1
                continue
            for u in levels[lvl].ascendants(v):
                stack.append((lvl - 1, u))
        counts.append(total)
    return counts


# -- graph checks ---------------------------------------------------------------


def _graph_checks(run: _Runner, pyr: PascalPyramid, limit: int, structural: bool = True) -> tuple[list, list]:
    q = pyr.q
    levels = [pyr.level(n) for n in range(limit + 1)]
    censuses = [g.census() for g in levels]
    sums = [g.value_sums() for g in levels]
    if not structural:
        return censuses, sums

    def labels_vs_product():
        bad = []
        for g in levels:
            diff = np.nonzero(g.labels != g.oracle_labels())[0]
            for j in diff[:5]:
                v = g.vertex(int(j))
                bad.append({"sequence": f"label(m={v.row},i={v.index},k={v.height})", "n": g.level,
                            "expected": int(g.oracle_labels()[j]), "got": v.label})
        return bad, f"{sum(len(g) for g in levels)} vertices checked"

    def kind_routes():
        bad = []
        for g in levels:
            other = kinds_by_indegree(g)
            for j in np.nonzero(other != g.kinds)[0][:5]:
                bad.append({"sequence": "kind", "n": g.level, "expected": VK(int(g.kinds[j])).symbol,
                            "got": VK(int(other[j])).symbol})
        return bad

    def indegree_rule():
        expected = {VK.ONE: {1}, VK.A: {2}, VK.B: {1}, VK.C: {2}, VK.D: {3}, VK.E: {2}}
        bad = []
        for g in levels[1:]:
            deg = g.in_degrees()
            for kind in VK:
                seen = set(int(x) for x in np.unique(deg[g.kinds == kind]))
                if seen - expected[kind]:
                    bad.append({"sequence": f"in-degree of {kind.symbol}", "n": g.level,
                                "expected": sorted(expected[kind]), "got": sorted(seen)})
        return bad

    def out_edges():
        expected = {
            VK.A: {(0, 2, q - 4, 0, 1, 0)},
            VK.B: {(0, 2, q - 3, 0, 0, 1)},
            VK.C: {(0, 0, 0, 2, 1, 0)},
            VK.D: {(0, 0, 0, 0, 3, q - 4)},
            VK.E: {(0, 0, 0, 0, 2, q - 2)},
        }
        if q == 4:
            # the triangle-face interior is C and feeds D like a face vertex
            expected = {VK.C: {(0, 0, 0, 2, 1, 0)}, VK.D: {(0, 0, 0, 0, 3, 0)}}
        bad = []
        for g, h in zip(levels[1:], levels[2:]):
            prof = out_edge_profiles(g, h)
            for kind, want in expected.items():
                if kind in prof and prof[kind] != want:
                    bad.append({"sequence": f"out-edges of {kind.symbol}", "n": g.level,
                                "expected": sorted(want), "got": sorted(prof[kind])})
        return bad

    def sum_system_coefficients():
        # label mass flowing parent kind -> child kind must match the coefficients of the sum system
        bad = []
        coef = {
            VK.A: {VK.A: 2, VK.B: q - 4, VK.D: 1},
            VK.B: {VK.A: 2, VK.B: q - 3, VK.E: 1},
            VK.C: {VK.C: 2, VK.D: 1},
            VK.D: {VK.D: 3, VK.E: q - 4},
            VK.E: {VK.D: 2, VK.E: q - 2},
        }
        ones = {VK.ONE: 3, VK.A: 2, VK.C: 4}
        if q == 4:
            return bad, "not applicable for q=4"
        for g, h in zip(levels[1:], levels[2:]):
            flow = label_flow(g, h)
            per_kind = {kind: getattr(sums[g.level], "v" if kind is VK.ONE else kind.symbol.lower()) for kind in VK}
            for pk in VK:
                for ck in VK:
                    want = ones.get(ck, 0) if pk is VK.ONE else coef[pk].get(ck, 0) * per_kind[pk]
                    if flow[pk, ck] != want:
                        bad.append({"sequence": f"label flow {pk.symbol}->{ck.symbol}", "n": g.level,
                                    "expected": want, "got": int(flow[pk, ck])})
        return bad

    def edge_census():
        bad = []
        for g, h in zip(levels[:-1], levels[1:]):
            t = transition_counts(g, h)
            if int(t.sum()) != int(h.in_degrees().sum()):
                bad.append({"sequence": "edges", "n": h.level, "expected": int(h.in_degrees().sum()), "got": int(t.sum())})
        return bad

    def palindromes():
        bad = []
        for row in pyr.table.rows:
            if not is_palindrome(row):
                bad.append({"sequence": "triangle row", "n": row.index, "expected": "palindrome", "got": "asymmetric"})
        for g in levels:
            mir = g.mirror()
            if not (np.array_equal(g.kinds, g.kinds[mir]) and all(g.labels == g.labels[mir])):
                bad.append({"sequence": "level", "n": g.level, "expected": "mirror-symmetric", "got": "asymmetric"})
        return bad

    def c_and_ones():
        bad = []
        for g, cv in zip(levels[1:], censuses[1:]):
            c_expected = 3 * (g.level - 1) if q == 4 else 2 * (g.level - 1)
            if cv.c != c_expected:
                bad.append({"sequence": "c", "n": g.level, "expected": c_expected, "got": cv.c})
            if g.one_count() != 3:
                bad.append({"sequence": "type-1 count", "n": g.level, "expected": 3, "got": g.one_count()})
        return bad

    def euclidean_faces():
        bad = []
        for g in levels:
            wing = (g.indices == 0) | (g.indices == g.table.offsets[g.rows + 1] - g.table.offsets[g.rows] - 1)
            for j in np.nonzero(wing)[0]:
                want = comb(g.level, int(g.heights[j]))
                if int(g.labels[j]) != want:
                    bad.append({"sequence": "face label", "n": g.level, "expected": want, "got": int(g.labels[j])})
                    break
            left, right = face_value_sums(g)
            if (left, right) != (2**g.level, 2**g.level):
                bad.append({"sequence": "face sums", "n": g.level, "expected": [2**g.level] * 2, "got": [left, right]})
        return bad

    run.run("graph.labels_summation_vs_product", labels_vs_product)
    run.run("graph.kind_routes_agree", kind_routes)
    run.run("graph.indegree_rule", indegree_rule)
    run.run("graph.out_edge_profiles", out_edges)
    run.run("graph.sum_system_coefficients", sum_system_coefficients)
    run.run("graph.edge_census", edge_census)
    run.run("graph.palindrome", palindromes)
    run.run("graph.c_and_type1_counts", c_and_ones)
    run.run("graph.euclidean_faces", euclidean_faces)
    return censuses, sums


# -- sequence checks --------------------------------------------------------------


def _column(vectors, attr):
    return [getattr(v, attr) for v in vectors]


def _hyperbolic_checks(run: _Runner, report: Report, q: int, n_max: int,
                       censuses: list, graph_sums: list, literal_c: bool) -> None:
    counts = seq.counts_by_recurrence(q, n_max)
    sums = seq.sums_by_recurrence(q, n_max, literal_c=literal_c)
    graph_n = len(censuses)

    run.run("counts.graph_vs_system", lambda: compare("counts", [cv.values() for cv in counts[:graph_n]],
                                                      [cv.values() for cv in censuses]))
    run.run("sums.graph_vs_system", lambda: sum(
        (compare(f, _column(graph_sums, a), _column(sums[:graph_n], a))
         for f, a in zip(seq.SUM_FIELDS, "abcdevs")), []))

    def identities():
        return [{"sequence": "linear identities", "n": cv.n, "expected": True, "got": False}
                for cv in counts[1:] if not seq.lemma31_identities(cv, q)]

    recs = seq.order_reduced_recurrences(q)

    def reduced(prefix_fields, vectors):
        bad = []
        for key, rec in recs.items():
            name = key.split(".")[0]
            if name not in prefix_fields:
                continue
            attr = name.replace("_hat", "")
            target = _column(vectors, attr)
            got = rec.terms(n_max)
            bad += compare(key, target[rec.start:], got, rec.start)
        return bad

    def closed_counts():
        return compare("closed forms", [cv.values() for cv in counts], [cf.closed_form_counts(q, n).values() for n in range(n_max + 1)])

    def matrix_powers():
        bad = compare("matrix iteration", [sv.values() for sv in sums], [sv.values() for sv in seq.sums_by_matrix(q, n_max)])
        direct = seq.sums_by_matrix_power(q, n_max)
        if direct != sums[n_max]:
            bad.append({"sequence": "matrix power", "n": n_max, "expected": sums[n_max].values(), "got": direct.values()})
        return bad

    def closed_shat():
        bad = compare("s_hat closed form", _column(sums, "s"), [cf.closed_form_shat(q, n) for n in range(n_max + 1)])
        bad += compare("s_hat solved constants", _column(sums, "s"), [cf.closed_form_shat_solved(q, n) for n in range(n_max + 1)])
        b1, b2, b3 = cf.solve_shat_constants(q)
        stated = cf.shat_coefficient(q)
        if (b1, b2, b3) != (stated, stated.conjugate(), 2):
            bad.append({"sequence": "s_hat constants", "n": None, "expected": [str(stated), str(stated.conjugate()), "2"],
                        "got": [str(b1), str(b2), str(b3)]})
        return bad

    def charpolys():
        bad = []
        p6 = seq.char_poly_p6(q)
        for label, other in (
            ("det(xI-M)", seq.charpoly_of_transition(q)),
            ("order-6 coefficients", seq.coefficients_to_charpoly(seq.order6_coefficients(q))),
        ):
            if other != p6:
                bad.append({"sequence": label, "n": None, "expected": p6, "got": other})
        pairs = (
            ("s_hat.order3", seq.char_poly_shat(q)),
            ("a_hat.order3", seq.char_poly_ab_hat(q)),
            ("c_hat.order2", seq.char_poly_c_hat()),
            ("s.order4", seq.char_poly_counts(q)),
            ("a.order3", seq.char_poly_ab_counts(q)),
        )
        for key, poly in pairs:
            if recs[key].characteristic() != poly:
                bad.append({"sequence": key, "n": None, "expected": poly, "got": recs[key].characteristic()})
        return bad

    def gfs():
        bad = compare("s generating function", _column(counts, "s"), analytic.s_generating_function(q).series(n_max + 1))
        bad += compare("s_hat generating function", _column(sums, "s"), analytic.shat_generating_function(q).series(n_max + 1))
        if list(analytic.s_generating_function(q).denominator) != seq.char_poly_counts(q):
            bad.append({"sequence": "s gf denominator", "n": None, "expected": seq.char_poly_counts(q),
                        "got": list(analytic.s_generating_function(q).denominator)})
        if list(analytic.shat_generating_function(q).denominator) != seq.char_poly_shat(q):
            bad.append({"sequence": "s_hat gf denominator", "n": None, "expected": seq.char_poly_shat(q),
                        "got": list(analytic.shat_generating_function(q).denominator)})
        return bad

    def roots():
        bad = []
        c1, c2 = cf.count_roots(q)
        s1, s2 = cf.sum_roots(q)
        if c1 * c2 != 1:
            bad.append({"sequence": "count roots product", "n": None, "expected": 1, "got": str(c1 * c2)})
        if s1 * s2 != q + 2:
            bad.append({"sequence": "sum roots product", "n": None, "expected": q + 2, "got": str(s1 * s2)})
        if not analytic.is_shat_root(q, s1):
            bad.append({"sequence": "dominant root", "n": None, "expected": 0, "got": "nonzero"})
        ratio = analytic.growth_ratio(q, n_max - 1 if n_max >= 1 else None)
        detail = f"alpha1 = {ratio.exact} ~ {ratio.value:.6f}"
        if ratio.empirical is not None:
            detail += f"; s_hat_{n_max}/s_hat_{n_max - 1} ~ {float(ratio.empirical):.6f}"
        return bad, detail

    run.run("counts.linear_identities", identities)
    run.run("counts.reduced_recurrences", lambda: reduced(seq.COUNT_FIELDS, counts))
    run.run("counts.closed_forms", closed_counts)
    run.run("sums.matrix_powers", matrix_powers)
    run.run("sums.reduced_recurrences", lambda: reduced(seq.SUM_FIELDS, sums))
    run.run("sums.closed_form", closed_shat)
    run.run("charpoly.consistency", charpolys)
    run.run("gf.series", gfs)
    run.run("roots.exact_identities", roots)

    if q == REFERENCE_Q:
        _reference_tables(run, report, counts, sums, n_max)
    _hyperbolic_errata(report, q, n_max, counts, sums, graph_sums)


def _reference_tables(run: _Runner, report: Report, counts, sums, n_max: int) -> None:
    top = min(n_max, 10)

    def table1():
        bad = []
        for f in seq.COUNT_FIELDS:
            bad += compare(f, COUNTS_Q5[f][: top + 1], _column(counts, f)[: top + 1])
        return bad

    def table2():
        bad, findings = [], []
        for f in seq.SUM_FIELDS:
            if f == "v_hat":
                continue
            attr = f.replace("_hat", "")
            for m in compare(f, SUMS_Q5[f][: top + 1], _column(sums, attr)[: top + 1]):
                n = m["n"]
                # a printed cell is a misprint if substituting the computed value
                # makes its own column add up to the printed total
                repaired = {k: v[n] for k, v in SUMS_Q5.items()}
                repaired[f] = m["got"]
                parts = sum(repaired[k] for k in ("a_hat", "b_hat", "c_hat", "d_hat", "e_hat")) + (1 if n == 0 else 3)
                if f != "s_hat" and parts == SUMS_Q5["s_hat"][n]:
                    findings.append(Finding(
                        f"reference_table.{f}_{n}",
                        f"printed {f}_{n} = {m['expected']}",
                        True,
                        {"printed": m["expected"], "computed": m["got"],
                         "printed_column_total": SUMS_Q5["s_hat"][n],
                         "column_total_with_computed_cell": parts},
                    ))
                else:
                    bad.append(m)
        report.errata.extend(findings)
        detail = f"{len(findings)} misprinted cell(s) logged as errata" if findings else ""
        return bad, detail

    run.run("reference.counts_table", table1)
    run.run("reference.sums_table", table2)


def _hyperbolic_errata(report: Report, q: int, n_max: int, counts, sums, graph_sums) -> None:
    E = report.errata
    horizon = max(n_max, 4)

    literal = seq.sums_by_recurrence(q, horizon, literal_c=True)
    hatted = seq.sums_by_recurrence(q, horizon)
    first = next(((sv.n, f) for sv, tv in zip(literal, hatted) for f in "abcde"
                  if getattr(sv, f) != getattr(tv, f)), None)
    evidence: dict[str, Any] = {}
    if first:
        n, f = first
        evidence = {"sequence": f + "_hat", "n": n, "literal_c": getattr(literal[n], f), "c_hat": getattr(hatted[n], f)}
        if graph_sums and n < len(graph_sums):
            evidence["graph"] = getattr(graph_sums[n], f)
    E.append(Finding("sum_system.unhatted_c_in_d_line",
                     "D-line of the label-sum system uses the vertex count c_n",
                     first is not None, evidence))

    exact = seq.counts_by_recurrence(q, horizon)
    for name, fn, probe, attr in (("d", cf.printed_closed_d, 3, "d"), ("s", cf.printed_closed_s, 2, "s")):
        values = {n: fn(q, n) for n in range(1, horizon + 1)}
        wrong = [n for n, v in values.items() if v != getattr(exact[n], attr)]
        E.append(Finding(
            f"closed_form.printed_{name}",
            f"stated explicit formula for {name}_n",
            bool(wrong),
            {"n": probe, "printed": str(values[probe]), "actual": getattr(exact[probe], attr),
             "failing_levels": wrong,
             "replacement": "derived from a_n and b_n through the linear identities"},
        ))

    m_printed = seq.transition_matrix(q, c_diagonal=1)
    cp = normalize_int(charpoly(m_printed))
    traj = seq.matrix_trajectory_sums(q, [0] * 5 + [3], 2, m_printed)
    E.append(Finding("matrix.c_hat_diagonal",
                     "printed transition matrix has 1 as the c_hat diagonal entry",
                     cp != seq.char_poly_p6(q),
                     {"charpoly_printed": cp, "charpoly_expected": seq.char_poly_p6(q),
                      "s_hat_3_printed": str(traj[2]), "s_hat_3": hatted[3].s}))

    u0 = [Fraction(0)] * 5 + [Fraction(1)]
    step = mat_vec(seq.transition_matrix(q), u0)
    from_u0 = seq.matrix_trajectory_sums(q, u0, 4)
    E.append(Finding("matrix.start_vector",
                     "matrix recursion applies from level 1; level 0 is not M^-1 of level 1",
                     from_u0[4] != hatted[4].s,
                     {"M_u0": [str(x) for x in step], "sum_M4_u0": str(from_u0[4]),
                      "sum_M3_u1": hatted[4].s}))

    recs = seq.order_reduced_recurrences(q)
    for key, family in (("a_hat.order3", "sum.order3_ab"), ("b_hat.order3", "sum.order3_ab"), ("c_hat.order2", "sum.order2_c")):
        attr = key.split(".")[0].replace("_hat", "")
        stated = seq.STATED_FROM[family]
        col = _column(hatted, attr)
        mismatch = recs[key].first_mismatch(col, stated)
        E.append(Finding(f"recurrence.{key}.range",
                         f"{key} stated to hold from n={stated}",
                         mismatch is not None and mismatch < seq.VALID_FROM[family],
                         {"stated_from": stated, "holds_from": seq.VALID_FROM[family], "first_failure": mismatch}))

    zero = {"a": cf.closed_a(q, 0), "b": cf.closed_b(q, 0), "e": cf.closed_e(q, 0)}
    E.append(Finding("closed_form.counts_at_level_0",
                     "explicit count formulas at n=0",
                     any(v != 0 for v in zero.values()),
                     {k: str(v) for k, v in zero.items()} | {"holds_for": "n >= 1"}))
    E.append(Finding("closed_form.s_hat_at_level_0",
                     "explicit s_hat formula stated for n >= 1",
                     False,
                     {"value_at_0": cf.closed_form_shat(q, 0), "s_hat_0": 1,
                      "holds_at_0": cf.closed_form_shat(q, 0) == 1}))


def _euclidean_checks(run: _Runner, report: Report, n_max: int, levels: list[LevelGraph]) -> None:
    graph_n = len(levels)

    def counts():
        want = [seq.euclidean_count_vector(n).values() for n in range(graph_n)]
        bad = compare("counts", want, [g.census().values() for g in levels])
        bad += compare("s", [(n + 1) * (n + 2) // 2 for n in range(n_max + 1)],
                       [seq.euclidean_counts(n)[0] for n in range(n_max + 1)])
        return bad

    def sums():
        want = [seq.euclidean_sum_vector(n).values() for n in range(graph_n)]
        bad = compare("sums", want, [g.value_sums().values() for g in levels])
        bad += compare("s_hat", [3**n for n in range(n_max + 1)], [seq.euclidean_counts(n)[1] for n in range(n_max + 1)])
        return bad

    def paths():
        top = min(graph_n - 1, 8)
        if top < 0:
            return [], "no levels within cap"
        got = sum(enumerate_path_counts(levels[: top + 1]))
        return compare("enumerated paths", [3**top], [got], top), f"enumerated {got} paths to level {top}"

    run.run("euclidean.counts", counts)
    run.run("euclidean.sums", sums)
    run.run("euclidean.path_enumeration", paths)

    c = d = 0
    literal = [0, 0]
    for _ in range(1, max(n_max, 3)):
        c, d = c + 3, d + c
        literal.append(d)
    actual = [seq.euclidean_counts(n)[3] for n in range(len(literal))]
    wrong = [n for n, (x, y) in enumerate(zip(literal, actual)) if x != y]
    report.errata.append(Finding(
        "euclidean.interior_recurrence",
        "q=4 interior count recurrence adds the full face count c_n",
        bool(wrong),
        {"n": 3, "literal": literal[3], "actual": actual[3], "failing_levels": wrong[:10],
         "replacement": "d_{n+1} = d_n + c_n/3"},
    ))


def run_verify(q: int, n_max: int, cap: int | None = None, literal_c: bool = False,
               structural: bool = True) -> Report:
    """Run every check for ``q`` on levels ``0..n_max``; graph checks stop at the cap.

    With ``structural=False`` the built levels only supply censuses and label
    sums; the per-vertex graph invariants are skipped.
    """
    t0 = time.perf_counter()
    cap = default_cap() if cap is None else cap
    limit = graph_level_limit(q, n_max, cap)
    report = Report(q, n_max, limit + 1)
    run = _Runner(report)

    levels: list[LevelGraph] = []
    censuses: list = []
    graph_sums: list = []
    if limit >= 0:
        pyr = PascalPyramid(q, limit, cap)
        levels = [pyr.level(n) for n in range(limit + 1)]
        censuses, graph_sums = _graph_checks(run, pyr, limit, structural)

    if q == 4:
        _euclidean_checks(run, report, n_max, levels)
    else:
        _hyperbolic_checks(run, report, q, n_max, censuses, graph_sums, literal_c)
    report.seconds = round(time.perf_counter() - t0, 6)
    return report


def summarize(report: Report) -> list[str]:
    lines = [f"q={report.q} n_max={report.n_max} graph_levels={report.graph_levels}"]
    for c in report.checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        if c.detail:
            line += f"  ({c.detail})"
        lines.append(line)
        for m in c.mismatches[:10]:
            lines.append(f"      {m['sequence']} n={m['n']}: expected {m['expected']}, got {m['got']}")
    for e in report.errata:
        tag = "ERRATUM" if e.disagrees else "NOTE"
        lines.append(f"{tag}  {e.name}: {e.statement}; {e.evidence}")
    lines.append("ALL CHECKS PASSED" if report.passed else f"{len(report.failed())} CHECK(S) FAILED")
    return lines
