"""Deterministic CSV / JSON / DOT / text renderings.

Large integers are always written as decimal strings in JSON.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .pyramid import LevelGraph, VertexKind
from .sequences import COUNT_FIELDS, CountVector, SumVector

SUM_COLUMNS = ("a_hat", "b_hat", "c_hat", "d_hat", "e_hat", "s_hat")

DOT_SHAPES = {
    VertexKind.ONE: "plain",
    VertexKind.A: "circle",
    VertexKind.B: "diamond",
    VertexKind.C: "square",
    VertexKind.D: "hexagon",
    VertexKind.E: "pentagon",
}


def _count_rows(vectors: Sequence[CountVector]) -> tuple[list[str], list[list[int]]]:
    return ["n", *COUNT_FIELDS], [[v.n, *v.values()] for v in vectors]


def _sum_rows(vectors: Sequence[SumVector]) -> tuple[list[str], list[list[int]]]:
    return ["n", *SUM_COLUMNS], [[v.n, v.a, v.b, v.c, v.d, v.e, v.s] for v in vectors]


def rows_for(vectors: Sequence) -> tuple[list[str], list[list[int]]]:
    if vectors and isinstance(vectors[0], SumVector):
        return _sum_rows(vectors)
    return _count_rows(vectors)


def to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(x) for x in row])
    return buf.getvalue()


def to_json_records(header: Sequence[str], rows: Sequence[Sequence], int_keys: Sequence[str] = ("n",)) -> str:
    records = [
        {k: (int(v) if k in int_keys else str(v)) for k, v in zip(header, row)}
        for row in rows
    ]
    return json.dumps(records, indent=1) + "\n"


def to_text_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    """Transposed layout: one line per sequence, one column per level."""
    columns = list(zip(*rows)) if rows else [()] * len(header)
    width = max([len(str(x)) for row in rows for x in row] + [1])
    name_w = max(len(h) for h in header)
    lines = []
    for name, col in zip(header, columns):
        lines.append(name.ljust(name_w) + " " + " ".join(str(x).rjust(width) for x in col))
    return "\n".join(lines) + "\n"


def render_sequences(vectors: Sequence, fmt: str) -> str:
    header, rows = rows_for(vectors)
    if fmt == "csv":
        return to_csv(header, rows)
    if fmt == "json":
        return to_json_records(header, rows)
    if fmt == "table":
        return to_text_table(header, rows)
    raise ValueError(f"format {fmt!r} not supported for sequences")


def vertex_records(g: LevelGraph) -> list[dict]:
    out = []
    for j, v in enumerate(g.vertices()):
        out.append({
            "level": g.level,
            "row": v.row,
            "index": v.index,
            "height": v.height,
            "type": v.kind.symbol,
            "label": str(v.label),
            "ascendants": list(g.ascendants(j)),
        })
    return out


def level_json(g: LevelGraph) -> str:
    """JSON array, one vertex object per line, in canonical level order."""
    records = vertex_records(g)
    body = ",\n".join(json.dumps(r, separators=(",", ":")) for r in records)
    return "[\n" + body + "\n]\n"


def level_csv(g: LevelGraph) -> str:
    header = ["level", "row", "index", "height", "type", "label"]
    rows = [[g.level, v.row, v.index, v.height, v.kind.symbol, v.label] for v in g.vertices()]
    return to_csv(header, rows)


def level_table(g: LevelGraph) -> str:
    lines = []
    for m in range(g.level + 1):
        lo, hi = int(g.table.offsets[m]), int(g.table.offsets[m + 1])
        cells = [f"{int(g.labels[j])}{VertexKind(int(g.kinds[j])).symbol}" for j in range(lo, hi)]
        lines.append(f"row {m} height {g.level - m}: " + " ".join(cells))
    return "\n".join(lines) + "\n"


def _node_id(level: int, j: int) -> str:
    return f'"L{level}_{j}"'


def levels_dot(upper: LevelGraph, lower: LevelGraph) -> str:
    """Digraph of two consecutive levels with kind-specific node shapes."""
    if lower.level != upper.level + 1:
        raise ValueError("levels must be consecutive")
    lines = [f'digraph "PP(4,{upper.q}) levels {upper.level}-{lower.level}" {{', "  rankdir=TB;"]
    for g in (upper, lower):
        lines.append(f"  subgraph level_{g.level} {{")
        lines.append("    rank=same;")
        for j in range(len(g)):
            kind = VertexKind(int(g.kinds[j]))
            lines.append(f'    {_node_id(g.level, j)} [label="{int(g.labels[j])}", shape={DOT_SHAPES[kind]}];')
        lines.append("  }")
    src, dst = lower.edges()
    for s, d in sorted(zip(src.tolist(), dst.tolist()), key=lambda e: (e[1], e[0])):
        lines.append(f"  {_node_id(upper.level, s)} -> {_node_id(lower.level, d)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
