"""Serialization: drawing documents, arc families, graphs, and reports.

Rational coordinates serialize as strings like "3" or "5/2" (never floats),
so documents are exact and diff-friendly.  The canonical form sorts vertices
and edges by id and reduces all fractions; parse-then-serialize is the
identity on canonical documents.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .bisection import AbstractGraph
from .drawing import Drawing, Edge
from .geometry import Point

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def _rat(s) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad rational {s!r}: {exc}") from exc


def _point(xy) -> Point:
    if len(xy) != 2:
        raise DocumentError(f"bad point {xy!r}")
    return Point(_rat(xy[0]), _rat(xy[1]))


def drawing_to_document(d: Drawing) -> dict:
    doc = {
        "format": FORMAT_VERSION,
        "vertices": [
            {"id": vid, "x": str(p.x), "y": str(p.y)}
            for vid, p in sorted(d.vertices.items())
        ],
        "edges": [
            {
                "id": eid,
                "tail": e.tail,
                "head": e.head,
                "points": [[str(p.x), str(p.y)] for p in e.arc],
            }
            for eid, e in sorted(d.edges.items())
        ],
    }
    if d.bipartition:
        doc["bipartition"] = dict(sorted(d.bipartition.items()))
    return doc


def document_to_drawing(doc: dict) -> Drawing:
    if doc.get("format") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format {doc.get('format')!r}")
    vertices = {}
    for row in doc["vertices"]:
        vid = row["id"]
        if vid in vertices:
            raise DocumentError(f"duplicate vertex id {vid}")
        vertices[vid] = Point(_rat(row["x"]), _rat(row["y"]))
    edges = {}
    for row in doc["edges"]:
        eid = row["id"]
        if eid in edges:
            raise DocumentError(f"duplicate edge id {eid}")
        pts = tuple(_point(xy) for xy in row["points"])
        edges[eid] = Edge(row["tail"], row["head"], pts)
    return Drawing(vertices, edges, doc.get("bipartition"))


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_drawing(d: Drawing, path) -> None:
    Path(path).write_text(dumps_canonical(drawing_to_document(d)))


def load_drawing(path) -> Drawing:
    return document_to_drawing(json.loads(Path(path).read_text()))


def arcs_to_document(families: Sequence[Sequence[Tuple[Point, ...]]]) -> dict:
    return {
        "format": FORMAT_VERSION,
        "families": [
            [[[str(p.x), str(p.y)] for p in arc] for arc in family]
            for family in families
        ],
    }


def document_to_arcs(doc: dict) -> List[List[Tuple[Point, ...]]]:
    if doc.get("format") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format {doc.get('format')!r}")
    return [
        [tuple(_point(xy) for xy in arc) for arc in family]
        for family in doc["families"]
    ]


def save_arcs(families, path) -> None:
    Path(path).write_text(dumps_canonical(arcs_to_document(families)))


def load_arcs(path) -> List[List[Tuple[Point, ...]]]:
    return document_to_arcs(json.loads(Path(path).read_text()))


def graph_to_document(g: AbstractGraph) -> dict:
    return {"format": FORMAT_VERSION, "n": g.n, "edges": [list(e) for e in g.edges]}


def document_to_graph(doc: dict) -> AbstractGraph:
    return AbstractGraph.from_pairs(doc["n"], [tuple(e) for e in doc["edges"]])


def load_graph(path) -> AbstractGraph:
    return document_to_graph(json.loads(Path(path).read_text()))


def rows_to_csv(rows: List[dict]) -> str:
    if not rows:
        return ""
    fields = list(rows[0].keys())
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _plain(v) for k, v in row.items()})
    return buf.getvalue()


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return "|".join(str(x) for x in v)
    return v
