"""JSON-compatible document formats and DOT export.

Document shapes (unknown fields are rejected at every level):

* graph:         ``{"vertices": [...], "edges": [{"id", "end0", "end1"}]}``
* paired graph:  graph plus ``{"pairs": [[u, v], ...]}`` and an optional
                 ``{"rotation": {"<vertex>": [[edge, side], ...]}}``
* complex:       ``{"skeleton": <graph>, "cells": [[[edge, entry_side], ...], ...],
                 "kind": "genuine" | "punctured"}``
* colouring:     ``{"palette_size": k, "assignment": {"<id>": colour}}``
* witness:       paired graph plus ``{"designated_pairs": [...], "provenance": {...}}``

Ids may be ints, strings, or (possibly nested) arrays of these; arrays
load as tuples.  JSON object keys must be strings, so mapping keys
(rotation vertices, colouring targets) use an id's text form and are
resolved against the ids of the object they accompany.  Writing fails if
two ids of one object share a text form.
"""

from __future__ import annotations

import json
from typing import Mapping, Optional

from .core import (
    GENUINE,
    PUNCTURED,
    ClosedWalk,
    Edge,
    EdgeEnd,
    Multigraph,
    PairedGraph,
    Pairing,
    RotationSystem,
    TwoComplex,
    WalkStep,
    id_sort_key,
)
from .errors import DomainError, SchemaError

DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#17becf", "#666666", "#1b9e77", "#d95f02", "#7570b3",
)


def id_to_json(value):
    if isinstance(value, tuple):
        return [id_to_json(v) for v in value]
    return value


def id_from_json(value):
    if isinstance(value, list):
        out = tuple(id_from_json(v) for v in value)
    else:
        out = value
    try:
        id_sort_key(out)
    except DomainError as exc:
        raise SchemaError(str(exc)) from None
    return out


def id_text(value) -> str:
    """Human-readable text form of an id, used for JSON mapping keys."""
    if isinstance(value, tuple):
        return ":".join(id_text(v) for v in value)
    return str(value)


def text_key_map(ids, what: str) -> dict:
    """Map text forms back to ids, failing on collisions."""
    out = {}
    for i in ids:
        t = id_text(i)
        if t in out and out[t] != i:
            raise SchemaError(f"{what}: ids {out[t]!r} and {i!r} share the text form {t!r}")
        out[t] = i
    return out


def _check_fields(doc, required, optional, what):
    if not isinstance(doc, Mapping):
        raise SchemaError(f"{what} document must be a JSON object")
    for name in required:
        if name not in doc:
            raise SchemaError(f"{what} document is missing field {name!r}")
    for name in doc:
        if name not in required and name not in optional:
            raise SchemaError(f"unknown field {name!r} in {what} document")


# ---------------------------------------------------------------------------
# Graphs


def graph_to_doc(g: Multigraph) -> dict:
    return {
        "vertices": [id_to_json(v) for v in g.vertices],
        "edges": [
            {"id": id_to_json(e.id), "end0": id_to_json(e.end0), "end1": id_to_json(e.end1)}
            for e in g.edges
        ],
    }


def graph_from_doc(doc) -> Multigraph:
    _check_fields(doc, ("vertices", "edges"), (), "graph")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise SchemaError("graph fields 'vertices' and 'edges' must be arrays")
    vertices = tuple(id_from_json(v) for v in doc["vertices"])
    edges = []
    for e in doc["edges"]:
        _check_fields(e, ("id", "end0", "end1"), (), "edge")
        edges.append(Edge(id_from_json(e["id"]), id_from_json(e["end0"]), id_from_json(e["end1"])))
    try:
        return Multigraph(vertices, tuple(edges))
    except DomainError as exc:
        raise SchemaError(str(exc)) from None


# ---------------------------------------------------------------------------
# Paired graphs


def _rotation_to_doc(g: Multigraph, rot: RotationSystem) -> dict:
    text_key_map(g.vertices, "paired graph")  # reject text-form collisions
    return {
        id_text(v): [[id_to_json(end.edge), end.side] for end in order]
        for v, order in rot.orders
    }


def _rotation_from_doc(doc, vertices) -> RotationSystem:
    if not isinstance(doc, Mapping):
        raise SchemaError("rotation must be a JSON object")
    by_text = text_key_map(vertices, "rotation")
    orders = {}
    for key, order in doc.items():
        if key not in by_text:
            raise SchemaError(f"rotation mentions unknown vertex {key!r}")
        if not isinstance(order, list):
            raise SchemaError(f"rotation order at {key!r} must be an array")
        ends = []
        for item in order:
            if not isinstance(item, list) or len(item) != 2 or item[1] not in (0, 1):
                raise SchemaError(f"rotation entry {item!r} must be [edge, side]")
            ends.append(EdgeEnd(id_from_json(item[0]), item[1]))
        orders[by_text[key]] = tuple(ends)
    try:
        return RotationSystem(orders)
    except DomainError as exc:
        raise SchemaError(str(exc)) from None


def paired_graph_to_doc(pg: PairedGraph) -> dict:
    doc = graph_to_doc(pg.graph)
    doc["pairs"] = [[id_to_json(u), id_to_json(v)] for u, v in pg.pairing.pairs]
    if pg.rotation is not None:
        doc["rotation"] = _rotation_to_doc(pg.graph, pg.rotation)
    return doc


def _parse_pairs(raw) -> Pairing:
    if not isinstance(raw, list):
        raise SchemaError("'pairs' must be an array")
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"pair {item!r} must be an array of two vertices")
        pairs.append((id_from_json(item[0]), id_from_json(item[1])))
    try:
        return Pairing(tuple(pairs))
    except DomainError as exc:
        raise SchemaError(str(exc)) from None


def paired_graph_from_doc(doc) -> PairedGraph:
    _check_fields(doc, ("vertices", "edges", "pairs"), ("rotation",), "paired graph")
    g = graph_from_doc({"vertices": doc["vertices"], "edges": doc["edges"]})
    pairing = _parse_pairs(doc["pairs"])
    rotation = None
    if "rotation" in doc:
        rotation = _rotation_from_doc(doc["rotation"], g.vertices)
    try:
        return PairedGraph(g, pairing, rotation)
    except DomainError as exc:
        raise SchemaError(str(exc)) from None


# ---------------------------------------------------------------------------
# Complexes


def complex_to_doc(c: TwoComplex) -> dict:
    return {
        "skeleton": graph_to_doc(c.skeleton),
        "cells": [
            [[id_to_json(s.edge), s.entry] for s in cell.steps] for cell in c.cells
        ],
        "kind": c.kind,
    }


def complex_from_doc(doc) -> TwoComplex:
    _check_fields(doc, ("skeleton", "cells", "kind"), (), "complex")
    skeleton = graph_from_doc(doc["skeleton"])
    if doc["kind"] not in (GENUINE, PUNCTURED):
        raise SchemaError(f"unknown complex kind {doc['kind']!r}")
    if not isinstance(doc["cells"], list):
        raise SchemaError("'cells' must be an array")
    cells = []
    for cell in doc["cells"]:
        if not isinstance(cell, list):
            raise SchemaError("each cell must be an array of steps")
        steps = []
        for item in cell:
            if not isinstance(item, list) or len(item) != 2 or item[1] not in (0, 1):
                raise SchemaError(f"walk step {item!r} must be [edge, entry_side]")
            steps.append(WalkStep(id_from_json(item[0]), item[1]))
        try:
            cells.append(ClosedWalk(tuple(steps)))
        except DomainError as exc:
            raise SchemaError(str(exc)) from None
    try:
        return TwoComplex(skeleton, tuple(cells), doc["kind"])
    except DomainError as exc:
        raise SchemaError(str(exc)) from None


# ---------------------------------------------------------------------------
# Colourings


def colouring_to_doc(palette_size: int, assignment: Mapping) -> dict:
    text_key_map(assignment.keys(), "colouring")  # reject text-form collisions
    items = sorted(assignment.items(), key=lambda kv: id_sort_key(kv[0]))
    return {
        "palette_size": palette_size,
        "assignment": {id_text(k): v for k, v in items},
    }


def colouring_from_doc(doc):
    """Returns (palette_size, {text: colour}); resolve the text keys against
    a known id set with ``resolve_assignment``."""
    _check_fields(doc, ("palette_size", "assignment"), (), "colouring")
    k = doc["palette_size"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise SchemaError("'palette_size' must be a non-negative integer")
    if not isinstance(doc["assignment"], Mapping):
        raise SchemaError("'assignment' must be a JSON object")
    for key, colour in doc["assignment"].items():
        if not isinstance(colour, int) or isinstance(colour, bool):
            raise SchemaError(f"colour of {key!r} must be an integer")
    return k, dict(doc["assignment"])


def resolve_assignment(mapping: Mapping, candidates) -> dict:
    """Resolve text-form keys against the actual ids they refer to."""
    by_text = text_key_map(candidates, "assignment")
    out = {}
    for key, value in mapping.items():
        if key not in by_text:
            raise SchemaError(f"assignment mentions unknown id {key!r}")
        out[by_text[key]] = value
    return out


# ---------------------------------------------------------------------------
# Witnesses


def witness_to_doc(witness) -> dict:
    doc = graph_to_doc(witness.graph)
    doc["pairs"] = [[id_to_json(u), id_to_json(v)] for u, v in witness.pairs]
    if witness.rotation is not None:
        doc["rotation"] = _rotation_to_doc(witness.graph, witness.rotation)
    doc["designated_pairs"] = [
        [id_to_json(u), id_to_json(v)] for u, v in witness.designated_pairs
    ]
    doc["provenance"] = dict(witness.provenance)
    return doc


def witness_from_doc(doc):
    """Parse a witness document with only shape-level checks, so domain
    problems (bad rotation, broken pairing) surface as verification
    failures rather than load errors."""
    from .construct import TwelvePireWitness

    _check_fields(
        doc,
        ("vertices", "edges", "pairs", "designated_pairs", "provenance"),
        ("rotation",),
        "witness",
    )
    g = graph_from_doc({"vertices": doc["vertices"], "edges": doc["edges"]})

    def parse_pair_list(raw, what):
        if not isinstance(raw, list):
            raise SchemaError(f"{what!r} must be an array")
        pairs = []
        for item in raw:
            if not isinstance(item, list) or len(item) != 2:
                raise SchemaError(f"pair {item!r} must be an array of two vertices")
            pairs.append((id_from_json(item[0]), id_from_json(item[1])))
        return tuple(pairs)

    rotation = None
    if "rotation" in doc:
        if not isinstance(doc["rotation"], Mapping):
            raise SchemaError("rotation must be a JSON object")
        rotation = _rotation_from_doc(doc["rotation"], g.vertices)
    if not isinstance(doc["provenance"], Mapping):
        raise SchemaError("'provenance' must be a JSON object")
    return TwelvePireWitness(
        graph=g,
        pairs=parse_pair_list(doc["pairs"], "pairs"),
        rotation=rotation,
        designated_pairs=parse_pair_list(doc["designated_pairs"], "designated_pairs"),
        provenance=dict(doc["provenance"]),
    )


# ---------------------------------------------------------------------------
# Serialisation helpers and document sniffing


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("top-level document must be a JSON object")
    return doc


def save(path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def load(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def sniff_kind(doc: Mapping) -> str:
    """Classify a document as witness, complex, paired graph, or graph."""
    if not isinstance(doc, Mapping):
        raise SchemaError("top-level document must be a JSON object")
    if "designated_pairs" in doc:
        return "witness"
    if "skeleton" in doc:
        return "complex"
    if "pairs" in doc:
        return "paired"
    return "graph"


# ---------------------------------------------------------------------------
# DOT export


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Multigraph, pairing: Optional[Pairing] = None, name: str = "G") -> str:
    """DOT rendering of a multigraph; members of one pair share a border
    colour (the palette repeats after 12 pairs)."""
    lines = [f"graph {name} {{"]
    colour_of = {}
    if pairing is not None:
        for i, pair in enumerate(pairing.pairs):
            for v in pair:
                colour_of[v] = DOT_PALETTE[i % len(DOT_PALETTE)]
    for v in g.vertices:
        attrs = ""
        if v in colour_of:
            attrs = f' [color="{colour_of[v]}", penwidth=3]'
        lines.append(f"  {_dot_quote(id_text(v))}{attrs};")
    for e in g.edges:
        lines.append(
            f"  {_dot_quote(id_text(e.end0))} -- {_dot_quote(id_text(e.end1))}"
            f' [label={_dot_quote(id_text(e.id))}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
