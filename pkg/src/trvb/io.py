"""Versioned JSON instance formats, certificates, and DOT export.

Instance files: {"version": 1, "vertices": [{"id": n, "breakable": bool}, ...],
"edges": [[a, b], ...], "rotation": {"<id>": [[edgeIndex, end], ...]}} with the
rotation optional.  Directed instances use "arcs" in place of "edges".
Hypergraphs: {"vertices": [...], "edges": [[ids], ...]}.  Degree-0 vertices are
rejected at parse time.  Gadgets serialize as an instance plus a "ports" array
of stub vertex ids.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import Multigraph
from .gadgets import Gadget, _make
from .hypergraph import Hypergraph
from .reductions import DirectedMultigraph
from .solver import BreakCertificate

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed input file; message carries the offending field."""


def _load_json(source: str | Path | dict) -> Any:
    if isinstance(source, dict):
        return source
    text = Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from exc


def _expect(cond: bool, field: str, message: str) -> None:
    if not cond:
        raise ParseError(f"field {field!r}: {message}")


def _parse_rotation(data: Any) -> dict[int, tuple[tuple[int, int], ...]]:
    _expect(isinstance(data, dict), "rotation", "must be an object keyed by vertex id")
    rot = {}
    for key, seq in data.items():
        try:
            v = int(key)
        except ValueError:
            raise ParseError(f"field 'rotation': key {key!r} is not a vertex id") from None
        _expect(isinstance(seq, list), f"rotation[{key}]", "must be a list of [edge, end]")
        entries = []
        for item in seq:
            _expect(isinstance(item, list) and len(item) == 2, f"rotation[{key}]",
                    "entries must be [edgeIndex, end] pairs")
            e, s = item
            _expect(s in (0, 1), f"rotation[{key}]", "end must be 0 or 1")
            entries.append((int(e), int(s)))
        rot[v] = tuple(entries)
    return rot


def _parse_vertex_list(data: Any) -> tuple[set[int], set[int]]:
    _expect(isinstance(data, list), "vertices", "must be a list")
    breakable: set[int] = set()
    unbreakable: set[int] = set()
    seen: set[int] = set()
    for i, item in enumerate(data):
        _expect(isinstance(item, dict) and "id" in item and "breakable" in item,
                f"vertices[{i}]", "must be {\"id\": int, \"breakable\": bool}")
        vid = int(item["id"])
        _expect(vid not in seen, f"vertices[{i}]", f"duplicate vertex id {vid}")
        seen.add(vid)
        (breakable if item["breakable"] else unbreakable).add(vid)
    return breakable, unbreakable


def _check_version(data: Any) -> None:
    _expect(isinstance(data, dict), "(root)", "must be a JSON object")
    _expect(data.get("version") == FORMAT_VERSION, "version",
            f"must be {FORMAT_VERSION}")


def load_instance(source: str | Path | dict) -> Multigraph:
    data = _load_json(source)
    _check_version(data)
    breakable, unbreakable = _parse_vertex_list(data.get("vertices"))
    edges_raw = data.get("edges")
    _expect(isinstance(edges_raw, list), "edges", "must be a list of [a, b] pairs")
    edges = []
    for i, pair in enumerate(edges_raw):
        _expect(isinstance(pair, list) and len(pair) == 2, f"edges[{i}]",
                "must be an [a, b] pair")
        edges.append((int(pair[0]), int(pair[1])))
    rot = _parse_rotation(data["rotation"]) if "rotation" in data and data["rotation"] is not None else None
    try:
        g = Multigraph(frozenset(breakable), frozenset(unbreakable), tuple(edges), rot)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    for v in sorted(g.vertices):
        if g.degree(v) == 0:
            raise ParseError(f"vertex {v} has degree 0; instances must not contain "
                             "degree-0 vertices")
    return g


def instance_to_dict(g: Multigraph) -> dict:
    out: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "vertices": [{"id": v, "breakable": v in g.breakable}
                     for v in sorted(g.vertices)],
        "edges": [[a, b] for a, b in g.edges],
    }
    if g.rotation is not None:
        out["rotation"] = {str(v): [[e, s] for e, s in g.rotation.get(v, ())]
                           for v in sorted(g.vertices)}
    return out


def load_directed(source: str | Path | dict) -> DirectedMultigraph:
    data = _load_json(source)
    _check_version(data)
    _expect(isinstance(data.get("vertices"), list), "vertices", "must be a list")
    vertices = []
    for i, item in enumerate(data["vertices"]):
        if isinstance(item, dict):
            vertices.append(int(item["id"]))
        else:
            vertices.append(int(item))
    arcs_raw = data.get("arcs")
    _expect(isinstance(arcs_raw, list), "arcs", "must be a list of [tail, head] pairs")
    arcs = []
    for i, pair in enumerate(arcs_raw):
        _expect(isinstance(pair, list) and len(pair) == 2, f"arcs[{i}]",
                "must be a [tail, head] pair")
        arcs.append((int(pair[0]), int(pair[1])))
    rot = _parse_rotation(data["rotation"]) if "rotation" in data and data["rotation"] is not None else None
    try:
        d = DirectedMultigraph(frozenset(vertices), tuple(arcs), rot)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    for v in sorted(d.vertices):
        if d.in_degree(v) + d.out_degree(v) == 0:
            raise ParseError(f"vertex {v} has degree 0; instances must not contain "
                             "degree-0 vertices")
    return d


def directed_to_dict(d: DirectedMultigraph) -> dict:
    out: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "vertices": sorted(d.vertices),
        "arcs": [[t, h] for t, h in d.arcs],
    }
    if d.rotation is not None:
        out["rotation"] = {str(v): [[a, e] for a, e in d.rotation.get(v, ())]
                           for v in sorted(d.vertices)}
    return out


def load_hypergraph(source: str | Path | dict) -> Hypergraph:
    data = _load_json(source)
    _expect(isinstance(data, dict), "(root)", "must be a JSON object")
    _expect(isinstance(data.get("vertices"), list), "vertices", "must be a list")
    vertices = [int(v) for v in data["vertices"]]
    _expect(isinstance(data.get("edges"), list), "edges", "must be a list of endpoint lists")
    hyperedges = []
    for i, e in enumerate(data["edges"]):
        _expect(isinstance(e, list), f"edges[{i}]", "must be a list of vertex ids")
        endpoints = [int(v) for v in e]
        if len(endpoints) != len(set(endpoints)):
            raise ParseError(f"field 'edges[{i}]': repeated endpoint; hyperedges are "
                             "sets, multiset inputs are rejected")
        hyperedges.append(frozenset(endpoints))
    try:
        return Hypergraph(frozenset(vertices), tuple(hyperedges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"vertices": sorted(h.vertices),
            "edges": [sorted(e) for e in h.hyperedges]}


def load_gadget(source: str | Path | dict) -> Gadget:
    data = _load_json(source)
    g = load_instance(data)
    _expect(isinstance(data.get("ports"), list), "ports", "must be a list of stub vertex ids")
    ports = tuple(int(v) for v in data["ports"])
    name = data.get("name", "gadget")
    try:
        return _make(str(name), g, ports, str(data.get("target_kind", "unbreakable")),
                     int(data.get("target_degree", len(ports))))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def gadget_to_dict(gd: Gadget) -> dict:
    out = instance_to_dict(gd.body)
    out["ports"] = list(gd.ports)
    out["name"] = gd.name
    out["target_kind"] = gd.target_kind
    out["target_degree"] = gd.target_degree
    return out


def certificate_to_dict(answer: bool, cert: BreakCertificate | None) -> dict:
    return {"version": FORMAT_VERSION,
            "answer": "yes" if answer else "no",
            "certificate": cert.sorted_ids() if cert is not None else None}


def load_certificate(source: str | Path | dict) -> BreakCertificate:
    data = _load_json(source) if not isinstance(source, list) else source
    if isinstance(data, list):
        ids = data
    elif isinstance(data, dict):
        ids = data.get("certificate", data.get("broken"))
        _expect(isinstance(ids, list), "certificate", "must be a list of vertex ids")
    else:
        raise ParseError("certificate file must be a list or an object with "
                         "a 'certificate' field")
    return BreakCertificate(frozenset(int(v) for v in ids))


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def export_dot(g: Multigraph, name: str = "trvb") -> str:
    """Graphviz output: breakable vertices unfilled circles, unbreakable filled."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in sorted(g.vertices):
        style = "filled" if v in g.unbreakable else "solid"
        lines.append(f'  {v} [style={style}];')
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
