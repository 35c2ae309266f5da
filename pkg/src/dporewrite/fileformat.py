"""JSON documents for graphs, rules, morphisms and squares; DOT export.

Graph document::

    {"nodes": [{"id": "n1", "label": "A"}],
     "edges": [{"id": "e1", "source": "n1", "target": "n1", "label": "x"}]}

A rule is ``{"left": G, "interface": G, "right": G}`` with interface ids
shared with both sides. A morphism is ``{"nodes": {...}, "edges": {...}}``
and a square holds graphs ``A B C D`` and morphisms ``b c f g``.

Serialization sorts items by id and always emits the same bytes for the
same value. Tagged ids from a gluing are written as ``"L:<id>"`` and
``"R:<id>"``.
"""
from __future__ import annotations

import json
import re
from typing import Any, Iterable

from .errors import ParseError, ValidationError
from .graph import Graph, ValidationReport, Violation, id_key, validate_graph
from .morphism import Morphism, validate_morphism
from .pushout import Square
from .rule import Rule, validate_rule

__all__ = [
    "parse_graph",
    "serialize_graph",
    "parse_rule",
    "serialize_rule",
    "parse_morphism",
    "serialize_morphism",
    "parse_square",
    "serialize_square",
    "parse_document",
    "export_dot",
]


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _load(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _flat(obj) -> bool:
    return isinstance(obj, dict) and all(not isinstance(v, (dict, list)) for v in obj.values())


def _render(obj, indent: int) -> str:
    if _flat(obj) or not isinstance(obj, (dict, list)) or not obj:
        return json.dumps(obj, ensure_ascii=False)
    pad = "  " * (indent + 1)
    if isinstance(obj, list):
        body = ",\n".join(pad + _render(x, indent + 1) for x in obj)
        return "[\n" + body + "\n" + "  " * indent + "]"
    body = ",\n".join(f"{pad}{json.dumps(k, ensure_ascii=False)}: {_render(v, indent + 1)}" for k, v in obj.items())
    return "{\n" + body + "\n" + "  " * indent + "}"


def _dump(obj) -> str:
    """JSON with one node, edge or map per line."""
    return _render(obj, 0) + "\n"


def _fmt_id(x) -> str:
    return x if isinstance(x, str) else str(x)


def _fmt_label(x):
    return x if isinstance(x, str) else str(x)


def _expect(obj, kind, path):
    if not isinstance(obj, kind):
        raise ParseError(f"expected {kind.__name__}, got {type(obj).__name__}", path=path)
    return obj


def _string(obj, path) -> str:
    if not isinstance(obj, str):
        raise ParseError(f"expected string, got {type(obj).__name__}", path=path)
    return obj


def _require_keys(obj: dict, keys: Iterable[str], path: str) -> None:
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ParseError(f"missing key(s) {missing}", path=path)
    extra = sorted(set(obj) - set(keys))
    if extra:
        raise ParseError(f"unexpected key(s) {extra}", path=path)


def _graph_from_obj(obj, path="$") -> Graph:
    _expect(obj, dict, path)
    _require_keys(obj, ("nodes", "edges"), path)
    nodes, source, target, elab = {}, {}, {}, {}
    for i, item in enumerate(_expect(obj["nodes"], list, f"{path}.nodes")):
        p = f"{path}.nodes[{i}]"
        _expect(item, dict, p)
        _require_keys(item, ("id", "label"), p)
        nid = _string(item["id"], f"{p}.id")
        if nid in nodes:
            raise ParseError(f"duplicate node id {nid!r}", path=p)
        nodes[nid] = _string(item["label"], f"{p}.label")
    for i, item in enumerate(_expect(obj["edges"], list, f"{path}.edges")):
        p = f"{path}.edges[{i}]"
        _expect(item, dict, p)
        _require_keys(item, ("id", "source", "target", "label"), p)
        eid = _string(item["id"], f"{p}.id")
        if eid in elab:
            raise ParseError(f"duplicate edge id {eid!r}", path=p)
        source[eid] = _string(item["source"], f"{p}.source")
        target[eid] = _string(item["target"], f"{p}.target")
        elab[eid] = _string(item["label"], f"{p}.label")
    return Graph(frozenset(nodes), frozenset(elab), source, target, nodes, elab)


def _alphabet_report(g: Graph, alphabet) -> ValidationReport:
    out = [Violation("label_alphabet", v, repr(g.node_label[v])) for v in g.sorted_nodes if g.node_label[v] not in alphabet]
    out += [Violation("label_alphabet", e, repr(g.edge_label[e])) for e in g.sorted_edges if g.edge_label[e] not in alphabet]
    return ValidationReport(tuple(out))


def _checked_graph(obj, path="$", alphabet=None) -> Graph:
    g = _graph_from_obj(obj, path)
    report = validate_graph(g)
    if report and alphabet is not None:
        report = _alphabet_report(g, set(alphabet))
    if not report:
        raise ValidationError(report, "graph" if path == "$" else path)
    return g


def parse_graph(text: str, alphabet: Iterable | None = None) -> Graph:
    """Parse and validate a graph document.

    If *alphabet* is given, every node and edge label must belong to it.
    """
    return _checked_graph(_load(text), alphabet=alphabet)


def _graph_to_obj(g: Graph) -> dict:
    return {
        "nodes": [{"id": _fmt_id(v), "label": _fmt_label(g.node_label[v])} for v in g.sorted_nodes],
        "edges": [
            {
                "id": _fmt_id(e),
                "source": _fmt_id(g.source[e]),
                "target": _fmt_id(g.target[e]),
                "label": _fmt_label(g.edge_label[e]),
            }
            for e in g.sorted_edges
        ],
    }


def serialize_graph(g: Graph) -> str:
    return _dump(_graph_to_obj(g))


def _rule_from_obj(obj, alphabet=None) -> Rule:
    _expect(obj, dict, "$")
    _require_keys(obj, ("left", "interface", "right"), "$")
    r = Rule(*(_checked_graph(obj[k], f"$.{k}", alphabet) for k in ("left", "interface", "right")))
    report = validate_rule(r)
    if not report:
        raise ValidationError(report, "rule")
    return r


def parse_rule(text: str, alphabet: Iterable | None = None) -> Rule:
    return _rule_from_obj(_load(text), alphabet)


def serialize_rule(r: Rule) -> str:
    return _dump(
        {
            "left": _graph_to_obj(r.left),
            "interface": _graph_to_obj(r.interface),
            "right": _graph_to_obj(r.right),
        }
    )


def _morphism_from_obj(obj, path="$") -> Morphism:
    _expect(obj, dict, path)
    _require_keys(obj, ("nodes", "edges"), path)
    maps = []
    for key in ("nodes", "edges"):
        m = _expect(obj[key], dict, f"{path}.{key}")
        maps.append({_string(k, f"{path}.{key}"): _string(v, f"{path}.{key}.{k}") for k, v in m.items()})
    return Morphism(*maps)


def _morphism_to_obj(f: Morphism) -> dict:
    return {
        "nodes": {_fmt_id(k): _fmt_id(f.node_map[k]) for k in sorted(f.node_map, key=id_key)},
        "edges": {_fmt_id(k): _fmt_id(f.edge_map[k]) for k in sorted(f.edge_map, key=id_key)},
    }


def parse_morphism(text: str) -> Morphism:
    """Parse a morphism document (structure only; validate against graphs separately)."""
    return _morphism_from_obj(_load(text))


def serialize_morphism(f: Morphism) -> str:
    return _dump(_morphism_to_obj(f))


_SQUARE_GRAPHS = ("A", "B", "C", "D")
_SQUARE_ARROWS = ("b", "c", "f", "g")


def _square_from_obj(obj) -> Square:
    _expect(obj, dict, "$")
    _require_keys(obj, _SQUARE_GRAPHS + _SQUARE_ARROWS, "$")
    graphs = [_checked_graph(obj[k], f"$.{k}") for k in _SQUARE_GRAPHS]
    arrows = [_morphism_from_obj(obj[k], f"$.{k}") for k in _SQUARE_ARROWS]
    sq = Square(*graphs, *arrows)
    bad = []
    for name, report in sq.validate().items():
        bad += [Violation(f"{name}.{v.clause}", v.item, v.detail) for v in report.violations]
    if bad:
        raise ValidationError(ValidationReport(tuple(bad)), "square")
    return sq


def parse_square(text: str) -> Square:
    return _square_from_obj(_load(text))


def serialize_square(sq: Square) -> str:
    obj: dict[str, Any] = {k: _graph_to_obj(getattr(sq, k)) for k in _SQUARE_GRAPHS}
    obj.update({k: _morphism_to_obj(getattr(sq, k)) for k in _SQUARE_ARROWS})
    return _dump(obj)


def parse_document(text: str, alphabet: Iterable | None = None):
    """Parse a graph, rule or square document, telling them apart by their keys.

    Returns ``(kind, value)`` with *kind* one of ``"graph"``, ``"rule"``,
    ``"square"``.
    """
    obj = _load(text)
    if isinstance(obj, dict) and "left" in obj:
        return "rule", _rule_from_obj(obj, alphabet)
    if isinstance(obj, dict) and "A" in obj:
        return "square", _square_from_obj(obj)
    return "graph", _checked_graph(obj, alphabet=alphabet)


_BARE_ID = re.compile(r"^(?:[A-Za-z_][A-Za-z0-9_]*|-?\d+(?:\.\d+)?)$")


def _dot_id(x) -> str:
    s = _fmt_id(x)
    return s if _BARE_ID.match(s) else _dot_string(s)


def _dot_string(s) -> str:
    s = _fmt_label(s)
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(g: Graph, name: str = "G") -> str:
    """Graphviz ``digraph`` text, one line per node and per edge, sorted by id."""
    lines = [f"digraph {_dot_id(name)} {{"]
    for v in g.sorted_nodes:
        lines.append(f"  {_dot_id(v)} [label={_dot_string(g.node_label[v])}];")
    for e in g.sorted_edges:
        lines.append(
            f"  {_dot_id(g.source[e])} -> {_dot_id(g.target[e])} [label={_dot_string(g.edge_label[e])}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
