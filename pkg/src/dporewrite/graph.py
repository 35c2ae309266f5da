"""Finite labelled directed multigraphs.

A :class:`Graph` is an immutable value holding a node set, an edge set, the
source and target maps and the node and edge labelling. Parallel edges and
loops are allowed. Identifiers and labels are arbitrary hashable values;
node and edge identifiers live in separate namespaces.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Set
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Any, Hashable, Iterable, NamedTuple

from .errors import DanglingRestriction

__all__ = [
    "Graph",
    "Violation",
    "ValidationReport",
    "validate_graph",
    "empty_graph",
    "restrict",
    "id_key",
]


def id_key(x):
    """Sort key giving a total order over mixed identifier types.

    Tuples (including tagged ids) sort after scalars and compare
    element-wise with the same key.
    """
    if isinstance(x, tuple):
        return (2, "", tuple(id_key(i) for i in x))
    if isinstance(x, (int, float)):
        return (0, "", x)
    return (1, type(x).__name__, x)


def _freeze(value):
    if isinstance(value, Mapping):
        return MappingProxyType(dict(value))
    if isinstance(value, Set):
        return frozenset(value)
    return value


@dataclass(frozen=True, eq=False)
class Graph:
    """A graph ``(V, E, s, t, l, m)``.

    The raw constructor performs no checks so that malformed candidates can be
    handed to :func:`validate_graph`. Use :meth:`build` for the usual
    ``{node: label}`` / ``{edge: (src, tgt, label)}`` form.
    """

    nodes: Set = frozenset()
    edges: Set = frozenset()
    source: Mapping = field(default_factory=dict)
    target: Mapping = field(default_factory=dict)
    node_label: Mapping = field(default_factory=dict)
    edge_label: Mapping = field(default_factory=dict)

    def __post_init__(self):
        for name in ("nodes", "edges", "source", "target", "node_label", "edge_label"):
            object.__setattr__(self, name, _freeze(getattr(self, name)))

    @classmethod
    def build(cls, nodes: Mapping | None = None, edges: Mapping | None = None) -> "Graph":
        """Graph from ``{node: label}`` and ``{edge: (source, target, label)}``."""
        nodes = dict(nodes or {})
        edges = dict(edges or {})
        return cls(
            nodes=frozenset(nodes),
            edges=frozenset(edges),
            source={e: st[0] for e, st in edges.items()},
            target={e: st[1] for e, st in edges.items()},
            node_label=nodes,
            edge_label={e: st[2] for e, st in edges.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.edges == other.edges
            and dict(self.source) == dict(other.source)
            and dict(self.target) == dict(other.target)
            and dict(self.node_label) == dict(other.node_label)
            and dict(self.edge_label) == dict(other.edge_label)
        )

    def __hash__(self):
        return hash((self.nodes, self.edges, frozenset(self.edge_label.items())))

    def __repr__(self):
        ns = ", ".join(f"{v!r}:{self.node_label[v]!r}" for v in self.sorted_nodes)
        es = ", ".join(
            f"{e!r}:{self.source[e]!r}-{self.edge_label[e]!r}->{self.target[e]!r}"
            for e in self.sorted_edges
        )
        return f"Graph(nodes={{{ns}}}, edges={{{es}}})"

    @cached_property
    def sorted_nodes(self) -> tuple:
        return tuple(sorted(self.nodes, key=id_key))

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges, key=id_key))

    @cached_property
    def out_degree(self) -> Counter:
        return Counter(self.source[e] for e in self.edges)

    @cached_property
    def in_degree(self) -> Counter:
        return Counter(self.target[e] for e in self.edges)

    @cached_property
    def edges_between(self) -> Mapping:
        """``(source, target) -> sorted tuple of edges``."""
        buckets: dict = {}
        for e in self.sorted_edges:
            buckets.setdefault((self.source[e], self.target[e]), []).append(e)
        return MappingProxyType({k: tuple(v) for k, v in buckets.items()})

    def edge(self, e) -> tuple:
        """``(source, target, label)`` of edge *e*."""
        return self.source[e], self.target[e], self.edge_label[e]

    def node_items(self) -> dict:
        return {v: self.node_label[v] for v in self.sorted_nodes}

    def edge_items(self) -> dict:
        return {e: self.edge(e) for e in self.sorted_edges}

    def label_profile(self) -> tuple:
        """Multisets of node and edge labels, for cheap isomorphism rejection."""
        return (
            Counter(self.node_label[v] for v in self.nodes),
            Counter(self.edge_label[e] for e in self.edges),
        )


class Violation(NamedTuple):
    clause: str
    item: Any
    detail: str = ""

    def __str__(self):
        text = f"{self.clause}({self.item!r})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class ValidationReport:
    """All violations found by a validator; truthy when there are none."""

    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    @property
    def clauses(self) -> set:
        return {v.clause for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def _is_finite_set(x) -> bool:
    return isinstance(x, Set)


def _domain_violations(name: str, mapping, expected, out: list) -> None:
    if not isinstance(mapping, Mapping):
        out.append(Violation("map_domain", name, "not a finite map"))
        return
    keys = set(mapping)
    for k in sorted(keys - expected, key=id_key):
        out.append(Violation("map_domain", k, f"{name} defined outside its set"))
    for k in sorted(expected - keys, key=id_key):
        out.append(Violation("map_domain", k, f"{name} undefined"))


def validate_graph(g: Graph) -> ValidationReport:
    """Check the graph axioms and report every violation.

    Clauses: ``finite_nodes``, ``finite_edges``, ``source_integrity``,
    ``target_integrity`` and ``map_domain``.
    """
    out: list = []
    nodes_ok = _is_finite_set(g.nodes)
    edges_ok = _is_finite_set(g.edges)
    if not nodes_ok:
        out.append(Violation("finite_nodes", "nodes", "node set is not a finite set"))
    if not edges_ok:
        out.append(Violation("finite_edges", "edges", "edge set is not a finite set"))
    if not (nodes_ok and edges_ok):
        return ValidationReport(tuple(out))

    nodes, edges = set(g.nodes), set(g.edges)
    _domain_violations("source", g.source, edges, out)
    _domain_violations("target", g.target, edges, out)
    _domain_violations("node_label", g.node_label, nodes, out)
    _domain_violations("edge_label", g.edge_label, edges, out)
    for e in sorted(edges, key=id_key):
        if isinstance(g.source, Mapping) and e in g.source and g.source[e] not in nodes:
            out.append(Violation("source_integrity", e, f"source {g.source[e]!r} is not a node"))
        if isinstance(g.target, Mapping) and e in g.target and g.target[e] not in nodes:
            out.append(Violation("target_integrity", e, f"target {g.target[e]!r} is not a node"))
    return ValidationReport(tuple(out))


def empty_graph() -> Graph:
    return Graph()


def restrict(g: Graph, keep_nodes: Iterable[Hashable], keep_edges: Iterable[Hashable]) -> Graph:
    """Subgraph of *g* on the given node and edge sets.

    Raises :class:`DanglingRestriction` if a kept edge loses an endpoint.
    """
    keep_nodes = frozenset(keep_nodes)
    keep_edges = frozenset(keep_edges)
    stray = (keep_nodes - g.nodes) | (keep_edges - g.edges)
    if stray:
        raise ValueError(f"items not in graph: {sorted(stray, key=id_key)!r}")
    dangling = [
        e
        for e in sorted(keep_edges, key=id_key)
        if g.source[e] not in keep_nodes or g.target[e] not in keep_nodes
    ]
    if dangling:
        raise DanglingRestriction(dangling)
    return Graph(
        nodes=keep_nodes,
        edges=keep_edges,
        source={e: g.source[e] for e in keep_edges},
        target={e: g.target[e] for e in keep_edges},
        node_label={v: g.node_label[v] for v in keep_nodes},
        edge_label={e: g.edge_label[e] for e in keep_edges},
    )
