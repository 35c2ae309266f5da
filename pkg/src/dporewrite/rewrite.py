"""Deletion, gluing and direct derivation.

Gluing builds its result over :class:`TaggedId` values so the disjoint union
stays explicit; :func:`normalize` renames a tagged graph to plain ids so
derivations can be chained.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

from .errors import DanglingViolation, NotInjective
from .graph import Graph, restrict
from .matching import check_dangling, deletion_sets
from .morphism import Morphism, compose, identity, is_injective, validate_morphism
from .rule import Rule, inclusion_left, inclusion_right

__all__ = [
    "TaggedId",
    "left_tag",
    "right_tag",
    "DeletionResult",
    "GluingResult",
    "DerivationTrace",
    "delete",
    "glue",
    "normalize",
    "direct_derive",
    "comatch",
]


class TaggedId(NamedTuple):
    """An item of a disjoint union, tagged with the side it came from."""

    side: str  # "L" or "R"
    inner: Any

    def __str__(self):
        return f"{self.side}:{self.inner}"

    def __repr__(self):
        return f"{self.side}:{self.inner!r}"


def left_tag(x) -> TaggedId:
    return TaggedId("L", x)


def right_tag(x) -> TaggedId:
    return TaggedId("R", x)


@dataclass(frozen=True)
class DeletionResult:
    graph: Graph
    d: Morphism  # K -> D
    inclusion: Morphism  # D -> G


@dataclass(frozen=True)
class GluingResult:
    graph: Graph
    h: Morphism  # R -> H
    c: Morphism  # D -> H


@dataclass(frozen=True)
class DerivationTrace:
    rule: Rule
    host: Graph
    match: Morphism
    deletion: DeletionResult
    gluing: GluingResult
    result: Graph
    norm: Morphism  # H -> result, bijective


def delete(r: Rule, host: Graph, g: Morphism, check: bool = True) -> DeletionResult:
    """Pushout complement of ``K -> L -> G`` for an injective match *g*.

    With ``check=False`` the dangling condition is not tested first, so a bad
    match surfaces as :class:`~dporewrite.errors.DanglingRestriction` from the
    subgraph construction itself.
    """
    if check and not check_dangling(r, host, g):
        raise DanglingViolation("match violates the dangling condition")
    del_nodes, del_edges = deletion_sets(r, g)
    d_graph = restrict(host, host.nodes - del_nodes, host.edges - del_edges)
    d = compose(g, inclusion_left(r))
    return DeletionResult(d_graph, d, identity(d_graph))


def glue(k: Graph, d_graph: Graph, r_graph: Graph, b: Morphism, d: Morphism) -> GluingResult:
    """Gluing of *d_graph* and *r_graph* along injective ``b: K -> R``, ``d: K -> D``."""
    for name, m, cod in (("b", b, r_graph), ("d", d, d_graph)):
        report = validate_morphism(k, cod, m)
        if not report:
            raise ValueError(f"{name} is not a morphism: {report}")
        if not is_injective(m):
            raise NotInjective(f"{name} is not injective")

    b_inv = b.inverse()
    shared_nodes = set(b.node_map.values())
    shared_edges = set(b.edge_map.values())

    def node_image(y):
        # the three-way case split for endpoints of new edges
        if y in shared_nodes:
            return left_tag(d.node_map[b_inv.node_map[y]])
        return right_tag(y)

    new_nodes = [y for y in r_graph.sorted_nodes if y not in shared_nodes]
    new_edges = [e for e in r_graph.sorted_edges if e not in shared_edges]

    node_label = {left_tag(v): d_graph.node_label[v] for v in d_graph.nodes}
    node_label.update({right_tag(y): r_graph.node_label[y] for y in new_nodes})
    source = {left_tag(e): left_tag(d_graph.source[e]) for e in d_graph.edges}
    target = {left_tag(e): left_tag(d_graph.target[e]) for e in d_graph.edges}
    edge_label = {left_tag(e): d_graph.edge_label[e] for e in d_graph.edges}
    for e in new_edges:
        source[right_tag(e)] = node_image(r_graph.source[e])
        target[right_tag(e)] = node_image(r_graph.target[e])
        edge_label[right_tag(e)] = r_graph.edge_label[e]

    h_graph = Graph(
        nodes=frozenset(node_label),
        edges=frozenset(edge_label),
        source=source,
        target=target,
        node_label=node_label,
        edge_label=edge_label,
    )
    h = Morphism(
        {y: node_image(y) for y in r_graph.nodes},
        {
            e: right_tag(e) if e not in shared_edges else left_tag(d.edge_map[b_inv.edge_map[e]])
            for e in r_graph.edges
        },
    )
    c = Morphism({v: left_tag(v) for v in d_graph.nodes}, {e: left_tag(e) for e in d_graph.edges})
    return GluingResult(h_graph, h, c)


def normalize(h: Graph, node_prefix: str = "n", edge_prefix: str = "e") -> tuple:
    """Rename items to ``n0, n1, ...`` / ``e0, e1, ...`` in sorted id order.

    Returns the renamed graph and the bijective renaming morphism.
    """
    vmap = {v: f"{node_prefix}{i}" for i, v in enumerate(h.sorted_nodes)}
    emap = {e: f"{edge_prefix}{i}" for i, e in enumerate(h.sorted_edges)}
    m = Graph(
        nodes=frozenset(vmap.values()),
        edges=frozenset(emap.values()),
        source={emap[e]: vmap[h.source[e]] for e in h.edges},
        target={emap[e]: vmap[h.target[e]] for e in h.edges},
        node_label={vmap[v]: h.node_label[v] for v in h.nodes},
        edge_label={emap[e]: h.edge_label[e] for e in h.edges},
    )
    return m, Morphism(vmap, emap)


def direct_derive(r: Rule, host: Graph, g: Morphism) -> DerivationTrace:
    """Apply *r* at match *g*: delete, glue, then normalize."""
    deletion = delete(r, host, g)
    gluing = glue(r.interface, deletion.graph, r.right, inclusion_right(r), deletion.d)
    result, norm = normalize(gluing.graph)
    return DerivationTrace(r, host, g, deletion, gluing, result, norm)


def comatch(trace: DerivationTrace) -> Morphism:
    """The induced match ``R -> M`` of the right-hand side in the result."""
    return compose(trace.norm, trace.gluing.h)

