"""Seeded random instances for property checks.

Every generator takes a :class:`random.Random` so runs are reproducible from
a single seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph
from .matching import find_matches
from .morphism import Morphism
from .rule import Rule

__all__ = [
    "random_graph",
    "random_extension",
    "random_injective_span",
    "random_rule",
    "random_derivation_instance",
    "DerivationInstance",
]

LABELS = ("a", "b")


def random_graph(rng: random.Random, max_nodes=4, max_edges=4, labels=LABELS, prefix="") -> Graph:
    n = rng.randint(0, max_nodes)
    nodes = {f"{prefix}v{i}": rng.choice(labels) for i in range(n)}
    ids = list(nodes)
    m = rng.randint(0, max_edges) if ids else 0
    edges = {f"{prefix}e{j}": (rng.choice(ids), rng.choice(ids), rng.choice(labels)) for j in range(m)}
    return Graph.build(nodes, edges)


def random_extension(
    rng: random.Random, base: Graph, max_nodes=4, max_edges=4, labels=LABELS, prefix="x"
) -> Graph:
    """A graph containing *base* as a subgraph, within the size limits."""
    nodes = base.node_items()
    edges = base.edge_items()
    for i in range(rng.randint(0, max(0, max_nodes - len(nodes)))):
        nodes[f"{prefix}v{i}"] = rng.choice(labels)
    ids = list(nodes)
    if ids:
        for j in range(rng.randint(0, max(0, max_edges - len(edges)))):
            edges[f"{prefix}e{j}"] = (rng.choice(ids), rng.choice(ids), rng.choice(labels))
    return Graph.build(nodes, edges)


def _renamed(g: Graph, prefix: str) -> tuple:
    """Copy of *g* with fresh ids, plus the renaming as a morphism."""
    vmap = {v: f"{prefix}{v}" for v in g.nodes}
    emap = {e: f"{prefix}{e}" for e in g.edges}
    h = Graph.build(
        {vmap[v]: g.node_label[v] for v in g.nodes},
        {emap[e]: (vmap[g.source[e]], vmap[g.target[e]], g.edge_label[e]) for e in g.edges},
    )
    return h, Morphism(vmap, emap)


def random_injective_span(rng: random.Random, max_nodes=4, max_edges=4, labels=LABELS) -> tuple:
    """``(K, D, R, b, d)`` with ``b: K -> R`` and ``d: K -> D`` injective.

    Both legs rename ids, so neither is an inclusion.
    """
    k = random_graph(rng, max_nodes, max_edges, labels, prefix="k")
    r_base, b = _renamed(k, "r.")
    d_base, d = _renamed(k, "d.")
    r = random_extension(rng, r_base, max_nodes, max_edges, labels, prefix="r")
    dd = random_extension(rng, d_base, max_nodes, max_edges, labels, prefix="d")
    return k, dd, r, b, d


def _random_subgraph(rng: random.Random, g: Graph) -> Graph:
    nodes = {v for v in g.sorted_nodes if rng.random() < 0.6}
    edges = {
        e for e in g.sorted_edges if g.source[e] in nodes and g.target[e] in nodes and rng.random() < 0.6
    }
    return Graph.build(
        {v: g.node_label[v] for v in nodes},
        {e: g.edge(e) for e in edges},
    )


def random_rule(rng: random.Random, max_nodes=3, max_edges=3, labels=LABELS) -> Rule:
    left = random_graph(rng, max_nodes, max_edges, labels, prefix="l")
    interface = _random_subgraph(rng, left)
    right = random_extension(rng, interface, max_nodes, max_edges, labels, prefix="r")
    return Rule(left, interface, right)


@dataclass(frozen=True)
class DerivationInstance:
    rule: Rule
    host: Graph
    match: Morphism


def random_derivation_instance(
    rng: random.Random, max_rule_nodes=3, max_rule_edges=3, max_host_nodes=5, max_host_edges=5,
    labels=LABELS, attempts=100,
) -> DerivationInstance:
    """A rule, a host and a dangling-free match of the rule in the host."""
    for _ in range(attempts):
        rule = random_rule(rng, max_rule_nodes, max_rule_edges, labels)
        base, _ = _renamed(rule.left, "g.")
        host = random_extension(rng, base, max_host_nodes, max_host_edges, labels, prefix="h")
        matches = find_matches(rule, host)
        if matches:
            return DerivationInstance(rule, host, rng.choice(matches).morphism)
    raise RuntimeError("no matchable instance found")
