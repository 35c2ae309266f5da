"""Matches of a rule's left-hand side and the dangling condition."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .morphism import Morphism, iter_morphisms
from .rule import Rule, inclusion_left

__all__ = ["Match", "check_dangling", "find_matches", "deletion_sets"]


@dataclass(frozen=True)
class Match:
    morphism: Morphism
    dangling_ok: bool = True


def deletion_sets(r: Rule, g: Morphism) -> tuple:
    """Images in the host of ``V_L - b'(V_K)`` and ``E_L - b'(E_K)``."""
    b = inclusion_left(r)
    kept_nodes = set(b.node_map.values())
    kept_edges = set(b.edge_map.values())
    del_nodes = {g.node_map[v] for v in r.left.nodes if v not in kept_nodes}
    del_edges = {g.edge_map[e] for e in r.left.edges if e not in kept_edges}
    return frozenset(del_nodes), frozenset(del_edges)


def check_dangling(r: Rule, host: Graph, g: Morphism) -> bool:
    """True iff no host edge outside ``g(E_L)`` touches a deleted node."""
    doomed, _ = deletion_sets(r, g)
    matched_edges = set(g.edge_map.values())
    for e in host.edges - matched_edges:
        if host.source[e] in doomed:  # dang_src
            return False
        if host.target[e] in doomed:  # dang_trg
            return False
    return True


def find_matches(r: Rule, host: Graph) -> list:
    """Injective matches ``L -> host`` satisfying the dangling condition."""
    return [
        Match(g, True)
        for g in iter_morphisms(r.left, host, injective=True)
        if check_dangling(r, host, g)
    ]
