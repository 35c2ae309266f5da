"""Exhaustive generation of small graphs up to isomorphism."""
from __future__ import annotations

from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, Sequence

from .graph import Graph

__all__ = ["small_graphs", "all_small_graphs"]


def _label_preserving_perms(labels: tuple) -> list:
    n = len(labels)
    return [p for p in permutations(range(n)) if all(labels[p[i]] == labels[i] for i in range(n))]


def _canon(edges: tuple, perms: list) -> tuple:
    return min(tuple(sorted((p[s], p[t], lab) for s, t, lab in edges)) for p in perms)


def small_graphs(
    max_nodes: int,
    max_edges: int,
    node_labels: Sequence,
    edge_labels: Sequence,
) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs within the bounds.

    Nodes are ``0..n-1`` with labels in non-decreasing order of
    *node_labels*; edges are ``0..m-1``. Labels are compared by position in
    the given sequences, so they need not be orderable.
    """
    nl = list(node_labels)
    el = list(edge_labels)
    for n in range(max_nodes + 1):
        for lab_idx in combinations_with_replacement(range(len(nl)), n):
            perms = _label_preserving_perms(lab_idx)
            kinds = [(s, t, li) for s in range(n) for t in range(n) for li in range(len(el))]
            for m in range(max_edges + 1 if n else 1):
                seen = set()
                for combo in combinations_with_replacement(kinds, m):
                    key = _canon(combo, perms)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield Graph.build(
                        {i: nl[li] for i, li in enumerate(lab_idx)},
                        {j: (s, t, el[li]) for j, (s, t, li) in enumerate(key)},
                    )


def all_small_graphs(
    max_nodes: int,
    max_edges: int,
    node_labels: Sequence,
    edge_labels: Sequence,
) -> Iterator[Graph]:
    """Every graph on nodes ``0..n-1`` / edges ``0..m-1`` (no iso reduction)."""
    nl = list(node_labels)
    el = list(edge_labels)
    for n in range(max_nodes + 1):
        kinds = [(s, t, lab) for s in range(n) for t in range(n) for lab in el]
        for labs in product(nl, repeat=n):
            for m in range(max_edges + 1 if n else 1):
                for combo in product(kinds, repeat=m):
                    yield Graph.build(dict(enumerate(labs)), dict(enumerate(combo)))
