"""Rules ``L <- K -> R`` given as inclusions by shared identifiers."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, ValidationReport, Violation, id_key, validate_graph
from .morphism import Morphism

__all__ = ["Rule", "validate_rule", "inclusion_left", "inclusion_right", "invert_rule"]


@dataclass(frozen=True)
class Rule:
    left: Graph
    interface: Graph
    right: Graph


def _inclusion_violations(k: Graph, side: Graph, name: str, out: list) -> None:
    for v in k.sorted_nodes:
        if v not in side.nodes:
            out.append(Violation(f"interface_not_in_{name}", v, "node"))
        elif k.node_label[v] != side.node_label[v]:
            out.append(Violation("label_mismatch", v, f"node label differs in {name}"))
    for e in k.sorted_edges:
        if e not in side.edges:
            out.append(Violation(f"interface_not_in_{name}", e, "edge"))
            continue
        if k.source[e] != side.source[e]:
            out.append(Violation("source_mismatch", e, f"source differs in {name}"))
        if k.target[e] != side.target[e]:
            out.append(Violation("target_mismatch", e, f"target differs in {name}"))
        if k.edge_label[e] != side.edge_label[e]:
            out.append(Violation("label_mismatch", e, f"edge label differs in {name}"))


def validate_rule(r: Rule) -> ValidationReport:
    """Check the three graphs and both inclusions ``K -> L`` and ``K -> R``.

    Graph-level failures are prefixed with ``left.``, ``interface.`` or
    ``right.``.
    """
    out = []
    for name, g in (("left", r.left), ("interface", r.interface), ("right", r.right)):
        for v in validate_graph(g).violations:
            out.append(Violation(f"{name}.{v.clause}", v.item, v.detail))
    if out:
        return ValidationReport(tuple(out))
    _inclusion_violations(r.interface, r.left, "left", out)
    _inclusion_violations(r.interface, r.right, "right", out)
    return ValidationReport(tuple(out))


def _identity_on(k: Graph) -> Morphism:
    return Morphism({v: v for v in k.nodes}, {e: e for e in k.edges})


def inclusion_left(r: Rule) -> Morphism:
    """Identity maps on the interface, read as ``K -> L``."""
    return _identity_on(r.interface)


def inclusion_right(r: Rule) -> Morphism:
    """Identity maps on the interface, read as ``K -> R``."""
    return _identity_on(r.interface)


def invert_rule(r: Rule) -> Rule:
    return Rule(r.right, r.interface, r.left)


def deleted_items(r: Rule) -> tuple:
    """Nodes and edges of ``L - K``, sorted."""
    return (
        tuple(sorted(r.left.nodes - r.interface.nodes, key=id_key)),
        tuple(sorted(r.left.edges - r.interface.edges, key=id_key)),
    )
