"""Pushout checking for commuting squares of graph morphisms.

:func:`is_pushout` decides the question through the canonical gluing of the
span and a search for a commuting isomorphism. The cocone oracle
:func:`check_universal_property_oracle` tests the universal property
literally on a bounded family of target graphs and serves as an independent
cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BoundTooLarge, DomainMismatch, NonUniqueMediator, NotInjectiveSpan
from .graph import Graph, id_key
from .morphism import Morphism, compose, is_injective, iter_morphisms, validate_morphism
from .rewrite import DeletionResult, DerivationTrace, GluingResult, glue
from .rule import Rule, inclusion_left, inclusion_right
from .smallgraphs import small_graphs

__all__ = [
    "Square",
    "Cocone",
    "OracleBound",
    "OracleResult",
    "FRESH",
    "check_commutativity",
    "mediating_morphism",
    "pushout_witness",
    "is_pushout",
    "check_universal_property_oracle",
    "gluing_square",
    "deletion_square",
    "derivation_squares",
]


@dataclass(frozen=True)
class Square:
    """``b: A -> B``, ``c: A -> C``, ``f: B -> D``, ``g: C -> D``."""

    A: Graph
    B: Graph
    C: Graph
    D: Graph
    b: Morphism
    c: Morphism
    f: Morphism
    g: Morphism

    def validate(self):
        """Reports for ``b, c, f, g`` against their declared endpoints."""
        return {
            "b": validate_morphism(self.A, self.B, self.b),
            "c": validate_morphism(self.A, self.C, self.c),
            "f": validate_morphism(self.B, self.D, self.f),
            "g": validate_morphism(self.C, self.D, self.g),
        }


@dataclass(frozen=True)
class Cocone:
    H: Graph
    p: Morphism  # B -> H
    t: Morphism  # C -> H


def check_commutativity(sq: Square) -> bool:
    """``f . b == g . c`` on the nodes and edges of ``A``."""
    try:
        return compose(sq.f, sq.b) == compose(sq.g, sq.c)
    except DomainMismatch:
        return False


def _pin(pairs) -> dict | None:
    """Merge ``(key, value)`` requirements; ``None`` on a conflict."""
    out: dict = {}
    for k, v in pairs:
        if out.setdefault(k, v) != v:
            return None
    return out


def _factoring_pins(f: Morphism, g: Morphism, p: Morphism, t: Morphism):
    """Pins for ``u`` with ``u . f == p`` and ``u . g == t``."""
    nodes = _pin(
        [(f.node_map[x], p.node_map[x]) for x in f.node_map]
        + [(g.node_map[y], t.node_map[y]) for y in g.node_map]
    )
    edges = _pin(
        [(f.edge_map[x], p.edge_map[x]) for x in f.edge_map]
        + [(g.edge_map[y], t.edge_map[y]) for y in g.edge_map]
    )
    if nodes is None or edges is None:
        return None
    return nodes, edges


def _mediators(sq: Square, cc: Cocone) -> Iterator[Morphism]:
    pins = _factoring_pins(sq.f, sq.g, cc.p, cc.t)
    if pins is None:
        return
    for u in iter_morphisms(sq.D, cc.H, fixed_nodes=pins[0], fixed_edges=pins[1]):
        # the pins are only a search shortcut; confirm the triangles directly
        if compose(u, sq.f) == cc.p and compose(u, sq.g) == cc.t:
            yield u


def mediating_morphism(sq: Square, cc: Cocone, count_all: bool = False) -> Morphism | None:
    """The unique ``u: D -> H`` with ``u . f == p`` and ``u . g == t``.

    Returns ``None`` if there is none and raises
    :class:`~dporewrite.errors.NonUniqueMediator` if there are several. With
    ``count_all`` the exception carries the exact count, otherwise the search
    stops at the second mediator.
    """
    if not (validate_morphism(sq.B, cc.H, cc.p) and validate_morphism(sq.C, cc.H, cc.t)):
        raise ValueError("cocone legs are not morphisms into H")
    if compose(cc.p, sq.b) != compose(cc.t, sq.c):
        raise ValueError("cocone does not commute with the span")
    found = []
    for u in _mediators(sq, cc):
        found.append(u)
        if len(found) > 1 and not count_all:
            break
    if not found:
        return None
    if len(found) > 1:
        raise NonUniqueMediator(len(found))
    return found[0]


def pushout_witness(sq: Square) -> Morphism | None:
    """Commuting isomorphism from the canonical gluing of the span onto ``D``.

    ``None`` means the square is not a pushout.
    """
    if not (is_injective(sq.b) and is_injective(sq.c)):
        raise NotInjectiveSpan("is_pushout needs injective b and c")
    if not check_commutativity(sq):
        return None
    canon = glue(sq.A, sq.C, sq.B, sq.b, sq.c)
    P = canon.graph
    if len(P.nodes) != len(sq.D.nodes) or len(P.edges) != len(sq.D.edges):
        return None
    pins = _factoring_pins(canon.h, canon.c, sq.f, sq.g)
    if pins is None:
        return None
    for u in iter_morphisms(P, sq.D, injective=True, fixed_nodes=pins[0], fixed_edges=pins[1]):
        if compose(u, canon.h) == sq.f and compose(u, canon.c) == sq.g:
            return u
    return None


def is_pushout(sq: Square) -> bool:
    return pushout_witness(sq) is not None


class _Fresh:
    """A label distinct from every label a square can carry."""

    def __repr__(self):
        return "<fresh>"

    def __reduce__(self):
        return "FRESH"


FRESH = _Fresh()


@dataclass(frozen=True)
class OracleBound:
    max_nodes: int = 3
    max_edges: int = 3
    max_cocones: int = 2_000_000


@dataclass(frozen=True)
class OracleResult:
    holds: bool
    cocones_checked: int
    counterexample: Cocone | None = None
    mediators: int | None = None  # 0, or >= 2 for a counterexample

    def __bool__(self):
        return self.holds


def _square_labels(sq: Square) -> tuple:
    nodes, edges = set(), set()
    for gr in (sq.A, sq.B, sq.C, sq.D):
        nodes.update(gr.node_label.values())
        edges.update(gr.edge_label.values())
    return (
        tuple(sorted(nodes, key=id_key)) + (FRESH,),
        tuple(sorted(edges, key=id_key)) + (FRESH,),
    )


@lru_cache(maxsize=64)
def _targets(max_nodes: int, max_edges: int, node_labels: tuple, edge_labels: tuple) -> tuple:
    return tuple(small_graphs(max_nodes, max_edges, node_labels, edge_labels))


def _cocones(sq: Square, H: Graph) -> Iterator[Cocone]:
    for p in iter_morphisms(sq.B, H):
        pb = compose(p, sq.b)
        nodes = _pin((sq.c.node_map[a], pb.node_map[a]) for a in sq.A.nodes)
        edges = _pin((sq.c.edge_map[a], pb.edge_map[a]) for a in sq.A.edges)
        if nodes is None or edges is None:
            continue
        for t in iter_morphisms(sq.C, H, fixed_nodes=nodes, fixed_edges=edges):
            yield Cocone(H, p, t)


def check_universal_property_oracle(sq: Square, bound: OracleBound = OracleBound()) -> OracleResult:
    """Brute-force test of the universal property.

    Every target graph up to *bound* (one per isomorphism class, over the
    square's labels plus :data:`FRESH`) and every commuting cocone into it is
    checked for exactly one mediating morphism. Stops at the first failure.
    """
    if not check_commutativity(sq):
        raise ValueError("square does not commute")
    node_labels, edge_labels = _square_labels(sq)
    checked = 0
    for H in _targets(bound.max_nodes, bound.max_edges, node_labels, edge_labels):
        for cc in _cocones(sq, H):
            checked += 1
            if checked > bound.max_cocones:
                raise BoundTooLarge(f"more than {bound.max_cocones} cocones")
            count = 0
            for _ in _mediators(sq, cc):
                count += 1
                if count > 1:
                    break
            if count != 1:
                return OracleResult(False, checked, cc, count)
    return OracleResult(True, checked)


def gluing_square(k: Graph, d_graph: Graph, r_graph: Graph, b: Morphism, d: Morphism,
                  result: GluingResult) -> Square:
    """The square ``K -> R -> H <- D <- K`` of a gluing."""
    return Square(k, r_graph, d_graph, result.graph, b, d, result.h, result.c)


def deletion_square(r: Rule, host: Graph, match: Morphism, deletion: DeletionResult) -> Square:
    """The square ``K -> L -> G <- D <- K`` of a deletion."""
    return Square(r.interface, r.left, deletion.graph, host, inclusion_left(r), deletion.d, match,
                  deletion.inclusion)


def derivation_squares(trace: DerivationTrace) -> tuple:
    """Both squares of a direct derivation, left then right."""
    r = trace.rule
    right = gluing_square(r.interface, trace.deletion.graph, r.right, inclusion_right(r),
                          trace.deletion.d, trace.gluing)
    return deletion_square(r, trace.host, trace.match, trace.deletion), right
