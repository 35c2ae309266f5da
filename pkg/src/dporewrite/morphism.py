"""Graph morphisms: validation, composition, classification and search."""
from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator

from .errors import DomainMismatch
from .graph import Graph, ValidationReport, Violation, id_key

__all__ = [
    "Morphism",
    "MorphismClass",
    "identity",
    "validate_morphism",
    "compose",
    "classify_morphism",
    "is_injective",
    "iter_morphisms",
    "enumerate_morphisms",
    "find_isomorphism",
]


@dataclass(frozen=True, eq=False)
class Morphism:
    """A pair of finite maps on nodes and edges.

    The maps carry no entries outside the domain graph, so ``==`` is exactly
    agreement on the domain's node and edge sets.
    """

    node_map: Mapping = field(default_factory=dict)
    edge_map: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "node_map", MappingProxyType(dict(self.node_map)))
        object.__setattr__(self, "edge_map", MappingProxyType(dict(self.edge_map)))

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return dict(self.node_map) == dict(other.node_map) and dict(self.edge_map) == dict(
            other.edge_map
        )

    def __hash__(self):
        return hash((frozenset(self.node_map.items()), frozenset(self.edge_map.items())))

    def __repr__(self):
        ns = ", ".join(f"{k!r}->{self.node_map[k]!r}" for k in sorted(self.node_map, key=id_key))
        es = ", ".join(f"{k!r}->{self.edge_map[k]!r}" for k in sorted(self.edge_map, key=id_key))
        return f"Morphism(nodes={{{ns}}}, edges={{{es}}})"

    def __call__(self, x, kind="node"):
        return self.node_map[x] if kind == "node" else self.edge_map[x]

    def inverse(self) -> "Morphism":
        """Inverse maps of an injective morphism, defined on its image."""
        return Morphism(
            {v: k for k, v in self.node_map.items()},
            {v: k for k, v in self.edge_map.items()},
        )


@dataclass(frozen=True)
class MorphismClass:
    injective: bool
    surjective: bool
    bijective: bool
    inclusion: bool


def identity(g: Graph) -> Morphism:
    return Morphism({v: v for v in g.nodes}, {e: e for e in g.edges})


def validate_morphism(dom: Graph, cod: Graph, f: Morphism) -> ValidationReport:
    """Check that *f* is a graph morphism ``dom -> cod``.

    Clauses: ``map_domain``, ``node_range``, ``edge_range``,
    ``source_preserve``, ``target_preserve``, ``label_preserve`` and
    ``mark_preserve`` (edge labels).
    """
    out = []
    fv, fe = f.node_map, f.edge_map
    for name, m, dset in (("node_map", fv, dom.nodes), ("edge_map", fe, dom.edges)):
        for k in sorted(set(m) - dset, key=id_key):
            out.append(Violation("map_domain", k, f"{name} defined outside the domain"))
        for k in sorted(dset - set(m), key=id_key):
            out.append(Violation("map_domain", k, f"{name} undefined"))
    for v in dom.sorted_nodes:
        if v not in fv:
            continue
        if fv[v] not in cod.nodes:
            out.append(Violation("node_range", v, f"image {fv[v]!r} is not a node"))
        elif dom.node_label[v] != cod.node_label[fv[v]]:
            out.append(Violation("label_preserve", v, f"{dom.node_label[v]!r} != {cod.node_label[fv[v]]!r}"))
    for e in dom.sorted_edges:
        if e not in fe:
            continue
        img = fe[e]
        if img not in cod.edges:
            out.append(Violation("edge_range", e, f"image {img!r} is not an edge"))
            continue
        s, t = dom.source[e], dom.target[e]
        if fv.get(s) != cod.source[img]:
            out.append(Violation("source_preserve", e))
        if fv.get(t) != cod.target[img]:
            out.append(Violation("target_preserve", e))
        if dom.edge_label[e] != cod.edge_label[img]:
            out.append(Violation("mark_preserve", e, f"{dom.edge_label[e]!r} != {cod.edge_label[img]!r}"))
    return ValidationReport(tuple(out))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g . f``: apply *f* first, then *g*."""
    try:
        return Morphism(
            {x: g.node_map[y] for x, y in f.node_map.items()},
            {x: g.edge_map[y] for x, y in f.edge_map.items()},
        )
    except KeyError as exc:
        raise DomainMismatch(f"image {exc.args[0]!r} outside the second morphism's domain") from None


def _injective_map(m: Mapping) -> bool:
    return len(set(m.values())) == len(m)


def is_injective(f: Morphism) -> bool:
    return _injective_map(f.node_map) and _injective_map(f.edge_map)


def classify_morphism(dom: Graph, cod: Graph, f: Morphism) -> MorphismClass:
    injective = is_injective(f)
    surjective = set(f.node_map.values()) == set(cod.nodes) and set(f.edge_map.values()) == set(cod.edges)
    inclusion = all(k == v for k, v in f.node_map.items()) and all(k == v for k, v in f.edge_map.items())
    return MorphismClass(injective, surjective, injective and surjective, inclusion)


def _node_candidates(dom: Graph, cod: Graph, injective: bool) -> dict:
    loops_dom = {dom.source[e] for e in dom.edges if dom.source[e] == dom.target[e]}
    loops_cod = {cod.source[e] for e in cod.edges if cod.source[e] == cod.target[e]}
    by_label: dict = {}
    for w in cod.sorted_nodes:
        by_label.setdefault(cod.node_label[w], []).append(w)
    cands = {}
    for v in dom.sorted_nodes:
        out_d, in_d = dom.out_degree[v], dom.in_degree[v]
        keep = []
        for w in by_label.get(dom.node_label[v], ()):
            if injective:
                if cod.out_degree[w] < out_d or cod.in_degree[w] < in_d:
                    continue
            elif (out_d and not cod.out_degree[w]) or (in_d and not cod.in_degree[w]):
                continue
            if v in loops_dom and w not in loops_cod:
                continue
            keep.append(w)
        cands[v] = keep
    return cands


def iter_morphisms(
    dom: Graph,
    cod: Graph,
    injective: bool = False,
    fixed_nodes: Mapping | None = None,
    fixed_edges: Mapping | None = None,
) -> Iterator[Morphism]:
    """Yield every morphism ``dom -> cod`` in deterministic order.

    Order is lexicographic on the node assignment (domain nodes and candidate
    targets both sorted by id), then on the edge assignment. ``fixed_nodes``
    and ``fixed_edges`` pin part of the assignment; only morphisms agreeing
    with the pins are produced.
    """
    fixed_nodes = fixed_nodes or {}
    fixed_edges = fixed_edges or {}
    nodes = dom.sorted_nodes
    edges = dom.sorted_edges
    pos = {v: i for i, v in enumerate(nodes)}
    cands = _node_candidates(dom, cod, injective)
    for v, w in fixed_nodes.items():
        cands[v] = [w] if w in cands.get(v, ()) else []

    # edge-label demand per node pair, checked once both endpoints are placed
    demand: dict = {}
    for e in edges:
        demand.setdefault((dom.source[e], dom.target[e]), Counter())[dom.edge_label[e]] += 1
    checks: list = [[] for _ in nodes]
    for (a, b), labels in demand.items():
        checks[max(pos[a], pos[b])].append((a, b, labels))
    supply: dict = {}
    for e in cod.edges:
        supply.setdefault((cod.source[e], cod.target[e]), Counter())[cod.edge_label[e]] += 1

    fv: dict = {}
    used_nodes: set = set()

    def pairs_ok(i):
        for a, b, labels in checks[i]:
            have = supply.get((fv[a], fv[b]))
            if have is None:
                return False
            for lab, n in labels.items():
                if have[lab] < (n if injective else 1):
                    return False
        return True

    def edge_candidates(e):
        bucket = cod.edges_between.get((fv[dom.source[e]], fv[dom.target[e]]), ())
        lab = dom.edge_label[e]
        out = [x for x in bucket if cod.edge_label[x] == lab]
        if e in fixed_edges:
            out = [x for x in out if x == fixed_edges[e]]
        return out

    def assign_edges(j, fe, used_edges):
        if j == len(edges):
            yield Morphism(dict(fv), dict(fe))
            return
        e = edges[j]
        for x in edge_candidates(e):
            if injective and x in used_edges:
                continue
            fe[e] = x
            used_edges.add(x)
            yield from assign_edges(j + 1, fe, used_edges)
            used_edges.discard(x)
            del fe[e]

    def assign_nodes(i):
        if i == len(nodes):
            yield from assign_edges(0, {}, set())
            return
        v = nodes[i]
        for w in cands[v]:
            if injective and w in used_nodes:
                continue
            fv[v] = w
            used_nodes.add(w)
            if pairs_ok(i):
                yield from assign_nodes(i + 1)
            used_nodes.discard(w)
            del fv[v]

    if len(fixed_nodes.keys() - dom.nodes) or len(fixed_edges.keys() - dom.edges):
        return
    if injective and (len(dom.nodes) > len(cod.nodes) or len(dom.edges) > len(cod.edges)):
        return
    yield from assign_nodes(0)


def enumerate_morphisms(dom: Graph, cod: Graph, mode: str = "all") -> list:
    """All morphisms ``dom -> cod``; *mode* is ``"all"`` or ``"injective"``."""
    if mode not in ("all", "injective"):
        raise ValueError(f"unknown mode {mode!r}")
    return list(iter_morphisms(dom, cod, injective=mode == "injective"))


def find_isomorphism(g: Graph, h: Graph) -> Morphism | None:
    """First bijective morphism ``g -> h`` in enumeration order, if any."""
    if len(g.nodes) != len(h.nodes) or len(g.edges) != len(h.edges):
        return None
    if g.label_profile() != h.label_profile():
        return None
    return next(iter_morphisms(g, h, injective=True), None)
