"""Independent brute-force oracles shared by the tests."""
import itertools

from dporewrite import Morphism, validate_morphism


def brute_force_morphisms(G, H, injective=False):
    """Every (node map, edge map) pair that passes validate_morphism."""
    gv, ge = G.sorted_nodes, G.sorted_edges
    found = set()
    for vimg in itertools.product(H.sorted_nodes, repeat=len(gv)):
        if injective and len(set(vimg)) < len(vimg):
            continue
        for eimg in itertools.product(H.sorted_edges, repeat=len(ge)):
            if injective and len(set(eimg)) < len(eimg):
                continue
            f = Morphism(dict(zip(gv, vimg)), dict(zip(ge, eimg)))
            if validate_morphism(G, H, f):
                found.add(f)
    return found


def dangling_by_degree(rule, host, g):
    """Dangling condition via degree counting.

    A deleted node is safe iff its host degree equals the degree of its
    preimage in L; injectivity makes the two counts comparable.
    """
    L = rule.left
    for v in L.nodes - rule.interface.nodes:
        w = g.node_map[v]
        host_deg = sum((host.source[e] == w) + (host.target[e] == w) for e in host.edges)
        left_deg = sum((L.source[e] == v) + (L.target[e] == v) for e in L.edges)
        if host_deg != left_deg:
            return False
    return True
