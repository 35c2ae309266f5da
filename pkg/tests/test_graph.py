import itertools

import pytest

from dporewrite import DanglingRestriction, Graph, empty_graph, restrict, validate_graph
from dporewrite.smallgraphs import small_graphs


class Naturals:
    """An unbounded 'set': iterable and testable, but with no size."""

    def __contains__(self, x):
        return isinstance(x, int) and x >= 0

    def __iter__(self):
        return itertools.count()


def test_empty_graph():
    g = empty_graph()
    assert len(g.nodes) == 0 and len(g.edges) == 0
    assert validate_graph(g).ok


def test_source_outside_nodes_is_reported():
    g = Graph({"n1"}, {"e1"}, {"e1": "n9"}, {"e1": "n1"}, {"n1": "A"}, {"e1": "x"})
    report = validate_graph(g)
    assert not report
    assert [(v.clause, v.item) for v in report.violations] == [("source_integrity", "e1")]


def test_loop_is_fine():
    g = Graph.build({"n1": "A"}, {"e1": ("n1", "n1", "x")})
    assert validate_graph(g)


def test_parallel_edges_are_fine():
    g = Graph.build({"n1": "A", "n2": "A"}, {"e1": ("n1", "n2", "x"), "e2": ("n1", "n2", "x")})
    assert validate_graph(g)


GOOD = dict(nodes={"n1"}, edges={"e1"}, source={"e1": "n1"}, target={"e1": "n1"},
            node_label={"n1": "A"}, edge_label={"e1": "x"})


@pytest.mark.parametrize(
    "change, clause",
    [
        (dict(nodes=Naturals()), "finite_nodes"),
        (dict(edges=Naturals()), "finite_edges"),
        (dict(source={"e1": "zz"}), "source_integrity"),
        (dict(target={"e1": "zz"}), "target_integrity"),
        (dict(node_label={}), "map_domain"),
        (dict(edge_label={"e1": "x", "e2": "y"}), "map_domain"),
        (dict(source={}), "map_domain"),
    ],
)
def test_each_clause_reported_alone(change, clause):
    g = Graph(**{**GOOD, **change})
    report = validate_graph(g)
    assert report.clauses == {clause}


def test_all_violations_listed():
    g = Graph({"n1"}, {"e1", "e2"}, {"e1": "a", "e2": "b"}, {"e1": "n1", "e2": "c"},
              {"n1": "A"}, {"e1": "x", "e2": "x"})
    report = validate_graph(g)
    assert sorted((v.clause, v.item) for v in report.violations) == [
        ("source_integrity", "e1"),
        ("source_integrity", "e2"),
        ("target_integrity", "e2"),
    ]


def test_node_and_edge_ids_may_coincide():
    g = Graph.build({"x": "A"}, {"x": ("x", "x", "A")})
    assert validate_graph(g)


def test_restrict_identity(arrow):
    assert restrict(arrow, arrow.nodes, arrow.edges) == arrow


def test_restrict_to_nothing(arrow):
    assert restrict(arrow, set(), set()) == empty_graph()


def test_restrict_dangling(arrow):
    with pytest.raises(DanglingRestriction) as info:
        restrict(arrow, {"n1"}, {"e1"})
    assert info.value.edges == ("e1",)


def _subsets(items):
    items = sorted(items)
    return itertools.chain.from_iterable(itertools.combinations(items, k) for k in range(len(items) + 1))


@pytest.mark.slow
def test_restrict_always_valid_up_to_four_nodes():
    checked = 0
    for g in small_graphs(4, 3, ["a"], ["x"]):
        for keep in _subsets(g.nodes):
            keep = set(keep)
            admissible = [e for e in g.edges if g.source[e] in keep and g.target[e] in keep]
            for kept_edges in _subsets(admissible):
                assert validate_graph(restrict(g, keep, kept_edges))
                checked += 1
    assert checked > 1000


def test_graph_is_hashable_value(arrow):
    same = Graph.build({"n2": "B", "n1": "A"}, {"e1": ("n1", "n2", "x")})
    assert same == arrow and hash(same) == hash(arrow)
    assert len({same, arrow}) == 1
