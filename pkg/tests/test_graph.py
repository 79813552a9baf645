import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_isomorphic
from wreathgraphs import (
    DuplicateLabel,
    Graph,
    LoopEdge,
    SchemaError,
    SizeCap,
    UnknownLabel,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    export_dot,
    graph_new,
    path_graph,
    wreath_product_graphs,
)
from wreathgraphs.graph import check_isomorphism


@st.composite
def small_graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph([f"v{k}" for k in range(n)], [(f"v{a}", f"v{b}") for a, b in edges])


def test_graph_new(k2, triangle):
    assert k2.vertices == ("u1", "v1") and k2.num_edges == 1
    assert triangle.num_edges == 3
    k1 = graph_new(["x"], [])
    assert len(k1) == 1 and k1.num_edges == 0


def test_graph_new_errors():
    with pytest.raises(DuplicateLabel):
        Graph(["a", "a"])
    with pytest.raises(UnknownLabel):
        Graph(["a"], [("a", "b")])
    with pytest.raises(LoopEdge):
        Graph(["a"], [("a", "a")])


def test_parallel_edges_collapse():
    g = Graph(["a", "b"], [("a", "b"), ("b", "a"), ("a", "b")])
    assert g.num_edges == 1


def test_neighbors(k2, triangle):
    assert k2.neighbors("u1") == ["v1"]
    assert triangle.neighbors("d") == ["c", "e"]
    c8 = cycle_graph(8)
    assert all(len(c8.neighbors(v)) == 2 for v in c8.vertices)
    with pytest.raises(UnknownLabel):
        k2.neighbors("zz")


def test_regular_degree(triangle):
    assert triangle.regular_degree() == 2
    assert path_graph(3).regular_degree() is None
    assert complete_graph(5).regular_degree() == 4


def test_connected_components():
    assert len(cycle_graph(8).connected_components()) == 1
    two_k2 = Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    assert two_k2.connected_components() == [["a", "b"], ["c", "d"]]
    assert len(Graph(["a", "b", "c"]).connected_components()) == 3


def test_isomorphism_examples(k2, k2b, triangle):
    w = wreath_product_graphs(k2, k2b)
    witness = are_isomorphic(w, cycle_graph(8))
    assert witness is not None and check_isomorphism(w, cycle_graph(8), witness)
    assert are_isomorphic(triangle, path_graph(3)) is None
    assert are_isomorphic(cycle_graph(4), complete_graph(4)) is None


def test_isomorphism_cap():
    with pytest.raises(SizeCap):
        are_isomorphic(path_graph(10), path_graph(10), cap=9)


def test_isomorphism_is_deterministic():
    g = cycle_graph(12)
    assert are_isomorphic(g, g) == are_isomorphic(g, g)


def test_isomorphism_hard_regular_pair():
    # C6 versus two triangles: same degree sequence, different structure
    two_triangles = Graph(list("abcdef"), [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")])
    assert are_isomorphic(cycle_graph(6), two_triangles) is None


@settings(max_examples=150, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_isomorphism_matches_brute_force(g, rnd):
    # a shuffled relabelled copy is isomorphic; the witness must check out
    perm = list(g.vertices)
    rnd.shuffle(perm)
    ren = dict(zip(g.vertices, [f"w{p}" for p in perm]))
    h = Graph(sorted(ren.values()), [(ren[a], ren[b]) for a, b in g.edge_labels()])
    w = are_isomorphic(g, h)
    assert w is not None and check_isomorphism(g, h, w)
    back = are_isomorphic(h, g)
    assert back is not None and check_isomorphism(h, g, back)


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=5), small_graphs(max_n=5))
def test_isomorphism_decision_matches_brute_force(g, h):
    expected = brute_isomorphic(g.vertices, g.edge_labels(), h.vertices, h.edge_labels())
    w = are_isomorphic(g, h)
    assert (w is not None) == expected
    if w is not None:
        assert check_isomorphism(g, h, w)


def test_isomorphism_reflexive_identity_on_rigid_graph():
    g = Graph(list("abcdef"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("c", "f"), ("f", "a")])
    w = are_isomorphic(g, g)
    assert check_isomorphism(g, g, w)


def test_dot_export(k2, triangle):
    assert export_dot(k2).count(" -- ") == 1
    assert export_dot(triangle).count(" -- ") == 3
    assert cycle_graph(8).to_dot().count(" -- ") == 8
    text = export_dot(k2)
    assert text.startswith('graph "G" {') and '"u1" -- "v1";' in text


def test_dot_quotes_tuple_labels(k2, k2b):
    text = wreath_product_graphs(k2, k2b).to_dot()
    assert '"[[\\"u2\\",\\"u2\\"],\\"u1\\"]"' in text


@pytest.mark.parametrize("g", [Graph(["u1", "v1"], [("u1", "v1")]), complete_graph(3), Graph([("a", ("b",)), "c"], [(("a", ("b",)), "c")])])
def test_json_round_trip(g):
    again = Graph.from_json(g.to_json())
    assert again == g
    assert again.vertices == g.vertices and again.edge_set() == g.edge_set()


@pytest.mark.parametrize(
    "text",
    [
        '{"vertices": ["a", "b", "c"], "edges": [["a", "b", "c"]]}',
        '{"vertices": ["a"], "edges": [["a", "z"]]}',
        '{"vertices": "ab", "edges": []}',
        '{"edges": []}',
        "[1, 2]",
        "not json",
    ],
)
def test_json_schema_errors(text):
    with pytest.raises(SchemaError):
        Graph.from_json(text)


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_json_round_trip_property(g):
    assert Graph.from_dict(json.loads(g.to_json())) == g


def _to_nx(g):
    import networkx as nx

    out = nx.Graph()
    out.add_nodes_from(range(len(g)))
    out.add_edges_from(g.edges())
    return out


@settings(max_examples=60, deadline=None)
@given(st.integers(8, 16), st.integers(2, 4), st.integers(0, 10**6), st.integers(0, 10**6))
def test_isomorphism_matches_networkx_on_regular_graphs(n, d, s1, s2):
    # random regular graphs share their degree sequence, so refinement alone cannot decide
    nx = pytest.importorskip("networkx")
    if n * d % 2:
        n += 1
    a = nx.random_regular_graph(d, n, seed=s1)
    b = nx.random_regular_graph(d, n, seed=s2)
    g = Graph(list(a.nodes), list(a.edges))
    h = Graph(list(b.nodes), list(b.edges))
    w = are_isomorphic(g, h)
    assert (w is not None) == nx.is_isomorphic(a, b)
    if w is not None:
        assert check_isomorphism(g, h, w)


def test_isomorphism_matches_networkx_on_vertex_transitive_products():
    nx = pytest.importorskip("networkx")
    from wreathgraphs import GwpSpec, Poset, cartesian_product, generalized_wreath

    k2 = complete_graph(2)
    c4 = cycle_graph(4)
    v = Poset.from_covers(["1", "2", "3"], [("1", "3"), ("2", "3")])
    candidates = [
        generalized_wreath(GwpSpec(v, [k2, k2, k2])),
        cartesian_product(cartesian_product(c4, c4), c4),
        cartesian_product(cycle_graph(8), cycle_graph(8)),
        wreath_product_graphs(k2, c4),
    ]
    for g, h in itertools.combinations(candidates, 2):
        w = are_isomorphic(g, h)
        assert (w is not None) == nx.is_isomorphic(_to_nx(g), _to_nx(h))
    for g in candidates:
        assert check_isomorphism(g, g, are_isomorphic(g, g))
