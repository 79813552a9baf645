import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_isomorphic, gwp_adjacent, tables_to_dicts
from test_poset import posets
from wreathgraphs import (
    Graph,
    GwpSpec,
    Poset,
    SizeCap,
    are_isomorphic,
    cartesian_product,
    cayley_gwp_spec,
    complete_graph,
    cycle_graph,
    cyclic_group,
    generalized_wreath,
    generalized_wreath_cayley,
    gwp_eval,
    gwp_eval_inv,
    gwp_neighbors,
    gwp_vertex_count,
    lexicographic_product,
    path_graph,
    wreath_product_graphs,
)
from wreathgraphs.errors import BadPoint, SchemaError
from wreathgraphs.products import cayley_factor_spec, fold_product

YSHAPE_VERTEX = (("a",), ("b",), tuple("bbaa"), tuple("cedcedee"))
YSHAPE_NEIGHBORS = {
    (("b",), ("b",), tuple("bbaa"), tuple("cedcedee")),
    (("a",), ("a",), tuple("bbaa"), tuple("cedcedee")),
    (("a",), ("b",), tuple("baaa"), tuple("cedcedee")),
    (("a",), ("b",), tuple("bbaa"), tuple("ceddedee")),
    (("a",), ("b",), tuple("bbaa"), tuple("cedeedee")),
}


@pytest.fixture
def ab():
    return Graph(["a", "b"], [("a", "b")])


@pytest.fixture
def yshape_spec(yshape_poset, ab, triangle):
    return GwpSpec(yshape_poset, {"1": ab, "2": ab, "3": ab, "4": triangle})


def iso(g, h):
    return are_isomorphic(g, h) is not None


# binary products against their definitions


def brute_product_edges(kind, g1, g2):
    verts = [(a, b) for a in g1.vertices for b in g2.vertices] if kind != "wreath" else [
        (f, v) for f in itertools.product(g2.vertices, repeat=len(g1)) for v in g1.vertices
    ]
    edges = set()
    for x, y in itertools.combinations(verts, 2):
        if kind == "cartesian":
            adj = (x[0] == y[0] and g2.adjacent(x[1], y[1])) or (x[1] == y[1] and g1.adjacent(x[0], y[0]))
        elif kind == "lexicographic":
            adj = g1.adjacent(x[0], y[0]) or (x[0] == y[0] and g2.adjacent(x[1], y[1]))
        else:
            (f, v), (h, w) = x, y
            k = g1.index(v)
            first = v == w and all(f[j] == h[j] for j in range(len(f)) if j != k) and g2.adjacent(f[k], h[k])
            second = f == h and g1.adjacent(v, w)
            adj = first or second
        if adj:
            edges.add(frozenset((x, y)))
    return set(verts), edges


SMALL = [complete_graph(2), complete_graph(3), path_graph(3), Graph(["x"]), Graph(["p", "q", "r"], [("p", "q")])]


@pytest.mark.parametrize("kind, op", [("cartesian", cartesian_product), ("lexicographic", lexicographic_product), ("wreath", wreath_product_graphs)])
@pytest.mark.parametrize("g1, g2", list(itertools.product(SMALL, SMALL[:3])))
def test_binary_products_match_definitions(kind, op, g1, g2):
    out = op(g1, g2)
    verts, edges = brute_product_edges(kind, g1, g2)
    assert set(out.vertices) == verts
    assert out.edge_set() == edges


def test_cartesian_examples(k2, triangle):
    sq = cartesian_product(k2, k2)
    assert brute_isomorphic(sq.vertices, sq.edge_labels(), range(4), cycle_graph(4, range(4)).edge_labels())
    c = cartesian_product(triangle, cycle_graph(5))
    assert len(c) == 15 and c.regular_degree() == 4
    assert iso(cartesian_product(Graph(["o"]), triangle), triangle)


def test_lexicographic_examples(k2, triangle):
    k4 = lexicographic_product(k2, k2)
    assert brute_isomorphic(k4.vertices, k4.edge_labels(), range(4), complete_graph(4, range(4)).edge_labels())
    assert iso(lexicographic_product(triangle, Graph(["o"])), triangle)


@pytest.mark.parametrize(
    "g1, g2",
    [(complete_graph(2), complete_graph(3)), (cycle_graph(4), complete_graph(2)), (cycle_graph(5), cycle_graph(4))],
)
def test_lexicographic_degree_formula(g1, g2):
    d1, d2, n2 = g1.regular_degree(), g2.regular_degree(), len(g2)
    out = lexicographic_product(g1, g2)
    assert len(out) == len(g1) * n2 and out.regular_degree() == d1 * n2 + d2


def test_wreath_octagon(k2, k2b):
    w = wreath_product_graphs(k2, k2b)
    assert len(w) == 8 and w.regular_degree() == 2 and w.is_connected()
    assert iso(w, cycle_graph(8))
    assert w.adjacent((("u2", "u2"), "u1"), (("v2", "u2"), "u1"))
    assert w.adjacent((("u2", "u2"), "u1"), (("u2", "u2"), "v1"))


def test_wreath_triangle_k2(triangle, k2):
    w = wreath_product_graphs(triangle, k2)
    assert len(w) == 24 and w.regular_degree() == 3 and w.is_connected()


def test_wreath_trivial_base(triangle):
    assert iso(wreath_product_graphs(Graph(["o"]), triangle), triangle)


def test_binary_caps(k2):
    with pytest.raises(SizeCap):
        wreath_product_graphs(cycle_graph(20), k2)
    with pytest.raises(SizeCap):
        cartesian_product(cycle_graph(10), cycle_graph(10), cap=99)


def test_fold_left(k2, triangle):
    g = fold_product(cartesian_product, [k2, triangle, k2])
    assert g.vertices[0] == (("u1", "c"), "u1")
    assert len(g) == 12 and g.regular_degree() == 4


# generalized wreath product


def test_vertex_counts(yshape_spec, ab):
    assert gwp_vertex_count(yshape_spec) == 2 * 2 * 2**4 * 3**8 == 419904
    assert gwp_vertex_count(GwpSpec(Poset.antichain(2), [ab, ab])) == 4
    assert gwp_vertex_count(GwpSpec(Poset.chain(2), [ab, ab])) == 8


def test_vertex_count_is_exact_big_integer():
    spec = GwpSpec(Poset.chain(3), [complete_graph(5)] * 3)
    assert gwp_vertex_count(spec) == 5 * 5**5 * 5**25


def test_yshape_eval(yshape_spec):
    assert gwp_eval(yshape_spec, YSHAPE_VERTEX, "3") == "b"
    assert gwp_eval(yshape_spec, YSHAPE_VERTEX, "4") == "c"
    assert gwp_eval(yshape_spec, YSHAPE_VERTEX, "1") == "a"


def test_eval_constant_tables(yshape_spec):
    v = (("b",), ("a",), ("a",) * 4, ("e",) * 8)
    assert [gwp_eval(yshape_spec, v, i) for i in "1234"] == ["b", "a", "a", "e"]


def test_yshape_neighbors(yshape_spec):
    nbrs = gwp_neighbors(yshape_spec, YSHAPE_VERTEX)
    assert len(nbrs) == 5
    assert set(nbrs) == YSHAPE_NEIGHBORS


def test_scalar_tables_accepted(yshape_spec):
    v = ("a", "b", tuple("bbaa"), tuple("cedcedee"))
    assert set(gwp_neighbors(yshape_spec, v)) == YSHAPE_NEIGHBORS


def test_bad_vertices(yshape_spec):
    with pytest.raises(BadPoint):
        gwp_neighbors(yshape_spec, (("a",), ("b",), tuple("bbaa")))
    with pytest.raises(BadPoint):
        gwp_neighbors(yshape_spec, (("a",), ("b",), tuple("bba"), tuple("cedcedee")))
    with pytest.raises(BadPoint):
        gwp_neighbors(yshape_spec, (("z",), ("b",), tuple("bbaa"), tuple("cedcedee")))


def test_isolated_factor_vertex_contributes_nothing(ab):
    lonely = Graph(["p", "q", "r"], [("p", "q")])
    spec = GwpSpec(Poset.chain(2), [ab, lonely])
    assert gwp_neighbors(spec, (("a",), ("r", "p"))) == [(("b",), ("r", "p"))]
    assert len(gwp_neighbors(spec, (("b",), ("r", "p")))) == 2


def test_yshape_lazy_oracle_sampled(yshape_spec):
    rng = random.Random(1)
    for _ in range(300):
        f = tuple(tuple(rng.choice(g.vertices) for _ in range(n)) for g, n in zip(yshape_spec.factors, yshape_spec.table_lengths))
        nbrs = gwp_neighbors(yshape_spec, f)
        assert len(nbrs) == 5 and len(set(nbrs)) == 5
        for h in nbrs:
            assert f in gwp_neighbors(yshape_spec, h)


def test_antichain_is_cartesian(k2, triangle):
    for factors in ([k2, k2], [k2, triangle], [triangle, k2, k2], [k2, triangle, k2]):
        g = generalized_wreath(GwpSpec(Poset.antichain(len(factors)), factors))
        assert iso(g, fold_product(cartesian_product, factors))


def test_chain_is_wreath(k2, k2b, triangle):
    for g1, g2 in ((k2, k2b), (triangle, k2), (k2, triangle), (path_graph(3), k2)):
        g = generalized_wreath(GwpSpec(Poset.chain(2), [g1, g2]))
        assert iso(g, wreath_product_graphs(g1, g2))
    assert iso(generalized_wreath(GwpSpec(Poset.chain(2), [k2, k2b])), cycle_graph(8))


def test_single_element_poset(triangle):
    g = generalized_wreath(GwpSpec(Poset.antichain(1), [triangle]))
    assert g.vertices == ((("c",),), (("d",),), (("e",),))
    assert iso(g, triangle)


def test_materialize_cap(yshape_spec):
    with pytest.raises(SizeCap):
        generalized_wreath(yshape_spec, cap=1000)


def _oracle_check(spec):
    poset = spec.poset
    anc = {i: list(poset.ancestral_set(i)) for i in poset}
    fv = {i: g.vertices for i, g in zip(poset, spec.factors)}
    fe = {i: g.edge_set() for i, g in zip(poset, spec.factors)}
    g = generalized_wreath(spec)
    assert len(g) == gwp_vertex_count(spec)
    dicts = [tables_to_dicts(poset.elements, anc, fv, v) for v in g.vertices]
    expected = set()
    for a, b in itertools.combinations(range(len(g)), 2):
        if gwp_adjacent(poset.elements, anc, fv, fe, dicts[a], dicts[b]):
            expected.add(frozenset((g.vertices[a], g.vertices[b])))
    assert g.edge_set() == expected
    # lazy oracle agrees with the materialized graph
    for v in g.vertices:
        assert sorted(gwp_neighbors(spec, v)) == sorted(g.neighbors(v))
    return g


def test_yshape_shape_against_oracle(yshape_poset):
    # same poset, one factor shrunk to a point so every pair can be checked
    k2 = Graph(["a", "b"], [("a", "b")])
    spec = GwpSpec(yshape_poset, [k2, Graph(["p"]), k2, Graph(["c", "d"], [("c", "d")])])
    g = _oracle_check(spec)
    assert len(g) == 2 * 1 * 2**2 * 2**4 and g.regular_degree() == 3


FACTOR_POOL = [complete_graph(2), path_graph(3), Graph(["x", "y"]), complete_graph(3)]


@settings(max_examples=30, deadline=None)
@given(posets(max_size=3), st.data())
def test_generalized_wreath_matches_definition(p, data):
    factors = [data.draw(st.sampled_from(FACTOR_POOL)) for _ in p]
    spec = GwpSpec(p, factors)
    if gwp_vertex_count(spec) > 150:
        return
    g = _oracle_check(spec)
    d = spec.predicted_degree()
    if d is not None:
        assert g.regular_degree() == d


# Cayley convention


def test_eval_inv_examples():
    z2 = cyclic_group(2)
    spec = cayley_gwp_spec(Poset.chain(2), [(z2, ["1"]), (z2, ["1"])])
    f = (("1",), ("0", "1"))
    assert gwp_eval_inv(spec, f, "1") == "1"
    assert gwp_eval_inv(spec, f, "2") == "1"
    ident = (("0",), ("0", "0"))
    assert [gwp_eval_inv(spec, ident, i) for i in "12"] == ["0", "0"]


def test_eval_inv_uses_inverses():
    z3 = cyclic_group(3)
    spec = cayley_gwp_spec(Poset.chain(2), [(z3, ["1", "2"]), (z3, ["1", "2"])])
    f = (("1",), ("0", "1", "2"))
    # e_1 = 1, e_2 = f_2(1^-1) = f_2(2) = 2
    assert gwp_eval_inv(spec, f, "2") == "2"
    plain = cayley_factor_spec(Poset.chain(2), [(z3, ["1", "2"]), (z3, ["1", "2"])])
    assert gwp_eval(plain, f, "2") == "1"


def test_cayley_convention_graphs():
    z2 = cyclic_group(2)
    c8 = generalized_wreath_cayley(Poset.chain(2), [(z2, ["1"]), (z2, ["1"])])
    assert len(c8) == 8 and c8.regular_degree() == 2 and iso(c8, cycle_graph(8))
    c4 = generalized_wreath_cayley(Poset.antichain(2), [(z2, ["1"]), (z2, ["1"])])
    ref = cycle_graph(4)
    assert brute_isomorphic(c4.vertices, c4.edge_labels(), ref.vertices, ref.edge_labels())


@pytest.mark.parametrize(
    "poset, groups",
    [
        (Poset.chain(2), [(cyclic_group(3), ["1", "2"]), (cyclic_group(2), ["1"])]),
        (Poset.chain(2), [(cyclic_group(3), ["1", "2"]), (cyclic_group(3), ["1", "2"])]),
        (Poset.from_covers(["1", "2", "3"], [("1", "3"), ("2", "3")]), [(cyclic_group(2), ["1"])] * 3),
        (Poset.chain(3), [(cyclic_group(2), ["1"]), (cyclic_group(3), ["1", "2"]), (cyclic_group(2), ["1"])]),
    ],
)
def test_conventions_are_isomorphic(poset, groups):
    g_inv = generalized_wreath(cayley_gwp_spec(poset, groups))
    g_plain = generalized_wreath(cayley_factor_spec(poset, groups))
    assert iso(g_inv, g_plain)


def test_cayley_convention_matches_definition():
    z3 = cyclic_group(3)
    poset = Poset.chain(2)
    spec = cayley_gwp_spec(poset, [(z3, ["1", "2"]), (cyclic_group(2), ["1"])])
    anc = {i: list(poset.ancestral_set(i)) for i in poset}
    fv = {i: g.vertices for i, g in zip(poset, spec.factors)}
    fe = {i: g.edge_set() for i, g in zip(poset, spec.factors)}
    inv = {"1": {"0": "0", "1": "2", "2": "1"}, "2": {"0": "0", "1": "1"}}
    g = generalized_wreath(spec)
    dicts = [tables_to_dicts(poset.elements, anc, fv, v) for v in g.vertices]
    expected = {
        frozenset((g.vertices[a], g.vertices[b]))
        for a, b in itertools.combinations(range(len(g)), 2)
        if gwp_adjacent(poset.elements, anc, fv, fe, dicts[a], dicts[b], invert=inv)
    }
    assert g.edge_set() == expected


def test_vertex_json_round_trip(yshape_spec):
    data = yshape_spec.vertex_to_json(YSHAPE_VERTEX)
    assert data[3] == {"index": "4", "values": list("cedcedee")}
    assert yshape_spec.vertex_from_json(data) == YSHAPE_VERTEX
    with pytest.raises(SchemaError):
        yshape_spec.vertex_from_json([{"index": "1"}])
    with pytest.raises(BadPoint):
        yshape_spec.vertex_from_json(list(reversed(data)))
