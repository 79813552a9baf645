"""Cartesian, lexicographic, wreath and generalized wreath products of graphs.

A vertex of a generalized wreath product is a tuple of function tables, one per
poset element in declared order.  The table of element ``i`` lists the values of
``f_i`` over the arguments ``prod_{j in A(i)} V_j``, enumerated
lexicographically with ``A(i)`` in declared poset order and each ``V_j`` in its
declared vertex order.  A table with no ancestors has exactly one entry.
"""

from __future__ import annotations

import itertools
import math
from typing import Hashable, Mapping, Optional, Sequence

from .errors import BadPoint, InputError, SchemaError, SizeCap
from .graph import Graph, label_from_json, label_to_json
from .groups import GeneratingSet, cayley_graph
from .poset import Poset

MATERIALIZE_CAP = 10**6


def _check_size(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise SizeCap(what, size, cap)


def cartesian_product(g1: Graph, g2: Graph, cap: int = MATERIALIZE_CAP) -> Graph:
    """``G1 □ G2`` on pairs ``(v1, v2)``: one coordinate fixed, the other adjacent."""
    n1, n2 = len(g1), len(g2)
    _check_size("cartesian product", n1 * n2, cap)
    vertices = [(a, b) for a in g1.vertices for b in g2.vertices]
    adjacency = []
    for a in range(n1):
        for b in range(n2):
            nbrs = [a * n2 + b2 for b2 in g2.adjacency[b]]
            nbrs += [a2 * n2 + b for a2 in g1.adjacency[a]]
            adjacency.append(nbrs)
    return Graph.from_adjacency(vertices, adjacency)


def lexicographic_product(g1: Graph, g2: Graph, cap: int = MATERIALIZE_CAP) -> Graph:
    """``G1 ∘ G2``: ``v1 ~ w1``, or ``v1 = w1`` and ``v2 ~ w2``."""
    n1, n2 = len(g1), len(g2)
    _check_size("lexicographic product", n1 * n2, cap)
    vertices = [(a, b) for a in g1.vertices for b in g2.vertices]
    adjacency = []
    for a in range(n1):
        for b in range(n2):
            nbrs = [a2 * n2 + b2 for a2 in g1.adjacency[a] for b2 in range(n2)]
            nbrs += [a * n2 + b2 for b2 in g2.adjacency[b]]
            adjacency.append(nbrs)
    return Graph.from_adjacency(vertices, adjacency)


def wreath_product_graphs(g1: Graph, g2: Graph, cap: int = MATERIALIZE_CAP) -> Graph:
    """``G1 ≀ G2`` on ``(f, v)`` with ``f: V1 -> V2`` and ``v`` in ``V1``.

    ``f`` is the tuple of its values over ``V1`` in declared order.  Edges of
    the first type move ``f(v)`` along an edge of ``G2``; edges of the second
    type move ``v`` along an edge of ``G1`` and keep ``f``.
    """
    n1, n2 = len(g1), len(g2)
    size = n1 * n2**n1
    _check_size("wreath product", size, cap)
    vertices = []
    adjacency = []
    # vertex (f, v) has index code(f) * n1 + v, code(f) read as base-n2 digits
    weights = [n2 ** (n1 - 1 - k) for k in range(n1)]
    for code, f in enumerate(itertools.product(range(n2), repeat=n1)):
        flabels = tuple(g2.vertices[x] for x in f)
        for v in range(n1):
            vertices.append((flabels, g1.vertices[v]))
            nbrs = [(code + (y - f[v]) * weights[v]) * n1 + v for y in g2.adjacency[f[v]]]
            nbrs += [code * n1 + w for w in g1.adjacency[v]]
            adjacency.append(nbrs)
    return Graph.from_adjacency(vertices, adjacency)


def fold_product(op, graphs: Sequence[Graph], cap: int = MATERIALIZE_CAP) -> Graph:
    """Left fold of a binary product over ``graphs``."""
    if not graphs:
        raise InputError("need at least one factor")
    out = graphs[0]
    for g in graphs[1:]:
        out = op(out, g, cap=cap)
    return out


class GwpSpec:
    """Poset-indexed family of factor graphs.

    ``arg_maps`` optionally rewrites each evaluated coordinate before it is used
    as a table argument; the Cayley convention passes group inversion here.
    """

    def __init__(self, poset: Poset, factors, arg_maps: Optional[Sequence[Sequence[int]]] = None):
        if len(poset) == 0:
            raise InputError("generalized wreath product needs a nonempty poset")
        if isinstance(factors, Mapping):
            missing = [i for i in poset if i not in factors]
            extra = [i for i in factors if i not in poset]
            if missing or extra:
                raise InputError(f"factors must be keyed by poset elements (missing {missing}, extra {extra})")
            factors = [factors[i] for i in poset]
        factors = tuple(factors)
        if len(factors) != len(poset):
            raise InputError("need one factor per poset element")
        for i, g in zip(poset, factors):
            if len(g) == 0:
                raise InputError(f"factor {i!r} has no vertices")
        self.poset = poset
        self.factors = factors
        n = len(poset)
        sizes = [len(g) for g in factors]
        self._args = tuple(tuple(poset.index(j) for j in poset.ancestral_set(i)) for i in poset)
        strides = []
        lengths = []
        for args in self._args:
            st = [0] * len(args)
            w = 1
            for pos in range(len(args) - 1, -1, -1):
                st[pos] = w
                w *= sizes[args[pos]]
            strides.append(tuple(st))
            lengths.append(w)
        self._strides = tuple(strides)
        self.table_lengths = tuple(lengths)
        self._order = tuple(poset.index(i) for i in poset.linear_extension())
        if arg_maps is None:
            arg_maps = [tuple(range(s)) for s in sizes]
        self._arg_maps = tuple(tuple(m) for m in arg_maps)
        if len(self._arg_maps) != n or any(len(m) != s for m, s in zip(self._arg_maps, sizes)):
            raise InputError("arg_maps must give one map per factor over its vertices")
        self._value_index = tuple({v: k for k, v in enumerate(g.vertices)} for g in factors)

    def __repr__(self):
        return f"GwpSpec(elements={list(self.poset.elements)}, sizes={[len(g) for g in self.factors]})"

    @property
    def arg_axes(self) -> tuple:
        """``A(i)`` labels for every poset element, in declared order."""
        return tuple(self.poset.ancestral_set(i) for i in self.poset)

    def vertex_count(self) -> int:
        return math.prod(len(g) ** length for g, length in zip(self.factors, self.table_lengths))

    def predicted_degree(self) -> Optional[int]:
        degrees = [g.regular_degree() for g in self.factors]
        if any(d is None for d in degrees):
            return None
        return sum(degrees)

    # index-level engine

    def evaluate(self, f: Sequence[Sequence[int]]) -> list[int]:
        """Evaluated coordinate of every factor, by recursion along ancestors."""
        e = [0] * len(self.factors)
        maps = self._arg_maps
        for k in self._order:
            pos = 0
            for j, st in zip(self._args[k], self._strides[k]):
                pos += maps[j][e[j]] * st
            e[k] = f[k][pos]
        return e

    def argument_positions(self, f: Sequence[Sequence[int]]) -> list[int]:
        """Flat table position at which each ``f_i`` is read."""
        e = self.evaluate(f)
        maps = self._arg_maps
        return [
            sum(maps[j][e[j]] * st for j, st in zip(self._args[k], self._strides[k]))
            for k in range(len(self.factors))
        ]

    def neighbor_indices(self, f: Sequence[Sequence[int]]) -> list[tuple]:
        out = []
        positions = self.argument_positions(f)
        for k, pos in enumerate(positions):
            table = f[k]
            for y in self.factors[k].adjacency[table[pos]]:
                changed = table[:pos] + (y,) + table[pos + 1 :]
                out.append(f[:k] + (changed,) + f[k + 1 :])
        return out

    # label conversion

    def to_indices(self, vertex) -> tuple:
        """Convert a label-level vertex, validating its shape and alphabet."""
        try:
            tables = tuple(vertex)
        except TypeError:
            raise BadPoint(f"{vertex!r} is not a tuple of tables") from None
        if len(tables) != len(self.factors):
            raise BadPoint(f"vertex has {len(tables)} tables, expected {len(self.factors)}")
        out = []
        for i, table, length, index in zip(self.poset, tables, self.table_lengths, self._value_index):
            if isinstance(table, (str, bytes)) or not hasattr(table, "__len__"):
                table = (table,)
            if len(table) != length:
                raise BadPoint(f"table of {i!r} has {len(table)} values, expected {length}")
            try:
                out.append(tuple(index[v] for v in table))
            except (KeyError, TypeError):
                raise BadPoint(f"table of {i!r} holds a value outside the factor's vertex set") from None
        return tuple(out)

    def to_labels(self, f: Sequence[Sequence[int]]) -> tuple:
        return tuple(tuple(g.vertices[x] for x in table) for g, table in zip(self.factors, f))

    def enumerate_indices(self):
        """All vertices in lexicographic order of their flattened tables."""
        per_table = [itertools.product(range(len(g)), repeat=length) for g, length in zip(self.factors, self.table_lengths)]
        return itertools.product(*(list(t) for t in per_table))

    # JSON

    def vertex_to_json(self, vertex) -> list:
        f = self.to_indices(vertex)
        return [
            {"index": label_to_json(i), "values": [label_to_json(v) for v in self.to_labels(f)[k]]}
            for k, i in enumerate(self.poset)
        ]

    def vertex_from_json(self, data) -> tuple:
        if not isinstance(data, list) or not all(isinstance(t, dict) and set(t) == {"index", "values"} for t in data):
            raise SchemaError('vertex JSON must be an array of {"index": ..., "values": [...]} objects')
        if [label_from_json(t["index"]) for t in data] != list(self.poset):
            raise BadPoint("vertex tables must list every poset element once, in declared order")
        for t in data:
            if not isinstance(t["values"], list):
                raise SchemaError("table values must be an array")
        vertex = tuple(tuple(label_from_json(v) for v in t["values"]) for t in data)
        self.to_indices(vertex)
        return vertex


def gwp_vertex_count(spec: GwpSpec) -> int:
    return spec.vertex_count()


def gwp_eval(spec: GwpSpec, vertex, i: Hashable):
    """Vertex of ``V_i`` obtained by evaluating ``f_i`` on its evaluated ancestors."""
    k = spec.poset.index(i)
    return spec.factors[k].vertices[spec.evaluate(spec.to_indices(vertex))[k]]


def gwp_neighbors(spec: GwpSpec, vertex) -> list[tuple]:
    """Neighbours of ``vertex`` without materializing the product.

    Ordered by poset element, then by the factor's neighbour order.
    """
    return [spec.to_labels(h) for h in spec.neighbor_indices(spec.to_indices(vertex))]


def generalized_wreath(spec: GwpSpec, cap: int = MATERIALIZE_CAP) -> Graph:
    """Materialize the generalized wreath product as a :class:`Graph`."""
    total = spec.vertex_count()
    _check_size("generalized wreath product", total, cap)
    sizes = [len(g) for g in spec.factors]
    # mixed-radix code: every table entry is one digit, first digit most significant
    digit_weight = []
    w = 1
    for k in range(len(sizes) - 1, -1, -1):
        row = [0] * spec.table_lengths[k]
        for pos in range(spec.table_lengths[k] - 1, -1, -1):
            row[pos] = w
            w *= sizes[k]
        digit_weight.append(row)
    digit_weight.reverse()
    adjacency_lists = [g.adjacency for g in spec.factors]
    vertices = []
    adjacency = []
    for code, f in enumerate(spec.enumerate_indices()):
        vertices.append(spec.to_labels(f))
        nbrs = []
        for k, pos in enumerate(spec.argument_positions(f)):
            cur = f[k][pos]
            wk = digit_weight[k][pos]
            nbrs.extend(code + (y - cur) * wk for y in adjacency_lists[k][cur])
        adjacency.append(nbrs)
    return Graph.from_adjacency(vertices, adjacency)


def cayley_gwp_spec(poset: Poset, groups) -> GwpSpec:
    """Spec over ``Cay(G_i, S_i)`` factors with inverse-evaluated table arguments.

    ``groups`` maps each poset element to ``(FiniteGroup, generators)``.
    """
    if isinstance(groups, Mapping):
        missing = [i for i in poset if i not in groups]
        if missing or len(groups) != len(poset):
            raise InputError(f"groups must be keyed by poset elements (missing {missing})")
        groups = [groups[i] for i in poset]
    factors = []
    inverses = []
    for group, gens in groups:
        if not isinstance(gens, GeneratingSet):
            gens = GeneratingSet(group, gens)
        factors.append(cayley_graph(group, gens))
        inverses.append(group.inverse)
    return GwpSpec(poset, factors, arg_maps=inverses)


def cayley_factor_spec(poset: Poset, groups) -> GwpSpec:
    """Spec over the same Cayley graphs with the plain (non-inverted) convention."""
    spec = cayley_gwp_spec(poset, groups)
    return GwpSpec(poset, spec.factors)


def gwp_eval_inv(spec: GwpSpec, vertex, i: Hashable):
    """Group element ``e_i = f_i(e_{i_1}^-1, ..., e_{i_p}^-1)`` for a Cayley-convention spec."""
    return gwp_eval(spec, vertex, i)


def generalized_wreath_cayley(poset: Poset, groups, cap: int = MATERIALIZE_CAP) -> Graph:
    return generalized_wreath(cayley_gwp_spec(poset, groups), cap=cap)


def _neighbors_binary(kind: str, g1: Graph, g2: Graph, vertex) -> list:
    """Lazy neighbours for the binary products (used for spot checks)."""
    if kind == "cartesian":
        a, b = vertex
        return [(a, y) for y in g2.neighbors(b)] + [(x, b) for x in g1.neighbors(a)]
    if kind == "lexicographic":
        a, b = vertex
        return [(x, y) for x in g1.neighbors(a) for y in g2.vertices] + [(a, y) for y in g2.neighbors(b)]
    if kind == "wreath":
        f, v = vertex
        k = g1.index(v)
        out = [(f[:k] + (y,) + f[k + 1 :], v) for y in g2.neighbors(f[k])]
        return out + [(f, w) for w in g1.neighbors(v)]
    raise InputError(f"unknown binary product {kind!r}")


def binary_product_size(kind: str, n1: int, n2: int) -> int:
    return n1 * n2**n1 if kind == "wreath" else n1 * n2


def binary_product_degree(kind: str, n1: int, d1: Optional[int], n2: int, d2: Optional[int]) -> Optional[int]:
    if d1 is None or d2 is None:
        return None
    if kind == "lexicographic":
        return d1 * n2 + d2
    return d1 + d2
