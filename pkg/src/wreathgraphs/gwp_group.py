"""Generalized wreath products of permutation groups over a poset.

An element ``f`` is a tuple of tables, one per poset element in declared order.
The table of ``i`` lists member indices of ``G_i`` over the arguments
``prod_{j in A(i)} X_j`` in lexicographic order, exactly like the vertex tables
of :mod:`wreathgraphs.products`.  Points of ``X`` are tuples of point labels in
declared poset order.

The action is on the right and simultaneous: ``(x f)_i = x_i * f_i(x_{A(i)})``
with every coordinate read from the original ``x``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Optional, Sequence

from .errors import BadPoint, InputError, NotAncestral, SizeCap, VerificationFailed
from .graph import Graph, are_isomorphic
from .groups import FiniteGroup, GeneratingSet, PermutationGroup, regular_representation
from .poset import Poset
from .products import MATERIALIZE_CAP, cayley_factor_spec, cayley_gwp_spec, generalized_wreath

ENUMERATION_CAP = 10**6


class GwpGroupSpec:
    """Poset together with a permutation group ``(G_i, X_i)`` per element."""

    def __init__(self, poset: Poset, actions, member_labels: Optional[Sequence[Sequence[Hashable]]] = None):
        if len(poset) == 0:
            raise InputError("generalized wreath product needs a nonempty poset")
        if isinstance(actions, Mapping):
            missing = [i for i in poset if i not in actions]
            if missing or len(actions) != len(poset):
                raise InputError(f"actions must be keyed by poset elements (missing {missing})")
            actions = [actions[i] for i in poset]
        actions = tuple(actions)
        if len(actions) != len(poset) or not all(isinstance(a, PermutationGroup) for a in actions):
            raise InputError("need one PermutationGroup per poset element")
        self.poset = poset
        self.actions = actions
        degrees = [a.degree for a in actions]
        self._args = tuple(tuple(poset.index(j) for j in poset.ancestral_set(i)) for i in poset)
        self._strides = tuple(_strides([degrees[j] for j in args]) for args in self._args)
        self.table_lengths = tuple(math.prod(degrees[j] for j in args) for args in self._args)
        self._order = tuple(poset.index(i) for i in poset.linear_extension())
        # argument tuples of every table, and where each ancestor's own arguments sit inside them
        self._arg_tuples = tuple(
            list(itertools.product(*(range(degrees[j]) for j in args))) for args in self._args
        )
        self._sub = tuple(
            tuple(tuple(args.index(m) for m in self._args[j]) for j in args) for args in self._args
        )
        if member_labels is None:
            member_labels = [tuple(range(a.order)) for a in actions]
        self.member_labels = tuple(tuple(m) for m in member_labels)
        self._member_index = tuple({m: k for k, m in enumerate(ms)} for ms in self.member_labels)

    @classmethod
    def from_groups(cls, poset: Poset, groups) -> "GwpGroupSpec":
        """Each group acting on itself by right multiplication."""
        if isinstance(groups, Mapping):
            groups = [groups[i] for i in poset]
        groups = [g[0] if isinstance(g, tuple) else g for g in groups]
        return cls(poset, [regular_representation(g) for g in groups], [g.elements for g in groups])

    def __repr__(self):
        return f"GwpGroupSpec(elements={list(self.poset.elements)}, orders={[a.order for a in self.actions]})"

    def order(self) -> int:
        """``|F| = prod_i |G_i| ** |X^i|``."""
        return math.prod(a.order ** n for a, n in zip(self.actions, self.table_lengths))

    def point_count(self) -> int:
        return math.prod(a.degree for a in self.actions)

    # points

    def point_to_indices(self, x) -> tuple:
        try:
            x = tuple(x)
        except TypeError:
            raise BadPoint(f"{x!r} is not a point tuple") from None
        if len(x) != len(self.actions):
            raise BadPoint(f"point {x!r} has the wrong number of coordinates")
        try:
            return tuple(a.point_index(p) for a, p in zip(self.actions, x))
        except KeyError:
            raise BadPoint(f"{x!r} is not a point of X") from None

    def point_to_labels(self, x) -> tuple:
        return tuple(a.domain[p] for a, p in zip(self.actions, x))

    def points(self) -> list[tuple]:
        """All point index tuples in lexicographic order."""
        return list(itertools.product(*(range(a.degree) for a in self.actions)))

    # element conversion

    def to_labels(self, f) -> tuple:
        return tuple(tuple(ms[m] for m in table) for ms, table in zip(self.member_labels, f))

    def from_labels(self, tables) -> tuple:
        tables = tuple(tuple(t) for t in tables)
        if len(tables) != len(self.actions):
            raise InputError("element needs one table per poset element")
        out = []
        for i, t, n, index in zip(self.poset, tables, self.table_lengths, self._member_index):
            if len(t) != n:
                raise InputError(f"table of {i!r} has {len(t)} entries, expected {n}")
            try:
                out.append(tuple(index[m] for m in t))
            except KeyError:
                raise InputError(f"table of {i!r} holds an unknown group member") from None
        return tuple(out)

    def check_element(self, f) -> tuple:
        f = tuple(tuple(t) for t in f)
        if len(f) != len(self.actions):
            raise InputError("element needs one table per poset element")
        for a, t, n in zip(self.actions, f, self.table_lengths):
            if len(t) != n or any(not 0 <= m < a.order for m in t):
                raise InputError("table entries must be member indices of the right length")
        return f

    # core operations on index-level data

    def _flat(self, k: int, coords) -> int:
        return sum(c * s for c, s in zip(coords, self._strides[k]))

    def act_indices(self, x: Sequence[int], f) -> tuple:
        return tuple(
            self.actions[k].perms[f[k][self._flat(k, [x[j] for j in self._args[k]])]].images[x[k]]
            for k in range(len(self.actions))
        )

    def _move_arguments(self, k: int, y: Sequence[int], f) -> tuple:
        """``y f_{A(k)}``: act on an argument tuple of ``f_k`` with the induced map."""
        args = self._args[k]
        out = []
        for pos, j in enumerate(args):
            member = f[j][self._flat(j, [y[q] for q in self._sub[k][pos]])]
            out.append(self.actions[j].perms[member].images[y[pos]])
        return tuple(out)

    def identity(self) -> tuple:
        return tuple((a.identity,) * n for a, n in zip(self.actions, self.table_lengths))

    def compose(self, f, h) -> tuple:
        """``t = fh`` with ``t_i(y) = f_i(y) * h_i(y f_{A(i)})`` pointwise."""
        out = []
        for k, group in enumerate(self.actions):
            row = []
            for pos, y in enumerate(self._arg_tuples[k]):
                z = self._move_arguments(k, y, f)
                row.append(group.mul(f[k][pos], h[k][self._flat(k, z)]))
            out.append(tuple(row))
        return tuple(out)

    def inverse(self, f) -> tuple:
        """``h = f^-1`` with ``h_i(z) = f_i(z h_{A(i)})^-1``, built ancestors first."""
        h: list = [None] * len(self.actions)
        for k in self._order:
            group = self.actions[k]
            row = []
            for z in self._arg_tuples[k]:
                y = self._move_arguments(k, z, h)
                row.append(group.inv(f[k][self._flat(k, y)]))
            h[k] = tuple(row)
        return tuple(h)

    def induced(self, f, subset) -> tuple:
        """Map ``f_J`` on ``X_J`` as image indices over its lexicographic points."""
        if not self.poset.is_ancestral(subset):
            raise NotAncestral(f"{list(subset)} is not ancestral")
        cols = [self.poset.index(j) for j in self.poset.sort_labels(subset)]
        where = {c: n for n, c in enumerate(cols)}
        pts = list(itertools.product(*(range(self.actions[c].degree) for c in cols)))
        code = {p: n for n, p in enumerate(pts)}
        images = []
        for p in pts:
            img = []
            for c in cols:
                member = f[c][self._flat(c, [p[where[j]] for j in self._args[c]])]
                img.append(self.actions[c].perms[member].images[p[where[c]]])
            images.append(code[tuple(img)])
        return tuple(images)

    def action_map(self, f) -> tuple:
        """Permutation of ``X`` induced by ``f``, as image indices over :meth:`points`."""
        return self.induced(f, self.poset.elements)

    def enumerate(self, cap: int = ENUMERATION_CAP) -> list[tuple]:
        """All elements: tables in poset order, each lexicographic over arguments."""
        size = self.order()
        if size > cap:
            raise SizeCap("generalized wreath product enumeration", size, cap)
        per_table = [
            list(itertools.product(range(a.order), repeat=n)) for a, n in zip(self.actions, self.table_lengths)
        ]
        return list(itertools.product(*per_table))


def _strides(sizes: Sequence[int]) -> tuple:
    out = [0] * len(sizes)
    w = 1
    for pos in range(len(sizes) - 1, -1, -1):
        out[pos] = w
        w *= sizes[pos]
    return tuple(out)


def gwp_identity(spec: GwpGroupSpec) -> tuple:
    return spec.identity()


def gwp_act(spec: GwpGroupSpec, x, f) -> tuple:
    """Image of the point ``x`` (labels) under ``f``."""
    return spec.point_to_labels(spec.act_indices(spec.point_to_indices(x), f))


def gwp_compose(spec: GwpGroupSpec, f, h) -> tuple:
    return spec.compose(f, h)


def gwp_inverse(spec: GwpGroupSpec, f) -> tuple:
    return spec.inverse(f)


def gwp_induced(spec: GwpGroupSpec, f, subset) -> tuple:
    return spec.induced(f, subset)


def gwp_enumerate(spec: GwpGroupSpec, cap: int = ENUMERATION_CAP) -> list[tuple]:
    return spec.enumerate(cap)


def verify_faithful(spec: GwpGroupSpec, cap: int = ENUMERATION_CAP) -> bool:
    """True iff distinct elements act as distinct permutations of ``X``."""
    elements = spec.enumerate(cap)
    return len({spec.action_map(f) for f in elements}) == len(elements)


def gwp_is_transitive(spec: GwpGroupSpec, cap: int = ENUMERATION_CAP) -> bool:
    elements = spec.enumerate(cap)
    start = tuple(0 for _ in spec.actions)
    orbit = {spec.act_indices(start, f) for f in elements}
    return len(orbit) == spec.point_count()


def _resolve_groups(poset: Poset, groups) -> list[tuple[FiniteGroup, GeneratingSet]]:
    if isinstance(groups, Mapping):
        missing = [i for i in poset if i not in groups]
        if missing or len(groups) != len(poset):
            raise InputError(f"groups must be keyed by poset elements (missing {missing})")
        groups = [groups[i] for i in poset]
    out = []
    for group, gens in groups:
        if not isinstance(gens, GeneratingSet):
            gens = GeneratingSet(group, gens)
        out.append((group, gens))
    if len(out) != len(poset):
        raise InputError("need one (group, generators) pair per poset element")
    return out


def theorem_generating_set(poset: Poset, groups) -> list[tuple]:
    """Generators ``s̄_i``: ``s_i`` at the all-identities argument of table ``i``.

    Every other entry and every other table is the identity.  Ordered by poset
    element, then by generator order.
    """
    resolved = _resolve_groups(poset, groups)
    spec = GwpGroupSpec.from_groups(poset, [g for g, _ in resolved])
    ident = spec.identity()
    out = []
    for k, (group, gens) in enumerate(resolved):
        at = spec._flat(k, [resolved[j][0].identity for j in spec._args[k]])
        for s in gens.members:
            table = list(ident[k])
            table[at] = s
            out.append(ident[:k] + (tuple(table),) + ident[k + 1 :])
    assert ident not in out
    assert all(spec.inverse(s) in out for s in out)
    return out


def gwp_cayley_graph(spec: GwpGroupSpec, generators: Sequence[tuple], cap: int = ENUMERATION_CAP) -> Graph:
    """``Cay(F, S)`` with ``f ~ fs``; vertex labels are label-level element tables."""
    elements = spec.enumerate(cap)
    index = {f: k for k, f in enumerate(elements)}
    adjacency = [[index[spec.compose(f, s)] for s in generators] for f in elements]
    return Graph.from_adjacency([spec.to_labels(f) for f in elements], adjacency)


def generated_subgroup(spec: GwpGroupSpec, generators: Sequence[tuple], cap: int = ENUMERATION_CAP) -> list[tuple]:
    """Breadth-first closure of ``generators`` under right multiplication."""
    start = spec.identity()
    seen = {start}
    found = [start]
    queue = deque(found)
    while queue:
        f = queue.popleft()
        for s in generators:
            t = spec.compose(f, s)
            if t not in seen:
                if len(found) >= cap:
                    raise SizeCap("generated subgroup", len(found) + 1, cap)
                seen.add(t)
                found.append(t)
                queue.append(t)
    return found


@dataclass
class TheoremReport:
    generates: bool
    edge_sets_equal: bool
    plain_isomorphic: bool
    vertices: int
    edges: int
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.generates and self.edge_sets_equal and self.plain_isomorphic

    def to_dict(self) -> dict:
        return {
            "generates": self.generates,
            "edge_sets_equal": self.edge_sets_equal,
            "defimine_isomorphic": self.plain_isomorphic,
            "vertices": self.vertices,
            "edges": self.edges,
            "witness": self.witness,
        }


def verify_cayley_theorem(
    poset: Poset,
    groups,
    cap: int = ENUMERATION_CAP,
    iso_cap: int = 5000,
    raise_on_failure: bool = False,
) -> TheoremReport:
    """Check that the product of Cayley graphs is the Cayley graph of the product group.

    Three checks: the theorem's generators span the whole group; the edge set
    of ``Cay(F, S)`` equals the edge set of the inverse-convention product
    graph under the same vertex encoding; and the plain-convention product of
    the factor Cayley graphs is isomorphic to it.
    """
    from .graph import label_to_json

    resolved = _resolve_groups(poset, groups)
    spec = GwpGroupSpec.from_groups(poset, [g for g, _ in resolved])
    size = spec.order()
    if size > min(cap, MATERIALIZE_CAP):
        raise SizeCap("theorem verification", size, min(cap, MATERIALIZE_CAP))
    gens = theorem_generating_set(poset, resolved)

    span = generated_subgroup(spec, gens, cap)
    generates = len(span) == size

    group_side = gwp_cayley_graph(spec, gens, cap)
    graph_side = generalized_wreath(cayley_gwp_spec(poset, resolved), cap=cap)
    group_edges = group_side.edge_set()
    graph_edges = graph_side.edge_set()
    edge_sets_equal = group_side.vertices == graph_side.vertices and group_edges == graph_edges
    witness = None
    if not edge_sets_equal:
        extra = sorted(group_edges - graph_edges, key=repr)
        missing = sorted(graph_edges - group_edges, key=repr)
        if extra:
            witness = {"only_in_cayley_graph": [label_to_json(v) for v in sorted(extra[0], key=repr)]}
        elif missing:
            witness = {"only_in_product_graph": [label_to_json(v) for v in sorted(missing[0], key=repr)]}
        else:
            witness = {"vertex_encoding_differs": True}

    plain = generalized_wreath(cayley_factor_spec(poset, resolved), cap=cap)
    plain_isomorphic = are_isomorphic(plain, group_side, cap=iso_cap) is not None
    if not plain_isomorphic and witness is None:
        witness = {"plain_convention_not_isomorphic": True}

    report = TheoremReport(
        generates=generates,
        edge_sets_equal=edge_sets_equal,
        plain_isomorphic=plain_isomorphic,
        vertices=len(group_side),
        edges=group_side.num_edges,
        witness=witness,
        details={"span": len(span), "order": size, "generators": len(gens)},
    )
    if raise_on_failure and not report.ok:
        raise VerificationFailed("Cayley graph identity failed", witness=witness)
    return report
