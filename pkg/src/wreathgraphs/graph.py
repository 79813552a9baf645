"""Finite simple undirected graphs with a deterministic vertex order.

Vertex labels are arbitrary hashables.  Product constructions use nested
tuples as labels, and these serialize to nested JSON arrays.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Hashable, Iterable, Optional, Sequence

from .errors import DuplicateLabel, LoopEdge, SchemaError, SizeCap, UnknownLabel

ISOMORPHISM_CAP = 5000


class Graph:
    """Simple undirected graph.

    ``vertices`` is the declared vertex order and ``adjacency[k]`` the sorted
    tuple of neighbor indices of vertex ``k``.
    """

    __slots__ = ("vertices", "adjacency", "_index")

    def __init__(self, vertices: Sequence[Hashable], edges: Iterable[Sequence[Hashable]] = ()):
        vertices = tuple(vertices)
        index = {}
        for k, v in enumerate(vertices):
            if v in index:
                raise DuplicateLabel(f"duplicate vertex {v!r}")
            index[v] = k
        adj = [set() for _ in vertices]
        for edge in edges:
            if len(edge) != 2:
                raise SchemaError(f"edge {edge!r} is not a pair")
            a, b = edge
            for x in (a, b):
                if x not in index:
                    raise UnknownLabel(f"edge endpoint {x!r} is not a vertex")
            if a == b:
                raise LoopEdge(f"loop at {a!r}")
            adj[index[a]].add(index[b])
            adj[index[b]].add(index[a])
        self.vertices = vertices
        self.adjacency = tuple(tuple(sorted(s)) for s in adj)
        self._index = index

    @classmethod
    def from_adjacency(cls, vertices: Sequence[Hashable], adjacency: Sequence[Iterable[int]]) -> "Graph":
        """Build from index adjacency; symmetry and loop-freeness are checked."""
        g = cls(vertices)
        adj = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        if len(adj) != len(g.vertices):
            raise SchemaError("adjacency length differs from vertex count")
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if v == u:
                    raise LoopEdge(f"loop at {g.vertices[u]!r}")
                if u not in adj[v]:
                    raise SchemaError(f"asymmetric adjacency between {g.vertices[u]!r} and {g.vertices[v]!r}")
        g.adjacency = adj
        return g

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Graph(n={len(self.vertices)}, m={self.num_edges})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.adjacency == other.adjacency

    def __contains__(self, label):
        try:
            return label in self._index
        except TypeError:
            return False

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabel(f"{label!r} is not a vertex") from None

    def neighbors(self, label: Hashable) -> list:
        return [self.vertices[k] for k in self.adjacency[self.index(label)]]

    def degree(self, label: Hashable) -> int:
        return len(self.adjacency[self.index(label)])

    def adjacent(self, a: Hashable, b: Hashable) -> bool:
        return self.index(b) in self.adjacency[self.index(a)]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def edge_labels(self) -> list[tuple]:
        vs = self.vertices
        return [(vs[u], vs[v]) for u, v in self.edges()]

    def edge_set(self) -> set[frozenset]:
        return {frozenset(e) for e in self.edge_labels()}

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        degrees = {len(nb) for nb in self.adjacency}
        if len(degrees) == 1:
            return degrees.pop()
        if not degrees:
            return 0
        return None

    def connected_components(self) -> list[list]:
        """Components in order of their first vertex, each in declared order."""
        seen = [False] * len(self.vertices)
        comps = []
        for start in range(len(self.vertices)):
            if seen[start]:
                continue
            seen[start] = True
            members = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        members.append(v)
                        queue.append(v)
            comps.append([self.vertices[k] for k in sorted(members)])
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def relabel(self, mapping) -> "Graph":
        """Same graph with vertex ``v`` renamed to ``mapping(v)``."""
        g = Graph.__new__(Graph)
        g.vertices = tuple(mapping(v) for v in self.vertices)
        g._index = {v: k for k, v in enumerate(g.vertices)}
        if len(g._index) != len(g.vertices):
            raise DuplicateLabel("relabelling is not injective")
        g.adjacency = self.adjacency
        return g

    # serialization

    def to_dict(self) -> dict:
        return {
            "vertices": [_jsonable(v) for v in self.vertices],
            "edges": [[_jsonable(a), _jsonable(b)] for a, b in self.edge_labels()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data) -> "Graph":
        if not isinstance(data, dict) or set(data) - {"vertices", "edges"} or "vertices" not in data:
            raise SchemaError('graph JSON must be {"vertices": [...], "edges": [[a, b], ...]}')
        vertices, edges = data["vertices"], data.get("edges", [])
        if not isinstance(vertices, list) or not isinstance(edges, list):
            raise SchemaError("vertices and edges must be arrays")
        for e in edges:
            if not isinstance(e, list) or len(e) != 2:
                raise SchemaError(f"edge {e!r} must be a two-element array")
        try:
            return cls([_hashable(v) for v in vertices], [(_hashable(a), _hashable(b)) for a, b in edges])
        except (UnknownLabel, DuplicateLabel, LoopEdge) as exc:
            raise SchemaError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {json.dumps(name)} {{"]
        for v in self.vertices:
            lines.append(f"  {dot_id(v)};")
        for a, b in self.edge_labels():
            lines.append(f"  {dot_id(a)} -- {dot_id(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _jsonable(label):
    if isinstance(label, tuple):
        return [_jsonable(x) for x in label]
    return label


def _hashable(value):
    if isinstance(value, list):
        return tuple(_hashable(x) for x in value)
    if isinstance(value, dict):
        raise SchemaError("vertex labels cannot be JSON objects")
    return value


def label_to_json(label):
    return _jsonable(label)


def label_from_json(value):
    return _hashable(value)


def dot_id(label) -> str:
    text = label if isinstance(label, str) else json.dumps(_jsonable(label), ensure_ascii=False, separators=(",", ":"))
    return json.dumps(text, ensure_ascii=False)


def graph_new(vertices, edges=()) -> Graph:
    return Graph(vertices, edges)


def export_dot(graph: Graph) -> str:
    return graph.to_dot()


def complete_graph(n: int, labels: Optional[Sequence] = None) -> Graph:
    labels = list(labels) if labels is not None else [str(k) for k in range(n)]
    return Graph(labels, [(labels[a], labels[b]) for a in range(n) for b in range(a + 1, n)])


def cycle_graph(n: int, labels: Optional[Sequence] = None) -> Graph:
    labels = list(labels) if labels is not None else [str(k) for k in range(n)]
    if n < 3:
        raise SchemaError("a cycle needs at least three vertices")
    return Graph(labels, [(labels[k], labels[(k + 1) % n]) for k in range(n)])


def path_graph(n: int, labels: Optional[Sequence] = None) -> Graph:
    labels = list(labels) if labels is not None else [str(k) for k in range(n)]
    return Graph(labels, [(labels[k], labels[k + 1]) for k in range(n - 1)])


# isomorphism


def _refine_colors(graphs: Sequence[Graph]) -> list[list[int]]:
    """Joint colour refinement; equal colours across graphs mean equal signatures."""
    colors = [[len(nb) for nb in g.adjacency] for g in graphs]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        sigs = [
            [(cs[u], tuple(sorted(cs[v] for v in nb))) for u, nb in enumerate(g.adjacency)]
            for g, cs in zip(graphs, colors)
        ]
        palette = {s: k for k, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def _search_order(g: Graph, colors: list[int], class_size: dict) -> list[int]:
    # grow a connected order: prefer vertices with many already-placed neighbours
    n = len(g.vertices)
    placed = [False] * n
    links = [0] * n
    order = []
    for _ in range(n):
        best = None
        best_key = None
        for u in range(n):
            if placed[u]:
                continue
            key = (-links[u], class_size[colors[u]], u)
            if best_key is None or key < best_key:
                best, best_key = u, key
        placed[best] = True
        order.append(best)
        for v in g.adjacency[best]:
            links[v] += 1
    return order


def are_isomorphic(g1: Graph, g2: Graph, cap: int = ISOMORPHISM_CAP) -> Optional[dict]:
    """Return a vertex bijection ``g1 -> g2`` preserving adjacency, or ``None``.

    Backtracking over a connectivity-first vertex order with colour-refinement
    classes as the candidate filter.  The witness is deterministic.
    """
    for g in (g1, g2):
        if len(g) > cap:
            raise SizeCap("isomorphism test", len(g), cap)
    n = len(g1)
    if n != len(g2) or g1.num_edges != g2.num_edges:
        return None
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return None
    if n == 0:
        return {}
    c1, c2 = _refine_colors([g1, g2])
    if sorted(c1) != sorted(c2):
        return None
    class_size: dict = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1
    by_color: dict = {}
    for v, c in enumerate(c2):
        by_color.setdefault(c, []).append(v)
    adj1 = g1.adjacency
    adj2 = g2.adjacency
    adjset2 = [set(nb) for nb in adj2]
    order = _search_order(g1, c1, class_size)
    position = {u: k for k, u in enumerate(order)}
    earlier = [[w for w in adj1[u] if position[w] < position[u]] for u in order]

    fwd = [-1] * n
    used = [False] * n

    def candidates(k):
        u = order[k]
        back = earlier[k]
        pool = adj2[fwd[back[0]]] if back else by_color[c1[u]]
        for v in pool:
            if used[v] or c2[v] != c1[u]:
                continue
            if any(fwd[w] not in adjset2[v] for w in back):
                continue
            if sum(1 for x in adj2[v] if used[x]) != len(back):
                continue
            yield v

    stack = [candidates(0)]
    while stack:
        k = len(stack) - 1
        if fwd[order[k]] != -1:
            used[fwd[order[k]]] = False
            fwd[order[k]] = -1
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            continue
        fwd[order[k]] = v
        used[v] = True
        if k + 1 == n:
            return {g1.vertices[u]: g2.vertices[fwd[u]] for u in range(n)}
        stack.append(candidates(k + 1))
    return None


def check_isomorphism(g1: Graph, g2: Graph, witness: dict) -> bool:
    """Exhaustively confirm ``witness`` is an adjacency-preserving bijection."""
    if len(witness) != len(g1) or len(set(witness.values())) != len(g2) or len(g1) != len(g2):
        return False
    for a in g1.vertices:
        for b in g1.vertices:
            if a != b and g1.adjacent(a, b) != g2.adjacent(witness[a], witness[b]):
                return False
    return True
