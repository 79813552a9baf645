"""Finite groups as multiplication tables, permutation groups and Cayley graphs.

Permutations act on the right: ``x * p`` is ``p.images[x]`` and the product
``p * q`` applies ``p`` first.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from .errors import (
    ContainsIdentity,
    DoesNotGenerate,
    InputError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotSymmetric,
    SizeCap,
    UnknownLabel,
)
from .graph import Graph

EXHAUSTIVE_ASSOCIATIVITY = 256
ASSOCIATIVITY_SAMPLES = 200_000
SYMMETRIC_GROUP_CAP = 8
CLOSURE_CAP = 10**6
DIRECT_PRODUCT_CAP = 10**6


class FiniteGroup:
    """A group given by its multiplication table over indices ``0..n-1``."""

    def __init__(self, elements: Sequence[Hashable], table, identity: Hashable, *, check_associativity: bool = True):
        elements = tuple(elements)
        n = len(elements)
        index = {}
        for k, e in enumerate(elements):
            if e in index:
                raise InputError(f"duplicate group element {e!r}")
            index[e] = k
        if n == 0:
            raise InputError("a group needs at least one element")
        table = tuple(tuple(int(x) for x in row) for row in table)
        if len(table) != n or any(len(row) != n for row in table):
            raise InputError(f"multiplication table must be {n}x{n}")
        if any(not 0 <= x < n for row in table for x in row):
            raise InputError("table entries must be element indices")
        if identity not in index:
            raise NoIdentity(f"declared identity {identity!r} is not an element")
        e = index[identity]
        if any(table[e][g] != g or table[g][e] != g for g in range(n)):
            raise NoIdentity(f"{identity!r} is not a two-sided identity")
        inverse = []
        for g in range(n):
            row = table[g]
            try:
                h = row.index(e)
            except ValueError:
                raise NoInverse(f"{elements[g]!r} has no inverse") from None
            if table[h][g] != e:
                raise NoInverse(f"{elements[g]!r} has no two-sided inverse")
            inverse.append(h)
        self.elements = elements
        self.table = table
        self.identity = e
        self.inverse = tuple(inverse)
        self._index = index
        if check_associativity:
            _check_associative(self)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup(order={len(self)})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabel(f"{label!r} is not a group element") from None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]


def _check_associative(group: FiniteGroup) -> None:
    n, t = len(group), group.table
    if n <= EXHAUSTIVE_ASSOCIATIVITY:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(ASSOCIATIVITY_SAMPLES))
    for a, b, c in triples:
        if t[t[a][b]][c] != t[a][t[b][c]]:
            els = group.elements
            raise NotAssociative(f"({els[a]!r}{els[b]!r}){els[c]!r} != {els[a]!r}({els[b]!r}{els[c]!r})")


def group_from_table(elements, table, identity) -> FiniteGroup:
    return FiniteGroup(elements, table, identity)


def cyclic_group(n: int) -> FiniteGroup:
    """``Z_n`` on the labels ``"0".."n-1"`` under addition mod ``n``."""
    if n < 1:
        raise InputError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup([str(k) for k in range(n)], table, "0", check_associativity=False)


def direct_product_group(g1: FiniteGroup, g2: FiniteGroup, cap: int = DIRECT_PRODUCT_CAP) -> FiniteGroup:
    """Componentwise product; elements are label pairs ``(a, b)``."""
    n1, n2 = len(g1), len(g2)
    if n1 * n2 > cap:
        raise SizeCap("direct product", n1 * n2, cap)
    elements = [(a, b) for a in g1.elements for b in g2.elements]
    table = [
        [g1.table[a1][a2] * n2 + g2.table[b1][b2] for a2 in range(n1) for b2 in range(n2)]
        for a1 in range(n1)
        for b1 in range(n2)
    ]
    identity = (g1.elements[g1.identity], g2.elements[g2.identity])
    return FiniteGroup(elements, table, identity, check_associativity=False)


def find_group_isomorphism(g1: FiniteGroup, g2: FiniteGroup) -> Optional[dict]:
    """Brute-force search for a table isomorphism (small groups only)."""
    n = len(g1)
    if n != len(g2):
        return None
    if n > 8:
        raise SizeCap("group isomorphism search", n, 8)
    for perm in itertools.permutations(range(n)):
        if all(perm[g1.table[a][b]] == g2.table[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return {g1.elements[a]: g2.elements[perm[a]] for a in range(n)}
    return None


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``0..n-1`` stored by its images; acts on the right."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"{images!r} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        return Permutation(tuple(other.images[y] for y in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))


class PermutationGroup:
    """A set of permutations of ``domain`` closed under products and inverses.

    Members keep the order they were supplied in; ``perms[k]`` is member ``k``.
    """

    def __init__(self, domain: Sequence[Hashable], perms: Iterable, *, check: bool = True):
        domain = tuple(domain)
        self.domain = domain
        self._point_index = {p: k for k, p in enumerate(domain)}
        if len(self._point_index) != len(domain):
            raise InputError("duplicate points in permutation domain")
        perms = tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in perms)
        for p in perms:
            if len(p) != len(domain):
                raise InputError("permutation length differs from the domain size")
        self.perms = perms
        self._member = {p.images: k for k, p in enumerate(perms)}
        if len(self._member) != len(perms):
            raise InputError("repeated permutation in group")
        identity = tuple(range(len(domain)))
        if identity not in self._member:
            raise NotClosed("permutation group lacks the identity")
        self.identity = self._member[identity]
        if check:
            for p in perms:
                if p.inverse().images not in self._member:
                    raise NotClosed("permutation group not closed under inverses")
                for q in perms:
                    if (p * q).images not in self._member:
                        raise NotClosed("permutation group not closed under products")

    def __len__(self):
        return len(self.perms)

    def __repr__(self):
        return f"PermutationGroup(degree={len(self.domain)}, order={len(self.perms)})"

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def degree(self) -> int:
        return len(self.domain)

    def point_index(self, point: Hashable) -> int:
        try:
            return self._point_index[point]
        except (KeyError, TypeError):
            raise UnknownLabel(f"{point!r} is not in the domain") from None

    def member_index(self, perm) -> int:
        images = perm.images if isinstance(perm, Permutation) else tuple(perm)
        try:
            return self._member[images]
        except KeyError:
            raise UnknownLabel(f"{images!r} is not a member of the group") from None

    def mul(self, a: int, b: int) -> int:
        """Index of ``perms[a] * perms[b]`` (``a`` applied first)."""
        pa, pb = self.perms[a].images, self.perms[b].images
        return self._member[tuple(pb[y] for y in pa)]

    def inv(self, a: int) -> int:
        return self._member[self.perms[a].inverse().images]

    def apply(self, point: int, member: int) -> int:
        return self.perms[member].images[point]

    def orbit(self, point: Hashable) -> list:
        """Orbit of a point label, in domain order."""
        x = self.point_index(point)
        hits = {p.images[x] for p in self.perms}
        return [self.domain[y] for y in sorted(hits)]

    def is_transitive(self) -> bool:
        if not self.domain:
            return True
        return len(self.orbit(self.domain[0])) == len(self.domain)


def symmetric_group(points: Sequence[Hashable], cap: int = SYMMETRIC_GROUP_CAP) -> PermutationGroup:
    points = tuple(points)
    if len(points) > cap:
        raise SizeCap("symmetric group", len(points), cap)
    perms = [Permutation(p) for p in itertools.permutations(range(len(points)))]
    return PermutationGroup(points, perms, check=False)


def trivial_group(points: Sequence[Hashable]) -> PermutationGroup:
    return PermutationGroup(points, [Permutation.identity(len(points))], check=False)


def regular_representation(group: FiniteGroup) -> PermutationGroup:
    """``G`` acting on its own elements by right multiplication ``x -> xg``.

    Member ``k`` is the action of element ``k``, so indices coincide.
    """
    n = len(group)
    perms = [Permutation(tuple(group.table[x][g] for x in range(n))) for g in range(n)]
    return PermutationGroup(group.elements, perms, check=False)


def closure(domain: Sequence[Hashable], generators: Iterable, cap: int = CLOSURE_CAP) -> PermutationGroup:
    """Group generated by ``generators``, members in breadth-first discovery order."""
    domain = tuple(domain)
    gens = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators]
    for g in gens:
        if len(g) != len(domain):
            raise InputError("generator length differs from the domain size")
    start = Permutation.identity(len(domain))
    seen = {start.images}
    found = [start]
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = p * g
            if q.images not in seen:
                if len(found) >= cap:
                    raise SizeCap("permutation group closure", len(found) + 1, cap)
                seen.add(q.images)
                found.append(q)
                queue.append(q)
    return PermutationGroup(domain, found, check=False)


def orbit(group: PermutationGroup, point: Hashable) -> list:
    return group.orbit(point)


def is_transitive(group: PermutationGroup) -> bool:
    return group.is_transitive()


class GeneratingSet:
    """A symmetric, identity-free set of element indices generating ``group``."""

    def __init__(self, group: FiniteGroup, members: Iterable[Hashable]):
        idx = []
        for m in members:
            k = group.index(m)
            if k not in idx:
                idx.append(k)
        if group.identity in idx:
            raise ContainsIdentity(f"generating set contains the identity {group.elements[group.identity]!r}")
        for k in idx:
            if group.inverse[k] not in idx:
                raise NotSymmetric(f"inverse of {group.elements[k]!r} is missing from the generating set")
        reached = _span(group, idx)
        if reached != len(group):
            raise DoesNotGenerate(f"generating set spans {reached} of {len(group)} elements")
        self.group = group
        self.members = tuple(idx)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def labels(self) -> list:
        return [self.group.elements[k] for k in self.members]


def _span(group: FiniteGroup, gens: Sequence[int]) -> int:
    seen = {group.identity}
    queue = deque(seen)
    while queue:
        g = queue.popleft()
        for s in gens:
            h = group.table[g][s]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return len(seen)


def validate_generating_set(group: FiniteGroup, members: Iterable[Hashable]) -> GeneratingSet:
    return GeneratingSet(group, members)


def cayley_graph(group: FiniteGroup, gens) -> Graph:
    """``Cay(G, S)``: vertex ``g`` adjacent to ``gs`` for every ``s`` in ``S``."""
    if not isinstance(gens, GeneratingSet):
        gens = GeneratingSet(group, gens)
    adjacency = [[group.table[g][s] for s in gens.members] for g in range(len(group))]
    graph = Graph.from_adjacency(group.elements, adjacency)
    assert graph.regular_degree() == len(gens) and graph.is_connected()
    return graph

