"""Finite posets, ancestral sets and poset block structures.

A poset is given by its Hasse covers ``(upper, lower)`` meaning ``upper > lower``.
Upper elements are the *ancestors*: ``ancestral_set(i)`` is everything strictly
above ``i``.  All sets and tuples returned here follow the declared element
order, never a sorted order of the labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import (
    BadPoint,
    CycleDetected,
    DuplicateLabel,
    InputError,
    NotAncestral,
    SizeCap,
    UnknownLabel,
)

Label = Hashable

ANCESTRAL_FAMILY_CAP = 2**20
BLOCK_AUTOMORPHISM_CAP = 8


def _transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    above = [set() for _ in range(n)]
    for a, b in pairs:
        above[b].add(a)
    # Warshall on the "is above" relation
    for k in range(n):
        for i in range(n):
            if k in above[i]:
                above[i] |= above[k]
    return {(a, b) for b in range(n) for a in above[b]}


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite strict partial order on a list of labels.

    ``order`` holds every pair ``(a, b)`` with ``a > b``; ``covers`` keeps the
    pairs the poset was built from.
    """

    elements: tuple
    covers: tuple
    order: frozenset
    _index: dict = field(repr=False)
    _above: tuple = field(repr=False)
    _below: tuple = field(repr=False)

    @classmethod
    def from_covers(cls, elements: Sequence[Label], covers: Iterable[Sequence[Label]] = ()) -> "Poset":
        elements = tuple(elements)
        index = {}
        for pos, e in enumerate(elements):
            if e in index:
                raise DuplicateLabel(f"duplicate poset element {e!r}")
            index[e] = pos
        cover_list = []
        for pair in covers:
            if len(pair) != 2:
                raise InputError(f"cover {pair!r} is not a pair")
            a, b = pair
            for x in (a, b):
                if x not in index:
                    raise UnknownLabel(f"cover endpoint {x!r} is not a poset element")
            cover_list.append((a, b))
        closure = _transitive_closure(len(elements), ((index[a], index[b]) for a, b in cover_list))
        for a, b in closure:
            if a == b:
                raise CycleDetected(f"order relation is cyclic through {elements[a]!r}")
        n = len(elements)
        above = [[] for _ in range(n)]
        below = [[] for _ in range(n)]
        for a, b in sorted(closure):
            above[b].append(a)
            below[a].append(b)
        return cls(
            elements=elements,
            covers=tuple(cover_list),
            order=frozenset((elements[a], elements[b]) for a, b in closure),
            _index=index,
            _above=tuple(tuple(x) for x in above),
            _below=tuple(tuple(x) for x in below),
        )

    @classmethod
    def chain(cls, n: int) -> "Poset":
        """The chain ``"1" > "2" > ... > "n"``."""
        labels = [str(k) for k in range(1, n + 1)]
        return cls.from_covers(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_covers([str(k) for k in range(1, n + 1)])

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.order == other.order

    def __hash__(self):
        return hash((self.elements, self.order))

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabel(f"{label!r} is not an element of the poset") from None

    def greater(self, a: Label, b: Label) -> bool:
        """True iff ``a > b``."""
        return (a, b) in self.order

    def ancestral_set(self, i: Label, strict: bool = True) -> tuple:
        """Elements above ``i`` (``A(i)``), plus ``i`` itself when not strict (``A[i]``)."""
        k = self.index(i)
        idx = set(self._above[k])
        if not strict:
            idx.add(k)
        return tuple(self.elements[j] for j in sorted(idx))

    def hereditary_set(self, i: Label, strict: bool = True) -> tuple:
        """Elements below ``i`` (``H(i)``), plus ``i`` itself when not strict."""
        k = self.index(i)
        idx = set(self._below[k])
        if not strict:
            idx.add(k)
        return tuple(self.elements[j] for j in sorted(idx))

    def sort_labels(self, labels: Iterable[Label]) -> tuple:
        """Deduplicate ``labels`` and put them in declared order."""
        return tuple(self.elements[j] for j in sorted({self.index(x) for x in labels}))

    def is_ancestral(self, subset: Iterable[Label]) -> bool:
        """True iff ``subset`` is upward closed."""
        members = {self.index(x) for x in subset}
        return all(set(self._above[k]) <= members for k in members)

    def ancestral_family(self, cap: int = ANCESTRAL_FAMILY_CAP) -> list[tuple]:
        """All upward-closed subsets, ordered by size then by declared positions."""
        order = [self.index(x) for x in self.linear_extension()]
        found: list[tuple[int, ...]] = []

        # ancestors precede descendants in ``order``, so an element may join
        # exactly when all of its ancestors already have
        def grow(pos, chosen):
            if pos == len(order):
                if len(found) >= cap:
                    raise SizeCap("ancestral family", len(found) + 1, cap)
                found.append(tuple(sorted(chosen)))
                return
            k = order[pos]
            grow(pos + 1, chosen)
            if set(self._above[k]) <= chosen:
                chosen.add(k)
                grow(pos + 1, chosen)
                chosen.discard(k)

        grow(0, set())
        found.sort(key=lambda s: (len(s), s))
        return [tuple(self.elements[j] for j in s) for s in found]

    def linear_extension(self) -> tuple:
        """Total order with every ancestor before its descendants.

        Among available elements the earliest declared one goes first.
        """
        n = len(self.elements)
        waiting = [len(self._above[k]) for k in range(n)]
        done = [False] * n
        out = []
        for _ in range(n):
            k = next(j for j in range(n) if not done[j] and waiting[j] == 0)
            done[k] = True
            out.append(self.elements[k])
            for j in self._below[k]:
                waiting[j] -= 1
        return tuple(out)


def poset_from_covers(elements: Sequence[Label], covers: Iterable[Sequence[Label]] = ()) -> Poset:
    return Poset.from_covers(elements, covers)


def ancestral_set(poset: Poset, i: Label, strict: bool = True) -> tuple:
    return poset.ancestral_set(i, strict)


def hereditary_set(poset: Poset, i: Label, strict: bool = True) -> tuple:
    return poset.hereditary_set(i, strict)


def is_ancestral(poset: Poset, subset: Iterable[Label]) -> bool:
    return poset.is_ancestral(subset)


def ancestral_family(poset: Poset, cap: int = ANCESTRAL_FAMILY_CAP) -> list[tuple]:
    return poset.ancestral_family(cap)


def linear_extension(poset: Poset) -> tuple:
    return poset.linear_extension()


class BlockStructure:
    """The product set ``X = prod X_i`` over a poset, with relations ``~_J``.

    Points of ``X`` are tuples of point labels in declared poset order and are
    enumerated lexicographically by :meth:`points`.
    """

    def __init__(self, poset: Poset, point_sets):
        if len(poset) == 0:
            raise InputError("poset block structure needs a nonempty index set")
        if isinstance(point_sets, dict):
            missing = [i for i in poset if i not in point_sets]
            extra = [i for i in point_sets if i not in poset]
            if missing or extra:
                raise InputError(f"point sets must be keyed by poset elements (missing {missing}, extra {extra})")
            sets = [tuple(point_sets[i]) for i in poset]
        else:
            sets = [tuple(s) for s in point_sets]
            if len(sets) != len(poset):
                raise InputError("need one point set per poset element")
        for i, s in zip(poset, sets):
            if len(s) < 2:
                raise InputError(f"point set of {i!r} must have at least two points")
            if len(set(s)) != len(s):
                raise DuplicateLabel(f"point set of {i!r} has repeated points")
        self.poset = poset
        self.point_sets = tuple(sets)
        self._point_index = tuple({p: k for k, p in enumerate(s)} for s in sets)

    @property
    def size(self) -> int:
        n = 1
        for s in self.point_sets:
            n *= len(s)
        return n

    def points(self) -> list[tuple]:
        return list(itertools.product(*self.point_sets))

    def check_point(self, x) -> tuple:
        x = tuple(x)
        if len(x) != len(self.point_sets) or any(p not in ix for p, ix in zip(x, self._point_index)):
            raise BadPoint(f"{x!r} is not a point of the block structure")
        return x

    def project(self, x, subset) -> tuple:
        return tuple(x[self.poset.index(j)] for j in self.poset.sort_labels(subset))

    def block_related(self, subset, x, y) -> bool:
        if not self.poset.is_ancestral(subset):
            raise NotAncestral(f"{sorted(map(str, subset))} is not ancestral")
        x, y = self.check_point(x), self.check_point(y)
        return self.project(x, subset) == self.project(y, subset)

    def block_automorphisms(self, cap: int = BLOCK_AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
        """Every permutation of ``X`` preserving all relations ``~_J``.

        A permutation is returned as the tuple of image indices into
        :meth:`points`.  Brute force over all ``|X|!`` candidates.
        """
        size = self.size
        if size > cap:
            raise SizeCap("block automorphism search", size, cap)
        pts = self.points()
        classes = []
        for subset in self.poset.ancestral_family():
            cols = [self.poset.index(j) for j in subset]
            keys: dict = {}
            classes.append([keys.setdefault(tuple(x[c] for c in cols), len(keys)) for x in pts])
        autos = []
        for perm in itertools.permutations(range(size)):
            if all(_maps_blocks_to_blocks(cls, perm) for cls in classes):
                autos.append(perm)
        return autos


def _maps_blocks_to_blocks(cls: list[int], perm: tuple[int, ...]) -> bool:
    # sigma preserves the partition both ways iff class -> class is a well-defined injection
    image: dict[int, int] = {}
    for x, y in enumerate(perm):
        c = image.setdefault(cls[x], cls[y])
        if c != cls[y]:
            return False
    return len(set(image.values())) == len(image)


def block_related(structure: BlockStructure, subset, x, y) -> bool:
    return structure.block_related(subset, x, y)


def block_automorphisms(structure: BlockStructure, cap: int = BLOCK_AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
    return structure.block_automorphisms(cap)
