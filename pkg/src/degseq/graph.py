"""Labeled simple graphs and degree-invariant edge swaps."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from .sequence import DegreeSequence

__all__ = [
    "Graph",
    "GraphError",
    "PreconditionError",
    "SimplicityViolation",
    "SwapRecord",
    "Variant",
    "connected_components",
    "degree_sequence",
    "find_cycle_edge",
    "is_connected",
    "merge_components",
    "two_swap",
]

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class PreconditionError(GraphError):
    pass


class SimplicityViolation(GraphError):
    """A swap would add an edge that is already present."""


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``. Instances are
    immutable; every operation returns a new graph.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        canon = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            e = _canon(u, v)
            if e in canon:
                raise GraphError(f"parallel edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    parts = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        part = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(connected_components(g)) == 1


def find_cycle_edge(g: Graph, component: Iterable[int]) -> Edge | None:
    """Return an edge on a cycle inside ``component``, or None if it is a tree.

    Depth-first search from the smallest vertex, visiting neighbours in
    increasing order; the first back edge closes a cycle and the smallest
    edge of that cycle is returned.
    """
    comp = sorted(component)
    if not comp:
        return None
    members = set(comp)
    m = sum(1 for u, v in g.edges if u in members)
    if m < len(comp):
        return None

    root = comp[0]
    parent = {root: -1}
    path = [root]
    stack = [iter(sorted(g.adjacency[root]))]
    on_path = {root: 0}
    while stack:
        v = path[-1]
        for w in stack[-1]:
            if w == parent[v]:
                continue
            if w in on_path:
                cycle = path[on_path[w]:]
                edges = [_canon(a, b) for a, b in zip(cycle, cycle[1:])]
                edges.append(_canon(v, w))
                return min(edges)
            if w not in parent:
                parent[w] = v
                on_path[w] = len(path)
                path.append(w)
                stack.append(iter(sorted(g.adjacency[w])))
                break
        else:
            stack.pop()
            del on_path[path.pop()]
    return None


class Variant(str, Enum):
    """The two rewirings of edges ab, cd."""

    AC_BD = "ac/bd"
    AD_BC = "ad/bc"

    def added(self, a: int, b: int, c: int, d: int) -> tuple[Edge, Edge]:
        if self is Variant.AC_BD:
            return _canon(a, c), _canon(b, d)
        return _canon(a, d), _canon(b, c)


@dataclass(frozen=True)
class SwapRecord:
    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]
    variant: Variant

    def apply(self, g: Graph) -> Graph:
        return two_swap(g, self.removed[0], self.removed[1], self.variant)[0]


def two_swap(g: Graph, ab: Edge, cd: Edge, variant: Variant | str) -> tuple[Graph, SwapRecord]:
    """Replace edges ``ab`` and ``cd`` by ``ac, bd`` or ``ad, bc``.

    Endpoint order within ``ab`` and ``cd`` determines which pairs are added.

    Raises:
        PreconditionError: an edge is missing or the endpoints are not distinct.
        SimplicityViolation: an edge to be added already exists.
    """
    variant = Variant(variant)
    a, b = ab
    c, d = cd
    if len({a, b, c, d}) != 4:
        raise PreconditionError(f"edges {ab} and {cd} share an endpoint")
    for e in (ab, cd):
        if not g.has_edge(*e):
            raise PreconditionError(f"edge {e} not in graph")
    added = variant.added(a, b, c, d)
    for e in added:
        if e in g.edges:
            raise SimplicityViolation(f"edge {e} already present")
    edges = (g.edges - {_canon(a, b), _canon(c, d)}) | set(added)
    return Graph(g.n, edges), SwapRecord((tuple(ab), tuple(cd)), added, variant)


def merge_components(g: Graph) -> tuple[Graph, SwapRecord]:
    """Join two components with one degree-invariant swap.

    A cycle edge ``ab`` is taken from the lowest-labelled component that has a
    cycle, and the smallest edge ``cd`` from the lowest-labelled other
    component that has an edge. Cross-component edges cannot already exist,
    so the swap always succeeds and the component count drops by one.

    Raises:
        PreconditionError: fewer than two components, no component with a
            cycle, or no second component with an edge to swap against.
    """
    parts = connected_components(g)
    if len(parts) < 2:
        raise PreconditionError("graph has fewer than two components")
    ab = None
    for i, part in enumerate(parts):
        ab = find_cycle_edge(g, part)
        if ab is not None:
            break
    if ab is None:
        raise PreconditionError("every component is acyclic")

    label = {}
    for j, part in enumerate(parts):
        for v in part:
            label[v] = j
    cd = min(
        (e for e in g.edges if label[e[0]] != i),
        key=lambda e: (label[e[0]], e),
        default=None,
    )
    if cd is None:
        raise PreconditionError("no other component has an edge")

    for variant in (Variant.AD_BC, Variant.AC_BD):
        try:
            return two_swap(g, ab, cd, variant)
        except SimplicityViolation:
            continue
    raise AssertionError("cross-component swap cannot violate simplicity")
