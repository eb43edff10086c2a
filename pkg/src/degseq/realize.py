"""Witness construction: Havel-Hakimi realization, connectivity repair and rewiring."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import Graph, SwapRecord, Variant, connected_components, merge_components
from .sequence import DegreeSequence, check_report, is_graphic

__all__ = [
    "RealizationError",
    "RewireStats",
    "connect",
    "random_rewire",
    "realize",
    "realize_connected",
]


class RealizationError(ValueError):
    pass


def realize(s: DegreeSequence) -> Graph:
    """Build a simple graph with degree sequence ``s``.

    Vertex ``i`` receives degree ``s[i]``. Each round the vertex with the
    largest residual degree (lowest index on ties) is joined to the next
    ``s_1`` vertices in the same order.
    """
    verdict = is_graphic(s)
    if not verdict:
        raise RealizationError(f"{s} is not graphic: {verdict.message}")
    residual = list(s.terms)
    order = list(range(s.n))
    edges = []
    while True:
        order.sort(key=lambda v: -residual[v])
        head = order[0] if order else None
        if head is None or residual[head] == 0:
            break
        d = residual[head]
        residual[head] = 0
        for w in order[1 : d + 1]:
            residual[w] -= 1
            edges.append((head, w))
        order = order[1:]
    return Graph(s.n, frozenset(edges))


def connect(g: Graph) -> tuple[Graph, list[SwapRecord]]:
    """Merge components by degree-invariant swaps until ``g`` is connected.

    Performs exactly one merge per extra component. Refuses graphs that
    cannot be connected without changing degrees: fewer than n-1 edges, or an
    isolated vertex when n > 1.
    """
    if g.n == 0:
        raise RealizationError("cannot connect the empty graph")
    if g.edge_count < g.n - 1:
        raise RealizationError(
            f"{g.edge_count} edges < n-1 = {g.n - 1}; no spanning tree possible"
        )
    if g.n > 1 and g.min_degree == 0:
        raise RealizationError("isolated vertex cannot be connected by swaps")
    swaps = []
    components = len(connected_components(g))
    while components > 1:
        g, record = merge_components(g)
        swaps.append(record)
        components -= 1
    return g, swaps


def realize_connected(s: DegreeSequence) -> tuple[Graph, list[SwapRecord]]:
    """Realize ``s`` and repair connectivity; returns the graph and the swap log."""
    report = check_report(s)
    if not report.connected_graphic:
        raise RealizationError(f"{s} is not connected-graphic: {report.reason}")
    return connect(realize(s))


@dataclass
class RewireStats:
    proposed: int = 0
    accepted: int = 0
    shared_endpoint: int = 0
    simplicity: int = 0
    disconnecting: int = 0

    @property
    def skipped(self) -> int:
        return self.shared_endpoint + self.simplicity + self.disconnecting


def _count_components(n: int, adj: list[set[int]]) -> int:
    seen = [False] * n
    count = 0
    for root in range(n):
        if seen[root]:
            continue
        count += 1
        seen[root] = True
        queue = deque([root])
        while queue:
            for w in adj[queue.popleft()]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count


def random_rewire(
    g: Graph,
    steps: int,
    seed: int = 0,
    preserve_connectivity: bool = False,
) -> tuple[Graph, RewireStats]:
    """Apply up to ``steps`` random degree-invariant swaps.

    Each step picks two distinct edges and one of the two rewirings uniformly
    at random. Proposals that share an endpoint, would create a parallel
    edge, or (with ``preserve_connectivity``) would increase the number of
    components are skipped and counted.
    """
    rng = random.Random(seed)
    stats = RewireStats()
    edges = g.sorted_edges()
    edge_set = set(edges)
    adj = [set(a) for a in g.adjacency]
    components = _count_components(g.n, adj) if preserve_connectivity else 0
    if len(edges) < 2:
        return g, stats

    def rewire(old: tuple, new: tuple) -> None:
        for u, v in old:
            adj[u].discard(v)
            adj[v].discard(u)
            edge_set.discard((u, v))
        for u, v in new:
            adj[u].add(v)
            adj[v].add(u)
            edge_set.add((u, v))

    for _ in range(steps):
        stats.proposed += 1
        i, j = rng.sample(range(len(edges)), 2)
        variant = Variant.AC_BD if rng.randrange(2) == 0 else Variant.AD_BC
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) < 4:
            stats.shared_endpoint += 1
            continue
        e1, e2 = variant.added(a, b, c, d)
        if e1 in edge_set or e2 in edge_set:
            stats.simplicity += 1
            continue
        rewire(((a, b), (c, d)), (e1, e2))
        if preserve_connectivity:
            after = _count_components(g.n, adj)
            if after > components:
                rewire((e1, e2), ((a, b), (c, d)))
                stats.disconnecting += 1
                continue
            components = after
        edges[i], edges[j] = e1, e2
        stats.accepted += 1

    return Graph(g.n, frozenset(edge_set)), stats
