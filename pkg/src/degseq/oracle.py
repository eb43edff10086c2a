"""Exhaustive enumeration of labelled simple graphs with a given degree sequence.

This is the ground truth the decision procedures are tested against, so it
deliberately shares no logic with them: it only enumerates edge sets and
checks connectivity with its own union-find.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

MAX_N = 8


class OracleCapError(ValueError):
    pass


@dataclass
class Enumeration:
    total: int = 0
    connected: int = 0
    graphs: list[list[tuple[int, int]]] = field(default_factory=list)


def _check_cap(s: Sequence[int]) -> None:
    if len(s) > MAX_N:
        raise OracleCapError(f"oracle is capped at n <= {MAX_N} (got n = {len(s)})")


def _edge_sets(s: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Yield every edge list on vertices 0..n-1 where vertex i has degree s[i].

    Vertices are processed in label order; vertex i picks all its remaining
    neighbours among higher labels, so each labelled graph appears once.
    """
    n = len(s)
    residual = list(s)
    if any(d < 0 or d > n - 1 for d in residual) or sum(residual) % 2:
        return
    edges: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[list[tuple[int, int]]]:
        if i == n:
            yield list(edges)
            return
        need = residual[i]
        candidates = [j for j in range(i + 1, n) if residual[j] > 0]
        if need > len(candidates):
            return
        slots = n - i - 2
        for chosen in combinations(candidates, need):
            for j in chosen:
                residual[j] -= 1
                edges.append((i, j))
            residual[i] = 0
            if all(residual[j] <= slots for j in range(i + 1, n)):
                yield from rec(i + 1)
            residual[i] = need
            for j in chosen:
                residual[j] += 1
                edges.pop()

    yield from rec(0)


def _is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 0:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parts = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts == 1


def enumerate_realizations(
    s: Sequence[int], connected_only: bool = False, limit: int | None = None
) -> Enumeration:
    """Count all labelled realizations of ``s`` and of those, the connected ones.

    ``limit`` caps how many edge lists are kept in ``graphs``; counting always
    runs to completion. With ``connected_only`` only connected graphs are kept.
    """
    _check_cap(s)
    out = Enumeration()
    n = len(s)
    for edges in _edge_sets(s):
        out.total += 1
        conn = _is_connected(n, edges)
        out.connected += conn
        if (conn or not connected_only) and (limit is None or len(out.graphs) < limit):
            out.graphs.append(edges)
    return out


def exists_graphic_bruteforce(s: Sequence[int]) -> bool:
    _check_cap(s)
    return next(_edge_sets(s), None) is not None


def exists_connected_bruteforce(s: Sequence[int]) -> bool:
    _check_cap(s)
    n = len(s)
    return any(_is_connected(n, edges) for edges in _edge_sets(s))
