"""Brute-force enumeration of noncrossing graphs on convex points.

Ground truth for everything else: walk every subset of the C(n,2) chords
that is pairwise noncrossing, count the connected ones, and total their
edges. Graphs are labeled and vertices sit fixed on a circle. The walk is
exponential, so n is capped; the cap can be raised through an environment
variable when more patience is available.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_VERTICES = 8
MAX_VERTICES_ENV = "NONCROSS_ORACLE_MAX"


@dataclass(frozen=True)
class ChordGraph:
    """An edge set over vertices 0..n-1 in convex position."""

    n: int
    edges: frozenset[tuple[int, int]]

    def is_connected(self) -> bool:
        return _connected(self.n, self.edges)


@dataclass(frozen=True)
class EnumStats:
    n: int
    connected_count: int
    total_edges: int


def chords_cross(a: int, b: int, c: int, d: int) -> bool:
    """Whether chords (a,b) and (c,d) cross strictly inside the circle.

    Chords sharing an endpoint never cross; otherwise they cross exactly
    when one of c, d lies strictly between a and b and the other does not.
    """
    if not (a < b and c < d):
        raise ValueError("chords must be given as ordered pairs")
    if a == c or a == d or b == c or b == d:
        return False
    return (a < c < b) != (a < d < b)


def all_chords(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _connected(n: int, edges) -> bool:
    if n == 1:
        return True
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    remaining = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            remaining -= 1
    return remaining == 1


def _resolve_cap(max_vertices: int | None) -> int:
    if max_vertices is not None:
        return max_vertices
    env = os.environ.get(MAX_VERTICES_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_VERTICES


def _cross_masks(chords: list[tuple[int, int]]) -> list[int]:
    m = len(chords)
    masks = [0] * m
    for i in range(m):
        a, b = chords[i]
        for j in range(i + 1, m):
            c, d = chords[j]
            if chords_cross(a, b, c, d):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _noncrossing_subsets(n: int):
    """Yield every pairwise-noncrossing chord subset as a tuple of indices.

    Depth-first over chords in lexicographic order; a chord is addable
    only when it crosses none of the chosen ones, tracked as a bitmask of
    banned indices.
    """
    chords = all_chords(n)
    masks = _cross_masks(chords)
    m = len(chords)
    stack = [(0, 0, ())]
    while stack:
        start, banned, chosen = stack.pop()
        yield chosen
        for i in range(start, m):
            if not (banned >> i) & 1:
                stack.append((i + 1, banned | masks[i], chosen + (i,)))


def enumerate_graphs(n: int, max_vertices: int | None = None) -> EnumStats:
    """Count connected noncrossing graphs on n vertices, and their edges.

    Connectivity is decided at each leaf; crossing compatibility prunes
    the walk. The single empty graph on one vertex counts as connected.
    """
    cap = _resolve_cap(max_vertices)
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(
            f"n={n} above the enumeration cap {cap}; raise {MAX_VERTICES_ENV} to override"
        )
    chords = all_chords(n)
    connected = 0
    total_edges = 0
    for chosen in _noncrossing_subsets(n):
        if _connected(n, [chords[i] for i in chosen]):
            connected += 1
            total_edges += len(chosen)
    return EnumStats(n=n, connected_count=connected, total_edges=total_edges)


def iter_connected_graphs(n: int, max_vertices: int | None = None):
    """Yield each connected noncrossing graph on n vertices."""
    cap = _resolve_cap(max_vertices)
    if n < 1 or n > cap:
        raise ValueError(f"n must be within 1..{cap}")
    chords = all_chords(n)
    for chosen in _noncrossing_subsets(n):
        edges = frozenset(chords[i] for i in chosen)
        if _connected(n, edges):
            yield ChordGraph(n=n, edges=edges)
