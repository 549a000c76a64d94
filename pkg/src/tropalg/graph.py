"""Shortest paths on weighted digraphs via the min-plus closure.

A graph is an n x n min-plus adjacency matrix whose diagonal is exactly 0
and whose finite entries are nonnegative edge weights; +infinity marks a
missing edge. Under those invariants every cycle has nonnegative weight,
so the closure always exists and equals the matrix of all-pairs least
distances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraMismatch, IndexOutOfRange, InvalidGraph, NoPath
from .semiring import SemiringKind, trop_mul
from .trmatrix import TropMatrix, closure_block

__all__ = ["WeightedGraph", "search_least_distances", "find_shortest_path"]


@dataclass(frozen=True, slots=True)
class WeightedGraph:
    """A digraph given by its min-plus adjacency matrix."""

    adjacency: TropMatrix

    def __post_init__(self):
        a = self.adjacency
        if a.alg.kind is not SemiringKind.MIN_PLUS:
            raise AlgebraMismatch("graphs are weighted over a min-plus algebra")
        if not a.is_square:
            raise InvalidGraph("the adjacency matrix must be square")
        one = a.alg.one()
        zero_val = one.finite
        for j in range(a.rows):
            for k in range(a.cols):
                e = a.get(j, k)
                if j == k:
                    if e != one:
                        raise InvalidGraph(f"diagonal entry at {j} is {e}, not 0")
                elif e.is_finite and e.finite < zero_val:
                    raise InvalidGraph(f"negative edge weight {e} at ({j}, {k})")

    @property
    def order(self) -> int:
        return self.adjacency.rows


def search_least_distances(g: WeightedGraph) -> TropMatrix:
    """All-pairs least path weights: the closure of the adjacency matrix."""
    return closure_block(g.adjacency)


def find_shortest_path(g: WeightedGraph, start: int, goal: int) -> list[int]:
    """A minimum-weight vertex sequence from start to goal.

    An edge (u, v) is tight when w(u, v) + dist(v, goal) = dist(u, goal);
    every simple path made of tight edges has total weight exactly
    dist(start, goal). The search walks tight edges depth-first trying
    successors in index order with backtracking, so the returned witness
    is the lexicographically smallest simple shortest path. Vertices are
    0-based.
    """
    n = g.order
    for idx in (start, goal):
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < n:
            raise IndexOutOfRange(f"vertex {idx!r} is outside 0..{n - 1}")
    if start == goal:
        return [start]
    dist = search_least_distances(g)
    if dist.get(start, goal).inf_sign:
        raise NoPath(f"no path from {start} to {goal}")
    adj = g.adjacency
    alg = adj.alg
    path = [start]
    on_path = [False] * n
    on_path[start] = True
    pending = [iter(range(n))]
    while pending:
        u = path[-1]
        stepped = False
        for v in pending[-1]:
            if on_path[v]:
                continue
            w = adj.get(u, v)
            if w.inf_sign:
                continue
            if trop_mul(w, dist.get(v, goal), alg) != dist.get(u, goal):
                continue
            path.append(v)
            if v == goal:
                return path
            on_path[v] = True
            pending.append(iter(range(n)))
            stepped = True
            break
        if not stepped:
            pending.pop()
            on_path[path.pop()] = False
    raise AssertionError("a tight path must exist when the distance is finite")
