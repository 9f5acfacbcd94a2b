"""Signed-graph value type and basic accessors.

A signed graph is a simple loopless undirected graph with a +1/-1 sign on
every edge.  Vertices are dense integers 0..n-1.  Instances are immutable
after construction; every operation in the library is a pure function over
them.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import (
    BadSignError,
    DuplicateEdgeError,
    LoopEdgeError,
    NotAWalkError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int, int]  # (u, v, sign) with u < v in canonical form


class SignedGraph:
    """Immutable simple loopless graph with signed edges.

    The edge list is kept in canonical order (u < v, lexicographic) so that
    serialized output is reproducible.  Adjacency lists are derived with
    neighbors sorted ascending.
    """

    __slots__ = ("n", "edges", "adjacency", "_sign", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        canon = []
        seen = set()
        for u, v, s in edges:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if s not in (1, -1):
                raise BadSignError(f"sign {s!r} on edge ({u},{v})")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdgeError(f"edge ({u},{v}) given twice")
            seen.add((u, v))
            canon.append((u, v, s))
        canon.sort()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        sign = {}
        for u, v, s in canon:
            adj[u].append((v, s))
            adj[v].append((u, s))
            sign[(u, v)] = s
            sign[(v, u)] = s
        for lst in adj:
            lst.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_sign", sign)
        object.__setattr__(self, "_hash", hash((n, tuple(canon))))

    def __setattr__(self, name, value):
        raise AttributeError("SignedGraph is immutable")

    # -- accessors -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._sign

    def sign(self, u: int, v: int) -> int:
        try:
            return self._sign[(u, v)]
        except KeyError:
            raise NotAWalkError(f"({u},{v}) is not an edge") from None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(v for v, _ in self.adjacency[u])

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def negative_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, s in self.edges if s == -1)

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def with_signs(self, sign_of: dict[tuple[int, int], int]) -> "SignedGraph":
        """Same underlying graph with signs replaced by ``sign_of[(u, v)]``."""
        return SignedGraph(self.n, [(u, v, sign_of[(u, v)]) for u, v, _ in self.edges])

    # -- equality / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, m={self.m}, neg={len(self.negative_edges())})"


def build(n: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Validate and construct a signed graph (see SignedGraph for invariants)."""
    return SignedGraph(n, edges)


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Product of edge signs along a walk, edges counted with multiplicity."""
    if len(walk) < 2:
        raise NotAWalkError("a walk needs at least one edge")
    s = 1
    for u, v in zip(walk, walk[1:]):
        s *= g.sign(u, v)
    return s


def connected_components(g: SignedGraph) -> list[list[int]]:
    """Vertex partition into connected components, BFS order inside each."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bfs_order(g: SignedGraph, root: int = 0) -> tuple[list[int], list[int]]:
    """BFS order and distances from ``root``, neighbors explored ascending.

    Unreachable vertices get distance -1 and do not appear in the order.
    """
    dist = [-1] * g.n
    dist[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                order.append(v)
                queue.append(v)
    return order, dist
