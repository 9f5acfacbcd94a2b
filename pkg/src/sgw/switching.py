"""Switching, balance, switching equivalence and cycle classification.

Switching a vertex set X flips the sign of every edge with exactly one
endpoint in X.  Two signatures of the same underlying graph are equivalent
when one arises from the other by switching; equivalence is decided in
O(n+m) by propagating switch flags over a spanning forest.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, Optional

from .core import SignedGraph, bfs_order, connected_components
from .errors import DifferentUnderlyingGraphError, NotACycleError

SwitchSet = frozenset  # vertex subset of the host graph


class CycleClass(enum.Enum):
    BC_EVEN = "BC_even"
    BC_ODD = "BC_odd"
    UC_EVEN = "UC_even"
    UC_ODD = "UC_odd"


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``x``."""
    xs = frozenset(x)
    return SignedGraph(
        g.n,
        [
            (u, v, -s if (u in xs) != (v in xs) else s)
            for u, v, s in g.edges
        ],
    )


def is_balanced(g: SignedGraph):
    """Decide balance by BFS potential assignment per component.

    Returns ``(True, X)`` with ``switch(g, X)`` all-positive, or
    ``(False, cycle)`` where ``cycle`` is a closed walk of sign -1.
    """
    pot = [None] * g.n
    parent = [-1] * g.n
    for comp in connected_components(g):
        root = comp[0]
        pot[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g.adjacency[u]:
                want = pot[u] * s
                if pot[v] is None:
                    pot[v] = want
                    parent[v] = u
                    queue.append(v)
                elif pot[v] != want:
                    # unbalanced: close a walk through the BFS tree;
                    # its sign is pot[u] * pot[v] * s = -1
                    return False, _tree_walk(parent, u) + _tree_walk(parent, v)[::-1][1:] + [u]
    return True, frozenset(v for v in range(g.n) if pot[v] == -1)


def _tree_walk(parent: list[int], u: int) -> list[int]:
    """Path u, parent(u), ..., root in the BFS forest."""
    path = [u]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[frozenset]:
    """Switch set taking g1 to g2 edge-for-edge, or None.

    Spanning-forest flag propagation: flag(v) xor flag(u) must equal
    "signs of uv differ", verified on non-tree edges.
    """
    if g1.n != g2.n or g1.underlying_edges() != g2.underlying_edges():
        raise DifferentUnderlyingGraphError("inputs must share an underlying graph")
    flag = [None] * g1.n
    for comp in connected_components(g1):
        root = comp[0]
        flag[root] = False
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g1.adjacency[u]:
                diff = s != g2.sign(u, v)
                if flag[v] is None:
                    flag[v] = flag[u] != diff
                    queue.append(v)
                elif (flag[u] != flag[v]) != diff:
                    return None
    return frozenset(v for v in range(g1.n) if flag[v])


def canonical_form(g: SignedGraph) -> tuple[SignedGraph, frozenset]:
    """Deterministic representative of the switching class of ``g``.

    Per component: BFS from the smallest vertex id, neighbors ascending,
    switch so every BFS-tree edge becomes positive.  The result depends
    only on the switching class; the returned set realizes it.
    """
    flag = [False] * g.n
    for comp in connected_components(g):
        root = min(comp)
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    eff = -s if flag[u] else s
                    flag[v] = eff == -1
                    queue.append(v)
    x = frozenset(v for v in range(g.n) if flag[v])
    return switch(g, x), x


def classify_cycle(g: SignedGraph) -> CycleClass:
    """Class of a single signed cycle by (length parity, negative parity)."""
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)):
        raise NotACycleError("input is not a single cycle")
    order, dist = bfs_order(g, 0)
    if len(order) != g.n:
        raise NotACycleError("input is not connected")
    neg = len(g.negative_edges())
    if neg % 2 == 0:
        return CycleClass.BC_EVEN if g.n % 2 == 0 else CycleClass.BC_ODD
    return CycleClass.UC_EVEN if g.n % 2 == 0 else CycleClass.UC_ODD
