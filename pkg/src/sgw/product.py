"""Cartesian products of signed graphs and coordinate bookkeeping.

The product vertex set is the cartesian product of the factor vertex sets;
an edge changes exactly one coordinate along an edge of the corresponding
factor and inherits its sign.  Product vertex ids are row-major in factor
order (for two factors: id = idx_a * n_b + idx_b), so coordinate systems
serialize portably.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import SignedGraph
from .errors import EmptyListError, IndexOutOfRangeError


@dataclass(frozen=True)
class CoordinateSystem:
    """Bijection between product vertices and factor-coordinate tuples."""

    factors: tuple[SignedGraph, ...]
    coords: tuple[tuple[int, ...], ...]  # per product vertex

    def __post_init__(self):
        object.__setattr__(
            self, "index", {c: v for v, c in enumerate(self.coords)}
        )

    def vertex(self, coord: Sequence[int]) -> int:
        return self.index[tuple(coord)]


def cartesian_product(a: SignedGraph, b: SignedGraph) -> tuple[SignedGraph, CoordinateSystem]:
    """Signed Cartesian product with row-major vertex numbering."""
    nb = b.n
    edges = []
    for ia in range(a.n):
        base = ia * nb
        for u, v, s in b.edges:
            edges.append((base + u, base + v, s))
    for u, v, s in a.edges:
        for ib in range(nb):
            edges.append((u * nb + ib, v * nb + ib, s))
    g = SignedGraph(a.n * nb, edges)
    coords = tuple((ia, ib) for ia in range(a.n) for ib in range(nb))
    return g, CoordinateSystem((a, b), coords)


def product_many(gs: Sequence[SignedGraph]) -> tuple[SignedGraph, CoordinateSystem]:
    """Left fold of cartesian_product with flattened coordinates."""
    if not gs:
        raise EmptyListError("need at least one factor")
    g = gs[0]
    for h in gs[1:]:
        g, _ = cartesian_product(g, h)
    # row-major id over all factors at once
    coords = []
    sizes = [f.n for f in gs]
    for vid in range(g.n):
        c = []
        rest = vid
        for size in reversed(sizes):
            c.append(rest % size)
            rest //= size
        coords.append(tuple(reversed(c)))
    return g, CoordinateSystem(tuple(gs), tuple(coords))


def layer(cs: CoordinateSystem, i: int, anchor: int):
    """Vertices and induced edges of the factor-``i`` layer through ``anchor``.

    The layer fixes every coordinate except ``i``; its induced edges are the
    copies of factor-``i`` edges at that anchor.
    """
    if not (0 <= i < len(cs.factors)):
        raise IndexOutOfRangeError(f"factor index {i}")
    if not (0 <= anchor < len(cs.coords)):
        raise IndexOutOfRangeError(f"anchor {anchor}")
    base = list(cs.coords[anchor])
    verts = []
    for a in range(cs.factors[i].n):
        base[i] = a
        verts.append(cs.vertex(base))
    edges = []
    for u, v, _ in cs.factors[i].edges:
        base[i] = u
        pu = cs.vertex(base)
        base[i] = v
        pv = cs.vertex(base)
        edges.append((min(pu, pv), max(pu, pv)))
    return verts, edges


def project_vertex(cs: CoordinateSystem, u: int, i: int, anchor: int) -> int:
    """Vertex matching ``anchor`` on all coordinates except ``i`` and ``u`` on ``i``."""
    if not (0 <= i < len(cs.factors)):
        raise IndexOutOfRangeError(f"factor index {i}")
    c = list(cs.coords[anchor])
    c[i] = cs.coords[u][i]
    return cs.vertex(c)
