"""Spanning trees, star partitions of trees, and edge-plus-star covers.

Every tree on at least two vertices splits into vertex classes that each
induce a star with at least two vertices; the recursion peels off the
subtree hanging from a branching neighbor until only stars remain.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphError, make_graph


@dataclass(frozen=True, slots=True)
class StarPartition:
    """Disjoint vertex classes covering the tree, each inducing a star."""

    parts: tuple[frozenset[int], ...]
    centers: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class EdgeStarCover:
    """Vertex-disjoint matching edges plus an optional star covering V."""

    matching: frozenset[tuple[int, int]]
    star: tuple[int, frozenset[int]] | None


def spanning_tree(H: Graph) -> Graph:
    """BFS tree from vertex 0; rejects disconnected input."""
    if H.n == 0:
        raise GraphError("graph has no vertices")
    parent_edges = []
    seen = [False] * H.n
    seen[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in sorted(H.adj[u]):
            if not seen[w]:
                seen[w] = True
                parent_edges.append((u, w))
                queue.append(w)
    if not all(seen):
        missing = seen.index(False)
        raise GraphError(f"graph is disconnected: vertex {missing} unreachable from 0")
    return make_graph(H.n, parent_edges)


def _is_tree(T: Graph) -> bool:
    if T.edge_count != T.n - 1:
        return False
    try:
        spanning_tree(T)
    except GraphError:
        return False
    return True


def star_partition(T: Graph) -> StarPartition:
    """Partition a tree into induced stars with at least two vertices each.

    If the current subtree is a star it becomes one class. Otherwise take
    the lowest-labeled non-leaf v and its lowest-labeled neighbor u that
    has a neighbor besides v; the vertices nearer u than v form one
    subtree, the rest the other, and both recurse. Both sides always keep
    at least two vertices, so the recursion is well founded.
    """
    if T.n < 2:
        raise GraphError(f"star partition needs at least 2 vertices, got {T.n}")
    if not _is_tree(T):
        raise GraphError("input is not a tree")

    parts: list[frozenset[int]] = []
    centers: list[int] = []
    pending: list[frozenset[int]] = [frozenset(range(T.n))]
    while pending:
        verts = pending.pop()
        size = len(verts)
        deg = {v: len(T.adj[v] & verts) for v in verts}
        center = max(verts, key=lambda v: (deg[v], -v))
        if deg[center] == size - 1:
            parts.append(verts)
            centers.append(center)
            continue
        v = min(u for u in verts if deg[u] >= 2)
        u1 = min(
            w for w in T.adj[v] & verts if len((T.adj[w] & verts) - {v}) >= 1
        )
        side = {u1}
        queue = [u1]
        while queue:
            x = queue.pop()
            for w in T.adj[x] & verts:
                if w != v and w not in side:
                    side.add(w)
                    queue.append(w)
        pending.append(frozenset(side))
        pending.append(verts - side)

    order = sorted(range(len(parts)), key=lambda i: min(parts[i]))
    return StarPartition(
        tuple(parts[i] for i in order), tuple(centers[i] for i in order)
    )


def star_factor_profile(H: Graph) -> tuple[int, ...]:
    """Leaf counts of the star partition of a BFS spanning tree, largest first."""
    sp = star_partition(spanning_tree(H))
    return tuple(sorted((len(p) - 1 for p in sp.parts), reverse=True))


def _perfect_matching(verts: frozenset[int], B: Graph) -> frozenset[tuple[int, int]] | None:
    if not verts:
        return frozenset()
    v = min(verts)
    rest = verts - {v}
    for u in sorted(B.adj[v] & rest):
        sub = _perfect_matching(rest - {u}, B)
        if sub is not None:
            return sub | {(v, u) if v < u else (u, v)}
    return None


def edge_star_cover(B: Graph) -> EdgeStarCover | None:
    """Exhaustive search for a matching-plus-star cover of all vertices.

    A pure matching (no star) is tried first, then stars with center
    ascending and leaf set size descending; the residual vertices must
    carry a perfect matching inside B. Returns the first cover found, or
    None when no cover exists. Restricted to at most 12 vertices.
    """
    if B.n > 12:
        raise GraphError(f"exhaustive cover search is limited to 12 vertices, got {B.n}")
    everyone = frozenset(range(B.n))
    plain = _perfect_matching(everyone, B)
    if plain is not None:
        return EdgeStarCover(plain, None)
    for center in range(B.n):
        neighbors = sorted(B.adj[center])
        for size in range(len(neighbors), 1, -1):
            for leaves in combinations(neighbors, size):
                residual = everyone - {center} - set(leaves)
                matching = _perfect_matching(residual, B)
                if matching is not None:
                    return EdgeStarCover(matching, (center, frozenset(leaves)))
    return None
