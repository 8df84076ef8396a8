"""Immutable dense simple graphs and exact invariant algorithms.

Distances are returned as a float matrix with np.inf marking pairs in
different components.  Diameter, triameter and antipodal graphs are only
defined for connected graphs and raise DisconnectedGraph otherwise.
"""

from __future__ import annotations

import sys

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse import csgraph

from .errors import DisconnectedGraph, GraphTooLarge, GraphTooLargeForOracle
from .tri_ring import DEFAULT_VERTEX_CAP

ISO_ORACLE_CAP = 512


class Graph:
    """Simple undirected graph over a dense boolean adjacency matrix.

    Immutable after construction: the adjacency array is read-only and
    expensive derived data (distances, bitset rows) is cached on first
    use.  Labels are optional opaque strings kept for export.
    """

    def __init__(self, adjacency, labels=None, cap: int = DEFAULT_VERTEX_CAP):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        v = adj.shape[0]
        if v > cap:
            raise GraphTooLarge(f"{v} vertices exceed the cap of {cap}")
        if v and np.diagonal(adj).any():
            raise ValueError("loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.flags.writeable = False
        self._adj = adj
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != v:
                raise ValueError("label count must match vertex count")
        self._labels = labels
        self._cache = {}

    @classmethod
    def from_edges(cls, vertex_count, edges, labels=None, cap=DEFAULT_VERTEX_CAP):
        adj = np.zeros((vertex_count, vertex_count), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels=labels, cap=cap)

    @property
    def vertex_count(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def labels(self):
        return self._labels

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self):
        """Iterate edges as (u, v) with u < v."""
        for u, v in np.argwhere(np.triu(self._adj)):
            yield int(u), int(v)

    def neighbor_masks(self):
        """Adjacency rows as python-int bitsets (bit v set <=> edge to v)."""
        if "masks" not in self._cache:
            packed = np.packbits(self._adj, axis=1, bitorder="little")
            self._cache["masks"] = [int.from_bytes(row.tobytes(), "little")
                                    for row in packed]
        return self._cache["masks"]

    def induced_subgraph(self, vertices) -> "Graph":
        vs = list(vertices)
        sub = self._adj[np.ix_(vs, vs)]
        labels = None if self._labels is None else [self._labels[v] for v in vs]
        return Graph(sub, labels=labels, cap=max(len(vs), 1))

    def __repr__(self):
        return f"Graph(V={self.vertex_count}, E={self.edge_count()})"


def labeled_equal(g: Graph, h: Graph) -> bool:
    """Equality as labeled graphs: same adjacency matrix, vertex for vertex."""
    return (g.vertex_count == h.vertex_count
            and np.array_equal(g.adjacency, h.adjacency))


def connected_components(g: Graph) -> list:
    """Vertex partition; components ordered by their smallest vertex index."""
    if g.vertex_count == 0:
        return []
    n, label = csgraph.connected_components(csr_matrix(g.adjacency), directed=False)
    comps = [[] for _ in range(n)]
    for v, c in enumerate(label):
        comps[c].append(int(v))
    comps.sort(key=lambda c: c[0])
    return comps


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop distances from BFS out of every vertex; np.inf across components."""
    if "dist" not in g._cache:
        if g.vertex_count == 0:
            d = np.zeros((0, 0))
        else:
            d = csgraph.shortest_path(csr_matrix(g.adjacency), method="D",
                                      directed=False, unweighted=True)
        d.flags.writeable = False
        g._cache["dist"] = d
    return g._cache["dist"]


def _connected_distances(g: Graph, op: str) -> np.ndarray:
    d = all_pairs_distances(g)
    if np.isinf(d).any():
        raise DisconnectedGraph(f"{op} is undefined for disconnected graphs")
    return d


def diameter(g: Graph) -> int:
    return int(_connected_distances(g, "diameter").max())


def triametral_triple(g: Graph):
    """(triameter, lexicographically first triametral triple).

    Exact maximum of d(u,v)+d(u,w)+d(v,w) over unordered triples.  Pairs
    that cannot beat the current best are skipped, and the search stops
    as soon as the 3*diam upper bound is attained.
    """
    d = _connected_distances(g, "triameter")
    v = g.vertex_count
    if v < 3:
        raise ValueError("triameter needs at least 3 vertices")
    diam = int(d.max())
    bound = 3 * diam
    best = -1
    best_triple = None
    for a in range(v - 2):
        da = d[a]
        for b in range(a + 1, v - 1):
            dab = da[b]
            if dab + 2 * diam <= best:
                continue
            tail = da[b + 1:] + d[b, b + 1:]
            top = tail.max()
            val = int(dab + top)
            if val > best:
                best = val
                best_triple = (a, b, b + 1 + int(np.argmax(tail)))
                if best == bound:
                    return best, best_triple
    return best, best_triple


def triameter(g: Graph) -> int:
    return triametral_triple(g)[0]


def max_clique(g: Graph) -> list:
    """An exact maximum clique, via branch and bound with greedy-colouring
    upper bounds on bitset candidate sets."""
    v = g.vertex_count
    if v == 0:
        return []
    masks = g.neighbor_masks()

    # Greedy warm start from a maximum-degree vertex.
    degs = g.degrees()
    cur = int(np.argmax(degs))
    best = [cur]
    cand = masks[cur]
    while cand:
        pick = best_bit = None
        rest = cand
        while rest:
            bit = rest & -rest
            u = bit.bit_length() - 1
            score = (masks[u] & cand).bit_count()
            if pick is None or score > pick:
                pick, best_bit = score, u
            rest ^= bit
        best.append(best_bit)
        cand &= masks[best_bit]

    def color_order(cand_mask):
        # Greedy colouring: vertices listed colour class by colour class,
        # each paired with its class number (an upper bound on the clique
        # extendable through it and everything listed before it).
        order, bounds = [], []
        uncolored = cand_mask
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                bit = avail & -avail
                u = bit.bit_length() - 1
                order.append(u)
                bounds.append(color)
                avail &= ~(masks[u] | bit)
                uncolored ^= bit
        return order, bounds

    stack = []

    def expand(cand_mask):
        nonlocal best
        order, bounds = color_order(cand_mask)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[i] <= len(best):
                return
            u = order[i]
            stack.append(u)
            sub = cand_mask & masks[u]
            if sub:
                expand(sub)
            elif len(stack) > len(best):
                best = stack.copy()
            stack.pop()
            cand_mask &= ~(1 << u)

    expand((1 << v) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def two_coloring(g: Graph):
    """A proper 2-coloring as an int array, or None if any component has an
    odd cycle.  Works on disconnected graphs."""
    v = g.vertex_count
    color = np.full(v, -1, dtype=np.int8)
    adj = g.adjacency
    for s in range(v):
        if color[s] >= 0:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in np.nonzero(adj[u])[0]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        nxt.append(int(w))
                    elif color[w] == color[u]:
                        return None
            frontier = nxt
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_complete_bipartite(g: Graph):
    """The bipartition (A, B) when g equals K_{|A|,|B|}, else None.

    Only defined for connected graphs.  The 2-coloring fixes the unique
    candidate bipartition; every cross pair must then be an edge.
    """
    if len(connected_components(g)) != 1:
        raise DisconnectedGraph("complete-bipartite test needs a connected graph")
    color = two_coloring(g)
    if color is None:
        return None
    part_a = [int(x) for x in np.nonzero(color == 0)[0]]
    part_b = [int(x) for x in np.nonzero(color == 1)[0]]
    if not part_a or not part_b:
        return None
    if g.adjacency[np.ix_(part_a, part_b)].all():
        return part_a, part_b
    return None


def antipodal(g: Graph) -> Graph:
    """Same vertices; edge uv iff d(u, v) equals the diameter of g."""
    d = _connected_distances(g, "antipodal graph")
    diam = d.max() if g.vertex_count else 0
    adj = d == diam
    np.fill_diagonal(adj, False)  # diam 0 would otherwise put loops
    return Graph(adj, labels=g.labels, cap=max(g.vertex_count, 1))


# -- isomorphism oracle ---------------------------------------------------

def _refine_colors(adj_lists, colors, rounds):
    for _ in range(rounds):
        table = {}
        new = []
        for v, neigh in enumerate(adj_lists):
            sig = (colors[v], tuple(sorted(colors[u] for u in neigh)))
            new.append(table.setdefault(sig, len(table)))
        if new == colors:
            break
        colors = new
    return colors


def iso_check(g: Graph, h: Graph):
    """A vertex bijection g -> h, or None when the graphs are not isomorphic.

    Backtracking over candidate sets pruned by iterated neighborhood
    refinement; the search is exhaustive, so None is a definitive answer.
    Capped at ISO_ORACLE_CAP vertices.
    """
    if max(g.vertex_count, h.vertex_count) > ISO_ORACLE_CAP:
        raise GraphTooLargeForOracle(
            f"isomorphism oracle capped at {ISO_ORACLE_CAP} vertices")
    v = g.vertex_count
    if v != h.vertex_count or g.edge_count() != h.edge_count():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if v == 0:
        return []

    neigh_g = [list(np.nonzero(g.adjacency[u])[0]) for u in range(v)]
    neigh_h = [[u + v for u in np.nonzero(h.adjacency[w])[0]] for w in range(v)]

    # Joint color refinement over the disjoint union; the per-graph color
    # histograms must stay identical round after round.
    colors = [int(d) for d in g.degrees()] + [int(d) for d in h.degrees()]
    for _ in range(v):
        new = _refine_colors(neigh_g + neigh_h, colors, 1)
        if sorted(new[:v]) != sorted(new[v:]):
            return None
        if new == colors:
            break
        colors = new
    cg, ch = colors[:v], colors[v:]

    masks_h = h.neighbor_masks()
    by_color_h = {}
    for u, c in enumerate(ch):
        by_color_h[c] = by_color_h.get(c, 0) | (1 << u)
    cand = [by_color_h.get(c, 0) for c in cg]
    if any(m == 0 for m in cand):
        return None

    mapping = [-1] * v
    full = (1 << v) - 1
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * v + 200))

    def assign(cand, used):
        if used == full:
            return True
        # most-constrained unmapped vertex
        pick, pick_n = -1, None
        for u in range(v):
            if mapping[u] < 0:
                c = cand[u] & ~used
                n = c.bit_count()
                if n == 0:
                    return False
                if pick_n is None or n < pick_n:
                    pick, pick_n = u, n
                    if n == 1:
                        break
        options = cand[pick] & ~used
        while options:
            bit = options & -options
            hu = bit.bit_length() - 1
            new_cand = list(cand)
            ok = True
            for w in range(v):
                if mapping[w] < 0 and w != pick:
                    if g.adjacency[pick, w]:
                        new_cand[w] &= masks_h[hu]
                    else:
                        new_cand[w] &= ~masks_h[hu]
                    if (new_cand[w] & ~(used | bit)) == 0:
                        ok = False
                        break
            if ok:
                mapping[pick] = hu
                if assign(new_cand, used | bit):
                    return True
                mapping[pick] = -1
            options ^= bit
        return False

    if not assign(cand, 0):
        return None
    perm = np.array(mapping)
    # verify edge by edge before reporting
    if not np.array_equal(h.adjacency[np.ix_(perm, perm)], g.adjacency):
        raise AssertionError("isomorphism search produced an invalid mapping")
    return mapping
