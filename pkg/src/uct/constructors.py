"""Builders for the graph families under study.

Vertex order is always the canonical encoding order of the underlying
objects (ring elements, tuples, product pairs), so structural claims can
be tested as labeled-graph equality instead of isomorphism search.
Tuples are encoded base-q with the first coordinate least significant,
matching the matrix entry encoding in tri_ring.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphTooLarge, RingTooLarge
from .graph_core import Graph
from .tri_ring import (DEFAULT_VERTEX_CAP, RingSpec, diagonal_slots,
                       entry_digit_matrix, zn_units)


@dataclass(frozen=True)
class VertexLabeling:
    """Bijection between vertex indices and canonical integer encodings."""

    encodings: tuple

    def __post_init__(self):
        if len(set(self.encodings)) != len(self.encodings):
            raise ValueError("vertex labeling must be injective")
        object.__setattr__(self, "_inverse",
                           {e: v for v, e in enumerate(self.encodings)})

    def encoding_of(self, vertex: int) -> int:
        return self.encodings[vertex]

    def vertex_of(self, encoding: int) -> int:
        return self._inverse[encoding]

    def __len__(self):
        return len(self.encodings)


def tuple_codes(length: int, base: int) -> np.ndarray:
    """base**length x length array of digit tuples in encoding order
    (first coordinate least significant)."""
    codes = np.arange(base ** length, dtype=np.int64)
    cols = []
    for _ in range(length):
        codes, r = np.divmod(codes, base)
        cols.append(r.astype(np.int16))
    return np.stack(cols, axis=1)


def _digit_labels(digits: np.ndarray) -> list:
    return [",".join(str(int(d)) for d in row) for row in digits]


def unitary_cayley(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """The unitary Cayley graph of the ring: vertices in canonical encoding
    order, edge xy iff x - y is a unit.

    For triangular rings adjacency is computed from the determinant of the
    difference (the product of its diagonal entries) and cross-checked
    against the all-diagonal-entries-differ shortcut; the two rules must
    agree.
    """
    if spec.order > cap:
        raise RingTooLarge(f"ring {spec} has {spec.order} elements, cap is {cap}")

    if spec.kind == "zn":
        m = spec.modulus
        units = zn_units(m)
        idx = np.arange(m)
        adj = units[(idx[:, None] - idx[None, :]) % m]
        return Graph(adj, labels=[str(x) for x in range(m)], cap=cap)

    f = spec.field()
    digits = entry_digit_matrix(spec, cap)
    diag = digits[:, list(diagonal_slots(spec.n))]

    # Unit rule: det(x - y) = prod_i (x_ii - y_ii) != 0.
    det = np.ones((spec.order, spec.order), dtype=np.int16)
    shortcut = np.ones((spec.order, spec.order), dtype=bool)
    for i in range(spec.n):
        col = diag[:, i]
        diff = f.sub_table[col[:, None], col[None, :]]
        det = f.mul_table[det, diff]
        shortcut &= col[:, None] != col[None, :]
    adj = det != 0
    if not np.array_equal(adj, shortcut):
        raise AssertionError("determinant rule and diagonal rule disagree")
    return Graph(adj, labels=_digit_labels(digits), cap=cap)


def hamming_graph(length: int, q: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Tuples of the given length over 0..q-1; adjacent iff they differ in
    exactly one coordinate."""
    if length < 1 or q < 2:
        raise ValueError("need length >= 1 and alphabet size >= 2")
    v = q ** length
    if v > cap:
        raise GraphTooLarge(f"q**length = {v} exceeds the cap of {cap}")
    t = tuple_codes(length, q)
    differ = np.zeros((v, v), dtype=np.int16)
    for i in range(length):
        differ += t[:, i][:, None] != t[None, :, i]
    return Graph(differ == 1, labels=_digit_labels(t), cap=cap)


def antipodal_hamming_direct(n: int, q: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Tuples adjacent iff they differ in every coordinate; equals the
    antipodal graph of hamming_graph(n, q) vertex for vertex."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and alphabet size >= 2")
    v = q ** n
    if v > cap:
        raise GraphTooLarge(f"q**n = {v} exceeds the cap of {cap}")
    t = tuple_codes(n, q)
    adj = np.ones((v, v), dtype=bool)
    for i in range(n):
        adj &= t[:, i][:, None] != t[None, :, i]
    return Graph(adj, labels=_digit_labels(t), cap=cap)


def complete_graph(m: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    if m < 1:
        raise ValueError("need at least one vertex")
    if m > cap:
        raise GraphTooLarge(f"{m} vertices exceed the cap of {cap}")
    adj = ~np.eye(m, dtype=bool)
    return Graph(adj, labels=[str(i) for i in range(m)], cap=cap)


def complete_bipartite(a: int, b: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """K_{a,b} with parts on index ranges [0, a) and [a, a+b)."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    if a + b > cap:
        raise GraphTooLarge(f"{a + b} vertices exceed the cap of {cap}")
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = True
    adj[a:, :a] = True
    return Graph(adj, labels=[str(i) for i in range(a + b)], cap=cap)


def semistrong_product(g: Graph, h: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """(u1,v1) ~ (u2,v2) iff v1v2 is an edge of h and (u1u2 is an edge of g
    or u1 = u2).  Vertex (u, v) sits at index u*|V(h)| + v."""
    v = g.vertex_count * h.vertex_count
    if v > cap:
        raise GraphTooLarge(f"product has {v} vertices, cap is {cap}")
    left = g.adjacency | np.eye(g.vertex_count, dtype=bool)
    adj = np.kron(left, h.adjacency)
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = [f"{gl}|{hl}" for gl in g.labels for hl in h.labels]
    return Graph(adj, labels=labels, cap=cap)


def diagonal_quotient(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Quotient of the triangular ring's Cayley graph by equal-diagonal
    classes: one vertex per diagonal (base-q encoded), classes adjacent iff
    their diagonal representatives differ by a unit.

    Adjacency between classes does not depend on the choice of
    representatives, because unit difference is decided by the diagonals
    alone; tests assert this some-pair/every-pair equivalence exhaustively
    on small instances.
    """
    if spec.kind != "tri":
        raise ValueError("diagonal quotient is defined for triangular rings only")
    q = spec.q
    v = q ** spec.n
    if v > cap:
        raise GraphTooLarge(f"q**n = {v} exceeds the cap of {cap}")
    f = spec.field()
    t = tuple_codes(spec.n, q)
    adj = np.ones((v, v), dtype=bool)
    for i in range(spec.n):
        col = t[:, i]
        adj &= f.sub_table[col[:, None], col[None, :]] != 0
    return Graph(adj, labels=_digit_labels(t), cap=cap)
