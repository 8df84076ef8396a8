"""Structured verification of the structural claims about unitary Cayley
graphs of upper-triangular matrix rings, with re-checkable certificates.

Every check takes a RingSpec, measures the built graph, compares against
the claimed value, and returns a Verdict.  Claims conditional on the
field size are gated: the two-element-field claims raise WrongField for
q > 2 and vice versa.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constructors import (VertexLabeling, antipodal_hamming_direct,
                           complete_graph, diagonal_quotient,
                           semistrong_product, unitary_cayley)
from .errors import UctError, WrongField
from .finite_field import is_prime
from .graph_core import (ISO_ORACLE_CAP, all_pairs_distances,
                         connected_components, is_bipartite,
                         is_complete_bipartite, iso_check, labeled_equal,
                         max_clique, triametral_triple)
from .tri_ring import (DEFAULT_VERTEX_CAP, RingSpec, diagonal_slots, encode,
                       entry_digit_matrix, enumerate_ring, from_parts, is_unit,
                       strict_upper_slots, zn_units)


@dataclass
class Verdict:
    """Outcome of one claim check on one ring."""

    claim_id: str
    spec: str
    expected: object
    computed: object
    passed: bool
    certificate: dict
    millis: float
    seed: object = None

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "spec": self.spec,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "certificate": self.certificate,
            "seed": self.seed,
            "millis": round(self.millis, 3),
        }


def _finish(claim_id, spec, expected, computed, certificate, started, seed=None):
    return Verdict(claim_id=claim_id, spec=str(spec), expected=expected,
                   computed=computed, passed=expected == computed,
                   certificate=certificate,
                   millis=(time.perf_counter() - started) * 1000.0, seed=seed)


def _require_tri(spec: RingSpec):
    if spec.kind != "tri":
        raise ValueError(f"check needs a triangular ring, got {spec}")


def _diagonal_matrix_encoding(spec: RingSpec, diagonal) -> int:
    f = spec.field()
    zeros = (0,) * (spec.n * (spec.n - 1) // 2)
    return encode(from_parts(f, spec.n, zeros, tuple(diagonal)))


def check_prop0(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """Regularity: every vertex degree equals (q-1)^n * q^((n^2-n)/2), the
    number of units, which is also counted exhaustively."""
    started = time.perf_counter()
    _require_tri(spec)
    g = unitary_cayley(spec, cap)
    q, n = spec.q, spec.n
    formula = (q - 1) ** n * q ** ((n * n - n) // 2)
    degrees = g.degrees()
    unit_count = sum(1 for a in enumerate_ring(spec, cap) if is_unit(a))
    expected = {"degree_min": formula, "degree_max": formula, "unit_count": formula}
    computed = {"degree_min": int(degrees.min()), "degree_max": int(degrees.max()),
                "unit_count": unit_count}
    return _finish("prop0.regularity", spec, expected, computed,
                   {"vertices": g.vertex_count}, started)


def check_prop1(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """Adjacency criterion: the unit-difference (determinant) rule and the
    all-diagonal-entries-differ rule agree on every vertex pair."""
    started = time.perf_counter()
    _require_tri(spec)
    f = spec.field()
    digits = entry_digit_matrix(spec, cap)
    diag = digits[:, list(diagonal_slots(spec.n))]
    det = np.ones((spec.order, spec.order), dtype=np.int16)
    differs_everywhere = np.ones((spec.order, spec.order), dtype=bool)
    for i in range(spec.n):
        col = diag[:, i]
        det = f.mul_table[det, f.sub_table[col[:, None], col[None, :]]]
        differs_everywhere &= col[:, None] != col[None, :]
    agree = bool(np.array_equal(det != 0, differs_everywhere))
    pairs = spec.order * (spec.order - 1) // 2
    return _finish("prop1.diagonal_rule", spec,
                   {"rules_agree": True}, {"rules_agree": agree},
                   {"pairs_checked": pairs}, started)


def check_theorem1(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """Two-element field: 2^(n-1) components, each complete bipartite
    K_{m,m} with m = 2^(n(n-1)/2), the parts being two diagonal classes
    whose diagonals are complementary."""
    started = time.perf_counter()
    _require_tri(spec)
    if spec.q != 2:
        raise WrongField(f"component-structure claim needs q = 2, got q = {spec.q}")
    n = spec.n
    g = unitary_cayley(spec, cap)
    digits = entry_digit_matrix(spec, cap)
    diag = digits[:, list(diagonal_slots(n))]
    comps = connected_components(g)
    m = 2 ** (n * (n - 1) // 2)

    components_ok = True
    certificate_comps = []
    for comp in comps:
        sub = g.induced_subgraph(comp)
        parts = is_complete_bipartite(sub)
        entry = {"size": len(comp)}
        if parts is None:
            components_ok = False
            entry["complete_bipartite"] = False
        else:
            part_a = [comp[i] for i in parts[0]]
            part_b = [comp[i] for i in parts[1]]
            diag_a = {tuple(int(x) for x in diag[v]) for v in part_a}
            diag_b = {tuple(int(x) for x in diag[v]) for v in part_b}
            entry["part_sizes"] = sorted([len(part_a), len(part_b)])
            single_class = len(diag_a) == 1 and len(diag_b) == 1
            complementary = False
            if single_class:
                da, db = next(iter(diag_a)), next(iter(diag_b))
                complementary = all(x != y for x, y in zip(da, db))
                entry["diagonals"] = [list(da), list(db)]
            ok = (len(part_a) == m and len(part_b) == m
                  and single_class and complementary)
            entry["parts_are_complementary_diagonal_classes"] = ok
            components_ok = components_ok and ok
        certificate_comps.append(entry)

    expected = {"components": 2 ** (n - 1), "all_components_k_mm": True, "m": m}
    computed = {"components": len(comps), "all_components_k_mm": components_ok, "m": m}
    return _finish("theorem1.gf2_components", spec, expected, computed,
                   {"components": certificate_comps}, started)


def check_connectivity_and_diameter(spec: RingSpec,
                                    cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """q > 2: the graph is connected with diameter exactly 2.  The
    certificate carries one non-adjacent pair and an explicit midpoint
    (diagonal avoiding both, zero off-diagonal) adjacent to both."""
    started = time.perf_counter()
    _require_tri(spec)
    if spec.q == 2:
        raise WrongField("connectivity claim needs q > 2")
    g = unitary_cayley(spec, cap)
    comps = connected_components(g)
    dist = all_pairs_distances(g)
    diam = int(dist[np.isfinite(dist)].max())

    certificate = {}
    adj = g.adjacency
    witness = None
    for u in range(g.vertex_count):
        others = np.nonzero(~adj[u])[0]
        others = others[others > u]
        if others.size:
            witness = (u, int(others[0]))
            break
    if witness is not None:
        f = spec.field()
        digits = entry_digit_matrix(spec, cap)
        diag_slots = list(diagonal_slots(spec.n))
        da = digits[witness[0]][diag_slots]
        db = digits[witness[1]][diag_slots]
        mid_diag = []
        for x, y in zip(da, db):
            c = next(e for e in range(spec.q) if e != x and e != y)
            mid_diag.append(c)
        mid = _diagonal_matrix_encoding(spec, mid_diag)
        certificate = {
            "nonadjacent_pair": list(witness),
            "midpoint": mid,
            "midpoint_adjacent_to_both": bool(adj[mid, witness[0]] and adj[mid, witness[1]]),
        }
    expected = {"components": 1, "diameter": 2, "midpoint_ok": True}
    computed = {"components": len(comps), "diameter": diam,
                "midpoint_ok": certificate.get("midpoint_adjacent_to_both", False)}
    return _finish("theorem2.connectivity_diameter", spec, expected, computed,
                   certificate, started)


def check_triameter(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """q > 2: the triameter is exactly 6.  Also verifies the diagonal-matrix
    witness triple diag(a,a,...), diag(a,b,...), diag(a,c,...) attains
    2+2+2."""
    started = time.perf_counter()
    _require_tri(spec)
    if spec.q == 2:
        raise WrongField("triameter claim needs q > 2")
    g = unitary_cayley(spec, cap)
    value, triple = triametral_triple(g)

    a, b, c = 0, 1, 2
    d1 = _diagonal_matrix_encoding(spec, [a] * spec.n)
    d2 = _diagonal_matrix_encoding(spec, [a] + [b] * (spec.n - 1))
    d3 = _diagonal_matrix_encoding(spec, [a] + [c] * (spec.n - 1))
    dist = all_pairs_distances(g)
    witness_sum = int(dist[d1, d2] + dist[d1, d3] + dist[d2, d3])

    expected = {"triameter": 6, "diagonal_witness_sum": 6}
    computed = {"triameter": value, "diagonal_witness_sum": witness_sum}
    certificate = {
        "triametral_triple": list(triple),
        "pairwise": [int(dist[triple[0], triple[1]]),
                     int(dist[triple[0], triple[2]]),
                     int(dist[triple[1], triple[2]])],
        "diagonal_witness": [d1, d2, d3],
    }
    return _finish("triameter.value", spec, expected, computed, certificate, started)


def check_clique(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """The clique number equals q: the q scalar matrices diag(a,...,a) are
    pairwise adjacent (lower bound) and exact search finds nothing larger."""
    started = time.perf_counter()
    _require_tri(spec)
    g = unitary_cayley(spec, cap)
    q = spec.q
    scalars = [_diagonal_matrix_encoding(spec, [a] * spec.n) for a in range(q)]
    adj = g.adjacency
    scalars_adjacent = all(adj[x, y] for i, x in enumerate(scalars)
                           for y in scalars[i + 1:])
    found = max_clique(g)
    expected = {"clique_number": q, "scalar_clique_ok": True}
    computed = {"clique_number": len(found), "scalar_clique_ok": scalars_adjacent}
    return _finish("clique.value", spec, expected, computed,
                   {"scalar_clique": scalars, "found_clique": found}, started)


def theorem3_relabeling(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> VertexLabeling:
    """The structural bijection: matrix -> (strict-upper encoding) * q^n +
    (diagonal encoding).  Maps Cayley-graph vertices onto vertices of
    K_m (bullet) A(H(n, q)) in product order."""
    _require_tri(spec)
    q, n = spec.q, spec.n
    digits = entry_digit_matrix(spec, cap)
    up = digits[:, list(strict_upper_slots(n))].astype(np.int64)
    dg = digits[:, list(diagonal_slots(n))].astype(np.int64)
    up_code = up @ (q ** np.arange(up.shape[1], dtype=np.int64))
    dg_code = dg @ (q ** np.arange(n, dtype=np.int64))
    return VertexLabeling(tuple(int(x) for x in up_code * q ** n + dg_code))


def check_theorem3(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP,
                   seed: int = 0) -> Verdict:
    """q > 2: the Cayley graph equals K_m (bullet) A(H(n,q)) as a labeled
    graph after the structural relabeling, m = q^(n(n-1)/2).  Every vertex
    pair is compared; degree sequence, edge count and component count are
    asserted as redundant cross-checks, and the generic isomorphism oracle
    independently confirms instances small enough for it."""
    started = time.perf_counter()
    _require_tri(spec)
    if spec.q == 2:
        raise WrongField("semistrong-product claim needs q > 2")
    q, n = spec.q, spec.n
    g = unitary_cayley(spec, cap)
    m = q ** (n * (n - 1) // 2)
    product = semistrong_product(complete_graph(m, cap),
                                 antipodal_hamming_direct(n, q, cap), cap)
    phi = theorem3_relabeling(spec, cap)
    perm = np.array(phi.encodings)
    if len(phi) != product.vertex_count or perm.max() >= product.vertex_count:
        raise AssertionError("relabeling is not onto the product vertex set")
    relabeled = product.adjacency[np.ix_(perm, perm)]
    pairwise_equal = bool(np.array_equal(relabeled, g.adjacency))

    degrees_equal = sorted(g.degrees()) == sorted(product.degrees())
    edges_equal = g.edge_count() == product.edge_count()
    components_equal = len(connected_components(g)) == len(connected_components(product))

    iso_confirmed = None
    if g.vertex_count <= ISO_ORACLE_CAP:
        iso_confirmed = iso_check(g, product) is not None

    rng = random.Random(seed)
    v = g.vertex_count
    spot_ok = True
    for _ in range(100):
        x, y = rng.randrange(v), rng.randrange(v)
        spot_ok &= bool(g.adjacency[x, y] == product.adjacency[perm[x], perm[y]])

    expected = {"pairwise_equal": True, "degree_sequences_equal": True,
                "edge_counts_equal": True, "component_counts_equal": True,
                "spot_pairs_ok": True,
                "iso_oracle": True if iso_confirmed is not None else None}
    computed = {"pairwise_equal": pairwise_equal,
                "degree_sequences_equal": bool(degrees_equal),
                "edge_counts_equal": bool(edges_equal),
                "component_counts_equal": bool(components_equal),
                "spot_pairs_ok": bool(spot_ok),
                "iso_oracle": iso_confirmed}
    certificate = {"m": m, "hamming_vertices": q ** n,
                   "pairs_checked": v * (v - 1) // 2,
                   "edge_count": g.edge_count(),
                   "phi": [int(x) for x in perm]}
    return _finish("theorem3.semistrong_product", spec, expected, computed,
                   certificate, started, seed=seed)


def check_quotient(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """The diagonal-class quotient equals the direct all-coordinates-differ
    Hamming companion, vertex for vertex (any q, including q = 2, where
    both are perfect matchings)."""
    started = time.perf_counter()
    _require_tri(spec)
    quotient = diagonal_quotient(spec, cap)
    direct = antipodal_hamming_direct(spec.n, spec.q, cap)
    equal = labeled_equal(quotient, direct) and quotient.labels == direct.labels
    return _finish("quotient.antipodal_hamming", spec,
                   {"labeled_equal": True}, {"labeled_equal": bool(equal)},
                   {"vertices": quotient.vertex_count}, started)


def check_zn_oracles(spec, cap: int = DEFAULT_VERTEX_CAP) -> Verdict:
    """Known facts about C_{Z_n} used as independent regressions: complete
    for prime n, complete bipartite with equal parts for n = 2^s, bipartite
    for even n, and always regular of degree |units|."""
    started = time.perf_counter()
    if isinstance(spec, int):
        spec = RingSpec.integers_mod(spec)
    if spec.kind != "zn":
        raise ValueError(f"Z_n oracle check needs a zn spec, got {spec}")
    m = spec.modulus
    g = unitary_cayley(spec, cap)
    units = int(zn_units(m).sum())
    degrees = g.degrees()

    expected = {"degree": units}
    computed = {"degree": int(degrees.min()) if int(degrees.min()) == int(degrees.max())
                else sorted(set(int(d) for d in degrees))}
    certificate = {"units": units}
    if is_prime(m):
        expected["complete"] = True
        computed["complete"] = labeled_equal(g, complete_graph(m, cap))
    if m & (m - 1) == 0:  # power of two
        expected["bipartition_sizes"] = [m // 2, m // 2]
        parts = is_complete_bipartite(g)
        computed["bipartition_sizes"] = (None if parts is None
                                         else sorted([len(parts[0]), len(parts[1])]))
        if parts is not None:
            certificate["parts"] = [parts[0], parts[1]]
    if m % 2 == 0:
        expected["bipartite"] = True
        computed["bipartite"] = is_bipartite(g)
    return _finish("zn.baselines", spec, expected, computed, certificate, started)


# -- suite orchestration ---------------------------------------------------

DEFAULT_SUITE_SPECS = (
    RingSpec.triangular(2, 2, 1),
    RingSpec.triangular(3, 2, 1),
    RingSpec.triangular(4, 2, 1),
    RingSpec.triangular(2, 3, 1),
    RingSpec.triangular(3, 3, 1),
    RingSpec.triangular(2, 2, 2),
    RingSpec.triangular(2, 5, 1),
)

CHECKS = {
    "prop0": check_prop0,
    "prop1": check_prop1,
    "theorem1": check_theorem1,
    "connectivity": check_connectivity_and_diameter,
    "triameter": check_triameter,
    "clique": check_clique,
    "theorem3": check_theorem3,
    "quotient": check_quotient,
    "zn": check_zn_oracles,
}

CLAIM_IDS = {
    "prop0": "prop0.regularity",
    "prop1": "prop1.diagonal_rule",
    "theorem1": "theorem1.gf2_components",
    "connectivity": "theorem2.connectivity_diameter",
    "triameter": "triameter.value",
    "clique": "clique.value",
    "theorem3": "theorem3.semistrong_product",
    "quotient": "quotient.antipodal_hamming",
    "zn": "zn.baselines",
}


def checks_for(spec: RingSpec) -> list:
    """Names of the checks applicable to a spec, in fixed order."""
    if spec.kind == "zn":
        return ["zn"]
    if spec.q == 2:
        return ["prop0", "prop1", "theorem1", "clique", "quotient"]
    return ["prop0", "prop1", "connectivity", "triameter", "clique",
            "theorem3", "quotient"]


def run_check(name: str, spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP,
              seed: int = 0) -> Verdict:
    """Run one named check; errors become failed Verdicts, not exceptions."""
    started = time.perf_counter()
    try:
        if name == "theorem3":
            return check_theorem3(spec, cap, seed=seed)
        return CHECKS[name](spec, cap)
    except UctError as exc:
        return Verdict(claim_id=CLAIM_IDS[name], spec=str(spec),
                       expected="no error", computed=f"{type(exc).__name__}: {exc}",
                       passed=False, certificate={"error": str(exc)},
                       millis=(time.perf_counter() - started) * 1000.0)


def _run_spec(spec: RingSpec, cap: int, seed: int) -> list:
    if spec.order > cap:
        return [Verdict(claim_id="build.cayley_graph", spec=str(spec),
                        expected=f"at most {cap} vertices",
                        computed=f"RingTooLarge: {spec.order} elements",
                        passed=False,
                        certificate={"error": "RingTooLarge", "order": spec.order},
                        millis=0.0)]
    return [run_check(name, spec, cap, seed) for name in checks_for(spec)]


def run_suite(specs=None, cap: int = DEFAULT_VERTEX_CAP, threads=None,
              seed: int = 0) -> list:
    """Run every applicable check for each spec.  Specs run concurrently;
    the verdict list keeps spec order, then check order."""
    if specs is None:
        specs = DEFAULT_SUITE_SPECS
    specs = list(specs)
    if not specs:
        return []
    if threads is None:
        threads = os.cpu_count() or 1
    threads = max(1, min(threads, len(specs)))
    if threads == 1:
        groups = [_run_spec(s, cap, seed) for s in specs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            groups = list(pool.map(lambda s: _run_spec(s, cap, seed), specs))
    return [v for group in groups for v in group]


def report_json(verdicts) -> str:
    """Stable JSON report; `millis` is the only timing field, every other
    field is byte-stable for fixed (spec, seed)."""
    return json.dumps({"verdicts": [v.to_json() for v in verdicts]}, indent=2) + "\n"
