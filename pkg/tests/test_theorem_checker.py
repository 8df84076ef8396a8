"""Checks of the verification layer itself: verdict content, gating,
suite orchestration, and offline re-verification of certificates."""

import json
import random

import pytest

from uct import (RingSpec, WrongField, all_pairs_distances,
                 antipodal_hamming_direct, check_clique,
                 check_connectivity_and_diameter, check_prop0, check_prop1,
                 check_quotient, check_theorem1, check_theorem3,
                 check_triameter, check_zn_oracles, complete_graph,
                 connected_components, run_check, run_suite,
                 semistrong_product, unitary_cayley)
from uct.theorem_checker import (DEFAULT_SUITE_SPECS, checks_for, report_json,
                                 theorem3_relabeling)

T23 = RingSpec.triangular(2, 3, 1)
T22 = RingSpec.triangular(2, 2, 1)
T32 = RingSpec.triangular(3, 2, 1)
T42 = RingSpec.triangular(4, 2, 1)
T24 = RingSpec.triangular(2, 2, 2)
T25 = RingSpec.triangular(2, 5, 1)
T33 = RingSpec.triangular(3, 3, 1)


@pytest.mark.parametrize("spec,degree", [(T22, 2), (T23, 12), (T32, 8)])
def test_prop0_degrees(spec, degree):
    v = check_prop0(spec)
    assert v.passed
    assert v.computed["degree_min"] == degree == v.computed["degree_max"]
    assert v.computed["unit_count"] == degree


@pytest.mark.parametrize("spec,pairs", [(T22, 28), (T23, 351)])
def test_prop1_checks_every_pair(spec, pairs):
    v = check_prop1(spec)
    assert v.passed
    assert v.certificate["pairs_checked"] == pairs


@pytest.mark.parametrize("spec,comps,m", [(T22, 2, 2), (T32, 4, 8), (T42, 8, 64)])
def test_theorem1_component_structure(spec, comps, m):
    v = check_theorem1(spec)
    assert v.passed
    assert v.computed["components"] == comps
    assert v.computed["m"] == m
    for entry in v.certificate["components"]:
        assert entry["part_sizes"] == [m, m]
        da, db = entry["diagonals"]
        assert all(x != y for x, y in zip(da, db))


def test_theorem1_requires_q2():
    with pytest.raises(WrongField):
        check_theorem1(T23)


@pytest.mark.parametrize("spec", [T23, T33, T24])
def test_connectivity_and_diameter(spec):
    v = check_connectivity_and_diameter(spec)
    assert v.passed
    assert v.computed == {"components": 1, "diameter": 2, "midpoint_ok": True}


def test_connectivity_midpoint_certificate_re_verifies():
    v = check_connectivity_and_diameter(T23)
    g = unitary_cayley(T23)
    a, b = v.certificate["nonadjacent_pair"]
    mid = v.certificate["midpoint"]
    assert not g.adjacency[a, b]
    assert g.adjacency[mid, a] and g.adjacency[mid, b]


def test_connectivity_requires_q_above_2():
    with pytest.raises(WrongField):
        check_connectivity_and_diameter(T22)


@pytest.mark.parametrize("spec", [T23, T24, T25])
def test_triameter_is_six(spec):
    v = check_triameter(spec)
    assert v.passed
    assert v.computed["triameter"] == 6
    assert v.computed["diagonal_witness_sum"] == 6


def test_triameter_certificate_re_measures():
    v = check_triameter(T23)
    g = unitary_cayley(T23)
    d = all_pairs_distances(g)
    u, vv, w = v.certificate["triametral_triple"]
    assert int(d[u, vv] + d[u, w] + d[vv, w]) == 6
    d1, d2, d3 = v.certificate["diagonal_witness"]
    assert int(d[d1, d2] + d[d1, d3] + d[d2, d3]) == 6


@pytest.mark.parametrize("spec,omega", [(T23, 3), (T32, 2), (T25, 5)])
def test_clique_number_is_field_size(spec, omega):
    v = check_clique(spec)
    assert v.passed
    assert v.computed["clique_number"] == omega
    g = unitary_cayley(spec)
    scalars = v.certificate["scalar_clique"]
    assert len(scalars) == omega
    for i, x in enumerate(scalars):
        for y in scalars[i + 1:]:
            assert g.adjacency[x, y]


@pytest.mark.parametrize("spec,m,vertices", [(T23, 3, 27), (T24, 4, 64),
                                             (T33, 27, 729)])
def test_theorem3_labeled_equality(spec, m, vertices):
    v = check_theorem3(spec)
    assert v.passed
    assert v.certificate["m"] == m
    assert v.certificate["pairs_checked"] == vertices * (vertices - 1) // 2
    assert v.computed["pairwise_equal"]
    assert v.computed["degree_sequences_equal"]
    assert v.computed["edge_counts_equal"]
    assert v.computed["component_counts_equal"]


def test_theorem3_small_instances_confirmed_by_iso_oracle():
    assert check_theorem3(T23).computed["iso_oracle"] is True
    assert check_theorem3(T33).computed["iso_oracle"] is None  # above oracle cap


def test_theorem3_requires_q_above_2():
    with pytest.raises(WrongField):
        check_theorem3(T22)


def test_theorem3_phi_re_verifies_from_certificate():
    """Offline re-check: rebuild both graphs, re-apply the exported bijection
    to 100 seeded random vertex pairs."""
    v = check_theorem3(T23, seed=0)
    phi = v.certificate["phi"]
    g = unitary_cayley(T23)
    prod = semistrong_product(complete_graph(v.certificate["m"]),
                              antipodal_hamming_direct(2, 3))
    rng = random.Random(v.seed)
    for _ in range(100):
        x, y = rng.randrange(27), rng.randrange(27)
        assert bool(g.adjacency[x, y]) == bool(prod.adjacency[phi[x], phi[y]])


def test_theorem3_relabeling_is_bijection():
    phi = theorem3_relabeling(T33)
    assert sorted(phi.encodings) == list(range(729))


@pytest.mark.parametrize("spec", [T23, T32, T25, T33])
def test_quotient(spec):
    assert check_quotient(spec).passed


def test_zn_prime_and_power_of_two_and_even():
    v7 = check_zn_oracles(7)
    assert v7.passed and v7.computed["complete"] is True
    v8 = check_zn_oracles(8)
    assert v8.passed
    assert v8.computed["bipartition_sizes"] == [4, 4]
    v6 = check_zn_oracles(6)
    assert v6.passed
    assert v6.computed["bipartite"] is True
    assert v6.computed["degree"] == 2


def test_zn_rejects_tri_spec():
    with pytest.raises(ValueError):
        check_zn_oracles(T23)


# -- suite ---------------------------------------------------------------------

def test_checks_for_selects_by_field_size():
    assert "theorem1" in checks_for(T22)
    assert "theorem3" not in checks_for(T22)
    assert "theorem3" in checks_for(T23)
    assert "theorem1" not in checks_for(T23)
    assert checks_for(RingSpec.integers_mod(8)) == ["zn"]


def test_default_suite_all_pass():
    verdicts = run_suite()
    assert len(verdicts) == 5 * 3 + 7 * 4  # q=2 specs get 5 checks, q>2 get 7
    assert all(v.passed for v in verdicts)
    specs = [v.spec for v in verdicts]
    assert specs == sorted(specs, key=lambda s: [str(x) for x in DEFAULT_SUITE_SPECS].index(s))


def test_empty_suite():
    assert run_suite([]) == []


def test_over_cap_spec_becomes_single_failed_verdict():
    verdicts = run_suite([RingSpec.triangular(9, 2, 1)])
    assert len(verdicts) == 1
    assert not verdicts[0].passed
    assert verdicts[0].certificate["error"] == "RingTooLarge"


def test_run_check_turns_errors_into_failed_verdicts():
    v = run_check("theorem3", T22)
    assert not v.passed
    assert "WrongField" in str(v.computed)


def test_suite_deterministic_modulo_timing():
    def strip(vs):
        out = []
        for v in vs:
            d = v.to_json()
            d.pop("millis")
            out.append(d)
        return out
    a = strip(run_suite([T23, RingSpec.integers_mod(8)], seed=5))
    b = strip(run_suite([T23, RingSpec.integers_mod(8)], seed=5))
    assert a == b


def test_suite_threading_preserves_order():
    sequential = run_suite([T22, T23], threads=1)
    parallel = run_suite([T22, T23], threads=2)
    assert [(v.claim_id, v.spec) for v in sequential] == \
           [(v.claim_id, v.spec) for v in parallel]


def test_report_json_stable_fields():
    verdicts = run_suite([T22])
    payload = json.loads(report_json(verdicts))
    assert set(payload) == {"verdicts"}
    for entry in payload["verdicts"]:
        assert list(entry) == ["claim_id", "spec", "expected", "computed",
                               "pass", "certificate", "seed", "millis"]


def test_theorem1_certificate_bipartitions_re_verify():
    """Offline recheck of the exported component structure, edge by edge."""
    v = check_theorem1(T32)
    g = unitary_cayley(T32)
    comps = connected_components(g)
    assert len(comps) == len(v.certificate["components"])
    for comp, entry in zip(comps, v.certificate["components"]):
        sub = g.induced_subgraph(comp)
        da, db = (tuple(x) for x in entry["diagonals"])
        # partition the component by its two diagonals and re-test all pairs
        part_a = [i for i in range(len(comp))
                  if _diag_of_label(sub.labels[i]) == da]
        part_b = [i for i in range(len(comp))
                  if _diag_of_label(sub.labels[i]) == db]
        assert sorted(part_a + part_b) == list(range(len(comp)))
        for x in part_a:
            for y in part_b:
                assert sub.adjacency[x, y]
        for part in (part_a, part_b):
            for x in part:
                for y in part:
                    assert not sub.adjacency[x, y]


def _diag_of_label(label):
    # labels hold the canonical entry digits; diagonal slots of n=3 are 0,3,5
    digits = [int(c) for c in label.split(",")]
    return digits[0], digits[3], digits[5]
