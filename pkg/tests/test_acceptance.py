"""Acceptance suite: every verification claim at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail line
per criterion.  All numeric comparisons are exact integer equality; the
connectivity criteria are decided by the exhaustive deletion sweep.
"""

import random
from math import comb

from cubeorient import (
    SamplerConfig,
    cascade_representation,
    check_expansion_condition,
    colex_initial_segment,
    cut_arcs,
    enumerate_eulerian_orientations,
    full_node_mask,
    hamming_ball_boundary,
    harper_boundary,
    inductive_orientation,
    is_eulerian_orientation,
    is_smooth,
    is_strongly_k_node_connected,
    load,
    lower_shadow,
    min_boundary_bruteforce,
    sample_eulerian_orientations,
    shadow_exceeds_segment,
    small_set_boundary,
    strongly_connected,
    undirected_node_connectivity,
    verify_boundary_inequalities,
)
from cubeorient.cli import run_counterexample, run_verify

# frozen by running the enumerator under both DFS edge orders
Q4_EULERIAN_ORIENTATION_COUNT = 2970


def check(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_01_q4_exhaustive_strong_2_connectivity():
    failures = []

    def visit(o):
        report = is_strongly_k_node_connected(o, 2)
        if not report.verdict:
            failures.append(report)

    count = enumerate_eulerian_orientations(4, visitor=visit)
    count_alt = enumerate_eulerian_orientations(4, edge_order="dim-major")
    check(
        "q4-exhaustive-strong-2-connectivity",
        not failures
        and count == count_alt == Q4_EULERIAN_ORIENTATION_COUNT,
        f"count={count}, alt-order count={count_alt}, failures={len(failures)}",
    )


def test_02_q6_sampled_strong_3_connectivity():
    report = run_verify(6, "sample", samples=1000, seed=42, jobs=1)
    check(
        "q6-sampled-strong-3-connectivity",
        report.passed == 1000 and report.failed == 0,
        f"passed={report.passed}/1000",
    )


def test_03_harper_oracle_equivalence():
    brute_ok = all(
        harper_boundary(m, 4) == min_boundary_bruteforce(m, 4) for m in range(1, 16)
    )
    ball_ok = all(
        harper_boundary(m, 6) == hamming_ball_boundary(m, 6) for m in range(1, 64)
    )
    check(
        "harper-oracle-equivalence",
        brute_ok and ball_ok,
        "brute force m=1..15 at n=4; Hamming ball m=1..63 at n=6",
    )


def test_04_cascade_worked_example():
    rep = cascade_representation(17, 6)
    check(
        "cascade-worked-example",
        (rep.r, rep.m_prime, rep.terms) == (4, 10, ((5, 4), (4, 3), (2, 2))),
        f"r={rep.r}, m'={rep.m_prime}, terms={rep.terms}",
    )


def test_05_closed_form_matches_harper():
    ok = all(
        small_set_boundary(m, k) == harper_boundary(m, 2 * k)
        for k in (1, 2, 3, 4)
        for m in range(1, 2 * k + 2)
    )
    check("closed-form-matches-harper", ok, "m <= 2k+1, k in 1..4")


def test_06_expansion_condition_and_inequalities():
    expansion_ok = all(check_expansion_condition(k) for k in (1, 2, 3, 4, 5))
    inequality_ok = all(verify_boundary_inequalities(k) for k in (2, 3, 4, 5, 6))
    check(
        "expansion-condition-and-inequalities",
        expansion_ok and inequality_ok,
        "expansion k=1..5; inequalities and slack identities k=2..6",
    )


def test_07_shadow_sweep_and_bipartite_degrees():
    sweep_ok = True
    cases = 0
    for k in (1, 2, 3, 4):
        for r in range(k + 1, 2 * k - 1):
            for m_prime in range(1, comb(2 * k, r) + 1):
                cases += 1
                if not shadow_exceeds_segment(m_prime, r, k):
                    sweep_ok = False

    rng = random.Random(1234)
    degrees_ok = True
    for _ in range(100):
        k = rng.choice((2, 3, 4))
        r = rng.randrange(k + 1, 2 * k + 1)
        m_prime = rng.randrange(1, comb(2 * k, r) + 1)
        segment = colex_initial_segment(m_prime, r, 2 * k)
        shadow = lower_shadow(segment)
        cap = 2 * k - r + 1
        if cap >= r:
            degrees_ok = False
        for member in segment:
            facets = {member - {x} for x in member}
            if len(facets) != r or not facets <= shadow:
                degrees_ok = False
        for below in shadow:
            if sum(1 for member in segment if below < member) > cap:
                degrees_ok = False

    check(
        "shadow-sweep-and-bipartite-degrees",
        sweep_ok and degrees_ok,
        f"{cases} exhaustive (m', r) cases, 100 random degree instances",
    )


def test_08_inductive_construction_verified():
    ok = True
    for k in (1, 2, 3):
        o = inductive_orientation(k)
        if not is_eulerian_orientation(o):
            ok = False
        if not is_strongly_k_node_connected(o, k).verdict:
            ok = False
    check("inductive-construction-verified", ok, "k=1..3 Eulerian and k-connected")


def test_09_q3_counterexample_replay(tmp_path):
    out = tmp_path / "q3-witness.cubeorient"
    report = run_counterexample(str(out))
    replayed = load(out)
    ok = (
        report.failed == 0
        and is_smooth(replayed)
        and not strongly_connected(replayed)
        and not is_eulerian_orientation(replayed)
    )
    check("q3-counterexample-replay", ok, f"witness bits={replayed.bits}")


def test_10_cut_balance():
    balanced = True

    # exhaustive over Q_2: both Eulerian orientations, all proper subsets
    q2_orientations = []
    enumerate_eulerian_orientations(2, visitor=q2_orientations.append)
    for o in q2_orientations:
        for members in range(1, full_node_mask(2)):
            out_c, in_c = cut_arcs(members, o)
            if out_c != in_c:
                balanced = False

    # 10,000 random (set, orientation) pairs split over Q_4 and Q_6
    rng = random.Random(2024)
    pairs = 0
    for d in (4, 6):
        full = full_node_mask(d)
        for o in sample_eulerian_orientations(d, 25, SamplerConfig(seed=d)):
            for _ in range(200):
                members = rng.randrange(1, full)
                out_c, in_c = cut_arcs(members, o)
                pairs += 1
                if out_c != in_c:
                    balanced = False
    check("eulerian-cut-balance", balanced, f"{pairs} random pairs plus exhaustive Q_2")


def test_11_undirected_node_connectivity():
    values = {d: undirected_node_connectivity(d) for d in (2, 3, 4, 5, 6)}
    check(
        "undirected-node-connectivity",
        all(values[d] == d for d in values),
        f"values={values}",
    )
