"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the pytest terminal summary (see conftest.py) and
also when this file is run directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from bredux.classes import (
    ClassId,
    check_hereditary_closure,
    gen_caterpillar,
    gen_spider,
    generate_members,
    iter_caterpillars,
)
from bredux.graph import (
    Graph,
    WeightedGraph,
    are_isomorphic,
    enumerate_graphs,
    extend_by_vertex,
    sample_graph,
)
from bredux.reductions import REDUCTIONS, verify_sweep
from bredux.solvers import (
    chromatic_number,
    clique_cover_number,
    clique_number,
    has_bounded_degree_spanning_tree,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    independence_number,
    tsp_decision,
    vertex_cover_number,
)
from bredux.transforms import (
    complement,
    k_complete,
    k_extract,
    line_graph,
    line_root,
    r_contract,
    r_expand,
)

import oracles

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def dedup_upto(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in enumerate_graphs(k, dedup=True)]


def seeded_samples(count: int, lo: int, hi: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [sample_graph(rng.randint(lo, hi), rng.uniform(0.15, 0.85), rng.randrange(2**32)) for _ in range(count)]


# closure checks are measured separately under criterion 8
_LIGHT = dict(closure_budget=1, weighted_closure_budget=1)


@pytest.fixture(scope="module")
def exhaustive_reports():
    return {rid: verify_sweep(rid, max_n=6, samples=0, **_LIGHT) for rid in REDUCTIONS}


@pytest.fixture(scope="module")
def sampled_reports():
    return {rid: verify_sweep(rid, samples=200, seed=42, **_LIGHT) for rid in REDUCTIONS}


def test_criterion_01_exhaustive_answer_preservation(exhaustive_reports):
    bad = {rid: len(r.violations) for rid, r in exhaustive_reports.items() if r.violations}
    total = sum(r.exhaustive_count for r in exhaustive_reports.values())
    ok = not bad and all(r.exhaustive_count > 0 for r in exhaustive_reports.values())
    record(1, "answer preservation, all graphs n<=6, all k", ok, f"{total} instances, violations={bad or 0}")


def test_criterion_02_sampled_answer_preservation(sampled_reports):
    bad = {rid: len(r.violations) for rid, r in sampled_reports.items() if r.violations}
    counts = {rid: r.sampled_count for rid, r in sampled_reports.items()}
    ranges = {rid: REDUCTIONS[rid].sample_range for rid in REDUCTIONS}
    expected_ranges = all(
        ranges[rid] == ((7, 12) if rid in ("is2vc", "is2clique") else (7, 10)) for rid in REDUCTIONS
    )
    ok = not bad and all(c == 200 for c in counts.values()) and expected_ranges
    record(2, "answer preservation, 200 seeded samples per reduction", ok, f"violations={bad or 0}")


def test_criterion_03_bijectivity(exhaustive_reports, sampled_reports):
    failures = sum(len(r.bijectivity_failures) for r in [*exhaustive_reports.values(), *sampled_reports.values()])
    checked = sum(r.exhaustive_count + r.sampled_count for r in [*exhaustive_reports.values(), *sampled_reports.values()])
    record(3, "invert . apply = id and apply . invert = id", failures == 0, f"{checked} instances, failures={failures}")


@pytest.fixture(scope="module")
def identity_corpus():
    return dedup_upto(6) + seeded_samples(500, 8, 12, seed=42)


def test_criterion_04_gallai(identity_corpus):
    bad = [g for g in identity_corpus if independence_number(g).optimum + vertex_cover_number(g).optimum != g.n]
    record(4, "alpha + beta = |V|", not bad, f"{len(identity_corpus)} graphs, mismatches={len(bad)}")


def test_criterion_05_complement_duality(identity_corpus):
    bad = [g for g in identity_corpus if independence_number(g).optimum != clique_number(complement(g)).optimum]
    record(5, "alpha(G) = omega(co G)", not bad, f"{len(identity_corpus)} graphs, mismatches={len(bad)}")


def test_criterion_06_equivalences():
    corpus = dedup_upto(6) + seeded_samples(100, 8, 10, seed=43)
    bad_path = [g for g in corpus if has_hamiltonian_path(g).decision != has_bounded_degree_spanning_tree(g, 2).decision]
    bad_cycle = [g for g in corpus if has_hamiltonian_cycle(g).decision != tsp_decision(k_complete(g), 0).decision]
    record(
        6,
        "HamPath <=> 2-bounded tree, HamCycle <=> TSP(K(G)) <= 0",
        not bad_path and not bad_cycle,
        f"{len(corpus)} graphs, mismatches={len(bad_path)}+{len(bad_cycle)}",
    )


def test_criterion_07_clique_cover_duality():
    corpus = dedup_upto(6) + extend_by_vertex(enumerate_graphs(6, dedup=True))
    bad = []
    for g in corpus:
        cc = clique_cover_number(g).optimum
        if not (cc == chromatic_number(complement(g)).optimum == oracles.clique_cover_by_partitions(g)):
            bad.append(g)
    record(7, "clique cover = chi(co G) = partition oracle, n<=7", not bad, f"{len(corpus)} graphs, mismatches={len(bad)}")


def test_criterion_08_hereditary_closure():
    budgets = {c: (10 if c.weighted else 12) for c in ClassId}
    counts = {}
    for c, b in budgets.items():
        rep = check_hereditary_closure(c, b, seed=42)
        counts[c.value] = len(rep.violations)
    ok = not any(counts.values())
    detail = " ".join(f"{k}:{v}" for k, v in counts.items())
    record(8, "hereditary closure at budgets 12 / 10", ok, detail)


def test_criterion_09_round_trips():
    labeled = [g for n in range(1, 7) for g in enumerate_graphs(n)]
    co_ok = all(complement(complement(g)) == g for g in labeled)
    k_ok = all(k_extract(k_complete(g)) == g for g in labeled)
    q_members = generate_members(ClassId.Q, 14) + [gen_caterpillar(s) for s in iter_caterpillars(14)]
    r_bad = [g for g in q_members if (b := r_contract(r_expand(g))) is None or not are_isomorphic(b, g)]
    l_bad = []
    for spec in ((i, j, k) for i in range(5) for j in range(5) for k in range(5)):
        spider = gen_spider(spec)
        # T_{0,0,0} has no edges, so its line graph and that graph's root are both empty
        expected = spider if spider.m else Graph(0)
        root = line_root(line_graph(spider), ClassId.T)
        if root is None or not are_isomorphic(root, expected):
            l_bad.append(spec)
    ok = co_ok and k_ok and not r_bad and not l_bad
    record(
        9,
        "co, K, R and L^-1 round trips",
        ok,
        f"{len(labeled)} labeled graphs, {len(q_members)} Q-members, 125 spiders; "
        f"failures co={int(not co_ok)} k={int(not k_ok)} r={len(r_bad)} l={len(l_bad)}",
    )


def test_criterion_10_drawn_fixtures():
    net = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
    spider_222 = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    tri_plus = Graph(4, [(1, 2), (1, 3), (2, 3)])
    pentagram = Graph(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)])
    k_c5 = WeightedGraph(5, {
        (0, 1): 1, (0, 2): 0, (0, 3): 0, (0, 4): 1, (1, 2): 1,
        (1, 3): 0, (1, 4): 0, (2, 3): 1, (2, 4): 0, (3, 4): 1,
    })
    checks = {
        "L(T222)": are_isomorphic(line_graph(spider_222), net),
        "R(K13)": are_isomorphic(r_expand(claw), net),
        "co(T111)": are_isomorphic(complement(claw), tri_plus),
        "K(C5)": k_complete(pentagram) == k_c5,
    }
    record(10, "hand-encoded transform fixtures", all(checks.values()), " ".join(f"{k}={'ok' if v else 'BAD'}" for k, v in checks.items()))


def test_criterion_11_enumeration_counts():
    counts = [len(list(enumerate_graphs(n, dedup=True))) for n in range(1, 7)]
    record(11, "dedup counts for n=1..6", counts == [1, 2, 4, 11, 34, 156], str(counts))


def test_criterion_12_determinism(tmp_path):
    paths = []
    for i, hashseed in enumerate(("0", "12345")):
        path = tmp_path / f"report{i}.json"
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        proc = subprocess.run(
            [sys.executable, "-m", "bredux", "verify-all", "--seed", "42", "--report", str(path)],
            env=env, capture_output=True, text=True,
        )
        assert proc.returncode in (0, 1), proc.stderr
        paths.append(path)
    same = paths[0].read_bytes() == paths[1].read_bytes()
    record(12, "verify-all --seed 42 twice is byte-identical", same, f"{paths[0].stat().st_size} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
