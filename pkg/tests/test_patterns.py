"""Induced-pattern detection against the brute subset-scan oracle."""

import random

import pytest

from heavycycle.graphs import Graph
from heavycycle.patterns import (
    MAX_PATTERN_SIZE,
    PATTERN_NAMES,
    PatternWitness,
    first_occurrence,
    induced_occurrences,
    is_pattern_free,
    pattern_by_name,
    star_pattern,
)

from oracles import ref_induced_subsets, random_graph


def test_named_pattern_shapes():
    assert pattern_by_name("p3").edge_count == 2
    assert pattern_by_name("p4").edge_count == 3
    assert pattern_by_name("k3").edge_count == 3
    assert pattern_by_name("c4").edge_count == 4
    for k in (3, 4, 5):
        star = pattern_by_name(f"k1_{k}")
        assert star.n == k + 1
        assert sorted(star.degrees, reverse=True)[0] == k


def test_parametric_star_and_guards():
    assert star_pattern(6).n == 7
    assert pattern_by_name("k1_k:6").n == 7
    with pytest.raises(ValueError):
        pattern_by_name("k1_k:99")  # beyond MAX_PATTERN_SIZE
    with pytest.raises(ValueError):
        pattern_by_name("nonsense")
    assert star_pattern(MAX_PATTERN_SIZE - 1).n == MAX_PATTERN_SIZE


def test_k3_in_k4_four_witnesses():
    ws = list(induced_occurrences(Graph.complete(4), pattern_by_name("k3")))
    assert len(ws) == 4
    assert {frozenset(w.image()) for w in ws} == {
        frozenset(c) for c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    }


def test_k13_in_k14_four_witnesses():
    k14 = Graph.star(4)  # center plus four leaves
    ws = list(induced_occurrences(k14, pattern_by_name("k1_3")))
    assert len(ws) == 4


def test_g2_is_p4_free():
    from heavycycle.extremal import ExtremalParams, generate

    g, _ = generate(ExtremalParams("g2", r=4, k=7))
    assert list(induced_occurrences(g, pattern_by_name("p4"))) == []
    assert ref_induced_subsets(g, pattern_by_name("p4")) == []


def test_witnesses_validate_and_match_subset_oracle():
    rng = random.Random(20240811)
    for _ in range(40):
        n = rng.randint(4, 8)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        for name in PATTERN_NAMES:
            pat = pattern_by_name(name)
            ws = list(induced_occurrences(g, pat))
            for w in ws:
                assert w.validate(g)
            got = {frozenset(w.image()) for w in ws}
            want = set(ref_induced_subsets(g, pat))
            assert got == want, (name, g.adj)
            # one witness per vertex subset (dedup up to pattern automorphism)
            assert len(ws) == len(got)


def test_deterministic_order():
    g = random_graph(7, 0.5, random.Random(7))
    pat = pattern_by_name("p3")
    a = [w.mapping for w in induced_occurrences(g, pat)]
    b = [w.mapping for w in induced_occurrences(g, pat)]
    assert a == b


def test_first_occurrence_and_free_agree():
    rng = random.Random(99)
    for _ in range(30):
        g = random_graph(rng.randint(3, 7), rng.random(), rng)
        for name in ("p3", "k3", "c4"):
            pat = pattern_by_name(name)
            w = first_occurrence(g, pat)
            assert (w is None) == is_pattern_free(g, pat)
            if w is not None:
                assert w.validate(g)


def test_pattern_larger_than_host_is_absent():
    assert list(induced_occurrences(Graph.complete(3), pattern_by_name("c4"))) == []
    assert is_pattern_free(Graph.complete(3), pattern_by_name("k1_5"))


def test_witness_validate_rejects_tampering():
    g = Graph.complete(4)
    w = first_occurrence(g, pattern_by_name("k3"))
    bad = PatternWitness(w.pattern, (w.mapping[0],) * 3)  # not injective
    assert not bad.validate(g)
    host2 = Graph.cycle(4)  # triangle mapping cannot survive in C4
    assert not PatternWitness(w.pattern, w.mapping).validate(host2)
