from __future__ import annotations

import random
from itertools import permutations

import pytest

from oracles import brute_is_isomorphic, labeled_graphs
from sumperfect.canon import canonical_key, canonical_labeling, is_isomorphic
from sumperfect.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
)


def _relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_c5_relabellings_share_key(c5):
    k = canonical_key(c5)
    for perm in permutations(range(5)):
        assert canonical_key(_relabel(c5, perm)) == k


def test_random_relabelling_invariance():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = from_edge_list(n, edges)
        k = canonical_key(g)
        for _ in range(100):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(_relabel(g, tuple(perm))) == k


def test_labeled_4_vertex_graphs_have_11_keys():
    keys = {canonical_key(g) for g in labeled_graphs(4)}
    assert len(keys) == 11


def test_keys_of_bipartite_layer_distinct():
    from sumperfect.family import build_family

    fam = build_family()
    keys = {fam.member(i).key for i in range(2, 14)}
    assert len(keys) == 12


def test_key_equality_matches_brute_isomorphism():
    graphs = list(labeled_graphs(4))
    keys = [canonical_key(g) for g in graphs]
    rng = random.Random(7)
    idx = range(len(graphs))
    for _ in range(3000):
        i, j = rng.choice(idx), rng.choice(idx)
        assert (keys[i] == keys[j]) == brute_is_isomorphic(graphs[i], graphs[j])


def test_is_isomorphic_examples(c5, k33, two_k3):
    assert is_isomorphic(c5, _relabel(c5, (3, 1, 4, 0, 2)))
    assert not is_isomorphic(k33, two_k3)


def test_complement_pairing_in_family():
    from sumperfect.family import build_family
    from sumperfect.graphs import complement

    fam = build_family()
    assert is_isomorphic(fam.member(7).graph, complement(fam.member(19).graph))


def test_symmetric_worst_cases_terminate_quickly():
    cases = [
        Graph(10, (0,) * 10),
        complete_graph(10),
        complete_bipartite(5, 5),
        cycle_graph(10),
        disjoint_union(cycle_graph(5), cycle_graph(5)),
    ]
    for g in cases:
        k = canonical_key(g)
        perm = tuple(reversed(range(g.n)))
        assert canonical_key(_relabel(g, perm)) == k


def test_canonical_labeling_is_a_permutation(c5):
    order, key = canonical_labeling(c5)
    assert sorted(order) == list(range(5))
    assert key == canonical_key(c5)
    assert key[0] == 5


def test_envelope_error():
    with pytest.raises(ValueError):
        canonical_key(Graph(13, (0,) * 13))


def test_key_prefix_is_order(small_corpus):
    for n in (0, 1, 5):
        for g in small_corpus[n][:5]:
            assert canonical_key(g)[0] == n
