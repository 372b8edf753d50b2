from __future__ import annotations

from oracles import brute_contains_induced
from sumperfect.graphs import (
    complete_graph,
    cycle_graph,
    from_edge_list,
    induced_subgraph,
    mask_of,
    path_graph,
)
from sumperfect.induced import PatternSet, contains_induced, embedding_is_valid


def test_c5_contains_p4(c5):
    emb = contains_induced(c5, path_graph(4))
    assert emb is not None
    assert embedding_is_valid(c5, path_graph(4), emb)


def test_c6_contains_no_3k2(three_k2):
    assert contains_induced(cycle_graph(6), three_k2) is None


def test_h26_contains_triangle(h26):
    emb = contains_induced(h26, complete_graph(3))
    assert emb is not None
    assert embedding_is_valid(h26, complete_graph(3), emb)


def test_pattern_larger_than_host(c5):
    assert contains_induced(c5, cycle_graph(6)) is None


def test_empty_pattern(c5):
    emb = contains_induced(c5, from_edge_list(0, []))
    assert emb is not None and emb.mapping == ()


def test_first_embedding_is_lexicographic(c5):
    # {0,1,2,3} is the first 4-subset of C5 and already induces a path.
    emb = contains_induced(c5, path_graph(4))
    assert emb.image() == (0, 1, 2, 3)


def test_oracle_equality_small(small_corpus):
    patterns = [g for k in range(1, 5) for g in small_corpus[k]]
    hosts = [g for k in range(1, 7) for g in small_corpus[k]]
    for host in hosts:
        for pat in patterns:
            if pat.n > host.n:
                continue
            emb = contains_induced(host, pat)
            expected = brute_contains_induced(host, pat)
            assert (emb is not None) == expected
            if emb is not None:
                assert embedding_is_valid(host, pat, emb)


def test_embedding_image_induces_pattern(small_corpus):
    pat = cycle_graph(4)
    for host in small_corpus[6]:
        emb = contains_induced(host, pat)
        if emb is None:
            continue
        from sumperfect.canon import is_isomorphic

        assert is_isomorphic(induced_subgraph(host, mask_of(emb.image())), pat)


def test_pattern_set_scans_sizes_ascending(c5):
    ps = PatternSet([("p3", path_graph(3)), ("p4", path_graph(4))])
    hits = list(ps.scan(c5))
    assert hits[0].label == "p3"
    assert all(h.subset == tuple(sorted(h.subset)) for h in hits)
    for h in hits:
        assert embedding_is_valid(c5, h.pattern, h.embedding)


def test_pattern_set_rejects_isomorphic_duplicates():
    import pytest

    with pytest.raises(ValueError):
        PatternSet([("a", path_graph(3)), ("b", from_edge_list(3, [(0, 2), (2, 1)]))])
