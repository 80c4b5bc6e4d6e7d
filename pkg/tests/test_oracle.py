"""The brute-force oracle: BFS equality, ball enumeration, witness searches."""

import itertools

import pytest

from twinkit.doodle import permutation_of
from twinkit.oracle import (
    bfs_equal,
    conjugator_search,
    enumerate_ball,
    reduced_representatives,
    twisted_witness_search,
)
from twinkit.twisted import identity_endomap
from twinkit.words import equal, inverse, reduce

from util import W, all_words


def test_bfs_equal_examples():
    assert bfs_equal(W(3, "s1 s1"), W(3, "e"))
    assert bfs_equal(W(6, "s1 s4"), W(6, "s4 s1"))
    assert not bfs_equal(W(3, "s1"), W(3, "s2"))


def test_bfs_budget_exhaustion():
    with pytest.raises(RuntimeError):
        bfs_equal(W(6, "s1 s3 s5") ** 4, W(6, "e"), move_budget=10)


def test_bfs_agrees_with_equal_on_balls():
    # keystone cross-validation: the naive closure referee vs the reducer
    for n in (3, 4):
        elements = [nf.word for nf in enumerate_ball(n, 6).elements]
        reps = {w.letters: reduced_representatives(w) for w in elements}
        for u in elements:
            for v in elements:
                oracle = not reps[u.letters].isdisjoint(reps[v.letters])
                assert oracle == equal(u, v)


def test_ball_small_counts():
    assert len(enumerate_ball(3, 4)) == 9
    assert len(enumerate_ball(2, 5)) == 2


def test_ball_layer_counts_golden():
    # frozen after an independent dedup through the BFS closure (below)
    assert enumerate_ball(4, 3).layer_counts == (1, 3, 5, 8)


def test_ball_layer_counts_match_bfs_dedup():
    classes = set()
    for w in all_words(4, 3):
        classes.add(min(reduced_representatives(w)))
    by_len = [0, 0, 0, 0]
    for rep in classes:
        by_len[len(rep)] += 1
    assert tuple(by_len) == enumerate_ball(4, 3).layer_counts


def test_ball_invariants():
    for n, radius in ((3, 6), (4, 5), (5, 4)):
        ball = enumerate_ball(n, radius)
        letters = {nf.letters for nf in ball.elements}
        assert () in letters
        for nf in ball.elements:
            assert reduce(inverse(nf.word)).letters in letters
        assert sum(ball.layer_counts) == len(ball)
        smaller = enumerate_ball(n, radius - 1)
        assert smaller.layer_counts == ball.layer_counts[:radius]


def test_ball_elements_sorted_length_then_lex():
    ball = enumerate_ball(4, 4)
    keys = [(len(nf), nf.letters) for nf in ball.elements]
    assert keys == sorted(keys)


def test_ball_radius_cap():
    with pytest.raises(ValueError):
        enumerate_ball(5, 9)
    with pytest.raises(ValueError):
        enumerate_ball(6, 7)
    assert len(enumerate_ball(6, 7, cap=7)) > 0  # explicit override


def test_ball_projection_sanity():
    for n in (3, 4):
        ball = enumerate_ball(n, 6)
        images = {permutation_of(nf.word).images for nf in ball.elements}
        assert len(images) <= len(list(itertools.permutations(range(n))))


def test_conjugator_search_examples():
    assert conjugator_search(W(3, "s1 s2"), W(3, "s2 s1"), 2).letters == (1,)
    assert conjugator_search(W(3, "s1 s2"), W(3, "s1 s2") ** 2, 6) is None


def test_twisted_witness_search_example():
    g = twisted_witness_search(identity_endomap(3), W(3, "s1"), W(3, "s2 s1 s2"), 2)
    assert g.letters == (2,)
