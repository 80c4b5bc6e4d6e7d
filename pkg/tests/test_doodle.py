"""Closure data, split detection and SVG rendering."""

import pathlib
import random

import pytest

from twinkit.doodle import (
    Permutation,
    SvgGeometry,
    closure_components,
    is_pure,
    permutation_of,
    render_svg,
    split_check,
)
from twinkit.words import Word, inverse, multiply

from util import W

DATA = pathlib.Path(__file__).parent / "data"


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


def test_permutation_of_examples():
    assert permutation_of(W(3, "s1")).images == (2, 1, 3)
    assert permutation_of(W(3, "s1 s2") ** 3).is_identity()
    assert permutation_of(W(3, "e")).is_identity()


def test_permutation_is_homomorphism():
    rng = random.Random(43)
    for _ in range(300):
        n = rng.randint(2, 6)
        u = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))))
        v = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))))
        assert permutation_of(multiply(u, v)).images == (
            permutation_of(u) * permutation_of(v)
        ).images
    for i in range(1, 6):
        gen = Word(6, (i,))
        assert (permutation_of(gen) * permutation_of(gen)).is_identity()


def test_is_pure_examples():
    assert is_pure(W(3, "s1 s2") ** 3)
    assert not is_pure(W(3, "s1"))
    assert is_pure(W(3, "e"))


def test_closure_components_examples():
    assert closure_components(W(3, "e")) == 3
    assert closure_components(W(2, "s1")) == 1
    split_word = (W(6, "s1 s2") ** 3) * (W(6, "s4 s5") ** 4)
    assert closure_components(split_word) == 4


def test_components_invariant_under_conjugation():
    rng = random.Random(47)
    for _ in range(200):
        n = rng.randint(3, 6)
        w = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))))
        g = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 4))))
        conjugated = multiply(multiply(inverse(g), w), g)
        assert closure_components(w) == closure_components(conjugated)


def test_split_check_examples():
    summary = split_check((W(6, "s1 s2") ** 3) * (W(6, "s4 s5") ** 4))
    assert summary.split_certified and summary.split_reason == 1
    summary = split_check(W(3, "s1"))
    assert summary.split_certified and summary.split_reason == 1
    summary = split_check(W(3, "s1 s2") ** 2)
    assert not summary.split_certified and summary.split_reason is None


def test_split_check_strips_one_stabilization():
    # full cyclic support, but one destabilization leaves a core missing a
    # generator one strand down
    from twinkit.markov import stabilize_m3, stabilize_m4

    word = stabilize_m3(W(3, "s2"), 1)  # s2 s3 s2 s1 s2 s3 on four strands
    summary = split_check(word)
    assert summary.split_certified and summary.split_reason == 2
    word = stabilize_m4(W(3, "s1"), 3)  # s2 s1 s2 s3 s2 s1
    summary = split_check(word)
    assert summary.split_certified and summary.split_reason == 3


def test_split_clause_one_is_conjugation_invariant():
    rng = random.Random(53)
    for _ in range(100):
        n = rng.randint(3, 5)
        w = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 5))))
        if split_check(w).split_reason != 1:
            continue
        g = Word(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 4))))
        conjugated = multiply(multiply(g, w), inverse(g))
        assert split_check(conjugated).split_reason == 1


def test_split_check_needs_three_strands():
    with pytest.raises(ValueError):
        split_check(W(2, "s1"))


def _diagonal_segments(svg):
    count = 0
    for line in svg.splitlines():
        if 'class="strand"' not in line:
            continue
        coords = line.split('points="')[1].split('"')[0].split()
        points = [tuple(int(v) for v in xy.split(",")) for xy in coords]
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x0 != x1 and y0 != y1:
                count += 1
    return count


def test_render_single_crossing_geometry():
    svg = render_svg(W(2, "s1"), "diagram")
    assert svg.count('class="strand"') == 2
    assert _diagonal_segments(svg) == 2  # one transversal crossing


def test_render_closure_adds_return_arcs():
    svg = render_svg(W(3, "e"), "closure")
    assert svg.count('class="strand"') == 3
    assert svg.count('class="closure-arc"') == 3


def test_render_rejects_unknown_mode():
    with pytest.raises(ValueError):
        render_svg(W(2, "s1"), "poster")


def test_render_determinism():
    words = [W(3, "s1 s2") ** 3, Word(4, (2, 3) * 3 + (1, 2, 1)), W(5, "s1 s4 s2")]
    for w in words:
        for mode in ("diagram", "closure"):
            assert render_svg(w, mode) == render_svg(w, mode)


def test_render_geometry_override_changes_output():
    wide = render_svg(W(2, "s1"), "diagram", SvgGeometry(strand_spacing=80))
    assert wide != render_svg(W(2, "s1"), "diagram")


@pytest.mark.parametrize(
    "name, word, mode",
    [
        ("t2_s1_diagram", W(2, "s1"), "diagram"),
        ("t3_identity_closure", W(3, "e"), "closure"),
        ("t3_hexagon_closure", W(3, "s1 s2") ** 3, "closure"),
        ("t4_destabilized_pair_closure", Word(4, (2, 3) * 3 + (1, 2, 1)), "closure"),
    ],
)
def test_render_golden_files(name, word, mode):
    golden = (DATA / f"{name}.svg").read_bytes()
    assert render_svg(word, mode).encode() == golden
