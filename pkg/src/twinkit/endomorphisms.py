"""The injective, non-surjective endomorphism that defeats co-Hopficity.

The map fixes every generator except s_2, which goes to s_2 s_1 s_2.  All
images have an even s_2-count, so s_2 itself has no preimage; injectivity
is corroborated here at desk scale by kernel checks over length balls.
"""

from __future__ import annotations

import dataclasses
import itertools

from .oracle import enumerate_ball
from .twisted import Endomap, apply
from .words import NormalForm, Word, parity_vector

S2_BIT = 1  # position of the s_2 bit in a parity vector


def make_psi_n(n: int) -> Endomap:
    """The co-Hopf counterexample map on n >= 3 strands."""
    if n < 3:
        raise ValueError("the doubling endomorphism needs at least 3 strands")
    images = tuple(
        Word(n, (2, 1, 2)) if i == 2 else Word(n, (i,)) for i in range(1, n)
    )
    return Endomap(n, images, "psi_n")


def psi_n_apply(m: Endomap, w: Word) -> NormalForm:
    """Image normal form under the doubling endomorphism."""
    return apply(m, w)


@dataclasses.dataclass(frozen=True)
class InjectivityReport:
    """Kernel-triviality evidence on the ball of a given radius."""

    n: int
    radius: int
    elements_checked: int
    kernel_trivial: bool
    counterexample: Word | None


def injectivity_ball_test(m: Endomap, radius: int) -> InjectivityReport:
    """Verify that no nontrivial element of length <= radius maps to the
    identity; reports the first counterexample otherwise."""
    ball = enumerate_ball(m.n, radius)
    checked = 0
    for nf in ball.elements:
        if not nf.letters:
            continue
        checked += 1
        if not apply(m, nf.word).letters:
            return InjectivityReport(m.n, radius, checked, False, nf.word)
    return InjectivityReport(m.n, radius, checked, True, None)


@dataclasses.dataclass(frozen=True)
class NonSurjectivityReport:
    """Parity evidence that s_2 lies outside the image."""

    n: int
    generator_images_even: bool
    sampled_words: int
    sampled_images_even: bool
    target_bit_odd: bool
    target_outside_image: bool


def non_surjectivity_witness(m: Endomap) -> NonSurjectivityReport:
    """Certify s_2 has no preimage via the mod-2 letter-count invariant.

    Every generator image has even s_2-count, the invariant is multiplicative
    over products, and s_2 itself has odd count; sampled products double as a
    mechanical spot check of the same fact.
    """
    n = m.n
    gens_even = all(parity_vector(img)[S2_BIT] == 0 for img in m.images)
    sampled = 0
    sampled_even = True
    for length in range(1, 4):
        for letters in itertools.product(range(1, n), repeat=length):
            sampled += 1
            image = apply(m, Word(n, letters))
            if parity_vector(image.word)[S2_BIT] != 0:
                sampled_even = False
    target_odd = parity_vector(Word(n, (2,)))[S2_BIT] == 1
    return NonSurjectivityReport(
        n=n,
        generator_images_even=gens_even,
        sampled_words=sampled,
        sampled_images_even=sampled_even,
        target_bit_odd=target_odd,
        target_outside_image=gens_even and sampled_even and target_odd,
    )
