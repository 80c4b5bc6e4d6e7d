"""Shared helpers for the test suite."""

import itertools

from twinkit.words import Word


def W(n, text):
    return Word.parse(n, text)


def all_words(n, max_len):
    """Every word over s_1..s_{n-1} of length <= max_len, identity first."""
    for length in range(max_len + 1):
        for letters in itertools.product(range(1, n), repeat=length):
            yield Word(n, letters)
