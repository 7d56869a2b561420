import random

import pytest

from pnfkit import BinaryWord


def all_words(n):
    """Every word of length n, packed-int order."""
    for bits in range(1 << n):
        yield BinaryWord(bits, n)


def words_up_to(n):
    for length in range(n + 1):
        yield from all_words(length)


def random_word(rng: random.Random, n: int) -> BinaryWord:
    return BinaryWord(rng.getrandbits(n) if n else 0, n)


def factor_ones_counts(w, k):
    """Ones-counts of every length-k factor of w, by direct scan."""
    return [sum(w.bit(i) for i in range(s, s + k)) for s in range(1, len(w) - k + 2)]


@pytest.fixture
def rng():
    return random.Random(0x5EED)
