"""Prefix normal forms and Parikh sets.

Every word w has a unique 1-prefix-normal word with the same
maximum-ones function and a unique 0-prefix-normal word with the same
maximum-zeros function; together they determine the set of Parikh
vectors of the factors of w exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitword import (
    BinaryWord,
    OnesProfile,
    max_ones_profile,
    max_zeros_profile,
)
from .errors import ScaleError

# The suffix-union construction materializes O(n^2) vectors; it exists
# for cross-validation, not for long words.
PARIKH_SET_LENGTH_GUARD = 24


class ParikhVector(NamedTuple):
    """Symbol counts of a word, in (zeros, ones) order."""

    zeros: int
    ones: int


@dataclass(frozen=True)
class PnfPair:
    """The two normal forms of a word."""

    pnf1: BinaryWord
    pnf0: BinaryWord

    @property
    def source_length(self) -> int:
        return len(self.pnf1)

    def serialize(self) -> str:
        return f"PNF1={self.pnf1.to01()}\nPNF0={self.pnf0.to01()}\n"


def _difference_word(profile: OnesProfile, increment_symbol: int) -> BinaryWord:
    # Profile steps are 0 or 1; emit increment_symbol on a step, its
    # opposite otherwise.
    values = profile.values
    bits = []
    for k in range(1, len(values)):
        stepped = values[k] == values[k - 1] + 1
        bits.append(increment_symbol if stepped else 1 - increment_symbol)
    return BinaryWord.from_bits(bits)


def pnf1(w: BinaryWord, *, unsafe_large: bool = False) -> BinaryWord:
    """The unique 1-prefix-normal word sharing w's maximum-ones function."""
    return _difference_word(max_ones_profile(w, unsafe_large=unsafe_large), 1)


def pnf0(w: BinaryWord, *, unsafe_large: bool = False) -> BinaryWord:
    """The unique 0-prefix-normal word sharing w's maximum-zeros function."""
    return _difference_word(max_zeros_profile(w, unsafe_large=unsafe_large), 0)


def pnf_pair(w: BinaryWord, *, unsafe_large: bool = False) -> PnfPair:
    return PnfPair(pnf1(w, unsafe_large=unsafe_large), pnf0(w, unsafe_large=unsafe_large))


def prefix_equivalent(v: BinaryWord, w: BinaryWord, x: int = 1) -> bool:
    """True iff v and w have identical maximum-x profiles.

    Words of different lengths are never equivalent (the profiles have
    different domains).
    """
    if len(v) != len(w):
        return False
    if x == 1:
        return max_ones_profile(v) == max_ones_profile(w)
    if x == 0:
        return max_zeros_profile(v) == max_zeros_profile(w)
    raise ValueError(f"symbol must be 0 or 1, got {x!r}")


def parikh_set(w: BinaryWord, *, unsafe_large: bool = False) -> frozenset[ParikhVector]:
    """The set of Parikh vectors of all factors of w.

    Computed as the union, over the suffixes of w, of the Parikh vectors
    of the prefixes of each suffix. Guarded: quadratically many vectors.
    """
    n = len(w)
    if n > PARIKH_SET_LENGTH_GUARD and not unsafe_large:
        raise ScaleError(
            f"parikh_set holds O(n^2) vectors; refusing length {n} > {PARIKH_SET_LENGTH_GUARD}"
        )
    vectors = {ParikhVector(0, 0)}
    for start in range(1, n + 1):
        ones = 0
        for end in range(start, n + 1):
            ones += w.bit(end)
            length = end - start + 1
            vectors.add(ParikhVector(zeros=length - ones, ones=ones))
    return frozenset(vectors)


def parikh_set_bruteforce(w: BinaryWord) -> frozenset[ParikhVector]:
    """Independent oracle: enumerate every factor directly."""
    n = len(w)
    vectors = {ParikhVector(0, 0)}
    for start in range(n):
        for end in range(start + 1, n + 1):
            ones = sum(w.bit(i) for i in range(start + 1, end + 1))
            vectors.add(ParikhVector(zeros=(end - start) - ones, ones=ones))
    return frozenset(vectors)


def parikh_set_equal(v: BinaryWord, w: BinaryWord) -> bool:
    """True iff v and w have the same Parikh set.

    Decided through the normal forms: the Parikh sets coincide exactly
    when both normal forms coincide. Works at any length the profile
    guard admits, unlike materializing the sets.
    """
    if len(v) != len(w):
        return False
    return pnf1(v) == pnf1(w) and pnf0(v) == pnf0(w)


def parikh_set_csv(vectors: frozenset[ParikhVector]) -> str:
    """CSV serialization, one "zeros,ones" row per vector."""
    lines = ["zeros,ones"]
    for vec in sorted(vectors):
        lines.append(f"{vec.zeros},{vec.ones}")
    return "\n".join(lines) + "\n"
