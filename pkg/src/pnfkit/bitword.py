"""Binary words with rank/select and maximum/minimum-ones profiles.

Words are immutable, bit-packed sequences over {0, 1}. Positions are
1-based in every public contract (position 0 means "empty prefix"); the
packed representation never leaks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ScaleError, WordParseError

# Profile construction is a sliding window per length, O(n^2) overall.
# Anything past this length is refused rather than left to crawl.
PROFILE_LENGTH_GUARD = 100_000

MAX_ONES = "max_ones"
MAX_ZEROS = "max_zeros"
MIN_ONES = "min_ones"


class BinaryWord:
    """An immutable binary word w = w_1 ... w_n.

    Bits are packed into a single int: position i is stored at bit i-1.
    Instances hash and compare by value and are safe to share between
    threads; every operation returns a new word.
    """

    __slots__ = ("_bits", "_n")

    def __init__(self, bits: int, length: int):
        if length < 0:
            raise ValueError("length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError("bit pattern does not fit the stated length")
        self._bits = bits
        self._n = length

    @classmethod
    def from_bits(cls, bits: "list[int] | tuple[int, ...]") -> "BinaryWord":
        packed = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit value {b!r} is not 0 or 1")
            packed |= b << i
        return cls(packed, len(bits))

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self._n):
            yield bits & 1
            bits >>= 1

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return BinaryWord(self._bits | (other._bits << self._n), self._n + other._n)

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        return f"BinaryWord({self.to01()!r})"

    def to01(self) -> str:
        """Render as an ASCII '0'/'1' string, position 1 first."""
        if self._n == 0:
            return ""
        return format(self._bits, "b").zfill(self._n)[::-1]

    def bit(self, i: int) -> int:
        """The symbol at position i, 1 <= i <= n."""
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} out of range 1..{self._n}")
        return (self._bits >> (i - 1)) & 1

    @property
    def packed(self) -> int:
        """The raw bit-packed value (position i at bit i-1)."""
        return self._bits

    def count(self, x: int) -> int:
        """Number of occurrences of symbol x in the whole word."""
        _check_symbol(x)
        ones = self._bits.bit_count()
        return ones if x == 1 else self._n - ones

    def rank(self, x: int, i: int) -> int:
        """Occurrences of symbol x in the prefix of length i (0 <= i <= n)."""
        _check_symbol(x)
        if not 0 <= i <= self._n:
            raise IndexError(f"prefix length {i} out of range 0..{self._n}")
        ones = (self._bits & ((1 << i) - 1)).bit_count()
        return ones if x == 1 else i - ones

    def select(self, x: int, i: int) -> int:
        """Position of the i-th occurrence of symbol x (1-based count).

        Raises ValueError when the word has fewer than i occurrences.
        """
        _check_symbol(x)
        total = self.count(x)
        if not 1 <= i <= total:
            raise ValueError(f"word has only {total} occurrence(s) of {x}, cannot select #{i}")
        # rank(x, .) is non-decreasing; binary search the first prefix reaching i.
        lo, hi = 1, self._n
        while lo < hi:
            mid = (lo + hi) // 2
            if self.rank(x, mid) >= i:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def complement(self) -> "BinaryWord":
        mask = (1 << self._n) - 1
        return BinaryWord(self._bits ^ mask, self._n)

    def reverse(self) -> "BinaryWord":
        rev = 0
        bits = self._bits
        for _ in range(self._n):
            rev = (rev << 1) | (bits & 1)
            bits >>= 1
        return BinaryWord(rev, self._n)

    def prefix_counts(self, x: int = 1) -> list[int]:
        """P[i] = occurrences of x in the prefix of length i, for i = 0..n."""
        _check_symbol(x)
        counts = [0] * (self._n + 1)
        bits = self._bits if x == 1 else self._bits ^ ((1 << self._n) - 1)
        acc = 0
        for i in range(1, self._n + 1):
            acc += bits & 1
            bits >>= 1
            counts[i] = acc
        return counts


def _check_symbol(x: int) -> None:
    if x not in (0, 1):
        raise ValueError(f"symbol must be 0 or 1, got {x!r}")


def parse_word(text: str) -> BinaryWord:
    """Parse an ASCII '0'/'1' string into a word. Empty input is allowed.

    Rejects any other character with a WordParseError naming the 1-based
    position of the first offender.
    """
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise WordParseError(i + 1, ch)
    return BinaryWord(bits, len(text))


@dataclass(frozen=True)
class OnesProfile:
    """Values of a maximum-ones, maximum-zeros or minimum-ones function.

    values[k], for k = 0..n, is the extreme count over all length-k
    factors of the profiled word.
    """

    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (MAX_ONES, MAX_ZEROS, MIN_ONES):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if not self.values or self.values[0] != 0:
            raise ValueError("profile must start with values[0] = 0")

    def __len__(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def to_csv(self) -> str:
        """Comma-separated values with a leading k-range header line."""
        n = len(self)
        return f"k=0..{n}\n" + ",".join(str(v) for v in self.values) + "\n"


def _guard_profile_length(n: int, unsafe_large: bool) -> None:
    if n > PROFILE_LENGTH_GUARD and not unsafe_large:
        raise ScaleError(
            f"profile computation is quadratic; refusing length {n} > {PROFILE_LENGTH_GUARD} "
            "(pass unsafe_large=True to override)"
        )


def _max_window_profile(prefix: list[int]) -> tuple[int, ...]:
    # One pass per window length over the prefix-count array. Growing a
    # window by one symbol adds at most one to its count, so each length
    # only has to decide whether some window reaches the previous value
    # plus one; the scan stops at the first witness.
    n = len(prefix) - 1
    values = [0] * (n + 1)
    best = 0
    for k in range(1, n + 1):
        target = best + 1
        for i in range(n - k + 1):
            if prefix[i + k] - prefix[i] == target:
                best = target
                break
        values[k] = best
    return tuple(values)


def max_ones_profile(w: BinaryWord, *, unsafe_large: bool = False) -> OnesProfile:
    """values[k] = largest ones-count over all length-k factors of w."""
    _guard_profile_length(len(w), unsafe_large)
    return OnesProfile(MAX_ONES, _max_window_profile(w.prefix_counts(1)))


def max_zeros_profile(w: BinaryWord, *, unsafe_large: bool = False) -> OnesProfile:
    """values[k] = largest zeros-count over all length-k factors of w."""
    _guard_profile_length(len(w), unsafe_large)
    return OnesProfile(MAX_ZEROS, _max_window_profile(w.prefix_counts(0)))


def min_ones_profile(w: BinaryWord, *, unsafe_large: bool = False) -> OnesProfile:
    """values[k] = smallest ones-count over all length-k factors of w.

    Computed through the identity min_ones(k) = k - max_zeros(k).
    """
    fz = max_zeros_profile(w, unsafe_large=unsafe_large)
    return OnesProfile(MIN_ONES, tuple(k - v for k, v in enumerate(fz.values)))


class RankDirectory:
    """Cumulative ones-counts sampled at machine-word block boundaries.

    One popcount over at most a block tail answers any rank query; the
    directory adds n/64 stored counts on top of the word itself.
    """

    BLOCK_SIZE = 64

    __slots__ = ("word", "block_counts")

    def __init__(self, word: BinaryWord):
        self.word = word
        counts = [0]
        bits = word.packed
        mask = (1 << self.BLOCK_SIZE) - 1
        acc = 0
        for _ in range(len(word) // self.BLOCK_SIZE):
            acc += (bits & mask).bit_count()
            counts.append(acc)
            bits >>= self.BLOCK_SIZE
        self.block_counts = tuple(counts)

    def rank(self, x: int, i: int) -> int:
        """Occurrences of x in the prefix of length i, via the directory."""
        _check_symbol(x)
        n = len(self.word)
        if not 0 <= i <= n:
            raise IndexError(f"prefix length {i} out of range 0..{n}")
        block, rem = divmod(i, self.BLOCK_SIZE)
        ones = self.block_counts[block]
        if rem:
            tail = (self.word.packed >> (block * self.BLOCK_SIZE)) & ((1 << rem) - 1)
            ones += tail.bit_count()
        return ones if x == 1 else i - ones
