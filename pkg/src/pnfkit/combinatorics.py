"""Enumeration of prefix normal words and the identities around it.

The enumeration engine is a depth-first walk of the prefix-closed tree
of 1-prefix-normal words: appending 0 always stays in the language,
appending 1 is gated by the suffix-vs-prefix count test. One walk to
depth n yields, per length m <= n, the word count pnw(m), the
extension-critical count ecrit(m) and the density histogram.

Counting walks may be forked at a fixed depth into independent subtree
tasks; totals are exact integers summed in task order, so parallel and
sequential runs are bit-identical.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .bitword import BinaryWord
from .errors import ContractError, PnfkitError, ScaleError
from .normality import is_prefix_normal

ENUM_LENGTH_GUARD = 30
CLASS_SCAN_GUARD = 20
CLASS_LISTING_GUARD = 8
GF_MAX_DENSITY = 6
GF_ORDER_GUARD = 200
DEFAULT_SPLIT_DEPTH = 12

THREADS_ENV_VAR = "PNFKIT_THREADS"


def _guard_length(n: int, unsafe_large: bool, guard: int = ENUM_LENGTH_GUARD) -> None:
    if n < 0:
        raise ValueError("length must be non-negative")
    if n > guard and not unsafe_large:
        raise ScaleError(f"exhaustive enumeration refused for length {n} > {guard}")


def resolve_threads(threads: int | None = None) -> int:
    """Worker count for counting walks: explicit value, else available
    cores capped by the PNFKIT_THREADS environment variable."""
    if threads is not None:
        return max(1, threads)
    count = os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV_VAR)
    if cap:
        try:
            count = min(count, max(1, int(cap)))
        except ValueError:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {cap!r}") from None
    return count


# ---------------------------------------------------------------------------
# Core walk
# ---------------------------------------------------------------------------


def _walk_counts(
    root_prefix: tuple[int, ...],
    n: int,
    leaf_ecrit: bool,
    with_hist: bool,
) -> tuple[list[int], list[int], list[int] | None]:
    """Count the subtree under a 1-prefix-normal root.

    root_prefix is the ones-prefix-count array of the root word (entry 0
    is 0). Returns per-depth node counts, per-depth extension-critical
    counts, and (optionally) the leaf density histogram. Depths below
    the root are left at zero. The append-one test is evaluated at the
    leaf depth only when leaf_ecrit is set.
    """
    p = list(root_prefix)
    m = len(p) - 1
    if m > n:
        raise ValueError("root longer than requested depth")
    nodes = [0] * (n + 1)
    ecrit = [0] * (n + 1)
    hist = [0] * (n + 1) if with_hist else None
    pending: list[bool] = []
    p_append = p.append
    p_pop = p.pop
    pending_append = pending.append
    pending_pop = pending.pop
    while True:
        nodes[m] += 1
        ok = False
        if m < n or leaf_ecrit:
            total = p[m]
            ok = True
            for j in range(1, (m + 1) // 2 + 1):
                if p[j] + p[m + 1 - j] <= total:
                    ok = False
                    break
            if not ok:
                ecrit[m] += 1
        if m < n:
            if ok:
                p_append(p[m] + 1)
                pending_append(True)
            else:
                p_append(p[m])
                pending_append(False)
            m += 1
            continue
        if hist is not None:
            hist[p[m]] += 1
        while True:
            if not pending:
                return nodes, ecrit, hist
            if pending[-1]:
                pending[-1] = False
                p[m] = p[m - 1]
                break
            pending_pop()
            p_pop()
            m -= 1


def _walk_counts_task(args: tuple[tuple[int, ...], int, bool, bool]):
    return _walk_counts(*args)


def _collect_roots(depth: int) -> tuple[list[tuple[int, ...]], list[int], list[int]]:
    """Walk to a fixed depth: count the shallow nodes and their critical
    states, and list the prefix-count arrays of the depth-`depth` words
    in walk order."""
    roots: list[tuple[int, ...]] = []
    nodes = [0] * depth
    ecrit = [0] * depth
    p = [0]

    def rec(m: int) -> None:
        if m == depth:
            roots.append(tuple(p))
            return
        nodes[m] += 1
        total = p[m]
        ok = all(p[j] + p[m + 1 - j] > total for j in range(1, (m + 1) // 2 + 1))
        if ok:
            p.append(total + 1)
            rec(m + 1)
            p.pop()
        else:
            ecrit[m] += 1
        p.append(total)
        rec(m + 1)
        p.pop()

    rec(0)
    return roots, nodes, ecrit


@dataclass(frozen=True)
class Census:
    """Per-length counts from one walk to depth n.

    pnw[m] counts the 1-prefix-normal words of length m; ecrit[m] counts
    those whose 1-extension leaves the language. ecrit[n] is only
    meaningful when the census was taken with include_leaf_ecrit.
    """

    n: int
    pnw: tuple[int, ...]
    ecrit: tuple[int, ...]
    by_density: tuple[int, ...] | None = None


def census(
    n: int,
    *,
    include_leaf_ecrit: bool = False,
    with_density: bool = False,
    threads: int | None = None,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    unsafe_large: bool = False,
) -> Census:
    """Count 1-prefix-normal words (and critical words) for every length
    up to n in a single walk, forked across subtrees when threads > 1."""
    _guard_length(n, unsafe_large)
    workers = resolve_threads(threads)
    if workers <= 1 or n <= split_depth + 1:
        nodes, ecrit, hist = _walk_counts((0,), n, include_leaf_ecrit, with_density)
    else:
        roots, nodes_shallow, ecrit_shallow = _collect_roots(split_depth)
        nodes = nodes_shallow + [0] * (n + 1 - split_depth)
        ecrit = ecrit_shallow + [0] * (n + 1 - split_depth)
        hist = [0] * (n + 1) if with_density else None
        tasks = [(root, n, include_leaf_ecrit, with_density) for root in roots]
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub_nodes, sub_ecrit, sub_hist in pool.map(_walk_counts_task, tasks, chunksize=chunk):
                for i in range(split_depth, n + 1):
                    nodes[i] += sub_nodes[i]
                    ecrit[i] += sub_ecrit[i]
                if hist is not None:
                    for i in range(n + 1):
                        hist[i] += sub_hist[i]
    return Census(n, tuple(nodes), tuple(ecrit), tuple(hist) if hist is not None else None)


# ---------------------------------------------------------------------------
# Enumeration and counts
# ---------------------------------------------------------------------------


def enumerate_pn(n: int, x: int = 1, *, unsafe_large: bool = False) -> Iterator[BinaryWord]:
    """Yield every x-prefix-normal word of length n exactly once.

    Depth-first with the x-branch explored first, so the output order is
    descending lexicographic for x = 1 (1111, 1110, ..., 1000, 0000 at
    n = 4) and ascending for x = 0.
    """
    if x not in (0, 1):
        raise ValueError(f"symbol must be 0 or 1, got {x!r}")
    _guard_length(n, unsafe_large)
    p = [0]
    bits: list[int] = []
    gated, free = (1, 0) if x == 1 else (0, 1)

    def rec(m: int) -> Iterator[BinaryWord]:
        if m == n:
            yield BinaryWord.from_bits(bits)
            return
        total = p[m]
        if all(p[j] + p[m + 1 - j] > total for j in range(1, (m + 1) // 2 + 1)):
            bits.append(gated)
            p.append(total + 1)
            yield from rec(m + 1)
            bits.pop()
            p.pop()
        bits.append(free)
        p.append(total)
        yield from rec(m + 1)
        bits.pop()
        p.pop()

    yield from rec(0)


def count_pnw(n: int, *, threads: int | None = None, unsafe_large: bool = False) -> int:
    """pnw(n): the number of 1-prefix-normal words of length n."""
    return census(n, threads=threads, unsafe_large=unsafe_large).pnw[n]


def count_ecrit(n: int, *, threads: int | None = None, unsafe_large: bool = False) -> int:
    """ecrit(n): 1-prefix-normal words of length n that cannot take a 1."""
    return census(n, include_leaf_ecrit=True, threads=threads, unsafe_large=unsafe_large).ecrit[n]


def _count_density_walk(root_prefix: tuple[int, ...], n: int, d: int) -> int:
    """Leaves at depth n with exactly d ones, under a 1-prefix-normal root."""
    p = list(root_prefix)
    m = len(p) - 1
    if p[m] > d or p[m] + (n - m) < d:
        return 0
    count = 0
    pending: list[bool] = []
    while True:
        if m == n:
            if p[m] == d:
                count += 1
        else:
            total = p[m]
            can_one = total < d and all(
                p[j] + p[m + 1 - j] > total for j in range(1, (m + 1) // 2 + 1)
            )
            can_zero = total + (n - m - 1) >= d
            if can_one:
                p.append(total + 1)
                pending.append(can_zero)
                m += 1
                continue
            if can_zero:
                p.append(total)
                pending.append(False)
                m += 1
                continue
        while True:
            if not pending:
                return count
            if pending[-1]:
                pending[-1] = False
                p[m] = p[m - 1]
                break
            pending.pop()
            p.pop()
            m -= 1


def count_pnw_density(n: int, d: int, *, unsafe_large: bool = False) -> int:
    """pnw(n, d): 1-prefix-normal words of length n with exactly d ones."""
    _guard_length(n, unsafe_large)
    if not 0 <= d <= n:
        raise ValueError(f"density {d} out of range 0..{n}")
    return _count_density_walk((0,), n, d)


# ---------------------------------------------------------------------------
# Class statistics (prefix-equivalence classes of sigma^n)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceClass:
    representative: BinaryWord
    size: int
    members: tuple[BinaryWord, ...] | None = None


@dataclass(frozen=True)
class ClassStatistics:
    n: int
    class_count: int
    max_class_size: int
    classes: tuple[EquivalenceClass, ...]


def _pnf1_bits(word_bits: int, n: int) -> int:
    # pnf1 of a packed word, avoiding BinaryWord overhead in 2^n scans.
    # Emits a 1 exactly where the max-ones profile steps up; the scan per
    # length stops at the first window reaching the previous value + 1.
    p = [0] * (n + 1)
    acc = 0
    b = word_bits
    for i in range(1, n + 1):
        acc += b & 1
        b >>= 1
        p[i] = acc
    out = 0
    best = 0
    for k in range(1, n + 1):
        target = best + 1
        for i in range(n - k + 1):
            if p[i + k] - p[i] == target:
                best = target
                out |= 1 << (k - 1)
                break
    return out


def class_statistics(
    n: int, *, include_listing: bool = False, unsafe_large: bool = False
) -> ClassStatistics:
    """Group all 2^n words by their 1-prefix-normal form.

    Classes come out ordered by representative, descending
    lexicographically, matching the walk order of enumerate_pn(n, 1).
    """
    _guard_length(n, unsafe_large, guard=CLASS_SCAN_GUARD)
    if include_listing and n > CLASS_LISTING_GUARD and not unsafe_large:
        raise ScaleError(f"full class listing refused for length {n} > {CLASS_LISTING_GUARD}")
    groups: dict[int, list[int]] = {}
    for word_bits in range(1 << n):
        groups.setdefault(_pnf1_bits(word_bits, n), []).append(word_bits)

    def lex_key(bits: int) -> tuple[int, ...]:
        return tuple((bits >> i) & 1 for i in range(n))

    classes = []
    for key in sorted(groups, key=lex_key, reverse=True):
        members = groups[key]
        listed = None
        if include_listing:
            listed = tuple(BinaryWord(b, n) for b in sorted(members, key=lex_key, reverse=True))
        classes.append(EquivalenceClass(BinaryWord(key, n), len(members), listed))
    return ClassStatistics(
        n=n,
        class_count=len(classes),
        max_class_size=max((c.size for c in classes), default=0),
        classes=tuple(classes),
    )


@dataclass(frozen=True)
class EnumReport:
    """Census record for one length."""

    n: int
    pnw: int
    ecrit: int
    by_density: tuple[int, ...]
    class_count: int | None = None
    max_class_size: int | None = None


def enum_report(
    n: int,
    *,
    with_classes: bool = False,
    threads: int | None = None,
    unsafe_large: bool = False,
) -> EnumReport:
    c = census(
        n,
        include_leaf_ecrit=True,
        with_density=True,
        threads=threads,
        unsafe_large=unsafe_large,
    )
    class_count = max_class_size = None
    if with_classes:
        stats = class_statistics(n, unsafe_large=unsafe_large)
        class_count, max_class_size = stats.class_count, stats.max_class_size
    return EnumReport(n, c.pnw[n], c.ecrit[n], c.by_density, class_count, max_class_size)


# ---------------------------------------------------------------------------
# Generating functions for fixed density
# ---------------------------------------------------------------------------


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _one_minus_xk(k: int) -> tuple[int, ...]:
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    coeffs[k] = -1
    return tuple(coeffs)


def _x_power(k: int) -> tuple[int, ...]:
    return tuple([0] * k + [1])


def _denominator(factors: list[int]) -> tuple[int, ...]:
    den: tuple[int, ...] = (1,)
    for k in factors:
        den = _poly_mul(den, _one_minus_xk(k))
    return den


# Rational forms of the fixed-density counting series, densities 0..6.
_GF_TABLE: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    0: ((1,), _denominator([1])),
    1: (_x_power(1), _denominator([1])),
    2: (_x_power(2), _denominator([1, 1])),
    3: (_x_power(3), _denominator([2, 1, 1])),
    4: (_x_power(4), _denominator([3, 1, 1, 1])),
    5: (_poly_mul(_x_power(5), (1, 1, 1)), _denominator([4, 2, 2, 1, 1])),
    6: (_poly_mul(_x_power(6), (1, 1, 1, 1)), _denominator([5, 3, 2, 1, 1, 1])),
}


@dataclass(frozen=True)
class RationalSeries:
    """A rational generating function and its expansion to some order.

    The denominator has constant term 1, so the coefficients follow the
    linear recurrence den (*) expansion = num, solved in exact integers.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    expansion: tuple[int, ...]

    @classmethod
    def expand(
        cls, numerator: tuple[int, ...], denominator: tuple[int, ...], order: int
    ) -> "RationalSeries":
        if not denominator or denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if denominator[0] != 1:
            raise ValueError("expansion in exact integers needs constant term 1")
        coeffs = []
        for k in range(order + 1):
            value = numerator[k] if k < len(numerator) else 0
            for i in range(1, min(k, len(denominator) - 1) + 1):
                value -= denominator[i] * coeffs[k - i]
            coeffs.append(value)
        return cls(numerator, denominator, tuple(coeffs))


def expand_gf(d: int, order: int) -> tuple[int, ...]:
    """Coefficients 0..order of the density-d counting series.

    Coefficient n is pnw(n, d). Closed forms are only known for d <= 6.
    """
    if not 0 <= d <= GF_MAX_DENSITY:
        raise ValueError(f"no closed generating function for density {d} (supported: 0..{GF_MAX_DENSITY})")
    if not 0 <= order <= GF_ORDER_GUARD:
        raise ScaleError(f"expansion order {order} out of range 0..{GF_ORDER_GUARD}")
    num, den = _GF_TABLE[d]
    return RationalSeries.expand(num, den, order).expansion


def gf_series(d: int, order: int) -> RationalSeries:
    """The full rational-series record behind expand_gf."""
    if not 0 <= d <= GF_MAX_DENSITY:
        raise ValueError(f"no closed generating function for density {d} (supported: 0..{GF_MAX_DENSITY})")
    if not 0 <= order <= GF_ORDER_GUARD:
        raise ScaleError(f"expansion order {order} out of range 0..{GF_ORDER_GUARD}")
    num, den = _GF_TABLE[d]
    return RationalSeries.expand(num, den, order)


# ---------------------------------------------------------------------------
# Extensions of a fixed prefix
# ---------------------------------------------------------------------------


def ext_count(
    w: BinaryWord,
    m: int,
    d: int | None = None,
    *,
    unsafe_large: bool = False,
) -> int:
    """Number of length-m words u such that w u is 1-prefix-normal
    (restricted to total density d when given)."""
    if m < 0:
        raise ValueError("extension length must be non-negative")
    total_len = len(w) + m
    _guard_length(total_len, unsafe_large)
    if not is_prefix_normal(w, 1):
        raise ContractError("ext_count requires a 1-prefix-normal base word")
    prefix = tuple(w.prefix_counts(1))
    if d is None:
        nodes, _, _ = _walk_counts(prefix, total_len, False, False)
        return nodes[total_len]
    if d < 0:
        raise ValueError("density must be non-negative")
    return _count_density_walk(prefix, total_len, d)


def ext_bijection_check(n: int, d: int, *, unsafe_large: bool = False) -> bool:
    """Does ext(10, n+d-3, d) equal pnw(n, d)?

    The underlying bijection pads a 0 before every 1 after the first;
    it needs n + d >= 3 so the extension length is an actual length.
    """
    if not 1 <= d <= n:
        raise ContractError(f"need 1 <= d <= n, got d={d}, n={n}")
    m = n + d - 3
    if m < 0:
        raise ContractError(f"extension length n+d-3 = {m} is negative for n={n}, d={d}")
    _guard_length(m + 2, unsafe_large)
    left = ext_count(BinaryWord.from_bits([1, 0]), m, d, unsafe_large=unsafe_large)
    right = count_pnw_density(n, d, unsafe_large=unsafe_large)
    return left == right


# ---------------------------------------------------------------------------
# Separating suffixes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """A suffix u such that exactly one of v u, w u is 1-prefix-normal;
    witness names the normal side ("v" or "w")."""

    suffix: BinaryWord
    witness: str


def _zeros(n: int) -> BinaryWord:
    return BinaryWord(0, n)


def separating_suffix(v: BinaryWord, w: BinaryWord) -> Separation:
    """Build and verify a suffix separating the extension languages of
    two distinct 1-prefix-normal words that start with 1."""
    if v == w:
        raise ContractError("separating_suffix requires distinct words")
    for name, word in (("v", v), ("w", w)):
        if len(word) == 0 or word.bit(1) != 1:
            raise ContractError(f"{name} must start with 1")
        if not is_prefix_normal(word, 1):
            raise ContractError(f"{name} must be 1-prefix-normal")

    a, b = (v, w) if len(v) <= len(w) else (w, v)
    diff = next((i for i in range(1, len(a) + 1) if a.bit(i) != b.bit(i)), None)
    if diff is not None:
        # First difference inside the shorter word: pad past the longer
        # word, then replay whichever word holds the 1.
        winner = a if a.bit(diff) == 1 else b
        u = _zeros(len(b)) + winner
    elif any(b.bit(i) == 1 for i in range(len(a) + 1, len(b) + 1)):
        # a is a proper prefix and b gains a 1 later: b wins the same way.
        u = _zeros(len(b)) + b
    else:
        # b = a 0^m. Either doubling a already separates, or the least
        # zero-padding k that makes a 0^k a normal does (shifted by one).
        if is_prefix_normal(a + a, 1):
            u = a + a
        else:
            for k in range(1, len(a) + 1):
                if is_prefix_normal(a + _zeros(k) + a, 1):
                    u = _zeros(k - 1) + a
                    break
            else:
                raise PnfkitError(
                    f"no zero padding up to {len(a)} makes {a}0^k{a} normal; "
                    "yet the construction guarantees one exists"
                )

    v_normal = is_prefix_normal(v + u, 1)
    w_normal = is_prefix_normal(w + u, 1)
    if v_normal == w_normal:
        raise PnfkitError(
            f"constructed suffix {u} fails to separate {v} and {w} "
            f"(v side {v_normal}, w side {w_normal}); the construction should make exactly one side normal"
        )
    return Separation(u, "v" if v_normal else "w")


# ---------------------------------------------------------------------------
# Bounds and ratio series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    n: int
    pnw: int
    upper_bound: float
    upper_holds: bool
    lower_bound: float
    lower_holds: bool


def bound_check(
    max_n: int, *, threads: int | None = None, unsafe_large: bool = False
) -> list[BoundRow]:
    """Compare pnw(n), 1 <= n <= max_n, against the asymptotic bounds
    2^(n - lg n + 1) (above) and 2^(n - 4 sqrt(n lg n)) (below).

    Both bounds are "for n sufficiently large"; rows record where each
    holds, nothing more. The upper comparison is exact integer
    arithmetic (pnw(n) * n <= 2^(n+1)); the float columns are for
    reporting.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    counts = census(max_n, threads=threads, unsafe_large=unsafe_large).pnw
    rows = []
    for n in range(1, max_n + 1):
        pnw_n = counts[n]
        upper = 2.0 ** (n - math.log2(n) + 1)
        lower = 2.0 ** (n - 4 * math.sqrt(n * math.log2(n)))
        rows.append(
            BoundRow(
                n=n,
                pnw=pnw_n,
                upper_bound=upper,
                upper_holds=pnw_n * n <= 2 ** (n + 1),
                lower_bound=lower,
                lower_holds=pnw_n >= lower,
            )
        )
    return rows


def upper_bound_threshold(rows: list[BoundRow]) -> int | None:
    """Least n0 such that the upper bound holds from n0 through the end
    of the computed range (None when it fails at the last row)."""
    threshold = None
    for row in rows:
        if row.upper_holds:
            if threshold is None:
                threshold = row.n
        else:
            threshold = None
    return threshold


@dataclass(frozen=True)
class RatioRow:
    n: int
    growth_ratio: float
    ecrit_ratio: float
    ecrit_ratio_scaled: float


def ratio_series(
    max_n: int, *, threads: int | None = None, unsafe_large: bool = False
) -> list[RatioRow]:
    """Plot-data rows: pnw(n)/pnw(n-1), ecrit(n)/pnw(n) and the latter
    rescaled by n/ln n (NaN at n = 1 where ln n vanishes)."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    c = census(max_n, include_leaf_ecrit=True, threads=threads, unsafe_large=unsafe_large)
    rows = []
    for n in range(1, max_n + 1):
        ecrit_ratio = c.ecrit[n] / c.pnw[n]
        scaled = ecrit_ratio * n / math.log(n) if n > 1 else math.nan
        rows.append(RatioRow(n, c.pnw[n] / c.pnw[n - 1], ecrit_ratio, scaled))
    return rows
