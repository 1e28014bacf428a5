"""Greedy and optimal change-making, and the hard-to-change input stream.

``ggg_stream`` emits, for n = 1, 2, ..., the smallest amount that forces
the greedy change-maker over coin set A to use at least n coins.  It is
computed by the gap recurrence (new term = previous term + the smallest
coin whose gap to the next coin exceeds the previous term);
``ggg_scan_oracle`` recomputes the same values straight from the
definition by scanning amounts, and exists purely as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .backend import min_coins_table
from .errors import ResourceLimitError
from .sentinel import UNBOUNDED
from .sequences import MemberIndex, TileValueSequence

DEFAULT_SCAN_CAP = 10**7
DEFAULT_DP_CAP = 10**6

SequenceLike = Union[TileValueSequence, MemberIndex]


def _index(A: SequenceLike) -> MemberIndex:
    return A if isinstance(A, MemberIndex) else A.members()


@dataclass(frozen=True)
class Representation:
    """Multiset of coins summing to `target` (stored largest first)."""

    coins: tuple[int, ...]
    target: int

    @property
    def count(self) -> int:
        return len(self.coins)

    def __post_init__(self):
        assert sum(self.coins) == self.target


def _greedy_count_sorted(amount: int, coins_ascending: list[int]) -> int:
    # largest coin <= remainder, repeatedly; taking all copies at once is
    # the same because the coin stays the largest eligible one
    count = 0
    rem = amount
    for c in reversed(coins_ascending):
        if c <= rem:
            k, rem = divmod(rem, c)
            count += k
            if rem == 0:
                break
    assert rem == 0, "coin 1 guarantees exact change"
    return count


def greedy_representation(x: int, A: SequenceLike) -> Representation:
    """The unique representation the greedy change-maker produces for x."""
    if x < 0:
        raise ValueError(f"amount must be nonnegative, got {x}")
    idx = _index(A)
    coins = []
    rem = x
    while rem:
        c = idx.largest_leq(rem)
        k, rem = divmod(rem, c)
        coins.extend([c] * k)
    return Representation(tuple(coins), x)


def greedy_count(x: int, A: SequenceLike) -> int:
    return greedy_representation(x, A).count


def min_coins(x: int, coins, cap: int = DEFAULT_DP_CAP) -> int:
    """Minimum number of coins (with repetition) from `coins` summing to x.

    Pseudopolynomial DP over amounts 0..x; refuses x above `cap` rather
    than silently allocating a huge table.
    """
    if x < 0:
        raise ValueError(f"amount must be nonnegative, got {x}")
    if x > cap:
        raise ResourceLimitError(
            f"DP amount {x} exceeds cap {cap}; raise the cap explicitly")
    coins = list(coins)
    dp = min_coins_table(coins, x)
    best = int(dp[x])
    if best > x:
        raise ValueError(f"{x} has no representation over coins {coins}")
    return best


@dataclass(frozen=True)
class OneShotReport:
    """One prefix of the one-shot totally-greedy test.

    x and y are the two largest coins of the prefix, k = ceil(x / y);
    the prefix passes when greedy change for k*y uses at most k coins.
    """

    prefix_length: int
    x: int
    y: int
    k: int
    greedy_coins: int

    @property
    def passed(self) -> bool:
        return self.greedy_coins <= self.k


@dataclass(frozen=True)
class OneShotResult:
    reports: tuple[OneShotReport, ...]
    exhausted: bool  # sequence ran out before the requested prefix count

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.reports)


def one_shot_test(A: TileValueSequence, prefixes: int) -> OneShotResult:
    """Run the one-shot test on prefix lengths 2 .. prefixes+1.

    A sequence is totally greedy through those prefixes iff every report
    passes.  If A has fewer values than needed, the result is partial
    and flagged `exhausted`.
    """
    if prefixes < 1:
        raise ValueError("need at least one prefix")
    vals = A.prefix(prefixes + 1)
    reports = []
    for length in range(2, len(vals) + 1):
        prefix = vals[:length]
        x, y = prefix[-1], prefix[-2]
        k = -(-x // y)  # ceiling; when y | x the test value is x itself
        cnt = _greedy_count_sorted(k * y, prefix)
        reports.append(OneShotReport(length, x, y, k, cnt))
    return OneShotResult(tuple(reports), exhausted=len(vals) < prefixes + 1)


def ggg_stream(A: TileValueSequence, scan_cap: int = DEFAULT_SCAN_CAP,
               threshold: int | None = None) -> Iterator:
    """Emit ggg(1,A), ggg(2,A), ... by the gap recurrence.

    Each new term adds the smallest coin whose gap to the next coin
    exceeds the previous term.  When A runs out, or `scan_cap` elements
    go by without a sufficient gap, the UNBOUNDED sentinel is emitted
    and the stream halts.  With `threshold` set, scanning stops (without
    a sentinel) once no further term <= threshold can exist.
    """
    it = iter(A)
    prev = next(it, None)
    if prev is None:
        yield UNBOUNDED
        return
    g = 0
    scanned = 0
    for cur in it:
        while cur - prev > g:
            nxt = g + prev
            if threshold is not None and nxt > threshold:
                return
            g = nxt
            yield g
            scanned = 0
        if threshold is not None and cur > threshold:
            return
        prev = cur
        scanned += 1
        if scanned >= scan_cap:
            yield UNBOUNDED
            return
    yield UNBOUNDED  # finite sequence exhausted without a further gap


def ggg_scan_oracle(n: int, A: SequenceLike, cap: int):
    """Smallest x <= cap with greedy_count(x, A) >= n, or None.

    Definitional semantics, independent of the gap recurrence; the
    greedy counts are built by the memoized greedy recursion
    count(x) = 1 + count(x - largest coin <= x).
    """
    if n < 1:
        raise ValueError("n must be positive")
    table = _greedy_count_table(A, cap)
    for x in range(1, cap + 1):
        if table[x] >= n:
            return x
    return None


def _greedy_count_table(A: SequenceLike, cap: int) -> list[int]:
    members = _index(A).values_up_to(cap)
    counts = [0] * (cap + 1)
    mi = 0
    for x in range(1, cap + 1):
        while mi + 1 < len(members) and members[mi + 1] <= x:
            mi += 1
        c = members[mi]
        counts[x] = counts[x - c] + 1
    return counts


def ggg_scan_table(A: SequenceLike, cap: int) -> list[int]:
    """ggg values <= cap, by definitional scan: the k-th entry is the
    smallest x with greedy count >= k+1."""
    table = _greedy_count_table(A, cap)
    firsts = []
    for x in range(1, cap + 1):
        while table[x] > len(firsts):
            firsts.append(x)
    return firsts
